use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ccc_ffi::*;

fn v(word: u32, cycle: u32) -> CccVertex {
    CccVertex { word, cycle }
}

fn last_error() -> String {
    let p = ccc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn counts() {
    let mut c = 0u64;
    unsafe {
        assert_eq!(ccc_vertex_count(3, &mut c), CccStatus::Ok);
        assert_eq!(c, 24);
        assert_eq!(ccc_vertex_count(30, &mut c), CccStatus::Ok);
        assert_eq!(c, 32_212_254_720);
        assert_eq!(ccc_vertex_count(31, &mut c), CccStatus::DimensionOutOfRange);
        assert!(last_error().contains("3..=30"));
        assert_eq!(ccc_automorphism_group_size(5, &mut c), CccStatus::Ok);
        assert_eq!(c, 320);
    }
}

#[test]
fn parse_and_distance() {
    let mut x = CccVertex::default();
    let mut d = 0u32;
    unsafe {
        let s = CString::new("0101100:6").unwrap();
        assert_eq!(ccc_parse_vertex(7, s.as_ptr(), &mut x), CccStatus::Ok);
        assert_eq!(x, v(0b0011010, 6));
        assert_eq!(ccc_distance(7, v(0, 1), x, &mut d), CccStatus::Ok);
        assert_eq!(d, 8);
        let bad = CString::new("01:1").unwrap();
        assert_eq!(ccc_parse_vertex(7, bad.as_ptr(), &mut x), CccStatus::Parse);
        assert_eq!(
            ccc_parse_vertex(7, ptr::null(), &mut x),
            CccStatus::NullPointer
        );
    }
}

#[test]
fn route_handle() {
    let mut path = ptr::null_mut();
    let mut x = CccVertex::default();
    unsafe {
        assert_eq!(ccc_route(3, v(0, 1), v(0b010, 2), &mut path), CccStatus::Ok);
        assert_eq!(ccc_path_vertex_count(path), 3);
        let expect = [v(0, 1), v(0, 2), v(0b010, 2)];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(ccc_path_get(path, i, &mut x), CccStatus::Ok);
            assert_eq!(x, *want);
        }
        assert_eq!(ccc_path_get(path, 3, &mut x), CccStatus::InvalidVertex);
        ccc_path_free(path);
        ccc_path_free(ptr::null_mut());
        assert_eq!(ccc_path_vertex_count(ptr::null()), 0);
        assert_eq!(ccc_path_get(ptr::null(), 0, &mut x), CccStatus::NullPointer);
    }
}

#[test]
fn partitions_and_verdicts() {
    let mut p = std::mem::MaybeUninit::<CccPartition>::uninit();
    unsafe {
        assert_eq!(
            ccc_w_partition(4, v(0, 1), v(0, 2), p.as_mut_ptr()),
            CccStatus::Ok
        );
        let p = p.assume_init();
        assert_eq!((p.wuv, p.wvu, p.equal), (32, 32, 0));
        assert_eq!(p.kind, CccEdgeKind::Cycle);

        let mut q = p;
        assert_eq!(
            ccc_w_partition(3, v(0, 1), v(0b010, 1), &mut q),
            CccStatus::NotAdjacent
        );
        assert_eq!(
            ccc_w_partition(3, v(0, 1), v(0, 1), &mut q),
            CccStatus::SameVertex
        );

        let mut verdict = std::mem::MaybeUninit::<CccVerdict>::uninit();
        assert_eq!(ccc_analyze(6, true, verdict.as_mut_ptr()), CccStatus::Ok);
        let verdict = verdict.assume_init();
        assert!(verdict.distance_balanced && verdict.nicely_distance_balanced);
        assert_eq!(verdict.ndb_constant, 192);
        assert_eq!(verdict.edges_checked, 6 * 64 * 3 / 2);
        assert_eq!(verdict.cube_edge.kind, CccEdgeKind::Cube);

        let mut again = verdict;
        assert_eq!(ccc_analyze(10, true, &mut again), CccStatus::Gate);
        assert_eq!(
            ccc_analyze(7, false, ptr::null_mut()),
            CccStatus::NullPointer
        );
    }
}

#[test]
fn automorphism_handles() {
    let mut a = ptr::null_mut();
    let mut img = CccVertex::default();
    unsafe {
        assert_eq!(
            ccc_labeling_from(4, v(0b0110, 3), false, &mut a),
            CccStatus::Ok
        );
        assert_eq!(ccc_automorphism_apply(a, v(0, 1), &mut img), CccStatus::Ok);
        assert_eq!(img, v(0b0110, 3));
        assert_eq!(
            ccc_automorphism_apply(a, v(0, 5), &mut img),
            CccStatus::InvalidVertex
        );
        ccc_automorphism_free(a);

        // every edge of CCC_4 is swapped by some automorphism
        let n = ccc_core::Dimension::new(4).unwrap();
        for e in ccc_core::graph::edges(n) {
            let (u, w) = (CccVertex::from(e.u), CccVertex::from(e.v));
            assert_eq!(ccc_swap_automorphism(4, u, w, &mut a), CccStatus::Ok);
            assert_eq!(ccc_automorphism_apply(a, u, &mut img), CccStatus::Ok);
            assert_eq!(img, w);
            assert_eq!(ccc_automorphism_apply(a, w, &mut img), CccStatus::Ok);
            assert_eq!(img, u);
            ccc_automorphism_free(a);
        }
        assert_eq!(
            ccc_automorphism_apply(ptr::null(), v(0, 1), &mut img),
            CccStatus::NullPointer
        );
    }
}

#[test]
fn verify_json_round_trip() {
    let mut s = ptr::null_mut();
    let mut ok = false;
    unsafe {
        assert_eq!(ccc_verify_json(5, &mut s, &mut ok), CccStatus::Ok);
        assert!(ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        ccc_string_free(s);
        assert!(text.contains("\"all_passed\": true"));
        assert_eq!(ccc_verify_json(10, &mut s, &mut ok), CccStatus::Gate);
        // all_passed is optional
        assert_eq!(ccc_verify_json(3, &mut s, ptr::null_mut()), CccStatus::Ok);
        ccc_string_free(s);
    }
}

/// Compiles tests/c/smoke.c against the generated header and static library.
#[test]
fn c_smoke_program() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/api-<hash> -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libccc_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ccc_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let status = match status {
        Ok(s) => s,
        Err(e) => panic!("could not run C compiler {cc:?}: {e}"),
    };
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
