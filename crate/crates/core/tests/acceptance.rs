//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line; the
//! test fails if any criterion fails. Lines go straight to stdout so they
//! show up without `--nocapture`.

use std::collections::{HashMap, HashSet};
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};

use rand::{rngs::StdRng, Rng, SeedableRng};

use ccc_core::balance::{self, BalanceAnalyzer, Mode};
use ccc_core::graph::{classify_edge, edges};
use ccc_core::iwe::{self, diagram_length, BaseDistances, Direction, IweDiagram, LoopArc};
use ccc_core::labeling::{self, Orientation};
use ccc_core::oracle::{self, DistanceField};
use ccc_core::{Dimension, EdgeKind, Vertex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SAMPLES: usize = 10_000;

fn dim(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

fn vx(s: &str) -> Vertex {
    s.parse::<ccc_core::graph::DimensionedVertex>().unwrap().0
}

fn random_vertex(rng: &mut StdRng, n: Dimension) -> Vertex {
    n.vertex_at(rng.gen_range(0..n.vertex_count()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn half(n: u32) -> u64 {
    n as u64 * (1u64 << (n - 1))
}

/// IWE distances agree with BFS from the base and on random pairs.
fn ac01_iwe_matches_bfs() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1);
    let mut pairs = 0u64;
    for nn in 3..=9 {
        let n = dim(nn);
        let base = oracle::bfs_distances(n.base(), n).map_err(|e| e.to_string())?;
        for x in n.vertices() {
            let d = iwe::distance_from_base(x, n).unwrap();
            ensure(d == base.get(x) as u32, || {
                format!("n={nn} x={}: iwe {d}, bfs {}", x.display(n), base.get(x))
            })?;
            pairs += 1;
        }
        let table = BaseDistances::new(n).unwrap();
        let mut fields: HashMap<Vertex, DistanceField> = HashMap::new();
        for _ in 0..SAMPLES {
            let (a, b) = (random_vertex(&mut rng, n), random_vertex(&mut rng, n));
            let field = fields
                .entry(a)
                .or_insert_with(|| oracle::bfs_distances(a, n).unwrap());
            let want = field.get(b) as u32;
            ensure(
                iwe::distance(a, b, n).unwrap() == want && table.distance(a, b) == want,
                || format!("n={nn} {} -> {}: bfs {want}", a.display(n), b.display(n)),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, n=3..9"))
}

/// Every edge balanced for n 3..8; both representatives for n 9..14.
fn ac02_distance_balanced() -> Outcome {
    let mut checked = 0u64;
    for nn in 3..=8 {
        let n = dim(nn);
        let parts = BalanceAnalyzer::new(n).unwrap().all_edges().unwrap();
        ensure(parts.len() == n.edge_count(), || {
            format!("n={nn}: edge count")
        })?;
        for p in &parts {
            ensure(
                p.is_balanced() && p.total() == n.vertex_count() as u64,
                || {
                    format!(
                        "n={nn} edge {}-{} unbalanced: {:?}",
                        p.edge.u.display(n),
                        p.edge.v.display(n),
                        p.sizes()
                    )
                },
            )?;
        }
        checked += parts.len() as u64;
    }
    for nn in 9..=14 {
        let n = dim(nn);
        let (cube, cycle) = BalanceAnalyzer::new(n)
            .unwrap()
            .representative(false)
            .unwrap();
        ensure(cube.is_balanced() && cycle.is_balanced(), || {
            format!("n={nn} representative unbalanced")
        })?;
        checked += 2;
    }
    Ok(format!("{checked} edges"))
}

/// Cube edge partition is (n 2^(n-1), n 2^(n-1), 0).
fn ac03_cube_edge_sizes() -> Outcome {
    for nn in 3..=14 {
        let n = dim(nn);
        let (cube, _) = BalanceAnalyzer::new(n)
            .unwrap()
            .representative(false)
            .unwrap();
        ensure(cube.sizes() == (half(nn), half(nn), 0), || {
            format!("n={nn}: {:?}", cube.sizes())
        })?;
    }
    Ok("n=3..14".into())
}

/// Even n: nicely distance-balanced with constant n 2^(n-1). Odd n: not,
/// witnessed by an equidistant vertex at distance (n-1)/2.
fn ac04_ndb_dichotomy() -> Outcome {
    for nn in [4, 6, 8, 10] {
        let n = dim(nn);
        let c = balance::ndb_constant(n, Mode::Representative).unwrap();
        ensure(c == Some(half(nn)), || format!("n={nn}: constant {c:?}"))?;
        ensure(balance::equal_set_empty_for_cycle_edge(n).unwrap(), || {
            format!("n={nn}: W^v_u non-empty")
        })?;
    }
    for nn in [3, 5, 7, 9] {
        let n = dim(nn);
        let c = balance::ndb_constant(n, Mode::Representative).unwrap();
        ensure(c.is_none(), || format!("n={nn}: unexpected constant {c:?}"))?;
        let (_, cycle) = balance::representative_edges(n);
        let p = balance::w_partition(cycle.u, cycle.v, n, true).unwrap();
        let w = balance::odd_cycle_witness(n).ok_or(format!("n={nn}: no witness"))?;
        ensure(p.members.as_ref().unwrap().equidistant.contains(&w), || {
            format!("n={nn}: witness not in W^v_u")
        })?;
        let field_u = oracle::bfs_distances(cycle.u, n).unwrap();
        let field_v = oracle::bfs_distances(cycle.v, n).unwrap();
        let want = (nn - 1) / 2;
        for (d_iwe, d_bfs) in [
            (iwe::distance(cycle.u, w, n).unwrap(), field_u.get(w) as u32),
            (iwe::distance(cycle.v, w, n).unwrap(), field_v.get(w) as u32),
        ] {
            ensure(d_iwe == want && d_bfs == want, || {
                format!(
                    "n={nn} witness {}: iwe {d_iwe}, bfs {d_bfs}, want {want}",
                    w.display(n)
                )
            })?;
        }
    }
    Ok("even {4,6,8,10}, odd {3,5,7,9}".into())
}

/// Odd n cycle edge: equal halves strictly below n 2^(n-1), matching the golden values.
fn ac05_odd_cycle_sizes() -> Outcome {
    let golden: serde_json::Value =
        serde_json::from_str(include_str!("golden/cycle_edge_partitions.json")).unwrap();
    let rows = golden["partitions"].as_array().unwrap();
    for nn in [3u32, 5, 7] {
        let n = dim(nn);
        let (_, cycle) = balance::representative_edges(n);
        let p = balance::w_partition(cycle.u, cycle.v, n, false).unwrap();
        let q = oracle::bfs_w_partition(cycle.u, cycle.v, n, false).unwrap();
        ensure(
            p.size_wuv == p.size_wvu && p.size_wuv < half(nn) && p.size_equal > 0,
            || format!("n={nn}: {:?}", p.sizes()),
        )?;
        let row = rows
            .iter()
            .find(|r| r["n"] == nn)
            .ok_or(format!("n={nn}: missing golden row"))?;
        let want = (
            row["wuv"].as_u64().unwrap(),
            row["wvu"].as_u64().unwrap(),
            row["equal"].as_u64().unwrap(),
        );
        ensure(p.sizes() == want && q.sizes() == want, || {
            format!(
                "n={nn}: iwe {:?}, bfs {:?}, golden {want:?}",
                p.sizes(),
                q.sizes()
            )
        })?;
    }
    Ok("n=3,5,7 match golden".into())
}

/// Brute-force automorphism counts.
fn ac06_automorphism_counts() -> Outcome {
    let c3 = oracle::count_automorphisms_bruteforce(dim(3)).unwrap();
    let c4 = oracle::count_automorphisms_bruteforce(dim(4)).unwrap();
    ensure(c3 == 48 && c4 == 128, || format!("counts {c3}, {c4}"))?;
    ensure(
        labeling::automorphism_group_size(dim(3)) == 48
            && labeling::automorphism_group_size(dim(4)) == 128,
        || "formula disagrees".into(),
    )?;
    Ok(format!("n=3: {c3}, n=4: {c4}"))
}

/// Labelings are distinct structure-preserving maps; swaps exist on every edge.
fn ac07_labelings() -> Outcome {
    let mut maps = 0usize;
    let mut swaps = 0usize;
    for nn in 3..=5 {
        let n = dim(nn);
        let mut seen = HashSet::new();
        for x in n.vertices() {
            for o in Orientation::BOTH {
                let phi = labeling::labeling_from(x, o, n).unwrap();
                ensure(phi.preserves_structure(), || {
                    format!("n={nn} labeling from {} {o:?}", x.display(n))
                })?;
                ensure(phi.apply(n.base()).unwrap() == x, || {
                    format!("n={nn}: anchor image")
                })?;
                ensure(seen.insert(phi.images()), || {
                    format!("n={nn}: duplicate labeling")
                })?;
            }
        }
        ensure(seen.len() == 2 * n.vertex_count(), || {
            format!("n={nn}: {} labelings", seen.len())
        })?;
        maps += seen.len();
        for e in edges(n) {
            let s = labeling::swap_automorphism(e.u, e.v, n).unwrap();
            let ok = s.preserves_structure()
                && s.apply(e.u).unwrap() == e.v
                && s.apply(e.v).unwrap() == e.u;
            ensure(ok, || {
                format!("n={nn}: swap on {}-{}", e.u.display(n), e.v.display(n))
            })?;
            swaps += 1;
        }
    }
    Ok(format!("{maps} labelings, {swaps} swaps"))
}

/// Every translation-then-permutation map of Q_3 is a distinct automorphism.
fn ac08_hypercube() -> Outcome {
    let n = dim(3);
    let all = labeling::all_hypercube_automorphisms(n).unwrap();
    let mut tables = HashSet::new();
    for h in &all {
        ensure(h.is_bijective() && h.preserves_adjacency(), || {
            format!(
                "translation {:03b} perm {:?}",
                h.translation(),
                h.digit_permutation()
            )
        })?;
        tables.insert((0..8).map(|w| h.apply(w)).collect::<Vec<_>>());
    }
    ensure(all.len() == 48 && tables.len() == 48, || {
        format!("{} maps, {} distinct", all.len(), tables.len())
    })?;
    Ok("48 distinct automorphisms of Q_3".into())
}

/// The four diagrams for 0101100:6 in CCC_7 and its distance.
fn ac09_worked_example() -> Outcome {
    let n = dim(7);
    let x = vx("0101100:6");
    let inc = Direction::Increasing;
    let dec = Direction::Decreasing;
    let cases = [
        (LoopArc::new(2, 5, inc), 2, inc, inc, 8),
        (LoopArc::new(2, 5, inc), 5, dec, inc, 13),
        (LoopArc::new(4, 2, inc), 2, inc, inc, 11),
        (LoopArc::new(4, 2, inc), 4, dec, inc, 16),
    ];
    let mut lengths = Vec::new();
    for (interval, entry, init, term, want) in cases {
        let d = IweDiagram::with_interval(x, n, interval, entry, init, term)
            .map_err(|e| e.to_string())?;
        let len = diagram_length(&d);
        ensure(len == want, || {
            format!("diagram {d}: length {len}, want {want}")
        })?;
        ensure(iwe::trace_diagram(&d).len() as u32 == len, || {
            format!("diagram {d}: trace length")
        })?;
        lengths.push(len);
    }
    let d = iwe::distance(n.base(), x, n).unwrap();
    let bfs = oracle::bfs_distances(n.base(), n).unwrap().get(x);
    ensure(d == 8 && bfs == 8, || format!("distance {d}, bfs {bfs}"))?;
    Ok(format!("lengths {lengths:?}, distance {d}"))
}

/// Routes are walks of exactly distance(a, b) edges between the endpoints.
fn ac10_routing() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    let mut routed = 0u64;
    for nn in 3..=9 {
        let n = dim(nn);
        for _ in 0..SAMPLES {
            let (a, b) = (random_vertex(&mut rng, n), random_vertex(&mut rng, n));
            let p = iwe::shortest_path(a, b, n).unwrap();
            let want = iwe::distance(a, b, n).unwrap() as usize;
            let adjacent = p.vertices.windows(2).all(|w| {
                matches!(
                    classify_edge(w[0], w[1], n),
                    Ok(EdgeKind::CubeEdge | EdgeKind::CycleEdge)
                )
            });
            ensure(
                adjacent
                    && p.vertices.first() == Some(&a)
                    && p.vertices.last() == Some(&b)
                    && p.len() == want,
                || {
                    format!(
                        "n={nn} {} -> {}: {} steps, want {want}",
                        a.display(n),
                        b.display(n),
                        p.len()
                    )
                },
            )?;
            routed += 1;
        }
    }
    Ok(format!("{routed} routes"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("AC1 iwe distance equals bfs", ac01_iwe_matches_bfs),
        ("AC2 distance-balanced", ac02_distance_balanced),
        ("AC3 cube edge partition sizes", ac03_cube_edge_sizes),
        (
            "AC4 nicely distance-balanced iff n even",
            ac04_ndb_dichotomy,
        ),
        ("AC5 odd n cycle edge sizes", ac05_odd_cycle_sizes),
        ("AC6 automorphism counts", ac06_automorphism_counts),
        ("AC7 labelings and swaps", ac07_labelings),
        ("AC8 hypercube automorphisms", ac08_hypercube),
        ("AC9 worked example diagrams", ac09_worked_example),
        ("AC10 routing", ac10_routing),
    ];
    let mut failures = Vec::new();
    // bypasses libtest's output capture
    let mut stdout = std::io::stdout().lock();
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => writeln!(stdout, "PASS {name}: {detail}").unwrap(),
            Err(why) => {
                writeln!(stdout, "FAIL {name}: {why}").unwrap();
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
