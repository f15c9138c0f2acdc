//! Brute-force ground truth: breadth-first distances, BFS-based W-partitions
//! and a backtracking automorphism counter.
//!
//! Nothing here calls into `iwe` or `balance`; the only shared code is the
//! adjacency of [`crate::graph`]. [`verify`] then runs both sides and reports
//! agreement.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::{self, BalanceAnalyzer, Mode, WMembers, WPartition};
use crate::error::{CccError, Result};
use crate::graph::{edges, neighbors_unchecked, Dimension, Edge, EdgeKind, Vertex};
use crate::labeling::{self, Orientation};

pub const MAX_BFS_DIMENSION: u32 = 22;
pub const MAX_BFS_PARTITION_DIMENSION: u32 = 16;
pub const MAX_BRUTEFORCE_AUT_DIMENSION: u32 = 4;
pub const MAX_VERIFY_DIMENSION: u32 = 9;

fn gate(operation: &'static str, n: Dimension, max: u32) -> Result<()> {
    if n.get() > max {
        Err(CccError::Gate {
            operation,
            n: n.get(),
            max,
        })
    } else {
        Ok(())
    }
}

/// Single-source distances, indexed like [`Dimension::index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    pub source: Vertex,
    n: Dimension,
    pub dist: Vec<u16>,
}

impl DistanceField {
    #[inline]
    pub fn get(&self, x: Vertex) -> u16 {
        self.dist[self.n.index(x)]
    }

    /// `|d(x) - d(y)| <= 1` across every edge.
    pub fn is_lipschitz(&self) -> bool {
        edges(self.n).all(|e| self.get(e.u).abs_diff(self.get(e.v)) <= 1)
    }

    pub fn eccentricity(&self) -> u16 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

pub fn bfs_distances(source: Vertex, n: Dimension) -> Result<DistanceField> {
    gate("BFS distance field", n, MAX_BFS_DIMENSION)?;
    n.check(source)?;
    Ok(bfs_unchecked(source, n))
}

fn bfs_unchecked(source: Vertex, n: Dimension) -> DistanceField {
    let mut dist = vec![u16::MAX; n.vertex_count()];
    let mut queue = VecDeque::with_capacity(n.vertex_count());
    dist[n.index(source)] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let d = dist[n.index(x)] + 1;
        for y in neighbors_unchecked(x, n) {
            let slot = &mut dist[n.index(y)];
            if *slot == u16::MAX {
                *slot = d;
                queue.push_back(y);
            }
        }
    }
    DistanceField { source, n, dist }
}

/// W-partition of edge `uv` from two BFS fields.
pub fn bfs_w_partition(
    u: Vertex,
    v: Vertex,
    n: Dimension,
    with_members: bool,
) -> Result<WPartition> {
    gate("BFS W-partition", n, MAX_BFS_PARTITION_DIMENSION)?;
    let edge = Edge::new(u, v, n)?;
    let (du, dv) = (bfs_unchecked(u, n), bfs_unchecked(v, n));
    let mut sizes = [0u64; 3];
    let mut members = with_members.then(WMembers::default);
    for (i, (a, b)) in du.dist.iter().zip(&dv.dist).enumerate() {
        let slot = match a.cmp(b) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Equal => 2,
        };
        sizes[slot] += 1;
        if let Some(m) = members.as_mut() {
            let x = n.vertex_at(i);
            [&mut m.closer_to_u, &mut m.closer_to_v, &mut m.equidistant][slot].push(x);
        }
    }
    Ok(WPartition {
        edge,
        size_wuv: sizes[0],
        size_wvu: sizes[1],
        size_equal: sizes[2],
        members,
    })
}

/// Counts adjacency-preserving bijections of `CCC_n` by backtracking.
///
/// Vertices are assigned in BFS order from vertex 0, so each vertex after the
/// first has an already-assigned parent and its image must be a neighbour of
/// the parent's image; every assigned neighbour must also map to a neighbour.
pub fn count_automorphisms_bruteforce(n: Dimension) -> Result<u64> {
    gate(
        "brute-force automorphism count",
        n,
        MAX_BRUTEFORCE_AUT_DIMENSION,
    )?;
    let count = n.vertex_count();
    let adj: Vec<[usize; 3]> = n
        .vertices()
        .map(|v| neighbors_unchecked(v, n).map(|w| n.index(w)))
        .collect();

    let mut order = Vec::with_capacity(count);
    let mut parent = vec![usize::MAX; count];
    let mut seen = vec![false; count];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
    }

    struct Search<'a> {
        adj: &'a [[usize; 3]],
        order: &'a [usize],
        parent: &'a [usize],
        image: Vec<usize>,
        used: Vec<bool>,
        found: u64,
    }

    impl Search<'_> {
        fn consistent(&self, x: usize, c: usize) -> bool {
            self.adj[x].iter().all(|&y| {
                let iy = self.image[y];
                iy == usize::MAX || self.adj[c].contains(&iy)
            })
        }

        fn assign(&mut self, depth: usize, x: usize, c: usize) {
            if self.used[c] || !self.consistent(x, c) {
                return;
            }
            self.image[x] = c;
            self.used[c] = true;
            self.descend(depth + 1);
            self.used[c] = false;
            self.image[x] = usize::MAX;
        }

        fn descend(&mut self, depth: usize) {
            if depth == self.order.len() {
                self.found += 1;
                return;
            }
            let x = self.order[depth];
            if depth == 0 {
                for c in 0..self.adj.len() {
                    self.assign(depth, x, c);
                }
            } else {
                let candidates = self.adj[self.image[self.parent[x]]];
                for c in candidates {
                    self.assign(depth, x, c);
                }
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        order: &order,
        parent: &parent,
        image: vec![usize::MAX; count],
        used: vec![false; count],
        found: 0,
    };
    search.descend(0);
    Ok(search.found)
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub n: u32,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub counterexample: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_max: u32,
    pub all_passed: bool,
    pub vertices: u64,
    pub edges: u64,
    pub checks_run: u64,
    pub checks: Vec<CheckResult>,
}

struct Checks {
    n: Dimension,
    out: Vec<CheckResult>,
}

impl Checks {
    fn push(&mut self, name: &str, checked: u64, counterexample: Option<String>, detail: String) {
        self.out.push(CheckResult {
            name: name.to_string(),
            n: self.n.get(),
            passed: counterexample.is_none(),
            checked,
            counterexample,
            detail,
        });
    }
}

fn fmt_sizes(p: &WPartition) -> String {
    format!("({},{},{})", p.size_wuv, p.size_wvu, p.size_equal)
}

fn fmt_edge(e: &Edge, n: Dimension) -> String {
    format!("{}-{}", e.u.display(n), e.v.display(n))
}

fn verify_dimension(n: Dimension) -> Result<Vec<CheckResult>> {
    let nn = n.get();
    let half = nn as u64 * (1u64 << (nn - 1));
    let mut c = Checks { n, out: Vec::new() };
    let an = BalanceAnalyzer::new(n)?;
    let table = an.distances();

    // IWE distances against BFS, every source and target.
    let sources: Vec<Vertex> = n.vertices().collect();
    let mismatch = sources.par_iter().find_map_first(|&a| {
        let field = bfs_unchecked(a, n);
        n.vertices().find_map(|b| {
            let (iwe, bfs) = (table.distance(a, b), field.get(b) as u32);
            (iwe != bfs).then(|| {
                format!(
                    "d({}, {}): iwe {iwe}, bfs {bfs}",
                    a.display(n),
                    b.display(n)
                )
            })
        })
    });
    let pairs = (n.vertex_count() as u64).pow(2);
    c.push(
        "iwe_equals_bfs",
        pairs,
        mismatch,
        format!("{pairs} ordered pairs"),
    );

    let base_field = bfs_unchecked(n.base(), n);
    c.push(
        "bfs_lipschitz",
        n.edge_count() as u64,
        (!base_field.is_lipschitz())
            .then(|| "BFS field from base violates |d(x)-d(y)| <= 1".into()),
        format!("eccentricity of base {}", base_field.eccentricity()),
    );

    // Balance partitions against the BFS oracle on the representative edges.
    let (cube, cycle) = an.representative(false)?;
    let mut bad = None;
    for p in [&cube, &cycle] {
        let o = bfs_w_partition(p.edge.u, p.edge.v, n, false)?;
        if o.sizes() != p.sizes() && bad.is_none() {
            bad = Some(format!(
                "edge {}: iwe {} bfs {}",
                fmt_edge(&p.edge, n),
                fmt_sizes(p),
                fmt_sizes(&o)
            ));
        }
    }
    c.push(
        "partition_matches_bfs",
        2,
        bad,
        format!("cube {} cycle {}", fmt_sizes(&cube), fmt_sizes(&cycle)),
    );

    // Cube-edge fast path against generic distance comparison.
    let cube_edges: Vec<Edge> = edges(n).filter(|e| e.kind == EdgeKind::CubeEdge).collect();
    let bad = cube_edges.par_iter().find_map_first(|e| {
        let fast = an.w_partition(e.u, e.v, true).ok()?;
        let generic = an.w_partition_generic(e.u, e.v, true).ok()?;
        (fast != generic).then(|| {
            format!(
                "edge {}: fast {} generic {}",
                fmt_edge(e, n),
                fmt_sizes(&fast),
                fmt_sizes(&generic)
            )
        })
    });
    c.push(
        "cube_fast_path_matches_generic",
        cube_edges.len() as u64,
        bad,
        "member lists compared".into(),
    );

    // Every edge balanced; one size triple per edge kind.
    let verdict = balance::analyze(n, Mode::Exhaustive, false)?;
    let all = an.all_edges()?;
    let bad = all
        .iter()
        .find(|p| !p.is_balanced())
        .map(|p| format!("edge {}: {}", fmt_edge(&p.edge, n), fmt_sizes(p)));
    c.push(
        "distance_balanced_all_edges",
        all.len() as u64,
        bad,
        format!("{} edges", all.len()),
    );
    let bad = all
        .iter()
        .find(|p| {
            let rep = if p.edge.kind == EdgeKind::CubeEdge {
                &cube
            } else {
                &cycle
            };
            p.sizes() != rep.sizes()
        })
        .map(|p| format!("edge {}: {}", fmt_edge(&p.edge, n), fmt_sizes(p)));
    c.push(
        "edge_orbit_consistency",
        all.len() as u64,
        bad,
        "all cube edges share one size triple, all cycle edges another".into(),
    );

    c.push(
        "cube_edge_sizes",
        1,
        (cube.sizes() != (half, half, 0))
            .then(|| format!("expected ({half},{half},0), got {}", fmt_sizes(&cube))),
        format!("n*2^(n-1) = {half}"),
    );

    let expect_ndb = nn.is_multiple_of(2).then_some(half);
    c.push(
        "ndb_dichotomy",
        verdict.edges_checked,
        (verdict.ndb_constant != expect_ndb)
            .then(|| format!("expected {expect_ndb:?}, got {:?}", verdict.ndb_constant)),
        format!("ndb_constant {:?}", verdict.ndb_constant),
    );

    if let Some(w) = balance::odd_cycle_witness(n) {
        let (du, dv) = (
            bfs_unchecked(cycle.edge.u, n),
            bfs_unchecked(cycle.edge.v, n),
        );
        let want = ((nn - 1) / 2) as u16;
        let ok = du.get(w) == want && dv.get(w) == want && cycle.size_equal > 0;
        let ok = ok && cycle.size_wuv == cycle.size_wvu && cycle.size_wuv < half;
        c.push(
            "odd_cycle_witness",
            1,
            (!ok).then(|| {
                format!(
                    "{}: d(u)={}, d(v)={}, partition {}",
                    w.display(n),
                    du.get(w),
                    dv.get(w),
                    fmt_sizes(&cycle)
                )
            }),
            format!("witness {} at distance {want}", w.display(n)),
        );
    }

    if nn <= 6 {
        let mut maps = HashSet::new();
        let mut bad = None;
        for anchor in n.vertices() {
            for o in Orientation::BOTH {
                let a = labeling::labeling_from(anchor, o, n)?;
                if bad.is_none() && !a.preserves_structure() {
                    bad = Some(format!(
                        "labeling ({}, {o:?}) breaks adjacency",
                        anchor.display(n)
                    ));
                }
                maps.insert(a.images());
            }
        }
        let expected = labeling::automorphism_group_size(n);
        if bad.is_none() && maps.len() as u64 != expected {
            bad = Some(format!("{} distinct maps, expected {expected}", maps.len()));
        }
        c.push(
            "labelings_distinct",
            expected,
            bad,
            format!("{} distinct maps", maps.len()),
        );

        let bad = edges(n).find_map(|e| {
            let s = labeling::swap_automorphism(e.u, e.v, n).ok()?;
            let ok =
                s.apply(e.u).ok()? == e.v && s.apply(e.v).ok()? == e.u && s.preserves_structure();
            (!ok).then(|| format!("edge {}", fmt_edge(&e, n)))
        });
        c.push(
            "swap_automorphisms",
            n.edge_count() as u64,
            bad,
            "every edge has an endpoint-swapping automorphism".into(),
        );
    }

    if nn <= 5 {
        let maps = labeling::all_hypercube_automorphisms(n)?;
        let tables: HashSet<Vec<u32>> = maps
            .iter()
            .map(|h| (0..n.word_count() as u32).map(|w| h.apply(w)).collect())
            .collect();
        let expected = (1u64 << nn) * (1..=nn as u64).product::<u64>();
        let bad = if let Some(h) = maps.iter().find(|h| !h.preserves_adjacency()) {
            Some(format!(
                "translation {} permutation {:?} breaks adjacency",
                crate::graph::format_word(h.translation(), n),
                h.digit_permutation()
            ))
        } else {
            (tables.len() as u64 != expected)
                .then(|| format!("{} distinct maps, expected {expected}", tables.len()))
        };
        c.push(
            "hypercube_factorization",
            expected,
            bad,
            format!("2^n * n! = {expected}"),
        );
    }

    if nn <= MAX_BRUTEFORCE_AUT_DIMENSION {
        let brute = count_automorphisms_bruteforce(n)?;
        let formula = labeling::automorphism_group_size(n);
        c.push(
            "automorphism_count",
            1,
            (brute != formula).then(|| format!("brute force {brute}, formula {formula}")),
            format!("brute force {brute}, formula {formula}"),
        );
    }

    Ok(c.out)
}

/// Runs every cross-check for `n = 3..=n_max`.
pub fn verify(n_max: u32) -> Result<VerificationReport> {
    let top = Dimension::new(n_max)?;
    gate("verify", top, MAX_VERIFY_DIMENSION)?;
    let mut checks = Vec::new();
    let (mut vertices, mut edge_total) = (0u64, 0u64);
    for nn in crate::graph::MIN_DIMENSION..=n_max {
        let n = Dimension::new(nn)?;
        vertices += n.vertex_count() as u64;
        edge_total += n.edge_count() as u64;
        checks.extend(verify_dimension(n)?);
    }
    Ok(VerificationReport {
        n_max,
        all_passed: checks.iter().all(|c| c.passed),
        vertices,
        edges: edge_total,
        checks_run: checks.len() as u64,
        checks,
    })
}
