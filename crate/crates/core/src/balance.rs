//! Distance-balance partitions `W_{u,v}`, `W_{v,u}`, `W^v_u` for edges of
//! `CCC_n`, and the verdicts built from them.
//!
//! Distances come from IWE diagrams (see [`crate::iwe`]); BFS-based
//! partitions live in [`crate::oracle`] for cross-checking.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CccError, Result};
use crate::graph::{edges, Dimension, Edge, EdgeKind, Vertex};
use crate::iwe::BaseDistances;

/// Largest `n` accepted by exhaustive (all-edge) mode.
pub const MAX_EXHAUSTIVE_DIMENSION: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// One cube edge and one cycle edge; every edge lies in the orbit of one of them.
    #[default]
    Representative,
    /// Every edge of the graph.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WMembers {
    pub closer_to_u: Vec<Vertex>,
    pub closer_to_v: Vec<Vertex>,
    pub equidistant: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPartition {
    pub edge: Edge,
    /// `|W_{u,v}|`
    pub size_wuv: u64,
    /// `|W_{v,u}|`
    pub size_wvu: u64,
    /// `|W^v_u|`
    pub size_equal: u64,
    pub members: Option<WMembers>,
}

impl WPartition {
    pub fn sizes(&self) -> (u64, u64, u64) {
        (self.size_wuv, self.size_wvu, self.size_equal)
    }

    pub fn is_balanced(&self) -> bool {
        self.size_wuv == self.size_wvu
    }

    pub fn total(&self) -> u64 {
        self.size_wuv + self.size_wvu + self.size_equal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    U,
    V,
    Equal,
}

/// Builds a partition by classifying every vertex with `side`.
pub(crate) fn classify_all<F>(edge: Edge, n: Dimension, with_members: bool, side: F) -> WPartition
where
    F: Fn(Vertex) -> std::cmp::Ordering + Sync,
{
    use std::cmp::Ordering;
    let to_side = |o: Ordering| match o {
        Ordering::Less => Side::U,
        Ordering::Greater => Side::V,
        Ordering::Equal => Side::Equal,
    };
    if with_members {
        let sides: Vec<Side> = (0..n.vertex_count())
            .into_par_iter()
            .map(|i| to_side(side(n.vertex_at(i))))
            .collect();
        let mut m = WMembers::default();
        for (i, s) in sides.into_iter().enumerate() {
            let x = n.vertex_at(i);
            match s {
                Side::U => m.closer_to_u.push(x),
                Side::V => m.closer_to_v.push(x),
                Side::Equal => m.equidistant.push(x),
            }
        }
        WPartition {
            edge,
            size_wuv: m.closer_to_u.len() as u64,
            size_wvu: m.closer_to_v.len() as u64,
            size_equal: m.equidistant.len() as u64,
            members: Some(m),
        }
    } else {
        let (a, b, c) = (0..n.vertex_count())
            .into_par_iter()
            .map(|i| match to_side(side(n.vertex_at(i))) {
                Side::U => (1u64, 0u64, 0u64),
                Side::V => (0, 1, 0),
                Side::Equal => (0, 0, 1),
            })
            .reduce(|| (0, 0, 0), |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2));
        WPartition {
            edge,
            size_wuv: a,
            size_wvu: b,
            size_equal: c,
            members: None,
        }
    }
}

/// W-partition computations sharing one IWE distance table.
#[derive(Debug, Clone)]
pub struct BalanceAnalyzer {
    table: BaseDistances,
}

impl BalanceAnalyzer {
    pub fn new(n: Dimension) -> Result<Self> {
        Ok(BalanceAnalyzer {
            table: BaseDistances::new(n)?,
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.table.dimension()
    }

    pub fn distances(&self) -> &BaseDistances {
        &self.table
    }

    /// Partition for edge `uv`. Cube edges take the fast path: after moving
    /// `u` to the base vertex, `x` is closer to `u` exactly when its cube digit
    /// at `u`'s cycle position agrees with `u`'s.
    pub fn w_partition(&self, u: Vertex, v: Vertex, with_members: bool) -> Result<WPartition> {
        let n = self.dimension();
        let edge = Edge::new(u, v, n)?;
        Ok(match edge.kind {
            EdgeKind::CubeEdge => {
                let bit = 1u32 << u.cycle_index();
                classify_all(edge, n, with_members, |x| {
                    if (x.cube_word() ^ u.cube_word()) & bit == 0 {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
            }
            EdgeKind::CycleEdge => self.classify_by_distance(edge, with_members),
        })
    }

    /// Partition by comparing `d(x,u)` with `d(x,v)` for every `x`.
    pub fn w_partition_generic(
        &self,
        u: Vertex,
        v: Vertex,
        with_members: bool,
    ) -> Result<WPartition> {
        let edge = Edge::new(u, v, self.dimension())?;
        Ok(self.classify_by_distance(edge, with_members))
    }

    fn classify_by_distance(&self, edge: Edge, with_members: bool) -> WPartition {
        let t = &self.table;
        classify_all(edge, self.dimension(), with_members, |x| {
            t.distance(x, edge.u).cmp(&t.distance(x, edge.v))
        })
    }

    pub fn representative(&self, with_members: bool) -> Result<(WPartition, WPartition)> {
        let (cube, cycle) = representative_edges(self.dimension());
        Ok((
            self.w_partition(cube.u, cube.v, with_members)?,
            self.w_partition(cycle.u, cycle.v, with_members)?,
        ))
    }

    /// Size triples for every edge, in edge-stream order.
    pub fn all_edges(&self) -> Result<Vec<WPartition>> {
        let n = self.dimension();
        exhaustive_gate(n)?;
        let all: Vec<Edge> = edges(n).collect();
        all.par_iter()
            .map(|e| self.w_partition(e.u, e.v, false))
            .collect()
    }
}

fn exhaustive_gate(n: Dimension) -> Result<()> {
    if n.get() > MAX_EXHAUSTIVE_DIMENSION {
        Err(CccError::Gate {
            operation: "exhaustive edge analysis",
            n: n.get(),
            max: MAX_EXHAUSTIVE_DIMENSION,
        })
    } else {
        Ok(())
    }
}

pub fn w_partition(u: Vertex, v: Vertex, n: Dimension, with_members: bool) -> Result<WPartition> {
    n.check(u)?;
    n.check(v)?;
    crate::graph::classify_edge(u, v, n)?;
    BalanceAnalyzer::new(n)?.w_partition(u, v, with_members)
}

/// `(00..0:1 - 10..0:1, 00..0:1 - 00..0:n)`.
pub fn representative_edges(n: Dimension) -> (Edge, Edge) {
    let base = n.base();
    (
        Edge {
            u: base,
            v: Vertex::new(1, 1),
            kind: EdgeKind::CubeEdge,
        },
        Edge {
            u: base,
            v: Vertex::new(0, n.get()),
            kind: EdgeKind::CycleEdge,
        },
    )
}

fn checked_partitions(n: Dimension, mode: Mode) -> Result<Vec<WPartition>> {
    if mode == Mode::Exhaustive {
        exhaustive_gate(n)?;
    }
    let an = BalanceAnalyzer::new(n)?;
    match mode {
        Mode::Representative => {
            let (a, b) = an.representative(false)?;
            Ok(vec![a, b])
        }
        Mode::Exhaustive => an.all_edges(),
    }
}

/// Common `|W_{u,v}| = |W_{v,u}|` across `parts` with every `W^v_u` empty.
fn common_constant(parts: &[WPartition]) -> Option<u64> {
    let first = parts.first()?.size_wuv;
    parts
        .iter()
        .all(|p| p.size_wuv == first && p.size_wvu == first && p.size_equal == 0)
        .then_some(first)
}

pub fn is_distance_balanced(n: Dimension, mode: Mode) -> Result<bool> {
    Ok(checked_partitions(n, mode)?
        .iter()
        .all(WPartition::is_balanced))
}

/// The nicely-distance-balanced constant, if one exists on the checked edges.
pub fn ndb_constant(n: Dimension, mode: Mode) -> Result<Option<u64>> {
    Ok(common_constant(&checked_partitions(n, mode)?))
}

pub fn equal_set_empty_for_cycle_edge(n: Dimension) -> Result<bool> {
    let (_, cycle) = representative_edges(n);
    Ok(BalanceAnalyzer::new(n)?
        .w_partition(cycle.u, cycle.v, false)?
        .size_equal
        == 0)
}

/// For odd `n`, the base-cycle vertex `00..0:(n+1)/2`, equidistant from both
/// ends of the representative cycle edge.
pub fn odd_cycle_witness(n: Dimension) -> Option<Vertex> {
    (n.get() % 2 == 1).then(|| Vertex::new(0, n.get().div_ceil(2)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub n: Dimension,
    pub mode: Mode,
    pub distance_balanced: bool,
    pub ndb_constant: Option<u64>,
    pub cube_edge: WPartition,
    pub cycle_edge: WPartition,
    pub exhaustive_checked: bool,
    pub edges_checked: u64,
    /// Exhaustive mode only: all cube edges share one size triple and all cycle
    /// edges another.
    pub orbit_consistent: Option<bool>,
}

impl BalanceVerdict {
    pub fn nicely_distance_balanced(&self) -> bool {
        self.ndb_constant.is_some()
    }
}

pub fn analyze(n: Dimension, mode: Mode, with_members: bool) -> Result<BalanceVerdict> {
    if mode == Mode::Exhaustive {
        exhaustive_gate(n)?;
    }
    let an = BalanceAnalyzer::new(n)?;
    let (cube_edge, cycle_edge) = an.representative(with_members)?;
    let (parts, orbit_consistent) = match mode {
        Mode::Representative => (vec![cube_edge.clone(), cycle_edge.clone()], None),
        Mode::Exhaustive => {
            let parts = an.all_edges()?;
            let consistent = parts.iter().all(|p| {
                let rep = match p.edge.kind {
                    EdgeKind::CubeEdge => &cube_edge,
                    EdgeKind::CycleEdge => &cycle_edge,
                };
                p.sizes() == rep.sizes()
            });
            (parts, Some(consistent))
        }
    };
    Ok(BalanceVerdict {
        n,
        mode,
        distance_balanced: parts.iter().all(WPartition::is_balanced),
        ndb_constant: common_constant(&parts),
        cube_edge,
        cycle_edge,
        exhaustive_checked: mode == Mode::Exhaustive,
        edges_checked: parts.len() as u64,
        orbit_consistent,
    })
}
