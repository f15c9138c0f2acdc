//! Interval-with-ends (IWE) diagrams: shortest paths in `CCC_n` drawn on the
//! loop of cycle digits `1..n`.
//!
//! From the base vertex `00...0:1` to a target `x = x_1..x_n:k`, every cube
//! digit with `x_i = 1` is *circled*. A diagram picks an interval on the loop
//! whose endpoints are circled and which covers every circle, an *initial
//! end* running from 1 to one endpoint, and a *terminal end* running from the
//! other endpoint to `k`. Its length is
//!
//! ```text
//! |initial end| + |terminal end| + |interval| + #circles
//! ```
//!
//! and the distance from the base to `x` is the minimum length over all
//! diagrams. Arbitrary pairs are reduced to the base case by
//! [`canonicalize`], an automorphism (digit rotation plus translation).

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CccError, Result};
use crate::graph::{cube_neighbor, cycle_pred, cycle_succ, Dimension, Vertex};

/// Direction of travel around the loop of cycle digits.
///
/// `Increasing` steps the cycle digit by +1 (`..., n, 1, 2, ...`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Increasing, Direction::Decreasing];
}

/// Number of loop edges from `from` to `to` (1-based) travelling in `direction`.
#[inline]
fn arc_len(from: u32, to: u32, direction: Direction, n: u32) -> u32 {
    match direction {
        Direction::Increasing => (to + n - from) % n,
        Direction::Decreasing => (from + n - to) % n,
    }
}

/// A directed arc on the loop, always shorter than a full turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LoopArc {
    pub from: u32,
    pub to: u32,
    pub direction: Direction,
}

impl LoopArc {
    pub fn new(from: u32, to: u32, direction: Direction) -> Self {
        LoopArc {
            from,
            to,
            direction,
        }
    }

    /// Edge count, in `0..n`.
    #[inline]
    pub fn edge_count(&self, n: Dimension) -> u32 {
        arc_len(self.from, self.to, self.direction, n.get())
    }

    /// True if position `p` is visited when walking the arc.
    pub fn contains(&self, p: u32, n: Dimension) -> bool {
        arc_len(self.from, p, self.direction, n.get()) <= self.edge_count(n)
    }

    /// The positions visited, endpoints included.
    pub fn positions(&self, n: Dimension) -> impl Iterator<Item = u32> {
        let nn = n.get();
        let (from, dir) = (self.from, self.direction);
        (0..=self.edge_count(n)).map(move |s| match dir {
            Direction::Increasing => (from - 1 + s) % nn + 1,
            Direction::Decreasing => (from - 1 + nn - s % nn) % nn + 1,
        })
    }
}

/// The cube digits that must flip on the way from the base vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircledSet {
    mask: u32,
}

impl CircledSet {
    pub fn from_mask(mask: u32) -> Self {
        CircledSet { mask }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn len(self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(self, position: u32) -> bool {
        (1..=32).contains(&position) && self.mask >> (position - 1) & 1 == 1
    }

    /// Circled positions (1-based), ascending.
    pub fn positions(self) -> impl Iterator<Item = u32> {
        let mut m = self.mask;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let b = m.trailing_zeros();
                m &= m - 1;
                Some(b + 1)
            }
        })
    }
}

impl Serialize for CircledSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.positions())
    }
}

/// `{ i : x_i = 1 }` for a target reached from the base vertex.
pub fn circled_set(x: Vertex, n: Dimension) -> Result<CircledSet> {
    n.check(x)?;
    Ok(CircledSet::from_mask(x.cube_word()))
}

/// One interval-with-ends diagram from the base vertex to a target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IweDiagram {
    #[serde(skip)]
    n: Dimension,
    pub circled: CircledSet,
    /// Always stored `Increasing` from the upper neighbour of the deleted gap.
    /// `None` when nothing is circled.
    pub interval: Option<LoopArc>,
    pub initial_end: LoopArc,
    /// `None` when nothing is circled: the initial end then runs from 1 to `k`.
    pub terminal_end: Option<LoopArc>,
    pub target_cycle_digit: u32,
}

impl IweDiagram {
    /// The single-end diagram for a target in the base cycle.
    pub fn single_end(n: Dimension, k: u32, direction: Direction) -> Result<Self> {
        check_position(k, n)?;
        Ok(IweDiagram {
            n,
            circled: CircledSet::from_mask(0),
            interval: None,
            initial_end: LoopArc::new(1, k, direction),
            terminal_end: None,
            target_cycle_digit: k,
        })
    }

    /// A diagram with a non-empty interval.
    ///
    /// `interval` may be given in either direction; it is normalised to
    /// `Increasing`. `entry` must be one of its endpoints; the exit is the
    /// other one.
    pub fn with_interval(
        target: Vertex,
        n: Dimension,
        interval: LoopArc,
        entry: u32,
        initial_direction: Direction,
        terminal_direction: Direction,
    ) -> Result<Self> {
        n.check(target)?;
        let circled = CircledSet::from_mask(target.cube_word());
        let malformed = |reason: &str| CccError::InvalidVertex {
            n: n.get(),
            reason: format!("malformed IWE diagram: {reason}"),
        };
        check_position(interval.from, n)?;
        check_position(interval.to, n)?;
        let interval = match interval.direction {
            Direction::Increasing => interval,
            Direction::Decreasing => {
                LoopArc::new(interval.to, interval.from, Direction::Increasing)
            }
        };
        if !circled.contains(interval.from) || !circled.contains(interval.to) {
            return Err(malformed("interval endpoints must be circled"));
        }
        if !circled.positions().all(|p| interval.contains(p, n)) {
            return Err(malformed("interval must cover every circled digit"));
        }
        let exit = if entry == interval.from {
            interval.to
        } else if entry == interval.to {
            interval.from
        } else {
            return Err(malformed("entry must be an interval endpoint"));
        };
        let k = target.cycle_digit();
        Ok(IweDiagram {
            n,
            circled,
            interval: Some(interval),
            initial_end: LoopArc::new(1, entry, initial_direction),
            terminal_end: Some(LoopArc::new(exit, k, terminal_direction)),
            target_cycle_digit: k,
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    /// Interval endpoint reached by the initial end.
    pub fn entry(&self) -> Option<u32> {
        self.interval.map(|_| self.initial_end.to)
    }

    pub fn exit(&self) -> Option<u32> {
        self.terminal_end.map(|t| t.from)
    }

    /// The cycle digit of the target vertex as well as its cube word.
    pub fn target(&self) -> Vertex {
        Vertex::new(self.circled.mask(), self.target_cycle_digit)
    }

    /// Walking direction along the interval, from entry to exit.
    fn interval_walk(&self) -> Option<LoopArc> {
        let iv = self.interval?;
        let entry = self.initial_end.to;
        Some(if entry == iv.from {
            iv
        } else {
            LoopArc::new(iv.to, iv.from, Direction::Decreasing)
        })
    }
}

fn check_position(p: u32, n: Dimension) -> Result<()> {
    if (1..=n.get()).contains(&p) {
        Ok(())
    } else {
        Err(CccError::InvalidVertex {
            n: n.get(),
            reason: format!("loop position {p} outside 1..={}", n.get()),
        })
    }
}

impl fmt::Display for IweDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = |dir: Direction| match dir {
            Direction::Increasing => "+",
            Direction::Decreasing => "-",
        };
        let arc = |a: LoopArc| format!("{}{}{}", a.from, d(a.direction), a.to);
        write!(f, "circled {{")?;
        for (i, p) in self.circled.positions().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}} initial {}", arc(self.initial_end))?;
        if let (Some(iv), Some(t)) = (self.interval, self.terminal_end) {
            write!(f, " interval {} terminal {}", arc(iv), arc(t))?;
        }
        write!(f, " length {}", diagram_length(self))
    }
}

/// Sum of end edges, interval edges and circles.
pub fn diagram_length(d: &IweDiagram) -> u32 {
    let n = d.n;
    d.initial_end.edge_count(n)
        + d.terminal_end.map_or(0, |t| t.edge_count(n))
        + d.interval.map_or(0, |iv| iv.edge_count(n))
        + d.circled.len()
}

/// Every interval for `circled`, ordered by the index of the deleted gap.
///
/// For circled positions `s_0 < ... < s_{m-1}`, deleting the gap between
/// `s_g` and `s_{g+1}` (cyclically) leaves the interval `s_{g+1} -> s_g`.
fn intervals(circled: CircledSet, n: Dimension) -> Vec<LoopArc> {
    let s: Vec<u32> = circled.positions().collect();
    let m = s.len();
    (0..m)
        .map(|g| LoopArc::new(s[(g + 1) % m], s[g], Direction::Increasing))
        .inspect(|iv| debug_assert!(iv.edge_count(n) < n.get()))
        .collect()
}

/// All candidate diagrams for `x`, in tie-break order.
///
/// `m >= 2` circles give `8m` candidates, `m = 1` gives 4, `m = 0` gives 2.
/// Duplicates from zero-length arcs are kept.
pub fn enumerate_diagrams(x: Vertex, n: Dimension) -> Result<Vec<IweDiagram>> {
    n.check(x)?;
    let circled = CircledSet::from_mask(x.cube_word());
    let k = x.cycle_digit();
    if circled.is_empty() {
        return Direction::BOTH
            .iter()
            .map(|&dir| IweDiagram::single_end(n, k, dir))
            .collect();
    }
    let mut out = Vec::with_capacity(8 * circled.len() as usize);
    for iv in intervals(circled, n) {
        let mut entries = [iv.from, iv.to];
        entries.sort_unstable();
        let entries: &[u32] = if entries[0] == entries[1] {
            &entries[..1]
        } else {
            &entries
        };
        for &entry in entries {
            let exit = if entry == iv.from { iv.to } else { iv.from };
            for init in Direction::BOTH {
                for term in Direction::BOTH {
                    out.push(IweDiagram {
                        n,
                        circled,
                        interval: Some(iv),
                        initial_end: LoopArc::new(1, entry, init),
                        terminal_end: Some(LoopArc::new(exit, k, term)),
                        target_cycle_digit: k,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[inline]
fn loop_gap(a: u32, b: u32, n: u32) -> u32 {
    let d = (b + n - a) % n;
    d.min(n - d)
}

/// Minimum diagram length for `x`, without materialising diagrams.
///
/// For a fixed interval and entry the best end directions are independent,
/// so each end contributes the shorter way round the loop.
#[inline]
pub(crate) fn min_diagram_length(word: u32, k: u32, n: u32) -> u32 {
    if word == 0 {
        return loop_gap(1, k, n);
    }
    let m = word.count_ones();
    let mut best = u32::MAX;
    // Walk consecutive circled pairs (prev -> cur); the gap between them is deleted.
    let mut rest = word;
    let mut prev = 32 - word.leading_zeros(); // the highest circled position wraps to `first`
    while rest != 0 {
        let cur = rest.trailing_zeros() + 1;
        rest &= rest - 1;
        // Interval cur -> prev increasing.
        let span = (prev + n - cur) % n;
        let a = cur;
        let b = prev;
        let via_a = loop_gap(1, a, n) + loop_gap(b, k, n);
        let via_b = loop_gap(1, b, n) + loop_gap(a, k, n);
        best = best.min(span + m + via_a.min(via_b));
        prev = cur;
    }
    best
}

/// `d(base, x)` as the minimum IWE diagram length.
pub fn distance_from_base(x: Vertex, n: Dimension) -> Result<u32> {
    n.check(x)?;
    Ok(min_diagram_length(x.cube_word(), x.cycle_digit(), n.get()))
}

/// Image of `b` under the automorphism that sends `a` to the base vertex.
///
/// Digit positions rotate so that `a`'s cycle digit becomes 1, then the
/// rotated cube word of `a` is XORed out.
pub fn canonicalize(a: Vertex, b: Vertex, n: Dimension) -> Result<Vertex> {
    n.check(a)?;
    n.check(b)?;
    Ok(canonicalize_unchecked(a, b, n))
}

#[inline]
pub(crate) fn canonicalize_unchecked(a: Vertex, b: Vertex, n: Dimension) -> Vertex {
    let shift = a.cycle_index();
    let word = n.rotate_word_right(a.cube_word() ^ b.cube_word(), shift);
    let cycle = (b.cycle_index() + n.get() - shift) % n.get();
    Vertex::from_raw(word, cycle)
}

/// Inverse of [`canonicalize`] with respect to the same `a`.
pub(crate) fn decanonicalize(a: Vertex, y: Vertex, n: Dimension) -> Vertex {
    let shift = a.cycle_index();
    let word = n.rotate_word_left(y.cube_word(), shift) ^ a.cube_word();
    let cycle = (y.cycle_index() + shift) % n.get();
    Vertex::from_raw(word, cycle)
}

pub fn distance(a: Vertex, b: Vertex, n: Dimension) -> Result<u32> {
    let x = canonicalize(a, b, n)?;
    Ok(min_diagram_length(x.cube_word(), x.cycle_digit(), n.get()))
}

/// The minimal diagram selected by the tie-break order of [`enumerate_diagrams`].
pub fn minimal_diagram(x: Vertex, n: Dimension) -> Result<IweDiagram> {
    let all = enumerate_diagrams(x, n)?;
    let mut best = all[0];
    let mut best_len = diagram_length(&best);
    for d in &all[1..] {
        let len = diagram_length(d);
        if len < best_len {
            best = *d;
            best_len = len;
        }
    }
    Ok(best)
}

/// The vertex sequence supported by a diagram, starting at the base vertex.
///
/// Walks the initial end as cycle edges, flips every circled digit as it is
/// reached on the interval (both endpoints included), then walks the
/// terminal end.
pub fn trace_diagram(d: &IweDiagram) -> PathTrace {
    let n = d.n;
    let mut cur = n.base();
    let mut vertices = vec![cur];
    let walk = |arc: LoopArc, cur: &mut Vertex, flip: bool, out: &mut Vec<Vertex>| {
        let flip_here = |v: Vertex| flip && d.circled.contains(v.cycle_digit());
        if flip_here(*cur) {
            *cur = cube_neighbor(*cur);
            out.push(*cur);
        }
        for _ in 0..arc.edge_count(n) {
            *cur = match arc.direction {
                Direction::Increasing => cycle_succ(*cur, n),
                Direction::Decreasing => cycle_pred(*cur, n),
            };
            out.push(*cur);
            if flip_here(*cur) {
                *cur = cube_neighbor(*cur);
                out.push(*cur);
            }
        }
    };
    walk(d.initial_end, &mut cur, false, &mut vertices);
    if let Some(iv) = d.interval_walk() {
        walk(iv, &mut cur, true, &mut vertices);
    }
    if let Some(t) = d.terminal_end {
        walk(t, &mut cur, false, &mut vertices);
    }
    PathTrace { vertices }
}

/// A walk in `CCC_n` as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTrace {
    pub vertices: Vec<Vertex>,
}

impl PathTrace {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// True if consecutive vertices are adjacent.
    pub fn is_walk(&self, n: Dimension) -> bool {
        self.vertices
            .windows(2)
            .all(|w| crate::graph::classify_edge(w[0], w[1], n).is_ok())
    }
}

/// A shortest path from `a` to `b` built from the tie-break-minimal diagram.
pub fn shortest_path(a: Vertex, b: Vertex, n: Dimension) -> Result<PathTrace> {
    let x = canonicalize(a, b, n)?;
    let d = minimal_diagram(x, n)?;
    let mut trace = trace_diagram(&d);
    debug_assert_eq!(trace.vertices.last(), Some(&x));
    for v in &mut trace.vertices {
        *v = decanonicalize(a, *v, n);
    }
    Ok(trace)
}

/// Largest `n` for which [`BaseDistances`] is materialised.
pub const MAX_TABLE_DIMENSION: u32 = 22;

/// `d(base, x)` for every vertex, computed from IWE diagrams.
///
/// Any pair distance is a lookup after canonicalisation.
#[derive(Debug, Clone)]
pub struct BaseDistances {
    n: Dimension,
    dist: Vec<u8>,
}

impl BaseDistances {
    pub fn new(n: Dimension) -> Result<Self> {
        if n.get() > MAX_TABLE_DIMENSION {
            return Err(CccError::Gate {
                operation: "IWE distance table",
                n: n.get(),
                max: MAX_TABLE_DIMENSION,
            });
        }
        let nn = n.get();
        let dist = (0..n.vertex_count())
            .into_par_iter()
            .map(|i| {
                let v = n.vertex_at(i);
                min_diagram_length(v.cube_word(), v.cycle_digit(), nn) as u8
            })
            .collect();
        Ok(BaseDistances { n, dist })
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    #[inline]
    pub fn from_base(&self, x: Vertex) -> u32 {
        self.dist[self.n.index(x)] as u32
    }

    /// `d(a, b)`; both vertices must be valid for this dimension.
    #[inline]
    pub fn distance(&self, a: Vertex, b: Vertex) -> u32 {
        self.from_base(canonicalize_unchecked(a, b, self.n))
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.dist
    }
}
