//! Automorphisms of `CCC_n` built from vertex labelings.
//!
//! A labeling is fixed by which graph vertex is called `00...0:1` (the
//! anchor) and which way its cycle is numbered. The automorphism sends each
//! label to the graph vertex carrying it.
//!
//! Construction follows the labeling argument directly: number the anchor's
//! cycle, push cube digits across cube edges cycle by cycle, then read every
//! cycle digit off the position of that vertex's cube edge. For `n` up to
//! [`MAX_MATERIALIZED_DIMENSION`] the full vertex map is materialised; above
//! that, images are computed on demand by following the same rule along a
//! single path.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{CccError, Result};
use crate::graph::{
    classify_edge, cube_neighbor, cycle_pred, cycle_succ, Dimension, EdgeKind, Vertex,
};

pub const MAX_MATERIALIZED_DIMENSION: u32 = 16;

/// Numbering direction of the anchor's cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Label `00...0:2` goes to the anchor's cycle successor.
    Forward,
    /// Label `00...0:2` goes to the anchor's cycle predecessor.
    Reverse,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Forward, Orientation::Reverse];
}

/// Order in which cycles are visited while propagating labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sweep {
    BreadthFirst,
    #[cfg_attr(not(test), allow(dead_code))]
    DepthFirst,
}

/// An automorphism of `CCC_n`, identified by the image of the base vertex and
/// the orientation of the image of the base cycle.
#[derive(Clone)]
pub struct Automorphism {
    n: Dimension,
    anchor: Vertex,
    orientation: Orientation,
    /// `images[index(x)]` = image of `x`.
    images: Option<Arc<[Vertex]>>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism")
            .field("n", &self.n.get())
            .field("anchor", &self.anchor.display(self.n).to_string())
            .field("orientation", &self.orientation)
            .field("materialized", &self.images.is_some())
            .finish()
    }
}

/// Graph cycle position carrying label digit `j` (both 0-based).
#[inline]
fn position_of_digit(anchor: Vertex, orientation: Orientation, j: u32, n: u32) -> u32 {
    let c = anchor.cycle_index();
    match orientation {
        Orientation::Forward => (c + j) % n,
        Orientation::Reverse => (c + n - j % n) % n,
    }
}

/// Label digit (0-based) carried by graph cycle position `p`.
#[inline]
fn digit_of_position(anchor: Vertex, orientation: Orientation, p: u32, n: u32) -> u32 {
    let c = anchor.cycle_index();
    match orientation {
        Orientation::Forward => (p + n - c) % n,
        Orientation::Reverse => (c + n - p) % n,
    }
}

/// Builds the label -> vertex map by propagation over the graph.
fn propagate(n: Dimension, anchor: Vertex, orientation: Orientation, sweep: Sweep) -> Vec<Vertex> {
    let nn = n.get();
    // Number the anchor's cycle: step j reaches the vertex labelled 00...0:(j+1).
    // Its cube edge flips graph bit p, which becomes label digit j everywhere.
    let mut digit_of = vec![u32::MAX; nn as usize];
    let mut cur = anchor;
    for j in 0..nn {
        digit_of[cur.cycle_index() as usize] = j;
        cur = match orientation {
            Orientation::Forward => cycle_succ(cur, n),
            Orientation::Reverse => cycle_pred(cur, n),
        };
    }
    debug_assert_eq!(cur, anchor);

    // Label cube words of whole cycles, crossing cube edges out of labelled cycles.
    let mut label_word = vec![u32::MAX; n.word_count()];
    label_word[anchor.cube_word() as usize] = 0;
    let mut frontier = VecDeque::from([anchor.cube_word()]);
    while let Some(w) = match sweep {
        Sweep::BreadthFirst => frontier.pop_front(),
        Sweep::DepthFirst => frontier.pop_back(),
    } {
        for p in 0..nn {
            let across = cube_neighbor(Vertex::from_raw(w, p));
            let w2 = across.cube_word() as usize;
            if label_word[w2] == u32::MAX {
                label_word[w2] = label_word[w as usize] ^ (1 << digit_of[p as usize]);
                frontier.push_back(w2 as u32);
            }
        }
    }

    let mut images = vec![Vertex::from_raw(0, 0); n.vertex_count()];
    for g in n.vertices() {
        let label = Vertex::from_raw(
            label_word[g.cube_word() as usize],
            digit_of[g.cycle_index() as usize],
        );
        images[n.index(label)] = g;
    }
    images
}

impl Automorphism {
    fn build(n: Dimension, anchor: Vertex, orientation: Orientation, sweep: Sweep) -> Self {
        let images = (n.get() <= MAX_MATERIALIZED_DIMENSION)
            .then(|| Arc::from(propagate(n, anchor, orientation, sweep)));
        Automorphism {
            n,
            anchor,
            orientation,
            images,
        }
    }

    pub fn identity(n: Dimension) -> Self {
        Automorphism::build(n, n.base(), Orientation::Forward, Sweep::BreadthFirst)
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    /// Image of the base vertex.
    pub fn anchor(&self) -> Vertex {
        self.anchor
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_materialized(&self) -> bool {
        self.images.is_some()
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, v: Vertex) -> Vertex {
        match &self.images {
            Some(images) => images[self.n.index(v)],
            None => self.follow(v),
        }
    }

    /// Image of `v` computed by walking from the anchor: each set cube digit
    /// `j` of `v` crosses the cube edge at the position carrying digit `j`.
    fn follow(&self, v: Vertex) -> Vertex {
        let nn = self.n.get();
        let mut word = self.anchor.cube_word();
        let mut bits = v.cube_word();
        while bits != 0 {
            let j = bits.trailing_zeros();
            bits &= bits - 1;
            word ^= 1 << position_of_digit(self.anchor, self.orientation, j, nn);
        }
        let p = position_of_digit(self.anchor, self.orientation, v.cycle_index(), nn);
        Vertex::from_raw(word, p)
    }

    /// Label carried by graph vertex `g`.
    fn unfollow(&self, g: Vertex) -> Vertex {
        let nn = self.n.get();
        let mut bits = g.cube_word() ^ self.anchor.cube_word();
        let mut word = 0;
        while bits != 0 {
            let p = bits.trailing_zeros();
            bits &= bits - 1;
            word |= 1 << digit_of_position(self.anchor, self.orientation, p, nn);
        }
        let j = digit_of_position(self.anchor, self.orientation, g.cycle_index(), nn);
        Vertex::from_raw(word, j)
    }

    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        self.n.check(v)?;
        Ok(self.apply_unchecked(v))
    }

    /// Recovers (anchor, orientation) from a vertex map.
    fn read_off(n: Dimension, image: impl Fn(Vertex) -> Vertex) -> (Vertex, Orientation) {
        let anchor = image(n.base());
        let second = image(Vertex::from_raw(0, 1));
        let orientation = if second == cycle_succ(anchor, n) {
            Orientation::Forward
        } else {
            assert_eq!(
                second,
                cycle_pred(anchor, n),
                "map does not preserve the base cycle"
            );
            Orientation::Reverse
        };
        (anchor, orientation)
    }

    pub fn inverse(&self) -> Automorphism {
        let n = self.n;
        match &self.images {
            Some(images) => {
                let mut inv = vec![Vertex::from_raw(0, 0); images.len()];
                for (i, &g) in images.iter().enumerate() {
                    inv[n.index(g)] = n.vertex_at(i);
                }
                let (anchor, orientation) = Self::read_off(n, |v| inv[n.index(v)]);
                Automorphism {
                    n,
                    anchor,
                    orientation,
                    images: Some(inv.into()),
                }
            }
            None => {
                let (anchor, orientation) = Self::read_off(n, |v| self.unfollow(v));
                Automorphism::build(n, anchor, orientation, Sweep::BreadthFirst)
            }
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.n != other.n {
            return Err(CccError::DimensionOutOfRange(other.n.get()));
        }
        let n = self.n;
        match (&self.images, &other.images) {
            (Some(a), Some(b)) => {
                let images: Vec<Vertex> = b.iter().map(|&v| a[n.index(v)]).collect();
                let (anchor, orientation) = Self::read_off(n, |v| images[n.index(v)]);
                Ok(Automorphism {
                    n,
                    anchor,
                    orientation,
                    images: Some(images.into()),
                })
            }
            _ => {
                let (anchor, orientation) =
                    Self::read_off(n, |v| self.apply_unchecked(other.apply_unchecked(v)));
                Ok(Automorphism::build(
                    n,
                    anchor,
                    orientation,
                    Sweep::BreadthFirst,
                ))
            }
        }
    }

    /// The full vertex map, `images()[index(x)]` = image of `x`.
    pub fn images(&self) -> Vec<Vertex> {
        match &self.images {
            Some(images) => images.to_vec(),
            None => self.n.vertices().map(|v| self.follow(v)).collect(),
        }
    }

    /// Checks bijectivity and that every edge maps to an edge of the same kind.
    pub fn preserves_structure(&self) -> bool {
        let n = self.n;
        let mut hit = vec![false; n.vertex_count()];
        for v in n.vertices() {
            let i = n.index(self.apply_unchecked(v));
            if std::mem::replace(&mut hit[i], true) {
                return false;
            }
        }
        crate::graph::edges(n).all(|e| {
            let (a, b) = (self.apply_unchecked(e.u), self.apply_unchecked(e.v));
            classify_edge(a, b, n).ok() == Some(e.kind)
        })
    }
}

/// The automorphism induced by labelling `anchor` as the base vertex with the
/// given orientation of its cycle.
pub fn labeling_from(
    anchor: Vertex,
    orientation: Orientation,
    n: Dimension,
) -> Result<Automorphism> {
    n.check(anchor)?;
    Ok(Automorphism::build(
        n,
        anchor,
        orientation,
        Sweep::BreadthFirst,
    ))
}

#[cfg(test)]
pub(crate) fn labeling_with_sweep(
    anchor: Vertex,
    orientation: Orientation,
    n: Dimension,
    sweep: Sweep,
) -> Vec<Vertex> {
    propagate(n, anchor, orientation, sweep)
}

pub fn apply(a: &Automorphism, v: Vertex) -> Result<Vertex> {
    a.apply(v)
}

/// An automorphism exchanging the endpoints of edge `uv`.
///
/// Two labelings are matched: one naming `u, v` as the base vertex and its
/// neighbour across the edge, the other naming them the other way round.
pub fn swap_automorphism(u: Vertex, v: Vertex, n: Dimension) -> Result<Automorphism> {
    let kind = classify_edge(u, v, n)?;
    let (first, second) = match kind {
        // u = 00..0:1, v = 10..0:1 and back
        EdgeKind::CubeEdge => (
            labeling_from(u, Orientation::Forward, n)?,
            labeling_from(v, Orientation::Forward, n)?,
        ),
        // u = 00..0:1, v = 00..0:n and back; label n is the predecessor of label 1
        EdgeKind::CycleEdge => {
            let towards = |from: Vertex, to: Vertex| {
                if to == cycle_pred(from, n) {
                    Orientation::Forward
                } else {
                    Orientation::Reverse
                }
            };
            (
                labeling_from(u, towards(u, v), n)?,
                labeling_from(v, towards(v, u), n)?,
            )
        }
    };
    second.compose(&first.inverse())
}

/// `|Aut(CCC_n)| = n * 2^(n+1)`.
pub fn automorphism_group_size(n: Dimension) -> u64 {
    n.get() as u64 * (1u64 << (n.get() + 1))
}

/// An automorphism of the hypercube `Q_n`: permute digits, then XOR a translation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypercubeAutomorphism {
    n: Dimension,
    translation: u32,
    /// 0-based: digit `i` moves to position `permutation[i]`.
    permutation: Vec<u32>,
}

impl HypercubeAutomorphism {
    pub fn translation(&self) -> u32 {
        self.translation
    }

    /// The digit permutation, 1-based.
    pub fn digit_permutation(&self) -> Vec<u32> {
        self.permutation.iter().map(|p| p + 1).collect()
    }

    pub fn apply(&self, w: u32) -> u32 {
        let mut out = 0;
        for (i, &p) in self.permutation.iter().enumerate() {
            out |= (w >> i & 1) << p;
        }
        out ^ self.translation
    }

    pub fn preserves_adjacency(&self) -> bool {
        let n = self.n;
        (0..n.word_count() as u32).all(|w| {
            (0..n.get()).all(|i| (self.apply(w) ^ self.apply(w ^ (1 << i))).count_ones() == 1)
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n.word_count()];
        (0..self.n.word_count() as u32)
            .all(|w| !std::mem::replace(&mut seen[self.apply(w) as usize], true))
    }
}

/// `digit_permutation[i - 1]` is the 1-based position digit `i` moves to.
pub fn hypercube_automorphism_from(
    translation: u32,
    digit_permutation: &[u32],
    n: Dimension,
) -> Result<HypercubeAutomorphism> {
    let nn = n.get();
    if digit_permutation.len() != nn as usize {
        return Err(CccError::MalformedPermutation(format!(
            "expected {nn} entries, got {}",
            digit_permutation.len()
        )));
    }
    let mut seen = vec![false; nn as usize];
    for &p in digit_permutation {
        if !(1..=nn).contains(&p) {
            return Err(CccError::MalformedPermutation(format!(
                "entry {p} outside 1..={nn}"
            )));
        }
        if std::mem::replace(&mut seen[p as usize - 1], true) {
            return Err(CccError::MalformedPermutation(format!(
                "entry {p} repeated"
            )));
        }
    }
    if translation & !n.word_mask() != 0 {
        return Err(CccError::InvalidVertex {
            n: nn,
            reason: format!("translation {translation:#x} has bits above position {nn}"),
        });
    }
    Ok(HypercubeAutomorphism {
        n,
        translation,
        permutation: digit_permutation.iter().map(|p| p - 1).collect(),
    })
}

/// Rearranges `perm` into the next lexicographic permutation; false after the last.
fn next_permutation(perm: &mut [u32]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut perm: Vec<u32> = (1..=n).collect();
    let mut out = vec![perm.clone()];
    while next_permutation(&mut perm) {
        out.push(perm.clone());
    }
    out
}

/// All `2^n * n!` translate-and-permute maps of `Q_n`.
pub fn all_hypercube_automorphisms(n: Dimension) -> Result<Vec<HypercubeAutomorphism>> {
    const MAX: u32 = 8;
    if n.get() > MAX {
        return Err(CccError::Gate {
            operation: "hypercube automorphism enumeration",
            n: n.get(),
            max: MAX,
        });
    }
    let perms = permutations(n.get());
    let mut out = Vec::with_capacity(perms.len() << n.get());
    for t in 0..n.word_count() as u32 {
        for p in &perms {
            out.push(hypercube_automorphism_from(t, p, n)?);
        }
    }
    Ok(out)
}
