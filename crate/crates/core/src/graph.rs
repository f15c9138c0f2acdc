//! The cube-connected cycles graph `CCC_n` and its supporting hypercube `Q_n`.
//!
//! Both graphs are implicit: adjacency is computed from the bit-encoded
//! vertex, nothing is stored. A vertex of `CCC_n` is an n-bit cube word plus a
//! cycle digit. Cube digit `x_i` (1-based, leftmost in the text form) lives in
//! bit `i - 1` of the word; the cycle digit is 1-based on the public surface and
//! 0-based in storage.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CccError, Result};

pub const MIN_DIMENSION: u32 = 3;
pub const MAX_DIMENSION: u32 = 30;

/// The hypercube dimension, which is also the length of every cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if (MIN_DIMENSION..=MAX_DIMENSION).contains(&n) {
            Ok(Dimension(n))
        } else {
            Err(CccError::DimensionOutOfRange(n))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Mask with the low `n` bits set.
    #[inline]
    pub fn word_mask(self) -> u32 {
        if self.0 == 32 {
            u32::MAX
        } else {
            (1u32 << self.0) - 1
        }
    }

    /// Number of cube words, `2^n`.
    #[inline]
    pub fn word_count(self) -> usize {
        1usize << self.0
    }

    /// `n * 2^n`.
    #[inline]
    pub fn vertex_count(self) -> usize {
        self.0 as usize * self.word_count()
    }

    /// `3 * n * 2^(n-1)`.
    #[inline]
    pub fn edge_count(self) -> usize {
        3 * self.vertex_count() / 2
    }

    /// The base vertex `00...0:1`.
    #[inline]
    pub fn base(self) -> Vertex {
        Vertex { word: 0, cycle: 0 }
    }

    /// Checks that `v` is a vertex of `CCC_n`.
    pub fn check(self, v: Vertex) -> Result<Vertex> {
        if v.cycle as u32 >= self.0 {
            return Err(CccError::InvalidVertex {
                n: self.0,
                reason: format!("cycle digit {} outside 1..={}", v.cycle_digit(), self.0),
            });
        }
        if v.word & !self.word_mask() != 0 {
            return Err(CccError::InvalidVertex {
                n: self.0,
                reason: format!("cube word {:#x} has bits above position {}", v.word, self.0),
            });
        }
        Ok(v)
    }

    /// Dense index `word * n + (k - 1)`.
    #[inline]
    pub fn index(self, v: Vertex) -> usize {
        v.word as usize * self.0 as usize + v.cycle as usize
    }

    #[inline]
    pub fn vertex_at(self, index: usize) -> Vertex {
        let n = self.0 as usize;
        Vertex {
            word: (index / n) as u32,
            cycle: (index % n) as u8,
        }
    }

    /// All vertices in ascending `(cube_word, cycle_digit)` order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> + Clone {
        (0..self.vertex_count()).map(move |i| self.vertex_at(i))
    }

    /// Rotates the cube word so that bit `shift` becomes bit 0 (cyclic right rotation).
    #[inline]
    pub fn rotate_word_right(self, word: u32, shift: u32) -> u32 {
        let n = self.0;
        let shift = shift % n;
        if shift == 0 {
            return word;
        }
        ((word >> shift) | (word << (n - shift))) & self.word_mask()
    }

    #[inline]
    pub fn rotate_word_left(self, word: u32, shift: u32) -> u32 {
        let shift = shift % self.0;
        self.rotate_word_right(word, (self.0 - shift) % self.0)
    }
}

impl TryFrom<u32> for Dimension {
    type Error = CccError;
    fn try_from(n: u32) -> Result<Self> {
        Dimension::new(n)
    }
}

impl From<Dimension> for u32 {
    fn from(d: Dimension) -> u32 {
        d.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn vertex_count(n: u32) -> Result<u64> {
    Ok(Dimension::new(n)?.vertex_count() as u64)
}

/// A vertex `x_1 x_2 ... x_n k` of `CCC_n`.
///
/// The value carries no dimension; validate with [`Dimension::check`] or
/// [`Vertex::parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    word: u32,
    cycle: u8,
}

impl Vertex {
    /// Builds a vertex from a cube word and a 1-based cycle digit.
    ///
    /// Panics if `cycle_digit` is 0 or above 255; range against `n` is
    /// checked by [`Dimension::check`].
    pub fn new(cube_word: u32, cycle_digit: u32) -> Self {
        assert!(
            (1..=u8::MAX as u32).contains(&cycle_digit),
            "cycle digit must be 1-based"
        );
        Vertex {
            word: cube_word,
            cycle: (cycle_digit - 1) as u8,
        }
    }

    #[inline]
    pub(crate) fn from_raw(word: u32, cycle_index: u32) -> Self {
        Vertex {
            word,
            cycle: cycle_index as u8,
        }
    }

    #[inline]
    pub fn cube_word(self) -> u32 {
        self.word
    }

    /// 1-based cycle digit `k`.
    #[inline]
    pub fn cycle_digit(self) -> u32 {
        self.cycle as u32 + 1
    }

    /// 0-based cycle position, equal to the bit flipped by this vertex's cube edge.
    #[inline]
    pub fn cycle_index(self) -> u32 {
        self.cycle as u32
    }

    /// Cube digit `x_i` for 1-based `i`.
    #[inline]
    pub fn cube_digit(self, i: u32) -> bool {
        self.word >> (i - 1) & 1 == 1
    }

    /// Parses the `"<bits>:<k>"` text form; bit 1 is leftmost.
    pub fn parse(s: &str, n: Dimension) -> Result<Self> {
        let err = |reason: String| CccError::Parse {
            input: s.to_string(),
            reason,
        };
        let (bits, k) = s
            .split_once(':')
            .ok_or_else(|| err("expected <bits>:<cycle digit>".into()))?;
        if bits.len() != n.get() as usize {
            return Err(err(format!(
                "cube word has {} digits, expected {}",
                bits.len(),
                n.get()
            )));
        }
        let mut word = 0u32;
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => word |= 1 << i,
                other => return Err(err(format!("non-binary character {other:?}"))),
            }
        }
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| err(format!("cycle digit {k:?} is not an integer")))?;
        if !(1..=n.get()).contains(&k) {
            return Err(err(format!("cycle digit {k} outside 1..={}", n.get())));
        }
        Ok(Vertex::new(word, k))
    }

    /// Renders the `"<bits>:<k>"` text form.
    pub fn display(self, n: Dimension) -> VertexDisplay {
        VertexDisplay { v: self, n }
    }
}

pub struct VertexDisplay {
    v: Vertex,
    n: Dimension,
}

impl fmt::Display for VertexDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n.get() {
            f.write_str(if self.v.word >> i & 1 == 1 { "1" } else { "0" })?;
        }
        write!(f, ":{}", self.v.cycle_digit())
    }
}

/// A vertex that knows its dimension, for parsing from text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionedVertex(pub Vertex);

impl FromStr for DimensionedVertex {
    type Err = CccError;

    /// Infers `n` from the bit-string length.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s.split_once(':').map(|(b, _)| b.len()).unwrap_or(0);
        let n = Dimension::new(bits as u32)?;
        Vertex::parse(s, n).map(DimensionedVertex)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    CycleEdge,
    CubeEdge,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::CycleEdge => "cycle",
            EdgeKind::CubeEdge => "cube",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: EdgeKind,
}

impl Edge {
    /// Validates the pair and classifies it.
    pub fn new(u: Vertex, v: Vertex, n: Dimension) -> Result<Self> {
        let kind = classify_edge(u, v, n)?;
        Ok(Edge { u, v, kind })
    }
}

#[inline]
pub(crate) fn cycle_pred(v: Vertex, n: Dimension) -> Vertex {
    let n = n.get();
    Vertex::from_raw(v.word, (v.cycle as u32 + n - 1) % n)
}

#[inline]
pub(crate) fn cycle_succ(v: Vertex, n: Dimension) -> Vertex {
    Vertex::from_raw(v.word, (v.cycle as u32 + 1) % n.get())
}

#[inline]
pub(crate) fn cube_neighbor(v: Vertex) -> Vertex {
    Vertex::from_raw(v.word ^ (1 << v.cycle), v.cycle as u32)
}

/// Unchecked neighbor computation for hot loops: `[pred, succ, cube]`.
#[inline]
pub fn neighbors_unchecked(v: Vertex, n: Dimension) -> [Vertex; 3] {
    [cycle_pred(v, n), cycle_succ(v, n), cube_neighbor(v)]
}

/// The three neighbors of `v` in fixed order: cycle predecessor, cycle
/// successor, cube neighbor.
pub fn neighbors(v: Vertex, n: Dimension) -> Result<[Vertex; 3]> {
    n.check(v)?;
    Ok(neighbors_unchecked(v, n))
}

pub fn classify_edge(u: Vertex, v: Vertex, n: Dimension) -> Result<EdgeKind> {
    n.check(u)?;
    n.check(v)?;
    if u == v {
        return Err(CccError::SameVertex(u.display(n).to_string()));
    }
    if u.word == v.word {
        let nn = n.get();
        let diff = (v.cycle as u32 + nn - u.cycle as u32) % nn;
        if diff == 1 || diff == nn - 1 {
            return Ok(EdgeKind::CycleEdge);
        }
    } else if u.cycle == v.cycle && u.word ^ v.word == 1 << u.cycle {
        return Ok(EdgeKind::CubeEdge);
    }
    Err(CccError::NotAdjacent {
        u: u.display(n).to_string(),
        v: v.display(n).to_string(),
    })
}

/// Every undirected edge exactly once.
///
/// Vertices are visited in ascending index order; each contributes its
/// cycle-successor edge, then its cube edge when its own bit `k` is 0 (the
/// endpoint with bit `k` set is the non-canonical one).
pub fn edges(n: Dimension) -> impl Iterator<Item = Edge> + Clone {
    n.vertices().flat_map(move |u| {
        let cycle = Edge {
            u,
            v: cycle_succ(u, n),
            kind: EdgeKind::CycleEdge,
        };
        let cube = (u.word >> u.cycle & 1 == 0).then(|| Edge {
            u,
            v: cube_neighbor(u),
            kind: EdgeKind::CubeEdge,
        });
        std::iter::once(cycle).chain(cube)
    })
}

/// The `n` single-bit flips of `w` in `Q_n`, ordered by flipped position.
pub fn hypercube_neighbors(w: u32, n: Dimension) -> Result<Vec<u32>> {
    if w & !n.word_mask() != 0 {
        return Err(CccError::InvalidVertex {
            n: n.get(),
            reason: format!("hypercube word {w:#x} has bits above position {}", n.get()),
        });
    }
    Ok((0..n.get()).map(|i| w ^ (1 << i)).collect())
}

/// Parses an n-bit string with bit 1 leftmost into a word.
pub fn parse_word(s: &str, n: Dimension) -> Result<u32> {
    let v = Vertex::parse(&format!("{s}:1"), n)?;
    Ok(v.cube_word())
}

pub fn format_word(w: u32, n: Dimension) -> String {
    (0..n.get())
        .map(|i| if w >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}
