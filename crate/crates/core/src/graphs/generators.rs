//! Generators for hypercubes, Fibonacci cubes, Lucas cubes and small fixtures.
//!
//! All cube-family generators return induced-subcube graphs with vertices in
//! lexicographic label order.

use super::graph::LabeledGraph;
use super::label::{BitLabel, MAX_LABEL_BITS};
use crate::error::{Error, Result};

/// Default largest dimension a generator will enumerate.
pub const DEFAULT_DIMENSION_CAP: usize = 24;

/// Generator settings.
#[derive(Clone, Copy, Debug)]
pub struct Generators {
    pub dimension_cap: usize,
}

impl Default for Generators {
    fn default() -> Self {
        Generators {
            dimension_cap: DEFAULT_DIMENSION_CAP,
        }
    }
}

impl Generators {
    pub fn with_cap(dimension_cap: usize) -> Self {
        Generators {
            dimension_cap: dimension_cap.min(MAX_LABEL_BITS),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.dimension_cap {
            Err(Error::DimensionCap {
                n,
                cap: self.dimension_cap,
            })
        } else {
            Ok(())
        }
    }

    /// `Q_n`: all `2^n` strings of length `n`.
    pub fn hypercube(&self, n: usize) -> Result<LabeledGraph> {
        self.check(n)?;
        LabeledGraph::induced(n, (0..1u64 << n).map(|b| BitLabel::new(b, n)))
    }

    /// `Γ_n`: strings of length `n` with no two consecutive ones.
    pub fn fibonacci_cube(&self, n: usize) -> Result<LabeledGraph> {
        self.check(n)?;
        LabeledGraph::induced(n, fibonacci_strings(n))
    }

    /// `Λ_n`: Fibonacci strings that do not both start and end with `1`.
    ///
    /// Defined for `n ≥ 1`; for `n = 1` the only vertex is `0`, since the
    /// string `1` starts and ends with a one.
    pub fn lucas_cube(&self, n: usize) -> Result<LabeledGraph> {
        if n == 0 {
            return Err(Error::Precondition("Lucas cube requires n >= 1".into()));
        }
        self.check(n)?;
        let labels = fibonacci_strings(n)
            .into_iter()
            .filter(|x| !(x.get(1) && x.get(n)));
        LabeledGraph::induced(n, labels)
    }
}

pub fn hypercube(n: usize) -> Result<LabeledGraph> {
    Generators::default().hypercube(n)
}

pub fn fibonacci_cube(n: usize) -> Result<LabeledGraph> {
    Generators::default().fibonacci_cube(n)
}

pub fn lucas_cube(n: usize) -> Result<LabeledGraph> {
    Generators::default().lucas_cube(n)
}

/// Length-`n` strings avoiding `11`, in lexicographic order.
pub fn fibonacci_strings(n: usize) -> Vec<BitLabel> {
    fn extend(n: usize, pos: usize, bits: u64, prev_one: bool, out: &mut Vec<BitLabel>) {
        if pos == n {
            out.push(BitLabel::new(bits, n));
            return;
        }
        extend(n, pos + 1, bits, false, out);
        if !prev_one {
            extend(n, pos + 1, bits | 1 << pos, true, out);
        }
    }
    let mut out = Vec::new();
    extend(n, 0, 0, false, &mut out);
    out
}

/// Path on `n_vertices` vertices with explicit edges `i ~ i+1`.
///
/// Labels are the binary spellings of the vertex indices, which are
/// placeholders for every path longer than two vertices.
pub fn path(n_vertices: usize) -> Result<LabeledGraph> {
    if n_vertices == 0 {
        return Err(Error::EmptyGraph);
    }
    let width = bits_for(n_vertices);
    LabeledGraph::explicit(
        width,
        placeholder_labels(n_vertices, width),
        (1..n_vertices).map(|i| (i - 1, i)),
    )
}

/// Path on `n_vertices` vertices embedded isometrically in `Q_{n_vertices-1}`
/// with labels `0…0, 10…0, 110…0, …, 1…1`.
pub fn path_subcube(n_vertices: usize) -> Result<LabeledGraph> {
    if n_vertices == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = n_vertices - 1;
    if n > MAX_LABEL_BITS {
        return Err(Error::DimensionCap {
            n,
            cap: MAX_LABEL_BITS,
        });
    }
    LabeledGraph::induced(n, (0..=n).map(|i| BitLabel::new((1u64 << i) - 1, n)))
}

/// `K_{a,b}` with placeholder labels; vertices `0..a` form one side.
pub fn complete_bipartite(a: usize, b: usize) -> Result<LabeledGraph> {
    let total = a + b;
    if total == 0 {
        return Err(Error::EmptyGraph);
    }
    let width = bits_for(total);
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|u| (a..total).map(move |v| (u, v)))
        .collect();
    LabeledGraph::explicit(width, placeholder_labels(total, width), edges)
}

/// Cycle `C_m` (m ≥ 3) with placeholder labels.
pub fn cycle(m: usize) -> Result<LabeledGraph> {
    if m < 3 {
        return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
    }
    let width = bits_for(m);
    LabeledGraph::explicit(
        width,
        placeholder_labels(m, width),
        (0..m).map(|i| (i.min((i + 1) % m), i.max((i + 1) % m))),
    )
}

fn bits_for(count: usize) -> usize {
    if count <= 1 {
        0
    } else {
        (usize::BITS - (count - 1).leading_zeros()) as usize
    }
}

/// Label whose printed string is `i` in binary, most significant digit first.
fn placeholder_labels(count: usize, width: usize) -> Vec<BitLabel> {
    (0..count as u64)
        .map(|i| {
            let bits = if width == 0 { 0 } else { i.reverse_bits() >> (64 - width) };
            BitLabel::new(bits, width)
        })
        .collect()
}
