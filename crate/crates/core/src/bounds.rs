//! Closed-form cop-number bounds and an aggregator that tags every value
//! with the result it comes from.

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{Generators, LabeledGraph};
use crate::solver::{cop_number_exact_with, CopNumber, SolverConfig};
use crate::verify;

/// Where a bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundSource {
    /// Any non-empty graph needs a cop.
    Trivial,
    /// `⌈δ/2⌉` for partial cubes.
    MinDegree,
    /// `⌊(n+5)/6⌋` for Fibonacci and Lucas cubes.
    FibLucasDegree,
    /// `⌈(n+1)/2⌉` for median graphs in `Q_n` (hypercubes included).
    MedianRetract,
    /// Hand-checkable values for `Γ_0 … Γ_5`.
    FibSmall,
    /// `⌈n/3⌉` block strategy.
    Blocks3,
    /// `⌈n/4⌉` block strategy.
    Blocks4,
    /// `⌈n/4⌉` transferred to Lucas cubes through the retraction.
    LucasRetract,
    /// Computed by the exact solver.
    Solver,
}

impl BoundSource {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundSource::Trivial => "trivial",
            BoundSource::MinDegree => "min-degree",
            BoundSource::FibLucasDegree => "fib-lucas-degree",
            BoundSource::MedianRetract => "median-retract",
            BoundSource::FibSmall => "fib-small",
            BoundSource::Blocks3 => "blocks3",
            BoundSource::Blocks4 => "blocks4",
            BoundSource::LucasRetract => "lucas-retract",
            BoundSource::Solver => "solver",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub source: BoundSource,
}

impl Bound {
    fn new(value: usize, source: BoundSource) -> Self {
        Bound { value, source }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.value, self.source.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Bound,
    pub upper: Option<Bound>,
    pub exact: Option<usize>,
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lower={}", self.lower)?;
        match &self.upper {
            Some(u) => write!(f, " upper={u}")?,
            None => f.write_str(" upper=none")?,
        }
        match self.exact {
            Some(e) => write!(f, " exact={e}"),
            None => f.write_str(" exact=none"),
        }
    }
}

/// `⌈δ(g)/2⌉`; `g` must be a partial cube under its labeling.
pub fn lower_bound_partial_cube(g: &LabeledGraph) -> Result<usize> {
    let rep = verify::verify_isometric_in_hypercube(g)?;
    if !rep.verdict {
        return Err(Error::Precondition(format!(
            "not a partial cube under its labeling ({})",
            rep.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(g.min_degree()?.div_ceil(2))
}

/// `⌊(n+5)/6⌋` (for `n ≥ 1`).
pub fn fib_lucas_lower(n: usize) -> usize {
    n.div_ceil(6)
}

/// `⌈(n+1)/2⌉`.
pub fn median_upper(n: usize) -> usize {
    (n + 1).div_ceil(2)
}

/// Best closed-form upper bound for `c(Γ_n)`.
pub fn fibonacci_upper(n: usize) -> usize {
    fibonacci_upper_bound(n).value
}

fn fibonacci_upper_bound(n: usize) -> Bound {
    match n {
        0..=2 => Bound::new(1, BoundSource::FibSmall),
        3..=5 => Bound::new(2, BoundSource::FibSmall),
        6..=8 => Bound::new(n.div_ceil(3), BoundSource::Blocks3),
        _ => Bound::new(n.div_ceil(4), BoundSource::Blocks4),
    }
}

/// `⌈n/4⌉` for `c(Λ_n)`, `n ≥ 9`.
pub fn lucas_upper(n: usize) -> Result<usize> {
    if n < 9 {
        return Err(Error::Precondition(format!(
            "the Lucas bound needs n >= 9 (got {n}); use the solver for small cases"
        )));
    }
    Ok(n.div_ceil(4))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Fibonacci,
    Lucas,
    Hypercube,
}

impl Family {
    pub fn generate(&self, n: usize) -> Result<LabeledGraph> {
        let gens = Generators::default();
        match self {
            Family::Fibonacci => gens.fibonacci_cube(n),
            Family::Lucas => gens.lucas_cube(n),
            Family::Hypercube => gens.hypercube(n),
        }
    }
}

/// What the bounds aggregator is asked about.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Family(Family, usize),
    Custom(&'a LabeledGraph),
}

/// Aggregates the best lower and upper bounds, optionally with the exact
/// value from the solver (probing `k ≤ k_max`).
pub fn bounds_report(subject: Subject<'_>, with_exact: bool, k_max: usize) -> Result<BoundsReport> {
    bounds_report_with(subject, with_exact, k_max, &SolverConfig::default())
}

pub fn bounds_report_with(
    subject: Subject<'_>,
    with_exact: bool,
    k_max: usize,
    config: &SolverConfig,
) -> Result<BoundsReport> {
    let mut lower = Bound::new(1, BoundSource::Trivial);
    let mut upper: Option<Bound> = None;
    let raise = |b: Bound, lower: &mut Bound| {
        if b.value > lower.value {
            *lower = b;
        }
    };
    let tighten = |b: Bound, upper: &mut Option<Bound>| {
        if upper.is_none_or(|u| b.value < u.value) {
            *upper = Some(b);
        }
    };

    let owned;
    let graph: Option<&LabeledGraph> = match subject {
        Subject::Custom(g) => Some(g),
        Subject::Family(f, n) if with_exact => {
            owned = f.generate(n)?;
            Some(&owned)
        }
        Subject::Family(..) => None,
    };

    match subject {
        Subject::Family(Family::Fibonacci, n) => {
            if n >= 1 {
                raise(Bound::new(fib_lucas_lower(n), BoundSource::FibLucasDegree), &mut lower);
            }
            tighten(fibonacci_upper_bound(n), &mut upper);
        }
        Subject::Family(Family::Lucas, n) => {
            if n == 0 {
                return Err(Error::Precondition("Lucas cube requires n >= 1".into()));
            }
            raise(Bound::new(fib_lucas_lower(n), BoundSource::FibLucasDegree), &mut lower);
            if let Ok(u) = lucas_upper(n) {
                tighten(Bound::new(u, BoundSource::LucasRetract), &mut upper);
            }
        }
        Subject::Family(Family::Hypercube, n) => {
            raise(Bound::new(n.div_ceil(2), BoundSource::MinDegree), &mut lower);
            tighten(Bound::new(median_upper(n), BoundSource::MedianRetract), &mut upper);
        }
        Subject::Custom(g) => {
            if g.has_genuine_labels() {
                if let Ok(l) = lower_bound_partial_cube(g) {
                    raise(Bound::new(l, BoundSource::MinDegree), &mut lower);
                    if verify::is_median(g)?.verdict {
                        tighten(
                            Bound::new(median_upper(g.dimension()), BoundSource::MedianRetract),
                            &mut upper,
                        );
                    }
                }
            }
        }
    }

    let mut exact = None;
    if with_exact {
        let g = graph.expect("graph is materialized when the exact value is requested");
        match cop_number_exact_with(g, k_max, config)? {
            CopNumber::Exact(c) => {
                exact = Some(c);
                // Small Lucas cubes have no closed-form upper bound.
                if upper.is_none() {
                    upper = Some(Bound::new(c, BoundSource::Solver));
                }
            }
            CopNumber::Exceeds(k) => {
                raise(Bound::new(k + 1, BoundSource::Solver), &mut lower);
            }
        }
    }

    Ok(BoundsReport { lower, upper, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{fibonacci_cube, hypercube, path, path_subcube};

    #[test]
    fn partial_cube_lower_bound() {
        assert_eq!(lower_bound_partial_cube(&hypercube(5).unwrap()).unwrap(), 3);
        assert_eq!(lower_bound_partial_cube(&path_subcube(5).unwrap()).unwrap(), 1);
        assert_eq!(lower_bound_partial_cube(&fibonacci_cube(9).unwrap()).unwrap(), 2);
        assert!(lower_bound_partial_cube(&path(5).unwrap()).is_err());
    }

    #[test]
    fn formulas() {
        assert_eq!(fib_lucas_lower(1), 1);
        assert_eq!(fib_lucas_lower(13), 3);
        assert_eq!(fib_lucas_lower(6), 1);
        assert_eq!(median_upper(3), 2);
        assert_eq!(median_upper(0), 1);
        assert_eq!(median_upper(8), 5);
        assert_eq!(fibonacci_upper(5), 2);
        assert_eq!(fibonacci_upper(8), 3);
        assert_eq!(fibonacci_upper(12), 3);
        assert_eq!(lucas_upper(9).unwrap(), 3);
        assert_eq!(lucas_upper(16).unwrap(), 4);
        assert_eq!(lucas_upper(100).unwrap(), 25);
        assert!(lucas_upper(8).is_err());
    }

    #[test]
    fn degree_formula_consistency() {
        for n in 1..=1_000_000usize {
            assert_eq!(fib_lucas_lower(n), n.div_ceil(3).div_ceil(2), "n={n}");
        }
    }

    #[test]
    fn fibonacci_upper_monotone() {
        for n in 3..10_000 {
            assert!(fibonacci_upper(n) <= fibonacci_upper(n + 1), "dip at n={n}");
        }
    }

    #[test]
    fn report_lines() {
        let r = bounds_report(Subject::Family(Family::Fibonacci, 12), false, 0).unwrap();
        assert_eq!(r.to_string(), "lower=2(fib-lucas-degree) upper=3(blocks4) exact=none");
        let r = bounds_report(Subject::Family(Family::Fibonacci, 5), true, 3).unwrap();
        assert_eq!((r.lower.value, r.upper.unwrap().value, r.exact), (1, 2, Some(2)));
        let r = bounds_report(Subject::Family(Family::Lucas, 9), false, 0).unwrap();
        assert_eq!(r.upper.unwrap(), Bound::new(3, BoundSource::LucasRetract));
        let r = bounds_report(Subject::Family(Family::Hypercube, 3), false, 0).unwrap();
        assert_eq!(r.upper.unwrap().value, 2);
        assert_eq!(r.lower.value, 2);
    }

    #[test]
    fn custom_graph_report() {
        let g = path_subcube(4).unwrap();
        let r = bounds_report(Subject::Custom(&g), true, 2).unwrap();
        assert_eq!(r.exact, Some(1));
        assert_eq!(r.upper.unwrap().value, 2);
    }
}
