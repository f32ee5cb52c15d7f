//! Varying the parameters `a` and `k`.
//!
//! Minimizer sets do not change under `k -> λk` (`λ > 0`) or `a -> a + ck`,
//! so `k` can be normalized onto the simplex and `a` moved onto a slice.
//! This module provides these reductions, a feasibility test for parameter
//! pairs, predictions across parameter changes and a parallel sweep.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functional::{EvalOptions, GerstewitzFunctional};
use crate::geometry::{find_feasible_point, Halfspace, Point, SetRep, TriBool};
use crate::solver::{solve, FeasibleSet, ProblemInstance, SolveResult};

/// A parameter pair `(a, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPair {
    pub a: Point,
    pub k: Point,
}

impl ParamPair {
    pub fn new(a: Point, k: Point) -> Result<Self> {
        k.check_dim(a.dim())?;
        if k.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(ParamPair { a, k })
    }
}

/// Returns `k / Σ k_i`.
pub fn normalize_k(k: &Point) -> Result<Point> {
    let s = k.sum();
    if s == 0.0 || !s.is_finite() {
        return Err(Error::NotNormalizable);
    }
    Ok(k.scale(1.0 / s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    /// Make coordinate `j` zero.
    CoordinateZero(usize),
    /// Make the coordinate sum zero.
    SumZero,
    /// Move `a` onto the boundary of `R^ℓ_+`.
    SignNonneg,
    /// Move `a` onto the boundary of `-R^ℓ_+`.
    SignNonpos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Shift {
    pub a_new: Point,
    pub c: f64,
}

/// Finds `c` with `a + c k` in the slice given by `mode`.
pub fn shift_a(a: &Point, k: &Point, mode: ShiftMode) -> Result<Shift> {
    k.check_dim(a.dim())?;
    let c = match mode {
        ShiftMode::CoordinateZero(j) => {
            if j >= a.dim() {
                return Err(Error::Precondition(format!("coordinate {j} out of range")));
            }
            if k[j] == 0.0 {
                return Err(Error::Precondition(format!("k_{j} must be nonzero")));
            }
            -a[j] / k[j]
        }
        ShiftMode::SumZero => {
            if k.sum() == 0.0 {
                return Err(Error::Precondition("coordinates of k must not sum to zero".into()));
            }
            -a.sum() / k.sum()
        }
        ShiftMode::SignNonneg | ShiftMode::SignNonpos => {
            let positive = k.iter().all(|&x| x > 0.0);
            if !positive && !k.iter().all(|&x| x < 0.0) {
                return Err(Error::Precondition("k must have all coordinates positive or all negative".into()));
            }
            // a_i + c k_i = 0 at c_i = -a_i / k_i; the sign pattern of k
            // decides whether the largest or smallest c_i is the boundary
            let cs = a.iter().zip(k.iter()).map(|(x, y)| -x / y);
            let (max, min) = cs.fold((f64::NEG_INFINITY, f64::INFINITY), |(hi, lo), c| (hi.max(c), lo.min(c)));
            if positive == (mode == ShiftMode::SignNonneg) {
                max
            } else {
                min
            }
        }
    };
    let mut a_new = a.axpy(c, k).into_vec();
    // remove rounding residue from the coordinate that defines the slice
    match mode {
        ShiftMode::CoordinateZero(j) => a_new[j] = 0.0,
        ShiftMode::SignNonneg | ShiftMode::SignNonpos => {
            for (j, x) in a_new.iter_mut().enumerate() {
                if x.abs() <= 1e-15 * (a[j].abs() + (c * k[j]).abs()) {
                    *x = 0.0;
                }
            }
        }
        ShiftMode::SumZero => {}
    }
    Ok(Shift { a_new: Point::from(a_new), c })
}

/// Whether `-k ∈ 0⁺H`; such directions never give an optimal solution.
pub fn forbidden_direction(h: &SetRep, k: &Point) -> Result<TriBool> {
    h.recession_contains(&k.neg())
}

/// Whether some point of `F` has `phi_{a-H,k}(y) < +∞`.
///
/// Exact for finite sets.  For a grid region with polyhedral membership and
/// polyhedral `H` the test is a linear feasibility problem in `(y, t)`; a
/// point found there is a certificate.  Otherwise the sample decides.
pub fn param_feasible(f: &FeasibleSet, h: &SetRep, pair: &ParamPair) -> Result<bool> {
    let g = GerstewitzFunctional::new(pair.a.clone(), h.clone(), pair.k.clone())?;
    if let FeasibleSet::GridRegion { lo, hi, membership, .. } = f {
        if let Some(rows) = level_rows(lo, hi, membership.as_ref(), &g) {
            if find_feasible_point(lo.dim() + 1, &rows).is_some() {
                return Ok(true);
            }
        }
    }
    let p = ProblemInstance::new(f.clone(), g)?;
    let points: Vec<Point> = match f {
        FeasibleSet::FinitePoints(pts) => pts.clone(),
        other => other.sample(1.0)?.into_iter().map(|s| s.point).collect(),
    };
    for y in &points {
        if p.g.phi(y)?.value != crate::functional::ExtendedReal::PosInf {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Rows in `(y, t)` of `lo <= y <= hi`, `y ∈ membership`, `a - y + t k ∈ H`.
fn level_rows(lo: &Point, hi: &Point, membership: Option<&SetRep>, g: &GerstewitzFunctional) -> Option<Vec<Halfspace>> {
    let n = lo.dim();
    let lift = |w: &Point, t_coef: f64| {
        let mut v = w.coords().to_vec();
        v.push(t_coef);
        Point::from(v)
    };
    let mut rows = Vec::new();
    for j in 0..n {
        let e = Point::unit(n, j);
        rows.push(Halfspace::new_unchecked(lift(&e, 0.0), lo[j]));
        rows.push(Halfspace::new_unchecked(lift(&e.neg(), 0.0), -hi[j]));
    }
    if let Some(m) = membership {
        for r in m.polyhedral_rows()?.iter() {
            rows.push(Halfspace::new_unchecked(lift(&r.normal, 0.0), r.offset));
        }
    }
    for r in g.h().polyhedral_rows()?.iter() {
        let wk = r.normal.dot(g.k());
        rows.push(Halfspace::new_unchecked(lift(&r.normal.neg(), wk), r.offset - r.normal.dot(g.a())));
    }
    Some(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Prediction {
    /// No problem `(F, b, H, k⁰)` with any `b` has an optimal solution.
    AllUnboundedOrEmptyFamily,
    /// The target minimizer set is nonempty and compact.
    TargetNonemptyCompact,
    NoPrediction(String),
}

/// Which transfer argument produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferBranch {
    /// Source unbounded, both directions in `int 0⁺H`.
    Unbounded,
    /// Source optimal with bounded minimizers, both directions in `int 0⁺H`.
    InteriorDirections,
    /// Source optimal with bounded minimizers, both directions in
    /// `0⁺H \ (-0⁺H)`, target feasible.
    PointedDirections,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transfer {
    pub prediction: Prediction,
    /// Every branch whose hypotheses hold.
    pub branches: Vec<TransferBranch>,
}

/// Predicts the outcome at `target` from a solve result at the parameters
/// of `p`.
pub fn sensitivity_transfer(p: &ProblemInstance, result: &SolveResult, target: &ParamPair) -> Result<Transfer> {
    target.k.check_dim(p.dim())?;
    target.a.check_dim(p.dim())?;
    let h = p.g.h();
    let k = p.g.k();
    let k0 = &target.k;
    let interior = h.recession_interior_contains(k)?.and(h.recession_interior_contains(k0)?);
    let pointed_dir =
        |d: &Point| -> Result<TriBool> { Ok(h.recession_contains(d)?.and(h.recession_contains(&d.neg())?.not())) };
    let pointed = pointed_dir(k)?.and(pointed_dir(k0)?);
    let facts = p.f.facts();
    let convex_data = h.is_convex().and(facts.closed).and(facts.convex);
    let source_bounded = if result.is_optimal() { result.minimizers_bounded() } else { TriBool::False };

    let mut branches = Vec::new();
    let mut reasons = Vec::new();
    if matches!(result, SolveResult::UnboundedBelow { .. }) {
        if interior.is_true() {
            branches.push(TransferBranch::Unbounded);
        } else {
            reasons.push(format!("unbounded source but k, k⁰ ∈ int 0⁺H is {interior}"));
        }
    }
    if source_bounded.is_true() {
        if !convex_data.is_true() {
            reasons.push(format!("H convex and F closed convex is {convex_data}"));
        } else {
            if interior.is_true() {
                branches.push(TransferBranch::InteriorDirections);
            }
            if pointed.is_true() {
                let target_feasible = param_feasible(&p.f, h, target)?;
                if target_feasible {
                    branches.push(TransferBranch::PointedDirections);
                } else {
                    reasons.push("target has no feasible point".into());
                }
            }
            if !interior.is_true() && !pointed.is_true() {
                reasons.push(format!("k, k⁰ ∈ int 0⁺H is {interior}; k, k⁰ ∈ 0⁺H \\ (-0⁺H) is {pointed}"));
            }
        }
    } else if result.is_optimal() {
        reasons.push(format!("source minimizer set bounded is {source_bounded}"));
    }
    if !matches!(result, SolveResult::UnboundedBelow { .. }) && !result.is_optimal() {
        reasons.push(format!("source status {} supports no transfer", result.status_name()));
    }

    let prediction = if branches.contains(&TransferBranch::Unbounded) {
        Prediction::AllUnboundedOrEmptyFamily
    } else if !branches.is_empty() {
        Prediction::TargetNonemptyCompact
    } else {
        Prediction::NoPrediction(reasons.join("; "))
    };
    Ok(Transfer { prediction, branches })
}

/// Values of `a` in a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum ADomain {
    /// Grid on `{a_j = 0}` with the other coordinates in `[lo, hi]`.
    CoordinateZero {
        j: usize,
        lo: f64,
        hi: f64,
        resolution: usize,
    },
    /// Grid on `{Σ a_i = 0}`: the first `ℓ - 1` coordinates in `[lo, hi]`.
    SumZero {
        lo: f64,
        hi: f64,
        resolution: usize,
    },
    Explicit(Vec<Point>),
}

/// Directions `k` in a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum KDomain {
    /// Regular grid of the unit simplex with `resolution` steps per edge.
    Simplex {
        resolution: usize,
    },
    Explicit(Vec<Point>),
}

pub const DEFAULT_SIMPLEX_RESOLUTION: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub a_domain: ADomain,
    pub k_domain: KDomain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub a: Point,
    pub k: Point,
    /// Per-cell failures are kept as messages.
    pub result: std::result::Result<SolveResult, String>,
}

fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 || lo == hi {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn product(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    axes.iter().fold(vec![vec![]], |acc, vals| {
        acc.into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect()
    })
}

/// Values of `a` in grid order.
pub fn a_grid(domain: &ADomain, dim: usize) -> Result<Vec<Point>> {
    match domain {
        ADomain::CoordinateZero { j, lo, hi, resolution } => {
            if *j >= dim {
                return Err(Error::Precondition(format!("slice coordinate {j} out of range")));
            }
            let axes: Vec<Vec<f64>> =
                (0..dim).map(|i| if i == *j { vec![0.0] } else { axis(*lo, *hi, *resolution) }).collect();
            Ok(product(&axes).into_iter().map(Point::from).collect())
        }
        ADomain::SumZero { lo, hi, resolution } => {
            let axes = vec![axis(*lo, *hi, *resolution); dim - 1];
            Ok(product(&axes)
                .into_iter()
                .map(|mut v| {
                    let s: f64 = v.iter().sum();
                    v.push(-s);
                    Point::from(v)
                })
                .collect())
        }
        ADomain::Explicit(points) => {
            for p in points {
                p.check_dim(dim)?;
            }
            Ok(points.clone())
        }
    }
}

/// Admissible directions: `k ∈ 0⁺H`, `k ≠ 0`, `-k ∉ 0⁺H`.
pub fn k_grid(domain: &KDomain, h: &SetRep) -> Result<Vec<Point>> {
    let dim = h.dim();
    let candidates: Vec<Point> = match domain {
        KDomain::Simplex { resolution } => {
            let r = (*resolution).max(1);
            compositions(r, dim)
                .into_iter()
                .map(|c| Point::from(c.into_iter().map(|x| x as f64 / r as f64).collect::<Vec<_>>()))
                .collect()
        }
        KDomain::Explicit(points) => {
            for p in points {
                p.check_dim(dim)?;
            }
            points.clone()
        }
    };
    let mut out = Vec::new();
    for k in candidates {
        if k.is_zero() {
            continue;
        }
        if h.recession_contains(&k)?.is_true() && forbidden_direction(h, &k)?.is_false() {
            out.push(k);
        }
    }
    Ok(out)
}

/// All vectors of `parts` nonnegative integers summing to `n`.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .rev()
        .flat_map(|first| {
            compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Solves every `(a, k)` cell.  Rows are ordered by `a` first, then `k`.
pub fn sweep(f: &FeasibleSet, h: &SetRep, spec: &SweepSpec, options: EvalOptions) -> Result<Vec<SweepRow>> {
    if f.dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), got: f.dim() });
    }
    let a_values = a_grid(&spec.a_domain, h.dim())?;
    let k_values = k_grid(&spec.k_domain, h)?;
    if k_values.is_empty() {
        return Err(Error::Empty("no admissible direction k in the sweep".into()));
    }
    let cells: Vec<(Point, Point)> =
        a_values.iter().flat_map(|a| k_values.iter().map(move |k| (a.clone(), k.clone()))).collect();
    Ok(cells
        .into_par_iter()
        .map(|(a, k)| {
            let result = GerstewitzFunctional::new(a.clone(), h.clone(), k.clone())
                .map(|g| g.with_options(options))
                .and_then(|g| ProblemInstance::new(f.clone(), g))
                .and_then(|p| solve(&p))
                .map_err(|e| e.to_string());
            SweepRow { a, k, result }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::same_point_set;

    fn p<const N: usize>(v: [f64; N]) -> Point {
        Point::from(v)
    }

    fn triangle() -> FeasibleSet {
        let mut pts = Vec::new();
        for i in 0..=20 {
            for j in 0..=i {
                pts.push(p([i as f64 * 0.05, j as f64 * 0.05]));
            }
        }
        FeasibleSet::finite(pts).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_k(&p([1.0, 1.0])).unwrap(), p([0.5, 0.5]));
        assert_eq!(normalize_k(&p([2.0, 0.0, 2.0])).unwrap(), p([0.5, 0.0, 0.5]));
        assert!(matches!(normalize_k(&p([1.0, -1.0])), Err(Error::NotNormalizable)));
    }

    #[test]
    fn shift_examples() {
        let a = p([3.0, 1.0]);
        let k = p([1.0, 1.0]);
        assert_eq!(shift_a(&a, &k, ShiftMode::CoordinateZero(0)).unwrap(), Shift { a_new: p([0.0, -2.0]), c: -3.0 });
        assert_eq!(shift_a(&a, &k, ShiftMode::SumZero).unwrap(), Shift { a_new: p([1.0, -1.0]), c: -2.0 });
        assert_eq!(shift_a(&a, &k, ShiftMode::SignNonneg).unwrap(), Shift { a_new: p([2.0, 0.0]), c: -1.0 });
        assert_eq!(shift_a(&a, &k, ShiftMode::SignNonpos).unwrap(), Shift { a_new: p([0.0, -2.0]), c: -3.0 });
        let neg = shift_a(&a, &k.neg(), ShiftMode::SignNonneg).unwrap();
        assert_eq!(neg.a_new, p([2.0, 0.0]));
        assert!(shift_a(&a, &p([1.0, 0.0]), ShiftMode::CoordinateZero(1)).is_err());
        assert!(shift_a(&a, &p([1.0, -1.0]), ShiftMode::SignNonneg).is_err());
    }

    #[test]
    fn forbidden_examples() {
        let hp = SetRep::builtin("halfplane_x_2d").unwrap();
        assert_eq!(forbidden_direction(&hp, &p([0.0, 1.0])).unwrap(), TriBool::True);
        assert_eq!(forbidden_direction(&SetRep::orthant(2), &p([1.0, 1.0])).unwrap(), TriBool::False);
        assert_eq!(forbidden_direction(&SetRep::orthant(2), &p([1.0, 0.0])).unwrap(), TriBool::False);
    }

    #[test]
    fn feasibility_examples() {
        let pair = ParamPair::new(p([-1.0, 0.0]), p([1.0, 1.0])).unwrap();
        assert!(param_feasible(&triangle(), &SetRep::orthant(2), &pair).unwrap());
        let hp = SetRep::builtin("halfplane_x_2d").unwrap();
        let f = FeasibleSet::finite(vec![p([1.0, 0.0])]).unwrap();
        let pair = ParamPair::new(p([0.0, 0.0]), p([0.0, 1.0])).unwrap();
        assert!(!param_feasible(&f, &hp, &pair).unwrap());
        let grid = FeasibleSet::grid(p([1.0, -1.0]), p([2.0, 1.0]), 4, None).unwrap();
        assert!(!param_feasible(&grid, &hp, &pair).unwrap());
        let pair = ParamPair::new(p([3.0, 0.0]), p([0.0, 1.0])).unwrap();
        assert!(param_feasible(&grid, &hp, &pair).unwrap());
    }

    #[test]
    fn scaling_and_shifting_keep_minimizers() {
        let f = triangle();
        let g = GerstewitzFunctional::new(p([0.3, -0.2]), SetRep::orthant(2), p([1.0, 2.0])).unwrap();
        let base = solve(&ProblemInstance::new(f.clone(), g.clone()).unwrap()).unwrap();
        for lambda in [0.5, 3.0] {
            let g2 = g.reparameterize(g.a().clone(), g.k().scale(lambda)).unwrap();
            let r = solve(&ProblemInstance::new(f.clone(), g2).unwrap()).unwrap();
            assert!(same_point_set(base.minimizers(), r.minimizers(), 1e-9));
            assert!((r.t_star().unwrap() - base.t_star().unwrap() / lambda).abs() < 1e-12);
        }
        for c in [-2.0, 0.7] {
            let g2 = g.reparameterize(g.a().axpy(c, g.k()), g.k().clone()).unwrap();
            let r = solve(&ProblemInstance::new(f.clone(), g2).unwrap()).unwrap();
            assert!(same_point_set(base.minimizers(), r.minimizers(), 1e-9));
            assert!((r.t_star().unwrap() - (base.t_star().unwrap() - c)).abs() < 1e-12);
        }
    }

    #[test]
    fn transfer_unbounded_family() {
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::orthant(2), p([1.0, 1.0])).unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("neg_diagonal").unwrap(), g).unwrap();
        let r = solve(&pr).unwrap();
        assert!(matches!(r, SolveResult::UnboundedBelow { .. }));
        let target = ParamPair::new(p([0.0, 0.0]), p([2.0, 1.0])).unwrap();
        let t = sensitivity_transfer(&pr, &r, &target).unwrap();
        assert_eq!(t.prediction, Prediction::AllUnboundedOrEmptyFamily);
        for b in [p([1.0, 0.0]), p([-3.0, 2.0])] {
            let g = GerstewitzFunctional::new(b, SetRep::orthant(2), p([2.0, 1.0])).unwrap();
            let r = solve(&pr.with_functional(g)).unwrap();
            assert!(!r.is_optimal());
        }
    }

    #[test]
    fn transfer_orthant_segment() {
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::orthant(2), p([1.0, 1.0])).unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("orthant_ex618").unwrap(), g).unwrap();
        let r = solve(&pr).unwrap();
        assert_eq!(r.minimizers(), &[p([0.0, 0.0])]);
        let target = ParamPair::new(p([1.0, 0.0]), p([1.0, 1.0])).unwrap();
        let t = sensitivity_transfer(&pr, &r, &target).unwrap();
        assert_eq!(t.prediction, Prediction::TargetNonemptyCompact);
        assert!(t.branches.contains(&TransferBranch::InteriorDirections));
        assert!(t.branches.contains(&TransferBranch::PointedDirections));
    }

    #[test]
    fn transfer_needs_interior_or_convexity() {
        let h = SetRep::builtin("parabola_epi_2d").unwrap();
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), h, p([0.0, 1.0])).unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("parabola_arc_ex617").unwrap(), g).unwrap();
        let r = solve(&pr).unwrap();
        let target = ParamPair::new(p([1.0, 0.0]), p([0.0, 1.0])).unwrap();
        let t = sensitivity_transfer(&pr, &r, &target).unwrap();
        assert!(matches!(t.prediction, Prediction::NoPrediction(_)));
    }

    #[test]
    fn simplex_grid() {
        let ks = k_grid(&KDomain::Simplex { resolution: 4 }, &SetRep::orthant(2)).unwrap();
        assert_eq!(ks.len(), 5);
        assert!(ks.iter().all(|k| (k.sum() - 1.0).abs() < 1e-15));
        let hp = SetRep::builtin("halfplane_x_2d").unwrap();
        let ks = k_grid(&KDomain::Simplex { resolution: 4 }, &hp).unwrap();
        // (0, 1) is a line direction of the half-plane
        assert_eq!(ks.len(), 4);
        assert_eq!(compositions(3, 3).len(), 10);
    }

    #[test]
    fn single_cell_sweep() {
        let spec = SweepSpec {
            a_domain: ADomain::Explicit(vec![p([-1.0, 0.0])]),
            k_domain: KDomain::Explicit(vec![p([1.0, 1.0])]),
        };
        let rows = sweep(&triangle(), &SetRep::orthant(2), &spec, EvalOptions::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].result.as_ref().unwrap().t_star(), Some(1.0));
    }

    #[test]
    fn infeasible_sweep_and_empty_directions() {
        let hp = SetRep::builtin("halfplane_x_2d").unwrap();
        let f = FeasibleSet::finite(vec![p([1.0, 0.0]), p([2.0, 3.0])]).unwrap();
        let spec = SweepSpec {
            a_domain: ADomain::CoordinateZero { j: 1, lo: -2.0, hi: 0.0, resolution: 5 },
            k_domain: KDomain::Explicit(vec![p([0.0, 1.0]), p([0.0, -2.0])]),
        };
        // both directions lie on the line of the boundary, so none is admissible
        assert!(matches!(sweep(&f, &hp, &spec, EvalOptions::default()), Err(Error::Empty(_))));
        // with k = (0, 1) the row y1 >= 0 never moves, and every a1 <= 0
        // leaves both points outside
        let spec = SweepSpec {
            a_domain: ADomain::CoordinateZero { j: 1, lo: -2.0, hi: 0.0, resolution: 5 },
            k_domain: KDomain::Explicit(vec![p([0.0, 1.0])]),
        };
        let rows = sweep(&f, &SetRep::orthant(2), &spec, EvalOptions::default()).unwrap();
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| matches!(r.result, Ok(SolveResult::Infeasible { .. }))));
        assert_eq!(rows[0].a, p([-2.0, 0.0]));
    }

    #[test]
    fn sum_zero_grid() {
        let a = a_grid(&ADomain::SumZero { lo: -1.0, hi: 1.0, resolution: 3 }, 3).unwrap();
        assert_eq!(a.len(), 9);
        assert!(a.iter().all(|x| x.sum().abs() < 1e-15));
    }
}
