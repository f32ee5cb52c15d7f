//! The scalar problem `min_{y ∈ F} phi_{a-H,k}(y)`.
//!
//! Finite sets are solved exactly by enumeration.  Sampled sets are solved
//! on a regular parameter grid followed by local refinement; for unbounded
//! sets the parameter range is doubled three times to tell an attained
//! minimum from a decreasing incumbent.

mod curves;
mod feasible;
mod relations;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functional::{Certainty, ExtendedReal, GerstewitzFunctional, PhiStatus};
use crate::geometry::{Point, SetRep, TriBool};

pub use curves::BuiltinCurve;
pub use feasible::{FeasibleFacts, FeasibleSet, DEFAULT_CURVE_DENSITY, DEFAULT_CURVE_RANGE};
pub use relations::{
    boundary_equivalence_check, minkowski_sum_relations, restrict_to_level, BoundaryCheck, MinkowskiReport,
};

use feasible::Sample;

const REFINE_ROUNDS: usize = 3;
const REFINE_FACTOR: f64 = 4.0;
const MAX_REFINE_CENTERS: usize = 64;
const RANGE_DOUBLINGS: usize = 3;

/// Optional data for the polyhedral separation certificate: a polyhedral
/// cone `C`, a point `z` of `H` and a shift `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationHint {
    pub cone: SetRep,
    pub z: Point,
    pub u: Point,
}

/// The quadruple `(F, a, H, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub f: FeasibleSet,
    pub g: GerstewitzFunctional,
    pub separation: Option<SeparationHint>,
}

impl ProblemInstance {
    pub fn new(f: FeasibleSet, g: GerstewitzFunctional) -> Result<Self> {
        if f.dim() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: f.dim() });
        }
        Ok(ProblemInstance { f, g, separation: None })
    }

    pub fn with_separation(mut self, hint: SeparationHint) -> Result<Self> {
        let dim = self.dim();
        if hint.cone.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: hint.cone.dim() });
        }
        hint.z.check_dim(dim)?;
        hint.u.check_dim(dim)?;
        self.separation = Some(hint);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// Same feasible set with the functional replaced.
    pub fn with_functional(&self, g: GerstewitzFunctional) -> Self {
        ProblemInstance { f: self.f.clone(), g, separation: self.separation.clone() }
    }
}

/// Outcome of a solve.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveResult {
    /// Minimum attained; minimizers are listed in input order.
    Optimal { t_star: f64, minimizers: Vec<Point>, exact: bool },
    /// No evaluated point has finite or `-inf` value.  For sampled sets the
    /// verdict only covers the sample.
    Infeasible { sample_relative: bool },
    /// The objective is `-inf` somewhere, or decreases without bound.
    UnboundedBelow { witness_t: f64, witness: Point },
    /// The incumbent keeps decreasing by shrinking amounts as the sampled
    /// range grows.
    InfimumNotAttained { inf_estimate: f64, evidence: Vec<(Point, f64)> },
    /// Minimum over a refined sample.  `cell_size` is the final node spacing
    /// in parameter coordinates.
    ApproximateOptimal { t_star: f64, cell_size: f64, minimizers: Vec<Point>, minimizers_bounded: TriBool },
}

impl SolveResult {
    pub fn status_name(&self) -> &'static str {
        match self {
            SolveResult::Optimal { .. } => "optimal",
            SolveResult::Infeasible { .. } => "infeasible",
            SolveResult::UnboundedBelow { .. } => "unbounded-below",
            SolveResult::InfimumNotAttained { .. } => "infimum-not-attained",
            SolveResult::ApproximateOptimal { .. } => "approximate-optimal",
        }
    }

    pub fn t_star(&self) -> Option<f64> {
        match self {
            SolveResult::Optimal { t_star, .. } | SolveResult::ApproximateOptimal { t_star, .. } => Some(*t_star),
            _ => None,
        }
    }

    pub fn minimizers(&self) -> &[Point] {
        match self {
            SolveResult::Optimal { minimizers, .. } | SolveResult::ApproximateOptimal { minimizers, .. } => minimizers,
            _ => &[],
        }
    }

    /// `Optimal` or `ApproximateOptimal`.
    pub fn is_optimal(&self) -> bool {
        self.t_star().is_some()
    }

    /// Whether the minimizer set is known to be bounded.
    pub fn minimizers_bounded(&self) -> TriBool {
        match self {
            SolveResult::Optimal { .. } => TriBool::True,
            SolveResult::ApproximateOptimal { minimizers_bounded, .. } => *minimizers_bounded,
            _ => TriBool::Unknown,
        }
    }
}

/// Tie tolerance for membership in the minimizer set.
///
/// `1e-9 (1 + |t|)`, widened to `2 tol` when values come from bisection.
pub fn eps_tie(t_star: f64, bracket: Option<f64>) -> f64 {
    let base = 1e-9 * (1.0 + t_star.abs());
    match bracket {
        Some(w) => base.max(2.0 * w),
        None => base,
    }
}

/// Symmetric point matching: every point of `a` is within `tol (1 + |y|)`
/// of some point of `b` and vice versa.
pub fn same_point_set(a: &[Point], b: &[Point], tol: f64) -> bool {
    let covered =
        |xs: &[Point], ys: &[Point]| xs.iter().all(|x| ys.iter().any(|y| x.dist_inf(y) <= tol * (1.0 + x.norm_inf())));
    covered(a, b) && covered(b, a)
}

/// Which objective a solve minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Objective {
    Phi,
    /// `inf { t : y ∈ a - bd H + t k }`.
    Boundary,
}

pub(crate) fn evaluate(g: &GerstewitzFunctional, y: &Point, obj: Objective) -> Result<PhiStatus> {
    let st = g.phi(y)?;
    if obj == Objective::Phi {
        return Ok(st);
    }
    let width = match st.certainty {
        Certainty::BracketedWithin(w) => Some(w),
        _ => None,
    };
    let value = match st.value {
        ExtendedReal::PosInf => ExtendedReal::PosInf,
        ExtendedReal::NegInf => {
            // the whole line lies in a - H; it meets the boundary iff some
            // point of it does
            if g.level_boundary_contains(y, 0.0)?.is_true() {
                ExtendedReal::NegInf
            } else {
                ExtendedReal::PosInf
            }
        }
        ExtendedReal::Finite(t) => {
            let on_boundary = g.level_boundary_contains(y, t)?.is_true()
                || width.is_some_and(|w| {
                    // a bracket [t - w, t] whose lower end is infeasible
                    // contains a boundary level
                    !g.level_contains(y, t - 2.0 * w).unwrap_or(true)
                });
            if on_boundary {
                ExtendedReal::Finite(t)
            } else {
                ExtendedReal::PosInf
            }
        }
    };
    Ok(PhiStatus { value, certainty: st.certainty })
}

fn evaluate_all(g: &GerstewitzFunctional, points: &[Point], obj: Objective) -> Result<Vec<PhiStatus>> {
    points.par_iter().map(|y| evaluate(g, y, obj)).collect()
}

fn bracket_width(statuses: &[PhiStatus]) -> Option<f64> {
    statuses
        .iter()
        .filter_map(|s| match s.certainty {
            Certainty::BracketedWithin(w) => Some(w),
            _ => None,
        })
        .reduce(f64::max)
}

/// Minimum over an evaluated list.
fn aggregate(points: &[Point], statuses: &[PhiStatus]) -> SolveResult {
    if let Some(i) = statuses.iter().position(|s| s.value == ExtendedReal::NegInf) {
        return SolveResult::UnboundedBelow { witness_t: f64::NEG_INFINITY, witness: points[i].clone() };
    }
    let finite: Vec<(usize, f64)> =
        statuses.iter().enumerate().filter_map(|(i, s)| s.value.finite().map(|v| (i, v))).collect();
    if finite.is_empty() {
        return SolveResult::Infeasible { sample_relative: false };
    }
    let t_star = finite.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min);
    let eps = eps_tie(t_star, bracket_width(statuses));
    let minimizers = finite.iter().filter(|(_, v)| *v <= t_star + eps).map(|(i, _)| points[*i].clone()).collect();
    let exact = statuses.iter().all(|s| s.certainty == Certainty::Exact);
    SolveResult::Optimal { t_star, minimizers, exact }
}

/// Solves over a finite feasible set by enumeration.
pub fn solve_finite(p: &ProblemInstance) -> Result<SolveResult> {
    solve_finite_with(p, Objective::Phi)
}

fn solve_finite_with(p: &ProblemInstance, obj: Objective) -> Result<SolveResult> {
    let FeasibleSet::FinitePoints(points) = &p.f else {
        return Err(Error::Precondition("solve_finite needs a finite feasible set".into()));
    };
    let statuses = evaluate_all(&p.g, points, obj)?;
    Ok(aggregate(points, &statuses))
}

/// Solves over a sampled feasible set.
pub fn solve_grid(p: &ProblemInstance) -> Result<SolveResult> {
    if p.f.is_finite() {
        return Err(Error::Precondition("solve_grid needs a grid or curve feasible set".into()));
    }
    solve_sampled(p, Objective::Phi)
}

/// Dispatches on the kind of feasible set.
pub fn solve(p: &ProblemInstance) -> Result<SolveResult> {
    solve_with(p, Objective::Phi)
}

pub(crate) fn solve_with(p: &ProblemInstance, obj: Objective) -> Result<SolveResult> {
    if p.f.is_finite() {
        solve_finite_with(p, obj)
    } else {
        solve_sampled(p, obj)
    }
}

struct Evaluated {
    samples: Vec<Sample>,
    statuses: Vec<PhiStatus>,
}

impl Evaluated {
    fn new(g: &GerstewitzFunctional, samples: Vec<Sample>, obj: Objective) -> Result<Self> {
        let statuses = samples.par_iter().map(|s| evaluate(g, &s.point, obj)).collect::<Result<_>>()?;
        Ok(Evaluated { samples, statuses })
    }

    fn neg_inf(&self) -> Option<&Point> {
        self.statuses.iter().position(|s| s.value == ExtendedReal::NegInf).map(|i| &self.samples[i].point)
    }

    /// Smallest finite value and its point.
    fn best(&self) -> Option<(f64, &Point)> {
        self.statuses
            .iter()
            .zip(&self.samples)
            .filter_map(|(s, x)| s.value.finite().map(|v| (v, &x.point)))
            .min_by(|a, b| a.0.total_cmp(&b.0))
    }
}

fn solve_sampled(p: &ProblemInstance, obj: Objective) -> Result<SolveResult> {
    let g = &p.g;
    let base = Evaluated::new(g, p.f.sample(1.0)?, obj)?;
    if let Some(y) = base.neg_inf() {
        return Ok(SolveResult::UnboundedBelow { witness_t: f64::NEG_INFINITY, witness: y.clone() });
    }
    let Some((t0, y0)) = base.best() else {
        return Ok(SolveResult::Infeasible { sample_relative: true });
    };

    if !p.f.is_bounded_sampler() {
        let mut trail = vec![(y0.clone(), t0)];
        for d in 1..=RANGE_DOUBLINGS {
            let ev = Evaluated::new(g, p.f.sample(f64::powi(2.0, d as i32))?, obj)?;
            if let Some(y) = ev.neg_inf() {
                return Ok(SolveResult::UnboundedBelow { witness_t: f64::NEG_INFINITY, witness: y.clone() });
            }
            let Some((t, y)) = ev.best() else { break };
            trail.push((y.clone(), t));
        }
        if let Some(verdict) = escalation_verdict(&trail, bracket_width(&base.statuses)) {
            return Ok(verdict);
        }
    }

    refine(p, base, obj)
}

/// Decides from the incumbents over growing ranges whether the minimum
/// escapes to infinity.
fn escalation_verdict(trail: &[(Point, f64)], bracket: Option<f64>) -> Option<SolveResult> {
    if trail.len() < RANGE_DOUBLINGS + 1 {
        return None;
    }
    let decrements: Vec<f64> = trail.windows(2).map(|w| w[0].1 - w[1].1).collect();
    let last = trail.last().expect("nonempty trail");
    // two bisection values differ from the true difference by at most one
    // bracket width each
    let threshold = 10.0 * eps_tie(last.1, None) + 2.0 * bracket.unwrap_or(0.0);
    if !decrements.iter().all(|d| *d > threshold) {
        return None;
    }
    let shrinking = decrements.windows(2).all(|w| w[1] < w[0]);
    Some(if shrinking {
        SolveResult::InfimumNotAttained { inf_estimate: last.1, evidence: trail.to_vec() }
    } else {
        SolveResult::UnboundedBelow { witness_t: last.1, witness: last.0.clone() }
    })
}

fn param_key(p: &[f64]) -> Vec<u64> {
    p.iter().map(|x| x.to_bits()).collect()
}

fn refine(p: &ProblemInstance, base: Evaluated, obj: Objective) -> Result<SolveResult> {
    let g = &p.g;
    let bx = p.f.param_box(1.0).unwrap_or_default();
    let mut h = p.f.spacing(1.0);
    let mut samples = base.samples;
    let mut statuses = base.statuses;
    let mut seen: std::collections::HashSet<Vec<u64>> =
        samples.iter().filter(|s| !s.params.is_empty()).map(|s| param_key(&s.params)).collect();

    let incumbent = |statuses: &[PhiStatus]| -> (f64, f64) {
        let t = statuses.iter().filter_map(|s| s.value.finite()).fold(f64::INFINITY, f64::min);
        (t, eps_tie(t, bracket_width(statuses)))
    };

    for _ in 0..REFINE_ROUNDS {
        if h.iter().all(|x| *x == 0.0) {
            break;
        }
        let (t, eps) = incumbent(&statuses);
        let tied: Vec<&Sample> = samples
            .iter()
            .zip(&statuses)
            .filter(|(s, st)| !s.params.is_empty() && st.value.finite().is_some_and(|v| v <= t + eps))
            .map(|(s, _)| s)
            .collect();
        let stride = tied.len().div_ceil(MAX_REFINE_CENTERS).max(1);
        let fine: Vec<f64> = h.iter().map(|x| x / REFINE_FACTOR).collect();
        let mut fresh = Vec::new();
        for c in tied.iter().step_by(stride) {
            let local: Vec<(f64, f64)> = c
                .params
                .iter()
                .zip(&h)
                .zip(&bx)
                .map(|((x, step), (lo, hi))| ((x - step).max(*lo), (x + step).min(*hi)))
                .collect();
            for q in local_nodes(&c.params, &fine, &local) {
                if seen.insert(param_key(&q)) {
                    if let Some(point) = p.f.map(&q)? {
                        fresh.push(Sample { params: q, point });
                    }
                }
            }
        }
        let ev = Evaluated::new(g, fresh, obj)?;
        if let Some(y) = ev.neg_inf() {
            return Ok(SolveResult::UnboundedBelow { witness_t: f64::NEG_INFINITY, witness: y.clone() });
        }
        samples.extend(ev.samples);
        statuses.extend(ev.statuses);
        h = fine;
    }

    let (t_star, eps) = incumbent(&statuses);
    let mut minimizers: Vec<Point> = Vec::new();
    for (s, st) in samples.iter().zip(&statuses) {
        if st.value.finite().is_some_and(|v| v <= t_star + eps) && !minimizers.contains(&s.point) {
            minimizers.push(s.point.clone());
        }
    }
    Ok(SolveResult::ApproximateOptimal {
        t_star,
        cell_size: h.iter().cloned().fold(0.0, f64::max),
        minimizers,
        minimizers_bounded: minimizers_bounded(p),
    })
}

/// Nodes `c + j * step` inside `local` for integer `j`.
fn local_nodes(center: &[f64], step: &[f64], local: &[(f64, f64)]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![vec![]];
    for ((c, s), (lo, hi)) in center.iter().zip(step).zip(local) {
        let mut vals = vec![*c];
        if *s > 0.0 {
            let reach = REFINE_FACTOR as i32;
            for j in 1..=reach {
                let up = c + j as f64 * s;
                let down = c - j as f64 * s;
                if up <= *hi {
                    vals.push(up);
                }
                if down >= *lo {
                    vals.push(down);
                }
            }
        }
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Boundedness of the minimizer set of a sampled problem.
///
/// A compact `F` settles it.  For `F = conv V + cone R` and polyhedral `H`
/// with rows `w_i`, the minimizer set lies in `F ∩ (a + t k - H)` whose
/// recession cone is `cone R ∩ (-0⁺H)`; if `c = Σ w_i` is positive on every
/// ray in `R` that intersection is `{0}`.
fn minimizers_bounded(p: &ProblemInstance) -> TriBool {
    let facts = p.f.facts();
    if facts.compact.is_true() {
        return TriBool::True;
    }
    let (Some((_, rays)), true) = (&facts.outer, facts.outer_exact) else {
        return TriBool::Unknown;
    };
    let Some(rows) = p.g.h().polyhedral_rows() else {
        return TriBool::Unknown;
    };
    let mut c = Point::zeros(p.dim());
    for r in rows.iter() {
        c = c.add(&r.normal.scale(1.0 / r.normal.norm2()));
    }
    if rays.iter().all(|r| c.dot(r) > 1e-12 * c.norm2() * r.norm2()) {
        TriBool::True
    } else {
        TriBool::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [f64; N]) -> Point {
        Point::from(v)
    }

    fn orthant_problem(f: FeasibleSet, a: Point) -> ProblemInstance {
        let g = GerstewitzFunctional::new(a, SetRep::orthant(2), p([1.0, 1.0])).unwrap();
        ProblemInstance::new(f, g).unwrap()
    }

    fn triangle_points(step: f64) -> Vec<Point> {
        let n = (1.0 / step).round() as usize;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=i {
                out.push(p([i as f64 * step, j as f64 * step]));
            }
        }
        out
    }

    #[test]
    fn triangle_finite() {
        let pr = orthant_problem(FeasibleSet::finite(triangle_points(0.05)).unwrap(), p([-1.0, 0.0]));
        let r = solve_finite(&pr).unwrap();
        assert_eq!(r, SolveResult::Optimal { t_star: 1.0, minimizers: vec![p([0.0, 0.0])], exact: true });
    }

    #[test]
    fn singleton_apex() {
        let a = p([0.7, -0.2]);
        let pr = orthant_problem(FeasibleSet::finite(vec![a.clone()]).unwrap(), a.clone());
        let r = solve(&pr).unwrap();
        assert_eq!(r.t_star(), Some(0.0));
        assert_eq!(r.minimizers(), &[a]);
    }

    #[test]
    fn segment_minimizers() {
        let f = FeasibleSet::finite(vec![p([1.0, 0.0]), p([0.5, 0.0]), p([0.0, 0.0]), p([1.0, -1.0])]).unwrap();
        let r = solve(&orthant_problem(f, p([1.0, 0.0]))).unwrap();
        assert_eq!(r.t_star(), Some(0.0));
        // (1,-1) lies in b - H as well: phi = max(0, -1) = 0
        assert_eq!(r.minimizers(), &[p([1.0, 0.0]), p([0.5, 0.0]), p([0.0, 0.0]), p([1.0, -1.0])]);

        let f = FeasibleSet::finite(vec![p([1.0, 0.0]), p([0.5, 0.0]), p([0.0, 0.0]), p([1.0, 1.0])]).unwrap();
        let r = solve(&orthant_problem(f, p([1.0, 0.0]))).unwrap();
        assert_eq!(r.minimizers(), &[p([1.0, 0.0]), p([0.5, 0.0]), p([0.0, 0.0])]);
    }

    #[test]
    fn infeasible_and_unbounded_finite() {
        let hx = SetRep::builtin("halfplane_x_2d").unwrap();
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), hx, p([0.0, 1.0])).unwrap();
        let pr = ProblemInstance::new(FeasibleSet::finite(vec![p([1.0, 0.0])]).unwrap(), g.clone()).unwrap();
        assert_eq!(solve(&pr).unwrap(), SolveResult::Infeasible { sample_relative: false });
        let pr = ProblemInstance::new(FeasibleSet::finite(vec![p([1.0, 0.0]), p([-2.0, 3.0])]).unwrap(), g).unwrap();
        assert!(
            matches!(solve(&pr).unwrap(), SolveResult::UnboundedBelow { witness, .. } if witness == p([-2.0, 3.0]))
        );
    }

    #[test]
    fn triangle_grid() {
        let f = FeasibleSet::curve("triangle_ex311", 2.0, 101).unwrap();
        let r = solve_grid(&orthant_problem(f, p([-1.0, 0.0]))).unwrap();
        let SolveResult::ApproximateOptimal { t_star, minimizers, .. } = r else { panic!("{r:?}") };
        assert!((t_star - 1.0).abs() <= 0.02);
        assert_eq!(minimizers, vec![p([0.0, 0.0])]);
    }

    #[test]
    fn hyperbola_branch_not_attained() {
        let hx = SetRep::builtin("halfplane_x_2d").unwrap();
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), hx, p([1.0, 1.0])).unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("hyperbola_branch_ex613").unwrap(), g).unwrap();
        let r = solve(&pr).unwrap();
        let SolveResult::InfimumNotAttained { inf_estimate, evidence } = r else { panic!("{r:?}") };
        assert!(inf_estimate > 0.0 && inf_estimate < 0.05);
        assert!(evidence.windows(2).all(|w| w[1].1 < w[0].1));
    }

    #[test]
    fn negative_diagonal_unbounded() {
        let f = FeasibleSet::curve_default("neg_diagonal").unwrap();
        let r = solve(&orthant_problem(f, p([0.0, 0.0]))).unwrap();
        assert!(matches!(r, SolveResult::UnboundedBelow { witness_t, .. } if witness_t <= -31.0), "{r:?}");
    }

    #[test]
    fn orthant_curve_bounded_minimizers() {
        let f = FeasibleSet::curve_default("orthant_ex618").unwrap();
        let r = solve(&orthant_problem(f, p([0.0, 0.0]))).unwrap();
        assert_eq!(r.minimizers(), &[p([0.0, 0.0])]);
        assert_eq!(r.minimizers_bounded(), TriBool::True);
    }

    #[test]
    fn tie_tolerance() {
        assert_eq!(eps_tie(0.0, None), 1e-9);
        assert_eq!(eps_tie(1.0, Some(1e-9)), 2e-9);
    }

    #[test]
    fn point_set_matching() {
        let a = vec![p([0.0, 0.0]), p([1.0, 0.0])];
        let b = vec![p([1.0, 1e-12]), p([0.0, 0.0])];
        assert!(same_point_set(&a, &b, 1e-9));
        assert!(!same_point_set(&a, &b[..1], 1e-9));
    }
}
