//! Reformulations of the scalar problem that keep value and minimizers.

use crate::error::{Error, Result};
use crate::geometry::{Point, TriBool};

use super::{eps_tie, same_point_set, solve, solve_with, FeasibleSet, Objective, ProblemInstance, SolveResult};

/// Comparison of the problem over `a - H + t k` with the problem over
/// `a - bd H + t k`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCheck {
    pub agrees: bool,
    pub t_full: Option<f64>,
    pub t_boundary: Option<f64>,
    pub full: SolveResult,
    pub boundary: SolveResult,
}

/// Whether two solve results describe the same outcome.
pub(crate) fn results_agree(a: &SolveResult, b: &SolveResult) -> bool {
    if std::mem::discriminant(a) != std::mem::discriminant(b) {
        return false;
    }
    match (a.t_star(), b.t_star()) {
        (Some(ta), Some(tb)) => {
            let eps = eps_tie(ta, Some(1e-9));
            (ta - tb).abs() <= 2.0 * eps && same_point_set(a.minimizers(), b.minimizers(), eps)
        }
        _ => true,
    }
}

/// Solves with membership in `a - H + t k` replaced by membership in
/// `a - bd H + t k` and compares with the ordinary solve.
pub fn boundary_equivalence_check(p: &ProblemInstance) -> Result<BoundaryCheck> {
    let full = solve(p)?;
    let boundary = solve_with(p, Objective::Boundary)?;
    Ok(BoundaryCheck {
        agrees: results_agree(&full, &boundary),
        t_full: full.t_star(),
        t_boundary: boundary.t_star(),
        full,
        boundary,
    })
}

/// Replaces `F` by `F ∩ (a - H + t0 k)`.
///
/// Fails when no (sampled) point of `F` is feasible at level `t0`.
pub fn restrict_to_level(p: &ProblemInstance, t0: f64) -> Result<ProblemInstance> {
    if !t0.is_finite() {
        return Err(Error::Precondition("level must be finite".into()));
    }
    let f = match &p.f {
        FeasibleSet::FinitePoints(points) => {
            let mut kept = Vec::new();
            for y in points {
                if p.g.level_contains(y, t0)? {
                    kept.push(y.clone());
                }
            }
            if kept.is_empty() {
                return Err(no_point_at(t0));
            }
            FeasibleSet::FinitePoints(kept)
        }
        other => {
            let restricted =
                FeasibleSet::Restricted { base: Box::new(other.clone()), level: Box::new(p.g.clone()), t0 };
            if restricted.sample(1.0)?.is_empty() {
                return Err(no_point_at(t0));
            }
            restricted
        }
    };
    Ok(ProblemInstance { f, g: p.g.clone(), separation: p.separation.clone() })
}

fn no_point_at(t0: f64) -> Error {
    Error::Precondition(format!("no feasible point at level t0 = {t0}"))
}

/// Comparison of the problems over `F` and over `F + S` for a sample
/// `S ⊆ H` that always includes `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiReport {
    pub same_value: bool,
    /// `M_F ⊆ M_{F+S}` and every minimizer over `F + S` lies in `M_F + H`.
    pub inclusion_chain_holds: bool,
    pub over_f: SolveResult,
    pub over_sum: SolveResult,
}

pub fn minkowski_sum_relations(p: &ProblemInstance, h_sample: &[Point]) -> Result<MinkowskiReport> {
    let FeasibleSet::FinitePoints(points) = &p.f else {
        return Err(Error::Precondition("minkowski_sum_relations needs a finite feasible set".into()));
    };
    let h = p.g.h();
    for s in h_sample {
        if !h.contains(s)? {
            return Err(Error::Precondition(format!("sample point {s} is not in H")));
        }
    }
    if !(h.is_cone().is_true() && h.is_convex().is_true()) {
        return Err(Error::Precondition("H + H ⊆ H could not be verified: H is not a convex cone".into()));
    }

    let zero = Point::zeros(p.dim());
    let mut shifts = vec![zero.clone()];
    shifts.extend(h_sample.iter().filter(|s| **s != zero).cloned());
    let mut sums: Vec<Point> = Vec::new();
    for y in points {
        for s in &shifts {
            let q = y.add(s);
            if !sums.contains(&q) {
                sums.push(q);
            }
        }
    }

    let over_f = solve(p)?;
    let over_sum = solve(&ProblemInstance { f: FeasibleSet::FinitePoints(sums), ..p.clone() })?;

    let same_value = results_agree_in_value(&over_f, &over_sum);
    let inclusion_chain_holds = match (&over_f, &over_sum) {
        (SolveResult::Optimal { minimizers: mf, t_star, .. }, SolveResult::Optimal { minimizers: ms, .. }) => {
            let tol = eps_tie(*t_star, None);
            let first = mf.iter().all(|m| ms.iter().any(|x| x.dist_inf(m) <= tol * (1.0 + m.norm_inf())));
            let mut second = true;
            for x in ms {
                let mut hit = TriBool::False;
                for m in mf {
                    hit = hit.or(h.contains(&x.sub(m))?.into());
                }
                second &= hit.is_true();
            }
            first && second
        }
        _ => std::mem::discriminant(&over_f) == std::mem::discriminant(&over_sum),
    };
    Ok(MinkowskiReport { same_value, inclusion_chain_holds, over_f, over_sum })
}

fn results_agree_in_value(a: &SolveResult, b: &SolveResult) -> bool {
    match (a.t_star(), b.t_star()) {
        (Some(ta), Some(tb)) => (ta - tb).abs() <= 2.0 * eps_tie(ta, None),
        (None, None) => std::mem::discriminant(a) == std::mem::discriminant(b),
        _ => false,
    }
}
