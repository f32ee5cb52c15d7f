//! Sufficient conditions for a nonempty compact minimizer set.
//!
//! Every rule is a conjunction of hypotheses evaluated as [`TriBool`].  A
//! rule certifies existence only when all of its hypotheses are `True`;
//! `Unknown` never counts as satisfied.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::functional::{Certainty, ExtendedReal, PhiStatus};
use crate::geometry::{Point, SetRep, TriBool};
use crate::solver::{evaluate, FeasibleFacts, FeasibleSet, Objective, ProblemInstance};

/// Number of boundary samples drawn from `H` for the separation test.
pub const SEPARATION_SAMPLES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Nec,
    CompactLevel,
    CompactFFinite,
    Core,
    CompactFCases,
    BoundedBelowLines,
    PointedCone,
    BoundedBelowCases,
    ConvexStrict,
    ConeKNotNeg,
    PolyhedralSep,
}

impl RuleId {
    pub const ALL: [RuleId; 11] = [
        RuleId::Nec,
        RuleId::CompactLevel,
        RuleId::CompactFFinite,
        RuleId::Core,
        RuleId::CompactFCases,
        RuleId::BoundedBelowLines,
        RuleId::PointedCone,
        RuleId::BoundedBelowCases,
        RuleId::ConvexStrict,
        RuleId::ConeKNotNeg,
        RuleId::PolyhedralSep,
    ];

    /// Order in which [`existence_report`] tries the sufficient rules: rules
    /// with the most specific hypotheses come first.
    pub const SEARCH_ORDER: [RuleId; 10] = [
        RuleId::PointedCone,
        RuleId::ConeKNotNeg,
        RuleId::ConvexStrict,
        RuleId::BoundedBelowLines,
        RuleId::BoundedBelowCases,
        RuleId::PolyhedralSep,
        RuleId::Core,
        RuleId::CompactFFinite,
        RuleId::CompactFCases,
        RuleId::CompactLevel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RuleId::Nec => "R-nec",
            RuleId::CompactLevel => "R-compact-level",
            RuleId::CompactFFinite => "R-compactF-finite",
            RuleId::Core => "R-core",
            RuleId::CompactFCases => "R-compactF-cases",
            RuleId::BoundedBelowLines => "R-boundedbelow-lines",
            RuleId::PointedCone => "R-pointed-cone",
            RuleId::BoundedBelowCases => "R-boundedbelow-cases",
            RuleId::ConvexStrict => "R-convex-strict",
            RuleId::ConeKNotNeg => "R-cone-knotneg",
            RuleId::PolyhedralSep => "R-polyhedral-sep",
        }
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL.into_iter().find(|r| r.id() == s).ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub name: String,
    pub value: TriBool,
    pub detail: Option<String>,
}

impl Hypothesis {
    fn new(name: &str, value: TriBool) -> Self {
        Hypothesis { name: name.to_string(), value, detail: None }
    }

    fn with_detail(name: &str, value: TriBool, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.to_string(), value, detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleCheck {
    pub rule: RuleId,
    pub value: TriBool,
    pub hypotheses: Vec<Hypothesis>,
}

impl RuleCheck {
    fn new(rule: RuleId, hypotheses: Vec<Hypothesis>) -> Self {
        let value = TriBool::all(hypotheses.iter().map(|h| h.value));
        RuleCheck { rule, value, hypotheses }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    GuaranteedNonemptyCompact(RuleId),
    NecessaryConditionFails(String),
    NoRuleApplies,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExistenceReport {
    pub verdict: Verdict,
    /// Every rule, `R-nec` first, then in search order.
    pub checks: Vec<RuleCheck>,
}

impl ExistenceReport {
    pub fn check(&self, rule: RuleId) -> Option<&RuleCheck> {
        self.checks.iter().find(|c| c.rule == rule)
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, Verdict::GuaranteedNonemptyCompact(_))
    }
}

/// The two necessary conditions for `M ≠ ∅`.
#[derive(Debug, Clone, PartialEq)]
pub struct NecessaryConditions {
    /// `F ∩ (a - H + R k) ≠ ∅`.
    pub feasible: TriBool,
    /// `F ∩ (a - H + t k) = ∅` for some `t`.
    pub some_level_empty: TriBool,
    /// A level `t` at which the intersection is empty, when known.
    pub witness_t: Option<f64>,
}

/// Evaluated problem data shared by all rule checks.
struct Ctx<'a> {
    p: &'a ProblemInstance,
    facts: FeasibleFacts,
    points: Vec<Point>,
    values: Vec<PhiStatus>,
    exact_f: bool,
    finite_valued: TriBool,
}

impl<'a> Ctx<'a> {
    fn new(p: &'a ProblemInstance) -> Result<Self> {
        let points: Vec<Point> = match &p.f {
            FeasibleSet::FinitePoints(pts) => pts.clone(),
            other => other.sample(1.0)?.into_iter().map(|s| s.point).collect(),
        };
        let values = points.iter().map(|y| evaluate(&p.g, y, Objective::Phi)).collect::<Result<Vec<_>>>()?;
        Ok(Ctx {
            p,
            facts: p.f.facts(),
            points,
            values,
            exact_f: p.f.is_finite(),
            finite_valued: p.g.properness_report().finite_valued,
        })
    }

    fn h(&self) -> &SetRep {
        self.p.g.h()
    }

    fn k(&self) -> &Point {
        self.p.g.k()
    }

    fn dim(&self) -> usize {
        self.p.dim()
    }

    fn f_nonempty(&self) -> Hypothesis {
        Hypothesis::new("F nonempty", self.facts.nonempty)
    }

    fn f_closed(&self) -> Hypothesis {
        Hypothesis::new("F closed", self.facts.closed)
    }

    fn f_compact(&self) -> Hypothesis {
        Hypothesis::new("F compact", self.facts.compact)
    }

    fn f_bounded_below(&self) -> Hypothesis {
        let name = "F ⊆ u + R^ℓ_+";
        match (&self.facts.lower_bound, self.facts.bounded_below) {
            (Some(u), TriBool::True) => Hypothesis::with_detail(name, TriBool::True, format!("u = {u}")),
            (_, TriBool::False) => Hypothesis::with_detail(name, TriBool::False, "F is not bounded below"),
            (_, v) => Hypothesis::new(name, v),
        }
    }

    /// `(P)` has a feasible solution.
    fn feasible(&self) -> TriBool {
        if self.values.iter().any(|s| s.value != ExtendedReal::PosInf) {
            return TriBool::True;
        }
        if self.exact_f {
            return TriBool::False;
        }
        if self.facts.nonempty.is_true() && self.finite_valued.is_true() {
            TriBool::True
        } else {
            TriBool::Unknown
        }
    }

    fn feasible_hyp(&self) -> Hypothesis {
        Hypothesis::new("problem has a feasible solution", self.feasible())
    }

    /// Lower bound of `phi` on `F` from the polyhedral rows of `H` and the
    /// declared facts of `F`.
    ///
    /// For a row `<w, h> >= b` with `<w, k> > 0`,
    /// `phi(y) >= (b - <w, a> + <w, y>) / <w, k>`.
    fn phi_lower_bound(&self) -> Option<f64> {
        let rows = self.h().polyhedral_rows()?;
        let a = self.p.g.a();
        let k = self.k();
        rows.iter()
            .filter(|r| r.value(k) > 1e-12 * r.normal.norm2() * k.norm2())
            .filter_map(|r| {
                let lb = self.facts.linear_lower_bound(&r.normal)?;
                Some((r.offset - r.value(a) + lb) / r.value(k))
            })
            .reduce(f64::max)
    }

    fn necessary(&self, t_lo: f64) -> NecessaryConditions {
        let feasible = self.feasible();
        if self.values.iter().any(|s| s.value == ExtendedReal::NegInf) {
            return NecessaryConditions { feasible, some_level_empty: TriBool::False, witness_t: None };
        }
        let bound = if self.exact_f {
            let min = self.values.iter().filter_map(|s| s.value.finite()).fold(f64::INFINITY, f64::min);
            Some(min)
        } else {
            self.phi_lower_bound()
        };
        match bound {
            Some(b) => {
                let witness = if b > t_lo {
                    t_lo
                } else if b.is_finite() {
                    b - 1.0
                } else {
                    t_lo
                };
                NecessaryConditions { feasible, some_level_empty: TriBool::True, witness_t: Some(witness) }
            }
            None => NecessaryConditions { feasible, some_level_empty: TriBool::Unknown, witness_t: None },
        }
    }

    fn orthant_in_recession(&self) -> Result<Hypothesis> {
        let mut v = TriBool::True;
        for j in 0..self.dim() {
            v = v.and(self.h().recession_contains(&Point::unit(self.dim(), j))?);
        }
        Ok(Hypothesis::new("R^ℓ_+ ⊆ 0⁺H", v))
    }

    fn orthant_in_h(&self) -> Result<Hypothesis> {
        let mut v = TriBool::True;
        for j in 0..self.dim() {
            v = v.and(self.h().contains(&Point::unit(self.dim(), j))?.into());
        }
        // for a convex cone, containing the unit vectors means containing R^ℓ_+
        Ok(Hypothesis::new("R^ℓ_+ ⊆ H", v.and(self.h().is_cone()).and(self.h().is_convex())))
    }

    fn cone_hyp(&self) -> Hypothesis {
        Hypothesis::new("H nontrivial closed pointed convex cone", self.h().is_nontrivial_pointed_convex_cone())
    }

    fn k_in_int_recession(&self) -> Result<Hypothesis> {
        Ok(Hypothesis::new("k ∈ int 0⁺H", self.h().recession_interior_contains(self.k())?))
    }

    fn k_not_in_neg_recession(&self) -> Result<TriBool> {
        Ok(self.h().recession_contains(&self.k().neg())?.not())
    }

    fn no_axis_lines(&self) -> Result<Hypothesis> {
        let mut v = TriBool::True;
        let mut witness = Vec::new();
        for j in 0..self.dim() {
            let e = Point::unit(self.dim(), j);
            let line = self.h().contains_line_in_direction(&e)?;
            if line.is_true() {
                witness.push(e.to_string());
            }
            v = v.and(line.not());
        }
        let name = "H contains no line in any direction e^j";
        Ok(if witness.is_empty() {
            Hypothesis::new(name, v)
        } else {
            Hypothesis::with_detail(name, v, format!("H contains a line in direction {}", witness.join(", ")))
        })
    }

    /// `F ∩ (a - H) = ∅`, i.e. `phi > 0` on `F`.
    fn case_disjoint(&self) -> TriBool {
        let mut all_positive = true;
        for s in &self.values {
            match s.value {
                ExtendedReal::PosInf => {}
                ExtendedReal::NegInf => return TriBool::False,
                ExtendedReal::Finite(v) => {
                    let slack = match s.certainty {
                        Certainty::BracketedWithin(w) => 2.0 * w,
                        _ => 0.0,
                    };
                    if v <= 0.0 {
                        return TriBool::False;
                    }
                    if v <= slack {
                        all_positive = false;
                    }
                }
            }
        }
        if self.exact_f {
            return if all_positive { TriBool::True } else { TriBool::Unknown };
        }
        match self.phi_lower_bound() {
            Some(b) if b > 0.0 => TriBool::True,
            _ => TriBool::Unknown,
        }
    }

    /// `F ∩ (a - int H) = ∅`.
    fn case_disjoint_interior(&self) -> Result<TriBool> {
        let a = self.p.g.a();
        let mut v = TriBool::True;
        for y in &self.points {
            v = v.and(self.h().interior_contains(&a.sub(y))?.not());
            if v.is_false() {
                return Ok(v);
            }
        }
        Ok(if self.exact_f { v } else { v.and(TriBool::Unknown) })
    }

    /// Cases (i)-(iii), and (iv) when `with_convex`.
    fn cases(&self, with_convex: bool) -> Result<Hypothesis> {
        let h = self.h();
        let k = self.k();
        let i = self.case_disjoint();
        let ii = self.case_disjoint_interior()?.and(h.shift_into_interior(k)?);
        let iii = h.contains_line_in_direction(k)?.not();
        let mut parts = vec![
            ("F ∩ (a - H) = ∅", i),
            ("F ∩ (a - int H) = ∅ and H + R_> k ⊆ int H", ii),
            ("no line of H parallel to k", iii),
        ];
        if with_convex {
            parts.push(("H convex and k ∉ -0⁺H", h.is_convex().and(self.k_not_in_neg_recession()?)));
        }
        let v = TriBool::any(parts.iter().map(|(_, v)| *v));
        let detail = parts.iter().map(|(n, v)| format!("{n}: {v}")).collect::<Vec<_>>().join("; ");
        Ok(Hypothesis::with_detail("one of the case conditions", v, detail))
    }

    fn separation(&self) -> Result<Vec<Hypothesis>> {
        let Some(hint) = &self.p.separation else {
            return Ok(vec![Hypothesis::with_detail(
                "separating polyhedral cone C with z, u",
                TriBool::Unknown,
                "no separation data supplied",
            )]);
        };
        let cone_rows = polyhedral_cone_rows(&hint.cone)?;
        let z_in_h = self.h().contains(&hint.z)?;
        let d_side = shifted_set_in_cone(self.h(), &hint.z, &hint.cone)?;
        let mut f_side = TriBool::Unknown;
        if let Some((v, r)) = &self.facts.outer {
            let separated = cone_rows
                .iter()
                .any(|w| v.iter().all(|x| w.dot(&x.sub(&hint.u)) <= 0.0) && r.iter().all(|d| w.dot(d) <= 0.0));
            if separated {
                f_side = TriBool::True;
            }
        }
        for y in &self.points {
            if hint.cone.interior_contains(&y.sub(&hint.u))?.is_true() {
                f_side = TriBool::False;
                break;
            }
        }
        Ok(vec![
            Hypothesis::new("z ∈ H", z_in_h.into()),
            Hypothesis::new("z - H ⊆ int C ∪ {0}", d_side),
            Hypothesis::new("(F - u) ∩ int C = ∅", f_side),
        ])
    }

    fn rule(&self, rule: RuleId) -> Result<RuleCheck> {
        let h = self.h();
        let k = self.k();
        let hyps = match rule {
            RuleId::Nec => {
                let n = self.necessary(f64::NEG_INFINITY);
                vec![
                    Hypothesis::new("F ∩ (a - H + R k) ≠ ∅", n.feasible),
                    Hypothesis::new("F ∩ (a - H + t k) = ∅ for some t", n.some_level_empty),
                ]
            }
            RuleId::PointedCone => vec![
                self.f_nonempty(),
                self.f_closed(),
                self.f_bounded_below(),
                self.cone_hyp(),
                self.orthant_in_h()?,
                Hypothesis::new("k ∈ int H", h.interior_contains(k)?),
            ],
            RuleId::ConeKNotNeg => vec![
                self.f_closed(),
                self.f_bounded_below(),
                self.cone_hyp(),
                self.orthant_in_h()?,
                Hypothesis::new("k ∈ H \\ (-H)", TriBool::from(h.contains(k)? && !h.contains(&k.neg())?)),
                self.feasible_hyp(),
            ],
            RuleId::ConvexStrict => vec![
                self.f_closed(),
                self.f_bounded_below(),
                Hypothesis::new("H convex", h.is_convex()),
                Hypothesis::new("H + (R^ℓ_+ \\ {0}) ⊆ int H", h.orthant_shift_into_interior()),
                Hypothesis::new("H + R_> k ⊆ int H", h.shift_into_interior(k)?),
                Hypothesis::new("k ∉ -0⁺H", self.k_not_in_neg_recession()?),
                self.feasible_hyp(),
            ],
            RuleId::BoundedBelowLines => vec![
                self.f_nonempty(),
                self.f_closed(),
                self.f_bounded_below(),
                self.orthant_in_recession()?,
                self.k_in_int_recession()?,
                self.no_axis_lines()?,
            ],
            RuleId::BoundedBelowCases => vec![
                self.f_closed(),
                self.f_bounded_below(),
                self.orthant_in_recession()?,
                self.no_axis_lines()?,
                self.feasible_hyp(),
                self.cases(true)?,
            ],
            RuleId::PolyhedralSep => {
                let mut v = vec![self.f_nonempty(), self.f_closed()];
                v.extend(self.separation()?);
                let d1 = h.recession_interior_contains(k)?;
                let feasible = self.feasible();
                let d2 = feasible.and(self.cases(false)?.value);
                let d3 = feasible.and(h.is_convex()).and(self.k_not_in_neg_recession()?);
                v.push(Hypothesis::with_detail(
                    "k ∈ int 0⁺H, or feasible with a case condition, or H convex with k ∉ -0⁺H",
                    d1.or(d2).or(d3),
                    format!("d1: {d1}; d2: {d2}; d3: {d3}"),
                ));
                v
            }
            RuleId::Core => vec![self.f_nonempty(), self.f_compact(), self.k_in_int_recession()?],
            RuleId::CompactFFinite => {
                vec![self.f_nonempty(), self.f_compact(), Hypothesis::new("phi finite-valued", self.finite_valued)]
            }
            RuleId::CompactFCases => vec![self.f_compact(), self.feasible_hyp(), self.cases(true)?],
            RuleId::CompactLevel => {
                let level = if self.exact_f { self.feasible() } else { self.feasible().and(self.facts.compact) };
                vec![
                    Hypothesis::new("F ∩ (a - H + t1 k) nonempty and compact for some t1", level),
                    Hypothesis::new(
                        "F ∩ (a - H + t k) = ∅ for some t",
                        self.necessary(f64::NEG_INFINITY).some_level_empty,
                    ),
                ]
            }
        };
        Ok(RuleCheck::new(rule, hyps))
    }
}

/// Rows of a polyhedral cone (all offsets zero).
fn polyhedral_cone_rows(c: &SetRep) -> Result<Vec<Point>> {
    let rows = c.polyhedral_rows().ok_or_else(|| Error::Precondition("C must be polyhedral".into()))?;
    if rows.iter().any(|r| r.offset != 0.0) {
        return Err(Error::Precondition("C must be a cone: all offsets must be zero".into()));
    }
    Ok(rows.iter().map(|r| r.normal.clone()).collect())
}

/// `z - D ⊆ int C ∪ {0}`, checked on boundary samples and recession rays
/// of `D` (plus the apex when `D` is a cone).  Exact for polyhedral cones,
/// whose generators describe them completely.
fn shifted_set_in_cone(d: &SetRep, z: &Point, c: &SetRep) -> Result<TriBool> {
    let Some((mut points, rays)) = d.boundary_samples(SEPARATION_SAMPLES) else {
        return Ok(TriBool::Unknown);
    };
    if d.is_cone().is_true() {
        points.push(Point::zeros(d.dim()));
    }
    let mut v = TriBool::True;
    for h in &points {
        let x = z.sub(h);
        if x.norm_inf() <= 1e-12 * (1.0 + z.norm_inf()) {
            continue;
        }
        v = v.and(c.interior_contains(&x)?);
    }
    for r in &rays {
        v = v.and(c.interior_contains(&r.neg())?);
    }
    Ok(v)
}

/// Boundedness of every `M ∩ (b - D)` via a separating polyhedral cone:
/// requires `-D \ {0} ⊆ int C` and `(M - u) ∩ int C = ∅`.
pub fn separation_boundedness(m: &[Point], d: &SetRep, c: &SetRep, u: &Point, b: &Point) -> Result<TriBool> {
    polyhedral_cone_rows(c)?;
    let dim = d.dim();
    if c.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: c.dim() });
    }
    u.check_dim(dim)?;
    b.check_dim(dim)?;
    if !d.contains(&Point::zeros(dim))? {
        return Err(Error::Precondition("0 must belong to D".into()));
    }
    let d_side = shifted_set_in_cone(d, &Point::zeros(dim), c)?;
    let mut m_side = TriBool::True;
    for y in m {
        m_side = m_side.and(c.interior_contains(&y.sub(u))?.not());
    }
    let verdict = d_side.and(m_side);
    if verdict.is_true() {
        // the sampled intersection must then be bounded; it is finite here,
        // so this only guards against non-finite coordinates
        for y in m {
            if d.contains(&b.sub(y))? {
                debug_assert!(y.iter().all(|c| c.is_finite()));
            }
        }
    }
    Ok(verdict)
}

/// Checks the necessary conditions; `t_range` bounds the probe levels.
pub fn necessary_conditions(p: &ProblemInstance, t_range: (f64, f64), samples: usize) -> Result<NecessaryConditions> {
    if samples < 2 {
        return Err(Error::Precondition("at least two probe samples are required".into()));
    }
    if t_range.0.is_nan() || t_range.1.is_nan() || t_range.0 > t_range.1 {
        return Err(Error::Precondition("probe range needs t_lo <= t_hi".into()));
    }
    Ok(Ctx::new(p)?.necessary(t_range.0))
}

/// Evaluates a single rule with its hypothesis breakdown.
pub fn check_rule(p: &ProblemInstance, rule: RuleId) -> Result<RuleCheck> {
    Ctx::new(p)?.rule(rule)
}

/// Runs the necessary conditions, then the sufficient rules in
/// [`RuleId::SEARCH_ORDER`]; the first rule with all hypotheses `True`
/// names the certificate.
pub fn existence_report(p: &ProblemInstance) -> Result<ExistenceReport> {
    let ctx = Ctx::new(p)?;
    let mut checks = vec![ctx.rule(RuleId::Nec)?];
    for r in RuleId::SEARCH_ORDER {
        checks.push(ctx.rule(r)?);
    }
    let nec = &checks[0];
    let failed: Vec<&Hypothesis> = nec.hypotheses.iter().filter(|h| h.value.is_false()).collect();
    let verdict = if !failed.is_empty() {
        Verdict::NecessaryConditionFails(failed.iter().map(|h| h.name.clone()).collect::<Vec<_>>().join("; "))
    } else {
        checks[1..]
            .iter()
            .find(|c| c.value.is_true())
            .map(|c| Verdict::GuaranteedNonemptyCompact(c.rule))
            .unwrap_or(Verdict::NoRuleApplies)
    };
    Ok(ExistenceReport { verdict, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::GerstewitzFunctional;
    use crate::geometry::Halfspace;
    use crate::solver::SeparationHint;

    fn p<const N: usize>(v: [f64; N]) -> Point {
        Point::from(v)
    }

    fn triangle() -> ProblemInstance {
        let mut pts = Vec::new();
        for i in 0..=20 {
            for j in 0..=i {
                pts.push(p([i as f64 * 0.05, j as f64 * 0.05]));
            }
        }
        let g = GerstewitzFunctional::new(p([-1.0, 0.0]), SetRep::orthant(2), p([1.0, 1.0])).unwrap();
        ProblemInstance::new(FeasibleSet::finite(pts).unwrap(), g).unwrap()
    }

    fn hyperbola_branch() -> ProblemInstance {
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::builtin("halfplane_x_2d").unwrap(), p([1.0, 1.0]))
            .unwrap();
        ProblemInstance::new(FeasibleSet::curve_default("hyperbola_branch_ex613").unwrap(), g).unwrap()
    }

    fn c_sum() -> SetRep {
        SetRep::halfspaces(vec![Halfspace::new(p([-1.0, -1.0]), 0.0).unwrap()]).unwrap()
    }

    #[test]
    fn rule_ids_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.id().parse::<RuleId>().unwrap(), r);
        }
        assert!(matches!("R-magic".parse::<RuleId>(), Err(Error::UnknownRule(_))));
    }

    #[test]
    fn triangle_certified_by_pointed_cone() {
        let r = existence_report(&triangle()).unwrap();
        assert_eq!(r.verdict, Verdict::GuaranteedNonemptyCompact(RuleId::PointedCone));
        let n = necessary_conditions(&triangle(), (-10.0, 10.0), 5).unwrap();
        assert_eq!((n.feasible, n.some_level_empty), (TriBool::True, TriBool::True));
    }

    #[test]
    fn hyperbola_branch_fails_line_condition() {
        let pr = hyperbola_branch();
        let c = check_rule(&pr, RuleId::BoundedBelowLines).unwrap();
        assert_eq!(c.value, TriBool::False);
        let lines = c.hypotheses.iter().find(|h| h.name.contains("line")).unwrap();
        assert_eq!(lines.value, TriBool::False);
        assert!(lines.detail.as_deref().unwrap().contains("(0, 1)"));
        let n = necessary_conditions(&pr, (-100.0, 10.0), 10).unwrap();
        assert_eq!((n.feasible, n.some_level_empty), (TriBool::True, TriBool::True));
        assert!(!existence_report(&pr).unwrap().is_certified());
    }

    #[test]
    fn x_axis_not_bounded_below() {
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::builtin("hyperbola_epi_2d").unwrap(), p([1.0, 1.0]))
            .unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("xaxis_ex614").unwrap(), g).unwrap();
        let c = check_rule(&pr, RuleId::BoundedBelowLines).unwrap();
        assert_eq!(c.value, TriBool::False);
        assert!(c.hypotheses.iter().any(|h| h.detail.as_deref() == Some("F is not bounded below")));
    }

    #[test]
    fn empty_feasible_range_fails_necessary_condition() {
        let g = GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::builtin("halfplane_x_2d").unwrap(), p([0.0, 1.0]))
            .unwrap();
        let pr = ProblemInstance::new(FeasibleSet::finite(vec![p([1.0, 0.0]), p([2.0, 1.0])]).unwrap(), g).unwrap();
        let r = existence_report(&pr).unwrap();
        assert!(matches!(r.verdict, Verdict::NecessaryConditionFails(_)));
    }

    #[test]
    fn shifted_hyperbola_wedge_separation() {
        let g =
            GerstewitzFunctional::new(p([0.0, 0.0]), SetRep::builtin("shifted_hyperbola_2d").unwrap(), p([1.0, 1.0]))
                .unwrap();
        let pr = ProblemInstance::new(FeasibleSet::curve_default("wedge_s613d1").unwrap(), g)
            .unwrap()
            .with_separation(SeparationHint { cone: c_sum(), z: p([0.0, 0.0]), u: p([0.0, 0.0]) })
            .unwrap();
        let r = existence_report(&pr).unwrap();
        assert_eq!(r.verdict, Verdict::GuaranteedNonemptyCompact(RuleId::PolyhedralSep));
    }

    #[test]
    fn separation_examples() {
        let sh = SetRep::builtin("shifted_hyperbola_2d").unwrap();
        let wedge: Vec<Point> = (0..20)
            .flat_map(|i| (0..20).map(move |j| p([i as f64 * 0.5, -(i as f64) * 0.25 + j as f64 * 0.5])))
            .collect();
        let z = p([0.0, 0.0]);
        assert_eq!(separation_boundedness(&wedge, &sh, &c_sum(), &z, &p([1.0, 1.0])).unwrap(), TriBool::True);

        let line: Vec<Point> = (0..10).map(|i| p([-(i as f64) - 1.0, 0.0])).collect();
        assert_eq!(separation_boundedness(&line, &sh, &c_sum(), &z, &z).unwrap(), TriBool::False);

        let c_neg = SetRep::halfspaces(vec![
            Halfspace::new(p([-1.0, 0.0]), 0.0).unwrap(),
            Halfspace::new(p([0.0, -1.0]), 0.0).unwrap(),
        ])
        .unwrap();
        let pts = vec![p([1.0, 1.0])];
        assert_eq!(separation_boundedness(&pts, &SetRep::orthant(2), &c_neg, &z, &z).unwrap(), TriBool::False);

        let not_cone = SetRep::halfspaces(vec![Halfspace::new(p([1.0, 0.0]), 1.0).unwrap()]).unwrap();
        assert!(separation_boundedness(&pts, &sh, &not_cone, &z, &z).is_err());
    }

    #[test]
    fn axis_lines_absent_for_pointed_cones() {
        let cone = SetRep::generator_cone(vec![p([1.0, 0.0]), p([-1.0, 2.0])]).unwrap();
        for j in 0..2 {
            assert_eq!(cone.contains_line_in_direction(&Point::unit(2, j)).unwrap(), TriBool::False);
        }
    }
}
