//! Evaluation of `phi_{a-H,k}(y) = inf { t : y ∈ a - H + t k }`.
//!
//! Polyhedral `H` is evaluated in closed form.  Writing `H = {h : <w_i,h> >= b_i}`,
//! membership `y ∈ a - H + t k` reads `t <w_i,k> >= b_i - <w_i, a - y>` for
//! every row.  Rows with `<w_i,k> = 0` either hold for all `t` or for none;
//! the remaining rows give lower bounds on `t`.  Other sets are evaluated by
//! bisection on the monotone membership `t ↦ [y ∈ a - H + t k]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{geom_eps, Point, SetRep, TriBool};

/// Default bisection width.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default search bound for bisection.
pub const DEFAULT_T_MAX: f64 = 1e12;

/// Value in `R ∪ {-inf, +inf}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    /// Scale by a positive factor; infinities are unchanged.
    pub fn scale(self, s: f64) -> ExtendedReal {
        match self {
            ExtendedReal::Finite(v) => ExtendedReal::Finite(v * s),
            other => other,
        }
    }

    pub fn shift(self, c: f64) -> ExtendedReal {
        match self {
            ExtendedReal::Finite(v) => ExtendedReal::Finite(v + c),
            other => other,
        }
    }

    /// `self <= t` for a real `t`.
    pub fn le(self, t: f64) -> bool {
        match self {
            ExtendedReal::NegInf => true,
            ExtendedReal::Finite(v) => v <= t,
            ExtendedReal::PosInf => false,
        }
    }

    fn rank(self) -> (i8, f64) {
        match self {
            ExtendedReal::NegInf => (-1, 0.0),
            ExtendedReal::Finite(v) => (0, v),
            ExtendedReal::PosInf => (1, 0.0),
        }
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (ra, va) = self.rank();
        let (rb, vb) = other.rank();
        match ra.cmp(&rb) {
            Ordering::Equal => va.partial_cmp(&vb),
            o => Some(o),
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => f.write_str("-inf"),
            ExtendedReal::PosInf => f.write_str("+inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// How far a computed value can be trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Certainty {
    /// Closed-form polyhedral evaluation.
    Exact,
    /// Bisection result; overestimates the infimum by at most the width.
    BracketedWithin(f64),
    /// Membership never changed on `[-t_max, t_max]`.
    HeuristicInfinity(f64),
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Exact => f.write_str("exact"),
            Certainty::BracketedWithin(w) => write!(f, "bracketed({w:e})"),
            Certainty::HeuristicInfinity(b) => write!(f, "heuristic-infinity({b:e})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiStatus {
    pub value: ExtendedReal,
    pub certainty: Certainty,
}

impl PhiStatus {
    /// Comparison slack implied by the certainty: `2 * width` for bisection.
    pub fn slack(&self) -> f64 {
        match self.certainty {
            Certainty::BracketedWithin(w) => 2.0 * w,
            _ => 0.0,
        }
    }
}

/// Finiteness class of `phi` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    InDomainFinite,
    /// `y + R k ⊆ a - H`.
    NegInfLine,
    /// `y ∉ a - H + R k`.
    NotInDomain,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub tol: f64,
    pub t_max: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { tol: DEFAULT_TOL, t_max: DEFAULT_T_MAX }
    }
}

/// Properness and finiteness verdicts for `phi_{a-H,k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropernessReport {
    pub proper: TriBool,
    pub finite_valued: TriBool,
    /// `k ∈ 0⁺H ∩ -0⁺H`: `phi` takes no real value at all.
    pub no_real_values: bool,
    /// `H + R_> k ⊆ int H`, the hypothesis under which `phi` is continuous.
    pub shifts_into_interior: TriBool,
    pub reasons: Vec<String>,
}

/// The functional `phi_{a-H,k}` with validated parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GerstewitzFunctional {
    a: Point,
    h: SetRep,
    k: Point,
    options: EvalOptions,
}

impl GerstewitzFunctional {
    /// Requires `k ≠ 0`, matching dimensions and `k ∈ 0⁺H`.
    pub fn new(a: Point, h: SetRep, k: Point) -> Result<Self> {
        let dim = h.dim();
        a.check_dim(dim)?;
        k.check_dim(dim)?;
        if k.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if a.iter().chain(k.iter()).any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("a and k must be finite".into()));
        }
        match h.recession_contains(&k)? {
            TriBool::False => return Err(Error::DirectionNotRecession),
            TriBool::True | TriBool::Unknown => {}
        }
        Ok(GerstewitzFunctional { a, h, k, options: EvalOptions::default() })
    }

    pub fn with_options(mut self, options: EvalOptions) -> Self {
        self.options = options;
        self
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn h(&self) -> &SetRep {
        &self.h
    }

    pub fn k(&self) -> &Point {
        &self.k
    }

    pub fn options(&self) -> EvalOptions {
        self.options
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    /// Same `H`, new parameters.
    pub fn reparameterize(&self, a: Point, k: Point) -> Result<Self> {
        Ok(GerstewitzFunctional::new(a, self.h.clone(), k)?.with_options(self.options))
    }

    /// `y ∈ a - H + t k`.
    pub fn level_contains(&self, y: &Point, t: f64) -> Result<bool> {
        y.check_dim(self.dim())?;
        self.level_membership(y)(t)
    }

    /// Membership test `t ↦ [y ∈ a - H + t k]` with the `t`-independent
    /// parts computed once.
    fn level_membership<'s>(&'s self, y: &Point) -> Box<dyn Fn(f64) -> Result<bool> + 's> {
        // rounding-level slack: a fixed relative slack would swallow rows
        // parallel to k for large t and bias the bisected value
        let base = self.a.sub(y);
        let base_norm = base.norm_inf();
        let k_norm = self.k.norm_inf();
        let eps = move |t: f64| 4.0 * f64::EPSILON * (1.0 + base_norm + t.abs() * k_norm);
        let Some(rows) = self.h.polyhedral_rows() else {
            return Box::new(move |t| self.h.contains_within(&base.axpy(t, &self.k), eps(t)));
        };
        // rows counted as parallel to k are tested exactly as the closed form does
        let z_eps = geom_eps(&base);
        let rows: Vec<(f64, f64, f64, bool)> = rows
            .iter()
            .map(|r| {
                let wk = r.value(&self.k);
                (r.value(&base), wk, r.offset, wk.abs() <= r.direction_eps(&self.k))
            })
            .collect();
        Box::new(move |t| {
            let e = eps(t);
            Ok(rows.iter().all(|&(wb, wk, b, parallel)| {
                if parallel {
                    wb >= b - z_eps * (1.0 + b.abs())
                } else {
                    wb + t * wk >= b - e * (1.0 + b.abs())
                }
            }))
        })
    }

    /// `y ∈ a - int H + t k`.
    pub fn level_interior_contains(&self, y: &Point, t: f64) -> Result<TriBool> {
        y.check_dim(self.dim())?;
        self.h.interior_contains(&self.a.axpy(t, &self.k).sub(y))
    }

    /// `y ∈ a - bd H + t k`.
    pub fn level_boundary_contains(&self, y: &Point, t: f64) -> Result<TriBool> {
        if !self.level_contains(y, t)? {
            return Ok(TriBool::False);
        }
        Ok(self.level_interior_contains(y, t)?.not())
    }

    /// Evaluates `phi` at `y`, exactly when `H` is polyhedral.
    pub fn phi(&self, y: &Point) -> Result<PhiStatus> {
        if self.h.is_polyhedral() {
            self.phi_polyhedral(y)
        } else {
            self.phi_bisection(y, self.options.tol, self.options.t_max)
        }
    }

    /// Closed-form evaluation for polyhedral `H`.
    pub fn phi_polyhedral(&self, y: &Point) -> Result<PhiStatus> {
        y.check_dim(self.dim())?;
        let rows =
            self.h.polyhedral_rows().ok_or_else(|| Error::Unsupported(format!("{:?} is not polyhedral", self.h)))?;
        let diff = self.a.sub(y);
        let eps = geom_eps(&diff);
        let mut best: Option<f64> = None;
        for r in rows.iter() {
            let wk = r.value(&self.k);
            let slack = r.offset - r.value(&diff);
            if wk.abs() <= r.direction_eps(&self.k) {
                if slack > eps * (1.0 + r.offset.abs()) {
                    return Ok(PhiStatus { value: ExtendedReal::PosInf, certainty: Certainty::Exact });
                }
            } else {
                let t = slack / wk;
                best = Some(best.map_or(t, |b: f64| b.max(t)));
            }
        }
        let value = match best {
            Some(t) => ExtendedReal::Finite(t),
            None => ExtendedReal::NegInf,
        };
        Ok(PhiStatus { value, certainty: Certainty::Exact })
    }

    /// Bisection on membership, valid for every representation of `H`.
    ///
    /// The bracket starts at the projection `<k, y - a> / <k, k>` and is
    /// widened by doubling steps.  The returned value is the feasible end of
    /// the final bracket.
    pub fn phi_bisection(&self, y: &Point, tol: f64, t_max: f64) -> Result<PhiStatus> {
        y.check_dim(self.dim())?;
        if !(tol > 0.0 && t_max > 0.0) {
            return Err(Error::Precondition("tol and t_max must be positive".into()));
        }
        let member = self.level_membership(y);
        let heuristic = Certainty::HeuristicInfinity(t_max);

        let t0 = (self.k.dot(&y.sub(&self.a)) / self.k.dot(&self.k)).clamp(-t_max, t_max);
        let (mut lo, mut hi);
        let mut step = 1.0_f64.max(tol);
        if member(t0)? {
            hi = t0;
            loop {
                let t = hi - step;
                if t <= -t_max {
                    if member(-t_max)? {
                        return Ok(PhiStatus { value: ExtendedReal::NegInf, certainty: heuristic });
                    }
                    lo = -t_max;
                    break;
                }
                if member(t)? {
                    hi = t;
                    step *= 2.0;
                } else {
                    lo = t;
                    break;
                }
            }
        } else {
            lo = t0;
            loop {
                let t = lo + step;
                if t >= t_max {
                    if member(t_max)? {
                        hi = t_max;
                        break;
                    }
                    return Ok(PhiStatus { value: ExtendedReal::PosInf, certainty: heuristic });
                }
                if member(t)? {
                    hi = t;
                    break;
                }
                lo = t;
                step *= 2.0;
            }
        }

        // membership must stay on above the bracket and off below it
        let width = hi - lo;
        let above = (hi + width).min(t_max);
        if above > hi && !member(above)? {
            return Err(Error::NonMonotone { feasible_t: hi, infeasible_t: above });
        }
        let below = (lo - width).max(-t_max);
        if below < lo && member(below)? {
            return Err(Error::NonMonotone { feasible_t: below, infeasible_t: lo });
        }

        while hi - lo > tol {
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            if member(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(PhiStatus { value: ExtendedReal::Finite(hi), certainty: Certainty::BracketedWithin(tol.max(hi - lo)) })
    }

    pub fn classify(&self, y: &Point) -> Result<Classification> {
        Ok(match self.phi(y)?.value {
            ExtendedReal::NegInf => Classification::NegInfLine,
            ExtendedReal::PosInf => Classification::NotInDomain,
            ExtendedReal::Finite(_) => Classification::InDomainFinite,
        })
    }

    /// Properness and finiteness of `phi_{a-H,k}`.
    ///
    /// `phi` is proper iff `a - H` contains no line parallel to `k`, which is
    /// the same as `H` containing no such line.  It is finite-valued when `k`
    /// is interior to the recession cone.
    pub fn properness_report(&self) -> PropernessReport {
        let mut reasons = Vec::new();
        let k = &self.k;
        let line = self.h.contains_line_in_direction(k).unwrap_or(TriBool::Unknown);
        let mut proper = line.not();
        match line {
            TriBool::True => reasons.push(format!("H contains a line parallel to k = {k}")),
            TriBool::False => reasons.push(format!("H contains no line parallel to k = {k}")),
            TriBool::Unknown => reasons.push("could not decide whether H contains a line parallel to k".into()),
        }

        let minus_k = self.h.recession_contains(&k.neg()).unwrap_or(TriBool::Unknown);
        let no_real_values = minus_k.is_true();
        if no_real_values {
            proper = TriBool::False;
            reasons.push("k and -k are both recession directions: phi attains no real value".into());
        } else if minus_k.is_false() && self.h.is_convex().is_true() {
            proper = TriBool::True;
            reasons.push("H is convex and k is not in -0+H: phi is proper".into());
        }

        let finite_valued = if proper.is_false() {
            TriBool::False
        } else {
            let fv = self.h.finite_valued_direction(k).unwrap_or(TriBool::Unknown);
            if fv.is_true() {
                reasons.push("phi is real everywhere".into());
            }
            fv
        };
        let shifts_into_interior = self.h.shift_into_interior(k).unwrap_or(TriBool::Unknown);

        PropernessReport { proper, finite_valued, no_real_values, shifts_into_interior, reasons }
    }
}
