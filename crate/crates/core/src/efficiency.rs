//! Efficient elements of finite sets.
//!
//! `y0 ∈ F` is efficient with respect to a domination set `D` when
//! `F ∩ (y0 - D) ⊆ {y0}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Point, SetRep, TriBool};
use crate::solver::{same_point_set, ProblemInstance, SolveResult};

/// Number of random pairs used when algebraic properties cannot be decided
/// exactly.
pub const PROPERTY_SAMPLES: usize = 500;
/// Seed of the property sampler used by [`DominationSet::new`].
pub const SAMPLE_SEED: u64 = 42;
const SAMPLE_BOX: f64 = 10.0;

/// Tolerance for `y = y0` in the efficiency test.
fn same_point(a: &Point, b: &Point) -> bool {
    a.dist_inf(b) <= 1e-12 * (1.0 + a.norm_inf())
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominationSet {
    pub base: SetRep,
    /// Use `base \ {0}` instead of `base`.
    pub exclude_zero: bool,
    /// `0 ∈ D`.
    pub contains_zero: TriBool,
    /// `D + D ⊆ D`.
    pub additive: TriBool,
    /// `D ∩ (-D) ⊆ {0}`.
    pub pointed: TriBool,
}

impl DominationSet {
    pub fn new(base: SetRep, exclude_zero: bool) -> Result<Self> {
        Self::with_seed(base, exclude_zero, SAMPLE_SEED)
    }

    /// As [`DominationSet::new`] with an explicit seed for the sampled
    /// property checks of non-cone sets.
    pub fn with_seed(base: SetRep, exclude_zero: bool, seed: u64) -> Result<Self> {
        let dim = base.dim();
        let zero = Point::zeros(dim);
        let contains_zero = TriBool::from(!exclude_zero && base.contains(&zero)?);
        let convex_cone = base.is_cone().and(base.is_convex()).is_true();
        let (additive, pointed) = if convex_cone {
            let pointed = base.is_pointed();
            // removing 0 breaks additivity exactly when x and -x both lie in D
            let additive = if exclude_zero { pointed } else { TriBool::True };
            (additive, pointed)
        } else {
            sampled_properties(&base, exclude_zero, seed)?
        };
        Ok(DominationSet { base, exclude_zero, contains_zero, additive, pointed })
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn contains(&self, y: &Point) -> Result<bool> {
        if self.exclude_zero && y.is_zero() {
            return Ok(false);
        }
        self.base.contains(y)
    }
}

/// Searches random points of `D` for violations of `D + D ⊆ D` and
/// `D ∩ (-D) ⊆ {0}`.  Without a violation the answer is `Unknown`.
fn sampled_properties(base: &SetRep, exclude_zero: bool, seed: u64) -> Result<(TriBool, TriBool)> {
    let dim = base.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members: Vec<Point> = Vec::new();
    if let Some((pts, rays)) = base.boundary_samples(PROPERTY_SAMPLES) {
        members.extend(pts);
        members.extend(rays);
    }
    let mut attempts = 0;
    while members.len() < 2 * PROPERTY_SAMPLES && attempts < 100 * PROPERTY_SAMPLES {
        attempts += 1;
        let y = Point::from((0..dim).map(|_| rng.gen_range(-SAMPLE_BOX..=SAMPLE_BOX)).collect::<Vec<_>>());
        if base.contains(&y)? {
            members.push(y);
        }
    }
    let members: Vec<Point> = members.into_iter().filter(|y| !(exclude_zero && y.is_zero())).collect();
    let in_d = |y: &Point| -> Result<bool> { Ok(!(exclude_zero && y.is_zero()) && base.contains(y)?) };

    let mut additive = TriBool::Unknown;
    let mut pointed = TriBool::Unknown;
    if members.len() >= 2 {
        for _ in 0..PROPERTY_SAMPLES {
            let x = &members[rng.gen_range(0..members.len())];
            let y = &members[rng.gen_range(0..members.len())];
            if !in_d(&x.add(y))? {
                additive = TriBool::False;
                break;
            }
        }
    }
    for x in &members {
        if !x.is_zero() && in_d(&x.neg())? {
            pointed = TriBool::False;
            break;
        }
    }
    Ok((additive, pointed))
}

/// Efficient elements of `f`, in input order.
pub fn eff_finite(f: &[Point], d: &DominationSet) -> Result<Vec<Point>> {
    if let Some(y) = f.first() {
        for x in f {
            x.check_dim(y.dim())?;
        }
        y.check_dim(d.dim())?;
    }
    let flags = f
        .par_iter()
        .map(|y0| -> Result<bool> {
            for y in f {
                if !same_point(y, y0) && d.contains(&y0.sub(y))? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(f.iter().zip(flags).filter(|(_, e)| *e).map(|(y, _)| y.clone()).collect())
}

fn subset(a: &[Point], b: &[Point]) -> bool {
    a.iter().all(|x| b.iter().any(|y| same_point(x, y)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionCheck {
    /// `Eff(F + S, D) ⊆ Eff(F, D)`.
    pub subset_holds: bool,
    /// `Eff(F + S, D) = Eff(F, D)`; decided only when `D` is flagged
    /// pointed and additive.
    pub equality_holds: TriBool,
    pub eff_f: Vec<Point>,
    pub eff_extended: Vec<Point>,
}

/// Compares `Eff(F, D)` with `Eff(F + (S ∪ {0}), D)` for `S ⊆ D ∪ {0}`.
pub fn eff_extension_check(f: &[Point], h_sample: &[Point], d: &DominationSet) -> Result<ExtensionCheck> {
    for s in h_sample {
        if !(s.is_zero() || d.base.contains(s)?) {
            return Err(Error::Precondition(format!("sample point {s} is not in D ∪ {{0}}")));
        }
    }
    let mut extended: Vec<Point> = Vec::new();
    for y in f {
        for q in std::iter::once(y.clone()).chain(h_sample.iter().map(|s| y.add(s))) {
            if !extended.iter().any(|e| same_point(e, &q)) {
                extended.push(q);
            }
        }
    }
    let eff_f = eff_finite(f, d)?;
    let eff_extended = eff_finite(&extended, d)?;
    let subset_holds = subset(&eff_extended, &eff_f);
    let equality_holds = if d.pointed.is_true() && d.additive.is_true() {
        TriBool::from(subset_holds && subset(&eff_f, &eff_extended))
    } else {
        TriBool::Unknown
    };
    Ok(ExtensionCheck { subset_holds, equality_holds, eff_f, eff_extended })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizerLink {
    /// `Eff(M, H)` for the returned minimizer sample `M`.
    pub eff: Vec<Point>,
    /// `Eff(cl M, H) ⊆ Eff(M, H)`.
    pub eff_of_closure_subset: bool,
    /// `Eff(cl M, H) = Eff(M, H)`, decided when `H` is pointed.
    pub equality: TriBool,
}

/// Efficient minimizers with `H` as the domination set.  A minimizer list
/// is finite, so its closure is itself.
pub fn minimizer_efficiency_link(p: &ProblemInstance, result: &SolveResult) -> Result<MinimizerLink> {
    if !result.is_optimal() {
        return Err(Error::Precondition(format!("an optimal result is required, got {}", result.status_name())));
    }
    let d = DominationSet::new(p.g.h().clone(), false)?;
    if !(d.contains_zero.is_true() && d.additive.is_true()) {
        return Err(Error::Precondition("H must contain 0 and satisfy H + H ⊆ H".into()));
    }
    let m = result.minimizers();
    let eff = eff_finite(m, &d)?;
    let closure: Vec<Point> = m.to_vec();
    let eff_closure = eff_finite(&closure, &d)?;
    let eff_of_closure_subset = subset(&eff_closure, &eff);
    let equality = if d.pointed.is_true() {
        let eq = same_point_set(&eff_closure, &eff, 1e-12);
        debug_assert!(eq);
        TriBool::from(eq)
    } else {
        TriBool::Unknown
    };
    Ok(MinimizerLink { eff, eff_of_closure_subset, equality })
}
