//! Analytic closed sets in the plane with declared recession cones.

use std::fmt;
use std::str::FromStr;

use super::point::{geom_eps, Point};
use super::setrep::Halfspace;
use super::tribool::TriBool;
use crate::error::Error;

/// Registry of analytically described sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinSet {
    /// `{y : y1 > 0, y2 >= 1/y1}`, recession cone `R^2_+`.
    HyperbolaEpi,
    /// `{y : y2 >= y1^2}`, recession cone `{0} x R_+`.
    ParabolaEpi,
    /// `{y : y1 >= -1, y2 >= -1, (y1+1)(y2+1) >= 1}`, recession cone `R^2_+`.
    ShiftedHyperbola,
    /// `{y : y1 >= 0}`.
    HalfplaneX,
}

impl BuiltinSet {
    pub const ALL: [BuiltinSet; 4] =
        [BuiltinSet::HyperbolaEpi, BuiltinSet::ParabolaEpi, BuiltinSet::ShiftedHyperbola, BuiltinSet::HalfplaneX];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinSet::HyperbolaEpi => "hyperbola_epi_2d",
            BuiltinSet::ParabolaEpi => "parabola_epi_2d",
            BuiltinSet::ShiftedHyperbola => "shifted_hyperbola_2d",
            BuiltinSet::HalfplaneX => "halfplane_x_2d",
        }
    }

    pub fn dim(self) -> usize {
        2
    }

    /// Halfspace description when the set is polyhedral.
    pub fn polyhedral_rows(self) -> Option<Vec<Halfspace>> {
        match self {
            BuiltinSet::HalfplaneX => Some(vec![Halfspace::new_unchecked(Point::from([1.0, 0.0]), 0.0)]),
            _ => None,
        }
    }

    pub(crate) fn contains_within(self, y: &Point, eps: f64) -> bool {
        let (y1, y2) = (y[0], y[1]);
        match self {
            BuiltinSet::HyperbolaEpi => y1 > 0.0 && y1 * y2 >= 1.0 - eps,
            BuiltinSet::ParabolaEpi => y2 >= y1 * y1 - eps,
            BuiltinSet::ShiftedHyperbola => {
                y1 >= -1.0 - eps && y2 >= -1.0 - eps && (y1 + 1.0) * (y2 + 1.0) >= 1.0 - eps
            }
            BuiltinSet::HalfplaneX => y1 >= -eps,
        }
    }

    pub(crate) fn interior_contains(self, y: &Point) -> bool {
        let eps = geom_eps(y);
        let (y1, y2) = (y[0], y[1]);
        match self {
            BuiltinSet::HyperbolaEpi => y1 > 0.0 && y1 * y2 > 1.0 + eps,
            BuiltinSet::ParabolaEpi => y2 > y1 * y1 + eps,
            BuiltinSet::ShiftedHyperbola => y1 > -1.0 + eps && y2 > -1.0 + eps && (y1 + 1.0) * (y2 + 1.0) > 1.0 + eps,
            BuiltinSet::HalfplaneX => y1 > eps,
        }
    }

    pub(crate) fn recession_contains(self, u: &Point) -> bool {
        let eps = 1e-12 * u.norm_inf();
        let (u1, u2) = (u[0], u[1]);
        match self {
            BuiltinSet::HyperbolaEpi | BuiltinSet::ShiftedHyperbola => u1 >= -eps && u2 >= -eps,
            BuiltinSet::ParabolaEpi => u1.abs() <= eps && u2 >= -eps,
            BuiltinSet::HalfplaneX => u1 >= -eps,
        }
    }

    pub(crate) fn recession_interior_contains(self, u: &Point) -> bool {
        let eps = 1e-12 * u.norm_inf();
        let (u1, u2) = (u[0], u[1]);
        match self {
            BuiltinSet::HyperbolaEpi | BuiltinSet::ShiftedHyperbola => u1 > eps && u2 > eps,
            BuiltinSet::ParabolaEpi => false,
            BuiltinSet::HalfplaneX => u1 > eps,
        }
    }

    /// All registered sets are convex, so a line in direction `d` exists
    /// iff both `d` and `-d` are recession directions.
    pub(crate) fn contains_line_in_direction(self, d: &Point) -> bool {
        self.recession_contains(d) && self.recession_contains(&d.neg())
    }

    /// `H + R_> k ⊆ int H` for `k` in the recession cone.
    pub(crate) fn shift_into_interior(self, k: &Point) -> TriBool {
        if !self.recession_contains(k) || k.is_zero() {
            return TriBool::False;
        }
        match self {
            // y2 >= 1/y1 and a nonzero k >= 0 pushes strictly above the boundary.
            BuiltinSet::HyperbolaEpi | BuiltinSet::ShiftedHyperbola => TriBool::True,
            // k = (0, k2) with k2 > 0 lifts strictly above the parabola.
            BuiltinSet::ParabolaEpi => TriBool::True,
            BuiltinSet::HalfplaneX => TriBool::from(k[0] > 0.0),
        }
    }

    /// `H + (R^2_+ \ {0}) ⊆ int H`.
    pub(crate) fn orthant_shift_into_interior(self) -> bool {
        matches!(self, BuiltinSet::HyperbolaEpi | BuiltinSet::ShiftedHyperbola)
    }

    /// Whether `phi_{a-H,k}` is real everywhere, decided analytically.
    pub(crate) fn finite_valued(self, k: &Point) -> TriBool {
        if !self.recession_contains(k) {
            return TriBool::Unknown;
        }
        match self {
            BuiltinSet::HyperbolaEpi | BuiltinSet::ShiftedHyperbola => {
                TriBool::from(self.recession_interior_contains(k))
            }
            // t*k2 - y2 >= (a1 - y1)^2 is solvable for every y.
            BuiltinSet::ParabolaEpi => TriBool::from(k[1] > 0.0),
            BuiltinSet::HalfplaneX => TriBool::from(k[0] > 0.0),
        }
    }

    pub(crate) fn is_cone(self) -> bool {
        matches!(self, BuiltinSet::HalfplaneX)
    }

    pub(crate) fn is_pointed(self) -> bool {
        !matches!(self, BuiltinSet::HalfplaneX)
    }

    /// Boundary samples plus extreme recession rays, used for sampled
    /// inclusion checks.
    pub(crate) fn boundary_samples(self, n: usize) -> (Vec<Point>, Vec<Point>) {
        let n = n.max(2);
        let s_at = |i: usize| -> f64 {
            // log-spaced over [1e-3, 1e3]
            let x = -3.0 + 6.0 * i as f64 / (n - 1) as f64;
            10f64.powf(x)
        };
        match self {
            BuiltinSet::HyperbolaEpi => (
                (0..n).map(|i| Point::from([s_at(i), 1.0 / s_at(i)])).collect(),
                vec![Point::from([1.0, 0.0]), Point::from([0.0, 1.0])],
            ),
            BuiltinSet::ShiftedHyperbola => (
                (0..n).map(|i| Point::from([s_at(i) - 1.0, 1.0 / s_at(i) - 1.0])).collect(),
                vec![Point::from([1.0, 0.0]), Point::from([0.0, 1.0])],
            ),
            BuiltinSet::ParabolaEpi => (
                (0..n)
                    .map(|i| {
                        let s = -1e3 + 2e3 * i as f64 / (n - 1) as f64;
                        Point::from([s, s * s])
                    })
                    .collect(),
                vec![Point::from([0.0, 1.0])],
            ),
            BuiltinSet::HalfplaneX => (
                (0..n).map(|i| Point::from([0.0, -1e3 + 2e3 * i as f64 / (n - 1) as f64])).collect(),
                vec![Point::from([1.0, 0.0]), Point::from([0.0, 1.0]), Point::from([0.0, -1.0])],
            ),
        }
    }
}

impl FromStr for BuiltinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BuiltinSet::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}

impl fmt::Display for BuiltinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
