//! Parameterized feasible sets from the worked examples.
//!
//! Each curve maps a parameter box to points of `F`.  The box depends on a
//! range parameter `R`; unbounded sets are explored by growing `R`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{Point, TriBool};

use super::feasible::FeasibleFacts;

/// Registry of sampled feasible sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinCurve {
    /// `{0 <= y2 <= y1 <= 1}`.
    Triangle,
    /// `{y1 > 0, y2 = 1/y1}`.
    HyperbolaBranch,
    /// `{y2 = 0}`.
    XAxis,
    /// `{2y1 + y2 + 2y3 = 0, y1 > 0, y2 <= -1/y1}`.
    PlaneRegion615,
    /// `{y1 + y3 = 0, y1 > 0, y2 <= -1/y1}`.
    PlaneRegion616,
    /// `{y1 >= 0, y2 = -y1^2} ∪ {(-1, 0)}`.
    ParabolaArc,
    /// `R^2_+`.
    Orthant2,
    /// `{y1 >= 0, y2 >= -y1/2}`.
    Wedge,
    /// `{(-s, -s) : s >= 0}`.
    NegDiagonal,
}

impl BuiltinCurve {
    pub const ALL: [BuiltinCurve; 9] = [
        BuiltinCurve::Triangle,
        BuiltinCurve::HyperbolaBranch,
        BuiltinCurve::XAxis,
        BuiltinCurve::PlaneRegion615,
        BuiltinCurve::PlaneRegion616,
        BuiltinCurve::ParabolaArc,
        BuiltinCurve::Orthant2,
        BuiltinCurve::Wedge,
        BuiltinCurve::NegDiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinCurve::Triangle => "triangle_ex311",
            BuiltinCurve::HyperbolaBranch => "hyperbola_branch_ex613",
            BuiltinCurve::XAxis => "xaxis_ex614",
            BuiltinCurve::PlaneRegion615 => "plane_curve_ex615",
            BuiltinCurve::PlaneRegion616 => "plane_curve_ex616",
            BuiltinCurve::ParabolaArc => "parabola_arc_ex617",
            BuiltinCurve::Orthant2 => "orthant_ex618",
            BuiltinCurve::Wedge => "wedge_s613d1",
            BuiltinCurve::NegDiagonal => "neg_diagonal",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            BuiltinCurve::PlaneRegion615 | BuiltinCurve::PlaneRegion616 => 3,
            _ => 2,
        }
    }

    /// Parameter box for range `r`.  Axes marked logarithmic in
    /// [`BuiltinCurve::map`] are given in log coordinates.
    pub fn param_box(self, r: f64) -> Vec<(f64, f64)> {
        let l = r.ln();
        match self {
            BuiltinCurve::Triangle => vec![(0.0, 1.0), (0.0, 1.0)],
            BuiltinCurve::HyperbolaBranch => vec![(-l, l)],
            BuiltinCurve::XAxis => vec![(-r, r)],
            BuiltinCurve::PlaneRegion615 | BuiltinCurve::PlaneRegion616 => vec![(-l, l), (0.0, r)],
            BuiltinCurve::ParabolaArc | BuiltinCurve::NegDiagonal => vec![(0.0, r)],
            BuiltinCurve::Orthant2 | BuiltinCurve::Wedge => vec![(0.0, r), (0.0, r)],
        }
    }

    /// Point for the parameter vector, `None` when it lies outside the set.
    pub fn map(self, p: &[f64]) -> Option<Point> {
        let v = match self {
            BuiltinCurve::Triangle => {
                if p[1] > p[0] {
                    return None;
                }
                vec![p[0], p[1]]
            }
            BuiltinCurve::HyperbolaBranch => {
                let y1 = p[0].exp();
                vec![y1, 1.0 / y1]
            }
            BuiltinCurve::XAxis => vec![p[0], 0.0],
            BuiltinCurve::PlaneRegion615 => {
                let y1 = p[0].exp();
                let y2 = -1.0 / y1 - p[1];
                vec![y1, y2, -(2.0 * y1 + y2) / 2.0]
            }
            BuiltinCurve::PlaneRegion616 => {
                let y1 = p[0].exp();
                vec![y1, -1.0 / y1 - p[1], -y1]
            }
            BuiltinCurve::ParabolaArc => vec![p[0], -p[0] * p[0]],
            BuiltinCurve::Orthant2 => vec![p[0], p[1]],
            BuiltinCurve::Wedge => vec![p[0], -p[0] / 2.0 + p[1]],
            BuiltinCurve::NegDiagonal => vec![-p[0], -p[0]],
        };
        Some(Point::from(v))
    }

    /// Isolated points of the set outside the parameterized part.
    pub fn extra_points(self) -> Vec<Point> {
        match self {
            BuiltinCurve::ParabolaArc => vec![Point::from([-1.0, 0.0])],
            _ => vec![],
        }
    }

    /// Declared topological and order facts about the whole set.
    pub fn facts(self) -> FeasibleFacts {
        let z2 = Point::zeros(2);
        let base = FeasibleFacts {
            nonempty: TriBool::True,
            closed: TriBool::True,
            compact: TriBool::False,
            convex: TriBool::True,
            bounded_below: TriBool::False,
            lower_bound: None,
            outer: None,
            outer_exact: false,
        };
        match self {
            BuiltinCurve::Triangle => FeasibleFacts {
                compact: TriBool::True,
                bounded_below: TriBool::True,
                lower_bound: Some(z2.clone()),
                outer: Some((vec![z2, Point::from([1.0, 0.0]), Point::from([1.0, 1.0])], vec![])),
                outer_exact: true,
                ..base
            },
            BuiltinCurve::HyperbolaBranch => {
                FeasibleFacts { convex: TriBool::False, bounded_below: TriBool::True, lower_bound: Some(z2), ..base }
            }
            BuiltinCurve::XAxis => FeasibleFacts {
                outer: Some((vec![z2], vec![Point::from([1.0, 0.0]), Point::from([-1.0, 0.0])])),
                outer_exact: true,
                ..base
            },
            BuiltinCurve::PlaneRegion615 | BuiltinCurve::PlaneRegion616 => base,
            BuiltinCurve::ParabolaArc => FeasibleFacts { convex: TriBool::False, ..base },
            BuiltinCurve::Orthant2 => FeasibleFacts {
                bounded_below: TriBool::True,
                lower_bound: Some(z2.clone()),
                outer: Some((vec![z2], vec![Point::from([1.0, 0.0]), Point::from([0.0, 1.0])])),
                outer_exact: true,
                ..base
            },
            BuiltinCurve::Wedge => FeasibleFacts {
                outer: Some((vec![z2], vec![Point::from([0.0, 1.0]), Point::from([2.0, -1.0])])),
                outer_exact: true,
                ..base
            },
            BuiltinCurve::NegDiagonal => {
                FeasibleFacts { outer: Some((vec![z2], vec![Point::from([-1.0, -1.0])])), outer_exact: true, ..base }
            }
        }
    }
}

impl FromStr for BuiltinCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinCurve::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}

impl fmt::Display for BuiltinCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in BuiltinCurve::ALL {
            assert_eq!(c.name().parse::<BuiltinCurve>().unwrap(), c);
        }
        assert!("circle".parse::<BuiltinCurve>().is_err());
    }

    #[test]
    fn mapped_points_satisfy_definitions() {
        for c in BuiltinCurve::ALL {
            let bx = c.param_box(3.0);
            for i in 0..=10 {
                for j in 0..=10 {
                    let p: Vec<f64> =
                        bx.iter().zip([i, j]).map(|((lo, hi), s)| lo + (hi - lo) * s as f64 / 10.0).collect();
                    let Some(y) = c.map(&p) else { continue };
                    assert_eq!(y.dim(), c.dim());
                    let ok = match c {
                        BuiltinCurve::Triangle => 0.0 <= y[1] && y[1] <= y[0] && y[0] <= 1.0,
                        BuiltinCurve::HyperbolaBranch => y[0] > 0.0 && (y[1] * y[0] - 1.0).abs() < 1e-12,
                        BuiltinCurve::XAxis => y[1] == 0.0,
                        BuiltinCurve::PlaneRegion615 => {
                            (2.0 * y[0] + y[1] + 2.0 * y[2]).abs() < 1e-12 && y[1] <= -1.0 / y[0] + 1e-12
                        }
                        BuiltinCurve::PlaneRegion616 => y[0] + y[2] == 0.0 && y[1] <= -1.0 / y[0] + 1e-12,
                        BuiltinCurve::ParabolaArc => y[0] >= 0.0 && y[1] == -y[0] * y[0],
                        BuiltinCurve::Orthant2 => y[0] >= 0.0 && y[1] >= 0.0,
                        BuiltinCurve::Wedge => y[0] >= 0.0 && y[1] >= -y[0] / 2.0 - 1e-12,
                        BuiltinCurve::NegDiagonal => y[0] == y[1] && y[0] <= 0.0,
                    };
                    assert!(ok, "{c}: {y}");
                }
            }
        }
    }

    #[test]
    fn symmetric_log_box_hits_one() {
        let bx = BuiltinCurve::PlaneRegion615.param_box(4.0);
        let (lo, hi) = bx[0];
        let mid = lo + (hi - lo) * 0.5;
        assert_eq!(mid, 0.0);
        assert_eq!(BuiltinCurve::PlaneRegion615.map(&[mid, 0.0]).unwrap()[0], 1.0);
    }
}
