use crate::error::{Error, Result};
use crate::functional::GerstewitzFunctional;
use crate::geometry::{Point, SetRep, TriBool};

use super::curves::BuiltinCurve;

/// What is known about the continuous set behind a [`FeasibleSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibleFacts {
    pub nonempty: TriBool,
    pub closed: TriBool,
    pub compact: TriBool,
    pub convex: TriBool,
    /// `F ⊆ u + R^ℓ_+` for some `u`.
    pub bounded_below: TriBool,
    /// A witness `u` for `bounded_below`.
    pub lower_bound: Option<Point>,
    /// Vertices and rays `(V, R)` with `F ⊆ conv V + cone R`.
    pub outer: Option<(Vec<Point>, Vec<Point>)>,
    /// Whether `F = conv V + cone R` holds with equality.
    pub outer_exact: bool,
}

impl FeasibleFacts {
    /// A lower bound of `<w, y>` over `F` derived from the declared facts.
    pub fn linear_lower_bound(&self, w: &Point) -> Option<f64> {
        let mut best: Option<f64> = None;
        if let Some(u) = &self.lower_bound {
            if w.iter().all(|c| *c >= 0.0) {
                best = Some(w.dot(u));
            }
        }
        if let Some((v, r)) = &self.outer {
            let rays_ok = r.iter().all(|d| w.dot(d) >= -1e-12 * w.norm2() * d.norm2());
            if rays_ok && !v.is_empty() {
                let m = v.iter().map(|x| w.dot(x)).fold(f64::INFINITY, f64::min);
                best = Some(best.map_or(m, |b| b.max(m)));
            }
        }
        best
    }
}

/// The feasible set `F` of the scalarized problem.
#[derive(Debug, Clone, PartialEq)]
pub enum FeasibleSet {
    FinitePoints(Vec<Point>),
    /// Grid nodes of the box `[lo, hi]` (`resolution` cells per axis),
    /// optionally intersected with a set.
    GridRegion {
        lo: Point,
        hi: Point,
        resolution: usize,
        membership: Option<SetRep>,
    },
    /// Sampled builtin set; `range` bounds the parameter box and `density`
    /// is the number of nodes per parameter axis.
    BuiltinCurve {
        curve: BuiltinCurve,
        range: f64,
        density: usize,
    },
    /// `base ∩ (a - H + t0 k)` for the functional `level`.
    Restricted {
        base: Box<FeasibleSet>,
        level: Box<GerstewitzFunctional>,
        t0: f64,
    },
}

/// One sampled point with its parameter vector (empty for isolated points).
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Sample {
    pub params: Vec<f64>,
    pub point: Point,
}

pub const DEFAULT_CURVE_RANGE: f64 = 4.0;
pub const DEFAULT_CURVE_DENSITY: usize = 41;

impl FeasibleSet {
    pub fn finite(points: Vec<Point>) -> Result<Self> {
        let first =
            points.first().ok_or_else(|| Error::Empty("finite feasible set needs at least one point".into()))?;
        let dim = first.dim();
        for p in &points {
            p.check_dim(dim)?;
        }
        Ok(FeasibleSet::FinitePoints(points))
    }

    pub fn grid(lo: Point, hi: Point, resolution: usize, membership: Option<SetRep>) -> Result<Self> {
        hi.check_dim(lo.dim())?;
        if resolution < 2 {
            return Err(Error::Precondition("grid resolution must be at least 2".into()));
        }
        if lo.iter().zip(hi.iter()).any(|(l, h)| l > h) {
            return Err(Error::Precondition("grid box needs lo <= hi".into()));
        }
        if let Some(m) = &membership {
            if m.dim() != lo.dim() {
                return Err(Error::DimensionMismatch { expected: lo.dim(), got: m.dim() });
            }
        }
        Ok(FeasibleSet::GridRegion { lo, hi, resolution, membership })
    }

    pub fn curve(name: &str, range: f64, density: usize) -> Result<Self> {
        let curve: BuiltinCurve = name.parse()?;
        if !(range > 1.0 && range.is_finite()) {
            return Err(Error::Precondition("curve range must be a finite number > 1".into()));
        }
        if density < 2 {
            return Err(Error::Precondition("sampling density must be at least 2".into()));
        }
        Ok(FeasibleSet::BuiltinCurve { curve, range, density })
    }

    pub fn curve_default(name: &str) -> Result<Self> {
        Self::curve(name, DEFAULT_CURVE_RANGE, DEFAULT_CURVE_DENSITY)
    }

    pub fn dim(&self) -> usize {
        match self {
            FeasibleSet::FinitePoints(p) => p[0].dim(),
            FeasibleSet::GridRegion { lo, .. } => lo.dim(),
            FeasibleSet::BuiltinCurve { curve, .. } => curve.dim(),
            FeasibleSet::Restricted { base, .. } => base.dim(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FeasibleSet::FinitePoints(_))
    }

    pub fn facts(&self) -> FeasibleFacts {
        match self {
            FeasibleSet::FinitePoints(points) => {
                let dim = points[0].dim();
                let u: Vec<f64> = (0..dim).map(|j| points.iter().map(|p| p[j]).fold(f64::INFINITY, f64::min)).collect();
                let singleton = points.iter().all(|p| p == &points[0]);
                FeasibleFacts {
                    nonempty: TriBool::True,
                    closed: TriBool::True,
                    compact: TriBool::True,
                    convex: singleton.into(),
                    bounded_below: TriBool::True,
                    lower_bound: Some(Point::from(u)),
                    outer: Some((points.clone(), vec![])),
                    outer_exact: singleton,
                }
            }
            FeasibleSet::GridRegion { lo, hi, membership, .. } => {
                let nonempty = match membership {
                    None => TriBool::True,
                    Some(_) => {
                        if self.sample(1.0).map(|s| !s.is_empty()).unwrap_or(false) {
                            TriBool::True
                        } else {
                            TriBool::Unknown
                        }
                    }
                };
                let corners = box_corners(lo, hi);
                FeasibleFacts {
                    nonempty,
                    closed: TriBool::True,
                    compact: TriBool::True,
                    convex: TriBool::True,
                    bounded_below: TriBool::True,
                    lower_bound: Some(lo.clone()),
                    outer: corners.map(|c| (c, vec![])),
                    outer_exact: membership.is_none() && lo.dim() <= 3,
                }
            }
            FeasibleSet::BuiltinCurve { curve, .. } => curve.facts(),
            FeasibleSet::Restricted { base, level, .. } => {
                let b = base.facts();
                FeasibleFacts {
                    nonempty: TriBool::True,
                    closed: b.closed,
                    compact: if b.compact.is_true() { TriBool::True } else { TriBool::Unknown },
                    convex: b.convex.and(level.h().is_convex()),
                    bounded_below: if b.bounded_below.is_true() { TriBool::True } else { TriBool::Unknown },
                    lower_bound: b.lower_bound,
                    outer: b.outer,
                    outer_exact: false,
                }
            }
        }
    }

    /// Parameter box at range multiplier `scale`; `None` for finite sets.
    pub(crate) fn param_box(&self, scale: f64) -> Option<Vec<(f64, f64)>> {
        match self {
            FeasibleSet::FinitePoints(_) => None,
            FeasibleSet::GridRegion { lo, hi, .. } => Some(lo.iter().zip(hi.iter()).map(|(l, h)| (*l, *h)).collect()),
            FeasibleSet::BuiltinCurve { curve, range, .. } => Some(curve.param_box(range * scale)),
            FeasibleSet::Restricted { base, .. } => base.param_box(scale),
        }
    }

    /// Nodes per parameter axis; always odd so that box midpoints are hit.
    pub(crate) fn nodes_per_axis(&self) -> usize {
        let n = match self {
            FeasibleSet::FinitePoints(p) => p.len(),
            FeasibleSet::GridRegion { resolution, .. } => resolution + 1,
            FeasibleSet::BuiltinCurve { density, .. } => *density,
            FeasibleSet::Restricted { base, .. } => base.nodes_per_axis(),
        };
        if n % 2 == 0 {
            n + 1
        } else {
            n
        }
    }

    /// Whether escalating the parameter range can reveal new points.
    pub(crate) fn is_bounded_sampler(&self) -> bool {
        match self {
            FeasibleSet::FinitePoints(_) | FeasibleSet::GridRegion { .. } => true,
            FeasibleSet::BuiltinCurve { curve, .. } => curve.facts().compact.is_true(),
            FeasibleSet::Restricted { base, .. } => base.is_bounded_sampler(),
        }
    }

    pub(crate) fn map(&self, p: &[f64]) -> Result<Option<Point>> {
        match self {
            FeasibleSet::FinitePoints(_) => Ok(None),
            FeasibleSet::GridRegion { membership, .. } => {
                let y = Point::from(p.to_vec());
                match membership {
                    Some(m) if !m.contains(&y)? => Ok(None),
                    _ => Ok(Some(y)),
                }
            }
            FeasibleSet::BuiltinCurve { curve, .. } => Ok(curve.map(p)),
            FeasibleSet::Restricted { base, level, t0 } => match base.map(p)? {
                Some(y) if level.level_contains(&y, *t0)? => Ok(Some(y)),
                _ => Ok(None),
            },
        }
    }

    /// Points outside the parameterized part (all points for finite sets).
    pub(crate) fn extra_points(&self) -> Result<Vec<Point>> {
        match self {
            FeasibleSet::FinitePoints(p) => Ok(p.clone()),
            FeasibleSet::GridRegion { .. } => Ok(vec![]),
            FeasibleSet::BuiltinCurve { curve, .. } => Ok(curve.extra_points()),
            FeasibleSet::Restricted { base, level, t0 } => {
                let mut out = Vec::new();
                for y in base.extra_points()? {
                    if level.level_contains(&y, *t0)? {
                        out.push(y);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Regular sample of the set at range multiplier `scale`.
    pub(crate) fn sample(&self, scale: f64) -> Result<Vec<Sample>> {
        let mut out: Vec<Sample> = Vec::new();
        if let Some(bx) = self.param_box(scale) {
            let n = self.nodes_per_axis();
            for params in grid_nodes(&bx, n) {
                if let Some(point) = self.map(&params)? {
                    out.push(Sample { params, point });
                }
            }
        }
        for point in self.extra_points()? {
            out.push(Sample { params: vec![], point });
        }
        Ok(out)
    }

    /// Node spacing per parameter axis at range multiplier `scale`.
    pub(crate) fn spacing(&self, scale: f64) -> Vec<f64> {
        let n = self.nodes_per_axis();
        self.param_box(scale).unwrap_or_default().iter().map(|(lo, hi)| (hi - lo) / (n - 1) as f64).collect()
    }
}

/// Cartesian grid with `n` nodes per axis; `lo + (hi - lo) * i / (n - 1)`.
pub(crate) fn grid_nodes(bx: &[(f64, f64)], n: usize) -> Vec<Vec<f64>> {
    let axis = |(lo, hi): (f64, f64)| -> Vec<f64> {
        if lo == hi {
            return vec![lo];
        }
        (0..n).map(|i| lo + (hi - lo) * (i as f64 / (n - 1) as f64)).collect()
    };
    let mut out: Vec<Vec<f64>> = vec![vec![]];
    for &range in bx {
        let vals = axis(range);
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

fn box_corners(lo: &Point, hi: &Point) -> Option<Vec<Point>> {
    let dim = lo.dim();
    if dim > 3 {
        return None;
    }
    Some(
        (0..1usize << dim)
            .map(|mask| {
                Point::from((0..dim).map(|j| if mask >> j & 1 == 1 { hi[j] } else { lo[j] }).collect::<Vec<_>>())
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_nodes_include_endpoints_and_midpoint() {
        let nodes = grid_nodes(&[(-2.0, 2.0), (0.0, 1.0)], 5);
        assert_eq!(nodes.len(), 25);
        assert!(nodes.contains(&vec![0.0, 0.5]));
        assert!(nodes.contains(&vec![2.0, 1.0]));
    }

    #[test]
    fn triangle_sample() {
        let f = FeasibleSet::curve("triangle_ex311", 2.0, 21).unwrap();
        let s = f.sample(1.0).unwrap();
        // 21 * 22 / 2 nodes below the diagonal
        assert_eq!(s.len(), 231);
        assert!(s.iter().any(|x| x.point == Point::from([0.0, 0.0])));
    }

    #[test]
    fn parabola_sample_contains_isolated_point() {
        let f = FeasibleSet::curve_default("parabola_arc_ex617").unwrap();
        let s = f.sample(1.0).unwrap();
        assert!(s.iter().any(|x| x.point == Point::from([-1.0, 0.0]) && x.params.is_empty()));
    }

    #[test]
    fn grid_membership_filter() {
        let disk = SetRep::orthant(2);
        let f = FeasibleSet::grid(Point::from([-1.0, -1.0]), Point::from([1.0, 1.0]), 4, Some(disk)).unwrap();
        let s = f.sample(1.0).unwrap();
        assert_eq!(s.len(), 9);
        assert!(FeasibleSet::grid(Point::from([0.0]), Point::from([1.0]), 1, None).is_err());
    }

    #[test]
    fn finite_facts() {
        let f = FeasibleSet::finite(vec![Point::from([1.0, 5.0]), Point::from([3.0, -2.0])]).unwrap();
        let facts = f.facts();
        assert_eq!(facts.lower_bound, Some(Point::from([1.0, -2.0])));
        assert_eq!(facts.convex, TriBool::False);
        assert_eq!(facts.linear_lower_bound(&Point::from([1.0, 1.0])), Some(1.0));
        assert!(FeasibleSet::finite(vec![]).is_err());
    }

    #[test]
    fn wedge_outer_description_bounds_sum() {
        let facts = FeasibleSet::curve_default("wedge_s613d1").unwrap().facts();
        // y1 + y2 >= 0 on the wedge
        assert_eq!(facts.linear_lower_bound(&Point::from([1.0, 1.0])), Some(0.0));
        assert_eq!(facts.linear_lower_bound(&Point::from([0.0, 1.0])), None);
    }
}
