use std::borrow::Cow;

use super::builtin::BuiltinSet;
use super::feasibility::find_feasible_point;
use super::generators::generators_to_halfspaces;
use super::point::{dot, geom_eps, Point};
use super::tribool::TriBool;
use crate::error::{Error, Result};

/// Closed halfspace `{y : <normal, y> >= offset}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    pub normal: Point,
    pub offset: f64,
}

impl Halfspace {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroNormal);
        }
        if !offset.is_finite() {
            return Err(Error::InvalidPoint("halfspace offset is not finite".into()));
        }
        Ok(Halfspace { normal, offset })
    }

    pub(crate) fn new_unchecked(normal: Point, offset: f64) -> Self {
        Halfspace { normal, offset }
    }

    pub fn value(&self, y: &Point) -> f64 {
        dot(&self.normal, y)
    }

    /// Tolerance for treating `<w, u>` as zero relative to the magnitudes involved.
    pub(crate) fn direction_eps(&self, u: &Point) -> f64 {
        1e-12 * self.normal.norm2() * u.norm2()
    }
}

/// Representation of a proper closed set `H ⊆ R^ℓ`.
#[derive(Debug, Clone, PartialEq)]
pub enum SetRep {
    /// Intersection of finitely many closed halfspaces.
    Halfspaces { dim: usize, rows: Vec<Halfspace> },
    /// Nonnegative orthant `R^ℓ_+`.
    Orthant(usize),
    /// Convex cone spanned by the generators; the facet description is
    /// computed once at construction (ℓ <= 3 only).
    GeneratorCone { generators: Vec<Point>, facets: Vec<Halfspace> },
    /// Analytic set from the builtin registry.
    Builtin(BuiltinSet),
}

impl SetRep {
    pub fn halfspaces(rows: Vec<Halfspace>) -> Result<Self> {
        let first = rows.first().ok_or_else(|| Error::Empty("halfspace intersection needs at least one row".into()))?;
        let dim = first.normal.dim();
        for r in &rows {
            r.normal.check_dim(dim)?;
            if r.normal.is_zero() {
                return Err(Error::ZeroNormal);
            }
        }
        Ok(SetRep::Halfspaces { dim, rows })
    }

    pub fn orthant(dim: usize) -> Self {
        SetRep::Orthant(dim)
    }

    pub fn generator_cone(generators: Vec<Point>) -> Result<Self> {
        let facets = generators_to_halfspaces(&generators)?;
        Ok(SetRep::GeneratorCone { generators, facets })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Ok(SetRep::Builtin(name.parse()?))
    }

    pub fn dim(&self) -> usize {
        match self {
            SetRep::Halfspaces { dim, .. } => *dim,
            SetRep::Orthant(dim) => *dim,
            SetRep::GeneratorCone { generators, .. } => generators[0].dim(),
            SetRep::Builtin(b) => b.dim(),
        }
    }

    /// Halfspace rows when the set is polyhedral.
    pub fn polyhedral_rows(&self) -> Option<Cow<'_, [Halfspace]>> {
        match self {
            SetRep::Halfspaces { rows, .. } => Some(Cow::Borrowed(rows)),
            SetRep::Orthant(dim) => {
                Some(Cow::Owned((0..*dim).map(|j| Halfspace::new_unchecked(Point::unit(*dim, j), 0.0)).collect()))
            }
            SetRep::GeneratorCone { facets, .. } => Some(Cow::Borrowed(facets)),
            SetRep::Builtin(b) => b.polyhedral_rows().map(Cow::Owned),
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        self.polyhedral_rows().is_some()
    }

    fn check(&self, y: &Point) -> Result<()> {
        y.check_dim(self.dim())
    }

    /// `y ∈ S`, with equality tolerance `1e-12 (1 + |y|_inf)`.
    pub fn contains(&self, y: &Point) -> Result<bool> {
        self.contains_within(y, geom_eps(y))
    }

    /// Membership with an explicit slack `eps` per unit of row offset.
    pub fn contains_within(&self, y: &Point, eps: f64) -> Result<bool> {
        self.check(y)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.contains_within(y, eps));
        }
        let rows = self.polyhedral_rows().expect("non-builtin sets are polyhedral");
        Ok(rows.iter().all(|r| r.value(y) >= r.offset - eps * (1.0 + r.offset.abs())))
    }

    /// `u ∈ 0⁺S`.
    pub fn recession_contains(&self, u: &Point) -> Result<TriBool> {
        self.check(u)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.recession_contains(u).into());
        }
        let rows = self.polyhedral_rows().expect("polyhedral");
        Ok(rows.iter().all(|r| r.value(u) >= -r.direction_eps(u)).into())
    }

    /// `y ∈ int S`.
    ///
    /// For halfspace intersections the strict-inequality test is exact: a
    /// point satisfying every row strictly has an open neighbourhood inside
    /// the set, and a point on some row's hyperplane does not since every
    /// normal is nonzero.
    pub fn interior_contains(&self, y: &Point) -> Result<TriBool> {
        self.check(y)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.interior_contains(y).into());
        }
        let eps = geom_eps(y);
        let rows = self.polyhedral_rows().expect("polyhedral");
        Ok(rows.iter().all(|r| r.value(y) > r.offset + eps * (1.0 + r.offset.abs())).into())
    }

    /// `u ∈ int 0⁺S`.
    pub fn recession_interior_contains(&self, u: &Point) -> Result<TriBool> {
        self.check(u)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.recession_interior_contains(u).into());
        }
        let rows = self.polyhedral_rows().expect("polyhedral");
        Ok(rows.iter().all(|r| r.value(u) > r.direction_eps(u)).into())
    }

    /// Whether `S` contains a line `x + R d`.
    pub fn contains_line_in_direction(&self, d: &Point) -> Result<TriBool> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::Precondition("line direction must be nonzero".into()));
        }
        match self {
            SetRep::Builtin(b) => Ok(b.contains_line_in_direction(d).into()),
            SetRep::Orthant(_) | SetRep::GeneratorCone { .. } => {
                // pointed cones contain no lines
                Ok(TriBool::False)
            }
            SetRep::Halfspaces { rows, .. } => {
                let parallel = rows.iter().all(|r| r.value(d).abs() <= r.direction_eps(d));
                if !parallel {
                    return Ok(TriBool::False);
                }
                Ok(self.is_nonempty())
            }
        }
    }

    /// Nonemptiness; exact except for halfspace intersections where a
    /// bounded feasibility search is run.
    pub fn is_nonempty(&self) -> TriBool {
        match self {
            SetRep::Halfspaces { dim, rows } => {
                if find_feasible_point(*dim, rows).is_some() {
                    TriBool::True
                } else {
                    TriBool::Unknown
                }
            }
            _ => TriBool::True,
        }
    }

    /// Whether the set is convex.  Every representation here is.
    pub fn is_convex(&self) -> TriBool {
        TriBool::True
    }

    /// Whether the set is a cone (`λ c ∈ S` for `λ >= 0`).
    pub fn is_cone(&self) -> TriBool {
        match self {
            SetRep::Orthant(_) | SetRep::GeneratorCone { .. } => TriBool::True,
            SetRep::Builtin(b) => b.is_cone().into(),
            SetRep::Halfspaces { rows, .. } => {
                if rows.iter().all(|r| r.offset == 0.0) {
                    TriBool::True
                } else if rows.iter().any(|r| r.offset > 0.0) {
                    // 0 is not a member
                    TriBool::False
                } else {
                    TriBool::Unknown
                }
            }
        }
    }

    /// `S ∩ (-S) ⊆ {0}`; decided for cones and the builtin registry.
    pub fn is_pointed(&self) -> TriBool {
        match self {
            SetRep::Orthant(_) | SetRep::GeneratorCone { .. } => TriBool::True,
            SetRep::Builtin(b) => b.is_pointed().into(),
            SetRep::Halfspaces { dim, rows } => {
                if self.is_cone() != TriBool::True {
                    return TriBool::Unknown;
                }
                // a polyhedral cone is pointed iff its normals span R^ℓ
                let normals: Vec<&Point> = rows.iter().map(|r| &r.normal).collect();
                TriBool::from(rank(&normals) == *dim)
            }
        }
    }

    /// Nontrivial (≠ {0}, ≠ R^ℓ, nonempty) closed pointed convex cone.
    pub fn is_nontrivial_pointed_convex_cone(&self) -> TriBool {
        let cone = self.is_cone().and(self.is_pointed()).and(self.is_convex());
        if !cone.is_true() {
            return cone;
        }
        // a pointed cone with at least one nonzero recession direction is
        // neither {0} nor R^ℓ; the orthant's first axis or a generator serves
        let witness = match self {
            SetRep::GeneratorCone { generators, .. } => generators[0].clone(),
            _ => {
                let probe = Point::from(vec![1.0; self.dim()]);
                if self.contains(&probe).unwrap_or(false) {
                    probe
                } else {
                    return TriBool::Unknown;
                }
            }
        };
        TriBool::from(!witness.is_zero())
    }

    /// `H + R_> k ⊆ int H`.
    pub fn shift_into_interior(&self, k: &Point) -> Result<TriBool> {
        self.check(k)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.shift_into_interior(k));
        }
        let rows = self.polyhedral_rows().expect("polyhedral");
        if rows.iter().any(|r| r.value(k) < -r.direction_eps(k)) {
            return Ok(TriBool::False);
        }
        if rows.iter().all(|r| r.value(k) > r.direction_eps(k)) {
            return Ok(TriBool::True);
        }
        // a row parallel to k stays active along the shift whenever that
        // row is attained; for cones every row is attained at the apex
        Ok(if self.is_cone().is_true() { TriBool::False } else { TriBool::Unknown })
    }

    /// `H + (R^ℓ_+ \ {0}) ⊆ int H`.
    pub fn orthant_shift_into_interior(&self) -> TriBool {
        if let SetRep::Builtin(b) = self {
            return b.orthant_shift_into_interior().into();
        }
        let rows = self.polyhedral_rows().expect("polyhedral");
        if rows.iter().all(|r| r.normal.iter().all(|w| *w > 0.0)) {
            return TriBool::True;
        }
        if self.is_cone().is_true() {
            TriBool::False
        } else {
            TriBool::Unknown
        }
    }

    /// Whether `phi_{a-H,k}` is real-valued on all of `R^ℓ`; exact for
    /// polyhedral sets and declared for builtins.
    pub fn finite_valued_direction(&self, k: &Point) -> Result<TriBool> {
        self.check(k)?;
        if let SetRep::Builtin(b) = self {
            return Ok(b.finite_valued(k));
        }
        // every row must move with k, otherwise some y violates a row
        // parallel to k for all t
        self.recession_interior_contains(k)
    }

    /// Boundary samples and extreme recession rays, when available.
    ///
    /// For polyhedral cones the generators alone are returned: every
    /// nonzero element is a nonnegative combination of them.
    pub fn boundary_samples(&self, n: usize) -> Option<(Vec<Point>, Vec<Point>)> {
        match self {
            SetRep::Builtin(b) => Some(b.boundary_samples(n)),
            SetRep::Orthant(dim) => Some((vec![], (0..*dim).map(|j| Point::unit(*dim, j)).collect())),
            SetRep::GeneratorCone { generators, .. } => Some((vec![], generators.clone())),
            SetRep::Halfspaces { .. } => None,
        }
    }
}

/// Numerical rank of a set of vectors (Gaussian elimination with pivoting).
pub(crate) fn rank(vectors: &[&Point]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let cols = vectors[0].dim();
    let mut m: Vec<Vec<f64>> = vectors
        .iter()
        .map(|v| {
            let s = v.norm_inf().max(f64::MIN_POSITIVE);
            v.iter().map(|x| x / s).collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let pivot = (r..m.len()).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()));
        let Some(p) = pivot else { break };
        if m[p][c].abs() <= 1e-10 {
            continue;
        }
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r {
                let f = m[i][c] / m[r][c];
                for cc in c..cols {
                    m[i][cc] -= f * m[r][cc];
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [f64; N]) -> Point {
        Point::from(v)
    }

    fn halfplane_rows() -> SetRep {
        SetRep::halfspaces(vec![Halfspace::new(p([1.0, 0.0]), 0.0).unwrap()]).unwrap()
    }

    #[test]
    fn contains_examples() {
        assert!(SetRep::orthant(2).contains(&p([0.0, 0.0])).unwrap());
        let hx = SetRep::builtin("halfplane_x_2d").unwrap();
        assert!(!hx.contains(&p([-1.0, 5.0])).unwrap());
        let hyp = SetRep::builtin("hyperbola_epi_2d").unwrap();
        assert!(hyp.contains(&p([2.0, 0.5])).unwrap());
        assert!(!hyp.contains(&p([2.0, 0.4])).unwrap());
        assert!(!hyp.contains(&p([-2.0, -0.5])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = SetRep::orthant(2).contains(&p([1.0, 2.0, 3.0])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, got: 3 });
    }

    #[test]
    fn zero_normal_rejected() {
        assert_eq!(Halfspace::new(p([0.0, 0.0]), 1.0).unwrap_err(), Error::ZeroNormal);
    }

    #[test]
    fn recession_examples() {
        assert_eq!(SetRep::orthant(2).recession_contains(&p([1.0, 1.0])).unwrap(), TriBool::True);
        let par = SetRep::builtin("parabola_epi_2d").unwrap();
        assert_eq!(par.recession_contains(&p([0.0, 1.0])).unwrap(), TriBool::True);
        assert_eq!(par.recession_contains(&p([1.0, 0.0])).unwrap(), TriBool::False);
        // zero is always a recession direction
        assert_eq!(par.recession_contains(&p([0.0, 0.0])).unwrap(), TriBool::True);
    }

    #[test]
    fn interior_examples() {
        let o = SetRep::orthant(2);
        assert_eq!(o.interior_contains(&p([1.0, 1.0])).unwrap(), TriBool::True);
        assert_eq!(o.interior_contains(&p([0.0, 1.0])).unwrap(), TriBool::False);
        let sh = SetRep::builtin("shifted_hyperbola_2d").unwrap();
        assert_eq!(sh.interior_contains(&p([0.0, 0.0])).unwrap(), TriBool::False);
        assert!(sh.contains(&p([0.0, 0.0])).unwrap());
    }

    #[test]
    fn recession_interior_examples() {
        assert_eq!(SetRep::orthant(3).recession_interior_contains(&p([1.0, 1.0, 1.0])).unwrap(), TriBool::True);
        assert_eq!(SetRep::orthant(2).recession_interior_contains(&p([1.0, 0.0])).unwrap(), TriBool::False);
        let par = SetRep::builtin("parabola_epi_2d").unwrap();
        assert_eq!(par.recession_interior_contains(&p([0.0, 1.0])).unwrap(), TriBool::False);
    }

    #[test]
    fn line_examples() {
        let hx = SetRep::builtin("halfplane_x_2d").unwrap();
        assert_eq!(hx.contains_line_in_direction(&p([0.0, 1.0])).unwrap(), TriBool::True);
        assert_eq!(SetRep::orthant(2).contains_line_in_direction(&p([1.0, 0.0])).unwrap(), TriBool::False);
        let hyp = SetRep::builtin("hyperbola_epi_2d").unwrap();
        assert_eq!(hyp.contains_line_in_direction(&p([1.0, 0.0])).unwrap(), TriBool::False);
        // same verdict through the halfspace route, which runs the feasibility search
        assert_eq!(halfplane_rows().contains_line_in_direction(&p([0.0, -1.0])).unwrap(), TriBool::True);
    }

    #[test]
    fn empty_halfspace_intersection_has_unknown_lines() {
        // y1 >= 1 and -y1 >= 0 is empty
        let empty = SetRep::halfspaces(vec![
            Halfspace::new(p([1.0, 0.0]), 1.0).unwrap(),
            Halfspace::new(p([-1.0, 0.0]), 0.0).unwrap(),
        ])
        .unwrap();
        assert_eq!(empty.contains_line_in_direction(&p([0.0, 1.0])).unwrap(), TriBool::Unknown);
    }

    #[test]
    fn cone_classification() {
        assert_eq!(SetRep::orthant(2).is_nontrivial_pointed_convex_cone(), TriBool::True);
        let hx = SetRep::builtin("halfplane_x_2d").unwrap();
        assert_eq!(hx.is_cone(), TriBool::True);
        assert_eq!(hx.is_pointed(), TriBool::False);
        assert_eq!(halfplane_rows().is_pointed(), TriBool::False);
        let hyp = SetRep::builtin("hyperbola_epi_2d").unwrap();
        assert_eq!(hyp.is_cone(), TriBool::False);
    }

    #[test]
    fn rank_of_vectors() {
        let a = p([1.0, 0.0, 0.0]);
        let b = p([2.0, 0.0, 0.0]);
        let c = p([0.0, 1.0, 0.0]);
        assert_eq!(rank(&[&a, &b]), 1);
        assert_eq!(rank(&[&a, &b, &c]), 2);
    }
}
