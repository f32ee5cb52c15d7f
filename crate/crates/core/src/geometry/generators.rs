//! Facet description of a pointed, full-dimensional cone from its
//! generators in dimension at most three.

use super::point::{dot, Point};
use super::setrep::{rank, Halfspace};
use crate::error::{Error, Result};

/// Converts cone generators into an equivalent halfspace description.
///
/// In `R^3` candidate facet normals are cross products of generator pairs,
/// kept when every generator lies on their nonnegative side; in `R^2` they
/// are the two perpendiculars of each generator.  The cone is pointed iff
/// the surviving normals span the space.
pub fn generators_to_halfspaces(generators: &[Point]) -> Result<Vec<Halfspace>> {
    let first = generators.first().ok_or_else(|| Error::DegenerateGenerators("no generators given".into()))?;
    let dim = first.dim();
    for g in generators {
        g.check_dim(dim)?;
        if g.is_zero() {
            return Err(Error::DegenerateGenerators("generators must be nonzero".into()));
        }
        if g.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("generator coordinate is not finite".into()));
        }
    }
    if dim > 3 {
        return Err(Error::Unsupported(format!("generator cones are supported only in dimension <= 3, got {dim}")));
    }
    let refs: Vec<&Point> = generators.iter().collect();
    if rank(&refs) < dim {
        return Err(Error::DegenerateGenerators(format!("generators span fewer than {dim} dimensions")));
    }

    let candidates: Vec<Point> = match dim {
        1 => vec![Point::from([1.0]), Point::from([-1.0])],
        2 => generators.iter().flat_map(|g| [Point::from([-g[1], g[0]]), Point::from([g[1], -g[0]])]).collect(),
        _ => {
            let mut out = Vec::new();
            for (i, a) in generators.iter().enumerate() {
                for b in &generators[i + 1..] {
                    let n = cross(a, b);
                    if n.norm_inf() > 1e-12 * a.norm_inf() * b.norm_inf() {
                        out.push(n.neg());
                        out.push(n);
                    }
                }
            }
            out
        }
    };

    let mut facets: Vec<Point> = Vec::new();
    for n in candidates {
        let supporting = generators.iter().all(|g| dot(&n, g) >= -1e-12 * n.norm2() * g.norm2());
        if !supporting {
            continue;
        }
        let n = n.scale(1.0 / n.norm_inf());
        if !facets.iter().any(|f| f.dist_inf(&n) <= 1e-12) {
            facets.push(n);
        }
    }

    let refs: Vec<&Point> = facets.iter().collect();
    if facets.is_empty() || rank(&refs) < dim {
        return Err(Error::NonPointedCone);
    }

    let rows: Vec<Halfspace> = facets.into_iter().map(|n| Halfspace::new_unchecked(n, 0.0)).collect();
    verify_round_trip(generators, &rows)?;
    Ok(rows)
}

fn cross(a: &Point, b: &Point) -> Point {
    Point::from([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])
}

/// Every generator and every pairwise midpoint must satisfy all rows.
fn verify_round_trip(generators: &[Point], rows: &[Halfspace]) -> Result<()> {
    let inside = |y: &Point| rows.iter().all(|r| r.value(y) >= -1e-9 * r.normal.norm2() * y.norm2());
    for (i, a) in generators.iter().enumerate() {
        if !inside(a) {
            return Err(Error::DegenerateGenerators(format!("generator {i} fails round trip")));
        }
        for b in &generators[i + 1..] {
            if !inside(&a.add(b).scale(0.5)) {
                return Err(Error::DegenerateGenerators("midpoint fails round trip".into()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SetRep;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orthant_generators_give_orthant_rows() {
        let g = vec![Point::from([1.0, 0.0, 0.0]), Point::from([0.0, 1.0, 0.0]), Point::from([0.0, 0.0, 1.0])];
        let rows = generators_to_halfspaces(&g).unwrap();
        assert_eq!(rows.len(), 3);
        for j in 0..3 {
            assert!(rows.iter().any(|r| r.normal == Point::unit(3, j) && r.offset == 0.0));
        }
    }

    #[test]
    fn skewed_cone_contains_its_combinations() {
        let g = vec![Point::from([2.0, 0.0, -1.0]), Point::from([0.0, 2.0, -1.0]), Point::from([-1.0, 0.0, 2.0])];
        let cone = SetRep::generator_cone(g.clone()).unwrap();
        let SetRep::GeneratorCone { facets, .. } = &cone else { unreachable!() };
        assert_eq!(facets.len(), 3);
        assert!(cone.interior_contains(&Point::from([1.0, 1.0, 1.0])).unwrap().is_true());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let c: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..5.0)).collect();
            let y = g[0].scale(c[0]).add(&g[1].scale(c[1])).add(&g[2].scale(c[2]));
            assert!(cone.contains(&y).unwrap(), "{y} should be in the cone");
        }
        // the negative of a generator is outside
        assert!(!cone.contains(&g[0].neg()).unwrap());
    }

    #[test]
    fn coplanar_generators_rejected() {
        let g = vec![Point::from([1.0, 0.0, 0.0]), Point::from([2.0, 0.0, 0.0]), Point::from([0.0, 1.0, 0.0])];
        assert!(matches!(generators_to_halfspaces(&g), Err(Error::DegenerateGenerators(_))));
    }

    #[test]
    fn halfplane_cone_is_not_pointed() {
        let g = vec![Point::from([1.0, 0.0]), Point::from([-1.0, 0.0]), Point::from([0.0, 1.0])];
        assert_eq!(generators_to_halfspaces(&g).unwrap_err(), Error::NonPointedCone);
    }

    #[test]
    fn planar_cone() {
        let g = vec![Point::from([1.0, 0.0]), Point::from([1.0, 1.0])];
        let cone = SetRep::generator_cone(g).unwrap();
        assert!(cone.contains(&Point::from([3.0, 1.0])).unwrap());
        assert!(!cone.contains(&Point::from([1.0, 2.0])).unwrap());
        assert!(!cone.contains(&Point::from([1.0, -0.1])).unwrap());
    }

    #[test]
    fn high_dimension_unsupported() {
        let g: Vec<Point> = (0..4).map(|j| Point::unit(4, j)).collect();
        assert!(matches!(generators_to_halfspaces(&g), Err(Error::Unsupported(_))));
    }
}
