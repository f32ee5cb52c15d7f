//! Minimizers over a parameter sweep against the efficient set of the
//! same feasible set.

use gerstewitz::efficiency::{eff_finite, DominationSet};
use gerstewitz::parameters::{sweep, ADomain, KDomain, SweepSpec};
use gerstewitz::solver::same_point_set;
use gerstewitz::{EvalOptions, FeasibleSet, Point, SetRep};

fn arc() -> Vec<Point> {
    // lower-left quarter of the unit circle plus dominated interior points
    let mut pts: Vec<Point> = (0..=12)
        .map(|i| {
            let th = std::f64::consts::PI * (1.0 + 0.5 * i as f64 / 12.0);
            Point::from([th.cos(), th.sin()])
        })
        .collect();
    pts.extend([Point::from([0.0, 0.0]), Point::from([-0.5, -0.5]), Point::from([0.5, -0.9])]);
    pts
}

#[test]
fn sweep_minimizers_cover_the_efficient_arc() {
    let pts = arc();
    let h = SetRep::orthant(2);
    let spec = SweepSpec {
        a_domain: ADomain::CoordinateZero { j: 0, lo: -3.0, hi: 3.0, resolution: 241 },
        k_domain: KDomain::Explicit(vec![Point::from([1.0, 1.0])]),
    };
    let rows = sweep(&FeasibleSet::finite(pts.clone()).unwrap(), &h, &spec, EvalOptions::default()).unwrap();
    assert_eq!(rows.len(), 241);
    let mut union: Vec<Point> = Vec::new();
    for row in &rows {
        let r = row.result.as_ref().unwrap();
        assert!(r.is_optimal());
        for y in r.minimizers() {
            if !union.contains(y) {
                union.push(y.clone());
            }
        }
    }
    let eff = eff_finite(&pts, &DominationSet::new(h, true).unwrap()).unwrap();
    assert_eq!(eff.len(), 13);
    assert!(same_point_set(&union, &eff, 0.0), "union {union:?} vs efficient {eff:?}");
}

#[test]
fn simplex_sweep_minimizers_are_weakly_efficient() {
    let pts = arc();
    let h = SetRep::orthant(2);
    let spec = SweepSpec {
        a_domain: ADomain::SumZero { lo: -1.0, hi: 1.0, resolution: 5 },
        k_domain: KDomain::Simplex { resolution: 8 },
    };
    let rows = sweep(&FeasibleSet::finite(pts.clone()).unwrap(), &h, &spec, EvalOptions::default()).unwrap();
    for row in &rows {
        for y in row.result.as_ref().unwrap().minimizers() {
            // no other point strictly better in both coordinates
            let beaten = pts.iter().any(|z| z[0] < y[0] - 1e-12 && z[1] < y[1] - 1e-12);
            assert!(!beaten, "{y} minimizes for k = {} but is not weakly efficient", row.k);
        }
    }
}
