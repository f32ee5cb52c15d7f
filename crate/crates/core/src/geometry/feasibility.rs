use super::point::Point;
use super::setrep::Halfspace;

const BOX: f64 = 1e6;
const ITERATIONS: usize = 10_000;

/// Searches for a point of a halfspace intersection inside `[-1e6, 1e6]^ℓ`
/// by cyclic projection onto violated rows.  `None` means the search gave
/// up, not that the set is empty.
pub fn find_feasible_point(dim: usize, rows: &[Halfspace]) -> Option<Point> {
    let violation_tol = |r: &Halfspace| 1e-9 * (1.0 + r.offset.abs());
    let mut y = vec![0.0; dim];
    for _ in 0..ITERATIONS {
        let mut all_ok = true;
        for r in rows {
            let v: f64 = r.normal.iter().zip(&y).map(|(w, x)| w * x).sum();
            if v < r.offset - violation_tol(r) {
                all_ok = false;
                let nn: f64 = r.normal.iter().map(|w| w * w).sum();
                // overshoot slightly so the row ends strictly satisfied
                let step = (r.offset - v) / nn * (1.0 + 1e-9) + 1e-12;
                for (x, w) in y.iter_mut().zip(r.normal.iter()) {
                    *x += step * w;
                }
            }
        }
        for x in y.iter_mut() {
            *x = x.clamp(-BOX, BOX);
        }
        if all_ok {
            return Some(Point::from(y));
        }
    }
    let p = Point::from(y);
    rows.iter().all(|r| r.value(&p) >= r.offset - violation_tol(r)).then_some(p)
}
