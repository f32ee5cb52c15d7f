//! Random instance generators and brute-force oracles shared by the
//! integration tests.  Oracles here only use membership tests or their own
//! arithmetic, never the closed forms under test.

#![allow(dead_code)]

use gerstewitz::{Halfspace, Point, SetRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seed() -> u64 {
    std::env::var("GW_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(42)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

pub fn p<const N: usize>(v: [f64; N]) -> Point {
    Point::from(v)
}

pub fn uniform_point(rng: &mut ChaCha8Rng, dim: usize, lo: f64, hi: f64) -> Point {
    Point::from((0..dim).map(|_| rng.gen_range(lo..hi)).collect::<Vec<_>>())
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A random polyhedral `H` (at most 6 rows) with a direction `k ∈ 0⁺H`.
///
/// Every row has `<w, k> = 0` or `<w, k> >= 0.1 |w| |k|`, and at least one
/// row has the latter, so the closed form is well conditioned.
pub fn random_polyhedral(rng: &mut ChaCha8Rng, dim: usize) -> (SetRep, Point, Vec<(Vec<f64>, f64)>) {
    let k = loop {
        let k = uniform_point(rng, dim, -1.0, 1.0);
        if k.norm2() > 0.3 {
            break k;
        }
    };
    let kk = dot(&k, &k);
    let m = rng.gen_range(1..=6);
    let h0 = uniform_point(rng, dim, -1.0, 1.0);
    let mut rows = Vec::new();
    while rows.len() < m {
        let mut w: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let parallel = !rows.is_empty() && rng.gen_bool(0.2);
        if parallel {
            let c = dot(&w, &k) / kk;
            for (x, kj) in w.iter_mut().zip(k.iter()) {
                *x -= c * kj;
            }
        } else if dot(&w, &k) < 0.0 {
            w.iter_mut().for_each(|x| *x = -*x);
        }
        let wn = dot(&w, &w).sqrt();
        if wn < 0.2 {
            continue;
        }
        if !parallel && dot(&w, &k) < 0.1 * wn * kk.sqrt() {
            continue;
        }
        let b = dot(&w, &h0) - rng.gen_range(0.0..1.0);
        rows.push((w, b));
    }
    let hs = rows.iter().map(|(w, b)| Halfspace::new(Point::from(w.clone()), *b).unwrap()).collect();
    (SetRep::halfspaces(hs).unwrap(), k, rows)
}

/// Membership in `{h : <w_i, h> >= b_i}` with a relative slack.
pub fn rows_contain(rows: &[(Vec<f64>, f64)], y: &[f64], slack: f64) -> bool {
    rows.iter().all(|(w, b)| dot(w, y) >= b - slack * (1.0 + b.abs()))
}

/// Smallest `t` on a grid of step `step` with `y ∈ a - H + t k`, found by
/// a coarse scan over `[-range, range]` followed by a fine scan of the
/// first feasible cell.  `None` when no scanned level is feasible.
pub fn brute_force_level(
    contains: impl Fn(&Point) -> bool,
    a: &Point,
    k: &Point,
    y: &Point,
    range: f64,
    step: f64,
) -> Option<f64> {
    let member = |t: f64| contains(&a.axpy(t, k).sub(y));
    let coarse = 1.0;
    let mut t = -range;
    if member(t) {
        return Some(f64::NEG_INFINITY);
    }
    while t <= range {
        if member(t + coarse) {
            let n = (coarse / step).round() as usize;
            for i in 1..=n {
                let s = t + i as f64 * step;
                if member(s) {
                    return Some(s);
                }
            }
            return Some(t + coarse);
        }
        t += coarse;
    }
    None
}

/// Efficient points by direct pairwise comparison with a membership
/// closure for `D`.
pub fn brute_force_eff(points: &[Point], in_d: impl Fn(&[f64]) -> bool) -> Vec<Point> {
    let mut out = Vec::new();
    for (i, y0) in points.iter().enumerate() {
        let mut efficient = true;
        for (j, y) in points.iter().enumerate() {
            if i == j || y.coords() == y0.coords() {
                continue;
            }
            let diff: Vec<f64> = y0.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
            if in_d(&diff) {
                efficient = false;
                break;
            }
        }
        if efficient {
            out.push(y0.clone());
        }
    }
    out
}

/// Points on a small integer lattice so that ties and dominance occur.
pub fn lattice_points(rng: &mut ChaCha8Rng, dim: usize, n: usize) -> Vec<Point> {
    (0..n).map(|_| Point::from((0..dim).map(|_| rng.gen_range(-3..=3) as f64 * 0.5).collect::<Vec<_>>())).collect()
}
