//! Fixed-seed fixtures for the benchmarks.

use gerstewitz::{FeasibleSet, GerstewitzFunctional, Halfspace, Point, ProblemInstance, SetRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 42;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_point(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> Point {
    Point::from((0..dim).map(|_| rng.gen_range(-scale..scale)).collect::<Vec<_>>())
}

/// `m` halfspaces whose normals make an acute angle with `k = (1, ..., 1)`.
pub fn polyhedral_functional(rng: &mut ChaCha8Rng, dim: usize, m: usize) -> GerstewitzFunctional {
    let k = Point::from(vec![1.0; dim]);
    let rows = (0..m)
        .map(|_| {
            let w = Point::from((0..dim).map(|_| rng.gen_range(0.1..1.0)).collect::<Vec<_>>());
            Halfspace::new(w, rng.gen_range(-1.0..0.0)).unwrap()
        })
        .collect();
    GerstewitzFunctional::new(Point::zeros(dim), SetRep::halfspaces(rows).unwrap(), k).unwrap()
}

/// `n` random points with `H = R^dim_+`, `a = 0`, `k = (1, ..., 1)`.
pub fn orthant_problem(rng: &mut ChaCha8Rng, dim: usize, n: usize) -> ProblemInstance {
    let pts = (0..n).map(|_| random_point(rng, dim, 5.0)).collect();
    let g = GerstewitzFunctional::new(Point::zeros(dim), SetRep::orthant(dim), Point::from(vec![1.0; dim])).unwrap();
    ProblemInstance::new(FeasibleSet::finite(pts).unwrap(), g).unwrap()
}
