//! Scalarization of vector optimization problems by translation-invariant
//! functionals.
//!
//! For a closed set `H ⊂ R^ℓ`, a reference point `a` and a direction
//! `k ∈ 0⁺H \ {0}` the functional
//!
//! ```text
//! phi_{a-H,k}(y) = inf { t ∈ R : y ∈ a - H + t k }
//! ```
//!
//! turns the vector problem over a feasible set `F` into the scalar problem
//! `min_{y ∈ F} phi_{a-H,k}(y)`.  The crate evaluates the functional
//! ([`functional`]), solves the scalar problem over finite and sampled sets
//! ([`solver`]), certifies existence of minimizers ([`existence`]), studies
//! how solutions move with `a` and `k` ([`parameters`]) and computes
//! efficient points ([`efficiency`]).  [`corpus`] holds the worked example
//! instances used by the command-line tool and the test suite.
//!
//! Everything lives in `R^ℓ`, so the algebraic interior (core) of a set is
//! its topological interior.

pub mod corpus;
pub mod efficiency;
pub mod error;
pub mod existence;
pub mod functional;
pub mod geometry;
pub mod parameters;
pub mod solver;

pub use error::{Error, Result};
pub use functional::{
    Certainty, Classification, EvalOptions, ExtendedReal, GerstewitzFunctional, PhiStatus, PropernessReport,
};
pub use geometry::{BuiltinSet, Halfspace, Point, SetRep, TriBool};
pub use solver::{FeasibleSet, ProblemInstance, SolveResult};
