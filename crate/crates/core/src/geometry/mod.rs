//! Set representations in `R^ℓ` and the membership predicates built on them.
//!
//! All sets live in a finite-dimensional space, so core and interior
//! coincide.  Polyhedral representations (halfspace intersections, the
//! orthant, generator cones) are decided exactly up to the membership
//! tolerance `1e-12 (1 + |y|_inf)`; builtin sets use closed-form formulas.

mod builtin;
mod feasibility;
mod generators;
mod point;
mod setrep;
mod tribool;

pub use builtin::BuiltinSet;
pub use feasibility::find_feasible_point;
pub use generators::generators_to_halfspaces;
pub use point::{geom_eps, Point};
pub use setrep::{Halfspace, SetRep};
pub use tribool::TriBool;

use crate::error::{Error, Result};

/// Facet description of a 3-dimensional generator cone.
pub fn generators_to_halfspaces_3d(generators: &[Point]) -> Result<SetRep> {
    if let Some(g) = generators.iter().find(|g| g.dim() != 3) {
        return Err(Error::DimensionMismatch { expected: 3, got: g.dim() });
    }
    let rows = generators_to_halfspaces(generators)?;
    SetRep::halfspaces(rows)
}
