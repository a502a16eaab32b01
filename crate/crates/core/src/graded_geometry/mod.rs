//! Graded charts, weights, polynomial vector fields and their brackets.

mod chart;
pub mod point_fields;
mod vector_field;

pub use chart::{fn_weight, Chart, GradedFunctionWeight};
pub use vector_field::{core_to_vf, vf_bracket, vf_project, vf_to_core, vf_weight, VectorField};
