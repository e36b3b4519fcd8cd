//! Deciding the Lefschetz system over Q and over Z.

mod enumerate;
mod feasibility;
mod rational;
mod relation;
pub mod smith;

pub use enumerate::nonneg_enumerate;
pub use feasibility::{
    certificate_combination, check_certificate, clear_denominators, explain_certificate,
    integer_feasibility, Feasibility, IntegerSystem, Verdict,
};
pub use rational::{rational_solve, AffineSolution, RationalSolution};
pub use relation::{parse_relations, relation_implied, LinearRelation, ORDER60_RELATIONS};
