//! Kostant weight multiplicities and Weyl alternation sets for the rank-2
//! simple Lie algebras A2, B2, C2, D2 and G2.
//!
//! The closed-form inequality tables in [`altcond`] are checked against the
//! brute-force partition-function oracle in [`kwmf`]; [`geometry`] and
//! [`render`] turn the resulting sets into lattice diagrams.

pub mod altcond;
pub mod geometry;
pub mod kostant;
pub mod kwmf;
pub mod render;
pub mod rootsys;
pub mod surd;
pub mod sweep;
pub mod weightlat;

/// Exact rational scalar used throughout the crate.
pub type Q = num_rational::Ratio<i64>;

pub use altcond::{alt_set_closed, member_closed, theorem_case, ClosedForm};
pub use geometry::{classify_shape, diagram, empty_region, DiagramGrid, ShapeLabel, Window};
pub use kostant::{partition, partition_a2_closed};
pub use kwmf::{alt_set_oracle, multiplicity, multiplicity_restricted, AltSet};
pub use render::{emit_csv, emit_svg, emit_tikz, Palette};
pub use rootsys::{algebra_data, apply, weyl_group, Algebra, WeylElement, WeylGroup};
pub use sweep::{verify, Mode, SweepReport};
pub use weightlat::{in_root_lattice, sl3_param, to_fund_basis, to_root_basis, Basis, FundCoords, Weight};
