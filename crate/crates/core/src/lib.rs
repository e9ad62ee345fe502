//! Exact-arithmetic construction of integral bases for the irreducible
//! modules over the Clifford algebras C_k (generators squaring to -1), the
//! H-type Lie algebras they carry, and the explicit cocompact lattices of
//! the corresponding two-step nilpotent groups.
//!
//! Everything runs on signed permutations and small integers: a basis is
//! integral exactly when every generator permutes it up to sign, which
//! makes all Lie algebra structure constants 0, +1, or -1. Constructions
//! self-verify the Clifford relations on assembly, so a value of one of the
//! module types is a certificate that the identities hold.

pub mod blade;
pub mod dyadic;
pub mod error;
pub mod export;
pub mod graded;
pub mod growth;
pub mod lattice;
pub mod lie;
pub mod perm;
pub mod seeds;
pub mod ungraded;

pub use blade::{volume_element, Blade};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use export::ExportRecord;
pub use graded::{build_graded, build_graded_capped, graded_tensor, induce_graded, GradedRep, DEFAULT_K_CAP};
pub use growth::{
    ball_count, generating_set, half_center_reachable, log_log_slope, GenSet, GrowthSeries,
};
pub use lattice::{
    commutator_basis, group_commutator, group_inverse, group_mul, growth_degree, lattice_mul,
    reduce_to_fundamental, GroupElement, LatticeElement,
};
pub use lie::{check_plus_minus_iso, structure_constants, verify_htype, StructTensor};
pub use perm::{verify_clifford, verify_even_integral, CheckReport, SignedPerm, Violation};
pub use seeds::{octonion_table, phi_even_twist, quaternion_table, seed_graded, AlgebraTable};
pub use ungraded::{
    expected_graded_dim, expected_ungraded_dim, extract_irreducible, extract_irreducible_capped,
    omega_action, split_by_omega, UngradedRep, Variant,
};
