//! Numerical semigroups with prescribed multiplicity, Frobenius number and
//! genus.
//!
//! A numerical semigroup is a cofinite, additively closed subset of ℕ
//! containing 0. This crate stores them canonically (Frobenius number plus
//! the element list up to the conductor) and builds on that:
//!
//! * [`semigroup`]: the core type, construction from generators or element
//!   lists, and the basic queries (membership, genus, multiplicity, ratio,
//!   depth, minimal generators, irreducibility).
//! * [`tree`]: the rooted tree carried by the irreducible semigroups with
//!   fixed multiplicity and Frobenius number, and its breadth-first
//!   enumeration.
//! * [`classes`]: full enumeration of all semigroups with fixed multiplicity
//!   and Frobenius number (or genus) by expanding an equivalence class around
//!   each irreducible one.
//! * [`kunz`]: Apéry sets, Kunz coordinate vectors, and the linear systems
//!   that characterize membership and irreducibility in coordinates.
//! * [`oracle`]: an independent brute-force enumerator over gap sets, used to
//!   cross-check everything at small sizes.

pub mod classes;
pub mod kunz;
pub mod oracle;
pub mod semigroup;
pub mod tree;

pub use classes::{
    class_floor, enumerate_by_genus, enumerate_by_genus_bounded, enumerate_semigroups,
    enumerate_semigroups_bounded, expand_class, expand_class_bounded, expand_class_with_genus,
    expand_class_with_genus_bounded, genus_range, irreducible_closure, semigroup_exists, theta,
    ClassError, ClassExpansion,
};
pub use kunz::{
    apery_by_residue, apery_set, apery_update_along_edge, check_irreducible_system,
    check_membership_system, genus_from_kunz, kunz_vector, satisfies_irreducible_system,
    satisfies_membership_system, semigroup_from_kunz, ConstraintViolation, KunzError, KunzVector,
};
pub use oracle::{brute_force_irreducibles, brute_force_semigroups, OracleConfig, OracleError};
pub use semigroup::{GeneratorSet, NumericalSemigroup, SemigroupError};
pub use tree::{
    alpha, children, enumerate_irreducibles, irreducible_exists, parent, path_to_root, root,
    IrreducibleTree, TreeError,
};
