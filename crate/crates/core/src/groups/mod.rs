//! Finite-group arithmetic on dense Cayley tables.

mod error;
mod group;
mod iso;
mod snf;
mod square;
mod subgroup;

pub use error::{GroupError, NotAGroupReason};
pub use group::{Elem, FiniteGroup, DEFAULT_ORDER_CAP};
pub use iso::{find_isomorphism, is_isomorphic};
pub use snf::{abelian_invariants, abelian_invariants_of, smith_diagonal};
pub use square::{embed_mixed, SquareExtension};
pub use subgroup::{
    center, commutator_subgroup, generalized_dihedral, is_abelian_subgroup,
    is_generalized_dihedral, is_normal, normal_closure, quotient_group, subgroup_generated,
    GroupHom, Subgroup,
};
