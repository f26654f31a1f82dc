//! Exact combinatorial kernel for spherical homogeneous spaces.
//!
//! The crate represents the invariant triple of a spherical homogeneous space
//! — weight lattice, valuation cone (through its spherical roots), and colors —
//! and computes the derived objects: simple-root types, distinguished spherical
//! roots, the doubled root system and equivariant automorphism group, wonderful
//! embedding criteria, colored subspaces with their quotient data, and a
//! canonical-form equivalence decider.
//!
//! Everything is exact: scalars are arbitrary-precision integers and rationals,
//! there are no tolerances anywhere, and canonical forms are bit-comparable.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command-line
//! front end live in the companion `sphera-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cone;
pub mod datum;
pub mod equiv;
pub mod fixtures;
pub mod lattice;
pub mod linalg;
pub mod rootsys;
pub mod subspace;

pub use cone::Cone;
pub use datum::{Color, SphericalDatum};
pub use lattice::IntegerLattice;
pub use linalg::{Int, Rat};
pub use rootsys::{ReductiveGroupData, RootId, SimpleType};

#[cfg(test)]
mod thread_safety {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        assert_send_sync::<crate::SphericalDatum>();
        assert_send_sync::<crate::Cone>();
        assert_send_sync::<crate::IntegerLattice>();
        assert_send_sync::<crate::rootsys::RootSystem>();
        assert_send_sync::<crate::subspace::ColoredSubspace>();
        assert_send_sync::<crate::linalg::Subspace>();
    }
}
