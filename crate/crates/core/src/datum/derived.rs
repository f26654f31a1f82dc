//! Invariants derived from a datum: the doubled root system and root lattice,
//! the equivariant automorphism group, the wonderful criterion, the weight
//! monoid, and the dimension formula.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::cone::Cone;
use crate::lattice::IntegerLattice;
use crate::linalg::{to_rat_vec, Int, Rat};

use super::{DatumError, SphericalDatum};

/// Structure of the equivariant automorphism group: a torus of the given rank
/// times a finite abelian group with the given invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismStructure {
    pub torus_rank: usize,
    /// Nontrivial invariant factors, dividing in chain.
    pub finite_factors: Vec<Int>,
}

impl SphericalDatum {
    /// The valuation cone `{ v : ⟨σ, v⟩ ≤ 0 }` in the coordinates dual to the
    /// canonical lattice basis.
    pub fn valuation_cone(&self) -> Result<Cone, DatumError> {
        let mut normals: Vec<Vec<Rat>> = Vec::with_capacity(self.spherical_roots().len());
        for sigma in self.spherical_roots() {
            let coords = self
                .weight_lattice()
                .coordinates(sigma)?
                .ok_or(DatumError::NotInWeightLattice)?;
            normals.push(to_rat_vec(&coords));
        }
        Ok(Cone::from_inequalities(self.weight_lattice().rank(), &normals)?)
    }

    /// The doubled spherical roots and the lattice they span: a spherical
    /// root stays itself when it lies in the root lattice of the group and is
    /// not distinguished, and doubles otherwise.
    pub fn doubled_root_lattice(&self) -> Result<(Vec<Vec<Int>>, IntegerLattice), DatumError> {
        let distinguished = self.distinguished_roots().plus_set();
        let mut doubled = Vec::with_capacity(self.spherical_roots().len());
        for sigma in self.spherical_roots() {
            let in_root_lattice = self.system().root_lattice_membership(sigma)?;
            if in_root_lattice && !distinguished.contains(sigma) {
                doubled.push(sigma.clone());
            } else {
                doubled.push(Self::scaled(sigma, 2));
            }
        }
        let lattice = IntegerLattice::from_rows(self.system().rank(), &doubled);
        Ok((doubled, lattice))
    }

    /// The equivariant automorphism group, read off the quotient of the
    /// weight lattice by the doubled root lattice. The free rank is
    /// cross-checked against the lineality dimension of the valuation cone.
    pub fn automorphism_structure(&self) -> Result<AutomorphismStructure, DatumError> {
        let (_, doubled_lattice) = self.doubled_root_lattice()?;
        let (free, torsion) = self.weight_lattice().quotient_invariants(&doubled_lattice)?;
        let lineality = self.valuation_cone()?.lineality_dim();
        if free != lineality {
            return Err(DatumError::LinealityMismatch { free, lineality });
        }
        Ok(AutomorphismStructure { torus_rank: free, finite_factors: torsion })
    }

    /// A wonderful embedding exists iff the spherical roots span the lattice.
    pub fn is_wonderful(&self) -> bool {
        let span = IntegerLattice::from_rows(self.system().rank(), self.spherical_roots());
        span == *self.weight_lattice()
    }

    /// Membership in the weight monoid: nonnegative against every color.
    pub fn weight_monoid_contains(&self, member: &[Int]) -> Result<bool, DatumError> {
        let coords = self
            .weight_lattice()
            .coordinates(member)?
            .ok_or(DatumError::NotInWeightLattice)?;
        for c in self.colors() {
            let value: Rat = crate::linalg::dot_rat_int(c.phi(), &coords);
            if value < Rat::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the homogeneous space: lattice rank plus the codimension
    /// of the parabolic generated by the colorless simple roots.
    pub fn dimension(&self) -> Result<usize, DatumError> {
        let parabolic_roots = self.colorless_roots();
        let dim_p = self.system().dim_parabolic(&parabolic_roots)?;
        Ok(self.weight_lattice().rank() + self.system().dim_group() - dim_p)
    }
}
