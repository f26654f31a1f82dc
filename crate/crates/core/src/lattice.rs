//! Integer lattices inside a fixed ambient ℤ^n.
//!
//! A lattice is stored through the canonical row Hermite normal form of any
//! generating set, so equal lattices have identical stored bases and compare
//! equal structurally.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{
    self, dot_rat_int, hnf, int_kernel, snf, to_rat_vec, Int, IntMat, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("dimension mismatch: ambient rank is {ambient}, vector has length {got}")]
    Dimension { ambient: usize, got: usize },
    #[error("ambient ranks differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("vector does not lie in the lattice")]
    NotInLattice,
    #[error("expected a sublattice but containment fails")]
    NotASublattice,
}

/// Order of an element or index of a sublattice: finite or infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientOrder {
    Finite(Int),
    Infinite,
}

impl QuotientOrder {
    pub fn as_finite(&self) -> Option<&Int> {
        match self {
            QuotientOrder::Finite(n) => Some(n),
            QuotientOrder::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientOrder::Finite(n) => write!(f, "{n}"),
            QuotientOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// A sublattice of ℤ^n, stored via the canonical HNF basis (independent rows).
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMat,
}

impl IntegerLattice {
    /// Lattice generated by the given rows; dependent generators are fine.
    pub fn from_rows(ambient: usize, rows: &[Vec<Int>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient), "generator length mismatch");
        if rows.is_empty() {
            return IntegerLattice { ambient, basis: IntMat::empty(ambient) };
        }
        IntegerLattice { ambient, basis: hnf(&IntMat::from_rows(rows)) }
    }

    pub fn zero(ambient: usize) -> Self {
        IntegerLattice { ambient, basis: IntMat::empty(ambient) }
    }

    pub fn standard(ambient: usize) -> Self {
        IntegerLattice { ambient, basis: IntMat::identity(ambient) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis_rows(&self) -> Vec<Vec<Int>> {
        self.basis.to_row_vecs()
    }

    pub fn basis_matrix(&self) -> &IntMat {
        &self.basis
    }

    fn check_len(&self, v: &[Int]) -> Result<(), LatticeError> {
        if v.len() != self.ambient {
            return Err(LatticeError::Dimension { ambient: self.ambient, got: v.len() });
        }
        Ok(())
    }

    /// Integer coordinates of `v` in the stored basis, if `v` is a member.
    pub fn coordinates(&self, v: &[Int]) -> Result<Option<Vec<Int>>, LatticeError> {
        self.check_len(v)?;
        let mut rest = v.to_vec();
        let mut coords = vec![Int::zero(); self.rank()];
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let pivot_col = row.iter().position(|x| !x.is_zero()).expect("basis rows nonzero");
            let (q, r) = rest[pivot_col].div_rem(&row[pivot_col]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (x, b) in rest.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
            coords[i] = q;
        }
        if rest.iter().all(Zero::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn membership(&self, v: &[Int]) -> Result<bool, LatticeError> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Rational coordinates in the stored basis, if `v` lies in the ℚ-span.
    pub fn rational_coordinates(&self, v: &[Int]) -> Result<Option<Vec<Rat>>, LatticeError> {
        self.check_len(v)?;
        Ok(linalg::solve_left_int(&self.basis_rows(), v))
    }

    /// `v` is a member with coprime coordinates (not extendable from a proper
    /// multiple). The zero vector is not primitive.
    pub fn is_primitive(&self, v: &[Int]) -> Result<bool, LatticeError> {
        match self.coordinates(v)? {
            None => Ok(false),
            Some(coords) => {
                let mut g = Int::zero();
                for c in &coords {
                    g = g.gcd(c);
                }
                Ok(g.is_one())
            }
        }
    }

    /// Largest sublattice of ℤ^n with the same ℚ-span.
    pub fn saturation(&self) -> IntegerLattice {
        if self.rank() == 0 {
            return IntegerLattice::zero(self.ambient);
        }
        let s = snf(&self.basis);
        // basis = left^{-1} d right^{-1}; the first `rank` rows of right^{-1}
        // form a basis of the saturation.
        let right_inv = linalg::unimodular_inverse(&s.right).expect("right transform unimodular");
        let rows: Vec<Vec<Int>> =
            (0..self.rank()).map(|i| right_inv.row(i).to_vec()).collect();
        IntegerLattice::from_rows(self.ambient, &rows)
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other
            .basis
            .rows_iter()
            .all(|r| self.coordinates(r).is_ok_and(|c| c.is_some()))
    }

    pub fn intersection(&self, other: &IntegerLattice) -> Result<IntegerLattice, LatticeError> {
        if self.ambient != other.ambient {
            return Err(LatticeError::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(IntegerLattice::zero(self.ambient));
        }
        // Solutions (x, y) of x * B1 - y * B2 = 0 give intersection vectors x * B1.
        let mut stacked = self.basis_rows();
        for r in other.basis_rows() {
            stacked.push(linalg::neg_int(&r));
        }
        let kernel = int_kernel(&IntMat::from_rows(&stacked));
        let rows: Vec<Vec<Int>> = (0..kernel.nrows())
            .map(|i| {
                let x = &kernel.row(i)[..self.rank()];
                self.basis.apply_row(x)
            })
            .collect();
        Ok(IntegerLattice::from_rows(self.ambient, &rows))
    }

    /// Index `[self : sub]`; requires `sub ⊆ self`.
    pub fn index_of_sublattice(&self, sub: &IntegerLattice) -> Result<QuotientOrder, LatticeError> {
        if self.ambient != sub.ambient {
            return Err(LatticeError::AmbientMismatch(self.ambient, sub.ambient));
        }
        let coords = self.sublattice_coordinates(sub)?;
        if coords.nrows() != self.rank() {
            return Ok(QuotientOrder::Infinite);
        }
        let det = linalg::det_int(&coords).abs();
        if det.is_zero() {
            Ok(QuotientOrder::Infinite)
        } else {
            Ok(QuotientOrder::Finite(det))
        }
    }

    /// Rows: coordinates of `sub`'s basis in `self`'s basis.
    fn sublattice_coordinates(&self, sub: &IntegerLattice) -> Result<IntMat, LatticeError> {
        let mut rows = Vec::with_capacity(sub.rank());
        for r in sub.basis.rows_iter() {
            match self.coordinates(r)? {
                Some(c) => rows.push(c),
                None => return Err(LatticeError::NotASublattice),
            }
        }
        if rows.is_empty() {
            return Ok(IntMat::empty(self.rank()));
        }
        Ok(IntMat::from_rows(&rows))
    }

    /// Invariants of `self / sub`: free rank and torsion factors (each > 1,
    /// dividing in chain). Requires `sub ⊆ self`.
    pub fn quotient_invariants(
        &self,
        sub: &IntegerLattice,
    ) -> Result<(usize, Vec<Int>), LatticeError> {
        let coords = self.sublattice_coordinates(sub)?;
        if coords.nrows() == 0 {
            return Ok((self.rank(), Vec::new()));
        }
        let s = snf(&coords);
        let free = self.rank() - s.factors.len();
        let torsion = s.factors.into_iter().filter(|d| !d.is_one()).collect();
        Ok((free, torsion))
    }

    /// Order of `v + sub` in `self / sub`. Requires `v ∈ self`, `sub ⊆ self`.
    pub fn element_order_in_quotient(
        &self,
        v: &[Int],
        sub: &IntegerLattice,
    ) -> Result<QuotientOrder, LatticeError> {
        let coords = self.coordinates(v)?.ok_or(LatticeError::NotInLattice)?;
        let sub_coords = self.sublattice_coordinates(sub)?;
        if sub_coords.nrows() == 0 {
            return Ok(if coords.iter().all(Zero::is_zero) {
                QuotientOrder::Finite(Int::one())
            } else {
                QuotientOrder::Infinite
            });
        }
        // Change coordinates by the right SNF transform; the sublattice becomes
        // spanned by d_i * e_i and the order is computable per coordinate.
        let s = snf(&sub_coords);
        let y = s.right.apply_row(&coords);
        let rank = s.factors.len();
        let mut order = Int::one();
        for (i, yi) in y.iter().enumerate() {
            if i < rank {
                let d = &s.factors[i];
                let g = yi.gcd(d);
                order = order.lcm(&(d / &g));
            } else if !yi.is_zero() {
                return Ok(QuotientOrder::Infinite);
            }
        }
        Ok(QuotientOrder::Finite(order))
    }

    /// Evaluates a functional given by its values on the basis rows against a
    /// member vector.
    pub fn pair_functional(&self, values: &[Rat], v: &[Int]) -> Result<Rat, LatticeError> {
        assert_eq!(values.len(), self.rank(), "functional length mismatch");
        let coords = self.coordinates(v)?.ok_or(LatticeError::NotInLattice)?;
        Ok(dot_rat_int(values, &coords))
    }

    /// The (unique) primitive member generating `ℚ·direction ∩ self`, oriented
    /// along `direction`; `None` when the line misses the lattice span.
    pub fn primitive_on_ray(&self, direction: &[Rat]) -> Option<Vec<Int>> {
        if direction.iter().all(Zero::is_zero) {
            return None;
        }
        let basis: Vec<Vec<Rat>> = self.basis_rows().iter().map(|r| to_rat_vec(r)).collect();
        let coords = linalg::solve_left(&basis, direction)?;
        let prim = linalg::primitive_ray(&coords);
        Some(self.basis.apply_row(&prim))
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerLattice(rank {} in ℤ^{}, basis {:?})", self.rank(), self.ambient, self.basis)
    }
}

/// All homomorphisms of the finite group `sup/sub` into ℚ/ℤ, listed as the
/// value each takes on a chosen member vector. Used as a brute-force oracle
/// for quotient-character questions; only valid when the quotient is finite.
pub fn quotient_character_values(
    sup: &IntegerLattice,
    sub: &IntegerLattice,
    v: &[Int],
) -> Result<Vec<Rat>, LatticeError> {
    let coords = sup.coordinates(v)?.ok_or(LatticeError::NotInLattice)?;
    let sub_coords = sup.sublattice_coordinates(sub)?;
    let s = snf(&sub_coords);
    if s.factors.len() != sup.rank() {
        return Err(LatticeError::NotASublattice);
    }
    let y = s.right.apply_row(&coords);
    // Characters are h(e_i) = k_i / d_i; enumerate all tuples.
    let mut values = vec![Rat::zero()];
    for (i, d) in s.factors.iter().enumerate() {
        let mut next = Vec::new();
        let mut k = Int::zero();
        while &k < d {
            for base in &values {
                let term = Rat::new(&k * &y[i], d.clone());
                next.push(base + term);
            }
            k += 1;
        }
        values = next;
    }
    // Reduce into [0, 1).
    Ok(values
        .into_iter()
        .map(|r| {
            let f = r.floor();
            r - f
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, int_vec};

    fn lat(ambient: usize, rows: &[&[i64]]) -> IntegerLattice {
        IntegerLattice::from_rows(ambient, &rows.iter().map(|r| int_vec(r)).collect::<Vec<_>>())
    }

    #[test]
    fn membership_and_coordinates() {
        let l = lat(2, &[&[2, 0], &[0, 1]]);
        assert!(l.membership(&int_vec(&[4, 3])).unwrap());
        assert!(!l.membership(&int_vec(&[1, 0])).unwrap());
        assert_eq!(
            l.membership(&int_vec(&[1, 0, 0])),
            Err(LatticeError::Dimension { ambient: 2, got: 3 })
        );
    }

    #[test]
    fn saturation_of_scaled_line() {
        let l = lat(2, &[&[2, 0]]);
        assert_eq!(l.saturation(), lat(2, &[&[1, 0]]));
    }

    #[test]
    fn index_via_snf_oracle() {
        // index(span{2e1,2e2}, span{e1,2e2}) = 2
        let sup = lat(2, &[&[1, 0], &[0, 2]]);
        let sub = lat(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(sup.index_of_sublattice(&sub).unwrap(), QuotientOrder::Finite(int(2)));
        let (free, torsion) = sup.quotient_invariants(&sub).unwrap();
        assert_eq!(free, 0);
        assert_eq!(torsion, int_vec(&[2]));
    }

    #[test]
    fn primitivity() {
        let l = IntegerLattice::standard(2);
        assert!(!l.is_primitive(&int_vec(&[2, 0])).unwrap());
        assert!(l.is_primitive(&int_vec(&[2, 1])).unwrap());
        assert!(!l.is_primitive(&int_vec(&[0, 0])).unwrap());
    }

    #[test]
    fn element_orders() {
        let line = lat(1, &[&[1]]);
        let even = lat(1, &[&[2]]);
        assert_eq!(
            line.element_order_in_quotient(&int_vec(&[1]), &even).unwrap(),
            QuotientOrder::Finite(int(2))
        );
        assert_eq!(
            line.element_order_in_quotient(&int_vec(&[1]), &line).unwrap(),
            QuotientOrder::Finite(int(1))
        );
        let l = IntegerLattice::standard(2);
        let sub = lat(2, &[&[2, 0], &[0, 3]]);
        // Brute force: smallest m with m*(1,1) in span{2e1,3e2} is 6.
        assert_eq!(
            l.element_order_in_quotient(&int_vec(&[1, 1]), &sub).unwrap(),
            QuotientOrder::Finite(int(6))
        );
        assert_eq!(
            l.element_order_in_quotient(&int_vec(&[1, 0]), &lat(2, &[&[0, 1]]))
                .unwrap(),
            QuotientOrder::Infinite
        );
        assert_eq!(
            l.element_order_in_quotient(&int_vec(&[1, 2, 3]), &sub),
            Err(LatticeError::Dimension { ambient: 2, got: 3 })
        );
    }

    #[test]
    fn intersection_and_index_finiteness() {
        let a = lat(2, &[&[2, 0], &[0, 1]]);
        let b = lat(2, &[&[1, 1], &[0, 3]]);
        let c = a.intersection(&b).unwrap();
        assert!(a.contains_lattice(&c));
        assert!(b.contains_lattice(&c));
        let ia = a.index_of_sublattice(&c).unwrap();
        let ib = b.index_of_sublattice(&c).unwrap();
        assert!(ia.as_finite().is_some());
        assert!(ib.as_finite().is_some());
    }

    #[test]
    fn primitive_on_ray_rescales() {
        let l = lat(1, &[&[4]]);
        use crate::linalg::rat;
        assert_eq!(l.primitive_on_ray(&[rat(2, 1)]).unwrap(), int_vec(&[4]));
        assert_eq!(l.primitive_on_ray(&[rat(-1, 3)]).unwrap(), int_vec(&[-4]));
    }

    #[test]
    fn character_values_brute_force() {
        // Z^1 / 2Z: characters take values {0, 1/2} on the generator.
        let sup = lat(1, &[&[1]]);
        let sub = lat(1, &[&[2]]);
        let mut vals = quotient_character_values(&sup, &sub, &int_vec(&[1])).unwrap();
        vals.sort();
        assert_eq!(vals, vec![crate::linalg::rat(0, 1), crate::linalg::rat(1, 2)]);
    }
}
