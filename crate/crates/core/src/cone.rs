//! Rational polyhedral cones via the double description method.
//!
//! Cones are stored on the "≤ 0" side: a cone is `{ v : ⟨n, v⟩ ≤ 0 }` over
//! its facet normals, matching the valuation-cone convention directly. Both
//! descriptions (generators and inequalities) are kept in sync; rays are
//! canonicalized to primitive integer vectors (positive rescaling only) and
//! reduced modulo the lineality space, so equal cones compare equal.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::lattice::IntegerLattice;
use crate::linalg::{
    self, canonical_line, dot_int, dot_rat_int, is_zero_int, neg_int, primitive_part,
    primitive_ray, to_rat_vec, Int, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("valuation cone is not cosimplicial")]
    NotCosimplicial,
    #[error("normal direction does not meet the lattice span")]
    OutsideLatticeSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ConstraintKind {
    NonPositive,
    Zero,
}

/// A rational polyhedral cone with both descriptions.
#[derive(Clone, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    /// Canonical basis of the lineality space `c ∩ -c`.
    lineality: Vec<Vec<Int>>,
    /// Extremal ray representatives modulo lineality; primitive, sorted.
    rays: Vec<Vec<Int>>,
    /// Facet normals: the cone is exactly `⟨n, v⟩ ≤ 0` for these plus the
    /// span equations.
    facet_normals: Vec<Vec<Int>>,
    /// Equations cutting out the linear span (present when not full-dim).
    span_equations: Vec<Vec<Int>>,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality_basis(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[Vec<Int>] {
        &self.facet_normals
    }

    pub fn span_equations(&self) -> &[Vec<Int>] {
        &self.span_equations
    }

    /// Ray and lineality generators together.
    pub fn generators(&self) -> Vec<Vec<Int>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg_int(l));
        }
        g
    }

    pub fn linear_span(&self) -> linalg::Subspace {
        let mut rows = self.rays.clone();
        rows.extend(self.lineality.iter().cloned());
        linalg::Subspace::span_int(self.dim, &rows).expect("consistent dims")
    }

    /// The cone `{ v : ⟨n, v⟩ ≤ 0 for all given normals }`.
    pub fn from_inequalities(dim: usize, normals: &[Vec<Rat>]) -> Result<Cone, ConeError> {
        let constraints = integerize(dim, normals, ConstraintKind::NonPositive)?;
        Ok(Cone::from_constraints(dim, &constraints))
    }

    /// The cone generated by the given vectors (nonnegative combinations).
    /// Opposite generators produce lineality.
    pub fn from_generators(dim: usize, generators: &[Vec<Rat>]) -> Result<Cone, ConeError> {
        let gens = integerize(dim, generators, ConstraintKind::NonPositive)?;
        // Dualize: the polar cone of the generators, computed by DD, yields
        // facet normals (its rays) and span equations (its lineality).
        let (polar_lin, polar_rays) = double_description(dim, &gens);
        let mut constraints: Vec<(Vec<Int>, ConstraintKind)> =
            polar_rays.into_iter().map(|n| (n, ConstraintKind::NonPositive)).collect();
        constraints
            .extend(polar_lin.into_iter().map(|e| (e, ConstraintKind::Zero)));
        Ok(Cone::from_constraints(dim, &constraints))
    }

    fn from_constraints(dim: usize, constraints: &[(Vec<Int>, ConstraintKind)]) -> Cone {
        let (lineality, rays) = double_description(dim, constraints);
        // Dual pass: facets of the primal cone are the rays of its polar.
        let mut polar_constraints: Vec<(Vec<Int>, ConstraintKind)> =
            rays.iter().map(|r| (r.clone(), ConstraintKind::NonPositive)).collect();
        polar_constraints
            .extend(lineality.iter().map(|l| (l.clone(), ConstraintKind::Zero)));
        let (span_equations, facet_normals) = double_description(dim, &polar_constraints);
        Cone { dim, lineality, rays, facet_normals, span_equations }
    }

    pub fn full_space(dim: usize) -> Cone {
        Cone::from_constraints(dim, &[])
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.facet_normals.iter().all(|n| !dot_rat_int(v, n).is_positive())
            && self.span_equations.iter().all(|e| dot_rat_int(v, e).is_zero())
    }

    /// The cone of vectors of `self` lying in the subspace, written in the
    /// subspace's canonical basis coordinates.
    pub fn intersect_with_subspace(&self, s: &linalg::Subspace) -> Result<Cone, ConeError> {
        if s.ambient_dim() != self.dim {
            return Err(ConeError::Dimension { expected: self.dim, got: s.ambient_dim() });
        }
        let basis = s.basis_rows();
        let mut constraints = Vec::new();
        for n in &self.facet_normals {
            let pulled: Vec<Int> = basis.iter().map(|b| dot_int(b, n)).collect();
            constraints.push((pulled, ConstraintKind::NonPositive));
        }
        for e in &self.span_equations {
            let pulled: Vec<Int> = basis.iter().map(|b| dot_int(b, e)).collect();
            constraints.push((pulled, ConstraintKind::Zero));
        }
        Ok(Cone::from_constraints(s.dim(), &constraints))
    }

    /// Image cone under a surjective linear map given row-wise: the image of
    /// `v` has coordinates `(⟨q_1, v⟩, ..., ⟨q_m, v⟩)`.
    pub fn project(&self, map_rows: &[Vec<Rat>]) -> Result<Cone, ConeError> {
        for row in map_rows {
            if row.len() != self.dim {
                return Err(ConeError::Dimension { expected: self.dim, got: row.len() });
            }
        }
        let image = |v: &[Int]| -> Vec<Rat> {
            map_rows.iter().map(|q| dot_rat_int(q, v)).collect()
        };
        let mut gens: Vec<Vec<Rat>> = self.rays.iter().map(|r| image(r)).collect();
        for l in &self.lineality {
            gens.push(image(l));
            gens.push(image(&neg_int(l)));
        }
        Cone::from_generators(map_rows.len(), &gens)
    }

    /// One primitive lattice vector per facet, nonpositive on the cone.
    ///
    /// The cone must live in the dual of the lattice's coordinate space
    /// (`dim == lattice.rank()`); returned vectors are ambient lattice
    /// members. Errors when the cone is not cosimplicial.
    pub fn spherical_roots_of(&self, lattice: &IntegerLattice) -> Result<Vec<Vec<Int>>, ConeError> {
        if lattice.rank() != self.dim {
            return Err(ConeError::Dimension { expected: self.dim, got: lattice.rank() });
        }
        if self.facet_normals.len() + self.lineality_dim() != self.dim
            || !self.span_equations.is_empty()
        {
            return Err(ConeError::NotCosimplicial);
        }
        // Facet normals live in the coordinates dual to the lattice basis, so
        // their (primitive) coordinate vectors are exactly lattice coordinates.
        let mut out: Vec<Vec<Int>> = self
            .facet_normals
            .iter()
            .map(|n| lattice.basis_matrix().apply_row(n))
            .collect();
        out.sort();
        Ok(out)
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cone(dim {}, lineality {:?}, rays {:?}, facets {:?}, span_eq {:?})",
            self.dim, self.lineality, self.rays, self.facet_normals, self.span_equations
        )
    }
}

fn integerize(
    dim: usize,
    vectors: &[Vec<Rat>],
    kind: ConstraintKind,
) -> Result<Vec<(Vec<Int>, ConstraintKind)>, ConeError> {
    let mut out = Vec::new();
    for v in vectors {
        if v.len() != dim {
            return Err(ConeError::Dimension { expected: dim, got: v.len() });
        }
        out.push((primitive_ray(v), kind));
    }
    Ok(out)
}

struct Ray {
    v: Vec<Int>,
    /// Indices of processed constraints tight at this ray.
    tight: BTreeSet<usize>,
}

/// Combinatorial adjacency test: rays `a`, `b` are adjacent iff no third ray
/// is tight on every constraint tight at both.
fn adjacent(rays: &[Ray], a: usize, b: usize) -> bool {
    let common: BTreeSet<usize> =
        rays[a].tight.intersection(&rays[b].tight).copied().collect();
    !rays
        .iter()
        .enumerate()
        .any(|(k, r)| k != a && k != b && common.is_subset(&r.tight))
}

/// Core incremental double description: intersects the full space with the
/// given constraints, returning `(lineality basis, extremal rays)`, both
/// canonical (rays are reduced modulo lineality, primitive, and sorted).
fn double_description(
    dim: usize,
    constraints: &[(Vec<Int>, ConstraintKind)],
) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let constraints: Vec<(Vec<Int>, ConstraintKind)> =
        constraints.iter().filter(|(n, _)| !is_zero_int(n)).cloned().collect();

    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, (normal, kind)) in constraints.iter().enumerate() {
        // Reduce the lineality space first.
        let pivot = lineality.iter().position(|l| !dot_int(l, normal).is_zero());
        if let Some(p) = pivot {
            let l0 = lineality.remove(p);
            let a = dot_int(&l0, normal);
            for l in lineality.iter_mut() {
                let t = dot_int(l, normal);
                if !t.is_zero() {
                    // a*l - t*l0 is orthogonal to the normal.
                    let mut new = scale(l, &a);
                    sub_scaled(&mut new, &l0, &t);
                    *l = primitive_part(&new);
                }
            }
            for r in rays.iter_mut() {
                let t = dot_int(&r.v, normal);
                if !t.is_zero() {
                    let mut new = scale(&r.v, &a.abs());
                    let coeff = if a.is_positive() { t } else { -t };
                    sub_scaled(&mut new, &l0, &coeff);
                    r.v = primitive_part(&new);
                }
                r.tight.insert(ci);
            }
            if matches!(kind, ConstraintKind::NonPositive) {
                let dir = if a.is_positive() { neg_int(&l0) } else { l0 };
                rays.push(Ray { v: primitive_part(&dir), tight: (0..ci).collect() });
            }
            continue;
        }
        // Lineality is orthogonal; split rays by sign.
        let values: Vec<Int> = rays.iter().map(|r| dot_int(&r.v, normal)).collect();
        let mut new_rays: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            let keep = match kind {
                ConstraintKind::NonPositive => !values[i].is_positive(),
                ConstraintKind::Zero => values[i].is_zero(),
            };
            if keep {
                let mut tight = r.tight.clone();
                if values[i].is_zero() {
                    tight.insert(ci);
                }
                new_rays.push(Ray { v: r.v.clone(), tight });
            }
        }
        // Combine adjacent pairs straddling the hyperplane.
        for neg in 0..rays.len() {
            if !values[neg].is_negative() {
                continue;
            }
            for pos in 0..rays.len() {
                if !values[pos].is_positive() || !adjacent(&rays, neg, pos) {
                    continue;
                }
                // w = val(pos)*ray(neg) - val(neg)*ray(pos) is tight at ci.
                let mut w = scale(&rays[neg].v, &values[pos]);
                sub_scaled(&mut w, &rays[pos].v, &values[neg]);
                let w = primitive_part(&w);
                if is_zero_int(&w) {
                    continue;
                }
                let mut tight: BTreeSet<usize> =
                    rays[neg].tight.intersection(&rays[pos].tight).copied().collect();
                tight.insert(ci);
                new_rays.push(Ray { v: w, tight });
            }
        }
        let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
        new_rays.retain(|r| seen.insert(r.v.clone()));
        rays = new_rays;
    }

    // Canonicalize: lineality as a saturated HNF basis, rays reduced mod it.
    let lin_lattice = IntegerLattice::from_rows(dim, &lineality).saturation();
    let lin_rows = lin_lattice.basis_rows();
    let mut ray_vecs: Vec<Vec<Int>> = rays
        .into_iter()
        .map(|r| reduce_mod_lineality(&r.v, &lin_rows))
        .filter(|v| !is_zero_int(v))
        .collect();
    ray_vecs.sort();
    ray_vecs.dedup();
    let lineality: Vec<Vec<Int>> = lin_rows.iter().map(|r| canonical_line(r)).collect();
    (lineality, ray_vecs)
}

fn scale(v: &[Int], f: &Int) -> Vec<Int> {
    v.iter().map(|x| x * f).collect()
}

fn sub_scaled(target: &mut [Int], source: &[Int], factor: &Int) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= s * factor;
    }
}

/// Deterministic representative of `v` modulo the span of `lineality` rows
/// (which are in HNF): eliminate the pivot coordinates, then primitivize.
fn reduce_mod_lineality(v: &[Int], lineality: &[Vec<Int>]) -> Vec<Int> {
    if lineality.is_empty() {
        return primitive_part(v);
    }
    let mut out: Vec<Rat> = to_rat_vec(v);
    for row in lineality {
        let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero lineality row");
        if out[pivot].is_zero() {
            continue;
        }
        let f = out[pivot].clone() / linalg::rat_from_int(&row[pivot]);
        for (o, r) in out.iter_mut().zip(row) {
            *o -= f.clone() * linalg::rat_from_int(r);
        }
    }
    primitive_ray(&out)
}
