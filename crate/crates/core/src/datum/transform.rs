//! Datum transforms: localization to a standard Levi, quotients by finite
//! subgroups of the equivariant automorphism group, and wonderfulization.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lattice::{IntegerLattice, QuotientOrder};
use crate::linalg::{
    self, rat_from_int, to_rat_vec, Int, IntMat, Rat, RatMat,
};
use crate::rootsys::{ReductiveGroupData, RootId, RootSystem};

use super::{Color, DatumError, SphericalDatum, ValidateOptions};

/// Result of localizing a datum to a standard Levi subgroup, together with
/// the maps identifying old data inside the new coordinates.
#[derive(Debug, Clone)]
pub struct Localization {
    pub datum: SphericalDatum,
    /// Old simple-root names (members of the chosen subset) to new ones.
    pub root_map: BTreeMap<RootId, RootId>,
    /// Integer matrix of the character embedding: a character `v` of the
    /// original group corresponds to `v * char_map` for the Levi.
    pub char_map: IntMat,
}

impl Localization {
    pub fn map_character(&self, v: &[Int]) -> Vec<Int> {
        self.char_map.apply_row(v)
    }
}

impl SphericalDatum {
    /// Localizes to the standard Levi generated by the simple roots in
    /// `subset`. The weight lattice is carried over isomorphically, the
    /// spherical roots are cut to the rational span of the subset, and colors
    /// moved only by discarded roots are dropped. The result is revalidated.
    pub fn localize(&self, subset: &BTreeSet<RootId>) -> Result<Localization, DatumError> {
        let system = self.system();
        let ambient = system.rank();
        // Classify the induced diagram; this also validates the subset.
        let components = system.classify_subset(subset)?;
        let ordered: Vec<RootId> = components.iter().flat_map(|(_, ids)| ids.clone()).collect();
        let k = ordered.len();
        let new_torus_rank = ambient - k;
        let new_group = ReductiveGroupData::new(
            components.iter().map(|(t, _)| *t).collect(),
            new_torus_rank,
        )?;

        let char_map = self.levi_character_map(&ordered)?;
        let new_system = RootSystem::new(new_group.clone())?;

        // Sanity: simple roots of the subset map onto the Levi's own roots.
        let mut root_map = BTreeMap::new();
        for (new_index, old_id) in ordered.iter().enumerate() {
            let old_vec = &system.root(*old_id)?.vector;
            let mapped = char_map.apply_row(old_vec);
            let new_id = new_system.simple_roots()[new_index].id;
            debug_assert_eq!(
                mapped, new_system.simple_roots()[new_index].vector,
                "levi coordinate map must send subset roots to standard roots"
            );
            let _ = mapped;
            root_map.insert(*old_id, new_id);
        }

        let lattice_rows: Vec<Vec<Int>> = self
            .weight_lattice()
            .basis_rows()
            .iter()
            .map(|row| char_map.apply_row(row))
            .collect();
        let kept_roots: Vec<Vec<Int>> = {
            let mut kept = Vec::new();
            for sigma in self.spherical_roots() {
                if system.in_root_span_of(subset, sigma)? {
                    kept.push(char_map.apply_row(sigma));
                }
            }
            kept
        };
        let mut new_colors = Vec::new();
        for c in self.colors() {
            let moved: BTreeSet<RootId> = c
                .moved_by
                .iter()
                .filter(|id| subset.contains(id))
                .map(|id| root_map[id])
                .collect();
            if moved.is_empty() {
                continue;
            }
            // The lattice is transported isomorphically, so the functional's
            // values on corresponding basis rows are unchanged.
            new_colors.push(Color::new(c.label.clone(), moved, c.phi().to_vec()));
        }
        let datum =
            SphericalDatum::new(new_group, lattice_rows, kept_roots, new_colors)?;
        let report = datum.validate(ValidateOptions::default());
        if !report.is_valid() {
            return Err(DatumError::InvalidResult {
                context: "localization produced invalid datum",
                report,
            });
        }
        Ok(Localization { datum, root_map, char_map })
    }

    /// The canonical pairing-compatible embedding of the character space into
    /// the Levi's standard coordinates: first the coroot pairings of the
    /// subset roots (in their new order), then coordinates of the central
    /// projection in a canonical basis of its image lattice.
    fn levi_character_map(&self, ordered: &[RootId]) -> Result<IntMat, DatumError> {
        let system = self.system();
        let ambient = system.rank();
        let k = ordered.len();
        let central_rank = ambient - k;

        // Cartan block of the subset: cs[i][j] = <alpha_j, alpha_i^vee>.
        let positions: Vec<usize> = ordered
            .iter()
            .map(|id| Ok::<_, DatumError>(system.root(*id)?.position))
            .collect::<Result<_, _>>()?;
        let root_vectors: Vec<Vec<Int>> = ordered
            .iter()
            .map(|id| Ok::<_, DatumError>(system.root(*id)?.vector.clone()))
            .collect::<Result<_, _>>()?;

        // Central projection of each standard basis vector: z(e_l) = e_l - p(e_l)
        // where p(e_l) is the root-span vector with the same subset pairings.
        let mut z_rows: Vec<Vec<Rat>> = Vec::with_capacity(ambient);
        for l in 0..ambient {
            let mut e = vec![Rat::zero(); ambient];
            e[l] = linalg::rat(1, 1);
            // Solve cs * c = pairings of e_l.
            let mut aug = RatMat::zero(k, k + 1);
            for i in 0..k {
                for j in 0..k {
                    *aug.at_mut(i, j) = rat_from_int(&root_vectors[j][positions[i]]);
                }
                *aug.at_mut(i, k) = e[positions[i]].clone();
            }
            let pivots = linalg::rref(&mut aug);
            debug_assert_eq!(pivots.len(), k, "Cartan block invertible");
            let mut z = e;
            for (row, &col) in pivots.iter().enumerate() {
                let coeff = aug.at(row, k).clone();
                if coeff.is_zero() {
                    continue;
                }
                for (zi, ri) in z.iter_mut().zip(&root_vectors[col]) {
                    *zi -= coeff.clone() * rat_from_int(ri);
                }
            }
            z_rows.push(z);
        }

        // Canonical integer basis of the lattice generated by the projections.
        let mut denom = Int::one();
        for row in &z_rows {
            for x in row {
                denom = denom.lcm(x.denom());
            }
        }
        let scaled: Vec<Vec<Int>> = z_rows
            .iter()
            .map(|row| row.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
            .collect();
        let central_lattice = IntegerLattice::from_rows(ambient, &scaled);
        debug_assert_eq!(central_lattice.rank(), central_rank);

        // Assemble the map row by row: the image of e_l.
        let mut map = IntMat::zero(ambient, ambient);
        for l in 0..ambient {
            for (new_pos, &p) in positions.iter().enumerate() {
                *map.at_mut(l, new_pos) = if p == l { Int::one() } else { Int::zero() };
            }
            let coords = central_lattice
                .coordinates(&scaled[l])?
                .expect("projection lies in its own image lattice");
            for (c_idx, c) in coords.into_iter().enumerate() {
                *map.at_mut(l, k + c_idx) = c;
            }
        }
        Ok(map)
    }

    /// Quotient by the finite subgroup of the automorphism group annihilating
    /// `sublattice`. Requires the doubled root lattice to be contained in the
    /// sublattice and the index to be finite. Colors merge in pairs exactly
    /// when the corresponding simple spherical root has even order in the
    /// quotient group.
    pub fn quotient_finite(&self, sublattice: &IntegerLattice) -> Result<SphericalDatum, DatumError> {
        if sublattice.rank() != self.weight_lattice().rank() {
            return Err(DatumError::InvalidSublattice(
                "sublattice must have finite index in the weight lattice".into(),
            ));
        }
        self.restrict_to_sublattice(sublattice, "quotient produced invalid datum")
    }

    /// The datum of the wonderful-embedding cover: restricts the lattice to
    /// the span of the spherical roots (no colors merge, since the acting
    /// subgroup annihilates every spherical root). The result satisfies
    /// [`SphericalDatum::is_wonderful`].
    pub fn wonderfulization(&self) -> Result<SphericalDatum, DatumError> {
        let span = IntegerLattice::from_rows(self.system().rank(), self.spherical_roots());
        self.restrict_to_sublattice(&span, "wonderfulization produced invalid datum")
    }

    fn restrict_to_sublattice(
        &self,
        sublattice: &IntegerLattice,
        context: &'static str,
    ) -> Result<SphericalDatum, DatumError> {
        let lattice = self.weight_lattice();
        if sublattice.ambient_rank() != lattice.ambient_rank()
            || !lattice.contains_lattice(sublattice)
        {
            return Err(DatumError::InvalidSublattice(
                "sublattice is not contained in the weight lattice".into(),
            ));
        }
        let (_, doubled_lattice) = self.doubled_root_lattice()?;
        if !sublattice.contains_lattice(&doubled_lattice) {
            return Err(DatumError::InvalidSublattice(
                "sublattice must contain the doubled root lattice".into(),
            ));
        }

        // New spherical roots: primitive wall generators inside the sublattice,
        // recomputed through the projected valuation cone.
        let sub_rows = sublattice.basis_rows();
        let projection: Vec<Vec<Rat>> = sub_rows
            .iter()
            .map(|row| {
                let coords = lattice.coordinates(row)?.ok_or(DatumError::NotInWeightLattice)?;
                Ok::<_, DatumError>(to_rat_vec(&coords))
            })
            .collect::<Result<_, _>>()?;
        let projected_cone = self.valuation_cone()?.project(&projection)?;
        let new_roots = projected_cone.spherical_roots_of(sublattice)?;

        // Decide color merges: a pair over a simple spherical root collapses
        // exactly when the root has even order in lattice/sublattice.
        let mut merged_away: BTreeMap<usize, usize> = BTreeMap::new();
        for root in self.system().simple_roots() {
            if !self.psi_contains(&root.vector) {
                continue;
            }
            let moved = self.colors_moved_by(root.id);
            if moved.len() != 2 {
                continue;
            }
            let order = lattice.element_order_in_quotient(&root.vector, sublattice)?;
            let even = match &order {
                QuotientOrder::Finite(n) => n.is_even(),
                QuotientOrder::Infinite => false,
            };
            if even {
                let (keep, drop) = (moved[0], moved[1]);
                let a = &self.colors()[keep];
                let b = &self.colors()[drop];
                if a.moved_by != b.moved_by {
                    return Err(DatumError::AmbiguousColorAction(format!(
                        "colors {} and {} merge but are moved by different roots",
                        a.label, b.label
                    )));
                }
                merged_away.insert(drop, keep);
            }
        }

        // Restrict functionals to the sublattice basis.
        let restrict = |color: &Color| -> Result<Vec<Rat>, DatumError> {
            sub_rows
                .iter()
                .map(|row| Ok(lattice.pair_functional(color.phi(), row)?))
                .collect()
        };
        let mut new_colors: Vec<Color> = Vec::new();
        for (i, c) in self.colors().iter().enumerate() {
            if let Some(&keep) = merged_away.get(&i) {
                // Consistency of the merged functional.
                let kept = restrict(&self.colors()[keep])?;
                let dropped = restrict(c)?;
                if kept != dropped {
                    return Err(DatumError::AmbiguousColorAction(format!(
                        "colors {} and {} merge but restrict to different functionals",
                        self.colors()[keep].label, c.label
                    )));
                }
                continue;
            }
            new_colors.push(Color::new(c.label.clone(), c.moved_by.clone(), restrict(c)?));
        }

        // Reject quotients whose color identification is not pinned down:
        // any repeated restricted invariant must be a surviving pair over a
        // single simple spherical root.
        let mut by_invariant: BTreeMap<(Vec<RootId>, Vec<Rat>), Vec<String>> = BTreeMap::new();
        for c in &new_colors {
            by_invariant
                .entry((c.moved_by.iter().copied().collect(), c.phi().to_vec()))
                .or_default()
                .push(c.label.clone());
        }
        for ((moved, _), labels) in &by_invariant {
            if labels.len() == 1 {
                continue;
            }
            let is_surviving_pair = labels.len() == 2
                && moved.iter().any(|id| {
                    let root = self.system().root(*id).expect("moved roots exist");
                    if !self.psi_contains(&root.vector) {
                        return false;
                    }
                    let pair = self.colors_moved_by(*id);
                    let mut pair_labels: Vec<String> =
                        pair.iter().map(|&i| self.colors()[i].label.clone()).collect();
                    pair_labels.sort();
                    let mut here = labels.clone();
                    here.sort();
                    pair_labels == here
                });
            if !is_surviving_pair {
                return Err(DatumError::AmbiguousColorAction(format!(
                    "colors {:?} share identical invariants after restriction",
                    labels
                )));
            }
        }

        let datum = SphericalDatum::new(
            self.group().clone(),
            sub_rows,
            new_roots,
            new_colors,
        )?;
        let report = datum.validate(ValidateOptions::default());
        if !report.is_valid() {
            return Err(DatumError::InvalidResult { context, report });
        }
        Ok(datum)
    }
}
