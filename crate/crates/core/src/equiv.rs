//! Canonical forms and the equivalence decider.
//!
//! Two data over the same group are equivalent when their weight lattices,
//! spherical-root sets, and color multisets (as pairs of moved roots and
//! functional) agree. The canonical form erases color labels and orderings,
//! so equality of canonical forms decides equivalence; a hash of the form
//! doubles as an on-disk dedup key.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::datum::SphericalDatum;
use crate::linalg::{format_rat, Int, Rat};
use crate::rootsys::RootId;

/// The first invariant found to differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Difference {
    WeightLattice,
    ValuationCone,
    Colors,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Difference::WeightLattice => write!(f, "weight lattice"),
            Difference::ValuationCone => write!(f, "valuation cone"),
            Difference::Colors => write!(f, "colors"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// Equivalent, with a witness bijection of color labels.
    Equivalent { witness: Vec<(String, String)> },
    /// Not equivalent; names the first differing invariant.
    Different { difference: Difference },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("data are incomparable: the group data differ")]
pub struct Incomparable;

/// Sort key of a color with labels erased.
type ColorKey = (Vec<RootId>, Vec<Rat>);

fn color_key(moved: &[RootId], phi: &[Rat]) -> ColorKey {
    (moved.to_vec(), phi.to_vec())
}

fn sorted_color_keys(d: &SphericalDatum) -> Vec<(ColorKey, String)> {
    let mut keys: Vec<(ColorKey, String)> = d
        .colors()
        .iter()
        .map(|c| {
            let moved: Vec<RootId> = c.moved_by.iter().copied().collect();
            (color_key(&moved, c.phi()), c.label.clone())
        })
        .collect();
    // Stable sort on the key alone: colors with identical invariants keep
    // their order of appearance, which fixes the witness matching.
    keys.sort_by(|a, b| a.0.cmp(&b.0));
    keys
}

fn sorted_roots(d: &SphericalDatum) -> Vec<Vec<Int>> {
    let mut roots = d.spherical_roots().to_vec();
    roots.sort();
    roots
}

/// Deterministic textual encoding of the datum's invariants: group data,
/// canonical lattice basis, sorted spherical roots, and the sorted multiset
/// of label-erased colors.
pub fn canonical_form(d: &SphericalDatum) -> String {
    let mut out = String::from("spherical-datum v1\n");
    out.push_str("group");
    for c in &d.group().components {
        out.push_str(&format!(" {c}"));
    }
    out.push_str(&format!(" torus={}\n", d.group().torus_rank));
    out.push_str(&format!("lattice rank={}\n", d.weight_lattice().rank()));
    for row in d.weight_lattice().basis_rows() {
        out.push_str(&join_ints(&row));
        out.push('\n');
    }
    out.push_str("spherical-roots\n");
    for root in sorted_roots(d) {
        out.push_str(&join_ints(&root));
        out.push('\n');
    }
    out.push_str("colors\n");
    for ((moved, phi), _) in sorted_color_keys(d) {
        out.push_str("moved=");
        for (i, id) in moved.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{id}"));
        }
        out.push_str(" phi=");
        for (i, v) in phi.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format_rat(v));
        }
        out.push('\n');
    }
    out
}

/// Hex-encoded 64-bit FNV-1a hash of the canonical form.
pub fn canonical_hash(d: &SphericalDatum) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in canonical_form(d).as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn join_ints(v: &[Int]) -> String {
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&format!("{x}"));
    }
    s
}

/// Decides equivalence of two data over the same group; the witness pairs
/// colors by stable multiset matching on (moved roots, functional).
pub fn equivalent(a: &SphericalDatum, b: &SphericalDatum) -> Result<Equivalence, Incomparable> {
    if a.group() != b.group() {
        return Err(Incomparable);
    }
    if a.weight_lattice() != b.weight_lattice() {
        return Ok(Equivalence::Different { difference: Difference::WeightLattice });
    }
    if sorted_roots(a) != sorted_roots(b) {
        return Ok(Equivalence::Different { difference: Difference::ValuationCone });
    }
    let ka = sorted_color_keys(a);
    let kb = sorted_color_keys(b);
    if ka.len() != kb.len() || ka.iter().map(|(k, _)| k).ne(kb.iter().map(|(k, _)| k)) {
        return Ok(Equivalence::Different { difference: Difference::Colors });
    }
    let witness = ka
        .into_iter()
        .zip(kb)
        .map(|((_, la), (_, lb))| (la, lb))
        .collect();
    Ok(Equivalence::Equivalent { witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reflexive_with_identity_witness() {
        let d = fixtures::sl2_torus();
        match equivalent(&d, &d).unwrap() {
            Equivalence::Equivalent { witness } => {
                assert!(witness.iter().all(|(a, b)| a == b));
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn label_permutation_is_equivalent() {
        use crate::datum::Color;
        let d = fixtures::sl2_torus();
        let swapped = crate::datum::SphericalDatum::new(
            d.group().clone(),
            d.weight_lattice().basis_rows(),
            d.spherical_roots().to_vec(),
            vec![
                Color::new("Dm", d.colors()[0].moved_by.clone(), d.colors()[0].phi().to_vec()),
                Color::new("Dp", d.colors()[1].moved_by.clone(), d.colors()[1].phi().to_vec()),
            ],
        )
        .unwrap();
        assert_eq!(canonical_form(&d), canonical_form(&swapped));
        assert!(matches!(equivalent(&d, &swapped).unwrap(), Equivalence::Equivalent { .. }));
    }

    #[test]
    fn witness_pairs_identical_invariants_by_appearance() {
        use crate::datum::Color;
        let d = fixtures::sl2_torus();
        let reordered = crate::datum::SphericalDatum::new(
            d.group().clone(),
            d.weight_lattice().basis_rows(),
            d.spherical_roots().to_vec(),
            vec![
                Color::new("B1", d.colors()[0].moved_by.clone(), d.colors()[0].phi().to_vec()),
                Color::new("B2", d.colors()[1].moved_by.clone(), d.colors()[1].phi().to_vec()),
            ],
        )
        .unwrap();
        match equivalent(&d, &reordered).unwrap() {
            Equivalence::Equivalent { witness } => {
                assert_eq!(
                    witness,
                    vec![
                        ("Dp".to_string(), "B1".to_string()),
                        ("Dm".to_string(), "B2".to_string())
                    ]
                );
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn lattice_difference_detected() {
        let a = fixtures::sl2_torus();
        let b = fixtures::sl2_normalizer();
        assert_eq!(
            equivalent(&a, &b).unwrap(),
            Equivalence::Different { difference: Difference::WeightLattice }
        );
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn different_groups_incomparable() {
        let a = fixtures::sl2_torus();
        let b = fixtures::a1xa1_left();
        assert_eq!(equivalent(&a, &b), Err(Incomparable));
    }
}
