//! Simple-root types and distinguished spherical roots.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{rat, Int, Rat};
use crate::rootsys::{sum_of_roots, RootId, SubdiagramTarget};

use super::SphericalDatum;

/// The four mutually exclusive cases for a simple root of the acting group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootType {
    /// No color is moved: the root acts through a Levi factor.
    A,
    /// The root is itself a spherical root; two colors.
    B,
    /// Twice the root is a spherical root; one color with half the coroot.
    C,
    /// No collinear spherical root; one color with the full coroot.
    D,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A => write!(f, "a"),
            RootType::B => write!(f, "b"),
            RootType::C => write!(f, "c"),
            RootType::D => write!(f, "d"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootTypeEntry {
    pub root: RootId,
    pub root_type: RootType,
    /// Labels of the witnessing colors.
    pub witnesses: Vec<String>,
}

/// One distinguished spherical root with its kind (1, 2 or 3) and the simple
/// root it contracts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedRoot {
    pub root: Vec<Int>,
    pub kind: u8,
    pub tilde: RootId,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistinguishedReport {
    pub entries: Vec<DistinguishedRoot>,
}

impl DistinguishedReport {
    pub fn of_kind(&self, kind: u8) -> Vec<&Vec<Int>> {
        self.entries.iter().filter(|e| e.kind == kind).map(|e| &e.root).collect()
    }

    /// The full distinguished set.
    pub fn plus_set(&self) -> BTreeSet<Vec<Int>> {
        self.entries.iter().map(|e| e.root.clone()).collect()
    }

    pub fn tilde_of(&self, root: &[Int]) -> Option<RootId> {
        self.entries.iter().find(|e| e.root == root).map(|e| e.tilde)
    }

    pub fn kind_of(&self, root: &[Int]) -> Option<u8> {
        self.entries.iter().find(|e| e.root == root).map(|e| e.kind)
    }
}

impl SphericalDatum {
    /// Classifies every simple root. Meaningful on data passing
    /// [`SphericalDatum::validate`]; the case analysis alone is applied here.
    pub fn classify_simple_roots(&self) -> Vec<RootTypeEntry> {
        self.system()
            .simple_roots()
            .iter()
            .map(|root| {
                let moved = self.colors_moved_by(root.id);
                let witnesses: Vec<String> =
                    moved.iter().map(|&i| self.colors()[i].label.clone()).collect();
                let root_type = if moved.is_empty() {
                    RootType::A
                } else if self.psi_contains(&root.vector) {
                    RootType::B
                } else if self.psi_contains(&Self::scaled(&root.vector, 2)) {
                    RootType::C
                } else {
                    RootType::D
                };
                RootTypeEntry { root: root.id, root_type, witnesses }
            })
            .collect()
    }

    /// The distinguished spherical roots with their kinds and contractions:
    /// simple spherical roots whose colors all carry half the coroot; sums
    /// over a B-chain whose tail is colorless; the G2 combination 2a2 + a1.
    pub fn distinguished_roots(&self) -> DistinguishedReport {
        let system = self.system();
        let max_rank =
            system.group().components.iter().map(|c| c.rank()).max().unwrap_or(0);
        // Candidate subdiagram sums, precomputed once.
        let mut chain_sums: BTreeMap<Vec<Int>, (RootId, Vec<RootId>)> = BTreeMap::new();
        for k in 2..=max_rank {
            for sigma in system.find_subdiagrams(SubdiagramTarget::TypeB(k)) {
                let sum = sum_of_roots(system, &sigma).expect("own roots");
                chain_sums.entry(sum).or_insert((sigma[0], sigma));
            }
        }
        let mut g2_sums: BTreeMap<Vec<Int>, RootId> = BTreeMap::new();
        for sigma in system.find_subdiagrams(SubdiagramTarget::TypeG2) {
            // 2 * short + long.
            let short = system.root(sigma[1]).expect("own root");
            let long = system.root(sigma[0]).expect("own root");
            let sum: Vec<Int> = long
                .vector
                .iter()
                .zip(&short.vector)
                .map(|(l, s)| l + s * Int::from(2))
                .collect();
            g2_sums.entry(sum).or_insert(sigma[1]);
        }

        let mut entries = Vec::new();
        for sigma in self.spherical_roots() {
            if let Some(id) = self.simple_root_with_vector(sigma) {
                let moved = self.colors_moved_by(id);
                if !moved.is_empty() && moved.iter().all(|&ci| self.phi_is_half_coroot(ci, id)) {
                    entries.push(DistinguishedRoot { root: sigma.clone(), kind: 1, tilde: id });
                }
                continue;
            }
            if let Some((tilde, chain)) = chain_sums.get(sigma) {
                let tail_colorless =
                    chain[1..].iter().all(|id| self.colors_moved_by(*id).is_empty());
                if tail_colorless {
                    entries.push(DistinguishedRoot {
                        root: sigma.clone(),
                        kind: 2,
                        tilde: *tilde,
                    });
                    continue;
                }
            }
            if let Some(&tilde) = g2_sums.get(sigma) {
                entries.push(DistinguishedRoot { root: sigma.clone(), kind: 3, tilde });
            }
        }
        DistinguishedReport { entries }
    }

    fn phi_is_half_coroot(&self, color: usize, id: RootId) -> bool {
        let Ok(coroot) = self.coroot_on_basis(id) else { return false };
        let half: Vec<Rat> = coroot.into_iter().map(|x| x * rat(1, 2)).collect();
        self.colors()[color].phi() == half
    }
}
