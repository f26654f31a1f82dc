//! The central data model: weight lattice, spherical roots, and colors.
//!
//! A [`SphericalDatum`] holds the invariant triple of a spherical homogeneous
//! space. The valuation cone is represented implicitly by the spherical roots
//! (it is `{ v : ⟨σ, v⟩ ≤ 0 }` over them) and materialized on demand.
//!
//! Structural well-formedness (consistent dimensions, known root names,
//! unique labels) is enforced at construction; the axioms relating lattice,
//! roots, and colors are checked by [`SphericalDatum::validate`], which
//! reports tagged violations instead of failing, so that deliberately broken
//! data can be inspected.

mod classify;
mod derived;
mod transform;

pub use classify::{DistinguishedReport, DistinguishedRoot, RootType, RootTypeEntry};
pub use derived::AutomorphismStructure;
pub use transform::Localization;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lattice::{IntegerLattice, LatticeError};
use crate::linalg::{self, dot_rat_int, int_rows_rank, rat, to_rat_vec, Int, IntMat, Rat};
use crate::rootsys::{ReductiveGroupData, RootId, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("group data invalid: {0}")]
    Group(crate::rootsys::RootSysError),
    #[error("lattice basis rows must have length {expected}, got {got}")]
    BasisLength { expected: usize, got: usize },
    #[error("lattice basis rows are linearly dependent")]
    DependentBasis,
    #[error("spherical root has length {got}, expected {expected}")]
    RootLength { expected: usize, got: usize },
    #[error("color {label}: phi must have length {expected} (the lattice rank), got {got}")]
    PhiLength { label: String, expected: usize, got: usize },
    #[error("color {label}: unknown simple root {root}")]
    UnknownMovedRoot { label: String, root: String },
    #[error("duplicate color label {0}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatumError {
    #[error("build error: {0}")]
    Build(#[from] BuildError),
    #[error("vector does not lie in the weight lattice")]
    NotInWeightLattice,
    #[error("invalid sublattice: {0}")]
    InvalidSublattice(String),
    #[error("valuation cone is not cosimplicial")]
    NotCosimplicial,
    #[error("ambiguous color action: {0}")]
    AmbiguousColorAction(String),
    #[error("lineality mismatch: free rank {free} vs lineality dimension {lineality}")]
    LinealityMismatch { free: usize, lineality: usize },
    #[error("{context}: {report}")]
    InvalidResult { context: &'static str, report: ValidationReport },
    #[error("unknown color label {0}")]
    UnknownColor(String),
    #[error("refusing to enumerate 2^{0} color subsets")]
    EnumerationTooLarge(usize),
    #[error("lattice error: {0}")]
    Lattice(#[from] LatticeError),
    #[error("root system error: {0}")]
    RootSys(#[from] crate::rootsys::RootSysError),
    #[error("cone error: {0}")]
    Cone(#[from] crate::cone::ConeError),
}

/// A color: the set of simple roots moving it and its functional on the
/// weight lattice, stored as exact values on the canonical basis rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub label: String,
    pub moved_by: BTreeSet<RootId>,
    phi: Vec<Rat>,
}

impl Color {
    pub fn new(label: impl Into<String>, moved_by: BTreeSet<RootId>, phi: Vec<Rat>) -> Self {
        Color { label: label.into(), moved_by, phi }
    }

    /// Values of the functional on the datum's canonical lattice basis rows.
    pub fn phi(&self) -> &[Rat] {
        &self.phi
    }
}

/// Axiom tags used by the validator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomTag {
    /// Spherical roots lie in the lattice, are primitive and independent.
    V1,
    /// Per-simple-root color structure and functional values.
    V2,
    /// Colorless simple roots are orthogonal to the lattice.
    V3,
    /// Color functionals are bounded by one on spherical roots, with equality
    /// exactly at the moved simple roots.
    V4,
    /// Every color is moved by some simple root.
    V5,
    /// Optional quasiaffine check: no color functional vanishes.
    QA,
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomTag::V1 => write!(f, "V1"),
            AxiomTag::V2 => write!(f, "V2"),
            AxiomTag::V3 => write!(f, "V3"),
            AxiomTag::V4 => write!(f, "V4"),
            AxiomTag::V5 => write!(f, "V5"),
            AxiomTag::QA => write!(f, "QA"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tag: AxiomTag,
    pub subject: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_tag(&self, tag: AxiomTag) -> bool {
        self.violations.iter().any(|v| v.tag == tag)
    }

    fn push(&mut self, tag: AxiomTag, subject: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation { tag, subject: subject.into(), message: message.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[{}] {}: {}", v.tag, v.subject, v.message)?;
        }
        Ok(())
    }
}

/// Options for [`SphericalDatum::validate`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ValidateOptions {
    /// Enable the quasiaffine check (no color functional vanishes).
    pub quasiaffine: bool,
}

/// The invariant triple of a spherical homogeneous space.
#[derive(Clone)]
pub struct SphericalDatum {
    system: RootSystem,
    weight_lattice: IntegerLattice,
    spherical_roots: Vec<Vec<Int>>,
    colors: Vec<Color>,
}

impl PartialEq for SphericalDatum {
    fn eq(&self, other: &Self) -> bool {
        self.system.group() == other.system.group()
            && self.weight_lattice == other.weight_lattice
            && self.spherical_roots == other.spherical_roots
            && self.colors == other.colors
    }
}
impl Eq for SphericalDatum {}

impl fmt::Debug for SphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SphericalDatum(group {:?}, lattice rank {}, {} spherical roots, {} colors)",
            self.system.group(),
            self.weight_lattice.rank(),
            self.spherical_roots.len(),
            self.colors.len()
        )
    }
}

impl SphericalDatum {
    /// Builds a datum. `lattice_rows` generate the weight lattice and must be
    /// linearly independent; `colors` carry phi values relative to
    /// `lattice_rows` in the given order (they are re-expressed on the
    /// canonical HNF basis internally).
    pub fn new(
        group: ReductiveGroupData,
        lattice_rows: Vec<Vec<Int>>,
        spherical_roots: Vec<Vec<Int>>,
        colors: Vec<Color>,
    ) -> Result<Self, BuildError> {
        let system = RootSystem::new(group).map_err(BuildError::Group)?;
        let ambient = system.rank();
        for row in &lattice_rows {
            if row.len() != ambient {
                return Err(BuildError::BasisLength { expected: ambient, got: row.len() });
            }
        }
        if int_rows_rank(&lattice_rows) != lattice_rows.len() {
            return Err(BuildError::DependentBasis);
        }
        for root in &spherical_roots {
            if root.len() != ambient {
                return Err(BuildError::RootLength { expected: ambient, got: root.len() });
            }
        }
        let rank = lattice_rows.len();
        // Canonicalize the basis and transport the functionals onto it.
        let (lattice, transform) = if rank == 0 {
            (IntegerLattice::zero(ambient), IntMat::identity(0))
        } else {
            let m = IntMat::from_rows(&lattice_rows);
            let (_, u, hnf_rank) = linalg::row_hnf_with_transform(&m);
            debug_assert_eq!(hnf_rank, rank);
            (IntegerLattice::from_rows(ambient, &lattice_rows), u)
        };
        let mut seen = BTreeSet::new();
        let mut canonical_colors = Vec::with_capacity(colors.len());
        for c in colors {
            if c.phi.len() != rank {
                return Err(BuildError::PhiLength {
                    label: c.label,
                    expected: rank,
                    got: c.phi.len(),
                });
            }
            for id in &c.moved_by {
                if system.root(*id).is_err() {
                    return Err(BuildError::UnknownMovedRoot {
                        label: c.label.clone(),
                        root: format!("{id}"),
                    });
                }
            }
            if !seen.insert(c.label.clone()) {
                return Err(BuildError::DuplicateLabel(c.label));
            }
            // phi on the HNF basis row i: sum_j U[i][j] * phi[j].
            let phi: Vec<Rat> = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| linalg::rat_from_int(transform.at(i, j)) * c.phi[j].clone())
                        .sum()
                })
                .collect();
            canonical_colors.push(Color { label: c.label, moved_by: c.moved_by, phi });
        }
        Ok(SphericalDatum {
            system,
            weight_lattice: lattice,
            spherical_roots,
            colors: canonical_colors,
        })
    }

    pub fn group(&self) -> &ReductiveGroupData {
        self.system.group()
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn weight_lattice(&self) -> &IntegerLattice {
        &self.weight_lattice
    }

    pub fn spherical_roots(&self) -> &[Vec<Int>] {
        &self.spherical_roots
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_by_label(&self, label: &str) -> Result<usize, DatumError> {
        self.colors
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| DatumError::UnknownColor(label.to_string()))
    }

    /// Indices of the colors moved by the given simple root.
    pub fn colors_moved_by(&self, id: RootId) -> Vec<usize> {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.moved_by.contains(&id))
            .map(|(i, _)| i)
            .collect()
    }

    /// Values of a simple coroot on the canonical lattice basis rows.
    pub fn coroot_on_basis(&self, id: RootId) -> Result<Vec<Rat>, DatumError> {
        let position = self.system.root(id)?.position;
        Ok(self
            .weight_lattice
            .basis_rows()
            .iter()
            .map(|row| linalg::rat_from_int(&row[position]))
            .collect())
    }

    /// Pairing of a color functional with a lattice member (ambient coords).
    pub fn pair_color(&self, color: usize, member: &[Int]) -> Result<Rat, DatumError> {
        Ok(self.weight_lattice.pair_functional(self.colors[color].phi(), member)?)
    }

    pub fn psi_contains(&self, v: &[Int]) -> bool {
        self.spherical_roots.iter().any(|s| s == v)
    }

    pub(crate) fn scaled(v: &[Int], f: i64) -> Vec<Int> {
        v.iter().map(|x| x * Int::from(f)).collect()
    }

    /// The simple root whose character equals `v`, if any.
    pub fn simple_root_with_vector(&self, v: &[Int]) -> Option<RootId> {
        self.system.simple_roots().iter().find(|r| r.vector == v).map(|r| r.id)
    }

    /// Simple roots without colors (type a on valid data).
    pub fn colorless_roots(&self) -> BTreeSet<RootId> {
        self.system
            .root_ids()
            .into_iter()
            .filter(|id| self.colors_moved_by(*id).is_empty())
            .collect()
    }

    // -- validation ----------------------------------------------------------

    pub fn validate(&self, options: ValidateOptions) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check_v1(&mut report);
        self.check_v2_v3(&mut report);
        self.check_v4(&mut report);
        for c in &self.colors {
            if c.moved_by.is_empty() {
                report.push(AxiomTag::V5, c.label.clone(), "color is moved by no simple root");
            }
            if options.quasiaffine && c.phi.iter().all(Zero::is_zero) {
                report.push(AxiomTag::QA, c.label.clone(), "color functional vanishes");
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate(ValidateOptions::default()).is_valid()
    }

    fn check_v1(&self, report: &mut ValidationReport) {
        for (i, s) in self.spherical_roots.iter().enumerate() {
            let subject = format!("spherical root #{i}");
            match self.weight_lattice.coordinates(s) {
                Ok(Some(coords)) => {
                    let mut g = Int::zero();
                    for c in &coords {
                        g = g.gcd(c);
                    }
                    if !g.is_one() {
                        report.push(AxiomTag::V1, subject, "not primitive in the weight lattice");
                    }
                }
                _ => {
                    report.push(AxiomTag::V1, subject, "not in the weight lattice");
                }
            }
        }
        if int_rows_rank(&self.spherical_roots) != self.spherical_roots.len() {
            report.push(AxiomTag::V1, "spherical roots", "not linearly independent");
        }
    }

    fn check_v2_v3(&self, report: &mut ValidationReport) {
        for root in self.system.simple_roots() {
            let id = root.id;
            let subject = format!("{id}");
            let moved = self.colors_moved_by(id);
            let coroot = match self.coroot_on_basis(id) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if self.psi_contains(&root.vector) {
                // Simple spherical root: a pair of colors summing to the coroot.
                if moved.len() != 2 {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        format!(
                            "simple spherical root must have exactly two colors, found {}",
                            moved.len()
                        ),
                    );
                    continue;
                }
                let sum: Vec<Rat> = (0..self.weight_lattice.rank())
                    .map(|k| {
                        self.colors[moved[0]].phi[k].clone() + self.colors[moved[1]].phi[k].clone()
                    })
                    .collect();
                if sum != coroot {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        "pair functionals must sum to the restricted coroot",
                    );
                }
            } else if self.psi_contains(&Self::scaled(&root.vector, 2)) {
                // Doubled simple root: one color carrying half the coroot.
                if moved.len() != 1 {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        format!(
                            "doubled simple root must have exactly one color, found {}",
                            moved.len()
                        ),
                    );
                    continue;
                }
                let half: Vec<Rat> = coroot.iter().map(|x| x.clone() * rat(1, 2)).collect();
                if self.colors[moved[0]].phi != half {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        "color functional must be half the restricted coroot",
                    );
                }
            } else if let Some(other) = self.collinear_psi(&root.vector) {
                report.push(
                    AxiomTag::V2,
                    subject,
                    format!(
                        "spherical root #{other} is a rational multiple of the simple root other than 1 or 2"
                    ),
                );
            } else if moved.is_empty() {
                // Colorless root: the lattice must be coroot-orthogonal.
                if coroot.iter().any(|x| !x.is_zero()) {
                    report.push(
                        AxiomTag::V3,
                        subject,
                        "weight lattice must pair to zero with the coroot of a colorless root",
                    );
                }
            } else {
                // No collinear spherical root: one color carrying the coroot.
                if moved.len() != 1 {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        format!(
                            "root with no collinear spherical root must have exactly one color, found {}",
                            moved.len()
                        ),
                    );
                    continue;
                }
                if self.colors[moved[0]].phi != coroot {
                    report.push(
                        AxiomTag::V2,
                        subject,
                        "color functional must equal the restricted coroot",
                    );
                }
            }
        }
    }

    /// Index of a spherical root collinear with `v`, if any.
    fn collinear_psi(&self, v: &[Int]) -> Option<usize> {
        self.spherical_roots.iter().position(|s| {
            let rows = [to_rat_vec(s), to_rat_vec(v)];
            linalg::rat_rank(&rows) == 1
        })
    }

    fn check_v4(&self, report: &mut ValidationReport) {
        // For every simple spherical root's colors D and every spherical root
        // sigma: <phi_D, sigma> <= 1 with equality iff sigma is a simple root
        // moved by D.
        for root in self.system.simple_roots() {
            if !self.psi_contains(&root.vector) {
                continue;
            }
            for &ci in &self.colors_moved_by(root.id) {
                for (si, sigma) in self.spherical_roots.iter().enumerate() {
                    let Ok(Some(coords)) = self.weight_lattice.coordinates(sigma) else {
                        continue;
                    };
                    let value = dot_rat_int(self.colors[ci].phi(), &coords);
                    let eq_case = self
                        .simple_root_with_vector(sigma)
                        .is_some_and(|gamma| self.colors[ci].moved_by.contains(&gamma));
                    let one = rat(1, 1);
                    if value > one {
                        report.push(
                            AxiomTag::V4,
                            format!("color {}", self.colors[ci].label),
                            format!("functional exceeds 1 on spherical root #{si}"),
                        );
                    } else if value == one && !eq_case {
                        report.push(
                            AxiomTag::V4,
                            format!("color {}", self.colors[ci].label),
                            format!(
                                "functional equals 1 on spherical root #{si} which it does not move"
                            ),
                        );
                    } else if value < one && eq_case {
                        report.push(
                            AxiomTag::V4,
                            format!("color {}", self.colors[ci].label),
                            format!("functional must equal 1 on moved simple root #{si}"),
                        );
                    }
                }
            }
        }
    }
}
