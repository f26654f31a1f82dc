//! Colored subspaces: pairs of a subspace of the dual Cartan space and a set
//! of colors, such that the subspace is exactly the cone spanned by its
//! intersection with the valuation cone together with the chosen color
//! functionals. They parametrize the overgroups with connected quotient;
//! their quotient data and parabolic detection live here too.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cone::Cone;
use crate::datum::{Color, DatumError, SphericalDatum, ValidateOptions};
use crate::lattice::IntegerLattice;
use crate::linalg::{to_rat_vec, IntMat, Rat, Subspace};
use crate::rootsys::RootId;

/// A candidate colored subspace: vectors live in the dual of the weight
/// lattice's coordinate space (functionals by their values on the canonical
/// basis rows), colors are referenced by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSubspace {
    pub subspace: Subspace,
    pub colors: BTreeSet<String>,
}

impl ColoredSubspace {
    pub fn trivial(d: &SphericalDatum) -> Self {
        ColoredSubspace {
            subspace: Subspace::zero(d.weight_lattice().rank()),
            colors: BTreeSet::new(),
        }
    }

    /// The pair (full dual space, all colors).
    pub fn full(d: &SphericalDatum) -> Self {
        ColoredSubspace {
            subspace: Subspace::full(d.weight_lattice().rank()),
            colors: d.colors().iter().map(|c| c.label.clone()).collect(),
        }
    }

    pub fn precedes(&self, other: &ColoredSubspace) -> bool {
        self.subspace.is_subspace_of(&other.subspace) && self.colors.is_subset(&other.colors)
    }
}

fn color_indices(d: &SphericalDatum, cs: &ColoredSubspace) -> Result<Vec<usize>, DatumError> {
    cs.colors.iter().map(|label| d.color_by_label(label)).collect()
}

/// Whether the pair satisfies the defining property: every chosen functional
/// lies in the subspace, and the cone spanned by the valuation cone's trace
/// on the subspace together with the functionals is the whole subspace.
pub fn is_colored_subspace(d: &SphericalDatum, cs: &ColoredSubspace) -> Result<bool, DatumError> {
    let rank = d.weight_lattice().rank();
    if cs.subspace.ambient_dim() != rank {
        return Err(DatumError::Lattice(crate::lattice::LatticeError::Dimension {
            ambient: rank,
            got: cs.subspace.ambient_dim(),
        }));
    }
    let indices = color_indices(d, cs)?;
    let mut phis_in_subspace: Vec<Vec<Rat>> = Vec::new();
    for &i in &indices {
        let phi = d.colors()[i].phi().to_vec();
        match cs.subspace.express(&phi) {
            Some(coords) => phis_in_subspace.push(coords),
            None => return Ok(false),
        }
    }
    let trace = d.valuation_cone()?.intersect_with_subspace(&cs.subspace)?;
    let mut generators: Vec<Vec<Rat>> =
        trace.generators().iter().map(|g| to_rat_vec(g)).collect();
    generators.extend(phis_in_subspace);
    let spanned = Cone::from_generators(cs.subspace.dim(), &generators)?;
    Ok(spanned.lineality_dim() == cs.subspace.dim())
}

/// Invariants of the quotient by the overgroup attached to the colored
/// subspace: the lattice drops to the annihilator of the subspace, the
/// chosen colors disappear, the rest restrict, and the spherical roots are
/// recomputed from the projected valuation cone.
pub fn quotient_by(d: &SphericalDatum, cs: &ColoredSubspace) -> Result<SphericalDatum, DatumError> {
    if !is_colored_subspace(d, cs)? {
        return Err(DatumError::InvalidSublattice("pair is not a colored subspace".into()));
    }
    let lattice = d.weight_lattice();
    let removed = color_indices(d, cs)?;
    // Annihilator of the subspace inside the lattice, in basis coordinates.
    let kernel_coords = if cs.subspace.dim() == 0 {
        IntMat::identity(lattice.rank())
    } else {
        let constraint_rows = cs.subspace.basis_rows();
        let mut m = IntMat::zero(lattice.rank(), constraint_rows.len());
        for (j, f) in constraint_rows.iter().enumerate() {
            for i in 0..lattice.rank() {
                *m.at_mut(i, j) = f[i].clone();
            }
        }
        crate::linalg::int_kernel(&m)
    };
    let basis_rows = lattice.basis_rows();
    let new_rows: Vec<Vec<crate::linalg::Int>> = (0..kernel_coords.nrows())
        .map(|i| {
            let coords = kernel_coords.row(i);
            let mut v = alloc::vec![crate::linalg::Int::from(0); lattice.ambient_rank()];
            for (c, row) in coords.iter().zip(&basis_rows) {
                crate::linalg::add_scaled_int(&mut v, row, c);
            }
            v
        })
        .collect();
    let new_lattice = IntegerLattice::from_rows(lattice.ambient_rank(), &new_rows);

    // Project the valuation cone to the new coordinates and read the walls.
    let projection: Vec<Vec<Rat>> = new_lattice
        .basis_rows()
        .iter()
        .map(|row| {
            let coords = lattice.coordinates(row)?.ok_or(DatumError::NotInWeightLattice)?;
            Ok::<_, DatumError>(to_rat_vec(&coords))
        })
        .collect::<Result<_, _>>()?;
    let projected = d.valuation_cone()?.project(&projection)?;
    let new_roots = projected.spherical_roots_of(&new_lattice)?;

    let mut new_colors = Vec::new();
    for (i, c) in d.colors().iter().enumerate() {
        if removed.contains(&i) {
            continue;
        }
        let phi: Vec<Rat> = new_lattice
            .basis_rows()
            .iter()
            .map(|row| Ok::<_, DatumError>(lattice.pair_functional(c.phi(), row)?))
            .collect::<Result<_, _>>()?;
        new_colors.push(Color::new(c.label.clone(), c.moved_by.clone(), phi));
    }
    let datum = SphericalDatum::new(
        d.group().clone(),
        new_lattice.basis_rows(),
        new_roots,
        new_colors,
    )?;
    let report = datum.validate(ValidateOptions::default());
    if !report.is_valid() {
        return Err(DatumError::InvalidResult {
            context: "colored-subspace quotient produced invalid datum",
            report,
        });
    }
    Ok(datum)
}

/// For a full colored subspace, the simple roots of the parabolic attached
/// to it: those whose colors are all chosen. `None` when the subspace is
/// proper (the overgroup is not parabolic).
pub fn parabolic_of(
    d: &SphericalDatum,
    cs: &ColoredSubspace,
) -> Result<Option<BTreeSet<RootId>>, DatumError> {
    if !is_colored_subspace(d, cs)? {
        return Err(DatumError::InvalidSublattice("pair is not a colored subspace".into()));
    }
    if cs.subspace.dim() != d.weight_lattice().rank() {
        return Ok(None);
    }
    let chosen: BTreeSet<usize> = color_indices(d, cs)?.into_iter().collect();
    let mut roots = BTreeSet::new();
    for id in d.system().root_ids() {
        if d.colors_moved_by(id).iter().all(|i| chosen.contains(i)) {
            roots.insert(id);
        }
    }
    Ok(Some(roots))
}

/// The enumerated family of color-spanned colored subspaces.
#[derive(Debug, Clone)]
pub struct EnumeratedSubspaces {
    pub items: Vec<ColoredSubspace>,
    /// Pairs (i, j) with `items[i] ⪯ items[j]`, i != j.
    pub order: Vec<(usize, usize)>,
    /// Orbit class of each item under swaps of equal-invariant color pairs
    /// over distinguished simple spherical roots.
    pub orbit: Vec<usize>,
}

/// Enumerates the colored subspaces whose subspace is spanned by the chosen
/// color functionals (optionally extended by a fixed central subspace).
pub fn enumerate_color_spanned(
    d: &SphericalDatum,
    central: Option<&Subspace>,
) -> Result<EnumeratedSubspaces, DatumError> {
    let rank = d.weight_lattice().rank();
    let n = d.colors().len();
    if n >= 20 {
        return Err(DatumError::EnumerationTooLarge(n));
    }
    let mut items = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let chosen: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut span_vectors: Vec<Vec<Rat>> =
            chosen.iter().map(|&i| d.colors()[i].phi().to_vec()).collect();
        if let Some(c) = central {
            span_vectors.extend(c.basis_rows().iter().map(|r| to_rat_vec(r)));
        }
        let subspace = Subspace::span(rank, &span_vectors)
            .map_err(|_| DatumError::NotInWeightLattice)?;
        let cs = ColoredSubspace {
            subspace,
            colors: chosen.iter().map(|&i| d.colors()[i].label.clone()).collect(),
        };
        if is_colored_subspace(d, &cs)? {
            items.push(cs);
        }
    }
    let mut order = Vec::new();
    for i in 0..items.len() {
        for j in 0..items.len() {
            if i != j && items[i].precedes(&items[j]) {
                order.push((i, j));
            }
        }
    }
    // Swaps certified by doubling automorphisms: the two colors over a
    // distinguished simple spherical root, when their invariants agree.
    let mut swaps: Vec<(String, String)> = Vec::new();
    for entry in d.distinguished_roots().entries.iter().filter(|e| e.kind == 1) {
        let moved = d.colors_moved_by(entry.tilde);
        if moved.len() == 2 {
            let (a, b) = (&d.colors()[moved[0]], &d.colors()[moved[1]]);
            if a.moved_by == b.moved_by && a.phi() == b.phi() {
                swaps.push((a.label.clone(), b.label.clone()));
            }
        }
    }
    let canonical_colorset = |start: &BTreeSet<String>| -> BTreeSet<String> {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut frontier = alloc::vec![start.clone()];
        seen.insert(start.clone());
        while let Some(cur) = frontier.pop() {
            for (a, b) in &swaps {
                let mut next = cur.clone();
                let had_a = next.remove(a);
                let had_b = next.remove(b);
                if had_a {
                    next.insert(b.clone());
                }
                if had_b {
                    next.insert(a.clone());
                }
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().next().expect("orbit nonempty")
    };
    let mut reps: Vec<(Subspace, BTreeSet<String>)> = Vec::new();
    let mut orbit = Vec::with_capacity(items.len());
    for cs in &items {
        let rep = (cs.subspace.clone(), canonical_colorset(&cs.colors));
        let id = match reps.iter().position(|r| *r == rep) {
            Some(i) => i,
            None => {
                reps.push(rep);
                reps.len() - 1
            }
        };
        orbit.push(id);
    }
    Ok(EnumeratedSubspaces { items, order, orbit })
}
