//! The datum file format (versioned JSON) and auxiliary input files.
//!
//! Rationals are serialized as exact `"p/q"` strings (plain `"p"` for
//! integers); vectors are integer arrays in the ambient character basis
//! (fundamental weights per component in order, then the central torus
//! basis), except color functionals, which are values on the `lattice_basis`
//! rows in file order.

use std::collections::BTreeSet;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use sphera_core::datum::Color;
use sphera_core::linalg::{format_rat, parse_rat, Int, Rat};
use sphera_core::rootsys::{ReductiveGroupData, RootId, SimpleType};
use sphera_core::{IntegerLattice, SphericalDatum};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub components: Vec<ComponentFile>,
    pub torus_rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColorFile {
    pub label: String,
    pub moved_by: Vec<String>,
    pub phi: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumFile {
    pub format: u32,
    pub group: GroupFile,
    pub lattice_basis: Vec<Vec<i64>>,
    pub spherical_roots: Vec<Vec<i64>>,
    pub colors: Vec<ColorFile>,
}

/// Auxiliary file: a sublattice given by ambient generator rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SublatticeFile {
    pub basis: Vec<Vec<i64>>,
}

/// Auxiliary file: a subspace of the dual space (rows are functionals by
/// their values on the datum's lattice basis) plus an optional color subset.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub subspace: Vec<Vec<String>>,
    #[serde(default)]
    pub colors: Vec<String>,
}

pub fn parse_simple_type(kind: &str, rank: usize) -> Result<SimpleType> {
    let t = match kind {
        "A" => SimpleType::A(rank),
        "B" => SimpleType::B(rank),
        "C" => SimpleType::C(rank),
        "D" => SimpleType::D(rank),
        "E6" => SimpleType::E6,
        "E7" => SimpleType::E7,
        "E8" => SimpleType::E8,
        "F4" => SimpleType::F4,
        "G2" => SimpleType::G2,
        other => bail!("unknown component type {other:?}"),
    };
    if t.rank() != rank {
        bail!("component type {kind} has rank {}, file says {rank}", t.rank());
    }
    t.validate().map_err(|e| anyhow!("{e}"))?;
    Ok(t)
}

pub fn simple_type_to_file(t: SimpleType) -> ComponentFile {
    let kind = match t {
        SimpleType::A(_) => "A".to_string(),
        SimpleType::B(_) => "B".to_string(),
        SimpleType::C(_) => "C".to_string(),
        SimpleType::D(_) => "D".to_string(),
        SimpleType::E6 => "E6".to_string(),
        SimpleType::E7 => "E7".to_string(),
        SimpleType::E8 => "E8".to_string(),
        SimpleType::F4 => "F4".to_string(),
        SimpleType::G2 => "G2".to_string(),
    };
    ComponentFile { kind, rank: t.rank() }
}

pub fn parse_root_id(s: &str) -> Result<RootId> {
    let rest = s.strip_prefix('c').ok_or_else(|| anyhow!("bad root name {s:?}"))?;
    let (comp, idx) = rest
        .split_once(".a")
        .ok_or_else(|| anyhow!("bad root name {s:?}, expected c<i>.a<j>"))?;
    let component = usize::from_str(comp).with_context(|| format!("bad root name {s:?}"))?;
    let index = usize::from_str(idx).with_context(|| format!("bad root name {s:?}"))?;
    if index == 0 {
        bail!("root indices are 1-based: {s:?}");
    }
    Ok(RootId::new(component, index))
}

fn int_rows(rows: &[Vec<i64>]) -> Vec<Vec<Int>> {
    rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
}

fn to_i64_rows(rows: &[Vec<Int>]) -> Result<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    sphera_core::linalg::int_to_i64(x)
                        .ok_or_else(|| anyhow!("integer does not fit in 64 bits"))
                })
                .collect()
        })
        .collect()
}

pub fn parse_rat_vec(values: &[String]) -> Result<Vec<Rat>> {
    values
        .iter()
        .map(|s| parse_rat(s).ok_or_else(|| anyhow!("bad rational {s:?}")))
        .collect()
}

pub fn rat_vec_to_file(values: &[Rat]) -> Vec<String> {
    values.iter().map(format_rat).collect()
}

pub fn datum_from_file(file: &DatumFile) -> Result<SphericalDatum> {
    if file.format != FORMAT_VERSION {
        bail!("unsupported format version {}", file.format);
    }
    let components = file
        .group
        .components
        .iter()
        .map(|c| parse_simple_type(&c.kind, c.rank))
        .collect::<Result<Vec<_>>>()?;
    let group = ReductiveGroupData::new(components, file.group.torus_rank)
        .map_err(|e| anyhow!("{e}"))?;
    let mut colors = Vec::with_capacity(file.colors.len());
    for c in &file.colors {
        let moved: BTreeSet<RootId> = c
            .moved_by
            .iter()
            .map(|s| parse_root_id(s))
            .collect::<Result<_>>()
            .with_context(|| format!("color {}", c.label))?;
        let phi = parse_rat_vec(&c.phi).with_context(|| format!("color {}", c.label))?;
        colors.push(Color::new(c.label.clone(), moved, phi));
    }
    SphericalDatum::new(
        group,
        int_rows(&file.lattice_basis),
        int_rows(&file.spherical_roots),
        colors,
    )
    .map_err(|e| anyhow!("{e}"))
}

pub fn datum_to_file(d: &SphericalDatum) -> Result<DatumFile> {
    let group = GroupFile {
        components: d.group().components.iter().map(|&t| simple_type_to_file(t)).collect(),
        torus_rank: d.group().torus_rank,
    };
    let colors = d
        .colors()
        .iter()
        .map(|c| ColorFile {
            label: c.label.clone(),
            moved_by: c.moved_by.iter().map(|id| id.to_string()).collect(),
            phi: rat_vec_to_file(c.phi()),
        })
        .collect();
    Ok(DatumFile {
        format: FORMAT_VERSION,
        group,
        lattice_basis: to_i64_rows(&d.weight_lattice().basis_rows())?,
        spherical_roots: to_i64_rows(d.spherical_roots())?,
        colors,
    })
}

pub fn load_datum(path: &std::path::Path) -> Result<SphericalDatum> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: DatumFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    datum_from_file(&file).with_context(|| format!("interpreting {}", path.display()))
}

pub fn load_sublattice(path: &std::path::Path, ambient: usize) -> Result<IntegerLattice> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: SublatticeFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    for row in &file.basis {
        if row.len() != ambient {
            bail!("sublattice rows must have length {ambient}");
        }
    }
    Ok(IntegerLattice::from_rows(ambient, &int_rows(&file.basis)))
}

pub fn datum_to_json(d: &SphericalDatum) -> Result<String> {
    let file = datum_to_file(d)?;
    Ok(serde_json::to_string_pretty(&file)?)
}
