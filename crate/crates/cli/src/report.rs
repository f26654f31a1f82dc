//! Human-readable and machine-readable renderings of command results.

use anyhow::Result;
use serde::Serialize;

use sphera_core::datum::{
    AutomorphismStructure, SphericalDatum, ValidationReport,
};
use sphera_core::equiv::{self, Difference};
use sphera_core::lattice::QuotientOrder;
use sphera_core::linalg::Int;
use sphera_core::rootsys::RootId;
use sphera_core::subspace::EnumeratedSubspaces;

fn vec_str(v: &[Int]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
struct ViolationOut {
    axiom: String,
    subject: String,
    message: String,
}

#[derive(Serialize)]
struct ValidationOut {
    valid: bool,
    violations: Vec<ViolationOut>,
}

pub fn print_validation(report: &ValidationReport, json: bool) -> Result<()> {
    if json {
        return emit(&ValidationOut {
            valid: report.is_valid(),
            violations: report
                .violations
                .iter()
                .map(|v| ViolationOut {
                    axiom: v.tag.to_string(),
                    subject: v.subject.clone(),
                    message: v.message.clone(),
                })
                .collect(),
        });
    }
    if report.is_valid() {
        println!("valid");
    } else {
        println!("invalid:");
        for v in &report.violations {
            println!("  [{}] {}: {}", v.tag, v.subject, v.message);
        }
    }
    Ok(())
}

pub fn print_bool(key: &str, value: bool, json: bool) -> Result<()> {
    if json {
        let mut map = serde_json::Map::new();
        map.insert(key.to_string(), serde_json::Value::Bool(value));
        return emit(&serde_json::Value::Object(map));
    }
    println!("{key}: {value}");
    Ok(())
}

pub fn print_dimension(dim: usize, json: bool) -> Result<()> {
    if json {
        let mut map = serde_json::Map::new();
        map.insert("dimension".to_string(), serde_json::Value::from(dim));
        return emit(&serde_json::Value::Object(map));
    }
    println!("dimension: {dim}");
    Ok(())
}

#[derive(Serialize)]
struct AutomorphismsOut {
    torus_rank: usize,
    finite_factors: Vec<String>,
}

pub fn print_automorphisms(auto: &AutomorphismStructure, json: bool) -> Result<()> {
    if json {
        return emit(&AutomorphismsOut {
            torus_rank: auto.torus_rank,
            finite_factors: auto.finite_factors.iter().map(|x| x.to_string()).collect(),
        });
    }
    println!("automorphism group: torus rank {}", auto.torus_rank);
    if auto.finite_factors.is_empty() {
        println!("finite part: trivial");
    } else {
        let parts: Vec<String> =
            auto.finite_factors.iter().map(|d| format!("Z/{d}")).collect();
        println!("finite part: {}", parts.join(" x "));
    }
    Ok(())
}

#[derive(Serialize)]
struct RootRow {
    root: String,
    root_type: String,
    colors: Vec<String>,
}

#[derive(Serialize)]
struct DistinguishedRow {
    root: Vec<String>,
    kind: u8,
    contraction: String,
}

#[derive(Serialize)]
struct RootsOut {
    types: Vec<RootRow>,
    distinguished: Vec<DistinguishedRow>,
    doubled_roots: Vec<Vec<String>>,
}

fn roots_out(d: &SphericalDatum) -> Result<RootsOut> {
    let types = d
        .classify_simple_roots()
        .into_iter()
        .map(|e| RootRow {
            root: e.root.to_string(),
            root_type: e.root_type.to_string(),
            colors: e.witnesses,
        })
        .collect();
    let distinguished = d
        .distinguished_roots()
        .entries
        .into_iter()
        .map(|e| DistinguishedRow {
            root: e.root.iter().map(|x| x.to_string()).collect(),
            kind: e.kind,
            contraction: e.tilde.to_string(),
        })
        .collect();
    let (doubled, _) = d.doubled_root_lattice().map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(RootsOut {
        types,
        distinguished,
        doubled_roots: doubled
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
    })
}

pub fn print_roots(d: &SphericalDatum, json: bool) -> Result<()> {
    let out = roots_out(d)?;
    if json {
        return emit(&out);
    }
    println!("simple root types:");
    for row in &out.types {
        if row.colors.is_empty() {
            println!("  {}: type {}", row.root, row.root_type);
        } else {
            println!("  {}: type {} (colors {})", row.root, row.root_type, row.colors.join(", "));
        }
    }
    println!("distinguished spherical roots:");
    if out.distinguished.is_empty() {
        println!("  none");
    }
    for row in &out.distinguished {
        println!(
            "  ({}) kind {} contracts to {}",
            row.root.join(", "),
            row.kind,
            row.contraction
        );
    }
    println!("doubled spherical roots:");
    for r in &out.doubled_roots {
        println!("  ({})", r.join(", "));
    }
    Ok(())
}

#[derive(Serialize)]
struct SphericalRootOut {
    coordinates: Vec<String>,
    in_group_root_lattice: bool,
}

#[derive(Serialize)]
struct InfoOut {
    lattice_rank: usize,
    lattice_basis: Vec<Vec<String>>,
    spherical_roots: Vec<SphericalRootOut>,
    types: Vec<RootRow>,
    distinguished: Vec<DistinguishedRow>,
    doubled_roots: Vec<Vec<String>>,
    doubled_lattice_index: String,
    automorphisms: AutomorphismsOut,
    wonderful: bool,
    dimension: usize,
    canonical_hash: String,
}

pub fn print_info(d: &SphericalDatum, json: bool) -> Result<()> {
    let roots = roots_out(d)?;
    let (_, doubled_lattice) = d.doubled_root_lattice().map_err(|e| anyhow::anyhow!("{e}"))?;
    let index = d
        .weight_lattice()
        .index_of_sublattice(&doubled_lattice)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let auto = d.automorphism_structure().map_err(|e| anyhow::anyhow!("{e}"))?;
    let spherical_roots = d
        .spherical_roots()
        .iter()
        .map(|r| {
            Ok(SphericalRootOut {
                coordinates: r.iter().map(|x| x.to_string()).collect(),
                in_group_root_lattice: d
                    .system()
                    .root_lattice_membership(r)
                    .map_err(|e| anyhow::anyhow!("{e}"))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let out = InfoOut {
        lattice_rank: d.weight_lattice().rank(),
        lattice_basis: d
            .weight_lattice()
            .basis_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
        spherical_roots,
        types: roots.types,
        distinguished: roots.distinguished,
        doubled_roots: roots.doubled_roots,
        doubled_lattice_index: match index {
            QuotientOrder::Finite(n) => n.to_string(),
            QuotientOrder::Infinite => "infinite".to_string(),
        },
        automorphisms: AutomorphismsOut {
            torus_rank: auto.torus_rank,
            finite_factors: auto.finite_factors.iter().map(|x| x.to_string()).collect(),
        },
        wonderful: d.is_wonderful(),
        dimension: d.dimension().map_err(|e| anyhow::anyhow!("{e}"))?,
        canonical_hash: equiv::canonical_hash(d),
    };
    if json {
        return emit(&out);
    }
    println!("weight lattice rank: {}", out.lattice_rank);
    for row in d.weight_lattice().basis_rows() {
        println!("  basis {}", vec_str(&row));
    }
    println!("spherical roots:");
    for (r, meta) in d.spherical_roots().iter().zip(&out.spherical_roots) {
        let flag = if meta.in_group_root_lattice { "in" } else { "outside" };
        println!("  {} ({} the group root lattice)", vec_str(r), flag);
    }
    println!("simple root types:");
    for row in &out.types {
        if row.colors.is_empty() {
            println!("  {}: type {}", row.root, row.root_type);
        } else {
            println!("  {}: type {} (colors {})", row.root, row.root_type, row.colors.join(", "));
        }
    }
    println!("distinguished spherical roots:");
    if out.distinguished.is_empty() {
        println!("  none");
    }
    for row in &out.distinguished {
        println!(
            "  ({}) kind {} contracts to {}",
            row.root.join(", "),
            row.kind,
            row.contraction
        );
    }
    println!("doubled spherical roots:");
    for r in &out.doubled_roots {
        println!("  ({})", r.join(", "));
    }
    println!("index of the doubled root lattice: {}", out.doubled_lattice_index);
    println!(
        "automorphism group: torus rank {}, finite factors [{}]",
        out.automorphisms.torus_rank,
        out.automorphisms.finite_factors.join(", ")
    );
    println!("wonderful embedding: {}", out.wonderful);
    println!("dimension: {}", out.dimension);
    println!("canonical key: {}", out.canonical_hash);
    Ok(())
}

#[derive(Serialize)]
struct SubspaceTestOut {
    colored_subspace: bool,
    parabolic_roots: Option<Vec<String>>,
    quotient: crate::format::DatumFile,
}

pub fn print_subspace_test(
    quotient: &SphericalDatum,
    parabolic: Option<std::collections::BTreeSet<RootId>>,
    json: bool,
) -> Result<()> {
    let out = SubspaceTestOut {
        colored_subspace: true,
        parabolic_roots: parabolic
            .as_ref()
            .map(|s| s.iter().map(|id| id.to_string()).collect()),
        quotient: crate::format::datum_to_file(quotient)?,
    };
    if json {
        return emit(&out);
    }
    println!("colored subspace: true");
    match &out.parabolic_roots {
        Some(roots) => println!("parabolic with simple roots [{}]", roots.join(", ")),
        None => println!("not parabolic"),
    }
    println!("{}", serde_json::to_string_pretty(&out.quotient)?);
    Ok(())
}

#[derive(Serialize)]
struct EnumeratedItemOut {
    subspace_basis: Vec<Vec<String>>,
    colors: Vec<String>,
    orbit: usize,
}

#[derive(Serialize)]
struct EnumerationOut {
    items: Vec<EnumeratedItemOut>,
    order: Vec<(usize, usize)>,
}

pub fn print_enumeration(
    _d: &SphericalDatum,
    enumerated: &EnumeratedSubspaces,
    json: bool,
) -> Result<()> {
    let items: Vec<EnumeratedItemOut> = enumerated
        .items
        .iter()
        .zip(&enumerated.orbit)
        .map(|(cs, &orbit)| EnumeratedItemOut {
            subspace_basis: cs
                .subspace
                .basis_rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            colors: cs.colors.iter().cloned().collect(),
            orbit,
        })
        .collect();
    let out = EnumerationOut { items, order: enumerated.order.clone() };
    if json {
        return emit(&out);
    }
    println!("{} colored subspaces:", out.items.len());
    for (i, item) in out.items.iter().enumerate() {
        let basis: Vec<String> =
            item.subspace_basis.iter().map(|r| format!("({})", r.join(", "))).collect();
        println!(
            "  #{i}: span[{}] colors[{}] orbit {}",
            basis.join(" "),
            item.colors.join(", "),
            item.orbit
        );
    }
    println!("order relation (i precedes j): {:?}", out.order);
    Ok(())
}

#[derive(Serialize)]
struct EquivalentOut {
    equivalent: bool,
    witness: Vec<(String, String)>,
}

pub fn print_equivalent(witness: &[(String, String)], json: bool) -> Result<()> {
    if json {
        return emit(&EquivalentOut { equivalent: true, witness: witness.to_vec() });
    }
    println!("equivalent");
    for (a, b) in witness {
        println!("  {a} -> {b}");
    }
    Ok(())
}

#[derive(Serialize)]
struct DifferentOut {
    equivalent: bool,
    counterreason: String,
}

pub fn print_different(difference: Difference, json: bool) -> Result<()> {
    if json {
        return emit(&DifferentOut {
            equivalent: false,
            counterreason: difference.to_string(),
        });
    }
    println!("not equivalent: {difference} differs");
    Ok(())
}
