//! A corpus of example data used across the test suites and shipped as JSON
//! through the CLI crate. Functional values are computed from the stated
//! coroot recipes rather than written as literals.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::datum::{Color, SphericalDatum};
use crate::linalg::{int_vec, rat, Int, Rat};
use crate::rootsys::{ReductiveGroupData, RootId, RootSystem, SimpleType};

fn moved(ids: &[RootId]) -> BTreeSet<RootId> {
    ids.iter().copied().collect()
}

fn coroot_values(system: &RootSystem, rows: &[Vec<Int>], id: RootId) -> Vec<Rat> {
    let position = system.root(id).expect("fixture root").position;
    rows.iter().map(|r| crate::linalg::rat_from_int(&r[position])).collect()
}

fn half(values: Vec<Rat>) -> Vec<Rat> {
    values.into_iter().map(|v| v * rat(1, 2)).collect()
}

fn build(
    group: ReductiveGroupData,
    rows: Vec<Vec<Int>>,
    roots: Vec<Vec<Int>>,
    colors: Vec<Color>,
) -> SphericalDatum {
    SphericalDatum::new(group, rows, roots, colors).expect("fixture builds")
}

fn a(component: usize, index: usize) -> RootId {
    RootId::new(component, index)
}

/// SL2 modulo its maximal torus: the basic rank-one pair of colors.
pub fn sl2_torus() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2])];
    let phi = half(coroot_values(&system, &rows, a(0, 1)));
    build(
        group,
        rows,
        vec![int_vec(&[2])],
        vec![
            Color::new("Dp", moved(&[a(0, 1)]), phi.clone()),
            Color::new("Dm", moved(&[a(0, 1)]), phi),
        ],
    )
}

/// SL2 modulo a maximal unipotent subgroup: one color, no spherical roots.
pub fn sl2_unipotent() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[1])];
    let phi = coroot_values(&system, &rows, a(0, 1));
    build(group, rows, vec![], vec![Color::new("D", moved(&[a(0, 1)]), phi)])
}

/// SL2 modulo the normalizer of the torus: the doubled-root quotient.
pub fn sl2_normalizer() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[4])];
    let phi = half(coroot_values(&system, &rows, a(0, 1)));
    build(group, rows, vec![int_vec(&[4])], vec![Color::new("D", moved(&[a(0, 1)]), phi)])
}

/// SL2 x SL2 acting through the left factor only; the right factor is inert.
pub fn a1xa1_left() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1), SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0])];
    let phi = half(coroot_values(&system, &rows, a(0, 1)));
    build(
        group,
        rows,
        vec![int_vec(&[2, 0])],
        vec![
            Color::new("Dp", moved(&[a(0, 1)]), phi.clone()),
            Color::new("Dm", moved(&[a(0, 1)]), phi),
        ],
    )
}

/// SL3 modulo SO3: doubled spherical roots, automorphisms of order three.
pub fn sl3_so3() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(2)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0]), int_vec(&[0, 2])];
    let phi1 = half(coroot_values(&system, &rows, a(0, 1)));
    let phi2 = half(coroot_values(&system, &rows, a(0, 2)));
    build(
        group,
        rows,
        vec![int_vec(&[4, -2]), int_vec(&[-2, 4])],
        vec![
            Color::new("D1", moved(&[a(0, 1)]), phi1),
            Color::new("D2", moved(&[a(0, 2)]), phi2),
        ],
    )
}

/// The four-dimensional quadric SO5/SO4: a B2-chain spherical root.
pub fn so5_so4() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::B(2)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[1, 0])];
    let phi = coroot_values(&system, &rows, a(0, 1));
    build(group, rows, vec![int_vec(&[1, 0])], vec![Color::new("D", moved(&[a(0, 1)]), phi)])
}

/// G2 modulo SL3: the G2-combination spherical root.
pub fn g2_sl3() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::G2], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[0, 1])];
    let phi = coroot_values(&system, &rows, a(0, 2));
    build(group, rows, vec![int_vec(&[0, 1])], vec![Color::new("D", moved(&[a(0, 2)]), phi)])
}

/// SL2 times a central torus with the pair of colors separated by a central
/// character: an undistinguished simple spherical root and a lineality line.
pub fn a1_torus_line() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 1).unwrap();
    let rows = vec![int_vec(&[2, 0]), int_vec(&[0, 1])];
    build(
        group,
        rows,
        vec![int_vec(&[2, 0])],
        vec![
            Color::new("Dp", moved(&[a(0, 1)]), vec![rat(1, 1), rat(1, 1)]),
            Color::new("Dm", moved(&[a(0, 1)]), vec![rat(1, 1), rat(-1, 1)]),
        ],
    )
}

/// Product of SL2/T and SL2/U: distinguished pair on the first factor, a
/// full-coroot color on the second.
pub fn a1xa1_mixed() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1), SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0]), int_vec(&[0, 1])];
    let phi_pair = half(coroot_values(&system, &rows, a(0, 1)));
    let phi_d = coroot_values(&system, &rows, a(1, 1));
    build(
        group,
        rows,
        vec![int_vec(&[2, 0])],
        vec![
            Color::new("Dp", moved(&[a(0, 1)]), phi_pair.clone()),
            Color::new("Dm", moved(&[a(0, 1)]), phi_pair),
            Color::new("D3", moved(&[a(1, 1)]), phi_d),
        ],
    )
}

/// Like [`a1xa1_mixed`], but the pair functionals differ off the spherical
/// root, so the simple spherical root is not distinguished and its doubled
/// image stays itself.
pub fn a1xa1_skew() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1), SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0]), int_vec(&[0, 1])];
    let phi_d = coroot_values(&system, &rows, a(1, 1));
    build(
        group,
        rows,
        vec![int_vec(&[2, 0])],
        vec![
            Color::new("Dp", moved(&[a(0, 1)]), vec![rat(1, 1), rat(1, 1)]),
            Color::new("Dm", moved(&[a(0, 1)]), vec![rat(1, 1), rat(-1, 1)]),
            Color::new("D3", moved(&[a(1, 1)]), phi_d),
        ],
    )
}

/// Sp4 modulo Sp2 x Sp2: the chain root sits inside a C2 component.
pub fn sp4_sp2sp2() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::C(2)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[0, 1])];
    let phi = coroot_values(&system, &rows, a(0, 2));
    build(group, rows, vec![int_vec(&[0, 1])], vec![Color::new("D", moved(&[a(0, 2)]), phi)])
}

/// An F4 datum whose spherical root is the B3-chain sum with colorless tail.
pub fn f4_chain() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::F4], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let sigma = int_vec(&[1, 0, 0, -1]);
    let rows = vec![sigma.clone()];
    let phi1 = coroot_values(&system, &rows, a(0, 1));
    let phi4 = coroot_values(&system, &rows, a(0, 4));
    build(
        group,
        rows,
        vec![sigma],
        vec![
            Color::new("D1", moved(&[a(0, 1)]), phi1),
            Color::new("D4", moved(&[a(0, 4)]), phi4),
        ],
    )
}

/// The seven-sphere SO8/SO7: the spherical root is a fundamental weight and
/// lies outside the root lattice.
pub fn so8_so7() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::D(4)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[1, 0, 0, 0])];
    let phi = coroot_values(&system, &rows, a(0, 1));
    build(
        group,
        rows,
        vec![int_vec(&[1, 0, 0, 0])],
        vec![Color::new("D", moved(&[a(0, 1)]), phi)],
    )
}

/// (SL2/T) x (SL2/T): two distinguished pairs; the quotient lattice of its
/// doubled roots is (Z/2)^2, giving every merge pattern.
pub fn rank2_doubled() -> SphericalDatum {
    let group = ReductiveGroupData::new(vec![SimpleType::A(1), SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0]), int_vec(&[0, 2])];
    let phi1 = half(coroot_values(&system, &rows, a(0, 1)));
    let phi2 = half(coroot_values(&system, &rows, a(1, 1)));
    build(
        group,
        rows,
        vec![int_vec(&[2, 0]), int_vec(&[0, 2])],
        vec![
            Color::new("D1p", moved(&[a(0, 1)]), phi1.clone()),
            Color::new("D1m", moved(&[a(0, 1)]), phi1),
            Color::new("D2p", moved(&[a(1, 1)]), phi2.clone()),
            Color::new("D2m", moved(&[a(1, 1)]), phi2),
        ],
    )
}

/// (SL3/SO3) x (SL2/T): doubled roots on the first factor and a
/// distinguished pair on the second; the automorphism group is Z/6.
pub fn a2xa1_product() -> SphericalDatum {
    let group =
        ReductiveGroupData::new(vec![SimpleType::A(2), SimpleType::A(1)], 0).unwrap();
    let system = RootSystem::new(group.clone()).unwrap();
    let rows = vec![int_vec(&[2, 0, 0]), int_vec(&[0, 2, 0]), int_vec(&[0, 0, 2])];
    let phi1 = half(coroot_values(&system, &rows, a(0, 1)));
    let phi2 = half(coroot_values(&system, &rows, a(0, 2)));
    let phi3 = half(coroot_values(&system, &rows, a(1, 1)));
    build(
        group,
        rows,
        vec![int_vec(&[4, -2, 0]), int_vec(&[-2, 4, 0]), int_vec(&[0, 0, 2])],
        vec![
            Color::new("D1", moved(&[a(0, 1)]), phi1),
            Color::new("D2", moved(&[a(0, 2)]), phi2),
            Color::new("Dp", moved(&[a(1, 1)]), phi3.clone()),
            Color::new("Dm", moved(&[a(1, 1)]), phi3),
        ],
    )
}

/// The whole corpus with stable names.
pub fn corpus() -> Vec<(&'static str, SphericalDatum)> {
    vec![
        ("sl2_torus", sl2_torus()),
        ("sl2_unipotent", sl2_unipotent()),
        ("sl2_normalizer", sl2_normalizer()),
        ("a1xa1_left", a1xa1_left()),
        ("sl3_so3", sl3_so3()),
        ("so5_so4", so5_so4()),
        ("g2_sl3", g2_sl3()),
        ("a1_torus_line", a1_torus_line()),
        ("a1xa1_mixed", a1xa1_mixed()),
        ("a1xa1_skew", a1xa1_skew()),
        ("sp4_sp2sp2", sp4_sp2sp2()),
        ("f4_chain", f4_chain()),
        ("so8_so7", so8_so7()),
        ("rank2_doubled", rank2_doubled()),
        ("a2xa1_product", a2xa1_product()),
    ]
}
