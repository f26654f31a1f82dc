//! Datum-level behavior: validation cases, root types, distinguished roots,
//! doubled root lattices, automorphism structures, wonderful criteria,
//! dimensions, localization, and quotients, pinned on the fixture corpus.

use std::collections::BTreeSet;

use sphera_core::datum::{
    AxiomTag, Color, DatumError, RootType, SphericalDatum, ValidateOptions,
};
use sphera_core::equiv;
use sphera_core::fixtures;
use sphera_core::lattice::IntegerLattice;
use sphera_core::linalg::{int, int_vec, rat};
use sphera_core::rootsys::{ReductiveGroupData, RootId, SimpleType};

fn a(c: usize, i: usize) -> RootId {
    RootId::new(c, i)
}

#[test]
fn corpus_validates_clean() {
    for (name, d) in fixtures::corpus() {
        let report = d.validate(ValidateOptions::default());
        assert!(report.is_valid(), "{name}: {report}");
    }
}

#[test]
fn corpus_passes_quasiaffine_check() {
    for (name, d) in fixtures::corpus() {
        let report = d.validate(ValidateOptions { quasiaffine: true });
        assert!(report.is_valid(), "{name}: {report}");
    }
}

#[test]
fn pair_functionals_must_stay_bounded() {
    // Shifting the pair (1/2, 1/2) to (0, 2) keeps the sum but breaks the
    // bound on the spherical root itself.
    let d = fixtures::sl2_torus();
    let broken = SphericalDatum::new(
        d.group().clone(),
        d.weight_lattice().basis_rows(),
        d.spherical_roots().to_vec(),
        vec![
            Color::new("Dp", d.colors()[0].moved_by.clone(), vec![rat(0, 1)]),
            Color::new("Dm", d.colors()[1].moved_by.clone(), vec![rat(2, 1)]),
        ],
    )
    .unwrap();
    let report = broken.validate(ValidateOptions::default());
    assert!(report.has_tag(AxiomTag::V4), "{report}");
}

#[test]
fn colorless_root_needs_orthogonal_lattice() {
    // A1 with lattice spanned by the fundamental weight and no colors.
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 0).unwrap();
    let d = SphericalDatum::new(group, vec![int_vec(&[1])], vec![], vec![]).unwrap();
    let report = d.validate(ValidateOptions::default());
    assert!(report.has_tag(AxiomTag::V3), "{report}");
}

#[test]
fn classification_matches_fixtures() {
    let types = |d: &SphericalDatum| -> Vec<(RootId, RootType)> {
        d.classify_simple_roots().into_iter().map(|e| (e.root, e.root_type)).collect()
    };
    assert_eq!(types(&fixtures::sl2_torus()), vec![(a(0, 1), RootType::B)]);
    assert_eq!(types(&fixtures::sl2_normalizer()), vec![(a(0, 1), RootType::C)]);
    assert_eq!(types(&fixtures::sl2_unipotent()), vec![(a(0, 1), RootType::D)]);
    assert_eq!(
        types(&fixtures::a1xa1_left()),
        vec![(a(0, 1), RootType::B), (a(1, 1), RootType::A)]
    );
    assert_eq!(
        types(&fixtures::so5_so4()),
        vec![(a(0, 1), RootType::D), (a(0, 2), RootType::A)]
    );
    assert_eq!(
        types(&fixtures::sl3_so3()),
        vec![(a(0, 1), RootType::C), (a(0, 2), RootType::C)]
    );
    assert_eq!(
        types(&fixtures::f4_chain()),
        vec![
            (a(0, 1), RootType::D),
            (a(0, 2), RootType::A),
            (a(0, 3), RootType::A),
            (a(0, 4), RootType::D)
        ]
    );
    // Witnesses on a pair case.
    let entry = &fixtures::sl2_torus().classify_simple_roots()[0];
    assert_eq!(entry.witnesses, vec!["Dp".to_string(), "Dm".to_string()]);
}

#[test]
fn distinguished_roots_all_three_kinds() {
    let d = fixtures::sl2_torus();
    let report = d.distinguished_roots();
    assert_eq!(report.of_kind(1), vec![&int_vec(&[2])]);
    assert_eq!(report.tilde_of(&int_vec(&[2])), Some(a(0, 1)));

    let d = fixtures::so5_so4();
    let report = d.distinguished_roots();
    assert_eq!(report.of_kind(2), vec![&int_vec(&[1, 0])]);
    assert_eq!(report.tilde_of(&int_vec(&[1, 0])), Some(a(0, 1)));

    let d = fixtures::sp4_sp2sp2();
    let report = d.distinguished_roots();
    assert_eq!(report.of_kind(2), vec![&int_vec(&[0, 1])]);
    // Inside C2 the chain is ordered (long, short), so the contraction is a2.
    assert_eq!(report.tilde_of(&int_vec(&[0, 1])), Some(a(0, 2)));

    let d = fixtures::f4_chain();
    let report = d.distinguished_roots();
    assert_eq!(report.of_kind(2), vec![&int_vec(&[1, 0, 0, -1])]);
    assert_eq!(report.tilde_of(&int_vec(&[1, 0, 0, -1])), Some(a(0, 1)));

    let d = fixtures::g2_sl3();
    let report = d.distinguished_roots();
    assert_eq!(report.of_kind(3), vec![&int_vec(&[0, 1])]);
    assert_eq!(report.tilde_of(&int_vec(&[0, 1])), Some(a(0, 2)));

    // Pairs separated by a central character are not distinguished.
    assert!(fixtures::a1_torus_line().distinguished_roots().entries.is_empty());
    assert!(fixtures::a1xa1_skew().distinguished_roots().entries.is_empty());
    // Doubled roots are not distinguished either.
    assert!(fixtures::sl3_so3().distinguished_roots().entries.is_empty());
    assert!(fixtures::so8_so7().distinguished_roots().entries.is_empty());
}

#[test]
fn doubled_root_lattice_cases() {
    // Distinguished simple root doubles.
    let d = fixtures::sl2_torus();
    let (doubled, lattice) = d.doubled_root_lattice().unwrap();
    assert_eq!(doubled, vec![int_vec(&[4])]);
    assert_eq!(lattice, IntegerLattice::from_rows(1, &[int_vec(&[4])]));

    // In the root lattice, not distinguished: stays itself.
    let d = fixtures::a1xa1_skew();
    let (doubled, _) = d.doubled_root_lattice().unwrap();
    assert_eq!(doubled, vec![int_vec(&[2, 0])]);

    // Outside the root lattice: doubles even though not distinguished.
    let d = fixtures::so8_so7();
    let (doubled, _) = d.doubled_root_lattice().unwrap();
    assert_eq!(doubled, vec![int_vec(&[2, 0, 0, 0])]);

    // Both already in the root lattice and undistinguished: unchanged.
    let d = fixtures::sl3_so3();
    let (doubled, lattice) = d.doubled_root_lattice().unwrap();
    assert_eq!(doubled, d.spherical_roots().to_vec());
    assert_eq!(lattice, IntegerLattice::from_rows(2, d.spherical_roots()));
}

#[test]
fn doubled_root_lattice_structural_laws() {
    for (name, d) in fixtures::corpus() {
        let (doubled, lattice) = d.doubled_root_lattice().unwrap();
        let plus = d.distinguished_roots().plus_set();
        assert!(
            plus.iter().all(|s| d.spherical_roots().contains(s)),
            "{name}: distinguished set inside the spherical roots"
        );
        for (sigma, bar) in d.spherical_roots().iter().zip(&doubled) {
            let twice: Vec<_> = sigma.iter().map(|x| x * int(2)).collect();
            assert!(bar == sigma || *bar == twice, "{name}: doubled element is sigma or 2 sigma");
        }
        assert!(
            d.weight_lattice().contains_lattice(&lattice),
            "{name}: doubled lattice inside the weight lattice"
        );
        let span = IntegerLattice::from_rows(d.system().rank(), d.spherical_roots());
        assert_eq!(lattice.rank(), span.rank(), "{name}: ranks agree");
    }
}

#[test]
fn automorphism_structures() {
    let auto = fixtures::sl2_torus().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(2)]));
    let auto = fixtures::sl3_so3().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(3)]));
    let auto = fixtures::sl2_unipotent().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (1, vec![]));
    let auto = fixtures::a1_torus_line().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (1, vec![]));
    let auto = fixtures::so5_so4().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(2)]));
    let auto = fixtures::g2_sl3().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(2)]));
    let auto = fixtures::rank2_doubled().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(2), int(2)]));
    // The trivial case: spherical roots spanning the lattice with nothing doubled.
    let auto = fixtures::a1xa1_skew().automorphism_structure().unwrap();
    assert_eq!(auto.torus_rank, 1);
    // Product factors multiply: Z/3 from the doubled A2 part, Z/2 from the pair.
    let auto = fixtures::a2xa1_product().automorphism_structure().unwrap();
    assert_eq!((auto.torus_rank, auto.finite_factors), (0, vec![int(6)]));
}

#[test]
fn lineality_consistency_across_corpus() {
    for (name, d) in fixtures::corpus() {
        let (_, doubled) = d.doubled_root_lattice().unwrap();
        let free = d.weight_lattice().rank() - doubled.rank();
        let lineality = d.valuation_cone().unwrap().lineality_dim();
        assert_eq!(free, lineality, "{name}");
        // automorphism_structure performs the same check internally.
        assert!(d.automorphism_structure().is_ok(), "{name}");
    }
}

#[test]
fn valuation_cone_walls_recover_spherical_roots() {
    for (name, d) in fixtures::corpus() {
        let cone = d.valuation_cone().unwrap();
        let mut walls = cone.spherical_roots_of(d.weight_lattice()).unwrap();
        let mut expected = d.spherical_roots().to_vec();
        walls.sort();
        expected.sort();
        assert_eq!(walls, expected, "{name}");
    }
}

#[test]
fn wonderful_criterion() {
    assert!(fixtures::sl2_torus().is_wonderful());
    assert!(fixtures::sl2_normalizer().is_wonderful());
    assert!(fixtures::so5_so4().is_wonderful());
    assert!(!fixtures::a1_torus_line().is_wonderful());
    assert!(!fixtures::sl3_so3().is_wonderful());
    assert!(!fixtures::sl2_unipotent().is_wonderful());
}

#[test]
fn weight_monoid_membership() {
    let d = fixtures::sl2_torus();
    assert!(d.weight_monoid_contains(&int_vec(&[0])).unwrap());
    assert!(d.weight_monoid_contains(&int_vec(&[2])).unwrap());
    assert!(!d.weight_monoid_contains(&int_vec(&[-2])).unwrap());
    assert_eq!(
        d.weight_monoid_contains(&int_vec(&[1])),
        Err(DatumError::NotInWeightLattice)
    );
}

#[test]
fn dimension_formula() {
    assert_eq!(fixtures::sl2_torus().dimension().unwrap(), 2);
    assert_eq!(fixtures::sl2_unipotent().dimension().unwrap(), 2);
    assert_eq!(fixtures::a1xa1_left().dimension().unwrap(), 2);
    assert_eq!(fixtures::a1xa1_mixed().dimension().unwrap(), 4);
    assert_eq!(fixtures::so5_so4().dimension().unwrap(), 4);
    assert_eq!(fixtures::g2_sl3().dimension().unwrap(), 6);
    assert_eq!(fixtures::so8_so7().dimension().unwrap(), 7);
    assert_eq!(fixtures::sp4_sp2sp2().dimension().unwrap(), 4);
    // A torus fixture: dimension equals the lattice rank.
    let torus = SphericalDatum::new(
        ReductiveGroupData::torus(3),
        vec![int_vec(&[1, 0, 0]), int_vec(&[0, 2, 0])],
        vec![],
        vec![],
    )
    .unwrap();
    assert_eq!(torus.dimension().unwrap(), 2);
}

#[test]
fn localize_keeps_and_drops() {
    let d = fixtures::a1xa1_mixed();
    // Keep the first factor: the spherical root and its pair survive.
    let s: BTreeSet<RootId> = [a(0, 1)].into_iter().collect();
    let loc = d.localize(&s).unwrap();
    assert_eq!(loc.datum.spherical_roots().len(), 1);
    assert_eq!(loc.datum.colors().len(), 2);
    assert!(loc.datum.is_valid());
    assert_eq!(loc.datum.group().components, vec![SimpleType::A(1)]);
    assert_eq!(loc.datum.group().torus_rank, 1);
    // The lattice is carried over isomorphically.
    assert_eq!(loc.datum.weight_lattice().rank(), d.weight_lattice().rank());
    let mapped_root = loc.map_character(&d.spherical_roots()[0]);
    assert_eq!(loc.datum.spherical_roots()[0], mapped_root);

    // Keep the second factor: no spherical roots, only the full-coroot color.
    let s: BTreeSet<RootId> = [a(1, 1)].into_iter().collect();
    let loc = d.localize(&s).unwrap();
    assert!(loc.datum.spherical_roots().is_empty());
    assert_eq!(loc.datum.colors().len(), 1);
    assert_eq!(loc.datum.colors()[0].label, "D3");

    // Empty subset: a torus datum with the lattice intact.
    let loc = d.localize(&BTreeSet::new()).unwrap();
    assert!(loc.datum.group().components.is_empty());
    assert_eq!(loc.datum.group().torus_rank, 2);
    assert!(loc.datum.colors().is_empty());
}

#[test]
fn localize_chain_drop() {
    // The chain root of the B2 fixture vanishes under localization at a1
    // even though its contraction survives: it leaves the rational span.
    let d = fixtures::so5_so4();
    let s: BTreeSet<RootId> = [a(0, 1)].into_iter().collect();
    let loc = d.localize(&s).unwrap();
    assert!(loc.datum.spherical_roots().is_empty());
    assert_eq!(loc.datum.colors().len(), 1);
    assert!(loc.datum.is_valid());
}

#[test]
fn localization_law_for_distinguished_roots() {
    // Distinguished roots of the localized datum are exactly those whose
    // contraction lies in the subset and which stay in its rational span.
    for (name, d) in fixtures::corpus() {
        let all_roots = d.system().root_ids();
        let n = all_roots.len();
        for mask in 0u32..(1u32 << n) {
            let subset: BTreeSet<RootId> = all_roots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, id)| *id)
                .collect();
            let loc = d
                .localize(&subset)
                .unwrap_or_else(|e| panic!("{name}: localize {subset:?} failed: {e}"));
            let got = loc.datum.distinguished_roots();
            let original = d.distinguished_roots();
            for kind in 1..=3u8 {
                let mut expected: Vec<Vec<sphera_core::Int>> = Vec::new();
                for entry in original.entries.iter().filter(|e| e.kind == kind) {
                    let in_span = d.system().in_root_span_of(&subset, &entry.root).unwrap();
                    if subset.contains(&entry.tilde) && in_span {
                        expected.push(loc.map_character(&entry.root));
                    }
                }
                expected.sort();
                let mut actual: Vec<Vec<sphera_core::Int>> =
                    got.of_kind(kind).into_iter().cloned().collect();
                actual.sort();
                assert_eq!(actual, expected, "{name}, subset {subset:?}, kind {kind}");
            }
        }
    }
}

#[test]
fn quotient_reaches_the_normalizer_datum() {
    let d = fixtures::sl2_torus();
    let sub = IntegerLattice::from_rows(1, &[int_vec(&[4])]);
    let q = d.quotient_finite(&sub).unwrap();
    assert!(q.is_valid());
    assert_eq!(q.spherical_roots(), &[int_vec(&[4])]);
    assert_eq!(q.colors().len(), 1, "pair merges under the even-order quotient");
    assert_eq!(
        q.classify_simple_roots()[0].root_type,
        RootType::C
    );
    // Same invariants as the normalizer fixture (labels erased).
    assert_eq!(equiv::canonical_form(&q), equiv::canonical_form(&fixtures::sl2_normalizer()));
    // The functional is half the coroot: value 2 on the doubled root.
    assert_eq!(q.pair_color(0, &int_vec(&[4])).unwrap(), rat(2, 1));
}

#[test]
fn quotient_identity_and_errors() {
    let d = fixtures::sl2_torus();
    let q = d.quotient_finite(d.weight_lattice()).unwrap();
    assert_eq!(equiv::canonical_form(&q), equiv::canonical_form(&d));
    // Sublattice not containing the doubled root lattice is rejected.
    let bad = IntegerLattice::from_rows(1, &[int_vec(&[6])]);
    assert!(matches!(
        d.quotient_finite(&bad),
        Err(DatumError::InvalidSublattice(_))
    ));
    // Infinite index is rejected.
    let d2 = fixtures::a1_torus_line();
    let thin = IntegerLattice::from_rows(2, &[int_vec(&[2, 0])]);
    assert!(matches!(
        d2.quotient_finite(&thin),
        Err(DatumError::InvalidSublattice(_))
    ));
}

#[test]
fn odd_index_quotient_merges_nothing() {
    let d = fixtures::sl3_so3();
    let (_, doubled) = d.doubled_root_lattice().unwrap();
    let q = d.quotient_finite(&doubled).unwrap();
    assert_eq!(q.colors().len(), d.colors().len());
    assert!(q.is_valid());
    assert!(q.is_wonderful());
}

#[test]
fn quotient_preserves_doubled_root_lattice() {
    // The doubled root lattice is unchanged by finite quotients.
    let cases: Vec<(&str, SphericalDatum, IntegerLattice)> = vec![
        (
            "sl2_torus",
            fixtures::sl2_torus(),
            IntegerLattice::from_rows(1, &[int_vec(&[4])]),
        ),
        (
            "rank2_doubled full",
            fixtures::rank2_doubled(),
            IntegerLattice::from_rows(2, &[int_vec(&[4, 0]), int_vec(&[0, 4])]),
        ),
        (
            "rank2_doubled diagonal",
            fixtures::rank2_doubled(),
            IntegerLattice::from_rows(2, &[int_vec(&[2, 2]), int_vec(&[4, 0])]),
        ),
        (
            "sl3_so3",
            fixtures::sl3_so3(),
            fixtures::sl3_so3().doubled_root_lattice().unwrap().1,
        ),
    ];
    for (name, d, sub) in cases {
        let before = d.doubled_root_lattice().unwrap().1;
        let q = d.quotient_finite(&sub).unwrap();
        let after = q.doubled_root_lattice().unwrap().1;
        assert_eq!(before, after, "{name}");
    }
}

#[test]
fn mixed_merge_pattern_on_the_doubled_fixture() {
    let d = fixtures::rank2_doubled();
    // Halving only the first factor merges only the first pair.
    let sub = IntegerLattice::from_rows(2, &[int_vec(&[4, 0]), int_vec(&[0, 2])]);
    let q = d.quotient_finite(&sub).unwrap();
    assert_eq!(q.colors().len(), 3);
    assert!(q.is_valid());
    // The diagonal sublattice merges both pairs.
    let sub = IntegerLattice::from_rows(2, &[int_vec(&[2, 2]), int_vec(&[4, 0])]);
    let q = d.quotient_finite(&sub).unwrap();
    assert_eq!(q.colors().len(), 2);
    let types: Vec<RootType> =
        q.classify_simple_roots().into_iter().map(|e| e.root_type).collect();
    assert_eq!(types, vec![RootType::C, RootType::C]);
}

#[test]
fn wonderfulization_cases() {
    // Already wonderful: identity.
    let d = fixtures::sl2_torus();
    let w = d.wonderfulization().unwrap();
    assert_eq!(equiv::canonical_form(&w), equiv::canonical_form(&d));
    // Rank drop: the central line disappears and the pair survives with its
    // functionals restricted (the acting group is unchanged).
    let d = fixtures::a1_torus_line();
    let w = d.wonderfulization().unwrap();
    assert!(w.is_wonderful());
    assert_eq!(w.weight_lattice().rank(), 1);
    assert_eq!(w.weight_lattice().basis_rows(), vec![int_vec(&[2, 0])]);
    assert_eq!(w.colors().len(), 2);
    assert_eq!(w.pair_color(0, &int_vec(&[2, 0])).unwrap(), rat(1, 1));
    assert_eq!(w.pair_color(1, &int_vec(&[2, 0])).unwrap(), rat(1, 1));
    assert_eq!(w.spherical_roots(), &[int_vec(&[2, 0])]);
    // Finite index: the odd quotient of the doubled-root fixture.
    let d = fixtures::sl3_so3();
    let w = d.wonderfulization().unwrap();
    assert!(w.is_wonderful());
    assert_eq!(w.colors().len(), 2);
    // Composing through the normalizer quotient stays the identity there.
    let d = fixtures::sl2_torus();
    let q = d.quotient_finite(&IntegerLattice::from_rows(1, &[int_vec(&[4])])).unwrap();
    let wq = q.wonderfulization().unwrap();
    assert_eq!(equiv::canonical_form(&wq), equiv::canonical_form(&q));
}

#[test]
fn transforms_preserve_validity() {
    for (name, d) in fixtures::corpus() {
        let w = d.wonderfulization().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(w.is_valid(), "{name}: wonderfulization validity");
        assert!(w.is_wonderful(), "{name}: wonderfulization result is wonderful");
    }
}

#[test]
fn forced_half_coroot_at_rank_one_support() {
    // With the lattice generated by the simple spherical root itself, the
    // bound and the sum rule force both functionals to half the coroot.
    let group = ReductiveGroupData::new(vec![SimpleType::A(1)], 0).unwrap();
    let make = |p: i64, q: i64| {
        SphericalDatum::new(
            group.clone(),
            vec![int_vec(&[2])],
            vec![int_vec(&[2])],
            vec![
                Color::new("Dp", [a(0, 1)].into_iter().collect(), vec![rat(p, q)]),
                Color::new("Dm", [a(0, 1)].into_iter().collect(), vec![rat(2, 1) - rat(p, q)]),
            ],
        )
        .unwrap()
    };
    assert!(make(1, 1).is_valid());
    for (p, q) in [(0, 1), (2, 1), (3, 2), (1, 2), (-1, 1)] {
        assert!(!make(p, q).is_valid(), "phi = {p}/{q} must be rejected");
    }
}

#[test]
fn localization_embedding_carries_pairings() {
    // Localizing at the second root of the doubled-root fixture group uses a
    // genuinely non-permutation character embedding; pairings with the kept
    // coroot must be preserved and the lattice transported isomorphically.
    let d = fixtures::sl3_so3();
    let s: BTreeSet<RootId> = [a(0, 2)].into_iter().collect();
    let loc = d.localize(&s).unwrap();
    assert_eq!(loc.datum.group().components, vec![SimpleType::A(1)]);
    assert_eq!(loc.datum.group().torus_rank, 1);
    let new_root = loc.root_map[&a(0, 2)];
    for row in d.weight_lattice().basis_rows() {
        let before = d.system().pair_coroot(&row, a(0, 2)).unwrap();
        let mapped = loc.map_character(&row);
        let after = loc.datum.system().pair_coroot(&mapped, new_root).unwrap();
        assert_eq!(before, after);
    }
    assert_eq!(loc.datum.weight_lattice().rank(), d.weight_lattice().rank());
    // Spherical roots cut to the span of the kept root: only 2*a2 survives.
    assert_eq!(loc.datum.spherical_roots().len(), 1);
    assert_eq!(
        loc.datum.spherical_roots()[0],
        loc.map_character(&int_vec(&[-2, 4]))
    );
    // Its color survives with the doubled-root value intact:
    // the functional is half the coroot, worth 2 on the doubled root.
    assert_eq!(loc.datum.colors().len(), 1);
    assert_eq!(loc.datum.colors()[0].label, "D2");
    let sigma = loc.map_character(&int_vec(&[-2, 4]));
    assert_eq!(d.pair_color(1, &int_vec(&[-2, 4])).unwrap(), rat(2, 1));
    assert_eq!(loc.datum.pair_color(0, &sigma).unwrap(), rat(2, 1));
}
