//! Independent oracles for the double-description kernel.
//!
//! Facets of simplicial cones are recomputed by brute-force subset search;
//! subspace intersections and projections are cross-checked for membership
//! consistency on grids of rational directions and by pulling facet normals
//! back along the maps.

use num_traits::{Signed, Zero};

use sphera_core::linalg::{
    self, dot_rat_int, int, int_rows_rank, rat, rat_from_int, to_rat_vec, Int, Rat, RatMat,
    Subspace,
};
use sphera_core::Cone;

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

/// Kernel vector of a (d-1) x d rational matrix of full row rank.
fn hyperplane_normal(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let d = rows.first()?.len();
    let mut m = RatMat::zero(rows.len(), d);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            *m.at_mut(i, j) = x.clone();
        }
    }
    let pivots = linalg::rref(&mut m);
    if pivots.len() != d - 1 {
        return None;
    }
    let free = (0..d).find(|j| !pivots.contains(j))?;
    let mut n = vec![Rat::zero(); d];
    n[free] = rat(1, 1);
    for (row, &col) in pivots.iter().enumerate() {
        n[col] = -m.at(row, free).clone();
    }
    Some(n)
}

/// Facet normals of a simplicial cone by subset search: each (d-1)-subset of
/// the generators spans a candidate wall; it is a facet when the remaining
/// generator lies strictly on one side, and the normal is oriented
/// nonpositive on the cone.
fn simplicial_facets_by_subsets(gens: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let d = gens.len();
    let mut out = Vec::new();
    for skip in 0..d {
        let subset: Vec<Vec<Rat>> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, g)| to_rat_vec(g))
            .collect();
        let normal = hyperplane_normal(&subset).expect("independent generators");
        let normal = linalg::primitive_ray(&normal);
        let value = dot_rat_int(&to_rat_vec(&normal), &gens[skip]);
        assert!(!value.is_zero(), "generator off its opposite wall");
        let oriented = if value.is_positive() {
            normal.iter().map(|x| -x.clone()).collect()
        } else {
            normal
        };
        out.push(oriented);
    }
    out.sort();
    out
}

#[test]
fn simplicial_facets_match_subset_search() {
    let mut rng = Rng(0x51ed_c0e5);
    let mut done = 0;
    while done < 200 {
        let dim = 2 + (rng.next() % 4) as usize; // 2..=5
        let gens: Vec<Vec<Int>> = (0..dim)
            .map(|_| (0..dim).map(|_| int(rng.range(-4, 4))).collect())
            .collect();
        if int_rows_rank(&gens) != dim {
            continue;
        }
        done += 1;
        let cone = Cone::from_generators(
            dim,
            &gens.iter().map(|g| to_rat_vec(g)).collect::<Vec<_>>(),
        )
        .unwrap();
        let mut got = cone.facet_normals().to_vec();
        got.sort();
        assert_eq!(got, simplicial_facets_by_subsets(&gens), "generators {gens:?}");
        assert!(cone.span_equations().is_empty());
        assert_eq!(cone.rays().len(), dim);
        assert_eq!(cone.lineality_dim(), 0);
    }
}

fn grid_directions(dim: usize, step: i64) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    let mut point = vec![-step; dim];
    loop {
        if point.iter().any(|&x| x != 0) {
            out.push(point.iter().map(|&x| rat(x, 1)).collect());
        }
        let mut i = 0;
        loop {
            if i == dim {
                return out;
            }
            point[i] += 1;
            if point[i] <= step {
                break;
            }
            point[i] = -step;
            i += 1;
        }
    }
}

#[test]
fn subspace_intersection_membership_grid() {
    let mut rng = Rng(0x5eed_0c0e);
    for _ in 0..40 {
        let dim = 3 + (rng.next() % 2) as usize; // 3..=4
        let count = 2 + (rng.next() % 3) as usize;
        let gens: Vec<Vec<Rat>> = (0..count)
            .map(|_| (0..dim).map(|_| rat(rng.range(-3, 3), 1)).collect())
            .collect();
        let cone = Cone::from_generators(dim, &gens).unwrap();
        let span_rows: Vec<Vec<Rat>> = (0..2)
            .map(|_| (0..dim).map(|_| rat(rng.range(-2, 2), 1)).collect())
            .collect();
        let subspace = Subspace::span(dim, &span_rows).unwrap();
        let trace = cone.intersect_with_subspace(&subspace).unwrap();
        // Membership consistency over a grid of the subspace's coordinates.
        for coords in grid_directions(subspace.dim(), 2) {
            let mut ambient = vec![Rat::zero(); dim];
            for (c, row) in coords.iter().zip(subspace.basis_rows()) {
                for (a, r) in ambient.iter_mut().zip(&row) {
                    *a += c.clone() * rat_from_int(r);
                }
            }
            assert_eq!(
                trace.contains(&coords),
                cone.contains(&ambient),
                "direction {coords:?} of subspace {span_rows:?}"
            );
        }
    }
}

#[test]
fn projection_membership_and_pullback_grid() {
    let mut rng = Rng(0xfeed_0c0e);
    for _ in 0..40 {
        let dim = 3 + (rng.next() % 2) as usize; // 3..=4
        let count = 2 + (rng.next() % 3) as usize;
        let gens: Vec<Vec<Rat>> = (0..count)
            .map(|_| (0..dim).map(|_| rat(rng.range(-3, 3), 1)).collect())
            .collect();
        let cone = Cone::from_generators(dim, &gens).unwrap();
        let target = 1 + (rng.next() % 2) as usize; // 1..=2
        let map: Vec<Vec<Rat>> = (0..target)
            .map(|_| (0..dim).map(|_| rat(rng.range(-2, 2), 1)).collect())
            .collect();
        let image = cone.project(&map).unwrap();
        // Images of cone points land in the image cone.
        for direction in grid_directions(dim, 1) {
            if !cone.contains(&direction) {
                continue;
            }
            let mapped: Vec<Rat> = map
                .iter()
                .map(|row| linalg::dot_rat(row, &direction))
                .collect();
            assert!(image.contains(&mapped), "image of {direction:?}");
        }
        // Pulled-back facet normals and span equations are valid on the cone.
        for normal in image.facet_normals() {
            for g in cone.generators() {
                let mapped: Vec<Rat> =
                    map.iter().map(|row| dot_rat_int(row, &g)).collect();
                let value = dot_rat_int(&mapped, normal);
                assert!(!value.is_positive(), "pullback of {normal:?} on {g:?}");
            }
        }
        for equation in image.span_equations() {
            for g in cone.generators() {
                let mapped: Vec<Rat> =
                    map.iter().map(|row| dot_rat_int(row, &g)).collect();
                assert!(dot_rat_int(&mapped, equation).is_zero());
            }
        }
    }
}
