//! Exact integer and rational linear algebra.
//!
//! Dense matrices over [`Int`] and [`Rat`], row-style Hermite and Smith normal
//! forms with unimodular transforms, integer kernels, and canonical rational
//! subspaces. Everything downstream (lattices, cones, data) is built on top of
//! this module; no floating point exists anywhere in the crate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer scalar.
pub type Int = BigInt;
/// Arbitrary-precision rational scalar.
pub type Rat = Ratio<Int>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Ratio::new(int(p), int(q))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Ratio::from_integer(v.clone())
}

pub fn int_to_i64(x: &Int) -> Option<i64> {
    use num_traits::ToPrimitive;
    x.to_i64()
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: Int = p.parse().ok()?;
    let q: Int = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Ratio::new(p, q))
}

/// Formats a rational as "p" or "p/q" with positive denominator.
pub fn format_rat(r: &Rat) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn is_zero_int(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn is_zero_rat(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Pairing of a rational functional with an integer vector.
pub fn dot_rat_int(a: &[Rat], b: &[Int]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * rat_from_int(y)).sum()
}

pub fn add_scaled_int(target: &mut [Int], source: &[Int], factor: &Int) {
    for (t, s) in target.iter_mut().zip(source) {
        *t += s * factor;
    }
}

pub fn neg_int(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_from_int).collect()
}

/// Divides by the gcd of the entries; sign is preserved. Zero stays zero.
pub fn primitive_part(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators: the unique primitive integer vector pointing the same
/// way as `v` (positive rescaling only).
pub fn primitive_ray(v: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive_part(&ints)
}

/// Primitive representative of the line through `v` with lexicographically
/// positive leading entry. Used for sign-ambiguous generators only.
pub fn canonical_line(v: &[Int]) -> Vec<Int> {
    let p = primitive_part(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg_int(&p),
        _ => p,
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix. Row vectors throughout: a lattice is the span of
/// the rows, and `x * M` is the action on row vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Mat<Int>;
pub type RatMat = Mat<Rat>;

impl<T: Clone + Zero> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat { rows: rows.len(), cols, data: rows.concat() }
    }

    /// A matrix with the given number of columns and no rows.
    pub fn empty(cols: usize) -> Self {
        Mat { rows: 0, cols, data: Vec::new() }
    }
}

impl<T> Mat<T> {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.rows_iter().map(|r| r.to_vec()).collect()
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }
}

impl IntMat {
    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.at(k, j);
                    *out.at_mut(i, j) += v;
                }
            }
        }
        out
    }

    pub fn to_rat(&self) -> RatMat {
        let mut out = RatMat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = rat_from_int(self.at(i, j));
            }
        }
        out
    }

    /// Applies the matrix to a row vector: `v * self`.
    pub fn apply_row(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Int::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            add_scaled_int(&mut out, self.row(i), c);
        }
        out
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in self.rows_iter() {
            writeln!(f, "  {:?}", r)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for r in self.rows_iter() {
            let row: Vec<String> = r.iter().map(format_rat).collect();
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form with transform.
///
/// Returns `(h, u, rank)` with `u * m == h`, `u` unimodular, `h` in canonical
/// row echelon form: pivot columns strictly increasing, pivots positive,
/// entries above a pivot reduced into `[0, pivot)`, zero rows at the bottom.
pub fn row_hnf_with_transform(m: &IntMat) -> (IntMat, IntMat, usize) {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.nrows());
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Gcd-reduce the column below row r until a single nonzero entry remains.
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..rows {
                if !h.at(i, col).is_zero() {
                    let better = match pivot {
                        None => true,
                        Some(p) => h.at(i, col).abs() < h.at(p, col).abs(),
                    };
                    if better {
                        pivot = Some(i);
                    }
                }
            }
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h.at(i, col).is_zero() {
                    continue;
                }
                let q = h.at(i, col).div_floor(h.at(r, col));
                if !q.is_zero() {
                    row_sub_scaled(&mut h, i, r, &q);
                    row_sub_scaled(&mut u, i, r, &q);
                }
                if !h.at(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.at(r, col).is_zero() {
            continue;
        }
        if h.at(r, col).is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = h.at(i, col).div_floor(h.at(r, col));
            if !q.is_zero() {
                row_sub_scaled(&mut h, i, r, &q);
                row_sub_scaled(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u, r)
}

fn row_sub_scaled(m: &mut IntMat, target: usize, source: usize, factor: &Int) {
    for j in 0..m.ncols() {
        let v = m.at(source, j) * factor;
        *m.at_mut(target, j) -= v;
    }
}

fn negate_row(m: &mut IntMat, i: usize) {
    for j in 0..m.ncols() {
        let v = -m.at(i, j).clone();
        *m.at_mut(i, j) = v;
    }
}

/// Canonical row Hermite normal form, zero rows dropped.
pub fn hnf(m: &IntMat) -> IntMat {
    let (h, _, rank) = row_hnf_with_transform(m);
    IntMat::from_rows(&h.rows_iter().take(rank).map(|r| r.to_vec()).collect::<Vec<_>>())
        .with_cols(m.ncols())
}

impl IntMat {
    /// Fixes the column count of a possibly row-less matrix.
    fn with_cols(mut self, cols: usize) -> IntMat {
        if self.rows == 0 {
            self.cols = cols;
        }
        self
    }
}

/// Basis (rows) of the left integer kernel `{ x : x * m = 0 }`.
pub fn int_kernel(m: &IntMat) -> IntMat {
    let (_, u, rank) = row_hnf_with_transform(m);
    let rows: Vec<Vec<Int>> = (rank..m.nrows()).map(|i| u.row(i).to_vec()).collect();
    IntMat::from_rows(&rows).with_cols(m.nrows())
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// Smith normal form `left * m * right = d` with `d` diagonal, diagonal
/// entries positive and dividing in chain.
pub struct Snf {
    pub d: IntMat,
    pub left: IntMat,
    pub right: IntMat,
    /// The nonzero diagonal entries `d1 | d2 | ...`.
    pub factors: Vec<Int>,
}

pub fn snf(m: &IntMat) -> Snf {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut left = IntMat::identity(rows);
    let mut right = IntMat::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        'refine: loop {
            // Find the entry of smallest absolute value in the remaining block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d.at(i, j).is_zero() {
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => d.at(i, j).abs() < d.at(pi, pj).abs(),
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'refine };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            col_swap(&mut d, t, pj);
            col_swap(&mut right, t, pj);

            // Clear column t with row operations.
            let mut dirty = false;
            for i in 0..rows {
                if i == t || d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t).div_floor(d.at(t, t));
                if !q.is_zero() {
                    row_sub_scaled(&mut d, i, t, &q);
                    row_sub_scaled(&mut left, i, t, &q);
                }
                if !d.at(i, t).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'refine;
            }
            // Clear row t with column operations.
            for j in 0..cols {
                if j == t || d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j).div_floor(d.at(t, t));
                if !q.is_zero() {
                    col_sub_scaled(&mut d, j, t, &q);
                    col_sub_scaled(&mut right, j, t, &q);
                }
                if !d.at(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'refine;
            }
            // Enforce divisibility of the remaining block by d[t][t].
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        // Fold row i into row t and refine again.
                        for c in 0..cols {
                            let v = d.at(i, c).clone();
                            *d.at_mut(t, c) += v;
                        }
                        for c in 0..rows {
                            let v = left.at(i, c).clone();
                            *left.at_mut(t, c) += v;
                        }
                        continue 'refine;
                    }
                }
            }
            break 'refine;
        }
        if d.at(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut left, t);
        }
    }

    let factors = (0..steps).map(|t| d.at(t, t).clone()).take_while(|x| !x.is_zero()).collect();
    Snf { d, left, right, factors }
}

fn col_swap(m: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let cols = m.ncols();
        m.data.swap(i * cols + a, i * cols + b);
    }
}

fn col_sub_scaled(m: &mut IntMat, target: usize, source: usize, factor: &Int) {
    for i in 0..m.nrows() {
        let v = m.at(i, source) * factor;
        *m.at_mut(i, target) -= v;
    }
}

/// Fraction-free determinant (Bareiss) of a square integer matrix.
pub fn det_int(m: &IntMat) -> Int {
    assert_eq!(m.nrows(), m.ncols());
    let n = m.nrows();
    if n == 0 {
        return Int::one();
    }
    let mut a = m.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let swap = (k + 1..n).find(|&i| !a.at(i, k).is_zero());
            match swap {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / &prev;
                *a.at_mut(i, j) = v;
            }
            *a.at_mut(i, k) = Int::zero();
        }
        prev = a.at(k, k).clone();
    }
    sign * a.at(n - 1, n - 1).clone()
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(m: &IntMat) -> Option<IntMat> {
    assert_eq!(m.nrows(), m.ncols());
    let (h, u, rank) = row_hnf_with_transform(m);
    if rank != m.nrows() {
        return None;
    }
    // For a unimodular m the HNF is the identity, so u = m^{-1}.
    for i in 0..rank {
        for j in 0..m.ncols() {
            let expect = if i == j { Int::one() } else { Int::zero() };
            if *h.at(i, j) != expect {
                return None;
            }
        }
    }
    Some(u)
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut RatMat) -> Vec<usize> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.at(i, col).is_zero()) else { continue };
        m.swap_rows(r, p);
        let inv = m.at(r, col).clone();
        for j in 0..cols {
            let v = m.at(r, j).clone() / inv.clone();
            *m.at_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || m.at(i, col).is_zero() {
                continue;
            }
            let f = m.at(i, col).clone();
            for j in 0..cols {
                let v = m.at(i, j).clone() - f.clone() * m.at(r, j).clone();
                *m.at_mut(i, j) = v;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = RatMat::from_rows(rows);
    rref(&mut m).len()
}

pub fn int_rows_rank(rows: &[Vec<Int>]) -> usize {
    let rat_rows: Vec<Vec<Rat>> = rows.iter().map(|r| to_rat_vec(r)).collect();
    rat_rank(&rat_rows)
}

/// Solves `x * basis = v` for `x` over the rationals. Returns any solution.
pub fn solve_left(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    if k == 0 {
        return if is_zero_rat(v) { Some(Vec::new()) } else { None };
    }
    let n = basis[0].len();
    assert_eq!(v.len(), n);
    // Augmented transposed system: columns are the basis rows, rhs is v.
    let mut m = RatMat::zero(n, k + 1);
    for (bi, b) in basis.iter().enumerate() {
        for j in 0..n {
            *m.at_mut(j, bi) = b[j].clone();
        }
    }
    for j in 0..n {
        *m.at_mut(j, k) = v[j].clone();
    }
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut x = vec![Rat::zero(); k];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m.at(row, k).clone();
    }
    Some(x)
}

/// Solves `x * basis = v` where `v` is an integer vector.
pub fn solve_left_int(basis: &[Vec<Int>], v: &[Int]) -> Option<Vec<Rat>> {
    let rat_basis: Vec<Vec<Rat>> = basis.iter().map(|r| to_rat_vec(r)).collect();
    solve_left(&rat_basis, &to_rat_vec(v))
}

// ---------------------------------------------------------------------------
// Rational subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of ℚ^n with a canonical basis: the Hermite normal form
/// of the saturated integer row lattice. Equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: IntMat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: IntMat::empty(ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: IntMat::identity(ambient) }
    }

    /// Span of the given rational vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Result<Self, LinalgError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::Dimension { expected: ambient, got: v.len() });
            }
        }
        let rows: Vec<Vec<Int>> =
            vectors.iter().filter(|v| !is_zero_rat(v)).map(|v| primitive_ray(v)).collect();
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let lat = crate::lattice::IntegerLattice::from_rows(ambient, &rows);
        Ok(Subspace { ambient, basis: IntMat::from_rows(&lat.saturation().basis_rows()) })
    }

    pub fn span_int(ambient: usize, vectors: &[Vec<Int>]) -> Result<Self, LinalgError> {
        let rat_rows: Vec<Vec<Rat>> = vectors.iter().map(|r| to_rat_vec(r)).collect();
        Subspace::span(ambient, &rat_rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis_rows(&self) -> Vec<Vec<Int>> {
        self.basis.to_row_vecs()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.express(v).is_some()
    }

    /// Coordinates of `v` in the canonical basis.
    pub fn express(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if is_zero_rat(v) {
            return Some(vec![Rat::zero(); self.dim()]);
        }
        let basis: Vec<Vec<Rat>> = self.basis.rows_iter().map(to_rat_vec).collect();
        solve_left(&basis, v)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.to_row_vecs();
        rows.extend(other.basis.to_row_vecs());
        Subspace::span_int(self.ambient, &rows).expect("dimensions agree")
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.rows_iter().all(|r| other.contains(&to_rat_vec(r)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in ℚ^{}, basis {:?})", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_rows(&rows.iter().map(|r| int_vec(r)).collect::<Vec<_>>())
    }

    #[test]
    fn hnf_identity_is_identity() {
        let id = IntMat::identity(2);
        assert_eq!(hnf(&id), id);
    }

    #[test]
    fn hnf_reduces_above_pivot() {
        // Rows (2,1),(0,1) span the same lattice as (2,0),(0,1).
        let h = hnf(&m(&[&[2, 1], &[0, 1]]));
        assert_eq!(h, m(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn hnf_sorts_rows() {
        let h = hnf(&m(&[&[0, 3], &[3, 0]]));
        assert_eq!(h, m(&[&[3, 0], &[0, 3]]));
    }

    /// Brute-force oracle for 2x2 full-rank lattices: enumerate lattice points
    /// in a box and read off the canonical upper-triangular basis.
    fn hnf_2x2_oracle(rows: &IntMat) -> IntMat {
        let bound = 30i64;
        let mut points = alloc::collections::BTreeSet::new();
        for a in -6..=6i64 {
            for b in -6..=6i64 {
                let mut p = vec![Int::zero(); 2];
                add_scaled_int(&mut p, rows.row(0), &int(a));
                add_scaled_int(&mut p, rows.row(1), &int(b));
                if p.iter().all(|x| x.abs() <= int(bound)) {
                    points.insert((p[0].clone(), p[1].clone()));
                }
            }
        }
        let p2 = points
            .iter()
            .filter(|(x, y)| x.is_zero() && y.is_positive())
            .map(|(_, y)| y.clone())
            .min()
            .expect("full rank");
        let p1 = points
            .iter()
            .filter(|(x, _)| x.is_positive())
            .map(|(x, _)| x.clone())
            .min()
            .expect("full rank");
        let c = points
            .iter()
            .filter(|(x, y)| *x == p1 && !y.is_negative() && *y < p2)
            .map(|(_, y)| y.clone())
            .min()
            .expect("reduced entry exists");
        IntMat::from_rows(&[vec![p1, c], vec![Int::zero(), p2]])
    }

    #[test]
    fn hnf_matches_lattice_point_oracle() {
        for rows in [
            m(&[&[2, 1], &[0, 1]]),
            m(&[&[3, 5], &[1, 2]]),
            m(&[&[4, 2], &[2, 4]]),
            m(&[&[-3, 1], &[2, 2]]),
        ] {
            assert_eq!(hnf(&rows), hnf_2x2_oracle(&rows), "input {:?}", rows);
        }
    }

    #[test]
    fn snf_diagonal_cases() {
        let s = snf(&m(&[&[2, 0], &[0, 2]]));
        assert_eq!(s.factors, int_vec(&[2, 2]));
        let s = snf(&m(&[&[6, 0], &[0, 1]]));
        assert_eq!(s.factors, int_vec(&[1, 6]));
    }

    #[test]
    fn snf_transforms_recompose() {
        let a = m(&[&[-6, 111, -36, 6], &[5, -672, 210, 74], &[0, -255, 81, 24], &[-7, 255, -81, -10]]);
        let s = snf(&a);
        assert_eq!(s.left.mul(&a).mul(&s.right), s.d);
        assert_eq!(det_int(&s.left).abs(), Int::one());
        assert_eq!(det_int(&s.right).abs(), Int::one());
        assert_eq!(s.factors, int_vec(&[1, 3, 21]));
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = int_kernel(&a);
        assert_eq!(k.nrows(), 1);
        assert!(is_zero_int(&a.apply_row(k.row(0))));
    }

    #[test]
    fn solve_left_small() {
        let basis = vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        let x = solve_left(&basis, &[rat(1, 1), rat(3, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(3, 1)]);
        assert!(solve_left(&basis[..1], &[rat(0, 1), rat(1, 1)]).is_none());
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::span(2, &[vec![rat(1, 2), rat(1, 2)]]).unwrap();
        let s2 = Subspace::span(2, &[vec![rat(-3, 1), rat(-3, 1)]]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 1);
        assert!(s1.contains(&[rat(7, 3), rat(7, 3)]));
        assert!(!s1.contains(&[rat(1, 1), rat(0, 1)]));
    }

    #[test]
    fn primitive_ray_preserves_sign() {
        assert_eq!(primitive_ray(&[rat(-2, 3), rat(4, 3)]), int_vec(&[-1, 2]));
        assert_eq!(canonical_line(&int_vec(&[-2, 4])), int_vec(&[1, -2]));
    }
}
