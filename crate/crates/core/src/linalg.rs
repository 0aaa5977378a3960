//! Exact dense linear algebra over the rationals and prime fields.
//!
//! Every routine is deterministic: pivots are chosen as the first nonzero
//! entry in scan order, so identical inputs give identical echelon forms,
//! kernels, and reports.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

/// A coefficient domain for exact elimination. Implementations are small
/// "domain objects" passed by reference alongside raw element data.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; None exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The field of exact rationals with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// F_p with canonical residues 0..p-1 and a runtime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc: u64 = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over an arbitrary element type.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn new(rows: usize, cols: usize, fill: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..m.cols {
        let mut pivot_row = None;
        for r in rank..m.rows {
            if !f.is_zero(&m[(r, col)]) {
                pivot_row = Some(r);
                break;
            }
        }
        let Some(pr) = pivot_row else { continue };
        if pr != rank {
            for c in 0..m.cols {
                m.data.swap(pr * m.cols + c, rank * m.cols + c);
            }
        }
        let inv = f
            .inv(&m[(rank, col)])
            .expect("pivot entry is nonzero by construction");
        for c in col..m.cols {
            m[(rank, c)] = f.mul(&m[(rank, c)], &inv);
        }
        for r in 0..m.rows {
            if r != rank && !f.is_zero(&m[(r, col)]) {
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = f.mul(&factor, &m[(rank, c)]);
                    m[(r, c)] = f.sub(&m[(r, c)], &delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Mat<F::Elem>) -> usize {
    let mut copy = m.clone();
    rref(f, &mut copy).len()
}

/// Kernel basis of the linear map x -> m * x, one vector per free column,
/// in ascending free-column order.
pub fn kernel<F: Field>(f: &F, m: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut copy = m.clone();
    let pivots = rref(f, &mut copy);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&copy[(row, free)]);
        }
        basis.push(v);
    }
    basis
}

/// Solve m * x = b for a unique solution; None when inconsistent or
/// underdetermined.
pub fn solve_unique<F: Field>(
    f: &F,
    m: &Mat<F::Elem>,
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::from_fn(m.rows, m.cols + 1, |r, c| {
        if c < m.cols {
            m[(r, c)].clone()
        } else {
            b[r].clone()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    if pivots.len() < m.cols {
        return None; // underdetermined
    }
    let mut x = vec![f.zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(row, m.cols)].clone();
    }
    Some(x)
}

/// A subspace of an ambient coordinate space, maintained in reduced row
/// echelon form so membership tests and quotient coordinates are canonical.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    /// Echelon basis rows sorted by pivot column; each pivot column holds 1
    /// in its own row and 0 in every other basis row.
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Fully reduce `v` against the basis; the result has zeros in every
    /// pivot column and is zero iff v lies in the subspace.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if !f.is_zero(&out[pc]) {
                let factor = out[pc].clone();
                for c in 0..self.ambient {
                    let delta = f.mul(&factor, &self.basis[row][c]);
                    out[c] = f.sub(&out[c], &delta);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|e| f.is_zero(e))
    }

    /// Insert a vector, returning true when it enlarges the subspace.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut red = self.reduce(v);
        let Some(pc) = red.iter().position(|e| !f.is_zero(e)) else {
            return false;
        };
        let inv = f.inv(&red[pc]).expect("leading entry nonzero");
        for e in red.iter_mut() {
            *e = f.mul(e, &inv);
        }
        // eliminate the new pivot column from existing rows
        for row in self.basis.iter_mut() {
            if !f.is_zero(&row[pc]) {
                let factor = row[pc].clone();
                for c in 0..self.ambient {
                    let delta = f.mul(&factor, &red[c]);
                    row[c] = f.sub(&row[c], &delta);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.basis.insert(at, red);
        true
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the quotient ambient/self with respect to the
    /// complement basis of non-pivot unit vectors.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let red = self.reduce(v);
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut next_pivot = self.pivots.iter().peekable();
        for (c, e) in red.into_iter().enumerate() {
            if next_pivot.peek() == Some(&&c) {
                next_pivot.next();
            } else {
                out.push(e);
            }
        }
        out
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient - self.pivots.len()
    }

    /// Canonical lift of quotient coordinates back to the ambient space:
    /// values placed at non-pivot columns, zeros at pivot columns.
    pub fn lift_quotient(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coords.len(), self.quotient_dim());
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient];
        let mut it = coords.iter();
        let mut next_pivot = self.pivots.iter().peekable();
        for (c, slot) in out.iter_mut().enumerate() {
            if next_pivot.peek() == Some(&&c) {
                next_pivot.next();
            } else {
                *slot = it.next().expect("coordinate count checked").clone();
            }
        }
        out
    }

    pub fn basis_rows(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }
}

/// Matrix over a declared coefficient domain, the public face of the
/// elimination routines.
#[derive(Debug, Clone)]
pub enum ExactMatrix {
    Rational(Mat<BigRational>),
    Fp { field: PrimeField, data: Mat<u64> },
}

/// Kernel basis paired with the domain it lives over.
#[derive(Debug, Clone)]
pub enum ExactKernel {
    Rational(Vec<Vec<BigRational>>),
    Fp(Vec<Vec<u64>>),
}

impl ExactKernel {
    pub fn dim(&self) -> usize {
        match self {
            ExactKernel::Rational(v) => v.len(),
            ExactKernel::Fp(v) => v.len(),
        }
    }
}

impl ExactMatrix {
    pub fn rational_from_i64(rows: Vec<Vec<i64>>) -> Self {
        let m = Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| Rationals.from_i64(v)).collect())
                .collect(),
        );
        ExactMatrix::Rational(m)
    }

    pub fn fp_from_i64(p: u64, rows: Vec<Vec<i64>>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let m = Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| field.from_i64(v)).collect())
                .collect(),
        );
        Ok(ExactMatrix::Fp { field, data: m })
    }

    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.rows(),
            ExactMatrix::Fp { data, .. } => data.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.cols(),
            ExactMatrix::Fp { data, .. } => data.cols(),
        }
    }

    /// Exact row reduction: the rank together with a kernel basis.
    /// rank + kernel dimension = column count.
    pub fn rank_and_kernel(&self) -> (usize, ExactKernel) {
        match self {
            ExactMatrix::Rational(m) => {
                let k = kernel(&Rationals, m);
                (m.cols() - k.len(), ExactKernel::Rational(k))
            }
            ExactMatrix::Fp { field, data } => {
                let k = kernel(field, data);
                (data.cols() - k.len(), ExactKernel::Fp(k))
            }
        }
    }
}

/// Unique interpolating polynomial (degree < sample count) through exact
/// integer nodes, as rational coefficients in ascending degree.
pub fn interpolate_integer_polynomial(points: &[(BigInt, BigInt)]) -> Result<Vec<BigRational>> {
    if points.is_empty() {
        return Err(Error::NoSamples);
    }
    for (i, (qi, _)) in points.iter().enumerate() {
        for (qj, _) in points.iter().skip(i + 1) {
            if qi == qj {
                return Err(Error::DuplicateNode(qi.to_string()));
            }
        }
    }
    let n = points.len();
    // Newton's divided differences, then expansion to the monomial basis.
    let xs: Vec<BigRational> = points.iter().map(|(q, _)| BigRational::from(q.clone())).collect();
    let mut table: Vec<BigRational> = points
        .iter()
        .map(|(_, v)| BigRational::from(v.clone()))
        .collect();
    let mut newton_coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
        newton_coeffs.push(table[level].clone());
    }
    // expand: p(x) = c0 + (x - x0)(c1 + (x - x1)(c2 + ...))
    let mut coeffs = vec![BigRational::zero(); n];
    for level in (0..n).rev() {
        // multiply current polynomial by (x - x_level) and add c_level
        let mut next = vec![BigRational::zero(); n];
        for d in (0..n - 1).rev() {
            let val = coeffs[d].clone();
            if !val.is_zero() {
                next[d + 1] = &next[d + 1] + &val;
                next[d] = &next[d] - &(&val * &xs[level]);
            }
        }
        next[0] = &next[0] + &newton_coeffs[level];
        coeffs = next;
    }
    Ok(coeffs)
}

pub fn evaluate_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Degree of a coefficient vector: highest index with nonzero entry.
pub fn poly_degree(coeffs: &[BigRational]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

pub fn rational_is_integer(r: &BigRational) -> bool {
    r.denom().abs() == BigInt::one()
}
