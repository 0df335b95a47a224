//! Exact linear algebra over a prime field `F_p`.
//!
//! Vectors are plain `Vec<u32>` / `&[u32]` slices whose entries lie in
//! `[0, p)`. A [`Subspace`] always stores its basis in reduced row echelon
//! form with no zero rows, so two subspaces of the same ambient space are
//! equal as sets exactly when their bases are equal entry for entry. Every
//! structural comparison in the crate relies on that canonicity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};

/// A prime field `F_p`. Construction checks primality by trial division.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Field { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64 % self.p as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i64) as u32)
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// The dot product, i.e. the symmetric form θ on `F_p^m`.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        debug_assert_eq!(a.len(), b.len());
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u64 * y as u64) % p;
        }
        acc as u32
    }

    pub fn scalar(&self, value: u32) -> FpScalar {
        FpScalar {
            value: value % self.p,
            field: *self,
        }
    }

    /// `a + c * b`, element-wise.
    pub fn axpy(&self, a: &mut [u32], c: u32, b: &[u32]) {
        if c == 0 {
            return;
        }
        for (x, &y) in a.iter_mut().zip(b) {
            *x = self.add(*x, self.mul(c, y));
        }
    }

    pub fn add_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn neg_vec(&self, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.neg(x)).collect()
    }

    pub fn scale_vec(&self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// Checks that every entry lies in `[0, p)`.
    pub fn check_vector(&self, v: &[u32]) -> Result<()> {
        match v.iter().find(|&&x| x >= self.p) {
            Some(&x) => Err(Error::EntryOutOfRange(x)),
            None => Ok(()),
        }
    }

    fn check_same(&self, other: &Field) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Number of nonzero coordinates.
pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// A single element of `F_p` that carries its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FpScalar {
    value: u32,
    field: Field,
}

impl FpScalar {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn inv(&self) -> Option<FpScalar> {
        self.field.inv(self.value).map(|v| self.field.scalar(v))
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.field, rhs.field, "scalars from different fields");
        self.field.scalar(self.field.add(self.value, rhs.value))
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.field, rhs.field, "scalars from different fields");
        self.field.scalar(self.field.sub(self.value, rhs.value))
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.field, rhs.field, "scalars from different fields");
        self.field.scalar(self.field.mul(self.value, rhs.value))
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        self.field.scalar(self.field.neg(self.value))
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries in `[0, p)`.
    pub fn from_rows<R: AsRef<[u32]>>(field: Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            field.check_vector(row)?;
            data.extend_from_slice(row);
        }
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.field.p;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// `M · v`.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self.row_iter().map(|r| self.field.dot(r, v)).collect())
    }

    /// Some `c` with `M · c = t`, or `None` if `t` is outside the column space.
    pub fn solve(&self, t: &[u32]) -> Option<Vec<u32>> {
        if t.len() != self.rows {
            return None;
        }
        let f = self.field;
        let mut aug = FpMatrix::zeros(f, self.rows, self.cols + 1);
        for (i, &ti) in t.iter().enumerate() {
            aug.data[i * (self.cols + 1)..i * (self.cols + 1) + self.cols].copy_from_slice(self.row(i));
            aug.set(i, self.cols, ti);
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut c = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            c[pc] = r.get(i, self.cols);
        }
        Some(c)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Zero rows are kept at the bottom so the shape is unchanged.
    pub fn rref_with_pivots(&self) -> (FpMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(i) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(i, r);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = m.data[r * cols + j];
                m.data[r * cols + j] = f.mul(v, inv);
            }
            let pivot_row = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                let row = &mut m.data[i * cols + c..(i + 1) * cols];
                f.axpy(row, neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> FpMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// `{v : M v = 0}` as a canonical subspace of `F_p^cols`.
    pub fn kernel(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            vectors.push(v);
        }
        Subspace::from_independent_unchecked(f, self.cols, &vectors)
    }

    /// The span of the rows.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    /// The span of the columns, as a subspace of `F_p^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let text: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", text.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of `F_p^m` held in canonical (RREF, no zero rows) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: FpMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: FpMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span<R: AsRef<[u32]>>(field: Field, ambient: usize, vectors: &[R]) -> Result<Self> {
        let m = FpMatrix::from_rows(field, ambient, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &FpMatrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let basis = FpMatrix {
            field: r.field,
            rows: rank,
            cols: r.cols,
            data: r.data[..rank * r.cols].to_vec(),
        };
        Subspace { basis, pivots }
    }

    fn from_independent_unchecked(field: Field, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let m = FpMatrix {
            field,
            rows: vectors.len(),
            cols: ambient,
            data: vectors.concat(),
        };
        Self::from_matrix(&m)
    }

    /// A uniformly chosen basis of random vectors reduced to a subspace of exactly `dim`.
    pub fn random<R: Rng + ?Sized>(field: Field, ambient: usize, dim: usize, rng: &mut R) -> Result<Self> {
        if dim > ambient {
            return Err(Error::InvalidParameter(format!(
                "dimension {dim} exceeds ambient {ambient}"
            )));
        }
        let mut s = Subspace::zero(field, ambient);
        while s.dim() < dim {
            let v: Vec<u32> = (0..ambient).map(|_| rng.random_range(0..field.p)).collect();
            if !s.contains(&v) {
                s = s.with_vector(&v);
            }
        }
        Ok(s)
    }

    pub fn field(&self) -> Field {
        self.basis.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.basis.row_iter()
    }

    /// Eliminates the pivot coordinates of `v`. The result is zero iff `v` is in the
    /// subspace, and two vectors reduce to the same thing iff they share a coset.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c != 0 {
                f.axpy(&mut out, f.neg(c), self.basis.row(i));
            }
        }
        out
    }

    /// Membership test. Panics if `v` has the wrong length; see [`Subspace::member`].
    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn member(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient_dim() {
            return Err(Error::LengthMismatch {
                expected: self.ambient_dim(),
                got: v.len(),
            });
        }
        self.field().check_vector(v)?;
        Ok(self.contains(v))
    }

    /// Coefficients of `v` in the canonical basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        if self.combine(&coords) == v {
            Some(coords)
        } else {
            None
        }
    }

    /// `Σ c_i · basis_i`.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0; self.ambient_dim()];
        for (row, &c) in self.basis.row_iter().zip(coeffs) {
            f.axpy(&mut out, c, row);
        }
        out
    }

    fn with_vector(&self, v: &[u32]) -> Subspace {
        let mut rows = self.basis.to_rows();
        rows.push(v.to_vec());
        Self::from_independent_unchecked(self.field(), self.ambient_dim(), &rows)
    }

    pub(crate) fn check_compatible(&self, other: &Subspace) -> Result<()> {
        self.field().check_same(&other.field())?;
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.basis.to_rows();
        rows.extend(other.basis.to_rows());
        Ok(Self::from_independent_unchecked(
            self.field(),
            self.ambient_dim(),
            &rows,
        ))
    }

    /// Computed as `(A^θ + B^θ)^θ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let c = self.theta_complement().sum(&other.theta_complement())?;
        Ok(c.theta_complement())
    }

    /// `{a : a · h = 0 for all h}`.
    pub fn theta_complement(&self) -> Subspace {
        self.basis.kernel()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.field() == other.field()
            && self.ambient_dim() == other.ambient_dim()
            && self.basis_vectors().all(|v| other.contains(v))
    }

    /// Vectors of `big` whose cosets form a basis of `big / small`. The scan walks
    /// `big`'s canonical basis in order, so the choice is deterministic.
    pub fn quotient_reps(big: &Subspace, small: &Subspace) -> Result<Vec<Vec<u32>>> {
        big.check_compatible(small)?;
        if !small.is_subspace_of(big) {
            return Err(Error::NotSubspace);
        }
        let mut acc = small.clone();
        let mut reps = Vec::new();
        for v in big.basis_vectors() {
            if !acc.contains(v) {
                acc = acc.with_vector(v);
                reps.push(v.to_vec());
            }
        }
        debug_assert_eq!(reps.len(), big.dim() - small.dim());
        Ok(reps)
    }

    /// An allocation-free membership oracle for hot search loops.
    pub fn membership_test(&self) -> MembershipTest {
        MembershipTest {
            checks: self.theta_complement().basis,
        }
    }

    /// All `p^dim` elements. Only sensible for tiny subspaces.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        linear_combinations(self.field(), self.ambient_dim(), &self.basis.to_rows())
    }
}

/// Tests `v ∈ S` as `C v = 0`, where the rows of `C` span `S^θ`.
#[derive(Clone, Debug)]
pub struct MembershipTest {
    checks: FpMatrix,
}

impl MembershipTest {
    #[inline]
    pub fn contains(&self, v: &[u32]) -> bool {
        let f = self.checks.field;
        self.checks.row_iter().all(|r| f.dot(r, v) == 0)
    }
}

/// Every `F_p`-linear combination of `vectors` (with repetition if they are dependent).
pub fn linear_combinations(field: Field, ambient: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; ambient]];
    for v in vectors {
        let mut next = Vec::with_capacity(out.len() * field.p as usize);
        for base in &out {
            for c in 0..field.p {
                let mut w = base.clone();
                field.axpy(&mut w, c, v);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "<0 in F_{}^{}>", self.field().p, self.ambient_dim())
        } else {
            write!(f, "{}", self.basis)
        }
    }
}
