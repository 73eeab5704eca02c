//! Dense exact matrices and linear maps.
//!
//! Storage is row-major and monomorphic per field: one flat `Vec<u64>` of
//! canonical residues for GF(p), one `Vec<BigRational>` for Q. The GF(p)
//! kernels accumulate unreduced products in u64 and reduce lazily, which is
//! what makes 256 x 65536 structure-constant products affordable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::field::{inv_mod, Barrett, FieldElement, FieldSpec};

/// Work threshold (multiply-adds) above which kernels fan out over rayon.
const PAR_THRESHOLD: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Entries {
    Fp(Vec<u64>),
    Rat(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixExact {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Entries,
}

impl MatrixExact {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let entries = match field {
            FieldSpec::Prime(_) => Entries::Fp(vec![0; rows * cols]),
            FieldSpec::Rationals => Entries::Rat(vec![BigRational::zero(); rows * cols]),
        };
        MatrixExact { rows, cols, field, entries }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set_one(i, i);
        }
        m
    }

    /// Build from a closure returning canonical elements of `field`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j))?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        match &self.entries {
            Entries::Fp(v) => FieldElement::Fp(v[i * self.cols + j]),
            Entries::Rat(v) => FieldElement::Rat(v[i * self.cols + j].clone()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, val: FieldElement) -> Result<()> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        if !val.is_canonical(&self.field) {
            return Err(Error::FieldMismatch(format!(
                "entry {val} is not a canonical element of {}",
                self.field
            )));
        }
        let idx = i * self.cols + j;
        match (&mut self.entries, val) {
            (Entries::Fp(v), FieldElement::Fp(e)) => v[idx] = e,
            (Entries::Rat(v), FieldElement::Rat(e)) => v[idx] = e,
            _ => unreachable!("canonical check guarantees matching variants"),
        }
        Ok(())
    }

    fn set_one(&mut self, i: usize, j: usize) {
        let idx = i * self.cols + j;
        match &mut self.entries {
            Entries::Fp(v) => v[idx] = 1,
            Entries::Rat(v) => v[idx] = BigRational::one(),
        }
    }

    pub(crate) fn entries(&self) -> &Entries {
        &self.entries
    }

    /// Raw residues when the matrix lives over a prime field.
    pub(crate) fn fp_entries(&self) -> Option<&[u64]> {
        match &self.entries {
            Entries::Fp(v) => Some(v),
            Entries::Rat(_) => None,
        }
    }

    pub(crate) fn into_entries(self) -> Entries {
        self.entries
    }

    pub(crate) fn from_fp_vec(field: FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(field.is_prime_field());
        MatrixExact { rows, cols, field, entries: Entries::Fp(data) }
    }

    pub(crate) fn from_rat_vec(
        rows: usize,
        cols: usize,
        data: Vec<BigRational>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        MatrixExact { rows, cols, field: FieldSpec::Rationals, entries: Entries::Rat(data) }
    }

    pub fn is_zero(&self) -> bool {
        match &self.entries {
            Entries::Fp(v) => v.iter().all(|&e| e == 0),
            Entries::Rat(v) => v.iter().all(|e| e.is_zero()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = match (&self.entries, &other.entries, self.field) {
            (Entries::Fp(a), Entries::Fp(b), FieldSpec::Prime(p)) => {
                Entries::Fp(a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
            }
            (Entries::Rat(a), Entries::Rat(b), _) => {
                Entries::Rat(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        };
        Ok(MatrixExact { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let entries = match (&self.entries, self.field) {
            (Entries::Fp(a), FieldSpec::Prime(p)) => {
                Entries::Fp(a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect())
            }
            (Entries::Rat(a), _) => Entries::Rat(a.iter().map(|x| -x).collect()),
            _ => unreachable!(),
        };
        MatrixExact { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn scale(&self, s: &FieldElement) -> Result<Self> {
        if !s.is_canonical(&self.field) {
            return Err(Error::FieldMismatch(format!("scalar {s} not in {}", self.field)));
        }
        let entries = match (&self.entries, s, self.field) {
            (Entries::Fp(a), FieldElement::Fp(sv), FieldSpec::Prime(p)) => {
                Entries::Fp(a.iter().map(|&x| x * sv % p).collect())
            }
            (Entries::Rat(a), FieldElement::Rat(sv), _) => {
                Entries::Rat(a.iter().map(|x| x * sv).collect())
            }
            _ => unreachable!(),
        };
        Ok(MatrixExact { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let entries = match (&self.entries, &other.entries, self.field) {
            (Entries::Fp(a), Entries::Fp(b), FieldSpec::Prime(p)) => {
                Entries::Fp(matmul_fp_auto(a, b, m, k, n, p))
            }
            (Entries::Rat(a), Entries::Rat(b), _) => Entries::Rat(matmul_rat(a, b, m, k, n)),
            _ => unreachable!(),
        };
        Ok(MatrixExact { rows: m, cols: n, field: self.field, entries })
    }

    /// Kronecker product with the fixed basis order (i,j) -> i*dim2 + j:
    /// (A (x) B)[(i*rB+k), (j*cB+l)] = A[i,j] B[k,l].
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "kron requires one common field");
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        let rows = ra * rb;
        let cols = ca * cb;
        let entries = match (&self.entries, &other.entries, self.field) {
            (Entries::Fp(a), Entries::Fp(b), FieldSpec::Prime(p)) => {
                let mut out = vec![0u64; rows * cols];
                for i in 0..ra {
                    for j in 0..ca {
                        let av = a[i * ca + j];
                        if av == 0 {
                            continue;
                        }
                        for k in 0..rb {
                            let dst = (i * rb + k) * cols + j * cb;
                            let src = k * cb;
                            for l in 0..cb {
                                out[dst + l] = av * b[src + l] % p;
                            }
                        }
                    }
                }
                Entries::Fp(out)
            }
            (Entries::Rat(a), Entries::Rat(b), _) => {
                let mut out = vec![BigRational::zero(); rows * cols];
                for i in 0..ra {
                    for j in 0..ca {
                        let av = &a[i * ca + j];
                        if av.is_zero() {
                            continue;
                        }
                        for k in 0..rb {
                            for l in 0..cb {
                                out[(i * rb + k) * cols + j * cb + l] = av * &b[k * cb + l];
                            }
                        }
                    }
                }
                Entries::Rat(out)
            }
            _ => unreachable!(),
        };
        MatrixExact { rows, cols, field: self.field, entries }
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.rows, self.cols);
        let entries = match &self.entries {
            Entries::Fp(a) => {
                let mut out = vec![0u64; r * c];
                for i in 0..r {
                    for j in 0..c {
                        out[j * r + i] = a[i * c + j];
                    }
                }
                Entries::Fp(out)
            }
            Entries::Rat(a) => {
                let mut out = vec![BigRational::zero(); r * c];
                for i in 0..r {
                    for j in 0..c {
                        out[j * r + i] = a[i * c + j].clone();
                    }
                }
                Entries::Rat(out)
            }
        };
        MatrixExact { rows: c, cols: r, field: self.field, entries }
    }

    /// Exact rank: in-place modular elimination over GF(p), fraction-free
    /// Bareiss over Q (after clearing row denominators).
    pub fn rank(&self) -> usize {
        match &self.entries {
            Entries::Fp(a) => {
                let FieldSpec::Prime(p) = self.field else { unreachable!() };
                rank_fp(a.clone(), self.rows, self.cols, p)
            }
            Entries::Rat(a) => rank_bareiss(a, self.rows, self.cols),
        }
    }

    /// Two-sided inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("invert: {}x{} not square", self.rows, self.cols)));
        }
        match &self.entries {
            Entries::Fp(a) => {
                let FieldSpec::Prime(p) = self.field else { unreachable!() };
                let inv = invert_fp(a, self.rows, p)?;
                Ok(MatrixExact {
                    rows: self.rows,
                    cols: self.cols,
                    field: self.field,
                    entries: Entries::Fp(inv),
                })
            }
            Entries::Rat(a) => {
                let inv = invert_rat(a, self.rows)?;
                Ok(MatrixExact {
                    rows: self.rows,
                    cols: self.cols,
                    field: self.field,
                    entries: Entries::Rat(inv),
                })
            }
        }
    }

    /// Permutation matrix sending e_j to e_{perm[j]}.
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            assert!(i < n, "permutation image out of range");
            m.set_one(i, j);
        }
        m
    }

    /// The flip map V (x) W -> W (x) V on tensor indices:
    /// e_{i*dim_w + j} -> e_{j*dim_v + i}.
    pub fn swap_factors(field: FieldSpec, dim_v: usize, dim_w: usize) -> Self {
        let n = dim_v * dim_w;
        let mut m = Self::zeros(field, n, n);
        for i in 0..dim_v {
            for j in 0..dim_w {
                m.set_one(j * dim_v + i, i * dim_w + j);
            }
        }
        m
    }

    /// Copy of `len` contiguous columns starting at `start`.
    pub fn columns(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.cols, "column range out of bounds");
        let entries = match &self.entries {
            Entries::Fp(a) => {
                let mut out = Vec::with_capacity(self.rows * len);
                for i in 0..self.rows {
                    out.extend_from_slice(&a[i * self.cols + start..i * self.cols + start + len]);
                }
                Entries::Fp(out)
            }
            Entries::Rat(a) => {
                let mut out = Vec::with_capacity(self.rows * len);
                for i in 0..self.rows {
                    out.extend_from_slice(&a[i * self.cols + start..i * self.cols + start + len]);
                }
                Entries::Rat(out)
            }
        };
        MatrixExact { rows: self.rows, cols: len, field: self.field, entries }
    }

    /// Copy of arbitrary columns, in the given order.
    pub fn gather_columns(&self, cols: &[usize]) -> Self {
        for &c in cols {
            assert!(c < self.cols, "column index out of bounds");
        }
        let entries = match &self.entries {
            Entries::Fp(a) => Entries::Fp(
                (0..self.rows)
                    .flat_map(|i| cols.iter().map(move |&c| a[i * self.cols + c]))
                    .collect(),
            ),
            Entries::Rat(a) => Entries::Rat(
                (0..self.rows)
                    .flat_map(|i| cols.iter().map(move |&c| a[i * self.cols + c].clone()))
                    .collect(),
            ),
        };
        MatrixExact { rows: self.rows, cols: cols.len(), field: self.field, entries }
    }

    /// Single column as a rows x 1 matrix.
    pub fn column(&self, j: usize) -> Self {
        self.columns(j, 1)
    }

    /// First column (then row) where the two matrices differ, in
    /// column-major scan order. Columns index inputs of a structure map,
    /// so this yields the lexicographically first failing basis tuple.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "mismatch scan needs equal shapes");
        for j in 0..self.cols {
            for i in 0..self.rows {
                let differ = match (&self.entries, &other.entries) {
                    (Entries::Fp(a), Entries::Fp(b)) => a[i * self.cols + j] != b[i * self.cols + j],
                    (Entries::Rat(a), Entries::Rat(b)) => a[i * self.cols + j] != b[i * self.cols + j],
                    _ => true,
                };
                if differ {
                    return Some((j, i));
                }
            }
        }
        None
    }
}

/// A linear map stored as its (codomain x domain) matrix: columns are
/// images of domain basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMapExact {
    matrix: MatrixExact,
}

impl LinearMapExact {
    pub fn new(matrix: MatrixExact) -> Self {
        LinearMapExact { matrix }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMapExact { matrix: MatrixExact::identity(field, n) }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &MatrixExact {
        &self.matrix
    }

    pub fn into_matrix(self) -> MatrixExact {
        self.matrix
    }

    /// self after g: (self . g)(x) = self(g(x)).
    pub fn compose(&self, g: &LinearMapExact) -> Result<LinearMapExact> {
        if self.domain_dim() != g.codomain_dim() {
            return Err(Error::Dimension(format!(
                "compose: domain {} vs codomain {}",
                self.domain_dim(),
                g.codomain_dim()
            )));
        }
        Ok(LinearMapExact { matrix: self.matrix.mul(&g.matrix)? })
    }

    /// Kronecker product of maps, basis order (i,j) -> i*dim2 + j.
    pub fn tensor_map(&self, g: &LinearMapExact) -> LinearMapExact {
        LinearMapExact { matrix: self.matrix.kron(&g.matrix) }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn invert(&self) -> Result<LinearMapExact> {
        Ok(LinearMapExact { matrix: self.matrix.invert()? })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// Standalone spellings of the basic operations.
pub fn compose(f: &LinearMapExact, g: &LinearMapExact) -> Result<LinearMapExact> {
    f.compose(g)
}

pub fn tensor_map(f: &LinearMapExact, g: &LinearMapExact) -> LinearMapExact {
    f.tensor_map(g)
}

pub fn rank(m: &MatrixExact) -> usize {
    m.rank()
}

pub fn invert(m: &MatrixExact) -> Result<MatrixExact> {
    m.invert()
}

/// GF(p) matmul with deferred reduction. Accumulators stay exact because a
/// row is reduced before the unreduced sum can reach u64::MAX.
fn transpose_fp(src: &[u64], rows: usize, cols: usize) -> Vec<u64> {
    let mut out = vec![0u64; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            out[j * rows + i] = src[i * cols + j];
        }
    }
    out
}

/// The row kernel skips zero entries of the left operand only, so when the
/// right operand is much sparser the product is cheaper as (B^T A^T)^T.
/// Structure-constant matrices are routinely over 90 percent zero, which
/// makes this reorientation worth three transposes on large products.
fn matmul_fp_auto(a: &[u64], b: &[u64], m: usize, k: usize, n: usize, p: u64) -> Vec<u64> {
    if m * k * n >= PAR_THRESHOLD {
        let nnz_a = a.iter().filter(|&&v| v != 0).count();
        let nnz_b = b.iter().filter(|&&v| v != 0).count();
        let flip_cost = nnz_b * m + (m * k + k * n + m * n) / 2;
        if flip_cost < nnz_a * n {
            let at = transpose_fp(a, m, k);
            let bt = transpose_fp(b, k, n);
            let ct = matmul_fp(&bt, &at, n, k, m, p);
            return transpose_fp(&ct, n, m);
        }
    }
    matmul_fp(a, b, m, k, n, p)
}

pub(crate) fn matmul_fp(a: &[u64], b: &[u64], m: usize, k: usize, n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; m * n];
    if m == 0 || n == 0 || k == 0 {
        return out;
    }
    let step = (p - 1) * (p - 1);
    // How many fused multiply-adds fit on top of a reduced value before
    // u64 overflow becomes possible.
    let budget = if step == 0 { usize::MAX } else { ((u64::MAX - (p - 1)) / step) as usize }.max(1);
    let row_job = |i: usize, acc: &mut [u64]| {
        let mut used = 0usize;
        for kk in 0..k {
            let av = a[i * k + kk];
            if av == 0 {
                continue;
            }
            let brow = &b[kk * n..kk * n + n];
            for (o, &bv) in acc.iter_mut().zip(brow) {
                *o += av * bv;
            }
            used += 1;
            if used >= budget {
                for o in acc.iter_mut() {
                    *o %= p;
                }
                used = 0;
            }
        }
        for o in acc.iter_mut() {
            *o %= p;
        }
    };
    if m * k * n >= PAR_THRESHOLD && m > 1 {
        out.par_chunks_mut(n).enumerate().for_each(|(i, acc)| row_job(i, acc));
    } else {
        for (i, acc) in out.chunks_mut(n).enumerate() {
            row_job(i, acc);
        }
    }
    out
}

fn matmul_rat(a: &[BigRational], b: &[BigRational], m: usize, k: usize, n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); m * n];
    for i in 0..m {
        for kk in 0..k {
            let av = &a[i * k + kk];
            if av.is_zero() {
                continue;
            }
            for j in 0..n {
                let bv = &b[kk * n + j];
                if !bv.is_zero() {
                    out[i * n + j] += av * bv;
                }
            }
        }
    }
    out
}

fn rank_fp(mut data: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let bar = Barrett::new(p);
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            // split_at_mut keeps the borrow checker happy about the swap
            let (top, bottom) = data.split_at_mut(piv * cols);
            top[rank * cols..rank * cols + cols].swap_with_slice(&mut bottom[..cols]);
        }
        let inv = inv_mod(data[rank * cols + col], p);
        for j in col..cols {
            data[rank * cols + j] = bar.reduce(data[rank * cols + j] * inv);
        }
        let (pivot_rows, rest) = data.split_at_mut((rank + 1) * cols);
        let prow = &pivot_rows[rank * cols..];
        let eliminate = |row: &mut [u64]| {
            let f = row[col];
            if f == 0 {
                return;
            }
            let fneg = p - f;
            for j in col..cols {
                row[j] = bar.reduce(row[j] + fneg * prow[j]);
            }
        };
        let below = rows - rank - 1;
        if below * (cols - col) >= PAR_THRESHOLD {
            rest.par_chunks_mut(cols).for_each(eliminate);
        } else {
            rest.chunks_mut(cols).for_each(eliminate);
        }
        rank += 1;
    }
    rank
}

fn invert_fp(a: &[u64], n: usize, p: u64) -> Result<Vec<u64>> {
    let bar = Barrett::new(p);
    // augmented [A | I]
    let w = 2 * n;
    let mut m = vec![0u64; n * w];
    for i in 0..n {
        m[i * w..i * w + n].copy_from_slice(&a[i * n..i * n + n]);
        m[i * w + n + i] = 1;
    }
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r * w + col] != 0) else {
            return Err(Error::Singular(format!("matrix has no pivot in column {col}")));
        };
        if piv != col {
            let (top, bottom) = m.split_at_mut(piv * w);
            top[col * w..col * w + w].swap_with_slice(&mut bottom[..w]);
        }
        let inv = inv_mod(m[col * w + col], p);
        for j in 0..w {
            m[col * w + j] = bar.reduce(m[col * w + j] * inv);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[r * w + col];
            if f == 0 {
                continue;
            }
            let fneg = p - f;
            for j in 0..w {
                m[r * w + j] = bar.reduce(m[r * w + j] + fneg * m[col * w + j]);
            }
        }
    }
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        out[i * n..i * n + n].copy_from_slice(&m[i * w + n..i * w + w]);
    }
    Ok(out)
}

fn invert_rat(a: &[BigRational], n: usize) -> Result<Vec<BigRational>> {
    let w = 2 * n;
    let mut m = vec![BigRational::zero(); n * w];
    for i in 0..n {
        for j in 0..n {
            m[i * w + j] = a[i * n + j].clone();
        }
        m[i * w + n + i] = BigRational::one();
    }
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r * w + col].is_zero()) else {
            return Err(Error::Singular(format!("matrix has no pivot in column {col}")));
        };
        if piv != col {
            for j in 0..w {
                m.swap(piv * w + j, col * w + j);
            }
        }
        let inv = m[col * w + col].recip();
        for j in 0..w {
            let v = &m[col * w + j] * &inv;
            m[col * w + j] = v;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[r * w + col].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..w {
                let v = &m[r * w + j] - &f * &m[col * w + j];
                m[r * w + j] = v;
            }
        }
    }
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = m[i * w + n + j].clone();
        }
    }
    Ok(out)
}

/// Fraction-free Bareiss elimination on the integer matrix obtained by
/// clearing row denominators (row scaling does not change the rank).
fn rank_bareiss(a: &[BigRational], rows: usize, cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                lcm = num_integer::lcm(lcm, a[i * cols + j].denom().clone());
            }
            (0..cols)
                .map(|j| {
                    let e = &a[i * cols + j];
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(piv, rank);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn fp_matrix(p: u64, rows: usize, cols: usize, data: &[i64]) -> MatrixExact {
        let f = gf(p);
        MatrixExact::from_fn(f, rows, cols, |i, j| f.from_i64(data[i * cols + j])).unwrap()
    }

    fn q_matrix(rows: usize, cols: usize, data: &[&str]) -> MatrixExact {
        let f = FieldSpec::rationals();
        MatrixExact::from_fn(f, rows, cols, |i, j| f.parse_scalar(data[i * cols + j]).unwrap())
            .unwrap()
    }

    #[test]
    fn compose_identity_and_inverse() {
        let id3 = LinearMapExact::identity(gf(5), 3);
        assert_eq!(id3.compose(&id3).unwrap(), id3);

        let f = LinearMapExact::new(fp_matrix(5, 2, 2, &[1, 2, 3, 4]));
        let finv = f.invert().unwrap();
        assert!(f.compose(&finv).unwrap().is_identity());
        assert!(finv.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn compose_scalars_mod5() {
        let two = LinearMapExact::new(fp_matrix(5, 1, 1, &[2]));
        let three = LinearMapExact::new(fp_matrix(5, 1, 1, &[3]));
        let one = two.compose(&three).unwrap();
        assert_eq!(one.matrix().get(0, 0), FieldElement::Fp(1));
        assert_eq!(two.tensor_map(&three).matrix().get(0, 0), FieldElement::Fp(1));
        assert_eq!(two.invert().unwrap().matrix().get(0, 0), FieldElement::Fp(3));
    }

    #[test]
    fn kron_matches_four_index_loop() {
        let a = fp_matrix(7, 2, 3, &[1, 2, 0, 4, 5, 6]);
        let b = fp_matrix(7, 3, 2, &[6, 5, 4, 0, 2, 1]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 6);
        assert_eq!(k.cols(), 6);
        let f = gf(7);
        for i in 0..2 {
            for j in 0..3 {
                for s in 0..3 {
                    for t in 0..2 {
                        let expect = f.mul(&a.get(i, j), &b.get(s, t)).unwrap();
                        assert_eq!(k.get(i * 3 + s, j * 2 + t), expect);
                    }
                }
            }
        }
        // identity (x) identity = identity
        let id2 = MatrixExact::identity(gf(5), 2);
        let id3 = MatrixExact::identity(gf(5), 3);
        assert!(id2.kron(&id3).is_identity());
    }

    #[test]
    fn rank_basics() {
        assert_eq!(MatrixExact::identity(gf(5), 7).rank(), 7);
        assert_eq!(MatrixExact::zeros(gf(5), 4, 4).rank(), 0);
        // rank 1: second row is 2x the first (mod 5)
        let m = fp_matrix(5, 2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.transpose().rank(), 1);

        assert_eq!(MatrixExact::identity(FieldSpec::rationals(), 4).rank(), 4);
        let q = q_matrix(3, 3, &["1", "1/2", "0", "2", "1", "0", "0", "0", "5"]);
        assert_eq!(q.rank(), 2);
        assert_eq!(q.transpose().rank(), 2);
    }

    #[test]
    fn invert_rationals_stays_canonical() {
        let q = q_matrix(2, 2, &["1/2", "1/3", "0", "2"]);
        let inv = q.invert().unwrap();
        assert!(q.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&q).unwrap().is_identity());
        for i in 0..2 {
            for j in 0..2 {
                assert!(inv.get(i, j).is_canonical(&FieldSpec::rationals()));
            }
        }
        let singular = q_matrix(2, 2, &["1", "2", "2", "4"]);
        assert!(matches!(singular.invert(), Err(Error::Singular(_))));
        assert!(matches!(
            q_matrix(1, 2, &["1", "2"]).invert(),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn permutation_and_swap() {
        let p = MatrixExact::permutation(gf(5), &[2, 0, 1]);
        // e_0 -> e_2
        assert_eq!(p.get(2, 0), FieldElement::Fp(1));
        assert_eq!(p.rank(), 3);

        let s = MatrixExact::swap_factors(gf(5), 2, 3);
        // e_{i*3+j} -> e_{j*2+i}; check (i,j) = (1,2): index 5 -> 2*2+1 = 5
        assert_eq!(s.get(5, 5), FieldElement::Fp(1));
        // (0,1): 1 -> 1*2+0 = 2
        assert_eq!(s.get(2, 1), FieldElement::Fp(1));
        assert!(s.mul(&MatrixExact::swap_factors(gf(5), 3, 2)).unwrap().is_identity());
    }

    #[test]
    fn zero_dimensional_edges() {
        let z = MatrixExact::zeros(gf(5), 0, 3);
        assert_eq!(z.rank(), 0);
        let w = MatrixExact::zeros(gf(5), 3, 0);
        let prod = w.mul(&z).unwrap();
        assert_eq!((prod.rows(), prod.cols()), (3, 3));
        assert!(prod.is_zero());
        assert!(MatrixExact::identity(gf(5), 0).is_identity());
    }

    #[test]
    fn big_modulus_matmul_is_exact() {
        // near the modulus cap, the deferred-reduction budget drops to a
        // handful of fused multiply-adds per reduction
        let p = 2147483647u64; // 2^31 - 1, prime
        let f = FieldSpec::prime(p).unwrap();
        let n = 9;
        let a = MatrixExact::from_fn(f, n, n, |i, j| {
            FieldElement::Fp(((i as u64 + 3) * (j as u64 + 11) * 238609294) % p)
        })
        .unwrap();
        let b = MatrixExact::from_fn(f, n, n, |i, j| {
            FieldElement::Fp(((i as u64 * 7 + j as u64 + 1) * 1908874353) % p)
        })
        .unwrap();
        let fast = a.mul(&b).unwrap();
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u128;
                for k in 0..n {
                    let FieldElement::Fp(x) = a.get(i, k) else { unreachable!() };
                    let FieldElement::Fp(y) = b.get(k, j) else { unreachable!() };
                    acc += x as u128 * y as u128;
                }
                assert_eq!(fast.get(i, j), FieldElement::Fp((acc % p as u128) as u64));
            }
        }
    }

    #[test]
    fn mismatch_scan_is_column_major() {
        let a = fp_matrix(5, 2, 2, &[1, 2, 3, 4]);
        let mut b = a.clone();
        b.set(0, 1, FieldElement::Fp(0)).unwrap();
        b.set(1, 0, FieldElement::Fp(0)).unwrap();
        // differences at (0,1) and (1,0); column-major order finds column 0 first
        assert_eq!(a.first_mismatch(&b), Some((0, 1)));
        assert_eq!(a.first_mismatch(&a), None);
    }
}
