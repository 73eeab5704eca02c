//! Multi-index views over exact entries.
//!
//! `TensorExact` is a thin reshape/permute layer on the same flat storage as
//! `MatrixExact`. All higher structure maps (actions, coactions, smash
//! products) are assembled by permuting axes and contracting via the matrix
//! kernel, so none of the hot loops live here.

use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::field::{FieldElement, FieldSpec};
use crate::linalg::matrix::{Entries, MatrixExact};

#[derive(Clone, Debug, PartialEq)]
pub struct TensorExact {
    dims: Vec<usize>,
    field: FieldSpec,
    entries: Entries,
}

fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Row-major strides for `dims`.
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Visit source indices 0..n in row-major order of `dims`, handing each
/// one the destination index obtained by applying `out_stride` per axis.
fn scatter(n: usize, dims: &[usize], out_stride: &[usize], mut write: impl FnMut(usize, usize)) {
    let axes = dims.len();
    let mut idx = vec![0usize; axes];
    let mut dst = 0usize;
    for src in 0..n {
        write(src, dst);
        for ax in (0..axes).rev() {
            idx[ax] += 1;
            if idx[ax] < dims[ax] {
                dst += out_stride[ax];
                break;
            }
            idx[ax] = 0;
            dst -= (dims[ax] - 1) * out_stride[ax];
        }
    }
}

impl TensorExact {
    pub fn zeros(field: FieldSpec, dims: &[usize]) -> Self {
        let n = total(dims);
        let entries = match field {
            FieldSpec::Prime(_) => Entries::Fp(vec![0; n]),
            FieldSpec::Rationals => Entries::Rat(vec![BigRational::zero(); n]),
        };
        TensorExact { dims: dims.to_vec(), field, entries }
    }

    pub fn from_map(field: FieldSpec, dims: &[usize], mut f: impl FnMut(&[usize]) -> FieldElement) -> Self {
        let mut t = Self::zeros(field, dims);
        let n = total(dims);
        let mut idx = vec![0usize; dims.len()];
        for flat in 0..n {
            let v = f(&idx);
            match (&mut t.entries, v) {
                (Entries::Fp(d), FieldElement::Fp(e)) => d[flat] = e,
                (Entries::Rat(d), FieldElement::Rat(e)) => d[flat] = e,
                _ => panic!("element does not belong to {field}"),
            }
            // odometer increment, last axis fastest
            for ax in (0..dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
        t
    }

    /// View a matrix as a tensor by splitting its row and column indices.
    /// `row_dims` must multiply to `m.rows()`, `col_dims` to `m.cols()`;
    /// the resulting axis order is row axes then column axes.
    pub fn from_matrix(m: &MatrixExact, row_dims: &[usize], col_dims: &[usize]) -> Self {
        assert_eq!(total(row_dims), m.rows(), "row axes must factor the row count");
        assert_eq!(total(col_dims), m.cols(), "column axes must factor the column count");
        let mut dims = row_dims.to_vec();
        dims.extend_from_slice(col_dims);
        TensorExact { dims, field: m.field(), entries: m.entries().clone() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Reorder axes: output axis `i` is input axis `perm[i]`. One linear
    /// pass over the source with an odometer keeping the destination index
    /// up to date, so no index table is materialized.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dims.len(), "permutation arity mismatch");
        let mut seen = vec![false; perm.len()];
        for &a in perm {
            assert!(a < perm.len() && !seen[a], "invalid axis permutation");
            seen[a] = true;
        }
        let new_dims: Vec<usize> = perm.iter().map(|&a| self.dims[a]).collect();
        let n = total(&self.dims);
        let new_strides = strides(&new_dims);
        // stride in the output of each input axis
        let mut out_stride = vec![0usize; perm.len()];
        for (i, &a) in perm.iter().enumerate() {
            out_stride[a] = new_strides[i];
        }
        let entries = match &self.entries {
            Entries::Fp(d) => {
                let mut out = vec![0u64; n];
                scatter(n, &self.dims, &out_stride, |src, dst| out[dst] = d[src]);
                Entries::Fp(out)
            }
            Entries::Rat(d) => {
                let mut out = vec![BigRational::zero(); n];
                scatter(n, &self.dims, &out_stride, |src, dst| out[dst] = d[src].clone());
                Entries::Rat(out)
            }
        };
        TensorExact { dims: new_dims, field: self.field, entries }
    }

    /// Flatten to a matrix: the first `row_axes` axes become the row index,
    /// the rest the column index (row-major within each group).
    pub fn to_matrix(&self, row_axes: usize) -> MatrixExact {
        self.clone().into_matrix(row_axes)
    }

    /// `to_matrix` without the copy, for owned intermediates.
    pub fn into_matrix(self, row_axes: usize) -> MatrixExact {
        assert!(row_axes <= self.dims.len(), "row axis count out of range");
        let rows = total(&self.dims[..row_axes]);
        let cols = total(&self.dims[row_axes..]);
        match self.entries {
            Entries::Fp(d) => MatrixExact::from_fp_vec(self.field, rows, cols, d),
            Entries::Rat(d) => MatrixExact::from_rat_vec(rows, cols, d),
        }
    }

    /// Contract `axes_a` of `a` against `axes_b` of `b` (paired in order).
    /// Remaining axes appear as a's free axes followed by b's free axes.
    pub fn tensordot(a: &TensorExact, axes_a: &[usize], b: &TensorExact, axes_b: &[usize]) -> TensorExact {
        assert_eq!(a.field, b.field, "tensordot requires one common field");
        assert_eq!(axes_a.len(), axes_b.len(), "contraction arity mismatch");
        for (&x, &y) in axes_a.iter().zip(axes_b) {
            assert_eq!(a.dims[x], b.dims[y], "contracted axis lengths differ");
        }
        let free_a: Vec<usize> = (0..a.dims.len()).filter(|i| !axes_a.contains(i)).collect();
        let free_b: Vec<usize> = (0..b.dims.len()).filter(|i| !axes_b.contains(i)).collect();

        // a -> (free, contracted), b -> (contracted, free), then matmul
        let mut pa = free_a.clone();
        pa.extend_from_slice(axes_a);
        let mut pb = axes_b.to_vec();
        pb.extend_from_slice(&free_b);
        let am = a.permute(&pa).into_matrix(free_a.len());
        let bm = b.permute(&pb).into_matrix(axes_b.len());
        let prod = am.mul(&bm).expect("dimensions agree by construction");

        let mut dims: Vec<usize> = free_a.iter().map(|&i| a.dims[i]).collect();
        dims.extend(free_b.iter().map(|&i| b.dims[i]));
        TensorExact { dims, field: a.field, entries: prod.into_entries() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::LinearMapExact;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn permute_hand_example() {
        // t[i][j][k] = 9i + 3j + k over GF(101), dims (2,3,3)
        let f = gf(101);
        let t = TensorExact::from_map(f, &[2, 3, 3], |ix| {
            FieldElement::Fp((9 * ix[0] + 3 * ix[1] + ix[2]) as u64)
        });
        let u = t.permute(&[2, 0, 1]);
        assert_eq!(u.dims(), &[3, 2, 3]);
        // u[k][i][j] must equal t[i][j][k]; check (k,i,j) = (2,1,0): t[1][0][2] = 11
        let m = u.to_matrix(2);
        assert_eq!(m.get(2 * 2 + 1, 0), FieldElement::Fp(11));
        // identity permutation round-trips
        assert_eq!(t.permute(&[0, 1, 2]), t);
        assert_eq!(u.permute(&[1, 2, 0]), t);
    }

    #[test]
    fn matrix_round_trip() {
        let f = gf(7);
        let m = MatrixExact::from_fn(f, 6, 4, |i, j| FieldElement::Fp(((3 * i + j) % 7) as u64))
            .unwrap();
        let t = TensorExact::from_matrix(&m, &[2, 3], &[4]);
        assert_eq!(t.to_matrix(2), m);
        // splitting then merging along a different boundary transposes blocks
        let swapped = t.permute(&[1, 0, 2]).to_matrix(2);
        assert_eq!(swapped.get(0 * 2 + 1, 1), m.get(1 * 3 + 0, 1));
    }

    #[test]
    fn tensordot_is_matmul_on_matrices() {
        let f = gf(11);
        let a = MatrixExact::from_fn(f, 3, 4, |i, j| FieldElement::Fp(((i * 4 + j) % 11) as u64))
            .unwrap();
        let b = MatrixExact::from_fn(f, 4, 2, |i, j| FieldElement::Fp(((i * 2 + j + 5) % 11) as u64))
            .unwrap();
        let ta = TensorExact::from_matrix(&a, &[3], &[4]);
        let tb = TensorExact::from_matrix(&b, &[4], &[2]);
        let prod = TensorExact::tensordot(&ta, &[1], &tb, &[0]).to_matrix(1);
        assert_eq!(prod, a.mul(&b).unwrap());
    }

    #[test]
    fn tensordot_matches_kron_contraction() {
        // ((A (x) B) v) reshaped equals tensordot over the paired axes
        let f = gf(13);
        let a = MatrixExact::from_fn(f, 2, 2, |i, j| FieldElement::Fp((i * 2 + j + 1) as u64)).unwrap();
        let b = MatrixExact::from_fn(f, 3, 3, |i, j| FieldElement::Fp(((2 * i + j) % 13) as u64)).unwrap();
        let v = MatrixExact::from_fn(f, 6, 1, |i, _| FieldElement::Fp((i + 1) as u64)).unwrap();
        let direct = LinearMapExact::new(a.kron(&b))
            .compose(&LinearMapExact::new(v.clone()))
            .unwrap();
        let ta = TensorExact::from_matrix(&a, &[2], &[2]);
        let tb = TensorExact::from_matrix(&b, &[3], &[3]);
        let tv = TensorExact::from_matrix(&v, &[2, 3], &[1]);
        let step = TensorExact::tensordot(&ta, &[1], &tv, &[0]); // dims (2,3,1)
        let out = TensorExact::tensordot(&tb, &[1], &step, &[1]); // dims (3,2,1)
        let out = out.permute(&[1, 0, 2]).to_matrix(2);
        assert_eq!(out, direct.into_matrix());
    }
}
