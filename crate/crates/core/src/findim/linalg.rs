//! Dense matrices, vectors and structure-constant tensors over an exact
//! scalar ring. Dimensions stay in single digits, so everything is plain
//! dense storage.

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = vec![S::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.get(i, j);
                if !c.is_zero() && !x[j].is_zero() {
                    out[i] = out[i].clone() + c.clone() * x[j].clone();
                }
            }
        }
        out
    }

    pub fn mul_mat(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, other.rows, "matrix-matrix shape mismatch");
        let mut out: Mat<S> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) =
                            out.get(i, j).clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn scale(&self, c: &S) -> Mat<S> {
        let mut out = self.clone();
        for a in &mut out.data {
            *a = a.clone() * c.clone();
        }
        out
    }

    pub fn neg(&self) -> Mat<S> {
        self.scale(&-S::one())
    }

    /// `self^k` for a square matrix; `k = 0` is the identity.
    pub fn pow(&self, k: usize) -> Mat<S> {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul_mat(self);
        }
        out
    }
}

/// Structure-constant tensor of one binary product on a `d`-dimensional
/// space: `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct StructureTensor<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> StructureTensor<S> {
    pub fn zeros(dim: usize) -> Self {
        StructureTensor {
            dim,
            data: vec![S::zero(); dim * dim * dim],
        }
    }

    /// Builds from nested arrays `c[i][j][k]`.
    pub fn from_nested(c: Vec<Vec<Vec<S>>>) -> Self {
        let dim = c.len();
        assert!(
            c.iter()
                .all(|p| p.len() == dim && p.iter().all(|r| r.len() == dim)),
            "structure tensor must be dim×dim×dim"
        );
        StructureTensor {
            dim,
            data: c.into_iter().flatten().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut S {
        &mut self.data[(i * self.dim + j) * self.dim + k]
    }

    /// The product `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<S> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.dim, "left factor has wrong dimension");
        assert_eq!(y.len(), self.dim, "right factor has wrong dimension");
        let mut out = vec![S::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for k in 0..self.dim {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + c.clone() * xy.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &StructureTensor<S>) -> StructureTensor<S> {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn scale(&self, c: &S) -> StructureTensor<S> {
        let mut out = self.clone();
        for a in &mut out.data {
            *a = a.clone() * c.clone();
        }
        out
    }
}

pub fn vec_add<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .map(|(a, b)| a.clone() + b.clone())
        .collect()
}

pub fn vec_sub<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .map(|(a, b)| a.clone() - b.clone())
        .collect()
}

pub fn vec_scale<S: Scalar>(x: &[S], c: &S) -> Vec<S> {
    x.iter().map(|a| a.clone() * c.clone()).collect()
}

pub fn vec_is_zero<S: Scalar>(x: &[S]) -> bool {
    x.iter().all(S::is_zero)
}

/// The `i`-th standard basis vector of dimension `d`.
pub fn basis_vec<S: Scalar>(d: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); d];
    v[i] = S::one();
    v
}

/// Calls `f` on every tuple in `{0, …, d−1}ⁿ` in lexicographic order.
pub fn for_each_tuple(d: usize, n: usize, mut f: impl FnMut(&[usize])) {
    if d == 0 {
        return;
    }
    let mut tuple = vec![0usize; n];
    loop {
        f(&tuple);
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < d {
                break;
            }
            tuple[pos] = 0;
            if pos == 0 {
                return;
            }
        }
        if n == 0 {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rat;

    #[test]
    fn matrix_power_and_products() {
        let m = Mat::<Rat>::from_rows(vec![
            vec![int(0), int(1)],
            vec![int(0), int(0)],
        ]);
        assert_eq!(m.pow(0), Mat::identity(2));
        assert_eq!(m.pow(2), Mat::zero(2, 2));
        assert_eq!(m.mul_vec(&[int(3), int(5)]), vec![int::<Rat>(5), int(0)]);
    }

    #[test]
    fn tuple_enumeration_counts() {
        let mut count = 0;
        for_each_tuple(3, 2, |_| count += 1);
        assert_eq!(count, 9);
        let mut none = 0;
        for_each_tuple(0, 2, |_| none += 1);
        assert_eq!(none, 0);
        let mut empty = 0;
        for_each_tuple(4, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
