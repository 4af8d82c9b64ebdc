//! Minimal dense linear algebra: a row-major matrix and a cyclic Jacobi
//! eigensolver for symmetric matrices. Deterministic by construction (fixed
//! sweep order, index-stable sorting), which keeps spectra and SDP iterates
//! reproducible across runs.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Default + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Default + 'static
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self[(i, i)];
        }
        t
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, &x| acc + x * x)
            .sqrt()
    }

    pub fn scale(&self, s: T) -> Self {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = *x * s;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = *x + *y;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = *x - *y;
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Frobenius inner product `Σ A_ij B_ij`.
    pub fn dot(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{:>12.6} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Eigendecomposition of a symmetric matrix.
pub struct EigenDecomposition<T> {
    /// Eigenvalues in descending order.
    pub values: Vec<T>,
    /// Orthonormal eigenvectors; column `j` pairs with `values[j]`.
    pub vectors: Matrix<T>,
}

/// Cyclic Jacobi iteration: row-major sweeps over the strict upper triangle
/// until the off-diagonal Frobenius norm drops below `tol`.
///
/// Always succeeds for symmetric input; `max_sweeps` only guards against
/// non-symmetric misuse.
pub fn jacobi_eigen<T: Real>(a: &Matrix<T>, tol: T, max_sweeps: usize) -> EigenDecomposition<T> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "jacobi_eigen needs a square matrix");
    let mut a = a.clone();
    let mut v = Matrix::identity(n);
    let half = T::from_f64(0.5).unwrap();

    for _sweep in 0..max_sweeps {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + a[(p, q)] * a[(p, q)];
            }
        }
        let two = T::from_f64(2.0).unwrap();
        if (two * off).sqrt() <= tol {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                // stable rotation (Numerical Recipes 11.1)
                let theta = half * (a[(q, q)] - a[(p, p)]) / apq;
                let t = if theta.abs() > T::from_f64(1e150).unwrap() {
                    // avoid overflow in θ²; rotation angle ≈ 1/(2θ)
                    half / theta
                } else {
                    let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                let h = t * apq;

                a[(p, p)] = a[(p, p)] - h;
                a[(q, q)] = a[(q, q)] + h;
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[(i, p)];
                        let aiq = a[(i, q)];
                        a[(i, p)] = aip - s * (aiq + tau * aip);
                        a[(i, q)] = aiq + s * (aip - tau * aiq);
                        a[(p, i)] = a[(i, p)];
                        a[(q, i)] = a[(i, q)];
                    }
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip - s * (viq + tau * vip);
                    v[(i, q)] = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    // sort descending; ties broken by original index for determinism
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .partial_cmp(&a[(i, i)])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Matrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    EigenDecomposition { values, vectors }
}

/// Largest eigenvalue of a symmetric matrix.
pub fn max_eigenvalue<T: Real>(a: &Matrix<T>, tol: T) -> T {
    let dec = jacobi_eigen(a, tol, 60);
    dec.values[0]
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue<T: Real>(a: &Matrix<T>, tol: T) -> T {
    let dec = jacobi_eigen(a, tol, 60);
    *dec.values.last().expect("nonempty matrix")
}

/// Projects a symmetric matrix onto the positive semidefinite cone by
/// clamping negative eigenvalues to zero.
pub fn project_psd<T: Real>(a: &Matrix<T>, tol: T) -> Matrix<T> {
    let n = a.rows();
    let dec = jacobi_eigen(a, tol, 60);
    let mut out = Matrix::zeros(n, n);
    for (k, &lam) in dec.values.iter().enumerate() {
        if lam <= T::zero() {
            continue;
        }
        for i in 0..n {
            let vik = dec.vectors[(i, k)];
            if vik == T::zero() {
                continue;
            }
            for j in 0..n {
                out[(i, j)] = out[(i, j)] + lam * vik * dec.vectors[(j, k)];
            }
        }
    }
    // re-symmetrize against rounding drift
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = (out[(i, j)] + out[(j, i)]) * T::from_f64(0.5).unwrap();
            out[(i, j)] = avg;
            out[(j, i)] = avg;
        }
    }
    out
}
