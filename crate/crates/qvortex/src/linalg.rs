//! Minimal dense complex linear algebra: just enough for the Hamiltonian
//! oracle and the unitarity checks.
//!
//! The eigensolver is a cyclic complex Jacobi iteration for Hermitian
//! matrices.  Each sweep annihilates every off-diagonal pair `(p, q)` with a
//! unitary plane rotation
//!
//! ```text
//! U = [[c, s], [−s̄, c]],     s = t·c·β/|β|,   c = 1/√(1+t²),
//! t = sign(ζ)/(|ζ| + √(1+ζ²)),   ζ = (A_qq − A_pp)/(2|β|),   β = A_pq,
//! ```
//!
//! the classic choice that keeps rotation angles small and converges
//! quadratically.  Matrices here are tiny (dimension ≤ a few hundred), so
//! Jacobi's `O(n³)` sweeps are more than fast enough and come with excellent
//! orthogonality of the accumulated eigenvectors.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::fmath::sqrt;
use crate::{Error, Result};

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    /// Builds an `n × n` matrix from `f(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(cols: &[Vec<C64>]) -> Result<Self> {
        let n = cols.len();
        for col in cols {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: col.len(),
                });
            }
        }
        Ok(Self::from_fn(n, |i, j| cols[j][i]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.n).map(|i| self.at(i, j)).collect()
    }

    pub fn adjoint(&self) -> CMatrix {
        Self::from_fn(self.n, |i, j| self.at(j, i).conj())
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.at(i, k);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.at(i, j) + a * rhs.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut out = vec![C64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..self.n {
                acc += self.at(i, j) * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    /// Largest entrywise deviation from `rhs`.
    pub fn max_abs_diff(&self, rhs: &CMatrix) -> f64 {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `A†A − 1`; zero iff the matrix is unitary.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.adjoint().mul(self);
        gram.max_abs_diff(&CMatrix::identity(self.n))
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns the eigenvalues in ascending order and a unitary matrix whose
/// `k`-th column is the eigenvector of the `k`-th eigenvalue, so that
/// `A = Q diag(λ) Q†`.  The Hermitian part of the input is what gets
/// diagonalized; the caller is responsible for the input actually being
/// Hermitian (the oracle's Hamiltonians are by construction).
pub fn eigh(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = a.dim();
    let mut m = a.clone();
    let mut q = CMatrix::identity(n);
    if n == 0 {
        return (Vec::new(), q);
    }
    let scale = 1.0 + m.frobenius_norm();
    let tol = 1e-13 * scale;
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += m.at(i, j).norm_sqr();
                }
            }
        }
        if sqrt(off) < tol {
            break;
        }
        for p in 0..n {
            for qi in (p + 1)..n {
                let beta = m.at(p, qi);
                let beta_mag = beta.norm();
                if beta_mag < 1e-300 {
                    continue;
                }
                let phase = beta / beta_mag;
                let zeta = (m.at(qi, qi).re - m.at(p, p).re) / (2.0 * beta_mag);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    let sign = if zeta > 0.0 { 1.0 } else { -1.0 };
                    sign / (zeta.abs() + sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = phase * (t * c);
                // columns: A ← A·U
                for i in 0..n {
                    let ap = m.at(i, p);
                    let aq = m.at(i, qi);
                    m.set(i, p, c * ap - s.conj() * aq);
                    m.set(i, qi, s * ap + c * aq);
                }
                // rows: A ← U†·A
                for j in 0..n {
                    let ap = m.at(p, j);
                    let aq = m.at(qi, j);
                    m.set(p, j, c * ap - s * aq);
                    m.set(qi, j, s.conj() * ap + c * aq);
                }
                // the rotation zeroes this pair analytically
                m.set(p, qi, C64::new(0.0, 0.0));
                m.set(qi, p, C64::new(0.0, 0.0));
                // eigenvector accumulation: Q ← Q·U
                for i in 0..n {
                    let qp = q.at(i, p);
                    let qq = q.at(i, qi);
                    q.set(i, p, c * qp - s.conj() * qq);
                    q.set(i, qi, s * qp + c * qq);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.at(i, i).re.partial_cmp(&m.at(j, j).re).unwrap());
    let eigvals: Vec<f64> = order.iter().map(|&i| m.at(i, i).re).collect();
    let vectors = CMatrix::from_fn(n, |i, j| q.at(i, order[j]));
    (eigvals, vectors)
}
