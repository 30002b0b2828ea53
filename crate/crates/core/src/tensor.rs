//! Dense complex linear algebra for the small dimensions used here (2, 4, 16).
//!
//! Basis convention: a four-qubit basis state `|n_a n_b n_A n_B>` lives at index
//! `8 n_a + 4 n_b + 2 n_A + n_B`, with the ground state `|0>` at index 0 and the
//! excited state `|1>` at index 1 of each qubit. Kronecker products therefore
//! compose as `a ⊗ b ⊗ A ⊗ B`, and the reduced pair `AB` is ordered
//! `{|00>, |01>, |10>, |11>}`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Dimension of the four-qubit Hilbert space.
pub const FULL_DIM: usize = 16;
/// Dimension of a two-qubit Hilbert space.
pub const PAIR_DIM: usize = 4;

const JACOBI_THRESHOLD: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;
const HERMITIAN_TOL: f64 = 1e-10;

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting non-square or non-finite input.
    pub fn from_vec(dim: usize, data: Vec<C64>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::NotSquare { dim, len: data.len() });
        }
        if let Some(index) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    /// Outer product `|u><v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of vectors with different lengths");
        Self::from_fn(u.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus of `M - M†`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length does not match matrix dimension");
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// `<u|M|v>`.
    pub fn sandwich(&self, u: &[C64], v: &[C64]) -> C64 {
        let mv = self.apply(v);
        u.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum()
    }

    /// Restriction of the matrix to the given basis indices, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self[(indices[i], indices[j])])
    }

    /// Inverse of [`submatrix`](Self::submatrix): places `block` into a zero matrix of dimension `dim`.
    pub fn embed(block: &Self, indices: &[usize], dim: usize) -> Self {
        assert_eq!(block.dim, indices.len());
        let mut m = Self::zeros(dim);
        for (i, &r) in indices.iter().enumerate() {
            for (j, &c) in indices.iter().enumerate() {
                m[(r, c)] = block[(i, j)];
            }
        }
        m
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product of different dimensions");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                for (o, b) in out.data[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for row in self.data.chunks_exact(self.dim) {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product: entry `(i*dB + k, j*dB + l)` equals `A(i,j) * B(k,l)`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim, b.dim);
    let n = da * db;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..da {
        for j in 0..da {
            let aij = a[(i, j)];
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Kronecker product of a sequence of factors, left to right.
pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> ComplexMatrix {
    factors
        .into_iter()
        .fold(ComplexMatrix::identity(1), |acc, f| kron(&acc, f))
}

/// Normalized four-qubit state vector over `|n_a n_b n_A n_B>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != FULL_DIM {
            return Err(Error::DimensionMismatch { expected: FULL_DIM, found: amplitudes.len() });
        }
        if let Some(index) = amplitudes.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes })
    }

    /// Wraps amplitudes produced by a norm-preserving map without re-checking the norm.
    pub(crate) fn from_raw(amplitudes: Vec<C64>) -> Self {
        debug_assert_eq!(amplitudes.len(), FULL_DIM);
        Self { amplitudes }
    }

    pub fn basis(index: usize) -> Self {
        let mut amplitudes = vec![ZERO; FULL_DIM];
        amplitudes[index] = ONE;
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Self) -> C64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|<self|other>|²`, insensitive to global phase.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    pub fn expectation(&self, op: &ComplexMatrix) -> C64 {
        op.sandwich(&self.amplitudes, &self.amplitudes)
    }
}

/// Basis index of `|n_a n_b n_A n_B>`.
pub fn basis_index(n_a: usize, n_b: usize, n_cap_a: usize, n_cap_b: usize) -> usize {
    8 * n_a + 4 * n_b + 2 * n_cap_a + n_cap_b
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector belonging to `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        let n = self.eigenvectors.dim();
        (0..n).map(|i| self.eigenvectors[(i, k)]).collect()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `V diag(f(λ)) V†`.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.dim();
        let weights: Vec<C64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| v[(i, k)] * weights[k] * v[(j, k)].conj()).sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_eigenvalues(|l| C64::new(l, 0.0))
    }
}

/// Hermitian eigen-decomposition by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` by rescaling basis
/// vector `q`, then applies a real Givens rotation. Sweeps stop once the
/// off-diagonal Frobenius norm falls below `1e-14 * ||M||_F`.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianSpectrum> {
    let n = m.dim();
    let scale = m.max_abs();
    let deviation = m.hermitian_deviation();
    let allowed = HERMITIAN_TOL * scale;
    if deviation > allowed {
        return Err(Error::NotHermitian { deviation, allowed });
    }
    // Symmetrize so the iteration works on an exactly Hermitian matrix.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            C64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);
    let target = JACOBI_THRESHOLD * a.frobenius_norm();

    let mut converged = false;
    let mut off = off_diagonal_norm(&a);
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        off = off_diagonal_norm(&a);
    }
    if !converged && off > target {
        return Err(Error::NoConvergence { sweeps: JACOBI_MAX_SWEEPS, off_norm: off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermitianSpectrum { eigenvalues, eigenvectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eig(m).map(|s| s.eigenvalues)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    // Negligible against both diagonal entries: drop it.
    if r <= f64::EPSILON * 1e-2 * app.abs().min(aqq.abs()) {
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }

    // Phase step: column q *= phi, row q *= conj(phi), so that a_pq becomes real.
    let phi = apq.conj() / r;
    for k in 0..n {
        a[(k, q)] *= phi;
    }
    for k in 0..n {
        a[(q, k)] *= phi.conj();
    }
    for k in 0..n {
        v[(k, q)] *= phi;
    }

    // Real rotation annihilating the (now real) pivot.
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c - akq * s;
        a[(k, q)] = akp * s + akq * c;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * s + aqk * c;
    }
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c - vkq * s;
        v[(k, q)] = vkp * s + vkq * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(app - t * r, 0.0);
    a[(q, q)] = C64::new(aqq + t * r, 0.0);
}

/// Traces out qubits `a` and `b` of a four-qubit operator, leaving the `AB` block.
pub fn partial_trace_to_ab(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if rho.dim() != FULL_DIM {
        return Err(Error::DimensionMismatch { expected: FULL_DIM, found: rho.dim() });
    }
    Ok(ComplexMatrix::from_fn(PAIR_DIM, |r, c| {
        (0..4).map(|ab| rho[(4 * ab + r, 4 * ab + c)]).sum()
    }))
}

/// Partial transpose on the first qubit (`A`) of a two-qubit operator.
pub fn partial_transpose_a(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    pair_transpose(rho, |i, j, k, l| (2 * k + j, 2 * i + l))
}

/// Partial transpose on the second qubit (`B`) of a two-qubit operator.
pub fn partial_transpose_b(rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    pair_transpose(rho, |i, j, k, l| (2 * i + l, 2 * k + j))
}

fn pair_transpose(
    rho: &ComplexMatrix,
    source: impl Fn(usize, usize, usize, usize) -> (usize, usize),
) -> Result<ComplexMatrix> {
    if rho.dim() != PAIR_DIM {
        return Err(Error::DimensionMismatch { expected: PAIR_DIM, found: rho.dim() });
    }
    Ok(ComplexMatrix::from_fn(PAIR_DIM, |row, col| {
        let (i, j) = (row / 2, row % 2);
        let (k, l) = (col / 2, col % 2);
        rho[source(i, j, k, l)]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&[-1.0, 1.0])
    }

    fn sigma_plus() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m[(1, 0)] = ONE;
        m
    }

    #[test]
    fn kron_identities() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
        assert_eq!(
            kron(&sigma_z(), &i2),
            ComplexMatrix::from_real_diagonal(&[-1.0, -1.0, 1.0, 1.0])
        );
    }

    #[test]
    fn kron_raising_lowering_moves_excitation() {
        let op = kron(&sigma_plus(), &sigma_plus().adjoint());
        // |01> is index 1, |10> index 2
        let mut v = vec![ZERO; 4];
        v[1] = ONE;
        let out = op.apply(&v);
        assert_eq!(out, vec![ZERO, ZERO, ONE, ZERO]);
    }

    #[test]
    fn from_vec_rejects_bad_input() {
        assert!(matches!(
            ComplexMatrix::from_vec(2, vec![ONE; 3]),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            ComplexMatrix::from_vec(1, vec![c(f64::NAN, 0.0)]),
            Err(Error::NonFinite { index: 0 })
        ));
    }

    #[test]
    fn eig_diagonal_and_pauli_x() {
        let s = hermitian_eig(&ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 2.0, 3.0]);

        let x = ComplexMatrix::from_vec(2, vec![ZERO, ONE, ONE, ZERO]).unwrap();
        let s = hermitian_eig(&x).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn eig_two_by_two_quadratic_roots() {
        // roots of λ² − aλ − d² with a = 0.5, d = 0.25
        let m = ComplexMatrix::from_vec(2, vec![c(0.5, 0.0), c(0.25, 0.0), c(0.25, 0.0), ZERO])
            .unwrap();
        let s = hermitian_eig(&m).unwrap();
        let disc: f64 = 0.5 * 0.5 + 4.0 * 0.25 * 0.25;
        assert_abs_diff_eq!(s.eigenvalues[0], (0.5 - disc.sqrt()) / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], (0.5 + disc.sqrt()) / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[0], -0.10355339, epsilon = 1e-8);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.60355339, epsilon = 1e-8);
    }

    #[test]
    fn eig_complex_offdiagonal() {
        // Pauli y: eigenvalues ±1, eigenvectors (1, ±i)/√2
        let y = ComplexMatrix::from_vec(2, vec![ZERO, -I, I, ZERO]).unwrap();
        let s = hermitian_eig(&y).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues[1], 1.0, epsilon = 1e-15);
        assert!(s.reconstruct().max_abs_diff(&y) < 1e-15);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_vec(2, vec![ZERO, ONE, ZERO, ZERO]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eig_zero_matrix() {
        let s = hermitian_eig(&ComplexMatrix::zeros(4)).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 4]);
        assert_eq!(s.eigenvectors, ComplexMatrix::identity(4));
    }

    #[test]
    fn eig_is_deterministic() {
        let m = ComplexMatrix::from_fn(4, |i, j| {
            let x = (i * 4 + j) as f64;
            if i == j {
                c(x.sin(), 0.0)
            } else if i < j {
                c(x.cos(), (x * 0.7).sin())
            } else {
                let y = (j * 4 + i) as f64;
                c(y.cos(), -(y * 0.7).sin())
            }
        });
        let s1 = hermitian_eig(&m).unwrap();
        let s2 = hermitian_eig(&m).unwrap();
        assert_eq!(s1.eigenvalues, s2.eigenvalues);
        assert_eq!(s1.eigenvectors, s2.eigenvectors);
    }

    #[test]
    fn partial_trace_of_ground_state() {
        let rho = PureState::basis(0).projector();
        let ab = partial_trace_to_ab(&rho).unwrap();
        let mut expected = ComplexMatrix::zeros(4);
        expected[(0, 0)] = ONE;
        assert_eq!(ab, expected);
    }

    #[test]
    fn partial_trace_rejects_wrong_dimension() {
        assert!(matches!(
            partial_trace_to_ab(&ComplexMatrix::identity(4)),
            Err(Error::DimensionMismatch { expected: 16, found: 4 })
        ));
    }

    #[test]
    fn partial_transpose_moves_coherence_to_outer_corners() {
        let (a, b, cc, d) = (0.4, 0.3, 0.3, c(0.2, 0.1));
        let mut rho = ComplexMatrix::zeros(4);
        rho[(0, 0)] = c(a, 0.0);
        rho[(1, 1)] = c(b, 0.0);
        rho[(2, 2)] = c(cc, 0.0);
        rho[(1, 2)] = d;
        rho[(2, 1)] = d.conj();
        let pt = partial_transpose_a(&rho).unwrap();
        // <01|ρ|10> = d lands on <11|ρ^TA|00>
        assert_eq!(pt[(3, 0)], d);
        assert_eq!(pt[(0, 3)], d.conj());
        assert_eq!(pt[(1, 2)], ZERO);
        assert_eq!(pt[(2, 1)], ZERO);
        // brute force: permute indices element by element
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(pt[(2 * i + j, 2 * k + l)], rho[(2 * k + j, 2 * i + l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_transpose_of_diagonal_is_identity_map() {
        let rho = ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(partial_transpose_a(&rho).unwrap(), rho);
        assert_eq!(partial_transpose_b(&rho).unwrap(), rho);
    }

    #[test]
    fn partial_transposes_compose_to_full_transpose() {
        let m = ComplexMatrix::from_fn(4, |i, j| c(i as f64, j as f64 * 0.5));
        let both = partial_transpose_b(&partial_transpose_a(&m).unwrap()).unwrap();
        assert_eq!(both, m.transpose());
    }
}
