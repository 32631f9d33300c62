//! Dense complex Hermitian linear algebra for small multi-qubit systems.
//!
//! Matrices are stored row-major as flat `Vec<Complex64>`. The eigensolver is
//! a cyclic Jacobi iteration on the full complex Hermitian matrix, chosen for
//! determinism and self-containment; it is comfortably fast for the
//! dimensions this crate needs (up to `2^12`, with the heavy paths staying
//! below `2^8`).
//!
//! Vectorization convention used by [`Superoperator`]: column stacking,
//! `vec(rho)[j*d + i] = rho[i][j]`. Tensor products place the first factor on
//! the most significant index digits, so qubit site 0 is the leftmost factor.

use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

/// Largest supported register size for dense multi-qubit operations.
pub const MAX_QUBITS: usize = 12;

/// Hermiticity validation tolerance.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Dense complex square matrix with Hermitian-oriented helpers.
///
/// The type does not enforce Hermiticity on every write; operations with a
/// Hermitian precondition validate it explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

/// Role alias for matrices used as quantum states (unit trace, PSD).
pub type DensityMatrix = HermitianMatrix;

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * dim + i] = Complex64::new(e, 0.0);
        }
        m
    }

    /// Projector `|psi><psi|` onto a (not necessarily normalized) state vector.
    pub fn from_pure_state(amplitudes: &[Complex64]) -> Self {
        let dim = amplitudes.len();
        Self::from_fn(dim, |i, j| amplitudes[i] * amplitudes[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.dim + j] = value;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * factor)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-norm distance to another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `Tr[self * other]`, real part (exact for Hermitian pairs).
    pub fn expectation(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut acc = Complex64::ZERO;
        for i in 0..d {
            for k in 0..d {
                acc += self.get(i, k) * other.get(k, i);
            }
        }
        acc.re
    }

    /// Max deviation from `A = A^dag`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn validate_hermitian(&self) -> Result<()> {
        let dev = self.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(())
    }

    /// Checks unit trace (1e-10) and spectrum >= -1e-10 on top of Hermiticity.
    pub fn validate_density(&self) -> Result<()> {
        self.validate_hermitian()?;
        let tr = self.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(Error::NotDensityMatrix {
                reason: format!("trace = {tr}"),
            });
        }
        let eigs = eigvalsh(self)?;
        if let Some(&lo) = eigs.first() {
            if lo < -1e-10 {
                return Err(Error::NotDensityMatrix {
                    reason: format!("negative eigenvalue {lo:e}"),
                });
            }
        }
        Ok(())
    }
}

/// Kronecker product; the first factor occupies the most significant digits.
pub fn tensor(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut out = HermitianMatrix::zeros(d);
    for ia in 0..da {
        for ja in 0..da {
            let x = a.get(ia, ja);
            if x == Complex64::ZERO {
                continue;
            }
            for ib in 0..db {
                for jb in 0..db {
                    out.set(ia * db + ib, ja * db + jb, x * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Tensor power `m^{(x) n}` with `m^0 = 1x1 identity`.
pub fn tensor_power(m: &HermitianMatrix, n: usize) -> HermitianMatrix {
    let mut out = HermitianMatrix::identity(1);
    for _ in 0..n {
        out = tensor(&out, m);
    }
    out
}

fn flat_index(digits: &[usize], dims: &[usize]) -> usize {
    digits
        .iter()
        .zip(dims)
        .fold(0, |acc, (&digit, &dim)| acc * dim + digit)
}

/// Trace out every site not listed in `keep`; kept sites preserve their order.
pub fn partial_trace(
    rho: &DensityMatrix,
    site_dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix> {
    let total: usize = site_dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: total,
        });
    }
    for &site in keep {
        if site >= site_dims.len() {
            return Err(Error::SiteOutOfRange {
                site,
                sites: site_dims.len(),
            });
        }
    }
    let traced: Vec<usize> = (0..site_dims.len()).filter(|s| !keep.contains(s)).collect();
    let keep_dims: Vec<usize> = keep.iter().map(|&s| site_dims[s]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&s| site_dims[s]).collect();
    let d_keep: usize = keep_dims.iter().product();
    let d_traced: usize = traced_dims.iter().product();

    let n_sites = site_dims.len();
    let mut digits = vec![0usize; n_sites];
    let mut out = HermitianMatrix::zeros(d_keep);
    let mut keep_row = vec![0usize; keep.len()];
    let mut keep_col = vec![0usize; keep.len()];
    let mut tr_digits = vec![0usize; traced.len()];

    for row_out in 0..d_keep {
        decompose(row_out, &keep_dims, &mut keep_row);
        for col_out in 0..d_keep {
            decompose(col_out, &keep_dims, &mut keep_col);
            let mut acc = Complex64::ZERO;
            for t in 0..d_traced {
                decompose(t, &traced_dims, &mut tr_digits);
                for (pos, &site) in keep.iter().enumerate() {
                    digits[site] = keep_row[pos];
                }
                for (pos, &site) in traced.iter().enumerate() {
                    digits[site] = tr_digits[pos];
                }
                let row = flat_index(&digits, site_dims);
                for (pos, &site) in keep.iter().enumerate() {
                    digits[site] = keep_col[pos];
                }
                let col = flat_index(&digits, site_dims);
                acc += rho.get(row, col);
            }
            out.set(row_out, col_out, acc);
        }
    }
    Ok(out)
}

fn decompose(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for pos in (0..dims.len()).rev() {
        out[pos] = index % dims[pos];
        index /= dims[pos];
    }
}

/// Result of [`eig_hermitian`]: ascending eigenvalues and orthonormal
/// eigenvector columns (`vectors[i*dim + j]` = component `i` of eigenvector `j`).
#[derive(Debug, Clone)]
pub struct Eigendecomposition {
    pub values: Vec<f64>,
    pub vectors: HermitianMatrix,
}

impl Eigendecomposition {
    /// Rebuilds `V diag(values) V^dag` (test oracle for the solver).
    pub fn reconstruct(&self) -> HermitianMatrix {
        let d = self.values.len();
        HermitianMatrix::from_fn(d, |i, j| {
            (0..d)
                .map(|k| {
                    self.vectors.get(i, k)
                        * Complex64::new(self.values[k], 0.0)
                        * self.vectors.get(j, k).conj()
                })
                .sum()
        })
    }
}

const JACOBI_MAX_SWEEPS: usize = 60;

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Eigenvalues come back ascending; ties keep a deterministic (stable) order.
/// Validates Hermiticity first and converges when the off-diagonal Frobenius
/// norm drops below `1e-13` (relative to the matrix scale for norms above 1).
pub fn eig_hermitian(m: &HermitianMatrix) -> Result<Eigendecomposition> {
    m.validate_hermitian()?;
    jacobi(m, true)
}

/// Eigenvalues only (skips eigenvector accumulation, roughly halving work).
pub fn eigvalsh(m: &HermitianMatrix) -> Result<Vec<f64>> {
    if m.hermiticity_deviation() > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation: m.hermiticity_deviation(),
        });
    }
    Ok(jacobi(m, false)?.values)
}

fn off_diag_frobenius(a: &HermitianMatrix) -> f64 {
    let d = a.dim();
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                acc += a.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(m: &HermitianMatrix, want_vectors: bool) -> Result<Eigendecomposition> {
    let d = m.dim();
    let mut a = m.clone();
    let mut v = if want_vectors {
        HermitianMatrix::identity(d)
    } else {
        HermitianMatrix::zeros(0)
    };

    let frob = m.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tol = 1e-13 * frob.max(1.0);

    let mut converged = d < 2 || off_diag_frobenius(&a) < tol;
    let mut sweeps = 0;
    while !converged {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a.get(p, q);
                let r = apq.norm();
                // skip rotations that cannot move the off-diagonal mass
                if r < tol / (d as f64) {
                    continue;
                }
                let phase = apq / r;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sw = phase * s; // s * e^{i phi}
                let swc = sw.conj();

                // A <- U^dag A, rows p and q
                for j in 0..d {
                    let apj = a.get(p, j);
                    let aqj = a.get(q, j);
                    a.set(p, j, c * apj - sw * aqj);
                    a.set(q, j, s * apj + phase * (c * aqj));
                }
                // A <- A U, columns p and q
                for i in 0..d {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, c * aip - swc * aiq);
                    a.set(i, q, s * aip + phase.conj() * (c * aiq));
                }
                // numerical hygiene on the touched block
                let app_new = a.get(p, p);
                let aqq_new = a.get(q, q);
                a.set(p, p, Complex64::new(app_new.re, 0.0));
                a.set(q, q, Complex64::new(aqq_new.re, 0.0));
                a.set(q, p, a.get(p, q).conj());

                if want_vectors {
                    for i in 0..d {
                        let vip = v.get(i, p);
                        let viq = v.get(i, q);
                        v.set(i, p, c * vip - swc * viq);
                        v.set(i, q, s * vip + phase.conj() * (c * viq));
                    }
                }
            }
        }
        sweeps += 1;
        converged = off_diag_frobenius(&a) < tol;
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .re
            .partial_cmp(&a.get(j, j).re)
            .unwrap()
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = if want_vectors {
        HermitianMatrix::from_fn(d, |i, j| v.get(i, order[j]))
    } else {
        HermitianMatrix::zeros(0)
    };
    Ok(Eigendecomposition { values, vectors })
}

/// Superoperator on a `d`-dimensional system, stored as a dense `d^2 x d^2`
/// matrix acting on column-stacked density matrices.
#[derive(Debug, Clone)]
pub struct Superoperator {
    dim: usize,
    mat: Vec<Complex64>,
}

impl Superoperator {
    pub fn identity(dim: usize) -> Self {
        let d2 = dim * dim;
        let mut mat = vec![Complex64::ZERO; d2 * d2];
        for i in 0..d2 {
            mat[i * d2 + i] = Complex64::ONE;
        }
        Self { dim, mat }
    }

    /// Builds the superoperator from the map's action on the matrix units
    /// `|k><l|`; `action` must be the linear extension of the channel.
    pub fn from_basis_action(
        dim: usize,
        mut action: impl FnMut(&HermitianMatrix) -> HermitianMatrix,
    ) -> Self {
        let d2 = dim * dim;
        let mut mat = vec![Complex64::ZERO; d2 * d2];
        for l in 0..dim {
            for k in 0..dim {
                let mut unit = HermitianMatrix::zeros(dim);
                unit.set(k, l, Complex64::ONE);
                let image = action(&unit);
                let col = l * dim + k;
                for j in 0..dim {
                    for i in 0..dim {
                        mat[(j * dim + i) * d2 + col] = image.get(i, j);
                    }
                }
            }
        }
        Self { dim, mat }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.mat[row * self.dim * self.dim + col]
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d2 = self.dim * self.dim;
        let mut mat = vec![Complex64::ZERO; d2 * d2];
        for i in 0..d2 {
            for k in 0..d2 {
                let a = self.mat[i * d2 + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..d2 {
                    mat[i * d2 + j] += a * other.mat[k * d2 + j];
                }
            }
        }
        Self { dim: self.dim, mat }
    }

    /// Applies the map to a density matrix of matching dimension.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: rho.dim(),
            });
        }
        let d = self.dim;
        let d2 = d * d;
        let mut vec_out = vec![Complex64::ZERO; d2];
        for (row, out) in vec_out.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for l in 0..d {
                for k in 0..d {
                    let s = self.mat[row * d2 + l * d + k];
                    if s != Complex64::ZERO {
                        acc += s * rho.get(k, l);
                    }
                }
            }
            *out = acc;
        }
        Ok(HermitianMatrix::from_fn(d, |i, j| vec_out[j * d + i]))
    }

    /// Applies this single-qubit map to one site of an `n`-qubit state.
    ///
    /// Site 0 is the leftmost tensor factor (most significant index bits).
    pub fn apply_on_site(&self, rho: &DensityMatrix, site: usize) -> Result<DensityMatrix> {
        assert_eq!(self.dim, 2, "apply_on_site expects a single-qubit map");
        let total = rho.dim();
        if !total.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: total.next_power_of_two(),
                got: total,
            });
        }
        let n = total.trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                qubits: n,
                max: MAX_QUBITS,
            });
        }
        if site >= n {
            return Err(Error::SiteOutOfRange { site, sites: n });
        }
        let shift = n - 1 - site;
        let low_mask = (1usize << shift) - 1;
        let half = total / 2;
        let idx = |rest: usize, bit: usize| -> usize {
            ((rest & !low_mask) << 1) | (bit << shift) | (rest & low_mask)
        };

        let mut out = HermitianMatrix::zeros(total);
        for x in 0..half {
            for y in 0..half {
                // gather the 2x2 block with the site bits free
                let mut block = [Complex64::ZERO; 4];
                for s_row in 0..2 {
                    for s_col in 0..2 {
                        block[s_col * 2 + s_row] = rho.get(idx(x, s_row), idx(y, s_col));
                    }
                }
                for s_row in 0..2 {
                    for s_col in 0..2 {
                        let row = s_col * 2 + s_row;
                        let mut acc = Complex64::ZERO;
                        for (col, &b) in block.iter().enumerate() {
                            acc += self.mat[row * 4 + col] * b;
                        }
                        out.set(idx(x, s_row), idx(y, s_col), acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the single-qubit map to every site in turn.
    pub fn apply_on_all_sites(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let n = rho.dim().trailing_zeros() as usize;
        let mut state = rho.clone();
        for site in 0..n {
            state = self.apply_on_site(&state, site)?;
        }
        Ok(state)
    }

    /// Unnormalized Choi matrix `sum_{kl} |k><l| (x) S(|k><l|)`.
    pub fn choi(&self) -> HermitianMatrix {
        let d = self.dim;
        let mut out = HermitianMatrix::zeros(d * d);
        for k in 0..d {
            for l in 0..d {
                let col = l * d + k;
                for j in 0..d {
                    for i in 0..d {
                        let val = self.mat[(j * d + i) * d * d + col];
                        out.set(k * d + i, l * d + j, val);
                    }
                }
            }
        }
        out
    }
}

/// One sample of a standard complex Gaussian (Box-Muller).
fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    let radius = (-2.0 * u1.ln()).sqrt();
    let angle = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(radius * angle.cos(), radius * angle.sin())
}

/// Haar-random pure state vector of the given dimension.
pub fn haar_random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Haar-random unitary via Gram-Schmidt on a Gaussian matrix.
pub fn haar_random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        for prev in &cols {
            let overlap: Complex64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
            for (x, p) in v.iter_mut().zip(prev) {
                *x -= overlap * p;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for x in v.iter_mut() {
                *x /= norm;
            }
            cols.push(v);
        }
    }
    HermitianMatrix::from_fn(dim, |i, j| cols[j][i])
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianMatrix {
    let g = HermitianMatrix::from_fn(dim, |_, _| complex_gaussian(rng));
    g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0))
}

/// Random full-rank density matrix (normalized Wishart `G G^dag / Tr`).
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = HermitianMatrix::from_fn(dim, |_, _| complex_gaussian(rng));
    let w = g.matmul(&g.adjoint());
    let tr = w.trace().re;
    w.scale(Complex64::new(1.0 / tr, 0.0))
}
