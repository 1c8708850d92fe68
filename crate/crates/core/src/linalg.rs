//! Dense complex linear algebra helpers shared by every module.
//!
//! Everything is backed by nalgebra on `DMatrix<Complex<f64>>`. Group orders
//! are capped at desk scale, so dense decompositions are always affordable.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type Cx = Complex<f64>;
pub type CMat = DMatrix<Cx>;
pub type CVec = DVector<Cx>;

pub fn cx(re: f64, im: f64) -> Cx {
    Complex::new(re, im)
}

/// Deterministic RNG; all randomness in the crate flows through explicit seeds.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive a child seed from a parent seed and a branch index (splitmix64 step).
pub fn derive_seed(parent: u64, branch: u64) -> u64 {
    let mut z = parent ^ branch.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Squared Hilbert–Schmidt norm: tr(A*A) = Σ |a_ij|².
pub fn hs_norm_sq(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

pub fn hs_norm(m: &CMat) -> f64 {
    hs_norm_sq(m).sqrt()
}

/// Trace inner product ⟨A, B⟩ = tr(B*A) = Σ a_ij conj(b_ij).
pub fn hs_inner(a: &CMat, b: &CMat) -> Cx {
    a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
}

/// Operator norm (largest singular value).
pub fn op_norm(m: &CMat) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    sv.iter().cloned().fold(0.0, f64::max)
}

/// Trace norm (sum of singular values).
pub fn trace_norm(m: &CMat) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    sv.iter().sum()
}

pub fn hermitian_part(m: &CMat) -> CMat {
    (m + m.adjoint()).scale(0.5)
}

/// How far a matrix is from being Hermitian, in HS norm.
pub fn hermiticity_drift(m: &CMat) -> f64 {
    hs_norm(&(m - m.adjoint()))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    let eig = m.clone().symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Full Hermitian eigendecomposition: (eigenvalues ascending, matching eigenvector columns).
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let eig = m.clone().symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vecs = CMat::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &eig.eigenvectors.column(i));
    }
    (vals, vecs)
}

pub fn min_eig_hermitian(m: &CMat) -> f64 {
    hermitian_eigenvalues(m)
        .first()
        .cloned()
        .unwrap_or(0.0)
}

/// Unitary factor of the polar decomposition A = U·P (U = W V* from the SVD).
pub fn polar_unitary(m: &CMat) -> CMat {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("svd with u");
    let v_t = svd.v_t.expect("svd with v_t");
    u * v_t
}

/// exp(i·scale·H) for Hermitian H, through the eigendecomposition.
pub fn exp_i_hermitian(h: &CMat, scale: f64) -> CMat {
    let (vals, vecs) = hermitian_eigen(h);
    let n = h.nrows();
    let mut d = CMat::zeros(n, n);
    for (j, lam) in vals.iter().enumerate() {
        d[(j, j)] = Cx::from_polar(1.0, scale * lam);
    }
    &vecs * d * vecs.adjoint()
}

/// Ginibre matrix: independent standard complex Gaussian entries.
pub fn random_ginibre<R: Rng>(n: usize, rng: &mut R) -> CMat {
    CMat::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        cx(re, im).scale(std::f64::consts::FRAC_1_SQRT_2)
    })
}

/// GUE-style random Hermitian matrix.
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let g = random_ginibre(n, rng);
    hermitian_part(&g)
}

/// Haar-ish random unitary: QR of a Ginibre matrix with the R diagonal phase fixed.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let g = random_ginibre(n, rng);
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    let mut phase = CMat::zeros(n, n);
    for j in 0..n {
        let d = r[(j, j)];
        phase[(j, j)] = if d.norm() > 0.0 { d / d.norm() } else { cx(1.0, 0.0) };
    }
    q * phase
}

/// Max entrywise distance between two matrices.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
