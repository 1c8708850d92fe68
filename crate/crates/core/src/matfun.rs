//! Matrix-valued functions f: G → M_t(ℂ), their Fourier transforms,
//! convolution, adjoint, the U² norm, and the constructor zoo used by the
//! tests (homomorphisms, perturbations, clipped matrix entries, the
//! carry-gadget counterexample on ℤ_{3^k}).

use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{build_group, GroupSpec, GroupTable};
use crate::linalg::{
    cx, exp_i_hermitian, hs_norm, hs_norm_sq, identity, op_norm, random_hermitian,
    random_unitary, seeded_rng, derive_seed, CMat, Cx,
};
use crate::rep::{Irrep, IrrepSet};

/// Unitarity certification tolerance: max ‖f(x)f(x)* − I‖_HS allowed.
pub const UNITARY_CERT_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct MatFn {
    pub group: Arc<GroupTable>,
    pub t: usize,
    pub values: Vec<CMat>,
    pub unitary_certified: bool,
}

impl MatFn {
    /// Wrap raw values; the unitarity flag is measured, never assumed.
    pub fn new(group: Arc<GroupTable>, values: Vec<CMat>) -> Result<Self> {
        let n = group.n();
        if values.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} values for group of order {n}",
                values.len()
            )));
        }
        let t = values[0].nrows();
        if values.iter().any(|m| m.nrows() != t || m.ncols() != t) {
            return Err(Error::DimensionMismatch("non-uniform value shapes".into()));
        }
        let mut f = MatFn { group, t, values, unitary_certified: false };
        f.unitary_certified = f.measure_unitarity() <= UNITARY_CERT_TOL;
        Ok(f)
    }

    /// Largest ‖f(x)f(x)* − I‖_HS over the group.
    pub fn measure_unitarity(&self) -> f64 {
        let eye = identity(self.t);
        self.values
            .iter()
            .map(|m| hs_norm(&(m * m.adjoint() - &eye)))
            .fold(0.0, f64::max)
    }

    /// ‖f‖² = E_x ‖f(x)‖²_HS.
    pub fn norm_sq(&self) -> f64 {
        let n = self.group.n() as f64;
        self.values.iter().map(hs_norm_sq).sum::<f64>() / n
    }

    /// μ(f) = E_x f(x), the trivial Fourier coefficient.
    pub fn mean(&self) -> CMat {
        let n = self.group.n() as f64;
        let mut acc = CMat::zeros(self.t, self.t);
        for v in &self.values {
            acc += v;
        }
        acc.unscale(n)
    }

    /// f − μ(f), the mean-zero part.
    pub fn sub_mean(&self) -> MatFn {
        let mu = self.mean();
        let values = self.values.iter().map(|v| v - &mu).collect();
        MatFn::new(self.group.clone(), values).expect("shape preserved")
    }

    /// f̃(x) = f(x⁻¹)*.
    pub fn adjoint_fn(&self) -> MatFn {
        let g = &self.group;
        let values: Vec<CMat> = (0..g.n()).map(|x| self.values[g.inv(x)].adjoint()).collect();
        MatFn { group: self.group.clone(), t: self.t, values, unitary_certified: self.unitary_certified }
    }

    pub fn same_group(&self, other: &MatFn) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) && self.group.name() != other.group.name() {
            return Err(Error::GroupMismatch {
                expected: self.group.name().to_string(),
                got: other.group.name().to_string(),
            });
        }
        if self.group.n() != other.group.n() {
            return Err(Error::GroupMismatch {
                expected: format!("order {}", self.group.n()),
                got: format!("order {}", other.group.n()),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> FnJson {
        FnJson {
            group: self.group.name().to_string(),
            t: self.t,
            unitary: self.unitary_certified,
            values: self
                .values
                .iter()
                .map(|m| {
                    (0..self.t)
                        .map(|i| (0..self.t).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(j: &FnJson, group: Arc<GroupTable>) -> Result<Self> {
        if j.group != group.name() {
            return Err(Error::GroupMismatch {
                expected: j.group.clone(),
                got: group.name().to_string(),
            });
        }
        if j.values.len() != group.n() {
            return Err(Error::DimensionMismatch("value count != group order".into()));
        }
        let t = j.t;
        let values: Vec<CMat> = j
            .values
            .iter()
            .map(|m| CMat::from_fn(t, t, |i, k| cx(m[i][k][0], m[i][k][1])))
            .collect();
        MatFn::new(group, values)
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string(&self.to_json())?)?;
        Ok(())
    }

    pub fn read_file(path: &Path, group: Arc<GroupTable>) -> Result<Self> {
        let j: FnJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        Self::from_json(&j, group)
    }
}

/// On-disk function format: `{ "group", "t", "unitary", "values" }` with
/// complex entries as `[re, im]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FnJson {
    pub group: String,
    pub t: usize,
    pub unitary: bool,
    pub values: Vec<Vec<Vec<[f64; 2]>>>,
}

/// Matrix Fourier coefficients f̂(ρ) = E_x[f(x) ⊗ ρ(x)], one per irrep, in
/// the irrep set's order.
#[derive(Debug, Clone)]
pub struct FourierCoeffs {
    pub coeffs: Vec<CMat>,
    pub dims: Vec<usize>,
}

impl FourierCoeffs {
    /// Σ_ρ d_ρ ‖f̂(ρ)‖²_HS; equals ‖f‖² by Parseval.
    pub fn total_mass(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(&self.dims)
            .map(|(c, &d)| d as f64 * hs_norm_sq(c))
            .sum()
    }
}

/// Fourier transform of f against a complete irrep set.
pub fn fourier(f: &MatFn, set: &IrrepSet) -> Result<FourierCoeffs> {
    if !set.matches_group(&f.group) {
        return Err(Error::GroupMismatch {
            expected: f.group.name().to_string(),
            got: set.group_name.clone(),
        });
    }
    let n = f.group.n();
    let coeffs: Vec<CMat> = set
        .irreps
        .par_iter()
        .map(|rho| {
            let size = f.t * rho.dim;
            let mut acc = CMat::zeros(size, size);
            for x in 0..n {
                acc += f.values[x].kronecker(&rho.mats[x]);
            }
            acc.unscale(n as f64)
        })
        .collect();
    Ok(FourierCoeffs { coeffs, dims: set.dims() })
}

/// (f*g)(x) = E_y[f(xy⁻¹) g(y)].
pub fn convolve(f: &MatFn, g: &MatFn) -> Result<MatFn> {
    f.same_group(g)?;
    if f.t != g.t {
        return Err(Error::DimensionMismatch(format!("t mismatch: {} vs {}", f.t, g.t)));
    }
    let gt = f.group.clone();
    let n = gt.n();
    let values: Vec<CMat> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut acc = CMat::zeros(f.t, f.t);
            for y in 0..n {
                acc += &f.values[gt.mul(x, gt.inv(y))] * &g.values[y];
            }
            acc.unscale(n as f64)
        })
        .collect();
    MatFn::new(f.group.clone(), values)
}

/// ‖f‖_U²⁴ computed in the time domain as ‖f̃ * f‖².
pub fn u2_norm4_time(f: &MatFn) -> f64 {
    let conv = convolve(&f.adjoint_fn(), f).expect("same group by construction");
    conv.norm_sq()
}

/// ‖f‖_U²⁴ computed in the Fourier domain as Σ_ρ d_ρ ‖f̂(ρ)f̂(ρ)*‖²_HS.
pub fn u2_norm4_fourier(f: &MatFn, set: &IrrepSet) -> Result<f64> {
    let fc = fourier(f, set)?;
    Ok(fc
        .coeffs
        .iter()
        .zip(&fc.dims)
        .map(|(c, &d)| d as f64 * hs_norm_sq(&(c * c.adjoint())))
        .sum())
}

/// n·δ_id·I_t, the convolution identity element.
pub fn delta_function(group: Arc<GroupTable>, t: usize) -> MatFn {
    let n = group.n();
    let id = group.id();
    let values: Vec<CMat> = (0..n)
        .map(|x| if x == id { identity(t).scale(n as f64) } else { CMat::zeros(t, t) })
        .collect();
    MatFn::new(group, values).expect("shapes uniform")
}

pub fn constant_function(group: Arc<GroupTable>, m: CMat) -> Result<MatFn> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch("constant must be square".into()));
    }
    let n = group.n();
    MatFn::new(group, vec![m; n])
}

/// Block-diagonal direct sum of the chosen irreps, padded with identity
/// (trivial blocks) up to t. A genuine representation of G into 𝕌_t.
pub fn hom_function(group: Arc<GroupTable>, irreps: &[&Irrep], t: usize) -> Result<MatFn> {
    let need: usize = irreps.iter().map(|r| r.dim).sum();
    if need > t {
        return Err(Error::PaddingImpossible { need, t });
    }
    let n = group.n();
    let values: Vec<CMat> = (0..n)
        .map(|x| {
            let mut m = identity(t);
            let mut off = 0;
            for r in irreps {
                for i in 0..r.dim {
                    for j in 0..r.dim {
                        m[(off + i, off + j)] = r.mats[x][(i, j)];
                    }
                }
                off += r.dim;
            }
            m
        })
        .collect();
    MatFn::new(group, values)
}

/// Left-multiply each value by exp(iH) with H random Hermitian of operator
/// norm exactly θ; θ = 0 returns the base bit-for-bit.
pub fn perturbed_function(base: &MatFn, theta: f64, seed: u64) -> MatFn {
    if theta == 0.0 {
        return base.clone();
    }
    let n = base.group.n();
    let values: Vec<CMat> = (0..n)
        .map(|x| {
            let mut rng = seeded_rng(derive_seed(seed, x as u64));
            let mut h = random_hermitian(base.t, &mut rng);
            let norm = op_norm(&h);
            if norm > 0.0 {
                h = h.scale(theta / norm);
            }
            exp_i_hermitian(&h, 1.0) * &base.values[x]
        })
        .collect();
    MatFn::new(base.group.clone(), values).expect("shape preserved")
}

pub fn random_unitary_function(group: Arc<GroupTable>, t: usize, seed: u64) -> MatFn {
    let n = group.n();
    let mut rng = seeded_rng(seed);
    let values: Vec<CMat> = (0..n).map(|_| random_unitary(t, &mut rng)).collect();
    MatFn::new(group, values).expect("shapes uniform")
}

/// The scalar function x ↦ ρ(x)_{ij}.
pub fn clipped_entry_function(
    group: Arc<GroupTable>,
    irrep: &Irrep,
    i: usize,
    j: usize,
) -> Result<MatFn> {
    if i >= irrep.dim || j >= irrep.dim {
        return Err(Error::BadParameter(format!(
            "entry ({i},{j}) outside {}×{} irrep",
            irrep.dim, irrep.dim
        )));
    }
    let values: Vec<CMat> = irrep
        .mats
        .iter()
        .map(|m| CMat::from_element(1, 1, m[(i, j)]))
        .collect();
    MatFn::new(group, values)
}

/// Digit gadget underlying the ℤ_{3^k} → ℤ_{3^{k−1}} counterexample. Found by
/// exhaustive search over all functions ℤ_9 → ℤ_3: its BLR pass count is
/// exactly 18/81, and it agrees with every homomorphism on at most 2 of 9
/// points. Scaling it into the low digits keeps both properties for every k.
pub const COPPERSMITH_GADGET: [u32; 9] = [1, 0, 1, 1, 1, 2, 1, 2, 0];

/// The integer-valued map ℤ_{3^k} → ℤ_{3^{k−1}} behind [`coppersmith_function`].
pub fn coppersmith_map(k: u32, x: usize) -> usize {
    let modulus = 3usize.pow(k - 1);
    let scale = 3usize.pow(k - 2);
    scale * COPPERSMITH_GADGET[x % 9] as usize % modulus
}

/// 𝕌₁-valued embedding m ↦ exp(2πi·m/3^{k−1}) of the counterexample map on
/// cyclic(3^k). Exact BLR₀ pass probability over G×G is 2/9 for every k ≥ 2.
pub fn coppersmith_function(k: u32) -> Result<MatFn> {
    if !(2..=7).contains(&k) {
        return Err(Error::BadParameter(format!(
            "coppersmith k must be in 2..=7 (order cap), got {k}"
        )));
    }
    let n = 3usize.pow(k);
    let modulus = 3usize.pow(k - 1) as f64;
    let group = build_group(&GroupSpec::Cyclic(n))?;
    let tau = std::f64::consts::TAU;
    let values: Vec<CMat> = (0..n)
        .map(|x| {
            let m = coppersmith_map(k, x) as f64;
            CMat::from_element(1, 1, Cx::from_polar(1.0, tau * m / modulus))
        })
        .collect();
    MatFn::new(group, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::linalg::max_abs_diff;
    use crate::rep::{closed_form_irreps, decompose_regular};

    fn cyclic_irreps(n: usize) -> (Arc<GroupTable>, IrrepSet) {
        let g = build_group(&GroupSpec::Cyclic(n)).unwrap();
        let set = closed_form_irreps(&GroupSpec::Cyclic(n)).unwrap();
        (g, set)
    }

    #[test]
    fn delta_has_identity_coefficients() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 1, 1e-8).unwrap();
        let f = delta_function(g, 1);
        let fc = fourier(&f, &set).unwrap();
        for (c, &d) in fc.coeffs.iter().zip(&fc.dims) {
            assert!(max_abs_diff(c, &identity(d)) < 1e-10);
        }
    }

    #[test]
    fn character_mass_sits_at_the_conjugate() {
        let (g, set) = cyclic_irreps(5);
        // f = χ_1; all Fourier mass on the irrep equal to conj(χ_1) = χ_4.
        let chi1 = &set.irreps[1];
        let f = clipped_entry_function(g, chi1, 0, 0).unwrap();
        let fc = fourier(&f, &set).unwrap();
        for (idx, c) in fc.coeffs.iter().enumerate() {
            let mass = hs_norm_sq(c);
            let conj_match = set.irreps[idx]
                .character
                .iter()
                .zip(&chi1.character)
                .all(|(a, b)| (a - b.conj()).norm() < 1e-9);
            if conj_match {
                assert!((mass - 1.0).abs() < 1e-10);
            } else {
                assert!(mass < 1e-20);
            }
        }
    }

    #[test]
    fn constant_function_is_supported_on_trivial() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let set = decompose_regular(&g, 2, 1e-8).unwrap();
        let f = constant_function(g, identity(2)).unwrap();
        let fc = fourier(&f, &set).unwrap();
        let triv = set.trivial_index().unwrap();
        for (idx, c) in fc.coeffs.iter().enumerate() {
            if idx == triv {
                assert!(max_abs_diff(c, &identity(2)) < 1e-12);
            } else {
                assert!(hs_norm(c) < 1e-12);
            }
        }
    }

    #[test]
    fn mean_agrees_with_trivial_coefficient() {
        let (g, set) = cyclic_irreps(7);
        let f = random_unitary_function(g, 2, 99);
        let mu = f.mean();
        let fc = fourier(&f, &set).unwrap();
        let triv = set.trivial_index().unwrap();
        assert!(max_abs_diff(&mu, &fc.coeffs[triv]) < 1e-12);
        // nontrivial character has zero mean
        let (g2, set2) = cyclic_irreps(6);
        let chi = clipped_entry_function(g2, &set2.irreps[2], 0, 0).unwrap();
        assert!(hs_norm(&chi.mean()) < 1e-12);
    }

    #[test]
    fn delta_is_convolution_identity() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let f = random_unitary_function(g.clone(), 2, 3);
        let d = delta_function(g, 2);
        let conv = convolve(&d, &f).unwrap();
        for (a, b) in conv.values.iter().zip(&f.values) {
            assert!(max_abs_diff(a, b) < 1e-12);
        }
    }

    #[test]
    fn homomorphism_satisfies_telescoping() {
        let g = build_group(&GroupSpec::Quaternion8).unwrap();
        let set = decompose_regular(&g, 5, 1e-8).unwrap();
        let rho2 = set.irreps.iter().find(|r| r.dim == 2).unwrap();
        let f = hom_function(g.clone(), &[rho2], 2).unwrap();
        assert!(f.unitary_certified);
        let conv = convolve(&f.adjoint_fn(), &f).unwrap();
        for (a, b) in conv.values.iter().zip(&f.values) {
            assert!(max_abs_diff(a, b) < 1e-10);
        }
        assert!((u2_norm4_time(&f) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn convolution_identity_in_fourier_domain() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 7, 1e-8).unwrap();
        let f = random_unitary_function(g.clone(), 1, 11);
        let h = random_unitary_function(g.clone(), 1, 12);
        let conv = convolve(&f, &h).unwrap();
        let fc = fourier(&f, &set).unwrap();
        let hc = fourier(&h, &set).unwrap();
        let cc = fourier(&conv, &set).unwrap();
        for i in 0..set.irreps.len() {
            let prod = &fc.coeffs[i] * &hc.coeffs[i];
            assert!(max_abs_diff(&cc.coeffs[i], &prod) < 1e-10);
        }
    }

    #[test]
    fn adjoint_involution_is_exact() {
        let g = build_group(&GroupSpec::Dihedral(5)).unwrap();
        let f = random_unitary_function(g, 3, 21);
        let back = f.adjoint_fn().adjoint_fn();
        for (a, b) in back.values.iter().zip(&f.values) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn adjoint_fourier_identity() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 13, 1e-8).unwrap();
        let f = random_unitary_function(g, 2, 31);
        let fa = fourier(&f.adjoint_fn(), &set).unwrap();
        let fc = fourier(&f, &set).unwrap();
        for i in 0..set.irreps.len() {
            assert!(max_abs_diff(&fa.coeffs[i], &fc.coeffs[i].adjoint()) < 1e-10);
        }
    }

    #[test]
    fn u2_of_nontrivial_character_is_one() {
        let (g, set) = cyclic_irreps(8);
        let f = clipped_entry_function(g, &set.irreps[3], 0, 0).unwrap();
        assert!((u2_norm4_time(&f) - 1.0).abs() < 1e-10);
        assert!((u2_norm4_fourier(&f, &set).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn u2_time_and_fourier_agree_on_random_matrix_fn() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let set = decompose_regular(&g, 17, 1e-8).unwrap();
        let f = random_unitary_function(g, 2, 400);
        let a = u2_norm4_time(&f);
        let b = u2_norm4_fourier(&f, &set).unwrap();
        assert!((a - b).abs() <= 1e-8 * a.max(1.0));
    }

    #[test]
    fn perturbed_zero_angle_is_identity_map() {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let set = closed_form_irreps(&GroupSpec::Cyclic(6)).unwrap();
        let f = hom_function(g, &[&set.irreps[1], &set.irreps[2]], 3).unwrap();
        let p = perturbed_function(&f, 0.0, 5);
        for (a, b) in p.values.iter().zip(&f.values) {
            assert_eq!(a, b);
        }
        let q = perturbed_function(&f, 0.05, 5);
        assert!(q.unitary_certified);
        assert!(q.values[1] != f.values[1]);
    }

    #[test]
    fn clipped_entry_is_not_unit_modulus() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 23, 1e-8).unwrap();
        let rho = set.irreps.iter().find(|r| r.dim == 2).unwrap();
        let f = clipped_entry_function(g, rho, 1, 1).unwrap();
        assert!(!f.unitary_certified);
        let mods: Vec<f64> = f.values.iter().map(|m| m[(0, 0)].norm()).collect();
        assert!(mods.iter().all(|&v| v <= 1.0 + 1e-12));
        assert!(mods.iter().any(|&v| v < 1.0 - 1e-6));
    }

    #[test]
    fn padding_error_is_reported() {
        let g = build_group(&GroupSpec::Quaternion8).unwrap();
        let set = decompose_regular(&g, 5, 1e-8).unwrap();
        let rho2 = set.irreps.iter().find(|r| r.dim == 2).unwrap();
        let err = hom_function(g, &[rho2, rho2], 3).unwrap_err();
        assert!(matches!(err, Error::PaddingImpossible { need: 4, t: 3 }));
    }

    #[test]
    fn coppersmith_values_are_cube_roots_of_unity() {
        let f = coppersmith_function(2).unwrap();
        assert_eq!(f.group.n(), 9);
        assert_eq!(f.group.name(), "cyclic(9)");
        assert!(f.unitary_certified);
        for v in &f.values {
            let z = v[(0, 0)];
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powu(3) - cx(1.0, 0.0)).norm() < 1e-12);
        }
        assert!(coppersmith_function(1).is_err());
        assert!(coppersmith_function(8).is_err());
    }

    #[test]
    fn function_json_round_trip_is_bit_exact() {
        let g = build_group(&GroupSpec::Dihedral(3)).unwrap();
        let f = random_unitary_function(g.clone(), 2, 77);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fn.json");
        f.write_file(&path).unwrap();
        let back = MatFn::read_file(&path, g).unwrap();
        assert_eq!(back.t, f.t);
        assert_eq!(back.unitary_certified, f.unitary_certified);
        for (a, b) in back.values.iter().zip(&f.values) {
            assert_eq!(a, b);
        }
    }
}
