//! Unitary irreducible representations of a group table.
//!
//! The numeric route decomposes the left regular representation: a random
//! Hermitian matrix is averaged over the group action, which lands it in the
//! commutant; its eigenspaces are invariant subspaces, and recursion plus a
//! character-norm stopping rule peels them down to irreducibles. Closed forms
//! cover the Abelian and dihedral families and their direct products.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupSpec, GroupTable};
use crate::linalg::{
    cx, derive_seed, hermitian_part, hermitian_eigen, hs_norm, identity, max_abs_diff,
    polar_unitary, random_hermitian, seeded_rng, CMat, Cx,
};

const CLUSTER_REL_TOL: f64 = 1e-6;
const CHAR_EQ_TOL: f64 = 1e-6;
const MAX_RETRIES: usize = 5;

#[derive(Debug, Clone)]
pub struct Irrep {
    pub dim: usize,
    /// One unitary `dim×dim` matrix per group element.
    pub mats: Vec<CMat>,
    /// χ(x) = tr ρ(x), kept alongside the matrices for cheap dedup and ordering.
    pub character: Vec<Cx>,
    pub trivial: bool,
}

impl Irrep {
    fn from_mats(mats: Vec<CMat>) -> Self {
        let dim = mats[0].nrows();
        let character: Vec<Cx> = mats.iter().map(|m| m.diagonal().sum()).collect();
        let trivial = dim == 1 && character.iter().all(|c| (c - cx(1.0, 0.0)).norm() <= CHAR_EQ_TOL);
        Irrep { dim, mats, character, trivial }
    }
}

#[derive(Debug, Clone)]
pub struct IrrepSet {
    pub group_name: String,
    pub n: usize,
    pub irreps: Vec<Irrep>,
    pub complete: bool,
    pub tol: f64,
    pub seed: u64,
}

impl IrrepSet {
    pub fn sum_d_sq(&self) -> usize {
        self.irreps.iter().map(|r| r.dim * r.dim).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn trivial_index(&self) -> Option<usize> {
        self.irreps.iter().position(|r| r.trivial)
    }

    pub fn matches_group(&self, g: &GroupTable) -> bool {
        self.n == g.n() && self.group_name == g.name()
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string(&self.to_json())?;
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let j: IrrepSetJson = serde_json::from_str(&text)?;
        Self::from_json(&j)
    }

    pub fn to_json(&self) -> IrrepSetJson {
        IrrepSetJson {
            group: self.group_name.clone(),
            n: self.n,
            dims: self.dims(),
            tol: self.tol,
            seed: self.seed,
            irreps: self
                .irreps
                .iter()
                .map(|r| IrrepJson {
                    dim: r.dim,
                    trivial: r.trivial,
                    character: r.character.iter().map(|c| [c.re, c.im]).collect(),
                    mats: r
                        .mats
                        .iter()
                        .map(|m| {
                            (0..r.dim)
                                .map(|i| (0..r.dim).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &IrrepSetJson) -> Result<Self> {
        let mut irreps = Vec::new();
        for rj in &j.irreps {
            let d = rj.dim;
            if rj.mats.len() != j.n {
                return Err(Error::MalformedTable("irrep cache: wrong element count".into()));
            }
            let mats: Vec<CMat> = rj
                .mats
                .iter()
                .map(|m| CMat::from_fn(d, d, |i, k| cx(m[i][k][0], m[i][k][1])))
                .collect();
            let character: Vec<Cx> = rj.character.iter().map(|c| cx(c[0], c[1])).collect();
            irreps.push(Irrep { dim: d, mats, character, trivial: rj.trivial });
        }
        let sum: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
        Ok(IrrepSet {
            group_name: j.group.clone(),
            n: j.n,
            irreps,
            complete: sum == j.n,
            tol: j.tol,
            seed: j.seed,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepSetJson {
    pub group: String,
    pub n: usize,
    pub dims: Vec<usize>,
    pub tol: f64,
    pub seed: u64,
    pub irreps: Vec<IrrepJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepJson {
    pub dim: usize,
    pub trivial: bool,
    pub character: Vec<[f64; 2]>,
    pub mats: Vec<Vec<Vec<[f64; 2]>>>,
}

/// The left regular representation as explicit permutation matrices.
pub fn regular_representation(g: &GroupTable) -> Vec<CMat> {
    let n = g.n();
    (0..n)
        .map(|a| {
            let mut m = CMat::zeros(n, n);
            for y in 0..n {
                m[(g.mul(a, y), y)] = cx(1.0, 0.0);
            }
            m
        })
        .collect()
}

/// Average of the conjugated action: A = E_a[L(a) M L(a)*], using the
/// permutation structure ((L(a) M L(a)*)_{xy} = M_{a⁻¹x, a⁻¹y}).
fn symmetrize_regular(g: &GroupTable, m: &CMat) -> CMat {
    let n = g.n();
    let mut acc = CMat::zeros(n, n);
    for a in 0..n {
        let ai = g.inv(a);
        for x in 0..n {
            let px = g.mul(ai, x);
            for y in 0..n {
                acc[(x, y)] += m[(px, g.mul(ai, y))];
            }
        }
    }
    acc.unscale(n as f64)
}

/// Group sorted eigenvalues into clusters separated by more than a relative gap.
fn cluster_eigenvalues(vals: &[f64]) -> Vec<Vec<usize>> {
    let n = vals.len();
    if n == 0 {
        return Vec::new();
    }
    let range = vals[n - 1] - vals[0];
    let thr = CLUSTER_REL_TOL * range.max(1e-12);
    let mut clusters = vec![vec![0usize]];
    for i in 1..n {
        if vals[i] - vals[i - 1] > thr {
            clusters.push(Vec::new());
        }
        clusters.last_mut().unwrap().push(i);
    }
    clusters
}

/// Orthonormal basis of the selected eigenvector columns.
fn cluster_basis(vecs: &CMat, cols: &[usize]) -> CMat {
    let n = vecs.nrows();
    let mut q = CMat::zeros(n, cols.len());
    for (j, &c) in cols.iter().enumerate() {
        q.set_column(j, &vecs.column(c));
    }
    // Re-orthonormalize: near-degenerate eigenvectors may drift.
    let qr = q.qr();
    qr.q()
}

fn character_norm_sq(mats: &[CMat]) -> f64 {
    let n = mats.len() as f64;
    mats.iter().map(|m| m.diagonal().sum().norm_sqr()).sum::<f64>() / n
}

/// Recursively split an explicit unitary representation into irreducible blocks.
fn split_rep(mats: Vec<CMat>, seed: u64, depth: usize) -> Result<Vec<Vec<CMat>>> {
    let dim = mats[0].nrows();
    let n = mats.len() as f64;
    if dim == 1 || (character_norm_sq(&mats) - 1.0).abs() <= 1e-6 {
        return Ok(vec![mats]);
    }
    if depth > 32 {
        return Err(Error::EigClusterAmbiguous { retries: MAX_RETRIES });
    }
    for retry in 0..MAX_RETRIES {
        let mut rng = seeded_rng(derive_seed(seed, 1_000 + retry as u64));
        let m = random_hermitian(dim, &mut rng);
        let mut avg = CMat::zeros(dim, dim);
        for rho in &mats {
            avg += rho * &m * rho.adjoint();
        }
        let avg = hermitian_part(&avg.unscale(n));
        let (vals, vecs) = hermitian_eigen(&avg);
        let clusters = cluster_eigenvalues(&vals);
        if clusters.len() < 2 {
            continue;
        }
        let mut blocks = Vec::new();
        for (i, cols) in clusters.iter().enumerate() {
            let q = cluster_basis(&vecs, cols);
            let sub: Vec<CMat> = mats.iter().map(|rho| q.adjoint() * rho * &q).collect();
            blocks.extend(split_rep(sub, derive_seed(seed, i as u64), depth + 1)?);
        }
        return Ok(blocks);
    }
    Err(Error::EigClusterAmbiguous { retries: MAX_RETRIES })
}

fn canonical_sort(irreps: &mut [Irrep]) {
    let key = |r: &Irrep| -> (usize, Vec<(i64, i64)>) {
        (
            r.dim,
            r.character
                .iter()
                .map(|c| ((c.re * 1e6).round() as i64, (c.im * 1e6).round() as i64))
                .collect(),
        )
    };
    irreps.sort_by(|a, b| key(a).cmp(&key(b)));
}

fn dedup_by_character(irreps: Vec<Irrep>) -> Vec<Irrep> {
    let mut kept: Vec<Irrep> = Vec::new();
    'next: for r in irreps {
        for k in &kept {
            if k.dim == r.dim
                && k.character
                    .iter()
                    .zip(&r.character)
                    .all(|(a, b)| (a - b).norm() <= CHAR_EQ_TOL)
            {
                continue 'next;
            }
        }
        kept.push(r);
    }
    kept
}

/// Unitarize every matrix by polar decomposition and pin ρ(id) to the exact identity.
fn polish(mut mats: Vec<CMat>, id: usize) -> Vec<CMat> {
    let dim = mats[0].nrows();
    for m in mats.iter_mut() {
        *m = polar_unitary(m);
    }
    mats[id] = identity(dim);
    mats
}

/// Numerically decompose the regular representation into a complete irrep set.
pub fn decompose_regular(g: &GroupTable, seed: u64, tol: f64) -> Result<IrrepSet> {
    let n = g.n();
    if n == 1 {
        let triv = Irrep::from_mats(vec![identity(1)]);
        return Ok(IrrepSet {
            group_name: g.name().to_string(),
            n,
            irreps: vec![triv],
            complete: true,
            tol,
            seed,
        });
    }
    let mut last_err = None;
    for attempt in 0..MAX_RETRIES {
        let attempt_seed = derive_seed(seed, attempt as u64);
        match decompose_once(g, attempt_seed, tol, seed) {
            Ok(set) => return Ok(set),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap())
}

fn decompose_once(g: &GroupTable, attempt_seed: u64, tol: f64, reported_seed: u64) -> Result<IrrepSet> {
    let n = g.n();
    let mut rng = seeded_rng(attempt_seed);
    let m = random_hermitian(n, &mut rng);
    let a = hermitian_part(&symmetrize_regular(g, &m));
    let (vals, vecs) = hermitian_eigen(&a);
    let clusters = cluster_eigenvalues(&vals);

    let mut blocks: Vec<Vec<CMat>> = Vec::new();
    for (i, cols) in clusters.iter().enumerate() {
        let q = cluster_basis(&vecs, cols);
        // ρ(a) = Q* L(a) Q; L(a) Q permutes rows: (L(a)Q)_{x,·} = Q_{a⁻¹x,·}
        let sub: Vec<CMat> = (0..n)
            .map(|elt| {
                let ai = g.inv(elt);
                let mut lq = CMat::zeros(n, cols.len());
                for x in 0..n {
                    let src = g.mul(ai, x);
                    for j in 0..cols.len() {
                        lq[(x, j)] = q[(src, j)];
                    }
                }
                q.adjoint() * lq
            })
            .collect();
        blocks.extend(split_rep(sub, derive_seed(attempt_seed, i as u64), 0)?);
    }

    let irreps: Vec<Irrep> = blocks
        .into_iter()
        .map(|mats| Irrep::from_mats(polish(mats, g.id())))
        .collect();
    let mut irreps = dedup_by_character(irreps);
    canonical_sort(&mut irreps);

    let sum: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
    if sum != n {
        return Err(Error::IncompleteIrrepSet { found: sum, expected: n });
    }
    Ok(IrrepSet {
        group_name: g.name().to_string(),
        n,
        irreps,
        complete: true,
        tol,
        seed: reported_seed,
    })
}

/// Exact irreps for the Abelian and dihedral families and their direct products.
pub fn closed_form_irreps(spec: &GroupSpec) -> Result<IrrepSet> {
    let g = crate::group::build_group(spec)?;
    let n = g.n();
    let mats_list = closed_form_mats(spec, n)?;
    let mut irreps: Vec<Irrep> = mats_list.into_iter().map(Irrep::from_mats).collect();
    canonical_sort(&mut irreps);
    let sum: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
    if sum != n {
        return Err(Error::IncompleteIrrepSet { found: sum, expected: n });
    }
    Ok(IrrepSet {
        group_name: g.name().to_string(),
        n,
        irreps,
        complete: true,
        tol: 0.0,
        seed: 0,
    })
}

fn closed_form_mats(spec: &GroupSpec, n: usize) -> Result<Vec<Vec<CMat>>> {
    let tau = std::f64::consts::TAU;
    match spec {
        GroupSpec::Cyclic(m) => {
            let m = *m;
            Ok((0..m)
                .map(|j| {
                    (0..m)
                        .map(|x| {
                            CMat::from_element(1, 1, Cx::from_polar(1.0, tau * (j * x % m) as f64 / m as f64))
                        })
                        .collect()
                })
                .collect())
        }
        GroupSpec::ElementaryAbelian(p, k) => {
            let (p, k) = (*p, *k);
            let digits = |mut x: usize| -> Vec<usize> {
                let mut d = Vec::with_capacity(k);
                for _ in 0..k {
                    d.push(x % p);
                    x /= p;
                }
                d
            };
            Ok((0..n)
                .map(|a| {
                    let da = digits(a);
                    (0..n)
                        .map(|x| {
                            let dx = digits(x);
                            let dot: usize = da.iter().zip(&dx).map(|(u, v)| u * v).sum();
                            CMat::from_element(1, 1, Cx::from_polar(1.0, tau * (dot % p) as f64 / p as f64))
                        })
                        .collect()
                })
                .collect())
        }
        GroupSpec::Dihedral(m) => {
            let m = *m;
            let mut out: Vec<Vec<CMat>> = Vec::new();
            // element a*m + b  ↦  s^a r^b
            let one_dim = |f: &dyn Fn(usize, usize) -> f64| -> Vec<CMat> {
                (0..2 * m)
                    .map(|e| CMat::from_element(1, 1, cx(f(e / m, e % m), 0.0)))
                    .collect()
            };
            out.push(one_dim(&|_, _| 1.0));
            out.push(one_dim(&|a, _| if a == 0 { 1.0 } else { -1.0 }));
            if m % 2 == 0 {
                out.push(one_dim(&|_, b| if b % 2 == 0 { 1.0 } else { -1.0 }));
                out.push(one_dim(&|a, b| if (a + b) % 2 == 0 { 1.0 } else { -1.0 }));
            }
            let top = if m % 2 == 0 { m / 2 } else { m.div_ceil(2) };
            for h in 1..top {
                let mats: Vec<CMat> = (0..2 * m)
                    .map(|e| {
                        let (a, b) = (e / m, e % m);
                        let w = Cx::from_polar(1.0, tau * ((h * b) % m) as f64 / m as f64);
                        if a == 0 {
                            CMat::from_fn(2, 2, |i, j| match (i, j) {
                                (0, 0) => w,
                                (1, 1) => w.conj(),
                                _ => cx(0.0, 0.0),
                            })
                        } else {
                            CMat::from_fn(2, 2, |i, j| match (i, j) {
                                (0, 1) => w.conj(),
                                (1, 0) => w,
                                _ => cx(0.0, 0.0),
                            })
                        }
                    })
                    .collect();
                out.push(mats);
            }
            Ok(out)
        }
        GroupSpec::DirectProduct(sa, sb) => {
            let ga = crate::group::build_group(sa)?;
            let gb = crate::group::build_group(sb)?;
            let (na, nb) = (ga.n(), gb.n());
            let irreps_a = closed_form_mats(sa, na)?;
            let irreps_b = closed_form_mats(sb, nb)?;
            let mut out = Vec::new();
            for ra in &irreps_a {
                for rb in &irreps_b {
                    let mats: Vec<CMat> = (0..na * nb)
                        .map(|e| ra[e / nb].kronecker(&rb[e % nb]))
                        .collect();
                    out.push(mats);
                }
            }
            Ok(out)
        }
        other => Err(Error::UnsupportedFamily(other.canonical_name())),
    }
}

/// Smallest dimension of a nontrivial irrep.
pub fn quasirandomness(set: &IrrepSet) -> Result<usize> {
    if !set.complete {
        return Err(Error::IncompleteIrrepSet { found: set.sum_d_sq(), expected: set.n });
    }
    set.irreps
        .iter()
        .filter(|r| !r.trivial)
        .map(|r| r.dim)
        .min()
        .ok_or_else(|| Error::BadParameter("group has no nontrivial irreps".into()))
}

#[derive(Debug, Clone, Serialize)]
pub struct RepReport {
    pub id_violation: f64,
    pub hom_violation: f64,
    pub unitarity_violation: f64,
    pub char_norm_violation: f64,
    pub char_orth_violation: f64,
    pub schur_violation: f64,
    pub sum_d_sq: usize,
    pub sum_ok: bool,
    pub trivial_count: usize,
    pub tol: f64,
}

impl RepReport {
    pub fn pass(&self) -> bool {
        self.sum_ok
            && self.trivial_count == 1
            && self.id_violation <= self.tol
            && self.hom_violation <= self.tol
            && self.unitarity_violation <= self.tol
            && self.char_norm_violation <= self.tol
            && self.char_orth_violation <= self.tol
            && self.schur_violation <= self.tol
    }
}

/// Check every structural invariant of an irrep set against its group.
pub fn verify_irrep_set(g: &GroupTable, set: &IrrepSet, tol: f64) -> RepReport {
    let n = g.n();
    let nf = n as f64;
    let mut id_violation: f64 = 0.0;
    let mut hom_violation: f64 = 0.0;
    let mut unitarity_violation: f64 = 0.0;
    let mut char_norm_violation: f64 = 0.0;

    for r in &set.irreps {
        id_violation = id_violation.max(max_abs_diff(&r.mats[g.id()], &identity(r.dim)));
        for x in 0..n {
            unitarity_violation = unitarity_violation
                .max(hs_norm(&(&r.mats[x] * r.mats[x].adjoint() - identity(r.dim))));
            for y in 0..n {
                let lhs = &r.mats[x] * &r.mats[y];
                hom_violation = hom_violation.max(hs_norm(&(lhs - &r.mats[g.mul(x, y)])));
            }
        }
        let cn: f64 = r.character.iter().map(|c| c.norm_sqr()).sum::<f64>() / nf;
        char_norm_violation = char_norm_violation.max((cn - 1.0).abs());
    }

    let mut char_orth_violation: f64 = 0.0;
    for (i, r) in set.irreps.iter().enumerate() {
        for s in set.irreps.iter().skip(i + 1) {
            let ip: Cx = r
                .character
                .iter()
                .zip(&s.character)
                .map(|(a, b)| a * b.conj())
                .sum::<Cx>()
                / cx(nf, 0.0);
            char_orth_violation = char_orth_violation.max(ip.norm());
        }
    }

    // Schur orthogonality of matrix coefficients via one Gram matrix:
    // ⟨ρ_ij, σ_kl⟩ must be δ_{ρσ} δ_{ik} δ_{jl} / d_ρ.
    let total_coeffs: usize = set.irreps.iter().map(|r| r.dim * r.dim).sum();
    let mut b = CMat::zeros(n, total_coeffs);
    let mut inv_dim = Vec::with_capacity(total_coeffs);
    {
        let mut col = 0;
        for r in &set.irreps {
            for i in 0..r.dim {
                for j in 0..r.dim {
                    for x in 0..n {
                        b[(x, col)] = r.mats[x][(i, j)];
                    }
                    inv_dim.push(1.0 / r.dim as f64);
                    col += 1;
                }
            }
        }
    }
    let gram = b.adjoint() * &b / cx(nf, 0.0);
    let mut schur_violation: f64 = 0.0;
    for c1 in 0..total_coeffs {
        for c2 in 0..total_coeffs {
            let expect = if c1 == c2 { cx(inv_dim[c1], 0.0) } else { cx(0.0, 0.0) };
            schur_violation = schur_violation.max((gram[(c1, c2)] - expect).norm());
        }
    }

    let sum_d_sq = set.sum_d_sq();
    RepReport {
        id_violation,
        hom_violation,
        unitarity_violation,
        char_norm_violation,
        char_orth_violation,
        schur_violation,
        sum_d_sq,
        sum_ok: sum_d_sq == n,
        trivial_count: set.irreps.iter().filter(|r| r.trivial).count(),
        tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    #[test]
    fn regular_rep_of_cyclic_three() {
        let g = build_group(&GroupSpec::Cyclic(3)).unwrap();
        let l = regular_representation(&g);
        assert!(max_abs_diff(&l[0], &identity(3)) < 1e-15);
        // L(1) maps e_x to e_{x+1}: a 3-cycle.
        for y in 0..3 {
            assert_eq!(l[1][((y + 1) % 3, y)], cx(1.0, 0.0));
        }
    }

    #[test]
    fn regular_rep_composition_law_on_s3() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let l = regular_representation(&g);
        for a in 0..6 {
            for b in 0..6 {
                let prod = &l[a] * &l[b];
                assert!(max_abs_diff(&prod, &l[g.mul(a, b)]) < 1e-12);
            }
        }
    }

    #[test]
    fn s3_decomposes_into_1_1_2() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 42, 1e-8).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 2]);
        assert!(set.complete);
        assert!(verify_irrep_set(&g, &set, 1e-8).pass());
    }

    #[test]
    fn cyclic_four_gives_four_characters() {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let set = decompose_regular(&g, 7, 1e-8).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn quaternion_dims_are_1_1_1_1_2() {
        let g = build_group(&GroupSpec::Quaternion8).unwrap();
        let set = decompose_regular(&g, 9, 1e-8).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 1, 2]);
        assert!(verify_irrep_set(&g, &set, 1e-8).pass());
    }

    #[test]
    fn s4_passes_verification() {
        let g = build_group(&GroupSpec::Symmetric(4)).unwrap();
        let set = decompose_regular(&g, 3, 1e-8).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 2, 3, 3]);
        assert!(verify_irrep_set(&g, &set, 1e-8).pass());
    }

    #[test]
    fn closed_form_cyclic_six_character_value() {
        let set = closed_form_irreps(&GroupSpec::Cyclic(6)).unwrap();
        // χ_2(3) = exp(2πi·6/6) = 1; locate χ_2 by its value at x=1.
        let tau = std::f64::consts::TAU;
        let target = Cx::from_polar(1.0, tau * 2.0 / 6.0);
        let chi2 = set
            .irreps
            .iter()
            .find(|r| (r.character[1] - target).norm() < 1e-12)
            .expect("χ_2 present");
        assert!((chi2.character[3] - cx(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn closed_form_elementary_abelian_is_sign_valued() {
        let set = closed_form_irreps(&GroupSpec::ElementaryAbelian(2, 3)).unwrap();
        assert_eq!(set.irreps.len(), 8);
        for r in &set.irreps {
            for c in &r.character {
                assert!((c.im).abs() < 1e-12 && (c.re.abs() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn closed_form_dihedral_five_dims() {
        let set = closed_form_irreps(&GroupSpec::Dihedral(5)).unwrap();
        assert_eq!(set.dims(), vec![1, 1, 2, 2]);
        let g = build_group(&GroupSpec::Dihedral(5)).unwrap();
        assert!(verify_irrep_set(&g, &set, 1e-10).pass());
    }

    #[test]
    fn closed_form_cyclic_verifies_tight() {
        let g = build_group(&GroupSpec::Cyclic(8)).unwrap();
        let set = closed_form_irreps(&GroupSpec::Cyclic(8)).unwrap();
        let report = verify_irrep_set(&g, &set, 1e-12);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn closed_form_product_matches_numeric_characters() {
        let spec = GroupSpec::DirectProduct(
            Box::new(GroupSpec::Cyclic(3)),
            Box::new(GroupSpec::ElementaryAbelian(2, 2)),
        );
        let g = build_group(&spec).unwrap();
        let closed = closed_form_irreps(&spec).unwrap();
        let numeric = decompose_regular(&g, 5, 1e-8).unwrap();
        assert_eq!(closed.dims(), numeric.dims());
        // Abelian: character multisets must match entrywise within 1e-8.
        for rc in &closed.irreps {
            let found = numeric.irreps.iter().any(|rn| {
                rc.character
                    .iter()
                    .zip(&rn.character)
                    .all(|(a, b)| (a - b).norm() < 1e-8)
            });
            assert!(found, "closed-form character missing from numeric set");
        }
    }

    #[test]
    fn quasirandomness_values() {
        let s3 = decompose_regular(&build_group(&GroupSpec::Symmetric(3)).unwrap(), 1, 1e-8).unwrap();
        assert_eq!(quasirandomness(&s3).unwrap(), 1);
        let c5 = closed_form_irreps(&GroupSpec::Cyclic(5)).unwrap();
        assert_eq!(quasirandomness(&c5).unwrap(), 1);
    }

    #[test]
    fn corrupted_set_fails_verification() {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let mut set = closed_form_irreps(&GroupSpec::Cyclic(4)).unwrap();
        // Duplicate one nontrivial irrep over another: Σd² still 4, but
        // character orthogonality and Schur must flag the copy.
        let dup = set.irreps[1].clone();
        set.irreps[2] = dup;
        let report = verify_irrep_set(&g, &set, 1e-8);
        assert!(!report.pass());
        assert!(report.char_orth_violation > 0.5 || report.schur_violation > 0.1);
    }

    #[test]
    fn decomposition_is_seed_deterministic() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let a = decompose_regular(&g, 11, 1e-8).unwrap();
        let b = decompose_regular(&g, 11, 1e-8).unwrap();
        assert_eq!(a.dims(), b.dims());
        for (ra, rb) in a.irreps.iter().zip(&b.irreps) {
            for (ma, mb) in ra.mats.iter().zip(&rb.mats) {
                assert_eq!(ma, mb);
            }
        }
    }

    #[test]
    fn irrep_cache_round_trip() {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let set = decompose_regular(&g, 42, 1e-8).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("irreps.json");
        set.write_file(&path).unwrap();
        let back = IrrepSet::read_file(&path).unwrap();
        assert_eq!(set.dims(), back.dims());
        for (ra, rb) in set.irreps.iter().zip(&back.irreps) {
            for (ma, mb) in ra.mats.iter().zip(&rb.mats) {
                assert_eq!(ma, mb, "cache round trip must be bit exact");
            }
        }
    }
}
