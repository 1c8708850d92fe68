//! Finite groups as explicit multiplication tables.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::seeded_rng;

pub const DEFAULT_ORDER_CAP: usize = 5040;

/// A finite group on elements `0..n`, with `mul`, `inv` and `id` fully materialized.
///
/// Immutable after construction; share across workers with [`Arc`].
#[derive(Debug, Clone, PartialEq)]
pub struct GroupTable {
    name: String,
    n: usize,
    id: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    pub fn new(
        name: String,
        n: usize,
        id: usize,
        mul: Vec<u16>,
        inv: Vec<u16>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::MalformedTable(format!("order {n} out of range")));
        }
        if mul.len() != n * n || inv.len() != n || id >= n {
            return Err(Error::MalformedTable("table shape mismatch".into()));
        }
        if mul.iter().any(|&v| v as usize >= n) || inv.iter().any(|&v| v as usize >= n) {
            return Err(Error::MalformedTable("element index out of range".into()));
        }
        Ok(Self { name, n, id, mul, inv, labels })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            name: self.name.clone(),
            n: self.n,
            id: self.id,
            mul: (0..self.n)
                .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
                .collect(),
            inv: self.inv.iter().map(|&v| v as usize).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &GroupJson) -> Result<Self> {
        let n = j.n;
        if j.mul.len() != n || j.mul.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable("mul is not an n×n table".into()));
        }
        if j.inv.len() != n {
            return Err(Error::MalformedTable("inv length mismatch".into()));
        }
        let mul: Vec<u16> = j
            .mul
            .iter()
            .flat_map(|row| row.iter().map(|&v| v as u16))
            .collect();
        let inv: Vec<u16> = j.inv.iter().map(|&v| v as u16).collect();
        let g = GroupTable::new(j.name.clone(), n, j.id, mul, inv, j.labels.clone())?;
        // Loaded tables are untrusted: check the axioms (sampled above 512 per policy).
        let mode = if n <= 512 {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::Sampled { trials: 100_000, seed: 0 }
        };
        let report = verify_group(&g, mode);
        if !report.pass() {
            return Err(Error::MalformedTable(report.violations.join("; ")));
        }
        Ok(g)
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(&self.to_json())?;
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let j: GroupJson = serde_json::from_str(&text)?;
        Self::from_json(&j)
    }
}

/// On-disk group format: `{ "name", "n", "id", "mul", "inv" }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub n: usize,
    pub id: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

/// Group families the catalog can realize.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupSpec {
    Cyclic(usize),
    ElementaryAbelian(usize, usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    FromGenerators(Vec<Vec<usize>>),
    FromTable(PathBuf),
}

impl GroupSpec {
    /// Canonical display name; doubles as the group identity in artifact files.
    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("cyclic({n})"),
            GroupSpec::ElementaryAbelian(p, k) => format!("elementary_abelian({p},{k})"),
            GroupSpec::Dihedral(n) => format!("dihedral({n})"),
            GroupSpec::Symmetric(n) => format!("symmetric({n})"),
            GroupSpec::Alternating(n) => format!("alternating({n})"),
            GroupSpec::Quaternion8 => "quaternion8".into(),
            GroupSpec::DirectProduct(a, b) => {
                format!("product({},{})", a.canonical_name(), b.canonical_name())
            }
            GroupSpec::FromGenerators(gens) => format!("generators(deg={})", gens.first().map_or(0, |g| g.len())),
            GroupSpec::FromTable(p) => format!("table({})", p.display()),
        }
    }

    /// Order when it is known without building the table.
    pub fn order_hint(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::ElementaryAbelian(p, k) => p.checked_pow(*k as u32),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::Alternating(n) => factorial(*n).map(|f| (f / 2).max(1)),
            GroupSpec::Quaternion8 => Some(8),
            GroupSpec::DirectProduct(a, b) => match (a.order_hint(), b.order_hint()) {
                (Some(x), Some(y)) => x.checked_mul(y),
                _ => None,
            },
            GroupSpec::FromGenerators(_) | GroupSpec::FromTable(_) => None,
        }
    }

    /// Parse expressions like `cyclic(8)`, `product(cyclic(2),symmetric(3))`,
    /// `generators([[1,0,2],[0,2,1]])`, `table(path/to/group.json)`.
    pub fn parse(input: &str) -> Result<GroupSpec> {
        let s = input.trim();
        let err = |msg: &str| Error::Parse { input: input.to_string(), msg: msg.to_string() };
        if s == "quaternion8" {
            return Ok(GroupSpec::Quaternion8);
        }
        let open = s.find('(').ok_or_else(|| err("expected family(args)"))?;
        if !s.ends_with(')') {
            return Err(err("missing closing parenthesis"));
        }
        let head = &s[..open];
        let args = &s[open + 1..s.len() - 1];
        match head {
            "cyclic" => Ok(GroupSpec::Cyclic(parse_usize(args, input)?)),
            "elementary_abelian" => {
                let parts = split_top_level(args);
                if parts.len() != 2 {
                    return Err(err("elementary_abelian takes (p,k)"));
                }
                Ok(GroupSpec::ElementaryAbelian(
                    parse_usize(&parts[0], input)?,
                    parse_usize(&parts[1], input)?,
                ))
            }
            "dihedral" => Ok(GroupSpec::Dihedral(parse_usize(args, input)?)),
            "symmetric" => Ok(GroupSpec::Symmetric(parse_usize(args, input)?)),
            "alternating" => Ok(GroupSpec::Alternating(parse_usize(args, input)?)),
            "product" | "direct_product" => {
                let parts = split_top_level(args);
                if parts.len() != 2 {
                    return Err(err("product takes two specs"));
                }
                Ok(GroupSpec::DirectProduct(
                    Box::new(GroupSpec::parse(&parts[0])?),
                    Box::new(GroupSpec::parse(&parts[1])?),
                ))
            }
            "generators" => {
                let gens: Vec<Vec<usize>> = serde_json::from_str(args)
                    .map_err(|e| err(&format!("bad generator list: {e}")))?;
                Ok(GroupSpec::FromGenerators(gens))
            }
            "table" => Ok(GroupSpec::FromTable(PathBuf::from(args.trim()))),
            other => Err(err(&format!("unknown family `{other}`"))),
        }
    }
}

fn parse_usize(s: &str, input: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse {
        input: input.to_string(),
        msg: format!("expected integer, got `{s}`"),
    })
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Build a group from a spec with the default order cap.
pub fn build_group(spec: &GroupSpec) -> Result<Arc<GroupTable>> {
    build_group_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_capped(spec: &GroupSpec, cap: usize) -> Result<Arc<GroupTable>> {
    if let Some(order) = spec.order_hint() {
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
    }
    let g = match spec {
        GroupSpec::Cyclic(n) => cyclic(*n)?,
        GroupSpec::ElementaryAbelian(p, k) => elementary_abelian(*p, *k)?,
        GroupSpec::Dihedral(n) => dihedral(*n)?,
        GroupSpec::Symmetric(n) => symmetric(*n)?,
        GroupSpec::Alternating(n) => alternating(*n)?,
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::DirectProduct(a, b) => {
            let ga = build_group_capped(a, cap)?;
            let gb = build_group_capped(b, cap)?;
            direct_product(&ga, &gb, &spec.canonical_name())?
        }
        GroupSpec::FromGenerators(gens) => from_generators(gens, cap)?,
        GroupSpec::FromTable(path) => GroupTable::read_file(path)?,
    };
    if g.n() > cap {
        return Err(Error::OrderCapExceeded { order: g.n(), cap });
    }
    Ok(Arc::new(g))
}

fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic(0)".into()));
    }
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u16;
        }
    }
    let inv: Vec<u16> = (0..n).map(|a| ((n - a) % n) as u16).collect();
    GroupTable::new(format!("cyclic({n})"), n, 0, mul, inv, None)
}

fn elementary_abelian(p: usize, k: usize) -> Result<GroupTable> {
    if p < 2 || k == 0 {
        return Err(Error::BadParameter(format!("elementary_abelian({p},{k})")));
    }
    let n = p.pow(k as u32);
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = Vec::with_capacity(k);
        for _ in 0..k {
            d.push(x % p);
            x /= p;
        }
        d
    };
    let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &v| acc * p + v) };
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        let da = digits(a);
        for b in 0..n {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            mul[a * n + b] = undigits(&sum) as u16;
        }
    }
    let inv: Vec<u16> = (0..n)
        .map(|a| {
            let neg: Vec<usize> = digits(a).iter().map(|&x| (p - x) % p).collect();
            undigits(&neg) as u16
        })
        .collect();
    GroupTable::new(format!("elementary_abelian({p},{k})"), n, 0, mul, inv, None)
}

/// Dihedral group of order 2n: element `a*n + b` is s^a r^b.
fn dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::BadParameter("dihedral(0)".into()));
    }
    let order = 2 * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut mul = vec![0u16; order * order];
    for a1 in 0..2 {
        for b1 in 0..n {
            for a2 in 0..2 {
                for b2 in 0..n {
                    // s^a1 r^b1 · s^a2 r^b2 = s^(a1+a2) r^(b2 + (-1)^a2 b1)
                    let (a, b) = if a2 == 0 {
                        (a1, (b1 + b2) % n)
                    } else {
                        ((a1 + 1) % 2, (b2 + n - b1 % n) % n)
                    };
                    mul[idx(a1, b1) * order + idx(a2, b2)] = idx(a, b) as u16;
                }
            }
        }
    }
    let mut inv = vec![0u16; order];
    for a in 0..2 {
        for b in 0..n {
            let e = idx(a, b);
            let i = if a == 0 { idx(0, (n - b) % n) } else { e };
            inv[e] = i as u16;
        }
    }
    let labels = (0..2)
        .flat_map(|a| (0..n).map(move |b| if a == 0 { format!("r{b}") } else { format!("sr{b}") }))
        .collect();
    GroupTable::new(format!("dihedral({n})"), order, 0, mul, inv, Some(labels))
}

fn perm_compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p∘q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

fn perm_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur];
            len += 1;
        }
        parity ^= (len + 1) % 2;
    }
    parity
}

fn all_permutations(deg: usize) -> Vec<Vec<usize>> {
    // Lexicographic order; the identity comes first.
    let mut cur: Vec<usize> = (0..deg).collect();
    let mut all = vec![cur.clone()];
    loop {
        // next_permutation
        let Some(i) = (0..deg.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..deg).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        all.push(cur.clone());
    }
    all
}

fn table_from_permutations(name: String, perms: Vec<Vec<usize>>) -> Result<GroupTable> {
    let n = perms.len();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut mul = vec![0u16; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let prod = perm_compose(p, q);
            let k = *index
                .get(&prod)
                .ok_or_else(|| Error::MalformedTable("permutation set not closed".into()))?;
            mul[i * n + j] = k as u16;
        }
    }
    let mut inv = vec![0u16; n];
    for (i, p) in perms.iter().enumerate() {
        let mut pi = vec![0usize; p.len()];
        for (x, &px) in p.iter().enumerate() {
            pi[px] = x;
        }
        inv[i] = index[&pi] as u16;
    }
    let id = index[&(0..perms[0].len()).collect::<Vec<_>>()];
    let labels = perms
        .iter()
        .map(|p| format!("({})", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    GroupTable::new(name, n, id, mul, inv, Some(labels))
}

fn symmetric(deg: usize) -> Result<GroupTable> {
    if deg == 0 {
        return Err(Error::BadParameter("symmetric(0)".into()));
    }
    table_from_permutations(format!("symmetric({deg})"), all_permutations(deg))
}

fn alternating(deg: usize) -> Result<GroupTable> {
    if deg == 0 {
        return Err(Error::BadParameter("alternating(0)".into()));
    }
    let perms: Vec<Vec<usize>> = all_permutations(deg)
        .into_iter()
        .filter(|p| perm_parity(p) == 0)
        .collect();
    table_from_permutations(format!("alternating({deg})"), perms)
}

fn quaternion8() -> GroupTable {
    // Elements: 1, -1, i, -i, j, -j, k, -k  →  (sign, axis) with axis ∈ {1,i,j,k}.
    let enc = |sign: usize, axis: usize| axis * 2 + sign;
    let basis_mul = |a: usize, b: usize| -> (usize, usize) {
        // returns (sign, axis) of basis product; axes 0=1,1=i,2=j,3=k
        match (a, b) {
            (0, x) => (0, x),
            (x, 0) => (0, x),
            (1, 1) | (2, 2) | (3, 3) => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let n = 8;
    let mut mul = vec![0u16; n * n];
    for s1 in 0..2 {
        for a1 in 0..4 {
            for s2 in 0..2 {
                for a2 in 0..4 {
                    let (s, a) = basis_mul(a1, a2);
                    mul[enc(s1, a1) * n + enc(s2, a2)] = enc((s1 + s2 + s) % 2, a) as u16;
                }
            }
        }
    }
    let mut inv = vec![0u16; n];
    for s in 0..2 {
        for a in 0..4 {
            // basis⁻¹: 1⁻¹=1, i⁻¹=-i, …; sign flips pass through
            let (bs, ba) = if a == 0 { (0, 0) } else { (1, a) };
            inv[enc(s, a)] = enc((s + bs) % 2, ba) as u16;
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    GroupTable::new("quaternion8".into(), n, 0, mul, inv, Some(labels)).unwrap()
}

fn direct_product(a: &GroupTable, b: &GroupTable, name: &str) -> Result<GroupTable> {
    let (na, nb) = (a.n(), b.n());
    let n = na * nb;
    if n > u16::MAX as usize {
        return Err(Error::OrderCapExceeded { order: n, cap: u16::MAX as usize });
    }
    let enc = |x: usize, y: usize| x * nb + y;
    let mut mul = vec![0u16; n * n];
    for xa in 0..na {
        for xb in 0..nb {
            for ya in 0..na {
                for yb in 0..nb {
                    mul[enc(xa, xb) * n + enc(ya, yb)] =
                        enc(a.mul(xa, ya), b.mul(xb, yb)) as u16;
                }
            }
        }
    }
    let mut inv = vec![0u16; n];
    for xa in 0..na {
        for xb in 0..nb {
            inv[enc(xa, xb)] = enc(a.inv(xa), b.inv(xb)) as u16;
        }
    }
    let labels = (0..na)
        .flat_map(|xa| (0..nb).map(move |xb| (xa, xb)))
        .map(|(xa, xb)| format!("({},{})", a.label(xa), b.label(xb)))
        .collect();
    GroupTable::new(name.to_string(), n, enc(a.id(), b.id()), mul, inv, Some(labels))
}

/// Breadth-first closure of a permutation generating set, starting from the identity.
fn from_generators(gens: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    if gens.is_empty() {
        return Err(Error::BadParameter("empty generator list".into()));
    }
    let deg = gens[0].len();
    for g in gens {
        if g.len() != deg {
            return Err(Error::BadParameter("generators have mixed degrees".into()));
        }
        let mut seen = vec![false; deg];
        for &v in g {
            if v >= deg || seen[v] {
                return Err(Error::BadParameter("generator is not a permutation".into()));
            }
            seen[v] = true;
        }
    }
    let identity: Vec<usize> = (0..deg).collect();
    let mut elements = vec![identity.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(identity, 0usize);
    let mut head = 0usize;
    while head < elements.len() {
        let cur = elements[head].clone();
        for g in gens {
            let next = perm_compose(&cur, g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::ClosureDiverged { cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    table_from_permutations(format!("generators(deg={deg},order={})", elements.len()), elements)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub identity_ok: bool,
    pub inverse_ok: bool,
    pub latin_ok: bool,
    pub assoc_ok: bool,
    pub assoc_checked: u64,
    pub violations: Vec<String>,
}

impl GroupReport {
    pub fn pass(&self) -> bool {
        self.identity_ok && self.inverse_ok && self.latin_ok && self.assoc_ok
    }
}

pub fn verify_group(g: &GroupTable, mode: VerifyMode) -> GroupReport {
    let n = g.n();
    let id = g.id();
    let mut violations = Vec::new();

    let mut identity_ok = true;
    for x in 0..n {
        if g.mul(id, x) != x || g.mul(x, id) != x {
            identity_ok = false;
            violations.push(format!("identity fails at element {x}"));
            break;
        }
    }

    let mut inverse_ok = true;
    for x in 0..n {
        if g.mul(x, g.inv(x)) != id || g.mul(g.inv(x), x) != id {
            inverse_ok = false;
            violations.push(format!("inverse fails at element {x}"));
            break;
        }
    }

    let mut latin_ok = true;
    'latin: for a in 0..n {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for b in 0..n {
            let r = g.mul(a, b);
            let c = g.mul(b, a);
            if row[r] || col[c] {
                latin_ok = false;
                violations.push(format!("row/column {a} is not a permutation"));
                break 'latin;
            }
            row[r] = true;
            col[c] = true;
        }
    }

    let mut assoc_ok = true;
    let mut assoc_checked = 0u64;
    match mode {
        VerifyMode::Exhaustive => {
            'outer: for x in 0..n {
                for y in 0..n {
                    let xy = g.mul(x, y);
                    for z in 0..n {
                        assoc_checked += 1;
                        if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                            assoc_ok = false;
                            violations.push(format!("associativity fails at ({x},{y},{z})"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        VerifyMode::Sampled { trials, seed } => {
            let mut rng = seeded_rng(seed);
            for _ in 0..trials {
                let x = rng.gen_range(0..n);
                let y = rng.gen_range(0..n);
                let z = rng.gen_range(0..n);
                assoc_checked += 1;
                if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
                    assoc_ok = false;
                    violations.push(format!("associativity fails at ({x},{y},{z})"));
                    break;
                }
            }
        }
    }

    GroupReport { identity_ok, inverse_ok, latin_ok, assoc_ok, assoc_checked, violations }
}

/// Demo catalog: every named family instance with order at most `max_order`.
pub fn catalog(max_order: usize) -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut specs = vec![
        Cyclic(2),
        Cyclic(3),
        Cyclic(4),
        Cyclic(6),
        Cyclic(8),
        Cyclic(9),
        Cyclic(12),
        Cyclic(16),
        Cyclic(24),
        Cyclic(27),
        Cyclic(32),
        Cyclic(60),
        Cyclic(101),
        Cyclic(200),
        ElementaryAbelian(2, 2),
        ElementaryAbelian(2, 3),
        ElementaryAbelian(3, 2),
        ElementaryAbelian(2, 4),
        ElementaryAbelian(3, 3),
        Dihedral(3),
        Dihedral(4),
        Dihedral(5),
        Dihedral(6),
        Dihedral(8),
        Dihedral(12),
        Dihedral(25),
        Dihedral(50),
        Symmetric(3),
        Symmetric(4),
        Symmetric(5),
        Alternating(4),
        Alternating(5),
        Quaternion8,
        DirectProduct(Box::new(Cyclic(2)), Box::new(Cyclic(2))),
        DirectProduct(Box::new(ElementaryAbelian(2, 2)), Box::new(Symmetric(3))),
        DirectProduct(Box::new(Quaternion8), Box::new(Cyclic(3))),
        DirectProduct(Box::new(Symmetric(4)), Box::new(Cyclic(2))),
    ];
    specs.retain(|s| s.order_hint().is_some_and(|o| o <= max_order));
    specs
}
