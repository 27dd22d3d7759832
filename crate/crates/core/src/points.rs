//! Fat points, symbolic and ordinary powers of point ideals.
//!
//! A form lies in `I^{(m)}` exactly when all its derivatives of order
//! `< m` vanish at every point. Derivatives are taken in the Hasse sense,
//! `D_b(x^a) = C(a, b) x^{a-b}`, and the module insists on `p > 2 dmax` so
//! that none of the binomials involved vanish mod `p`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};
use crate::form::Form;
use crate::hilbert::graded_span;
use crate::linalg::{nullspace, rank_of, Echelon};
use crate::monomial::{basis, variable_shift};
use crate::report::Verdict;
use crate::seed::rng_from_seed;

/// Points in `P^{n_1 - 1} x ... x P^{n_t - 1}` (one factor for `P^{n-1}`),
/// stored as concatenated coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointConfig {
    #[serde(skip)]
    field: PrimeField,
    factors: Vec<usize>,
    points: Vec<Vec<FpElement>>,
}

impl PointConfig {
    /// Validates factor sizes, nonzero factors and projective distinctness.
    pub fn new(field: PrimeField, factors: Vec<usize>, points: Vec<Vec<FpElement>>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidArgument("every factor needs at least one coordinate".into()));
        }
        let width: usize = factors.iter().sum();
        let mut normalized = Vec::with_capacity(points.len());
        for (i, pt) in points.iter().enumerate() {
            if pt.len() != width {
                return Err(Error::InvalidArgument(format!(
                    "point {} has {} coordinates, expected {width}",
                    i + 1,
                    pt.len()
                )));
            }
            let pt: Vec<FpElement> = pt.iter().map(|&c| field.reduce(c)).collect();
            let norm = normalize(field, &factors, &pt)
                .ok_or_else(|| Error::InvalidArgument(format!("point {} is zero in some factor", i + 1)))?;
            if normalized.contains(&norm) {
                return Err(Error::InvalidArgument(format!("point {} repeats an earlier point", i + 1)));
            }
            normalized.push(norm);
        }
        Ok(PointConfig { field, factors, points: normalized })
    }

    pub fn projective(field: PrimeField, points: Vec<Vec<FpElement>>) -> Result<Self> {
        let n = points.first().map_or(0, Vec::len);
        Self::new(field, vec![n], points)
    }

    /// `s` uniformly random points, each factor scaled so its first
    /// nonzero coordinate is 1.
    pub fn random(field: PrimeField, factors: &[usize], s: usize, seed: u64) -> Result<Self> {
        let mut rng = rng_from_seed(seed);
        let width: usize = factors.iter().sum();
        let points = (0..s)
            .map(|_| (0..width).map(|_| field.random(&mut rng)).collect())
            .collect();
        Self::new(field, factors.to_vec(), points)
    }

    /// Parses one point per line; `|` separates factors, `#` starts a comment.
    pub fn parse(text: &str, field: PrimeField) -> Result<Self> {
        let mut factors: Option<Vec<usize>> = None;
        let mut points = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut sizes = Vec::new();
            let mut coords = Vec::new();
            for part in line.split('|') {
                let mut count = 0;
                for tok in part.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                    let v = i64::from_str(tok)
                        .map_err(|_| Error::Parse(format!("line {}: bad coordinate {tok:?}", lineno + 1)))?;
                    coords.push(field.from_i64(v));
                    count += 1;
                }
                sizes.push(count);
            }
            match &factors {
                None => factors = Some(sizes),
                Some(f) if *f != sizes => {
                    return Err(Error::Parse(format!("line {}: factor sizes {sizes:?} differ from {f:?}", lineno + 1)))
                }
                _ => {}
            }
            points.push(coords);
        }
        let factors = factors.ok_or_else(|| Error::Parse("no points".into()))?;
        Self::new(field, factors, points)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let mut off = 0;
            for (j, &len) in self.factors.iter().enumerate() {
                if j > 0 {
                    out.push_str(" | ");
                }
                let strs: Vec<String> = pt[off..off + len].iter().map(|&c| self.field.to_i64(c).to_string()).collect();
                out.push_str(&strs.join(" "));
                off += len;
            }
            writeln!(out).unwrap();
        }
        out
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// Total number of variables.
    pub fn n(&self) -> usize {
        self.factors.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FpElement>] {
        &self.points
    }

    pub fn is_projective(&self) -> bool {
        self.factors.len() == 1
    }

    fn require_projective(&self) -> Result<()> {
        if !self.is_projective() {
            return Err(Error::InvalidArgument("operation needs points in a single projective space".into()));
        }
        Ok(())
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if self.field.modulus() <= 2 * d as u64 {
            return Err(Error::InvalidArgument(format!(
                "prime {} too small for degree {d}: need p > 2*dmax",
                self.field.modulus()
            )));
        }
        Ok(())
    }
}

fn normalize(field: PrimeField, factors: &[usize], pt: &[FpElement]) -> Option<Vec<FpElement>> {
    let mut out = Vec::with_capacity(pt.len());
    let mut off = 0;
    for &len in factors {
        let part = &pt[off..off + len];
        let lead = *part.iter().find(|&&c| c != 0)?;
        let inv = field.inv(lead);
        out.extend(part.iter().map(|&c| field.mul(c, inv)));
        off += len;
    }
    Some(out)
}

fn check_m(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidArgument("multiplicity must be at least 1".into()));
    }
    Ok(())
}

/// Rows of the order-`< m` vanishing conditions on the given monomials.
fn vanishing_rows(cfg: &PointConfig, m: u32, monomials: &[&[u32]]) -> Vec<Vec<FpElement>> {
    let f = cfg.field;
    let n = cfg.n();
    let top = monomials.iter().flat_map(|a| a.iter().copied()).max().unwrap_or(0) as usize;
    // binom[a][b] = C(a, b) mod p
    let mut binom = vec![vec![0u64; top + 1]; top + 1];
    for a in 0..=top {
        binom[a][0] = 1;
        for b in 1..=a {
            binom[a][b] = f.add(binom[a - 1][b - 1], if b < a { binom[a - 1][b] } else { 0 });
        }
    }
    let orders: Vec<Vec<u32>> = (0..m).flat_map(|k| basis(n, k).monomials().iter().map(|b| b.exponents().to_vec()).collect::<Vec<_>>()).collect();
    let mut rows = Vec::with_capacity(cfg.len() * orders.len());
    for pt in &cfg.points {
        let powers: Vec<Vec<FpElement>> = pt
            .iter()
            .map(|&c| {
                let mut t = Vec::with_capacity(top + 1);
                let mut acc = 1;
                for _ in 0..=top {
                    t.push(acc);
                    acc = f.mul(acc, c);
                }
                t
            })
            .collect();
        for beta in &orders {
            let row = monomials
                .iter()
                .map(|alpha| {
                    let mut v = 1;
                    for j in 0..n {
                        let (a, b) = (alpha[j] as usize, beta[j] as usize);
                        if a < b {
                            return 0;
                        }
                        v = f.mul(v, f.mul(binom[a][b], powers[j][a - b]));
                        if v == 0 {
                            return 0;
                        }
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
    }
    rows
}

fn degree_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    basis(n, d).monomials().iter().map(|m| m.exponents().to_vec()).collect()
}

fn projective_rows(cfg: &PointConfig, m: u32, d: u32) -> Vec<Vec<FpElement>> {
    let mons = degree_monomials(cfg.n(), d);
    let refs: Vec<&[u32]> = mons.iter().map(Vec::as_slice).collect();
    vanishing_rows(cfg, m, &refs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerKind {
    Symbolic,
    Ordinary,
}

/// Degree-`d` piece of a power of a point ideal, with a basis in the
/// coordinates of the degree-`d` monomial basis.
#[derive(Clone, Debug, Serialize)]
pub struct PowerPiece {
    pub kind: PowerKind,
    pub m: u32,
    pub degree: u32,
    pub dim: usize,
    #[serde(skip)]
    pub rows: Vec<Vec<FpElement>>,
}

/// Basis of `(I^{(m)})_d` as the kernel of the vanishing conditions.
pub fn symbolic_power_piece(cfg: &PointConfig, m: u32, d: u32) -> Result<PowerPiece> {
    cfg.require_projective()?;
    check_m(m)?;
    cfg.check_degree(d)?;
    let ncols = basis(cfg.n(), d).len();
    let rows = nullspace(cfg.field, ncols, projective_rows(cfg, m, d));
    Ok(PowerPiece { kind: PowerKind::Symbolic, m, degree: d, dim: rows.len(), rows })
}

/// `dim (I^{(m)})_d` for `d = 0..=dmax`.
pub fn symbolic_power_dims(cfg: &PointConfig, m: u32, dmax: u32) -> Result<Vec<u64>> {
    cfg.require_projective()?;
    check_m(m)?;
    cfg.check_degree(dmax)?;
    Ok((0..=dmax)
        .map(|d| {
            let ncols = basis(cfg.n(), d).len();
            (ncols - rank_of(cfg.field, ncols, projective_rows(cfg, m, d))) as u64
        })
        .collect())
}

/// Hilbert function of the fat-point scheme: `dim S_d - dim (I^{(m)})_d`.
pub fn fat_point_hf(cfg: &PointConfig, m: u32, dmax: u32) -> Result<Vec<u64>> {
    let dims = symbolic_power_dims(cfg, m, dmax)?;
    Ok(dims
        .iter()
        .enumerate()
        .map(|(d, &dim)| basis(cfg.n(), d as u32).len() as u64 - dim)
        .collect())
}

/// `min(dim S_d, s * C(n + m - 2, n - 1))`.
pub fn expected_fat_hf(n: usize, s: u64, m: u32, d: u32) -> Result<u64> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidArgument("n and m must be positive".into()));
    }
    let space = basis(n, d).len() as u64;
    let conditions = s
        .checked_mul(basis(n, m - 1).len() as u64)
        .ok_or(Error::Overflow("fat point conditions"))?;
    Ok(space.min(conditions))
}

/// Both sides of the apolarity identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApolarityReport {
    pub s: usize,
    pub n: usize,
    pub m: u32,
    pub d: u32,
    /// Exponent of the linear forms on the power-ideal side.
    pub power: u32,
    pub vanishing: u64,
    pub power_ideal: u64,
    pub verdict: Verdict,
}

/// `HF_{S/I^{(m)}}(d)` from vanishing conditions against
/// `dim [(L_1^e, ..., L_s^e)]_d` with `e = d - m + 1` and `L_i` the linear
/// form with the coordinates of `P_i`. For `e <= 0` the power ideal is the
/// unit ideal. A mismatch is an error.
pub fn apolarity_check(cfg: &PointConfig, m: u32, d: u32) -> Result<ApolarityReport> {
    cfg.require_projective()?;
    check_m(m)?;
    cfg.check_degree(d)?;
    let n = cfg.n();
    let f = cfg.field;
    let ncols = basis(n, d).len();
    let vanishing = rank_of(f, ncols, projective_rows(cfg, m, d)) as u64;
    let power = (d + 1).saturating_sub(m);
    let power_ideal = if power == 0 {
        ncols as u64
    } else {
        let comp = basis(n, d - power);
        let rows = cfg.points.iter().flat_map(|pt| {
            let lp = Form::linear(f, pt).power(power);
            comp.monomials().iter().map(move |mm| lp.mul_monomial(mm).coeffs().to_vec()).collect::<Vec<_>>()
        });
        rank_of(f, ncols, rows) as u64
    };
    if vanishing != power_ideal {
        return Err(Error::ApolarityMismatch { vanishing, power_ideal });
    }
    Ok(ApolarityReport { s: cfg.len(), n, m, d, power, vanishing, power_ideal, verdict: Verdict::Holds })
}

/// Minimal generators of `I_X` of degree `<= dmax`.
pub fn point_ideal_generators(cfg: &PointConfig, dmax: u32) -> Result<Vec<Form>> {
    cfg.require_projective()?;
    cfg.check_degree(dmax)?;
    let n = cfg.n();
    let f = cfg.field;
    let s = cfg.len() as u64;
    let mut gens = Vec::new();
    let mut prev: Vec<Vec<FpElement>> = Vec::new();
    for d in 0..=dmax {
        let ncols = basis(n, d).len();
        let conditions = projective_rows(cfg, 1, d);
        let hf = rank_of(f, ncols, conditions.clone()) as u64;
        let kernel = nullspace(f, ncols, conditions);
        let mut ech = Echelon::new(f, ncols);
        if d > 0 {
            for row in &prev {
                for table in variable_shift(n, d - 1).iter() {
                    let mut v = vec![0; ncols];
                    for (c, &a) in row.iter().enumerate() {
                        v[table[c]] = a;
                    }
                    ech.insert(v);
                }
            }
        }
        for v in &kernel {
            if ech.insert(v.clone()) {
                gens.push(Form::from_coeffs(f, n, d, v.clone())?);
            }
        }
        prev = kernel;
        // The ideal of s points is generated in degrees <= r + 1, where r is
        // the first degree with HF = s.
        if hf == s && d > 0 {
            let next = d + 1;
            if next <= dmax {
                let ncols = basis(n, next).len();
                let kernel = nullspace(f, ncols, projective_rows(cfg, 1, next));
                let mut ech = Echelon::new(f, ncols);
                for row in &prev {
                    for table in variable_shift(n, d).iter() {
                        let mut v = vec![0; ncols];
                        for (c, &a) in row.iter().enumerate() {
                            v[table[c]] = a;
                        }
                        ech.insert(v);
                    }
                }
                for v in kernel {
                    if ech.insert(v.clone()) {
                        gens.push(Form::from_coeffs(f, n, next, v)?);
                    }
                }
            }
            break;
        }
    }
    Ok(gens)
}

fn multisets(len: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, len: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i, len, m, cur, out);
            cur.pop();
        }
    }
    rec(0, len, m, &mut cur, &mut out);
    out
}

/// Degreewise bases of `I^m` up to `dmax`.
pub fn ordinary_power_pieces(cfg: &PointConfig, m: u32, dmax: u32) -> Result<Vec<PowerPiece>> {
    check_m(m)?;
    let f = cfg.field;
    let n = cfg.n();
    let mut gens = point_ideal_generators(cfg, dmax)?;
    gens.sort_by_key(Form::degree);
    let min_deg = gens.first().map_or(0, Form::degree);
    let mut products = Vec::new();
    if !gens.is_empty() && min_deg * m <= dmax {
        for combo in multisets(gens.len(), m as usize) {
            let deg: u32 = combo.iter().map(|&i| gens[i].degree()).sum();
            if deg > dmax {
                continue;
            }
            let mut acc = gens[combo[0]].clone();
            for &i in &combo[1..] {
                acc = acc.mul(&gens[i])?;
            }
            products.push(acc);
        }
    }
    let span = graded_span(f, n, &products, dmax)?;
    (0..=dmax)
        .map(|d| {
            let rows = span.piece(d)?.full_basis();
            Ok(PowerPiece { kind: PowerKind::Ordinary, m, degree: d, dim: rows.len(), rows })
        })
        .collect()
}

/// `dim (I^m)_d` for `d = 0..=dmax`.
pub fn ordinary_power_dims(cfg: &PointConfig, m: u32, dmax: u32) -> Result<Vec<u64>> {
    Ok(ordinary_power_pieces(cfg, m, dmax)?.iter().map(|p| p.dim as u64).collect())
}

fn in_kernel(f: PrimeField, conditions: &[Vec<FpElement>], v: &[FpElement]) -> bool {
    conditions
        .iter()
        .all(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b)) == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectDegree {
    pub degree: u32,
    pub symbolic: u64,
    pub ordinary: u64,
    /// New minimal generators of `I^{(m)}/I^m` in this degree.
    pub new_generators: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicDefect {
    pub s: usize,
    pub m: u32,
    pub dmax: u32,
    pub defect: u64,
    /// The last two degrees contribute nothing.
    pub stabilized: bool,
    pub per_degree: Vec<DefectDegree>,
}

/// Counts minimal generators of `I^{(m)}/I^m` in degrees `<= dmax`.
pub fn symbolic_defect(cfg: &PointConfig, m: u32, dmax: u32) -> Result<SymbolicDefect> {
    cfg.require_projective()?;
    check_m(m)?;
    let f = cfg.field;
    let n = cfg.n();
    let ordinary = ordinary_power_pieces(cfg, m, dmax)?;
    let mut per_degree = Vec::new();
    let mut prev_symbolic: Vec<Vec<FpElement>> = Vec::new();
    for d in 0..=dmax {
        let ncols = basis(n, d).len();
        let conditions = projective_rows(cfg, m, d);
        let symbolic = nullspace(f, ncols, conditions.clone());
        let ord = &ordinary[d as usize];
        if let Some(bad) = ord.rows.iter().position(|r| !in_kernel(f, &conditions, r)) {
            return Err(Error::Invariant(format!(
                "ordinary power element {bad} in degree {d} is not in the symbolic power"
            )));
        }
        let mut ech = Echelon::new(f, ncols);
        for r in &ord.rows {
            ech.insert(r.clone());
        }
        if d > 0 {
            for row in &prev_symbolic {
                for table in variable_shift(n, d - 1).iter() {
                    if ech.is_full() {
                        break;
                    }
                    let mut v = vec![0; ncols];
                    for (c, &a) in row.iter().enumerate() {
                        v[table[c]] = a;
                    }
                    ech.insert(v);
                }
            }
        }
        let covered = ech.rank();
        per_degree.push(DefectDegree {
            degree: d,
            symbolic: symbolic.len() as u64,
            ordinary: ord.dim as u64,
            new_generators: (symbolic.len() - covered) as u64,
        });
        prev_symbolic = symbolic;
    }
    let defect = per_degree.iter().map(|x| x.new_generators).sum();
    let stabilized = per_degree.len() >= 2 && per_degree.iter().rev().take(2).all(|x| x.new_generators == 0);
    Ok(SymbolicDefect { s: cfg.len(), m, dmax, defect, stabilized, per_degree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentDegree {
    pub degree: u32,
    pub symbolic: u64,
    pub ordinary: u64,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub s: usize,
    pub m: u32,
    pub r: u32,
    pub dmax: u32,
    /// `I^{(m)}_d ⊆ (I^r)_d` for every `d <= dmax`; says nothing beyond.
    pub contained_up_to_dmax: bool,
    pub first_failure: Option<u32>,
    pub per_degree: Vec<ContainmentDegree>,
    pub verdict: Verdict,
}

/// Checks `(I^{(m)})_d ⊆ (I^r)_d` degree by degree.
pub fn containment_check(cfg: &PointConfig, m: u32, r: u32, dmax: u32) -> Result<ContainmentReport> {
    cfg.require_projective()?;
    check_m(m)?;
    check_m(r)?;
    let f = cfg.field;
    let ordinary = ordinary_power_pieces(cfg, r, dmax)?;
    let mut per_degree = Vec::new();
    for d in 0..=dmax {
        let sym = symbolic_power_piece(cfg, m, d)?;
        let ord = &ordinary[d as usize];
        let mut ech = Echelon::new(f, basis(cfg.n(), d).len());
        for row in &ord.rows {
            ech.insert(row.clone());
        }
        let contained = sym.rows.iter().all(|v| ech.contains(v));
        per_degree.push(ContainmentDegree { degree: d, symbolic: sym.dim as u64, ordinary: ord.dim as u64, contained });
    }
    let first_failure = per_degree.iter().find(|x| !x.contained).map(|x| x.degree);
    Ok(ContainmentReport {
        s: cfg.len(),
        m,
        r,
        dmax,
        contained_up_to_dmax: first_failure.is_none(),
        first_failure,
        per_degree,
        verdict: Verdict::from_holds(first_failure.is_none()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultigradedValue {
    pub multidegree: Vec<u32>,
    pub m: u32,
    /// `dim S_I`.
    pub ambient: u64,
    /// `dim (I_X^{(m)})_I`.
    pub ideal: u64,
    /// `dim (S/I_X^{(m)})_I`.
    pub hilbert_function: u64,
}

/// Multigraded Hilbert function of fat points in a product of projective spaces.
pub fn multigraded_hf(cfg: &PointConfig, m: u32, multidegree: &[u32]) -> Result<MultigradedValue> {
    check_m(m)?;
    if multidegree.len() != cfg.factors.len() {
        return Err(Error::InvalidArgument(format!(
            "multidegree has {} entries for {} factors",
            multidegree.len(),
            cfg.factors.len()
        )));
    }
    cfg.check_degree(multidegree.iter().sum())?;
    let mut monomials: Vec<Vec<u32>> = vec![Vec::new()];
    for (&nj, &dj) in cfg.factors.iter().zip(multidegree) {
        let part = degree_monomials(nj, dj);
        monomials = monomials
            .iter()
            .flat_map(|prefix| {
                part.iter().map(move |q| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(q);
                    v
                })
            })
            .collect();
    }
    let refs: Vec<&[u32]> = monomials.iter().map(Vec::as_slice).collect();
    let ambient = monomials.len();
    let rank = rank_of(cfg.field, ambient, vanishing_rows(cfg, m, &refs)) as u64;
    Ok(MultigradedValue {
        multidegree: multidegree.to_vec(),
        m,
        ambient: ambient as u64,
        ideal: ambient as u64 - rank,
        hilbert_function: rank,
    })
}
