//! Hilbert functions of graded quotients `S/I`.
//!
//! Ideals come from an [`IdealSpec`]: either explicit generators or a
//! recipe (generic forms, power ideals, mu-power ideals, powers of generic
//! forms, the two explicit constructions attaining the generic series for
//! `r = n + 1`, monomial complete intersections and `(x_1^d, ..., x_n^d)^k`).
//!
//! [`graded_span`] builds `I_d` degree by degree as `S_1 * I_{d-1}` plus the
//! generators of degree `d`. Generators that are single monomials are split
//! off first: the remaining work happens in `S/M`, `M` the monomial part,
//! whose degree-`d` piece has the standard monomials (those outside `M`) as
//! a basis. This keeps ideals such as `(x_1^2, ..., x_n^2, l_1^2, l_2^2)`
//! small even for eight variables.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField, DEFAULT_PRIMES};
use crate::form::{random_form_in, Form};
use crate::linalg::Echelon;
use crate::monomial::{basis, variable_shift, Monomial};
use crate::report::Verdict;
use crate::seed::derive_seed;
use crate::series::{series_from_product, IntSeries};

/// How the generators of an ideal are produced.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "recipe", rename_all = "kebab-case")]
pub enum Recipe {
    /// Fixed generators.
    Explicit { forms: Vec<Form> },
    /// Random forms of the listed degrees.
    Generic { degrees: Vec<u32> },
    /// `l_1^d, ..., l_r^d` for random linear forms `l_i`.
    PowerIdeal { r: usize, d: u32 },
    /// `r` products `l_{i,1}^{mu_1} ... l_{i,k}^{mu_k}` of random linear forms.
    MuPower { mu: Vec<u32>, r: usize },
    /// `g_1^k, ..., g_r^k` for random forms `g_i` of degree `d`.
    PowersOfGeneric { r: usize, d: u32, k: u32 },
    /// `x_1^{d_1}, ..., x_n^{d_n}, (x_1 + ... + x_n)^{d_{n+1}}`.
    Stanley { degrees: Vec<u32> },
    /// `x_1^{d_1}, ..., x_n^{d_n}, h_{d_{n+1}}` with `h_d` the complete
    /// homogeneous symmetric polynomial.
    Gottlieb { degrees: Vec<u32> },
    /// `x_1^{d_1}, ..., x_n^{d_n}`.
    MonomialCi { degrees: Vec<u32> },
    /// All `k`-fold products of `x_1^d, ..., x_n^d`.
    Tndk { d: u32, k: u32 },
}

/// An ideal in `n` variables together with the seed and prime that
/// make its random recipe reproducible.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdealSpec {
    pub n: usize,
    #[serde(flatten)]
    pub recipe: Recipe,
    pub seed: u64,
    pub prime: u64,
}

impl IdealSpec {
    pub fn new(n: usize, recipe: Recipe) -> Self {
        let prime = match &recipe {
            Recipe::Explicit { forms } => forms.first().map_or(DEFAULT_PRIMES[0], |f| f.field().modulus()),
            _ => DEFAULT_PRIMES[0],
        };
        IdealSpec { n, recipe, seed: 0, prime }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_prime(mut self, prime: u64) -> Self {
        self.prime = prime;
        self
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime)
    }

    /// Whether the generators depend on the seed.
    pub fn is_randomized(&self) -> bool {
        matches!(
            self.recipe,
            Recipe::Generic { .. } | Recipe::PowerIdeal { .. } | Recipe::MuPower { .. } | Recipe::PowersOfGeneric { .. }
        )
    }

    /// Generator degrees, validating the recipe without expanding it.
    pub fn generator_degrees(&self) -> Result<Vec<u32>> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidArgument("an ideal needs at least one variable".into()));
        }
        let positive = |ds: &[u32], what: &str| -> Result<()> {
            if ds.contains(&0) {
                return Err(Error::InvalidArgument(format!("{what} degrees must be positive")));
            }
            Ok(())
        };
        let need_r = |r: usize| -> Result<()> {
            if r == 0 {
                return Err(Error::InvalidArgument("r must be positive".into()));
            }
            Ok(())
        };
        match &self.recipe {
            Recipe::Explicit { forms } => {
                for f in forms {
                    if f.n() != n {
                        return Err(Error::RingMismatch(format!("generator in {} variables, ideal in {n}", f.n())));
                    }
                }
                Ok(forms.iter().map(Form::degree).collect())
            }
            Recipe::Generic { degrees } => {
                positive(degrees, "generator")?;
                Ok(degrees.clone())
            }
            Recipe::PowerIdeal { r, d } => {
                need_r(*r)?;
                positive(&[*d], "power")?;
                Ok(vec![*d; *r])
            }
            Recipe::MuPower { mu, r } => {
                need_r(*r)?;
                validate_partition(mu)?;
                Ok(vec![mu.iter().sum(); *r])
            }
            Recipe::PowersOfGeneric { r, d, k } => {
                need_r(*r)?;
                positive(&[*d, *k], "base and exponent")?;
                Ok(vec![d * k; *r])
            }
            Recipe::Stanley { degrees } | Recipe::Gottlieb { degrees } => {
                if degrees.len() != n + 1 {
                    return Err(Error::InvalidArgument(format!(
                        "this construction takes n + 1 = {} degrees, got {}",
                        n + 1,
                        degrees.len()
                    )));
                }
                positive(degrees, "generator")?;
                Ok(degrees.clone())
            }
            Recipe::MonomialCi { degrees } => {
                if degrees.len() != n {
                    return Err(Error::InvalidArgument(format!(
                        "a monomial complete intersection takes n = {n} degrees, got {}",
                        degrees.len()
                    )));
                }
                positive(degrees, "generator")?;
                Ok(degrees.clone())
            }
            Recipe::Tndk { d, k } => {
                positive(&[*d, *k], "T_{n,d,k} parameter")?;
                Ok(vec![d * k; basis(n, *k).len()])
            }
        }
    }

    pub fn expand(&self) -> Result<Vec<Form>> {
        expand_spec(self)
    }
}

/// Checks that `mu` is a partition: nonempty, positive, weakly decreasing.
pub fn validate_partition(mu: &[u32]) -> Result<()> {
    if mu.is_empty() || mu.contains(&0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(mu.to_vec()));
    }
    Ok(())
}

/// Product of independent random linear forms raised to the parts of `mu`.
pub fn random_mu_product(field: PrimeField, n: usize, mu: &[u32], seed: u64) -> Result<Form> {
    validate_partition(mu)?;
    let mut acc = Form::constant(field, n, 1);
    for (j, &part) in mu.iter().enumerate() {
        let l = random_form_in(field, n, 1, derive_seed(seed, &[j as u64]));
        acc = acc.mul(&l.power(part))?;
    }
    Ok(acc)
}

/// Expands a recipe into explicit generators.
pub fn expand_spec(spec: &IdealSpec) -> Result<Vec<Form>> {
    spec.generator_degrees()?;
    let n = spec.n;
    let seed = spec.seed;
    if let Recipe::Explicit { forms } = &spec.recipe {
        return Ok(forms.clone());
    }
    let field = spec.field()?;
    let pure_powers = |degrees: &[u32]| -> Vec<Form> {
        degrees
            .iter()
            .enumerate()
            .map(|(j, &d)| Form::monomial(field, &pure_power(n, j, d), 1))
            .collect()
    };
    let gens = match &spec.recipe {
        Recipe::Explicit { .. } => unreachable!(),
        Recipe::Generic { degrees } => degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| random_form_in(field, n, d, derive_seed(seed, &[i as u64])))
            .collect(),
        Recipe::PowerIdeal { r, d } => (0..*r)
            .map(|i| random_form_in(field, n, 1, derive_seed(seed, &[i as u64])).power(*d))
            .collect(),
        Recipe::MuPower { mu, r } => (0..*r)
            .map(|i| random_mu_product(field, n, mu, derive_seed(seed, &[i as u64])))
            .collect::<Result<Vec<_>>>()?,
        Recipe::PowersOfGeneric { r, d, k } => (0..*r)
            .map(|i| random_form_in(field, n, *d, derive_seed(seed, &[i as u64])).power(*k))
            .collect(),
        Recipe::Stanley { degrees } => {
            let mut g = pure_powers(&degrees[..n]);
            g.push(Form::linear(field, &vec![1; n]).power(degrees[n]));
            g
        }
        Recipe::Gottlieb { degrees } => {
            let mut g = pure_powers(&degrees[..n]);
            g.push(Form::complete_homogeneous(field, n, degrees[n]));
            g
        }
        Recipe::MonomialCi { degrees } => pure_powers(degrees),
        Recipe::Tndk { d, k } => basis(n, *k)
            .monomials()
            .iter()
            .map(|a| {
                let scaled = Monomial::new(a.exponents().iter().map(|e| e * d).collect());
                Form::monomial(field, &scaled, 1)
            })
            .collect(),
    };
    Ok(gens)
}

fn pure_power(n: usize, j: usize, d: u32) -> Monomial {
    let mut e = vec![0; n];
    e[j] = d;
    Monomial::new(e)
}

/// Degree-`d` piece of an ideal, in the coordinates of `S_d / M_d`.
#[derive(Clone, Debug)]
pub struct DegreePiece {
    degree: u32,
    standard: Vec<usize>,
    column: Vec<Option<u32>>,
    echelon: Echelon,
}

impl DegreePiece {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `dim S_d`.
    pub fn ambient_dim(&self) -> usize {
        self.column.len()
    }

    /// `dim I_d`.
    pub fn ideal_dim(&self) -> usize {
        self.column.len() - self.standard.len() + self.echelon.rank()
    }

    /// `dim (S/I)_d`.
    pub fn quotient_dim(&self) -> usize {
        self.standard.len() - self.echelon.rank()
    }

    /// Indices (into the degree-`d` monomial basis) of the monomials outside
    /// the monomial part of the ideal; they span `(S/I)_d`.
    pub fn standard_monomials(&self) -> &[usize] {
        &self.standard
    }

    /// Echelon basis of `I_d / M_d` over the standard-monomial columns.
    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Coordinates of a degree-`d` form modulo the monomial part.
    pub fn project(&self, f: &Form) -> Vec<FpElement> {
        debug_assert_eq!(f.degree(), self.degree);
        self.project_coeffs(f.coeffs())
    }

    pub fn project_coeffs(&self, coeffs: &[FpElement]) -> Vec<FpElement> {
        let mut v = vec![0; self.standard.len()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                if let Some(col) = self.column[i] {
                    v[col as usize] = c;
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &Form) -> bool {
        self.echelon.contains(&self.project(f))
    }

    /// Reduced row echelon basis of `I_d` in full `S_d` coordinates:
    /// unit rows for monomials of the monomial part, then the lifted rows.
    pub fn full_basis(&self) -> Vec<Vec<FpElement>> {
        let dim = self.column.len();
        let mut rows: Vec<Vec<FpElement>> = (0..dim)
            .filter(|&i| self.column[i].is_none())
            .map(|i| {
                let mut r = vec![0; dim];
                r[i] = 1;
                r
            })
            .collect();
        for row in self.echelon.rows() {
            let mut r = vec![0; dim];
            for (c, &a) in row.iter().enumerate() {
                r[self.standard[c]] = a;
            }
            rows.push(r);
        }
        rows
    }
}

/// Per-degree bases of `I_0, ..., I_dmax`.
#[derive(Clone, Debug)]
pub struct GradedSpan {
    field: PrimeField,
    n: usize,
    monomial_generators: Vec<Monomial>,
    pieces: Vec<DegreePiece>,
}

impl GradedSpan {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dmax(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn piece(&self, d: u32) -> Result<&DegreePiece> {
        self.pieces
            .get(d as usize)
            .ok_or(Error::DegreeOutOfRange { degree: d, limit: self.dmax() })
    }

    pub fn monomial_generators(&self) -> &[Monomial] {
        &self.monomial_generators
    }

    /// `dim I_d` for `d = 0..=dmax`.
    pub fn ideal_dims(&self) -> Vec<u64> {
        self.pieces.iter().map(|p| p.ideal_dim() as u64).collect()
    }

    /// `dim (S/I)_d` for `d = 0..=dmax`.
    pub fn hilbert_function(&self) -> Vec<u64> {
        self.pieces.iter().map(|p| p.quotient_dim() as u64).collect()
    }

    /// True when the homogeneous form lies in the ideal.
    pub fn contains(&self, f: &Form) -> Result<bool> {
        Ok(self.piece(f.degree())?.contains(f))
    }
}

/// Builds `I_d = S_1 * I_{d-1} + span(generators of degree d)` for `d <= dmax`.
pub fn graded_span(field: PrimeField, n: usize, gens: &[Form], dmax: u32) -> Result<GradedSpan> {
    let mut monomial_generators: Vec<Monomial> = Vec::new();
    let mut by_degree: Vec<Vec<&Form>> = vec![Vec::new(); dmax as usize + 1];
    for g in gens {
        if g.n() != n || g.field() != field {
            return Err(Error::RingMismatch(format!(
                "generator {g} is not in F_{}[x_1..x_{n}]",
                field.modulus()
            )));
        }
        match g.term_count() {
            0 => {}
            1 => {
                let (m, _) = g.terms().into_iter().next().unwrap();
                if !monomial_generators.iter().any(|h| h.divides(&m)) {
                    monomial_generators.retain(|h| !m.divides(h));
                    monomial_generators.push(m);
                }
            }
            _ => {
                if g.degree() <= dmax {
                    by_degree[g.degree() as usize].push(g);
                }
            }
        }
    }

    let mut pieces: Vec<DegreePiece> = Vec::with_capacity(dmax as usize + 1);
    for d in 0..=dmax {
        let b = basis(n, d);
        let mut column = vec![None; b.len()];
        let mut standard = Vec::new();
        for (i, m) in b.monomials().iter().enumerate() {
            if !monomial_generators.iter().any(|g| g.divides(m)) {
                column[i] = Some(standard.len() as u32);
                standard.push(i);
            }
        }
        let mut echelon = Echelon::new(field, standard.len());
        if d > 0 && !standard.is_empty() {
            let prev = &pieces[d as usize - 1];
            let shift = variable_shift(n, d - 1);
            'rows: for row in prev.echelon.rows() {
                for table in shift.iter() {
                    let mut v = vec![0; standard.len()];
                    let mut nonzero = false;
                    for (c, &a) in row.iter().enumerate() {
                        if a != 0 {
                            if let Some(col) = column[table[prev.standard[c]]] {
                                v[col as usize] = a;
                                nonzero = true;
                            }
                        }
                    }
                    if nonzero {
                        echelon.insert(v);
                        if echelon.is_full() {
                            break 'rows;
                        }
                    }
                }
            }
        }
        let mut piece = DegreePiece { degree: d, standard, column, echelon };
        for g in &by_degree[d as usize] {
            let v = piece.project(g);
            piece.echelon.insert(v);
        }
        piece.echelon.make_reduced();
        pieces.push(piece);
    }
    Ok(GradedSpan { field, n, monomial_generators, pieces })
}

/// Graded span of the ideal described by `spec`.
pub fn span_of_spec(spec: &IdealSpec, dmax: u32) -> Result<GradedSpan> {
    let gens = spec.expand()?;
    graded_span(spec.field()?, spec.n, &gens, dmax)
}

/// `HF(d) = dim S_d - dim I_d` for `d = 0..=dmax`.
pub fn hilbert_function(spec: &IdealSpec, dmax: u32) -> Result<Vec<u64>> {
    Ok(span_of_spec(spec, dmax)?.hilbert_function())
}

/// The conjectured generic series `[prod (1 - t^{d_i}) / (1 - t)^n]_+`.
pub fn froberg_series(n: usize, degrees: &[u32], cap: usize) -> IntSeries {
    series_from_product(n, degrees, cap).truncate_plus()
}

/// Degree where the generic series first vanishes, plus two; `None` when
/// it never vanishes (fewer generators than variables).
pub fn default_dmax(n: usize, degrees: &[u32]) -> Option<u32> {
    let cap: usize = degrees.iter().map(|&d| d as usize).sum::<usize>() + 1;
    series_from_product(n, degrees, cap).first_non_positive().map(|i| i as u32 + 2)
}

/// Lexicographic comparison of an observed Hilbert function with a series.
pub fn lex_compare(observed: &[u64], expected: &[u64]) -> Ordering {
    observed.cmp(expected)
}

fn series_to_u64(s: &IntSeries) -> Vec<u64> {
    s.to_i64_vec().into_iter().map(|c| c.max(0) as u64).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub prime: u64,
    pub hilbert_function: Vec<u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub degree: u32,
    pub expected: u64,
    pub observed: u64,
}

/// Outcome of comparing observed Hilbert functions with the generic series.
#[derive(Clone, Debug, Serialize)]
pub struct FrobergComparison {
    pub spec: IdealSpec,
    pub degrees: Vec<u32>,
    pub dmax: u32,
    pub expected: Vec<u64>,
    pub trials: Vec<TrialRecord>,
    /// Lexicographically smallest observation: the best estimate of the
    /// generic value, since special instances only raise the series.
    pub consensus: Vec<u64>,
    /// Every degree where the consensus differs from the prediction.
    pub deviations: Vec<Deviation>,
    pub verdict: Verdict,
}

/// Runs `trials` seeds over every prime and compares with the generic series.
///
/// Fails hard with [`Error::LexMinimalityBreach`] if any observation is
/// lexicographically smaller than the prediction, which no ideal can be.
pub fn compare_to_froberg(spec: &IdealSpec, dmax: u32, trials: usize, primes: &[u64]) -> Result<FrobergComparison> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if primes.is_empty() {
        return Err(Error::InvalidArgument("at least one prime is required".into()));
    }
    let degrees = spec.generator_degrees()?;
    let expected = series_to_u64(&froberg_series(spec.n, &degrees, dmax as usize));

    let runs: Vec<(u64, u64)> = match &spec.recipe {
        Recipe::Explicit { .. } => vec![(spec.seed, spec.prime)],
        _ if !spec.is_randomized() => primes.iter().map(|&p| (spec.seed, p)).collect(),
        _ => primes
            .iter()
            .flat_map(|&p| (0..trials as u64).map(move |t| (derive_seed(spec.seed, &[t]), p)))
            .collect(),
    };
    let records: Vec<TrialRecord> = runs
        .par_iter()
        .map(|&(seed, prime)| {
            let s = spec.clone().with_seed(seed).with_prime(prime);
            let hf = hilbert_function(&s, dmax)?;
            match lex_compare(&hf, &expected) {
                Ordering::Less => Err(Error::LexMinimalityBreach { observed: hf, expected: expected.clone() }),
                ord => Ok(TrialRecord { seed, prime, matches: ord == Ordering::Equal, hilbert_function: hf }),
            }
        })
        .collect::<Result<_>>()?;

    let consensus = records
        .iter()
        .map(|r| r.hilbert_function.clone())
        .min()
        .expect("at least one run");
    let deviations: Vec<Deviation> = consensus
        .iter()
        .zip(&expected)
        .enumerate()
        .filter(|(_, (o, e))| o != e)
        .map(|(d, (&observed, &expected))| Deviation { degree: d as u32, expected, observed })
        .collect();
    Ok(FrobergComparison {
        spec: spec.clone(),
        degrees,
        dmax,
        expected,
        trials: records,
        verdict: Verdict::from_match(deviations.is_empty()),
        consensus,
        deviations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_of;

    fn fp() -> PrimeField {
        PrimeField::new(1_000_033).unwrap()
    }

    fn mono(f: PrimeField, e: &[u32]) -> Form {
        Form::monomial(f, &Monomial::new(e.to_vec()), 1)
    }

    /// Oracle: dim I_d as the rank of all generator-times-monomial products.
    fn explicit_ideal_dims(f: PrimeField, n: usize, gens: &[Form], dmax: u32) -> Vec<u64> {
        (0..=dmax)
            .map(|d| {
                let rows = gens.iter().filter(|g| g.degree() <= d).flat_map(|g| {
                    basis(n, d - g.degree())
                        .monomials()
                        .iter()
                        .map(|m| g.mul_monomial(m).coeffs().to_vec())
                        .collect::<Vec<_>>()
                });
                rank_of(f, basis(n, d).len(), rows) as u64
            })
            .collect()
    }

    #[test]
    fn stanley_binary_quadrics() {
        let spec = IdealSpec::new(2, Recipe::Stanley { degrees: vec![2, 2, 2] });
        let gens = spec.expand().unwrap();
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x1^2", "x2^2", "x1^2 + 2*x1*x2 + x2^2"]);
        let hf = hilbert_function(&spec, 4).unwrap();
        assert_eq!(hf, series_to_u64(&froberg_series(2, &[2, 2, 2], 4)));
        assert_eq!(hf, [1, 2, 0, 0, 0]);
    }

    #[test]
    fn tndk_expansion() {
        let spec = IdealSpec::new(2, Recipe::Tndk { d: 2, k: 2 });
        let names: Vec<String> = spec.expand().unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x1^4", "x1^2*x2^2", "x2^4"]);
    }

    #[test]
    fn mu_power_shape_and_validation() {
        let spec = IdealSpec::new(2, Recipe::MuPower { mu: vec![1, 1], r: 1 });
        let gens = spec.expand().unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].degree(), 2);
        let bad = IdealSpec::new(2, Recipe::MuPower { mu: vec![1, 2], r: 1 });
        assert_eq!(bad.expand(), Err(Error::InvalidPartition(vec![1, 2])));
        let zero_r = IdealSpec::new(2, Recipe::PowerIdeal { r: 0, d: 2 });
        assert!(zero_r.expand().is_err());
    }

    #[test]
    fn graded_span_examples() {
        let f = fp();
        let gens = [mono(f, &[2, 0]), mono(f, &[0, 2])];
        assert_eq!(explicit_ideal_dims(f, 2, &gens, 3), [0, 0, 2, 4]);
        assert_eq!(graded_span(f, 2, &gens, 3).unwrap().ideal_dims(), [0, 0, 2, 4]);
        assert_eq!(graded_span(f, 2, &[], 4).unwrap().ideal_dims(), [0; 5]);
        let x = [Form::variable(f, 2, 0)];
        assert_eq!(graded_span(f, 2, &x, 3).unwrap().ideal_dims(), [0, 1, 2, 3]);
    }

    #[test]
    fn graded_span_matches_explicit_oracle_on_mixed_ideals() {
        let f = fp();
        for seed in 0..5 {
            let mut gens = vec![mono(f, &[2, 0, 0]), mono(f, &[0, 3, 0])];
            gens.push(random_form_in(f, 3, 2, seed));
            gens.push(random_form_in(f, 3, 3, seed + 9));
            let span = graded_span(f, 3, &gens, 7).unwrap();
            assert_eq!(span.ideal_dims(), explicit_ideal_dims(f, 3, &gens, 7));
        }
    }

    #[test]
    fn hilbert_function_examples() {
        let f = fp();
        let ci = IdealSpec::new(2, Recipe::Explicit { forms: vec![mono(f, &[2, 0]), mono(f, &[0, 2])] });
        assert_eq!(hilbert_function(&ci, 4).unwrap(), [1, 2, 1, 0, 0]);
        let empty = IdealSpec::new(3, Recipe::Explicit { forms: vec![] });
        assert_eq!(hilbert_function(&empty, 3).unwrap(), [1, 3, 6, 10]);
    }

    #[test]
    fn froberg_series_examples() {
        assert_eq!(series_to_u64(&froberg_series(3, &[2, 2, 2, 2], 6)), [1, 3, 2, 0, 0, 0, 0]);
        assert_eq!(series_to_u64(&froberg_series(2, &[2, 2], 4)), [1, 2, 1, 0, 0]);
        assert_eq!(series_to_u64(&froberg_series(3, &[], 3)), [1, 3, 6, 10]);
        assert_eq!(default_dmax(3, &[2, 2, 2, 2]), Some(5));
        assert_eq!(default_dmax(3, &[2, 2]), None);
    }

    #[test]
    fn full_basis_is_reduced_and_spans_the_ideal() {
        let f = fp();
        let gens = [mono(f, &[2, 0, 0]), random_form_in(f, 3, 2, 4)];
        let span = graded_span(f, 3, &gens, 4).unwrap();
        for d in 0..=4 {
            let piece = span.piece(d).unwrap();
            let rows = piece.full_basis();
            assert_eq!(rows.len(), piece.ideal_dim());
            assert_eq!(rank_of(f, piece.ambient_dim(), rows), piece.ideal_dim());
            assert!(piece.echelon().is_reduced());
        }
        assert!(span.contains(&gens[1].mul(&Form::variable(f, 3, 2)).unwrap()).unwrap());
        assert!(!span.contains(&Form::variable(f, 3, 1).power(3)).unwrap());
    }

    #[test]
    fn complete_intersections_have_the_product_series() {
        for n in 2..=4usize {
            for degrees in [vec![2u32, 3], vec![2, 2, 2], vec![3, 2, 2, 2]] {
                if degrees.len() > n {
                    continue;
                }
                let spec = IdealSpec::new(n, Recipe::Generic { degrees: degrees.clone() }).with_seed(11);
                let hf = hilbert_function(&spec, 8).unwrap();
                let full: Vec<u64> = series_from_product(n, &degrees, 8).to_i64_vec().into_iter().map(|c| c as u64).collect();
                assert_eq!(hf, full, "n={n} degrees={degrees:?}");
            }
        }
    }

    #[test]
    fn span_is_independent_of_generator_order() {
        let f = fp();
        let spec = IdealSpec::new(3, Recipe::Generic { degrees: vec![2, 2, 3, 3, 2] }).with_seed(3);
        let gens = spec.expand().unwrap();
        let reference = graded_span(f, 3, &gens, 7).unwrap().ideal_dims();
        let mut rng = crate::seed::rng_from_seed(1);
        for _ in 0..10 {
            let mut g = gens.clone();
            rand::seq::SliceRandom::shuffle(g.as_mut_slice(), &mut rng);
            assert_eq!(graded_span(f, 3, &g, 7).unwrap().ideal_dims(), reference);
        }
    }

    #[test]
    fn compare_reports_match_for_proven_cases() {
        let spec = IdealSpec::new(3, Recipe::Generic { degrees: vec![2, 2, 2, 2] }).with_seed(42);
        let cmp = compare_to_froberg(&spec, 12, 2, &DEFAULT_PRIMES[..2]).unwrap();
        assert_eq!(cmp.verdict, Verdict::Match);
        assert_eq!(cmp.trials.len(), 4);
        assert!(cmp.deviations.is_empty());
        let binary = IdealSpec::new(2, Recipe::Generic { degrees: vec![3, 4, 2, 5] }).with_seed(1);
        assert_eq!(compare_to_froberg(&binary, 10, 2, &DEFAULT_PRIMES).unwrap().verdict, Verdict::Match);
    }

    #[test]
    fn compare_rejects_empty_inputs() {
        let spec = IdealSpec::new(2, Recipe::Generic { degrees: vec![2] });
        assert!(compare_to_froberg(&spec, 4, 0, &DEFAULT_PRIMES).is_err());
        assert!(compare_to_froberg(&spec, 4, 1, &[]).is_err());
    }

    #[test]
    fn special_ideals_deviate_upward() {
        // Squares of variables plus one more square: far from generic when
        // the extra form is x1^2 itself.
        let f = fp();
        let forms = vec![mono(f, &[2, 0, 0]), mono(f, &[0, 2, 0]), mono(f, &[0, 0, 2]), mono(f, &[2, 0, 0])];
        let spec = IdealSpec::new(3, Recipe::Explicit { forms });
        let cmp = compare_to_froberg(&spec, 5, 1, &[1_000_033]).unwrap();
        assert_eq!(cmp.verdict, Verdict::Deviates);
        assert_eq!(cmp.deviations[0], Deviation { degree: 2, expected: 2, observed: 3 });
    }

    #[test]
    fn binary_mu_power_and_powers_of_generic_attain_the_series() {
        for (mu, r) in [(vec![2, 1], 3), (vec![1, 1, 1], 4), (vec![3, 2], 2)] {
            let spec = IdealSpec::new(2, Recipe::MuPower { mu, r }).with_seed(8);
            let cmp = compare_to_froberg(&spec, 10, 2, &DEFAULT_PRIMES[..2]).unwrap();
            assert_eq!(cmp.verdict, Verdict::Match);
        }
        for (r, d, k) in [(3, 2, 2), (4, 2, 3), (3, 3, 2)] {
            let spec = IdealSpec::new(2, Recipe::PowersOfGeneric { r, d, k }).with_seed(8);
            let cmp = compare_to_froberg(&spec, 12, 2, &DEFAULT_PRIMES[..2]).unwrap();
            assert_eq!(cmp.verdict, Verdict::Match);
        }
    }
}
