//! Exact finite-field workbench for generic-form algebra.
//!
//! Random coefficients over a large prime stand in for generic complex
//! coefficients: every quantity computed here (Hilbert functions, ranks of
//! multiplication maps, secant dimensions) is attained on a Zariski-open set,
//! so random instances over F_p hit the generic value with high probability.
//! Experiments are repeated over several primes and seeds and report their
//! provenance.

pub mod arith;
pub mod error;
pub mod field;
pub mod exterior;
pub mod form;
pub mod fp_dynamics;
pub mod hilbert;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod points;
pub mod report;
pub mod seed;
pub mod semigroup;
pub mod series;
pub mod waring;

pub use error::{Error, Result};
pub use exterior::{annihilator_dims, lattice_path_count, random_ext_form, two_quadrics_check, ExtForm, TwoQuadricsReport};
pub use field::{FpElement, PrimeField, DEFAULT_PRIMES};
pub use form::{random_form, random_form_in, Form};
pub use fp_dynamics::{find_period_phi, phi, psi, psi_order, FpFuncPoly};
pub use hilbert::{
    compare_to_froberg, expand_spec, froberg_series, graded_span, hilbert_function, FrobergComparison, GradedSpan,
    IdealSpec, Recipe,
};
pub use lefschetz::{mu_lefschetz_test, slp_test, wlp_test, LefschetzProperty, LefschetzVerdict};
pub use monomial::{monomial_basis, Monomial};
pub use points::PointConfig;
pub use report::Verdict;
pub use seed::derive_seed;
pub use semigroup::{conjecture_check, IntPolynomial, NumericalSemigroup};
pub use series::{series_from_product, IntSeries};
pub use waring::{generic_rank, RankQuery};
