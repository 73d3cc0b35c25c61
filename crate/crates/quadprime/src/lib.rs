//! Primality testing for numbers of the form `N = m * p^l - 1` using the
//! multiplicative group of norm-one elements of the quadratic ring
//! `Z[sqrt(D)] / N`.
//!
//! For a square-free integer `D` with Jacobi symbol `(D/N) = -1`, the set
//! `{a + b*sqrt(D) : a^2 - D*b^2 = 1 (mod N)}` forms a group whose order is
//! `N + 1` exactly when `N` is prime. Driving a random element of that group
//! through the descending power sequence `S_0 = w^m`, `S_i = S_{i-1}^p`
//! yields either a primality certificate, a compositeness witness, or a
//! strong-probable-prime outcome, in the spirit of the classical
//! Lucas–Lehmer and Miller–Rabin tests.
//!
//! # Example
//!
//! ```
//! use quadprime::engine::{build_family_params, lucasian_test_seeded, DEFAULT_RETRIES};
//!
//! // D = -2 has canonical multiplier 8, which forces (D/N) = -1 for every
//! // N = 8k * 3^l - 1; with k = 1 and l = 10 this is N = 472391.
//! let params = build_family_params(-2, 1, 3, 10).unwrap();
//! assert_eq!(params.n().to_string(), "472391");
//!
//! // Deterministic for a fixed seed; the verdict carries its certificate.
//! let outcome = lucasian_test_seeded(&params, 0, DEFAULT_RETRIES);
//! assert!(outcome.is_prime());
//! ```
//!
//! Module map:
//!
//! * [`symbols`] — Jacobi/Kronecker symbols and the exact certificate
//!   threshold comparison.
//! * [`ring`] — arithmetic in `Z[sqrt(D)] / N` (element construction,
//!   multiplication, conjugation, norm, inversion, powering).
//! * [`group`] — the norm-one subgroup: membership, base generation from a
//!   random seed element, expected orders, and small-modulus enumeration
//!   oracles used by the test suites.
//! * [`engine`] — the staged primality test and its single-exponentiation,
//!   strong-probable-prime and Miller–Rabin-style variants.
//! * [`carmichael`] — the Fermat-analogue pseudoprime machinery: Korselt-style
//!   divisibility checks and exhaustive searches for absolute pseudoprimes.
//! * [`baseline`] — an independent classical primality oracle (trial division
//!   plus Miller–Rabin) used to cross-check every verdict in the test suites.

pub mod baseline;
pub mod carmichael;
pub mod engine;
pub mod group;
pub mod ring;
pub mod symbols;

pub use engine::{FormParams, TestOutcome};
pub use ring::{QuadRing, RingElement};
pub use symbols::{jacobi, kronecker, Symbol};
