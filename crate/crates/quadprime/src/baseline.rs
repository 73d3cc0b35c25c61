//! Independent classical primality oracle.
//!
//! This module deliberately knows nothing about quadratic rings: it exists
//! so that every verdict produced by the group-based tests can be
//! cross-checked against textbook methods. Keep it boring and auditable.
//!
//! * `N <= 10^12`: trial division with a mod-30 wheel, reporting the
//!   smallest factor of composites.
//! * larger `N` below a published bound: Miller–Rabin with the first 13
//!   primes as bases, which is known to be deterministic in that range.
//! * beyond that: 64 Miller–Rabin rounds with fixed-seed pseudorandom bases;
//!   the verdict is flagged as probabilistic.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest `N` resolved by pure trial division.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000_000_000;

/// Below this bound, Miller–Rabin with [`DETERMINISTIC_BASES`] has no
/// strong pseudoprimes (Sorenson–Webster), so the answer is exact.
/// The value is 3,317,044,064,679,887,385,961,981.
const DETERMINISTIC_LIMIT_DECIMAL: &str = "3317044064679887385961981";

/// First 13 primes; see [`DETERMINISTIC_LIMIT_DECIMAL`].
pub const DETERMINISTIC_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Rounds used on inputs too large for the deterministic base set.
pub const PROBABILISTIC_ROUNDS: u32 = 64;

/// Fixed seed for the probabilistic bases, so runs are reproducible.
const BASE_SEED: u64 = 0x5eed_ba5e_0000_0001;

/// How a [`BaselineVerdict`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineMethod {
    /// Exhaustive trial division up to the square root.
    TrialDivision,
    /// Miller–Rabin with a base set proven complete for the input size.
    DeterministicMillerRabin,
    /// Miller–Rabin with pseudorandom bases; a "prime" answer is only
    /// overwhelmingly probable, not proven.
    ProbabilisticMillerRabin { rounds: u32 },
}

/// Result of the classical oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaselineVerdict {
    pub is_prime: bool,
    pub method: BaselineMethod,
    /// Present exactly when the method was trial division and the input
    /// composite.
    pub smallest_factor: Option<u64>,
}

/// Classify `n` as prime or composite with classical machinery only.
pub fn baseline_is_prime(n: &BigUint) -> BaselineVerdict {
    if let Some(small) = n.to_u64() {
        if small <= TRIAL_DIVISION_LIMIT {
            let (is_prime, smallest_factor) = trial_division(small);
            return BaselineVerdict {
                is_prime,
                method: BaselineMethod::TrialDivision,
                smallest_factor,
            };
        }
    }
    if n.is_even() {
        // Miller-Rabin below assumes an odd input; dividing by 2 settles it.
        return BaselineVerdict {
            is_prime: false,
            method: BaselineMethod::TrialDivision,
            smallest_factor: Some(2),
        };
    }
    let deterministic_limit = BigUint::parse_bytes(DETERMINISTIC_LIMIT_DECIMAL.as_bytes(), 10)
        .expect("valid decimal literal");
    if *n < deterministic_limit {
        let is_prime = DETERMINISTIC_BASES
            .iter()
            .all(|&a| miller_rabin_round(n, &BigUint::from(a)));
        return BaselineVerdict {
            is_prime,
            method: BaselineMethod::DeterministicMillerRabin,
            smallest_factor: None,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(BASE_SEED);
    let two = BigUint::from(2u32);
    let upper = n - &two; // bases drawn from [2, n-2]
    let is_prime = (0..PROBABILISTIC_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &upper);
        miller_rabin_round(n, &a)
    });
    BaselineVerdict {
        is_prime,
        method: BaselineMethod::ProbabilisticMillerRabin { rounds: PROBABILISTIC_ROUNDS },
        smallest_factor: None,
    }
}

/// Primality of a machine-word integer (trial division; exact).
pub fn is_small_prime(n: u64) -> bool {
    trial_division(n).0
}

/// Trial division with a mod-30 wheel. Returns primality and, for
/// composites, the smallest prime factor.
fn trial_division(n: u64) -> (bool, Option<u64>) {
    if n < 2 {
        return (false, None);
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return (true, None);
        }
        if n % p == 0 {
            return (false, Some(p));
        }
    }
    // residues coprime to 30, starting from 7
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut f = 7u64;
    let mut spin = WHEEL.iter().cycle();
    while f * f <= n {
        if n % f == 0 {
            return (false, Some(f));
        }
        f += spin.next().unwrap();
    }
    (true, None)
}

/// Factor `n` by trial division with candidates up to `limit`.
///
/// Returns prime-exponent pairs in increasing prime order. If a cofactor
/// survives with no candidate left below `limit`, it is classified with
/// [`baseline_is_prime`]: a prime cofactor joins the factorization, a
/// composite one is returned as `Err` (factorization incomplete).
pub fn factorize(n: u64, limit: u64) -> Result<Vec<(u64, u32)>, u64> {
    assert!(n >= 1, "factorize: n must be positive");
    let mut rest = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, rest: &mut u64, out: &mut Vec<(u64, u32)>| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u64, 3, 5] {
        if p > limit {
            break;
        }
        push(p, &mut rest, &mut out);
    }
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut f = 7u64;
    let mut spin = WHEEL.iter().cycle();
    while f <= limit && f * f <= rest {
        push(f, &mut rest, &mut out);
        f += spin.next().unwrap();
    }
    if rest > 1 {
        if baseline_is_prime(&BigUint::from(rest)).is_prime {
            out.push((rest, 1));
        } else {
            return Err(rest);
        }
    }
    Ok(out)
}

/// One Miller–Rabin round: does `n` look prime to base `a`?
fn miller_rabin_round(n: &BigUint, a: &BigUint) -> bool {
    debug_assert!(n.is_odd() && *n > BigUint::from(2u32));
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let a = a % n;
    if a.is_zero() {
        return true; // base divisible by n says nothing
    }
    let s = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}
