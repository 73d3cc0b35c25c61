//! Composites that fool the plain order test in the norm-one group.
//!
//! With `F(n) = n - (D/n)` playing the role the classical `n - 1` plays for
//! the multiplicative group, a composite `N` is a group pseudoprime to every
//! base when each member `w` of the norm-one group satisfies `w^F(N) = 1` —
//! the analogue of a Carmichael number. The Korselt-style criterion
//! implemented by [`korselt_check`] characterizes them arithmetically: `N`
//! odd, composite, square-free, coprime to `D`, with `F(p) | F(N)` for every
//! prime `p | N`. [`is_carmichael_by_enumeration`] settles the same question
//! straight from the definition by walking every group member, which is what
//! makes the criterion testable.

use num_traits::One;

use rayon::prelude::*;

use crate::baseline::factorize;
use crate::group::{enumerate_members_interleaved, expected_group_order, CapExceeded};
use crate::ring::{QuadRing, RingElement};

/// Largest modulus [`is_carmichael_by_enumeration`] will scan by default;
/// the scan walks `n^2` coordinate pairs.
pub const ENUMERATION_MODULUS_CAP: u64 = 10_000;

/// Largest range end [`search_carmichael`] accepts.
pub const SEARCH_LIMIT: u64 = 10_000_000;

/// One prime factor's contribution to the Korselt-style criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityEntry {
    /// A prime dividing the number under test.
    pub prime: u64,
    /// `F(prime)`, the local group order at that prime.
    pub local_order: u64,
    /// Whether `F(prime)` divides `F(n)`.
    pub divides: bool,
}

/// Full transcript of a Korselt-style check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarmichaelReport {
    pub n: u64,
    pub d: i64,
    /// `F(n) = n - (D/n)`; absent when `n` shares a factor with `D`.
    pub expected_order: Option<u64>,
    /// Primes are never Carmichael analogues; flagged so callers can tell
    /// "prime" apart from "composite but honest".
    pub input_prime: bool,
    pub square_free: bool,
    pub coprime_to_discriminant: bool,
    /// Per-prime divisibility record; empty when `n` shares a factor with `D`.
    pub entries: Vec<DivisibilityEntry>,
    /// The verdict: composite, square-free, coprime to `D`, and every
    /// `F(p) | F(n)`.
    pub is_carmichael: bool,
}

/// Decide by factorization whether `n` fools the order test to every base.
///
/// Panics unless `n` is odd, at least 3, and below `10^12` (so trial
/// division can complete its factorization), and `d` is nonzero.
pub fn korselt_check(n: u64, d: i64) -> CarmichaelReport {
    assert!(n >= 3 && n % 2 == 1, "check needs an odd n >= 3");
    assert!(n < 1_000_000_000_000, "factorization by trial division needs n < 10^12");
    assert!(d != 0, "discriminant must be nonzero");
    let factors = factorize(n, 1_000_000).expect("complete below 10^12");
    let input_prime = factors.len() == 1 && factors[0].1 == 1;
    let square_free = factors.iter().all(|&(_, e)| e == 1);
    let coprime_to_discriminant = factors.iter().all(|&(p, _)| d % (p as i64) != 0);

    let (expected_order, entries) = if coprime_to_discriminant {
        let order = crate::group::expected_group_order_u64(d, n);
        let entries = factors
            .iter()
            .map(|&(p, _)| {
                let local_order = crate::group::expected_group_order_u64(d, p);
                DivisibilityEntry { prime: p, local_order, divides: order % local_order == 0 }
            })
            .collect();
        (Some(order), entries)
    } else {
        (None, Vec::new())
    };

    let is_carmichael = !input_prime
        && square_free
        && coprime_to_discriminant
        && entries.iter().all(|e| e.divides);

    CarmichaelReport {
        n,
        d,
        expected_order,
        input_prime,
        square_free,
        coprime_to_discriminant,
        entries,
        is_carmichael,
    }
}

/// Does this norm-one member pass the plain order test, `w^F(n) = 1`?
///
/// Panics if `w` is not a norm-one member or if the modulus shares a factor
/// with `D` (no order formula applies there).
pub fn pseudoprime_base_check(ring: &QuadRing, w: &RingElement) -> bool {
    assert!(ring.norm(w).is_one(), "order test expects a norm-one member");
    let order = expected_group_order(ring.d(), ring.modulus());
    ring.pow(w, &order).is_one()
}

/// Decide straight from the definition whether every norm-one member of the
/// ring modulo `n` satisfies `w^F(n) = 1`, by enumerating all of them.
///
/// Primes and moduli sharing a factor with `D` come back `false` (the first
/// are excluded by definition, the second have no `F`). Composites that are
/// not pseudoprime to every base exit at the first failing member, so the
/// quadratic scan only runs to completion on actual Carmichael analogues.
pub fn is_carmichael_by_enumeration(n: u64, d: i64) -> Result<bool, CapExceeded> {
    is_carmichael_by_enumeration_with_cap(n, d, ENUMERATION_MODULUS_CAP)
}

/// [`is_carmichael_by_enumeration`] with an explicit modulus cap.
pub fn is_carmichael_by_enumeration_with_cap(
    n: u64,
    d: i64,
    cap: u64,
) -> Result<bool, CapExceeded> {
    assert!(n >= 3 && n % 2 == 1, "check needs an odd n >= 3");
    assert!(d != 0, "discriminant must be nonzero");
    if n > cap {
        return Err(CapExceeded { cap, value: n });
    }
    if num_integer::gcd(n, d.unsigned_abs()) != 1 {
        return Ok(false);
    }
    if crate::baseline::is_small_prime(n) {
        return Ok(false);
    }
    let order = crate::group::expected_group_order_u64(d, n);
    let d_mod = d.rem_euclid(n as i64) as u64;
    let all_pass = enumerate_members_interleaved(n, d, |member| {
        crate::group::small_pow(n, d_mod, member, order) == (1, 0)
    });
    Ok(all_pass)
}

/// All Carmichael analogues for discriminant `d` among odd numbers in
/// `[lo, hi]`, by the Korselt-style criterion. Ascending order.
///
/// Panics if `hi` exceeds [`SEARCH_LIMIT`] or `d` is zero.
pub fn search_carmichael(lo: u64, hi: u64, d: i64) -> Vec<u64> {
    assert!(hi <= SEARCH_LIMIT, "search range capped at {SEARCH_LIMIT}");
    assert!(d != 0, "discriminant must be nonzero");
    let lo = lo.max(3);
    if lo > hi {
        return Vec::new();
    }
    (lo..=hi)
        .into_par_iter()
        .filter(|&n| n % 2 == 1 && korselt_check(n, d).is_carmichael)
        .collect()
}
