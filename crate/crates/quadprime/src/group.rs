//! The norm-one subgroup of `Z[sqrt(D)] / N` — the group the primality
//! tests actually walk around in — plus exhaustive small-modulus oracles
//! used to validate its structure.
//!
//! For an odd prime `p` not dividing `D`, the subgroup
//! `{a + b*sqrt(D) : a^2 - D*b^2 = 1 (mod p)}` is cyclic of order
//! `p - (D/p)`; for composite odd `N` it splits as a direct product over
//! the prime-power factors. The enumeration oracles here verify both facts
//! by brute force, independent of the bignum ring code.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::baseline::is_small_prime;
use crate::ring::{QuadRing, RingElement};
use crate::symbols::{kronecker, kronecker_i64, Symbol};

/// Default cap for [`group_order_bruteforce`].
pub const ORDER_ENUMERATION_CAP: u64 = 10_000;
/// Default cap for [`is_cyclic_bruteforce`].
pub const CYCLIC_ENUMERATION_CAP: u64 = 500;
/// Default cap on `m * n` for [`product_splitting_check`].
pub const SPLITTING_CAP: u64 = 10_000;

/// An element of the norm-one group: a [`RingElement`] whose norm reduced
/// to 1 at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    elem: RingElement,
}

impl GroupElement {
    /// Admit `elem` after checking `norm(elem) = 1 (mod N)`.
    pub fn new(ring: &QuadRing, elem: RingElement) -> Result<GroupElement, NotNormOne> {
        let norm = ring.norm(&elem);
        if norm.is_one() {
            Ok(GroupElement { elem })
        } else {
            Err(NotNormOne { norm })
        }
    }

    pub fn element(&self) -> &RingElement {
        &self.elem
    }

    pub fn into_element(self) -> RingElement {
        self.elem
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}

/// The candidate element's norm was not 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotNormOne {
    pub norm: BigUint,
}

impl fmt::Display for NotNormOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "element has norm {} instead of 1", self.norm)
    }
}

impl std::error::Error for NotNormOne {}

/// The seed element's norm shares `factor = gcd(norm(z), N) > 1` with the
/// modulus. When the factor is a proper divisor it exhibits `N` composite
/// outright; `factor = N` (a zero divisor of full norm) also certifies
/// compositeness whenever `(D/N) = -1`, because the prime case would be a
/// field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeWitness {
    pub factor: BigUint,
}

impl fmt::Display for CompositeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seed norm shares factor {} with the modulus", self.factor)
    }
}

/// Is `x` in the norm-one group?
pub fn is_member(ring: &QuadRing, x: &RingElement) -> bool {
    ring.norm(x).is_one()
}

/// Turn an arbitrary nonzero seed `z` into a group member `w = z / conj(z)`,
/// or surface the factor of `N` that blocks the division.
///
/// The norm of `z / conj(z)` is identically 1 — even modulo a composite —
/// so the returned element is always a member. Panics if `z = 0`.
pub fn generate_base(ring: &QuadRing, z: &RingElement) -> Result<GroupElement, CompositeWitness> {
    assert!(!z.is_zero(), "base seed must be nonzero");
    let conj = ring.conjugate(z);
    let conj_inv = match ring.try_invert(&conj) {
        Ok(inv) => inv,
        Err(err) => return Err(CompositeWitness { factor: err.gcd }),
    };
    let w = ring.mul(z, &conj_inv);
    Ok(GroupElement::new(ring, w).expect("z / conj(z) always has norm 1"))
}

/// The Euler-style order formula `n - (D/n)`: for an odd prime `n` this is
/// exactly the size of the norm-one group, and it plays the role `n - 1`
/// plays for the classical multiplicative group elsewhere.
///
/// Panics unless `n >= 2` and `gcd(n, D) = 1`.
pub fn expected_group_order(d: &BigInt, n: &BigUint) -> BigUint {
    assert!(
        n.gcd(d.magnitude()).is_one(),
        "order formula requires gcd(n, D) = 1"
    );
    match kronecker(d, n) {
        Symbol::MinusOne => n + 1u32,
        Symbol::One => n - 1u32,
        Symbol::Zero => unreachable!("gcd(n, D) = 1 rules out a zero symbol"),
    }
}

/// Machine-word variant of [`expected_group_order`].
pub fn expected_group_order_u64(d: i64, n: u64) -> u64 {
    match kronecker_i64(d, n) {
        Symbol::MinusOne => n + 1,
        Symbol::One => n - 1,
        Symbol::Zero => panic!("order formula requires gcd(n, D) = 1"),
    }
}

/// A brute-force cap was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapExceeded {
    pub cap: u64,
    pub value: u64,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "modulus {} exceeds enumeration cap {}", self.value, self.cap)
    }
}

impl std::error::Error for CapExceeded {}

/// Multiply in the machine-word model of `Z[sqrt(D)] / n`.
/// `d_mod` is `D` already reduced into `[0, n)`.
pub(crate) fn small_mul(n: u64, d_mod: u64, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
    let n128 = n as u128;
    let a = (x.0 as u128 * y.0 as u128 + d_mod as u128 * (x.1 as u128 * y.1 as u128 % n128)) % n128;
    let b = (x.0 as u128 * y.1 as u128 + x.1 as u128 * y.0 as u128) % n128;
    (a as u64, b as u64)
}

/// Raise to a power in the machine-word model.
pub(crate) fn small_pow(n: u64, d_mod: u64, x: (u64, u64), mut e: u64) -> (u64, u64) {
    let mut acc = (1u64, 0u64);
    let mut base = x;
    while e > 0 {
        if e & 1 == 1 {
            acc = small_mul(n, d_mod, acc, base);
        }
        base = small_mul(n, d_mod, base, base);
        e >>= 1;
    }
    acc
}

/// All pairs `(a, b)` in `[0, n)^2` with `a^2 - D b^2 = 1 (mod n)`, by a
/// full scan of the coordinate square. `n` may be composite.
pub fn enumerate_norm_one(n: u64, d: i64, cap: u64) -> Result<Vec<(u64, u64)>, CapExceeded> {
    assert!(n >= 2, "enumeration needs n >= 2");
    if n > cap {
        return Err(CapExceeded { cap, value: n });
    }
    let d_mod = d.rem_euclid(n as i64) as u64;
    let neg_d = (n - d_mod) % n;
    let n128 = n as u128;
    let mut members = Vec::new();
    for b in 0..n {
        let t = (neg_d as u128 * (b as u128 * b as u128 % n128)) % n128;
        for a in 0..n {
            if (a as u128 * a as u128 + t) % n128 == 1 {
                members.push((a, b));
            }
        }
    }
    Ok(members)
}

/// Scan the coordinate square and feed each norm-one member to `check` as it
/// is found; stop early and return `false` at the first member that fails.
/// Exhaustive pseudoprimality checks lean on the early exit: almost every
/// composite modulus is refuted by one of its first few members, so only
/// genuine pseudoprimes pay for a full scan.
pub(crate) fn enumerate_members_interleaved<F>(n: u64, d: i64, mut check: F) -> bool
where
    F: FnMut((u64, u64)) -> bool,
{
    assert!(n >= 2, "enumeration needs n >= 2");
    let d_mod = d.rem_euclid(n as i64) as u64;
    let neg_d = (n - d_mod) % n;
    let n128 = n as u128;
    for b in 0..n {
        let t = (neg_d as u128 * (b as u128 * b as u128 % n128)) % n128;
        for a in 0..n {
            if (a as u128 * a as u128 + t) % n128 == 1 && !check((a, b)) {
                return false;
            }
        }
    }
    true
}

/// Order of the norm-one group modulo an odd prime `p`, by exhaustive count.
///
/// For `p` not dividing `D` this must equal `p - (D/p)`; the oracle does
/// not assume that, it counts. Panics if `p` is not an odd prime.
pub fn group_order_bruteforce(p: u64, d: i64) -> Result<u64, CapExceeded> {
    group_order_bruteforce_with_cap(p, d, ORDER_ENUMERATION_CAP)
}

/// [`group_order_bruteforce`] with an explicit cap.
pub fn group_order_bruteforce_with_cap(p: u64, d: i64, cap: u64) -> Result<u64, CapExceeded> {
    assert!(p % 2 == 1 && is_small_prime(p), "modulus must be an odd prime");
    Ok(enumerate_norm_one(p, d, cap)?.len() as u64)
}

/// Is the norm-one group modulo an odd prime `p` cyclic? Answered by
/// computing every element's order. Panics if `p` is not an odd prime.
pub fn is_cyclic_bruteforce(p: u64, d: i64) -> Result<bool, CapExceeded> {
    is_cyclic_bruteforce_with_cap(p, d, CYCLIC_ENUMERATION_CAP)
}

/// [`is_cyclic_bruteforce`] with an explicit cap.
pub fn is_cyclic_bruteforce_with_cap(p: u64, d: i64, cap: u64) -> Result<bool, CapExceeded> {
    assert!(p % 2 == 1 && is_small_prime(p), "modulus must be an odd prime");
    let members = enumerate_norm_one(p, d, cap)?;
    let size = members.len() as u64;
    let d_mod = d.rem_euclid(p as i64) as u64;
    for &m in &members {
        let mut acc = m;
        let mut order = 1u64;
        while acc != (1, 0) {
            acc = small_mul(p, d_mod, acc, m);
            order += 1;
            debug_assert!(order <= size, "order cannot exceed the group size");
        }
        if order == size {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Verify, by enumeration, that the norm-one group modulo `m * n` is the
/// direct product of the groups modulo `m` and modulo `n`: the reduction
/// map must be a bijection onto the coordinate pairs.
///
/// Panics unless `m, n` are odd, at least 3, and coprime.
pub fn product_splitting_check(m: u64, n: u64, d: i64) -> Result<bool, CapExceeded> {
    product_splitting_check_with_cap(m, n, d, SPLITTING_CAP)
}

/// [`product_splitting_check`] with an explicit cap on `m * n`.
pub fn product_splitting_check_with_cap(
    m: u64,
    n: u64,
    d: i64,
    cap: u64,
) -> Result<bool, CapExceeded> {
    assert!(m >= 3 && n >= 3 && m % 2 == 1 && n % 2 == 1, "moduli must be odd and >= 3");
    assert_eq!(m.gcd(&n), 1, "moduli must be coprime");
    let mn = m * n;
    if mn > cap {
        return Err(CapExceeded { cap, value: mn });
    }
    let big = enumerate_norm_one(mn, d, cap)?;
    let left = enumerate_norm_one(m, d, cap)?;
    let right = enumerate_norm_one(n, d, cap)?;
    if big.len() != left.len() * right.len() {
        return Ok(false);
    }
    let left_set: HashSet<(u64, u64)> = left.into_iter().collect();
    let right_set: HashSet<(u64, u64)> = right.into_iter().collect();
    let mut images = HashSet::with_capacity(big.len());
    for (a, b) in big {
        let lower = (a % m, b % m);
        let upper = (a % n, b % n);
        if !left_set.contains(&lower) || !right_set.contains(&upper) {
            return Ok(false); // reduction left the coordinate groups: impossible
        }
        if !images.insert((lower, upper)) {
            return Ok(false); // reduction not injective
        }
    }
    // |image| = |big| = |left| * |right| and image is inside the product:
    // the map is a bijection.
    Ok(true)
}
