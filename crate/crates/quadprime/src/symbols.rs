//! Exact integer number-theoretic primitives: Jacobi and Kronecker symbols
//! and the certificate threshold comparison.
//!
//! Everything here is pure integer arithmetic. No floating point is used
//! anywhere — the threshold comparison in particular is a soundness-critical
//! exact integer inequality.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Value of a Jacobi/Kronecker symbol: -1, 0 or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    MinusOne,
    Zero,
    One,
}

impl Symbol {
    /// The symbol as a plain integer in {-1, 0, +1}.
    pub fn as_i8(self) -> i8 {
        match self {
            Symbol::MinusOne => -1,
            Symbol::Zero => 0,
            Symbol::One => 1,
        }
    }

    fn from_sign(sign: i8) -> Symbol {
        match sign {
            -1 => Symbol::MinusOne,
            1 => Symbol::One,
            _ => Symbol::Zero,
        }
    }

    pub fn is_minus_one(self) -> bool {
        self == Symbol::MinusOne
    }
}

impl core::ops::Neg for Symbol {
    type Output = Symbol;
    fn neg(self) -> Symbol {
        match self {
            Symbol::MinusOne => Symbol::One,
            Symbol::Zero => Symbol::Zero,
            Symbol::One => Symbol::MinusOne,
        }
    }
}

impl core::ops::Mul for Symbol {
    type Output = Symbol;
    fn mul(self, rhs: Symbol) -> Symbol {
        Symbol::from_sign(self.as_i8() * rhs.as_i8())
    }
}

/// Jacobi symbol (a / n) for odd positive n.
///
/// Computed with the binary algorithm (factor out powers of two, apply the
/// supplement for 2, then quadratic reciprocity and swap), so `n` never needs
/// to be factored. `a` may be negative or larger than `n`; it is reduced
/// modulo `n` first.
///
/// Panics if `n` is even or zero.
pub fn jacobi(a: &BigInt, n: &BigUint) -> Symbol {
    assert!(!n.is_zero() && n.is_odd(), "jacobi: n must be odd and positive");
    let n_int = BigInt::from(n.clone());
    // mod_floor: representative in [0, n)
    let mut a = a.mod_floor(&n_int).to_biguint().expect("non-negative");
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz % 2 == 1 {
            // (2/n) = -1 exactly when n = +-3 (mod 8)
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        a >>= tz;
        // reciprocity: both arguments are now odd
        let a_mod4 = (&a % 4u32).to_u32().unwrap();
        let n_mod4 = (&n % 4u32).to_u32().unwrap();
        if a_mod4 == 3 && n_mod4 == 3 {
            sign = -sign;
        }
        core::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        Symbol::from_sign(sign)
    } else {
        Symbol::Zero
    }
}

/// Kronecker symbol (a / n) for n >= 2.
///
/// Extends the Jacobi symbol to even `n` by splitting off the 2-part of `n`
/// and applying the standard convention for (a / 2): zero when `a` is even,
/// +1 when a = +-1 (mod 8), -1 when a = +-3 (mod 8).
///
/// Panics if `n < 2`.
pub fn kronecker(a: &BigInt, n: &BigUint) -> Symbol {
    assert!(n >= &BigUint::from(2u32), "kronecker: n must be at least 2");
    let e = n.trailing_zeros().unwrap_or(0);
    let odd_part = n >> e;
    let mut result = if e == 0 {
        Symbol::One
    } else if a.is_even() {
        return Symbol::Zero;
    } else if e % 2 == 0 {
        Symbol::One
    } else {
        let r = a.mod_floor(&BigInt::from(8)).to_u32().unwrap();
        if r == 1 || r == 7 {
            Symbol::One
        } else {
            Symbol::MinusOne
        }
    };
    if odd_part.is_one() {
        return result;
    }
    result = result * jacobi(a, &odd_part);
    result
}

/// Jacobi symbol for machine-word arguments.
pub fn jacobi_i64(a: i64, n: u64) -> Symbol {
    jacobi(&BigInt::from(a), &BigUint::from(n))
}

/// Kronecker symbol for machine-word arguments.
pub fn kronecker_i64(a: i64, n: u64) -> Symbol {
    kronecker(&BigInt::from(a), &BigUint::from(n))
}

/// Whether a certificate index `j` found at stage `j` of the descending power
/// sequence is large enough to prove primality of N = m * p^l - 1.
///
/// The condition is the exact integer inequality `p^(2j) >= m * p^l`, i.e.
/// `p^(2j) >= N + 1`. Floating-point logarithms are never used: for j close
/// to the boundary a rounded comparison could silently turn an unproven
/// candidate into a claimed prime.
///
/// Panics unless `1 <= j <= l`.
pub fn certificate_threshold_met(p: u64, j: u32, m: &BigUint, ell: u32) -> bool {
    assert!(j >= 1 && j <= ell, "certificate_threshold_met: need 1 <= j <= l");
    let p = BigUint::from(p);
    p.pow(2 * j) >= m * p.pow(ell)
}
