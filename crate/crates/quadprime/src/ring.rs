//! Arithmetic in the quadratic ring `Z[sqrt(D)] / N`.
//!
//! A [`QuadRing`] fixes the pair `(D, N)` — `D` a square-free nonzero
//! integer, `N` an odd modulus at least 3 — and hands out [`RingElement`]
//! values `a + b*sqrt(D)` with both coordinates kept reduced into `[0, N)`.
//! All operations go through the ring so that elements of different rings
//! can never be mixed (doing so is a programming error and panics).
//!
//! `N` is *not* assumed prime anywhere: inversion reports the offending
//! gcd instead of failing when it meets a zero divisor, because discovering
//! a factor of `N` mid-computation is a result, not an error.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::symbols::{jacobi, Symbol};

/// Bound for the default square-freeness check of `D`: trial division by
/// every candidate up to this limit fully verifies any `|D| <= bound^2`.
pub const DEFAULT_SQUAREFREE_BOUND: u64 = 1_000_000;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Why a [`QuadRing`] could not be constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// The modulus must be odd (quadratic reciprocity bookkeeping and the
    /// `(N+1)/2` half-point all assume it).
    EvenModulus,
    /// The modulus must be at least 3.
    ModulusTooSmall,
    /// `D = 0` does not give a quadratic extension.
    ZeroD,
    /// A repeated prime factor of `D` was found.
    NotSquareFree { factor: BigUint },
    /// `|D|` exceeds `bound^2` and no factor was found up to `bound`;
    /// square-freeness could not be fully verified. Use
    /// [`QuadRing::new_unchecked_squarefree`] to accept `D` as given.
    SquareFreeUnverified { bound: u64 },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::EvenModulus => write!(f, "modulus must be odd"),
            RingError::ModulusTooSmall => write!(f, "modulus must be at least 3"),
            RingError::ZeroD => write!(f, "D must be nonzero"),
            RingError::NotSquareFree { factor } => {
                write!(f, "D has repeated factor {factor}")
            }
            RingError::SquareFreeUnverified { bound } => {
                write!(f, "square-freeness of D not verifiable by trial division up to {bound}")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// Inversion failed: the element shares the reported gcd with the modulus.
///
/// `gcd` is `gcd(norm(x), N)` with `1 < gcd <= N`; a value strictly between
/// 1 and `N` is a nontrivial factor of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonInvertible {
    pub gcd: BigUint,
}

impl fmt::Display for NonInvertible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "element shares factor {} with the modulus", self.gcd)
    }
}

impl std::error::Error for NonInvertible {}

/// The ring `Z[sqrt(D)] / N` for a fixed square-free `D` and odd `N >= 3`.
#[derive(Debug)]
pub struct QuadRing {
    id: u64,
    d: BigInt,
    n: BigUint,
    /// `D mod N`, used by multiplication.
    d_mod_n: BigUint,
    /// `-D mod N`, used by the norm.
    neg_d_mod_n: BigUint,
    /// Cached `jacobi(D, N)`.
    symbol: Symbol,
}

/// An element `a + b*sqrt(D)` of a [`QuadRing`], coordinates reduced into
/// `[0, N)`.
///
/// Elements remember which ring created them; equality and every arithmetic
/// operation require matching rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    a: BigUint,
    b: BigUint,
    ring_id: u64,
}

impl RingElement {
    /// Rational coordinate, in `[0, N)`.
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// `sqrt(D)` coordinate, in `[0, N)`.
    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Whether this is the ring's multiplicative identity `1 + 0*sqrt(D)`.
    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Verify that `|d|` has no repeated prime factor, by trial division up to
/// `bound`.
pub(crate) fn check_squarefree(d: &BigInt, bound: u64) -> Result<(), RingError> {
    let mut v = d.magnitude().clone();
    if v.is_one() {
        return Ok(());
    }
    let bound_big = BigUint::from(bound.max(2));
    let mut f = BigUint::from(2u32);
    while &f * &f <= v {
        if f > bound_big {
            // No factor below the bound. A perfect-square cofactor is still
            // detectable without factoring; anything else is out of reach.
            let r = v.sqrt();
            if &r * &r == v {
                return Err(RingError::NotSquareFree { factor: r });
            }
            return Err(RingError::SquareFreeUnverified { bound });
        }
        if (&v % &f).is_zero() {
            v /= &f;
            if (&v % &f).is_zero() {
                return Err(RingError::NotSquareFree { factor: f });
            }
        }
        f += 1u32;
    }
    Ok(())
}

impl QuadRing {
    /// Build the ring, verifying that `N` is odd and at least 3 and that `D`
    /// is a nonzero square-free integer (trial division up to
    /// [`DEFAULT_SQUAREFREE_BOUND`]).
    pub fn new(d: BigInt, n: BigUint) -> Result<QuadRing, RingError> {
        Self::with_squarefree_bound(d, n, DEFAULT_SQUAREFREE_BOUND)
    }

    /// Like [`QuadRing::new`] with an explicit trial-division bound for the
    /// square-freeness check.
    pub fn with_squarefree_bound(d: BigInt, n: BigUint, bound: u64) -> Result<QuadRing, RingError> {
        if d.is_zero() {
            return Err(RingError::ZeroD);
        }
        check_squarefree(&d, bound)?;
        Self::build(d, n)
    }

    /// Build the ring taking the caller's word that `D` is square-free.
    ///
    /// Meant for `|D|` too large for trial division; the modulus checks are
    /// still performed.
    pub fn new_unchecked_squarefree(d: BigInt, n: BigUint) -> Result<QuadRing, RingError> {
        if d.is_zero() {
            return Err(RingError::ZeroD);
        }
        Self::build(d, n)
    }

    fn build(d: BigInt, n: BigUint) -> Result<QuadRing, RingError> {
        if n.is_even() {
            return Err(RingError::EvenModulus);
        }
        if n < BigUint::from(3u32) {
            return Err(RingError::ModulusTooSmall);
        }
        let n_int = BigInt::from(n.clone());
        let d_mod_n = d.mod_floor(&n_int).to_biguint().expect("non-negative");
        let neg_d_mod_n = (-&d).mod_floor(&n_int).to_biguint().expect("non-negative");
        let symbol = jacobi(&d, &n);
        Ok(QuadRing {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            d,
            n,
            d_mod_n,
            neg_d_mod_n,
            symbol,
        })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.n
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Cached Jacobi symbol `(D / N)`.
    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    fn claim(&self, x: &RingElement) {
        assert_eq!(
            x.ring_id, self.id,
            "ring element used with a ring that did not create it"
        );
    }

    fn wrap(&self, a: BigUint, b: BigUint) -> RingElement {
        RingElement { a, b, ring_id: self.id }
    }

    /// Construct `a + b*sqrt(D)`, reducing both coordinates modulo `N`.
    /// Negative and oversized inputs are welcome.
    pub fn element<A: Into<BigInt>, B: Into<BigInt>>(&self, a: A, b: B) -> RingElement {
        let n_int = BigInt::from(self.n.clone());
        let a = a.into().mod_floor(&n_int).to_biguint().expect("non-negative");
        let b = b.into().mod_floor(&n_int).to_biguint().expect("non-negative");
        self.wrap(a, b)
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(BigUint::zero(), BigUint::zero())
    }

    pub fn one(&self) -> RingElement {
        self.wrap(BigUint::one(), BigUint::zero())
    }

    /// `-1`, i.e. `(N - 1) + 0*sqrt(D)`.
    pub fn minus_one(&self) -> RingElement {
        self.wrap(&self.n - 1u32, BigUint::zero())
    }

    /// The generator `0 + 1*sqrt(D)`.
    pub fn sqrt_d(&self) -> RingElement {
        self.wrap(BigUint::zero(), BigUint::one())
    }

    /// Convert coordinates given in the half-integer basis `(1, omega)` with
    /// `omega = (1 + sqrt(D)) / 2` into the `(1, sqrt(D))` basis.
    ///
    /// Because `N` is odd, 2 is invertible and `a + b*omega` equals
    /// `(a + b*h) + (b*h)*sqrt(D)` where `h = (N+1)/2` is the inverse of 2.
    /// Only meaningful for `D = 1 (mod 4)`, where the larger order lives in
    /// half-integers; panics otherwise.
    pub fn from_omega_basis<A: Into<BigInt>, B: Into<BigInt>>(&self, a: A, b: B) -> RingElement {
        let d_mod_4 = self.d.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        assert_eq!(d_mod_4, 1, "omega basis requires D = 1 (mod 4)");
        let half = (&self.n + 1u32) >> 1;
        let n_int = BigInt::from(self.n.clone());
        let a = a.into().mod_floor(&n_int).to_biguint().expect("non-negative");
        let b = b.into().mod_floor(&n_int).to_biguint().expect("non-negative");
        let bh = &b * &half % &self.n;
        self.wrap((a + &bh) % &self.n, bh)
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.claim(x);
        self.claim(y);
        self.wrap((&x.a + &y.a) % &self.n, (&x.b + &y.b) % &self.n)
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.claim(x);
        self.claim(y);
        let a = (&x.a + &self.n - &y.a) % &self.n;
        let b = (&x.b + &self.n - &y.b) % &self.n;
        self.wrap(a, b)
    }

    /// `(a1 + b1*sqrt(D)) * (a2 + b2*sqrt(D))
    ///   = (a1*a2 + D*b1*b2) + (a1*b2 + a2*b1)*sqrt(D)`.
    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.claim(x);
        self.claim(y);
        let a = (&x.a * &y.a + &self.d_mod_n * &x.b * &y.b) % &self.n;
        let b = (&x.a * &y.b + &x.b * &y.a) % &self.n;
        self.wrap(a, b)
    }

    /// The conjugate `a - b*sqrt(D)`.
    pub fn conjugate(&self, x: &RingElement) -> RingElement {
        self.claim(x);
        let b = if x.b.is_zero() {
            BigUint::zero()
        } else {
            &self.n - &x.b
        };
        self.wrap(x.a.clone(), b)
    }

    /// The norm `x * conjugate(x) = a^2 - D*b^2`, reduced into `[0, N)`.
    pub fn norm(&self, x: &RingElement) -> BigUint {
        self.claim(x);
        (&x.a * &x.a + &self.neg_d_mod_n * &x.b * &x.b) % &self.n
    }

    /// `gcd(norm(x), N)`: 1 exactly when `x` is invertible.
    pub fn norm_gcd(&self, x: &RingElement) -> BigUint {
        self.norm(x).gcd(&self.n)
    }

    /// `gcd(a, b, N)` over the element's coordinates. A diagnostic companion
    /// to [`QuadRing::norm_gcd`]: a nontrivial coordinate gcd forces a
    /// nontrivial norm gcd, but not conversely.
    pub fn content_gcd(&self, x: &RingElement) -> BigUint {
        self.claim(x);
        x.a.gcd(&x.b).gcd(&self.n)
    }

    /// Invert `x` via `conjugate(x) / norm(x)`.
    ///
    /// Fails with the offending gcd when the norm shares a factor with `N` —
    /// for composite `N` that gcd may be a nontrivial factor, which callers
    /// treat as a discovery, not an error. `x = 0` reports `gcd = N`.
    pub fn try_invert(&self, x: &RingElement) -> Result<RingElement, NonInvertible> {
        let norm = self.norm(x);
        let g = norm.gcd(&self.n);
        if !g.is_one() {
            return Err(NonInvertible { gcd: g });
        }
        let inv = mod_inverse(&norm, &self.n).expect("gcd is 1");
        let conj = self.conjugate(x);
        Ok(self.wrap(conj.a * &inv % &self.n, conj.b * &inv % &self.n))
    }

    /// `x^e` by binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, x: &RingElement, e: &BigUint) -> RingElement {
        self.claim(x);
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    /// `x^e` for a machine-word exponent.
    pub fn pow_u64(&self, x: &RingElement, e: u64) -> RingElement {
        self.pow(x, &BigUint::from(e))
    }
}

/// Modular inverse of `a` mod `n` (both positive, gcd 1), by the extended
/// Euclidean algorithm.
fn mod_inverse(a: &BigUint, n: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let n_int = BigInt::from(n.clone());
    let ext = a.extended_gcd(&n_int);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(&n_int).to_biguint().expect("non-negative"))
}
