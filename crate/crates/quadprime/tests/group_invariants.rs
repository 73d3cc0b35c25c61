//! Structure checks for the norm-one group that cut across the module
//! boundaries: the u64 enumeration model, the bignum ring, and the order
//! formula must all tell the same story.

use num_bigint::{BigInt, BigUint};
use quadprime::group::{enumerate_norm_one, product_splitting_check_with_cap};
use quadprime::ring::QuadRing;
use quadprime::symbols::jacobi_i64;
use quadprime::Symbol;
use rayon::prelude::*;

fn odd_primes_to(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; (limit + 1) as usize];
    sieve[0] = false;
    if limit >= 1 {
        sieve[1] = false;
    }
    let mut p = 2u64;
    while p * p <= limit {
        if sieve[p as usize] {
            let mut q = p * p;
            while q <= limit {
                sieve[q as usize] = false;
                q += p;
            }
        }
        p += 1;
    }
    (3..=limit).filter(|&n| sieve[n as usize]).collect()
}

/// For every odd prime up to 2000, pick a discriminant with symbol -1 (the
/// smallest prime nonresidue always works), enumerate the full group, and
/// confirm through the bignum ring that it has exactly p + 1 members, each
/// annihilated by the p + 1 power.
#[test]
fn every_member_obeys_the_prime_order_bound() {
    odd_primes_to(2000).into_par_iter().for_each(|p| {
        let d = quadprime::engine::find_nonresidue_prime(&BigUint::from(p))
            .expect("a prime is not a perfect square") as i64;
        let members = enumerate_norm_one(p, d, 2000).unwrap();
        assert_eq!(members.len() as u64, p + 1, "group size mod {p} with D = {d}");
        let ring = QuadRing::new(BigInt::from(d), BigUint::from(p)).unwrap();
        let order = BigUint::from(p + 1);
        for (a, b) in members {
            let w = ring.element(a, b);
            assert!(ring.pow(&w, &order).is_one(), "({a}, {b}) mod {p}, D = {d}");
        }
    });
}

/// The enumerated group size at a prime follows the symbol in both
/// directions: p + 1 for nonresidues, p - 1 for residues.
#[test]
fn group_size_tracks_the_symbol() {
    odd_primes_to(500).into_par_iter().for_each(|p| {
        for d in -10i64..=10 {
            if d == 0 || d % (p as i64) == 0 {
                continue;
            }
            let size = enumerate_norm_one(p, d, 500).unwrap().len() as u64;
            let expected = match jacobi_i64(d, p) {
                Symbol::MinusOne => p + 1,
                Symbol::One => p - 1,
                Symbol::Zero => unreachable!(),
            };
            assert_eq!(size, expected, "p = {p}, D = {d}");
        }
    });
}

/// The group over a product of coprime moduli is the direct product of the
/// groups over the parts, across a spread of modulus pairs and
/// discriminants.
#[test]
fn group_splits_across_coprime_moduli() {
    let mut pairs = Vec::new();
    for m in (3u64..60).step_by(2) {
        for n in (3u64..60).step_by(2) {
            if m < n && num_integer::gcd(m, n) == 1 && m * n <= 1500 {
                pairs.push((m, n));
            }
        }
    }
    assert!(pairs.len() >= 50, "want a broad sample, got {}", pairs.len());
    pairs.into_par_iter().for_each(|(m, n)| {
        for d in [-3i64, -1, 2, 7] {
            assert!(
                product_splitting_check_with_cap(m, n, d, 1500).unwrap(),
                "m = {m}, n = {n}, D = {d}"
            );
        }
    });
}
