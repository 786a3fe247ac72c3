//! Seeded random generators for property checks.
//!
//! Everything is driven by a caller-supplied `Rng`, so runs are reproducible
//! whenever the caller seeds the generator.

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use num_bigint::BigInt;
use rand::Rng;

/// Nonzero rational with numerator in `[-bound, bound]` and denominator in
/// `[1, 4]`.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    assert!(bound >= 1);
    let mut num = 0i64;
    while num == 0 {
        num = rng.random_range(-bound..=bound);
    }
    let den = rng.random_range(1i64..=4);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Monomial with total degree at most `max_degree`, built by distributing a
/// random degree over the variables.
pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.random_range(0..=max_degree);
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.random_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

/// Polynomial with at most `max_terms` random terms of degree at most
/// `max_degree`. Coincident monomials may merge or cancel, so the result
/// can have fewer terms and is occasionally zero.
pub fn random_polynomial(
    rng: &mut impl Rng,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    assert!(max_terms >= 1);
    let terms = rng.random_range(1..=max_terms);
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        p.add_term(random_monomial(rng, nvars, max_degree), random_rational(rng, 9));
    }
    p
}

/// Like [`random_polynomial`] but never zero.
pub fn random_nonzero_polynomial(
    rng: &mut impl Rng,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = random_polynomial(rng, nvars, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}
