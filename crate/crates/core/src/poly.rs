//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] stores its terms in a `BTreeMap` keyed by exponent
//! vector, so representations are canonical: zero coefficients are never
//! kept, and structural equality is mathematical equality. Every polynomial
//! carries the number of ambient variables, which is checked whenever two
//! polynomials are combined; a mismatch is a caller bug and panics.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exponent vector of a power product, one entry per ambient variable.
///
/// The derived `Ord` is the lexicographic order on exponent vectors with
/// earlier variables weighing more, which is an admissible monomial order;
/// it fixes the storage order inside polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable `x_index`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range ({nvars} variables)");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials live in different rings");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Whether `self` divides `other` coordinatewise.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomials live in different rings");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when the division is exact.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    /// Coordinatewise maximum, the least common multiple of power products.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials live in different rings");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

/// Sparse polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    /// The variable `x_index` as a polynomial.
    pub fn var(index: usize, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(index, nvars), Rational::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing storage (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::unit(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// Largest total degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Adds one term, merging with an existing one and dropping zeros.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "term has wrong variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    /// Multiplies by the single term `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to `x_index`.
    pub fn partial(&self, index: usize) -> Polynomial {
        assert!(index < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from(BigInt::from(e)));
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Leading term in the storage (lexicographic) order.
    pub fn leading_term_lex(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// Quotient `self / divisor` when the division is exact, `None` otherwise.
    ///
    /// Runs ordinary long division in the storage order and aborts as soon
    /// as a leading term fails to be divisible, so it never loops.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert_eq!(self.nvars, divisor.nvars, "polynomials live in different rings");
        let (dm, dc) = divisor.leading_term_lex().expect("divisor is nonzero");
        let mut rest = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term_lex() {
            let step_m = m.checked_div(dm)?;
            let step_c = c / dc;
            rest = &rest - &divisor.mul_term(&step_m, &step_c);
            quot.add_term(step_m, step_c);
        }
        Some(quot)
    }

    /// Rescales to integer coefficients with content one; the leading
    /// coefficient in the storage order is made positive. Zero stays zero.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        let mut factor = Rational::new(den, num);
        let lead_c = self.terms.values().next_back().expect("nonzero");
        if (lead_c * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Renders the polynomial using the given variable names. The output
    /// uses explicit `*` and `^` and parses back to an equal polynomial.
    pub fn render(&self, vars: &[impl AsRef<str>]) -> String {
        assert_eq!(vars.len(), self.nvars, "variable name list has wrong length");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mut pieces: Vec<String> = Vec::new();
            let abs = c.abs();
            if !abs.is_one() || m.is_unit() {
                pieces.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(vars[i].as_ref().to_string()),
                    _ => pieces.push(format!("{}^{}", vars[i].as_ref(), e)),
                }
            }
            let body = pieces.join("*");
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(0, 2), Polynomial::var(1, 2))
    }

    /// x^3 - y^2 in two variables.
    pub(crate) fn cusp() -> Polynomial {
        let (x, y) = xy();
        &x.pow(3) - &y.pow(2)
    }

    #[test]
    fn arithmetic_is_canonical() {
        let (x, y) = xy();
        let p = &(&x + &y) * &(&x - &y);
        let q = &x.pow(2) - &y.pow(2);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn partial_derivatives() {
        let f = cusp();
        let (x, y) = xy();
        assert_eq!(f.partial(0), x.pow(2).scale(&rat_int(3)));
        assert_eq!(f.partial(1), y.scale(&rat_int(-2)));
        assert!(Polynomial::one(2).partial(0).is_zero());
    }

    #[test]
    fn exact_division_succeeds_on_products() {
        let (x, y) = xy();
        let p = &(&x + &y) * &(&x.pow(2) - &y);
        assert_eq!(p.exact_divide(&(&x + &y)), Some(&x.pow(2) - &y));
        // x^2*y divided by x*y.
        let m = Polynomial::from_terms(2, [(Monomial::new(vec![2, 1]), rat_int(1))]);
        let d = Polynomial::from_terms(2, [(Monomial::new(vec![1, 1]), rat_int(1))]);
        assert_eq!(m.exact_divide(&d), Some(x.clone()));
    }

    #[test]
    fn exact_division_detects_failure() {
        let (x, y) = xy();
        assert_eq!((&x.pow(2) + &y).exact_divide(&x), None);
        assert_eq!(x.exact_divide(&y), None);
        assert_eq!(Polynomial::zero(2).exact_divide(&x), Some(Polynomial::zero(2)));
    }

    #[test]
    fn eval_and_constant_term() {
        let f = cusp();
        assert_eq!(f.eval(&[rat_int(2), rat_int(3)]), rat_int(-1));
        assert_eq!(f.constant_term(), rat_int(0));
        assert_eq!((&f + &Polynomial::constant(rat(1, 2), 2)).constant_term(), rat(1, 2));
    }

    #[test]
    fn primitive_clears_denominators_and_content() {
        let (x, y) = xy();
        let p = &x.scale(&rat(2, 3)) + &y.scale(&rat(4, 3));
        assert_eq!(p.primitive(), &x + &y.scale(&rat_int(2)));
        let q = &x.scale(&rat_int(-2)) + &y.scale(&rat_int(-4));
        assert_eq!(q.primitive(), &x + &y.scale(&rat_int(2)));
        assert!(Polynomial::zero(2).primitive().is_zero());
    }

    #[test]
    fn render_matches_expected_shape() {
        let f = cusp();
        assert_eq!(f.render(&["x", "y"]), "x^3 - y^2");
        let (x, y) = xy();
        let g = &(&x.pow(2) * &y).scale(&rat_int(3)) + &Polynomial::constant(rat(-1, 2), 2);
        assert_eq!(g.render(&["x", "y"]), "3*x^2*y - 1/2");
        assert_eq!(Polynomial::zero(2).render(&["x", "y"]), "0");
    }
}
