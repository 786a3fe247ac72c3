//! Polynomial vector fields and differential operators.
//!
//! Operators are kept in normal order: every term is a polynomial
//! coefficient on the left times a power product of partials on the right,
//! keyed by the partial multi-exponent. Composition rewrites into this form
//! with the generalized Leibniz rule
//!
//! ```text
//! d^b (q P) = sum over s <= b of binom(b, s) (d^s q) d^(b-s) P
//! ```
//!
//! so products, brackets and applications are all exact. A small fraction
//! type tracks elements `g / f^m` so that operators can act on negative
//! powers of a fixed polynomial.

use crate::groebner::ModuleElement;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::weights::{ExtendedRational, WeightVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Derivation `sum_i a_i(x) d_i` with polynomial coefficients.
///
/// The coefficient count always equals the ambient variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    coeffs: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        assert!(!coeffs.is_empty(), "vector fields need at least one variable");
        assert!(
            coeffs.iter().all(|p| p.nvars() == coeffs.len()),
            "coefficients must be polynomials in all ambient variables"
        );
        VectorField { coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        VectorField::new(vec![Polynomial::zero(nvars); nvars])
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Applies the derivation to a polynomial: `sum_i a_i * dg/dx_i`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        assert_eq!(g.nvars(), self.nvars(), "polynomial has wrong variable count");
        let mut out = Polynomial::zero(self.nvars());
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out += &(a * &g.partial(i));
            }
        }
        out
    }

    /// Lie bracket `[self, other] = self other - other self`, again a
    /// vector field with coefficients `self(b_i) - other(a_i)`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.nvars(), other.nvars(), "vector fields live in different rings");
        let coeffs = (0..self.nvars())
            .map(|i| &self.apply(&other.coeffs[i]) - &other.apply(&self.coeffs[i]))
            .collect();
        VectorField::new(coeffs)
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.nvars(), other.nvars(), "vector fields live in different rings");
        VectorField::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.nvars(), other.nvars(), "vector fields live in different rings");
        VectorField::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> VectorField {
        VectorField::new(self.coeffs.iter().map(|q| q * p).collect())
    }

    /// The coefficient vector as an element of the rank-`n` free module.
    pub fn as_module_element(&self) -> ModuleElement {
        ModuleElement::new(self.coeffs.clone())
    }

    /// Weighted order of the field. The coefficient of `d_i` contributes
    /// with a shift of `-w_i`, because `d_i` lowers weight by `w_i`.
    pub fn w_order(&self, w: &WeightVector) -> ExtendedRational {
        let mut best: Option<Rational> = None;
        for (i, a) in self.coeffs.iter().enumerate() {
            if let ExtendedRational::Finite(o) = a.w_order(w) {
                let shifted = o - w.entry(i);
                if best.as_ref().is_none_or(|b| shifted < *b) {
                    best = Some(shifted);
                }
            }
        }
        best.map_or(ExtendedRational::Infinite, ExtendedRational::Finite)
    }

    /// Splits into weight-homogeneous vector fields; the parts sum back to
    /// `self` and the keys are the occurring weights.
    pub fn wqh_parts(&self, w: &WeightVector) -> BTreeMap<Rational, VectorField> {
        let n = self.nvars();
        let mut parts: BTreeMap<Rational, VectorField> = BTreeMap::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (nu_coeff, piece) in a.wqh_decompose(w) {
                let nu = nu_coeff - w.entry(i);
                let entry = parts.entry(nu).or_insert_with(|| VectorField::zero(n));
                entry.coeffs[i] = &entry.coeffs[i] + &piece;
            }
        }
        parts
    }

    /// If `self == c * other` for a scalar `c`, returns `c`.
    pub fn scalar_ratio_to(&self, other: &VectorField) -> Option<Rational> {
        assert_eq!(self.nvars(), other.nvars(), "vector fields live in different rings");
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        let (i, m) = other
            .coeffs
            .iter()
            .enumerate()
            .find_map(|(i, p)| p.leading_term_lex().map(|(m, _)| (i, m.clone())))
            .expect("nonzero field has a term");
        let num = self.coeffs[i].coeff(&m).cloned().unwrap_or_else(Rational::zero);
        let den = other.coeffs[i].coeff(&m).expect("chosen term exists").clone();
        let c = num / den;
        (self == &other.scale(&c)).then_some(c)
    }

    /// Normal-ordered operator with the same action on polynomials.
    pub fn to_operator(&self) -> DifferentialOperator {
        let n = self.nvars();
        let mut op = DifferentialOperator::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            op.add_term(Monomial::var(i, n), a.clone());
        }
        op
    }

    pub fn render(&self, vars: &[impl AsRef<str>]) -> String {
        self.to_operator().render(vars)
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(self.coeffs.iter().map(|p| -p).collect())
    }
}

/// The Euler field `sum_i w_i x_i d_i` of a weight vector.
pub fn euler_field(w: &WeightVector) -> VectorField {
    let n = w.nvars();
    VectorField::new(
        (0..n)
            .map(|i| Polynomial::var(i, n).scale(w.entry(i)))
            .collect(),
    )
}

/// Differential operator in normal order: a map from partial-derivative
/// multi-exponents to polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialOperator {
    nvars: usize,
    terms: BTreeMap<Monomial, Polynomial>,
}

impl DifferentialOperator {
    pub fn zero(nvars: usize) -> Self {
        DifferentialOperator { nvars, terms: BTreeMap::new() }
    }

    /// Multiplication operator by a polynomial (order zero).
    pub fn from_polynomial(p: Polynomial) -> Self {
        let mut op = Self::zero(p.nvars());
        op.add_term(Monomial::unit(op.nvars), p);
        op
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::constant(c, nvars))
    }

    /// The partial derivative `d_i` as an operator.
    pub fn partial(index: usize, nvars: usize) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(Monomial::var(index, nvars), Polynomial::one(nvars));
        op
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing multi-exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    /// Order of the operator: the largest total partial degree.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Adds `coeff * d^partials`, merging and dropping zeros.
    pub fn add_term(&mut self, partials: Monomial, coeff: Polynomial) {
        assert_eq!(partials.nvars(), self.nvars, "partial exponent has wrong length");
        assert_eq!(coeff.nvars(), self.nvars, "coefficient has wrong variable count");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(partials) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, p) in &self.terms {
            out.add_term(m.clone(), p.scale(c));
        }
        out
    }

    /// `self + c` as operators, shorthand for adding a constant term.
    pub fn plus_constant(&self, c: &Rational) -> Self {
        self + &Self::constant(c.clone(), self.nvars)
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        assert_eq!(g.nvars(), self.nvars, "polynomial has wrong variable count");
        let mut out = Polynomial::zero(self.nvars);
        for (beta, p) in &self.terms {
            let d = partial_power(g, beta);
            if !d.is_zero() {
                out += &(p * &d);
            }
        }
        out
    }

    /// Applies the operator to `g / f^m`, returning the result as a reduced
    /// fraction over the same base.
    pub fn apply_to_fraction(&self, frac: &MeroFraction) -> MeroFraction {
        let mut parts: Vec<MeroFraction> = Vec::new();
        for (beta, p) in &self.terms {
            let mut piece = frac.clone();
            for (i, &e) in beta.exps().iter().enumerate() {
                for _ in 0..e {
                    piece = piece.partial(i);
                }
            }
            parts.push(piece.mul_poly(p));
        }
        let mut total = MeroFraction::zero(frac.base().clone());
        for part in parts {
            total = total.add(&part);
        }
        total
    }

    /// Applies the operator to `1 / f^k`. Requires `k >= 1` and `f != 0`.
    pub fn apply_to_inverse_power(&self, f: &Polynomial, k: u32) -> MeroFraction {
        assert!(k >= 1, "inverse power needs k >= 1");
        assert!(!f.is_zero(), "base polynomial must be nonzero");
        self.apply_to_fraction(&MeroFraction::new(Polynomial::one(f.nvars()), f.clone(), k))
    }

    pub fn render(&self, vars: &[impl AsRef<str>]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (beta, p) in self.terms.iter().rev() {
            let mut partials = String::new();
            for (i, &e) in beta.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !partials.is_empty() {
                    partials.push('*');
                }
                partials.push_str(&format!("d/d{}", vars[i].as_ref()));
                if e > 1 {
                    partials.push_str(&format!("^{e}"));
                }
            }
            let coeff = p.render(vars);
            let body = if partials.is_empty() {
                coeff
            } else if p == &Polynomial::one(self.nvars) {
                partials
            } else if p.num_terms() == 1 {
                format!("{coeff}*{partials}")
            } else {
                format!("({coeff})*{partials}")
            };
            if out.is_empty() {
                out.push_str(&body);
            } else if let Some(tail) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(tail);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

impl Add for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn add(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        assert_eq!(self.nvars, rhs.nvars, "operators live in different rings");
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(m.clone(), p.clone());
        }
        out
    }
}

impl Sub for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn sub(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        assert_eq!(self.nvars, rhs.nvars, "operators live in different rings");
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(m.clone(), -p);
        }
        out
    }
}

impl Neg for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn neg(self) -> DifferentialOperator {
        let mut out = DifferentialOperator::zero(self.nvars);
        for (m, p) in &self.terms {
            out.add_term(m.clone(), -p);
        }
        out
    }
}

/// Composition `self ∘ rhs` rewritten into normal order.
impl Mul for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn mul(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        assert_eq!(self.nvars, rhs.nvars, "operators live in different rings");
        let n = self.nvars;
        let mut out = DifferentialOperator::zero(n);
        for (beta, p) in &self.terms {
            for (gamma, q) in &rhs.terms {
                // d^beta q = sum over sigma <= beta of
                //   binom(beta, sigma) (d^sigma q) d^(beta - sigma).
                for sigma in sub_exponents(beta) {
                    let dq = partial_power(q, &sigma);
                    if dq.is_zero() {
                        continue;
                    }
                    let c = multi_binomial(beta, &sigma);
                    let rest = beta.checked_div(&sigma).expect("sigma <= beta");
                    out.add_term(rest.mul(gamma), (p * &dq).scale(&c));
                }
            }
        }
        out
    }
}

/// Repeated partial derivative `d^beta g`.
fn partial_power(g: &Polynomial, beta: &Monomial) -> Polynomial {
    let mut out = g.clone();
    for (i, &e) in beta.exps().iter().enumerate() {
        for _ in 0..e {
            if out.is_zero() {
                return out;
            }
            out = out.partial(i);
        }
    }
    out
}

/// All multi-exponents `sigma <= beta` coordinatewise.
fn sub_exponents(beta: &Monomial) -> Vec<Monomial> {
    let mut list = vec![Vec::with_capacity(beta.nvars())];
    for &e in beta.exps() {
        let mut next = Vec::with_capacity(list.len() * (e as usize + 1));
        for prefix in &list {
            for v in 0..=e {
                let mut ext = prefix.clone();
                ext.push(v);
                next.push(ext);
            }
        }
        list = next;
    }
    list.into_iter().map(Monomial::new).collect()
}

/// Product of coordinatewise binomial coefficients `binom(beta, sigma)`.
fn multi_binomial(beta: &Monomial, sigma: &Monomial) -> Rational {
    let mut out = BigInt::one();
    for (&b, &s) in beta.exps().iter().zip(sigma.exps()) {
        out *= binomial(b, s);
    }
    Rational::from(out)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Fraction `numerator / base^exponent`, kept reduced: as long as the base
/// divides the numerator exactly, the exponent is lowered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeroFraction {
    numerator: Polynomial,
    base: Polynomial,
    exponent: u32,
}

impl MeroFraction {
    pub fn new(numerator: Polynomial, base: Polynomial, exponent: u32) -> Self {
        assert!(!base.is_zero(), "fraction base must be nonzero");
        assert_eq!(numerator.nvars(), base.nvars(), "numerator and base disagree on variables");
        let mut out = MeroFraction { numerator, base, exponent };
        out.reduce();
        out
    }

    pub fn zero(base: Polynomial) -> Self {
        let n = base.nvars();
        MeroFraction::new(Polynomial::zero(n), base, 0)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        while self.exponent > 0 {
            match self.numerator.exact_divide(&self.base) {
                Some(q) => {
                    self.numerator = q;
                    self.exponent -= 1;
                }
                None => break,
            }
        }
    }

    /// Partial derivative of the fraction:
    /// `d_i (g / f^m) = (f dg - m g df) / f^(m+1)`.
    pub fn partial(&self, i: usize) -> MeroFraction {
        let m = Rational::from(BigInt::from(self.exponent));
        let num = &(&self.base * &self.numerator.partial(i))
            - &(&self.numerator * &self.base.partial(i)).scale(&m);
        MeroFraction::new(num, self.base.clone(), self.exponent + 1)
    }

    pub fn mul_poly(&self, p: &Polynomial) -> MeroFraction {
        MeroFraction::new(&self.numerator * p, self.base.clone(), self.exponent)
    }

    pub fn add(&self, other: &MeroFraction) -> MeroFraction {
        assert_eq!(self.base, other.base, "fractions have different bases");
        let m = self.exponent.max(other.exponent);
        let a = &self.numerator * &self.base.pow(m - self.exponent);
        let b = &other.numerator * &other.base.pow(m - other.exponent);
        MeroFraction::new(&a + &b, self.base.clone(), m)
    }

    pub fn render(&self, vars: &[impl AsRef<str>]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        if self.exponent == 0 {
            return self.numerator.render(vars);
        }
        format!(
            "({}) / ({})^{}",
            self.numerator.render(vars),
            self.base.render(vars),
            self.exponent
        )
    }
}
