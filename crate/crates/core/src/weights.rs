//! Weight vectors and the grading they induce on polynomials.
//!
//! A weight vector assigns a nonnegative rational weight to each variable,
//! with at least one weight positive. A monomial `x^a` gets weight `a·w`,
//! a nonzero polynomial gets the minimum weight of its terms, and the zero
//! polynomial gets `+inf`. Splitting a polynomial into its weight-graded
//! parts is the basic move everything else in the crate builds on.

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight entries must be nonnegative, found {0}")]
    NegativeEntry(Rational),
    #[error("at least one weight must be positive")]
    AllZero,
    #[error("polynomial is not quasi-homogeneous for the given weights")]
    NotQuasiHomogeneous,
    #[error("cannot normalize: polynomial weight {0} is not positive")]
    NonPositiveWeight(Rational),
}

/// Nonnegative rational weights, not all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, WeightError> {
        if let Some(neg) = entries.iter().find(|w| w.is_negative()) {
            return Err(WeightError::NegativeEntry(neg.clone()));
        }
        if entries.iter().all(Rational::is_zero) {
            return Err(WeightError::AllZero);
        }
        Ok(WeightVector(entries))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// Number of strictly positive entries.
    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|w| w.is_positive()).count()
    }

    /// Sum of all entries.
    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Weight of a monomial, the dot product of exponents and weights.
    pub fn monomial_weight(&self, m: &Monomial) -> Rational {
        assert_eq!(m.nvars(), self.nvars(), "monomial has wrong variable count");
        let mut total = Rational::zero();
        for (e, w) in m.exps().iter().zip(&self.0) {
            if *e != 0 && !w.is_zero() {
                total += w * Rational::from(BigInt::from(*e));
            }
        }
        total
    }

    /// Divides every entry by `factor > 0`.
    fn divided_by(&self, factor: &Rational) -> WeightVector {
        assert!(factor.is_positive());
        WeightVector(self.0.iter().map(|w| w / factor).collect())
    }
}

/// A weighted order: a rational for nonzero polynomials, `+inf` for zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinite,
}

impl ExtendedRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(v) => Some(v),
            ExtendedRational::Infinite => None,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(v: Rational) -> Self {
        ExtendedRational::Finite(v)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(v) => write!(f, "{v}"),
            ExtendedRational::Infinite => write!(f, "+inf"),
        }
    }
}

/// Outcome of testing a polynomial for weighted quasi-homogeneity.
///
/// Zero is kept apart: it is homogeneous of every weight, so reporting a
/// single weight for it would be arbitrary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WqhCheck {
    Zero,
    Homogeneous(Rational),
    Mixed,
}

impl WqhCheck {
    pub fn weight(&self) -> Option<&Rational> {
        match self {
            WqhCheck::Homogeneous(nu) => Some(nu),
            _ => None,
        }
    }

    pub fn is_homogeneous_of(&self, nu: &Rational) -> bool {
        self.weight() == Some(nu)
    }
}

impl Polynomial {
    /// Minimum weight over the terms, `+inf` for the zero polynomial.
    pub fn w_order(&self, w: &WeightVector) -> ExtendedRational {
        self.terms()
            .map(|(m, _)| w.monomial_weight(m))
            .min()
            .map_or(ExtendedRational::Infinite, ExtendedRational::Finite)
    }

    /// Splits into weight-graded parts; keys are the occurring weights and
    /// the parts sum back to `self`. Zero yields an empty map.
    pub fn wqh_decompose(&self, w: &WeightVector) -> BTreeMap<Rational, Polynomial> {
        let mut parts: BTreeMap<Rational, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms() {
            parts
                .entry(w.monomial_weight(m))
                .or_insert_with(|| Polynomial::zero(self.nvars()))
                .add_term(m.clone(), c.clone());
        }
        parts
    }

    /// Whether all terms share one weight.
    pub fn is_wqh(&self, w: &WeightVector) -> WqhCheck {
        let mut seen: Option<Rational> = None;
        for (m, _) in self.terms() {
            let nu = w.monomial_weight(m);
            match &seen {
                None => seen = Some(nu),
                Some(prev) if *prev == nu => {}
                Some(_) => return WqhCheck::Mixed,
            }
        }
        match seen {
            None => WqhCheck::Zero,
            Some(nu) => WqhCheck::Homogeneous(nu),
        }
    }
}

/// Rescales `w` so that `f` becomes quasi-homogeneous of weight one.
///
/// Fails if `f` is not quasi-homogeneous for `w` or if its weight is not
/// positive (in particular for `f = 0`).
pub fn normalize_weight(f: &Polynomial, w: &WeightVector) -> Result<WeightVector, WeightError> {
    match f.is_wqh(w) {
        WqhCheck::Homogeneous(nu) => {
            if nu.is_positive() {
                Ok(w.divided_by(&nu))
            } else {
                Err(WeightError::NonPositiveWeight(nu))
            }
        }
        WqhCheck::Zero => Err(WeightError::NonPositiveWeight(Rational::zero())),
        WqhCheck::Mixed => Err(WeightError::NotQuasiHomogeneous),
    }
}
