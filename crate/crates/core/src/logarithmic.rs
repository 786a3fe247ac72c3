//! Vector fields tangent to a divisor.
//!
//! A vector field `delta` is logarithmic for a polynomial `f` when
//! `delta(f)` is a multiple of `f`; it is tangent in the strict sense when
//! `delta(f) = 0`. Both kinds are computed here through syzygies, freeness
//! is certified by the classical determinant test (`saito_check`), and for
//! a divisor that is quasi-homogeneous of weight one an *adapted basis* is
//! assembled: the Euler field together with `n - 1` weight-homogeneous
//! tangent fields whose coefficient matrix has determinant exactly `f`.
//! The adapted basis also carries the structure constants of its bracket
//! table, which later drive the complexes in [`crate::spencer`].

use crate::groebner::{lift, syzygy_basis, ModuleElement};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::weights::{WeightVector, WqhCheck};
use crate::weyl::{euler_field, DifferentialOperator, VectorField};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LogarithmicError {
    #[error("divisor must be a nonzero, nonconstant polynomial")]
    ConstantDivisor,
    #[error("divisor is not quasi-homogeneous of weight one: {0}")]
    NotWeightOne(String),
    #[error("no subset of tangent fields certifies freeness with determinant equal to f")]
    NoFreenessCertificate,
    #[error("bracket of tangent fields {i} and {j} is not in the span of the basis")]
    BracketOutsideSpan { i: usize, j: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Logarithmic vector fields together with their cofactors:
/// `fields[i](f) = cofactors[i] * f`.
#[derive(Clone, Debug)]
pub struct LogDerivationSet {
    pub fields: Vec<VectorField>,
    pub cofactors: Vec<Polynomial>,
}

/// Generators of the module of logarithmic vector fields of `f`, found as
/// syzygies of `(df/dx_1, ..., df/dx_n, -f)`.
pub fn log_derivations(f: &Polynomial) -> Result<LogDerivationSet, LogarithmicError> {
    if f.is_zero() || f.is_constant() {
        return Err(LogarithmicError::ConstantDivisor);
    }
    let n = f.nvars();
    let mut gens: Vec<Polynomial> = (0..n).map(|i| f.partial(i)).collect();
    gens.push(-f);
    let mut fields = Vec::new();
    let mut cofactors = Vec::new();
    for s in syzygy_basis(&gens) {
        let comps = s.into_components();
        let field = VectorField::new(comps[..n].to_vec());
        let cofactor = comps[n].clone();
        if field.is_zero() {
            // The relation 0 = 0 * f carries no vector field.
            continue;
        }
        debug_assert_eq!(field.apply(f), &cofactor * f);
        fields.push(field);
        cofactors.push(cofactor);
    }
    Ok(LogDerivationSet { fields, cofactors })
}

/// Generators of the strict tangency module `{delta : delta(f) = 0}` for a
/// divisor that is quasi-homogeneous of weight one. The generators are
/// returned weight-homogeneous, primitive, and with proportional
/// duplicates removed.
pub fn theta_basis(
    f: &Polynomial,
    w: &WeightVector,
) -> Result<Vec<VectorField>, LogarithmicError> {
    if f.is_zero() || f.is_constant() {
        return Err(LogarithmicError::ConstantDivisor);
    }
    require_weight_one(f, w)?;
    let n = f.nvars();
    let partials: Vec<Polynomial> = (0..n).map(|i| f.partial(i)).collect();
    let mut out: Vec<VectorField> = Vec::new();
    for s in syzygy_basis(&partials) {
        let field = VectorField::new(s.into_components());
        // Because f is quasi-homogeneous, the graded parts of a tangent
        // field are tangent again: distinct weights cannot cancel in
        // delta(f).
        for (_, part) in field.wqh_parts(w) {
            debug_assert!(part.apply(f).is_zero());
            let part = normalize_field(&part);
            if !out.iter().any(|seen| part.scalar_ratio_to(seen).is_some()) {
                out.push(part);
            }
        }
    }
    Ok(out)
}

fn require_weight_one(f: &Polynomial, w: &WeightVector) -> Result<(), LogarithmicError> {
    match f.is_wqh(w) {
        WqhCheck::Homogeneous(nu) if nu.is_one() => Ok(()),
        WqhCheck::Homogeneous(nu) => Err(LogarithmicError::NotWeightOne(format!(
            "the polynomial is homogeneous of weight {nu}, not 1"
        ))),
        WqhCheck::Mixed => Err(LogarithmicError::NotWeightOne(
            "the polynomial mixes several weights".to_string(),
        )),
        WqhCheck::Zero => Err(LogarithmicError::NotWeightOne("the polynomial is zero".to_string())),
    }
}

/// Primitive integer form of a field, for tidy deterministic output.
fn normalize_field(v: &VectorField) -> VectorField {
    VectorField::new(v.as_module_element().primitive().into_components())
}

/// Determinant of the coefficient matrix of `n` vector fields in `n`
/// variables, rows in the given order.
pub fn field_determinant(rows: &[VectorField]) -> Polynomial {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.nvars() == n), "need n fields in n variables");
    let matrix: Vec<Vec<Polynomial>> =
        rows.iter().map(|r| r.coeffs().to_vec()).collect();
    determinant(&matrix)
}

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &determinant(&minor);
        if j % 2 == 0 {
            det += &cofactor;
        } else {
            det -= &cofactor;
        }
    }
    det
}

/// Result of the determinant test for freeness.
#[derive(Clone, Debug)]
pub struct SaitoCertificate {
    /// Determinant of the coefficient matrix.
    pub determinant: Polynomial,
    /// Quotient `determinant / f` when the division is exact.
    pub unit: Option<Polynomial>,
    /// Whether each field is logarithmic for `f`.
    pub logarithmic: Vec<bool>,
    /// True when all fields are logarithmic and the determinant is `f`
    /// times a polynomial that does not vanish at the origin.
    pub ok: bool,
}

/// Checks the determinant criterion: `n` logarithmic fields form a basis of
/// all logarithmic fields exactly when `det = u * f` with `u(0) != 0`.
pub fn saito_check(fields: &[VectorField], f: &Polynomial) -> SaitoCertificate {
    assert_eq!(fields.len(), f.nvars(), "need as many fields as variables");
    let determinant = field_determinant(fields);
    let logarithmic: Vec<bool> = fields
        .iter()
        .map(|d| d.apply(f).exact_divide(f).is_some())
        .collect();
    let unit = determinant.exact_divide(f);
    let ok = logarithmic.iter().all(|&b| b)
        && unit.as_ref().is_some_and(|u| !u.constant_term().is_zero());
    SaitoCertificate { determinant, unit, logarithmic, ok }
}

/// Euler field plus `n - 1` weight-homogeneous tangent fields with
/// coefficient determinant exactly `f`, and the bracket structure of those
/// fields.
///
/// Field `i` in `deltas` is referred to by the index `i + 2` throughout
/// (`1` names the Euler field), matching the labels used by the complexes
/// built from the basis.
#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    f: Polynomial,
    weight: WeightVector,
    chi: VectorField,
    deltas: Vec<VectorField>,
    nus: Vec<Rational>,
    brackets: BTreeMap<(usize, usize), Vec<Polynomial>>,
    germ_unit: Option<Polynomial>,
}

impl AdaptedBasis {
    /// Assembles the struct without validating anything; pair with
    /// [`AdaptedBasis::verify`] when the parts come from outside.
    pub fn from_parts(
        f: Polynomial,
        weight: WeightVector,
        chi: VectorField,
        deltas: Vec<VectorField>,
        nus: Vec<Rational>,
        brackets: BTreeMap<(usize, usize), Vec<Polynomial>>,
    ) -> Self {
        AdaptedBasis { f, weight, chi, deltas, nus, brackets, germ_unit: None }
    }

    /// Declares the basis valid only as a germ at the origin: the
    /// coefficient determinant is `unit * f` for a non-constant `unit`
    /// with `unit(0) != 0` instead of `f` itself.
    pub fn with_germ_unit(mut self, unit: Polynomial) -> Self {
        self.germ_unit = Some(unit);
        self
    }

    /// Non-constant unit `u` with determinant `u * f`, present only when
    /// the basis could not be normalized over the polynomial ring and is
    /// valid as a germ at the origin.
    pub fn germ_unit(&self) -> Option<&Polynomial> {
        self.germ_unit.as_ref()
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn n(&self) -> usize {
        self.weight.nvars()
    }

    pub fn chi(&self) -> &VectorField {
        &self.chi
    }

    pub fn deltas(&self) -> &[VectorField] {
        &self.deltas
    }

    pub fn nus(&self) -> &[Rational] {
        &self.nus
    }

    /// Weight of basis field `label` in `1..=n`; the Euler field has
    /// weight zero.
    pub fn field_weight(&self, label: usize) -> Rational {
        assert!((1..=self.n()).contains(&label), "field label out of range");
        if label == 1 {
            Rational::zero()
        } else {
            self.nus[label - 2].clone()
        }
    }

    /// Coefficients of `[delta_i, delta_j]` over the deltas, labels in
    /// `2..=n` with `i < j`. The returned slice is indexed by `l - 2`.
    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Polynomial] {
        assert!(2 <= i && i < j && j <= self.n(), "bracket labels out of range");
        &self.brackets[&(i, j)]
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Polynomial>> {
        &self.brackets
    }

    /// Full recheck of every stored identity: the Euler field matches the
    /// weights, the deltas are weight-homogeneous and kill `f`, the
    /// determinant is exactly `f`, `[chi, delta] = nu * delta`, and the
    /// bracket table reproduces the actual brackets.
    pub fn verify(&self) -> Result<(), LogarithmicError> {
        let n = self.n();
        let fail = |msg: String| Err(LogarithmicError::Inconsistent(msg));
        if self.chi != euler_field(&self.weight) {
            return fail("stored Euler field does not match the weights".into());
        }
        require_weight_one(&self.f, &self.weight)?;
        if self.deltas.len() != n - 1 || self.nus.len() != n - 1 {
            return fail(format!("expected {} tangent fields", n - 1));
        }
        for (d, nu) in self.deltas.iter().zip(&self.nus) {
            if !d.apply(&self.f).is_zero() {
                return fail("a tangent field does not kill f".into());
            }
            let parts = d.wqh_parts(&self.weight);
            if parts.len() != 1 || !parts.contains_key(nu) {
                return fail("a tangent field is not homogeneous of its stated weight".into());
            }
            if self.chi.bracket(d) != d.scale(nu) {
                return fail("[chi, delta] != nu * delta for a tangent field".into());
            }
        }
        let mut rows = vec![self.chi.clone()];
        rows.extend(self.deltas.iter().cloned());
        let expected = match &self.germ_unit {
            None => self.f.clone(),
            Some(u) => {
                if u.is_constant() || u.constant_term().is_zero() {
                    return fail(
                        "a germ unit must be non-constant and nonzero at the origin".into(),
                    );
                }
                u * &self.f
            }
        };
        if field_determinant(&rows) != expected {
            return fail("coefficient determinant does not match f times the unit".into());
        }
        for i in 2..=n {
            for j in (i + 1)..=n {
                let coeffs = match self.brackets.get(&(i, j)) {
                    Some(c) if c.len() == n - 1 => c,
                    _ => return fail(format!("bracket table entry ({i}, {j}) missing")),
                };
                let mut expect = VectorField::zero(n);
                for (c, d) in coeffs.iter().zip(&self.deltas) {
                    expect = expect.add(&d.mul_poly(c));
                }
                if self.deltas[i - 2].bracket(&self.deltas[j - 2]) != expect {
                    return fail(format!("bracket table entry ({i}, {j}) is wrong"));
                }
            }
        }
        Ok(())
    }
}

/// Builds an adapted basis for a divisor that is quasi-homogeneous of
/// weight one under `w`.
///
/// The tangent generators are taken from [`theta_basis`]; every
/// `(n-1)`-subset is tried in a fixed order and the first one whose
/// determinant (together with the Euler row) is a constant times `f` wins.
/// If only subsets with a non-constant unit exist, redundant generators are
/// pruned first and the search repeats; when a non-constant unit still
/// remains but does not vanish at the origin, the basis is returned with
/// the unit recorded (see [`AdaptedBasis::germ_unit`]) — it is a basis of
/// the germ at the origin even though the determinant is only `u * f`.
pub fn adapted_basis(
    f: &Polynomial,
    w: &WeightVector,
) -> Result<AdaptedBasis, LogarithmicError> {
    if f.is_zero() || f.is_constant() {
        return Err(LogarithmicError::ConstantDivisor);
    }
    require_weight_one(f, w)?;
    let n = f.nvars();
    assert_eq!(w.nvars(), n, "weights and polynomial disagree on variables");
    let chi = euler_field(w);
    let mut gens = theta_basis(f, w)?;
    let original = gens.clone();

    let mut chosen = select_subset(f, w, &chi, &gens, true)
        .or_else(|| {
            prune_redundant(&mut gens);
            select_subset(f, w, &chi, &gens, true)
        })
        .or_else(|| select_subset(f, w, &chi, &original, false))
        .ok_or(LogarithmicError::NoFreenessCertificate)?;

    // Order the tangent fields by weight, then normalize the determinant
    // to exactly f by rescaling the first one when the unit is constant.
    let mut weighted: Vec<(Rational, VectorField)> = chosen
        .drain(..)
        .map(|d| {
            let nu = d
                .w_order(w)
                .finite()
                .cloned()
                .expect("tangent fields are nonzero");
            (nu, d)
        })
        .collect();
    weighted.sort_by(|a, b| a.0.cmp(&b.0));
    let nus: Vec<Rational> = weighted.iter().map(|(nu, _)| nu.clone()).collect();
    let mut deltas: Vec<VectorField> = weighted.into_iter().map(|(_, d)| d).collect();
    let mut rows = vec![chi.clone()];
    rows.extend(deltas.iter().cloned());
    let unit = field_determinant(&rows)
        .exact_divide(f)
        .expect("selected subset divides");
    let c = unit.constant_term();
    if c.is_zero() {
        return Err(LogarithmicError::Inconsistent(
            "selected subset lost its certificate".into(),
        ));
    }
    let germ_unit = if unit.is_constant() {
        if deltas.is_empty() {
            // One variable: there is nothing to rescale, the determinant
            // must already be f on the nose.
            if !c.is_one() {
                return Err(LogarithmicError::Inconsistent(format!(
                    "one-variable determinant is {c} * f; rescale the divisor"
                )));
            }
        } else {
            let inv = Rational::one() / c;
            deltas[0] = deltas[0].scale(&inv);
        }
        None
    } else {
        Some(unit)
    };

    // Bracket structure. [chi, delta_j] = nu_j delta_j is rechecked by
    // verify(); here we need the pairwise table of the deltas.
    let delta_elems: Vec<ModuleElement> =
        deltas.iter().map(VectorField::as_module_element).collect();
    let mut brackets = BTreeMap::new();
    for i in 2..=n {
        for j in (i + 1)..=n {
            let b = deltas[i - 2].bracket(&deltas[j - 2]);
            let coeffs = lift(&b.as_module_element(), &delta_elems)
                .ok_or(LogarithmicError::BracketOutsideSpan { i, j })?;
            brackets.insert((i, j), coeffs);
        }
    }

    let basis = AdaptedBasis {
        f: f.clone(),
        weight: w.clone(),
        chi,
        deltas,
        nus,
        brackets,
        germ_unit,
    };
    basis.verify()?;
    Ok(basis)
}

/// First subset (in index-lexicographic order) whose determinant with the
/// Euler row is `u * f` with `u(0) != 0`; `constant_unit` additionally
/// demands that `u` be constant. Candidates are pre-filtered by the weight
/// count: the determinant is homogeneous of weight `sum(w) + sum(nu)`,
/// which must be one for it to divide into `f` with a weight-zero unit.
fn select_subset(
    f: &Polynomial,
    w: &WeightVector,
    chi: &VectorField,
    gens: &[VectorField],
    constant_unit: bool,
) -> Option<Vec<VectorField>> {
    let n = f.nvars();
    let one = Rational::one();
    for subset in (0..gens.len()).combinations(n - 1) {
        let total = subset
            .iter()
            .try_fold(w.total(), |acc, &i| Some(acc + gens[i].w_order(w).finite()?));
        if total != Some(one.clone()) {
            continue;
        }
        let mut rows = vec![chi.clone()];
        rows.extend(subset.iter().map(|&i| gens[i].clone()));
        if let Some(u) = field_determinant(&rows).exact_divide(f) {
            if !u.constant_term().is_zero() && (u.is_constant() || !constant_unit) {
                return Some(subset.into_iter().map(|i| gens[i].clone()).collect());
            }
        }
    }
    None
}

/// Drops generators expressible over the others, keeping the list order.
fn prune_redundant(gens: &mut Vec<VectorField>) {
    let mut i = 0;
    while i < gens.len() && gens.len() > 1 {
        let candidate = gens[i].as_module_element();
        let others: Vec<ModuleElement> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.as_module_element())
            .collect();
        if lift(&candidate, &others).is_some() {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
}

/// The subset sums `1 - sum of nu_j over J` for every `J` inside
/// `{2, ..., n}`, listed by subset size and then lexicographically.
/// All values are positive for an adapted basis.
pub fn weight_inequalities(basis: &AdaptedBasis) -> Vec<(Vec<usize>, Rational)> {
    let n = basis.n();
    let labels: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    for size in 0..=labels.len() {
        for subset in labels.iter().copied().combinations(size) {
            let total: Rational = subset.iter().map(|&j| basis.field_weight(j)).sum();
            out.push((subset, Rational::one() - total));
        }
    }
    out
}

/// Order-one operators annihilating `1/f^k`: the Euler field shifted by
/// `k` together with the tangent fields of the basis.
pub fn ann1_generators(basis: &AdaptedBasis, k: u32) -> Vec<DifferentialOperator> {
    let shift = Rational::from(BigInt::from(k));
    let mut ops = vec![basis.chi().to_operator().plus_constant(&shift)];
    ops.extend(basis.deltas().iter().map(VectorField::to_operator));
    ops
}

/// Order-one annihilators from a general logarithmic family: each
/// `delta_i + k * cofactor_i` annihilates `1/f^k`.
pub fn ann1_from_derivations(set: &LogDerivationSet, k: u32) -> Vec<DifferentialOperator> {
    let shift = Rational::from(BigInt::from(k));
    set.fields
        .iter()
        .zip(&set.cofactors)
        .map(|(d, a)| {
            &d.to_operator() + &DifferentialOperator::from_polynomial(a.scale(&shift))
        })
        .collect()
}

/// Applies each operator to `1/f^k` and reports whether the result is zero.
pub fn annihilation_check(
    ops: &[DifferentialOperator],
    f: &Polynomial,
    k: u32,
) -> Vec<bool> {
    assert!(k >= 1, "annihilation check needs k >= 1");
    ops.iter()
        .map(|op| op.apply_to_inverse_power(f, k).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn vars2() -> (Polynomial, Polynomial) {
        (Polynomial::var(0, 2), Polynomial::var(1, 2))
    }

    fn cusp() -> (Polynomial, WeightVector) {
        let (x, y) = vars2();
        (&x.pow(3) - &y.pow(2), WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap())
    }

    fn normal_crossing2() -> (Polynomial, WeightVector) {
        let (x, y) = vars2();
        (&x * &y, WeightVector::new(vec![rat(1, 2), rat(1, 2)]).unwrap())
    }

    #[test]
    fn log_derivations_of_the_cusp() {
        let (f, _) = cusp();
        let set = log_derivations(&f).unwrap();
        assert!(!set.fields.is_empty());
        for (d, a) in set.fields.iter().zip(&set.cofactors) {
            assert_eq!(d.apply(&f), a * &f);
        }
        // The Euler field appears among the generators up to scale: its
        // cofactor is a nonzero constant.
        assert!(set.cofactors.iter().any(|a| !a.is_zero()));
    }

    #[test]
    fn log_derivations_reject_constants() {
        assert!(matches!(
            log_derivations(&Polynomial::one(2)),
            Err(LogarithmicError::ConstantDivisor)
        ));
        assert!(matches!(
            log_derivations(&Polynomial::zero(2)),
            Err(LogarithmicError::ConstantDivisor)
        ));
    }

    #[test]
    fn theta_basis_of_the_cusp_is_one_field() {
        let (f, w) = cusp();
        let gens = theta_basis(&f, &w).unwrap();
        assert_eq!(gens.len(), 1);
        let (x, y) = vars2();
        let expect = VectorField::new(vec![y.scale(&rat_int(2)), x.pow(2).scale(&rat_int(3))]);
        assert_eq!(gens[0], expect);
    }

    #[test]
    fn saito_check_on_the_cusp_basis() {
        let (f, w) = cusp();
        let (x, y) = vars2();
        let chi = euler_field(&w);
        let delta = VectorField::new(vec![y.scale(&rat_int(2)), x.pow(2).scale(&rat_int(3))]);
        // det [[x/3, y/2], [2y, 3x^2]] = x^3 - y^2 = f.
        let cert = saito_check(&[chi.clone(), delta.clone()], &f);
        assert!(cert.ok);
        assert_eq!(cert.determinant, f);
        assert_eq!(cert.unit, Some(Polynomial::one(2)));
        assert_eq!(cert.logarithmic, vec![true, true]);
        // A failing configuration: two copies of the same field.
        let bad = saito_check(&[delta.clone(), delta], &f);
        assert!(!bad.ok);
        assert!(bad.determinant.is_zero());
    }

    #[test]
    fn adapted_basis_of_the_cusp() {
        let (f, w) = cusp();
        let basis = adapted_basis(&f, &w).unwrap();
        assert_eq!(basis.deltas().len(), 1);
        assert_eq!(basis.nus(), &[rat(1, 6)]);
        let (x, y) = vars2();
        assert_eq!(
            basis.deltas()[0],
            VectorField::new(vec![y.scale(&rat_int(2)), x.pow(2).scale(&rat_int(3))])
        );
        basis.verify().unwrap();
        // Sum of variable weights plus delta weights is one.
        let total = basis.weight().total() + basis.nus().iter().sum::<Rational>();
        assert_eq!(total, rat_int(1));
    }

    #[test]
    fn adapted_basis_of_normal_crossings() {
        let (f, w) = normal_crossing2();
        let basis = adapted_basis(&f, &w).unwrap();
        assert_eq!(basis.nus(), &[rat_int(0)]);
        basis.verify().unwrap();
        let mut rows = vec![basis.chi().clone()];
        rows.extend(basis.deltas().iter().cloned());
        assert_eq!(field_determinant(&rows), f);
    }

    #[test]
    fn adapted_basis_in_three_variables() {
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(1, 3);
        let z = Polynomial::var(2, 3);
        let f = &(&x * &y) * &z;
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 3), rat(1, 3)]).unwrap();
        let basis = adapted_basis(&f, &w).unwrap();
        assert_eq!(basis.deltas().len(), 2);
        assert_eq!(basis.nus(), &[rat_int(0), rat_int(0)]);
        basis.verify().unwrap();
        // All brackets vanish for this torus-invariant divisor.
        for coeffs in basis.brackets().values() {
            assert!(coeffs.iter().all(Polynomial::is_zero));
        }
    }

    /// x*y*(x + y)*(x*z + y): quasi-homogeneous of weight one under
    /// (1/4, 1/4, 0), with one variable of weight zero.
    fn weak_example() -> (Polynomial, WeightVector) {
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(1, 3);
        let z = Polynomial::var(2, 3);
        let f = &(&(&x * &y) * &(&x + &y)) * &(&(&x * &z) + &y);
        let w = WeightVector::new(vec![rat(1, 4), rat(1, 4), rat(0, 1)]).unwrap();
        (f, w)
    }

    #[test]
    fn adapted_basis_with_a_weight_zero_variable() {
        let (f, w) = weak_example();
        assert!(f.is_wqh(&w).is_homogeneous_of(&rat_int(1)));
        let basis = adapted_basis(&f, &w).unwrap();
        basis.verify().unwrap();
        assert_eq!(basis.deltas().len(), 2);
        // The determinant identity forces the delta weights to add up to
        // 1 - (w_1 + w_2 + w_3) = 1/2.
        assert_eq!(basis.nus().iter().sum::<Rational>(), rat(1, 2));
        let mut rows = vec![basis.chi().clone()];
        rows.extend(basis.deltas().iter().cloned());
        let cert = saito_check(&rows, &f);
        assert!(cert.ok);
        assert_eq!(cert.unit, Some(Polynomial::one(3)));
    }

    #[test]
    fn adapted_basis_rejects_mixed_polynomials() {
        let (x, y) = vars2();
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap();
        let err = adapted_basis(&(&x + &y.pow(3)), &w).unwrap_err();
        assert!(matches!(err, LogarithmicError::NotWeightOne(_)));
    }

    #[test]
    fn verify_accepts_a_germ_unit_exactly_when_it_matches() {
        // f = xy inside three variables, basis rows chi, x dx - y dy and
        // (1 + z) dz: the determinant is -(1 + z) * f, a germ-only unit.
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(1, 3);
        let z = Polynomial::var(2, 3);
        let f = &x * &y;
        let w = WeightVector::new(vec![rat(1, 2), rat(1, 2), rat(0, 1)]).unwrap();
        let zero = Polynomial::zero(3);
        let eta1 = VectorField::new(vec![x.clone(), -&y, zero.clone()]);
        let eta2 = VectorField::new(vec![zero.clone(), zero.clone(), &Polynomial::one(3) + &z]);
        let brackets =
            BTreeMap::from([((2usize, 3usize), vec![Polynomial::zero(3), Polynomial::zero(3)])]);
        let unit = -&(&Polynomial::one(3) + &z);
        let basis = AdaptedBasis::from_parts(
            f.clone(),
            w.clone(),
            euler_field(&w),
            vec![eta1.clone(), eta2.clone()],
            vec![rat_int(0), rat_int(0)],
            brackets.clone(),
        );
        // Without the unit the determinant check must fail; with it the
        // basis verifies, and a wrong unit fails again.
        assert!(basis.verify().is_err());
        let flagged = basis.with_germ_unit(unit.clone());
        flagged.verify().unwrap();
        assert_eq!(flagged.germ_unit(), Some(&unit));
        let wrong = AdaptedBasis::from_parts(
            f,
            w.clone(),
            euler_field(&w),
            vec![eta1, eta2],
            vec![rat_int(0), rat_int(0)],
            brackets,
        )
        .with_germ_unit(-&(&Polynomial::one(3) + &z.scale(&rat_int(2))));
        assert!(wrong.verify().is_err());
    }

    #[test]
    fn weight_inequalities_for_the_cusp() {
        let (f, w) = cusp();
        let basis = adapted_basis(&f, &w).unwrap();
        let table = weight_inequalities(&basis);
        assert_eq!(table, vec![(vec![], rat_int(1)), (vec![2], rat(5, 6))]);
        assert!(table.iter().all(|(_, v)| v > &rat_int(0)));
    }

    #[test]
    fn order_one_annihilators_of_the_cusp() {
        let (f, w) = cusp();
        let basis = adapted_basis(&f, &w).unwrap();
        for k in 1..=5 {
            let ops = ann1_generators(&basis, k);
            assert_eq!(annihilation_check(&ops, &f, k), vec![true, true]);
        }
        // The general logarithmic route agrees.
        let set = log_derivations(&f).unwrap();
        for k in 1..=3 {
            let ops = ann1_from_derivations(&set, k);
            assert!(annihilation_check(&ops, &f, k).iter().all(|&b| b));
        }
        // Shifting by the wrong constant breaks annihilation.
        let wrong = vec![basis.chi().to_operator().plus_constant(&rat_int(2))];
        assert_eq!(annihilation_check(&wrong, &f, 1), vec![false]);
    }
}
