//! Complexes of free modules over the Weyl algebra attached to an adapted
//! basis, their polynomial duals, and constructive exactness witnesses.
//!
//! For an adapted basis `{chi, delta_2, ..., delta_n}` and a twist `k`, set
//! `t_1 = chi + k` and `t_j = delta_j`. Level `l` of the complex is the
//! free module on wedges of `l` distinct basis labels, and the downward map
//! sends `P (x) e_I` (positions `m` counted from zero inside `I`) to
//!
//! ```text
//!   sum_m (-1)^m  P t_{i_m} (x) e_{I \ i_m}
//! + sum_{a<b} (-1)^(a+b)  P (x) [t_{i_a}, t_{i_b}] ^ e_{I \ {i_a, i_b}}
//! ```
//!
//! where the bracket expands over the basis fields with polynomial
//! coefficients and sorting a field into the wedge costs one sign per
//! transposition. Entries multiply `P` from the right, so the complex
//! property is the entrywise statement `sum_J M_l[I,J] * M_{l-1}[J,K] = 0`.
//!
//! Applying entries to polynomials instead (left action) gives the dual
//! complex going up; its cohomology vanishes in the range checked by
//! [`SpencerComplex::ext_witness`], which constructs explicit preimages by
//! solving Euler equations `(chi + c) h = g` weight by weight.

use crate::logarithmic::AdaptedBasis;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::weights::WeightVector;
use crate::weyl::DifferentialOperator;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpencerError {
    #[error("twist k = 0 is outside the range where preimages are guaranteed; need k >= 1")]
    TwistZero,
    #[error("level {level} is out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("euler equation (chi + {c}) h = psi is resonant: the part of weight {nu} satisfies c + nu = 0")]
    Resonance { c: Box<Rational>, nu: Box<Rational> },
    #[error("graded slices need every variable weight positive, found {positive} of {nvars}")]
    WeakWeightsForSlices { positive: usize, nvars: usize },
    #[error("diagonal constant {value} at wedge {wedge} is not positive")]
    NonPositiveDiagonal { wedge: String, value: Rational },
}

/// Strictly increasing list of basis labels in `1..=n`; label 1 is the
/// Euler field, label `j >= 2` is `delta_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WedgeIndex(Vec<usize>);

impl WedgeIndex {
    pub fn new(labels: Vec<usize>) -> Self {
        assert!(labels.windows(2).all(|p| p[0] < p[1]), "labels must strictly increase");
        assert!(labels.first().is_none_or(|&l| l >= 1), "labels start at 1");
        WedgeIndex(labels)
    }

    pub fn empty() -> Self {
        WedgeIndex(Vec::new())
    }

    /// All wedges of `size` labels drawn from `1..=n`, lexicographically.
    pub fn all(n: usize, size: usize) -> Vec<WedgeIndex> {
        (1..=n).combinations(size).map(WedgeIndex).collect()
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, label: usize) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    /// Copy with the label at `position` removed.
    pub fn remove_at(&self, position: usize) -> WedgeIndex {
        let mut v = self.0.clone();
        v.remove(position);
        WedgeIndex(v)
    }

    /// Copy with the labels at two positions removed.
    pub fn remove_two(&self, a: usize, b: usize) -> WedgeIndex {
        assert!(a < b);
        let mut v = self.0.clone();
        v.remove(b);
        v.remove(a);
        WedgeIndex(v)
    }

    /// Inserts a label not already present; returns the insertion position
    /// (the number of transpositions needed to sort it in) and the result.
    pub fn insert_sorted(&self, label: usize) -> (usize, WedgeIndex) {
        let pos = self.0.partition_point(|&l| l < label);
        assert!(self.0.get(pos) != Some(&label), "label already present");
        let mut v = self.0.clone();
        v.insert(pos, label);
        (pos, WedgeIndex(v))
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|l| l.to_string()).join(","))
    }
}

/// One level of the complex: operator matrix from wedges of size `level`
/// down to wedges of size `level - 1`, stored sparsely by row.
#[derive(Clone, Debug)]
pub struct LevelMatrix {
    level: usize,
    sources: Vec<WedgeIndex>,
    targets: Vec<WedgeIndex>,
    rows: BTreeMap<WedgeIndex, BTreeMap<WedgeIndex, DifferentialOperator>>,
}

impl LevelMatrix {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn sources(&self) -> &[WedgeIndex] {
        &self.sources
    }

    pub fn targets(&self) -> &[WedgeIndex] {
        &self.targets
    }

    pub fn entry(&self, src: &WedgeIndex, tgt: &WedgeIndex) -> Option<&DifferentialOperator> {
        self.rows.get(src).and_then(|r| r.get(tgt))
    }

    pub fn row(&self, src: &WedgeIndex) -> impl Iterator<Item = (&WedgeIndex, &DifferentialOperator)> {
        self.rows.get(src).into_iter().flat_map(|r| r.iter())
    }
}

/// Polynomial tuple indexed by the wedges of one level; zero components are
/// not stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTuple {
    level: usize,
    nvars: usize,
    components: BTreeMap<WedgeIndex, Polynomial>,
}

impl CochainTuple {
    pub fn zero(level: usize, nvars: usize) -> Self {
        CochainTuple { level, nvars, components: BTreeMap::new() }
    }

    pub fn new(
        level: usize,
        nvars: usize,
        parts: impl IntoIterator<Item = (WedgeIndex, Polynomial)>,
    ) -> Self {
        let mut out = Self::zero(level, nvars);
        for (w, p) in parts {
            out.insert(w, p);
        }
        out
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn insert(&mut self, wedge: WedgeIndex, p: Polynomial) {
        assert_eq!(wedge.size(), self.level, "wedge size must match the tuple level");
        assert_eq!(p.nvars(), self.nvars, "component has wrong variable count");
        if p.is_zero() {
            self.components.remove(&wedge);
        } else {
            self.components.insert(wedge, p);
        }
    }

    pub fn get(&self, wedge: &WedgeIndex) -> Option<&Polynomial> {
        self.components.get(wedge)
    }

    /// Component as an owned polynomial, zero when absent.
    pub fn component(&self, wedge: &WedgeIndex) -> Polynomial {
        self.components.get(wedge).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn components(&self) -> impl Iterator<Item = (&WedgeIndex, &Polynomial)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sub(&self, rhs: &CochainTuple) -> CochainTuple {
        assert_eq!(self.level, rhs.level, "levels differ");
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = self.clone();
        for (w, p) in &rhs.components {
            let diff = &out.component(w) - p;
            out.insert(w.clone(), diff);
        }
        out
    }
}

/// Outcome of a witness request for a dual-complex element.
#[derive(Clone, Debug)]
pub enum WitnessOutcome {
    /// `z` is a cocycle and `u` maps onto it: `dual_apply(level, u) = z`.
    Witness(CochainTuple),
    /// `z` fails the cocycle test; the nonzero value of the next dual map
    /// is returned.
    NotACocycle { residual: CochainTuple },
    /// The constructed candidate missed `z`; `residual = z - image`.
    /// Unreachable for `k >= 1` on a verified basis, reported for honesty.
    Unverified { residual: CochainTuple },
}

/// The complex of an adapted basis at twist `k`, with one operator matrix
/// per level `1..=n`.
#[derive(Clone, Debug)]
pub struct SpencerComplex {
    basis: AdaptedBasis,
    k: u32,
    levels: Vec<LevelMatrix>,
}

impl SpencerComplex {
    /// Assembles all level matrices from the basis data (the bracket table
    /// is used as stored, so corrupted tables produce corrupted matrices,
    /// which [`SpencerComplex::verify_complex`] will then reject).
    pub fn build(basis: &AdaptedBasis, k: u32) -> Self {
        let n = basis.n();
        let levels = (1..=n).map(|l| build_level(basis, k, l)).collect();
        SpencerComplex { basis: basis.clone(), k, levels }
    }

    pub fn basis(&self) -> &AdaptedBasis {
        &self.basis
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn nvars(&self) -> usize {
        self.basis.f().nvars()
    }

    /// Matrix of the map from level `l` to level `l - 1`.
    pub fn level(&self, l: usize) -> &LevelMatrix {
        assert!((1..=self.n()).contains(&l), "level out of range");
        &self.levels[l - 1]
    }

    /// Constant `k - sum of nu_j over j in I \ {1}` attached to a wedge
    /// containing the Euler label.
    pub fn diagonal_constant(&self, wedge: &WedgeIndex) -> Rational {
        assert!(wedge.contains(1), "diagonal constants live on wedges containing 1");
        let mut c = Rational::from(BigInt::from(self.k));
        for &l in wedge.labels() {
            c -= self.basis.field_weight(l);
        }
        c
    }

    /// Checks `sum_J M_l[I,J] * M_{l-1}[J,K] = 0` for consecutive levels.
    pub fn verify_complex(&self) -> bool {
        self.first_defect().is_none()
    }

    /// First triple `(l, I, K)` where the composite of levels `l` and
    /// `l - 1` fails to vanish, if any.
    pub fn first_defect(&self) -> Option<(usize, WedgeIndex, WedgeIndex)> {
        let nvars = self.nvars();
        for l in 2..=self.n() {
            let upper = &self.levels[l - 1];
            let lower = &self.levels[l - 2];
            for src in &upper.sources {
                for tgt in &lower.targets {
                    let mut acc = DifferentialOperator::zero(nvars);
                    for (mid, a) in upper.row(src) {
                        if let Some(b) = lower.entry(mid, tgt) {
                            acc = &acc + &(a * b);
                        }
                    }
                    if !acc.is_zero() {
                        return Some((l, src.clone(), tgt.clone()));
                    }
                }
            }
        }
        None
    }

    /// Dual (upward) map: applies the level-`level` matrix to a tuple of
    /// polynomials sitting at level `level - 1`.
    pub fn dual_apply(&self, level: usize, u: &CochainTuple) -> CochainTuple {
        assert!((1..=self.n()).contains(&level), "level out of range");
        assert_eq!(u.level(), level - 1, "tuple level must be one below the map level");
        assert_eq!(u.nvars(), self.nvars(), "tuple has wrong variable count");
        let lm = &self.levels[level - 1];
        let mut out = CochainTuple::zero(level, self.nvars());
        for src in &lm.sources {
            let mut acc = Polynomial::zero(self.nvars());
            for (tgt, op) in lm.row(src) {
                if let Some(p) = u.get(tgt) {
                    acc += &op.apply(p);
                }
            }
            out.insert(src.clone(), acc);
        }
        out
    }

    /// Constructs a preimage of `z` under the dual map into its level.
    ///
    /// For `k >= 1` every cocycle at level `>= 1` is a coboundary; the
    /// witness is built by solving one Euler equation per wedge containing
    /// the Euler label and is then verified by applying the dual map. The
    /// cocycle test uses the next level up (vacuous at the top level).
    pub fn ext_witness(&self, z: &CochainTuple) -> Result<WitnessOutcome, SpencerError> {
        let n = self.n();
        let level = z.level();
        if self.k == 0 {
            return Err(SpencerError::TwistZero);
        }
        if !(1..=n).contains(&level) {
            return Err(SpencerError::LevelOutOfRange { level, max: n });
        }
        if level < n {
            let residual = self.dual_apply(level + 1, z);
            if !residual.is_zero() {
                return Ok(WitnessOutcome::NotACocycle { residual });
            }
        }
        let w = self.basis.weight();
        let mut u = CochainTuple::zero(level - 1, self.nvars());
        for wedge in WedgeIndex::all(n, level) {
            if !wedge.contains(1) {
                continue;
            }
            let c = self.diagonal_constant(&wedge);
            if !c.is_positive() {
                return Err(SpencerError::NonPositiveDiagonal {
                    wedge: wedge.to_string(),
                    value: c,
                });
            }
            let g = z.component(&wedge);
            let h = euler_solve(&c, &g, w)?;
            u.insert(wedge.remove_at(0), h);
        }
        let image = self.dual_apply(level, &u);
        if image == *z {
            Ok(WitnessOutcome::Witness(u))
        } else {
            Ok(WitnessOutcome::Unverified { residual: z.sub(&image) })
        }
    }

    /// Dimensions `(dim ker, dim im)` of the dual complex restricted to the
    /// weight-`nu` graded slice at `level`: the kernel of the outgoing map
    /// and the image of the incoming one. Requires every variable weight
    /// positive so that each slice is finite dimensional.
    pub fn graded_slice_oracle(
        &self,
        level: usize,
        nu: &Rational,
    ) -> Result<(usize, usize), SpencerError> {
        let n = self.n();
        let w = self.basis.weight();
        if w.positive_count() != w.nvars() {
            return Err(SpencerError::WeakWeightsForSlices {
                positive: w.positive_count(),
                nvars: w.nvars(),
            });
        }
        if level > n {
            return Err(SpencerError::LevelOutOfRange { level, max: n });
        }
        let dim_here = self.slice_basis(level, nu).len();
        let rank_out = if level < n { self.slice_rank(level + 1, nu) } else { 0 };
        let rank_in = if level > 0 { self.slice_rank(level, nu) } else { 0 };
        Ok((dim_here - rank_out, rank_in))
    }

    /// Monomial basis of the slice at one level: wedge `I` carries the
    /// monomials of weight `nu` plus the total delta weight of `I`.
    fn slice_basis(&self, level: usize, nu: &Rational) -> Vec<(WedgeIndex, Monomial)> {
        let mut out = Vec::new();
        for wedge in WedgeIndex::all(self.n(), level) {
            let mut target = nu.clone();
            for &l in wedge.labels() {
                target += self.basis.field_weight(l);
            }
            for m in monomials_of_weight(self.basis.weight(), &target) {
                out.push((wedge.clone(), m));
            }
        }
        out
    }

    /// Rank of the dual map of level `m` restricted to the slice.
    fn slice_rank(&self, m: usize, nu: &Rational) -> usize {
        let source = self.slice_basis(m - 1, nu);
        let target = self.slice_basis(m, nu);
        if source.is_empty() || target.is_empty() {
            return 0;
        }
        let index: BTreeMap<&(WedgeIndex, Monomial), usize> =
            target.iter().zip(0..).collect();
        let lm = &self.levels[m - 1];
        let mut matrix = vec![vec![Rational::zero(); source.len()]; target.len()];
        for (col, (wedge, mono)) in source.iter().enumerate() {
            let p = Polynomial::from_terms(self.nvars(), [(mono.clone(), Rational::one())]);
            for src in &lm.sources {
                if let Some(op) = lm.entry(src, wedge) {
                    for (m_out, c) in op.apply(&p).terms() {
                        let row = index[&(src.clone(), m_out.clone())];
                        matrix[row][col] += c;
                    }
                }
            }
        }
        gaussian_rank(matrix)
    }
}

/// Builds the level-`l` matrix from the basis data.
fn build_level(basis: &AdaptedBasis, k: u32, l: usize) -> LevelMatrix {
    let n = basis.n();
    let nvars = basis.f().nvars();
    let sources = WedgeIndex::all(n, l);
    let targets = WedgeIndex::all(n, l - 1);
    let tilde = |label: usize| -> DifferentialOperator {
        if label == 1 {
            basis
                .chi()
                .to_operator()
                .plus_constant(&Rational::from(BigInt::from(k)))
        } else {
            basis.deltas()[label - 2].to_operator()
        }
    };
    let mut rows: BTreeMap<WedgeIndex, BTreeMap<WedgeIndex, DifferentialOperator>> =
        BTreeMap::new();
    let mut add = |src: &WedgeIndex, tgt: WedgeIndex, op: DifferentialOperator| {
        let row = rows.entry(src.clone()).or_default();
        let slot = row
            .entry(tgt)
            .or_insert_with(|| DifferentialOperator::zero(nvars));
        *slot = &*slot + &op;
    };
    for src in &sources {
        let labels = src.labels().to_vec();
        for (m, &i) in labels.iter().enumerate() {
            let mut op = tilde(i);
            if m % 2 == 1 {
                op = -&op;
            }
            add(src, src.remove_at(m), op);
        }
        for a in 0..labels.len() {
            for b in (a + 1)..labels.len() {
                let (ia, ib) = (labels[a], labels[b]);
                let pair_negative = (a + b) % 2 == 1;
                let coeffs: Vec<(usize, Polynomial)> = if ia == 1 {
                    vec![(ib, Polynomial::constant(basis.field_weight(ib), nvars))]
                } else {
                    basis
                        .bracket_coeffs(ia, ib)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(idx, c)| (idx + 2, c.clone()))
                        .collect()
                };
                let rest = src.remove_two(a, b);
                for (label, c) in coeffs {
                    if rest.contains(label) {
                        continue;
                    }
                    let (pos, tgt) = rest.insert_sorted(label);
                    let mut op = DifferentialOperator::from_polynomial(c);
                    if pair_negative != (pos % 2 == 1) {
                        op = -&op;
                    }
                    add(src, tgt, op);
                }
            }
        }
    }
    // Drop zero entries created by cancellation.
    for row in rows.values_mut() {
        row.retain(|_, op| !op.is_zero());
    }
    rows.retain(|_, row| !row.is_empty());
    LevelMatrix { level: l, sources, targets, rows }
}

/// Solves `(chi + c) h = psi` by scaling each graded part of `psi` by
/// `1 / (c + nu)`; fails when some occurring weight satisfies `c + nu = 0`.
pub fn euler_solve(
    c: &Rational,
    psi: &Polynomial,
    w: &WeightVector,
) -> Result<Polynomial, SpencerError> {
    let mut h = Polynomial::zero(psi.nvars());
    for (nu, part) in psi.wqh_decompose(w) {
        let d = c + &nu;
        if d.is_zero() {
            return Err(SpencerError::Resonance { c: Box::new(c.clone()), nu: Box::new(nu) });
        }
        h += &part.scale(&d.recip());
    }
    Ok(h)
}

/// All monomials of exactly the given weight; requires strictly positive
/// weights so the answer is finite.
fn monomials_of_weight(w: &WeightVector, target: &Rational) -> Vec<Monomial> {
    assert_eq!(w.positive_count(), w.nvars(), "weights must all be positive");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(w.nvars());
    rec_monomials(w.as_slice(), target, &mut prefix, &mut out);
    out
}

fn rec_monomials(
    ws: &[Rational],
    target: &Rational,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if target.is_negative() {
        return;
    }
    if ws.is_empty() {
        if target.is_zero() {
            out.push(Monomial::new(prefix.clone()));
        }
        return;
    }
    let mut e = 0u32;
    loop {
        let used = &ws[0] * Rational::from(BigInt::from(e));
        if &used > target {
            break;
        }
        prefix.push(e);
        rec_monomials(&ws[1..], &(target - used), prefix, out);
        prefix.pop();
        e += 1;
    }
}

/// Rank of an exact rational matrix by Gaussian elimination.
fn gaussian_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = m[row][col].clone().recip();
        for entry in m[row].iter_mut().skip(col) {
            *entry = &*entry * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (c, entry) in other.iter_mut().enumerate().skip(col) {
                    let delta = &pivot_row[c] * &factor;
                    *entry = &*entry - &delta;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Random tuple at a level, for property checks.
pub fn random_cochain(
    rng: &mut impl rand::Rng,
    n: usize,
    nvars: usize,
    level: usize,
    max_degree: u32,
    max_terms: usize,
) -> CochainTuple {
    let mut out = CochainTuple::zero(level, nvars);
    for wedge in WedgeIndex::all(n, level) {
        out.insert(wedge, crate::sample::random_polynomial(rng, nvars, max_degree, max_terms));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logarithmic::adapted_basis;
    use crate::rational::{rat, rat_int};
    use crate::weyl::euler_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cusp_basis() -> AdaptedBasis {
        let x = Polynomial::var(0, 2);
        let y = Polynomial::var(1, 2);
        let f = &x.pow(3) - &y.pow(2);
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap();
        adapted_basis(&f, &w).unwrap()
    }

    fn wedge(labels: &[usize]) -> WedgeIndex {
        WedgeIndex::new(labels.to_vec())
    }

    #[test]
    fn cusp_level_two_row_is_the_expected_pair() {
        let basis = cusp_basis();
        let c = SpencerComplex::build(&basis, 1);
        let lm = c.level(2);
        let src = wedge(&[1, 2]);
        // Entry to {1} is -delta_2; entry to {2} is chi + k - nu_2.
        let to_1 = lm.entry(&src, &wedge(&[1])).unwrap();
        let minus_delta = -&basis.deltas()[0].to_operator();
        assert_eq!(*to_1, minus_delta);
        let to_2 = lm.entry(&src, &wedge(&[2])).unwrap();
        let expect = euler_field(basis.weight())
            .to_operator()
            .plus_constant(&rat(5, 6));
        assert_eq!(*to_2, expect);
        assert_eq!(c.diagonal_constant(&src), rat(5, 6));
    }

    #[test]
    fn cusp_complexes_verify_for_small_twists() {
        let basis = cusp_basis();
        for k in 0..=3 {
            let c = SpencerComplex::build(&basis, k);
            assert!(c.verify_complex(), "twist {k} fails");
        }
    }

    #[test]
    fn corrupted_bracket_table_fails_verification() {
        let basis = cusp_basis();
        let mut brackets = basis.brackets().clone();
        // n = 2 has no delta pairs; corrupt nu instead through from_parts.
        let mut nus = basis.nus().to_vec();
        nus[0] = rat(1, 3);
        let bad = AdaptedBasis::from_parts(
            basis.f().clone(),
            basis.weight().clone(),
            basis.chi().clone(),
            basis.deltas().to_vec(),
            nus,
            std::mem::take(&mut brackets),
        );
        let c = SpencerComplex::build(&bad, 1);
        assert!(!c.verify_complex());
        let defect = c.first_defect().unwrap();
        assert_eq!(defect.0, 2);
    }

    #[test]
    fn dual_apply_matches_hand_computation() {
        let basis = cusp_basis();
        let c = SpencerComplex::build(&basis, 1);
        let x = Polynomial::var(0, 2);
        let y = Polynomial::var(1, 2);
        // u = x at the empty wedge.
        let u = CochainTuple::new(0, 2, [(WedgeIndex::empty(), x.clone())]);
        let img = c.dual_apply(1, &u);
        // (chi + 1) x = (4/3) x, delta_2 x = 2y.
        assert_eq!(img.component(&wedge(&[1])), x.scale(&rat(4, 3)));
        assert_eq!(img.component(&wedge(&[2])), y.scale(&rat_int(2)));
        // One more level up it must die: d(d(u)) = 0.
        let img2 = c.dual_apply(2, &img);
        assert!(img2.is_zero());
    }

    #[test]
    fn euler_solve_round_trips_and_reports_resonance() {
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap();
        let x = Polynomial::var(0, 2);
        let y = Polynomial::var(1, 2);
        let chi = euler_field(&w);
        let psi = &(&x * &y) + &y.pow(2).scale(&rat(3, 4));
        for c in [rat_int(1), rat(1, 2), rat(5, 6)] {
            let h = euler_solve(&c, &psi, &w).unwrap();
            let back = &chi.apply(&h) + &h.scale(&c);
            assert_eq!(back, psi, "round trip fails for c = {c}");
        }
        // c = -1/3 is resonant against the weight of x.
        let err = euler_solve(&rat(-1, 3), &x, &w).unwrap_err();
        match err {
            SpencerError::Resonance { nu, .. } => assert_eq!(*nu, rat(1, 3)),
            other => panic!("expected resonance, got {other}"),
        }
        // Zero input solves to zero even at resonant constants.
        assert!(euler_solve(&rat(-1, 3), &Polynomial::zero(2), &w).unwrap().is_zero());
    }

    #[test]
    fn witness_for_a_hand_built_cocycle() {
        let basis = cusp_basis();
        let c = SpencerComplex::build(&basis, 1);
        let x = Polynomial::var(0, 2);
        let y = Polynomial::var(1, 2);
        let z = CochainTuple::new(
            1,
            2,
            [
                (wedge(&[1]), x.scale(&rat(4, 3))),
                (wedge(&[2]), y.scale(&rat_int(2))),
            ],
        );
        match c.ext_witness(&z).unwrap() {
            WitnessOutcome::Witness(u) => {
                assert_eq!(u.component(&WedgeIndex::empty()), x);
                assert_eq!(c.dual_apply(1, &u), z);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn witness_rejects_twist_zero_and_bad_levels() {
        let basis = cusp_basis();
        let c0 = SpencerComplex::build(&basis, 0);
        let z = CochainTuple::zero(1, 2);
        assert!(matches!(c0.ext_witness(&z), Err(SpencerError::TwistZero)));
        let c1 = SpencerComplex::build(&basis, 1);
        let z3 = CochainTuple::zero(3, 2);
        assert!(matches!(
            c1.ext_witness(&z3),
            Err(SpencerError::LevelOutOfRange { level: 3, max: 2 })
        ));
        let z0 = CochainTuple::zero(0, 2);
        assert!(matches!(
            c1.ext_witness(&z0),
            Err(SpencerError::LevelOutOfRange { level: 0, max: 2 })
        ));
    }

    #[test]
    fn non_cocycles_are_detected() {
        let basis = cusp_basis();
        let c = SpencerComplex::build(&basis, 1);
        let x = Polynomial::var(0, 2);
        // A tuple that the level-2 dual map does not kill.
        let z = CochainTuple::new(1, 2, [(wedge(&[1]), x.clone())]);
        match c.ext_witness(&z).unwrap() {
            WitnessOutcome::NotACocycle { residual } => assert!(!residual.is_zero()),
            other => panic!("expected cocycle rejection, got {other:?}"),
        }
    }

    #[test]
    fn random_coboundaries_get_witnesses() {
        let basis = cusp_basis();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 1..=3 {
            let c = SpencerComplex::build(&basis, k);
            for level in 1..=2 {
                for _ in 0..10 {
                    let u = random_cochain(&mut rng, 2, 2, level - 1, 6, 4);
                    let z = c.dual_apply(level, &u);
                    match c.ext_witness(&z).unwrap() {
                        WitnessOutcome::Witness(found) => {
                            assert_eq!(c.dual_apply(level, &found), z);
                        }
                        other => panic!("no witness at level {level}, twist {k}: {other:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn graded_slices_of_the_cusp_are_exact() {
        let basis = cusp_basis();
        let c = SpencerComplex::build(&basis, 1);
        // Frozen dimensions at weight 1, level 1: kernel and image are both
        // two dimensional (sources y^2, x^3 at {1} and x^2 y at {2}).
        assert_eq!(c.graded_slice_oracle(1, &rat_int(1)).unwrap(), (2, 2));
        assert_eq!(c.graded_slice_oracle(0, &rat_int(1)).unwrap(), (0, 0));
        assert_eq!(c.graded_slice_oracle(2, &rat_int(1)).unwrap(), (1, 1));
    }

    #[test]
    fn slice_oracle_needs_positive_weights() {
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(1, 3);
        let z = Polynomial::var(2, 3);
        let f = &(&(&x * &y) * &(&x + &y)) * &(&(&x * &z) + &y);
        let w = WeightVector::new(vec![rat(1, 4), rat(1, 4), rat(0, 1)]).unwrap();
        let basis = adapted_basis(&f, &w).unwrap();
        let c = SpencerComplex::build(&basis, 1);
        assert!(matches!(
            c.graded_slice_oracle(1, &rat_int(1)),
            Err(SpencerError::WeakWeightsForSlices { positive: 2, nvars: 3 })
        ));
    }

    #[test]
    fn monomial_weight_enumeration() {
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap();
        let ms = monomials_of_weight(&w, &rat_int(1));
        assert_eq!(ms, vec![Monomial::new(vec![0, 2]), Monomial::new(vec![3, 0])]);
        assert!(monomials_of_weight(&w, &rat(1, 5)).is_empty());
        assert_eq!(monomials_of_weight(&w, &rat_int(0)), vec![Monomial::new(vec![0, 0])]);
    }
}
