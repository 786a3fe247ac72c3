//! Gröbner bases for submodules of free modules over the polynomial ring.
//!
//! The engine is a plain Buchberger loop over module elements with a
//! term-over-position order. Every basis element carries a tag expressing
//! it as a combination of the original generators; the tag of an S-pair
//! that reduces to zero is then a syzygy of the inputs, and running all
//! pairs to completion makes the collected tags a generating set of the
//! full syzygy module. For that reason the loop deliberately skips no
//! pairs: the usual coprimality shortcuts discard exactly the syzygies we
//! are after.
//!
//! Division (`normal_form`) returns both remainder and quotients, and
//! `lift` combines quotients with tags to express a module element in
//! terms of arbitrary (non-Gröbner) generators.

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::weights::WeightVector;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Admissible monomial orders on the polynomial ring.
#[derive(Clone, Debug)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; the default everywhere.
    DegRevLex,
    /// Pure lexicographic with earlier variables larger.
    Lex,
    /// Compare weighted degrees first, break ties by degrevlex.
    Weighted(WeightVector),
}

impl MonomialOrder {
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Weighted(w) => w
                .monomial_weight(a)
                .cmp(&w.monomial_weight(b))
                .then_with(|| cmp_degrevlex(a, b)),
        }
    }

    /// Term-over-position order on module terms `(position, monomial)`:
    /// monomials compare by the ring order, ties go to the smaller position.
    pub fn cmp_module_terms(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        self.cmp_monomials(a.1, b.1).then_with(|| b.0.cmp(&a.0))
    }
}

fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        for i in (0..a.nvars()).rev() {
            match a.exp(i).cmp(&b.exp(i)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    })
}

/// Element of a free module `R^rank`, stored as one polynomial per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "module elements need positive rank");
        let nvars = components[0].nvars();
        assert!(
            components.iter().all(|p| p.nvars() == nvars),
            "components live in different rings"
        );
        ModuleElement { components }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        ModuleElement::new(vec![Polynomial::zero(nvars); rank])
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        ModuleElement { components: vec![p] }
    }

    /// The `index`-th standard basis vector scaled by `p`.
    pub fn basis_vector(p: Polynomial, index: usize, rank: usize) -> Self {
        let mut out = ModuleElement::zero(rank, p.nvars());
        out.components[index] = p;
        out
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, rhs: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        ModuleElement::new(
            self.components.iter().zip(&rhs.components).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, rhs: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        ModuleElement::new(
            self.components.iter().zip(&rhs.components).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement::new(self.components.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplies every component by the term `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> ModuleElement {
        ModuleElement::new(self.components.iter().map(|p| p.mul_term(m, c)).collect())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> ModuleElement {
        ModuleElement::new(self.components.iter().map(|q| q * p).collect())
    }

    /// Leading term with respect to `order`: position, monomial, coefficient.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(usize, Monomial, Rational)> {
        let mut best: Option<(usize, &Monomial, &Rational)> = None;
        for (pos, p) in self.components.iter().enumerate() {
            for (m, c) in p.terms() {
                let better = match &best {
                    None => true,
                    Some((bp, bm, _)) => {
                        order.cmp_module_terms((pos, m), (*bp, bm)) == Ordering::Greater
                    }
                };
                if better {
                    best = Some((pos, m, c));
                }
            }
        }
        best.map(|(p, m, c)| (p, m.clone(), c.clone()))
    }

    /// Rescales to integer entries with overall content one; the leading
    /// coefficient of the first nonzero component is made positive.
    pub fn primitive(&self) -> ModuleElement {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let lead = match self.components.iter().find(|p| !p.is_zero()) {
            Some(p) => p.leading_term_lex().expect("nonzero").1.clone(),
            None => return self.clone(),
        };
        let mut den = BigInt::one();
        for p in &self.components {
            for (_, c) in p.terms() {
                den = den.lcm(c.denom());
            }
        }
        let mut num = BigInt::zero();
        for p in &self.components {
            for (_, c) in p.terms() {
                num = num.gcd(&(c.numer() * &den / c.denom()));
            }
        }
        let mut factor = Rational::new(den, num);
        if num_traits::Signed::is_negative(&(&lead * &factor)) {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// A Gröbner basis of a submodule together with the order that defines it.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<ModuleElement>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.generators
    }
}

/// Basis element plus a tag expressing it over the original inputs.
#[derive(Clone)]
struct Tagged {
    elem: ModuleElement,
    tag: Vec<Polynomial>,
}

struct Engine {
    order: MonomialOrder,
    nvars: usize,
    basis: Vec<Tagged>,
    syzygies: Vec<ModuleElement>,
}

impl Engine {
    fn new(inputs: &[ModuleElement], order: MonomialOrder) -> Engine {
        assert!(!inputs.is_empty(), "need at least one generator");
        let rank = inputs[0].rank();
        let nvars = inputs[0].nvars();
        assert!(
            inputs.iter().all(|g| g.rank() == rank && g.nvars() == nvars),
            "generators have mismatched rank or variable count"
        );
        let mut engine = Engine {
            order,
            nvars,
            basis: Vec::new(),
            syzygies: Vec::new(),
        };
        for (i, g) in inputs.iter().enumerate() {
            if g.is_zero() {
                // A zero input is its own syzygy: e_i itself maps to zero.
                engine
                    .syzygies
                    .push(ModuleElement::basis_vector(Polynomial::one(nvars), i, inputs.len()));
            } else {
                let mut tag = vec![Polynomial::zero(nvars); inputs.len()];
                tag[i] = Polynomial::one(nvars);
                engine.push_monic(g.clone(), tag);
            }
        }
        engine
    }

    /// Divides `elem` (and in parallel its tag) by the current basis.
    /// Returns the full normal form: no remainder term is divisible by any
    /// basis leading term.
    fn reduce(&self, mut elem: ModuleElement, mut tag: Vec<Polynomial>) -> Tagged {
        let rank = elem.rank();
        let mut remainder = ModuleElement::zero(rank, self.nvars);
        'outer: while let Some((pos, mono, coeff)) = elem.leading_term(&self.order) {
            for g in &self.basis {
                let (gp, gm, _) = g
                    .elem
                    .leading_term(&self.order)
                    .expect("basis elements are nonzero");
                if gp == pos {
                    if let Some(q) = mono.checked_div(&gm) {
                        // Basis elements are monic, so the cofactor is just
                        // coeff * x^q.
                        elem = elem.sub(&g.elem.mul_term(&q, &coeff));
                        for (t, gt) in tag.iter_mut().zip(&g.tag) {
                            *t -= &gt.mul_term(&q, &coeff);
                        }
                        continue 'outer;
                    }
                }
            }
            // Irreducible leading term: move it over to the remainder.
            let single = ModuleElement::basis_vector(
                Polynomial::from_terms(self.nvars, [(mono.clone(), coeff.clone())]),
                pos,
                rank,
            );
            remainder = remainder.add(&single);
            elem = elem.sub(&single);
        }
        Tagged { elem: remainder, tag }
    }

    fn push_monic(&mut self, elem: ModuleElement, tag: Vec<Polynomial>) {
        let (_, _, c) = elem.leading_term(&self.order).expect("nonzero element");
        let inv = Rational::one() / c;
        let elem = elem.scale(&inv);
        let tag = tag.iter().map(|t| t.scale(&inv)).collect();
        self.basis.push(Tagged { elem, tag });
    }

    /// Queues the pairs of element `j` against all earlier basis elements
    /// with the same leading position.
    fn seed_pairs(&self, pairs: &mut BTreeSet<(u64, usize, usize)>, j: usize) {
        let (pj, mj, _) = self.basis[j].elem.leading_term(&self.order).expect("nonzero");
        for (i, g) in self.basis.iter().enumerate().take(j) {
            let (pi, mi, _) = g.elem.leading_term(&self.order).expect("nonzero");
            if pi == pj {
                pairs.insert((mi.lcm(&mj).total_degree(), i, j));
            }
        }
    }

    fn run(&mut self) {
        // Pair queue keyed by (total degree of the lcm, i, j): the classical
        // normal selection strategy, processed to exhaustion. No pair is
        // skipped, so the zero-reduction tags generate all syzygies.
        let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
        for j in 0..self.basis.len() {
            self.seed_pairs(&mut pairs, j);
        }
        while let Some((_, i, j)) = pairs.pop_first() {
            let (pi, mi, _) = self.basis[i].elem.leading_term(&self.order).expect("nonzero");
            let (pj, mj, _) = self.basis[j].elem.leading_term(&self.order).expect("nonzero");
            debug_assert_eq!(pi, pj);
            let lcm = mi.lcm(&mj);
            let qi = lcm.checked_div(&mi).expect("lcm is divisible");
            let qj = lcm.checked_div(&mj).expect("lcm is divisible");
            let one = Rational::one();
            let s_elem = self.basis[i]
                .elem
                .mul_term(&qi, &one)
                .sub(&self.basis[j].elem.mul_term(&qj, &one));
            let s_tag: Vec<Polynomial> = self.basis[i]
                .tag
                .iter()
                .zip(&self.basis[j].tag)
                .map(|(a, b)| &a.mul_term(&qi, &one) - &b.mul_term(&qj, &one))
                .collect();
            let reduced = self.reduce(s_elem, s_tag);
            if reduced.elem.is_zero() {
                let tag = ModuleElement::new(reduced.tag);
                if !tag.is_zero() {
                    self.syzygies.push(tag);
                }
            } else {
                self.push_monic(reduced.elem, reduced.tag);
                self.seed_pairs(&mut pairs, self.basis.len() - 1);
            }
        }
    }
}

/// Computes a Gröbner basis of the submodule generated by `gens`.
///
/// Panics on an empty generator list or mismatched ranks; generators that
/// are zero are simply dropped.
pub fn buchberger(gens: &[ModuleElement], order: MonomialOrder) -> GroebnerBasis {
    let mut engine = Engine::new(gens, order.clone());
    engine.run();
    GroebnerBasis {
        order,
        generators: engine.basis.into_iter().map(|t| t.elem).collect(),
    }
}

/// Divides `elem` by the basis: returns the remainder and the quotient
/// vector, with `elem = sum_i q_i * g_i + remainder` holding exactly and no
/// remainder term divisible by any basis leading term.
pub fn normal_form(elem: &ModuleElement, gb: &GroebnerBasis) -> (ModuleElement, Vec<Polynomial>) {
    let nvars = elem.nvars();
    let rank = elem.rank();
    assert!(
        gb.generators.iter().all(|g| g.rank() == rank && g.nvars() == nvars),
        "element and basis have mismatched rank or variable count"
    );
    let mut quotients = vec![Polynomial::zero(nvars); gb.generators.len()];
    let mut rest = elem.clone();
    let mut remainder = ModuleElement::zero(rank, nvars);
    'outer: while let Some((pos, mono, coeff)) = rest.leading_term(&gb.order) {
        for (k, g) in gb.generators.iter().enumerate() {
            let (gp, gm, gc) = g.leading_term(&gb.order).expect("basis elements are nonzero");
            if gp == pos {
                if let Some(q) = mono.checked_div(&gm) {
                    let factor = &coeff / &gc;
                    rest = rest.sub(&g.mul_term(&q, &factor));
                    quotients[k].add_term(q, factor);
                    continue 'outer;
                }
            }
        }
        let single = ModuleElement::basis_vector(
            Polynomial::from_terms(nvars, [(mono.clone(), coeff.clone())]),
            pos,
            rank,
        );
        remainder = remainder.add(&single);
        rest = rest.sub(&single);
    }
    (remainder, quotients)
}

/// Generating set of the syzygy module of a list of module elements: every
/// returned `s` satisfies `sum_i s_i * gens_i = 0`, and the returned set
/// generates all such relations.
pub fn module_syzygies(gens: &[ModuleElement]) -> Vec<ModuleElement> {
    assert!(
        gens.iter().any(|g| !g.is_zero()),
        "syzygies of an all-zero family are the whole free module"
    );
    let mut engine = Engine::new(gens, MonomialOrder::DegRevLex);
    engine.run();
    let mut out: Vec<ModuleElement> = Vec::new();
    for s in engine.syzygies {
        let s = s.primitive();
        debug_assert!(expand(&s, gens).is_zero());
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Syzygies of a list of polynomials, as rank-`gens.len()` module elements.
pub fn syzygy_basis(gens: &[Polynomial]) -> Vec<ModuleElement> {
    let wrapped: Vec<ModuleElement> =
        gens.iter().map(|p| ModuleElement::from_polynomial(p.clone())).collect();
    module_syzygies(&wrapped)
}

/// Expresses `target` over arbitrary generators: returns `c` with
/// `target = sum_j c_j * gens_j`, or `None` if `target` is not in the
/// submodule they generate.
pub fn lift(target: &ModuleElement, gens: &[ModuleElement]) -> Option<Vec<Polynomial>> {
    let nvars = target.nvars();
    if target.is_zero() {
        return Some(vec![Polynomial::zero(nvars); gens.len()]);
    }
    let mut engine = Engine::new(gens, MonomialOrder::DegRevLex);
    engine.run();
    let gb = GroebnerBasis {
        order: MonomialOrder::DegRevLex,
        generators: engine.basis.iter().map(|t| t.elem.clone()).collect(),
    };
    let (remainder, quotients) = normal_form(target, &gb);
    if !remainder.is_zero() {
        return None;
    }
    // target = sum_k q_k * basis_k and basis_k = sum_j tag_kj * gens_j.
    let mut coeffs = vec![Polynomial::zero(nvars); gens.len()];
    for (q, t) in quotients.iter().zip(&engine.basis) {
        if q.is_zero() {
            continue;
        }
        for (c, tg) in coeffs.iter_mut().zip(&t.tag) {
            *c += &(q * tg);
        }
    }
    debug_assert_eq!(expand_coeffs(&coeffs, gens), *target);
    Some(coeffs)
}

/// `sum_i s_i * gens_i` for a syzygy candidate `s`.
pub fn expand(s: &ModuleElement, gens: &[ModuleElement]) -> ModuleElement {
    assert_eq!(s.rank(), gens.len(), "syzygy rank must match generator count");
    expand_coeffs(s.components(), gens)
}

fn expand_coeffs(coeffs: &[Polynomial], gens: &[ModuleElement]) -> ModuleElement {
    assert_eq!(coeffs.len(), gens.len());
    let mut acc = ModuleElement::zero(gens[0].rank(), gens[0].nvars());
    for (c, g) in coeffs.iter().zip(gens) {
        acc = acc.add(&g.mul_poly(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn vars2() -> (Polynomial, Polynomial) {
        (Polynomial::var(0, 2), Polynomial::var(1, 2))
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_prefers_degree_then_reverse_tail() {
        let ord = MonomialOrder::DegRevLex;
        // x^2 vs x*y: same degree, last differing exponent decides reversed.
        assert_eq!(ord.cmp_monomials(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp_monomials(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // In three variables x*z vs y^2.
        let ord3 = MonomialOrder::DegRevLex;
        assert_eq!(ord3.cmp_monomials(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_and_weighted_orders() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp_monomials(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
        let w = WeightVector::new(vec![rat(1, 3), rat(1, 2)]).unwrap();
        let ord = MonomialOrder::Weighted(w);
        // weight(x) = 1/3 < weight(y) = 1/2.
        assert_eq!(ord.cmp_monomials(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        // Equal weight: x^3 vs y^2 falls back to degrevlex, degree decides.
        assert_eq!(ord.cmp_monomials(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn module_leading_term_uses_position_tie_break() {
        let (x, _) = vars2();
        let e = ModuleElement::new(vec![x.clone(), x.clone()]);
        let (pos, mono, coeff) = e.leading_term(&MonomialOrder::DegRevLex).unwrap();
        assert_eq!(pos, 0);
        assert_eq!(mono, m(&[1, 0]));
        assert_eq!(coeff, rat_int(1));
    }

    #[test]
    fn buchberger_closes_the_classic_pair() {
        let (x, y) = vars2();
        let g1 = ModuleElement::from_polynomial(&x.pow(2) - &Polynomial::one(2));
        let g2 = ModuleElement::from_polynomial(&(&x * &y) - &Polynomial::one(2));
        let gb = buchberger(&[g1, g2], MonomialOrder::DegRevLex);
        let want_a = ModuleElement::from_polynomial(&x - &y);
        let want_b = ModuleElement::from_polynomial(&y.pow(2) - &Polynomial::one(2));
        assert!(gb.generators().contains(&want_a), "missing x - y");
        assert!(gb.generators().contains(&want_b), "missing y^2 - 1");
        // Both certainly reduce to zero.
        assert!(normal_form(&want_a, &gb).0.is_zero());
        assert!(normal_form(&want_b, &gb).0.is_zero());
    }

    #[test]
    fn normal_form_returns_remainder_and_quotients() {
        let (x, y) = vars2();
        let g = ModuleElement::from_polynomial(&x.pow(2) - &Polynomial::one(2));
        let gb = buchberger(std::slice::from_ref(&g), MonomialOrder::DegRevLex);
        let target = ModuleElement::from_polynomial(&(&x.pow(2) * &y) + &y);
        let (rem, quot) = normal_form(&target, &gb);
        assert_eq!(rem, ModuleElement::from_polynomial(y.scale(&rat_int(2))));
        assert_eq!(quot.len(), 1);
        assert_eq!(quot[0], y);
        // Exactness of the division identity.
        let back = expand_coeffs(&quot, gb.generators()).add(&rem);
        assert_eq!(back, target);
    }

    #[test]
    fn syzygies_of_partials_of_the_cusp() {
        // 3x^2 and -2y: the syzygy module is generated by (2y, 3x^2) up to
        // scale, here normalized to primitive integer form.
        let (x, y) = vars2();
        let g1 = x.pow(2).scale(&rat_int(3));
        let g2 = y.scale(&rat_int(-2));
        let syz = syzygy_basis(&[g1.clone(), g2.clone()]);
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!(expand(s, &[
            ModuleElement::from_polynomial(g1),
            ModuleElement::from_polynomial(g2)
        ])
        .is_zero());
        assert_eq!(
            *s,
            ModuleElement::new(vec![y.scale(&rat_int(2)), x.pow(2).scale(&rat_int(3))])
        );
    }

    #[test]
    fn zero_generators_become_unit_syzygies() {
        let (x, _) = vars2();
        let syz = syzygy_basis(&[Polynomial::zero(2), x.clone()]);
        assert_eq!(syz, vec![ModuleElement::basis_vector(Polynomial::one(2), 0, 2)]);
    }

    #[test]
    #[should_panic(expected = "all-zero")]
    fn all_zero_family_is_rejected() {
        let _ = syzygy_basis(&[Polynomial::zero(2), Polynomial::zero(2)]);
    }

    #[test]
    fn single_generator_has_no_syzygies() {
        let (x, y) = vars2();
        assert!(syzygy_basis(&[&x * &y]).is_empty());
        // A pair with no relation beyond the Koszul one.
        let syz = syzygy_basis(&[x.clone(), y.clone()]);
        assert_eq!(syz, vec![ModuleElement::new(vec![y.clone(), -&x])]);
    }

    #[test]
    fn lift_expresses_members_and_rejects_outsiders() {
        let (x, y) = vars2();
        let gens = [
            ModuleElement::from_polynomial(x.pow(2).clone()),
            ModuleElement::from_polynomial(y.clone()),
        ];
        let target = ModuleElement::from_polynomial(&(&x.pow(2) * &y) + &y.scale(&rat_int(5)));
        let c = lift(&target, &gens).expect("member");
        assert_eq!(expand_coeffs(&c, &gens), target);
        assert_eq!(lift(&ModuleElement::from_polynomial(x.clone()), &gens), None);
        // Rank-2 example from the module world: (1, 0) is not a multiple
        // of (y, -x), because position 0 carries leading monomial y.
        let gen = ModuleElement::new(vec![y.clone(), -&x]);
        let t = ModuleElement::new(vec![Polynomial::one(2), Polynomial::zero(2)]);
        assert_eq!(lift(&t, &[gen]), None);
    }

    #[test]
    fn module_syzygies_capture_relations_between_relations() {
        // Koszul setup in 3 variables: gens x, y, z have pairwise syzygies
        // which in turn satisfy one relation.
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(1, 3);
        let z = Polynomial::var(2, 3);
        let first = syzygy_basis(&[x.clone(), y.clone(), z.clone()]);
        assert_eq!(first.len(), 3);
        for s in &first {
            let back = expand(
                s,
                &[
                    ModuleElement::from_polynomial(x.clone()),
                    ModuleElement::from_polynomial(y.clone()),
                    ModuleElement::from_polynomial(z.clone()),
                ],
            );
            assert!(back.is_zero());
        }
        let second = module_syzygies(&first);
        assert!(!second.is_empty());
        for s in &second {
            assert!(expand(s, &first).is_zero());
        }
    }
}
