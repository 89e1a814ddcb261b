//! Buchberger's algorithm with the normal selection strategy and
//! Gebauer-Moller pair elimination, plus normal forms.

mod dimension;
mod ops;

pub use dimension::{minimum_vertex_cover, monomial_dimension, monomial_height};
pub use ops::{
    exact_division, frobenius_basis, frobenius_bracket, ideal_intersect, ideal_quotient, ideals_equal,
    initial_ideal, quotient_by_element, saturation,
};

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideals::IdealGens;
use crate::monomial::Monomial;
use crate::order::BlockOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Default cap on monomial operations per Gröbner computation.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of term operations before giving up.
    pub budget: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { budget: DEFAULT_BUDGET }
    }
}

impl GbConfig {
    pub fn with_budget(budget: u64) -> Self {
        GbConfig { budget }
    }
}

pub(crate) struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(cfg: GbConfig) -> Self {
        Budget { used: 0, limit: cfg.budget }
    }

    #[inline]
    fn charge(&mut self, n: usize) -> Result<()> {
        self.used += n as u64;
        if self.used > self.limit {
            Err(AlgebraError::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Terms sorted descending under the working order.
type OTerms<F> = Vec<(Monomial, <F as Field>::Elem)>;

#[inline]
fn support_mask(m: &Monomial) -> u64 {
    m.exponents().iter().take(64).enumerate().fold(0, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
}

/// The working state of one reduction context: an order and a list of monic
/// reducers with cached lead data.
pub(crate) struct Reducer<'a, F: Field> {
    field: &'a F,
    order: &'a BlockOrder,
    polys: Vec<OTerms<F>>,
    leads: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub(crate) fn new(field: &'a F, order: &'a BlockOrder) -> Self {
        Reducer { field, order, polys: Vec::new(), leads: Vec::new(), masks: Vec::new(), active: Vec::new() }
    }

    pub(crate) fn sorted(&self, p: &Polynomial<F>) -> OTerms<F> {
        let mut t = p.terms().to_vec();
        t.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        t
    }

    fn make_monic(&self, mut p: OTerms<F>) -> OTerms<F> {
        if let Some((_, c)) = p.first() {
            if !self.field.is_one(c) {
                let inv = self.field.inv(c).expect("nonzero lead coefficient");
                for (_, a) in p.iter_mut() {
                    *a = self.field.mul(a, &inv);
                }
            }
        }
        p
    }

    fn push(&mut self, p: OTerms<F>) -> usize {
        let lead = p[0].0.clone();
        self.masks.push(support_mask(&lead));
        self.leads.push(lead);
        self.polys.push(p);
        self.active.push(true);
        self.polys.len() - 1
    }

    #[inline]
    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = support_mask(m);
        (0..self.polys.len()).find(|&i| {
            self.active[i] && self.masks[i] & !mask == 0 && self.leads[i].divides(m)
        })
    }

    /// `p[skip..] - c * mult * g[1..]`, where `p[skip - 1]` was the term cancelled.
    fn sub_scaled(
        &self,
        p: &[(Monomial, F::Elem)],
        c: &F::Elem,
        mult: &Monomial,
        g: &[(Monomial, F::Elem)],
        budget: &mut Budget,
    ) -> Result<OTerms<F>> {
        budget.charge(p.len() + g.len())?;
        let field = self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gm: Option<Monomial> = g.first().map(|t| t.0.mul(mult));
        while i < p.len() && j < g.len() {
            let cur = gm.as_ref().unwrap();
            match self.order.compare(&p[i].0, cur) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.take().unwrap(), field.neg(&field.mul(c, &g[j].1))));
                    j += 1;
                    gm = g.get(j).map(|t| t.0.mul(mult));
                }
                Ordering::Equal => {
                    let v = field.sub(&p[i].1, &field.mul(c, &g[j].1));
                    if !field.is_zero(&v) {
                        out.push((p[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    gm = g.get(j).map(|t| t.0.mul(mult));
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        while j < g.len() {
            out.push((g[j].0.mul(mult), field.neg(&field.mul(c, &g[j].1))));
            j += 1;
        }
        Ok(out)
    }

    /// Full reduction: no term of the result is divisible by an active lead.
    fn reduce(&self, p: OTerms<F>, budget: &mut Budget) -> Result<OTerms<F>> {
        self.reduce_inner(p, budget, false)
    }

    fn top_reduce(&self, p: OTerms<F>, budget: &mut Budget) -> Result<OTerms<F>> {
        self.reduce_inner(p, budget, true)
    }

    fn reduce_inner(&self, mut p: OTerms<F>, budget: &mut Budget, top_only: bool) -> Result<OTerms<F>> {
        let mut rem: OTerms<F> = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (lm, lc) = &p[start];
            match self.find_divisor(lm) {
                Some(k) => {
                    let mult = self.leads[k].quotient_of(lm);
                    let c = lc.clone();
                    p = self.sub_scaled(&p[start + 1..], &c, &mult, &self.polys[k][1..], budget)?;
                    start = 0;
                }
                None => {
                    if top_only {
                        rem.extend(p.drain(start..));
                        return Ok(rem);
                    }
                    budget.charge(1)?;
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }

    fn s_poly(&self, i: usize, j: usize, budget: &mut Budget) -> Result<OTerms<F>> {
        let lcm = self.leads[i].lcm(&self.leads[j]);
        let mi = self.leads[i].quotient_of(&lcm);
        let mj = self.leads[j].quotient_of(&lcm);
        let left: OTerms<F> = self.polys[i][1..].iter().map(|(m, c)| (m.mul(&mi), c.clone())).collect();
        let one = self.field.one();
        self.sub_scaled(&left, &one, &mj, &self.polys[j][1..], budget)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    order: BlockOrder,
    basis: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
    reduced: bool,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> &BlockOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn lead_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    pub fn to_ideal(&self, label: impl Into<String>) -> IdealGens<F> {
        IdealGens::new(label, &self.ring, self.basis.clone())
    }

    fn reducer(&self) -> Reducer<'_, F> {
        let mut r = Reducer::new(self.ring.field(), &self.order);
        for g in &self.basis {
            let t = r.sorted(g);
            r.push(t);
        }
        r
    }

    pub fn normal_form_with(&self, f: &Polynomial<F>, cfg: GbConfig) -> Result<Polynomial<F>> {
        if !crate::poly::same_ring(f.ring(), &self.ring) {
            return Err(AlgebraError::ContextMismatch);
        }
        let r = self.reducer();
        let mut budget = Budget::new(cfg);
        let rem = r.reduce(r.sorted(f), &mut budget)?;
        Ok(Polynomial::from_terms(&self.ring, rem))
    }

    /// Remainder of `f` with no term divisible by a basis lead term.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.normal_form_with(f, GbConfig::default())
    }

    pub fn is_member(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_member_with(&self, f: &Polynomial<F>, cfg: GbConfig) -> Result<bool> {
        Ok(self.normal_form_with(f, cfg)?.is_zero())
    }

    /// Recomputes every S-polynomial and checks it reduces to zero.
    pub fn verify_s_pairs(&self) -> Result<bool> {
        let r = self.reducer();
        let mut budget = Budget::new(GbConfig::default());
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = r.s_poly(i, j, &mut budget)?;
                if !r.reduce(s, &mut budget)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks the reducedness invariants: monic, no lead divides another
    /// element's term.
    pub fn check_reduced(&self) -> bool {
        let field = self.ring.field();
        for (i, g) in self.basis.iter().enumerate() {
            let Ok((_, c)) = g.lead_term(&self.order) else { return false };
            if !field.is_one(c) {
                return false;
            }
            for (j, lead) in self.leads.iter().enumerate() {
                if i != j && g.terms().iter().any(|(m, _)| lead.divides(m)) {
                    return false;
                }
            }
        }
        true
    }

    /// Builds a basis object from polynomials already known to form a
    /// reduced Gröbner basis.
    pub(crate) fn from_reduced(ring: &Arc<Ring<F>>, order: &BlockOrder, mut basis: Vec<Polynomial<F>>) -> Self {
        basis.sort_by(|a, b| {
            order.compare(&a.lead_monomial(order).unwrap(), &b.lead_monomial(order).unwrap())
        });
        let leads = basis.iter().map(|g| g.lead_monomial(order).unwrap()).collect();
        GroebnerBasis { ring: ring.clone(), order: order.clone(), basis, leads, reduced: true }
    }
}

/// Reduced Gröbner basis of the ideal generated by `ideal` under `order`.
pub fn buchberger<F: Field>(ideal: &IdealGens<F>, order: &BlockOrder) -> Result<GroebnerBasis<F>> {
    buchberger_with(ideal, order, GbConfig::default())
}

pub fn buchberger_with<F: Field>(ideal: &IdealGens<F>, order: &BlockOrder, cfg: GbConfig) -> Result<GroebnerBasis<F>> {
    let ring = &ideal.ring;
    order.check_arity(ring.num_vars())?;
    if ideal.gens.iter().any(|g| !crate::poly::same_ring(g.ring(), ring)) {
        return Err(AlgebraError::ContextMismatch);
    }
    let field = ring.field();
    let mut budget = Budget::new(cfg);
    let mut red = Reducer::new(field, order);
    let mut pairs: Vec<Pair> = Vec::new();

    // inputs go in ascending lead order, which keeps early reductions small
    let mut inputs: Vec<OTerms<F>> = ideal.gens.iter().filter(|g| !g.is_zero()).map(|g| red.sorted(g)).collect();
    inputs.sort_by(|a, b| order.compare(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    for p in inputs {
        let h = red.top_reduce(p, &mut budget)?;
        if !h.is_empty() {
            let h = red.make_monic(h);
            update(&mut red, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = red.s_poly(pair.i, pair.j, &mut budget)?;
        let h = red.top_reduce(s, &mut budget)?;
        if !h.is_empty() {
            let h = red.make_monic(h);
            update(&mut red, &mut pairs, h);
        }
    }

    // minimal basis, then tail reduction against the other elements
    let keep: Vec<usize> = (0..red.polys.len()).filter(|&i| red.active[i]).collect();
    let mut final_red = Reducer::new(field, order);
    for &i in &keep {
        final_red.push(red.polys[i].clone());
    }
    let mut basis = Vec::with_capacity(keep.len());
    for k in 0..final_red.polys.len() {
        final_red.active[k] = false;
        let p = final_red.polys[k].clone();
        let head = p[0].clone();
        let tail = final_red.reduce(p[1..].to_vec(), &mut budget)?;
        final_red.active[k] = true;
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(head);
        terms.extend(tail);
        final_red.polys[k] = terms.clone();
        basis.push(Polynomial::from_terms(ring, terms));
    }
    Ok(GroebnerBasis::from_reduced(ring, order, basis))
}

/// Adds `h` to the basis and updates the pair list (Gebauer-Moller).
fn update<F: Field>(red: &mut Reducer<'_, F>, pairs: &mut Vec<Pair>, h: OTerms<F>) {
    let hl = h[0].0.clone();
    let k = red.polys.len();

    let cands: Vec<(usize, Monomial, bool)> = (0..k)
        .filter(|&i| red.active[i])
        .map(|i| (i, red.leads[i].lcm(&hl), red.leads[i].is_coprime(&hl)))
        .collect();

    // drop (i,h) when some other (l,h) has an lcm strictly dividing it,
    // or an equal lcm with a smaller index (chain criterion)
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (a, (i, lcm_i, coprime_i)) in cands.iter().enumerate() {
        let dominated = cands.iter().enumerate().any(|(b, (_, lcm_l, _))| {
            b != a && lcm_l.divides(lcm_i) && (lcm_l != lcm_i || b < a)
        });
        // among equal lcms only one survives; if any of them is coprime the
        // whole class is dropped
        let equal_class_coprime = cands.iter().any(|(_, lcm_l, cp)| *cp && lcm_l == lcm_i);
        if !dominated && !equal_class_coprime && !*coprime_i {
            kept.push((*i, lcm_i.clone(), *coprime_i));
        }
    }

    // old pairs whose lcm is divisible by lead(h) with both new lcms different
    pairs.retain(|p| {
        !(hl.divides(&p.lcm) && red.leads[p.i].lcm(&hl) != p.lcm && red.leads[p.j].lcm(&hl) != p.lcm)
    });

    for (i, lcm, _) in kept {
        pairs.push(Pair { i, j: k, lcm });
    }

    for i in 0..k {
        if red.active[i] && hl.divides(&red.leads[i]) {
            red.active[i] = false;
        }
    }
    red.push(h);
}
