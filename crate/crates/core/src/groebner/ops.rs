//! Ideal operations built on top of Buchberger: intersection, quotient,
//! saturation, bracket powers and initial ideals.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideals::IdealGens;
use crate::monomial::Monomial;
use crate::order::BlockOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::{buchberger_with, GbConfig, GroebnerBasis};

fn check_same<F: Field>(a: &IdealGens<F>, b: &IdealGens<F>) -> Result<()> {
    if crate::poly::same_ring(&a.ring, &b.ring) {
        Ok(())
    } else {
        Err(AlgebraError::ContextMismatch)
    }
}

/// Runs an elimination of one auxiliary variable and keeps the part of the
/// basis free of it.
fn eliminate_aux<F: Field>(
    ring: &Arc<Ring<F>>,
    ext: &Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    order: &BlockOrder,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    let elim = order.elimination(1);
    let gb = buchberger_with(&IdealGens::new("aux", ext, gens), &elim, cfg)?;
    let kept = gb.basis().iter().filter_map(|g| g.restrict(ring)).collect();
    Ok(GroebnerBasis::from_reduced(ring, order, kept))
}

/// Reduced basis of `I ∩ J` via `u I + (1 - u) J`.
pub fn ideal_intersect<F: Field>(
    i: &IdealGens<F>,
    j: &IdealGens<F>,
    order: &BlockOrder,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    check_same(i, j)?;
    order.check_arity(i.ring.num_vars())?;
    let ring = &i.ring;
    let ext = ring.with_aux(1);
    let u = Polynomial::var(&ext, ring.num_vars());
    let one_minus_u = &Polynomial::one(&ext) - &u;
    let mut gens = Vec::with_capacity(i.len() + j.len());
    gens.extend(i.gens.iter().map(|f| &u * &f.embed(&ext)));
    gens.extend(j.gens.iter().map(|g| &one_minus_u * &g.embed(&ext)));
    eliminate_aux(ring, &ext, gens, order, cfg)
}

/// `f / g`, failing with `InexactDivision` when `g` does not divide `f`.
pub fn exact_division<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: &BlockOrder) -> Result<Polynomial<F>> {
    if !crate::poly::same_ring(f.ring(), g.ring()) {
        return Err(AlgebraError::ContextMismatch);
    }
    if g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let field = f.field();
    let ring = f.ring();
    let (glead, gc) = g.lead_term(order)?;
    let ginv = field.inv(gc).ok_or(AlgebraError::ZeroPolynomial)?;
    let mut rem = f.clone();
    let mut quot = Vec::new();
    while !rem.is_zero() {
        let (lm, lc) = rem.lead_term(order)?;
        if !glead.divides(lm) {
            return Err(AlgebraError::InexactDivision);
        }
        let m = glead.quotient_of(lm);
        let c = field.mul(lc, &ginv);
        rem = &rem - &g.mul_monomial(&m).scale(&c);
        quot.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, quot))
}

/// Reduced basis of `I : (g)`.
pub fn quotient_by_element<F: Field>(
    i: &IdealGens<F>,
    g: &Polynomial<F>,
    order: &BlockOrder,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    if g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let principal = IdealGens::new("g", &i.ring, vec![g.clone()]);
    let inter = ideal_intersect(i, &principal, order, cfg)?;
    let quot = inter.basis().iter().map(|h| exact_division(h, g, order)).collect::<Result<Vec<_>>>()?;
    buchberger_with(&IdealGens::new(format!("{} : g", i.label), &i.ring, quot), order, cfg)
}

/// Reduced basis of `I : J`, the intersection of `I : (g)` over the
/// generators of `J`.
pub fn ideal_quotient<F: Field>(
    i: &IdealGens<F>,
    j: &IdealGens<F>,
    order: &BlockOrder,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    check_same(i, j)?;
    let mut acc: Option<GroebnerBasis<F>> = None;
    for g in j.gens.iter().filter(|g| !g.is_zero()) {
        let q = quotient_by_element(i, g, order, cfg)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => ideal_intersect(&prev.to_ideal("acc"), &q.to_ideal("q"), order, cfg)?,
        });
    }
    match acc {
        Some(gb) => Ok(gb),
        // I : 0 is the whole ring
        None => Ok(GroebnerBasis::from_reduced(&i.ring, order, vec![Polynomial::one(&i.ring)])),
    }
}

/// Reduced basis of `I : f^∞` via `I + (u f - 1)`.
pub fn saturation<F: Field>(
    i: &IdealGens<F>,
    f: &Polynomial<F>,
    order: &BlockOrder,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    if !crate::poly::same_ring(&i.ring, f.ring()) {
        return Err(AlgebraError::ContextMismatch);
    }
    order.check_arity(i.ring.num_vars())?;
    let ring = &i.ring;
    let ext = ring.with_aux(1);
    let u = Polynomial::var(&ext, ring.num_vars());
    let mut gens: Vec<Polynomial<F>> = i.gens.iter().map(|g| g.embed(&ext)).collect();
    gens.push(&(&u * &f.embed(&ext)) - &Polynomial::one(&ext));
    eliminate_aux(ring, &ext, gens, order, cfg)
}

fn check_characteristic<F: Field>(ring: &Ring<F>, p: u32) -> Result<()> {
    let ch = ring.field().characteristic();
    if ch == p && p > 0 {
        Ok(())
    } else {
        Err(AlgebraError::Field(format!("bracket power {p} needs characteristic {p}, field has characteristic {ch}")))
    }
}

/// `I^[p]`, generated by the `p`-th powers of the generators of `I`.
pub fn frobenius_bracket<F: Field>(i: &IdealGens<F>, p: u32) -> Result<IdealGens<F>> {
    check_characteristic(&i.ring, p)?;
    let gens = i.gens.iter().map(|g| g.pow(p)).collect();
    Ok(IdealGens::new(format!("{}^[{p}]", i.label), &i.ring, gens))
}

/// The reduced basis of `I^[p]` obtained by raising a reduced basis of `I`
/// to the `p`-th power. Valid because Frobenius is flat in characteristic `p`.
pub fn frobenius_basis<F: Field>(gb: &GroebnerBasis<F>, p: u32) -> Result<GroebnerBasis<F>> {
    check_characteristic(gb.ring(), p)?;
    let basis = gb.basis().iter().map(|g| g.pow(p)).collect();
    Ok(GroebnerBasis::from_reduced(gb.ring(), gb.order(), basis))
}

/// The initial ideal, generated by the lead monomials of a reduced basis.
pub fn initial_ideal<F: Field>(gb: &GroebnerBasis<F>) -> IdealGens<F> {
    let ring = gb.ring();
    let one = ring.field().one();
    let gens = gb.lead_monomials().iter().map(|m: &Monomial| Polynomial::monomial(ring, m.clone(), one.clone())).collect();
    IdealGens::new("in", ring, gens)
}

/// Equality of ideals, decided by comparing reduced bases.
pub fn ideals_equal<F: Field>(i: &IdealGens<F>, j: &IdealGens<F>, order: &BlockOrder, cfg: GbConfig) -> Result<bool> {
    check_same(i, j)?;
    let a = buchberger_with(i, order, cfg)?;
    let b = buchberger_with(j, order, cfg)?;
    Ok(a.basis() == b.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::buchberger;

    fn r() -> Arc<Ring<Rationals>> {
        Ring::symplectic(Rationals, 1, 2).unwrap()
    }

    fn ideal(ring: &Arc<Ring<Rationals>>, gens: &[&str]) -> IdealGens<Rationals> {
        IdealGens::new("I", ring, gens.iter().map(|s| Polynomial::parse(ring, s).unwrap()).collect())
    }

    #[test]
    fn intersection_of_principal_monomial_ideals_is_lcm() {
        let ring = r();
        let o = BlockOrder::plain(ring.num_vars());
        let a = ideal(&ring, &["y[1,1]^2*y[1,2]"]);
        let b = ideal(&ring, &["y[1,1]*y[2,1]"]);
        let gb = ideal_intersect(&a, &b, &o, GbConfig::default()).unwrap();
        assert_eq!(gb.basis(), &[Polynomial::parse(&ring, "y[1,1]^2*y[1,2]*y[2,1]").unwrap()]);
    }

    #[test]
    fn quotient_of_monomial_ideal() {
        let ring = r();
        let o = BlockOrder::plain(ring.num_vars());
        let a = ideal(&ring, &["y[1,1]^2", "y[1,1]*y[1,2]"]);
        let b = ideal(&ring, &["y[1,1]"]);
        let gb = ideal_quotient(&a, &b, &o, GbConfig::default()).unwrap();
        let expect = buchberger(&ideal(&ring, &["y[1,1]", "y[1,2]"]), &o).unwrap();
        assert_eq!(gb.basis(), expect.basis());
    }

    #[test]
    fn saturation_removes_embedded_component() {
        let ring = r();
        let o = BlockOrder::plain(ring.num_vars());
        let a = ideal(&ring, &["y[1,1]^2", "y[1,1]*y[1,2]"]);
        let gb = saturation(&a, &Polynomial::parse(&ring, "y[1,2]").unwrap(), &o, GbConfig::default()).unwrap();
        assert_eq!(gb.basis(), &[Polynomial::parse(&ring, "y[1,1]").unwrap()]);
    }

    #[test]
    fn exact_division_roundtrip_and_failure() {
        let ring = r();
        let o = BlockOrder::plain(ring.num_vars());
        let f = Polynomial::parse(&ring, "y[1,1]+y[1,2]").unwrap();
        let g = Polynomial::parse(&ring, "y[2,1]+-3").unwrap();
        assert_eq!(exact_division(&(&f * &g), &g, &o).unwrap(), f);
        assert_eq!(exact_division(&f, &g, &o).unwrap_err(), AlgebraError::InexactDivision);
    }

    #[test]
    fn bracket_needs_matching_characteristic() {
        let ring = Ring::symplectic(PrimeField::new(3).unwrap(), 1, 2).unwrap();
        let i = IdealGens::new("I", &ring, vec![Polynomial::parse(&ring, "y[1,1]+y[2,2]").unwrap()]);
        assert!(frobenius_bracket(&i, 2).is_err());
        let b = frobenius_bracket(&i, 3).unwrap();
        assert_eq!(b.gens[0], Polynomial::parse(&ring, "y[1,1]^3+y[2,2]^3").unwrap());
        let q = IdealGens::new("I", &r(), vec![Polynomial::parse(&r(), "y[1,1]").unwrap()]);
        assert!(frobenius_bracket(&q, 2).is_err());
    }
}
