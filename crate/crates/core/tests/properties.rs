use std::sync::Arc;

use nullcone::groebner::buchberger;
use nullcone::ideals::symplectic_gens;
use nullcone::{BlockOrder, Field, Monomial, Polynomial, PrimeField, Rationals, Ring};
use proptest::prelude::*;

const NV: usize = 8;

fn arb_exps() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(prop_oneof![3 => Just(0u16), 2 => 1u16..4], NV)
}

fn arb_terms() -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((arb_exps(), -9i64..10), 0..5)
}

fn poly<F: Field>(ring: &Arc<Ring<F>>, terms: &[(Vec<u16>, i64)]) -> Polynomial<F> {
    let f = ring.field();
    Polynomial::from_terms(ring, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))))
}

fn order(k: usize) -> BlockOrder {
    match k {
        0 => BlockOrder::symplectic(2, 2),
        1 => BlockOrder::plain(NV),
        _ => BlockOrder::gl(2, 1, 2).unwrap().elimination(4),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn orders_are_multiplicative_total(a in arb_exps(), b in arb_exps(), c in arb_exps(), k in 0usize..3) {
        let o = order(k);
        let (a, b, c) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), o.compare(&a, &b));
        prop_assert!(o.compare(&Monomial::one(NV), &a).is_le());
    }

    #[test]
    fn distributive_over_q(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        let r = Ring::symplectic(Rationals, 2, 2).unwrap();
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn text_roundtrip(a in arb_terms(), k in 0usize..2) {
        let r = Ring::symplectic(Rationals, 2, 2).unwrap();
        let f = poly(&r, &a);
        let text = f.to_text(&order(k));
        prop_assert_eq!(Polynomial::parse(&r, &text).unwrap(), f);
    }

    #[test]
    fn lead_of_product(a in arb_terms(), b in arb_terms(), k in 0usize..3) {
        let r = Ring::symplectic(PrimeField::new(5).unwrap(), 2, 2).unwrap();
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let o = order(k);
        prop_assert_eq!((&f * &g).lead_monomial(&o).unwrap(), f.lead_monomial(&o).unwrap().mul(&g.lead_monomial(&o).unwrap()));
    }

    #[test]
    fn frobenius_is_additive(a in arb_terms(), b in arb_terms(), pk in 0usize..3) {
        let p = [2u32, 3, 5][pk];
        let r = Ring::symplectic(PrimeField::new(p).unwrap(), 2, 2).unwrap();
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        prop_assert_eq!((&f + &g).pow(p), &f.pow(p) + &g.pow(p));
        prop_assert_eq!((&f * &g).pow(p), &f.pow(p) * &g.pow(p));
    }

    #[test]
    fn normal_form_is_idempotent(a in arb_terms()) {
        let r = Ring::symplectic(Rationals, 2, 2).unwrap();
        let o = BlockOrder::symplectic(2, 2);
        let gb = buchberger(&symplectic_gens(&r).unwrap(), &o).unwrap();
        let f = poly(&r, &a);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.is_member(&(&f - &nf)).unwrap());
        for (m, _) in nf.terms() {
            prop_assert!(gb.lead_monomials().iter().all(|l| !l.divides(m)));
        }
    }

    #[test]
    fn random_ideals_give_groebner_bases(gens in prop::collection::vec(arb_terms(), 1..4)) {
        let r = Ring::symplectic(PrimeField::new(3).unwrap(), 1, 2).unwrap();
        let small: Vec<Polynomial<PrimeField>> = gens
            .iter()
            .map(|t| {
                let t4: Vec<(Vec<u16>, i64)> = t.iter().map(|(e, c)| (e[..4].iter().map(|&x| x.min(2)).collect(), *c)).collect();
                poly(&r, &t4)
            })
            .collect();
        let ideal = nullcone::IdealGens::new("I", &r, small.clone());
        let o = BlockOrder::symplectic(1, 2);
        let gb = buchberger(&ideal, &o).unwrap();
        prop_assert!(gb.verify_s_pairs().unwrap());
        prop_assert!(gb.check_reduced());
        for g in &small {
            prop_assert!(gb.is_member(g).unwrap());
        }
    }
}
