//! Gröbner engine behaviour on the nullcone ideals.

use std::collections::BTreeSet;
use std::sync::Arc;

use nullcone::groebner::{
    buchberger, buchberger_with, frobenius_basis, frobenius_bracket, ideal_intersect, ideal_quotient, ideals_equal,
    initial_ideal, monomial_dimension, saturation, GbConfig,
};
use nullcone::ideals::{
    alpha_symplectic, maximal_ideal_frobenius, symplectic_entry, symplectic_gens, voc_gens, yz_entries,
};
use nullcone::{BlockOrder, Field, IdealGens, Polynomial, PrimeField, Rationals, Ring};

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn leads<F: Field>(i: &IdealGens<F>, o: &BlockOrder) -> BTreeSet<Vec<u16>> {
    buchberger(i, o).unwrap().lead_monomials().iter().map(|m| m.exponents().to_vec()).collect()
}

#[test]
fn lead_sets_agree_across_characteristics() {
    for t in 1..=2 {
        for n in 2..=4 {
            let o = BlockOrder::symplectic(t, n);
            let q = leads(&symplectic_gens(&Ring::symplectic(Rationals, t, n).unwrap()).unwrap(), &o);
            for p in [2, 3] {
                let f = PrimeField::new(p).unwrap();
                let l = leads(&symplectic_gens(&Ring::symplectic(f, t, n).unwrap()).unwrap(), &o);
                assert_eq!(q, l, "t={t} n={n} p={p}");
            }
        }
    }
}

#[test]
fn frobenius_basis_matches_direct_buchberger() {
    for (t, n, p) in [(1, 3, 2), (2, 3, 2), (1, 3, 3), (2, 4, 2)] {
        let ring = Ring::symplectic(PrimeField::new(p).unwrap(), t, n).unwrap();
        let o = BlockOrder::symplectic(t, n);
        let i = symplectic_gens(&ring).unwrap();
        let trick = frobenius_basis(&buchberger(&i, &o).unwrap(), p).unwrap();
        let direct = buchberger(&frobenius_bracket(&i, p).unwrap(), &o).unwrap();
        assert_eq!(trick.basis(), direct.basis(), "t={t} n={n} p={p}");
        assert!(direct.verify_s_pairs().unwrap());
    }
}

#[test]
fn normal_form_of_a_lead_monomial_t2_n4() {
    let ring = Ring::symplectic(Rationals, 2, 4).unwrap();
    let o = BlockOrder::symplectic(2, 4);
    let gb = buchberger(&symplectic_gens(&ring).unwrap(), &o).unwrap();
    let m = Polynomial::parse(&ring, "y[1,1]*y[3,2]").unwrap();
    assert!(!gb.normal_form(&m).unwrap().is_zero());
    assert!(!gb.is_member(&Polynomial::one(&ring)).unwrap());
    assert!(gb.verify_s_pairs().unwrap() && gb.check_reduced());
}

#[test]
fn d14_membership_in_alpha_ideal_t2_n4() {
    // a and P share a height, so membership is a genuine computation; record it
    let ring = Ring::symplectic(Rationals, 2, 4).unwrap();
    let o = BlockOrder::symplectic(2, 4);
    let gb = buchberger(&alpha_symplectic(&ring).unwrap(), &o).unwrap();
    let d14 = symplectic_entry(&ring, 1, 4).unwrap();
    let member = gb.is_member(&d14).unwrap();
    let nf = gb.normal_form(&d14).unwrap();
    assert_eq!(member, nf.is_zero());
    eprintln!("d[1,4] in (alpha) at t=2, n=4: {member}");
}

#[test]
fn initial_ideal_of_alpha_t2_n4_matches_reference() {
    let ring = Ring::symplectic(Rationals, 2, 4).unwrap();
    let o = BlockOrder::symplectic(2, 4);
    let gb = buchberger(&alpha_symplectic(&ring).unwrap(), &o).unwrap();
    let got: BTreeSet<String> = initial_ideal(&gb).gens.iter().map(|g| g.to_string()).collect();
    let want: BTreeSet<String> = ["y[1,1]*y[3,2]", "y[1,2]*y[3,3]", "y[1,3]*y[3,4]", "y[2,1]*y[4,3]", "y[2,2]*y[4,4]"]
        .iter()
        .map(|s| Polynomial::parse(&ring, s).unwrap().to_string())
        .collect();
    assert_eq!(got, want);
}

#[test]
fn dimension_of_nullcone_t2_n4() {
    let ring = Ring::symplectic(Rationals, 2, 4).unwrap();
    let o = BlockOrder::symplectic(2, 4);
    let gb = buchberger(&symplectic_gens(&ring).unwrap(), &o).unwrap();
    // nt + binom(t+1, 2)
    assert_eq!(monomial_dimension(&initial_ideal(&gb)).unwrap(), 11);
}

#[test]
fn intersection_identities() {
    let ring = Ring::general_linear(Rationals, 2, 2, 2).unwrap();
    let o = BlockOrder::gl(2, 2, 2).unwrap();
    let i = yz_entries(&ring).unwrap();
    let self_int = ideal_intersect(&i, &i, &o, cfg()).unwrap();
    assert_eq!(self_int.basis(), buchberger(&i, &o).unwrap().basis());
    let x = IdealGens::new("x", &ring, vec![Polynomial::y(&ring, 1, 1).unwrap()]);
    let y = IdealGens::new("y", &ring, vec![Polynomial::z(&ring, 2, 2).unwrap()]);
    let xy = ideal_intersect(&x, &y, &o, cfg()).unwrap();
    assert_eq!(xy.basis(), &[Polynomial::parse(&ring, "y[1,1]*z[2,2]").unwrap()]);
}

#[test]
fn quotient_identities() {
    let ring = Ring::symplectic(PrimeField::new(2).unwrap(), 1, 2).unwrap();
    let o = BlockOrder::symplectic(1, 2);
    let p = symplectic_gens(&ring).unwrap();
    let one = IdealGens::new("1", &ring, vec![Polynomial::one(&ring)]);
    assert_eq!(ideal_quotient(&p, &one, &o, cfg()).unwrap().basis(), buchberger(&p, &o).unwrap().basis());
    // principal: (f^2) : (f) = (f)
    let colon = ideal_quotient(&frobenius_bracket(&p, 2).unwrap(), &p, &o, cfg()).unwrap();
    assert_eq!(colon.basis(), buchberger(&p, &o).unwrap().basis());
}

#[test]
fn saturation_by_one_is_identity() {
    let ring = Ring::symplectic(Rationals, 2, 2).unwrap();
    let o = BlockOrder::symplectic(2, 2);
    let p = symplectic_gens(&ring).unwrap();
    let sat = saturation(&p, &Polynomial::one(&ring), &o, cfg()).unwrap();
    assert_eq!(sat.basis(), buchberger(&p, &o).unwrap().basis());
}

#[test]
fn m_bracket_matches_bracket_of_variables() {
    let ring = Ring::general_linear(PrimeField::new(3).unwrap(), 1, 1, 2).unwrap();
    let vars = IdealGens::new("m", &ring, (0..ring.num_vars()).map(|i| Polynomial::var(&ring, i)).collect());
    assert_eq!(frobenius_bracket(&vars, 3).unwrap().gens, maximal_ideal_frobenius(&ring, 3).unwrap().gens);
}

#[test]
fn decomposition_agrees_over_both_fields() {
    fn inter<F: Field>(ring: &Arc<Ring<F>>) -> bool {
        let o = BlockOrder::gl(2, 2, 2).unwrap();
        let mut acc = buchberger(&voc_gens(ring, 0, 2).unwrap(), &o).unwrap();
        for (r, s) in [(1, 1), (2, 0)] {
            acc = ideal_intersect(&acc.to_ideal("acc"), &voc_gens(ring, r, s).unwrap(), &o, GbConfig::default()).unwrap();
        }
        ideals_equal(&acc.to_ideal("acc"), &yz_entries(ring).unwrap(), &o, GbConfig::default()).unwrap()
    }
    assert!(inter(&Ring::general_linear(Rationals, 2, 2, 2).unwrap()));
    assert!(inter(&Ring::general_linear(PrimeField::new(2).unwrap(), 2, 2, 2).unwrap()));
}

#[test]
fn budget_is_enforced() {
    let ring = Ring::general_linear(Rationals, 3, 2, 3).unwrap();
    let o = BlockOrder::gl(3, 2, 3).unwrap();
    assert!(buchberger_with(&yz_entries(&ring).unwrap(), &o, GbConfig::with_budget(100)).is_err());
}
