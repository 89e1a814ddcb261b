//! Executable splitting certificates and lead-term checks, each producing
//! a [`Verdict`].

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Rationals};
use crate::groebner::{
    buchberger_with, frobenius_basis, frobenius_bracket, ideal_intersect, ideal_quotient, initial_ideal,
    monomial_dimension, monomial_height, saturation, GbConfig, GroebnerBasis,
};
use crate::ideals::{
    alpha, alpha_gl, alpha_gl_members, alpha_symplectic_indices, complex_params, expected_height, exact_complex_params, minor,
    symplectic_entry, symplectic_gens, symplectic_localization_gens, voc_gens, voc_localization_gens, witness_f,
    witness_g, yz_entries, yz_entry, AlphaGlMember, HeightOf, IdealGens,
};
use crate::monomial::Monomial;
use crate::order::{gl_block_matrices, symplectic_block_matrix, BlockOrder};
use crate::poly::{product, Polynomial};
use crate::ring::{MatrixTag, Ring, Shape};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check_name: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub witness: Option<String>,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl Verdict {
    fn build(name: &str, params: BTreeMap<String, Value>, start: Instant) -> VerdictBuilder {
        VerdictBuilder { name: name.to_string(), params, start }
    }
}

struct VerdictBuilder {
    name: String,
    params: BTreeMap<String, Value>,
    start: Instant,
}

impl VerdictBuilder {
    fn done(self, passed: bool, witness: Option<String>, detail: impl Into<String>) -> Verdict {
        Verdict {
            check_name: self.name,
            params: self.params,
            passed,
            witness,
            detail: detail.into(),
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn shape_params(shape: Shape) -> Vec<(&'static str, Value)> {
    match shape {
        Shape::Symplectic { t, n } => vec![("shape", json!("symplectic")), ("t", json!(t)), ("n", json!(n))],
        Shape::GeneralLinear { m, t, n } => {
            vec![("shape", json!("gl")), ("m", json!(m)), ("t", json!(t)), ("n", json!(n))]
        }
    }
}

fn ring_params<F: Field>(ring: &Ring<F>, extra: &[(&str, Value)]) -> BTreeMap<String, Value> {
    let mut v = shape_params(ring.shape());
    v.push(("field", json!(ring.field().spec().to_string())));
    v.extend(extra.iter().cloned());
    params(&v)
}

fn monomial_text<F: Field>(ring: &Arc<Ring<F>>, m: &Monomial) -> String {
    let order = BlockOrder::plain(ring.num_vars());
    Polynomial::monomial(ring, m.clone(), ring.field().one()).to_text(&order)
}

fn order_for<F: Field>(ring: &Ring<F>) -> Result<BlockOrder> {
    BlockOrder::for_shape(ring.shape())
}

/// True iff some term of `f` has every exponent at most `p - 1`, i.e. `f` is
/// not in the bracket power of the maximal ideal.
pub fn not_in_m_bracket<F: Field>(f: &Polynomial<F>, p: u32) -> bool {
    f.terms().iter().any(|(m, _)| m.exponents().iter().all(|&e| (e as u32) < p))
}

/// A reduced basis of `I^[p]` under the shape's block order.
pub fn bracket_basis<F: Field>(i: &IdealGens<F>, p: u32, cfg: GbConfig) -> Result<GroebnerBasis<F>> {
    let order = order_for(&i.ring)?;
    let gb = buchberger_with(i, &order, cfg)?;
    frobenius_basis(&gb, p)
}

fn colon_with<F: Field>(w: &Polynomial<F>, i: &IdealGens<F>, bracket: &GroebnerBasis<F>, cfg: GbConfig) -> Result<Option<usize>> {
    for (k, g) in i.gens.iter().enumerate() {
        if !bracket.is_member_with(&(w * g), cfg)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// True iff `w * g` lies in `I^[p]` for every generator `g` of `I`.
pub fn colon_membership<F: Field>(w: &Polynomial<F>, i: &IdealGens<F>, p: u32, cfg: GbConfig) -> Result<bool> {
    let bracket = bracket_basis(i, p, cfg)?;
    Ok(colon_with(w, i, &bracket, cfg)?.is_none())
}

/// Fedder's criterion with an explicit witness `w`.
pub fn fedder_fpure<F: Field>(i: &IdealGens<F>, w: &Polynomial<F>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("fedder", ring_params(&i.ring, &[("ideal", json!(i.label)), ("p", json!(p))]), Instant::now());
    let order = order_for(&i.ring)?;
    let bracket = bracket_basis(i, p, cfg)?;
    let failed = colon_with(w, i, &bracket, cfg)?;
    let outside = not_in_m_bracket(w, p);
    let detail = match failed {
        Some(k) => format!("w * generator {k} is not in {}^[{p}]", i.label),
        None if !outside => format!("w lies in m^[{p}]"),
        None => format!("w in {0}^[{p}]:{0} and not in m^[{p}]", i.label),
    };
    Ok(b.done(failed.is_none() && outside, Some(w.to_text(&order)), detail))
}

/// Glassbrenner's criterion: `f^{p-1}` in the colon and `s f^{p-1}` outside
/// `m^[p]`. Regularity of the localization at `s` is taken as given.
pub fn glassbrenner_fregular<F: Field>(
    i: &IdealGens<F>,
    s: &Polynomial<F>,
    f: &Polynomial<F>,
    p: u32,
    cfg: GbConfig,
) -> Result<Verdict> {
    let order = order_for(&i.ring)?;
    let b = Verdict::build(
        "glassbrenner",
        ring_params(&i.ring, &[("ideal", json!(i.label)), ("p", json!(p)), ("s", json!(s.to_text(&order)))]),
        Instant::now(),
    );
    let w = f.pow(p - 1);
    let bracket = bracket_basis(i, p, cfg)?;
    let failed = colon_with(&w, i, &bracket, cfg)?;
    let sw = s * &w;
    let outside = not_in_m_bracket(&sw, p);
    let detail = match failed {
        Some(k) => format!("f^(p-1) * generator {k} is not in the bracket power"),
        None if !outside => "s * f^(p-1) lies in m^[p]".to_string(),
        None => "f^(p-1) in colon, s * f^(p-1) not in m^[p]; regularity of the localization at s is assumed".to_string(),
    };
    Ok(b.done(failed.is_none() && outside, Some(f.to_text(&order)), detail))
}

/// Lead term of every `d[i,j]` with `j - i <= t` against `y[j-i,i] y[t+j-i,j]`.
pub fn check_symplectic_alpha_leads(t: usize, n: usize) -> Result<Verdict> {
    let b = Verdict::build("lemma33", params(&shape_params(Shape::Symplectic { t, n })), Instant::now());
    let ring = Ring::symplectic(Rationals, t, n)?;
    let order = BlockOrder::symplectic(t, n);
    let idx = alpha_symplectic_indices(t, n);
    for &(i, j) in &idx {
        let d = symplectic_entry(&ring, i, j)?;
        let lead = d.lead_monomial(&order)?;
        let a = j - i;
        let expect = Monomial::from_pairs(ring.num_vars(), &[(ring.y(a, i)?, 1), (ring.y(t + a, j)?, 1)]);
        if lead != expect {
            return Ok(b.done(
                false,
                Some(monomial_text(&ring, &lead)),
                format!("lead of d[{i},{j}] is not {}", monomial_text(&ring, &expect)),
            ));
        }
    }
    Ok(b.done(true, None, format!("{} lead terms match", idx.len())))
}

fn pairwise_coprime_squarefree(leads: &[Monomial]) -> Option<String> {
    for (k, a) in leads.iter().enumerate() {
        if !a.is_squarefree() {
            return Some(format!("lead {k} is not squarefree"));
        }
        for (l, b) in leads.iter().enumerate().skip(k + 1) {
            if !a.is_coprime(b) {
                return Some(format!("leads {k} and {l} share a variable"));
            }
        }
    }
    None
}

/// Lead terms of `alpha` for the general linear order: squarefree, pairwise
/// coprime, with `c[i,j]` leading in `y[i,i+j-1] z[i+j-1,j]`.
pub fn check_gl_alpha_leads(m: usize, t: usize, n: usize) -> Result<Verdict> {
    let b = Verdict::build("lemma53", params(&shape_params(Shape::GeneralLinear { m, t, n })), Instant::now());
    let order = BlockOrder::gl(m, t, n)?;
    let ring = Ring::general_linear(Rationals, m, t, n)?;
    let members = alpha_gl_members(m, t, n)?;
    let a = alpha_gl(&ring)?;
    let leads = a.gens.iter().map(|g| g.lead_monomial(&order)).collect::<Result<Vec<_>>>()?;
    for (mem, lead) in members.iter().zip(&leads) {
        if let AlphaGlMember::Entry { i, j } = *mem {
            let k = i + j - 1;
            let expect = Monomial::from_pairs(ring.num_vars(), &[(ring.y(i, k)?, 1), (ring.z(k, j)?, 1)]);
            if *lead != expect {
                return Ok(b.done(false, Some(monomial_text(&ring, lead)), format!("lead of c[{i},{j}] is wrong")));
            }
        }
    }
    if let Some(why) = pairwise_coprime_squarefree(&leads) {
        return Ok(b.done(false, None, why));
    }
    Ok(b.done(true, None, format!("{} squarefree pairwise coprime lead terms", leads.len())))
}

/// Buchberger returns `alpha` unchanged and its height matches.
/// For the symplectic shape the height must equal both `|alpha|` and the
/// closed form; for the general linear shape heights are only recorded.
pub fn check_alpha_groebner_and_height<F: Field>(ring: &Arc<Ring<F>>, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("alpha_groebner", ring_params(ring, &[]), Instant::now());
    let order = order_for(ring)?;
    let a = alpha(ring)?;
    if a.is_empty() {
        return Ok(b.done(true, None, "alpha is empty"));
    }
    let gb = buchberger_with(&a, &order, cfg)?;
    let input: BTreeSet<String> =
        a.gens.iter().map(|g| g.monic(&order).map(|g| g.to_text(&order))).collect::<Result<_>>()?;
    let output: BTreeSet<String> = gb.basis().iter().map(|g| g.to_text(&order)).collect();
    if input != output || gb.len() != a.len() {
        return Ok(b.done(false, None, format!("basis has {} elements, alpha has {}", gb.len(), a.len())));
    }
    if let Some(why) = pairwise_coprime_squarefree(gb.lead_monomials()) {
        return Ok(b.done(false, None, why));
    }
    let height = monomial_height(&initial_ideal(&gb))?;
    match ring.shape() {
        Shape::Symplectic { .. } => {
            let expect = expected_height(ring.shape(), HeightOf::SymplecticNullcone)?;
            let ok = height == a.len() && height == expect;
            Ok(b.done(ok, None, format!("|alpha| = {}, height = {height}, expected = {expect}", a.len())))
        }
        Shape::GeneralLinear { m, t, n } => {
            let heights: Vec<String> = exact_complex_params(m, t, n)
                .into_iter()
                .map(|(r, s)| {
                    expected_height(ring.shape(), HeightOf::VarietyOfComplexes { r, s }).map(|h| format!("p_{{{r},{s}}}: {h}"))
                })
                .collect::<Result<_>>()?;
            Ok(b.done(
                height == a.len(),
                None,
                format!("|alpha| = {}, height = {height}; component heights {}", a.len(), heights.join(", ")),
            ))
        }
    }
}

/// Every minimal generator of the initial ideal is squarefree.
pub fn check_squarefree_initial<F: Field>(i: &IdealGens<F>, order: &BlockOrder, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("squarefree_initial", ring_params(&i.ring, &[("ideal", json!(i.label))]), Instant::now());
    let gb = buchberger_with(i, order, cfg)?;
    if let Some(m) = gb.lead_monomials().iter().find(|m| !m.is_squarefree()) {
        return Ok(b.done(false, Some(monomial_text(&i.ring, m)), "initial ideal has a non-squarefree generator"));
    }
    Ok(b.done(true, None, format!("{} squarefree lead terms", gb.len())))
}

/// `(YZ)` equals the intersection of the `p_{r,s}` with `r + s = t`.
pub fn check_nullcone_decomposition<F: Field>(ring: &Arc<Ring<F>>, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("decomposition", ring_params(ring, &[]), Instant::now());
    let Shape::GeneralLinear { m, t, n } = ring.shape() else {
        return Err(AlgebraError::Shape("decomposition needs a general linear ring".into()));
    };
    let order = order_for(ring)?;
    let comps = exact_complex_params(m, t, n);
    let mut acc: Option<GroebnerBasis<F>> = None;
    for &(r, s) in &comps {
        let p = voc_gens(ring, r, s)?;
        acc = Some(match acc {
            None => buchberger_with(&p, &order, cfg)?,
            Some(prev) => ideal_intersect(&prev.to_ideal("acc"), &p, &order, cfg)?,
        });
    }
    let inter = acc.expect("at least one component");
    let yz = buchberger_with(&yz_entries(ring)?, &order, cfg)?;
    let ok = inter.basis() == yz.basis();
    let names: Vec<String> = comps.iter().map(|(r, s)| format!("p_{{{r},{s}}}")).collect();
    Ok(b.done(ok, None, format!("(YZ) vs {}: {} and {} basis elements", names.join(" ∩ "), yz.len(), inter.len())))
}

/// Which localization statement to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Localization {
    Symplectic,
    VarietyOfComplexes { r: usize, s: usize },
}

/// Both generator sets agree after inverting `y[1,1]`.
pub fn check_localization<F: Field>(ring: &Arc<Ring<F>>, which: Localization, cfg: GbConfig) -> Result<Verdict> {
    let extra = match which {
        Localization::Symplectic => vec![],
        Localization::VarietyOfComplexes { r, s } => vec![("r", json!(r)), ("s", json!(s))],
    };
    let b = Verdict::build("localization", ring_params(ring, &extra), Instant::now());
    let (lhs, rhs) = match which {
        Localization::Symplectic => (symplectic_gens(ring)?, symplectic_localization_gens(ring)?),
        Localization::VarietyOfComplexes { r, s } => (voc_gens(ring, r, s)?, voc_localization_gens(ring, r, s)?),
    };
    let order = order_for(ring)?;
    let y11 = Polynomial::y(ring, 1, 1)?;
    let a = saturation(&lhs, &y11, &order, cfg)?;
    let c = saturation(&rhs, &y11, &order, cfg)?;
    let ok = a.basis() == c.basis();
    Ok(b.done(ok, None, format!("saturations at y[1,1]: {} and {} basis elements", a.len(), c.len())))
}

/// `g^{p-1}` is a simultaneous splitting witness for every `p_{r,s}` with
/// `r + s = t`.
pub fn check_compatible_splitting<F: Field>(ring: &Arc<Ring<F>>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("compatible_splitting", ring_params(ring, &[("p", json!(p))]), Instant::now());
    let Shape::GeneralLinear { m, t, n } = ring.shape() else {
        return Err(AlgebraError::Shape("compatible splitting needs a general linear ring".into()));
    };
    let order = order_for(ring)?;
    let g = witness_g(ring)?;
    let w = g.pow(p - 1);
    let witness = Some(g.to_text(&order));
    for (r, s) in exact_complex_params(m, t, n) {
        let comp = voc_gens(ring, r, s)?;
        if !colon_membership(&w, &comp, p, cfg)? {
            return Ok(b.done(false, witness, format!("g^(p-1) is not in the colon of p_{{{r},{s}}}")));
        }
    }
    if !not_in_m_bracket(&w, p) {
        return Ok(b.done(false, witness, "g^(p-1) lies in m^[p]"));
    }
    Ok(b.done(true, witness, "g^(p-1) in every p_{r,s}^[p]:p_{r,s} with r+s=t, not in m^[p]"))
}

const PIGEONHOLE_FULL_LIMIT: u128 = 500;

fn multichoose(n: usize, k: usize) -> u128 {
    // C(n + k - 1, k)
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 + i) / (i + 1);
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every product of `h(p-1)` generators times a generator lies in `I^[p]`.
/// Enumerates all products when there are at most 500, else samples 500.
pub fn check_pigeonhole<F: Field>(i: &IdealGens<F>, h: usize, p: u32, seed: u64, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build(
        "pigeonhole",
        ring_params(&i.ring, &[("ideal", json!(i.label)), ("h", json!(h)), ("p", json!(p))]),
        Instant::now(),
    );
    let gens: Vec<&Polynomial<F>> = i.gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(b.done(true, None, "zero ideal"));
    }
    let k = h * (p as usize - 1);
    let total = multichoose(gens.len(), k);
    let choices: Vec<Vec<usize>> = if total <= PIGEONHOLE_FULL_LIMIT {
        multisets(gens.len(), k)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..PIGEONHOLE_FULL_LIMIT)
            .map(|_| {
                let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..gens.len())).collect();
                v.sort_unstable();
                v
            })
            .collect()
    };
    let bracket = bracket_basis(i, p, cfg)?;
    let order = bracket.order().clone();
    for choice in &choices {
        let prod = product(&i.ring, choice.iter().map(|&c| gens[c]));
        for g in &gens {
            let f = &prod * *g;
            if !bracket.is_member_with(&f, cfg)? {
                return Ok(b.done(false, Some(prod.to_text(&order)), format!("product {choice:?} times a generator escapes")));
            }
        }
    }
    let how = if total <= PIGEONHOLE_FULL_LIMIT { "all" } else { "sampled" };
    Ok(b.done(
        true,
        None,
        format!("{how} {} products of {k} generators (ordinary power surrogate for the symbolic power)", choices.len()),
    ))
}

/// The full colon `I^[p] : I` as a reduced basis.
pub fn full_colon<F: Field>(i: &IdealGens<F>, p: u32, cfg: GbConfig) -> Result<GroebnerBasis<F>> {
    let order = order_for(&i.ring)?;
    let bracket = frobenius_bracket(i, p)?;
    ideal_quotient(&bracket, i, &order, cfg)
}

/// Witness-first and full-colon paths agree on `w`.
pub fn check_colon_oracle<F: Field>(i: &IdealGens<F>, w: &Polynomial<F>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("colon_oracle", ring_params(&i.ring, &[("ideal", json!(i.label)), ("p", json!(p))]), Instant::now());
    let witness_first = colon_membership(w, i, p, cfg)?;
    let colon = full_colon(i, p, cfg)?;
    let full = colon.is_member_with(w, cfg)?;
    Ok(b.done(
        witness_first && full,
        None,
        format!("witness-first: {witness_first}, full colon ({} generators): {full}", colon.len()),
    ))
}

/// Every generator of `a^[p] : a` lies in `P^[p] : P`.
pub fn check_colon_containment<F: Field>(a: &IdealGens<F>, big: &IdealGens<F>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build(
        "colon_containment",
        ring_params(&a.ring, &[("small", json!(a.label)), ("large", json!(big.label)), ("p", json!(p))]),
        Instant::now(),
    );
    let small = full_colon(a, p, cfg)?;
    let large = full_colon(big, p, cfg)?;
    for g in small.basis() {
        if !large.is_member_with(g, cfg)? {
            return Ok(b.done(false, Some(g.to_text(small.order())), "generator escapes the larger colon"));
        }
    }
    Ok(b.done(true, None, format!("{} generators of the smaller colon lie in the larger one", small.len())))
}

/// Height of the initial ideal of the nullcone ideal (symplectic) or of
/// every `p_{r,s}` (general linear) against the closed forms.
pub fn check_heights<F: Field>(ring: &Arc<Ring<F>>, cfg: GbConfig) -> Result<Verdict> {
    let b = Verdict::build("heights", ring_params(ring, &[]), Instant::now());
    let order = order_for(ring)?;
    let cases: Vec<(IdealGens<F>, HeightOf)> = match ring.shape() {
        Shape::Symplectic { .. } => vec![(symplectic_gens(ring)?, HeightOf::SymplecticNullcone)],
        Shape::GeneralLinear { m, t, n } => complex_params(m, t, n)
            .into_iter()
            .map(|(r, s)| Ok((voc_gens(ring, r, s)?, HeightOf::VarietyOfComplexes { r, s })))
            .collect::<Result<_>>()?,
    };
    let mut lines = Vec::new();
    for (ideal, which) in cases {
        let gb = buchberger_with(&ideal, &order, cfg)?;
        let height = ring.num_vars() - monomial_dimension(&initial_ideal(&gb))?;
        let want = expected_height(ring.shape(), which)?;
        if height != want {
            return Ok(b.done(false, None, format!("{}: height {height}, closed form {want}", ideal.label)));
        }
        lines.push(format!("{}: {height}", ideal.label));
    }
    Ok(b.done(true, None, lines.join(", ")))
}

/// The reference block matrix and lead terms of the `t = 2, n = 4` example.
pub fn check_symplectic_example() -> Result<Verdict> {
    let b = Verdict::build("symplectic_example", params(&shape_params(Shape::Symplectic { t: 2, n: 4 })), Instant::now());
    let blocks = symplectic_block_matrix(2, 4);
    if blocks != [[1, 3, 1, 0], [2, 2, 0, 0], [0, 1, 3, 1], [0, 0, 2, 2]] {
        return Ok(b.done(false, None, format!("block matrix {blocks:?}")));
    }
    let ring = Ring::symplectic(Rationals, 2, 4)?;
    let order = BlockOrder::symplectic(2, 4);
    let reference = [
        ((1, 2), [(1, 1), (3, 2)]),
        ((2, 3), [(1, 2), (3, 3)]),
        ((3, 4), [(1, 3), (3, 4)]),
        ((1, 3), [(2, 1), (4, 3)]),
        ((2, 4), [(2, 2), (4, 4)]),
        ((1, 4), [(2, 1), (4, 4)]),
    ];
    for ((i, j), vars) in reference {
        let expect = Monomial::from_pairs(ring.num_vars(), &[(ring.y(vars[0].0, vars[0].1)?, 1), (ring.y(vars[1].0, vars[1].1)?, 1)]);
        let lead = symplectic_entry(&ring, i, j)?.lead_monomial(&order)?;
        if lead != expect {
            return Ok(b.done(false, Some(monomial_text(&ring, &lead)), format!("lead of d[{i},{j}]")));
        }
    }
    Ok(b.done(true, None, "block matrix and 6 lead terms reproduced"))
}

/// The reference block matrices and lead terms of the `(m, t, n) = (5, 3, 5)`
/// example.
pub fn check_gl_example() -> Result<Verdict> {
    use crate::ring::MatrixTag::{Y, Z};
    let b = Verdict::build(
        "gl_example",
        params(&shape_params(Shape::GeneralLinear { m: 5, t: 3, n: 5 })),
        Instant::now(),
    );
    let (by, bz) = gl_block_matrices(5, 3, 5)?;
    let py = [[12, 11, 10], [9, 14, 13], [6, 8, 15], [3, 5, 7], [1, 2, 4]];
    let pz = [[12, 9, 6, 3, 1], [14, 11, 8, 5, 2], [15, 13, 10, 7, 4]];
    if by != py || bz != pz {
        return Ok(b.done(false, None, "block matrices differ"));
    }
    let ring = Ring::general_linear(Rationals, 5, 3, 5)?;
    let order = BlockOrder::gl(5, 3, 5)?;
    let entries = [((1, 1), (1, 1)), ((1, 2), (2, 2)), ((1, 3), (3, 3)), ((2, 1), (2, 2)), ((2, 2), (3, 3)), ((3, 1), (3, 3))];
    let mut cases: Vec<(Polynomial<Rationals>, Vec<(MatrixTag, usize, usize)>)> = Vec::new();
    for ((i, j), (yc, zr)) in entries {
        // c[i,j] leads in y[i, yc] z[zr, j]
        cases.push((yz_entry(&ring, i, j)?, vec![(Y, i, yc), (Z, zr, j)]));
    }
    let minors_reference = [
        (Y, (4, 5), (1, 2), vec![(Y, 4, 1), (Y, 5, 2)]),
        (Y, (3, 5), (1, 3), vec![(Y, 3, 1), (Y, 4, 2), (Y, 5, 3)]),
        (Y, (2, 4), (1, 3), vec![(Y, 2, 1), (Y, 3, 2), (Y, 4, 3)]),
        (Z, (1, 2), (4, 5), vec![(Z, 1, 4), (Z, 2, 5)]),
        (Z, (1, 3), (3, 5), vec![(Z, 1, 3), (Z, 2, 4), (Z, 3, 5)]),
        (Z, (1, 3), (2, 4), vec![(Z, 1, 2), (Z, 2, 3), (Z, 3, 4)]),
    ];
    for (tag, rows, cols, vars) in minors_reference {
        cases.push((minor(&ring, tag, rows, cols)?, vars));
    }
    for (k, (f, vars)) in cases.iter().enumerate() {
        let pairs = vars.iter().map(|&(t, r, c)| Ok((ring.lookup(t, r, c)?, 1))).collect::<Result<Vec<_>>>()?;
        let expect = Monomial::from_pairs(ring.num_vars(), &pairs);
        let lead = f.lead_monomial(&order)?;
        if lead != expect {
            return Ok(b.done(false, Some(monomial_text(&ring, &lead)), format!("reference lead term {k}")));
        }
    }
    Ok(b.done(true, None, "two block matrices and 12 lead terms reproduced"))
}

/// Fedder with the product-of-alpha witness on the nullcone ideal.
pub fn fedder_nullcone<F: Field>(ring: &Arc<Ring<F>>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    let (i, w) = match ring.shape() {
        Shape::Symplectic { .. } => (symplectic_gens(ring)?, witness_f(ring)?.pow(p - 1)),
        Shape::GeneralLinear { .. } => (yz_entries(ring)?, witness_g(ring)?.pow(p - 1)),
    };
    fedder_fpure(&i, &w, p, cfg)
}

/// Glassbrenner with `s = y[1,n]` on the symplectic nullcone, or
/// `s = y[m,1]` on `p_{r,s}`.
pub fn glassbrenner_default<F: Field>(ring: &Arc<Ring<F>>, rs: Option<(usize, usize)>, p: u32, cfg: GbConfig) -> Result<Verdict> {
    match ring.shape() {
        Shape::Symplectic { n, .. } => {
            let s = Polynomial::y(ring, 1, n)?;
            glassbrenner_fregular(&symplectic_gens(ring)?, &s, &witness_f(ring)?, p, cfg)
        }
        Shape::GeneralLinear { m, t, .. } => {
            let (r, sz) = rs.unwrap_or((t / 2, t - t / 2));
            let s = Polynomial::y(ring, m, 1)?;
            glassbrenner_fregular(&voc_gens(ring, r, sz)?, &s, &witness_f(ring)?, p, cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideals::maximal_ideal_frobenius;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn m_bracket_basics() {
        let r = Ring::symplectic(f2(), 1, 2).unwrap();
        let x = Polynomial::y(&r, 1, 1).unwrap();
        assert!(!not_in_m_bracket(&x.pow(2), 2));
        assert!(not_in_m_bracket(&(&x * &Polynomial::y(&r, 2, 2).unwrap()), 2));
        let m = maximal_ideal_frobenius(&r, 2).unwrap();
        let vars = IdealGens::new("m", &r, (0..4).map(|i| Polynomial::var(&r, i)).collect());
        assert_eq!(frobenius_bracket(&vars, 2).unwrap().gens, m.gens);
    }

    #[test]
    fn colon_of_principal_ideal() {
        let r = Ring::symplectic(PrimeField::new(3).unwrap(), 1, 2).unwrap();
        let g = Polynomial::parse(&r, "y[1,1]*y[2,2]+-1*y[1,2]*y[2,1]").unwrap();
        let i = IdealGens::new("g", &r, vec![g.clone()]);
        assert!(colon_membership(&g.pow(2), &i, 3, cfg()).unwrap());
        assert!(!colon_membership(&Polynomial::one(&r), &i, 3, cfg()).unwrap());
        assert!(!fedder_fpure(&i, &Polynomial::one(&r), 3, cfg()).unwrap().passed);
    }

    #[test]
    fn colon_requires_prime_characteristic() {
        let r = Ring::symplectic(Rationals, 1, 2).unwrap();
        let i = symplectic_gens(&r).unwrap();
        assert!(colon_membership(&Polynomial::one(&r), &i, 2, cfg()).is_err());
    }

    #[test]
    fn symplectic_alpha_leads_small_cases() {
        assert!(check_symplectic_alpha_leads(2, 4).unwrap().passed);
        assert!(check_symplectic_alpha_leads(1, 5).unwrap().passed);
        assert!(check_symplectic_alpha_leads(3, 2).unwrap().passed);
    }

    #[test]
    fn gl_alpha_leads_small_cases() {
        assert!(check_gl_alpha_leads(5, 3, 5).unwrap().passed);
        let v = check_gl_alpha_leads(2, 2, 2).unwrap();
        assert!(v.passed);
        assert!(v.detail.starts_with("3 "));
        assert!(check_gl_alpha_leads(1, 1, 1).unwrap().passed);
        assert!(check_gl_alpha_leads(2, 3, 2).is_err());
    }

    #[test]
    fn alpha_heights() {
        for (t, n, h) in [(2, 4, 5), (1, 4, 3), (3, 3, 3)] {
            let r = Ring::symplectic(f2(), t, n).unwrap();
            let v = check_alpha_groebner_and_height(&r, cfg()).unwrap();
            assert!(v.passed, "{v:?}");
            assert!(v.detail.contains(&format!("height = {h}")));
        }
    }

    #[test]
    fn fedder_and_glassbrenner_symplectic_t1_n3() {
        let r = Ring::symplectic(f2(), 1, 3).unwrap();
        assert!(fedder_nullcone(&r, 2, cfg()).unwrap().passed);
        assert!(glassbrenner_default(&r, None, 2, cfg()).unwrap().passed);
    }

    #[test]
    fn glassbrenner_t2_n4() {
        let r = Ring::symplectic(f2(), 2, 4).unwrap();
        let v = glassbrenner_default(&r, None, 2, cfg()).unwrap();
        assert!(v.passed, "{v:?}");
    }

    #[test]
    fn decomposition_trivial_case() {
        let r = Ring::general_linear(f2(), 1, 1, 1).unwrap();
        assert!(check_nullcone_decomposition(&r, cfg()).unwrap().passed);
        // y[m,1] z[1,n] repeats the lead of c[1,1] here, so g lands in m^[2]
        let v = check_compatible_splitting(&r, 2, cfg()).unwrap();
        assert!(!v.passed);
        assert_eq!(v.detail, "g^(p-1) lies in m^[p]");
        let g = witness_g(&r).unwrap();
        for (r_, s_) in exact_complex_params(1, 1, 1) {
            assert!(colon_membership(&g, &voc_gens(&r, r_, s_).unwrap(), 2, cfg()).unwrap());
        }
    }

    #[test]
    fn pigeonhole_small_cases() {
        let r = Ring::symplectic(f2(), 1, 2).unwrap();
        let xy = IdealGens::new("(x,y)", &r, vec![Polynomial::y(&r, 1, 1).unwrap(), Polynomial::y(&r, 1, 2).unwrap()]);
        assert!(check_pigeonhole(&xy, 2, 2, 0, cfg()).unwrap().passed);
        let r3 = Ring::symplectic(f2(), 1, 3).unwrap();
        assert!(check_pigeonhole(&symplectic_gens(&r3).unwrap(), 2, 2, 0, cfg()).unwrap().passed);
        assert_eq!(multichoose(3, 2), 6);
        assert_eq!(multisets(3, 2).len(), 6);
    }

    #[test]
    fn worked_examples_and_heights() {
        assert!(check_symplectic_example().unwrap().passed);
        assert!(check_gl_example().unwrap().passed);
        let r = Ring::symplectic(Rationals, 2, 4).unwrap();
        let v = check_heights(&r, cfg()).unwrap();
        assert!(v.passed, "{v:?}");
        assert!(check_heights(&Ring::general_linear(f2(), 2, 2, 2).unwrap(), cfg()).unwrap().passed);
    }

    #[test]
    fn verdict_json_roundtrip() {
        let v = check_symplectic_alpha_leads(2, 4).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&s).unwrap(), v);
    }
}
