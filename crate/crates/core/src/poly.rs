//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept sorted in descending graded-lex order on dense variable ids
//! with no zero coefficients, so structural equality is ideal-free equality.
//! Order-dependent queries (lead terms, printing) take a [`BlockOrder`].

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::BlockOrder;
use crate::ring::{MatrixTag, Ring};

pub type Term<F> = (Monomial, <F as Field>::Elem);

#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn same_ring<F: Field>(a: &Arc<Ring<F>>, b: &Arc<Ring<F>>) -> bool {
    Arc::ptr_eq(a, b) || a.as_ref() == b.as_ref()
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.num_vars()), c)]
        };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring<F>>, id: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.num_vars(), id), ring.field().one())
    }

    pub fn y(ring: &Arc<Ring<F>>, row: usize, col: usize) -> Result<Self> {
        Ok(Self::var(ring, ring.y(row, col)?))
    }

    pub fn z(ring: &Arc<Ring<F>>, row: usize, col: usize) -> Result<Self> {
        Ok(Self::var(ring, ring.z(row, col)?))
    }

    pub fn monomial(ring: &Arc<Ring<F>>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial arity does not match ring");
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring<F>>, terms: impl IntoIterator<Item = Term<F>>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), ring.num_vars(), "monomial arity does not match ring");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<Ring<F>>, acc: HashMap<Monomial, F::Elem>) -> Self {
        let field = ring.field();
        let mut terms: Vec<Term<F>> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    // merge of two descending term lists
    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if subtract { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            let c = if subtract { field.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self^k` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Maximal term under `order`.
    pub fn lead_term(&self, order: &BlockOrder) -> Result<(&Monomial, &F::Elem)> {
        order.check_arity(self.ring.num_vars())?;
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn lead_monomial(&self, order: &BlockOrder) -> Result<Monomial> {
        self.lead_term(order).map(|(m, _)| m.clone())
    }

    /// Scaled so the lead coefficient under `order` is one.
    pub fn monic(&self, order: &BlockOrder) -> Result<Self> {
        let (_, c) = self.lead_term(order)?;
        let inv = self.field().inv(c).ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(self.scale(&inv))
    }

    /// Image in a ring with extra trailing variables.
    pub fn embed(&self, target: &Arc<Ring<F>>) -> Self {
        let n = target.num_vars();
        debug_assert!(n >= self.ring.num_vars());
        let terms = self.terms.iter().map(|(m, c)| (m.extend(n), c.clone())).collect();
        Polynomial { ring: target.clone(), terms }
    }

    /// Image in a ring with fewer trailing variables; `None` if any dropped
    /// variable occurs.
    pub fn restrict(&self, target: &Arc<Ring<F>>) -> Option<Self> {
        let n = target.num_vars();
        if self.terms.iter().any(|(m, _)| m.exponents()[n..].iter().any(|&e| e > 0)) {
            return None;
        }
        let terms = self.terms.iter().map(|(m, c)| (m.truncate(n), c.clone())).collect();
        Some(Polynomial { ring: target.clone(), terms })
    }

    /// Textual form `c*y[i,j]^e*z[k,l]^e` joined by `+`, terms descending
    /// under `order`.
    pub fn to_text(&self, order: &BlockOrder) -> String {
        let mut idx: Vec<usize> = (0..self.terms.len()).collect();
        idx.sort_by(|&a, &b| order.compare(&self.terms[b].0, &self.terms[a].0));
        self.render(idx.into_iter())
    }

    fn render(&self, idx: impl Iterator<Item = usize>) -> String {
        let field = self.field();
        let parts: Vec<String> = idx
            .map(|i| {
                let (m, c) = &self.terms[i];
                let mut s = field.format(c);
                for id in m.support() {
                    s.push('*');
                    s.push_str(&self.ring.var(id).to_string());
                    let e = m.exponent(id);
                    if e > 1 {
                        s.push_str(&format!("^{e}"));
                    }
                }
                s
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Parses the textual format produced by [`Polynomial::to_text`].
    pub fn parse(ring: &Arc<Ring<F>>, text: &str) -> Result<Self> {
        let field = ring.field();
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" || text.is_empty() {
            return Ok(Self::zero(ring));
        }
        let bad = |msg: &str| AlgebraError::Parameter(format!("cannot parse polynomial {text:?}: {msg}"));
        let mut terms = Vec::new();
        for raw in split_terms(&text) {
            let mut coeff = field.one();
            let mut mono = Monomial::one(ring.num_vars());
            for factor in raw.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() || first == '-' {
                    coeff = field.mul(&coeff, &parse_coeff(field, factor).ok_or_else(|| bad(factor))?);
                } else {
                    let (var, exp) = match factor.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u16>().map_err(|_| bad(factor))?),
                        None => (factor, 1),
                    };
                    let id = parse_var(ring, var).ok_or_else(|| bad(var))?;
                    mono = mono.mul(&Monomial::from_pairs(ring.num_vars(), &[(id, exp)]));
                }
            }
            terms.push((mono, coeff));
        }
        Ok(Self::from_terms(ring, terms))
    }
}

// '+' separates terms except inside brackets
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_coeff<F: Field>(field: &F, s: &str) -> Option<F::Elem> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.parse::<i64>().ok()?, b.parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    let inv = field.inv(&field.from_i64(den))?;
    Some(field.mul(&field.from_i64(num), &inv))
}

fn parse_var<F: Field>(ring: &Ring<F>, s: &str) -> Option<usize> {
    let (name, rest) = s.split_once('[')?;
    let inner = rest.strip_suffix(']')?;
    let tag = match name {
        "y" => MatrixTag::Y,
        "z" => MatrixTag::Z,
        "u" => return ring.aux_var(inner.parse().ok()?).ok(),
        _ => return None,
    };
    let (r, c) = inner.split_once(',')?;
    ring.lookup(tag, r.parse().ok()?, c.parse().ok()?).ok()
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(0..self.terms.len()))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    /// Panics on mismatched rings; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

/// Product of a list of polynomials; the empty product is one.
pub fn product<'a, F: Field>(ring: &Arc<Ring<F>>, factors: impl IntoIterator<Item = &'a Polynomial<F>>) -> Polynomial<F> {
    factors.into_iter().fold(Polynomial::one(ring), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qring() -> Arc<Ring<Rationals>> {
        Ring::symplectic(Rationals, 1, 3).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = qring();
        let x = Polynomial::y(&r, 1, 1).unwrap();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn sum_over_rationals_and_char_two() {
        let r = qring();
        let x = Polynomial::y(&r, 1, 1).unwrap();
        let y = Polynomial::y(&r, 1, 2).unwrap();
        let s = &(&x + &y) + &(&x - &y);
        assert_eq!(s, x.scale(&Rationals.from_i64(2)));

        let r2 = Ring::symplectic(PrimeField::new(2).unwrap(), 1, 3).unwrap();
        let x = Polynomial::y(&r2, 1, 1).unwrap();
        let y = Polynomial::y(&r2, 1, 2).unwrap();
        let xy = &x + &y;
        assert!((&xy + &xy).is_zero());
    }

    #[test]
    fn products_and_powers() {
        let r = qring();
        let x = Polynomial::y(&r, 1, 1).unwrap();
        let y = Polynomial::y(&r, 1, 2).unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(&x * &one, x);
        let d = &(&x - &y) * &(&x + &y);
        assert_eq!(d, &(&x * &x) - &(&y * &y));
        assert!(x.pow(0).is_one());
        let cube = (&x + &y).pow(3);
        assert_eq!(cube.num_terms(), 4);
        let three = Rationals.from_i64(3);
        let expected = Polynomial::from_terms(
            &r,
            [
                (Monomial::from_pairs(6, &[(0, 3)]), Rationals.one()),
                (Monomial::from_pairs(6, &[(0, 2), (1, 1)]), three.clone()),
                (Monomial::from_pairs(6, &[(0, 1), (1, 2)]), three),
                (Monomial::from_pairs(6, &[(1, 3)]), Rationals.one()),
            ],
        );
        assert_eq!(cube, expected);
    }

    #[test]
    fn frobenius_square_in_char_two() {
        let r = Ring::symplectic(PrimeField::new(2).unwrap(), 1, 3).unwrap();
        let x = Polynomial::y(&r, 1, 1).unwrap();
        let y = Polynomial::y(&r, 1, 2).unwrap();
        assert_eq!((&x + &y).pow(2), &x.pow(2) + &y.pow(2));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let a = Polynomial::y(&qring(), 1, 1).unwrap();
        let other = Ring::symplectic(Rationals, 1, 4).unwrap();
        let b = Polynomial::y(&other, 1, 1).unwrap();
        assert_eq!(a.checked_add(&b), Err(AlgebraError::ContextMismatch));
        assert_eq!(a.checked_mul(&b), Err(AlgebraError::ContextMismatch));
    }

    #[test]
    fn text_roundtrip() {
        let r = qring();
        let p = Polynomial::parse(&r, "3*y[1,1]^2*y[2,3] + -1/2*y[1,2] + 7").unwrap();
        assert_eq!(p.num_terms(), 3);
        let order = BlockOrder::plain(r.num_vars());
        let text = p.to_text(&order);
        assert_eq!(text, "3*y[1,1]^2*y[2,3]+-1/2*y[1,2]+7");
        assert_eq!(Polynomial::parse(&r, &text).unwrap(), p);
        assert!(Polynomial::parse(&r, "x[1,1]").is_err());
    }

    #[test]
    fn homogeneity() {
        let r = qring();
        assert!(Polynomial::parse(&r, "y[1,1]*y[2,2]+-1*y[1,2]*y[2,1]").unwrap().is_homogeneous());
        assert!(!Polynomial::parse(&r, "y[1,1]*y[2,2]+y[1,2]").unwrap().is_homogeneous());
    }
}
