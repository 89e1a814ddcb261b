//! Generators of the nullcone ideals, the varieties of complexes, their
//! regular sequences and splitting witnesses.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::order::BlockOrder;
use crate::poly::{product, Polynomial};
use crate::ring::{MatrixTag, Ring, Shape};

/// A labelled list of generators.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealGens<F: Field> {
    pub label: String,
    pub ring: Arc<Ring<F>>,
    pub gens: Vec<Polynomial<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub label: String,
    pub shape: Shape,
    pub generators: Vec<String>,
}

impl<F: Field> IdealGens<F> {
    pub fn new(label: impl Into<String>, ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Self {
        IdealGens { label: label.into(), ring: ring.clone(), gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn to_json(&self, order: &BlockOrder) -> IdealJson {
        IdealJson {
            label: self.label.clone(),
            shape: self.ring.shape(),
            generators: self.gens.iter().map(|g| g.to_text(order)).collect(),
        }
    }
}

fn symplectic_dims<F: Field>(ring: &Ring<F>) -> Result<(usize, usize)> {
    match ring.shape() {
        Shape::Symplectic { t, n } => Ok((t, n)),
        s => Err(AlgebraError::Shape(format!("expected a symplectic ring, got {s}"))),
    }
}

fn gl_dims<F: Field>(ring: &Ring<F>) -> Result<(usize, usize, usize)> {
    match ring.shape() {
        Shape::GeneralLinear { m, t, n } => Ok((m, t, n)),
        s => Err(AlgebraError::Shape(format!("expected a general linear ring, got {s}"))),
    }
}

/// Entry `(i, j)` of `Y^T Omega Y`: `sum_s y[s,i] y[t+s,j] - y[s,j] y[t+s,i]`.
pub fn symplectic_entry<F: Field>(ring: &Arc<Ring<F>>, i: usize, j: usize) -> Result<Polynomial<F>> {
    let (t, _) = symplectic_dims(ring)?;
    let mut acc = Polynomial::zero(ring);
    for s in 1..=t {
        let plus = &Polynomial::y(ring, s, i)? * &Polynomial::y(ring, t + s, j)?;
        let minus = &Polynomial::y(ring, s, j)? * &Polynomial::y(ring, t + s, i)?;
        acc = &(&acc + &plus) - &minus;
    }
    Ok(acc)
}

/// Generators `d[i,j]`, `1 <= i < j <= n`, of the symplectic nullcone ideal.
pub fn symplectic_gens<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    let (_, n) = symplectic_dims(ring)?;
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(symplectic_entry(ring, i, j)?);
        }
    }
    Ok(IdealGens::new("P(Y)", ring, gens))
}

/// Entry `c[i,j] = sum_k y[i,k] z[k,j]` of `YZ`.
pub fn yz_entry<F: Field>(ring: &Arc<Ring<F>>, i: usize, j: usize) -> Result<Polynomial<F>> {
    let (_, t, _) = gl_dims(ring)?;
    let mut acc = Polynomial::zero(ring);
    for k in 1..=t {
        acc = &acc + &(&Polynomial::y(ring, i, k)? * &Polynomial::z(ring, k, j)?);
    }
    Ok(acc)
}

pub fn yz_entries<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    let (m, _, n) = gl_dims(ring)?;
    let mut gens = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            gens.push(yz_entry(ring, i, j)?);
        }
    }
    Ok(IdealGens::new("(YZ)", ring, gens))
}

/// Matrix of the variables of `tag` as polynomials.
pub fn variable_matrix<F: Field>(ring: &Arc<Ring<F>>, tag: MatrixTag) -> Result<Vec<Vec<Polynomial<F>>>> {
    let (rows, cols) = match tag {
        MatrixTag::Y => ring.shape().y_dims(),
        MatrixTag::Z => ring.shape().z_dims(),
        MatrixTag::U => return Err(AlgebraError::Shape("auxiliary variables form no matrix".into())),
    };
    (1..=rows)
        .map(|r| (1..=cols).map(|c| Ok(Polynomial::var(ring, ring.lookup(tag, r, c)?))).collect())
        .collect()
}

/// All `k x k` minors of a polynomial matrix, rows and columns chosen in
/// lexicographic order. Laplace expansion along the first chosen row, with
/// sub-minors memoized across the whole family.
pub fn matrix_minors<F: Field>(ring: &Arc<Ring<F>>, mat: &[Vec<Polynomial<F>>], k: usize) -> Result<Vec<Polynomial<F>>> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    if k == 0 || k > rows.min(cols) {
        return Err(AlgebraError::Shape(format!("no {k}x{k} minors in a {rows}x{cols} matrix")));
    }
    if rows > 64 || cols > 64 {
        return Err(AlgebraError::Shape("matrix too large for minor expansion".into()));
    }
    let mut memo: HashMap<(u64, u64), Polynomial<F>> = HashMap::new();
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            out.push(det_memo(ring, mat, mask(&rs), mask(&cs), &mut memo));
        }
    }
    Ok(out)
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1 << i))
}

fn det_memo<F: Field>(
    ring: &Arc<Ring<F>>,
    mat: &[Vec<Polynomial<F>>],
    rows: u64,
    cols: u64,
    memo: &mut HashMap<(u64, u64), Polynomial<F>>,
) -> Polynomial<F> {
    if rows == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&(rows, cols)) {
        return p.clone();
    }
    let r0 = rows.trailing_zeros() as usize;
    let rest = rows & !(1 << r0);
    let mut acc = Polynomial::zero(ring);
    let mut sign_plus = true;
    let mut cbits = cols;
    while cbits != 0 {
        let c = cbits.trailing_zeros() as usize;
        cbits &= !(1 << c);
        let entry = &mat[r0][c];
        if !entry.is_zero() {
            let sub = det_memo(ring, mat, rest, cols & !(1 << c), memo);
            let term = entry * &sub;
            acc = if sign_plus { &acc + &term } else { &acc - &term };
        }
        sign_plus = !sign_plus;
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k x k` minors of the submatrix of `tag` with rows `a..=b` and
/// columns `c..=d` (1-based, inclusive).
pub fn minors<F: Field>(
    ring: &Arc<Ring<F>>,
    tag: MatrixTag,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
    k: usize,
) -> Result<Vec<Polynomial<F>>> {
    let full = variable_matrix(ring, tag)?;
    let rows = full.len();
    let cols = full.first().map_or(0, |r| r.len());
    if a == 0 || c == 0 || a > b || c > d || b > rows || d > cols {
        return Err(AlgebraError::Shape(format!(
            "submatrix rows {a}..={b}, cols {c}..={d} outside a {rows}x{cols} matrix"
        )));
    }
    let sub: Vec<Vec<Polynomial<F>>> = full[a - 1..b].iter().map(|row| row[c - 1..d].to_vec()).collect();
    matrix_minors(ring, &sub, k)
}

/// Determinant of the square submatrix `A^{[a,b]}_{[c,d]}`.
pub fn minor<F: Field>(
    ring: &Arc<Ring<F>>,
    tag: MatrixTag,
    rows: (usize, usize),
    cols: (usize, usize),
) -> Result<Polynomial<F>> {
    let k = rows.1 + 1 - rows.0;
    if cols.1 + 1 - cols.0 != k {
        return Err(AlgebraError::Shape("minor of a non-square submatrix".into()));
    }
    Ok(minors(ring, tag, rows, cols, k)?.remove(0))
}

/// All `k`-minors of the full matrix; empty when `k` exceeds its size.
fn determinantal<F: Field>(ring: &Arc<Ring<F>>, tag: MatrixTag, k: usize) -> Result<Vec<Polynomial<F>>> {
    let (rows, cols) = match tag {
        MatrixTag::Y => ring.shape().y_dims(),
        _ => ring.shape().z_dims(),
    };
    if k > rows.min(cols) {
        return Ok(Vec::new());
    }
    minors(ring, tag, (1, rows), (1, cols), k)
}

fn check_voc_params(m: usize, t: usize, n: usize, r: usize, s: usize) -> Result<()> {
    if r > m.min(t) || s > t.min(n) || r + s > t {
        return Err(AlgebraError::Parameter(format!(
            "need r <= min(m,t), s <= min(t,n), r+s <= t; got m={m}, t={t}, n={n}, r={r}, s={s}"
        )));
    }
    Ok(())
}

/// `I_{r+1}(Y) + I_{s+1}(Z) + (YZ)`.
pub fn voc_gens<F: Field>(ring: &Arc<Ring<F>>, r: usize, s: usize) -> Result<IdealGens<F>> {
    let (m, t, n) = gl_dims(ring)?;
    check_voc_params(m, t, n, r, s)?;
    let mut gens = determinantal(ring, MatrixTag::Y, r + 1)?;
    gens.extend(determinantal(ring, MatrixTag::Z, s + 1)?);
    gens.extend(yz_entries(ring)?.gens);
    Ok(IdealGens::new(format!("p_{{{r},{s}}}"), ring, gens))
}

/// Pairs `(r, s)` with `r + s = t` inside the valid parameter range.
pub fn exact_complex_params(m: usize, t: usize, n: usize) -> Vec<(usize, usize)> {
    (0..=t).map(|r| (r, t - r)).filter(|&(r, s)| r <= m.min(t) && s <= t.min(n)).collect()
}

/// All valid `(r, s)` with `r + s <= t`.
pub fn complex_params(m: usize, t: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..=m.min(t) {
        for s in 0..=t.min(n) {
            if r + s <= t {
                out.push((r, s));
            }
        }
    }
    out
}

/// `d[i,j]` with `j - i <= t`, in lexicographic `(i, j)` order.
pub fn alpha_symplectic<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    let (t, n) = symplectic_dims(ring)?;
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n.min(i + t) {
            gens.push(symplectic_entry(ring, i, j)?);
        }
    }
    Ok(IdealGens::new("alpha", ring, gens))
}

/// Index pairs of the `alpha` subset of the symplectic generators.
pub fn alpha_symplectic_indices(t: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n.min(i + t)).map(move |j| (i, j))).collect()
}

/// One element of the general linear `alpha` set, tagged with what it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaGlMember {
    Entry { i: usize, j: usize },
    Minor { tag: MatrixTag, rows: (usize, usize), cols: (usize, usize) },
}

pub fn alpha_gl_members(m: usize, t: usize, n: usize) -> Result<Vec<AlphaGlMember>> {
    if t == 0 || t > m.min(n) {
        return Err(AlgebraError::UnsupportedShape(format!(
            "alpha needs 1 <= t <= min(m, n); got m={m}, t={t}, n={n}"
        )));
    }
    let mut out = Vec::new();
    for i in 1..=t {
        for j in 1..=t + 1 - i {
            out.push(AlphaGlMember::Entry { i, j });
        }
    }
    for i in 2..t {
        out.push(AlphaGlMember::Minor { tag: MatrixTag::Y, rows: (m - i + 1, m), cols: (1, i) });
    }
    for i in 1..=m - t {
        out.push(AlphaGlMember::Minor { tag: MatrixTag::Y, rows: (i + 1, t + i), cols: (1, t) });
    }
    for i in 2..t {
        out.push(AlphaGlMember::Minor { tag: MatrixTag::Z, rows: (1, i), cols: (n - i + 1, n) });
    }
    for i in 1..=n - t {
        out.push(AlphaGlMember::Minor { tag: MatrixTag::Z, rows: (1, t), cols: (i + 1, t + i) });
    }
    Ok(out)
}

/// Entries `c[i,j]` with `i + j <= t + 1` followed by the four minor families.
pub fn alpha_gl<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    let (m, t, n) = gl_dims(ring)?;
    let gens = alpha_gl_members(m, t, n)?
        .into_iter()
        .map(|mem| match mem {
            AlphaGlMember::Entry { i, j } => yz_entry(ring, i, j),
            AlphaGlMember::Minor { tag, rows, cols } => minor(ring, tag, rows, cols),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealGens::new("alpha", ring, gens))
}

pub fn alpha<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    match ring.shape() {
        Shape::Symplectic { .. } => alpha_symplectic(ring),
        Shape::GeneralLinear { .. } => alpha_gl(ring),
    }
}

/// Product of the elements of `alpha`.
pub fn witness_f<F: Field>(ring: &Arc<Ring<F>>) -> Result<Polynomial<F>> {
    let a = alpha(ring)?;
    if a.is_empty() {
        return Err(AlgebraError::Parameter("alpha is empty for this shape".into()));
    }
    Ok(product(ring, &a.gens))
}

/// `y[m,1] * z[1,n] * f`.
pub fn witness_g<F: Field>(ring: &Arc<Ring<F>>) -> Result<Polynomial<F>> {
    let (m, _, n) = gl_dims(ring)?;
    let f = witness_f(ring)?;
    Ok(&(&Polynomial::y(ring, m, 1)? * &Polynomial::z(ring, 1, n)?) * &f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HeightOf {
    SymplecticNullcone,
    VarietyOfComplexes { r: usize, s: usize },
}

fn binom2(a: usize) -> usize {
    a * a.saturating_sub(1) / 2
}

/// Closed-form heights of the symplectic nullcone ideal and of `p_{r,s}`.
pub fn expected_height(shape: Shape, which: HeightOf) -> Result<usize> {
    match (shape, which) {
        (Shape::Symplectic { t, n }, HeightOf::SymplecticNullcone) => {
            Ok(if n <= t + 1 { binom2(n) } else { n * t - binom2(t + 1) })
        }
        (Shape::GeneralLinear { m, t, n }, HeightOf::VarietyOfComplexes { r, s }) => {
            check_voc_params(m, t, n, r, s)?;
            Ok((m - r) * (t - r) + (n - s) * (t - s) + r * s)
        }
        (shape, which) => Err(AlgebraError::Parameter(format!("{which:?} is not defined for {shape}"))),
    }
}

/// `m^[p]`: the p-th powers of all variables.
pub fn maximal_ideal_frobenius<F: Field>(ring: &Arc<Ring<F>>, p: u32) -> Result<IdealGens<F>> {
    let ch = ring.field().characteristic();
    if ch != 0 && ch != p {
        return Err(AlgebraError::Field(format!("p={p} does not match characteristic {ch}")));
    }
    let gens = (0..ring.num_vars()).map(|id| Polynomial::var(ring, id).pow(p)).collect();
    Ok(IdealGens::new("m^[p]", ring, gens))
}

/// Generators on the two sides of the symplectic localization at `y[1,1]`,
/// denominators cleared by powers of `y[1,1]`: `P(Z) + (f_2, ..., f_n)` where
/// `Z` is the `(2t-2) x (n-1)` matrix of `y[i,j] - y[i,1] y[1,j] / y[1,1]`.
pub fn symplectic_localization_gens<F: Field>(ring: &Arc<Ring<F>>) -> Result<IdealGens<F>> {
    let (t, n) = symplectic_dims(ring)?;
    if t < 2 || n < 2 {
        return Err(AlgebraError::Parameter("localization needs t >= 2 and n >= 2".into()));
    }
    let y = |i, j| Polynomial::y(ring, i, j);
    let y11 = y(1, 1)?;
    // y11 * z[i,j]
    let zc = |i: usize, j: usize| -> Result<Polynomial<F>> { Ok(&(&y11 * &y(i, j)?) - &(&y(i, 1)? * &y(1, j)?)) };
    let mut gens = Vec::new();
    for a in 2..=n {
        for b in a + 1..=n {
            let mut acc = Polynomial::zero(ring);
            for s in 1..t {
                let plus = &zc(s + 1, a)? * &zc(t + 1 + s, b)?;
                let minus = &zc(s + 1, b)? * &zc(t + 1 + s, a)?;
                acc = &(&acc + &plus) - &minus;
            }
            gens.push(acc);
        }
    }
    for j in 2..=n {
        let mut acc = &y11 * &zc(t + 1, j)?;
        for s in 2..=t {
            acc = &acc + &(&y(s, 1)? * &zc(t + s, j)?);
            acc = &acc - &(&y(t + s, 1)? * &zc(s, j)?);
        }
        gens.push(acc);
    }
    Ok(IdealGens::new("P(Z)+(f)", ring, gens))
}

/// Cleared generators of `p_{r-1,s}(Y', Z') + (f_1, ..., f_n)` for the
/// localization of `p_{r,s}` at `y[1,1]`.
pub fn voc_localization_gens<F: Field>(ring: &Arc<Ring<F>>, r: usize, s: usize) -> Result<IdealGens<F>> {
    let (m, t, n) = gl_dims(ring)?;
    check_voc_params(m, t, n, r, s)?;
    if m < 2 || t < 2 || n < 2 || r == 0 {
        return Err(AlgebraError::Parameter("localization needs m, t, n >= 2 and r >= 1".into()));
    }
    let y = |i, j| Polynomial::y(ring, i, j);
    let z = |i, j| Polynomial::z(ring, i, j);
    let y11 = y(1, 1)?;
    // y11 * y'[i,j], i in 2..=m, j in 2..=t
    let mut yc = Vec::new();
    for i in 2..=m {
        let mut row = Vec::new();
        for j in 2..=t {
            row.push(&(&y11 * &y(i, j)?) - &(&y(i, 1)? * &y(1, j)?));
        }
        yc.push(row);
    }
    let zp: Vec<Vec<Polynomial<F>>> =
        (2..=t).map(|i| (1..=n).map(|j| z(i, j)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let mut gens = Vec::new();
    if r <= (m - 1).min(t - 1) {
        gens.extend(matrix_minors(ring, &yc, r)?);
    }
    if s + 1 <= (t - 1).min(n) {
        gens.extend(matrix_minors(ring, &zp, s + 1)?);
    }
    for row in &yc {
        for l in 0..n {
            let mut acc = Polynomial::zero(ring);
            for (k, entry) in row.iter().enumerate() {
                acc = &acc + &(entry * &zp[k][l]);
            }
            gens.push(acc);
        }
    }
    for l in 1..=n {
        let mut acc = &y11 * &z(1, l)?;
        for j in 2..=t {
            acc = &acc + &(&y(1, j)? * &z(j, l)?);
        }
        gens.push(acc);
    }
    Ok(IdealGens::new(format!("p_{{{},{s}}}(Y',Z')+(f)", r - 1), ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q_sym(t: usize, n: usize) -> Arc<Ring<Rationals>> {
        Ring::symplectic(Rationals, t, n).unwrap()
    }

    fn q_gl(m: usize, t: usize, n: usize) -> Arc<Ring<Rationals>> {
        Ring::general_linear(Rationals, m, t, n).unwrap()
    }

    #[test]
    fn symplectic_t1_gives_two_minors() {
        let r = q_sym(1, 3);
        let g = symplectic_gens(&r).unwrap();
        assert_eq!(g.len(), 3);
        let d12 = Polynomial::parse(&r, "y[1,1]*y[2,2]+-1*y[1,2]*y[2,1]").unwrap();
        assert_eq!(g.gens[0], d12);
        assert!(g.is_homogeneous());
    }

    #[test]
    fn d12_t2_n4_has_four_terms() {
        let r = q_sym(2, 4);
        let d = symplectic_entry(&r, 1, 2).unwrap();
        let expected =
            Polynomial::parse(&r, "y[1,1]*y[3,2]+-1*y[1,2]*y[3,1]+y[2,1]*y[4,2]+-1*y[2,2]*y[4,1]").unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn n1_has_no_generators() {
        assert!(symplectic_gens(&q_sym(2, 1)).unwrap().is_empty());
    }

    #[test]
    fn yz_entries_bilinear() {
        let r = q_gl(5, 3, 5);
        let c = yz_entries(&r).unwrap();
        assert_eq!(c.len(), 25);
        let c11 = Polynomial::parse(&r, "y[1,1]*z[1,1]+y[1,2]*z[2,1]+y[1,3]*z[3,1]").unwrap();
        assert_eq!(c.gens[0], c11);
        assert!(c.gens.iter().all(|g| g.is_homogeneous() && g.degree() == Some(2) && g.num_terms() == 3));
        let r1 = q_gl(1, 1, 1);
        assert_eq!(yz_entries(&r1).unwrap().gens[0], Polynomial::parse(&r1, "y[1,1]*z[1,1]").unwrap());
    }

    #[test]
    fn minor_families() {
        let r = q_gl(5, 3, 5);
        let ones = minors(&r, MatrixTag::Y, (1, 5), (1, 3), 1).unwrap();
        assert_eq!(ones.len(), 15);
        let m = minor(&r, MatrixTag::Y, (4, 5), (1, 2)).unwrap();
        assert_eq!(m, Polynomial::parse(&r, "y[4,1]*y[5,2]+-1*y[4,2]*y[5,1]").unwrap());
        let three = minor(&r, MatrixTag::Z, (1, 3), (2, 4)).unwrap();
        assert_eq!(three.num_terms(), 6);
        assert!(matches!(minors(&r, MatrixTag::Y, (1, 2), (1, 3), 3), Err(AlgebraError::Shape(_))));
        assert!(matches!(minors(&r, MatrixTag::Y, (1, 6), (1, 3), 1), Err(AlgebraError::Shape(_))));
    }

    #[test]
    fn voc_generator_counts() {
        let r = q_gl(2, 2, 2);
        assert_eq!(voc_gens(&r, 0, 2).unwrap().len(), 4 + 4);
        assert_eq!(voc_gens(&r, 1, 1).unwrap().len(), 1 + 1 + 4);
        assert_eq!(voc_gens(&r, 2, 0).unwrap().len(), 4 + 4);
        assert!(matches!(voc_gens(&r, 2, 1), Err(AlgebraError::Parameter(_))));
    }

    #[test]
    fn alpha_symplectic_sizes() {
        assert_eq!(alpha_symplectic_indices(2, 4), vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(alpha_symplectic_indices(1, 3), vec![(1, 2), (2, 3)]);
        for t in 1..=8 {
            assert_eq!(alpha_symplectic_indices(t, 2), vec![(1, 2)]);
            for n in 1..=8 {
                let h = expected_height(Shape::Symplectic { t, n }, HeightOf::SymplecticNullcone).unwrap();
                assert_eq!(alpha_symplectic_indices(t, n).len(), h, "t={t} n={n}");
            }
        }
    }

    #[test]
    fn alpha_gl_sizes() {
        let r = q_gl(5, 3, 5);
        let a = alpha_gl(&r).unwrap();
        assert_eq!(a.len(), 12);
        assert_eq!(alpha_gl(&q_gl(2, 2, 2)).unwrap().len(), 3);
        assert_eq!(alpha_gl(&q_gl(1, 1, 1)).unwrap().len(), 1);
        assert!(matches!(alpha_gl_members(2, 3, 4), Err(AlgebraError::UnsupportedShape(_))));
    }

    #[test]
    fn heights() {
        let sym = Shape::Symplectic { t: 2, n: 4 };
        assert_eq!(expected_height(sym, HeightOf::SymplecticNullcone).unwrap(), 5);
        let gl = Shape::GeneralLinear { m: 5, t: 3, n: 5 };
        assert_eq!(expected_height(gl, HeightOf::VarietyOfComplexes { r: 1, s: 2 }).unwrap(), 13);
        assert_eq!(expected_height(gl, HeightOf::VarietyOfComplexes { r: 0, s: 0 }).unwrap(), 30);
        assert!(expected_height(gl, HeightOf::SymplecticNullcone).is_err());
    }

    #[test]
    fn witness_boundary_cases() {
        let r = Ring::general_linear(PrimeField::new(2).unwrap(), 1, 1, 1).unwrap();
        let f = witness_f(&r).unwrap();
        assert_eq!(f, Polynomial::parse(&r, "y[1,1]*z[1,1]").unwrap());
        let g = witness_g(&r).unwrap();
        assert_eq!(g, Polynomial::parse(&r, "y[1,1]^2*z[1,1]^2").unwrap());
    }

    #[test]
    fn frobenius_maximal_ideal() {
        let r = Ring::symplectic(PrimeField::new(2).unwrap(), 1, 2).unwrap();
        let m = maximal_ideal_frobenius(&r, 2).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.gens.iter().all(|g| g.is_monomial() && g.degree() == Some(2)));
        assert!(maximal_ideal_frobenius(&r, 3).is_err());
    }

    #[test]
    fn subsets_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 3).len(), 1);
    }
}
