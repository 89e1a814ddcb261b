//! Block monomial orders.
//!
//! Every order here is graded reverse-lexicographic over a total variable
//! ranking. The ranking sorts variables by block number and breaks ties
//! inside a block by (matrix tag, row, column), so `Y` before `Z`, then
//! smaller row, then smaller column is the smaller variable.
//!
//! An elimination order puts a set of outer (auxiliary) variables in front:
//! monomials are compared by their outer part first (degree, then revlex)
//! and only then by the inner order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ring::{MatrixTag, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderKind {
    SymplecticBlocks { t: usize, n: usize },
    GlBlocks { m: usize, t: usize, n: usize },
    PlainDegRevLex,
    ProductElimination { outer: Vec<usize>, inner: Box<OrderKind> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockOrder {
    kind: OrderKind,
    shape: Option<Shape>,
    block_of: Vec<u32>,
    rank: Vec<u32>,
    /// inner variable ids, ascending rank
    by_rank: Vec<usize>,
    /// outer variable ids, ascending rank
    outer: Vec<usize>,
}

/// Block of the symplectic variable `y[i,j]` (rows `1..=t`) or
/// `w[i,j] = y[i+t, n-j+1]`.
pub fn symplectic_block(i: usize, j: usize, n: usize) -> u32 {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let bound = n - i + 1;
    let l = if j >= 1 && 2 * j < bound {
        2 * j + i - 2
    } else if bound <= 2 * j && j < bound {
        2 * n - 2 * j - i
    } else {
        0
    };
    l as u32
}

/// Symplectic block matrix of the `2t x n` matrix `Y`.
pub fn symplectic_block_matrix(t: usize, n: usize) -> Vec<Vec<u32>> {
    (1..=2 * t)
        .map(|row| {
            (1..=n)
                .map(|col| {
                    if row <= t {
                        symplectic_block(row, col, n)
                    } else {
                        symplectic_block(row - t, n - col + 1, n)
                    }
                })
                .collect()
        })
        .collect()
}

/// Block matrices `(Y, Z)` for the `m x t` / `t x n` pair, produced by the
/// diagonal scan: `Z` numbered from the upper right corner along upward
/// diagonals, `Y` below its main diagonal from the lower left corner, and
/// `y[i,j]` with `i <= j` sharing the block of `z[j, j-i+1]`.
pub fn gl_block_matrices(m: usize, t: usize, n: usize) -> Result<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    if t == 0 || t > m.min(n) {
        return Err(AlgebraError::UnsupportedShape(format!(
            "block order needs 1 <= t <= min(m, n); got m={m}, t={t}, n={n}"
        )));
    }
    let mut z = vec![vec![0u32; n]; t];
    let mut next = 1;
    // diagonals col - row = e, e from n-1 down to 1-t
    for e in (1 - t as i64..=n as i64 - 1).rev() {
        for row in (1..=t as i64).rev() {
            let col = row + e;
            if (1..=n as i64).contains(&col) {
                z[row as usize - 1][col as usize - 1] = next;
                next += 1;
            }
        }
    }
    let mut y = vec![vec![0u32; t]; m];
    next = 1;
    for d in (1..m as i64).rev() {
        for col in (1..=t as i64).rev() {
            let row = col + d;
            if (1..=m as i64).contains(&row) {
                y[row as usize - 1][col as usize - 1] = next;
                next += 1;
            }
        }
    }
    for i in 1..=t {
        for j in i..=t {
            y[i - 1][j - 1] = z[j - 1][j - i];
        }
    }
    Ok((y, z))
}

/// Closed form for the `Z` blocks. Only used to cross-check the scan.
pub fn gl_z_block_closed_form(i: usize, j: usize, t: usize, n: usize) -> Option<u32> {
    let (i, j, t, n) = (i as i64, j as i64, t as i64, n as i64);
    let binom2 = |a: i64| a * (a - 1) / 2;
    let d = i - j;
    let l = if 1 - n <= d && d <= t - n - 1 {
        i - 2 * j + 2 * n + binom2(i - j + n - 1)
    } else if t - n <= d && d <= -1 {
        binom2(t) + t * (i - j + n - t + 1) - i + 1
    } else if 0 <= d && d <= t - 1 {
        t * n - binom2(t - i + j + 1) + t - i + 1
    } else {
        return None;
    };
    Some(l as u32)
}

/// Closed form for the `Y` blocks. Only used to cross-check the scan;
/// the middle case disagrees with the diagonal scan in general.
pub fn gl_y_block_closed_form(i: usize, j: usize, m: usize, t: usize, n: usize) -> Option<u32> {
    let (i, j, m, t, n) = (i as i64, j as i64, m as i64, t as i64, n as i64);
    let binom2 = |a: i64| a * (a - 1) / 2;
    let l = if i >= m - t + 1 && j <= i - m + t {
        binom2(m - i + j + 1) - j + 1
    } else if i - m + t + 1 <= j && j <= i - 1 {
        binom2(t + 1) + (t - j) + t * (m - t + i - j - 1) + 1
    } else if 1 <= i && i <= j && j <= t {
        t * n + t - j - binom2(t - i + 2) + 1
    } else {
        return None;
    };
    Some(l as u32)
}

impl BlockOrder {
    fn from_blocks(kind: OrderKind, shape: Option<Shape>, keys: Vec<(u32, MatrixTag, usize, usize)>) -> Self {
        let nvars = keys.len();
        let mut by_rank: Vec<usize> = (0..nvars).collect();
        by_rank.sort_by_key(|&id| keys[id]);
        let mut rank = vec![0u32; nvars];
        for (r, &id) in by_rank.iter().enumerate() {
            rank[id] = r as u32;
        }
        let block_of = keys.iter().map(|k| k.0).collect();
        BlockOrder { kind, shape, block_of, rank, by_rank, outer: Vec::new() }
    }

    /// Degrevlex with ranks equal to ids (every variable in block 0).
    pub fn plain(nvars: usize) -> Self {
        let keys = (0..nvars).map(|id| (0, MatrixTag::Y, 0, id)).collect();
        Self::from_blocks(OrderKind::PlainDegRevLex, None, keys)
    }

    /// Degrevlex over the shape's variables ranked by tag, row, column.
    pub fn plain_for(shape: Shape) -> Self {
        let keys = shape.layout().into_iter().map(|(tag, r, c)| (0, tag, r, c)).collect();
        Self::from_blocks(OrderKind::PlainDegRevLex, Some(shape), keys)
    }

    pub fn symplectic(t: usize, n: usize) -> Self {
        let shape = Shape::Symplectic { t, n };
        let blocks = symplectic_block_matrix(t, n);
        let keys = shape
            .layout()
            .into_iter()
            .map(|(tag, r, c)| (blocks[r - 1][c - 1], tag, r, c))
            .collect();
        Self::from_blocks(OrderKind::SymplecticBlocks { t, n }, Some(shape), keys)
    }

    pub fn gl(m: usize, t: usize, n: usize) -> Result<Self> {
        let shape = Shape::GeneralLinear { m, t, n };
        let (yb, zb) = gl_block_matrices(m, t, n)?;
        let keys = shape
            .layout()
            .into_iter()
            .map(|(tag, r, c)| {
                let b = match tag {
                    MatrixTag::Y => yb[r - 1][c - 1],
                    _ => zb[r - 1][c - 1],
                };
                (b, tag, r, c)
            })
            .collect();
        Ok(Self::from_blocks(OrderKind::GlBlocks { m, t, n }, Some(shape), keys))
    }

    /// The block order attached to `shape`.
    pub fn for_shape(shape: Shape) -> Result<Self> {
        match shape {
            Shape::Symplectic { t, n } => Ok(Self::symplectic(t, n)),
            Shape::GeneralLinear { m, t, n } => Self::gl(m, t, n),
        }
    }

    /// Product order with `num_outer` trailing auxiliary variables dominating
    /// this order.
    pub fn elimination(&self, num_outer: usize) -> Self {
        let base = self.num_vars();
        let outer: Vec<usize> = (base..base + num_outer).collect();
        let mut block_of = self.block_of.clone();
        let mut rank = self.rank.clone();
        let top_block = block_of.iter().copied().max().unwrap_or(0) + 1;
        for (k, _) in outer.iter().enumerate() {
            block_of.push(top_block);
            rank.push((base + k) as u32);
        }
        BlockOrder {
            kind: OrderKind::ProductElimination { outer: outer.clone(), inner: Box::new(self.kind.clone()) },
            shape: self.shape,
            block_of,
            rank,
            by_rank: self.by_rank.clone(),
            outer: {
                let mut o = self.outer.clone();
                o.extend(outer);
                o
            },
        }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn shape(&self) -> Option<Shape> {
        self.shape
    }

    pub fn num_vars(&self) -> usize {
        self.rank.len()
    }

    pub fn block_of(&self, id: usize) -> u32 {
        self.block_of[id]
    }

    pub fn rank_of(&self, id: usize) -> u32 {
        self.rank[id]
    }

    pub fn outer_vars(&self) -> &[usize] {
        &self.outer
    }

    pub(crate) fn check_arity(&self, nvars: usize) -> Result<()> {
        if nvars == self.num_vars() {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    /// Compares monomials over this order's ring.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.check_arity(a.num_vars())?;
        self.check_arity(b.num_vars())?;
        Ok(self.compare(a, b))
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        if self.outer.is_empty() {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => revlex(&self.by_rank, ea, eb),
                o => o,
            }
        } else {
            let da: u32 = self.outer.iter().map(|&v| ea[v] as u32).sum();
            let db: u32 = self.outer.iter().map(|&v| eb[v] as u32).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            match revlex(&self.outer, ea, eb) {
                Ordering::Equal => {}
                o => return o,
            }
            match (a.degree() - da).cmp(&(b.degree() - db)) {
                Ordering::Equal => revlex(&self.by_rank, ea, eb),
                o => o,
            }
        }
    }

    /// Block matrices for reports; `None` entries outside the shape.
    pub fn block_matrices(&self) -> (Vec<Vec<u32>>, Option<Vec<Vec<u32>>>) {
        let Some(shape) = self.shape else {
            return (vec![self.block_of.clone()], None);
        };
        let (yr, yc) = shape.y_dims();
        let (zr, zc) = shape.z_dims();
        let y = (0..yr).map(|r| (0..yc).map(|c| self.block_of[r * yc + c]).collect()).collect();
        let z = match shape {
            Shape::Symplectic { .. } => None,
            Shape::GeneralLinear { .. } => {
                let off = yr * yc;
                Some((0..zr).map(|r| (0..zc).map(|c| self.block_of[off + r * zc + c]).collect()).collect())
            }
        };
        (y, z)
    }

    pub fn descriptor(&self) -> OrderDescriptor {
        let (kind, params) = describe(&self.kind);
        let (block_matrix_y, block_matrix_z) = self.block_matrices();
        OrderDescriptor { kind, params, block_matrix_y, block_matrix_z }
    }
}

fn describe(kind: &OrderKind) -> (String, BTreeMap<String, usize>) {
    let mut params = BTreeMap::new();
    let name = match kind {
        OrderKind::SymplecticBlocks { t, n } => {
            params.insert("t".into(), *t);
            params.insert("n".into(), *n);
            "symplectic_blocks"
        }
        OrderKind::GlBlocks { m, t, n } => {
            params.insert("m".into(), *m);
            params.insert("t".into(), *t);
            params.insert("n".into(), *n);
            "gl_blocks"
        }
        OrderKind::PlainDegRevLex => "plain_degrevlex",
        OrderKind::ProductElimination { outer, inner } => {
            let (_, inner_params) = describe(inner);
            params = inner_params;
            params.insert("outer".into(), outer.len());
            "product_elimination"
        }
    };
    (name.to_string(), params)
}

/// First difference scanning from the lowest rank decides: the monomial with
/// the smaller exponent there is larger.
#[inline]
fn revlex(by_rank: &[usize], a: &[u16], b: &[u16]) -> Ordering {
    for &v in by_rank {
        if a[v] != b[v] {
            return b[v].cmp(&a[v]);
        }
    }
    Ordering::Equal
}

/// JSON descriptor `{kind, params, block_matrix_Y, block_matrix_Z}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDescriptor {
    pub kind: String,
    pub params: BTreeMap<String, usize>,
    #[serde(rename = "block_matrix_Y")]
    pub block_matrix_y: Vec<Vec<u32>>,
    #[serde(rename = "block_matrix_Z")]
    pub block_matrix_z: Option<Vec<Vec<u32>>>,
}
