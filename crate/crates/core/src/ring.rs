//! Ambient polynomial rings `K[Y]` and `K[Y, Z]` with their indeterminates.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;

/// Which matrix an indeterminate belongs to. `U` marks auxiliary variables
/// adjoined for elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixTag {
    Y,
    Z,
    U,
}

impl MatrixTag {
    fn letter(self) -> char {
        match self {
            MatrixTag::Y => 'y',
            MatrixTag::Z => 'z',
            MatrixTag::U => 'u',
        }
    }
}

/// An indeterminate `y[row,col]` or `z[row,col]` with its dense id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub tag: MatrixTag,
    pub row: usize,
    pub col: usize,
    pub id: usize,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            MatrixTag::U => write!(f, "u[{}]", self.row),
            tag => write!(f, "{}[{},{}]", tag.letter(), self.row, self.col),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// `Y` is `2t x n`.
    Symplectic { t: usize, n: usize },
    /// `Y` is `m x t`, `Z` is `t x n`.
    GeneralLinear { m: usize, t: usize, n: usize },
}

impl Shape {
    pub fn y_dims(&self) -> (usize, usize) {
        match *self {
            Shape::Symplectic { t, n } => (2 * t, n),
            Shape::GeneralLinear { m, t, .. } => (m, t),
        }
    }

    pub fn z_dims(&self) -> (usize, usize) {
        match *self {
            Shape::Symplectic { .. } => (0, 0),
            Shape::GeneralLinear { t, n, .. } => (t, n),
        }
    }

    /// Matrix entries in dense-id order: y's row-major, then z's row-major.
    pub fn layout(&self) -> Vec<(MatrixTag, usize, usize)> {
        let (yr, yc) = self.y_dims();
        let (zr, zc) = self.z_dims();
        let mut out = Vec::with_capacity(yr * yc + zr * zc);
        for (tag, rows, cols) in [(MatrixTag::Y, yr, yc), (MatrixTag::Z, zr, zc)] {
            for row in 1..=rows {
                for col in 1..=cols {
                    out.push((tag, row, col));
                }
            }
        }
        out
    }

    pub fn num_vars(&self) -> usize {
        let (yr, yc) = self.y_dims();
        let (zr, zc) = self.z_dims();
        yr * yc + zr * zc
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Symplectic { t, n } => write!(f, "symplectic(t={t}, n={n})"),
            Shape::GeneralLinear { m, t, n } => write!(f, "gl(m={m}, t={t}, n={n})"),
        }
    }
}

/// A polynomial ring over `field` whose variables are the matrix entries of
/// `shape`, numbered y's row-major then z's row-major, followed by any
/// auxiliary variables.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    field: F,
    shape: Shape,
    vars: Vec<Variable>,
    index: HashMap<(MatrixTag, usize, usize), usize>,
    aux: usize,
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.shape == other.shape && self.aux == other.aux
    }
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, shape: Shape) -> Result<Arc<Self>> {
        let (yr, yc) = shape.y_dims();
        let (zr, zc) = shape.z_dims();
        if yr == 0 || yc == 0 {
            return Err(AlgebraError::Shape(format!("{shape}: empty matrix")));
        }
        if matches!(shape, Shape::GeneralLinear { .. }) && (zr == 0 || zc == 0) {
            return Err(AlgebraError::Shape(format!("{shape}: empty matrix")));
        }
        let vars = shape
            .layout()
            .into_iter()
            .enumerate()
            .map(|(id, (tag, row, col))| Variable { tag, row, col, id })
            .collect();
        Ok(Arc::new(Self::from_vars(field, shape, vars, 0)))
    }

    pub fn symplectic(field: F, t: usize, n: usize) -> Result<Arc<Self>> {
        Self::new(field, Shape::Symplectic { t, n })
    }

    pub fn general_linear(field: F, m: usize, t: usize, n: usize) -> Result<Arc<Self>> {
        Self::new(field, Shape::GeneralLinear { m, t, n })
    }

    fn from_vars(field: F, shape: Shape, vars: Vec<Variable>, aux: usize) -> Self {
        let index = vars.iter().map(|v| ((v.tag, v.row, v.col), v.id)).collect();
        Ring { field, shape, vars, index, aux }
    }

    /// The same ring with `k` auxiliary variables `u[1..=k]` appended.
    pub fn with_aux(&self, k: usize) -> Arc<Self> {
        let mut vars = self.vars.clone();
        for i in 1..=k {
            let row = self.aux + i;
            vars.push(Variable { tag: MatrixTag::U, row, col: 0, id: vars.len() });
        }
        Arc::new(Self::from_vars(self.field.clone(), self.shape, vars, self.aux + k))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Number of auxiliary variables (always the trailing ids).
    pub fn num_aux(&self) -> usize {
        self.aux
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var(&self, id: usize) -> &Variable {
        &self.vars[id]
    }

    pub fn lookup(&self, tag: MatrixTag, row: usize, col: usize) -> Result<usize> {
        self.index
            .get(&(tag, row, col))
            .copied()
            .ok_or_else(|| AlgebraError::ForeignVariable(format!("{}[{row},{col}]", tag.letter())))
    }

    pub fn y(&self, row: usize, col: usize) -> Result<usize> {
        self.lookup(MatrixTag::Y, row, col)
    }

    pub fn z(&self, row: usize, col: usize) -> Result<usize> {
        self.lookup(MatrixTag::Z, row, col)
    }

    pub fn aux_var(&self, k: usize) -> Result<usize> {
        self.lookup(MatrixTag::U, k, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn variable_counts() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(Ring::symplectic(f, 2, 4).unwrap().num_vars(), 16);
        assert_eq!(Ring::general_linear(f, 5, 3, 5).unwrap().num_vars(), 30);
    }

    #[test]
    fn dense_ids_are_row_major_y_then_z() {
        let r = Ring::general_linear(PrimeField::new(3).unwrap(), 2, 2, 3).unwrap();
        assert_eq!(r.y(1, 1).unwrap(), 0);
        assert_eq!(r.y(1, 2).unwrap(), 1);
        assert_eq!(r.y(2, 1).unwrap(), 2);
        assert_eq!(r.z(1, 1).unwrap(), 4);
        assert_eq!(r.z(2, 3).unwrap(), 9);
        assert!(r.y(3, 1).is_err());
        assert_eq!(r.var(9).to_string(), "z[2,3]");
    }

    #[test]
    fn aux_variables_append() {
        let r = Ring::symplectic(PrimeField::new(2).unwrap(), 1, 2).unwrap();
        let e = r.with_aux(1);
        assert_eq!(e.num_vars(), 5);
        assert_eq!(e.aux_var(1).unwrap(), 4);
        assert_eq!(e.var(4).to_string(), "u[1]");
        assert!(r.as_ref() != e.as_ref());
    }
}
