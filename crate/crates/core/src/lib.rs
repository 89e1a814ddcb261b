//! Exact Gröbner-basis machinery for the nullcones of the symplectic and
//! general linear group actions.

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideals;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod report;
pub mod ring;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use groebner::{buchberger, buchberger_with, GbConfig, GroebnerBasis};
pub use ideals::IdealGens;
pub use monomial::Monomial;
pub use order::{BlockOrder, OrderKind};
pub use poly::Polynomial;
pub use ring::{MatrixTag, Ring, Shape, Variable};
