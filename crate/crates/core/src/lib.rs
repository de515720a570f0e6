//! Finite-dimensional modules over small algebras, the exact category of
//! pairs `(X, Y)` attached to a square-zero ideal, its abelian envelope of
//! quadruples, and exact K₀ computations over all of them.
//!
//! Linear algebra is generic over [`field::Field`]; anything that enumerates
//! (submodules, isomorphisms, simples) needs a [`field::FiniteField`].

pub mod algebra;
pub mod auslander;
pub mod category;
pub mod check;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod grothendieck;
pub mod instance;
pub mod lattice;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod pair;
pub mod sampling;
pub mod snf;
pub mod subspace;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};

pub type F2 = field::Fp<2>;
pub type F3 = field::Fp<3>;
pub type F5 = field::Fp<5>;
pub type F7 = field::Fp<7>;

pub type Q = num_rational::Rational64;

/// Matrices over the rationals; the linear algebra works, enumeration does not.
pub type MatrixQ = matrix::Matrix<Q>;
pub type MatrixF2 = matrix::Matrix<F2>;
pub type ModuleF2 = module::ModuleRep<F2>;
pub type InstanceF2 = instance::Instance<F2>;
