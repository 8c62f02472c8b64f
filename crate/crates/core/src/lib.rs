//! Extending structures of finite-dimensional alternative and
//! pre-alternative algebras over exact fields.

pub mod algebra;
pub mod bilinear;
pub mod bimodule;
pub mod blocks;
pub mod cayley_dickson;
pub mod classify;
pub mod complements;
pub mod error;
pub mod field;
pub mod flag;
pub mod io;
pub mod library;
pub mod linear;
pub mod pre_unified;
pub mod printed;
pub mod products;
pub mod registry;
pub mod report;
pub mod sample;
pub mod space;
pub mod unified;
pub mod vector;

pub use algebra::{Algebra, PreAlgebra, Verdict, Witness};
pub use bilinear::BilinearMap;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linear::{LinearFunctional, LinearMap};
pub use space::Space;
