//! Demazure crystals, Demazure atoms and extremal subsets of type A
//! highest weight crystals realized on semistandard tableaux.

pub mod crystal;
pub mod demazure;
pub mod error;
pub mod extremal;
pub mod golden;
pub mod poly;
pub mod reproduce;
pub mod tableau;
pub mod tensor;
pub mod weyl;

pub use crystal::{Crystal, CrystalGraph, CrystalSubset, HighestWeightCrystal, VertexId};
pub use demazure::Demazure;
pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial};
pub use tableau::{Partition, Tableau};
pub use tensor::TensorCrystal;
pub use weyl::{LowerOrderIdeal, ReducedWord, WeylElement};
