//! Binary LCD codes with an automorphism of odd prime order: GF(2) code
//! analytics, arithmetic in `F_2[x]/(x^p - 1)`, the decomposition of a
//! `σ`-invariant code into `C_π` and module components, LCD criteria at each
//! level, permutation equivalence, and the classification campaigns.

pub mod campaigns;
pub mod cyclotomic;
pub mod decomposition;
pub mod equivalence;
pub mod error;
pub mod gf2;
pub mod lcd;

pub use error::{Error, Result};
pub use gf2::{BinaryCode, BitVector, WeightEnumerator};
