//! Kirillov-Reshetikhin crystals B^{2,s} of type D_n^(1): construction,
//! affine structure, energy functions and perfectness checks.

pub mod affine;
pub mod branching;
pub mod classical;
pub mod energy;
pub mod error;
pub mod graph;
pub mod model;
pub mod plactic;
pub mod shape_maps;
pub mod verify;
pub mod word;

pub use error::{CrystalError, Result};
pub use model::{ClassicalWeight, AffineWeight, Letter, LetterOrder, Tableau};
