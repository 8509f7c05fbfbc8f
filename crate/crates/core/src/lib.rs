//! Jeu de taquin, dual equivalence and Schubert structure constants on
//! cominuscule posets.

#![allow(clippy::needless_range_loop)]

pub mod dualequiv;
pub mod error;
pub mod exec;
pub mod growth;
pub mod jdt;
pub mod json;
pub mod render;
pub mod rootsys;
pub mod schubert;
pub mod shapes;

pub use error::{Error, Result};
pub use exec::Exec;
