pub mod bicat;
pub mod bimonoid;
pub mod bracket;
pub mod cli;
pub mod error;
pub mod fincat;
pub mod gamma;
pub mod matmod;
pub mod nerve;
pub mod perm;
pub mod report;
pub mod sampling;

pub use error::{CatError, Result};
