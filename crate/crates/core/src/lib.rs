pub mod algebra;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod oracle;
pub mod pipeline;
pub mod polyring;
pub mod tower;
pub mod workbench;

pub use error::{Error, Result};
