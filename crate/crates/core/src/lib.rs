pub mod error;
pub mod exactnum;
pub mod forms;
pub mod apolarity;
pub mod eigen;
pub mod locus;
pub mod critvar;
pub mod dynamics;
pub mod suite;

pub use error::{Error, Result};
