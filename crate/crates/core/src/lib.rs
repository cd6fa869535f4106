pub mod action;
pub mod coend;
pub mod comodule;
pub mod error;
pub mod hom;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod suite;
pub mod trace;
pub mod zoo;

pub use error::{Error, Result};
pub use linalg::{Field, LinearMap, Scalar};
