#![no_std]
//! Generalized Schur algebras over based quasi-hereditary superalgebras, computed exactly.
extern crate alloc;

pub mod algebra;
pub mod cellular;
pub mod charac;
pub mod codet;
pub mod decomp;
pub mod error;
pub mod heredity;
pub mod linalg;
pub mod partition;
pub mod ring;
pub mod rsk;
pub mod schur;
pub mod straighten;
pub mod tableau;
pub mod tstructure;

pub use error::{Error, Result};
