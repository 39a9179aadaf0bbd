//! Exact linear-algebra toolkit for rigidity of generator tuples in finite
//! matrix groups and for homomorphism censuses of triangle groups.

pub mod adjoint;
pub mod census;
pub mod cli;
pub mod coinv;
pub mod error;
pub mod ff;
pub mod matgrp;
pub mod rigidity;
pub mod rootdata;

pub use error::{Error, Result};
