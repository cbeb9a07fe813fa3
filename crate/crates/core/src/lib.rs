//! Exact enumeration of lozenge tilings of semiregular hexagons with a
//! horizontal intrusion: closed-form products, brute-force oracles, and the
//! asymptotic estimates derived from the products.

#![no_std]

extern crate alloc;

pub mod asymptotics;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod oracle;
pub mod region;

pub use error::{Error, Result};
pub use exactnum::{ExactInt, ExactRational, HalfInteger};
pub use formulas::{CountSource, TilingCount};
pub use region::{Mark, Parity, Region, RegionSpec, TriCell};
