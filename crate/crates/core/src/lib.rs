//! Betti tables, Koszul classification and Hilbert series of maximal
//! Cohen-Macaulay modules over cones of elliptic normal curves and over the
//! minimal elliptic singularities Ẽ7 and Ẽ8.
//!
//! ```
//! use ellbetti::betti::{betti_table, ModuleDescriptor, Window};
//! use ellbetti::charge::Charge;
//! use ellbetti::{koszul, series};
//!
//! # fn main() -> ellbetti::error::Result<()> {
//! let m = ModuleDescriptor::generic(5, 1, 4)?;
//! let table = betti_table(&m, Window::new(0, 6));
//! assert_eq!(table.get(3, 3), 76.into());
//! assert!(koszul::is_koszul(&m).verdict);
//! let p = series::poincare_koszul(5, &Charge::new(1, 4))?;
//! assert_eq!(p.to_string(), "(4 - t) / (1 - 3t + t^2)");
//! # Ok(())
//! # }
//! ```

pub mod betti;
pub mod charge;
pub mod cli;
pub mod cohom;
pub mod error;
pub mod json;
pub mod kbundle;
pub mod koszul;
pub mod minell;
pub mod oracle;
pub mod qfield;
pub mod render;
pub mod series;
pub mod svg;
pub mod verify;

pub use betti::{betti_entry, betti_table, BettiTable, ModuleDescriptor, Window};
pub use charge::{Charge, LatticeMap};
pub use cohom::SpecialityOracle;
pub use error::{Error, Result};
pub use qfield::QuadNum;
pub use series::{IntPolynomial, RationalFunction};
