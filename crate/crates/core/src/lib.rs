//! Classification of quasi-smooth, well-formed del Pezzo surfaces that are
//! hypersurfaces in weighted projective 3-space.
//!
//! For a fixed Fano index `I` the answer is a finite list of parametric
//! series of weight systems `(a0,a1,a2,a3,d)` plus finitely many sporadic
//! quintuples. The crate provides:
//!
//! - [`conditions`]: well-formedness and quasi-smoothness tests, in a
//!   divisibility form and an independent monomial form;
//! - [`series`]: parametric series, expansion, membership and canonical keys;
//! - [`classify`]: the enumeration of colourful series for an index;
//! - [`tables`]: the embedded Type-IV data;
//! - [`oracle`]: a brute-force enumeration used as ground truth;
//! - [`obstructions`]: the two Kähler–Einstein obstructions;
//! - [`cli`]: the command-line front end.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod obstructions;
pub mod oracle;
pub mod series;
pub mod tables;
pub mod types;

pub use error::{Error, Result};
pub use types::{Classification, Quintuple, Series, SeriesClass};
