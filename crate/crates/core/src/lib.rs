//! Conditional events as Boolean fractions `(a|b)` over a finite sample
//! space, with three-valued semantics, exact conditional probability,
//! deductive relations and an exhaustive law checker.
//!
//! ```
//! use bfrac::lang::{format_conditional, lower, parse_expr, parse_space};
//!
//! let doc = parse_space("atoms 1 2 3 4 5 6\nevent two = {2}\nevent even = {2,4,6}").unwrap();
//! let c = lower(&parse_expr("two | even").unwrap(), &doc).unwrap();
//! assert_eq!(format_conditional(&c, &doc.space), "({2}|{2,4,6})");
//! ```

pub mod cea;
pub mod error;
pub mod event;
pub mod lang;
pub mod lawcheck;
pub mod prob;
pub mod rel;
pub mod schay;
pub mod trival;

pub use cea::{Conditional, Operations};
pub use error::{Error, ParseError, Result};
pub use event::{Event, SampleSpace};
pub use prob::{Measure, Probability};
pub use trival::TruthValue;
