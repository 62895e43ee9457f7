//! Exact Binomial and Invert transforms of linear recurrent sequences.
//!
//! The interpolated operators `L^(y)` and `I^(x)` act on sequence prefixes
//! (stream level) and on [`Lrs`] values, where they transform the
//! characteristic polynomial in closed form. Together with the shifts σ and
//! ρ they construct every impulse sequence from the startsequence
//! `(1, 0, 0, …)` and deconstruct it back ([`pipeline`]).
//!
//! All arithmetic is exact, over Q ([`Rat`]) or a quadratic field Q(√d)
//! ([`QuadExt`]).
//!
//! ```
//! use binvert_core::{FieldSpec, Lrs, Pipeline, Rat};
//!
//! let pipe = Pipeline::<Rat>::parse_in("I(1) . rho . I(1)", FieldSpec::Rational).unwrap();
//! let fib = pipe.apply(&Lrs::startsequence());
//! assert_eq!(fib.char_poly().to_string(), "t^2 - t - 1");
//! assert_eq!(fib.terms(8), [0, 1, 1, 2, 3, 5, 8, 13].map(Rat::from));
//! ```

pub mod apps;
pub mod arith;
pub mod combinat;
pub mod error;
pub mod lrs;
pub mod operators;
pub mod pipeline;
pub mod poly;

pub use arith::{Field, FieldSpec, QuadExt, Rat};
pub use error::{Error, Result};
pub use lrs::{EventualLrs, GenFun, Lrs};
pub use operators::OperatorStep;
pub use pipeline::Pipeline;
pub use poly::Poly;
