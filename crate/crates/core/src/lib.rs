//! Exact grammar calculus: a formal-derivative engine over commuting letters,
//! the number triangles and brute-force oracles its expansions are compared
//! against, and an executable catalogue of the coefficient identities.
//!
//! ```
//! use grammar_calculus::{builtin, poly::{Polynomial, Style}};
//!
//! let g = builtin::descent();
//! let d2 = g.derive_n(&Polynomial::letter("x"), 2).unwrap();
//! assert_eq!(d2.to_text(Style::Juxtaposed), "x + 3xy + xy^2 + x^2y");
//! ```

pub mod builtin;
pub mod coeffs;
pub mod dsl;
pub mod grammar;
pub mod oracles;
pub mod poly;
pub mod triangles;
pub mod verifier;

pub use coeffs::{extract_coeffs, Axis, CoeffArray, IndexMap, PatternViolation};
pub use grammar::{Grammar, GrammarError};
pub use poly::{Letter, Monomial, Polynomial, Style};
