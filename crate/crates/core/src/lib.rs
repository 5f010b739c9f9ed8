//! Exact concordance obstructions to alternating knots.
//!
//! The crate computes Levine–Tristram signatures and their jumps from Seifert
//! matrices, Upsilon functions of torus knots from their staircases, and
//! combines them into lower bounds on the genus and the number of double
//! points of any cobordism / singular concordance from a knot to an
//! alternating knot. All arithmetic is exact.

pub mod concordance;
pub mod expr;
pub mod poly;
pub mod rational;
pub mod render;
pub mod seifert;
pub mod upsilon;

pub use poly::IntLaurentPoly;
pub use rational::Rational;
