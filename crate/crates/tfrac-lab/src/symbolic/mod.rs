//! Exact symbolic arithmetic: indexed symbols, sparse integer polynomials,
//! truncated power series, and a thin rational-coefficient layer.

pub mod poly;
pub mod rational;
pub mod series;
pub mod symbol;

pub use poly::{Monomial, Poly, PolyParseError};
pub use rational::QPoly;
pub use series::{Series, SeriesError};
pub use symbol::{IndexedSymbol, Indices};
