pub mod algebra;
pub mod coeff;
pub mod error;
pub mod gorenstein;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod locus;
pub mod minors;
pub mod module;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod report;
pub mod verify;
