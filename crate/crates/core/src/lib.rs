//! Toolkit for the second Hankel determinant `H_2(2) = a_2 a_4 - a_3^2` of
//! starlike functions of order α.

pub mod caratheodory;
pub mod checks;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod search;
pub mod series;
pub mod starlike;

pub use error::{Error, Result};
