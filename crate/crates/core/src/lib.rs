//! Exact enumeration, bijections and level statistics for weighted
//! generalized Motzkin, Dyck, Motzkin and Schröder lattice paths.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod paths;
pub mod poly;
pub mod riordan;
pub mod series;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use paths::{
    BicoloredMotzkinPath, BicoloredStep, ColoredDyckPath, ColoredDyckStep, DyckPath, DyckStep,
    FamilyKind, GMotzkinPath, GStep, HColor, HString, MarkedMotzkinPath, MarkedStep, Path,
    PathFamily, Pattern, Prefix, SchroderPath, SchroderStep, Step, Surface,
};
pub use poly::{weight, Monomial, Polynomial, Weighable, Weighting};
