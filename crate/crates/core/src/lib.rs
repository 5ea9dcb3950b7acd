//! Exact computation of antipodal and strictly antipodal pairs of finite point
//! sets, with extremal constructions, bound tables, segment families and a
//! configuration search.

pub mod antipodality;
pub mod bounds;
pub mod config;
pub mod constructions;
pub mod error;
pub mod hull;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod rational;
pub mod search;
pub mod segments;
pub mod verify;

pub use config::{ConstructionSpec, PointConfig};
pub use error::{Error, Result};
pub use rational::{Point, Rational};
