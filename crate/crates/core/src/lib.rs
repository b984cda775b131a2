//! Exact machinery for del Pezzo surfaces with 1/3(1,1) points: lattice
//! algebra, cyclic quotient singularities, Fano polygons, GIT toric
//! varieties, toric intersection numbers, complete intersections, the
//! directed MMP, and re-verification of the classification tables.

pub mod cone;
pub mod error;
pub mod intersection;
pub mod invariants;
pub mod lattice;
pub mod mmp;
pub mod polygon;
pub mod poly;
pub mod registry;
pub mod sections;
pub mod singularity;
pub mod svg;
pub mod toric;
pub mod tools;
pub mod verify;

pub use error::{Error, Result};
