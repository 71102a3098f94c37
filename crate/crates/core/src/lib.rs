//! Exact combinatorics of bipartite plane maps: blossoming-tree
//! bijections driven by fractional orientations, exhaustive small-size
//! oracles, and exact rational generating series (including the quartic
//! Ising model).

pub mod dual;
pub mod error;
pub mod map;

pub use error::{Error, Result};
pub use map::{Color, DartId, DegreeProfile, FaceId, PlaneMap, SpinConfiguration, VertexId};
