//! Strands algebras of pointed matched circles, absolute Z/2 gradings on bordered
//! Heegaard Floer data, canonical Lagrangians and the embedded index.

pub mod azgrading;
pub mod circle;
pub mod diagram;
pub mod error;
pub mod index;
pub mod io;
pub mod lagrangian;
pub mod linalg;
pub mod modules;
pub mod perm;
pub mod strands;
pub mod verify;

pub use circle::{PointedMatchedCircle, ReebChord};
pub use error::{Error, Result};
pub use index::{embedded_index, ChordTerm, Domain, RegionComplex};
pub use strands::{AlgebraElement, StrandsGenerator, ZElement, ZGen};

/// Exact rational measures (Euler measures, point measures, linking numbers).
pub type Rational = num_rational::Ratio<i64>;
/// Integer matrices used for intersection forms and lattices.
pub type IntMatrix = linalg::Matrix<i64>;
