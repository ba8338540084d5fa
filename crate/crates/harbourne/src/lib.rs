//! Exact arithmetic for the local negativity of curve arrangements.
//!
//! The library models an arrangement of curves on a surface (the projective
//! plane or an abelian surface) purely by its combinatorial data: component
//! classes (genus, self-intersection, count) and the singularity spectrum
//! `t_k` counting the ordinary k-fold points. On top of that it computes
//! Harbourne indices `H(C, P) = (C')^2 / |P|` for the strict transform `C'`
//! under blow-up at a point set `P`, the exact minimum over subsets of the
//! singular points, normalized Chern invariants of abelian covers branched
//! over the arrangement, and a collection of negativity inequalities that
//! constrain which spectra can occur.
//!
//! Everything is exact: all quantities are big integers or big rationals,
//! floating point only ever appears in display formatting.
//!
//! With the `parallel` feature (on by default) the row sweeps and the
//! subset minimization have rayon-backed variants (`*_par`), and the
//! un-suffixed entry points dispatch to them for large inputs; the `*_seq`
//! variants are always compiled and serve as the fallback.

pub mod arrangement;
pub mod bounds;
pub mod catalog;
pub mod cover;
pub mod error;
pub mod hindex;
pub mod rat;
pub mod spectrum;

pub use arrangement::{Arrangement, ComponentClass, Surface, Warning};
pub use bounds::BoundResult;
pub use catalog::CatalogEntry;
pub use cover::{BallQuotientReport, CoverInvariants};
pub use error::Error;
pub use hindex::{HReport, Witness};
pub use rat::Rat;
pub use spectrum::{Moments, Spectrum};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
