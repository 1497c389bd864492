//! Exact computations on simply-laced Carter diagrams.
//!
//! A Carter diagram is a signed bicolored graph describing a set of linearly
//! independent roots. This crate builds its partial Cartan matrix `B_L`,
//! enumerates the linkage label vectors `v` in `{-1, 0, 1}^l` satisfying
//! `vᵀ B_L⁻¹ v < 2`, organizes them into a linkage system under dual
//! reflections (components, loctets, projections), and cross-checks all of
//! it against explicit root systems.
//!
//! ```
//! use carter_linkage::{catalog, PartialCartan, Rational};
//!
//! let pc = PartialCartan::new(&catalog::catalog("E6(a1)")?)?;
//! assert_eq!(pc.det(), Rational::from_int(3));
//! let links = carter_linkage::enumerate_linkages(&pc);
//! assert_eq!(links.len(), 54);
//! # Ok::<(), carter_linkage::LinkageError>(())
//! ```

pub mod cartan;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod linkage;
pub mod matrix;
pub mod orbit;
pub mod rational;
pub mod roots;

pub use cartan::PartialCartan;
pub use diagram::{CarterDiagram, Color, Edge, EdgeSign, VertexId, Violation};
pub use error::{LinkageError, Result};

pub use linkage::{beta_unicolored, enumerate_linkages, group_by_p, ExtensionSet, LinkageVector};
pub use matrix::{RMatrix, RVector};
pub use orbit::{build_system, dual_reflect, LinkageSystem, Loctet, LoctetType};

pub use rational::Rational;
pub use roots::{find_embedding, RootSystem};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/cartan.md")]
    mod cartan {}
    #[doc = include_str!("../../../book/src/linkages.md")]
    mod linkages {}
    #[doc = include_str!("../../../book/src/systems.md")]
    mod systems {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
