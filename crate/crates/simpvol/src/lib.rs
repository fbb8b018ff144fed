//! Face-glued simplex complexes ("pseudomanifolds") and the combinatorial
//! and numerical machinery around them: triangulation generators for
//! handlebodies and surface-times-interval products, boundary extraction,
//! orientability and vertex-link checks, integral homology, counting
//! certificates for simplicial-volume lower bounds, and hyperbolic volume
//! evaluators built on the Lobachevsky function.
//!
//! The central type is [`Pseudomanifold`]: a finite set of `n`-simplices
//! together with affine pairings of their codimension-one faces, each face
//! appearing in at most one pairing. Everything else is derived from that
//! data.

mod dsu;
mod snf;

pub mod bounds;
pub mod generators;
pub mod hypervol;
pub mod pseudomanifold;
pub mod surfaces;

pub use pseudomanifold::{
    Diagnostic, DualGraph, FaceClassTable, Gluing, HomologyGroup, Orientability, Pseudomanifold,
    VertexLink,
};

use thiserror::Error;

/// Errors reported by operations with preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid pseudomanifold: {}", format_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("{0}")]
    Precondition(String),
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
