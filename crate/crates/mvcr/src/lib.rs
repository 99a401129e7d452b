//! Exact combinatorics of Mirković–Vilonen polytopes for simply-laced
//! semisimple root systems.
//!
//! The crate builds, from a Cartan matrix alone, the full desk-scale chain
//!
//! ```text
//! Weyl group ─→ GGMS data / pseudo-Weyl polytopes ─→ MV polytopes with the
//! Lusztig–Berenstein–Zelevinsky crystal structure ─→ Demazure crystals,
//! extremal MV polytopes, N-multiple maps and tensor-product embeddings
//! ```
//!
//! and verifies, by exhaustive enumeration in exact integer/rational
//! arithmetic, the polytopal estimates relating Demazure membership to
//! Minkowski sums of extremal MV polytopes:
//!
//! * `N·P ⊆ P_{x₁·λ} + ⋯ + P_{x_N·λ}` for every `P` in a Demazure crystal,
//!   where the `x_k` come from the tensor factorization `K_N(P)`;
//! * `P ⊆ P_{x·λ} = Conv(W_{≤x}·λ)` for every `P ∈ MV_x(λ)`;
//! * `P ⊆ P₁ + P₂` for tensor components with an extremal second factor.
//!
//! Everything is integer or rational: no floating point anywhere.
//!
//! Entry points: [`rootdata::CartanDatum`] and [`rootdata::WeylGroup`] for
//! the kernel, [`mvcrystal::MvCrystal::generate`] for crystals,
//! [`verify`] for the theorem harness, and the `mvcr` binary for the CLI.
//! The `examples/` directory walks through each capability.

pub mod cli;
pub mod demazure;
pub mod extremal;
pub mod mvcrystal;
pub mod polytope;
pub mod rootdata;
pub mod tensorops;
pub mod verify;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not simply-laced: {0}")]
    NonSimplyLaced(String),
    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),
    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("vertex difference at chamber `{chamber}` (edge {j}) is not a nonnegative multiple of the reflected simple coroot")]
    NotProportional { chamber: String, j: usize },
    #[error("move {move_desc} does not apply to word {word}")]
    InvalidMove { move_desc: String, word: String },
    #[error("move transport reached word {word} with conflicting Lusztig data (internal error)")]
    InconsistentTransport { word: String },
    #[error("vertex at chamber `{chamber}` leaves Conv(W·λ)")]
    OutsideHull { chamber: String },
    #[error("no reduced word of w0 starts with {0}")]
    NoWordStartingWithJ(usize),
    #[error(
        "chamber `{chamber}` received conflicting vertices from two reduced words (internal error)"
    )]
    InconsistentVertex { chamber: String },
    #[error("raising path hit a dead end (internal error)")]
    PathDeadEnd,
    #[error("no extremal factorization found with N <= {n_max}")]
    NotFound { n_max: usize },
    #[error("invalid configuration: {field}: {message}")]
    Config { field: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use rootdata::{CartanDatum, Coweight, ReducedWord, WeylElt, WeylGroup};
