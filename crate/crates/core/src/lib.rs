//! Exact discrete differential geometry on finite simple graphs.
//!
//! Every graph carries its Whitney complex: the simplicial complex whose
//! k-simplices are the complete subgraphs on k+1 vertices. This crate
//! computes the classical invariants of that complex (f-vectors, Euler
//! characteristic, Levitt curvature, Poincaré–Hopf indices, Betti numbers,
//! Lefschetz numbers, the Wu characteristic) with exact rational
//! arithmetic throughout, and machine-checks the algebraic identities that
//! tie them together under the strong product, the Zykov join and the
//! disjoint union:
//!
//! * Gauss–Bonnet: the curvatures at the vertices sum to χ.
//! * Poincaré–Hopf: the indices of any locally injective vertex function
//!   sum to χ, and curvature is the index expectation over random
//!   functions.
//! * The curvature of a strong product splits as `K(x,y) = K(x)·K(y)`,
//!   and so do the Poincaré–Hopf indices of tensor colorings.
//! * Poincaré polynomials are multiplicative under the strong product
//!   (Künneth), and Lefschetz numbers of product endomorphisms multiply.
//! * The Wu characteristic admits a local curvature that sums correctly
//!   but does *not* multiply under the strong product.
//!
//! Graphs combine into a commutative ring (disjoint union as addition,
//! strong product as multiplication) in [`ring`]; a small expression
//! language for that ring lives in [`expr`]; the seeded verification
//! suites behind the command line front end live in [`verify`].
//!
//! Nothing here uses floating point except the clearly labeled Monte-Carlo
//! standard-error diagnostics.

pub mod curvature;
pub mod expr;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod io;
pub mod morse;
pub mod rational;
pub mod ring;
pub mod simplicial;
pub mod verify;
pub mod wu;

mod vset;

pub use curvature::{curvature, curvatures, gauss_bonnet_report, CurvatureMap};
pub use graph::{Graph, Label, VertexId};
pub use rational::Rational;
pub use simplicial::{
    enumerate_cliques, euler_characteristic, f_vector, generating_function,
    generating_function_recursive, FVector, Simplex, SimplexPolynomial,
};

/// Resource guard for operations whose cost is governed by the size of a
/// clique complex. Enumeration and counting abort with [`Error::Budget`]
/// instead of exhausting memory or time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of simplices visited in a single enumeration.
    pub max_simplices: u64,
}

impl Limits {
    pub const DEFAULT_MAX_SIMPLICES: u64 = 10_000_000;

    pub fn new(max_simplices: u64) -> Self {
        Limits { max_simplices }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_simplices: Self::DEFAULT_MAX_SIMPLICES,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("simplex budget of {limit} exceeded")]
    Budget { limit: u64 },

    #[error("vertex function is not locally injective: vertices {0:?} and {1:?} are adjacent with equal values")]
    NotLocallyInjective(String, String),

    #[error("random coloring retries exhausted after {0} attempts")]
    RetriesExhausted(u32),

    #[error("tensor coloring collision: adjacent product vertices {0:?} and {1:?} received equal values")]
    TensorCollision(String, String),

    #[error("not a graph endomorphism: {0}")]
    NotEndomorphism(String),

    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
