//! Generalized Fibonacci and Lucas cubes.
//!
//! The independent sets of the `h`-th power of a path (or cycle) on `n`
//! vertices, ordered by inclusion, form a Hasse diagram; for `h = 1` these are
//! the Fibonacci cube `Γ_n` and the Lucas cube `Λ_n`. This crate builds the
//! graphs and diagrams, counts vertices and edges by closed forms,
//! recurrences and sequence convolutions, and cross-checks all of them
//! against brute-force enumeration.
//!
//! ```
//! use gapcube::{counting, GapGraph, cube};
//!
//! // Γ_6 has 21 vertices and 38 edges.
//! assert_eq!(counting::path_count(6, 1), 21u32.into());
//! assert_eq!(counting::path_edges_conv(6, 1).unwrap(), 38u32.into());
//! let gamma6 = cube::build_cube(&GapGraph::path(6, 1)).unwrap();
//! assert_eq!(gamma6.edge_count(), 38);
//! ```

pub mod counting;
pub mod cube;
pub mod enumeration;
pub mod error;
pub mod graphs;
pub mod verify;

pub use counting::{CountTable, Engine, HSequence, Mutation, Nat, SeqKind};
pub use cube::{build_cube, CubeGraph};
pub use enumeration::{Enumerator, VertexMask};
pub use error::{Error, Result};
pub use graphs::{EdgeList, GapGraph, GraphKind};
pub use verify::{IdentityReport, Status, SweepBounds};
