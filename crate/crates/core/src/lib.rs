//! Graph products of groups with decidable normal forms, the glued proper
//! conditionally negative definite function `phi_Gamma = l_r + phi~` built
//! from CND functions on the vertex groups, and numerical certification of
//! its properties on finite balls of the Cayley graph.
//!
//! ```
//! use graphprod::{GraphSpec, GroupKind, kernel::phi_gamma};
//!
//! // Z/2 * Z/2, the infinite dihedral group.
//! let graph = GraphSpec::edgeless(vec![GroupKind::Cyclic(2); 2]).unwrap();
//! let word = graph.parse_word("v0:1; v1:1; v0:1").unwrap();
//! let g = graph.normalize(&word).unwrap();
//! assert_eq!(g.len(), 3);
//! assert_eq!(phi_gamma(&g), 6.0);
//! ```

pub mod error;
pub mod graph;
pub mod group;
pub mod kernel;
pub mod linalg;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::GraphSpec;
pub use group::{GroupKind, VertexElement};
pub use kernel::{AbstractVector, CosetKey, Glued};
pub use word::{NormalForm, Syllable};
