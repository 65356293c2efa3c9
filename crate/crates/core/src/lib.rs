//! Halin graphs: seeded generation, recognition with an outer-cycle
//! certificate, optimal vertex coloring and a perfect elimination ordering of a
//! treewidth-3 chordal completion.
//!
//! ```
//! use halin_core::{color_halin, generate, peo_halin, recognize, GenSpec, Variant};
//!
//! let gen = generate(&GenSpec::new(Variant::Halin, 10, 7)).unwrap();
//! let cert = recognize(&gen.graph).unwrap();
//! let coloring = color_halin(&gen.graph, &cert).unwrap();
//! assert_eq!(coloring.num_colors(), 3);
//! let peo = peo_halin(&gen.graph, &cert).unwrap();
//! assert_eq!(peo.order.len(), 10);
//! ```

pub mod chordal;
pub mod coloring;
pub mod dot;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod recognition;
pub mod scaling;

pub use chordal::{chordal_completion, peo_halin, replay_trace, treewidth_from_peo, verify_peo, PeoError, PeoResult};
pub use coloring::{color_halin, color_halin_traced, ColoringCase, ColoringError, FanRun, VertexColoring};
pub use generators::{generate, GenError, GenSpec, Generated, Variant};
pub use graph::{Graph, GraphDoc, GraphError};
pub use recognition::{recognize, verify_halin, HalinCertificate, RejectReason, Rejection};
