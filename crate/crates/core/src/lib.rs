//! Exact arithmetic for friezes with coefficients on convex polygons.
//!
//! The crate validates friezes (labels on the edges and diagonals of a
//! polygon satisfying every Ptolemy relation), decides whether a frieze
//! occurs as a subpolygon of a Conway–Coxeter frieze, and constructs such
//! an embedding one vertex at a time. A brute-force search over all
//! triangulations serves as an independent oracle.
//!
//! ```
//! use frieze::{criterion, extend, Frieze};
//!
//! let square = Frieze::from_u64_rows(4, &[&[2, 26, 12], &[4, 2], &[2]]).unwrap();
//! assert!(criterion::is_embeddable(&square).embeddable());
//! let emb = extend::embed(&square, &mut extend::SmallestChoice).unwrap();
//! assert!(emb.cc.is_conway_coxeter());
//! ```

pub mod arith;
pub mod criterion;
pub mod extend;
pub mod frieze;
pub mod io;
pub mod oracle;
pub mod pattern;
pub mod render;
pub mod triangulation;

pub use crate::frieze::{Frieze, FriezeError, LabelTable, ValidationReport};
pub use crate::pattern::PatternWindow;
pub use crate::triangulation::{Quiddity, Triangulation};
