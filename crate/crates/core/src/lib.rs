//! Exact combinatorial toolkit for drawings in which every edge is
//! crossed at most once.
//!
//! The crate represents such drawings exactly (abstract graph, crossing
//! pairing, rotation system), derives planarizations and faces, decides
//! drawing-level maximality with placement witnesses, extracts skeletons
//! and classifies edges, certifies the count inequality
//! 9p + 10e + 7c >= 20n - 30 by an incremental build-up that is verified
//! independently, bounds edge density from below by 20N/9 - 10/3 in exact
//! rational arithmetic, and enumerates all maximal drawings for tiny
//! vertex counts.

pub mod analysis;
pub mod bounds;
pub mod canon;
pub mod census;
pub mod certify;
pub mod drawing;
pub mod error;
pub mod generate;
pub mod insert;
pub mod planar;
pub mod render;
pub mod report;
pub mod saturate;

pub use drawing::OnePlaneDrawing;
