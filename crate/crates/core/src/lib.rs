//! Exact workbench for systems of arcs on punctured oriented surfaces.
//!
//! Surfaces are presented as ideal polygons with glued sides; arcs are
//! canonical crossing itineraries; geometric intersection numbers are
//! computed exactly by a strand-ordering engine and cross-checked by an
//! independent lift-enumeration oracle. On top sit the extremal
//! constructions, k-system verification, exhaustive clique search over
//! bounded-complexity universes, a chord-family lemma checker, and the
//! closed-form bound calculators.

pub mod arcs;
pub mod chords;
pub mod clique;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod intersection;
pub mod surface;
pub mod systems;

pub use arcs::{canonicalize, equals, is_essential, parse_arc, CanonicalArc, Itinerary};
pub use error::{Error, Result};
pub use intersection::{
    intersection_matrix, intersection_number, intersection_number_lifts, self_intersection,
    IntersectionMatrix, StrandOrder,
};
pub use surface::{parse_gluing, standard_planar_gluing, Crossing, SurfaceGluing};
pub use systems::{
    enumerate_arcs, extremal_search, parse_system, verify_k_system, ArcSystem, EndpointFilter,
    KSystemReport, SearchConfig, SearchResult,
};
