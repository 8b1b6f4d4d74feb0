//! Planar maps, bipolar orientations and transversal structures.

pub mod bipolar;
pub mod decorated;
pub mod grid;
pub mod planar;
pub mod transversal;

pub use bipolar::{bipolar_checks, validate_bipolar, BipolarChecks, BipolarError, BipolarMap, EdgeColor, FaceInfo, FaceType, MapJson, Upward};
pub use decorated::{decoration_fits, DecoratedBipolar, DecorationError, DecorationKind};
pub use grid::{grid_quad_formula, grid_transversal};
pub use planar::{HalfEdgeRecord, MapError, PlanarMap};
pub use transversal::{single_vertex_transversal, validate_transversal, TransversalError, TransversalStructure};
