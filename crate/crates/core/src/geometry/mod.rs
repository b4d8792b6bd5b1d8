//! Line arrangements over an exact ordered field and their face posets.

pub mod arrangement;
pub mod catalog;
pub mod decone;
pub mod faces;
pub mod intersection;

pub use arrangement::{
    parse_arrangement, parse_central, parse_file, Arrangement, ArrangementFile, CentralArrangement, Line, Point,
};
pub use catalog::{catalog, central_catalog};
pub use decone::{cone, decone};
pub use faces::{face_poset, EdgeInfo, Face, FacePoset, RotationItem};
pub use intersection::{intersection_data, IntersectionData, IntersectionPoint};
