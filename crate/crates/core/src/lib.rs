//! Exact-arithmetic engine for the cyclopermutohedron: the regular cell
//! complex on cyclically ordered partitions, its realization as a virtual
//! polytope built from a weighted Minkowski sum of line segments, the
//! mechanical check that the two structures agree, moduli-space
//! subcomplexes of planar polygonal linkages, and planar rendering of
//! virtual polytopes as closed chains.
//!
//! Every computation is exact rational; there are no tolerances anywhere.
//!
//! ```
//! use cyclop_core::{face, Direction};
//!
//! let xi: Direction = "7,3,2,0".parse().unwrap();
//! let edge = face(&xi).unwrap();
//! assert_eq!(edge.label.to_string(), "[1]|[4]|[3]|[2,5]");
//! assert_eq!(edge.dim, 1);
//! assert!(edge.is_diagonal());
//! ```

pub mod complex;
pub mod error;
pub mod geometry;
pub mod linkage;
pub mod partitions;
pub mod point;
pub mod rat;
pub mod render;
pub mod verify;

pub use complex::{build_complex, Cell, CellComplex};
pub use error::{Error, Result};
pub use geometry::{
    cluster_scheme, face, face_label, face_vertices, is_diagonal, perturb_for_refinement, q_face,
    r_face, representative_direction, support_value, vertex_coordinates, ClusterScheme, Direction,
    MeanPosition, SegmentBasis, SupportFace, VirtualFace,
};
pub use linkage::{
    build_moduli_complex, check_embedding, is_admissible, is_short, surface_report,
    verify_embedding, EmbeddingReport, Linkage, SurfaceReport,
};
pub use partitions::{enumerate_partitions, CyclicPartition, ReducedLabel};
pub use point::Point;
pub use rat::Rat;
pub use render::{
    face_base, face_chain, face_scene, minkowski_diff_chain, project_cp4, project_cp4_perturbed,
    render_svg, weighted_segment_chain, zonotope_polygon, Chain2, ConvexPolygon2, PlanarChart,
    Scene, Vec2, Weight,
};
pub use verify::{
    classify_two_faces, phi, verify_theorem1, IsomorphismReport, TwoFaceCensus, TwoFaceKind,
};
