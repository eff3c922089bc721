//! Graphs of maximum point tolerance: representations, orders, geometry,
//! solvers and certificates, with exhaustive oracles for small instances.

pub mod certificates;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod lsystem;
pub mod optimization;
pub mod oracle;
pub mod order;
pub mod rational;
pub mod reduction;
pub mod rep;
pub mod svg;

pub use certificates::{
    common_neighborhood_certificates, is_interval_graph, is_outerplanar, neighborhood_partition,
    non_mpt_family, recognize, IntervalObstruction, IntervalVerdict, MptCertificate,
    NeighborhoodPartition, Recognition,
};
pub use error::{Error, Result};
pub use geometry::{
    contact_lsystem_from_outerplanar, cyclic_segments_from_order, outerplanar_order,
    random_maximal_outerplanar, retract_to_subgraph, segment_intersection_graph, tangent_crossing,
    verify_contact, ContactLSystem, ContactReport, CyclicSegmentSystem, RationalPoint, Segment,
};
pub use graph::{CliqueCover, Coloring, Graph, VertexSet};
pub use lsystem::{
    interval_to_anchored_lsystem, rays_to_lsystem, rep_to_lsystem, LShape, LinearLSystem, Ray,
    RayDirection, RaySystem,
};
pub use optimization::{
    clique_cover_2approx, greedy_coloring, interval_clique_cover, max_weight_independent_set,
    WisResult,
};
pub use order::{
    brute_force_i_order, brute_force_mpt_order, order_from_rep, rep_from_order,
    two_interval_decomposition, verify_i_order, verify_mpt_order, OrderViolation, VertexOrder,
    ViolationKind,
};
pub use rational::Q;
pub use reduction::{
    coloring_hardness_reduction, random_arcs, suggest_cut, CircularArcRepresentation,
    ReductionCase, ReductionOutput,
};
pub use rep::{
    random_interval_rep, random_mpt_rep, IntervalRepresentation, MptRepresentation,
    PointedInterval,
};
pub use svg::{render_svg, RenderOptions, Scene};
