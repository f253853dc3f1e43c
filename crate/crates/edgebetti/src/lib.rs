//! Graded Betti numbers of edge ideals and the combinatorics behind them:
//! independence-complex homology over prime fields, clique/independent-set
//! cover templates, criticality of small graphs, and exhaustive censuses.
//!
//! Start with the examples: `betti_table` and `heawood` for the homological
//! side, `coloring_templates` and `residue_criticality` for covers,
//! `clusters_dyck` for the parabolic family, `census` and `metagraph` for
//! the exhaustive studies.

#![warn(missing_debug_implementations, rust_2018_idioms)]

pub mod betti;
pub mod canon;
pub mod census;
pub mod clusters;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod templates;

pub use betti::{
    betti_table, hochster_entry, is_parabolic, parabolic_indices, regularity, BettiTable,
    ParabolicIndex,
};
pub use canon::{automorphism_count, canonical_form, isomorphic, CanonicalForm};
pub use census::{
    census, census_csv, census_json, census_long_csv, greedy_induced_matching,
    homogeneous_census, induced_matching_number, is_induced_matching, matching_average,
    metagraph, metagraph_connectivity, regularity_census, template_cluster_containment,
    CensusRow, ContainmentCensus, HomogeneousCensus, MatchingAverage, MetaGraphReport,
    RegularityCensus,
};
pub use clusters::{
    catalan, cluster_graph, cluster_to_dyck, dyck_to_cluster, parabolic_clusters,
    row_pattern_graph, section6_graph, ClusterSpec, DyckPath,
};
pub use complex::{independence_complex, SimplicialComplex};
pub use enumerate::{enumerate_trees, enumerate_unlabeled, sample_graphs};
pub use error::{Error, Result};
pub use graph::{
    cluster, complete, complete_multipartite, cycle, disjoint_union, heawood, matching, path,
    Family, Graph, VertexSet, MAX_VERTICES,
};
pub use homology::{
    homology_in_degree, independence_homology, reduced_homology, FieldSpec, HomologyProfile,
};
pub use templates::{
    coloring_number, cover, is_critical_desk, is_template, p_family, residue_family,
    verify_certificate, ColoringNumber, CoverCertificate, CriticalityReport, CriticalityVerdict,
};
