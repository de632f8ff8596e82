//! Covering the edges of digraphs with directed cuts.
//!
//! * [`digraph`]: simple digraphs, D(k,l) membership, edge-list I/O.
//! * [`colors`]: the ten 2-subset colors, `c(n)`, antichain code words.
//! * [`cover`]: cut covers, verification, coloring-based constructions.
//! * [`good_coloring`]: good colorings and the five-cut cover of D(4,4).
//! * [`exact`]: exact cover-number search and DIMACS export.
//! * [`instances`]: complete digraphs, the circulant tournament, the
//!   49-vertex witness digraph, random D(k,l) members.

pub mod colors;
pub mod cover;
pub mod digraph;
pub mod dot;
pub mod exact;
pub mod good_coloring;
pub mod instances;

pub use colors::{adjacent, antichain_codes, c_of_n, common_neighbors, cross_neighbor_pair, CodeWord, Color, ColorSet};
pub use cover::{
    cover_from_codes, cover_via_coloring, degeneracy_order, greedy_color_underlying, prune_idle_cuts, theorem3_cover,
    verify_cover, CoverCheck, CutCover,
};
pub use digraph::{
    find_bipartition, parse_edge_list, restricted_degrees, to_edge_list, Bipartition, Digraph, RestrictedDegrees, Side,
    Vertex,
};
pub use dot::export_dot;
pub use exact::{exists_cover, export_cnf, min_cover_number, MinCover, SearchBudget, SearchOptions, SearchResult, SearchStatus};
pub use good_coloring::{cuts_from_good_coloring, is_good_coloring, theorem4_cover, Coloring, GoodColoringCertificate};
pub use instances::{build_dstar, circulant_tournament7, complete_digraph, random_dkl, DStarLabels};
