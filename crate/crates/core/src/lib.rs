//! Exact counting and minimization of proper list-coloring packings.
//!
//! A *packing* of size `k` for a graph `G` with a list assignment `L` is a
//! set of `k` proper `L`-colorings that are pairwise disjoint: no two of
//! them agree at any vertex. This crate counts such packings exactly with
//! arbitrary-precision integers, minimizes the count over all assignments
//! with lists of a given size, and checks the results against closed-form
//! values and exponential lower bounds — all without floating point.
//!
//! The main entry points:
//!
//! - [`count_packings_direct`] / [`count_packings_via_product`]: two
//!   independent counters for a fixed assignment (backtracking over
//!   color tuples vs. coloring the product with a complete graph), used to
//!   cross-check each other.
//! - [`classical_packing_count`]: the constant-assignment special case,
//!   routed through a memoized chromatic polynomial when the product is
//!   small.
//! - [`list_packing_function_exact`]: the minimum packing count over all
//!   `q`-assignments, swept exhaustively over assignment *patterns* (the
//!   count depends only on which lists share which colors).
//! - [`equality_probe`]: tabulates the gap between the minimum and the
//!   constant-assignment count as the list size grows, and cross-checks the
//!   onset of equality against [`dz_threshold`].
//! - [`packing_lower_bound`] / [`girth8_bound`]: lower-bound certificates.
//!
//! Graphs are simple and undirected, with vertices `0..n`.

mod assign;
mod bounds;
mod canon;
mod count;
mod extremal;
mod formats;
mod graph;
mod poly;

pub use assign::{
    canonical_pattern, constant_assignment, enumerate_patterns, lift_assignment, realize_pattern,
    AssignError, ListAssignment, PatternAssignment, PatternIter, DEFAULT_PATTERN_BUDGET,
    MAX_PATTERN_VERTICES,
};
pub use bounds::{
    alon_furedi_nonzero_bound, check_bound_against_count, dz_threshold, girth8_bound,
    packing_lower_bound, tree_packing_value, BoundError, BoundReport,
};
pub use canon::{canonical_key, CanonKey};
pub use count::{
    chromatic_polynomial, classical_packing_count, classical_packing_count_with,
    count_fpf_bijections, count_list_colorings, count_packings_direct, count_packings_via_product,
    derangements, factorial, latin_array_count, ChromaticSolver, Count, CountError, Packing,
};
pub use extremal::{
    equality_probe, list_packing_function_exact, list_packing_function_sampled,
    list_packing_number, probe_csv, MinimizationResult, PackingNumberOutcome, ProbeReport,
    ProbeRow, SearchError,
};
pub use formats::{
    parse_assignment, parse_edge_list, parse_graph6, write_assignment, write_edge_list,
    FormatError,
};
pub use graph::{
    build_graph, cartesian_with_complete, generate_named, girth, Family, Girth, Graph, GraphError,
    ProductVertex,
};
pub use poly::Polynomial;
