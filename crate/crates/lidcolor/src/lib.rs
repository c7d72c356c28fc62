//! Locally identifying colorings of graphs: verification, exact computation,
//! closed-form values for paths, cycles, and their Cartesian/tensor products,
//! and constructions that produce optimal colorings for those families.
//!
//! A proper coloring is *locally identifying* (lid) when every edge whose
//! endpoints have distinct closed neighborhoods also gets distinct closed
//! neighborhood color sets. The lid-chromatic number `chi_lid` is the least
//! number of colors admitting such a coloring.

pub mod closed_form;
pub mod construct;
pub mod error;
pub mod graph;
pub mod solver;
pub mod verify;

pub use closed_form::{generic_upper_bounds, FamilySpec};
pub use construct::{
    construct_family, frobenius_decompose, generic_cartesian_coloring, lid_sequence,
    merged_cartesian_coloring, mine_base_tiles, mine_periodic_pattern, tensor_algorithm1,
    tile_compose, FactorColorings, FrobeniusPair, PairColor, ProductKind, Tile, TileSet,
};
pub use error::{Error, Result};
pub use graph::{
    cartesian_product, family_graph, tensor_product, BaseFamily, Bipartiteness, Graph,
    ProductLabeling,
};
pub use solver::{
    certify_no_lid_coloring, chi_exact, chi_lid_exact, find_lid_coloring, SolveResult,
    SolverOptions,
};
pub use verify::{chi_lid_of_components, is_lid, is_proper, lid_report, Coloring, LidReport};
