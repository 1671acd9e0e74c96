//! Graph burning in which a source may never be chosen among vertices that
//! are already burning.
//!
//! - [`graph`]: simple graphs, distances, neighbourhoods, graph families.
//! - [`burning`], [`search`], [`morphism`]: burning sequences, burning maps,
//!   exhaustive enumeration and morphisms of burnings.
//! - [`decomposition`]: source attribution, burning forests, spanning trees
//!   and the orientation of burned trees.
//! - [`extremal`]: homomorphism burnings of paths and spiders.
//! - [`topology`]: the configuration spaces Δ(G), Γ(G) and their homology.

mod bitset;
pub mod burning;
pub mod decomposition;
pub mod extremal;
pub mod graph;
pub mod morphism;
pub mod search;
pub mod topology;

pub use burning::{filtration, validate, Burning, BurningError, Filtration};
pub use decomposition::{
    attribute_sources, burning_forest, orient, spanning_tree, BurningForest, DecompositionError,
    Digraph, SourceAttribution,
};
pub use extremal::{
    hom_count_bounds, minimal_hom_sequence, path_hom_sequence, union_hom_burning,
    y_tree_sequence, ExtremalError, PathBounds,
};
pub use graph::{disjoint_union, generate, Distance, Graph, GraphError, GraphFamily, VertexId, VertexSet};
pub use morphism::{check_morphism, MorphismError, MorphismWitness};
pub use search::{enumerate_burnings, enumerate_homomorphisms, Burnings, SearchOptions};
pub use topology::{
    complex_faces, config_space, homology, is_subcomplex, smith_normal_form, strong_config_space,
    Coefficients, HomologyResult, IntegerMatrix, SimplicialComplex,
};
