//! Non-commuting conjugacy class graphs (NCCC-graphs) of finite groups.
//!
//! Vertices are the non-central conjugacy classes; two classes are adjacent
//! when no element of one commutes with any element of the other. The crate
//! builds groups from families or tables, derives the graph, computes its
//! adjacency, Laplacian and signless Laplacian spectra and energies, and
//! evaluates exact closed forms for the families whose central quotient is
//! `Z_p × Z_p` or dihedral.

pub mod closed_form;
pub mod error;
pub mod graph;
pub mod group;
pub mod spectra;
pub mod surd;

pub use error::{Error, Result};
pub use graph::{
    build_ccc, build_nccc, complement, detect_multipartite, Graph, MultipartiteShape, Part,
};
pub use group::{
    build_group, center, central_quotient, central_quotient_kind, conjugacy_classes,
    ConjugacyPartition, FamilySpec, FiniteGroup, QuotientKind, TableSpec,
};
pub use spectra::{
    char_poly_exact, eigen_symmetric, energies, group_eigenvalues, integer_root_split, CharPoly,
    EnergyReport, GraphSpectra, Spectrum,
};
pub use surd::Surd;
