//! Construction and verification of unitary similarity transformations between
//! equivalent irreducible representations of finite groups.
//!
//! The crate provides:
//!
//! * permutations and symmetric groups, plus a generic finite-group table
//!   abstraction for groups supplied by generators ([`perm`], [`group`]),
//! * partitions, standard Young tableaux and Yamanouchi symbols ([`young`]),
//! * the Young-Yamanouchi orthogonal irreps of `S(N)` ([`yy`]),
//! * the group-averaging algorithm that produces the unitary `U` with
//!   `U† ϑ(g) U = ψ(g)` for equivalent unitary irreps, together with the
//!   analytic anti-diagonal construction for conjugate-partition pairs and
//!   the orthogonality / doubly-stochastic verification predicates
//!   ([`similarity`]),
//! * permutation operators on tensor powers and the antisymmetric-projector
//!   block checks ([`schur_weyl`]),
//! * JSON import/export of groups, irreps and results ([`json`]).

pub mod cmatrix;
pub mod group;
pub mod json;
pub mod perm;
pub mod reference;
pub mod rep;
pub mod schur_weyl;
pub mod similarity;
pub mod young;
pub mod yy;

pub use cmatrix::{CMat, RMat, DEFAULT_TOL};
pub use group::{enumerate_symmetric_group, GroupError, GroupTable};
pub use perm::{PermError, Permutation};
pub use rep::{group_from_generators, MatrixIrrep, RepError};
pub use similarity::{
    agree_up_to_phase, conjugated_yy_unitary, doubly_stochastic_check, find_index_pair,
    orthogonality_check, pair_weight, similarity_unitary, verify_similarity, EquivalenceStatus,
    SimilarityError, SimilarityOptions, SimilarityResult,
};
pub use young::{
    axial_distance, enumerate_syt, partitions_of, sigma_for_tableau, Partition, StandardTableau,
    YamanouchiKind, YamanouchiSymbol, YoungError,
};
pub use yy::{build_yy_irrep, yy_basis_labels, yy_generator_matrix, yy_matrix};
