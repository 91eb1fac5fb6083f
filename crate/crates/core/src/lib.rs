//! Cohen-Macaulay simplicial complexes over a field: homology and depth, minimality,
//! shelling moves and the Alexander-dual monomial ideal.

pub mod catalog;
pub mod cm;
pub mod complex;
pub mod dual;
pub mod error;
pub mod field;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod random;
pub mod shelling;

pub use cm::{
    check_ball_necessary, depth, depth_via_skeletons, free_facet, free_facets, is_cm, is_minimal_cm, is_strongly_cm,
    is_strongly_nonshellable, removable_facets, ridge_bound_check, satisfies_serre, top_cycle_facet, BallCheck,
    CMReport, CmWitness, MinimalityReport, RidgeBoundCheck, TopCycleRemoval,
};
pub use complex::{Face, FVector, HVector, SimplicialComplex, VertexId};
pub use dual::{
    betti_table, colon_is_degree_one, dual_ideal, facet_colon_is_degree_one, has_linear_quotients, has_linear_resolution, BettiTable,
    SquarefreeIdeal,
};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{is_acyclic, is_l_fold_acyclic, reduced_homology, top_cycle, BettiVector, Cycle};
pub use shelling::{is_shellable, is_shelling_move, reduce_to_minimal, shelled_over, ShellingCertificate};
