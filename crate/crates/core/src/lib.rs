//! Exact-arithmetic toolkit for numerical semigroups and Weierstrass gap
//! sequences, with the machinery needed to verify, exhaustively at desk
//! scale, the weight bounds that arise for points of double coverings:
//! per-type weight caps, counting thresholds, and the pipeline comparing a
//! lower bound on the number of distinct Weierstrass points against them.
//!
//! Modules:
//! - [`semigroup`]: the core [`NumericalSemigroup`] type, gap/order
//!   sequences, weights, and the Wronskian determinant condition.
//! - [`enumeration`]: the genus-tree enumerator with filters, pruning and
//!   deterministic parallel scans.
//! - [`cache`]: the on-disk text format for enumeration results.
//! - [`hyperelliptic`]: point-type classification under a degree-2 covering
//!   and the extremal constructions.
//! - [`bounds`]: closed-form bound sets and the verification pipelines.
//! - [`oracle`]: brute-force reference enumerator for the test suite.

pub mod bounds;
pub mod cache;
pub mod enumeration;
pub mod error;
pub mod hyperelliptic;
pub mod oracle;
pub mod semigroup;

pub use bounds::{
    bound_set, branch2_inequality, exact_min_genus, genus_threshold, homma_ommori_lower_wn,
    large_g_closed_form, n_g_n, omega, theorem_pipeline, verify_lemma, BoundSet, C3Branch,
    CriterionReport, LemmaClass, LemmaVerdict, TPolicy,
};
pub use enumeration::{
    count_filtered, count_genus, enumerate_filtered, enumerate_genus, scan_max_weight,
    scan_max_weight_where, EnumerationConfig, EnumerationFilter, EnumerationStats, WeightRecord,
};
pub use error::{Error, Result};
pub use hyperelliptic::{
    classify_ramified, classify_unramified, even_nongap_sum, extremal_case_b_gap_set,
    is_type3_candidate, min_even_nongap_check, odd_nongap_profile, CoveringProfile,
    OddNongapProfile, RamifiedClass, UnramifiedCase,
};
pub use semigroup::{wronskian_det_condition, GapSequence, NumericalSemigroup, OrderSequence};
