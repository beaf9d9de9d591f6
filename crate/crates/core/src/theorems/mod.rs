//! Certificate-producing verifiers. Each check evaluates a claim on one
//! instance and records every sub-assertion with a witness; hypotheses that
//! fail yield [`Error::NotApplicable`](crate::Error::NotApplicable) rather
//! than a failed certificate.

mod certificate;
mod claims;
mod mthm;
pub mod random;

pub use certificate::{Baseline, BaselineDiff, Certificate, SubAssertion};
pub use claims::{
    check_bell, check_bona_wilf, check_eprop, check_simion, verify_alt_runs_oracle, verify_alt_runs_triangle,
    verify_classical_frobenius, verify_composition_oracle, verify_eulerian_at_one, verify_fn_relation,
    verify_knuth_identity, verify_q_eulerian_oracle, verify_q_frobenius, SIMION_LIMIT,
};
pub use mthm::{admissible, check_corollary, check_mthm, check_mthm_ab, MthmInstance};

/// Claim identifiers accepted by the `check` command.
pub const CLAIM_IDS: [&str; 11] = [
    "mthm",
    "mthm-ab",
    "corollary",
    "eprop",
    "q-frobenius",
    "simion",
    "fn-relation",
    "bona-wilf",
    "knuth",
    "t-prop",
    "e-prop-op",
];
