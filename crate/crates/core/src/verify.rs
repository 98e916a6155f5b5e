//! Independent oracles: Carathéodory sweeps, Schwarz-function sampling,
//! lemma checks, Bloch-norm estimates, the sum and `λ`-combination checks,
//! and the coefficient conjecture table.
//!
//! Sampling checks report violations instead of failing; the caller decides
//! what margin is acceptable.

pub mod bloch;
pub mod caratheodory;
pub mod conjecture;
pub mod lemmas;
pub mod membership;
pub mod schwarz;
pub mod sums;

pub use bloch::{bloch_class_envelope, bloch_norm_estimate, bloch_samples, BlochEnvelope, BlochReport};
pub use caratheodory::{
    caratheodory_point, hankel_suite, hankel_suite_alphas, maximize_second_hankel_oracle, CaratheodoryPoint, HankelOracle,
    HankelSuiteReport, HankelSuiteRow,
};
pub use conjecture::{conjecture_check, ConjectureReport};
pub use lemmas::{eq_p31_check, lemma_p1p2_check, lemma_p1p2p3_check, LemmaReport};
pub use membership::{verify_class_membership_bounds, MembershipReport};
pub use schwarz::{sample_schwarz, schwarz_sample_stream, SchwarzKind, SchwarzSample};
pub use sums::{lambda_combination_check, vector_space_counterexample, CounterexampleReport, LambdaReport};
