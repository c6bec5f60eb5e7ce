//! Executable checks of the structural claims: pairing matrices,
//! retractions, negligible quotients, growth and rigidity.

mod phi;

pub use phi::{alternating_word, matchings_ring, phi_matrix_matchings, phi_matrix_theorem1, phi_pairing, symmetric_image, MatchingPhiReport, PhiReport};
mod retraction;

pub use retraction::{good_retraction, RetractionReport};
mod based;

pub use based::{growth_dimension, length, moderate_growth_test, BasedRing, GrowthReport, ModerateGrowthReport};
mod negligible;

pub use negligible::{
    char2_trace_radical_report, closure_pairing_ob_infinity, negligible_quotient, trace_radical_check, ClosurePairingReport, NegligibleReport,
    PowerCheck, TraceMismatchReport, TraceRadicalReport,
};
mod rigidity;

pub use rigidity::{rigidity_certificate, Certificate, RigidityReport, Verdict, ZigzagPair};
mod report;

pub use report::{Report, SCHEMA};
