//! Certification engine: exact and adversarial robustness of a labeling
//! (how many edges every non-trivial relabeling must displace per moved
//! vertex), asymmetry checks, isomorphism distance, vertex expansion,
//! and the balance / tamper-resistance measures used by the dense
//! constructions. Exact modes do full scans at desk scale; everything
//! larger gets a seeded, reproducible estimator that only ever reports
//! witnessed bounds.

mod expansion;
mod iso;
mod report;
mod robust;
mod scan;
mod selford;
mod twosource;

pub use expansion::{expansion_combinatorial, expansion_sampled, expansion_spectral};
pub use iso::{far_from_isomorphic, find_isomorphism, is_isomorphic, FarMode, FarReport, FAR_EXACT_LIMIT};
pub use report::{ExpansionMode, ExpansionReport, RobustnessReport, ScanMode, VerifyError};
pub use robust::{
    colored_robustness_adversarial, colored_robustness_exact, colored_robustness_exact_threaded,
    directed_colored_robustness_adversarial, directed_colored_robustness_exact,
    robustness_adversarial, robustness_exact, robustness_exact_threaded, EXACT_SCAN_LIMIT,
};
pub use selford::{automorphism_certificate, first_asymmetric_graph, is_self_ordered};
pub use twosource::{
    derangements, nm_extractor_error, quasi_orthogonality_error, NmMode, NmReport,
    TwoSourceFunction, NM_EXACT_LIMIT,
};
