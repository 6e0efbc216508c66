//! Cayley-ball enumeration and the numerical certification suite.

pub mod ball;
pub mod checks;
pub mod report;
pub mod suite;

pub use ball::{enumerate_ball, generator_syllables, Ball};
pub use checks::{
    build_kernel_matrices, build_kernel_matrix, check_bounded_length_growth, check_cnd, check_coset_stability,
    check_degeneration, check_invariance, check_kernel_identity, check_pointwise_limit, check_properness, check_psd,
    check_restriction, check_schoenberg, check_vanishing, direct_product_tuple, free_product_normal_form,
    properness_profile, random_element, KernelMatrix, Properness, SphereStat, KERNEL_TOLERANCE,
};
pub use report::CertReport;
pub use suite::{run_suite, standard_assignments, standard_instances, RunReport, Shape, SuiteParams};
