//! The spinor representation `κ: Cl_n ⊗ C → End(C^{2^{[n/2]}})` built from
//! Kronecker products of `2 × 2` blocks, its chirality halves, and the torus
//! weight vectors.

mod kappa;
mod matrix;
mod torus;

pub use kappa::{
    chirality_split, g1, g2, kappa, kappa_generator, kappa_monomial, kernel_check, t_matrix,
    CentralElement, ChiralitySplit, HalfAction, KernelReport,
};
pub use matrix::SpinMatrix;
pub use torus::{
    expected_eigenfactor, torus_spin_element, torus_spin_element_in, weight_eigencheck,
    EigenFailure, EigenReport, WeightSpinor,
};
