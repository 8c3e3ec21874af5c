//! Generalized Bell states built from a many-qubit CNOT, the antilinear
//! witness `F(ψ) = <ψ| σ_y ⊗ I ⊗ σ_y |ψ̄>`, the Meyer–Wallach measure and
//! the Thue–Morse structure of `B† M B`.
//!
//! ```
//! use bellmat::{bell_state, f_value, mw_measure};
//!
//! let psi = bell_state(5, 11).unwrap();
//! assert!((f_value(&psi).unwrap().norm() - 1.0).abs() < 1e-10);
//! assert!((mw_measure(&psi).unwrap() - 0.4).abs() < 1e-10);
//! ```

pub mod cli;
pub mod entanglement;
pub mod error;
pub mod gates;
pub mod render;
pub mod report;
pub mod sample;
pub mod state;
pub mod statefile;
pub mod thuemorse;
pub mod verify;

pub use num_complex::Complex64;

pub use entanglement::{
    f_value, ghz_state, is_product, mw_measure, purity, reduced_density_qubit, schmidt,
    DensityMatrix2, ProductCheck, SchmidtData,
};
pub use error::{Error, Result};
pub use gates::{
    apply_cnot_gen, apply_m, apply_walsh_head, bell_state, dense, l_matrix_diag, GateTag,
};
pub use render::RenderSpec;
pub use report::ReportRecord;
pub use state::{
    apply_dense, apply_dense_raw, basis_state, conjugate_state, inner, kron, tensor_states,
    DenseOperator, PureState,
};
pub use thuemorse::{
    block_negation_check, evil_odious_indices, l_diag_via_thue, real_support_criterion, tau,
    SupportClass, ThueMorsePrefix,
};
