//! Work-extraction figures of merit for collections of noisy qubit battery
//! cells.
//!
//! The library models batteries made of identical two-level cells with local
//! Hamiltonian `h = |1><1|` (maximum cell energy normalized to 1). Cells are
//! charged, degraded by a single-qubit noise channel acting independently on
//! each cell, and discharged through unitary work extraction. The modules
//! provide:
//!
//! * [`hermitian`] — dense complex Hermitian linear algebra (eigensolver,
//!   tensor products, partial trace, superoperators) for up to 12 qubits;
//! * [`ergotropy`] — ergotropy-family functionals: passive energy, ergotropy,
//!   total ergotropy via Gibbs entropy matching, local ergotropy, and
//!   bath-assisted extractable work;
//! * [`channels`] — the amplitude-damping, generalized amplitude-damping and
//!   dephased amplitude-damping qubit channels with their closed-form output
//!   spectra and energy relations;
//! * [`capacitance`] — single-shot maximum output ergotropy curves, optimal
//!   input energy, the budget-constrained concave envelope, and bounds on the
//!   unrestricted work capacitance;
//! * [`mawer`] — maximal asymptotic work-to-energy ratios: closed forms, the
//!   small-energy limit computed numerically, and classical-strategy
//!   comparisons;
//! * [`multicell`] — finite-n brute-force engine: product-input output
//!   ergotropy, classical (incoherent) input analysis, monotonicity checks
//!   and the two-qubit superadditivity search;
//! * [`verify`] — seeded property suites driven by the CLI `verify`
//!   subcommand.

pub mod capacitance;
pub mod channels;
pub mod ergotropy;
pub mod hermitian;
pub mod mawer;
pub mod multicell;
pub mod verify;

mod error;

pub use error::{Error, Result};
