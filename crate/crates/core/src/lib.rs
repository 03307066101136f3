//! Stabilizer codes through binary symplectic geometry.
//!
//! Pauli errors `±X(a)Z(b)` on `n` qubits reduce, modulo sign, to vectors `(a|b)`
//! of a `2n`-dimensional binary space carrying the alternating form
//! `a·b' + a'·b` and the quadratic form `Σ a_j b_j`. A stabilizer code is a
//! subspace `S̄` on which both forms vanish; its distance is read off the
//! orthogonal complement `S̄⊥`.
//!
//! - [`gf2`]: packed vectors and matrices, rank, span membership, symplectic duals.
//! - [`pauli`]: group arithmetic with sign (or `i^k`) tracking.
//! - [`code`]: code objects, validation, the code file format, the example codes,
//!   CSS and quadratic-residue constructions, and the pairwise correctability test.
//! - [`distance`]: exhaustive minimum-weight search over `S̄⊥`.
//! - [`clifford`]: Clifford generators as `2n × 2n` binary matrices.
//! - [`encoding`]: an explicit Clifford word carrying a canonical subspace onto `S̄`.
//! - [`statevector`]: dense simulation for `n <= 12`.
//! - [`gv`]: the asymptotic rate formula.

pub mod clifford;
pub mod code;
pub mod distance;
pub mod encoding;
pub mod error;
pub mod gf2;
pub mod gv;
pub mod pauli;
pub mod statevector;

pub use clifford::{compose, CliffordKind, Generator, SympMatrix};
pub use code::{
    builtin, classical_min_distance, css_from_classical, quadratic_residue_code, Builtin, Correctability,
    StabilizerCode, ValidationReport,
};
pub use distance::{distance, DistanceOptions, DistanceReport};
pub use encoding::synthesize_encoding;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec, SympVector};
pub use gv::{binary_entropy, gv_rate, gv_rate_root};
pub use pauli::{weight_t_error_set, Mode, PauliElement};
pub use statevector::{apply_pauli, codespace_basis, verify_kl_conditions, StateVector};
