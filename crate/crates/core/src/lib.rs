//! Erasure spaces of small quantum codes.
//!
//! A code is an orthonormal list of kets on `n` qubits. Its erasure space is
//! the linear space of operators `E` with `<c_i|E|c_j> = alpha delta_ij`,
//! its pure erasure space the subspace where `alpha = tr(E) / 2^n`. Both are
//! computed exactly as nullspaces over the `4^n` Pauli coordinates, which is
//! practical up to about six qubits.
//!
//! [`union`] joins mutually orthogonal codes and evaluates the intersection
//! formulas for the erasure space and pure erasure space of `C (+) U C`
//! against the direct computation.

pub mod cli;
pub mod code;
pub mod erasure;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod pauli;
pub mod report;
pub mod state;
pub mod subspace;
pub mod union;

pub use code::{CodeSpec, QuantumCode, TransformSpec};
pub use erasure::{
    check_erasure, check_pure, classify_paulis, erasure_space, hermitian_basis, minimum_distance,
    pure_distance, pure_erasure_space, MembershipReport,
};
pub use error::{Error, Result};
pub use pauli::{enumerate_paulis, PauliLetter, PauliOperator};
pub use state::{CodeTransform, Ket, LocalGate, UnitaryAction};
pub use subspace::{intersect, OperatorSubspace, PauliCoordinates};
pub use union::{union_code, UnionBuildReport};
