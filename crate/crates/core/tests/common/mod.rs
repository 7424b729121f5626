//! Helpers shared by the integration tests: seeded random codes and a dense
//! reference implementation of the membership conditions that does not touch
//! the mask arithmetic of the library.
#![allow(dead_code)]

use erasure_spaces::{Ket, PauliLetter, PauliOperator, QuantumCode};
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ORACLE_TOL: f64 = 1e-9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` orthonormal vectors in `C^(2^n)` from the QR factor of a random matrix.
pub fn random_frame(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Ket> {
    let d = 1usize << n;
    assert!(k <= d);
    let m = DMatrix::from_fn(d, k, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let q = m.qr().q();
    (0..k)
        .map(|j| Ket::new(n, q.column(j).iter().copied().collect()).unwrap())
        .collect()
}

pub fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize, label: &str) -> QuantumCode {
    QuantumCode::new(label, n, random_frame(rng, n, k)).unwrap()
}

fn letter_matrix(l: PauliLetter) -> DMatrix<C64> {
    let o = C64::new(0.0, 0.0);
    let r = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let e = match l {
        PauliLetter::I => [r, o, o, r],
        PauliLetter::X => [o, r, r, o],
        PauliLetter::Y => [o, -i, i, o],
        PauliLetter::Z => [r, o, o, -r],
    };
    DMatrix::from_row_slice(2, 2, &e)
}

/// Kronecker product of the letters, qubit 0 leftmost, times the phase.
pub fn kron_pauli(p: &PauliOperator) -> DMatrix<C64> {
    let mut m = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
    for l in p.letters() {
        m = m.kronecker(&letter_matrix(l));
    }
    m * p.phase_factor()
}

pub fn code_matrix(code: &QuantumCode) -> DMatrix<C64> {
    let d = 1usize << code.n();
    DMatrix::from_fn(d, code.k(), |r, c| code.basis()[c].amplitudes()[r])
}

/// Verdicts of the three conditions for one dense operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenseVerdict {
    pub erasure: bool,
    pub pure: bool,
    pub vanishing: bool,
}

pub fn dense_verdict(code: &QuantumCode, e: &DMatrix<C64>) -> DenseVerdict {
    let c = code_matrix(code);
    let g = c.adjoint() * e * &c;
    let k = code.k();
    let alpha = e.trace() / C64::new(e.nrows() as f64, 0.0);
    let mut off = true;
    let mut diag_equal = true;
    let mut diag_alpha = true;
    let mut zero = true;
    for i in 0..k {
        for j in 0..k {
            let v = g[(i, j)];
            if v.norm() > ORACLE_TOL {
                zero = false;
            }
            if i != j && v.norm() > ORACLE_TOL {
                off = false;
            }
        }
        if (g[(i, i)] - g[(0, 0)]).norm() > ORACLE_TOL {
            diag_equal = false;
        }
        if (g[(i, i)] - alpha).norm() > ORACLE_TOL {
            diag_alpha = false;
        }
    }
    DenseVerdict {
        erasure: off && diag_equal,
        pure: off && diag_alpha,
        vanishing: zero,
    }
}

/// Rank of `rows` from the eigenvalues of `rows rows^H`, an oracle
/// independent of the SVD used by the library.
pub fn gram_rank(rows: &DMatrix<C64>) -> usize {
    if rows.nrows() == 0 {
        return 0;
    }
    let g = rows * rows.adjoint();
    let eig = g.symmetric_eigenvalues();
    let top = eig.iter().cloned().fold(0.0f64, f64::max);
    eig.iter().filter(|&&x| x > 1e-10 * top.max(1.0)).count()
}

/// Cyclic rotations of a Pauli string, in the order `s, shift 1, ...`.
pub fn rotations(s: &str) -> Vec<String> {
    let n = s.len();
    (0..n)
        .map(|k| format!("{}{}", &s[n - k..], &s[..n - k]))
        .collect()
}
