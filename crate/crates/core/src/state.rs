//! State vectors and the unitaries used to move codes around: local 2x2
//! gates, qubit permutations and their composition `U = pi * T`.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliOperator};

pub const NORM_TOL: f64 = 1e-9;

/// A vector of `2^n` amplitudes; index bit `n-1-q` belongs to qubit `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    n: usize,
    amps: Vec<C64>,
}

impl Ket {
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        if amps.len() != 1usize << n {
            return Err(Error::BadLength {
                n,
                found: amps.len(),
            });
        }
        Ok(Ket { n, amps })
    }

    pub fn zero(n: usize) -> Self {
        Ket {
            n,
            amps: vec![C64::new(0.0, 0.0); 1 << n],
        }
    }

    pub fn basis_state(n: usize, index: usize) -> Self {
        let mut k = Ket::zero(n);
        k.amps[index] = C64::new(1.0, 0.0);
        k
    }

    /// Sums `amplitude * |bits>` over the given terms. Not normalized.
    pub fn from_terms<S: AsRef<str>>(n: usize, terms: &[(C64, S)]) -> Result<Self> {
        let mut k = Ket::zero(n);
        for (a, bits) in terms {
            k.amps[parse_bits(bits.as_ref(), n)?] += a;
        }
        Ok(k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitude(&self, bits: &str) -> Result<C64> {
        Ok(self.amps[parse_bits(bits, self.n)?])
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() < NORM_TOL
    }

    /// `None` for the zero vector.
    pub fn normalized(&self) -> Option<Ket> {
        let nrm = self.norm();
        if nrm < 1e-12 {
            return None;
        }
        Some(self.scaled(C64::new(1.0 / nrm, 0.0)))
    }

    pub fn scaled(&self, s: C64) -> Ket {
        Ket {
            n: self.n,
            amps: self.amps.iter().map(|a| a * s).collect(),
        }
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Ket) -> Result<C64> {
        self.check_n(other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn apply_pauli(&self, p: &PauliOperator) -> Result<Ket> {
        self.check_n(p.n())?;
        let mut out = Ket::zero(self.n);
        for (b, (f, b2)) in p.action_table().into_iter().enumerate() {
            out.amps[b2] = f * self.amps[b];
        }
        Ok(out)
    }

    pub fn apply_matrix(&self, m: &DMatrix<C64>) -> Result<Ket> {
        let dim = self.amps.len();
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::BadLength {
                n: self.n,
                found: m.nrows(),
            });
        }
        let v = m * DVector::from_column_slice(&self.amps);
        Ok(Ket {
            n: self.n,
            amps: v.iter().copied().collect(),
        })
    }

    /// Nonzero terms as `(amplitude, bitstring)`, in index order.
    pub fn terms(&self, tol: f64) -> Vec<(C64, String)> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(b, a)| (*a, format!("{:0width$b}", b, width = self.n)))
            .collect()
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::QubitMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    fn apply_local(&mut self, q: usize, m: &Matrix2<C64>) {
        let bit = 1usize << (self.n - 1 - q);
        for b in 0..self.amps.len() {
            if b & bit == 0 {
                let (a0, a1) = (self.amps[b], self.amps[b | bit]);
                self.amps[b] = m[(0, 0)] * a0 + m[(0, 1)] * a1;
                self.amps[b | bit] = m[(1, 0)] * a0 + m[(1, 1)] * a1;
            }
        }
    }

    fn permute_qubits(&self, perm: &[usize]) -> Ket {
        let mut out = Ket::zero(self.n);
        for (b, a) in self.amps.iter().enumerate() {
            out.amps[permute_index(b, perm, self.n)] = *a;
        }
        out
    }
}

pub(crate) fn parse_bits(bits: &str, n: usize) -> Result<usize> {
    if bits.len() != n || !bits.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::BadBitstring {
            bits: bits.to_string(),
            n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    usize::from_str_radix(bits, 2).map_err(|_| Error::BadBitstring {
        bits: bits.to_string(),
        n,
    })
}

/// Basis index after moving the bit of qubit `q` to qubit `perm[q]`.
fn permute_index(b: usize, perm: &[usize], n: usize) -> usize {
    let mut out = 0;
    for (q, &dest) in perm.iter().enumerate() {
        if b >> (n - 1 - q) & 1 == 1 {
            out |= 1 << (n - 1 - dest);
        }
    }
    out
}

/// A single-qubit unitary. Pauli letters are kept symbolic so that
/// conjugating a Pauli operator by a transform stays exact.
#[derive(Clone, Debug, PartialEq)]
pub enum LocalGate {
    Pauli(PauliLetter),
    Matrix(Matrix2<C64>),
}

impl LocalGate {
    pub fn matrix(&self) -> Matrix2<C64> {
        match self {
            LocalGate::Pauli(l) => {
                let m = l.matrix();
                Matrix2::new(m[0][0], m[0][1], m[1][0], m[1][1])
            }
            LocalGate::Matrix(m) => *m,
        }
    }

    pub fn hadamard() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        LocalGate::Matrix(Matrix2::new(h, h, h, -h))
    }

    pub fn phase_s() -> Self {
        let o = C64::new(0.0, 0.0);
        LocalGate::Matrix(Matrix2::new(C64::new(1.0, 0.0), o, o, C64::new(0.0, 1.0)))
    }

    /// Named gates: `I`, `X`, `Y`, `Z`, `H`, `S`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "H" => Ok(LocalGate::hadamard()),
            "S" => Ok(LocalGate::phase_s()),
            _ => {
                let mut chars = name.chars();
                match (chars.next().and_then(PauliLetter::from_char), chars.next()) {
                    (Some(l), None) => Ok(LocalGate::Pauli(l)),
                    _ => Err(Error::UnknownGate(name.to_string())),
                }
            }
        }
    }

    fn dagger(&self) -> LocalGate {
        match self {
            LocalGate::Pauli(l) => LocalGate::Pauli(*l),
            LocalGate::Matrix(m) => LocalGate::Matrix(m.adjoint()),
        }
    }
}

/// `U = pi * T`: first the local gates `T = locals[0] (x) ... (x) locals[n-1]`,
/// then the permutation moving qubit `q` to position `perm[q]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeTransform {
    n: usize,
    perm: Vec<usize>,
    locals: Vec<LocalGate>,
}

impl CodeTransform {
    pub fn new(perm: Vec<usize>, locals: Vec<LocalGate>) -> Result<Self> {
        let n = perm.len();
        if locals.len() != n {
            return Err(Error::QubitMismatch {
                expected: n,
                found: locals.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::BadPermutation(format!("{perm:?}")));
            }
            seen[p] = true;
        }
        for (q, g) in locals.iter().enumerate() {
            let m = g.matrix();
            let deviation = (m * m.adjoint() - Matrix2::identity()).norm();
            if deviation > NORM_TOL {
                return Err(Error::NotUnitary {
                    qubit: q,
                    deviation,
                });
            }
        }
        Ok(CodeTransform { n, perm, locals })
    }

    pub fn identity(n: usize) -> Self {
        CodeTransform {
            n,
            perm: (0..n).collect(),
            locals: vec![LocalGate::Pauli(PauliLetter::I); n],
        }
    }

    pub fn from_pauli(p: &PauliOperator) -> Self {
        CodeTransform {
            n: p.n(),
            perm: (0..p.n()).collect(),
            locals: p.letters().into_iter().map(LocalGate::Pauli).collect(),
        }
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        CodeTransform::new(perm, vec![LocalGate::Pauli(PauliLetter::I); n])
    }

    /// Qubit `q` moves to `q + k mod n`.
    pub fn cyclic_shift(n: usize, k: usize) -> Self {
        CodeTransform::permutation((0..n).map(|q| (q + k) % n).collect()).expect("valid shift")
    }

    /// `pi^k * T` for a transform whose permutation is trivial.
    pub fn then_shift(&self, k: usize) -> Self {
        let perm = self.perm.iter().map(|&p| (p + k) % self.n).collect();
        CodeTransform {
            n: self.n,
            perm,
            locals: self.locals.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn locals(&self) -> &[LocalGate] {
        &self.locals
    }

    pub fn is_pauli_type(&self) -> bool {
        self.locals.iter().all(|g| matches!(g, LocalGate::Pauli(_)))
    }

    pub fn has_trivial_perm(&self) -> bool {
        self.perm.iter().enumerate().all(|(q, &p)| q == p)
    }

    /// `U^-1 = T^dag pi^-1 = pi^-1 (pi T^dag pi^-1)`.
    pub fn inverse(&self) -> CodeTransform {
        let mut perm = vec![0; self.n];
        let mut locals = vec![LocalGate::Pauli(PauliLetter::I); self.n];
        for (q, &dest) in self.perm.iter().enumerate() {
            perm[dest] = q;
            locals[dest] = self.locals[q].dagger();
        }
        CodeTransform {
            n: self.n,
            perm,
            locals,
        }
    }

    pub fn apply(&self, k: &Ket) -> Result<Ket> {
        k.check_n(self.n)?;
        let mut out = k.clone();
        for (q, g) in self.locals.iter().enumerate() {
            if g != &LocalGate::Pauli(PauliLetter::I) {
                out.apply_local(q, &g.matrix());
            }
        }
        if self.has_trivial_perm() {
            Ok(out)
        } else {
            Ok(out.permute_qubits(&self.perm))
        }
    }

    /// `U sigma U^dag` for Pauli-type transforms; `None` otherwise.
    pub fn conjugate_pauli(&self, p: &PauliOperator) -> Option<PauliOperator> {
        if p.n() != self.n || !self.is_pauli_type() {
            return None;
        }
        let mut sign = 0u8;
        for (q, g) in self.locals.iter().enumerate() {
            if let LocalGate::Pauli(l) = g {
                let f = p.letter(q);
                if *l != PauliLetter::I && f != PauliLetter::I && *l != f {
                    sign ^= 2;
                }
            }
        }
        let conj = p.permuted(&self.perm);
        Some(conj.with_phase(conj.phase() + sign))
    }

    /// The Pauli operator `T` when the permutation is trivial and all locals
    /// are Pauli letters.
    pub fn as_pauli(&self) -> Option<PauliOperator> {
        if !self.has_trivial_perm() {
            return None;
        }
        let letters = self
            .locals
            .iter()
            .map(|g| match g {
                LocalGate::Pauli(l) => Some(*l),
                LocalGate::Matrix(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(PauliOperator::from_letters(&letters))
    }

    pub fn to_action(&self) -> UnitaryAction {
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for b in 0..dim {
            let col = self.apply(&Ket::basis_state(self.n, b)).expect("same n");
            for (r, a) in col.amps.iter().enumerate() {
                m[(r, b)] = *a;
            }
        }
        UnitaryAction {
            n: self.n,
            matrix: m,
            transform: Some(self.clone()),
        }
    }
}

/// A unitary on `2^n` amplitudes, optionally remembering the transform it
/// came from so Pauli conjugation can be done symbolically.
#[derive(Clone, Debug)]
pub struct UnitaryAction {
    n: usize,
    matrix: DMatrix<C64>,
    transform: Option<CodeTransform>,
}

impl UnitaryAction {
    pub fn identity(n: usize) -> Self {
        CodeTransform::identity(n).to_action()
    }

    pub fn from_matrix(n: usize, matrix: DMatrix<C64>) -> Result<Self> {
        let dim = 1usize << n;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::BadLength {
                n,
                found: matrix.nrows(),
            });
        }
        let deviation = (&matrix * matrix.adjoint() - DMatrix::identity(dim, dim)).norm();
        if deviation > NORM_TOL {
            return Err(Error::MatrixNotUnitary(deviation));
        }
        Ok(UnitaryAction {
            n,
            matrix,
            transform: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    /// The transform this action realizes, when it was built from one.
    pub fn transform(&self) -> Option<&CodeTransform> {
        self.transform.as_ref()
    }

    pub fn dagger(&self) -> UnitaryAction {
        match &self.transform {
            Some(t) => t.inverse().to_action(),
            None => UnitaryAction {
                n: self.n,
                matrix: self.matrix.adjoint(),
                transform: None,
            },
        }
    }

    pub fn apply(&self, k: &Ket) -> Result<Ket> {
        k.check_n(self.n)?;
        k.apply_matrix(&self.matrix)
    }

    pub fn apply_inverse(&self, k: &Ket) -> Result<Ket> {
        k.check_n(self.n)?;
        k.apply_matrix(&self.matrix.adjoint())
    }

    /// `U sigma U^dag`, symbolic when `U` is a Pauli-type transform.
    pub fn conjugate_pauli(&self, p: &PauliOperator) -> Option<PauliOperator> {
        self.transform().and_then(|t| t.conjugate_pauli(p))
    }

    /// `U` itself as a Pauli operator, when it is one.
    pub fn as_pauli(&self) -> Option<PauliOperator> {
        self.transform().and_then(|t| t.as_pauli())
    }
}
