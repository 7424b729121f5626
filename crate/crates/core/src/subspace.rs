//! Linear subspaces of the `4^n`-dimensional operator space.
//!
//! Operators are written in Pauli coordinates, `E = sum_s e_s s` over the
//! phase-0 Paulis in [`enumerate_paulis`] order. The coordinate inner product
//! is the Hilbert-Schmidt one scaled by `2^-n`, so `E -> U E U^dag`,
//! `E -> U E` and `E -> E U` are unitary on coordinates and carry orthogonal
//! complements to orthogonal complements.
//!
//! A subspace keeps an orthonormal basis of its orthogonal complement, which
//! is small for every space built from code conditions (at most `K^2`
//! directions per code). The orthonormal basis of the space itself is
//! completed from it on first use.

use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{column_space, orthogonal_completion, spectral_norm};
use crate::pauli::{enumerate_paulis, PauliOperator};
use crate::state::UnitaryAction;

/// Residual below which a vector counts as lying in a subspace.
pub const MEMBER_TOL: f64 = 1e-8;

/// The fixed Pauli coordinate system on `n` qubits.
#[derive(Clone, Debug)]
pub struct PauliCoordinates {
    n: usize,
    paulis: Vec<PauliOperator>,
    position: Vec<usize>,
}

impl PauliCoordinates {
    pub fn new(n: usize) -> Self {
        let paulis = enumerate_paulis(n, n).expect("max weight = n");
        let mut position = vec![0; paulis.len()];
        for (i, p) in paulis.iter().enumerate() {
            position[Self::key(n, p)] = i;
        }
        PauliCoordinates {
            n,
            paulis,
            position,
        }
    }

    fn key(n: usize, p: &PauliOperator) -> usize {
        ((p.x_mask() as usize) << n) | p.z_mask() as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.paulis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paulis.is_empty()
    }

    pub fn paulis(&self) -> &[PauliOperator] {
        &self.paulis
    }

    /// Coordinate index of `p`, ignoring its phase.
    pub fn index_of(&self, p: &PauliOperator) -> usize {
        assert_eq!(p.n(), self.n);
        self.position[Self::key(self.n, p)]
    }

    /// Coordinates of `p` including its phase.
    pub fn vector_of(&self, p: &PauliOperator) -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); self.len()];
        v[self.index_of(p)] = p.phase_factor();
        v
    }

    pub fn to_dense(&self, coeffs: &[C64]) -> DMatrix<C64> {
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for (p, &c) in self.paulis.iter().zip(coeffs) {
            if c == C64::new(0.0, 0.0) {
                continue;
            }
            for b in 0..dim {
                let (f, b2) = p.act_on_index(b);
                m[(b2, b)] += c * f;
            }
        }
        m
    }

    /// `e_s = tr(s^dag M) / 2^n`.
    pub fn from_dense(&self, m: &DMatrix<C64>) -> Vec<C64> {
        let dim = 1usize << self.n;
        let scale = 1.0 / dim as f64;
        self.paulis
            .iter()
            .map(|p| {
                let mut acc = C64::new(0.0, 0.0);
                for b in 0..dim {
                    let (f, b2) = p.act_on_index(b);
                    acc += f.conj() * m[(b2, b)];
                }
                acc * scale
            })
            .collect()
    }
}

/// `E -> U E U^dag`, `E -> U E`, or `E -> E U`.
#[derive(Clone, Debug)]
pub enum OperatorMap {
    Conjugate(UnitaryAction),
    LeftMultiply(UnitaryAction),
    RightMultiply(UnitaryAction),
}

impl OperatorMap {
    fn action(&self) -> &UnitaryAction {
        match self {
            OperatorMap::Conjugate(u)
            | OperatorMap::LeftMultiply(u)
            | OperatorMap::RightMultiply(u) => u,
        }
    }

    /// Image of one phase-0 Pauli, when it is again a Pauli up to phase.
    fn pauli_image(&self, p: &PauliOperator) -> Option<PauliOperator> {
        match self {
            OperatorMap::Conjugate(u) => u.conjugate_pauli(p),
            OperatorMap::LeftMultiply(u) => u.as_pauli().map(|t| t.multiply(p).expect("same n")),
            OperatorMap::RightMultiply(u) => u.as_pauli().map(|t| p.multiply(&t).expect("same n")),
        }
    }

    /// The map as `source index -> (target index, factor)` when it sends
    /// Paulis to Paulis.
    pub fn signed_permutation(&self, coords: &PauliCoordinates) -> Option<Vec<(usize, C64)>> {
        coords
            .paulis()
            .iter()
            .map(|p| {
                self.pauli_image(p)
                    .map(|img| (coords.index_of(&img), img.phase_factor()))
            })
            .collect()
    }

    pub fn apply_dense(&self, coords: &PauliCoordinates, v: &[C64]) -> Vec<C64> {
        let e = coords.to_dense(v);
        let u = self.action().matrix();
        let f = match self {
            OperatorMap::Conjugate(_) => u * e * u.adjoint(),
            OperatorMap::LeftMultiply(_) => u * e,
            OperatorMap::RightMultiply(_) => e * u,
        };
        coords.from_dense(&f)
    }

    /// Maps the columns of `m`; symbolic for Pauli-type maps, dense otherwise.
    pub fn apply_columns(&self, coords: &PauliCoordinates, m: &DMatrix<C64>) -> DMatrix<C64> {
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        if let Some(table) = self.signed_permutation(coords) {
            for (src, &(dst, f)) in table.iter().enumerate() {
                for c in 0..m.ncols() {
                    out[(dst, c)] = f * m[(src, c)];
                }
            }
        } else {
            for c in 0..m.ncols() {
                let col: Vec<C64> = m.column(c).iter().copied().collect();
                for (r, x) in self.apply_dense(coords, &col).into_iter().enumerate() {
                    out[(r, c)] = x;
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct OperatorSubspace {
    n: usize,
    complement: DMatrix<C64>,
    basis: OnceLock<DMatrix<C64>>,
}

impl OperatorSubspace {
    fn ambient(n: usize) -> usize {
        1usize << (2 * n)
    }

    fn with_complement(n: usize, complement: DMatrix<C64>) -> Self {
        OperatorSubspace {
            n,
            complement,
            basis: OnceLock::new(),
        }
    }

    /// The whole operator space.
    pub fn full(n: usize) -> Self {
        Self::with_complement(n, DMatrix::zeros(Self::ambient(n), 0))
    }

    /// Solutions `e` of `rows * e = 0`, where `rows` has `4^n` columns.
    pub fn nullspace(n: usize, rows: &DMatrix<C64>) -> Self {
        assert_eq!(rows.ncols(), Self::ambient(n));
        Self::with_complement(n, column_space(&rows.adjoint()))
    }

    /// Span of the columns of `vectors`.
    pub fn span(n: usize, vectors: &DMatrix<C64>) -> Self {
        assert_eq!(vectors.nrows(), Self::ambient(n));
        let basis = column_space(vectors);
        let complement = orthogonal_completion(&basis);
        let s = Self::with_complement(n, complement);
        let _ = s.basis.set(basis);
        s
    }

    pub fn span_of_paulis(n: usize, paulis: &[PauliOperator]) -> Self {
        let coords = PauliCoordinates::new(n);
        let mut m = DMatrix::zeros(Self::ambient(n), paulis.len());
        for (c, p) in paulis.iter().enumerate() {
            m[(coords.index_of(p), c)] = p.phase_factor();
        }
        Self::span(n, &m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient_dim(&self) -> usize {
        Self::ambient(self.n)
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.complement.ncols()
    }

    pub fn codim(&self) -> usize {
        self.complement.ncols()
    }

    /// Orthonormal basis of the orthogonal complement, one column per direction.
    pub fn complement(&self) -> &DMatrix<C64> {
        &self.complement
    }

    /// Orthonormal basis, one coefficient vector per column.
    pub fn basis(&self) -> &DMatrix<C64> {
        self.basis
            .get_or_init(|| orthogonal_completion(&self.complement))
    }

    /// Distance from `v` to the subspace, relative to `|v|`.
    pub fn residual(&self, v: &[C64]) -> f64 {
        let nrm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if nrm == 0.0 {
            return 0.0;
        }
        let mut acc = 0.0;
        for c in 0..self.complement.ncols() {
            let dot: C64 = self
                .complement
                .column(c)
                .iter()
                .zip(v)
                .map(|(a, b)| a.conj() * b)
                .sum();
            acc += dot.norm_sqr();
        }
        acc.sqrt() / nrm
    }

    pub fn contains(&self, v: &[C64]) -> bool {
        self.residual(v) < MEMBER_TOL
    }

    pub fn pauli_residual(&self, coords: &PauliCoordinates, p: &PauliOperator) -> f64 {
        let row = coords.index_of(p);
        self.complement
            .row(row)
            .iter()
            .map(|x| x.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn contains_pauli(&self, coords: &PauliCoordinates, p: &PauliOperator) -> bool {
        self.pauli_residual(coords, p) < MEMBER_TOL
    }

    /// Largest sine of the angle between a vector of `self` and `other`;
    /// zero exactly when `self` is contained in `other`.
    pub fn containment_residual(&self, other: &OperatorSubspace) -> f64 {
        assert_eq!(self.n, other.n);
        // self <= other  <=>  other^perp <= self^perp
        let c = &self.complement;
        let w = &other.complement;
        let outside = w - c * (c.adjoint() * w);
        spectral_norm(&outside)
    }

    pub fn is_subspace_of(&self, other: &OperatorSubspace) -> bool {
        self.containment_residual(other) < MEMBER_TOL
    }

    pub fn compare(&self, other: &OperatorSubspace) -> SubspaceComparison {
        SubspaceComparison {
            dim_left: self.dim(),
            dim_right: other.dim(),
            residual: self
                .containment_residual(other)
                .max(other.containment_residual(self)),
        }
    }

    /// How far the coefficient-wise adjoint of the space leaves the space.
    pub fn adjoint_residual(&self) -> f64 {
        let c = &self.complement;
        let conj = c.map(|x| x.conj());
        spectral_norm(&(&conj - c * (c.adjoint() * &conj)))
    }

    pub fn map(&self, f: &OperatorMap) -> OperatorSubspace {
        assert_eq!(f.action().n(), self.n);
        let coords = PauliCoordinates::new(self.n);
        Self::with_complement(
            self.n,
            column_space(&f.apply_columns(&coords, &self.complement)),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubspaceComparison {
    pub dim_left: usize,
    pub dim_right: usize,
    pub residual: f64,
}

impl SubspaceComparison {
    pub fn equal(&self, tol: f64) -> bool {
        self.dim_left == self.dim_right && self.residual < tol
    }
}

/// Common subspace of all inputs; the full space for an empty list.
pub fn intersect(spaces: &[&OperatorSubspace]) -> Result<OperatorSubspace> {
    let Some(first) = spaces.first() else {
        return Err(Error::Malformed("intersection of no subspaces".into()));
    };
    let n = first.n;
    let d = first.ambient_dim();
    let mut cols = 0;
    for s in spaces {
        if s.n != n {
            return Err(Error::QubitMismatch {
                expected: n,
                found: s.n,
            });
        }
        cols += s.codim();
    }
    let mut stacked = DMatrix::zeros(d, cols);
    let mut at = 0;
    for s in spaces {
        stacked
            .view_mut((0, at), (d, s.codim()))
            .copy_from(&s.complement);
        at += s.codim();
    }
    Ok(OperatorSubspace::with_complement(n, column_space(&stacked)))
}
