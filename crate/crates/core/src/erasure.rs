//! Erasure spaces and pure erasure spaces of a code.
//!
//! For a code with orthonormal basis `c_1..c_K`, an operator `E` is in the
//! erasure space when `<c_i|E|c_j> = 0` for `i != j` and `<c_i|E|c_i>` does
//! not depend on `i`. It is in the pure erasure space when
//! `<c_i|E|c_j> = (tr E / 2^n) delta_ij`, which for a non-identity Pauli
//! means every matrix element vanishes. The vanishing space collects the
//! operators with all matrix elements zero.
//!
//! Each space is the nullspace of a constraint matrix whose columns are the
//! Pauli coordinates and whose rows are matrix-element conditions.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::code::QuantumCode;
use crate::error::{Error, Result};
use crate::pauli::{enumerate_paulis, PauliOperator};
use crate::state::Ket;
use crate::subspace::{OperatorSubspace, PauliCoordinates};

/// Absolute tolerance for a matrix element to count as zero.
pub const ZERO_TOL: f64 = 1e-9;

/// Anything that can act on kets of `n` qubits.
pub trait ErrorOperator {
    fn n(&self) -> usize;
    fn act(&self, k: &Ket) -> Result<Ket>;
    /// `tr(E) / 2^n`.
    fn normalized_trace(&self) -> C64;
}

impl ErrorOperator for PauliOperator {
    fn n(&self) -> usize {
        PauliOperator::n(self)
    }

    fn act(&self, k: &Ket) -> Result<Ket> {
        k.apply_pauli(self)
    }

    fn normalized_trace(&self) -> C64 {
        if self.is_identity() {
            self.phase_factor()
        } else {
            C64::new(0.0, 0.0)
        }
    }
}

/// A dense `2^n x 2^n` operator.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    n: usize,
    matrix: DMatrix<C64>,
}

impl DenseOperator {
    pub fn new(n: usize, matrix: DMatrix<C64>) -> Result<Self> {
        let dim = 1usize << n;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::BadLength {
                n,
                found: matrix.nrows(),
            });
        }
        Ok(DenseOperator { n, matrix })
    }

    pub fn from_coordinates(coords: &PauliCoordinates, v: &[C64]) -> Self {
        DenseOperator {
            n: coords.n(),
            matrix: coords.to_dense(v),
        }
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }
}

impl ErrorOperator for DenseOperator {
    fn n(&self) -> usize {
        self.n
    }

    fn act(&self, k: &Ket) -> Result<Ket> {
        k.apply_matrix(&self.matrix)
    }

    fn normalized_trace(&self) -> C64 {
        self.matrix.trace() / (1usize << self.n) as f64
    }
}

/// The first failing condition: `value` is `<c_i|E|c_j>` for an
/// off-diagonal failure, and the deviation from the reference diagonal
/// value otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub value: C64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MembershipReport {
    pub member: bool,
    /// Common diagonal value (erasure) or `tr E / 2^n` (pure).
    pub alpha: C64,
    pub witness: Option<Witness>,
}

impl MembershipReport {
    fn pass(alpha: C64) -> Self {
        MembershipReport {
            member: true,
            alpha,
            witness: None,
        }
    }

    fn fail(alpha: C64, w: Witness) -> Self {
        MembershipReport {
            member: false,
            alpha,
            witness: Some(w),
        }
    }
}

/// `<c_i|E|c_j>` for all basis pairs.
pub fn matrix_elements<E: ErrorOperator + ?Sized>(
    code: &QuantumCode,
    e: &E,
) -> Result<DMatrix<C64>> {
    if e.n() != code.n() {
        return Err(Error::QubitMismatch {
            expected: code.n(),
            found: e.n(),
        });
    }
    let images = code
        .basis()
        .iter()
        .map(|c| e.act(c))
        .collect::<Result<Vec<_>>>()?;
    let k = code.k();
    let mut m = DMatrix::zeros(k, k);
    for (i, ci) in code.basis().iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            m[(i, j)] = ci.inner(img)?;
        }
    }
    Ok(m)
}

pub fn check_erasure<E: ErrorOperator + ?Sized>(
    code: &QuantumCode,
    e: &E,
) -> Result<MembershipReport> {
    let m = matrix_elements(code, e)?;
    Ok(erasure_verdict(&m))
}

fn erasure_verdict(m: &DMatrix<C64>) -> MembershipReport {
    let k = m.nrows();
    let alpha = m.diagonal().sum() / k as f64;
    for i in 0..k {
        for j in 0..k {
            if i != j && m[(i, j)].norm() > ZERO_TOL {
                return MembershipReport::fail(
                    alpha,
                    Witness {
                        i,
                        j,
                        value: m[(i, j)],
                    },
                );
            }
        }
    }
    for i in 1..k {
        let diff = m[(i, i)] - m[(0, 0)];
        if diff.norm() > ZERO_TOL {
            return MembershipReport::fail(
                alpha,
                Witness {
                    i,
                    j: i,
                    value: diff,
                },
            );
        }
    }
    MembershipReport::pass(alpha)
}

pub fn check_pure<E: ErrorOperator + ?Sized>(
    code: &QuantumCode,
    e: &E,
) -> Result<MembershipReport> {
    let m = matrix_elements(code, e)?;
    Ok(scalar_verdict(&m, e.normalized_trace()))
}

/// Every matrix element vanishes.
pub fn check_vanishing<E: ErrorOperator + ?Sized>(
    code: &QuantumCode,
    e: &E,
) -> Result<MembershipReport> {
    let m = matrix_elements(code, e)?;
    Ok(scalar_verdict(&m, C64::new(0.0, 0.0)))
}

fn scalar_verdict(m: &DMatrix<C64>, alpha: C64) -> MembershipReport {
    let k = m.nrows();
    for i in 0..k {
        for j in 0..k {
            let target = if i == j { alpha } else { C64::new(0.0, 0.0) };
            let dev = m[(i, j)] - target;
            if dev.norm() > ZERO_TOL {
                return MembershipReport::fail(alpha, Witness { i, j, value: dev });
            }
        }
    }
    MembershipReport::pass(alpha)
}

/// `<c_i|s|c_j>` for every Pauli coordinate `s`, as one `K x K` block per
/// coordinate.
fn pauli_matrix_elements(code: &QuantumCode, coords: &PauliCoordinates) -> Vec<DMatrix<C64>> {
    coords
        .paulis()
        .iter()
        .map(|p| matrix_elements(code, p).expect("same n"))
        .collect()
}

/// One linear condition on an operator, read off the `K x K` block of
/// matrix elements.
#[derive(Clone, Copy)]
enum Row {
    /// `<c_i|E|c_j>`
    Entry(usize, usize),
    /// `<c_i|E|c_i> - <c_0|E|c_0>`
    DiagonalDifference(usize),
    /// `<c_i|E|c_i> - tr E / 2^n`
    TraceDeviation(usize),
}

fn constraint_matrix(code: &QuantumCode, rows: &[Row]) -> DMatrix<C64> {
    let coords = PauliCoordinates::new(code.n());
    let blocks = pauli_matrix_elements(code, &coords);
    let mut a = DMatrix::zeros(rows.len(), coords.len());
    for (col, (p, m)) in coords.paulis().iter().zip(&blocks).enumerate() {
        let tr = if p.is_identity() {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        };
        for (r, row) in rows.iter().enumerate() {
            a[(r, col)] = match *row {
                Row::Entry(i, j) => m[(i, j)],
                Row::DiagonalDifference(i) => m[(i, i)] - m[(0, 0)],
                Row::TraceDeviation(i) => m[(i, i)] - tr,
            };
        }
    }
    a
}

/// Rows: every ordered pair `i != j` in lexicographic order with entries
/// `<c_i|s|c_j>`, then `<c_i|s|c_i> - <c_0|s|c_0>` for `i >= 1`.
pub fn erasure_constraints(code: &QuantumCode) -> DMatrix<C64> {
    let k = code.k();
    let mut rows = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                rows.push(Row::Entry(i, j));
            }
        }
    }
    for i in 1..k {
        rows.push(Row::DiagonalDifference(i));
    }
    constraint_matrix(code, &rows)
}

/// Rows: `<c_i|s|c_j> - delta_ij tr(s)/2^n` for all pairs, lexicographic.
pub fn pure_constraints(code: &QuantumCode) -> DMatrix<C64> {
    let k = code.k();
    let rows: Vec<_> = (0..k)
        .flat_map(|i| {
            (0..k).map(move |j| {
                if i == j {
                    Row::TraceDeviation(i)
                } else {
                    Row::Entry(i, j)
                }
            })
        })
        .collect();
    constraint_matrix(code, &rows)
}

/// Rows: `<c_i|s|c_j>` for all pairs, lexicographic.
pub fn vanishing_constraints(code: &QuantumCode) -> DMatrix<C64> {
    let k = code.k();
    let rows: Vec<_> = (0..k)
        .flat_map(|i| (0..k).map(move |j| Row::Entry(i, j)))
        .collect();
    constraint_matrix(code, &rows)
}

pub fn erasure_space(code: &QuantumCode) -> OperatorSubspace {
    OperatorSubspace::nullspace(code.n(), &erasure_constraints(code))
}

pub fn pure_erasure_space(code: &QuantumCode) -> OperatorSubspace {
    OperatorSubspace::nullspace(code.n(), &pure_constraints(code))
}

pub fn vanishing_space(code: &QuantumCode) -> OperatorSubspace {
    OperatorSubspace::nullspace(code.n(), &vanishing_constraints(code))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub pauli: PauliOperator,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightClass {
    pub weight: usize,
    pub members: usize,
    pub non_members: usize,
    pub violators: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub n: usize,
    pub pure: bool,
    pub per_weight: Vec<WeightClass>,
}

impl Classification {
    pub fn weight(&self, w: usize) -> Option<&WeightClass> {
        self.per_weight.iter().find(|c| c.weight == w)
    }

    /// Violators as strings, in enumeration order.
    pub fn violator_strings(&self, w: usize) -> Vec<String> {
        self.weight(w)
            .map(|c| c.violators.iter().map(|v| v.pauli.to_string()).collect())
            .unwrap_or_default()
    }
}

/// Tests every phase-0 Pauli of weight at most `max_weight` against the
/// erasure (or, with `pure`, the pure) conditions.
pub fn classify_paulis(
    code: &QuantumCode,
    max_weight: usize,
    pure: bool,
) -> Result<Classification> {
    let paulis = enumerate_paulis(code.n(), max_weight)?;
    let mut per_weight: Vec<WeightClass> = (0..=max_weight)
        .map(|weight| WeightClass {
            weight,
            members: 0,
            non_members: 0,
            violators: Vec::new(),
        })
        .collect();
    for p in paulis {
        let report = if pure {
            check_pure(code, &p)?
        } else {
            check_erasure(code, &p)?
        };
        let class = &mut per_weight[p.weight()];
        if report.member {
            class.members += 1;
        } else {
            class.non_members += 1;
            class.violators.push(Violation {
                pauli: p,
                witness: report.witness.expect("non-member"),
            });
        }
    }
    Ok(Classification {
        n: code.n(),
        pure,
        per_weight,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: usize,
    /// Every Pauli passed; `value` is then `n + 1`.
    pub degenerate: bool,
}

fn first_failure(code: &QuantumCode, pure: bool) -> Distance {
    let n = code.n();
    for p in enumerate_paulis(n, n).expect("max weight = n") {
        let report = if pure {
            check_pure(code, &p)
        } else {
            check_erasure(code, &p)
        };
        if !report.expect("same n").member {
            return Distance {
                value: p.weight(),
                degenerate: false,
            };
        }
    }
    Distance {
        value: n + 1,
        degenerate: true,
    }
}

/// Smallest weight of a Pauli outside the erasure space. Operators supported
/// on `t` qubits expand over Paulis of weight at most `t`, so this is the
/// distance.
pub fn minimum_distance(code: &QuantumCode) -> Distance {
    first_failure(code, false)
}

pub fn pure_distance(code: &QuantumCode) -> Distance {
    first_failure(code, true)
}

/// Support size of an operator given in Pauli coordinates, counting
/// components with magnitude above [`ZERO_TOL`].
pub fn operator_weight(coords: &PauliCoordinates, v: &[C64]) -> usize {
    let support = coords
        .paulis()
        .iter()
        .zip(v)
        .filter(|(_, c)| c.norm() > ZERO_TOL)
        .fold(0u64, |acc, (p, _)| acc | p.x_mask() | p.z_mask());
    support.count_ones() as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Hermitian,
    AntiHermitian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianElement {
    pub symmetry: Symmetry,
    pub coefficients: Vec<C64>,
}

/// A basis of `s` made of Hermitian and anti-Hermitian operators, taken
/// greedily from `E + E^dag` and `E - E^dag` over the basis of `s`.
/// Elements are orthonormal in Pauli coordinates.
pub fn hermitian_basis(s: &OperatorSubspace) -> Result<Vec<HermitianElement>> {
    let r = s.adjoint_residual();
    if r > 1e-8 {
        return Err(Error::NotAdjointClosed(r));
    }
    let basis = s.basis();
    let d = basis.nrows();
    let target = s.dim();
    // Phase-0 Paulis are Hermitian, so E + E^dag has coordinates 2 Re(e) and
    // E - E^dag has 2i Im(e): both are real directions.
    let mut accepted: Vec<Vec<f64>> = Vec::with_capacity(target);
    let mut out = Vec::with_capacity(target);
    'outer: for c in 0..basis.ncols() {
        for symmetry in [Symmetry::Hermitian, Symmetry::AntiHermitian] {
            if accepted.len() == target {
                break 'outer;
            }
            let mut v: Vec<f64> = basis
                .column(c)
                .iter()
                .map(|x| {
                    if symmetry == Symmetry::Hermitian {
                        x.re
                    } else {
                        x.im
                    }
                })
                .collect();
            let start = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if start < 1e-6 {
                continue;
            }
            for _ in 0..2 {
                for q in &accepted {
                    let dot: f64 = q.iter().zip(&v).map(|(a, b)| a * b).sum();
                    v.iter_mut().zip(q).for_each(|(x, a)| *x -= dot * a);
                }
            }
            let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if nrm < 1e-6 * start.max(1.0) {
                continue;
            }
            v.iter_mut().for_each(|x| *x /= nrm);
            let phase = match symmetry {
                Symmetry::Hermitian => C64::new(1.0, 0.0),
                Symmetry::AntiHermitian => C64::new(0.0, 1.0),
            };
            out.push(HermitianElement {
                symmetry,
                coefficients: v.iter().map(|&x| phase * x).collect(),
            });
            accepted.push(v);
        }
    }
    debug_assert!(accepted.iter().all(|v| v.len() == d));
    if out.len() != target {
        return Err(Error::NotAdjointClosed(r));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn identity_is_always_member() {
        for code in [fixtures::gbp(), fixtures::rains_subcode()] {
            let id = PauliOperator::identity(code.n());
            let r = check_erasure(&code, &id).unwrap();
            assert!(r.member);
            assert!((r.alpha - C64::new(1.0, 0.0)).norm() < 1e-12);
            assert!(check_pure(&code, &id).unwrap().member);
            assert!(!check_vanishing(&code, &id).unwrap().member);
        }
    }

    #[test]
    fn single_ket_accepts_everything() {
        let code = fixtures::rains_subcode();
        for q in enumerate_paulis(5, 5).unwrap().iter().step_by(37) {
            assert!(check_erasure(&code, q).unwrap().member);
        }
        let e = erasure_space(&code);
        assert_eq!(e.dim(), 1024);
    }

    #[test]
    fn rains_subcode_purity_examples() {
        let code = fixtures::rains_subcode();
        let e1 = check_pure(&code, &p("IIYZY")).unwrap();
        assert!(!e1.member);
        assert_eq!(e1.witness.map(|w| (w.i, w.j)), Some((0, 0)));
        for q in enumerate_paulis(5, 2).unwrap() {
            assert!(check_pure(&code, &q).unwrap().member, "{q}");
        }
    }

    #[test]
    fn witness_points_at_failure() {
        let code = fixtures::gbp();
        let r = check_erasure(&code, &p("IIXX")).unwrap();
        assert!(!r.member);
        let w = r.witness.unwrap();
        let m = matrix_elements(&code, &p("IIXX")).unwrap();
        if w.i != w.j {
            assert_eq!(m[(w.i, w.j)], w.value);
        } else {
            assert_eq!(m[(w.i, w.i)] - m[(0, 0)], w.value);
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let code = fixtures::gbp();
        assert!(matches!(
            check_erasure(&code, &p("XX")),
            Err(Error::QubitMismatch { .. })
        ));
        assert!(check_pure(&code, &PauliOperator::identity(5)).is_err());
    }

    #[test]
    fn dense_operator_agrees_with_pauli() {
        let code = fixtures::gbp();
        let coords = PauliCoordinates::new(4);
        for s in ["XIII", "IIXX", "ZZZZ", "IIII", "YIII"] {
            let q = p(s);
            let dense = DenseOperator::from_coordinates(&coords, &coords.vector_of(&q));
            assert_eq!(
                check_erasure(&code, &q).unwrap().member,
                check_erasure(&code, &dense).unwrap().member
            );
            assert_eq!(
                check_pure(&code, &q).unwrap().member,
                check_pure(&code, &dense).unwrap().member
            );
        }
    }

    #[test]
    fn gbp_constraint_shape() {
        let a = erasure_constraints(&fixtures::gbp());
        assert_eq!((a.nrows(), a.ncols()), (15, 256));
        assert_eq!(pure_constraints(&fixtures::gbp()).nrows(), 16);
    }

    #[test]
    fn pure_space_contains_identity() {
        let coords = PauliCoordinates::new(4);
        let s = pure_erasure_space(&fixtures::gbp());
        assert!(s.contains_pauli(&coords, &PauliOperator::identity(4)));
        assert!(s.is_subspace_of(&erasure_space(&fixtures::gbp())));
    }

    #[test]
    fn classification_counts_add_up() {
        let c = classify_paulis(&fixtures::gbp(), 4, false).unwrap();
        for class in &c.per_weight {
            assert_eq!(
                class.members + class.non_members,
                crate::pauli::count_of_weight(4, class.weight)
            );
            assert_eq!(class.violators.len(), class.non_members);
        }
        assert_eq!(c.weight(0).unwrap().members, 1);
        assert_eq!(c.weight(1).unwrap().non_members, 0);
        assert!(classify_paulis(&fixtures::gbp(), 5, true).is_err());
    }

    #[test]
    fn distances_of_small_examples() {
        assert_eq!(
            minimum_distance(&fixtures::gbp()),
            Distance {
                value: 2,
                degenerate: false
            }
        );
        let zero = QuantumCode::new("zero", 5, vec![Ket::basis_state(5, 0)]).unwrap();
        assert_eq!(
            minimum_distance(&zero),
            Distance {
                value: 6,
                degenerate: true
            }
        );
        assert_eq!(pure_distance(&zero).value, 1);
    }

    #[test]
    fn operator_weight_uses_support_union() {
        let coords = PauliCoordinates::new(3);
        let mut v = coords.vector_of(&p("XII"));
        let w = coords.vector_of(&p("IIZ"));
        v.iter_mut().zip(&w).for_each(|(a, b)| *a += b);
        assert_eq!(operator_weight(&coords, &v), 2);
    }

    #[test]
    fn hermitian_basis_examples() {
        let x = OperatorSubspace::span_of_paulis(2, &[p("XI")]);
        let hb = hermitian_basis(&x).unwrap();
        assert_eq!(hb.len(), 1);
        assert_eq!(hb[0].symmetry, Symmetry::Hermitian);

        let iz = OperatorSubspace::span_of_paulis(2, &[p("iZI")]);
        let hb = hermitian_basis(&iz).unwrap();
        assert_eq!(hb.len(), 1);
        assert_eq!(hb[0].symmetry, Symmetry::AntiHermitian);

        let coords = PauliCoordinates::new(1);
        let mut v = DMatrix::zeros(4, 1);
        v[(coords.index_of(&p("Z")), 0)] = C64::new(1.0, 0.0);
        v[(coords.index_of(&p("Y")), 0)] = C64::new(0.0, 1.0);
        assert!(matches!(
            hermitian_basis(&OperatorSubspace::span(1, &v)),
            Err(Error::NotAdjointClosed(_))
        ));
    }
}
