//! Union codes and the intersection formulas for `C (+) U C`.
//!
//! For an orthogonal pair `C`, `U C`, an operator `E` is in the erasure
//! space of the union exactly when
//!
//! * `E` is in `E(C)` and `U^dag E U` is in `E(C)`,
//! * `E U` and `U^dag E` have all matrix elements zero on `C`,
//! * `<c_1|E|c_1> = <c_1|U^dag E U|c_1>`.
//!
//! The second item is membership of `E` in `V(C) U^dag` and `U V(C)`, with
//! `V(C)` the vanishing space of [`crate::erasure::vanishing_space`]. For the
//! pure space of the union the first item is replaced by the pure space of
//! `C` and its conjugate, and the last is dropped.

use nalgebra::DMatrix;

use crate::code::QuantumCode;
use crate::erasure::{erasure_space, pure_erasure_space, vanishing_space};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::state::{UnitaryAction, NORM_TOL};
use crate::subspace::{intersect, OperatorMap, OperatorSubspace, PauliCoordinates, MEMBER_TOL};

#[derive(Clone, Debug, PartialEq)]
pub struct UnionBuildReport {
    pub component_labels: Vec<String>,
    /// Largest `|<a|b>|` between basis vectors of different components.
    pub max_cross_overlap: f64,
    pub k: usize,
    pub n: usize,
}

/// Concatenates the bases of mutually orthogonal codes of equal length,
/// one component at a time.
pub fn union_code(codes: &[QuantumCode]) -> Result<(QuantumCode, UnionBuildReport)> {
    if codes.len() < 2 {
        return Err(Error::TooFewComponents(codes.len()));
    }
    let n = codes[0].n();
    let mut basis = codes[0].basis().to_vec();
    let mut owner: Vec<(usize, usize)> = (0..codes[0].k()).map(|i| (0, i)).collect();
    let mut max_cross_overlap: f64 = 0.0;
    for (b, code) in codes.iter().enumerate().skip(1) {
        if code.n() != n {
            return Err(Error::QubitMismatch {
                expected: n,
                found: code.n(),
            });
        }
        for (j, v) in code.basis().iter().enumerate() {
            for (u, &(a, i)) in basis.iter().zip(&owner) {
                let overlap = u.inner(v)?.norm();
                if overlap >= NORM_TOL {
                    return Err(Error::ComponentsOverlap {
                        a,
                        b,
                        i,
                        j,
                        overlap,
                    });
                }
                max_cross_overlap = max_cross_overlap.max(overlap);
            }
        }
        basis.extend(code.basis().iter().cloned());
        owner.extend((0..code.k()).map(|j| (b, j)));
    }
    let labels: Vec<String> = codes.iter().map(|c| c.label().to_string()).collect();
    let code = QuantumCode::new(labels.join(" + "), n, basis)?;
    let report = UnionBuildReport {
        component_labels: labels,
        max_cross_overlap,
        k: code.k(),
        n,
    };
    Ok((code, report))
}

/// `U S U^dag`.
pub fn conjugate_subspace(s: &OperatorSubspace, u: &UnitaryAction) -> OperatorSubspace {
    s.map(&OperatorMap::Conjugate(u.clone()))
}

/// `U S`.
pub fn left_multiply_subspace(s: &OperatorSubspace, u: &UnitaryAction) -> OperatorSubspace {
    s.map(&OperatorMap::LeftMultiply(u.clone()))
}

/// `S W`; pass `W = U^dag` for `S U^dag`.
pub fn right_multiply_subspace(s: &OperatorSubspace, w: &UnitaryAction) -> OperatorSubspace {
    s.map(&OperatorMap::RightMultiply(w.clone()))
}

/// `M(|c_r>, U)`: operators with `<c_r|E|c_r> = <c_r|U^dag E U|c_r>`.
pub fn m_space_at(
    code: &QuantumCode,
    reference: usize,
    u: &UnitaryAction,
) -> Result<OperatorSubspace> {
    let c = code.basis().get(reference).ok_or(Error::EmptyCode)?;
    let uc = u.apply(c)?;
    let coords = PauliCoordinates::new(code.n());
    let mut row = DMatrix::zeros(1, coords.len());
    for (col, p) in coords.paulis().iter().enumerate() {
        let a = c.inner(&c.apply_pauli(p)?)?;
        let b = uc.inner(&uc.apply_pauli(p)?)?;
        row[(0, col)] = a - b;
    }
    Ok(OperatorSubspace::nullspace(code.n(), &row))
}

/// `M(|c_1>, U)` for the first basis vector.
pub fn m_space(code: &QuantumCode, u: &UnitaryAction) -> Result<OperatorSubspace> {
    m_space_at(code, 0, u)
}

/// Which space the one-sided products `E U`, `U^dag E` must lie in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneSidedFactor {
    /// All matrix elements vanish; the exact condition.
    Vanishing,
    /// The pure erasure space, whose identity component is not forced to zero.
    Pure,
}

/// The code `C (+) U C` after checking the two parts are orthogonal.
pub fn pair_union(code: &QuantumCode, u: &UnitaryAction) -> Result<QuantumCode> {
    let image = code
        .transform_with(u)?
        .with_label(format!("U {}", code.label()));
    Ok(union_code(&[code.clone(), image])?.0)
}

/// The component spaces whose intersection is the erasure space of
/// `C (+) U C`: `E(C)`, `U E(C) U^dag`, `F U^dag`, `U F`, `M(|c_r>, U)`.
pub fn theorem4_components(
    code: &QuantumCode,
    u: &UnitaryAction,
    factor: OneSidedFactor,
    reference: usize,
) -> Result<Vec<OperatorSubspace>> {
    pair_union(code, u)?;
    let e = erasure_space(code);
    let one_sided = match factor {
        OneSidedFactor::Vanishing => vanishing_space(code),
        OneSidedFactor::Pure => pure_erasure_space(code),
    };
    let conj = conjugate_subspace(&e, u);
    let right = right_multiply_subspace(&one_sided, &u.dagger());
    let left = left_multiply_subspace(&one_sided, u);
    let m = m_space_at(code, reference, u)?;
    Ok(vec![e, conj, right, left, m])
}

pub fn erasure_space_theorem4(code: &QuantumCode, u: &UnitaryAction) -> Result<OperatorSubspace> {
    erasure_space_theorem4_with(code, u, OneSidedFactor::Vanishing, 0)
}

pub fn erasure_space_theorem4_with(
    code: &QuantumCode,
    u: &UnitaryAction,
    factor: OneSidedFactor,
    reference: usize,
) -> Result<OperatorSubspace> {
    let parts = theorem4_components(code, u, factor, reference)?;
    intersect(&parts.iter().collect::<Vec<_>>())
}

/// `E_pure(C) ∩ U E_pure(C) U^dag ∩ F U^dag ∩ U F`.
pub fn pure_space_theorem5(code: &QuantumCode, u: &UnitaryAction) -> Result<OperatorSubspace> {
    pure_space_theorem5_with(code, u, OneSidedFactor::Vanishing)
}

pub fn pure_space_theorem5_with(
    code: &QuantumCode,
    u: &UnitaryAction,
    factor: OneSidedFactor,
) -> Result<OperatorSubspace> {
    pair_union(code, u)?;
    let p = pure_erasure_space(code);
    let one_sided = match factor {
        OneSidedFactor::Vanishing => vanishing_space(code),
        OneSidedFactor::Pure => p.clone(),
    };
    let conj = conjugate_subspace(&p, u);
    let right = right_multiply_subspace(&one_sided, &u.dagger());
    let left = left_multiply_subspace(&one_sided, u);
    intersect(&[&p, &conj, &right, &left])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremCheck {
    pub dim_formula: usize,
    pub dim_direct: usize,
    /// Largest principal-angle sine between the two subspaces.
    pub residual: f64,
    pub matches_direct: bool,
}

impl TheoremCheck {
    fn new(formula: &OperatorSubspace, direct: &OperatorSubspace) -> Self {
        let cmp = formula.compare(direct);
        TheoremCheck {
            dim_formula: cmp.dim_left,
            dim_direct: cmp.dim_right,
            residual: cmp.residual,
            matches_direct: cmp.equal(MEMBER_TOL),
        }
    }
}

/// Compares the intersection formula with the erasure space of the union
/// computed from its own basis.
pub fn verify_theorem4(code: &QuantumCode, u: &UnitaryAction) -> Result<TheoremCheck> {
    let formula = erasure_space_theorem4(code, u)?;
    let direct = erasure_space(&pair_union(code, u)?);
    Ok(TheoremCheck::new(&formula, &direct))
}

pub fn verify_theorem5(code: &QuantumCode, u: &UnitaryAction) -> Result<TheoremCheck> {
    let formula = pure_space_theorem5(code, u)?;
    let direct = pure_erasure_space(&pair_union(code, u)?);
    Ok(TheoremCheck::new(&formula, &direct))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `tau_i * E_j`
    Left,
    /// `E_j * tau_i`
    Right,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitProduct {
    pub generator: usize,
    pub tau_shift: usize,
    pub generator_shift: usize,
    pub side: Side,
    pub product: PauliOperator,
}

/// One-sided products of every cyclic shift of `tau` with every cyclic
/// shift of each generator, on both sides.
pub fn orbit_products(tau: &PauliOperator, generators: &[PauliOperator]) -> Vec<OrbitProduct> {
    let n = tau.n();
    let mut out = Vec::new();
    for (g, e) in generators.iter().enumerate() {
        for tau_shift in 0..n {
            let t = tau.cyclic_shift(tau_shift);
            for generator_shift in 0..n {
                let s = e.cyclic_shift(generator_shift);
                for side in [Side::Left, Side::Right] {
                    let product = match side {
                        Side::Left => t.multiply(&s),
                        Side::Right => s.multiply(&t),
                    }
                    .expect("same n");
                    out.push(OrbitProduct {
                        generator: g,
                        tau_shift,
                        generator_shift,
                        side,
                        product,
                    });
                }
            }
        }
    }
    out
}
