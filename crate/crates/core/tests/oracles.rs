//! Cross-checks of the library against independent dense computations.

mod common;

use std::collections::BTreeSet;

use erasure_spaces::erasure::{erasure_constraints, pure_constraints, Symmetry};
use erasure_spaces::fixtures::{gbp, gbp_tau, rains_subcode, rains_tau, rains_union};
use erasure_spaces::union::{
    m_space_at, orbit_products, verify_theorem4, verify_theorem5, OneSidedFactor,
};
use erasure_spaces::{
    enumerate_paulis, erasure_space, hermitian_basis, pure_erasure_space, CodeTransform, LocalGate,
    PauliCoordinates, PauliOperator,
};
use erasure_spaces::{union::erasure_space_theorem4_with, union::pair_union};
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use proptest::prelude::*;

use common::{dense_verdict, gram_rank, kron_pauli, random_code, rng};

#[test]
fn constraint_ranks_match_gram_oracle() {
    let mut r = rng(1);
    for (n, k) in [(2, 2), (3, 2), (3, 3), (2, 4)] {
        let code = random_code(&mut r, n, k, "random");
        let full = 1usize << (2 * n);
        assert_eq!(
            erasure_space(&code).dim(),
            full - gram_rank(&erasure_constraints(&code))
        );
        assert_eq!(
            pure_erasure_space(&code).dim(),
            full - gram_rank(&pure_constraints(&code))
        );
    }
}

#[test]
fn rains_union_weight2_agrees_with_dense_oracle() {
    let code = rains_union();
    let space = erasure_space(&code);
    let coords = PauliCoordinates::new(5);
    let mut dense_bad = BTreeSet::new();
    let mut fast_bad = BTreeSet::new();
    for p in enumerate_paulis(5, 2).unwrap() {
        if !dense_verdict(&code, &kron_pauli(&p)).erasure {
            dense_bad.insert(p.to_string());
        }
        if !space.contains_pauli(&coords, &p) {
            fast_bad.insert(p.to_string());
        }
    }
    assert_eq!(dense_bad, fast_bad);
    assert_eq!(dense_bad.len(), 60);
    for listed in ["XZIII", "ZXIII", "ZIYII", "YIZII"] {
        for s in common::rotations(listed) {
            assert!(dense_bad.contains(&s), "{s}");
        }
    }
}

#[test]
fn conjugated_code_has_conjugated_erasure_space() {
    let code = gbp();
    let t = CodeTransform::new(
        vec![1, 2, 3, 0],
        vec![
            LocalGate::hadamard(),
            LocalGate::phase_s(),
            LocalGate::Pauli(erasure_spaces::PauliLetter::X),
            LocalGate::hadamard(),
        ],
    )
    .unwrap();
    let u = t.to_action();
    let image = code.transform(&t).unwrap();
    let mapped = erasure_spaces::union::conjugate_subspace(&erasure_space(&code), &u);
    let cmp = mapped.compare(&erasure_space(&image));
    assert!(cmp.equal(1e-8), "{cmp:?}");
}

#[test]
fn m_space_does_not_depend_on_reference_vector() {
    let code = gbp();
    let u = gbp_tau().to_action();
    // the M-space itself changes with the reference; the intersection must not
    let a = m_space_at(&code, 0, &u).unwrap();
    assert!(a.dim() < a.ambient_dim());
    let direct = erasure_space(&pair_union(&code, &u).unwrap());
    for reference in 0..code.k() {
        let formula =
            erasure_space_theorem4_with(&code, &u, OneSidedFactor::Vanishing, reference).unwrap();
        assert!(
            formula.compare(&direct).equal(1e-8),
            "reference {reference}"
        );
    }
}

#[test]
fn literal_pure_factor_misses_the_union_space() {
    let code = gbp();
    let u = gbp_tau().to_action();
    let direct = erasure_space(&pair_union(&code, &u).unwrap());
    let literal = erasure_space_theorem4_with(&code, &u, OneSidedFactor::Pure, 0).unwrap();
    assert!(!literal.compare(&direct).equal(1e-8));
    assert!(verify_theorem4(&code, &u).unwrap().matches_direct);
    assert!(verify_theorem5(&code, &u).unwrap().matches_direct);
}

#[test]
fn hermitian_basis_spans_gbp_erasure_space() {
    let space = erasure_space(&gbp());
    let basis = hermitian_basis(&space).unwrap();
    assert_eq!(basis.len(), space.dim());
    let coords = PauliCoordinates::new(4);
    let cols: Vec<C64> = basis.iter().flat_map(|h| h.coefficients.clone()).collect();
    let m = DMatrix::from_column_slice(coords.len(), basis.len(), &cols);
    assert_eq!(gram_rank(&m.adjoint()), space.dim());
    for h in &basis {
        assert!(space.contains(&h.coefficients));
        let dense = coords.to_dense(&h.coefficients);
        let sign = if h.symmetry == Symmetry::Hermitian {
            1.0
        } else {
            -1.0
        };
        assert!((dense.adjoint() - dense.scale(sign)).norm() < 1e-9);
    }
}

#[test]
fn second_listed_family_products_have_weight_two() {
    let tau = rains_tau();
    let e1: PauliOperator = "IIYZY".parse().unwrap();
    let e2: PauliOperator = "IZIXX".parse().unwrap();
    let products = orbit_products(&tau, &[e1, e2]);
    let weight2: BTreeSet<String> = products
        .iter()
        .filter(|p| p.product.weight() == 2)
        .map(|p| p.product.unsigned().to_string())
        .collect();
    assert!(products
        .iter()
        .filter(|p| p.generator == 0)
        .all(|p| p.product.weight() >= 3));
    for s in common::rotations("XZIII")
        .into_iter()
        .chain(common::rotations("ZXIII"))
    {
        assert!(weight2.contains(&s), "{s}");
    }
}

#[test]
fn rains_subcode_pure_violators_are_listed_orbits() {
    let c = erasure_spaces::classify_paulis(&rains_subcode(), 3, true).unwrap();
    let found: BTreeSet<String> = c.violator_strings(3).into_iter().collect();
    let listed: BTreeSet<String> = common::rotations("IIYZY")
        .into_iter()
        .chain(common::rotations("IZIXX"))
        .collect();
    assert_eq!(found, listed);
}

fn letter() -> impl Strategy<Value = char> {
    prop::sample::select(vec!['I', 'X', 'Y', 'Z'])
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (prop::collection::vec(letter(), n), 0u8..4).prop_map(|(ls, k)| {
        let s: String = ls.into_iter().collect();
        let prefix = ["", "i", "-", "-i"][k as usize];
        format!("{prefix}{s}").parse().unwrap()
    })
}

fn ket(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| C64::new(a, b)),
        1 << n,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dagger_is_involution(p in pauli(4)) {
        prop_assert_eq!(p.dagger().dagger(), p);
    }

    #[test]
    fn multiply_matches_kronecker(a in pauli(3), b in pauli(3)) {
        let prod = a.multiply(&b).unwrap();
        let dense = kron_pauli(&a) * kron_pauli(&b);
        prop_assert!((kron_pauli(&prod) - dense).norm() < 1e-12);
        prop_assert_eq!(a.commutes_with(&b), a.multiply(&b).unwrap() == b.multiply(&a).unwrap());
    }

    #[test]
    fn matrix_element_matches_kronecker(p in pauli(3), bra in ket(3), k in ket(3)) {
        let fast = p.matrix_element(&bra, &k).unwrap();
        let b = DMatrix::from_column_slice(8, 1, &bra);
        let v = DMatrix::from_column_slice(8, 1, &k);
        let slow = (b.adjoint() * kron_pauli(&p) * v)[(0, 0)];
        prop_assert!((fast - slow).norm() < 1e-10);
    }

    #[test]
    fn transforms_preserve_inner_products(a in ket(3), b in ket(3), perm in Just(vec![0usize, 1, 2]).prop_shuffle(), gates in prop::collection::vec(0usize..6, 3)) {
        let names = ["I", "X", "Y", "Z", "H", "S"];
        let locals = gates.iter().map(|&g| LocalGate::from_name(names[g]).unwrap()).collect();
        let t = CodeTransform::new(perm, locals).unwrap();
        let ka = erasure_spaces::Ket::new(3, a).unwrap();
        let kb = erasure_spaces::Ket::new(3, b).unwrap();
        let before = ka.inner(&kb).unwrap();
        let after = t.apply(&ka).unwrap().inner(&t.apply(&kb).unwrap()).unwrap();
        prop_assert!((before - after).norm() < 1e-10);
        let back = t.inverse().apply(&t.apply(&ka).unwrap()).unwrap();
        prop_assert!((back.inner(&ka).unwrap() - ka.inner(&ka).unwrap()).norm() < 1e-10);
    }
}
