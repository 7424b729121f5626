//! Built-in example codes.
//!
//! * `rains-subcode`: the ((5,1,3)) state
//!   `|00000> - cyc|00011> + cyc|00101> - cyc|01111>`, where `cyc` sums the
//!   five cyclic shifts of a bitstring.
//! * `rains-union`: that state together with its images under
//!   `pi^i tau`, `tau = IIXXX`, `i = 0..4`, a ((5,6,2)) code.
//! * `gbp`: the ((4,4,2)) code spanned by `|0000>+|1111>`, `|0110>+|1001>`,
//!   `|0101>+|1010>`, `|1100>+|0011>`.
//! * `gbp-union`: `gbp` joined with its image under `IIIY`, a ((4,8,1)) code.
//!
//! `pi` moves qubit `q` to `q + 1 mod 5`.

use num_complex::Complex64 as C64;

use crate::code::QuantumCode;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::state::{CodeTransform, Ket};
use crate::union::union_code;

pub const FIXTURE_NAMES: [&str; 4] = ["rains-subcode", "rains-union", "gbp", "gbp-union"];

/// Direction of the cyclic shift used for the Rains orbit, for reports.
pub const CYCLIC_SHIFT_CONVENTION: &str = "qubit q -> q+1 mod n";

fn cyclic_orbit(bits: &str) -> Vec<String> {
    let n = bits.len();
    (0..n)
        .map(|k| format!("{}{}", &bits[n - k..], &bits[..n - k]))
        .collect()
}

pub fn rains_generator() -> Ket {
    let mut terms: Vec<(C64, String)> = vec![(C64::new(1.0, 0.0), "00000".to_string())];
    for (sign, seed) in [(-1.0, "00011"), (1.0, "00101"), (-1.0, "01111")] {
        terms.extend(
            cyclic_orbit(seed)
                .into_iter()
                .map(|b| (C64::new(sign, 0.0), b)),
        );
    }
    Ket::from_terms(5, &terms).expect("5-bit strings")
}

pub fn rains_subcode() -> QuantumCode {
    QuantumCode::new("rains-subcode", 5, vec![rains_generator()]).expect("valid fixture")
}

pub fn rains_tau() -> PauliOperator {
    "IIXXX".parse().expect("valid Pauli")
}

/// `pi^i tau` as a transform.
pub fn rains_orbit_transform(i: usize) -> CodeTransform {
    CodeTransform::from_pauli(&rains_tau()).then_shift(i)
}

/// `C^(0)` followed by `pi^i tau C^(0)` for `i = 0..4`.
pub fn rains_components() -> Vec<QuantumCode> {
    let base = rains_subcode();
    let mut out = vec![base.clone().with_label("C0")];
    for i in 0..5 {
        let t = rains_orbit_transform(i);
        out.push(
            base.transform(&t)
                .expect("same n")
                .with_label(format!("pi^{i} tau C0")),
        );
    }
    out
}

pub fn rains_union() -> QuantumCode {
    let (code, _) = union_code(&rains_components()).expect("orbit codes are orthogonal");
    code.with_label("rains-union")
}

pub fn gbp() -> QuantumCode {
    let one = C64::new(1.0, 0.0);
    let vectors = [
        ["0000", "1111"],
        ["0110", "1001"],
        ["0101", "1010"],
        ["1100", "0011"],
    ]
    .iter()
    .map(|[a, b]| Ket::from_terms(4, &[(one, *a), (one, *b)]).expect("4-bit strings"))
    .collect();
    QuantumCode::new("gbp", 4, vectors).expect("valid fixture")
}

pub fn gbp_tau() -> CodeTransform {
    CodeTransform::from_pauli(&"IIIY".parse().expect("valid Pauli"))
}

pub fn gbp_union() -> QuantumCode {
    let g = gbp();
    let image = g
        .transform(&gbp_tau())
        .expect("same n")
        .with_label("tau gbp");
    let (code, _) = union_code(&[g, image]).expect("gbp and its image are orthogonal");
    code.with_label("gbp-union")
}

pub fn fixture(name: &str) -> Result<QuantumCode> {
    match name {
        "rains-subcode" => Ok(rains_subcode()),
        "rains-union" => Ok(rains_union()),
        "gbp" => Ok(gbp()),
        "gbp-union" => Ok(gbp_union()),
        _ => Err(Error::Malformed(format!(
            "unknown fixture {name:?} (known: {})",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rains_amplitude_pattern() {
        let k = rains_subcode().basis()[0].clone();
        let a0 = k.amplitude("00000").unwrap();
        assert!(a0.re > 0.0);
        assert!((k.amplitude("00011").unwrap() + a0).norm() < 1e-12);
        assert!((k.amplitude("10001").unwrap() + a0).norm() < 1e-12);
        assert!((k.amplitude("00101").unwrap() - a0).norm() < 1e-12);
        assert!((k.amplitude("01111").unwrap() + a0).norm() < 1e-12);
        assert!((k.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rains_orbits_are_distinct() {
        let mut all: Vec<String> = vec!["00000".into()];
        for seed in ["00011", "00101", "01111"] {
            all.extend(cyclic_orbit(seed));
        }
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), 16);
        assert_eq!(rains_generator().terms(1e-12).len(), 16);
    }

    #[test]
    fn gbp_shape() {
        let g = gbp();
        assert_eq!((g.n(), g.k()), (4, 4));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for k in g.basis() {
            let terms = k.terms(1e-12);
            assert_eq!(terms.len(), 2);
            assert!(terms.iter().all(|(a, _)| (a.norm() - h).abs() < 1e-12));
        }
    }

    #[test]
    fn gbp_image_matches_listed_vectors() {
        let one = C64::new(1.0, 0.0);
        let listed: Vec<Ket> = [
            ["0001", "1110"],
            ["0010", "1101"],
            ["0100", "1011"],
            ["1000", "0111"],
        ]
        .iter()
        .map(|[a, b]| Ket::from_terms(4, &[(one, *a), (-one, *b)]).unwrap())
        .collect();
        let listed = QuantumCode::new("listed", 4, listed).unwrap();
        let image = gbp().transform(&gbp_tau()).unwrap();
        assert!(image.projector_distance(&listed) < 1e-9);
    }

    #[test]
    fn fixtures_reingest_unchanged() {
        for name in FIXTURE_NAMES {
            let code = fixture(name).unwrap();
            let again = QuantumCode::new(name, code.n(), code.basis().to_vec()).unwrap();
            assert!(again.projector_distance(&code) < 1e-12);
        }
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn shifted_subcode_is_shift_of_generator() {
        let base = rains_subcode();
        let shifted = base.transform(&CodeTransform::cyclic_shift(5, 1)).unwrap();
        // the generator is a sum over cyclic orbits, so it is shift invariant
        assert!(shifted.projector_distance(&base) < 1e-9);
        let moved = base.transform(&rains_orbit_transform(2)).unwrap();
        let manual = base
            .transform(&rains_orbit_transform(0))
            .unwrap()
            .transform(&CodeTransform::cyclic_shift(5, 2))
            .unwrap();
        assert!(moved.projector_distance(&manual) < 1e-9);
    }
}
