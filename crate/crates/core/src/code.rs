//! Quantum codes as orthonormal lists of kets, plus their JSON formats.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{CodeTransform, Ket, LocalGate, UnitaryAction, NORM_TOL};

#[derive(Clone, Debug)]
pub struct QuantumCode {
    n: usize,
    basis: Vec<Ket>,
    label: String,
}

impl QuantumCode {
    /// Normalizes each vector and checks pairwise orthogonality.
    pub fn new(label: impl Into<String>, n: usize, vectors: Vec<Ket>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyCode);
        }
        if n < usize::BITS as usize && vectors.len() > 1usize << n {
            return Err(Error::DimensionTooLarge {
                k: vectors.len(),
                n,
            });
        }
        let mut basis = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.n() != n {
                return Err(Error::QubitMismatch {
                    expected: n,
                    found: v.n(),
                });
            }
            basis.push(v.normalized().ok_or(Error::ZeroVector(i))?);
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let overlap = basis[i].inner(&basis[j])?.norm();
                if overlap > NORM_TOL {
                    return Err(Error::NotOrthogonal { i, j, overlap });
                }
            }
        }
        Ok(QuantumCode {
            n,
            basis,
            label: label.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Ket] {
        &self.basis
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn transform(&self, t: &CodeTransform) -> Result<QuantumCode> {
        let basis = self
            .basis
            .iter()
            .map(|k| t.apply(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuantumCode {
            n: self.n,
            basis,
            label: format!("{} (transformed)", self.label),
        })
    }

    pub fn transform_with(&self, u: &UnitaryAction) -> Result<QuantumCode> {
        let basis = self
            .basis
            .iter()
            .map(|k| u.apply(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuantumCode {
            n: self.n,
            basis,
            label: format!("{} (transformed)", self.label),
        })
    }

    /// `P = sum_i |c_i><c_i|`.
    pub fn projector(&self) -> DMatrix<C64> {
        let dim = 1usize << self.n;
        let mut p = DMatrix::zeros(dim, dim);
        for k in &self.basis {
            let a = k.amplitudes();
            for r in 0..dim {
                if a[r] == C64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..dim {
                    p[(r, c)] += a[r] * a[c].conj();
                }
            }
        }
        p
    }

    /// Frobenius distance between the code projectors.
    pub fn projector_distance(&self, other: &QuantumCode) -> f64 {
        (self.projector() - other.projector()).norm()
    }

    pub fn from_spec(spec: &CodeSpec) -> Result<Self> {
        let vectors = spec
            .basis
            .iter()
            .map(|terms| {
                let terms: Vec<(C64, &str)> = terms
                    .iter()
                    .map(|t| (C64::new(t.re, t.im), t.bits.as_str()))
                    .collect();
                Ket::from_terms(spec.n, &terms)
            })
            .collect::<Result<Vec<_>>>()?;
        QuantumCode::new(spec.label.clone(), spec.n, vectors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CodeSpec =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        QuantumCode::from_spec(&spec)
    }

    /// Writes the normalized basis; amplitudes below 1e-15 are dropped.
    pub fn to_spec(&self) -> CodeSpec {
        CodeSpec {
            n: self.n,
            label: self.label.clone(),
            basis: self
                .basis
                .iter()
                .map(|k| {
                    k.terms(1e-15)
                        .into_iter()
                        .map(|(a, bits)| Term {
                            re: a.re,
                            im: a.im,
                            bits,
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Term {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
    pub bits: String,
}

/// `{ "n": 4, "label": "...", "basis": [[{"re":1,"im":0,"bits":"0000"}, ...], ...] }`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CodeSpec {
    pub n: usize,
    #[serde(default)]
    pub label: String,
    pub basis: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum LocalSpec {
    Name(String),
    /// Row-major `[[re, im]; 4]`.
    Matrix([[f64; 2]; 4]),
}

/// `{ "perm": [1, 2, 0], "locals": ["I", "H", [[0,0],[1,0],[1,0],[0,0]]] }`
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct TransformSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locals: Option<Vec<LocalSpec>>,
}

impl TransformSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    /// Missing parts default to the identity on `n` qubits.
    pub fn build(&self, n: usize) -> Result<CodeTransform> {
        let perm = self.perm.clone().unwrap_or_else(|| (0..n).collect());
        if perm.len() != n {
            return Err(Error::QubitMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let locals = match &self.locals {
            None => vec![LocalGate::from_name("I")?; n],
            Some(ls) => ls
                .iter()
                .map(|l| match l {
                    LocalSpec::Name(name) => LocalGate::from_name(name),
                    LocalSpec::Matrix(m) => {
                        let c = |k: usize| C64::new(m[k][0], m[k][1]);
                        Ok(LocalGate::Matrix(Matrix2::new(c(0), c(1), c(2), c(3))))
                    }
                })
                .collect::<Result<Vec<_>>>()?,
        };
        CodeTransform::new(perm, locals)
    }
}
