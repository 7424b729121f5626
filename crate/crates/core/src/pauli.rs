//! N-qubit Pauli operators in symplectic (x, z) form with an `i^k` phase.
//!
//! Bit `q` of `x_mask`/`z_mask` describes tensor factor `q`, counted from
//! the left. Basis-state indices use the opposite orientation: qubit 0 is
//! the most significant bit, so `|0001>` is index 1. [`PauliOperator::x_index`]
//! and [`PauliOperator::z_index`] give the masks in index orientation.
//!
//! `Y` is stored as `x = z = 1` with phase 0 and realizes the usual
//! `[[0, -i], [i, 0]]`, i.e. `Y = i X Z`.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Powers of `i`.
pub(crate) const I_POW: [C64; 4] = [
    C64::new(1.0, 0.0),
    C64::new(0.0, 1.0),
    C64::new(-1.0, 0.0),
    C64::new(0.0, -1.0),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [
        PauliLetter::I,
        PauliLetter::X,
        PauliLetter::Y,
        PauliLetter::Z,
    ];

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }

    /// The 2x2 matrix, row-major.
    pub fn matrix(self) -> [[C64; 2]; 2] {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        match self {
            PauliLetter::I => [[l, o], [o, l]],
            PauliLetter::X => [[o, l], [l, o]],
            PauliLetter::Y => [[o, -i], [i, o]],
            PauliLetter::Z => [[l, o], [o, -l]],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x_mask: u64,
    z_mask: u64,
    phase: u8,
}

impl PauliOperator {
    pub const MAX_QUBITS: usize = 32;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_QUBITS, "too many qubits: {n}");
        PauliOperator {
            n,
            x_mask: 0,
            z_mask: 0,
            phase: 0,
        }
    }

    /// Builds a phase-0 operator from raw masks, bit `q` for qubit `q`.
    pub fn from_masks(n: usize, x_mask: u64, z_mask: u64) -> Self {
        assert!(n <= Self::MAX_QUBITS, "too many qubits: {n}");
        let all = low_bits(n);
        assert!(
            x_mask & !all == 0 && z_mask & !all == 0,
            "mask bits beyond qubit {n}"
        );
        PauliOperator {
            n,
            x_mask,
            z_mask,
            phase: 0,
        }
    }

    pub fn from_letters(letters: &[PauliLetter]) -> Self {
        assert!(
            !letters.is_empty(),
            "a Pauli operator needs at least one factor"
        );
        let mut p = PauliOperator::identity(letters.len());
        for (q, l) in letters.iter().enumerate() {
            let (x, z) = l.bits();
            p.x_mask |= (x as u64) << q;
            p.z_mask |= (z as u64) << q;
        }
        p
    }

    /// A single non-identity factor on qubit `q`.
    pub fn single(n: usize, q: usize, letter: PauliLetter) -> Self {
        assert!(q < n);
        let mut letters = vec![PauliLetter::I; n];
        letters[q] = letter;
        PauliOperator::from_letters(&letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    /// Exponent `k` of the global factor `i^k`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn phase_factor(&self) -> C64 {
        I_POW[self.phase as usize]
    }

    pub fn with_phase(mut self, k: u8) -> Self {
        self.phase = k % 4;
        self
    }

    /// Same tensor factors with phase 0.
    pub fn unsigned(self) -> Self {
        self.with_phase(0)
    }

    pub fn letter(&self, q: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x_mask >> q & 1 == 1, self.z_mask >> q & 1 == 1)
    }

    pub fn letters(&self) -> Vec<PauliLetter> {
        (0..self.n).map(|q| self.letter(q)).collect()
    }

    pub fn weight(&self) -> usize {
        (self.x_mask | self.z_mask).count_ones() as usize
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&q| (self.x_mask | self.z_mask) >> q & 1 == 1)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    /// Product `self * other`, with the phase of the matrix product.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let x = self.x_mask ^ other.x_mask;
        let z = self.z_mask ^ other.z_mask;
        // P = i^{k + |x.z|} X^x Z^z; commuting Z^z1 past X^x2 costs (-1)^{|z1.x2|}.
        let phase = self.phase as u32
            + other.phase as u32
            + (self.x_mask & self.z_mask).count_ones()
            + (other.x_mask & other.z_mask).count_ones()
            + 2 * (self.z_mask & other.x_mask).count_ones()
            + 3 * (x & z).count_ones();
        Ok(PauliOperator {
            n: self.n,
            x_mask: x,
            z_mask: z,
            phase: (phase % 4) as u8,
        })
    }

    pub fn dagger(&self) -> PauliOperator {
        PauliOperator {
            phase: (4 - self.phase) % 4,
            ..*self
        }
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        ((self.x_mask & other.z_mask).count_ones() + (self.z_mask & other.x_mask).count_ones())
            .is_multiple_of(2)
    }

    /// Moves the factor on qubit `q` to qubit `perm[q]`.
    pub fn permuted(&self, perm: &[usize]) -> PauliOperator {
        assert_eq!(perm.len(), self.n);
        let mut out = PauliOperator {
            x_mask: 0,
            z_mask: 0,
            ..*self
        };
        for (q, &dest) in perm.iter().enumerate() {
            out.x_mask |= (self.x_mask >> q & 1) << dest;
            out.z_mask |= (self.z_mask >> q & 1) << dest;
        }
        out
    }

    /// Cyclic shift moving qubit `q` to `q + k mod n`.
    pub fn cyclic_shift(&self, k: usize) -> PauliOperator {
        let perm: Vec<usize> = (0..self.n).map(|q| (q + k) % self.n).collect();
        self.permuted(&perm)
    }

    /// `x_mask` in basis-index orientation (qubit 0 = most significant bit).
    pub fn x_index(&self) -> usize {
        reverse_low_bits(self.x_mask, self.n) as usize
    }

    pub fn z_index(&self) -> usize {
        reverse_low_bits(self.z_mask, self.n) as usize
    }

    /// The image of basis state `|b>`: `P|b> = factor * |b'>`.
    #[inline]
    pub fn act_on_index(&self, b: usize) -> (C64, usize) {
        let (x, z) = (self.x_index(), self.z_index());
        let k =
            self.phase as u32 + (self.x_mask & self.z_mask).count_ones() + 2 * (b & z).count_ones();
        (I_POW[(k % 4) as usize], b ^ x)
    }

    /// Precomputed action on every basis state, indexed by `b`.
    pub fn action_table(&self) -> Vec<(C64, usize)> {
        let (x, z) = (self.x_index(), self.z_index());
        let base = self.phase as u32 + (self.x_mask & self.z_mask).count_ones();
        (0..1usize << self.n)
            .map(|b| {
                (
                    I_POW[((base + 2 * (b & z).count_ones()) % 4) as usize],
                    b ^ x,
                )
            })
            .collect()
    }

    /// `<bra| P |ket>` without forming the matrix.
    pub fn matrix_element(&self, bra: &[C64], ket: &[C64]) -> Result<C64> {
        let dim = 1usize << self.n;
        if bra.len() != dim {
            return Err(Error::BadLength {
                n: self.n,
                found: bra.len(),
            });
        }
        if ket.len() != dim {
            return Err(Error::BadLength {
                n: self.n,
                found: ket.len(),
            });
        }
        let mut acc = C64::new(0.0, 0.0);
        for (b, &amp) in ket.iter().enumerate() {
            if amp == C64::new(0.0, 0.0) {
                continue;
            }
            let (f, b2) = self.act_on_index(b);
            acc += bra[b2].conj() * f * amp;
        }
        Ok(acc)
    }

    /// Dense `2^n x 2^n` realization.
    pub fn dense(&self) -> DMatrix<C64> {
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for b in 0..dim {
            let (f, b2) = self.act_on_index(b);
            m[(b2, b)] = f;
        }
        m
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["", "i", "-", "-i"][self.phase as usize])?;
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (phase, body) = if let Some(rest) = s.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = s.strip_prefix('i') {
            (1, rest)
        } else {
            (0, s)
        };
        if body.is_empty() || body.len() > Self::MAX_QUBITS {
            return Err(Error::ParsePauli(s.to_string()));
        }
        let letters = body
            .chars()
            .map(PauliLetter::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::ParsePauli(s.to_string()))?;
        Ok(PauliOperator::from_letters(&letters).with_phase(phase))
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn reverse_low_bits(mask: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - n)
    }
}

/// Every phase-0 operator of weight at most `max_weight`, ordered by weight
/// and then by `(x_mask, z_mask)`.
pub fn enumerate_paulis(n: usize, max_weight: usize) -> Result<Vec<PauliOperator>> {
    if max_weight > n {
        return Err(Error::WeightOutOfRange { max_weight, n });
    }
    let side = 1u64 << n;
    let mut out: Vec<PauliOperator> = Vec::new();
    for x in 0..side {
        for z in 0..side {
            if ((x | z).count_ones() as usize) <= max_weight {
                out.push(PauliOperator::from_masks(n, x, z));
            }
        }
    }
    out.sort_by_key(|p| (p.weight(), p.x_mask, p.z_mask));
    Ok(out)
}

/// Number of phase-0 operators of weight exactly `w` on `n` qubits.
pub fn count_of_weight(n: usize, w: usize) -> usize {
    if w > n {
        return 0;
    }
    let mut binom = 1usize;
    for i in 0..w {
        binom = binom * (n - i) / (i + 1);
    }
    binom * 3usize.pow(w as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PauliLetter::*;

    fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
        a.kronecker(b)
    }

    fn letter_dense(l: PauliLetter) -> DMatrix<C64> {
        let m = l.matrix();
        DMatrix::from_row_slice(2, 2, &[m[0][0], m[0][1], m[1][0], m[1][1]])
    }

    /// Kronecker-product oracle, left factor = qubit 0.
    fn oracle_dense(p: &PauliOperator) -> DMatrix<C64> {
        let mut m = DMatrix::from_element(1, 1, p.phase_factor());
        for l in p.letters() {
            m = kron(&m, &letter_dense(l));
        }
        m
    }

    #[test]
    fn letters_to_masks() {
        let tau = PauliOperator::from_letters(&[I, I, X, X, X]);
        assert_eq!(tau.x_mask(), 0b11100);
        assert_eq!(tau.z_mask(), 0);
        assert_eq!(tau.phase(), 0);
        assert_eq!(tau.letters(), vec![I, I, X, X, X]);

        let id = PauliOperator::from_letters(&[I; 5]);
        assert_eq!((id.x_mask(), id.z_mask(), id.weight()), (0, 0, 0));

        let e1 = PauliOperator::from_letters(&[I, I, Y, Z, Y]);
        assert_eq!(e1.weight(), 3);
    }

    #[test]
    fn weights() {
        assert_eq!(PauliOperator::identity(5).weight(), 0);
        assert_eq!("IZIXX".parse::<PauliOperator>().unwrap().weight(), 3);
        assert_eq!("XZIII".parse::<PauliOperator>().unwrap().weight(), 2);
    }

    #[test]
    fn single_qubit_products() {
        let x: PauliOperator = "X".parse().unwrap();
        let z: PauliOperator = "Z".parse().unwrap();
        let y: PauliOperator = "Y".parse().unwrap();
        assert_eq!(x.multiply(&x).unwrap(), PauliOperator::identity(1));
        // XZ = -iY, checked against the 2x2 product
        let xz = x.multiply(&z).unwrap();
        assert_eq!(xz, y.with_phase(3));
        let direct = letter_dense(X) * letter_dense(Z);
        assert!((xz.dense() - direct).norm() < 1e-12);
        let p: PauliOperator = "iXYZ".parse().unwrap();
        assert_eq!(p.multiply(&PauliOperator::identity(3)).unwrap(), p);
    }

    #[test]
    fn mismatched_product() {
        let a = PauliOperator::identity(2);
        let b = PauliOperator::identity(3);
        assert!(matches!(a.multiply(&b), Err(Error::QubitMismatch { .. })));
    }

    #[test]
    fn dagger_phases() {
        let p: PauliOperator = "XYZ".parse().unwrap();
        assert_eq!(p.dagger(), p);
        assert_eq!(p.with_phase(1).dagger(), p.with_phase(3));
    }

    #[test]
    fn dense_matches_kronecker_oracle() {
        for n in 1..=3 {
            for p in enumerate_paulis(n, n).unwrap() {
                for k in 0..4 {
                    let p = p.with_phase(k);
                    assert!((p.dense() - oracle_dense(&p)).norm() < 1e-12, "{p}");
                }
            }
        }
    }

    #[test]
    fn products_match_dense_for_small_n() {
        for n in 1..=2 {
            let all = enumerate_paulis(n, n).unwrap();
            for p in &all {
                for q in &all {
                    let pq = p.with_phase(1).multiply(q).unwrap();
                    let want = oracle_dense(&p.with_phase(1)) * oracle_dense(q);
                    assert!((oracle_dense(&pq) - want).norm() < 1e-12, "{p} * {q}");
                    assert!(pq.weight() <= p.weight() + q.weight());
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_paulis(5, 1).unwrap().len(), 16);
        assert_eq!(enumerate_paulis(5, 5).unwrap().len(), 1024);
        let w2 = enumerate_paulis(4, 2)
            .unwrap()
            .into_iter()
            .filter(|p| p.weight() == 2)
            .count();
        assert_eq!(w2, 54);
        assert_eq!(count_of_weight(4, 2), 54);
        assert!(matches!(
            enumerate_paulis(3, 4),
            Err(Error::WeightOutOfRange { .. })
        ));
    }

    #[test]
    fn enumeration_is_distinct_and_ordered() {
        let all = enumerate_paulis(3, 3).unwrap();
        let set: std::collections::HashSet<_> =
            all.iter().map(|p| (p.x_mask(), p.z_mask())).collect();
        assert_eq!(set.len(), 64);
        assert!(all.windows(2).all(|w| {
            (w[0].weight(), w[0].x_mask(), w[0].z_mask())
                < (w[1].weight(), w[1].x_mask(), w[1].z_mask())
        }));
        assert!(all[0].is_identity());
    }

    #[test]
    fn basic_matrix_elements() {
        let zero2 = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ];
        let xi: PauliOperator = "XI".parse().unwrap();
        assert_eq!(
            xi.matrix_element(&zero2, &zero2).unwrap(),
            C64::new(0.0, 0.0)
        );
        let ii = PauliOperator::identity(2);
        assert_eq!(
            ii.matrix_element(&zero2, &zero2).unwrap(),
            C64::new(1.0, 0.0)
        );
        assert!(ii.matrix_element(&zero2, &zero2[..2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["IIYZY", "iXX", "-Z", "-iYI"] {
            let p: PauliOperator = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("".parse::<PauliOperator>().is_err());
        assert!("XQ".parse::<PauliOperator>().is_err());
        assert!("-".parse::<PauliOperator>().is_err());
    }

    #[test]
    fn shifts_move_factors_right() {
        let p: PauliOperator = "XZIII".parse().unwrap();
        assert_eq!(p.cyclic_shift(1).to_string(), "IXZII");
        assert_eq!(p.cyclic_shift(4).to_string(), "ZIIIX");
    }
}
