//! Dense complex helpers: rank-revealing column spaces and orthogonal
//! completion by Householder reflections.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

/// Relative singular-value threshold for numerical rank.
pub const RANK_RTOL: f64 = 1e-8;

/// Singular values below this are zero regardless of scale.
const ABS_FLOOR: f64 = 1e-12;

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

/// Orthonormal basis of the column space of `m`, keeping singular
/// directions above `RANK_RTOL * sigma_max`.
pub fn column_space(m: &DMatrix<C64>) -> DMatrix<C64> {
    let rows = m.nrows();
    if m.ncols() == 0 || rows == 0 {
        return DMatrix::zeros(rows, 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested u");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax < ABS_FLOOR {
        return DMatrix::zeros(rows, 0);
    }
    let keep: Vec<usize> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > RANK_RTOL * smax)
        .map(|(i, _)| i)
        .collect();
    DMatrix::from_fn(rows, keep.len(), |r, c| u[(r, keep[c])])
}

/// Numerical rank with the same threshold as [`column_space`].
pub fn rank(m: &DMatrix<C64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax < ABS_FLOOR {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_RTOL * smax).count()
}

/// Largest singular value; 0 for an empty matrix.
pub fn spectral_norm(m: &DMatrix<C64>) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    m.clone()
        .singular_values()
        .iter()
        .cloned()
        .fold(0.0, f64::max)
}

/// Given orthonormal columns `q` (d x s), returns orthonormal columns
/// spanning their orthogonal complement (d x (d - s)).
pub fn orthogonal_completion(q: &DMatrix<C64>) -> DMatrix<C64> {
    let d = q.nrows();
    let s = q.ncols();
    assert!(s <= d);
    let mut a = q.clone();
    let mut reflectors: Vec<DMatrix<C64>> = Vec::with_capacity(s);
    for k in 0..s {
        let x = a.view((k, k), (d - k, 1)).clone_owned();
        let alpha = x.norm();
        let x0 = x[(0, 0)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let mut v = x;
        v[(0, 0)] += phase * alpha;
        let vnorm2 = v.norm_squared();
        if vnorm2 > 0.0 {
            let mut block = a.view_mut((k, k), (d - k, s - k));
            let proj = v.adjoint() * &block;
            block -= &v * proj * C64::new(2.0 / vnorm2, 0.0);
        }
        reflectors.push(v);
    }
    let mut w = DMatrix::from_fn(d, d - s, |r, c| {
        if r == s + c {
            C64::new(1.0, 0.0)
        } else {
            zero()
        }
    });
    for (k, v) in reflectors.iter().enumerate().rev() {
        let vnorm2 = v.norm_squared();
        if vnorm2 == 0.0 {
            continue;
        }
        let mut block = w.view_mut((k, 0), (d - k, d - s));
        let proj = v.adjoint() * &block;
        block -= v * proj * C64::new(2.0 / vnorm2, 0.0);
    }
    w
}
