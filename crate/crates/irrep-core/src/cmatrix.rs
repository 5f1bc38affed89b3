//! Dense complex/real matrix aliases and the residual helpers used throughout
//! the crate.
//!
//! All tolerances are max-norm (largest entry modulus) unless stated
//! otherwise; at the dimensions handled here (irreps of `S(N)` for `N ≤ 8`,
//! tensor operators up to side 4096) dense `f64` arithmetic keeps residuals
//! many orders of magnitude below the default tolerance.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense complex matrix.
pub type CMat = DMatrix<Complex64>;
/// Dense real matrix.
pub type RMat = DMatrix<f64>;
/// Dense complex vector.
pub type CVec = DVector<Complex64>;

/// Default tolerance for invariant checks (unitarity, homomorphism,
/// radicand clamping).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Complex identity matrix of side `n`.
pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Largest entry modulus of `m`.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-norm distance between two equally shaped matrices.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    assert_eq!(a.shape(), b.shape(), "max_abs_diff: shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `‖m† m − 1‖_max`.
pub fn unitarity_residual(m: &CMat) -> f64 {
    let n = m.ncols();
    max_abs_diff(&(m.adjoint() * m), &identity(n))
}

/// Lift a real matrix to a complex one.
pub fn to_complex(r: &RMat) -> CMat {
    CMat::from_fn(r.nrows(), r.ncols(), |i, j| Complex64::new(r[(i, j)], 0.0))
}

/// Row-major flattening of `c`, i.e. the coefficient vector of the state
/// whose amplitude on `|i⟩⊗|j⟩` is `c[i,j]`.
pub fn vec_row_major(c: &CMat) -> CVec {
    let (p, q) = c.shape();
    CVec::from_fn(p * q, |k, _| c[(k / q, k % q)])
}

/// Inverse of [`vec_row_major`] for a `p×q` target shape.
pub fn unvec_row_major(v: &CVec, p: usize, q: usize) -> CMat {
    assert_eq!(v.len(), p * q, "unvec_row_major: length mismatch");
    CMat::from_fn(p, q, |i, j| v[i * q + j])
}

/// Pseudo-random unitary obtained by orthonormalizing a matrix with uniform
/// complex entries (modified Gram-Schmidt, one re-orthogonalization pass).
/// Deterministic in `seed`.
pub fn random_unitary(n: usize, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let raw = CMat::from_fn(n, n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        if let Some(u) = gram_schmidt(&raw) {
            if unitarity_residual(&u) < 1e-12 {
                return u;
            }
        }
        // Degenerate draw; extremely unlikely, just draw again.
    }
}

fn gram_schmidt(m: &CMat) -> Option<CMat> {
    let n = m.ncols();
    let mut cols: Vec<CVec> = (0..n).map(|j| m.column(j).into_owned()).collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let proj = cols[k].dotc(&cols[j]);
                let prev = cols[k].clone();
                cols[j] -= prev * proj;
            }
        }
        let norm = cols[j].norm();
        if norm < 1e-8 {
            return None;
        }
        cols[j] /= Complex64::new(norm, 0.0);
    }
    Some(CMat::from_columns(&cols))
}

/// Map `0..count` through `f`, in parallel when the `parallel` feature is
/// enabled. Each index is computed independently, so the output is
/// deterministic regardless of scheduling. The `IRREP_THREADS` environment
/// variable caps the worker count.
pub(crate) fn map_indices<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        pool().install(|| (0..count).into_par_iter().map(f).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    use std::sync::OnceLock;
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("IRREP_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build worker pool")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary() {
        assert_eq!(unitarity_residual(&identity(4)), 0.0);
    }

    #[test]
    fn random_unitary_is_unitary_and_deterministic() {
        for seed in [0u64, 1, 42] {
            let u = random_unitary(3, seed);
            assert!(unitarity_residual(&u) < 1e-12);
            assert_eq!(u, random_unitary(3, seed));
        }
        assert!(max_abs_diff(&random_unitary(3, 1), &random_unitary(3, 2)) > 1e-3);
    }

    #[test]
    fn vec_round_trip() {
        let c = random_unitary(3, 7);
        let v = vec_row_major(&c);
        assert_eq!(unvec_row_major(&v, 3, 3), c);
    }

    #[test]
    fn vec_is_row_major() {
        let mut c = CMat::zeros(2, 3);
        c[(0, 1)] = Complex64::new(5.0, 0.0);
        c[(1, 2)] = Complex64::new(0.0, 7.0);
        let v = vec_row_major(&c);
        assert_eq!(v[1], Complex64::new(5.0, 0.0));
        assert_eq!(v[5], Complex64::new(0.0, 7.0));
    }
}
