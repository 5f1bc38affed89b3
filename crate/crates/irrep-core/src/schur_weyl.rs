//! Permutation operators on tensor powers, the antisymmetric projector on a
//! doubled tensor power, and the block checks tying its rank-one blocks to
//! the conjugate-pair similarity unitaries.
//!
//! Tensor conventions: sites are ordered ascending and each doubled site
//! `ℂ^d_A ⊗ ℂ^d_B` is flattened A-major, so a site of local dimension `d²`
//! carries the index `a·d + b`. Basis states of `(ℂ^m)^⊗n` are flattened
//! big-endian (site 1 most significant). Vectorization is row-major:
//! `Ψ[C] = Σ_ij c_ij |i⟩⊗|j⟩`, which gives `(X ⊗ Y) Ψ[C] = Ψ[X C Yᵀ]`.

use num_complex::Complex64;
use thiserror::Error;

use crate::cmatrix::{to_complex, unvec_row_major, vec_row_major, CMat, CVec};
use crate::perm::{all_permutations, Permutation};
use crate::similarity::conjugated_yy_signs;
use crate::young::{enumerate_syt, Partition, YoungError};
use crate::yy::yy_matrix;

/// Dense tensor operators are capped at this side length.
pub const MAX_TENSOR_SIDE: usize = 4096;

/// Block invariance materializes all of `S(n)`; capped here.
pub const MAX_BLOCK_N: usize = 6;

#[derive(Debug, Error)]
pub enum SchurWeylError {
    #[error("tensor operator side {side} exceeds the cap {max}")]
    TooLarge { side: usize, max: usize },
    #[error("block check needs |λ| ≤ {max}, got {n}")]
    BlockTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    Similarity(#[from] crate::similarity::SimilarityError),
}

/// A dense operator on `(ℂ^site_dim)^⊗sites`.
#[derive(Debug, Clone)]
pub struct TensorOperator {
    pub site_dim: usize,
    pub sites: usize,
    pub matrix: CMat,
}

impl TensorOperator {
    pub fn side(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.diagonal().iter().sum()
    }
}

fn checked_side(site_dim: usize, sites: usize) -> Result<usize, SchurWeylError> {
    let mut side: usize = 1;
    for _ in 0..sites {
        side = side.saturating_mul(site_dim);
        if side > MAX_TENSOR_SIDE {
            return Err(SchurWeylError::TooLarge {
                side,
                max: MAX_TENSOR_SIDE,
            });
        }
    }
    Ok(side)
}

/// The operator permuting tensor factors: site `k` of the output carries the
/// input site `σ⁻¹(k)`, so on basis states
/// `V_σ (e_{i_1} ⊗ … ⊗ e_{i_n}) = e_{i_{σ⁻¹(1)}} ⊗ … ⊗ e_{i_{σ⁻¹(n)}}`.
pub fn permutation_operator(
    sigma: &Permutation,
    d: usize,
) -> Result<TensorOperator, SchurWeylError> {
    assert!(d >= 1, "local dimension must be positive");
    let n = sigma.n();
    let side = checked_side(d, n)?;
    let inverse = sigma.inverse();
    let mut matrix = CMat::zeros(side, side);
    let mut digits = vec![0usize; n];
    for col in 0..side {
        // Decode big-endian digits of the source basis index.
        let mut rem = col;
        for k in (0..n).rev() {
            digits[k] = rem % d;
            rem /= d;
        }
        let mut row = 0usize;
        for k in 1..=n {
            row = row * d + digits[inverse.apply(k) - 1];
        }
        matrix[(row, col)] = Complex64::ONE;
    }
    Ok(TensorOperator {
        site_dim: d,
        sites: n,
        matrix,
    })
}

/// Projector onto the antisymmetric subspace of `(ℂ^d ⊗ ℂ^d)^⊗n`:
/// `(1/n!) Σ_σ sgn(σ) V_σ^A ⊗ V_σ^B`, with the A and B factors of each site
/// fused into one site of local dimension `d²`.
pub fn antisymmetric_projector(d: usize, n: usize) -> Result<TensorOperator, SchurWeylError> {
    assert!(d >= 1 && n >= 1, "dimensions must be positive");
    let fused = d * d;
    let side = checked_side(fused, n)?;
    let mut acc = CMat::zeros(side, side);
    let perms = all_permutations(n);
    let order = perms.len() as f64;
    for sigma in &perms {
        let v = permutation_operator(sigma, fused)?;
        let sign = Complex64::new(sigma.sign() as f64 / order, 0.0);
        acc += v.matrix.map(|x| x * sign);
    }
    Ok(TensorOperator {
        site_dim: fused,
        sites: n,
        matrix: acc,
    })
}

/// A bipartite state given by its amplitudes on the product basis of
/// `ℂ^p ⊗ ℂ^q`.
#[derive(Debug, Clone)]
pub struct VecState {
    pub dim_pair: (usize, usize),
    pub amplitudes: CVec,
}

impl VecState {
    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Matrix `C` with `Ψ[C]` equal to this state.
    pub fn to_matrix(&self) -> CMat {
        unvec_row_major(&self.amplitudes, self.dim_pair.0, self.dim_pair.1)
    }
}

/// `Ψ[C]`: the state whose amplitude on `|i⟩⊗|j⟩` is `c_ij`.
pub fn vec_state(c: &CMat) -> VecState {
    VecState {
        dim_pair: c.shape(),
        amplitudes: vec_row_major(c),
    }
}

/// Max-norm residual of `(X ⊗ Y) Ψ[C] = Ψ[X C Yᵀ]` for conformable `X, Y, C`.
pub fn vec_correspondence_residual(x: &CMat, y: &CMat, c: &CMat) -> f64 {
    assert_eq!(x.ncols(), c.nrows(), "X columns must match C rows");
    assert_eq!(y.ncols(), c.ncols(), "Y columns must match C columns");
    let lhs = x.kronecker(y) * vec_row_major(c);
    let rhs = vec_row_major(&(x * c * y.transpose()));
    lhs.iter()
        .zip(rhs.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// The sign-weighted superposition of conjugate tableau pairs,
/// `Σ_T sgn(T) |T⟩ ⊗ |Tᵗ⟩`, with the first factor indexed by the tableaux of
/// `shape` and the second by those of its conjugate (both in row-Yamanouchi
/// order). Its squared norm is the number of tableaux.
pub fn paired_tableau_state(shape: &Partition) -> Result<VecState, SchurWeylError> {
    let n = shape.n();
    if n > crate::similarity::MAX_CONJUGATED_N {
        return Err(SchurWeylError::BlockTooLarge {
            n,
            max: crate::similarity::MAX_CONJUGATED_N,
        });
    }
    let tableaux = enumerate_syt(shape);
    let conj_tableaux = enumerate_syt(&shape.conjugate());
    let d = tableaux.len();
    let signs = conjugated_yy_signs(shape)?;
    let mut c = CMat::zeros(d, d);
    for (i, t) in tableaux.iter().enumerate() {
        let target = t.conjugate();
        let j = conj_tableaux
            .iter()
            .position(|u| *u == target)
            .expect("transpose is standard for the conjugate shape");
        c[(i, j)] = Complex64::new(signs[i] as f64, 0.0);
    }
    Ok(vec_state(&c))
}

/// Residuals of the invariance `(sgn(σ) · D^λ(σ) ⊗ D^{λᵗ}(σ)) Ψ = Ψ` over all
/// of `S(n)`, where `Ψ` is [`paired_tableau_state`]. This is the irrep-level
/// content of the antisymmetric projector's `(λ, λᵗ)` block being the
/// rank-one projector onto `Ψ`.
#[derive(Debug, Clone)]
pub struct BlockInvarianceReport {
    pub shape: Partition,
    pub dim_pair: (usize, usize),
    pub norm_sq: f64,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

pub fn block_invariance_check(
    shape: &Partition,
    tol: f64,
) -> Result<BlockInvarianceReport, SchurWeylError> {
    let n = shape.n();
    if n > MAX_BLOCK_N {
        return Err(SchurWeylError::BlockTooLarge {
            n,
            max: MAX_BLOCK_N,
        });
    }
    let conj = shape.conjugate();
    let state = paired_tableau_state(shape)?;
    let psi = &state.amplitudes;
    let mut max_residual = 0.0f64;
    for sigma in all_permutations(n) {
        let d_lambda =
            to_complex(&yy_matrix(shape, &sigma).map_err(crate::similarity::SimilarityError::Rep)?);
        let d_conj =
            to_complex(&yy_matrix(&conj, &sigma).map_err(crate::similarity::SimilarityError::Rep)?);
        let sign = Complex64::new(sigma.sign() as f64, 0.0);
        let action = d_lambda.map(|x| x * sign).kronecker(&d_conj);
        let moved = &action * psi;
        let residual = moved
            .iter()
            .zip(psi.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        max_residual = max_residual.max(residual);
    }
    Ok(BlockInvarianceReport {
        shape: shape.clone(),
        dim_pair: state.dim_pair,
        norm_sq: state.norm_sq(),
        max_residual,
        tol,
        pass: max_residual < tol,
    })
}
