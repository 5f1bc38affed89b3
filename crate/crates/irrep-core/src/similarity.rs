//! Construction of the unitary similarity transformation between two
//! equivalent unitary irreps, plus the verification predicates built on the
//! orthogonality relations.
//!
//! For unitary irreps `ϑ`, `ψ` of dimension `n` over a group `G`, the weight
//! of an index pair `(a, b)` is
//!
//! ```text
//! r_ab = √(n/|G|) · ( Σ_g ϑ_aa(g) ψ_bb(g⁻¹) )^½
//! ```
//!
//! and whenever `r_ab > 0` the matrix
//!
//! ```text
//! u_ij = (1/r_ab) · (n/|G|) · Σ_g conj(ϑ_ai(g)) ψ_bj(g)
//! ```
//!
//! is unitary and satisfies `U† ϑ(g) U = ψ(g)` for every `g`. If every weight
//! vanishes the irreps are inequivalent and `U = 0` (Schur). The squared
//! weights `(r_ab²)` always form a doubly stochastic matrix, which is what
//! guarantees the scan for a usable pair succeeds.
//!
//! For conjugate Young-Yamanouchi pairs the transformation has a closed form:
//! in row-Yamanouchi-ordered bases, the unitary taking `D^λ` to
//! `sgn · D^{λᵗ}` is anti-diagonal with entries `±1`, the sign over basis
//! tableau `T` being the parity of the permutation carrying the canonical row
//! filling to `T` ([`conjugated_yy_unitary`]).

use num_complex::Complex64;
use thiserror::Error;

use crate::cmatrix::{
    self, max_abs, max_abs_diff, to_complex, unitarity_residual, CMat, RMat, DEFAULT_TOL,
};
use crate::rep::MatrixIrrep;
use crate::young::{enumerate_syt, sigma_for_tableau, Partition, YoungError};
use crate::yy::yy_generator_matrix;

/// Largest `|λ|` accepted by the analytic conjugate-pair construction.
pub const MAX_CONJUGATED_N: usize = 8;

#[derive(Debug, Error)]
pub enum SimilarityError {
    #[error("representations have dimensions {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("representations are defined over different groups")]
    GroupMismatch,
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("weight radicand {value:.3e} below -tol; inputs are not equivalent unitary irreps")]
    NegativeRadicand { value: f64 },
    #[error("all pair weights at or below threshold {threshold:.1e}; irreps are inequivalent")]
    NoNonzeroWeight { threshold: f64 },
    #[error("input representation is not unitary (residual {residual:.3e} > tol {tol:.3e})")]
    NotUnitaryInput { residual: f64, tol: f64 },
    #[error("|λ| = {n} exceeds the guard {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    Rep(#[from] crate::rep::RepError),
}

/// Tolerances for the similarity machinery.
#[derive(Debug, Clone, Copy)]
pub struct SimilarityOptions {
    /// Tolerance for unitarity / residual checks and radicand clamping.
    pub tol: f64,
    /// Weights at or below this are treated as zero. A vanishing weight is
    /// computed as the square root of summation roundoff, which reaches
    /// ~1.4e-8 at |G| = 720 and stays below ~1e-7 through |G| = 8!; genuine
    /// weights are bounded below by `1/√(n·n!)` ≥ 1.7e-3 on the supported
    /// groups. The default sits between those bands with two orders of
    /// margin on each side.
    pub r_threshold: f64,
}

impl Default for SimilarityOptions {
    fn default() -> Self {
        SimilarityOptions {
            tol: DEFAULT_TOL,
            r_threshold: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceStatus {
    Equivalent,
    Inequivalent,
}

impl std::fmt::Display for EquivalenceStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EquivalenceStatus::Equivalent => write!(f, "equivalent"),
            EquivalenceStatus::Inequivalent => write!(f, "inequivalent"),
        }
    }
}

/// Output of [`similarity_unitary`] and [`conjugated_yy_unitary`].
#[derive(Debug, Clone)]
pub struct SimilarityResult {
    /// The transformation with `U† ϑ(g) U = ψ(g)`; zero when inequivalent.
    pub u: CMat,
    /// 1-based `(a, b)` used in the construction; `None` when inequivalent.
    pub index_pair: Option<(usize, usize)>,
    /// Weight of the chosen pair.
    pub r_ab: f64,
    /// `max_g ‖U† ϑ(g) U − ψ(g)‖_max`. The analytic conjugate-pair route
    /// evaluates this over the adjacent-transposition generators, which
    /// bound the whole group by the homomorphism property.
    pub residual: f64,
    /// `‖U† U − 1‖_max`.
    pub unitarity_residual: f64,
    pub status: EquivalenceStatus,
}

fn check_compatible(theta: &MatrixIrrep, psi: &MatrixIrrep) -> Result<(), SimilarityError> {
    if theta.dim() != psi.dim() {
        return Err(SimilarityError::DimensionMismatch {
            left: theta.dim(),
            right: psi.dim(),
        });
    }
    if !same_group(theta, psi) {
        return Err(SimilarityError::GroupMismatch);
    }
    Ok(())
}

fn same_group(theta: &MatrixIrrep, psi: &MatrixIrrep) -> bool {
    std::sync::Arc::ptr_eq(theta.group(), psi.group()) || theta.group() == psi.group()
}

/// The weight `r_ab` of the module formula; `a`, `b` are 1-based. The
/// radicand picks up `O(ε)` imaginary and negative parts in floating point;
/// its real part is clamped at zero and values below `−tol` are a hard error.
pub fn pair_weight(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    a: usize,
    b: usize,
) -> Result<f64, SimilarityError> {
    pair_weight_with(theta, psi, a, b, &SimilarityOptions::default())
}

pub fn pair_weight_with(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    a: usize,
    b: usize,
    opts: &SimilarityOptions,
) -> Result<f64, SimilarityError> {
    check_compatible(theta, psi)?;
    let n = theta.dim();
    for index in [a, b] {
        if index == 0 || index > n {
            return Err(SimilarityError::IndexOutOfRange { index, n });
        }
    }
    let group = theta.group();
    let order = group.order();
    let mut sum = Complex64::ZERO;
    for g in 0..order {
        let ginv = group.inv(g);
        sum += theta.matrix(g)[(a - 1, a - 1)] * psi.matrix(ginv)[(b - 1, b - 1)];
    }
    let radicand = sum.re;
    if radicand < -opts.tol {
        return Err(SimilarityError::NegativeRadicand { value: radicand });
    }
    Ok((n as f64 / order as f64).sqrt() * radicand.max(0.0).sqrt())
}

/// Lexicographically smallest (row-major) 1-based pair `(a, b)` whose weight
/// exceeds the threshold. The full grid is scanned so the search cannot miss
/// a usable pair.
pub fn find_index_pair(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    opts: &SimilarityOptions,
) -> Result<(usize, usize), SimilarityError> {
    check_compatible(theta, psi)?;
    let n = theta.dim();
    for a in 1..=n {
        for b in 1..=n {
            if pair_weight_with(theta, psi, a, b, opts)? > opts.r_threshold {
                return Ok((a, b));
            }
        }
    }
    Err(SimilarityError::NoNonzeroWeight {
        threshold: opts.r_threshold,
    })
}

fn max_unitarity_residual(rep: &MatrixIrrep) -> f64 {
    let res = cmatrix::map_indices(rep.group().order(), |g| unitarity_residual(rep.matrix(g)));
    res.into_iter().fold(0.0, f64::max)
}

/// Build the similarity unitary from the group-averaged formula, scanning for
/// the first usable index pair. Inequivalent inputs yield `U = 0` with
/// [`EquivalenceStatus::Inequivalent`] rather than an error.
pub fn similarity_unitary(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    opts: &SimilarityOptions,
) -> Result<SimilarityResult, SimilarityError> {
    check_compatible(theta, psi)?;
    for rep in [theta, psi] {
        let residual = max_unitarity_residual(rep);
        if residual > opts.tol {
            return Err(SimilarityError::NotUnitaryInput {
                residual,
                tol: opts.tol,
            });
        }
    }
    match find_index_pair(theta, psi, opts) {
        Ok((a, b)) => similarity_unitary_with_pair(theta, psi, a, b, opts),
        Err(SimilarityError::NoNonzeroWeight { .. }) => {
            let n = theta.dim();
            let u = CMat::zeros(n, n);
            let report = verify_similarity(theta, psi, &u, opts.tol);
            Ok(SimilarityResult {
                u,
                index_pair: None,
                r_ab: 0.0,
                residual: report.max_residual,
                unitarity_residual: report.unitarity_residual,
                status: EquivalenceStatus::Inequivalent,
            })
        }
        Err(e) => Err(e),
    }
}

/// The group-averaged unitary for an explicitly chosen pair `(a, b)`
/// (1-based). Different usable pairs give the same transformation up to a
/// global phase.
pub fn similarity_unitary_with_pair(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    a: usize,
    b: usize,
    opts: &SimilarityOptions,
) -> Result<SimilarityResult, SimilarityError> {
    check_compatible(theta, psi)?;
    let r = pair_weight_with(theta, psi, a, b, opts)?;
    if r <= opts.r_threshold {
        return Err(SimilarityError::NoNonzeroWeight {
            threshold: opts.r_threshold,
        });
    }
    let n = theta.dim();
    let group = theta.group();
    let order = group.order();
    let scale = n as f64 / (order as f64 * r);
    let entries = cmatrix::map_indices(n * n, |cell| {
        let (i, j) = (cell / n, cell % n);
        let mut sum = Complex64::ZERO;
        for g in 0..order {
            sum += theta.matrix(g)[(a - 1, i)].conj() * psi.matrix(g)[(b - 1, j)];
        }
        sum * scale
    });
    let u = CMat::from_fn(n, n, |i, j| entries[i * n + j]);
    let report = verify_similarity(theta, psi, &u, opts.tol);
    Ok(SimilarityResult {
        u,
        index_pair: Some((a, b)),
        r_ab: r,
        residual: report.max_residual,
        unitarity_residual: report.unitarity_residual,
        status: EquivalenceStatus::Equivalent,
    })
}

/// Residual report from checking `U† ϑ(g) U = ψ(g)` element by element.
#[derive(Debug, Clone)]
pub struct SimilarityReport {
    /// Max-norm residual per group element, in element order.
    pub per_element: Vec<f64>,
    pub max_residual: f64,
    pub unitarity_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Check a claimed transformation. Report-only: never fails, just measures.
pub fn verify_similarity(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    u: &CMat,
    tol: f64,
) -> SimilarityReport {
    assert_eq!(theta.dim(), u.nrows(), "U rows must match ϑ");
    assert_eq!(psi.dim(), u.ncols(), "U columns must match ψ");
    let order = theta.group().order();
    let per_element = cmatrix::map_indices(order, |g| {
        let transformed = u.adjoint() * theta.matrix(g) * u;
        max_abs_diff(&transformed, psi.matrix(g))
    });
    let max_residual = per_element.iter().copied().fold(0.0, f64::max);
    let unit = unitarity_residual(u);
    SimilarityReport {
        per_element,
        max_residual,
        unitarity_residual: unit,
        tol,
        pass: max_residual < tol && unit < tol,
    }
}

/// Which orthogonality regime a pair of irreps falls into.
#[derive(Debug, Clone)]
pub enum OrthogonalityCase {
    /// `ϑ = ψ` entrywise: `Σ_g ψ_ij(g) ϑ_kl(g⁻¹) = (|G|/n) δ_jk δ_il`.
    Equal { max_residual: f64 },
    /// Inequivalent: every sum vanishes.
    Inequivalent { max_residual: f64 },
    /// Equivalent but not equal: with `U` from [`similarity_unitary`],
    /// `conj(u_ab) · u_ij = (n/|G|) Σ_g ϑ_ia(g⁻¹) ψ_bj(g)` for all index
    /// tuples, and `|u_ab|² = r_ab²`. (Restating the relation with
    /// `conj(u_ab)` in place of `r_ab` fixes the per-pair phase: rescaling
    /// `U` by the phase of `u_ab` recovers the `r_ab`-normalized form for
    /// that pair. The weight comparison is made on squares because a
    /// vanishing weight itself carries a square-root-of-roundoff noise
    /// floor.)
    EquivalentNotEqual {
        relation_residual: f64,
        weight_residual: f64,
    },
}

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub case: OrthogonalityCase,
    pub tol: f64,
    pub pass: bool,
}

/// Classify a pair of irreps and verify the orthogonality relation that
/// applies to it. Report-only.
pub fn orthogonality_check(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    opts: &SimilarityOptions,
) -> Result<OrthogonalityReport, SimilarityError> {
    if !same_group(theta, psi) {
        return Err(SimilarityError::GroupMismatch);
    }
    let group = theta.group();
    let order = group.order();
    let sum_tuple = |i: usize, j: usize, k: usize, l: usize| {
        let mut sum = Complex64::ZERO;
        for g in 0..order {
            let ginv = group.inv(g);
            sum += psi.matrix(g)[(i, j)] * theta.matrix(ginv)[(k, l)];
        }
        sum
    };

    if theta.dim() == psi.dim() && theta.entrywise_equal(psi, opts.tol) {
        let n = theta.dim();
        let expected = order as f64 / n as f64;
        let residuals = cmatrix::map_indices(n * n, |cell| {
            let (i, j) = (cell / n, cell % n);
            let mut worst = 0.0f64;
            for k in 0..n {
                for l in 0..n {
                    let target = if j == k && i == l { expected } else { 0.0 };
                    let r = (sum_tuple(i, j, k, l) - Complex64::new(target, 0.0)).norm();
                    worst = worst.max(r);
                }
            }
            worst
        });
        let max_residual = residuals.into_iter().fold(0.0, f64::max);
        return Ok(OrthogonalityReport {
            case: OrthogonalityCase::Equal { max_residual },
            tol: opts.tol,
            pass: max_residual < opts.tol,
        });
    }

    if theta.dim() == psi.dim() {
        let result = similarity_unitary(theta, psi, opts)?;
        if result.status == EquivalenceStatus::Equivalent {
            let n = theta.dim();
            let u = &result.u;
            let scale = n as f64 / order as f64;
            let residuals = cmatrix::map_indices(n * n, |cell| {
                let (a, b) = (cell / n, cell % n);
                let u_ab = u[(a, b)];
                let mut relation = 0.0f64;
                for i in 0..n {
                    for j in 0..n {
                        // Σ_g ϑ_ia(g⁻¹) ψ_bj(g) = Σ_g conj(ϑ_ai(g)) ψ_bj(g).
                        let mut sum = Complex64::ZERO;
                        for g in 0..order {
                            sum += theta.matrix(g)[(a, i)].conj() * psi.matrix(g)[(b, j)];
                        }
                        let lhs = u_ab.conj() * u[(i, j)];
                        relation = relation.max((lhs - sum * scale).norm());
                    }
                }
                let weight = pair_weight_with(theta, psi, a + 1, b + 1, opts)
                    .map(|r| (u_ab.norm_sqr() - r * r).abs())
                    .unwrap_or(f64::INFINITY);
                (relation, weight)
            });
            let relation_residual = residuals.iter().map(|r| r.0).fold(0.0, f64::max);
            let weight_residual = residuals.iter().map(|r| r.1).fold(0.0, f64::max);
            return Ok(OrthogonalityReport {
                case: OrthogonalityCase::EquivalentNotEqual {
                    relation_residual,
                    weight_residual,
                },
                tol: opts.tol,
                pass: relation_residual < opts.tol && weight_residual < opts.tol,
            });
        }
    }

    // Different dimensions, or equal dimensions with every weight zero:
    // inequivalent, all sums must vanish.
    let (p, q) = (psi.dim(), theta.dim());
    let residuals = cmatrix::map_indices(p * p, |cell| {
        let (i, j) = (cell / p, cell % p);
        let mut worst = 0.0f64;
        for k in 0..q {
            for l in 0..q {
                worst = worst.max(sum_tuple(i, j, k, l).norm());
            }
        }
        worst
    });
    let max_residual = residuals.into_iter().fold(0.0, f64::max);
    Ok(OrthogonalityReport {
        case: OrthogonalityCase::Inequivalent { max_residual },
        tol: opts.tol,
        pass: max_residual < opts.tol,
    })
}

/// Row/column sums of the squared weight matrix `(r_ab²)`.
#[derive(Debug, Clone)]
pub struct DoublyStochasticReport {
    pub r_squared: RMat,
    pub max_row_deviation: f64,
    pub max_col_deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Verify that the squared weights form a doubly stochastic matrix.
pub fn doubly_stochastic_check(
    theta: &MatrixIrrep,
    psi: &MatrixIrrep,
    opts: &SimilarityOptions,
) -> Result<DoublyStochasticReport, SimilarityError> {
    check_compatible(theta, psi)?;
    let n = theta.dim();
    let weights = cmatrix::map_indices(n * n, |cell| {
        pair_weight_with(theta, psi, cell / n + 1, cell % n + 1, opts)
    });
    let mut r_squared = RMat::zeros(n, n);
    for (cell, w) in weights.into_iter().enumerate() {
        let r = w?;
        r_squared[(cell / n, cell % n)] = r * r;
    }
    let max_row_deviation = (0..n)
        .map(|a| ((0..n).map(|b| r_squared[(a, b)]).sum::<f64>() - 1.0).abs())
        .fold(0.0, f64::max);
    let max_col_deviation = (0..n)
        .map(|b| ((0..n).map(|a| r_squared[(a, b)]).sum::<f64>() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(DoublyStochasticReport {
        r_squared,
        max_row_deviation,
        max_col_deviation,
        tol: opts.tol,
        pass: max_row_deviation < opts.tol && max_col_deviation < opts.tol,
    })
}

/// Signs `sgn(σ_i)` indexed like the tableau basis of `shape`: `σ_i` carries
/// the canonical row filling to the `i`-th tableau in row-Yamanouchi order.
pub fn conjugated_yy_signs(shape: &Partition) -> Result<Vec<i32>, SimilarityError> {
    let tableaux = enumerate_syt(shape);
    let reference = &tableaux[0];
    tableaux
        .iter()
        .map(|t| Ok(sigma_for_tableau(t, reference)?.sign()))
        .collect()
}

/// Analytic similarity transformation between the conjugate Young-Yamanouchi
/// pair: the returned `U` satisfies `D^{λᵗ}(σ) = sgn(σ) · U D^λ(σ) U†`, i.e.
/// `U† ϑ U = ψ` with `ϑ = D^{λᵗ}` and `ψ = sgn·D^λ`.
///
/// `U = Σ_i sgn(σ_i) |T_i^t⟩⟨T_i|` maps the basis tableau `T_i` of `λ` to its
/// transpose in the `λᵗ` basis; with both bases in row-Yamanouchi order the
/// matrix is anti-diagonal with `±1` entries. The residual is evaluated over
/// the adjacent-transposition generators.
pub fn conjugated_yy_unitary(shape: &Partition) -> Result<SimilarityResult, SimilarityError> {
    let n = shape.n();
    if n > MAX_CONJUGATED_N {
        return Err(SimilarityError::TooLarge {
            n,
            max: MAX_CONJUGATED_N,
        });
    }
    let conj = shape.conjugate();
    let tableaux = enumerate_syt(shape);
    let tableaux_t = enumerate_syt(&conj);
    let d = tableaux.len();
    let signs = conjugated_yy_signs(shape)?;
    let position_in_conj = |t: &crate::young::StandardTableau| -> usize {
        let target = t.conjugate();
        tableaux_t
            .iter()
            .position(|u| *u == target)
            .expect("transpose of a standard tableau is standard for the conjugate shape")
    };
    let mut u_real = RMat::zeros(d, d);
    for (i, t) in tableaux.iter().enumerate() {
        u_real[(position_in_conj(t), i)] = signs[i] as f64;
    }
    let u = to_complex(&u_real);

    // Generator-level residual of D^{λᵗ}(k k+1) = −U D^λ(k k+1) U†.
    let mut residual = 0.0f64;
    for k in 1..n {
        let d_lambda = yy_generator_matrix(shape, k)?;
        let d_conj = yy_generator_matrix(&conj, k)?;
        let transformed = -(&u_real * d_lambda * u_real.transpose());
        let diff = (transformed - d_conj)
            .iter()
            .map(|x| x.abs())
            .fold(0.0, f64::max);
        residual = residual.max(diff);
    }

    Ok(SimilarityResult {
        unitarity_residual: unitarity_residual(&u),
        // The top-right slot pairs the first λ tableau with the last λᵗ one;
        // its weight is exactly 1 (the squared-weight matrix is the
        // anti-identity permutation matrix for this pair of irreps).
        index_pair: Some((1, d)),
        r_ab: 1.0,
        residual,
        status: EquivalenceStatus::Equivalent,
        u,
    })
}

/// Result of comparing two matrices up to a global unit-modulus factor.
#[derive(Debug, Clone, Copy)]
pub struct PhaseAgreement {
    pub agrees: bool,
    /// The factor `c` with `U₁ ≈ c · U₂`, from the largest-modulus entry of `U₂`.
    pub phase: Complex64,
    pub residual: f64,
}

/// Do `u1` and `u2` agree up to a global phase at `tol`?
pub fn agree_up_to_phase(u1: &CMat, u2: &CMat, tol: f64) -> PhaseAgreement {
    assert_eq!(u1.shape(), u2.shape(), "agree_up_to_phase: shape mismatch");
    let mut best = (0usize, 0usize);
    let mut best_abs = -1.0f64;
    for i in 0..u2.nrows() {
        for j in 0..u2.ncols() {
            let a = u2[(i, j)].norm();
            if a > best_abs {
                best_abs = a;
                best = (i, j);
            }
        }
    }
    if best_abs < tol {
        // u2 ≈ 0: agreement means u1 ≈ 0 too.
        let residual = max_abs(u1);
        return PhaseAgreement {
            agrees: residual < tol,
            phase: Complex64::ONE,
            residual,
        };
    }
    let raw = u1[best] / u2[best];
    let phase = if raw.norm() > 1e-12 {
        raw / raw.norm()
    } else {
        Complex64::ONE
    };
    let residual = max_abs_diff(u1, &(u2.map(|z| z * phase)));
    PhaseAgreement {
        agrees: residual < tol,
        phase,
        residual,
    }
}

/// Read the anti-diagonal of a `±1` anti-diagonal matrix from the top-right
/// corner to the bottom-left. `None` if the matrix has any other structure.
pub fn antidiagonal_signs(u: &CMat, tol: f64) -> Option<Vec<i32>> {
    let d = u.nrows();
    if u.ncols() != d {
        return None;
    }
    let mut signs = Vec::with_capacity(d);
    for r in 0..d {
        for c in 0..d {
            let z = u[(r, c)];
            if c == d - 1 - r {
                if (z.norm() - 1.0).abs() > tol || z.im.abs() > tol {
                    return None;
                }
                signs.push(if z.re > 0.0 { 1 } else { -1 });
            } else if z.norm() > tol {
                return None;
            }
        }
    }
    Some(signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmatrix::{identity, random_unitary};
    use crate::group::enumerate_symmetric_group;
    use crate::reference;
    use crate::rep::MatrixIrrep;
    use crate::young::partitions_of;
    use crate::yy::build_yy_irrep;
    use std::sync::Arc;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn opts() -> SimilarityOptions {
        SimilarityOptions::default()
    }

    /// Conjugate a representation by a fixed unitary: ψ(g) = V† ϑ(g) V.
    fn conjugated_rep(theta: &MatrixIrrep, v: &CMat) -> MatrixIrrep {
        let matrices = (0..theta.group().order())
            .map(|g| v.adjoint() * theta.matrix(g) * v)
            .collect();
        MatrixIrrep::new(Arc::clone(theta.group()), matrices, None, 1e-8).unwrap()
    }

    #[test]
    fn weight_examples_from_s3() {
        let phi = reference::rep_phi();
        let psi = reference::rep_psi_epsilon();
        let r11 = pair_weight(&phi, &psi, 1, 1).unwrap();
        assert!((r11 - 0.5f64.sqrt()).abs() < 1e-12);

        // Same irrep: classical orthogonality makes every diagonal weight 1/√n · √n = 1 for dim 1.
        let group = enumerate_symmetric_group(3).unwrap();
        let trivial = build_yy_irrep(&shape(&[3]), &group).unwrap();
        let r = pair_weight(&trivial, &trivial, 1, 1).unwrap();
        assert!((r - 1.0).abs() < 1e-12);

        let psi_bar = reference::rep_psi_epsilon_bar();
        let r11 = pair_weight(&psi, &psi_bar, 1, 1).unwrap();
        let r12 = pair_weight(&psi, &psi_bar, 1, 2).unwrap();
        assert!(r11.abs() < 1e-12);
        assert!((r12 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn index_pair_scan() {
        let phi = reference::rep_phi();
        let psi = reference::rep_psi_epsilon();
        assert_eq!(find_index_pair(&phi, &psi, &opts()).unwrap(), (1, 1));
        let psi_bar = reference::rep_psi_epsilon_bar();
        assert_eq!(find_index_pair(&psi, &psi_bar, &opts()).unwrap(), (1, 2));

        let group = enumerate_symmetric_group(3).unwrap();
        let trivial = build_yy_irrep(&shape(&[3]), &group).unwrap();
        let sign_rep = build_yy_irrep(&shape(&[1, 1, 1]), &group).unwrap();
        assert!(matches!(
            find_index_pair(&trivial, &sign_rep, &opts()),
            Err(SimilarityError::NoNonzeroWeight { .. })
        ));
    }

    #[test]
    fn pair_weight_argument_guards() {
        let phi = reference::rep_phi();
        let psi = reference::rep_psi_epsilon();
        assert!(matches!(
            pair_weight(&phi, &psi, 0, 1),
            Err(SimilarityError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            pair_weight(&phi, &psi, 1, 3),
            Err(SimilarityError::IndexOutOfRange { .. })
        ));
        let group = enumerate_symmetric_group(3).unwrap();
        let trivial = build_yy_irrep(&shape(&[3]), &group).unwrap();
        assert!(matches!(
            pair_weight(&phi, &trivial, 1, 1),
            Err(SimilarityError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn worked_examples_reproduce_printed_unitaries() {
        let o = opts();
        // ϑ = φ, ψ = ψ^ε.
        let result =
            similarity_unitary(&reference::rep_phi(), &reference::rep_psi_epsilon(), &o).unwrap();
        assert_eq!(result.index_pair, Some((1, 1)));
        assert!((result.r_ab - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(max_abs_diff(&result.u, &reference::example1_u()) < 1e-10);
        assert!(result.residual < 1e-12);

        // ψ^ε against its complex conjugate: the transformation is the swap.
        let result = similarity_unitary(
            &reference::rep_psi_epsilon(),
            &reference::rep_psi_epsilon_bar(),
            &o,
        )
        .unwrap();
        assert!(max_abs_diff(&result.u, &reference::example2_u()) < 1e-12);

        // ψ^ε against its sign twist: diag(1, −1).
        let result = similarity_unitary(
            &reference::rep_psi_epsilon(),
            &reference::rep_sign_psi_epsilon(),
            &o,
        )
        .unwrap();
        assert!(max_abs_diff(&result.u, &reference::example3_u()) < 1e-12);
    }

    #[test]
    fn verify_similarity_reports() {
        let phi = reference::rep_phi();
        let report = verify_similarity(&phi, &phi, &identity(2), 1e-9);
        assert!(report.pass);
        assert_eq!(report.max_residual, 0.0);

        let psi = reference::rep_psi_epsilon();
        let good = verify_similarity(&phi, &psi, &reference::example1_u(), 1e-9);
        assert!(good.pass);
        assert!(good.max_residual < 1e-12);

        let bad = verify_similarity(&phi, &psi, &identity(2), 1e-9);
        assert!(!bad.pass);
        assert!(bad.max_residual >= 0.5);
    }

    #[test]
    fn orthogonality_three_regimes() {
        let o = opts();
        let group = enumerate_symmetric_group(3).unwrap();
        let std_rep = build_yy_irrep(&shape(&[2, 1]), &group).unwrap();
        let report = orthogonality_check(&std_rep, &std_rep, &o).unwrap();
        match report.case {
            OrthogonalityCase::Equal { max_residual } => assert!(max_residual < 1e-12),
            _ => panic!("expected equal case"),
        }
        assert!(report.pass);

        let trivial = build_yy_irrep(&shape(&[3]), &group).unwrap();
        let sign_rep = build_yy_irrep(&shape(&[1, 1, 1]), &group).unwrap();
        let report = orthogonality_check(&trivial, &sign_rep, &o).unwrap();
        match report.case {
            OrthogonalityCase::Inequivalent { max_residual } => assert!(max_residual < 1e-12),
            _ => panic!("expected inequivalent case"),
        }

        let report =
            orthogonality_check(&reference::rep_phi(), &reference::rep_psi_epsilon(), &o).unwrap();
        match report.case {
            OrthogonalityCase::EquivalentNotEqual {
                relation_residual,
                weight_residual,
            } => {
                assert!(relation_residual < 1e-10);
                assert!(weight_residual < 1e-10);
            }
            _ => panic!("expected equivalent-not-equal case"),
        }
        assert!(report.pass);
    }

    #[test]
    fn doubly_stochastic_reports() {
        let o = opts();
        let psi = reference::rep_psi_epsilon();
        let psi_bar = reference::rep_psi_epsilon_bar();
        let report = doubly_stochastic_check(&psi, &psi_bar, &o).unwrap();
        assert!(report.pass);
        assert!((report.r_squared[(0, 0)]).abs() < 1e-12);
        assert!((report.r_squared[(0, 1)] - 1.0).abs() < 1e-12);
        assert!((report.r_squared[(1, 0)] - 1.0).abs() < 1e-12);

        // Equal irreps: the weight matrix is the identity.
        let group = enumerate_symmetric_group(3).unwrap();
        let std_rep = build_yy_irrep(&shape(&[2, 1]), &group).unwrap();
        let report = doubly_stochastic_check(&std_rep, &std_rep, &o).unwrap();
        assert!(report.pass);
        assert!((report.r_squared[(0, 0)] - 1.0).abs() < 1e-12);
        assert!(report.r_squared[(0, 1)].abs() < 1e-12);

        // Conjugate pair of S(4), shape (3,1): anti-identity.
        let group4 = enumerate_symmetric_group(4).unwrap();
        let lam = shape(&[3, 1]);
        let theta = build_yy_irrep(&lam.conjugate(), &group4).unwrap();
        let psi = build_yy_irrep(&lam, &group4)
            .unwrap()
            .sign_twisted()
            .unwrap();
        let report = doubly_stochastic_check(&theta, &psi, &o).unwrap();
        assert!(report.pass);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i + j == 2 { 1.0 } else { 0.0 };
                assert!((report.r_squared[(i, j)] - expected).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn conjugated_unitary_small_shapes() {
        // (2,2): fully pinned matrix.
        let result = conjugated_yy_unitary(&shape(&[2, 2])).unwrap();
        let expected = to_complex(&RMat::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]));
        assert_eq!(result.u, expected);
        assert!(result.residual < 1e-12);
        assert!(result.unitarity_residual == 0.0);

        // (3,1): anti-diagonal (−1, 1, −1) top-right to bottom-left, up to a
        // single global sign.
        let result = conjugated_yy_unitary(&shape(&[3, 1])).unwrap();
        let signs = antidiagonal_signs(&result.u, 1e-12).unwrap();
        assert!(signs == vec![-1, 1, -1] || signs == vec![1, -1, 1]);

        let too_big = shape(&[5, 4]);
        assert!(matches!(
            conjugated_yy_unitary(&too_big),
            Err(SimilarityError::TooLarge { .. })
        ));
    }

    #[test]
    fn conjugated_unitary_matches_direct_verification() {
        // Self-conjugate (2,1): the analytic matrix must satisfy the full
        // group-level identity against sgn·D^{(2,1)}; diag(1,−1) is the same
        // transformation in the ψ^ε basis.
        let group = enumerate_symmetric_group(3).unwrap();
        let lam = shape(&[2, 1]);
        let theta = build_yy_irrep(&lam.conjugate(), &group).unwrap();
        let psi = build_yy_irrep(&lam, &group)
            .unwrap()
            .sign_twisted()
            .unwrap();
        let result = conjugated_yy_unitary(&lam).unwrap();
        let report = verify_similarity(&theta, &psi, &result.u, 1e-11);
        assert!(report.pass, "residual {}", report.max_residual);
    }

    #[test]
    fn conjugated_unitary_squares_to_signed_identity_when_self_conjugate() {
        for parts in [vec![2, 1], vec![2, 2], vec![3, 1, 1], vec![3, 2, 1]] {
            let lam = shape(&parts);
            assert!(lam.is_self_conjugate());
            let u = conjugated_yy_unitary(&lam).unwrap().u;
            let square = &u * &u;
            let d = square.nrows();
            let plus = max_abs_diff(&square, &identity(d));
            let minus = max_abs_diff(&square, &(identity(d).map(|z| -z)));
            assert!(
                plus < 1e-12 || minus < 1e-12,
                "U² is not ±1 for {lam}: residuals {plus:.2e}/{minus:.2e}"
            );
        }
    }

    #[test]
    fn analytic_agrees_with_group_average_on_s4() {
        let o = opts();
        let group = enumerate_symmetric_group(4).unwrap();
        for lam in partitions_of(4) {
            let theta = build_yy_irrep(&lam.conjugate(), &group).unwrap();
            let psi = build_yy_irrep(&lam, &group)
                .unwrap()
                .sign_twisted()
                .unwrap();
            let averaged = similarity_unitary(&theta, &psi, &o).unwrap();
            let analytic = conjugated_yy_unitary(&lam).unwrap();
            let agreement = agree_up_to_phase(&averaged.u, &analytic.u, 1e-9);
            assert!(
                agreement.agrees,
                "analytic and averaged unitaries differ for {lam}: {:.2e}",
                agreement.residual
            );
        }
    }

    #[test]
    fn different_pairs_agree_up_to_phase() {
        let o = opts();
        let phi = reference::rep_phi();
        let psi = reference::rep_psi_epsilon();
        let base = similarity_unitary(&phi, &psi, &o).unwrap();
        let mut usable = 0;
        for a in 1..=2 {
            for b in 1..=2 {
                if pair_weight(&phi, &psi, a, b).unwrap() > o.r_threshold {
                    usable += 1;
                    let other = similarity_unitary_with_pair(&phi, &psi, a, b, &o).unwrap();
                    let agreement = agree_up_to_phase(&other.u, &base.u, 1e-10);
                    assert!(
                        agreement.agrees,
                        "pair ({a},{b}) residual {}",
                        agreement.residual
                    );
                }
            }
        }
        assert!(usable >= 2);
    }

    #[test]
    fn random_conjugation_round_trip() {
        let o = opts();
        let group = enumerate_symmetric_group(4).unwrap();
        let theta = build_yy_irrep(&shape(&[3, 1]), &group).unwrap();
        for seed in [3u64, 17, 2024] {
            let v = random_unitary(3, seed);
            let psi = conjugated_rep(&theta, &v);
            let result = similarity_unitary(&theta, &psi, &o).unwrap();
            assert_eq!(result.status, EquivalenceStatus::Equivalent);
            let agreement = agree_up_to_phase(&result.u, &v, 1e-8);
            assert!(
                agreement.agrees,
                "seed {seed}: residual {}",
                agreement.residual
            );
        }
    }

    #[test]
    fn averaged_intertwiner_oracle() {
        // Independent route to the intertwiner: group-average ϑ(g) Z ψ(g⁻¹)
        // for a generic seed matrix Z. The result must commute the reps and
        // be proportional to the similarity unitary.
        let o = opts();
        let phi = reference::rep_phi();
        let psi = reference::rep_psi_epsilon();
        let group = phi.group();
        let z = random_unitary(2, 99);
        let order = group.order();
        let mut averaged = CMat::zeros(2, 2);
        for g in 0..order {
            averaged += phi.matrix(g) * &z * psi.matrix(group.inv(g));
        }
        averaged *= Complex64::new(2.0 / order as f64, 0.0);
        for g in 0..order {
            let left = phi.matrix(g) * &averaged;
            let right = &averaged * psi.matrix(g);
            assert!(max_abs_diff(&left, &right) < 1e-12);
        }
        let u = similarity_unitary(&phi, &psi, &o).unwrap().u;
        // averaged = c·U for some complex scalar c; scale-match on the
        // largest entry of U and compare entrywise.
        assert!(max_abs(&averaged) > 1e-8, "averaging collapsed to zero");
        let (mut bi, mut bj, mut best) = (0, 0, -1.0f64);
        for i in 0..2 {
            for j in 0..2 {
                if u[(i, j)].norm() > best {
                    best = u[(i, j)].norm();
                    (bi, bj) = (i, j);
                }
            }
        }
        let c = averaged[(bi, bj)] / u[(bi, bj)];
        let residual = max_abs_diff(&averaged, &u.map(|z| z * c));
        assert!(residual < 1e-10, "residual {residual}");
    }

    #[test]
    fn inequivalent_inputs_return_typed_status() {
        let o = opts();
        let group = enumerate_symmetric_group(4).unwrap();
        let a = build_yy_irrep(&shape(&[3, 1]), &group).unwrap();
        let b = build_yy_irrep(&shape(&[2, 1, 1]), &group).unwrap();
        for x in 1..=3 {
            for y in 1..=3 {
                // The radicand of a vanishing weight is summation roundoff
                // (~1e-16 here), and the square root amplifies it to ~1e-8.
                // That is why the zero/nonzero threshold sits at 1e-8 while
                // genuine weights stay ≥ 1/√n.
                assert!(pair_weight(&a, &b, x, y).unwrap() < o.r_threshold);
            }
        }
        let result = similarity_unitary(&a, &b, &o).unwrap();
        assert_eq!(result.status, EquivalenceStatus::Inequivalent);
        assert_eq!(result.index_pair, None);
        assert_eq!(max_abs(&result.u), 0.0);
    }

    #[test]
    fn phase_agreement_cases() {
        let u = random_unitary(3, 5);
        let same = agree_up_to_phase(&u, &u, 1e-12);
        assert!(same.agrees);
        assert!((same.phase - Complex64::ONE).norm() < 1e-12);

        let negated = u.map(|z| -z);
        let flip = agree_up_to_phase(&u, &negated, 1e-12);
        assert!(flip.agrees);
        assert!((flip.phase + Complex64::ONE).norm() < 1e-12);

        let phase = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let rotated = u.map(|z| z * phase);
        let agreement = agree_up_to_phase(&rotated, &u, 1e-12);
        assert!(agreement.agrees);
        assert!((agreement.phase - phase).norm() < 1e-12);
        // Reconstruction: rotating back recovers the original.
        let back = rotated.map(|z| z * agreement.phase.conj());
        assert!(max_abs_diff(&back, &u) < 1e-12);

        let other = random_unitary(3, 6);
        assert!(!agree_up_to_phase(&u, &other, 1e-6).agrees);
    }

    #[test]
    fn sign_twisted_conjugate_of_two_two_is_equivalent_not_equal() {
        let o = opts();
        let group = enumerate_symmetric_group(4).unwrap();
        let lam = shape(&[2, 2]);
        let d_lam = build_yy_irrep(&lam, &group).unwrap();
        let twisted_conj = build_yy_irrep(&lam.conjugate(), &group)
            .unwrap()
            .sign_twisted()
            .unwrap();
        assert!(!d_lam.entrywise_equal(&twisted_conj, 1e-9));
        let result = similarity_unitary(&twisted_conj, &d_lam, &o).unwrap();
        assert_eq!(result.status, EquivalenceStatus::Equivalent);
        assert!(result.residual < 1e-11);
    }
}
