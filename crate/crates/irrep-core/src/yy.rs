//! The Young-Yamanouchi (orthogonal) irreducible representations of `S(N)`.
//!
//! Basis vectors are the standard tableaux of the shape, ordered by row
//! Yamanouchi symbol (see [`crate::young::enumerate_syt`]). On that basis the
//! adjacent transposition `(k k+1)` acts on the tableau `T` by
//!
//! * a diagonal coefficient `1/ρ` where `ρ` is the axial distance from the
//!   box of `k+1` to the box of `k` in `T`, and
//! * an off-diagonal coefficient `√(1 − 1/ρ²)` towards the tableau with `k`
//!   and `k+1` swapped, present exactly when that swap is again standard.
//!
//! General elements are products of generator matrices along
//! [`Permutation::adjacent_factorization`], multiplied left to right in word
//! order; with `(p ∘ q)(i) = p(q(i))` this makes `σ ↦ D(σ)` a homomorphism
//! acting on column vectors (verified exhaustively in the tests).

use std::sync::Arc;

use nalgebra::DMatrix;

use crate::cmatrix::{to_complex, RMat, DEFAULT_TOL};
use crate::group::GroupTable;
use crate::perm::Permutation;
use crate::rep::{MatrixIrrep, RepError};
use crate::young::{axial_distance, enumerate_syt, Partition, StandardTableau};

/// Basis labels: the row Yamanouchi symbols in basis order.
pub fn yy_basis_labels(shape: &Partition) -> Vec<String> {
    enumerate_syt(shape)
        .iter()
        .map(|t| t.row_yamanouchi().to_string())
        .collect()
}

/// Matrix of the adjacent transposition `(k k+1)` on the Young-Yamanouchi
/// basis of `shape`; real, symmetric and orthogonal. `k` is 1-based.
pub fn yy_generator_matrix(shape: &Partition, k: usize) -> Result<RMat, RepError> {
    let n = shape.n();
    if k == 0 || k + 1 > n {
        return Err(RepError::IndexOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let tableaux = enumerate_syt(shape);
    Ok(generator_on_basis(&tableaux, k))
}

fn generator_on_basis(tableaux: &[StandardTableau], k: usize) -> RMat {
    let d = tableaux.len();
    let index_of = |t: &StandardTableau| -> usize {
        tableaux
            .iter()
            .position(|u| u == t)
            .expect("swap of a standard tableau stays within the shape")
    };
    let mut m = DMatrix::zeros(d, d);
    for (i, t) in tableaux.iter().enumerate() {
        let rho = axial_distance(t, k + 1, k).expect("values k, k+1 present") as f64;
        m[(i, i)] = 1.0 / rho;
        if let Some(swapped) = swap_values(t, k) {
            let j = index_of(&swapped);
            m[(j, i)] = (1.0 - 1.0 / (rho * rho)).sqrt();
        }
    }
    m
}

/// Swap values `k` and `k+1` in `t`; `Some` only when the result is again a
/// standard tableau (i.e. `k` and `k+1` are in different rows and columns).
fn swap_values(t: &StandardTableau, k: usize) -> Option<StandardTableau> {
    let rows: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| {
                    if v == k {
                        k + 1
                    } else if v == k + 1 {
                        k
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    StandardTableau::new(rows).ok()
}

/// Representation matrix of an arbitrary permutation, as the product of
/// generator matrices along its reduced word.
pub fn yy_matrix(shape: &Partition, sigma: &Permutation) -> Result<RMat, RepError> {
    let n = shape.n();
    if sigma.n() != n {
        return Err(RepError::DomainMismatch {
            got: sigma.n(),
            expected: n,
        });
    }
    let tableaux = enumerate_syt(shape);
    let generators: Vec<RMat> = (1..n).map(|k| generator_on_basis(&tableaux, k)).collect();
    Ok(yy_matrix_from_generators(
        &generators,
        tableaux.len(),
        sigma,
    ))
}

fn yy_matrix_from_generators(generators: &[RMat], dim: usize, sigma: &Permutation) -> RMat {
    let mut m = DMatrix::identity(dim, dim);
    for k in sigma.adjacent_factorization() {
        m *= &generators[k - 1];
    }
    m
}

/// Materialize the full Young-Yamanouchi irrep of `shape` over an `S(n)`
/// group table, with row-Yamanouchi basis labels.
pub fn build_yy_irrep(shape: &Partition, group: &Arc<GroupTable>) -> Result<MatrixIrrep, RepError> {
    let n = shape.n();
    let perms = group
        .permutations()
        .ok_or(RepError::SignsUnavailable)?
        .to_vec();
    if perms.is_empty() || perms[0].n() != n {
        return Err(RepError::DomainMismatch {
            got: perms.first().map_or(0, |p| p.n()),
            expected: n,
        });
    }
    let tableaux = enumerate_syt(shape);
    let dim = tableaux.len();
    let generators: Vec<RMat> = (1..n).map(|k| generator_on_basis(&tableaux, k)).collect();
    let matrices = crate::cmatrix::map_indices(perms.len(), |g| {
        to_complex(&yy_matrix_from_generators(&generators, dim, &perms[g]))
    });
    let labels = tableaux
        .iter()
        .map(|t| t.row_yamanouchi().to_string())
        .collect();
    MatrixIrrep::new(Arc::clone(group), matrices, Some(labels), DEFAULT_TOL)
}
