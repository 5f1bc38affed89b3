//! Matrix representations of finite groups: the [`MatrixIrrep`] container and
//! the generator-closure ingestion path for externally supplied irreps.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::cmatrix::{self, identity, max_abs_diff, unitarity_residual, CMat, DEFAULT_TOL};
use crate::group::{GroupError, GroupTable};

/// Matrices closer than this in max-norm are considered the same group
/// element during closure. Far above f64 accumulation error for the matrix
/// sizes handled here, far below any separation between distinct unitaries in
/// practice.
pub const DEDUP_TOL: f64 = 1e-9;

/// Generated groups larger than this abort with [`RepError::NotClosed`].
pub const CLOSURE_CAP: usize = 10_000;

/// Homomorphism validation is exhaustive over element pairs up to this group
/// order and sampled above it.
const EXHAUSTIVE_HOM_ORDER: usize = 200;
const SAMPLED_HOM_PAIRS: usize = 4_000;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("matrix for {label} is {rows}×{cols}, expected {n}×{n}")]
    WrongShape {
        label: String,
        rows: usize,
        cols: usize,
        n: usize,
    },
    #[error("generator {label} is not unitary (residual {residual:.3e} > tol {tol:.3e})")]
    NotUnitary {
        label: String,
        residual: f64,
        tol: f64,
    },
    #[error("generated set exceeded the closure cap of {cap} elements")]
    NotClosed { cap: usize },
    #[error("matrix map is not a homomorphism (residual {residual:.3e} > tol {tol:.3e})")]
    NotHomomorphic { residual: f64, tol: f64 },
    #[error("element count {got} does not match group order {expected}")]
    ElementCountMismatch { got: usize, expected: usize },
    #[error("group lacks permutation structure, signs unavailable")]
    SignsUnavailable,
    #[error("generator index {k} outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("permutation acts on {got} points, representation needs {expected}")]
    DomainMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Residuals from validating a [`MatrixIrrep`].
#[derive(Debug, Clone, Copy)]
pub struct RepReport {
    pub homomorphism_residual: f64,
    pub unitarity_residual: f64,
}

/// A unitary matrix representation: one matrix per group element, homomorphic
/// and unitary within tolerance. Immutable after construction.
#[derive(Debug, Clone)]
pub struct MatrixIrrep {
    group: Arc<GroupTable>,
    dim: usize,
    matrices: Vec<CMat>,
    basis_labels: Option<Vec<String>>,
}

impl MatrixIrrep {
    /// Wrap per-element matrices, validating shapes, unitarity and the
    /// homomorphism property at `tol`.
    pub fn new(
        group: Arc<GroupTable>,
        matrices: Vec<CMat>,
        basis_labels: Option<Vec<String>>,
        tol: f64,
    ) -> Result<Self, RepError> {
        if matrices.len() != group.order() {
            return Err(RepError::ElementCountMismatch {
                got: matrices.len(),
                expected: group.order(),
            });
        }
        let dim = matrices[0].nrows();
        for (i, m) in matrices.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(RepError::WrongShape {
                    label: group.label(i),
                    rows: m.nrows(),
                    cols: m.ncols(),
                    n: dim,
                });
            }
        }
        let rep = MatrixIrrep {
            group,
            dim,
            matrices,
            basis_labels,
        };
        let report = rep.validate();
        if report.unitarity_residual > tol {
            return Err(RepError::NotUnitary {
                label: "representation".into(),
                residual: report.unitarity_residual,
                tol,
            });
        }
        if report.homomorphism_residual > tol {
            return Err(RepError::NotHomomorphic {
                residual: report.homomorphism_residual,
                tol,
            });
        }
        Ok(rep)
    }

    /// Max-norm residuals of the defining invariants. The homomorphism scan
    /// is exhaustive for orders ≤ 200 and deterministically sampled above.
    pub fn validate(&self) -> RepReport {
        let order = self.group.order();
        let unit = (0..order)
            .map(|i| unitarity_residual(&self.matrices[i]))
            .fold(0.0, f64::max);
        let pair_residual = |i: usize, j: usize| {
            let prod = &self.matrices[i] * &self.matrices[j];
            max_abs_diff(&prod, &self.matrices[self.group.mult(i, j)])
        };
        let hom = if order <= EXHAUSTIVE_HOM_ORDER {
            let rows = cmatrix::map_indices(order, |i| {
                (0..order).map(|j| pair_residual(i, j)).fold(0.0, f64::max)
            });
            rows.into_iter().fold(0.0, f64::max)
        } else {
            let mut state = 0xD1B54A32D192ED03u64 ^ (order as u64);
            let mut next = move || {
                state = state.wrapping_add(0x9E3779B97F4A7C15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
                (z ^ (z >> 31)) as usize
            };
            let pairs: Vec<(usize, usize)> = (0..SAMPLED_HOM_PAIRS)
                .map(|_| (next() % order, next() % order))
                .collect();
            let res = cmatrix::map_indices(pairs.len(), |k| pair_residual(pairs[k].0, pairs[k].1));
            res.into_iter().fold(0.0, f64::max)
        };
        RepReport {
            homomorphism_residual: hom,
            unitarity_residual: unit,
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of group element `g` (element index in the group table).
    pub fn matrix(&self, g: usize) -> &CMat {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.matrices
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    pub fn character(&self, g: usize) -> Complex64 {
        self.matrices[g].diagonal().iter().sum()
    }

    /// Entrywise equality of two representations over the same group.
    pub fn entrywise_equal(&self, other: &MatrixIrrep, tol: f64) -> bool {
        self.dim == other.dim
            && self.group.order() == other.group.order()
            && self
                .matrices
                .iter()
                .zip(other.matrices.iter())
                .all(|(a, b)| max_abs_diff(a, b) <= tol)
    }

    /// Multiply every matrix by the sign of the underlying permutation.
    /// Only meaningful over symmetric-group tables.
    pub fn sign_twisted(&self) -> Result<MatrixIrrep, RepError> {
        let order = self.group.order();
        let mut matrices = Vec::with_capacity(order);
        for g in 0..order {
            let sign = self.group.sign_of(g).ok_or(RepError::SignsUnavailable)?;
            let factor = Complex64::new(sign as f64, 0.0);
            matrices.push(self.matrices[g].map(|z| z * factor));
        }
        Ok(MatrixIrrep {
            group: Arc::clone(&self.group),
            dim: self.dim,
            matrices,
            basis_labels: self.basis_labels.clone(),
        })
    }

    /// `(1/|G|) Σ_g |χ(g)|²` — equals 1 for an irreducible representation.
    pub fn irreducibility_indicator(&self) -> f64 {
        let order = self.group.order();
        let sum: f64 = (0..order).map(|g| self.character(g).norm_sqr()).sum();
        sum / order as f64
    }
}

/// Close a set of unitary generator matrices under multiplication and return
/// the resulting [`GroupTable`] together with the matrix map extended
/// multiplicatively. Matrices within [`DEDUP_TOL`] in max-norm are identified.
pub fn group_from_generators(
    n: usize,
    generators: &[(String, CMat)],
    tol: f64,
) -> Result<(Arc<GroupTable>, MatrixIrrep), RepError> {
    for (label, m) in generators {
        if m.nrows() != n || m.ncols() != n {
            return Err(RepError::WrongShape {
                label: label.clone(),
                rows: m.nrows(),
                cols: m.ncols(),
                n,
            });
        }
        let residual = unitarity_residual(m);
        if residual > tol {
            return Err(RepError::NotUnitary {
                label: label.clone(),
                residual,
                tol,
            });
        }
    }

    let mut elements: Vec<CMat> = vec![identity(n)];
    let mut labels: Vec<String> = vec!["e".into()];
    let find = |elements: &[CMat], m: &CMat| -> Option<usize> {
        elements.iter().position(|e| max_abs_diff(e, m) < DEDUP_TOL)
    };
    for (label, m) in generators {
        if find(&elements, m).is_none() {
            elements.push(m.clone());
            labels.push(label.clone());
        }
    }
    // Breadth-first closure under right multiplication by the generators.
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for (_, g) in generators {
            let prod = &current * g;
            if find(&elements, &prod).is_none() {
                if elements.len() >= CLOSURE_CAP {
                    return Err(RepError::NotClosed { cap: CLOSURE_CAP });
                }
                labels.push(format!("g{}", elements.len()));
                elements.push(prod);
            }
        }
        frontier += 1;
    }

    let order = elements.len();
    let mut mult = vec![0u32; order * order];
    for i in 0..order {
        for j in 0..order {
            let prod = &elements[i] * &elements[j];
            let k = find(&elements, &prod).ok_or(RepError::NotClosed { cap: CLOSURE_CAP })?;
            mult[i * order + j] = k as u32;
        }
    }
    let table = Arc::new(GroupTable::new(order, mult, 0, Some(labels), None)?);
    let rep = MatrixIrrep::new(Arc::clone(&table), elements, None, tol)?;
    Ok((table, rep))
}

/// Convenience wrapper using [`DEFAULT_TOL`].
pub fn group_from_generators_default(
    n: usize,
    generators: &[(String, CMat)],
) -> Result<(Arc<GroupTable>, MatrixIrrep), RepError> {
    group_from_generators(n, generators, DEFAULT_TOL)
}
