//! JSON schemas for groups, irreps, tableaux, tensor operators and
//! similarity results.
//!
//! Matrices are row-major with complex entries as `[re, im]` pairs. A group
//! (or irrep) file carries the generating matrices only; importing closes the
//! set under multiplication via [`group_from_generators`]:
//!
//! ```json
//! {
//!   "n": 2,
//!   "generators": [ { "label": "(1 2)", "matrix": [[[0,0],[1,0]],[[1,0],[0,0]]] } ],
//!   "metadata": { "partition": [2,1], "basis_labels": ["(1,1,2)","(1,2,1)"], "group": "S(3)" }
//! }
//! ```

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cmatrix::CMat;
use crate::group::GroupTable;
use crate::rep::{group_from_generators, MatrixIrrep, RepError};
use crate::similarity::{EquivalenceStatus, SimilarityResult};
use crate::young::{Partition, StandardTableau, YoungError};
use crate::yy::{yy_basis_labels, yy_generator_matrix};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("matrix is not rectangular or has zero size")]
    BadMatrix,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type MatrixJson = Vec<Vec<[f64; 2]>>;

pub fn cmat_to_json(m: &CMat) -> MatrixJson {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

pub fn cmat_from_json(rows: &MatrixJson) -> Result<CMat, JsonError> {
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) || rows[0].is_empty() {
        return Err(JsonError::BadMatrix);
    }
    Ok(CMat::from_fn(rows.len(), rows[0].len(), |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub label: String,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct IrrepMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

/// Group/irrep exchange format: dimension plus generating matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupIrrepJson {
    pub n: usize,
    pub generators: Vec<GeneratorJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub metadata: Option<IrrepMetadata>,
}

/// Export a Young-Yamanouchi irrep as its adjacent-transposition generator
/// matrices plus shape metadata.
pub fn export_yy_irrep(shape: &Partition) -> Result<GroupIrrepJson, JsonError> {
    let n = shape.n();
    let labels = yy_basis_labels(shape);
    let dim = labels.len();
    let mut generators = Vec::new();
    for k in 1..n {
        let gen = yy_generator_matrix(shape, k)?;
        generators.push(GeneratorJson {
            label: format!("({} {})", k, k + 1),
            matrix: cmat_to_json(&crate::cmatrix::to_complex(&gen)),
        });
    }
    Ok(GroupIrrepJson {
        n: dim,
        generators,
        metadata: Some(IrrepMetadata {
            partition: Some(shape.parts().to_vec()),
            basis_labels: Some(labels),
            group: Some(format!("S({})", n)),
        }),
    })
}

/// Close the generators of an imported file under multiplication.
pub fn import_group_irrep(
    data: &GroupIrrepJson,
    tol: f64,
) -> Result<(Arc<GroupTable>, MatrixIrrep), JsonError> {
    let mut generators = Vec::new();
    for g in &data.generators {
        generators.push((g.label.clone(), cmat_from_json(&g.matrix)?));
    }
    Ok(group_from_generators(data.n, &generators, tol)?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimilarityResultJson {
    pub n: usize,
    pub u: MatrixJson,
    /// 1-based `(a, b)`; absent for inequivalent inputs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index_pair: Option<[usize; 2]>,
    pub r_ab: f64,
    pub residual: f64,
    pub unitarity_residual: f64,
    pub status: String,
}

pub fn similarity_result_to_json(result: &SimilarityResult) -> SimilarityResultJson {
    SimilarityResultJson {
        n: result.u.nrows(),
        u: cmat_to_json(&result.u),
        index_pair: result.index_pair.map(|(a, b)| [a, b]),
        r_ab: result.r_ab,
        residual: result.residual,
        unitarity_residual: result.unitarity_residual,
        status: match result.status {
            EquivalenceStatus::Equivalent => "equivalent".into(),
            EquivalenceStatus::Inequivalent => "inequivalent".into(),
        },
    }
}

/// Tableaux serialize as their ragged rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

pub fn tableau_to_json(t: &StandardTableau) -> TableauJson {
    TableauJson {
        shape: t.shape().parts().to_vec(),
        rows: t.rows().to_vec(),
    }
}

pub fn tableau_from_json(data: &TableauJson) -> Result<StandardTableau, JsonError> {
    let t = StandardTableau::new(data.rows.clone())?;
    if t.shape().parts() != data.shape.as_slice() {
        return Err(JsonError::Young(YoungError::ShapeMismatch));
    }
    Ok(t)
}

/// Tensor operators export with their site structure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorOperatorJson {
    pub site_dim: usize,
    pub sites: usize,
    pub matrix: MatrixJson,
}

pub fn tensor_operator_to_json(op: &crate::schur_weyl::TensorOperator) -> TensorOperatorJson {
    TensorOperatorJson {
        site_dim: op.site_dim,
        sites: op.sites,
        matrix: cmat_to_json(&op.matrix),
    }
}
