//! Browser demo bindings: three interactive operations returning JSON
//! strings for the static page in `www/`.
//!
//! Every function returns `{"ok": false, "error": "..."}` on bad input
//! instead of throwing, so the page can render the message inline. The
//! functions are plain Rust and are unit-tested natively; `wasm-pack build
//! --target web` produces the browser module.

use std::sync::Arc;

use wasm_bindgen::prelude::wasm_bindgen;

use irrep_core::cmatrix::random_unitary;
use irrep_core::similarity::antidiagonal_signs;
use irrep_core::*;

fn err_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "ok": false, "error": message.to_string() }).to_string()
}

fn parse_shape(text: &str, max_boxes: usize) -> Result<Partition, String> {
    let shape = Partition::parse(text).map_err(|e| e.to_string())?;
    if shape.n() > max_boxes {
        return Err(format!(
            "partition has {} boxes; this demo supports up to {max_boxes}",
            shape.n()
        ));
    }
    Ok(shape)
}

/// Standard tableaux of a partition with Yamanouchi symbols and carrier
/// permutation signs.
#[wasm_bindgen]
pub fn tableaux_json(partition: &str) -> String {
    let shape = match parse_shape(partition, 10) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let tableaux = enumerate_syt(&shape);
    let reference = tableaux[0].clone();
    let items: Vec<serde_json::Value> = tableaux
        .iter()
        .map(|t| {
            let sigma = sigma_for_tableau(t, &reference).expect("same shape");
            serde_json::json!({
                "rows": t.rows(),
                "rys": t.row_yamanouchi().entries,
                "cys": t.column_yamanouchi().entries,
                "sign": sigma.sign(),
            })
        })
        .collect();
    serde_json::json!({
        "ok": true,
        "partition": shape.parts(),
        "conjugate": shape.conjugate().parts(),
        "dimension": tableaux.len(),
        "tableaux": items,
    })
    .to_string()
}

/// The analytic anti-diagonal unitary between the conjugate pair of a shape.
#[wasm_bindgen]
pub fn conjugate_unitary_json(partition: &str) -> String {
    let shape = match parse_shape(partition, 8) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let result = match conjugated_yy_unitary(&shape) {
        Ok(r) => r,
        Err(e) => return err_json(e),
    };
    let d = result.u.nrows();
    let entries: Vec<Vec<i32>> = (0..d)
        .map(|i| (0..d).map(|j| result.u[(i, j)].re as i32).collect())
        .collect();
    serde_json::json!({
        "ok": true,
        "partition": shape.parts(),
        "conjugate": shape.conjugate().parts(),
        "self_conjugate": shape.is_self_conjugate(),
        "dimension": d,
        "matrix": entries,
        "signs_top_right_to_bottom_left": antidiagonal_signs(&result.u, 1e-12),
        "row_labels": yy_basis_labels(&shape.conjugate()),
        "col_labels": yy_basis_labels(&shape),
        "residual": result.residual,
    })
    .to_string()
}

/// Run the group-averaged similarity algorithm. `mode` is either
/// `"conjugate"` (the pair `D^{λᵗ}` vs `sgn·D^λ`) or `"random"` (recover a
/// seeded random conjugation of `D^λ`). Returns the transformation, the
/// squared-weight grid, and the verification residuals.
#[wasm_bindgen]
pub fn similarity_json(partition: &str, mode: &str, seed: u32) -> String {
    let shape = match parse_shape(partition, 5) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let group = match enumerate_symmetric_group(shape.n()) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    let d_lambda = match build_yy_irrep(&shape, &group) {
        Ok(r) => r,
        Err(e) => return err_json(e),
    };
    let opts = SimilarityOptions::default();
    let (theta, psi, row_labels, col_labels, target) = match mode {
        "conjugate" => {
            let theta = match build_yy_irrep(&shape.conjugate(), &group) {
                Ok(r) => r,
                Err(e) => return err_json(e),
            };
            let psi = match d_lambda.sign_twisted() {
                Ok(r) => r,
                Err(e) => return err_json(e),
            };
            (
                theta,
                psi,
                yy_basis_labels(&shape.conjugate()),
                yy_basis_labels(&shape),
                None,
            )
        }
        "random" => {
            let v = random_unitary(d_lambda.dim(), seed as u64);
            let matrices = (0..group.order())
                .map(|g| v.adjoint() * d_lambda.matrix(g) * &v)
                .collect();
            let psi = match MatrixIrrep::new(Arc::clone(&group), matrices, None, 1e-8) {
                Ok(r) => r,
                Err(e) => return err_json(e),
            };
            let labels = yy_basis_labels(&shape);
            (d_lambda.clone(), psi, labels.clone(), labels, Some(v))
        }
        other => return err_json(format!("unknown mode {other:?}")),
    };
    let result = match similarity_unitary(&theta, &psi, &opts) {
        Ok(r) => r,
        Err(e) => return err_json(e),
    };
    let n = result.u.nrows();
    let u_json: Vec<Vec<[f64; 2]>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| [result.u[(i, j)].re, result.u[(i, j)].im])
                .collect()
        })
        .collect();
    let r_squared: Vec<Vec<f64>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    pair_weight(&theta, &psi, a + 1, b + 1)
                        .map(|r| r * r)
                        .unwrap_or(f64::NAN)
                })
                .collect()
        })
        .collect();
    let recovered = target.map(|v| {
        let agreement = agree_up_to_phase(&result.u, &v, 1e-8);
        serde_json::json!({
            "agrees": agreement.agrees,
            "residual": agreement.residual,
            "phase": [agreement.phase.re, agreement.phase.im],
        })
    });
    serde_json::json!({
        "ok": true,
        "partition": shape.parts(),
        "mode": mode,
        "status": result.status.to_string(),
        "index_pair": result.index_pair.map(|(a, b)| vec![a, b]),
        "r_ab": result.r_ab,
        "residual": result.residual,
        "unitarity_residual": result.unitarity_residual,
        "u": u_json,
        "r_squared": r_squared,
        "row_labels": row_labels,
        "col_labels": col_labels,
        "recovery": recovered,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableaux_payload() {
        let value: serde_json::Value = serde_json::from_str(&tableaux_json("2,1")).unwrap();
        assert_eq!(value["ok"], true);
        assert_eq!(value["dimension"], 2);
        assert_eq!(value["tableaux"][0]["rys"], serde_json::json!([1, 1, 2]));
        assert_eq!(value["tableaux"][1]["sign"], -1);
    }

    #[test]
    fn conjugate_payload() {
        let value: serde_json::Value =
            serde_json::from_str(&conjugate_unitary_json("2,2")).unwrap();
        assert_eq!(value["ok"], true);
        assert_eq!(value["matrix"], serde_json::json!([[0, -1], [1, 0]]));
        assert!(value["residual"].as_f64().unwrap() < 1e-12);
    }

    #[test]
    fn similarity_payload_conjugate_mode() {
        let value: serde_json::Value =
            serde_json::from_str(&similarity_json("3,1", "conjugate", 0)).unwrap();
        assert_eq!(value["ok"], true);
        assert_eq!(value["status"], "equivalent");
        // The squared-weight grid of a conjugate pair is the anti-identity.
        let grid = value["r_squared"].as_array().unwrap();
        let dim = grid.len();
        for (i, row) in grid.iter().enumerate() {
            for (j, cell) in row.as_array().unwrap().iter().enumerate() {
                let expected = if i + j == dim - 1 { 1.0 } else { 0.0 };
                assert!((cell.as_f64().unwrap() - expected).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn similarity_payload_random_mode_recovers_seed() {
        let value: serde_json::Value =
            serde_json::from_str(&similarity_json("2,1", "random", 11)).unwrap();
        assert_eq!(value["ok"], true);
        assert_eq!(value["recovery"]["agrees"], true);
    }

    #[test]
    fn errors_are_reported_inline() {
        let bad: serde_json::Value = serde_json::from_str(&tableaux_json("1,2")).unwrap();
        assert_eq!(bad["ok"], false);
        let big: serde_json::Value =
            serde_json::from_str(&similarity_json("6,1", "conjugate", 0)).unwrap();
        assert_eq!(big["ok"], false);
        let mode: serde_json::Value =
            serde_json::from_str(&similarity_json("2,1", "nope", 0)).unwrap();
        assert_eq!(mode["ok"], false);
    }
}
