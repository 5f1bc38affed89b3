//! Bundled worked examples: the two-dimensional unitary irreps of `S(3)` in
//! several bases, the printed similarity unitaries between them, and the
//! reference anti-diagonal sign patterns for conjugate Young-Yamanouchi
//! pairs of `S(4)`, `S(5)` and `S(6)`.
//!
//! These are the golden inputs for the acceptance suite and the
//! `paper-examples` CLI subcommand. Matrices are transcribed verbatim; the
//! homomorphism validation at construction cross-checks the transcription.

use std::sync::Arc;

use num_complex::Complex64;

use crate::cmatrix::CMat;
use crate::group::enumerate_symmetric_group;
use crate::perm::Permutation;
use crate::rep::MatrixIrrep;
use crate::young::Partition;

/// Primitive cube root of unity `ε = e^{2πi/3}`.
pub fn epsilon() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat2(entries: [Complex64; 4]) -> CMat {
    CMat::from_row_slice(2, 2, &entries)
}

/// Build a 2-dimensional rep over the cached `S(3)` table from a matrix
/// assignment on each permutation.
fn s3_rep(assign: impl Fn(&Permutation) -> CMat, labels: Option<Vec<String>>) -> MatrixIrrep {
    let group = enumerate_symmetric_group(3).expect("S(3) enumerates");
    let matrices = (0..group.order())
        .map(|g| assign(group.permutation(g).expect("S(3) carries permutations")))
        .collect();
    MatrixIrrep::new(Arc::clone(&group), matrices, labels, 1e-9)
        .expect("reference matrices form a unitary representation")
}

/// The irrep `ψ^ε`: diagonal on the 3-cycles with entries `ε, ε⁻¹`,
/// anti-diagonal on the transpositions.
pub fn rep_psi_epsilon() -> MatrixIrrep {
    rep_psi(epsilon())
}

/// The complex conjugate partner `ψ^ε̄`.
pub fn rep_psi_epsilon_bar() -> MatrixIrrep {
    rep_psi(epsilon().conj())
}

fn rep_psi(eps: Complex64) -> MatrixIrrep {
    let one = Complex64::ONE;
    let zero = Complex64::ZERO;
    let inv = eps.conj(); // |ε| = 1
    s3_rep(
        move |p| match p.one_line() {
            [1, 2, 3] => mat2([one, zero, zero, one]),
            [2, 1, 3] => mat2([zero, one, one, zero]), // (1 2)
            [3, 2, 1] => mat2([zero, eps, inv, zero]), // (1 3)
            [1, 3, 2] => mat2([zero, inv, eps, zero]), // (2 3)
            [2, 3, 1] => mat2([eps, zero, zero, inv]), // (1 2 3)
            [3, 1, 2] => mat2([inv, zero, zero, eps]), // (1 3 2)
            other => unreachable!("not an S(3) element: {other:?}"),
        },
        None,
    )
}

/// The real orthogonal irrep `φ`; identical to the Young-Yamanouchi irrep of
/// shape `(2,1)`.
pub fn rep_phi() -> MatrixIrrep {
    let h = 0.5;
    let s = 3f64.sqrt() / 2.0;
    s3_rep(
        move |p| {
            let e = match p.one_line() {
                [1, 2, 3] => [1.0, 0.0, 0.0, 1.0],
                [2, 1, 3] => [1.0, 0.0, 0.0, -1.0], // (1 2)
                [3, 2, 1] => [-h, -s, -s, h],       // (1 3)
                [1, 3, 2] => [-h, s, s, h],         // (2 3)
                [2, 3, 1] => [-h, s, -s, -h],       // (1 2 3)
                [3, 1, 2] => [-h, -s, s, -h],       // (1 3 2)
                other => unreachable!("not an S(3) element: {other:?}"),
            };
            mat2([z(e[0], 0.0), z(e[1], 0.0), z(e[2], 0.0), z(e[3], 0.0)])
        },
        None,
    )
}

/// `sgn · ψ^ε`.
pub fn rep_sign_psi_epsilon() -> MatrixIrrep {
    rep_psi_epsilon()
        .sign_twisted()
        .expect("S(3) carries signs")
}

/// Printed transformation for `(ϑ, ψ) = (φ, ψ^ε)`:
/// `(1/√2) [[1, 1], [i, −i]]` (the off-diagonal `(ε − ε̄)/√3` evaluates to `i`).
pub fn example1_u() -> CMat {
    let r = 0.5f64.sqrt();
    mat2([z(r, 0.0), z(r, 0.0), z(0.0, r), z(0.0, -r)])
}

/// Printed transformation for `(ψ^ε, ψ^ε̄)`: the swap matrix.
pub fn example2_u() -> CMat {
    mat2([
        Complex64::ZERO,
        Complex64::ONE,
        Complex64::ONE,
        Complex64::ZERO,
    ])
}

/// Printed transformation for `(ψ^ε, sgn·ψ^ε)`: `diag(1, −1)`.
pub fn example3_u() -> CMat {
    mat2([
        Complex64::ONE,
        Complex64::ZERO,
        Complex64::ZERO,
        -Complex64::ONE,
    ])
}

/// A printed anti-diagonal reference matrix, recorded as its sign sequence
/// read from the top-right corner to the bottom-left.
#[derive(Debug, Clone)]
pub struct GoldenAntidiagonal {
    pub shape: Partition,
    pub signs_top_right_to_bottom_left: Vec<i32>,
}

/// The ten printed conjugate-pair unitaries for `S(4)`, `S(5)` and `S(6)`,
/// transcribed verbatim. (The source tables label two `S(6)` entries with the
/// same shape; the 9/10/16-dimensional matrices are assigned to the shapes of
/// matching dimension.)
pub fn golden_conjugated_unitaries() -> Vec<GoldenAntidiagonal> {
    let entry = |parts: &[usize], signs: &[i32]| GoldenAntidiagonal {
        shape: Partition::new(parts.to_vec()).expect("valid shape"),
        signs_top_right_to_bottom_left: signs.to_vec(),
    };
    vec![
        // S(4)
        entry(&[3, 1], &[-1, 1, -1]),
        entry(&[2, 2], &[-1, 1]),
        // S(5)
        entry(&[4, 1], &[-1, 1, -1, 1]),
        entry(&[3, 2], &[-1, 1, 1, -1, 1]),
        entry(&[3, 1, 1], &[-1, 1, -1, -1, 1, -1]),
        // S(6)
        entry(&[5, 1], &[-1, 1, -1, 1, -1]),
        entry(&[4, 2], &[-1, 1, 1, -1, 1, -1, 1, -1, 1]),
        entry(&[4, 1, 1], &[-1, 1, -1, -1, 1, -1, 1, -1, 1, -1]),
        entry(&[3, 3], &[-1, 1, 1, -1, 1]),
        entry(
            &[3, 2, 1],
            &[-1, 1, -1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, -1, 1, -1],
        ),
    ]
}
