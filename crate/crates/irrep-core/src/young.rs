//! Partitions, standard Young tableaux, Yamanouchi symbols, axial distances
//! and the tableau ↔ permutation correspondence.
//!
//! Standard tableaux of a shape are always listed with their row Yamanouchi
//! symbols in increasing lexicographic order; the first tableau is the
//! canonical row filling and the last the canonical column filling. That
//! ordering is the basis order of the Young-Yamanouchi representations, so it
//! is part of this module's contract, not an implementation detail.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("value {value} not present in tableau")]
    ValueNotFound { value: usize },
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("invalid Yamanouchi symbol: {0}")]
    InvalidYamanouchi(String),
    #[error("cannot parse partition from {0:?}")]
    ParseError(String),
}

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_k ≥ 1` of `n = Σ λᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        if parts.is_empty()
            || parts.contains(&0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(YoungError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Parse `"3,1"` or `"3 1"`.
    pub fn parse(text: &str) -> Result<Self, YoungError> {
        let parts: Result<Vec<usize>, _> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>())
            .collect();
        match parts {
            Ok(p) if !p.is_empty() => Partition::new(p),
            _ => Err(YoungError::ParseError(text.to_string())),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes `n`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Conjugate (transposed) partition: `(λᵗ)ᵢ = #{ j : λⱼ ≥ i }`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of `n` in increasing lexicographic order:
/// `(1,1,…,1)` first, `(n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "partitions_of requires n ≥ 1");
    let mut out = Vec::new();
    let mut stack = Vec::new();
    emit_partitions(n, n, &mut stack, &mut out);
    out.sort_by(|a, b| a.parts.cmp(&b.parts));
    out
}

fn emit_partitions(rem: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for part in 1..=rem.min(max) {
        stack.push(part);
        emit_partitions(rem - part, part, stack, out);
        stack.pop();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YamanouchiKind {
    Row,
    Column,
}

/// Row or column Yamanouchi symbol: entry `i` is the row (resp. column)
/// index, 1-based, of value `i` in the source tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YamanouchiSymbol {
    pub kind: YamanouchiKind,
    pub entries: Vec<usize>,
}

impl std::fmt::Display for YamanouchiSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.entries
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A standard Young tableau: rows and columns strictly increasing, entries a
/// bijection onto `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, YoungError> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| YoungError::InvalidTableau("row lengths are not a partition".into()))?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v - 1] {
                    return Err(YoungError::InvalidTableau(format!(
                        "entries are not a bijection onto 1..={}",
                        n
                    )));
                }
                seen[v - 1] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(YoungError::InvalidTableau("row not increasing".into()));
            }
        }
        for r in 1..rows.len() {
            for (c, &below) in rows[r].iter().enumerate() {
                if rows[r - 1][c] >= below {
                    return Err(YoungError::InvalidTableau("column not increasing".into()));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// Canonical row filling: `1..n` written row by row.
    pub fn canonical_row(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// Canonical column filling: `1..n` written column by column.
    pub fn canonical_column(shape: &Partition) -> StandardTableau {
        StandardTableau::canonical_row(&shape.conjugate()).conjugate()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// 0-based `(row, col)` of a value.
    pub fn position_of(&self, value: usize) -> Result<(usize, usize), YoungError> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == value) {
                return Ok((r, c));
            }
        }
        Err(YoungError::ValueNotFound { value })
    }

    /// Transpose rows and columns together with the entries.
    pub fn conjugate(&self) -> StandardTableau {
        let conj_shape = self.shape.conjugate();
        let rows: Vec<Vec<usize>> = conj_shape
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &len)| (0..len).map(|r| self.rows[r][c]).collect())
            .collect();
        StandardTableau {
            shape: conj_shape,
            rows,
        }
    }

    pub fn row_yamanouchi(&self) -> YamanouchiSymbol {
        self.yamanouchi(YamanouchiKind::Row)
    }

    pub fn column_yamanouchi(&self) -> YamanouchiSymbol {
        self.yamanouchi(YamanouchiKind::Column)
    }

    fn yamanouchi(&self, kind: YamanouchiKind) -> YamanouchiSymbol {
        let n = self.n();
        let mut entries = vec![0; n];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                entries[v - 1] = match kind {
                    YamanouchiKind::Row => r + 1,
                    YamanouchiKind::Column => c + 1,
                };
            }
        }
        YamanouchiSymbol { kind, entries }
    }

    /// Apply a permutation entrywise. The result need not be standard; it is
    /// returned as raw rows.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&v| sigma.apply(v)).collect())
            .collect()
    }
}

impl std::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self.n().to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{:>width$}", v)).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Rebuild the unique standard tableau encoded by a Yamanouchi symbol.
pub fn reconstruct_tableau(symbol: &YamanouchiSymbol) -> Result<StandardTableau, YoungError> {
    match symbol.kind {
        YamanouchiKind::Row => reconstruct_from_rows(&symbol.entries),
        YamanouchiKind::Column => {
            // The column symbol of T is the row symbol of Tᵗ.
            let row_symbol = YamanouchiSymbol {
                kind: YamanouchiKind::Row,
                entries: symbol.entries.clone(),
            };
            Ok(reconstruct_tableau(&row_symbol)?.conjugate())
        }
    }
}

fn reconstruct_from_rows(entries: &[usize]) -> Result<StandardTableau, YoungError> {
    if entries.is_empty() {
        return Err(YoungError::InvalidYamanouchi("empty symbol".into()));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (i, &r) in entries.iter().enumerate() {
        if r == 0 || r > rows.len() + 1 {
            return Err(YoungError::InvalidYamanouchi(format!(
                "value {} placed in row {} before row {} exists",
                i + 1,
                r,
                r - 1
            )));
        }
        if r == rows.len() + 1 {
            rows.push(Vec::new());
        }
        if r > 1 && rows[r - 2].len() <= rows[r - 1].len() {
            return Err(YoungError::InvalidYamanouchi(format!(
                "placing {} in row {} breaks column growth",
                i + 1,
                r
            )));
        }
        rows[r - 1].push(i + 1);
    }
    StandardTableau::new(rows)
}

/// All standard tableaux of `shape`, sorted by row Yamanouchi symbol in
/// increasing lexicographic order.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    let parts = shape.parts();
    let mut fill = vec![0usize; parts.len()];
    let mut rys = Vec::with_capacity(n);
    let mut out = Vec::new();
    backtrack_syt(n, parts, &mut fill, &mut rys, &mut out);
    // The search emits symbols in lexicographic order already; the sort makes
    // the ordering contract explicit.
    out.sort_by(|a, b| a.row_yamanouchi().entries.cmp(&b.row_yamanouchi().entries));
    out
}

fn backtrack_syt(
    n: usize,
    parts: &[usize],
    fill: &mut Vec<usize>,
    rys: &mut Vec<usize>,
    out: &mut Vec<StandardTableau>,
) {
    if rys.len() == n {
        let symbol = YamanouchiSymbol {
            kind: YamanouchiKind::Row,
            entries: rys.clone(),
        };
        out.push(reconstruct_tableau(&symbol).expect("search emits valid symbols"));
        return;
    }
    for r in 0..parts.len() {
        let open = fill[r] < parts[r];
        let staircase = r == 0 || fill[r - 1] > fill[r];
        if open && staircase {
            fill[r] += 1;
            rys.push(r + 1);
            backtrack_syt(n, parts, fill, rys, out);
            rys.pop();
            fill[r] -= 1;
        }
    }
}

/// Signed step count from the box holding `i` to the box holding `j` in `t`:
/// steps down or left count `+1`, steps up or right `−1`. Equivalently
/// `(col(i) − col(j)) + (row(j) − row(i))`.
pub fn axial_distance(t: &StandardTableau, i: usize, j: usize) -> Result<i64, YoungError> {
    let (ri, ci) = t.position_of(i)?;
    let (rj, cj) = t.position_of(j)?;
    Ok((ci as i64 - cj as i64) + (rj as i64 - ri as i64))
}

/// The unique permutation mapping `t_ref` to `t` under the entrywise action:
/// for every cell, `σ(t_ref[cell]) = t[cell]`.
pub fn sigma_for_tableau(
    t: &StandardTableau,
    t_ref: &StandardTableau,
) -> Result<Permutation, YoungError> {
    if t.shape() != t_ref.shape() {
        return Err(YoungError::ShapeMismatch);
    }
    let n = t.n();
    let mut images = vec![0usize; n];
    for (r, row) in t_ref.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            images[v - 1] = t.rows()[r][c];
        }
    }
    Permutation::from_images(images)
        .map_err(|e| YoungError::InvalidTableau(format!("not a bijection: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tableau(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Independent count oracle: coin-change dynamic program.
    fn count_partitions(n: usize) -> usize {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    /// Independent dimension oracle: hook length formula.
    fn hook_dimension(shape: &Partition) -> u64 {
        let parts = shape.parts();
        let conj = shape.conjugate();
        let mut product: u128 = 1;
        for (r, &len) in parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - 1 - c;
                let leg = conj.parts()[c] - 1 - r;
                product *= (arm + leg + 1) as u128;
            }
        }
        let fact: u128 = (1..=shape.n() as u128).product();
        (fact / product) as u64
    }

    #[test]
    fn partitions_of_four_match_reference_order() {
        let got: Vec<Vec<usize>> = partitions_of(4)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
                vec![4]
            ]
        );
    }

    #[test]
    fn partitions_edge_cases() {
        assert_eq!(partitions_of(1), vec![shape(&[1])]);
        assert_eq!(partitions_of(6).len(), count_partitions(6));
        assert_eq!(partitions_of(6).len(), 11);
        for n in 1..=8 {
            let all = partitions_of(n);
            assert!(all.windows(2).all(|w| w[0].parts() < w[1].parts()));
            assert!(all.iter().all(|p| p.n() == n));
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(shape(&[3, 2, 2, 1]).conjugate(), shape(&[4, 3, 1]));
        assert_eq!(shape(&[5]).conjugate(), shape(&[1, 1, 1, 1, 1]));
        assert_eq!(shape(&[3, 1]).conjugate(), shape(&[2, 1, 1]));
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::parse("3,x").is_err());
        assert_eq!(Partition::parse("3, 1").unwrap(), shape(&[3, 1]));
    }

    #[test]
    fn enumerate_syt_two_one() {
        let tabs = enumerate_syt(&shape(&[2, 1]));
        assert_eq!(tabs.len(), 2);
        assert_eq!(tabs[0], tableau(&[&[1, 2], &[3]]));
        assert_eq!(tabs[1], tableau(&[&[1, 3], &[2]]));
    }

    #[test]
    fn enumerate_syt_single_row_and_three_two() {
        assert_eq!(enumerate_syt(&shape(&[5])).len(), 1);
        let tabs = enumerate_syt(&shape(&[3, 2]));
        assert_eq!(tabs.len(), 5);
        let symbols: Vec<Vec<usize>> = tabs
            .iter()
            .map(|t| t.row_yamanouchi().entries.clone())
            .collect();
        assert!(symbols.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn syt_count_matches_hook_formula_up_to_seven() {
        for n in 1..=7 {
            for p in partitions_of(n) {
                assert_eq!(
                    enumerate_syt(&p).len() as u64,
                    hook_dimension(&p),
                    "dimension mismatch for {p}"
                );
            }
        }
    }

    #[test]
    fn ordering_endpoints_are_canonical_fillings() {
        for n in 1..=6 {
            for p in partitions_of(n) {
                let tabs = enumerate_syt(&p);
                assert_eq!(tabs[0], StandardTableau::canonical_row(&p));
                assert_eq!(*tabs.last().unwrap(), StandardTableau::canonical_column(&p));
                // Column-symbol order runs opposite to the row-symbol order.
                let cys: Vec<Vec<usize>> = tabs
                    .iter()
                    .map(|t| t.column_yamanouchi().entries.clone())
                    .collect();
                assert!(cys.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn yamanouchi_examples() {
        let t = tableau(&[&[1, 2], &[3]]);
        assert_eq!(t.row_yamanouchi().entries, vec![1, 1, 2]);
        assert_eq!(t.column_yamanouchi().entries, vec![1, 2, 1]);
        let single = tableau(&[&[1, 2, 3, 4]]);
        assert_eq!(single.row_yamanouchi().entries, vec![1; 4]);
    }

    #[test]
    fn yamanouchi_round_trip_and_conjugate_symbol() {
        for n in 1..=5 {
            for p in partitions_of(n) {
                for t in enumerate_syt(&p) {
                    assert_eq!(reconstruct_tableau(&t.row_yamanouchi()).unwrap(), t);
                    assert_eq!(reconstruct_tableau(&t.column_yamanouchi()).unwrap(), t);
                    // Row symbol of the conjugate equals the column symbol.
                    assert_eq!(
                        t.conjugate().row_yamanouchi().entries,
                        t.column_yamanouchi().entries
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_yamanouchi_rejected() {
        let bad = YamanouchiSymbol {
            kind: YamanouchiKind::Row,
            entries: vec![1, 2, 2, 2],
        };
        assert!(reconstruct_tableau(&bad).is_err());
        let skips_row = YamanouchiSymbol {
            kind: YamanouchiKind::Row,
            entries: vec![1, 3],
        };
        assert!(reconstruct_tableau(&skips_row).is_err());
    }

    #[test]
    fn conjugate_tableau_examples() {
        assert_eq!(
            tableau(&[&[1, 2], &[3]]).conjugate(),
            tableau(&[&[1, 3], &[2]])
        );
        assert_eq!(
            tableau(&[&[1, 2, 3]]).conjugate(),
            tableau(&[&[1], &[2], &[3]])
        );
        for p in partitions_of(5) {
            for t in enumerate_syt(&p) {
                assert_eq!(t.conjugate().conjugate(), t);
            }
        }
    }

    #[test]
    fn axial_distance_examples() {
        let t = tableau(&[&[1, 2], &[3]]);
        assert_eq!(axial_distance(&t, 2, 2).unwrap(), 0);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(
                    axial_distance(&t, i, j).unwrap(),
                    -axial_distance(&t, j, i).unwrap()
                );
            }
        }
        assert_eq!(
            axial_distance(&t, 1, 5).unwrap_err(),
            YoungError::ValueNotFound { value: 5 }
        );
    }

    #[test]
    fn axial_distance_flips_under_conjugation() {
        for n in 2..=5 {
            for p in partitions_of(n) {
                for t in enumerate_syt(&p) {
                    let tc = t.conjugate();
                    for i in 1..=n {
                        for j in 1..=n {
                            assert_eq!(
                                axial_distance(&tc, i, j).unwrap(),
                                -axial_distance(&t, i, j).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_for_tableau_examples() {
        let t_ref = tableau(&[&[1, 2], &[3]]);
        assert!(sigma_for_tableau(&t_ref, &t_ref).unwrap().is_identity());
        let t = tableau(&[&[1, 3], &[2]]);
        let sigma = sigma_for_tableau(&t, &t_ref).unwrap();
        assert_eq!(sigma, Permutation::from_cycles(3, &[&[2, 3]]).unwrap());
        let other_shape = tableau(&[&[1, 2, 3]]);
        assert_eq!(
            sigma_for_tableau(&other_shape, &t_ref).unwrap_err(),
            YoungError::ShapeMismatch
        );
    }

    #[test]
    fn sigma_is_unique_over_s4() {
        use crate::perm::all_permutations;
        for p in partitions_of(4) {
            let tabs = enumerate_syt(&p);
            let t_ref = &tabs[0];
            for t in &tabs {
                let matches: Vec<Permutation> = all_permutations(4)
                    .into_iter()
                    .filter(|sigma| t_ref.apply_permutation(sigma) == t.rows())
                    .collect();
                assert_eq!(matches.len(), 1);
                assert_eq!(matches[0], sigma_for_tableau(t, t_ref).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in prop_partition()) {
            let p = Partition::new(parts).unwrap();
            prop_assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    fn prop_partition() -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(1..6usize, 1..5).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
    }
}
