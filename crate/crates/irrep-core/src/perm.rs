//! Permutations of `{1..N}` in one-line notation.
//!
//! Conventions used across the crate:
//!
//! * one-line notation is 1-based: `images[i-1]` is the image of point `i`;
//! * composition is right-to-left, `(p ∘ q)(i) = p(q(i))`;
//! * when a permutation rearranges a sequence of slots (tensor factors,
//!   tableau positions), slot `i` of the result receives the old entry at
//!   `σ⁻¹(i)`. Example: `σ = (2,3,1)` sends the entry in slot 1 to slot 2,
//!   so `[a, b, c]` becomes `[c, a, b]`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("one-line notation must be a bijection of 1..={n}, got {images:?}")]
    InvalidOneLine { n: usize, images: Vec<usize> },
    #[error("domain mismatch: permutations act on {left} and {right} points")]
    DomainMismatch { left: usize, right: usize },
    #[error("adjacent transposition index {k} outside 1..={max}")]
    InvalidTransposition { k: usize, max: usize },
    #[error("cycle entry {value} outside 1..={n} or repeated")]
    InvalidCycle { value: usize, n: usize },
}

/// A permutation of `{1..n}` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from one-line notation, validating that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::InvalidOneLine { n, images });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint (or not) cycles; points omitted are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut p = Permutation::identity(n);
        for cycle in cycles {
            let mut c = Permutation::identity(n);
            for (idx, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(PermError::InvalidCycle { value: v, n });
                }
                let next = cycle[(idx + 1) % cycle.len()];
                if c.images[v - 1] != v {
                    return Err(PermError::InvalidCycle { value: v, n });
                }
                c.images[v - 1] = next;
            }
            Permutation::from_images(c.images.clone())
                .map_err(|_| PermError::InvalidCycle { value: 0, n })?;
            p = c.compose(&p)?;
        }
        Ok(p)
    }

    /// The adjacent transposition `(k k+1)` in `S(n)`, `k` 1-based.
    pub fn adjacent_transposition(n: usize, k: usize) -> Result<Self, PermError> {
        if k == 0 || k + 1 > n {
            return Err(PermError::InvalidTransposition {
                k,
                max: n.saturating_sub(1),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::DomainMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of inversions: pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parity `(−1)^inversions`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Reduced word of `self` in the adjacent transpositions, obtained from a
    /// bubble-sort trace: for the returned list `[k₁, k₂, …]`,
    /// `self = (k₁ k₁+1) ∘ (k₂ k₂+1) ∘ …`, and its length equals
    /// [`Permutation::inversions`].
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut work = self.images.clone();
        let n = work.len();
        let mut swaps = Vec::with_capacity(self.inversions());
        // Right-multiplying by (k k+1) swaps the one-line entries at
        // positions k, k+1, so sorting the word records id = self ∘ ∏ t_k
        // and the factorization is the trace reversed.
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for k in 0..n.saturating_sub(1) {
                if work[k] > work[k + 1] {
                    work.swap(k, k + 1);
                    swaps.push(k + 1);
                    sorted = false;
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Cycle notation, e.g. `(1 2)(3 4)`; the identity prints as `e`.
    pub fn cycle_notation(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// All permutations of `{1..n}` in lexicographic one-line order; the identity
/// comes first.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation {
            images: cur.clone(),
        });
        if !next_lex(&mut cur) {
            break;
        }
    }
    out
}

fn next_lex(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}
