//! Abstract finite groups as multiplication tables, and the symmetric groups
//! `S(N)`.
//!
//! A [`GroupTable`] is validated at construction: the table must be a Latin
//! square, inverses must hit the identity, and associativity is checked on
//! all triples for orders up to 1000 (a deterministic 10⁵-triple sample
//! above that).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::perm::{all_permutations, Permutation};

/// Largest `N` for which `S(N)` is enumerated. `8! = 40320` elements.
pub const MAX_SYMMETRIC_N: usize = 8;

/// Group orders up to this bound get an exhaustive associativity check at
/// construction; larger tables are sampled.
const EXHAUSTIVE_ASSOC_ORDER: usize = 1000;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("S({n}) exceeds the enumeration guard N ≤ {max}")]
    TooLarge { n: usize, max: usize },
    #[error("group axioms violated: {0}")]
    NotAGroup(String),
}

/// A finite group given by its multiplication table.
///
/// Element `k` of a symmetric group also carries its [`Permutation`], which
/// is what supplies signs to the sign-twisted representations.
#[derive(Debug)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    labels: Option<Vec<String>>,
    perms: Option<Vec<Permutation>>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.mult == other.mult
    }
}

impl GroupTable {
    /// Build and validate a table. `mult` is row-major `order × order`.
    pub fn new(
        order: usize,
        mult: Vec<u32>,
        identity: usize,
        labels: Option<Vec<String>>,
        perms: Option<Vec<Permutation>>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::NotAGroup("empty element set".into()));
        }
        if mult.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "table has {} entries, expected {}",
                mult.len(),
                order * order
            )));
        }
        if identity >= order {
            return Err(GroupError::NotAGroup("identity index out of range".into()));
        }
        let mut inv = vec![u32::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if mult[i * order + j] as usize == identity {
                    inv[i] = j as u32;
                }
            }
        }
        let table = GroupTable {
            order,
            mult,
            inv,
            identity,
            labels,
            perms,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        for (i, &v) in self.mult.iter().enumerate() {
            if v as usize >= n {
                return Err(GroupError::NotAGroup(format!(
                    "table entry {} at {} out of range",
                    v, i
                )));
            }
        }
        // Latin square: every row and column is a permutation of indices.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = self.mult[i * n + j] as usize;
                if seen[v] {
                    return Err(GroupError::NotAGroup(format!("row {} repeats {}", i, v)));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = self.mult[i * n + j] as usize;
                if seen[v] {
                    return Err(GroupError::NotAGroup(format!("column {} repeats {}", j, v)));
                }
                seen[v] = true;
            }
        }
        // Identity and inverses.
        for i in 0..n {
            if self.mult[i * n + self.identity] as usize != i
                || self.mult[self.identity * n + i] as usize != i
            {
                return Err(GroupError::NotAGroup(format!(
                    "element {} does not fix the identity",
                    i
                )));
            }
            let inv = self.inv[i];
            if inv == u32::MAX {
                return Err(GroupError::NotAGroup(format!(
                    "element {} has no inverse",
                    i
                )));
            }
            if self.mult[i * n + inv as usize] as usize != self.identity
                || self.mult[inv as usize * n + i] as usize != self.identity
            {
                return Err(GroupError::NotAGroup(format!(
                    "inverse of {} is not two-sided",
                    i
                )));
            }
        }
        // Associativity.
        let assoc = |a: usize, b: usize, c: usize| {
            let ab = self.mult[a * n + b] as usize;
            let bc = self.mult[b * n + c] as usize;
            self.mult[ab * n + c] == self.mult[a * n + bc]
        };
        if n <= EXHAUSTIVE_ASSOC_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::NotAGroup(format!(
                                "associativity fails on ({}, {}, {})",
                                a, b, c
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9E3779B97F4A7C15u64 ^ (n as u64);
            let mut next = move || {
                // SplitMix64; deterministic sampling, no RNG dependency here.
                state = state.wrapping_add(0x9E3779B97F4A7C15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
                (z ^ (z >> 31)) as usize
            };
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (next() % n, next() % n, next() % n);
                if !assoc(a, b, c) {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails on ({}, {}, {})",
                        a, b, c
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the product of elements `i` and `j`.
    pub fn mult(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.order + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{}", i),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Permutation underlying element `i`, when the group is an `S(N)` table.
    pub fn permutation(&self, i: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[i])
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    /// `sgn` of element `i`, when permutation structure is available.
    pub fn sign_of(&self, i: usize) -> Option<i32> {
        self.perms.as_ref().map(|p| p[i].sign())
    }

    /// Index of a permutation in an `S(N)` table.
    pub fn index_of_permutation(&self, p: &Permutation) -> Option<usize> {
        let perms = self.perms.as_ref()?;
        perms.iter().position(|q| q == p)
    }
}

/// The symmetric group `S(n)` as a [`GroupTable`] whose elements are all
/// permutations in lexicographic one-line order (identity first). Results are
/// cached per process, so repeated calls share one table.
pub fn enumerate_symmetric_group(n: usize) -> Result<Arc<GroupTable>, GroupError> {
    if n == 0 || n > MAX_SYMMETRIC_N {
        return Err(GroupError::TooLarge {
            n,
            max: MAX_SYMMETRIC_N,
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GroupTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(build_symmetric_group(n)?);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

fn build_symmetric_group(n: usize) -> Result<GroupTable, GroupError> {
    let perms = all_permutations(n);
    let order = perms.len();
    let index: HashMap<&[usize], u32> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.one_line(), i as u32))
        .collect();
    let mut mult = vec![0u32; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let prod = p.compose(q).expect("same domain");
            mult[i * order + j] = index[prod.one_line()];
        }
    }
    let identity = index[Permutation::identity(n).one_line()] as usize;
    let labels = perms.iter().map(|p| p.cycle_notation()).collect();
    GroupTable::new(order, mult, identity, Some(labels), Some(perms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s1_is_trivial() {
        let g = enumerate_symmetric_group(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity_index(), 0);
    }

    #[test]
    fn s3_has_six_elements() {
        let g = enumerate_symmetric_group(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity_index(), 0);
        assert_eq!(g.label(0), "e");
    }

    #[test]
    fn s6_table_is_valid() {
        // Construction validates the Latin-square and group axioms.
        let g = enumerate_symmetric_group(6).unwrap();
        assert_eq!(g.order(), 720);
        // Spot-check inverses against the permutation structure.
        for i in (0..720).step_by(37) {
            let p = g.permutation(i).unwrap();
            let inv = g.permutation(g.inv(i)).unwrap();
            assert!(p.compose(inv).unwrap().is_identity());
        }
    }

    #[test]
    fn guard_rejects_large_n() {
        assert_eq!(
            enumerate_symmetric_group(9).unwrap_err(),
            GroupError::TooLarge { n: 9, max: 8 }
        );
        assert!(enumerate_symmetric_group(0).is_err());
    }

    #[test]
    fn cache_shares_tables() {
        let a = enumerate_symmetric_group(4).unwrap();
        let b = enumerate_symmetric_group(4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn rejects_non_groups() {
        // Table with a repeated row entry.
        let bad = GroupTable::new(2, vec![0, 0, 1, 0], 0, None, None);
        assert!(bad.is_err());
        // Z/2 is fine.
        let z2 = GroupTable::new(2, vec![0, 1, 1, 0], 0, None, None).unwrap();
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn signs_come_from_permutations() {
        let g = enumerate_symmetric_group(3).unwrap();
        let signs: Vec<i32> = (0..6).map(|i| g.sign_of(i).unwrap()).collect();
        assert_eq!(signs.iter().filter(|&&s| s == 1).count(), 3);
        assert_eq!(g.sign_of(g.identity_index()), Some(1));
    }

    #[test]
    fn large_cyclic_table_uses_sampled_associativity() {
        // Order 1200 crosses the exhaustive-check bound, so construction
        // goes through the sampled path.
        let n = 1200usize;
        let mut mult = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = ((i + j) % n) as u32;
            }
        }
        let g = GroupTable::new(n, mult, 0, None, None).unwrap();
        assert_eq!(g.inv(1), n - 1);
        assert_eq!(g.mult(n - 1, 2), 1);
    }
}
