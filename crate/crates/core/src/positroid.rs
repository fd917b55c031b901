//! Matroids given by their bases; for this crate, positroids.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::matrix::{path_to_matrix, phi};
use crate::path::DyckPath;
use crate::subset::{k_subsets, Subset, MAX_GROUND_SET};

/// Rank-`d` matroid on `[n]` with bases kept in colexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PositroidJson", into = "PositroidJson")]
pub struct Positroid {
    n: usize,
    d: usize,
    bases: Vec<Subset>,
}

#[derive(Serialize, Deserialize)]
struct PositroidJson {
    n: usize,
    d: usize,
    bases: Vec<Subset>,
}

impl Positroid {
    /// Sorts and deduplicates; rejects an empty basis set, a basis of the
    /// wrong size, and elements outside `[n]`.
    pub fn new(n: usize, d: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::invalid(format!("ground set [{n}] exceeds {MAX_GROUND_SET}")));
        }
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        if bases.is_empty() {
            return Err(Error::invalid("a matroid needs at least one basis"));
        }
        let ground = Subset::initial(n);
        for b in &bases {
            if b.len() != d || !b.is_subset_of(ground) {
                return Err(Error::invalid(format!("{b:?} is not a {d}-subset of [{n}]")));
            }
        }
        Ok(Positroid { n, d, bases })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// For bases `B1, B2` and `x` in `B1 \ B2` there is `y` in `B2 \ B1` with
    /// `B1 - x + y` a basis.
    pub fn satisfies_exchange_axiom(&self) -> bool {
        self.bases.iter().all(|&b1| {
            self.bases.iter().all(|&b2| {
                b1.difference(b2).iter().all(|x| {
                    b2.difference(b1).iter().any(|y| self.is_basis(b1.without(x).with(y)))
                })
            })
        })
    }
}

impl TryFrom<PositroidJson> for Positroid {
    type Error = Error;

    fn try_from(j: PositroidJson) -> Result<Self> {
        Positroid::new(j.n, j.d, j.bases)
    }
}

impl From<Positroid> for PositroidJson {
    fn from(p: Positroid) -> Self {
        PositroidJson { n: p.n, d: p.d, bases: p.bases }
    }
}

/// Column sets of nonvanishing maximal minors of a full-rank `d x n` matrix.
pub fn bases_from_matrix(a: &IntMatrix) -> Result<Positroid> {
    let (d, n) = (a.rows(), a.cols());
    let rank = a.rank()?;
    if rank != d {
        return Err(Error::RankDeficient { rank, expected: d });
    }
    let mut bases = Vec::new();
    for s in k_subsets(n, d) {
        if a.maximal_minor(s)? != 0 {
            bases.push(s);
        }
    }
    Positroid::new(n, d, bases)
}

/// Bases of the rational Dyck positroid of `p`, by exact minors of its
/// extended matrix.
pub fn positroid_of_path(p: &DyckPath) -> Result<Positroid> {
    bases_from_matrix(phi(&path_to_matrix(p)).entries())
}

/// Whether the exchange relation `b ~ b'` connects all of `[n]`.
pub fn is_connected(p: &Positroid) -> bool {
    let n = p.n;
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    let ground = Subset::initial(n);
    let lookup: HashSet<Subset> = p.bases.iter().copied().collect();
    for &b in &p.bases {
        for x in b.iter() {
            for y in ground.difference(b).iter() {
                if lookup.contains(&b.without(x).with(y)) {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    parent[rx] = ry;
                }
            }
        }
    }
    let root = find(&mut parent, 1);
    (2..=n).all(|e| find(&mut parent, e) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::desk_paths;

    pub(crate) fn example_matrix() -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 1],
            vec![0, 0, 1, 0, 0, 0, 1, 2, 1, 0, -1, 0],
            vec![0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        ])
        .unwrap()
    }

    fn sets(p: &Positroid) -> Vec<Vec<usize>> {
        p.bases().iter().map(|b| b.to_vec()).collect()
    }

    #[test]
    fn rank_one_example() {
        let p = positroid_of_path(&"EEN".parse().unwrap()).unwrap();
        assert_eq!(sets(&p), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn three_two_example() {
        let p = positroid_of_path(&"EENEN".parse().unwrap()).unwrap();
        let mut expected: Vec<Subset> = k_subsets(5, 2)
            .filter(|s| s.to_vec() != vec![1, 5] && s.to_vec() != vec![3, 4])
            .collect();
        expected.sort();
        assert_eq!(p.bases(), expected.as_slice());
        assert_eq!(p.bases().len(), 8);
        assert!(is_connected(&p));
        assert!(p.satisfies_exchange_axiom());
    }

    #[test]
    fn worked_example_matrix() {
        let p = bases_from_matrix(&example_matrix()).unwrap();
        assert!(p.is_basis(Subset::from_elements([1, 3, 4, 6, 11])));
        assert!(!p.is_basis(Subset::from_elements([1, 2, 3, 4, 5])));
        assert_eq!(p.bases().len(), 168);
        for s in k_subsets(12, 5) {
            assert!(example_matrix().maximal_minor(s).unwrap() >= 0);
        }
    }

    #[test]
    fn rank_deficient_rejected() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(bases_from_matrix(&a), Err(Error::RankDeficient { rank: 1, expected: 2 }));
    }

    #[test]
    fn connectivity() {
        let single = Positroid::new(4, 2, [Subset::from_elements([1, 3])]).unwrap();
        assert!(!is_connected(&single));
        let u13 = Positroid::new(3, 1, (1..=3).map(|i| Subset::from_elements([i]))).unwrap();
        assert!(is_connected(&u13));
        for p in desk_paths(9) {
            let pos = positroid_of_path(&p).unwrap();
            assert!(is_connected(&pos), "{p}");
        }
    }

    #[test]
    fn connectedness_witness_bases() {
        for p in desk_paths(9) {
            let pos = positroid_of_path(&p).unwrap();
            let d = p.d();
            assert!(pos.is_basis(Subset::initial(d)));
            let heights = p.east_heights();
            for (j, h) in heights.iter().enumerate() {
                let w = d - h;
                assert!(pos.is_basis(Subset::initial(d).without(w).with(d + j + 1)), "{p}");
            }
        }
    }

    #[test]
    fn exchange_axiom_on_desk() {
        for p in desk_paths(8) {
            assert!(positroid_of_path(&p).unwrap().satisfies_exchange_axiom());
        }
        let broken = Positroid::new(
            4,
            2,
            [Subset::from_elements([1, 2]), Subset::from_elements([3, 4])],
        )
        .unwrap();
        assert!(!broken.satisfies_exchange_axiom());
    }

    #[test]
    fn json_roundtrip() {
        let p = positroid_of_path(&"EEN".parse().unwrap()).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":3,"d":1,"bases":[[1],[2],[3]]}"#);
        assert_eq!(serde_json::from_str::<Positroid>(&s).unwrap(), p);
    }
}
