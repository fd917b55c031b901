//! Cyclic orders, Gale orders and Grassmann necklaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ColumnProfile;
use crate::positroid::Positroid;
use crate::subset::{k_subsets, Subset};

/// Position of `a` in the rotation `i, i+1, ..., n, 1, ..., i-1` (0-based).
pub(crate) fn cyclic_rank(i: usize, a: usize, n: usize) -> usize {
    (a + n - i) % n
}

/// `a <=_i b` in the cyclic order starting at `i`.
pub fn leq_i(i: usize, a: usize, b: usize, n: usize) -> Result<bool> {
    for x in [i, a, b] {
        if !(1..=n).contains(&x) {
            return Err(Error::invalid(format!("{x} is outside [{n}]")));
        }
    }
    Ok(cyclic_rank(i, a, n) <= cyclic_rank(i, b, n))
}

/// Gale order `S <=_i T`: compare the `<=_i`-sorted sets componentwise.
pub fn gale_leq(i: usize, s: Subset, t: Subset, n: usize) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::invalid("Gale order compares sets of equal size"));
    }
    let ground = Subset::initial(n);
    if !(1..=n).contains(&i) || !s.is_subset_of(ground) || !t.is_subset_of(ground) {
        return Err(Error::invalid(format!("arguments must lie in [{n}]")));
    }
    Ok(gale_unchecked(i, s, t, n))
}

fn gale_unchecked(i: usize, s: Subset, t: Subset, n: usize) -> bool {
    s.cyclic_sorted(i)
        .into_iter()
        .zip(t.cyclic_sorted(i))
        .all(|(a, b)| cyclic_rank(i, a, n) <= cyclic_rank(i, b, n))
}

/// `(I_1, ..., I_n)` with `I_i` listed in `<=_i` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NecklaceJson", into = "NecklaceJson")]
pub struct GrassmannNecklace {
    n: usize,
    d: usize,
    entries: Vec<Subset>,
}

#[derive(Serialize, Deserialize)]
struct NecklaceJson {
    n: usize,
    d: usize,
    entries: Vec<Vec<usize>>,
}

impl GrassmannNecklace {
    /// Validates sizes and the necklace exchange condition: `I_{i+1}`
    /// contains `I_i \ {i}`, and equals `I_i` when `i` is not in `I_i`.
    pub fn new(n: usize, d: usize, entries: Vec<Subset>) -> Result<Self> {
        if n == 0 || entries.len() != n {
            return Err(Error::invalid(format!("expected {n} necklace entries, got {}", entries.len())));
        }
        let ground = Subset::initial(n);
        for (k, e) in entries.iter().enumerate() {
            if e.len() != d || !e.is_subset_of(ground) {
                return Err(Error::invalid(format!("entry I_{} = {e:?} is not a {d}-subset of [{n}]", k + 1)));
            }
        }
        for i in 1..=n {
            let cur = entries[i - 1];
            let next = entries[i % n];
            let ok = if cur.contains(i) {
                cur.without(i).is_subset_of(next)
            } else {
                next == cur
            };
            if !ok {
                return Err(Error::invalid(format!(
                    "necklace condition fails between I_{i} = {cur:?} and I_{} = {next:?}",
                    i % n + 1
                )));
            }
        }
        Ok(GrassmannNecklace { n, d, entries })
    }

    /// Entries given as lists (in any order).
    pub fn from_lists(n: usize, d: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(lists.len());
        for l in lists {
            if l.iter().any(|&e| !(1..=n).contains(&e)) {
                return Err(Error::invalid(format!("entry {l:?} leaves [{n}]")));
            }
            let s = Subset::from_elements(l.iter().copied());
            if s.len() != l.len() {
                return Err(Error::invalid(format!("entry {l:?} repeats an element")));
            }
            entries.push(s);
        }
        Self::new(n, d, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `I_i` as a set.
    pub fn entry(&self, i: usize) -> Subset {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Subset] {
        &self.entries
    }

    /// `I_i` listed in `<=_i` order: `(a^i_1, ..., a^i_d)`.
    pub fn ordered_entry(&self, i: usize) -> Vec<usize> {
        self.entries[i - 1].cyclic_sorted(i)
    }

    pub fn ordered_entries(&self) -> Vec<Vec<usize>> {
        (1..=self.n).map(|i| self.ordered_entry(i)).collect()
    }
}

impl TryFrom<NecklaceJson> for GrassmannNecklace {
    type Error = Error;

    fn try_from(j: NecklaceJson) -> Result<Self> {
        GrassmannNecklace::from_lists(j.n, j.d, &j.entries)
    }
}

impl From<GrassmannNecklace> for NecklaceJson {
    fn from(g: GrassmannNecklace) -> Self {
        NecklaceJson { n: g.n, d: g.d, entries: g.ordered_entries() }
    }
}

/// `I_i` is the `<=_i`-lexicographically minimal basis.
pub fn necklace_from_bases(p: &Positroid) -> Result<GrassmannNecklace> {
    let n = p.n();
    let entries = (1..=n)
        .map(|i| {
            p.bases()
                .iter()
                .copied()
                .min_by_key(|b| {
                    b.cyclic_sorted(i).into_iter().map(|x| cyclic_rank(i, x, n)).collect::<Vec<_>>()
                })
                .ok_or_else(|| Error::invalid("empty basis set"))
        })
        .collect::<Result<Vec<_>>>()?;
    GrassmannNecklace::new(n, p.d(), entries)
}

/// Oh's reconstruction: `B` is a basis iff `I_j <=_j B` for every `j`.
pub fn bases_from_necklace(neck: &GrassmannNecklace) -> Result<Positroid> {
    let n = neck.n;
    let bases = k_subsets(n, neck.d)
        .filter(|&b| (1..=n).all(|j| gale_unchecked(j, neck.entry(j), b, n)));
    Positroid::new(n, neck.d, bases)
}

/// How the explicit formula fills the tail of an entry with elements of `[d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    /// Smallest elements of `[d]` that are not weights of the columns already
    /// in the entry.
    Weights,
    /// Leading elements of `E_A`, as the closed formula is usually stated.
    /// Can produce entries of the wrong size.
    ComplementOnly,
}

/// Grassmann necklace of a rational Dyck positroid from its column profile.
pub fn necklace_explicit(profile: &ColumnProfile) -> Result<GrassmannNecklace> {
    let entries = explicit_entries(profile, Completion::Weights)?;
    GrassmannNecklace::from_lists(profile.n(), profile.d(), &entries)
        .map_err(|e| Error::invalid(format!("inconsistent profile: {e}")))
}

/// Raw entries (each in `<=_j` order) of the explicit formula under the given
/// completion rule. Entries are not validated.
pub fn explicit_entries(profile: &ColumnProfile, rule: Completion) -> Result<Vec<Vec<usize>>> {
    let (d, n) = (profile.d(), profile.n());
    let p = profile.principal();
    let t = p.len();
    if profile.weights().len() != n || (d >= 2 && p.first() != Some(&(d + 1))) {
        return Err(Error::invalid("inconsistent profile"));
    }
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let mut entry: Vec<usize> = Vec::with_capacity(d);
        if j == 1 {
            entry.extend(1..=d);
        } else if j <= d {
            entry.extend(j..=d);
            entry.push(d + 1);
            // s >= 1 since omega(p_1) = d >= j - 1
            let s = (0..t).rev().find(|&k| profile.weight(p[k]) + 1 >= j).map_or(0, |k| k + 1);
            entry.extend(&p[s..]);
        } else {
            entry.push(j);
            if t > 0 {
                let s = p.iter().take_while(|&&pk| pk <= j).count();
                entry.extend(&p[s..]);
            }
        }
        let missing = d.saturating_sub(entry.len());
        if missing > 0 {
            let fill: Vec<usize> = match rule {
                Completion::Weights => {
                    let used: Vec<usize> = entry.iter().map(|&c| profile.weight(c)).collect();
                    (1..=d).filter(|q| !used.contains(q)).take(missing).collect()
                }
                Completion::ComplementOnly => {
                    profile.complement().iter().copied().take(missing).collect()
                }
            };
            entry.extend(fill);
        }
        out.push(entry);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{column_profile, path_to_matrix, phi};
    use crate::path::{desk_paths, DyckPath};
    use crate::positroid::{bases_from_matrix, positroid_of_path};
    use crate::linalg::IntMatrix;

    fn lists(g: &GrassmannNecklace) -> Vec<Vec<usize>> {
        g.ordered_entries()
    }

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_elements(v.iter().copied())
    }

    #[test]
    fn cyclic_order_examples() {
        assert!(leq_i(1, 2, 5, 5).unwrap());
        assert!(leq_i(3, 5, 1, 5).unwrap());
        for b in [1, 3, 4, 5] {
            assert!(!leq_i(3, 2, b, 5).unwrap());
        }
        assert!(leq_i(3, 2, 2, 5).unwrap());
        assert!(leq_i(0, 1, 1, 5).is_err());
        assert!(leq_i(1, 6, 1, 5).is_err());
    }

    #[test]
    fn gale_examples() {
        assert!(gale_leq(1, s(&[1, 2]), s(&[4, 5]), 5).unwrap());
        assert!(gale_leq(3, s(&[3, 5]), s(&[3, 1]), 5).unwrap());
        assert!(!gale_leq(3, s(&[3, 1]), s(&[3, 5]), 5).unwrap());
        assert!(gale_leq(2, s(&[1, 4]), s(&[1, 4]), 5).unwrap());
        assert!(gale_leq(1, s(&[1]), s(&[1, 2]), 5).is_err());
    }

    #[test]
    fn three_two_necklace() {
        let pos = positroid_of_path(&path("EENEN")).unwrap();
        let neck = necklace_from_bases(&pos).unwrap();
        assert_eq!(lists(&neck), vec![vec![1, 2], vec![2, 3], vec![3, 5], vec![4, 5], vec![5, 2]]);
        assert_eq!(bases_from_necklace(&neck).unwrap(), pos);
    }

    #[test]
    fn rank_one_necklace() {
        let pos = positroid_of_path(&path("EEN")).unwrap();
        let neck = necklace_from_bases(&pos).unwrap();
        assert_eq!(lists(&neck), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(bases_from_necklace(&neck).unwrap(), pos);
    }

    #[test]
    fn worked_example_necklace() {
        let a = IntMatrix::from_rows(vec![
            vec![1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 1],
            vec![0, 0, 1, 0, 0, 0, 1, 2, 1, 0, -1, 0],
            vec![0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        ])
        .unwrap();
        let pos = bases_from_matrix(&a).unwrap();
        let neck = necklace_from_bases(&pos).unwrap();
        assert_eq!(neck.ordered_entry(1), vec![1, 3, 4, 6, 10]);
        assert_eq!(neck.ordered_entry(10), vec![10, 11, 12, 4, 6]);
        assert_eq!(bases_from_necklace(&neck).unwrap(), pos);
    }

    #[test]
    fn necklace_validation() {
        assert!(GrassmannNecklace::from_lists(3, 1, &[vec![1], vec![2], vec![3]]).is_ok());
        // 1 in I_1 but I_2 must contain I_1 \ {1}
        assert!(GrassmannNecklace::from_lists(3, 2, &[vec![1, 2], vec![3, 1], vec![3, 1]]).is_err());
        // 2 not in I_2 forces I_3 = I_2
        assert!(GrassmannNecklace::from_lists(3, 1, &[vec![1], vec![3], vec![1]]).is_err());
        assert!(GrassmannNecklace::from_lists(3, 1, &[vec![1], vec![2]]).is_err());
    }

    #[test]
    fn explicit_examples() {
        let prof = column_profile(&phi(&path_to_matrix(&path("EENEN")))).unwrap();
        let neck = necklace_explicit(&prof).unwrap();
        assert_eq!(lists(&neck), vec![vec![1, 2], vec![2, 3], vec![3, 5], vec![4, 5], vec![5, 2]]);
        let literal = explicit_entries(&prof, Completion::ComplementOnly).unwrap();
        assert_eq!(literal[..4], lists(&neck)[..4]);
        assert_eq!(literal[4], vec![5]);

        let prof = column_profile(&phi(&path_to_matrix(&path("EEN")))).unwrap();
        assert_eq!(lists(&necklace_explicit(&prof).unwrap()), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn explicit_matches_generic_and_oh_round_trips() {
        for p in desk_paths(9) {
            let pos = positroid_of_path(&p).unwrap();
            let neck = necklace_from_bases(&pos).unwrap();
            let prof = ColumnProfile::from_path(&p);
            assert_eq!(necklace_explicit(&prof).unwrap(), neck, "{p}");
            assert_eq!(neck.ordered_entry(1), (1..=p.d()).collect::<Vec<_>>());
            let back = bases_from_necklace(&neck).unwrap();
            assert_eq!(back, pos, "{p}");
            assert_eq!(necklace_from_bases(&back).unwrap(), neck);
            for j in 1..=p.n() {
                assert_eq!(neck.ordered_entry(j)[0], j, "{p} I_{j}");
            }
        }
    }
}
