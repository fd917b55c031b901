use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of `[n]` (`n <= 64`) stored as a bitmask; bit `i-1` marks element `i`.
///
/// For sets of equal size, numeric order of the mask is colexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

pub const MAX_GROUND_SET: usize = 64;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Panics on elements outside `1..=64`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut s = Subset(0);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// `{1, ..., k}`.
    pub fn initial(k: usize) -> Self {
        if k == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << k) - 1)
        }
    }

    pub fn insert(&mut self, e: usize) {
        assert!((1..=MAX_GROUND_SET).contains(&e), "element {e} out of range");
        self.0 |= 1 << (e - 1);
    }

    pub fn remove(&mut self, e: usize) {
        if (1..=MAX_GROUND_SET).contains(&e) {
            self.0 &= !(1 << (e - 1));
        }
    }

    pub fn with(mut self, e: usize) -> Self {
        self.insert(e);
        self
    }

    pub fn without(mut self, e: usize) -> Self {
        self.remove(e);
        self
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND_SET).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let e = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(e)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Elements listed in the cyclic order starting at `start`.
    pub fn cyclic_sorted(self, start: usize) -> Vec<usize> {
        let (mut tail, head): (Vec<usize>, Vec<usize>) = self.iter().partition(|&e| e >= start);
        tail.extend(head);
        tail
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = elements.iter().find(|e| !(1..=MAX_GROUND_SET).contains(*e)) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(Subset::from_elements(elements))
    }
}

/// All `k`-subsets of `[n]` in colexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= MAX_GROUND_SET);
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(Subset::initial(k).0)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur as u128 + c as u128;
            if r >= limit {
                None
            } else {
                let r = r as u64;
                Some((((r ^ cur) >> 2) / c) | r)
            }
        };
        Some(Subset(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_enumeration() {
        let all: Vec<Vec<usize>> = k_subsets(4, 2).map(Subset::to_vec).collect();
        assert_eq!(
            all,
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(13, 5).count(), 1287);
        assert_eq!(k_subsets(64, 64).count(), 1);
    }

    #[test]
    fn cyclic_sort() {
        let s = Subset::from_elements([1, 3, 5]);
        assert_eq!(s.cyclic_sorted(3), vec![3, 5, 1]);
        assert_eq!(s.cyclic_sorted(1), vec![1, 3, 5]);
        assert_eq!(s.cyclic_sorted(6), vec![1, 3, 5]);
    }

    #[test]
    fn set_ops() {
        let s = Subset::from_elements([2, 4]);
        assert!(s.contains(4) && !s.contains(3) && !s.contains(0) && !s.contains(99));
        assert_eq!(s.with(1).without(4).to_vec(), vec![1, 2]);
        assert_eq!(s.len(), 2);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,4]");
        let back: Subset = serde_json::from_str("[4,2]").unwrap();
        assert_eq!(back, s);
    }
}
