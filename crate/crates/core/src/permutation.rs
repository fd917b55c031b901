//! Decorated permutations and the maps relating them to necklaces and paths.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ColumnProfile;
use crate::necklace::{cyclic_rank, GrassmannNecklace};
use crate::path::{DyckPath, Step};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Decoration {
    #[serde(rename = "cw")]
    Clockwise,
    #[serde(rename = "ccw")]
    Counterclockwise,
}

/// A permutation of `[n]` whose fixed points carry a [`Decoration`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermJson", into = "PermJson")]
pub struct DecoratedPermutation {
    images: Vec<usize>,
    decorations: BTreeMap<usize, Decoration>,
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    n: usize,
    images: Vec<usize>,
    #[serde(default)]
    decorations: BTreeMap<usize, Decoration>,
}

impl DecoratedPermutation {
    /// `images[i-1] = pi(i)`. Decorations must be given exactly on fixed points.
    pub fn new(images: Vec<usize>, decorations: BTreeMap<usize, Decoration>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!("{images:?} is not a permutation of [{n}]")));
            }
        }
        for i in 1..=n {
            let fixed = images[i - 1] == i;
            if fixed != decorations.contains_key(&i) {
                return Err(Error::invalid(format!(
                    "decorations must be given exactly on fixed points (check {i})"
                )));
            }
        }
        if decorations.keys().any(|&k| k > n) {
            return Err(Error::invalid("decoration on an element outside [n]"));
        }
        Ok(DecoratedPermutation { images, decorations })
    }

    /// Builds from cycles such as `"(1 5 2 4 3)"`; unlisted points are
    /// clockwise fixed points.
    pub fn from_cycles(n: usize, cycles: &str) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut rest = cycles.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::invalid(format!("cannot parse cycles {cycles:?}")))?;
            let elems: Vec<usize> = body
                .0
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::invalid(format!("bad element {t:?}"))))
                .collect::<Result<_>>()?;
            for (k, &a) in elems.iter().enumerate() {
                if !(1..=n).contains(&a) {
                    return Err(Error::invalid(format!("{a} is outside [{n}]")));
                }
                images[a - 1] = elems[(k + 1) % elems.len()];
            }
            rest = body.1.trim_start();
        }
        let decorations = (1..=n)
            .filter(|&i| images[i - 1] == i)
            .map(|i| (i, Decoration::Clockwise))
            .collect();
        Self::new(images, decorations)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn decorations(&self) -> &BTreeMap<usize, Decoration> {
        &self.decorations
    }

    pub fn decoration(&self, i: usize) -> Option<Decoration> {
        self.decorations.get(&i).copied()
    }

    pub fn inverse(&self) -> DecoratedPermutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        DecoratedPermutation { images: inv, decorations: self.decorations.clone() }
    }

    /// `(start, pi(start), pi^2(start), ...)`.
    pub fn cycle_of(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut cur = self.image(start);
        while cur != start {
            out.push(cur);
            cur = self.image(cur);
        }
        out
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for i in 1..=self.n() {
            if !seen[i] {
                let c = self.cycle_of(i);
                for &x in &c {
                    seen[x] = true;
                }
                out.push(c);
            }
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.decorations.keys().copied().collect()
    }

    /// `j` with `j < pi(j)`, or a counterclockwise fixed point.
    pub fn weak_excedances(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| {
                let v = self.image(j);
                j < v || (j == v && self.decoration(j) == Some(Decoration::Counterclockwise))
            })
            .collect()
    }

    /// Cycle notation, each cycle starting at its least element. Fixed points
    /// print as `(j)`, counterclockwise ones as `(j*)`.
    pub fn cycle_string(&self) -> String {
        let mut out = String::new();
        for c in self.cycles() {
            out.push('(');
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            out.push_str(&parts.join(" "));
            if c.len() == 1 && self.decoration(c[0]) == Some(Decoration::Counterclockwise) {
                out.push('*');
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl TryFrom<PermJson> for DecoratedPermutation {
    type Error = Error;

    fn try_from(j: PermJson) -> Result<Self> {
        if j.n != j.images.len() {
            return Err(Error::invalid("n does not match the number of images"));
        }
        DecoratedPermutation::new(j.images, j.decorations)
    }
}

impl From<DecoratedPermutation> for PermJson {
    fn from(p: DecoratedPermutation) -> Self {
        PermJson { n: p.n(), images: p.images, decorations: p.decorations }
    }
}

/// `pi(j) = i` when `I_{i+1} = (I_i \ {i}) u {j}`; a fixed point `i` is
/// clockwise when `i` is not in `I_i`, counterclockwise otherwise.
pub fn perm_from_necklace(neck: &GrassmannNecklace) -> Result<DecoratedPermutation> {
    let n = neck.n();
    let mut images = vec![0usize; n];
    let mut decorations = BTreeMap::new();
    for i in 1..=n {
        let cur = neck.entry(i);
        let next = neck.entry(i % n + 1);
        if cur == next {
            images[i - 1] = i;
            let dec = if cur.contains(i) { Decoration::Counterclockwise } else { Decoration::Clockwise };
            decorations.insert(i, dec);
        } else {
            let added = next.difference(cur);
            if added.len() != 1 || !cur.contains(i) || cur.without(i) != cur.intersection(next) {
                return Err(Error::invalid(format!("I_{i} -> I_{} is not a single exchange", i % n + 1)));
            }
            let j = added.iter().next().expect("one element");
            images[j - 1] = i;
        }
    }
    DecoratedPermutation::new(images, decorations)
}

/// `I_i = {j : j <_i pi(j)} u {counterclockwise fixed points}`.
pub fn necklace_from_perm(pi: &DecoratedPermutation) -> Result<GrassmannNecklace> {
    let n = pi.n();
    let entries: Vec<Subset> = (1..=n)
        .map(|i| {
            Subset::from_elements((1..=n).filter(|&j| {
                let pj = pi.image(j);
                if pj == j {
                    pi.decoration(j) == Some(Decoration::Counterclockwise)
                } else {
                    cyclic_rank(i, j, n) < cyclic_rank(i, pj, n)
                }
            }))
        })
        .collect();
    let d = entries.first().map_or(0, |e| e.len());
    GrassmannNecklace::new(n, d, entries)
}

/// `pi^{-1}` read off the column profile:
///
/// * `pi^{-1}(1) = d+1`;
/// * for `1 < i <= d`: the principal `j` of weight `i-1` if there is one,
///   else `i-1`;
/// * for `i > d`: `i+1` if `i+1` is a non-principal column, else `omega(i)`.
pub fn perm_inverse_explicit(profile: &ColumnProfile) -> Result<DecoratedPermutation> {
    let (d, n) = (profile.d(), profile.n());
    let principal = profile.principal();
    let mut inv = vec![0usize; n];
    for i in 1..=n {
        inv[i - 1] = if i == 1 {
            d + 1
        } else if i <= d {
            let hits: Vec<usize> =
                principal.iter().copied().filter(|&j| profile.weight(j) == i - 1).collect();
            match hits.as_slice() {
                [] => i - 1,
                [j] => *j,
                _ => {
                    return Err(Error::internal(format!(
                        "several principal columns of weight {}",
                        i - 1
                    )))
                }
            }
        } else if i < n && !principal.contains(&(i + 1)) {
            i + 1
        } else {
            profile.weight(i)
        };
    }
    let inverse = DecoratedPermutation::new(inv.clone(), fixed_clockwise(&inv))
        .map_err(|e| Error::internal(format!("explicit inverse is not a permutation: {e}")))?;
    Ok(inverse.inverse())
}

fn fixed_clockwise(images: &[usize]) -> BTreeMap<usize, Decoration> {
    (1..=images.len())
        .filter(|&i| images[i - 1] == i)
        .map(|i| (i, Decoration::Clockwise))
        .collect()
}

/// Reads the southwest step labels from the last step back to the first; the
/// sequence is the cycle `(1 pi(1) pi^2(1) ...)`.
pub fn southwest_perm(p: &DyckPath) -> DecoratedPermutation {
    let mut labels = p.step_labels();
    labels.reverse();
    let n = labels.len();
    let mut images = vec![0usize; n];
    for k in 0..n {
        images[labels[k] - 1] = labels[(k + 1) % n];
    }
    let decorations = fixed_clockwise(&images);
    DecoratedPermutation::new(images, decorations).expect("labels form a permutation")
}

/// Inverse of [`southwest_perm`]. `d` is the number of weak excedances; the
/// cycle of `pi^{-1}` from `d+1` spells the path, `E` for entries above `d`.
pub fn path_from_perm(pi: &DecoratedPermutation) -> Result<DyckPath> {
    let n = pi.n();
    if !pi.decorations().is_empty() {
        return Err(Error::NotRationalDyck("permutation has fixed points".into()));
    }
    let d = pi.weak_excedances().len();
    if d == 0 || d >= n {
        return Err(Error::NotRationalDyck(format!("{d} weak excedances on [{n}]")));
    }
    let cycle = pi.inverse().cycle_of(d + 1);
    if cycle.len() != n {
        return Err(Error::NotRationalDyck(format!("{pi} is not an {n}-cycle")));
    }
    let steps = cycle.iter().map(|&i| if i > d { Step::East } else { Step::North }).collect();
    let path = DyckPath::with_type(n - d, d, steps)
        .map_err(|e| Error::NotRationalDyck(format!("{pi}: {e}")))?;
    if southwest_perm(&path) != *pi {
        return Err(Error::NotRationalDyck(format!("{pi} is not the permutation of {path}")));
    }
    Ok(path)
}

/// `m omega(j) >= d (d+m-j+1)` for every `j > d`.
pub fn geometric_bound_holds(profile: &ColumnProfile) -> bool {
    let (d, m) = (profile.d(), profile.m());
    (d + 1..=d + m).all(|j| m * profile.weight(j) >= d * (d + m - j + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{column_profile, path_to_matrix, phi};
    use crate::necklace::{necklace_explicit, necklace_from_bases};
    use crate::path::desk_paths;
    use crate::positroid::{bases_from_matrix, positroid_of_path};
    use crate::linalg::IntMatrix;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn three_two_recipe() {
        let neck = necklace_from_bases(&positroid_of_path(&path("EENEN")).unwrap()).unwrap();
        let pi = perm_from_necklace(&neck).unwrap();
        assert_eq!(pi.cycle_string(), "(1 5 2 4 3)");
        assert_eq!(necklace_from_perm(&pi).unwrap(), neck);
    }

    #[test]
    fn rank_one_recipe() {
        let neck = GrassmannNecklace::from_lists(3, 1, &[vec![1], vec![2], vec![3]]).unwrap();
        let pi = perm_from_necklace(&neck).unwrap();
        assert_eq!(pi.cycle_string(), "(1 3 2)");
        assert_eq!(necklace_from_perm(&pi).unwrap(), neck);
    }

    #[test]
    fn worked_example_permutation() {
        let a = IntMatrix::from_rows(vec![
            vec![1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 1],
            vec![0, 0, 1, 0, 0, 0, 1, 2, 1, 0, -1, 0],
            vec![0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        ])
        .unwrap();
        let neck = necklace_from_bases(&bases_from_matrix(&a).unwrap()).unwrap();
        let pi = perm_from_necklace(&neck).unwrap();
        assert_eq!(pi.cycle_string(), "(1 12 9 2)(3 10 11 7)(4 5)(6 8)");
        assert_eq!(pi.image(3), 10);
        assert_eq!(necklace_from_perm(&pi).unwrap(), neck);
    }

    #[test]
    fn explicit_inverse_case_by_case() {
        let prof = column_profile(&phi(&path_to_matrix(&path("EENEN")))).unwrap();
        let pi = perm_inverse_explicit(&prof).unwrap();
        let inv = pi.inverse();
        assert_eq!(inv.images(), &[3, 5, 4, 2, 1]);
        assert_eq!(inv.cycle_string(), "(1 3 4 2 5)");
        assert_eq!(pi.cycle_string(), "(1 5 2 4 3)");
    }

    #[test]
    fn southwest_examples() {
        assert_eq!(southwest_perm(&path("EENEN")).cycle_string(), "(1 5 2 4 3)");
        assert_eq!(southwest_perm(&path("EEN")).cycle_string(), "(1 3 2)");
        let big = southwest_perm(&path("EEENENEENEENN"));
        assert_eq!(big.cycle_string(), "(1 2 13 12 3 11 10 4 9 5 8 7 6)");
        assert_eq!(big.weak_excedances(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn path_from_perm_examples() {
        let pi = DecoratedPermutation::from_cycles(5, "(1 5 2 4 3)").unwrap();
        assert_eq!(path_from_perm(&pi).unwrap().to_string(), "EENEN");
        let pi = DecoratedPermutation::from_cycles(3, "(1 3 2)").unwrap();
        assert_eq!(path_from_perm(&pi).unwrap().to_string(), "EEN");
        let pi = DecoratedPermutation::from_cycles(4, "(1 2)(3 4)").unwrap();
        assert!(matches!(path_from_perm(&pi), Err(Error::NotRationalDyck(_))));
        // a 5-cycle with two weak excedances that is no southwest reading
        let pi = DecoratedPermutation::from_cycles(5, "(1 4 2 5 3)").unwrap();
        assert!(path_from_perm(&pi).is_err());
    }

    #[test]
    fn weak_excedance_examples() {
        let pi = DecoratedPermutation::from_cycles(5, "(1 5 2 4 3)").unwrap();
        assert_eq!(pi.weak_excedances(), vec![1, 2]);
        let ccw = (1..=3).map(|i| (i, Decoration::Counterclockwise)).collect();
        let id = DecoratedPermutation::new(vec![1, 2, 3], ccw).unwrap();
        assert_eq!(id.weak_excedances(), vec![1, 2, 3]);
        assert_eq!(id.cycle_string(), "(1*)(2*)(3*)");
    }

    #[test]
    fn geometric_bound_examples() {
        let prof = ColumnProfile::from_path(&path("EENEN"));
        assert!(geometric_bound_holds(&prof));
        for p in desk_paths(10) {
            assert!(geometric_bound_holds(&ColumnProfile::from_path(&p)), "{p}");
        }
    }

    #[test]
    fn routes_agree_on_desk() {
        for p in desk_paths(9) {
            let sw = southwest_perm(&p);
            let prof = ColumnProfile::from_path(&p);
            assert_eq!(perm_inverse_explicit(&prof).unwrap(), sw, "{p}");
            let neck = necklace_from_bases(&positroid_of_path(&p).unwrap()).unwrap();
            assert_eq!(perm_from_necklace(&neck).unwrap(), sw, "{p}");
            assert_eq!(perm_from_necklace(&necklace_explicit(&prof).unwrap()).unwrap(), sw);
            assert_eq!(path_from_perm(&sw).unwrap(), p);
            assert_eq!(sw.cycles().len(), 1);
            assert_eq!(sw.weak_excedances(), (1..=p.d()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn inverse_cycle_monotone_segments() {
        for p in desk_paths(10) {
            let d = p.d();
            let cycle = southwest_perm(&p).inverse().cycle_of(d + 1);
            let low: Vec<usize> = cycle.iter().copied().filter(|&x| (2..=d).contains(&x)).collect();
            let high: Vec<usize> = cycle.iter().copied().filter(|&x| x > d + 1).collect();
            assert!(low.windows(2).all(|w| w[0] > w[1]), "{p}");
            assert!(high.windows(2).all(|w| w[0] < w[1]), "{p}");
        }
    }

    #[test]
    fn json_schema() {
        let pi = DecoratedPermutation::from_cycles(3, "(1 3 2)").unwrap();
        assert_eq!(serde_json::to_string(&pi).unwrap(), r#"{"n":3,"images":[3,1,2],"decorations":{}}"#);
        let fixed: DecoratedPermutation =
            serde_json::from_str(r#"{"n":2,"images":[1,2],"decorations":{"1":"cw","2":"ccw"}}"#).unwrap();
        assert_eq!(fixed.weak_excedances(), vec![2]);
        assert!(serde_json::from_str::<DecoratedPermutation>(r#"{"n":2,"images":[1,2]}"#).is_err());
    }
}
