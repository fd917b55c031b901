//! Matroid polytopes of positroids and their inequality descriptions.

mod lp;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ColumnProfile;
use crate::necklace::{necklace_explicit, GrassmannNecklace};
use crate::positroid::Positroid;
use crate::subset::{k_subsets, Subset};

pub use lp::{lp_max, LpSolution, LpStatus};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `a . x <= b` or `a . x = b`, depending on where it is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub a: Vec<BigRational>,
    pub b: BigRational,
}

impl Constraint {
    pub fn new(a: Vec<BigRational>, b: BigRational) -> Self {
        Constraint { a, b }
    }

    /// `sum_{i in support} x_i` against `b`, over `n` coordinates.
    pub fn window(n: usize, support: impl IntoIterator<Item = usize>, b: i64) -> Self {
        let mut a = vec![BigRational::zero(); n];
        for i in support {
            a[i - 1] = int(1);
        }
        Constraint { a, b: int(b) }
    }

    fn unit(n: usize, i: usize, coeff: i64, b: i64) -> Self {
        let mut a = vec![BigRational::zero(); n];
        a[i - 1] = int(coeff);
        Constraint { a, b: int(b) }
    }

    pub fn lhs_at(&self, x: &[BigRational]) -> BigRational {
        self.a.iter().zip(x).filter(|(a, _)| !a.is_zero()).map(|(a, x)| a * x).sum()
    }

    fn lhs_at_indicator(&self, s: Subset) -> BigRational {
        s.iter().map(|i| &self.a[i - 1]).sum()
    }

    fn render(&self, rel: &str) -> String {
        let mut terms = String::new();
        for (i, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if terms.is_empty() {
                if c.is_negative() {
                    terms.push('-');
                }
            } else {
                terms.push_str(&format!(" {sign} "));
            }
            if mag != int(1) {
                terms.push_str(&format!("{mag} "));
            }
            terms.push_str(&format!("x{}", i + 1));
        }
        if terms.is_empty() {
            terms.push('0');
        }
        format!("{terms} {rel} {}", self.b)
    }
}

#[derive(Serialize, Deserialize)]
struct ConstraintJson {
    a: Vec<String>,
    b: String,
}

impl Serialize for Constraint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConstraintJson { a: self.a.iter().map(|x| x.to_string()).collect(), b: self.b.to_string() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Constraint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = ConstraintJson::deserialize(deserializer)?;
        let parse = |s: &str| s.parse::<BigRational>().map_err(serde::de::Error::custom);
        Ok(Constraint {
            a: j.a.iter().map(|s| parse(s)).collect::<std::result::Result<_, _>>()?,
            b: parse(&j.b)?,
        })
    }
}

/// `{x in Q^n : eq rows hold with equality, ineq rows hold}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HJson", into = "HJson")]
pub struct HPolytope {
    n: usize,
    eq: Vec<Constraint>,
    ineq: Vec<Constraint>,
}

#[derive(Serialize, Deserialize)]
struct HJson {
    n: usize,
    eq: Vec<Constraint>,
    ineq: Vec<Constraint>,
}

impl TryFrom<HJson> for HPolytope {
    type Error = Error;

    fn try_from(j: HJson) -> Result<Self> {
        if j.eq.iter().chain(&j.ineq).any(|c| c.a.len() != j.n) {
            return Err(Error::invalid(format!("every row must have {} coefficients", j.n)));
        }
        Ok(HPolytope { n: j.n, eq: j.eq, ineq: j.ineq })
    }
}

impl From<HPolytope> for HJson {
    fn from(h: HPolytope) -> Self {
        HJson { n: h.n, eq: h.eq, ineq: h.ineq }
    }
}

impl HPolytope {
    pub fn new(n: usize) -> Self {
        HPolytope { n, eq: Vec::new(), ineq: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.eq
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.ineq
    }

    /// Panics if the row has the wrong length.
    pub fn push_eq(&mut self, c: Constraint) {
        assert_eq!(c.a.len(), self.n, "row length");
        self.eq.push(c);
    }

    pub fn push_ineq(&mut self, c: Constraint) {
        assert_eq!(c.a.len(), self.n, "row length");
        self.ineq.push(c);
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        x.len() == self.n
            && self.eq.iter().all(|c| c.lhs_at(x) == c.b)
            && self.ineq.iter().all(|c| c.lhs_at(x) <= c.b)
    }

    /// Whether the indicator vector of `s` satisfies every row.
    pub fn contains_indicator(&self, s: Subset) -> bool {
        self.eq.iter().all(|c| c.lhs_at_indicator(s) == c.b)
            && self.ineq.iter().all(|c| c.lhs_at_indicator(s) <= c.b)
    }

    /// Copy without rows that cannot cut anything: `0 <= b` with `b >= 0`
    /// and exact duplicates. For display only.
    pub fn pruned(&self) -> HPolytope {
        let mut out = HPolytope::new(self.n);
        for c in &self.eq {
            if !out.eq.contains(c) {
                out.eq.push(c.clone());
            }
        }
        for c in &self.ineq {
            let vacuous = c.a.iter().all(Zero::is_zero) && !c.b.is_negative();
            if !vacuous && !out.ineq.contains(c) {
                out.ineq.push(c.clone());
            }
        }
        out
    }
}

impl fmt::Display for HPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.eq {
            writeln!(f, "{}", c.render("="))?;
        }
        for c in &self.ineq {
            writeln!(f, "{}", c.render("<="))?;
        }
        Ok(())
    }
}

/// 0/1 vector with `d` ones, stored by its support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex01 {
    n: usize,
    support: Subset,
}

impl Vertex01 {
    pub fn new(n: usize, support: Subset) -> Result<Self> {
        if !support.is_subset_of(Subset::initial(n)) {
            return Err(Error::invalid(format!("{support:?} is not inside [{n}]")));
        }
        Ok(Vertex01 { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    pub fn coordinates(&self) -> Vec<u8> {
        (1..=self.n).map(|i| u8::from(self.support.contains(i))).collect()
    }

    /// `self - other = e_i - e_j` for some `i != j`.
    pub fn differs_by_transposition(&self, other: &Vertex01) -> bool {
        self.support.difference(other.support).len() == 1
            && other.support.difference(self.support).len() == 1
    }
}

impl Serialize for Vertex01 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coordinates().serialize(serializer)
    }
}

/// One indicator vector per basis, colexicographic.
pub fn vertices_from_bases(p: &Positroid) -> Vec<Vertex01> {
    p.bases().iter().map(|&b| Vertex01 { n: p.n(), support: b }).collect()
}

/// Half-open cyclic window `j, j+1, ..., a-1` in `[n]`; empty when `a = j`.
fn cyclic_window(j: usize, a: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut x = j;
    while x != a {
        out.push(x);
        x = x % n + 1;
    }
    out
}

fn simplex_frame(n: usize, d: usize) -> HPolytope {
    let mut h = HPolytope::new(n);
    h.push_eq(Constraint::window(n, 1..=n, d as i64));
    for i in 1..=n {
        h.push_ineq(Constraint::unit(n, i, -1, 0));
    }
    h
}

/// `sum x = d`, `x >= 0`, and for all `j in [n]`, `k in [d]` the cyclic window
/// `x_j + ... + x_{a^j_k - 1} <= k - 1`.
pub fn hrep_general(neck: &GrassmannNecklace) -> HPolytope {
    let (n, d) = (neck.n(), neck.d());
    let mut h = simplex_frame(n, d);
    for j in 1..=n {
        let entry = neck.ordered_entry(j);
        for (k, &a) in entry.iter().enumerate() {
            h.push_ineq(Constraint::window(n, cyclic_window(j, a, n), k as i64));
        }
    }
    h
}

/// Which window family the refined system uses for the rows `i in [d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedFamily {
    /// Only `x_i + ... + x_{p_{m(i)} - 1} <= (d - i) + m(i)` where
    /// `m(i) = max{r : omega(p_r) >= i, r < i}` is defined.
    Verbatim,
    /// The verbatim rows plus, for `3 <= i <= d`, the window
    /// `x_i + ... + x_{a^i_{d-i+3} - 1} <= d - i + 2`.
    Completed,
}

/// The short description of a rational Dyck positroid polytope:
/// `sum x = d`; `x >= 0`; `x_i <= 1` on `[d]`; at most one coordinate in each
/// run `p_i, ..., p_{i+1} - 1` of columns between principal indices; the
/// window rows of [`RefinedFamily::Completed`]; and for each principal
/// `p_i` after the first, `x_{p_i} + ... + x_{d+m} + x_1 + ... + x_{omega(p_i)}
/// <= omega(p_i)`.
pub fn hrep_refined(profile: &ColumnProfile) -> Result<HPolytope> {
    hrep_refined_with(profile, RefinedFamily::Completed)
}

pub fn hrep_refined_with(profile: &ColumnProfile, family: RefinedFamily) -> Result<HPolytope> {
    let (d, n) = (profile.d(), profile.n());
    let p = profile.principal();
    let t = p.len();
    let mut h = simplex_frame(n, d);
    for i in 1..=d {
        h.push_ineq(Constraint::unit(n, i, 1, 1));
    }
    for r in 0..t {
        let end = if r + 1 < t { p[r + 1] - 1 } else { n };
        h.push_ineq(Constraint::window(n, p[r]..=end, 1));
    }
    for i in 1..=d {
        // r is 1-based in the defining set
        let m_i = (1..=t.min(i - 1)).rev().find(|&r| profile.weight(p[r - 1]) >= i);
        if let Some(r) = m_i {
            h.push_ineq(Constraint::window(n, i..p[r - 1], (d - i + r) as i64));
        }
    }
    if family == RefinedFamily::Completed && d >= 3 {
        let neck = necklace_explicit(profile)?;
        for i in 3..=d {
            let a = neck.ordered_entry(i)[d - i + 2];
            h.push_ineq(Constraint::window(n, cyclic_window(i, a, n), (d - i + 2) as i64));
        }
    }
    for &pi in p.iter().skip(1) {
        let w = profile.weight(pi);
        h.push_ineq(Constraint::window(n, cyclic_window(pi, w % n + 1, n), w as i64));
    }
    Ok(h)
}

/// All 0/1 vectors with exactly `d` ones satisfying `h`.
pub fn zero_one_points(h: &HPolytope, d: usize) -> Vec<Vertex01> {
    k_subsets(h.n(), d)
        .filter(|&s| h.contains_indicator(s))
        .map(|support| Vertex01 { n: h.n(), support })
        .collect()
}

/// Whether every row of `outer` holds on all of `inner`, certified by exact
/// linear programming. An empty `inner` is contained in anything.
pub fn polytope_contains(outer: &HPolytope, inner: &HPolytope) -> Result<bool> {
    if outer.n() != inner.n() {
        return Err(Error::invalid("polytopes live in different dimensions"));
    }
    let bounded_max = |a: &[BigRational]| -> Result<Option<BigRational>> {
        let sol = lp_max(inner, a)?;
        match sol.status {
            LpStatus::Optimal => Ok(sol.value),
            LpStatus::Infeasible => Ok(None),
            LpStatus::Unbounded => Err(Error::Unbounded),
        }
    };
    for c in outer.inequalities() {
        match bounded_max(&c.a)? {
            None => return Ok(true),
            Some(v) if v > c.b => return Ok(false),
            Some(_) => {}
        }
    }
    for c in outer.equalities() {
        let neg: Vec<BigRational> = c.a.iter().map(|x| -x.clone()).collect();
        for (obj, bound) in [(c.a.clone(), c.b.clone()), (neg, -c.b.clone())] {
            match bounded_max(&obj)? {
                None => return Ok(true),
                Some(v) if v > bound => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// Whether `[u, v]` is an edge of `conv(vertices)`: the midpoint `(u+v)/2`
/// admits no convex representation by `vertices` that puts weight less than
/// one on `{u, v}`.
pub fn vertices_adjacent(vertices: &[Vertex01], u: &Vertex01, v: &Vertex01) -> Result<bool> {
    let iu = vertices.iter().position(|x| x == u);
    let iv = vertices.iter().position(|x| x == v);
    let (Some(iu), Some(iv)) = (iu, iv) else {
        return Err(Error::invalid("both endpoints must be among the vertices"));
    };
    if iu == iv {
        return Err(Error::invalid("endpoints must differ"));
    }
    let k = vertices.len();
    let n = u.n();
    let mut h = HPolytope::new(k);
    h.push_eq(Constraint::window(k, 1..=k, 1));
    for coord in 1..=n {
        let a = vertices
            .iter()
            .map(|w| int(i64::from(w.support.contains(coord))))
            .collect();
        let twice = i64::from(u.support.contains(coord)) + i64::from(v.support.contains(coord));
        h.push_eq(Constraint::new(a, BigRational::new(BigInt::from(twice), BigInt::from(2))));
    }
    for l in 1..=k {
        h.push_ineq(Constraint::unit(k, l, -1, 0));
    }
    let mut objective = vec![BigRational::zero(); k];
    objective[iu] = int(-1);
    objective[iv] = int(-1);
    let sol = lp_max(&h, &objective)?;
    match (sol.status, sol.value) {
        (LpStatus::Optimal, Some(v)) => Ok(v == int(-1)),
        _ => Err(Error::internal("midpoint representation LP did not reach an optimum")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ColumnProfile;
    use crate::necklace::necklace_from_bases;
    use crate::path::{desk_paths, DyckPath};
    use crate::positroid::positroid_of_path;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn supports(vs: &[Vertex01]) -> Vec<Vec<usize>> {
        vs.iter().map(|v| v.support().to_vec()).collect()
    }

    fn three_two() -> (Positroid, HPolytope, HPolytope) {
        let p = path("EENEN");
        let pos = positroid_of_path(&p).unwrap();
        let general = hrep_general(&necklace_from_bases(&pos).unwrap());
        let refined = hrep_refined(&ColumnProfile::from_path(&p)).unwrap();
        (pos, general, refined)
    }

    #[test]
    fn cyclic_windows() {
        assert_eq!(cyclic_window(3, 3, 5), Vec::<usize>::new());
        assert_eq!(cyclic_window(4, 2, 5), vec![4, 5, 1]);
        assert_eq!(cyclic_window(1, 3, 5), vec![1, 2]);
    }

    #[test]
    fn rank_one_vertices() {
        let pos = positroid_of_path(&path("EEN")).unwrap();
        let v = vertices_from_bases(&pos);
        assert_eq!(v.iter().map(|x| x.coordinates()).collect::<Vec<_>>(), vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1]
        ]);
        let general = hrep_general(&necklace_from_bases(&pos).unwrap());
        assert_eq!(general.inequalities().len() + general.equalities().len(), 3 + 3 + 1);
        assert!(general.inequalities()[3..].iter().all(|c| c.a.iter().all(Zero::is_zero)));
        assert_eq!(supports(&zero_one_points(&general, 1)), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn three_two_systems() {
        let (pos, general, refined) = three_two();
        let verts = vertices_from_bases(&pos);
        assert_eq!(verts.len(), 8);
        assert!(!verts.iter().any(|v| v.coordinates() == vec![1, 0, 0, 0, 1]));
        assert!(!verts.iter().any(|v| v.coordinates() == vec![0, 0, 1, 1, 0]));
        assert_eq!(general.inequalities().len() + 1, 5 * 2 + 5 + 1);
        assert_eq!(zero_one_points(&general, 2), verts);
        assert_eq!(zero_one_points(&refined, 2), verts);
        assert!(polytope_contains(&general, &refined).unwrap());
        assert!(polytope_contains(&refined, &general).unwrap());
    }

    #[test]
    fn lp_on_three_two() {
        let (_, general, _) = three_two();
        let obj: Vec<BigRational> = [1, 0, 0, 0, 1].iter().map(|&x| int(x)).collect();
        let sol = lp_max(&general, &obj).unwrap();
        assert_eq!(sol.value, Some(int(1)));
        let w = sol.witness.unwrap();
        assert!(general.contains_point(&w));
        assert_eq!(general.equalities()[0].lhs_at(&w), int(2));
    }

    #[test]
    fn rank_one_refined() {
        let prof = ColumnProfile::from_path(&path("EEEN"));
        let h = hrep_refined(&prof).unwrap();
        // sum, four sign rows, x_1 <= 1; no principal indices when d = 1
        assert_eq!(h.equalities().len(), 1);
        assert_eq!(h.inequalities().len(), 5);
    }

    #[test]
    fn containment_examples() {
        let mut simplex = HPolytope::new(3);
        simplex.push_eq(Constraint::window(3, 1..=3, 1));
        for i in 1..=3 {
            simplex.push_ineq(Constraint::unit(3, i, -1, 0));
        }
        let mut cube = simplex.clone();
        for i in 1..=3 {
            cube.push_ineq(Constraint::unit(3, i, 1, 1));
        }
        assert!(polytope_contains(&cube, &simplex).unwrap());
        let mut capped = simplex.clone();
        capped.push_ineq(Constraint::new(vec![BigRational::new(1.into(), 1.into()), int(0), int(0)], BigRational::new(1.into(), 2.into())));
        assert!(!polytope_contains(&capped, &cube).unwrap());

        let mut open = HPolytope::new(1);
        open.push_ineq(Constraint::unit(1, 1, -1, 0));
        let mut bounded = HPolytope::new(1);
        bounded.push_ineq(Constraint::unit(1, 1, 1, 5));
        assert_eq!(polytope_contains(&bounded, &open), Err(Error::Unbounded));
    }

    #[test]
    fn adjacency_examples() {
        let pos = positroid_of_path(&path("EEN")).unwrap();
        let v = vertices_from_bases(&pos);
        for a in &v {
            for b in &v {
                if a != b {
                    assert!(vertices_adjacent(&v, a, b).unwrap());
                    assert!(a.differs_by_transposition(b));
                }
            }
        }
        // two-point set that is not a matroid polytope
        let u = Vertex01::new(4, Subset::from_elements([1, 2])).unwrap();
        let w = Vertex01::new(4, Subset::from_elements([3, 4])).unwrap();
        assert!(vertices_adjacent(&[u, w], &u, &w).unwrap());
        assert!(!u.differs_by_transposition(&w));
        // a square's diagonal is not an edge
        let sq: Vec<Vertex01> = [[1, 3], [1, 4], [2, 3], [2, 4]]
            .iter()
            .map(|s| Vertex01::new(4, Subset::from_elements(*s)).unwrap())
            .collect();
        assert!(!vertices_adjacent(&sq, &sq[0], &sq[3]).unwrap());
        assert!(vertices_adjacent(&sq, &sq[0], &sq[1]).unwrap());
        let stray = Vertex01::new(4, Subset::from_elements([1, 2])).unwrap();
        assert!(vertices_adjacent(&sq, &sq[0], &stray).is_err());
    }

    #[test]
    fn ggms_on_three_two() {
        let (pos, _, _) = three_two();
        let v = vertices_from_bases(&pos);
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                if vertices_adjacent(&v, a, b).unwrap() {
                    assert!(a.differs_by_transposition(b));
                }
            }
        }
    }

    #[test]
    fn zero_one_points_on_desk() {
        for p in desk_paths(9) {
            let pos = positroid_of_path(&p).unwrap();
            let verts = vertices_from_bases(&pos);
            let general = hrep_general(&necklace_from_bases(&pos).unwrap());
            let refined = hrep_refined(&ColumnProfile::from_path(&p)).unwrap();
            assert_eq!(zero_one_points(&general, p.d()), verts, "{p}");
            assert_eq!(zero_one_points(&refined, p.d()), verts, "{p}");
        }
    }

    #[test]
    fn json_and_text() {
        let mut h = HPolytope::new(2);
        h.push_eq(Constraint::window(2, 1..=2, 1));
        h.push_ineq(Constraint::new(vec![BigRational::new(1.into(), 2.into()), int(-3)], int(0)));
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"n":2,"eq":[{"a":["1","1"],"b":"1"}],"ineq":[{"a":["1/2","-3"],"b":"0"}]}"#);
        assert_eq!(serde_json::from_str::<HPolytope>(&s).unwrap(), h);
        assert_eq!(h.to_string(), "x1 + x2 = 1\n1/2 x1 - 3 x2 <= 0\n");
    }
}
