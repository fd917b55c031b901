//! Rational Dyck matrices, the signed embedding `phi`, and the column profile
//! (weights, principal indices, complement) of its image.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{embed_signed, IntMatrix};
use crate::path::DyckPath;

/// `d x m` binary matrix whose ones are bottom-justified in each column, with
/// column one-counts `c_j = d - h_j` read off a rational Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct DyckMatrix {
    d: usize,
    m: usize,
    entries: IntMatrix,
}

/// `d x (d+m)` image of a [`DyckMatrix`] under `phi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ExtendedMatrix {
    d: usize,
    m: usize,
    entries: IntMatrix,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    d: usize,
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl DyckMatrix {
    /// Validates the staircase shape and the diagonal bound `m c_j >= d (m-j+1)`.
    pub fn new(entries: IntMatrix) -> Result<Self> {
        let (d, m) = (entries.rows(), entries.cols());
        if d == 0 || m == 0 {
            return Err(Error::MalformedMatrix("dimensions must be positive".into()));
        }
        let mut prev = d;
        for j in 0..m {
            let col = entries.column(j);
            if col.iter().any(|&v| v != 0 && v != 1) {
                return Err(Error::MalformedMatrix(format!("column {} is not binary", j + 1)));
            }
            let zeros = col.iter().take_while(|&&v| v == 0).count();
            if col[zeros..].iter().any(|&v| v != 1) {
                return Err(Error::MalformedMatrix(format!(
                    "ones in column {} are not bottom-justified",
                    j + 1
                )));
            }
            let c = d - zeros;
            if j == 0 && c != d {
                return Err(Error::MalformedMatrix("first column must be all ones".into()));
            }
            if c > prev {
                return Err(Error::MalformedMatrix(format!(
                    "column one-counts increase at column {}",
                    j + 1
                )));
            }
            if m * c < d * (m - j) {
                return Err(Error::MalformedMatrix(format!(
                    "column {} crosses the diagonal: {m}*{c} < {d}*{}",
                    j + 1,
                    m - j
                )));
            }
            prev = c;
        }
        Ok(DyckMatrix { d, m, entries })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// One-counts `c_1, ..., c_m`.
    pub fn column_counts(&self) -> Vec<usize> {
        (0..self.m).map(|j| self.entries.column(j).iter().filter(|&&v| v == 1).count()).collect()
    }
}

pub fn path_to_matrix(p: &DyckPath) -> DyckMatrix {
    let (d, m) = (p.d(), p.m());
    let mut entries = IntMatrix::zeros(d, m);
    for (j, h) in p.east_heights().into_iter().enumerate() {
        for r in h..d {
            entries.set(r, j, 1);
        }
    }
    DyckMatrix { d, m, entries }
}

pub fn matrix_to_path(dm: &DyckMatrix) -> Result<DyckPath> {
    let heights: Vec<usize> = dm.column_counts().into_iter().map(|c| dm.d - c).collect();
    DyckPath::from_east_heights(dm.d, &heights)
        .map_err(|e| Error::MalformedMatrix(format!("not a rational Dyck matrix: {e}")))
}

pub fn phi(dm: &DyckMatrix) -> ExtendedMatrix {
    ExtendedMatrix { d: dm.d, m: dm.m, entries: embed_signed(&dm.entries) }
}

impl ExtendedMatrix {
    /// Checks the identity block and that every later column is supported on
    /// a nonempty top segment of rows with alternating signs.
    pub fn new(d: usize, m: usize, entries: IntMatrix) -> Result<Self> {
        if entries.rows() != d || entries.cols() != d + m || d == 0 || m == 0 {
            return Err(Error::MalformedMatrix(format!(
                "expected a {d}x{} matrix, got {}x{}",
                d + m,
                entries.rows(),
                entries.cols()
            )));
        }
        for i in 0..d {
            for j in 0..d {
                if entries.get(i, j) != i64::from(i == j) {
                    return Err(Error::MalformedMatrix("first d columns must be the identity".into()));
                }
            }
        }
        let out = ExtendedMatrix { d, m, entries };
        for j in d + 1..=d + m {
            out.column_weight(j)?;
        }
        Ok(out)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.d + self.m
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    // 1-based column j > d
    fn column_weight(&self, j: usize) -> Result<usize> {
        let col = self.entries.column(j - 1);
        let w = col.iter().take_while(|&&v| v != 0).count();
        if w == 0 {
            return Err(Error::MalformedMatrix(format!("column {j} is zero")));
        }
        if col[w..].iter().any(|&v| v != 0) {
            return Err(Error::MalformedMatrix(format!(
                "column {j} is not supported on a top segment of rows"
            )));
        }
        if col[..w].windows(2).any(|p| p[0].signum() == p[1].signum()) {
            return Err(Error::MalformedMatrix(format!("signs in column {j} do not alternate")));
        }
        Ok(w)
    }
}

/// Weight map, principal indices and complement of an extended matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnProfile {
    d: usize,
    m: usize,
    /// `weights[j-1] = omega(j)`.
    weights: Vec<usize>,
    principal: Vec<usize>,
    complement: Vec<usize>,
}

pub fn column_profile(a: &ExtendedMatrix) -> Result<ColumnProfile> {
    let (d, m) = (a.d, a.m);
    let mut weights: Vec<usize> = (1..=d).collect();
    for j in d + 1..=d + m {
        weights.push(a.column_weight(j)?);
    }
    let principal = (d + 1..=d + m)
        .filter(|&j| a.entries.column(j - 1) != a.entries.column(j - 2))
        .collect();
    Ok(ColumnProfile::assemble(d, m, weights, principal))
}

impl ColumnProfile {
    fn assemble(d: usize, m: usize, weights: Vec<usize>, principal: Vec<usize>) -> Self {
        let complement =
            (1..=d).filter(|q| !weights[d..].contains(q)).collect();
        ColumnProfile { d, m, weights, principal, complement }
    }

    /// Reads the profile directly off the path: `omega(d+j) = d - h_j`, and
    /// column `d+j` is principal when it differs from its left neighbour.
    pub fn from_path(p: &DyckPath) -> Self {
        let d = p.d();
        let mut weights: Vec<usize> = (1..=d).collect();
        weights.extend(p.east_heights().into_iter().map(|h| d - h));
        let principal = (d + 1..=d + p.m())
            .filter(|&j| if j == d + 1 { d > 1 } else { weights[j - 1] != weights[j - 2] })
            .collect();
        Self::assemble(d, p.m(), weights, principal)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.d + self.m
    }

    /// `omega(j)` for 1-based `j`.
    pub fn weight(&self, j: usize) -> usize {
        self.weights[j - 1]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// `I_A = {p_1 < ... < p_t}`.
    pub fn principal(&self) -> &[usize] {
        &self.principal
    }

    /// `E_A = [d] \ {omega(i) : i > d}`.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// The path this profile was read from.
    pub fn to_path(&self) -> Result<DyckPath> {
        let heights: Vec<usize> = self.weights[self.d..].iter().map(|w| self.d - w).collect();
        DyckPath::from_east_heights(self.d, &heights)
    }
}

impl TryFrom<MatrixJson> for DyckMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        let entries = IntMatrix::from_rows(j.rows)?;
        if entries.rows() != j.d || entries.cols() != j.m {
            return Err(Error::MalformedMatrix("rows do not match the declared d and m".into()));
        }
        DyckMatrix::new(entries)
    }
}

impl From<DyckMatrix> for MatrixJson {
    fn from(dm: DyckMatrix) -> Self {
        MatrixJson { d: dm.d, m: dm.m, rows: dm.entries.to_rows() }
    }
}

impl TryFrom<MatrixJson> for ExtendedMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        ExtendedMatrix::new(j.d, j.m, IntMatrix::from_rows(j.rows)?)
    }
}

impl From<ExtendedMatrix> for MatrixJson {
    fn from(a: ExtendedMatrix) -> Self {
        MatrixJson { d: a.d, m: a.m, rows: a.entries.to_rows() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::minor_correspondence_holds;
    use crate::path::{desk_paths, enumerate_paths};
    use crate::subset::k_subsets;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn rows(dm: &DyckMatrix) -> Vec<Vec<i64>> {
        dm.entries().to_rows()
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(rows(&path_to_matrix(&path("EEN"))), vec![vec![1, 1]]);
        assert_eq!(rows(&path_to_matrix(&path("EENEN"))), vec![vec![1, 1, 0], vec![1, 1, 1]]);
        assert_eq!(rows(&path_to_matrix(&path("ENN"))), vec![vec![1], vec![1]]);
    }

    #[test]
    fn json_schema() {
        let dm = path_to_matrix(&path("EEN"));
        assert_eq!(serde_json::to_string(&dm).unwrap(), r#"{"d":1,"m":2,"rows":[[1,1]]}"#);
        let back: DyckMatrix = serde_json::from_str(r#"{"d":1,"m":2,"rows":[[1,1]]}"#).unwrap();
        assert_eq!(back, dm);
        assert!(serde_json::from_str::<DyckMatrix>(r#"{"d":1,"m":2,"rows":[[1,0]]}"#).is_err());
    }

    // Every 2x2 binary matrix, classified by the Young-diagram/diagonal
    // definition computed independently of DyckMatrix::new.
    #[test]
    fn all_two_by_two_binary_matrices() {
        let mut accepted = Vec::new();
        for mask in 0u8..16 {
            let r = vec![
                vec![(mask & 1) as i64, (mask >> 1 & 1) as i64],
                vec![(mask >> 2 & 1) as i64, (mask >> 3 & 1) as i64],
            ];
            let m = IntMatrix::from_rows(r.clone()).unwrap();
            if let Ok(dm) = DyckMatrix::new(m) {
                accepted.push((r, matrix_to_path(&dm).unwrap().to_string()));
            }
        }
        // zero region a right-justified Young diagram in the top-right, first
        // column full, and the path under the diagonal of the 2x2 square:
        // only (1,1),(1,1) and (1,0),(1,1) qualify.
        assert_eq!(
            accepted,
            vec![
                (vec![vec![1, 0], vec![1, 1]], "ENEN".to_string()),
                (vec![vec![1, 1], vec![1, 1]], "EENN".to_string()),
            ]
        );
    }

    #[test]
    fn round_trips() {
        for p in desk_paths(10) {
            let dm = path_to_matrix(&p);
            assert_eq!(matrix_to_path(&dm).unwrap(), p);
            assert_eq!(DyckMatrix::new(dm.entries().clone()).unwrap(), dm);
        }
    }

    #[test]
    fn phi_examples() {
        let a = phi(&path_to_matrix(&path("EEN")));
        assert_eq!(a.entries().to_rows(), vec![vec![1, 1, 1]]);
        let a = phi(&path_to_matrix(&path("EENEN")));
        assert_eq!(a.entries().to_rows(), vec![vec![1, 0, -1, -1, -1], vec![0, 1, 1, 1, 0]]);
        for p in desk_paths(8) {
            let a = phi(&path_to_matrix(&p));
            let id = crate::subset::Subset::initial(p.d());
            assert_eq!(a.entries().maximal_minor(id).unwrap(), 1);
        }
    }

    #[test]
    fn maximal_minors_nonnegative() {
        for p in desk_paths(9) {
            let a = phi(&path_to_matrix(&p));
            for s in k_subsets(p.n(), p.d()) {
                assert!(a.entries().maximal_minor(s).unwrap() >= 0, "{p} {s:?}");
            }
        }
    }

    #[test]
    fn profile_examples() {
        let prof = column_profile(&phi(&path_to_matrix(&path("EENEN")))).unwrap();
        assert_eq!(prof.weights(), &[1, 2, 2, 2, 1]);
        assert_eq!(prof.principal(), &[3, 5]);
        assert!(prof.complement().is_empty());

        let prof = column_profile(&phi(&path_to_matrix(&path("EEN")))).unwrap();
        assert!(prof.principal().is_empty());
        assert_eq!(prof.weights(), &[1, 1, 1]);
    }

    #[test]
    fn profile_invariants_and_shortcut() {
        for p in desk_paths(10) {
            let a = phi(&path_to_matrix(&p));
            let prof = column_profile(&a).unwrap();
            assert_eq!(prof, ColumnProfile::from_path(&p), "{p}");
            assert_eq!(prof.to_path().unwrap(), p);
            let (d, m) = (p.d(), p.m());
            if d >= 2 {
                assert_eq!(prof.principal()[0], d + 1);
            }
            let w: Vec<usize> = prof.principal().iter().map(|&j| prof.weight(j)).collect();
            assert!(w.windows(2).all(|x| x[0] > x[1]));
            assert_eq!(prof.weight(d + 1), d);
            assert!(prof.weight(d + m) >= 1);
        }
    }

    #[test]
    fn extended_matrix_validation() {
        let z = IntMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(ExtendedMatrix::new(2, 1, z).is_err());
        let gap = IntMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        assert!(ExtendedMatrix::new(2, 1, gap).is_err());
        let ok = IntMatrix::from_rows(vec![vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        assert!(ExtendedMatrix::new(2, 1, ok).is_ok());
    }

    #[test]
    fn correspondence_on_small_dyck_matrices() {
        for m in 1..=3 {
            for d in 1..=3 {
                for p in enumerate_paths(m, d).unwrap() {
                    assert!(minor_correspondence_holds(path_to_matrix(&p).entries()).unwrap());
                }
            }
        }
    }
}
