//! Exact integer linear algebra: fraction-free (Bareiss) determinants and
//! ranks, and the minor checks that underpin total nonnegativity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MalformedMatrix("rows have different lengths".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Column `c` (0-based) as a vector.
    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Submatrix on the given 1-based row and column sets.
    pub fn submatrix(&self, rows: Subset, cols: Subset) -> IntMatrix {
        let rs = rows.to_vec();
        let cs = cols.to_vec();
        let mut out = IntMatrix::zeros(rs.len(), cs.len());
        for (i, &r) in rs.iter().enumerate() {
            for (j, &c) in cs.iter().enumerate() {
                out.set(i, j, self.get(r - 1, c - 1));
            }
        }
        out
    }

    /// `Delta_{I,J}`: the minor on 1-based rows `I` and columns `J`.
    pub fn minor(&self, rows: Subset, cols: Subset) -> Result<i128> {
        if rows.len() != cols.len() {
            return Err(Error::invalid("minor needs |I| = |J|"));
        }
        det_exact(&self.submatrix(rows, cols))
    }

    /// `Delta_K`: the maximal minor on 1-based columns `K`.
    pub fn maximal_minor(&self, cols: Subset) -> Result<i128> {
        self.minor(Subset::initial(self.rows), cols)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut a: Vec<Vec<i128>> =
            self.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        let mut rank = 0;
        let mut prev: i128 = 1;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| a[r][c] != 0) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..self.rows {
                for k in c + 1..self.cols {
                    a[r][k] = bareiss_step(a[r][k], a[rank][c], a[r][c], a[rank][k], prev)?;
                }
                a[r][c] = 0;
            }
            prev = a[rank][c];
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        Ok(rank)
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

// (x * pivot - y * z) / prev, exact by Sylvester's identity
fn bareiss_step(x: i128, pivot: i128, y: i128, z: i128, prev: i128) -> Result<i128> {
    let lhs = x.checked_mul(pivot).ok_or(Error::Overflow("determinant"))?;
    let rhs = y.checked_mul(z).ok_or(Error::Overflow("determinant"))?;
    let num = lhs.checked_sub(rhs).ok_or(Error::Overflow("determinant"))?;
    debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
    Ok(num / prev)
}

/// Exact determinant by fraction-free Gaussian elimination. The empty matrix
/// has determinant 1.
pub fn det_exact(m: &IntMatrix) -> Result<i128> {
    if m.rows() != m.cols() {
        return Err(Error::invalid(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> =
        m.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = bareiss_step(a[i][j], a[k][k], a[i][k], a[k][j], prev)?;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Entrywise extension `A -> (I_d | B)` where column `d+j`, row `i` of `B` is
/// `(-1)^(d-i) A[d-i+1, j]` (1-based). Defined for any integer matrix.
pub fn embed_signed(a: &IntMatrix) -> IntMatrix {
    let (d, m) = (a.rows(), a.cols());
    let mut out = IntMatrix::zeros(d, d + m);
    for i in 0..d {
        out.set(i, i, 1);
    }
    for i in 1..=d {
        let sign = if (d - i) % 2 == 0 { 1 } else { -1 };
        for j in 1..=m {
            out.set(i - 1, d + j - 1, sign * a.get(d - i, j - 1));
        }
    }
    out
}

/// Checks `Delta_{I,J}(A) = Delta_{(d+1-([d]\I)) u (d+J)}(embed_signed(A))` for
/// every pair of equal-size row and column sets, including `I = J = {}`.
pub fn minor_correspondence_holds(a: &IntMatrix) -> Result<bool> {
    let (d, m) = (a.rows(), a.cols());
    let b = embed_signed(a);
    for k in 0..=d.min(m) {
        for rows in k_subsets(d, k) {
            let complement = Subset::initial(d).difference(rows);
            let mut cols_b = Subset::EMPTY;
            for i in complement.iter() {
                cols_b.insert(d + 1 - i);
            }
            for cols in k_subsets(m, k) {
                let mut target = cols_b;
                for j in cols.iter() {
                    target.insert(d + j);
                }
                if a.minor(rows, cols)? != b.maximal_minor(target)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether a binary matrix has its zeros forming a right-justified Young
/// diagram anchored in the upper-right corner: every row's zeros are a
/// suffix, and zero counts weakly decrease going down.
pub fn is_upper_right_staircase(a: &IntMatrix) -> bool {
    let mut prev_zeros = usize::MAX;
    for r in 0..a.rows() {
        let row = a.row(r);
        if row.iter().any(|&v| v != 0 && v != 1) {
            return false;
        }
        let ones = row.iter().take_while(|&&v| v == 1).count();
        if row[ones..].iter().any(|&v| v != 0) {
            return false;
        }
        let zeros = row.len() - ones;
        if zeros > prev_zeros {
            return false;
        }
        prev_zeros = zeros;
    }
    true
}

/// True iff every minor (all sizes) of a square staircase binary matrix is
/// nonnegative.
pub fn young_binary_tnn_holds(a: &IntMatrix) -> Result<bool> {
    if a.rows() != a.cols() {
        return Err(Error::invalid("expected a square matrix"));
    }
    if !is_upper_right_staircase(a) {
        return Err(Error::invalid(
            "expected a binary matrix whose zeros form an upper-right Young diagram",
        ));
    }
    all_minors_nonnegative(a)
}

pub fn all_minors_nonnegative(a: &IntMatrix) -> Result<bool> {
    for k in 1..=a.rows().min(a.cols()) {
        for rows in k_subsets(a.rows(), k) {
            for cols in k_subsets(a.cols(), k) {
                if a.minor(rows, cols)? < 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
