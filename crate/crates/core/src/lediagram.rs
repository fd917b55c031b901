//! Le-diagrams and their pipe dreams.
//!
//! Cells are addressed `(row, column)` from the top-left, 1-based. The
//! boundary path of a shape runs from the north-east corner of the `d x m`
//! box to its south-west corner and its unit steps are labelled `1..d+m` in
//! that order. A pipe enters through the west edge of row `r` (label of the
//! vertical boundary step of row `r`) or the north edge of column `c` (label
//! of the horizontal boundary step under column `c`) and travels south/east.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::DyckPath;
use crate::permutation::{Decoration, DecoratedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tile {
    /// Joins north to east and west to south.
    Elbow,
    Cross,
}

/// A zero/plus filling of a Young diagram inside the `d x m` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LeJson", into = "LeJson")]
pub struct LeDiagram {
    d: usize,
    m: usize,
    /// Row lengths, one per row (possibly zero), weakly decreasing.
    shape: Vec<usize>,
    fill: Vec<Vec<Cell>>,
}

#[derive(Serialize, Deserialize)]
struct LeJson {
    d: usize,
    m: usize,
    shape: Vec<usize>,
    fill: Vec<String>,
}

impl LeDiagram {
    /// `fill[r]` must have length `shape[r]`; `shape` is padded with zero
    /// rows up to `d`.
    pub fn new(d: usize, m: usize, mut shape: Vec<usize>, fill: Vec<Vec<Cell>>) -> Result<Self> {
        if shape.len() > d {
            return Err(Error::invalid(format!("shape has more than {d} rows")));
        }
        if shape.windows(2).any(|w| w[0] < w[1]) || shape.first().is_some_and(|&l| l > m) {
            return Err(Error::invalid(format!("{shape:?} is not a partition inside {d}x{m}")));
        }
        shape.resize(d, 0);
        let mut fill = fill;
        if fill.len() > d {
            return Err(Error::invalid("fill has more rows than the box"));
        }
        fill.resize(d, Vec::new());
        for (r, (row, &len)) in fill.iter().zip(&shape).enumerate() {
            if row.len() != len {
                return Err(Error::invalid(format!(
                    "fill row {} has {} cells, shape needs {len}",
                    r + 1,
                    row.len()
                )));
            }
        }
        Ok(LeDiagram { d, m, shape, fill })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// `(row, column)`, 1-based; `None` outside the shape.
    pub fn cell(&self, r: usize, c: usize) -> Option<Cell> {
        self.fill.get(r.wrapping_sub(1))?.get(c.wrapping_sub(1)).copied()
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.fill
    }

    /// Boundary-step labels: `(vertical label of each row, horizontal label
    /// of each column)`.
    pub fn boundary_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let mut row_label = vec![0; self.d];
        let mut col_label = vec![0; self.m];
        let mut label = 1;
        let mut prev = self.m;
        for r in 0..self.d {
            for c in (self.shape[r] + 1..=prev).rev() {
                col_label[c - 1] = label;
                label += 1;
            }
            row_label[r] = label;
            label += 1;
            prev = self.shape[r];
        }
        for c in (1..=prev).rev() {
            col_label[c - 1] = label;
            label += 1;
        }
        (row_label, col_label)
    }

    pub fn pipe_dream(&self) -> Vec<Vec<Tile>> {
        self.fill
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Plus => Tile::Elbow,
                        Cell::Zero => Tile::Cross,
                    })
                    .collect()
            })
            .collect()
    }
}

fn cell_char(c: Cell) -> char {
    match c {
        Cell::Zero => '0',
        Cell::Plus => '+',
    }
}

impl TryFrom<LeJson> for LeDiagram {
    type Error = Error;

    fn try_from(j: LeJson) -> Result<Self> {
        let fill = j
            .fill
            .iter()
            .map(|row| {
                row.chars()
                    .map(|ch| match ch {
                        '0' => Ok(Cell::Zero),
                        '+' => Ok(Cell::Plus),
                        other => Err(Error::invalid(format!("unknown cell {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LeDiagram::new(j.d, j.m, j.shape, fill)
    }
}

impl From<LeDiagram> for LeJson {
    fn from(l: LeDiagram) -> Self {
        LeJson {
            d: l.d,
            m: l.m,
            shape: l.shape.clone(),
            fill: l.fill.iter().map(|r| r.iter().copied().map(cell_char).collect()).collect(),
        }
    }
}

/// No zero cell has a plus above it in its column and a plus to its left in
/// its row.
pub fn validate_le(l: &LeDiagram) -> bool {
    for (r, row) in l.fill.iter().enumerate() {
        for (c, &cell) in row.iter().enumerate() {
            if cell == Cell::Zero {
                let left = row[..c].contains(&Cell::Plus);
                let above = (0..r).any(|rr| l.fill[rr][c] == Cell::Plus);
                if left && above {
                    return false;
                }
            }
        }
    }
    true
}

/// The `d x m` rectangle whose column `k < m` has its single plus in row
/// `d - h_{m-k+1}` (`h_j` = north steps before the `j`-th east step) and
/// whose last column is all plus.
pub fn le_from_path(p: &DyckPath) -> LeDiagram {
    let (d, m) = (p.d(), p.m());
    let h = p.east_heights();
    let mut fill = vec![vec![Cell::Zero; m]; d];
    for k in 1..m {
        fill[d - h[m - k] - 1][k - 1] = Cell::Plus;
    }
    for row in fill.iter_mut() {
        row[m - 1] = Cell::Plus;
    }
    LeDiagram { d, m, shape: vec![m; d], fill }
}

/// The path encoded by a rational Dyck Le-diagram, if it is one.
pub fn path_from_le(l: &LeDiagram) -> Option<DyckPath> {
    let (d, m) = (l.d, l.m);
    if d == 0 || m == 0 || l.shape.iter().any(|&x| x != m) || !validate_le(l) {
        return None;
    }
    let plus_rows = |c: usize| -> Vec<usize> {
        (0..d).filter(|&r| l.fill[r][c] == Cell::Plus).collect()
    };
    if plus_rows(m - 1).len() != d {
        return None;
    }
    let mut heights = vec![0; m];
    for k in 1..m {
        match plus_rows(k - 1).as_slice() {
            [r] => heights[m - k] = d - (r + 1),
            _ => return None,
        }
    }
    DyckPath::from_east_heights(d, &heights).ok()
}

pub fn is_rational_dyck_le(l: &LeDiagram) -> bool {
    path_from_le(l).is_some()
}

/// Traces every pipe; a pipe entering at border label `i` and leaving at
/// boundary label `j` gives `pi(i) = j`. Fixed points on horizontal steps are
/// clockwise, on vertical steps counterclockwise.
pub fn perm_from_le(l: &LeDiagram) -> Result<DecoratedPermutation> {
    let n = l.d + l.m;
    let (row_label, col_label) = l.boundary_labels();
    let mut images = vec![0usize; n];
    let mut decorations = std::collections::BTreeMap::new();

    #[derive(Clone, Copy)]
    enum Dir {
        South,
        East,
    }

    let mut starts: Vec<(usize, usize, Dir, usize, Decoration)> = Vec::new();
    for r in 1..=l.d {
        starts.push((r, 1, Dir::East, row_label[r - 1], Decoration::Counterclockwise));
    }
    for c in 1..=l.m {
        starts.push((1, c, Dir::South, col_label[c - 1], Decoration::Clockwise));
    }
    for (mut r, mut c, mut dir, label, dec) in starts {
        let exit = loop {
            let Some(cell) = l.cell(r, c) else {
                // left the shape across a boundary step
                break match dir {
                    Dir::East => row_label[r - 1],
                    Dir::South => col_label[c - 1],
                };
            };
            if cell == Cell::Plus {
                dir = match dir {
                    Dir::South => Dir::East,
                    Dir::East => Dir::South,
                };
            }
            match dir {
                Dir::East => c += 1,
                Dir::South => r += 1,
            }
            if r > l.d + 1 || c > l.m + 1 {
                return Err(Error::internal("pipe left the box"));
            }
        };
        images[label - 1] = exit;
        if exit == label {
            decorations.insert(label, dec);
        }
    }
    DecoratedPermutation::new(images, decorations)
        .map_err(|e| Error::internal(format!("pipe tracing is not a permutation: {e}")))
}

/// Number of plus cells.
pub fn cell_dimension(l: &LeDiagram) -> usize {
    l.fill.iter().flatten().filter(|&&c| c == Cell::Plus).count()
}
