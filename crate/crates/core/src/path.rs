//! Rational Dyck paths: lattice paths from `(0,0)` to `(m,d)` using unit east
//! and north steps that stay weakly below the line `y = (d/m) x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    /// `(1, 0)`
    East,
    /// `(0, 1)`
    North,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

/// A validated rational Dyck path of type `(m, d)`.
///
/// Construct with [`DyckPath::new`] or by parsing an `E`/`N` string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    m: usize,
    d: usize,
    steps: Vec<Step>,
}

impl DyckPath {
    /// Validates `steps` as a rational Dyck path. The type `(m, d)` is read off
    /// the step counts.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let m = steps.iter().filter(|&&s| s == Step::East).count();
        let d = steps.len() - m;
        Self::with_type(m, d, steps)
    }

    /// Validates `steps` against a declared type.
    pub fn with_type(m: usize, d: usize, steps: Vec<Step>) -> Result<Self> {
        if m == 0 || d == 0 {
            return Err(Error::InvalidPath(format!(
                "type ({m},{d}) must have m >= 1 and d >= 1"
            )));
        }
        if steps.len() != m + d {
            return Err(Error::InvalidPath(format!(
                "expected {} steps for type ({m},{d}), got {}",
                m + d,
                steps.len()
            )));
        }
        let (mut x, mut y) = (0usize, 0usize);
        for (k, &s) in steps.iter().enumerate() {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
            }
            if x > m || y > d {
                return Err(Error::InvalidPath(format!(
                    "step counts do not match type ({m},{d})"
                )));
            }
            if y * m > x * d {
                let prefix = steps[..=k].iter().map(|s| s.symbol()).collect();
                return Err(Error::AboveDiagonal { prefix });
            }
        }
        if x != m || y != d {
            return Err(Error::InvalidPath(format!(
                "step counts do not match type ({m},{d})"
            )));
        }
        Ok(DyckPath { m, d, steps })
    }

    /// Parses and validates against a declared type.
    pub fn parse_with_type(s: &str, m: usize, d: usize) -> Result<Self> {
        Self::with_type(m, d, parse_steps(s)?)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Ground-set size `d + m`.
    pub fn n(&self) -> usize {
        self.m + self.d
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `h[j]` is the number of north steps preceding the `(j+1)`-th east step.
    pub fn east_heights(&self) -> Vec<usize> {
        let mut y = 0;
        let mut out = Vec::with_capacity(self.m);
        for &s in &self.steps {
            match s {
                Step::East => out.push(y),
                Step::North => y += 1,
            }
        }
        out
    }

    /// Builds the path whose `j`-th east step sits at height `heights[j]`.
    pub fn from_east_heights(d: usize, heights: &[usize]) -> Result<Self> {
        let mut steps = Vec::with_capacity(d + heights.len());
        let mut y = 0;
        for &h in heights {
            if h < y || h > d {
                return Err(Error::InvalidPath(format!(
                    "east-step heights {heights:?} are not weakly increasing within [0,{d}]"
                )));
            }
            steps.extend(std::iter::repeat_n(Step::North, h - y));
            steps.push(Step::East);
            y = h;
        }
        steps.extend(std::iter::repeat_n(Step::North, d - y));
        Self::with_type(heights.len(), d, steps)
    }

    /// Southwest labels of the steps, in path order: north steps get
    /// `1..=d` from the top down, east steps `d+1..=d+m` left to right.
    pub fn step_labels(&self) -> Vec<usize> {
        let mut north = self.d;
        let mut east = self.d + 1;
        self.steps
            .iter()
            .map(|s| match s {
                Step::East => {
                    east += 1;
                    east - 1
                }
                Step::North => {
                    north -= 1;
                    north + 1
                }
            })
            .collect()
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim()
        .chars()
        .map(|c| match c {
            'E' | 'e' => Ok(Step::East),
            'N' | 'n' => Ok(Step::North),
            other => Err(Error::InvalidPath(format!(
                "unexpected character {other:?}; paths use E and N"
            ))),
        })
        .collect()
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_steps(s)?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All rational Dyck paths of type `(m, d)`, lexicographic in the step string
/// with `E < N`.
pub fn enumerate_paths(m: usize, d: usize) -> Result<Vec<DyckPath>> {
    if m == 0 || d == 0 {
        return Err(Error::invalid(format!(
            "enumerate_paths needs m >= 1 and d >= 1, got ({m},{d})"
        )));
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(m + d);
    extend(m, d, 0, 0, &mut buf, &mut out);
    Ok(out)
}

// depth-first, east before north, so output is already lexicographic
fn extend(m: usize, d: usize, x: usize, y: usize, buf: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if x == m && y == d {
        out.push(DyckPath { m, d, steps: buf.clone() });
        return;
    }
    if x < m {
        buf.push(Step::East);
        extend(m, d, x + 1, y, buf, out);
        buf.pop();
    }
    if y < d && (y + 1) * m <= x * d {
        buf.push(Step::North);
        extend(m, d, x, y + 1, buf, out);
        buf.pop();
    }
}

/// Every path with `d, m >= 1` and `d + m <= max_n`, grouped by `n` then `d`.
pub fn desk_paths(max_n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 1..n {
            out.extend(enumerate_paths(n - d, d).expect("positive type"));
        }
    }
    out
}
