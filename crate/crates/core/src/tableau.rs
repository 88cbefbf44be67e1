//! Semistandard Young tableaux in French notation and the type `A_{n-1}`
//! crystal operators on them.
//!
//! Row 0 is the bottom (longest) row. The `i`-pairing is bracket matching on
//! the column reading word (columns left to right, each column read top to
//! bottom), with `i+1` opening and `i` closing a bracket.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cell positions as (row, column).
type Cells = Vec<(usize, usize)>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// `parts` must be weakly decreasing; its length is the rank `n`.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary nonnegative vector into a partition of the same length.
    pub fn sorted_from(values: &[u32]) -> Self {
        let mut parts = values.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The rank `n` (number of parts including trailing zeros).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Every partition of `size` with at most `n` parts, padded to length `n`,
    /// in reverse lexicographic order.
    pub fn all_of_size(size: u32, n: usize) -> Vec<Partition> {
        fn rec(
            remaining: u32,
            max: u32,
            slots: usize,
            acc: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if slots == 0 {
                if remaining == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            for part in (0..=remaining.min(max)).rev() {
                acc.push(part);
                rec(remaining - part, part, slots - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, n, &mut Vec::new(), &mut out);
        out.into_iter().map(|parts| Partition { parts }).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Vec<u32>,
    rows: Vec<Vec<u8>>,
}

/// A semistandard tableau with entries in `1..=n`, `n = shape.len()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(Partition::new(raw.shape)?, raw.rows)
    }
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    /// Builds the shape from the row lengths, padded with zeros to rank `n`.
    pub fn from_rows(rows: Vec<Vec<u8>>, n: usize) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::InvalidTableau(format!(
                "{} rows exceed rank {n}",
                rows.len()
            )));
        }
        let mut parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        parts.resize(n, 0);
        Tableau::new(Partition::new(parts)?, rows)
    }

    /// `b_λ`: row `r` filled with `r`.
    pub fn highest_weight(shape: &Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .take_while(|&&p| p > 0)
            .enumerate()
            .map(|(r, &len)| vec![(r + 1) as u8; len as usize])
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank();
        let expected = self.shape.num_rows();
        if self.rows.len() != expected {
            return Err(Error::InvalidTableau(format!(
                "expected {expected} nonempty rows for shape {}, got {}",
                self.shape,
                self.rows.len()
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.parts()[r] as usize {
                return Err(Error::InvalidTableau(format!(
                    "row {} has wrong length",
                    r + 1
                )));
            }
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x as usize > n {
                    return Err(Error::InvalidTableau(format!("entry {x} outside 1..={n}")));
                }
                if c > 0 && row[c - 1] > x {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not weakly increasing",
                        r + 1
                    )));
                }
                if r > 0 && self.rows[r - 1][c] >= x {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not strictly increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u8> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn weight(&self) -> Vec<u32> {
        let mut wt = vec![0u32; self.rank()];
        for &x in self.rows.iter().flatten() {
            wt[x as usize - 1] += 1;
        }
        wt
    }

    /// Cell positions in reading order: columns left to right, top to bottom.
    fn reading_positions(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, |r| r.len());
        let mut out = Vec::with_capacity(self.shape.size() as usize);
        for c in 0..width {
            for r in (0..self.rows.len()).rev() {
                if c < self.rows[r].len() {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Unpaired `i+1` cells and unpaired `i` cells, each in reading order.
    fn unpaired(&self, i: usize) -> (Cells, Cells) {
        let (lo, hi) = (i as u8, (i + 1) as u8);
        let mut open: Cells = Vec::new();
        let mut free_lo = Vec::new();
        for (r, c) in self.reading_positions() {
            let x = self.rows[r][c];
            if x == hi {
                open.push((r, c));
            } else if x == lo && open.pop().is_none() {
                free_lo.push((r, c));
            }
        }
        (open, free_lo)
    }

    fn check_index(&self, i: usize) {
        assert!(
            i >= 1 && i < self.rank(),
            "crystal index {i} out of range for rank {}",
            self.rank()
        );
    }

    /// `f_i`: the rightmost unpaired `i` becomes `i+1`.
    ///
    /// # Panics
    /// If `i` is not in `1..n`.
    pub fn lower(&self, i: usize) -> Option<Tableau> {
        self.check_index(i);
        let (_, free_lo) = self.unpaired(i);
        let &(r, c) = free_lo.last()?;
        let mut t = self.clone();
        t.rows[r][c] = (i + 1) as u8;
        debug_assert!(t.validate().is_ok());
        Some(t)
    }

    /// `e_i`: the leftmost unpaired `i+1` becomes `i`.
    ///
    /// # Panics
    /// If `i` is not in `1..n`.
    pub fn raise(&self, i: usize) -> Option<Tableau> {
        self.check_index(i);
        let (open, _) = self.unpaired(i);
        let &(r, c) = open.first()?;
        let mut t = self.clone();
        t.rows[r][c] = i as u8;
        debug_assert!(t.validate().is_ok());
        Some(t)
    }

    /// `(ε_i, φ_i)`.
    pub fn string_stats(&self, i: usize) -> (usize, usize) {
        self.check_index(i);
        let (open, free_lo) = self.unpaired(i);
        (open.len(), free_lo.len())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All of `SSYT_n(λ)` by direct backtracking over fillings, sorted.
pub fn enumerate_ssyt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.len() as u8;
    let lens: Vec<usize> = shape
        .parts()
        .iter()
        .take_while(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    let mut rows: Vec<Vec<u8>> = lens.iter().map(|&l| vec![0; l]).collect();
    let cells: Vec<(usize, usize)> = lens
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        n: u8,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for x in lo..=n {
            rows[r][c] = x;
            fill(k + 1, cells, rows, n, shape, out);
        }
        rows[r][c] = 0;
    }

    fill(0, &cells, &mut rows, n, shape, &mut out);
    out.sort();
    out
}
