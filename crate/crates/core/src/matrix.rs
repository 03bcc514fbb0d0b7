//! Validated alternating sign matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Line, Result};

/// A square matrix over `{-1, 0, 1}` whose nonzero entries alternate in sign
/// along every row and column, beginning and ending with `1`.
///
/// Entries are stored row-major. The derived ordering compares the order
/// first and then the entries row by row with `-1 < 0 < 1`; enumeration
/// yields matrices in exactly this order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AsmMatrix {
    n: usize,
    entries: Vec<i8>,
}

/// Checks a grid against the alternating sign law and wraps it.
///
/// Columns are checked before rows, and alternation before sums, so the
/// reported violation is deterministic.
pub fn validate_asm<R: AsRef<[i64]>>(grid: &[R]) -> Result<AsmMatrix> {
    let n = grid.len();
    if n == 0 {
        return Err(Error::NotSquare {
            rows: 0,
            row: 0,
            len: 0,
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in grid.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                row: i + 1,
                len: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::BadEntry {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                });
            }
            entries.push(v as i8);
        }
    }
    check_lines(n, &entries)?;
    Ok(AsmMatrix { n, entries })
}

fn check_line(line: Line, values: impl Iterator<Item = i8>) -> Result<()> {
    let mut partial = 0i64;
    let mut seen = false;
    for v in values {
        if v == 0 {
            continue;
        }
        partial += i64::from(v);
        if partial < 0 {
            let detail = if seen {
                "has two consecutive -1"
            } else {
                "begins with -1"
            };
            return Err(Error::AlternationViolation { line, detail });
        }
        if partial > 1 {
            return Err(Error::AlternationViolation {
                line,
                detail: "has two consecutive 1",
            });
        }
        seen = true;
    }
    if seen && partial == 0 {
        return Err(Error::AlternationViolation {
            line,
            detail: "ends with -1",
        });
    }
    Ok(())
}

fn check_lines(n: usize, entries: &[i8]) -> Result<()> {
    for j in 0..n {
        check_line(Line::Col(j + 1), (0..n).map(|i| entries[i * n + j]))?;
    }
    for i in 0..n {
        check_line(
            Line::Row(i + 1),
            entries[i * n..(i + 1) * n].iter().copied(),
        )?;
    }
    for j in 0..n {
        let sum: i64 = (0..n).map(|i| i64::from(entries[i * n + j])).sum();
        if sum != 1 {
            return Err(Error::SumViolation {
                line: Line::Col(j + 1),
                sum,
            });
        }
    }
    for i in 0..n {
        let sum: i64 = entries[i * n..(i + 1) * n]
            .iter()
            .map(|&v| i64::from(v))
            .sum();
        if sum != 1 {
            return Err(Error::SumViolation {
                line: Line::Row(i + 1),
                sum,
            });
        }
    }
    Ok(())
}

impl AsmMatrix {
    pub fn new<R: AsRef<[i64]>>(grid: &[R]) -> Result<Self> {
        validate_asm(grid)
    }

    /// Row-major entries of order `n`.
    pub fn from_entries(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotSquare {
                rows: 0,
                row: 0,
                len: 0,
            });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        for (idx, &v) in entries.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::BadEntry {
                    row: idx / n + 1,
                    col: idx % n + 1,
                    value: v.into(),
                });
            }
        }
        check_lines(n, &entries)?;
        Ok(AsmMatrix { n, entries })
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert!(check_lines(n, &entries).is_ok());
        AsmMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let cols: Vec<usize> = (1..=n).collect();
        Self::from_permutation(&cols).expect("identity is a permutation")
    }

    pub fn anti_identity(n: usize) -> Self {
        Self::identity(n).reflect()
    }

    /// Permutation matrix with a `1` at `(i, cols[i-1])` for every row `i`.
    pub fn from_permutation(cols: &[usize]) -> Result<Self> {
        let n = cols.len();
        let mut entries = vec![0i8; n * n];
        for (i, &c) in cols.iter().enumerate() {
            if c == 0 || c > n {
                return Err(Error::BadEntry {
                    row: i + 1,
                    col: c,
                    value: 1,
                });
            }
            entries[i * n + c - 1] = 1;
        }
        Self::from_entries(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i8 {
        debug_assert!((1..=self.n).contains(&row) && (1..=self.n).contains(&col));
        self.entries[(row - 1) * self.n + col - 1]
    }

    /// Row `row` (1-based) as a slice.
    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[(row - 1) * self.n..row * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    /// Vertical reflection: entry `(i, j)` becomes entry `(i, n+1-j)`.
    pub fn reflect(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for row in self.rows() {
            entries.extend(row.iter().rev());
        }
        AsmMatrix { n: self.n, entries }
    }

    /// Number of entries equal to `-1`.
    pub fn minus_count(&self) -> usize {
        self.entries.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.minus_count() == 0
    }

    /// Column of the leftmost `1` in each row, 1-based.
    pub fn leftmost_ones(&self) -> Vec<usize> {
        self.rows()
            .map(|r| {
                r.iter()
                    .position(|&v| v == 1)
                    .expect("every ASM row holds a 1")
                    + 1
            })
            .collect()
    }

    /// The `1`-positions of a permutation matrix, one column per row.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation().then(|| self.leftmost_ones())
    }

    /// 1-based position of the unique `-1`, if there is exactly one.
    pub fn minus_position(&self) -> Option<(usize, usize)> {
        let mut found = None;
        for (idx, &v) in self.entries.iter().enumerate() {
            if v < 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((idx / self.n + 1, idx % self.n + 1));
            }
        }
        found
    }
}

impl fmt::Debug for AsmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AsmMatrix[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for AsmMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
