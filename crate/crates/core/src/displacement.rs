//! Horizontal and vertical displacement of `(0,1)`-matrices.
//!
//! `H` moves the content of each nonzero column to the next nonzero column,
//! the last one landing in the final column, and empties column 1. `V` does
//! the same with rows taken from bottom to top. Both are injective; their
//! inverses undo the move and are used when recharging.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;

/// Rectangular integer matrix used for intermediate states of the
/// discharging procedure. 1-based accessors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.data[(row - 1) * self.cols + col - 1]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: i8) {
        self.data[(row - 1) * self.cols + col - 1] = v;
    }

    pub fn entries(&self) -> &[i8] {
        &self.data
    }

    pub fn to_asm(&self) -> Result<AsmMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                row: 1,
                len: self.cols,
            });
        }
        AsmMatrix::from_entries(self.rows, self.data.clone())
    }
}

impl From<&AsmMatrix> for IntMatrix {
    fn from(a: &AsmMatrix) -> Self {
        IntMatrix {
            rows: a.order(),
            cols: a.order(),
            data: a.entries().to_vec(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

/// A `(0,1)`-matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZeroOneMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            if let Some(j) = r.iter().position(|&v| v > 1) {
                return Err(Error::BadEntry {
                    row: i + 1,
                    col: j + 1,
                    value: r[j].into(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(ZeroOneMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.data[(row - 1) * self.cols + col - 1]
    }

    #[inline]
    fn set(&mut self, row: usize, col: usize, v: u8) {
        self.data[(row - 1) * self.cols + col - 1] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = ZeroOneMatrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reverses the order of the rows.
    pub fn flip_rows(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for chunk in self.data.chunks(self.cols.max(1)).rev() {
            data.extend_from_slice(chunk);
        }
        ZeroOneMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn ones(&self) -> usize {
        self.data.iter().map(|&v| usize::from(v)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[u8]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

/// Which coordinate a displacement runs along, and in which order the lines
/// are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    /// Columns, left to right.
    Columns,
    /// Rows, bottom to top.
    RowsUpward,
}

fn line_count(p: &ZeroOneMatrix, axis: Axis) -> usize {
    match axis {
        Axis::Columns => p.cols,
        Axis::RowsUpward => p.rows,
    }
}

/// Line `t` (1-based, in visiting order) as a vector.
fn read_line(p: &ZeroOneMatrix, axis: Axis, t: usize) -> Vec<u8> {
    match axis {
        Axis::Columns => (1..=p.rows).map(|i| p.get(i, t)).collect(),
        Axis::RowsUpward => {
            let row = p.rows + 1 - t;
            (1..=p.cols).map(|j| p.get(row, j)).collect()
        }
    }
}

fn write_line(p: &mut ZeroOneMatrix, axis: Axis, t: usize, line: &[u8]) {
    match axis {
        Axis::Columns => {
            for (i, &v) in line.iter().enumerate() {
                p.set(i + 1, t, v);
            }
        }
        Axis::RowsUpward => {
            let row = p.rows + 1 - t;
            for (j, &v) in line.iter().enumerate() {
                p.set(row, j + 1, v);
            }
        }
    }
}

fn nonzero_lines(p: &ZeroOneMatrix, axis: Axis) -> Vec<usize> {
    (1..=line_count(p, axis))
        .filter(|&t| read_line(p, axis, t).iter().any(|&v| v != 0))
        .collect()
}

fn displace(p: &ZeroOneMatrix, axis: Axis) -> Result<ZeroOneMatrix> {
    let len = line_count(p, axis);
    let nonzero = nonzero_lines(p, axis);
    let fail = |reason| {
        Err(Error::PreconditionFailed {
            reason,
            region: None,
        })
    };
    let (first, last) = match (nonzero.first(), nonzero.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => {
            return fail(match axis {
                Axis::Columns => "no nonzero column",
                Axis::RowsUpward => "no nonzero row",
            })
        }
    };
    if first != 1 {
        return fail(match axis {
            Axis::Columns => "column 1 empty",
            Axis::RowsUpward => "last row empty",
        });
    }
    if last == len {
        return fail(match axis {
            Axis::Columns => "last column nonzero",
            Axis::RowsUpward => "first row nonzero",
        });
    }
    let mut out = ZeroOneMatrix::zeros(p.rows, p.cols);
    for (idx, &from) in nonzero.iter().enumerate() {
        let to = nonzero.get(idx + 1).copied().unwrap_or(len);
        write_line(&mut out, axis, to, &read_line(p, axis, from));
    }
    Ok(out)
}

fn undisplace(p: &ZeroOneMatrix, axis: Axis) -> Result<ZeroOneMatrix> {
    let len = line_count(p, axis);
    let nonzero = nonzero_lines(p, axis);
    let fail = |reason| {
        Err(Error::PreconditionFailed {
            reason,
            region: None,
        })
    };
    let (first, last) = match (nonzero.first(), nonzero.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => {
            return fail(match axis {
                Axis::Columns => "no nonzero column",
                Axis::RowsUpward => "no nonzero row",
            })
        }
    };
    if first == 1 {
        return fail(match axis {
            Axis::Columns => "column 1 nonzero",
            Axis::RowsUpward => "last row nonzero",
        });
    }
    if last != len {
        return fail(match axis {
            Axis::Columns => "last column empty",
            Axis::RowsUpward => "first row empty",
        });
    }
    let mut out = ZeroOneMatrix::zeros(p.rows, p.cols);
    for (idx, &from) in nonzero.iter().enumerate() {
        let to = if idx == 0 { 1 } else { nonzero[idx - 1] };
        write_line(&mut out, axis, to, &read_line(p, axis, from));
    }
    Ok(out)
}

/// Horizontal displacement `H`.
///
/// Requires column 1 nonzero and the last column zero.
pub fn h_shift(p: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    displace(p, Axis::Columns)
}

/// Vertical displacement `V`: rows move upward, the bottom row playing the
/// part of column 1.
///
/// Requires the last row nonzero and the first row zero.
pub fn v_shift(p: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    displace(p, Axis::RowsUpward)
}

/// Inverse of [`h_shift`].
pub fn h_unshift(p: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    undisplace(p, Axis::Columns)
}

/// Inverse of [`v_shift`].
pub fn v_unshift(p: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    undisplace(p, Axis::RowsUpward)
}

/// A block of a host matrix, 1-based and inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub first_row: usize,
    pub last_row: usize,
    pub first_col: usize,
    pub last_col: usize,
}

impl Region {
    pub fn new(
        first_row: usize,
        last_row: usize,
        first_col: usize,
        last_col: usize,
    ) -> Result<Self> {
        if first_row == 0 || first_col == 0 || first_row > last_row || first_col > last_col {
            return Err(Error::PreconditionFailed {
                reason: "empty region",
                region: None,
            });
        }
        Ok(Region {
            first_row,
            last_row,
            first_col,
            last_col,
        })
    }

    pub fn whole(host: &IntMatrix) -> Self {
        Region {
            first_row: 1,
            last_row: host.rows(),
            first_col: 1,
            last_col: host.cols(),
        }
    }

    pub fn height(&self) -> usize {
        self.last_row - self.first_row + 1
    }

    pub fn width(&self) -> usize {
        self.last_col - self.first_col + 1
    }

    fn fits(&self, host: &IntMatrix) -> bool {
        self.first_row >= 1
            && self.first_col >= 1
            && self.first_row <= self.last_row
            && self.first_col <= self.last_col
            && self.last_row <= host.rows()
            && self.last_col <= host.cols()
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "region rows {}..={} columns {}..={}",
            self.first_row, self.last_row, self.first_col, self.last_col
        )
    }
}

/// The displacement primitives that may be applied inside a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    H,
    V,
    HInverse,
    VInverse,
}

impl Shift {
    pub fn apply(self, p: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
        match self {
            Shift::H => h_shift(p),
            Shift::V => v_shift(p),
            Shift::HInverse => h_unshift(p),
            Shift::VInverse => v_unshift(p),
        }
    }
}

/// Copies the region out of `host`. Fails if it holds anything but 0 and 1.
pub fn extract(host: &IntMatrix, reg: Region) -> Result<ZeroOneMatrix> {
    if !reg.fits(host) {
        return Err(Error::PreconditionFailed {
            reason: "region outside host",
            region: Some(reg),
        });
    }
    let mut p = ZeroOneMatrix::zeros(reg.height(), reg.width());
    for i in 0..reg.height() {
        for j in 0..reg.width() {
            let v = host.get(reg.first_row + i, reg.first_col + j);
            if !(0..=1).contains(&v) {
                return Err(Error::PreconditionFailed {
                    reason: "entry outside {0,1}",
                    region: Some(reg),
                });
            }
            p.set(i + 1, j + 1, v as u8);
        }
    }
    Ok(p)
}

fn embed(host: &mut IntMatrix, reg: Region, p: &ZeroOneMatrix) {
    for i in 0..reg.height() {
        for j in 0..reg.width() {
            host.set(
                reg.first_row + i,
                reg.first_col + j,
                p.get(i + 1, j + 1) as i8,
            );
        }
    }
}

/// Replaces the content of `reg` by `f(content)`; everything outside the
/// region is untouched. Precondition failures carry the region.
pub fn apply_in_region(host: &IntMatrix, reg: Region, f: Shift) -> Result<IntMatrix> {
    let content = extract(host, reg)?;
    let shifted = f.apply(&content).map_err(|e| match e {
        Error::PreconditionFailed { reason, .. } => Error::PreconditionFailed {
            reason,
            region: Some(reg),
        },
        other => other,
    })?;
    let mut out = host.clone();
    embed(&mut out, reg, &shifted);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(rows).unwrap()
    }

    fn example_v_input() -> ZeroOneMatrix {
        m(&[
            &[0, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 1, 0],
            &[1, 0, 0, 0],
        ])
    }

    #[test]
    fn v_on_the_6x4_example() {
        let expected = m(&[
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(v_shift(&example_v_input()).unwrap(), expected);
        assert_eq!(v_unshift(&expected).unwrap(), example_v_input());
    }

    #[test]
    fn single_column_moves_to_the_end() {
        let p = m(&[&[1, 0], &[1, 0], &[0, 0]]);
        assert_eq!(h_shift(&p).unwrap(), m(&[&[0, 1], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn single_bottom_row_moves_to_the_top() {
        let p = m(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 1]]);
        assert_eq!(
            v_shift(&p).unwrap(),
            m(&[&[0, 1, 1], &[0, 0, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn preconditions() {
        let reason = |r: Result<ZeroOneMatrix>| match r {
            Err(Error::PreconditionFailed { reason, .. }) => reason,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(reason(h_shift(&m(&[&[1, 0, 1]]))), "last column nonzero");
        assert_eq!(reason(h_shift(&m(&[&[0, 1, 0]]))), "column 1 empty");
        assert_eq!(
            reason(h_shift(&ZeroOneMatrix::zeros(2, 3))),
            "no nonzero column"
        );
        assert_eq!(reason(v_shift(&m(&[&[1], &[1]]))), "first row nonzero");
        assert_eq!(reason(v_shift(&m(&[&[0], &[1], &[0]]))), "last row empty");
    }

    #[test]
    fn h_is_transposed_v() {
        let p = example_v_input();
        let via_h = h_shift(&p.flip_rows().transpose())
            .unwrap()
            .transpose()
            .flip_rows();
        assert_eq!(v_shift(&p).unwrap(), via_h);
    }

    #[test]
    fn region_application() {
        let host = IntMatrix::from_rows(&[[1i8, 0, 0], [0, 0, 0], [-1, 0, 1]]).unwrap();
        let reg = Region::new(1, 2, 1, 3).unwrap();
        let out = apply_in_region(&host, reg, Shift::H).unwrap();
        assert_eq!(
            out,
            IntMatrix::from_rows(&[[0i8, 0, 1], [0, 0, 0], [-1, 0, 1]]).unwrap()
        );

        let whole = Region::whole(&IntMatrix::from_rows(&[[1i8, 0], [0, 0]]).unwrap());
        let host2 = IntMatrix::from_rows(&[[1i8, 0], [0, 0]]).unwrap();
        assert_eq!(
            apply_in_region(&host2, whole, Shift::H).unwrap(),
            IntMatrix::from_rows(&[[0i8, 1], [0, 0]]).unwrap()
        );

        let zeros = Region::new(2, 2, 1, 2).unwrap();
        assert_eq!(
            apply_in_region(&host, zeros, Shift::H),
            Err(Error::PreconditionFailed {
                reason: "no nonzero column",
                region: Some(zeros)
            })
        );
        let bad = Region::new(3, 3, 1, 3).unwrap();
        assert!(matches!(
            apply_in_region(&host, bad, Shift::H),
            Err(Error::PreconditionFailed {
                reason: "entry outside {0,1}",
                ..
            })
        ));
    }
}
