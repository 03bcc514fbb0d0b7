//! Classical statistics `r, s, i`, the cell geometry of a matrix with one
//! `-1`, and the charges `E, B, J` built on it.
//!
//! Cell conventions (all bounds strict unless stated):
//!
//! * leading cell: rows below the opening row, columns between the leading
//!   column and the opening column;
//! * closing cell: rows below the closing row, columns between the opening
//!   column and the closing column;
//! * charged cell: enclosed rows, columns right of the opening column;
//! * neutral cell: enclosed rows, columns left of the opening column.

use core::ops::Range;

use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassicalParams {
    /// Entries left of the `1` in the first row.
    pub r: usize,
    /// Number of `-1` entries.
    pub s: usize,
    /// Inversion number.
    pub i: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignClass {
    Negative,
    Neutral,
    Positive,
}

/// Positions that structure a matrix with a single `-1`. All 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellGeometry {
    /// Row of the `1` above the `-1`.
    pub opening_row: usize,
    /// Column of the `-1`.
    pub opening_col: usize,
    /// Row of the `-1`.
    pub closing_row: usize,
    /// The closing row's `1` left of the opening column.
    pub left_one_col: usize,
    /// The closing row's `1` right of the opening column (the closing column).
    pub right_one_col: usize,
    /// Row of the highest left-side `1` below the opening row.
    pub leading_row: usize,
    pub leading_col: usize,
}

impl CellGeometry {
    pub fn closing_col(&self) -> usize {
        self.right_one_col
    }

    /// Rows strictly between the opening and closing rows.
    pub fn enclosed_rows(&self) -> Range<usize> {
        self.opening_row + 1..self.closing_row
    }

    pub fn is_neutral(&self) -> bool {
        self.closing_row == self.opening_row + 1
    }
}

/// Sums over the leading cell, the closing cell and the lower right block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellSums {
    pub ell: usize,
    pub c: usize,
    /// Entries strictly below the opening row and strictly right of the
    /// opening column.
    pub x: usize,
}

/// Charges of a one-`-1` matrix.
///
/// `ell`, `c` and `x` are the cell sums of the matrix itself when it is
/// positive or neutral and of its reflection when it is negative, so that
/// `j == c + ell + |e| + 1` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChargeParams {
    pub ell: usize,
    pub c: usize,
    pub x: usize,
    pub e: i64,
    pub b: i64,
    pub j: usize,
}

/// The five statistics carried along the whole bijection chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OneMinusStats {
    pub r: usize,
    pub i: usize,
    pub e: i64,
    pub b: i64,
    pub j: usize,
}

/// `r`, `s` and the inversion number `i = Σ a_ij · Σ_{k>i, l<j} a_kl`.
pub fn classical_params(a: &AsmMatrix) -> ClassicalParams {
    let n = a.order();
    let first_one = a
        .row(1)
        .iter()
        .position(|&v| v == 1)
        .expect("row 1 holds a 1");
    // below_left[j] = Σ_{k > i, l < j} a_kl for the row i currently processed.
    let mut col_below = alloc::vec![0i64; n];
    let mut inversions = 0i64;
    for i in (1..=n).rev() {
        let row = a.row(i);
        let mut left = 0i64;
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                inversions += i64::from(v) * left;
            }
            left += col_below[j];
        }
        for (j, &v) in row.iter().enumerate() {
            col_below[j] += i64::from(v);
        }
    }
    ClassicalParams {
        r: first_one,
        s: a.minus_count(),
        i: usize::try_from(inversions).expect("inversion number of an ASM is non-negative"),
    }
}

/// Locates the opening/closing rows and columns and the leading `1`.
pub fn geometry(a: &AsmMatrix) -> Result<CellGeometry> {
    let s = a.minus_count();
    let (closing_row, opening_col) = a.minus_position().ok_or(Error::NotOneMinus { count: s })?;
    let opening_row = (1..closing_row)
        .find(|&i| a.get(i, opening_col) == 1)
        .ok_or(Error::InternalInvariantViolation("no 1 above the -1"))?;
    let closing = a.row(closing_row);
    let left_one_col = closing[..opening_col - 1]
        .iter()
        .position(|&v| v == 1)
        .ok_or(Error::InternalInvariantViolation(
            "closing row has no left 1",
        ))?
        + 1;
    let right_one_col = closing[opening_col..].iter().position(|&v| v == 1).ok_or(
        Error::InternalInvariantViolation("closing row has no right 1"),
    )? + opening_col
        + 1;
    let (leading_row, leading_col) = (opening_row + 1..=a.order())
        .find_map(|i| {
            a.row(i)[..opening_col - 1]
                .iter()
                .position(|&v| v == 1)
                .map(|j| (i, j + 1))
        })
        .ok_or(Error::InternalInvariantViolation("no leading 1"))?;
    Ok(CellGeometry {
        opening_row,
        opening_col,
        closing_row,
        left_one_col,
        right_one_col,
        leading_row,
        leading_col,
    })
}

fn classify_geometry(a: &AsmMatrix, g: &CellGeometry) -> SignClass {
    if g.is_neutral() {
        return SignClass::Neutral;
    }
    let lowest = a.row(g.closing_row - 1);
    if lowest[g.opening_col..].contains(&1) {
        SignClass::Positive
    } else {
        SignClass::Negative
    }
}

pub fn classify(a: &AsmMatrix) -> Result<SignClass> {
    let g = geometry(a)?;
    Ok(classify_geometry(a, &g))
}

/// Sum of the entries in the 1-based block `rows × cols` (half-open ranges).
pub(crate) fn block_sum(a: &AsmMatrix, rows: Range<usize>, cols: Range<usize>) -> i64 {
    rows.map(|i| {
        let row = a.row(i);
        cols.clone().map(|j| i64::from(row[j - 1])).sum::<i64>()
    })
    .sum()
}

fn to_count(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InternalInvariantViolation("negative cell sum"))
}

fn sums_for(a: &AsmMatrix, g: &CellGeometry) -> Result<CellSums> {
    let n = a.order();
    let ell = block_sum(
        a,
        g.opening_row + 1..n + 1,
        g.leading_col + 1..g.opening_col,
    );
    let c = block_sum(
        a,
        g.closing_row + 1..n + 1,
        g.opening_col + 1..g.right_one_col,
    );
    let x = block_sum(a, g.opening_row + 1..n + 1, g.opening_col + 1..n + 1);
    Ok(CellSums {
        ell: to_count(ell)?,
        c: to_count(c)?,
        x: to_count(x)?,
    })
}

/// `(ℓ, c, x)` of a positive or neutral matrix.
pub fn cell_sums(a: &AsmMatrix) -> Result<CellSums> {
    let g = geometry(a)?;
    if classify_geometry(a, &g) == SignClass::Negative {
        return Err(Error::NegativeClass);
    }
    sums_for(a, &g)
}

/// Electric charge of a positive or neutral matrix: the charged-cell sum.
pub(crate) fn charged_cell_sum(a: &AsmMatrix, g: &CellGeometry) -> Result<usize> {
    to_count(block_sum(
        a,
        g.enclosed_rows(),
        g.opening_col + 1..a.order() + 1,
    ))
}

pub fn charges(a: &AsmMatrix) -> Result<ChargeParams> {
    let g = geometry(a)?;
    match classify_geometry(a, &g) {
        SignClass::Negative => {
            let mirrored = charges(&a.reflect())?;
            Ok(ChargeParams {
                e: -mirrored.e,
                b: -mirrored.b,
                ..mirrored
            })
        }
        _ => {
            let CellSums { ell, c, x } = sums_for(a, &g)?;
            let e = charged_cell_sum(a, &g)?;
            Ok(ChargeParams {
                ell,
                c,
                x,
                e: e as i64,
                b: c as i64 - ell as i64,
                j: c + ell + e + 1,
            })
        }
    }
}

/// `(r, i, E, B, J)` of a matrix with one `-1`.
pub fn one_minus_stats(a: &AsmMatrix) -> Result<OneMinusStats> {
    let ch = charges(a)?;
    let cl = classical_params(a);
    Ok(OneMinusStats {
        r: cl.r,
        i: cl.i,
        e: ch.e,
        b: ch.b,
        j: ch.j,
    })
}
