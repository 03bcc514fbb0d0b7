//! Partial discharging `δ`, complete discharging `Δ` and its inverse.
//!
//! `δ` turns a positive or neutral matrix into a permutation matrix in four
//! steps:
//!
//! 1. erase the `-1` and the closing `1`;
//! 2. apply `H` to the extended closing cell;
//! 3. apply `V` to the extended neutral cell;
//! 4. lower every `1` of the extended neutral cell and of the charged cell
//!    by one row.
//!
//! `Δ(A) = (k, δ(A), c(A), E(A))` is a bijection onto the tuples accepted by
//! [`DischargeTuple::check`].

use alloc::vec::Vec;

use crate::displacement::{apply_in_region, IntMatrix, Region, Shift};
use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;
use crate::params::{self, CellGeometry, SignClass};

/// `(k, P, c, E)` with `P` a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DischargeTuple {
    /// Opening row, 1-based.
    pub k: usize,
    pub p: AsmMatrix,
    pub c: usize,
    pub e: usize,
}

/// Sum of `p` strictly below row `k` and strictly right of the column of
/// row `k`'s `1`.
pub fn x_of(p: &AsmMatrix, k: usize) -> usize {
    let n = p.order();
    let col = p.leftmost_ones()[k - 1];
    let sum = params::block_sum(p, k + 1..n + 1, col + 1..n + 1);
    usize::try_from(sum).unwrap_or(0)
}

impl DischargeTuple {
    /// Checks the four membership conditions and reports the first one that
    /// fails:
    ///
    /// 1. `1 <= k <= n-2`;
    /// 2. `P` is a permutation matrix;
    /// 3. the `1` of row `k+1` lies left of the `1` of row `k`;
    /// 4. `c + E < x(P)`.
    pub fn check(&self) -> Result<()> {
        let n = self.p.order();
        if self.k < 1 || self.k + 2 > n {
            return Err(Error::InvalidTuple {
                condition: 1,
                detail: "k must satisfy 1 <= k <= n-2",
            });
        }
        let Some(cols) = self.p.permutation() else {
            return Err(Error::InvalidTuple {
                condition: 2,
                detail: "P is not a permutation matrix",
            });
        };
        if cols[self.k] >= cols[self.k - 1] {
            return Err(Error::InvalidTuple {
                condition: 3,
                detail: "the 1 of row k+1 must lie left of the 1 of row k",
            });
        }
        if self.c + self.e >= x_of(&self.p, self.k) {
            return Err(Error::InvalidTuple {
                condition: 4,
                detail: "c + E must be smaller than x(P)",
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }
}

fn non_negative_geometry(a: &AsmMatrix) -> Result<CellGeometry> {
    let g = params::geometry(a)?;
    if params::classify(a)? == SignClass::Negative {
        return Err(Error::NegativeClass);
    }
    Ok(g)
}

/// Moves every `1` found in `cells` by `dr` rows (`+1` down, `-1` up). All
/// moves happen at once; a target that is still occupied is a bug.
fn move_ones(m: &mut IntMatrix, cells: &[Region], down: bool) -> Result<()> {
    let mut ones = Vec::new();
    for reg in cells {
        for i in reg.first_row..=reg.last_row {
            for j in reg.first_col..=reg.last_col {
                if m.get(i, j) == 1 {
                    ones.push((i, j));
                }
            }
        }
    }
    for &(i, j) in &ones {
        m.set(i, j, 0);
    }
    for &(i, j) in &ones {
        let target = if down { i + 1 } else { i - 1 };
        if target < 1 || target > m.rows() || m.get(target, j) != 0 {
            return Err(Error::InternalInvariantViolation(
                "row shift target is occupied",
            ));
        }
        m.set(target, j, 1);
    }
    Ok(())
}

fn region(first_row: usize, last_row: usize, first_col: usize, last_col: usize) -> Option<Region> {
    Region::new(first_row, last_row, first_col, last_col).ok()
}

/// `δ(A)` for a positive or neutral `A`. All four steps always run.
pub fn delta_partial(a: &AsmMatrix) -> Result<AsmMatrix> {
    let g = non_negative_geometry(a)?;
    let n = a.order();
    let k = g.opening_row;
    let close = g.closing_row;
    let mut m = IntMatrix::from(a);

    m.set(close, g.opening_col, 0);
    m.set(close, g.right_one_col, 0);

    let closing_cell = Region::new(close + 1, n, g.opening_col, g.right_one_col)?;
    m = apply_in_region(&m, closing_cell, Shift::H)?;

    let neutral_cell = Region::new(k, close, 1, g.opening_col - 1)?;
    m = apply_in_region(&m, neutral_cell, Shift::V)?;

    let mut lowered = alloc::vec![neutral_cell];
    lowered.extend(region(k + 1, close - 1, g.opening_col + 1, n));
    move_ones(&mut m, &lowered, true)?;

    let p = m
        .to_asm()
        .map_err(|_| Error::InternalInvariantViolation("discharged matrix is not an ASM"))?;
    if !p.is_permutation() {
        return Err(Error::InternalInvariantViolation(
            "discharged matrix is not a permutation",
        ));
    }
    Ok(p)
}

/// `Δ(A) = (k, δ(A), c(A), E(A))`.
pub fn discharge(a: &AsmMatrix) -> Result<DischargeTuple> {
    let g = non_negative_geometry(a)?;
    let sums = params::cell_sums(a)?;
    let e = params::charged_cell_sum(a, &g)?;
    Ok(DischargeTuple {
        k: g.opening_row,
        p: delta_partial(a)?,
        c: sums.c,
        e,
    })
}

/// `Δ⁻¹`: locates the cells from `(k, P, c, E)` and reverses each step of `δ`.
///
/// The closing row is the first row below `k` where the right-side sum of
/// rows `k..=row` reaches `E`; the closing column is the first column from
/// the opening column on where the sum strictly below the closing row
/// reaches `c + 1`.
pub fn recharge(t: &DischargeTuple) -> Result<AsmMatrix> {
    t.check()?;
    let n = t.p.order();
    let k = t.k;
    let opening_col = t.p.leftmost_ones()[k - 1];
    let mut m = IntMatrix::from(&t.p);

    let mut right_sum = 0;
    let mut close = None;
    for i in k + 1..=n {
        right_sum += (opening_col + 1..=n).filter(|&j| m.get(i, j) == 1).count();
        if right_sum == t.e {
            close = Some(i);
            break;
        }
    }
    let close = close.ok_or(Error::InvalidTuple {
        condition: 4,
        detail: "no closing row for E",
    })?;
    if close == n {
        return Err(Error::InvalidTuple {
            condition: 4,
            detail: "closing row is the last row",
        });
    }

    let mut raised = Vec::new();
    raised.extend(region(k + 1, close, 1, opening_col - 1));
    raised.extend(region(k + 2, close, opening_col + 1, n));
    move_ones(&mut m, &raised, false)?;

    let neutral_cell = Region::new(k, close, 1, opening_col - 1)?;
    m = apply_in_region(&m, neutral_cell, Shift::VInverse)?;

    let mut below = 0;
    let mut closing_col = None;
    for j in opening_col..=n {
        below += (close + 1..=n).filter(|&i| m.get(i, j) == 1).count();
        if below == t.c + 1 {
            closing_col = Some(j);
            break;
        }
    }
    let closing_col = closing_col.ok_or(Error::InvalidTuple {
        condition: 4,
        detail: "no closing column for c",
    })?;

    let closing_cell = Region::new(close + 1, n, opening_col, closing_col)?;
    m = apply_in_region(&m, closing_cell, Shift::HInverse)?;

    m.set(close, opening_col, -1);
    m.set(close, closing_col, 1);
    m.to_asm()
        .map_err(|_| Error::InternalInvariantViolation("recharged matrix is not an ASM"))
}
