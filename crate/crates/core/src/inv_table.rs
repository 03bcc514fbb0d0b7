//! Inversion tables of permutation matrices and generalized inversion
//! tables `(k; a1..an; b, β)` of neutral pairs.
//!
//! For both, `a_i` is the sum of the entries strictly below row `n+1-i` and
//! strictly left of the leftmost `1` of that row.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;
use crate::neutralize::NeutralPair;
use crate::params::{self, OneMinusStats};

/// `a_i` for every `i`, read off rows `n, n-1, ..., 1`.
fn raw_table(a: &AsmMatrix) -> Vec<usize> {
    let n = a.order();
    let lefts = a.leftmost_ones();
    (1..=n)
        .map(|i| {
            let row = n + 1 - i;
            let sum = params::block_sum(a, row + 1..n + 1, 1..lefts[row - 1]);
            usize::try_from(sum).expect("partial sums of an ASM are non-negative")
        })
        .collect()
}

/// Column of the `(rank+1)`-th free column, scanning `cols` in order.
fn nth_free(free: &[bool], cols: impl Iterator<Item = usize>, rank: usize) -> Option<usize> {
    cols.filter(|&j| free[j - 1]).nth(rank)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermInvTable(pub Vec<usize>);

impl PermInvTable {
    pub fn check(&self) -> Result<()> {
        for (idx, &a) in self.0.iter().enumerate() {
            if a > idx {
                return Err(Error::InvalidTable {
                    condition: 2,
                    detail: "a_i must not exceed i-1",
                });
            }
        }
        Ok(())
    }

    /// Inversion table of the reflected permutation: `i - 1 - a_i`.
    pub fn complement(&self) -> PermInvTable {
        PermInvTable(self.0.iter().enumerate().map(|(idx, &a)| idx - a).collect())
    }
}

pub fn perm_table(p: &AsmMatrix) -> Result<PermInvTable> {
    if !p.is_permutation() {
        return Err(Error::InvalidTable {
            condition: 0,
            detail: "matrix is not a permutation",
        });
    }
    Ok(PermInvTable(raw_table(p)))
}

pub fn perm_from_table(t: &PermInvTable) -> Result<AsmMatrix> {
    t.check()?;
    let n = t.0.len();
    let mut free = vec![true; n];
    let mut cols = Vec::with_capacity(n);
    for row in 1..=n {
        let a = t.0[n - row];
        let col = nth_free(&free, 1..=n, a).expect("checked table has enough free columns");
        free[col - 1] = false;
        cols.push(col);
    }
    AsmMatrix::from_permutation(&cols)
}

/// Generalized inversion table of a neutral pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenInvTable {
    pub k: usize,
    /// `a_1, ..., a_n`.
    pub a: Vec<usize>,
    pub b: usize,
    pub beta: usize,
}

impl GenInvTable {
    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// `a_i`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.a[i - 1]
    }

    /// Characterization of tables:
    ///
    /// 1. `3 <= k <= n`;
    /// 2. `0 <= a_i <= i-1`;
    /// 3. `a_{k-1} < a_k`;
    /// 4. `a_{k-1} + β < a_k + b <= k-2`.
    pub fn check(&self) -> Result<()> {
        let n = self.order();
        let k = self.k;
        if k < 3 || k > n {
            return Err(Error::InvalidTable {
                condition: 1,
                detail: "k must satisfy 3 <= k <= n",
            });
        }
        if self.a.iter().enumerate().any(|(idx, &a)| a > idx) {
            return Err(Error::InvalidTable {
                condition: 2,
                detail: "a_i must not exceed i-1",
            });
        }
        if self.at(k - 1) >= self.at(k) {
            return Err(Error::InvalidTable {
                condition: 3,
                detail: "a_{k-1} must be smaller than a_k",
            });
        }
        if self.at(k - 1) + self.beta >= self.at(k) + self.b {
            return Err(Error::InvalidTable {
                condition: 4,
                detail: "a_{k-1} + beta must be smaller than a_k + b",
            });
        }
        if self.at(k) + self.b + 2 > k {
            return Err(Error::InvalidTable {
                condition: 4,
                detail: "a_k + b must not exceed k-2",
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }
}

impl fmt::Display for GenInvTable {
    /// `k; a1 a2 ... an; b beta`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.k)?;
        for a in &self.a {
            write!(f, " {a}")?;
        }
        write!(f, "; {} {}", self.b, self.beta)
    }
}

pub fn gen_table(pair: &NeutralPair) -> GenInvTable {
    let n_mat = pair.matrix();
    let n = n_mat.order();
    let g = params::geometry(n_mat).expect("neutral pair has one -1");
    let beta = pair.charge() + pair.ell() as i64;
    GenInvTable {
        k: n + 1 - g.opening_row,
        a: raw_table(n_mat),
        b: pair.c(),
        beta: usize::try_from(beta).expect("charge is at least -l(N)"),
    }
}

/// Rebuilds `(N, E)` row by row from the top; `E = a_{k-1} + 1 - a_k + β`.
pub fn pair_from_table(t: &GenInvTable) -> Result<NeutralPair> {
    t.check()?;
    let n = t.order();
    let opening_row = n + 1 - t.k;
    let closing_row = opening_row + 1;
    let mut free = vec![true; n];
    let mut entries = vec![0i8; n * n];
    let mut opening_col = 0;
    for row in 1..=n {
        let a = t.at(n + 1 - row);
        let col = nth_free(&free, 1..=n, a).ok_or(Error::InvalidTable {
            condition: 2,
            detail: "no free column for a_i",
        })?;
        entries[(row - 1) * n + col - 1] = 1;
        free[col - 1] = false;
        if row == opening_row {
            opening_col = col;
        }
        if row == closing_row {
            if col >= opening_col {
                return Err(Error::InvalidTable {
                    condition: 3,
                    detail: "left 1 must precede the opening column",
                });
            }
            let right = nth_free(&free, opening_col + 1..=n, t.b).ok_or(Error::InvalidTable {
                condition: 4,
                detail: "no column for the closing 1",
            })?;
            entries[(row - 1) * n + opening_col - 1] = -1;
            entries[(row - 1) * n + right - 1] = 1;
            free[opening_col - 1] = true;
            free[right - 1] = false;
        }
    }
    let matrix = AsmMatrix::from_entries(n, entries)
        .map_err(|_| Error::InternalInvariantViolation("rebuilt matrix is not an ASM"))?;
    let e = t.at(t.k - 1) as i64 + 1 - t.at(t.k) as i64 + t.beta as i64;
    NeutralPair::new(matrix, e)
}

/// `(r, i, E, B, J)` read directly from the table.
pub fn table_params(t: &GenInvTable) -> Result<OneMinusStats> {
    t.check()?;
    let (ak1, ak) = (t.at(t.k - 1) as i64, t.at(t.k) as i64);
    let (b, beta) = (t.b as i64, t.beta as i64);
    Ok(OneMinusStats {
        r: t.at(t.order()),
        i: t.a.iter().sum::<usize>() + t.b + 1,
        e: ak1 + beta + 1 - ak,
        b: b - beta,
        j: usize::try_from(ak - ak1 + b).expect("a_k > a_{k-1}"),
    })
}

/// Table of the reflected pair.
pub fn dual_table(t: &GenInvTable) -> Result<GenInvTable> {
    t.check()?;
    let k = t.k;
    let (ak1, ak) = (t.at(k - 1), t.at(k));
    let a =
        t.a.iter()
            .enumerate()
            .map(|(idx, &ai)| {
                if idx + 1 == k - 1 {
                    k - 2 - ak - t.b
                } else {
                    idx - ai
                }
            })
            .collect();
    Ok(GenInvTable {
        k,
        a,
        b: ak - 1 - ak1,
        beta: ak + t.b - ak1 - t.beta - 1,
    })
}
