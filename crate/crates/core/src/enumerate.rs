//! Exhaustive generation of `A(n)` and `A(n,s)` for small `n`.
//!
//! Rows are generated top to bottom. The state is the vector of column
//! prefix sums, which for an ASM is always in `{0, 1}`: a `1` may only be
//! placed over a `0`, a `-1` only over a `1`, and within a row the running
//! sum must stay in `{0, 1}` and end at `1`. Candidate rows are produced in
//! lexicographic order with `-1 < 0 < 1`, so matrices come out in the order
//! of [`AsmMatrix`]'s `Ord`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;
use crate::params::{self, SignClass};

pub const DEFAULT_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumFilter {
    pub n: usize,
    /// Exact number of `-1` entries.
    pub s: Option<usize>,
    /// Only meaningful together with `s = Some(1)`.
    pub class: Option<SignClass>,
}

impl EnumFilter {
    pub fn all(n: usize) -> Self {
        EnumFilter {
            n,
            s: None,
            class: None,
        }
    }

    pub fn with_minus(n: usize, s: usize) -> Self {
        EnumFilter {
            n,
            s: Some(s),
            class: None,
        }
    }
}

/// All rows compatible with `prefix`, lexicographic, each with its `-1` count.
fn candidate_rows(prefix: &[u8], budget: usize) -> Vec<(Vec<i8>, usize)> {
    fn go(
        prefix: &[u8],
        col: usize,
        running: u8,
        minus: usize,
        budget: usize,
        row: &mut Vec<i8>,
        out: &mut Vec<(Vec<i8>, usize)>,
    ) {
        if col == prefix.len() {
            if running == 1 {
                out.push((row.clone(), minus));
            }
            return;
        }
        if running == 1 && prefix[col] == 1 && minus < budget {
            row.push(-1);
            go(prefix, col + 1, 0, minus + 1, budget, row, out);
            row.pop();
        }
        row.push(0);
        go(prefix, col + 1, running, minus, budget, row, out);
        row.pop();
        if running == 0 && prefix[col] == 0 {
            row.push(1);
            go(prefix, col + 1, 1, minus, budget, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    go(
        prefix,
        0,
        0,
        0,
        budget,
        &mut Vec::with_capacity(prefix.len()),
        &mut out,
    );
    out
}

struct Frame {
    candidates: Vec<(Vec<i8>, usize)>,
    next: usize,
}

/// Depth-first stream of matrices.
pub struct AsmIter {
    filter: EnumFilter,
    prefix: Vec<u8>,
    rows: Vec<Vec<i8>>,
    minus: Vec<usize>,
    stack: Vec<Frame>,
}

impl AsmIter {
    fn new(filter: EnumFilter, first_row_col: Option<usize>) -> Self {
        let n = filter.n;
        let budget = filter.s.unwrap_or(usize::MAX);
        let mut root = candidate_rows(&vec![0; n], budget);
        if let Some(col) = first_row_col {
            root.retain(|(row, _)| row[col - 1] == 1);
        }
        AsmIter {
            filter,
            prefix: vec![0; n],
            rows: Vec::with_capacity(n),
            minus: Vec::with_capacity(n),
            stack: vec![Frame {
                candidates: root,
                next: 0,
            }],
        }
    }

    fn used_minus(&self) -> usize {
        self.minus.iter().sum()
    }

    fn pop_row(&mut self) {
        if let Some(row) = self.rows.pop() {
            for (p, &v) in self.prefix.iter_mut().zip(&row) {
                *p = (*p as i8 - v) as u8;
            }
            self.minus.pop();
        }
    }

    fn accepts(&self, m: &AsmMatrix) -> bool {
        if let Some(s) = self.filter.s {
            if self.used_minus() != s {
                return false;
            }
        }
        match self.filter.class {
            None => true,
            Some(class) => params::classify(m).is_ok_and(|c| c == class),
        }
    }
}

impl Iterator for AsmIter {
    type Item = AsmMatrix;

    fn next(&mut self) -> Option<AsmMatrix> {
        let n = self.filter.n;
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.candidates.len() {
                self.stack.pop();
                self.pop_row();
                continue;
            }
            let (row, minus) = frame.candidates[frame.next].clone();
            frame.next += 1;
            for (p, &v) in self.prefix.iter_mut().zip(&row) {
                *p = (*p as i8 + v) as u8;
            }
            self.rows.push(row);
            self.minus.push(minus);
            if self.rows.len() == n {
                let entries = self.rows.concat();
                let m = AsmMatrix::from_entries_unchecked(n, entries);
                self.pop_row();
                if self.accepts(&m) {
                    return Some(m);
                }
                continue;
            }
            let budget = self.filter.s.map_or(usize::MAX, |s| s - self.used_minus());
            let candidates = candidate_rows(&self.prefix, budget);
            self.stack.push(Frame {
                candidates,
                next: 0,
            });
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::NotSquare {
            rows: 0,
            row: 0,
            len: 0,
        });
    }
    Ok(())
}

/// Every matrix matching `filter`, each exactly once, in increasing order.
pub fn enumerate_asm(filter: EnumFilter, cap: usize) -> Result<AsmIter> {
    check_cap(filter.n, cap)?;
    Ok(AsmIter::new(filter, None))
}

/// The part of [`enumerate_asm`] whose first row has its `1` in column
/// `col`. Concatenating `col = n, n-1, ..., 1` reproduces the full stream.
pub fn enumerate_first_row(filter: EnumFilter, cap: usize, col: usize) -> Result<AsmIter> {
    check_cap(filter.n, cap)?;
    if col == 0 || col > filter.n {
        return Err(Error::DimensionMismatch {
            expected: filter.n,
            found: col,
        });
    }
    Ok(AsmIter::new(filter, Some(col)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    R,
    S,
    I,
    E,
    B,
    J,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::R => "r",
            Stat::S => "s",
            Stat::I => "i",
            Stat::E => "E",
            Stat::B => "B",
            Stat::J => "J",
        }
    }

    pub fn parse(s: &str) -> Option<Stat> {
        match s {
            "r" => Some(Stat::R),
            "s" => Some(Stat::S),
            "i" => Some(Stat::I),
            "E" | "e" => Some(Stat::E),
            "B" | "b" => Some(Stat::B),
            "J" | "j" => Some(Stat::J),
            _ => None,
        }
    }

    fn needs_one_minus(self) -> bool {
        matches!(self, Stat::E | Stat::B | Stat::J)
    }
}

/// Counts of matrices per value tuple of the requested statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub keys: Vec<Stat>,
    pub counts: BTreeMap<Vec<i64>, u64>,
}

impl Distribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Marginal distribution of one key.
    pub fn marginal(&self, key: Stat) -> Option<BTreeMap<i64, u64>> {
        let idx = self.keys.iter().position(|&k| k == key)?;
        let mut out = BTreeMap::new();
        for (values, &count) in &self.counts {
            *out.entry(values[idx]).or_insert(0) += count;
        }
        Some(out)
    }
}

/// Tabulates `keys` over `A(n)`, or over `A(n,1)` when `E`, `B` or `J` is
/// requested.
pub fn distribution(n: usize, keys: &[Stat], cap: usize) -> Result<Distribution> {
    let one_minus = keys.iter().any(|k| k.needs_one_minus());
    let filter = if one_minus {
        EnumFilter::with_minus(n, 1)
    } else {
        EnumFilter::all(n)
    };
    let mut counts = BTreeMap::new();
    for m in enumerate_asm(filter, cap)? {
        let cl = params::classical_params(&m);
        let ch = if one_minus {
            Some(params::charges(&m)?)
        } else {
            None
        };
        let values = keys
            .iter()
            .map(|k| match k {
                Stat::R => cl.r as i64,
                Stat::S => cl.s as i64,
                Stat::I => cl.i as i64,
                Stat::E => ch.map_or(0, |c| c.e),
                Stat::B => ch.map_or(0, |c| c.b),
                Stat::J => ch.map_or(0, |c| c.j as i64),
            })
            .collect();
        *counts.entry(values).or_insert(0) += 1;
    }
    Ok(Distribution {
        keys: keys.to_vec(),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive filter over all 3^(n*n) grids.
    fn naive(n: usize) -> Vec<AsmMatrix> {
        let cells = n * n;
        let mut out = Vec::new();
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let mut entries = vec![0i8; cells];
            for e in entries.iter_mut().rev() {
                *e = (c % 3) as i8 - 1;
                c /= 3;
            }
            if let Ok(m) = AsmMatrix::from_entries(n, entries) {
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn matches_naive_filter() {
        for n in 1..=3 {
            let fast: Vec<_> = enumerate_asm(EnumFilter::all(n), DEFAULT_CAP)
                .unwrap()
                .collect();
            assert_eq!(fast, naive(n), "n = {n}");
        }
    }

    #[test]
    fn small_counts() {
        let count = |f| enumerate_asm(f, DEFAULT_CAP).unwrap().count();
        assert_eq!(count(EnumFilter::all(3)), 7);
        assert_eq!(count(EnumFilter::all(4)), 42);
        let ones: Vec<_> = enumerate_asm(EnumFilter::with_minus(3, 1), DEFAULT_CAP)
            .unwrap()
            .collect();
        assert_eq!(
            ones,
            vec![AsmMatrix::new(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap()]
        );
        assert_eq!(count(EnumFilter::with_minus(4, 0)), 24);
    }

    #[test]
    fn class_filter_partitions() {
        let count = |class| {
            enumerate_asm(
                EnumFilter {
                    n: 5,
                    s: Some(1),
                    class: Some(class),
                },
                DEFAULT_CAP,
            )
            .unwrap()
            .count()
        };
        let total = enumerate_asm(EnumFilter::with_minus(5, 1), DEFAULT_CAP)
            .unwrap()
            .count();
        let (neg, neu, pos) = (
            count(SignClass::Negative),
            count(SignClass::Neutral),
            count(SignClass::Positive),
        );
        assert_eq!(neg + neu + pos, total);
        assert_eq!(neg, pos);
    }

    #[test]
    fn first_row_partition_concatenates() {
        let full: Vec<_> = enumerate_asm(EnumFilter::all(4), DEFAULT_CAP)
            .unwrap()
            .collect();
        let parts: Vec<_> = (1..=4)
            .rev()
            .flat_map(|c| enumerate_first_row(EnumFilter::all(4), DEFAULT_CAP, c).unwrap())
            .collect();
        assert_eq!(parts, full);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_asm(EnumFilter::all(8), DEFAULT_CAP),
            Err(Error::CapExceeded { n: 8, cap: 7 })
        ));
    }

    #[test]
    fn distributions() {
        let d = distribution(3, &[Stat::R], DEFAULT_CAP).unwrap();
        let expected: BTreeMap<Vec<i64>, u64> = [(vec![0], 2), (vec![1], 3), (vec![2], 2)]
            .into_iter()
            .collect();
        assert_eq!(d.counts, expected);

        let e3 = distribution(3, &[Stat::E], DEFAULT_CAP).unwrap();
        assert_eq!(
            e3.counts.into_iter().collect::<Vec<_>>(),
            vec![(vec![0], 1)]
        );

        let e = distribution(4, &[Stat::E], DEFAULT_CAP).unwrap();
        let b = distribution(4, &[Stat::B], DEFAULT_CAP).unwrap();
        assert_eq!(e.counts, b.counts);
    }
}
