//! The neutralizing bijection `Λ : A(n,1) → {(N, E) : -ℓ(N) <= E <= c(N)}`,
//! the charge flip `ξ` and the involution `A ↦ A'` that swaps `E` and `B`.

use crate::discharge::{discharge, recharge, DischargeTuple};
use crate::error::{Error, Result};
use crate::matrix::AsmMatrix;
use crate::params::{self, SignClass};

/// A neutral matrix with an admissible charge.
///
/// The invariants are checked on construction, so every value of this type
/// satisfies `class(N) = Neutral` and `-ℓ(N) <= E <= c(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeutralPair {
    matrix: AsmMatrix,
    charge: i64,
    ell: usize,
    c: usize,
}

impl NeutralPair {
    pub fn new(matrix: AsmMatrix, charge: i64) -> Result<Self> {
        let class = params::classify(&matrix).map_err(|e| match e {
            Error::NotOneMinus { .. } => Error::InvalidPair("matrix must have exactly one -1"),
            other => other,
        })?;
        if class != SignClass::Neutral {
            return Err(Error::InvalidPair("matrix is not neutral"));
        }
        let sums = params::cell_sums(&matrix)?;
        if charge > sums.c as i64 {
            return Err(Error::InvalidPair("charge exceeds c(N)"));
        }
        if charge < -(sums.ell as i64) {
            return Err(Error::InvalidPair("charge is below -l(N)"));
        }
        Ok(NeutralPair {
            matrix,
            charge,
            ell: sums.ell,
            c: sums.c,
        })
    }

    pub fn matrix(&self) -> &AsmMatrix {
        &self.matrix
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    /// `ℓ(N)`.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `c(N)`.
    pub fn c(&self) -> usize {
        self.c
    }

    /// `(N̄, -E)`.
    pub fn reflect(&self) -> NeutralPair {
        // ℓ and c trade places under reflection of a neutral matrix.
        NeutralPair {
            matrix: self.matrix.reflect(),
            charge: -self.charge,
            ell: self.c,
            c: self.ell,
        }
    }

    pub fn into_parts(self) -> (AsmMatrix, i64) {
        (self.matrix, self.charge)
    }
}

/// `Λ(A)`.
pub fn neutralize(a: &AsmMatrix) -> Result<NeutralPair> {
    match params::classify(a)? {
        SignClass::Negative => Ok(neutralize(&a.reflect())?.reflect()),
        SignClass::Neutral => NeutralPair::new(a.clone(), 0),
        SignClass::Positive => {
            let DischargeTuple { k, p, c, e } = discharge(a)?;
            let n = recharge(&DischargeTuple {
                k,
                p,
                c: c + e,
                e: 0,
            })?;
            NeutralPair::new(n, e as i64)
        }
    }
}

/// `Λ⁻¹(N, E)`.
pub fn restore(pair: &NeutralPair) -> Result<AsmMatrix> {
    match pair.charge {
        0 => Ok(pair.matrix.clone()),
        e if e < 0 => Ok(restore(&pair.reflect())?.reflect()),
        e => {
            let DischargeTuple { k, p, c, .. } = discharge(&pair.matrix)?;
            let e = e as usize;
            recharge(&DischargeTuple { k, p, c: c - e, e })
        }
    }
}

/// `ξ(N, E) = (N, c(N) - ℓ(N) - E)`, an involution on neutral pairs.
pub fn xi(pair: &NeutralPair) -> NeutralPair {
    NeutralPair {
        charge: pair.c as i64 - pair.ell as i64 - pair.charge,
        ..pair.clone()
    }
}

/// `A' = Λ⁻¹(ξ(Λ(A)))`.
pub fn prime(a: &AsmMatrix) -> Result<AsmMatrix> {
    restore(&xi(&neutralize(a)?))
}
