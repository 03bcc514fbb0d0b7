//! One-shot dump of a one-`-1` matrix in all four representations.

use asmc_core::{
    classical_params, config_params, dual_table, gen_table, gv_dual, neutralize, one_minus_stats,
    phi, restore, table_params, AsmMatrix, Error, GenInvTable, MixedConfiguration, NeutralPair,
    OneMinusStats, Result,
};
use serde_json::{json, Value};

use crate::format::Object;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub matrix: AsmMatrix,
    pub stats: OneMinusStats,
    pub pair: NeutralPair,
    pub table: GenInvTable,
    pub config: MixedConfiguration,
}

/// Builds the bundle, checking on the way that every representation reports
/// the same `(r, i, E, B, J)` and that each step inverts.
pub fn pipeline(a: &AsmMatrix) -> Result<Bundle> {
    if a.minus_count() != 1 {
        return Err(Error::NotOneMinus {
            count: a.minus_count(),
        });
    }
    let stats = one_minus_stats(a)?;
    let pair = neutralize(a)?;
    let table = gen_table(&pair);
    let config = phi(&pair);
    let agree = |ok: bool, what: &'static str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InternalInvariantViolation(what))
        }
    };
    agree(
        restore(&pair)? == *a,
        "neutral pair does not restore the matrix",
    )?;
    agree(
        table_params(&table)? == stats,
        "table parameters disagree with the matrix",
    )?;
    agree(
        config_params(&config)? == stats,
        "configuration parameters disagree with the matrix",
    )?;
    let n = classical_params(pair.matrix());
    agree(
        (n.r, n.i) == (stats.r, stats.i),
        "neutral matrix changed r or i",
    )?;
    Ok(Bundle {
        matrix: a.clone(),
        stats,
        pair,
        table,
        config,
    })
}

impl Bundle {
    /// The bundle of the reflected matrix, computed component-wise.
    pub fn dual(&self) -> Result<Bundle> {
        let n = self.matrix.order();
        let s = self.stats;
        Ok(Bundle {
            matrix: self.matrix.reflect(),
            stats: OneMinusStats {
                r: n - 1 - s.r,
                i: n * (n - 1) / 2 + 1 - s.i,
                e: -s.e,
                b: -s.b,
                j: s.j,
            },
            pair: self.pair.reflect(),
            table: dual_table(&self.table)?,
            config: gv_dual(&self.config)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let s = self.stats;
        json!({
            "A": Object::Matrix(self.matrix.clone()).to_json(),
            "params": { "r": s.r, "s": 1, "i": s.i, "E": s.e, "B": s.b, "J": s.j },
            "pair": Object::Pair(self.pair.clone()).to_json(),
            "table": Object::Table(self.table.clone()).to_json(),
            "config": Object::Config(self.config.clone()).to_json(),
        })
    }

    pub fn to_text(&self) -> String {
        let s = self.stats;
        format!(
            "# matrix\n{}# params\nr={} s=1 i={} E={} B={} J={}\n# pair\n{}# table\n{}# configuration\n{}",
            Object::Matrix(self.matrix.clone()).to_text(),
            s.r,
            s.i,
            s.e,
            s.b,
            s.j,
            Object::Pair(self.pair.clone()).to_text(),
            Object::Table(self.table.clone()).to_text(),
            Object::Config(self.config.clone()).to_text(),
        )
    }
}
