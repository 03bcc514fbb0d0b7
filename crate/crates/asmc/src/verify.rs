//! Exhaustive verification of every stated property for `3 <= n <= n_max`.
//!
//! Each property walks its domain in increasing `n` and then in enumeration
//! order, so the first failure it records is the smallest counterexample.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use asmc_core::{
    charges, classical_params, classify, config_params, discharge, dual_table, enumerate_asm,
    gen_table, geometry, gv_dual, neutralize, one_minus_stats, pair_from_table, perm_table, phi,
    phi_inv, recharge, restore, table_params, validate_asm, validate_config, AsmMatrix,
    DischargeTuple, EnumFilter, Error, GenInvTable, NeutralPair, SignClass,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::Object;

/// Which family a property belongs to; the acceptance suite runs them by
/// family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Enumeration,
    Bijection,
    Transport,
    Involution,
    Reflection,
}

/// Replaceable pieces of the library, so the harness can be checked against
/// a deliberately broken implementation.
#[derive(Clone, Copy)]
pub struct Hooks {
    pub xi: fn(&NeutralPair) -> asmc_core::Result<NeutralPair>,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            xi: |p| Ok(asmc_core::xi(p)),
        }
    }
}

/// Charge flip with an off-by-one: `E ↦ c - l - E + 1`.
pub fn mutated_xi(p: &NeutralPair) -> asmc_core::Result<NeutralPair> {
    NeutralPair::new(
        p.matrix().clone(),
        p.c() as i64 - p.ell() as i64 - p.charge() + 1,
    )
}

impl Hooks {
    pub fn mutated() -> Self {
        Hooks { xi: mutated_xi }
    }

    fn prime(&self, a: &AsmMatrix) -> asmc_core::Result<AsmMatrix> {
        restore(&(self.xi)(&neutralize(a)?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    /// Text form of the offending input.
    pub input: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    /// The statement being checked.
    pub statement: &'static str,
    pub group: Group,
    pub checked: u64,
    pub failed: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n_min: usize,
    pub n_max: usize,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed())
    }

    pub fn group_passed(&self, g: Group) -> bool {
        self.properties
            .iter()
            .filter(|p| p.group == g)
            .all(PropertyResult::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verify n={}..={}", self.n_min, self.n_max);
        for p in &self.properties {
            let status = if p.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<26} {:>8} checked {:>4} failed {:>9.1} ms  {}",
                p.name,
                p.checked,
                p.failed,
                p.elapsed.as_secs_f64() * 1000.0,
                p.statement
            );
            if let Some(c) = &p.counterexample {
                let _ = writeln!(out, "  counterexample (n={}): {}", c.n, c.detail);
                for line in c.input.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} properties, {} passed, {failed} failed",
            self.properties.len(),
            self.properties.len() - failed
        );
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "passed": self.passed(), "report": self })
    }
}

/// Everything a property may iterate over for one order `n`.
struct Data {
    n: usize,
    all: Vec<AsmMatrix>,
    ones: Vec<AsmMatrix>,
    perms: Vec<AsmMatrix>,
}

impl Data {
    fn new(n: usize, cap: usize) -> asmc_core::Result<Self> {
        let all: Vec<AsmMatrix> = enumerate_asm(EnumFilter::all(n), cap)?.collect();
        let ones = all
            .iter()
            .filter(|m| m.minus_count() == 1)
            .cloned()
            .collect();
        let perms = all.iter().filter(|m| m.is_permutation()).cloned().collect();
        Ok(Data {
            n,
            all,
            ones,
            perms,
        })
    }

    fn non_negative(&self) -> impl Iterator<Item = &AsmMatrix> {
        self.ones
            .iter()
            .filter(|a| classify(a).ok() != Some(SignClass::Negative))
    }

    /// Every tuple `(k, P, c, E)` with `c + E < n`, valid or not.
    fn tuple_candidates(&self) -> impl Iterator<Item = DischargeTuple> + '_ {
        let n = self.n;
        self.perms.iter().flat_map(move |p| {
            (1..=n.saturating_sub(2)).flat_map(move |k| {
                (0..n).flat_map(move |c| {
                    (0..n - c).map(move |e| DischargeTuple {
                        k,
                        p: p.clone(),
                        c,
                        e,
                    })
                })
            })
        })
    }

    /// Every table over a permutation table with `b, β < n`.
    fn table_candidates(&self) -> impl Iterator<Item = GenInvTable> + '_ {
        let n = self.n;
        self.perms.iter().flat_map(move |p| {
            let a = perm_table(p).expect("permutation").0;
            (1..=n).flat_map(move |k| {
                let a = a.clone();
                (0..n).flat_map(move |b| {
                    let a = a.clone();
                    (0..n).map(move |beta| GenInvTable {
                        k,
                        a: a.clone(),
                        b,
                        beta,
                    })
                })
            })
        })
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    first: Option<Counterexample>,
}

type Check = Result<(), String>;

impl Tally {
    fn record(&mut self, n: usize, input: impl FnOnce() -> String, outcome: Check) {
        self.checked += 1;
        if let Err(detail) = outcome {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    n,
                    input: input(),
                    detail,
                });
            }
        }
    }

    fn matrix(&mut self, n: usize, a: &AsmMatrix, outcome: Check) {
        self.record(n, || Object::Matrix(a.clone()).to_text(), outcome);
    }
}

trait OrDetail<T> {
    fn or_detail(self) -> Result<T, String>;
}

impl<T> OrDetail<T> for asmc_core::Result<T> {
    fn or_detail(self) -> Result<T, String> {
        self.map_err(|e: Error| e.to_string())
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// `|A_n|` by the ratio `A(m+1)/A(m) = (3m+1)! m! / ((2m)! (2m+1)!)`.
pub fn asm_count(n: usize) -> u128 {
    let fact = |m: u128| (1..=m).product::<u128>();
    (1..n as u128).fold(1u128, |acc, m| {
        acc * fact(3 * m + 1) * fact(m) / (fact(2 * m) * fact(2 * m + 1))
    })
}

pub struct Property {
    pub name: &'static str,
    pub statement: &'static str,
    pub group: Group,
    run: fn(&Data, &Hooks, &mut Tally),
}

fn each_one_minus(d: &Data, t: &mut Tally, f: impl Fn(&AsmMatrix) -> Check) {
    for a in &d.ones {
        t.matrix(d.n, a, f(a));
    }
}

pub fn registry() -> Vec<Property> {
    use Group::*;
    vec![
        Property {
            name: "enumeration-count",
            statement: "the number of order-n ASMs matches the product formula",
            group: Enumeration,
            run: |d, _, t| {
                let (got, want) = (d.all.len() as u128, asm_count(d.n));
                t.record(d.n, || format!("n={}", d.n), if got == want { Ok(()) } else { Err(format!("{got} != {want}")) });
            },
        },
        Property {
            name: "enumeration-valid",
            statement: "every enumerated matrix is an ASM and the stream is strictly increasing",
            group: Enumeration,
            run: |d, _, t| {
                for (idx, a) in d.all.iter().enumerate() {
                    let outcome = (|| {
                        validate_asm(&a.to_rows()).or_detail()?;
                        ensure!(idx == 0 || d.all[idx - 1] < *a, "out of order");
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "neutralize-round-trip",
            statement: "restore(neutralize(A)) = A",
            group: Bijection,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let back = restore(&neutralize(a).or_detail()?).or_detail()?;
                ensure!(back == *a, "restored to\n{back}");
                Ok(())
            }),
        },
        Property {
            name: "neutralize-image",
            statement: "neutralizing is onto the pairs (N,E) with -l(N) <= E <= c(N), and neutralize(restore(p)) = p",
            group: Bijection,
            run: |d, _, t| {
                let image: HashSet<NeutralPair> = d.ones.iter().filter_map(|a| neutralize(a).ok()).collect();
                let mut expected = 0usize;
                for m in d.ones.iter().filter(|m| classify(m).ok() == Some(SignClass::Neutral)) {
                    let g = charges(m).expect("one -1");
                    for e in -(g.ell as i64)..=g.c as i64 {
                        expected += 1;
                        let pair = NeutralPair::new(m.clone(), e).expect("admissible charge");
                        let outcome = (|| {
                            ensure!(image.contains(&pair), "pair is not an image");
                            let again = neutralize(&restore(&pair).or_detail()?).or_detail()?;
                            ensure!(again == pair, "round trip gave charge {}", again.charge());
                            Ok(())
                        })();
                        t.record(d.n, || Object::Pair(pair.clone()).to_text(), outcome);
                    }
                }
                let sizes = if image.len() == expected { Ok(()) } else { Err(format!("image has {} pairs, expected {expected}", image.len())) };
                t.record(d.n, || format!("n={}", d.n), sizes);
            },
        },
        Property {
            name: "discharge-round-trip",
            statement: "discharging a non-negative matrix gives a valid tuple and recharging restores it",
            group: Bijection,
            run: |d, _, t| {
                for a in d.non_negative() {
                    let outcome = (|| {
                        let tuple = discharge(a).or_detail()?;
                        tuple.check().or_detail()?;
                        let back = recharge(&tuple).or_detail()?;
                        ensure!(back == *a, "recharged to\n{back}");
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "discharge-onto",
            statement: "every valid tuple (k,P,c,E) is the discharge of a non-negative matrix",
            group: Bijection,
            run: |d, _, t| {
                let image: HashSet<DischargeTuple> = d.non_negative().filter_map(|a| discharge(a).ok()).collect();
                for tuple in d.tuple_candidates() {
                    let valid = tuple.is_valid();
                    let outcome = if valid == image.contains(&tuple) {
                        Ok(())
                    } else if valid {
                        Err("valid tuple is not hit".to_string())
                    } else {
                        Err("invalid tuple is hit".to_string())
                    };
                    if valid || outcome.is_err() {
                        t.record(d.n, || Object::Tuple(tuple.clone()).to_text(), outcome);
                    }
                }
            },
        },
        Property {
            name: "table-round-trip",
            statement: "pair_from_table(gen_table(p)) = p",
            group: Bijection,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let pair = neutralize(a).or_detail()?;
                let table = gen_table(&pair);
                table.check().or_detail()?;
                ensure!(pair_from_table(&table).or_detail()? == pair, "table {table} does not rebuild the pair");
                Ok(())
            }),
        },
        Property {
            name: "table-characterization",
            statement: "a table is valid exactly when it encodes a neutral pair",
            group: Bijection,
            run: |d, _, t| {
                let produced: HashSet<GenInvTable> =
                    d.ones.iter().filter_map(|a| neutralize(a).ok()).map(|p| gen_table(&p)).collect();
                for table in d.table_candidates() {
                    let (valid, hit) = (table.is_valid(), produced.contains(&table));
                    let outcome = match (valid, hit) {
                        (true, false) => Err("valid but never produced".to_string()),
                        (false, true) => Err("produced but rejected".to_string()),
                        _ => Ok(()),
                    };
                    t.record(d.n, || table.to_string(), outcome);
                }
            },
        },
        Property {
            name: "phi-round-trip",
            statement: "phi yields a valid configuration and phi_inv(phi(p)) = p",
            group: Bijection,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let pair = neutralize(a).or_detail()?;
                let cfg = phi(&pair);
                let report = validate_config(&cfg);
                ensure!(report.is_valid(), "invalid configuration: {:?}", report.issues);
                ensure!(phi_inv(&cfg).or_detail()? == pair, "phi_inv does not invert phi");
                Ok(())
            }),
        },
        Property {
            name: "transport-i-r",
            statement: "i(N) = i(A) and r(N) = r(A)",
            group: Transport,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let pair = neutralize(a).or_detail()?;
                let (x, y) = (classical_params(a), classical_params(pair.matrix()));
                ensure!((x.i, x.r) == (y.i, y.r), "(i,r) went from ({},{}) to ({},{})", x.i, x.r, y.i, y.r);
                Ok(())
            }),
        },
        Property {
            name: "transport-B-J",
            statement: "B(N) = B(A) + E(A) and J(N) = J(A)",
            group: Transport,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let pair = neutralize(a).or_detail()?;
                let (x, y) = (charges(a).or_detail()?, charges(pair.matrix()).or_detail()?);
                ensure!(y.b == x.b + x.e, "B(N)={} but B(A)+E(A)={}", y.b, x.b + x.e);
                ensure!(y.j == x.j, "J(N)={} but J(A)={}", y.j, x.j);
                ensure!(pair.charge() == x.e, "pair charge {} but E(A)={}", pair.charge(), x.e);
                Ok(())
            }),
        },
        Property {
            name: "transport-upper-rows",
            statement: "neutralizing leaves every row down to the opening row unchanged",
            group: Transport,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let pair = neutralize(a).or_detail()?;
                let g = geometry(a).or_detail()?;
                for row in 1..=g.opening_row {
                    ensure!(pair.matrix().row(row) == a.row(row), "row {row} changed");
                }
                Ok(())
            }),
        },
        Property {
            name: "discharge-inversions",
            statement: "i(A) = i(P) + c(A) + 1 + E(A) for non-negative A",
            group: Transport,
            run: |d, _, t| {
                for a in d.non_negative() {
                    let outcome = (|| {
                        let tuple = discharge(a).or_detail()?;
                        let (ia, ip) = (classical_params(a).i, classical_params(&tuple.p).i);
                        ensure!(ia == ip + tuple.c + 1 + tuple.e, "i(A)={ia}, i(P)={ip}, c={}, E={}", tuple.c, tuple.e);
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "table-readout",
            statement: "r, i, E, B, J read off the table equal the matrix values",
            group: Transport,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let from_table = table_params(&gen_table(&neutralize(a).or_detail()?)).or_detail()?;
                let direct = one_minus_stats(a).or_detail()?;
                ensure!(from_table == direct, "table gives {from_table:?}, matrix gives {direct:?}");
                Ok(())
            }),
        },
        Property {
            name: "config-readout",
            statement: "r, i, E, B, J read off the configuration equal the matrix values",
            group: Transport,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let from_cfg = config_params(&phi(&neutralize(a).or_detail()?)).or_detail()?;
                let direct = one_minus_stats(a).or_detail()?;
                ensure!(from_cfg == direct, "configuration gives {from_cfg:?}, matrix gives {direct:?}");
                Ok(())
            }),
        },
        Property {
            name: "xi-involution",
            statement: "the charge flip E -> c - l - E is an involution on admissible pairs",
            group: Involution,
            run: |d, h, t| {
                for a in &d.ones {
                    let Ok(pair) = neutralize(a) else { continue };
                    let outcome = (|| {
                        let twice = (h.xi)(&(h.xi)(&pair).or_detail()?).or_detail()?;
                        ensure!(twice == pair, "charge {} came back as {}", pair.charge(), twice.charge());
                        Ok(())
                    })();
                    t.record(d.n, || Object::Pair(pair.clone()).to_text(), outcome);
                }
            },
        },
        Property {
            name: "prime-involution",
            statement: "A'' = A",
            group: Involution,
            run: |d, h, t| {
                for a in &d.ones {
                    let outcome = (|| {
                        let twice = h.prime(&h.prime(a).or_detail()?).or_detail()?;
                        ensure!(twice == *a, "A'' is\n{twice}");
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "prime-swaps-charges",
            statement: "E(A') = B(A) and B(A') = E(A), with r, i, J unchanged",
            group: Involution,
            run: |d, h, t| {
                for a in &d.ones {
                    let outcome = (|| {
                        let x = one_minus_stats(a).or_detail()?;
                        let y = one_minus_stats(&h.prime(a).or_detail()?).or_detail()?;
                        ensure!((y.e, y.b) == (x.b, x.e), "(E,B) went from ({},{}) to ({},{})", x.e, x.b, y.e, y.b);
                        ensure!((y.r, y.i, y.j) == (x.r, x.i, x.j), "r, i or J changed");
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "prime-commutes-reflect",
            statement: "(reflect A)' = reflect(A')",
            group: Involution,
            run: |d, h, t| {
                for a in &d.ones {
                    let outcome = (|| {
                        let lhs = h.prime(&a.reflect()).or_detail()?;
                        ensure!(lhs == h.prime(a).or_detail()?.reflect(), "prime and reflect do not commute");
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "charge-anti-invariance",
            statement: "reflection negates E and B and keeps J",
            group: Involution,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let (x, y) = (charges(a).or_detail()?, charges(&a.reflect()).or_detail()?);
                ensure!(x.e == -y.e && x.b == -y.b && x.j == y.j, "({},{},{}) vs ({},{},{})", x.e, x.b, x.j, y.e, y.b, y.j);
                Ok(())
            }),
        },
        Property {
            name: "dual-table",
            statement: "the dual table formulas give the table of the reflected matrix",
            group: Involution,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let table = gen_table(&neutralize(a).or_detail()?);
                let dual = dual_table(&table).or_detail()?;
                let reflected = gen_table(&neutralize(&a.reflect()).or_detail()?);
                ensure!(dual == reflected, "dual {dual} but reflected table {reflected}");
                ensure!(dual_table(&dual).or_detail()? == table, "dual table is not an involution");
                Ok(())
            }),
        },
        Property {
            name: "dual-identity",
            statement: "a_k + b + dual a_(k-1) = k - 2",
            group: Involution,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let table = gen_table(&neutralize(a).or_detail()?);
                let dual = dual_table(&table).or_detail()?;
                let k = table.k;
                ensure!(table.at(k) + table.b + dual.at(k - 1) == k - 2, "identity fails for {table}");
                Ok(())
            }),
        },
        Property {
            name: "dual-beta-is-prime-beta",
            statement: "the dual beta equals the beta of the table of A'",
            group: Involution,
            run: |d, h, t| {
                for a in &d.ones {
                    let outcome = (|| {
                        let table = gen_table(&neutralize(a).or_detail()?);
                        let dual = dual_table(&table).or_detail()?;
                        let primed = gen_table(&neutralize(&h.prime(a).or_detail()?).or_detail()?);
                        ensure!(primed == GenInvTable { beta: dual.beta, ..table.clone() }, "table of A' is {primed}, expected beta {}", dual.beta);
                        Ok(())
                    })();
                    t.matrix(d.n, a, outcome);
                }
            },
        },
        Property {
            name: "gv-duality",
            statement: "gv_dual(phi(neutralize(A))) = phi(neutralize(reflect A)), an involution",
            group: Involution,
            run: |d, _, t| each_one_minus(d, t, |a| {
                let cfg = phi(&neutralize(a).or_detail()?);
                let dual = gv_dual(&cfg).or_detail()?;
                ensure!(dual == phi(&neutralize(&a.reflect()).or_detail()?), "dual configuration differs");
                ensure!(gv_dual(&dual).or_detail()? == cfg, "gv_dual is not an involution");
                Ok(())
            }),
        },
        Property {
            name: "reflection-identities",
            statement: "r + reflected r = n - 1, i + reflected i = n(n-1)/2 + s, s is kept (every s)",
            group: Reflection,
            run: |d, _, t| {
                for a in &d.all {
                    let (x, y) = (classical_params(a), classical_params(&a.reflect()));
                    let n = d.n;
                    let outcome = (|| {
                        ensure!(x.r + y.r == n - 1, "r sum {}", x.r + y.r);
                        ensure!(x.i + y.i == n * (n - 1) / 2 + x.s, "i sum {}", x.i + y.i);
                        ensure!(x.s == y.s, "s changed");
                        Ok(())
                    })();
                    t.matrix(n, a, outcome);
                }
            },
        },
    ]
}

#[derive(Clone)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub cap: usize,
    pub hooks: Hooks,
    /// Only run these groups; all when `None`.
    pub groups: Option<Vec<Group>>,
}

impl VerifyOptions {
    pub fn new(n_max: usize, cap: usize) -> Self {
        VerifyOptions {
            n_min: 3,
            n_max,
            cap,
            hooks: Hooks::default(),
            groups: None,
        }
    }
}

/// Runs every registered property for `3 <= n <= n_max`.
pub fn verify_suite(n_max: usize, cap: usize) -> asmc_core::Result<VerifyReport> {
    verify_with(&VerifyOptions::new(n_max, cap))
}

pub fn verify_with(opts: &VerifyOptions) -> asmc_core::Result<VerifyReport> {
    if opts.n_max > opts.cap {
        return Err(Error::CapExceeded {
            n: opts.n_max,
            cap: opts.cap,
        });
    }
    let props: Vec<Property> = registry()
        .into_iter()
        .filter(|p| opts.groups.as_ref().is_none_or(|g| g.contains(&p.group)))
        .collect();
    let mut tallies: Vec<(Tally, Duration)> = props.iter().map(|_| Default::default()).collect();
    for n in opts.n_min..=opts.n_max {
        let data = Data::new(n, opts.cap)?;
        for (p, (tally, time)) in props.iter().zip(tallies.iter_mut()) {
            let start = Instant::now();
            (p.run)(&data, &opts.hooks, tally);
            *time += start.elapsed();
        }
    }
    let properties = props
        .iter()
        .zip(tallies)
        .map(|(p, (t, elapsed))| PropertyResult {
            name: p.name,
            statement: p.statement,
            group: p.group,
            checked: t.checked,
            failed: t.failed,
            counterexample: t.first,
            elapsed,
        })
        .collect();
    Ok(VerifyReport {
        n_min: opts.n_min,
        n_max: opts.n_max,
        properties,
    })
}

/// Distinct names, for a quick consistency check of the registry.
pub fn property_names() -> BTreeSet<&'static str> {
    registry().iter().map(|p| p.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_ratio() {
        let got: Vec<u128> = (1..=7).map(asm_count).collect();
        assert_eq!(got, [1, 2, 7, 42, 429, 7436, 218348]);
    }

    #[test]
    fn registry_is_large_and_unique() {
        assert!(registry().len() >= 15);
        assert_eq!(property_names().len(), registry().len());
    }

    #[test]
    fn suite_passes_at_five() {
        let report = verify_suite(5, 7).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.properties.iter().all(|p| p.checked > 0));
    }

    #[test]
    fn mutated_charge_flip_is_caught() {
        let report = verify_with(&VerifyOptions {
            hooks: Hooks::mutated(),
            ..VerifyOptions::new(4, 7)
        })
        .unwrap();
        let xi = report
            .properties
            .iter()
            .find(|p| p.name == "xi-involution")
            .unwrap();
        let c = xi.counterexample.as_ref().unwrap();
        assert_eq!(c.n, 3);
        assert_eq!(c.input, "E=0\n0 1 0\n1 -1 1\n0 1 0\n");
        assert!(report.failures().all(|p| p.group == Group::Involution));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            verify_suite(8, 7).unwrap_err(),
            Error::CapExceeded { n: 8, cap: 7 }
        );
    }
}
