use std::collections::{BTreeSet, HashSet};

use asmc_core::*;

fn one_minus(n: usize) -> Vec<AsmMatrix> {
    enumerate_asm(EnumFilter::with_minus(n, 1), DEFAULT_CAP)
        .unwrap()
        .collect()
}

fn permutations(n: usize) -> Vec<AsmMatrix> {
    enumerate_asm(EnumFilter::with_minus(n, 0), DEFAULT_CAP)
        .unwrap()
        .collect()
}

#[test]
fn reflection_identities_all_s() {
    for n in 1..=5 {
        for a in enumerate_asm(EnumFilter::all(n), DEFAULT_CAP).unwrap() {
            let p = classical_params(&a);
            let q = classical_params(&a.reflect());
            assert_eq!(p.r + q.r, n - 1);
            assert_eq!(p.i + q.i, n * (n - 1) / 2 + p.s);
            assert_eq!(p.s, q.s);
        }
    }
}

#[test]
fn permutation_inversions_and_tables() {
    for n in 1..=5 {
        for p in permutations(n) {
            let cols = p.permutation().unwrap();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |k| (i, k)));
            let inv = pairs.filter(|&(i, k)| cols[i] > cols[k]).count();
            assert_eq!(classical_params(&p).i, inv);
            let t = perm_table(&p).unwrap();
            assert_eq!(perm_from_table(&t).unwrap(), p);
            assert_eq!(t.0.iter().sum::<usize>(), inv);
            assert_eq!(t.0[n - 1], classical_params(&p).r);
            assert_eq!(perm_table(&p.reflect()).unwrap(), t.complement());
        }
    }
}

#[test]
fn charges_under_reflection() {
    for n in 3..=6 {
        for a in one_minus(n) {
            let x = charges(&a).unwrap();
            let y = charges(&a.reflect()).unwrap();
            assert_eq!(x.e + y.e, 0);
            assert_eq!(x.b + y.b, 0);
            assert_eq!(x.j, y.j);
            let (ca, cr) = (classify(&a).unwrap(), classify(&a.reflect()).unwrap());
            match ca {
                SignClass::Positive => assert_eq!(cr, SignClass::Negative),
                SignClass::Negative => assert_eq!(cr, SignClass::Positive),
                SignClass::Neutral => {
                    assert_eq!(cr, SignClass::Neutral);
                    let (s, t) = (cell_sums(&a).unwrap(), cell_sums(&a.reflect()).unwrap());
                    assert_eq!((s.ell, s.c), (t.c, t.ell));
                }
            }
            assert_eq!(
                x.e.signum(),
                match ca {
                    SignClass::Positive => 1,
                    SignClass::Neutral => 0,
                    SignClass::Negative => -1,
                }
            );
        }
    }
}

#[test]
fn discharging_is_a_bijection() {
    for n in 3..=6 {
        let mut image = HashSet::new();
        for a in one_minus(n) {
            if classify(&a).unwrap() == SignClass::Negative {
                continue;
            }
            let t = discharge(&a).unwrap();
            t.check().unwrap();
            let g = geometry(&a).unwrap();
            for row in 1..=g.opening_row {
                assert_eq!(t.p.row(row), a.row(row));
            }
            let ch = charges(&a).unwrap();
            let ip = classical_params(&t.p).i;
            assert_eq!(classical_params(&a).i, ip + ch.c + 1 + ch.e as usize);
            assert!(ch.c + (ch.e as usize) < ch.x);
            assert_eq!(ch.x, asmc_core::discharge::x_of(&t.p, t.k));
            assert_eq!(recharge(&t).unwrap(), a);
            assert!(image.insert(t));
        }
        // Every member of B(n,1) is hit.
        let mut members = 0;
        for p in permutations(n) {
            for k in 1..=n - 2 {
                let x = n;
                for c in 0..x {
                    for e in 0..x - c {
                        let t = DischargeTuple {
                            k,
                            p: p.clone(),
                            c,
                            e,
                        };
                        if t.is_valid() {
                            members += 1;
                            assert!(image.contains(&t), "{t:?} not hit");
                        }
                    }
                }
            }
        }
        assert_eq!(members, image.len());
    }
}

#[test]
fn neutralizing_is_a_bijection_onto_admissible_pairs() {
    for n in 3..=6 {
        let all = one_minus(n);
        let mut image = BTreeSet::new();
        for a in &all {
            let pair = neutralize(a).unwrap();
            assert_eq!(restore(&pair).unwrap(), *a);
            let (pa, pn) = (
                one_minus_stats(a).unwrap(),
                one_minus_stats(pair.matrix()).unwrap(),
            );
            assert_eq!(pn.i, pa.i);
            assert_eq!(pn.r, pa.r);
            assert_eq!(pair.charge(), pa.e);
            assert_eq!(pn.b, pa.b + pa.e);
            assert_eq!(pn.j, pa.j);
            let g = geometry(a).unwrap();
            for row in 1..=g.opening_row {
                assert_eq!(pair.matrix().row(row), a.row(row));
            }
            assert!(-(pair.ell() as i64) <= pa.b && pa.b <= pair.c() as i64);
            assert!(image.insert(pair));
        }
        let mut expected = BTreeSet::new();
        for m in &all {
            if classify(m).unwrap() == SignClass::Neutral {
                let s = cell_sums(m).unwrap();
                for e in -(s.ell as i64)..=s.c as i64 {
                    expected.insert(NeutralPair::new(m.clone(), e).unwrap());
                }
            }
        }
        assert_eq!(image, expected);
    }
}

#[test]
fn prime_involution() {
    for n in 3..=6 {
        for a in one_minus(n) {
            let ap = prime(&a).unwrap();
            assert_eq!(prime(&ap).unwrap(), a);
            let (x, y) = (one_minus_stats(&a).unwrap(), one_minus_stats(&ap).unwrap());
            assert_eq!((y.e, y.b), (x.b, x.e));
            assert_eq!((y.r, y.i, y.j), (x.r, x.i, x.j));
            assert_eq!(prime(&a.reflect()).unwrap(), ap.reflect());
            let pair = neutralize(&a).unwrap();
            assert_eq!(xi(&xi(&pair)), pair);
        }
    }
}

#[test]
fn tables_and_configurations() {
    for n in 3..=6 {
        let mut produced = HashSet::new();
        for a in one_minus(n) {
            let pair = neutralize(&a).unwrap();
            let t = gen_table(&pair);
            t.check().unwrap();
            assert_eq!(pair_from_table(&t).unwrap(), pair);
            assert_eq!(pair.ell() as usize, t.at(t.k) - 1 - t.at(t.k - 1));
            let stats = one_minus_stats(&a).unwrap();
            assert_eq!(table_params(&t).unwrap(), stats);

            let d = dual_table(&t).unwrap();
            assert_eq!(d, gen_table(&neutralize(&a.reflect()).unwrap()));
            assert_eq!(dual_table(&d).unwrap(), t);
            assert_eq!(t.at(t.k) + t.b + d.at(t.k - 1), t.k - 2);
            let beta_prime = t.b + t.at(t.k) - t.at(t.k - 1) - 1 - t.beta;
            assert_eq!(d.beta, beta_prime);
            assert_eq!(
                gen_table(&neutralize(&prime(&a).unwrap()).unwrap()),
                GenInvTable {
                    beta: beta_prime,
                    ..t.clone()
                }
            );

            let cfg = phi(&pair);
            assert!(validate_config(&cfg).is_valid());
            assert_eq!(phi_inv(&cfg).unwrap(), pair);
            assert_eq!(config_params(&cfg).unwrap(), stats);
            assert_eq!(
                gv_dual(&cfg).unwrap(),
                phi(&neutralize(&a.reflect()).unwrap())
            );
            produced.insert(t);
        }
        // Every table satisfying the characterization comes from some pair.
        let mut valid = 0;
        for p in permutations(n) {
            let a = perm_table(&p).unwrap().0;
            for k in 1..=n {
                for b in 0..n {
                    for beta in 0..n {
                        let t = GenInvTable {
                            k,
                            a: a.clone(),
                            b,
                            beta,
                        };
                        if t.is_valid() {
                            valid += 1;
                            assert!(produced.contains(&t), "{t:?}");
                        } else {
                            assert!(!produced.contains(&t));
                        }
                    }
                }
            }
        }
        assert_eq!(valid, produced.len());
    }
}
