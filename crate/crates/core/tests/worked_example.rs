//! The worked example of order 12: the neutral matrix `N0` is rebuilt from
//! its generalized inversion table and `A0` is restored from
//! `(N0, 3)`.

use asmc_core::*;

fn g0() -> GenInvTable {
    GenInvTable {
        k: 10,
        a: vec![0, 0, 2, 2, 0, 0, 1, 5, 0, 3, 6, 6],
        b: 4,
        beta: 5,
    }
}

fn n0() -> AsmMatrix {
    pair_from_table(&g0()).unwrap().matrix().clone()
}

fn a0() -> AsmMatrix {
    restore(&NeutralPair::new(n0(), 3).unwrap()).unwrap()
}

#[test]
fn classical_parameters() {
    for m in [n0(), a0()] {
        let p = classical_params(&m);
        assert_eq!((p.r, p.s, p.i), (6, 1, 30));
    }
}

#[test]
fn charges_of_both_matrices() {
    let a = charges(&a0()).unwrap();
    assert_eq!((a.e, a.b, a.j), (3, -1, 7));
    let n = charges(&n0()).unwrap();
    assert_eq!((n.e, n.b, n.j), (0, 2, 7));
    assert_eq!((n.c, n.ell), (4, 2));
    assert_eq!(a.c, 1);
}

#[test]
fn classes() {
    assert_eq!(classify(&a0()).unwrap(), SignClass::Positive);
    assert_eq!(classify(&a0().reflect()).unwrap(), SignClass::Negative);
    assert_eq!(classify(&n0()).unwrap(), SignClass::Neutral);
    let g = geometry(&n0()).unwrap();
    assert_eq!((g.opening_row, g.closing_row, g.opening_col), (3, 4, 4));
}

#[test]
fn discharging_shares_the_permutation() {
    let ta = discharge(&a0()).unwrap();
    let tn = discharge(&n0()).unwrap();
    assert_eq!((ta.k, ta.c, ta.e), (3, 1, 3));
    assert_eq!((tn.k, tn.c, tn.e), (3, 4, 0));
    assert_eq!(ta.p, tn.p);
    assert_eq!(delta_partial(&a0()).unwrap(), ta.p);
    assert!(ta.is_valid() && tn.is_valid());
    assert_eq!(recharge(&tn).unwrap(), n0());
    assert_eq!(recharge(&ta).unwrap(), a0());
}

#[test]
fn neutralizing() {
    let pair = neutralize(&a0()).unwrap();
    assert_eq!((pair.matrix(), pair.charge()), (&n0(), 3));
    assert_eq!(
        neutralize(&n0()).unwrap(),
        NeutralPair::new(n0(), 0).unwrap()
    );
    let mirrored = neutralize(&a0().reflect()).unwrap();
    assert_eq!(
        (mirrored.matrix(), mirrored.charge()),
        (&n0().reflect(), -3)
    );
    assert_eq!(
        NeutralPair::new(n0(), 5),
        Err(Error::InvalidPair("charge exceeds c(N)"))
    );
    assert_eq!(restore(&NeutralPair::new(n0(), 0).unwrap()).unwrap(), n0());
}

#[test]
fn charge_flip_and_prime() {
    let flipped = xi(&NeutralPair::new(n0(), 3).unwrap());
    assert_eq!(flipped.charge(), -1);
    assert_eq!(xi(&NeutralPair::new(n0(), 0).unwrap()).charge(), 2);

    let a0p = prime(&a0()).unwrap();
    let ch = charges(&a0p).unwrap();
    assert_eq!((ch.e, ch.b, ch.j), (-1, 3, 7));
    assert_eq!(classical_params(&a0p).i, 30);
    assert_eq!(a0p.row(1), a0().row(1));
    assert_eq!(a0p.row(3), a0().row(3));
    assert_eq!(prime(&a0p).unwrap(), a0());
}

#[test]
fn table_round_trip_and_readout() {
    let pair = neutralize(&a0()).unwrap();
    assert_eq!(gen_table(&pair), g0());
    let p = table_params(&g0()).unwrap();
    assert_eq!((p.r, p.i, p.e, p.b, p.j), (6, 30, 3, -1, 7));
    assert_eq!(one_minus_stats(&a0()).unwrap(), p);
}

#[test]
fn dual_table_and_corollary() {
    let d = dual_table(&g0()).unwrap();
    assert_eq!(
        d,
        GenInvTable {
            k: 10,
            a: vec![0, 1, 0, 1, 4, 5, 5, 2, 1, 6, 4, 5],
            b: 2,
            beta: 1
        }
    );
    let t = g0();
    let beta_prime = t.b + t.at(10) - t.at(9) - 1 - t.beta;
    assert_eq!(beta_prime, 1);
    assert_eq!(d.beta, beta_prime);
    assert_eq!(
        gen_table(&neutralize(&prime(&a0()).unwrap()).unwrap()),
        GenInvTable {
            beta: beta_prime,
            ..g0()
        }
    );
    assert_eq!(gen_table(&neutralize(&a0().reflect()).unwrap()), d);
}

#[test]
fn mixed_configuration() {
    let cfg = phi(&neutralize(&a0()).unwrap());
    let letters = |i: usize| cfg.path(i).step_string();
    assert_eq!(letters(9), "FFFFFNFFF");
    assert_eq!(letters(10), "EEESEEEEF");
    for i in (1..=12).filter(|&i| i != 9 && i != 10) {
        let a = g0().at(i);
        assert_eq!(
            letters(i),
            "E".repeat(a) + &"F".repeat(i - 1 - a),
            "path {i}"
        );
    }
    assert_eq!(cfg.count(Step::N), 1);
    assert_eq!(cfg.count(Step::S), 1);
    assert!(validate_config(&cfg).is_valid());
    let p = config_params(&cfg).unwrap();
    assert_eq!((p.r, p.i, p.e, p.b, p.j), (6, 30, 3, -1, 7));

    let dual = gv_dual(&cfg).unwrap();
    assert_eq!(
        dual,
        phi(&pair_from_table(&dual_table(&g0()).unwrap()).unwrap())
    );
    assert_eq!(dual, phi(&neutralize(&a0().reflect()).unwrap()));
    assert_eq!(gv_dual(&dual).unwrap(), cfg);
}
