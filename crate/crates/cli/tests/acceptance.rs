//! Acceptance suite: every exit criterion of the workbench, one test per
//! criterion, each printing a single pass/fail line with its runtime.
//! All expected values are pinned exactly; there are no tuned tolerances.

use dvlab::field::{Field, Rat};
use dvlab::periods::{minimal_norm_table, movable_classes_22, ample_classes_22, heegner_nonempty, NSClass};
use dvlab::report::{run_suite, table1_csv, Config, Status};
use dvlab::schubert::{aux_chern_checks, dv_segre_numbers};
use dvlab::symw3::cube;
use dvlab::zoo::{det3, sl3_sigma0};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn report(criterion: &str, label: &str, pass: bool, t: Instant, limit_s: f64) {
    let dt = t.elapsed().as_secs_f64();
    println!(
        "criterion {criterion} ({label}): {} [{dt:.2}s, limit {limit_s}s]",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
    assert!(
        dt < limit_s,
        "criterion {criterion} exceeded its runtime limit: {dt:.2}s"
    );
}

fn case_passes(r: &dvlab::report::SuiteReport, id: &str) -> bool {
    r.cases
        .iter()
        .find(|c| c.id == id)
        .map(|c| c.status == Status::Pass)
        .unwrap_or(false)
}

#[test]
fn criterion_01_table1_exact() {
    let t = Instant::now();
    let r = run_suite("table1", &Config::default()).unwrap();
    let mut ok = r.failures() == 0;
    // byte-exact CSV rendering of the six columns
    let expected_csv = "\
e,a1b1,mu,a2b2,movable,nu,ample
1,-,1,(5;3),6L-5δ,2/3,-
3,(2;1),3/2,(1;1),2L-δ,3/2,2L-δ
5,(9;4),20/9,(3;1),2L-3δ;6L-13δ,2,2L-3δ
9,-,3,(5;1),2L-5δ,3,2L-5δ
11,(10;3),33/10,(33;5),10L-33δ,22/7,-
15,(4;1),15/4,(7;1),2L-7δ,15/4,2L-7δ
";
    ok &= table1_csv(&[1, 3, 5, 9, 11, 15]) == expected_csv;
    report("01", "movable/nef table reproduction", ok, t, 1.0);
}

#[test]
fn criterion_02_table2_exact() {
    let t = Instant::now();
    let table = minimal_norm_table(120).unwrap();
    let expected = [(1u64, 1u64), (2, 15), (3, 9), (4, 5), (5, 3)];
    let ok = expected.iter().all(|(a, e)| {
        table
            .iter()
            .any(|row| row.a == *a && row.e == *e)
    }) && table.len() == 5;
    report("02", "minimal-norm vector table", ok, t, 30.0);
}

#[test]
fn criterion_03_segre_numbers() {
    let t = Instant::now();
    let s = dv_segre_numbers();
    let ok = s.s1_4 == BigInt::from(1452)
        && s.s1_2_s2 == BigInt::from(825)
        && s.s1_s3 == BigInt::from(330)
        && s.s2_2 == BigInt::from(477)
        && s.s4 == BigInt::from(105)
        // the Pluecker degree of the fourfolds is the same 1452
        && s.s1_4 == BigInt::from(1452);
    report("03", "Segre numbers on Gr(6,10)", ok, t, 120.0);
}

#[test]
fn criterion_04_sl3_sigma0_certification() {
    let t = Instant::now();
    let sigma = sl3_sigma0();
    // support: exactly the nine anchored triples with the stated magnitudes
    let anchored: Vec<(Vec<usize>, i64)> = vec![
        (vec![0, 1, 2], 1),
        (vec![0, 5, 8], 3),
        (vec![1, 4, 7], 3),
        (vec![2, 3, 6], 3),
        (vec![3, 4, 5], 3),
        (vec![6, 7, 8], 3),
        (vec![3, 8, 9], 6),
        (vec![4, 6, 9], 6),
        (vec![5, 7, 9], 6),
    ];
    let mut ok = true;
    let mut support = 0;
    for (r, tuple) in dvlab::exterior::combinations(10, 3).iter().enumerate() {
        let c = &sigma.coeffs[r];
        if c.is_zero() {
            continue;
        }
        support += 1;
        let magnitude = {
            let n = c.numer().magnitude().to_string();
            n.parse::<i64>().unwrap_or(-1)
        };
        ok &= anchored
            .iter()
            .any(|(tt, m)| tt == tuple && *m == magnitude && c.denom() == &BigInt::from(1));
    }
    ok &= support == 9;
    // det^3 oracle on 50 random cube triples
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let u: Vec<Rat> = (0..3).map(|_| Rat::from_int(rng.gen_range(-6..=6))).collect();
        let v: Vec<Rat> = (0..3).map(|_| Rat::from_int(rng.gen_range(-6..=6))).collect();
        let w: Vec<Rat> = (0..3).map(|_| Rat::from_int(rng.gen_range(-6..=6))).collect();
        ok &= sigma.eval3(&cube(&u), &cube(&v), &cube(&w)) == det3(&u, &v, &w);
    }
    // exhaustive sweeps
    let sweeps = dvlab::dv::monomial_sweeps();
    ok &= sweeps.criterion_matches == 220 && sweeps.multisets_scanned == 220;
    ok &= sweeps.singular_triples.len() == 3;
    ok &= sweeps.isotropic_six.is_empty();
    report("04", "SL(3) trivector certification", ok, t, 5.0);
}

#[test]
fn criterion_05_tangent_rank_suite() {
    let t = Instant::now();
    let cfg = Config::default();
    let sp4 = run_suite("sp4", &cfg).unwrap();
    let g2 = run_suite("g2sl3", &cfg).unwrap();
    let sl3 = run_suite("sl3", &cfg).unwrap();
    let sl2 = run_suite("sl2", &cfg).unwrap();
    let mut ok = true;
    for p in dvlab::report::validation_primes(cfg.prime) {
        ok &= case_passes(&sp4, &format!("sp4.rank18.p{p}"));
    }
    ok &= case_passes(&sp4, "sp4.rank18.rational");
    ok &= case_passes(&sp4, "sp4.j_singular");
    ok &= case_passes(&g2, "g2sl3.coordinate_points_rank14");
    ok &= case_passes(&g2, "g2sl3.random_w2_rank14");
    ok &= case_passes(&g2, "g2sl3.adversarial_5dim");
    ok &= case_passes(&sl3, "sl3.km_rank20");
    ok &= case_passes(&sl3, "sl3.kl_rank_below_20");
    ok &= case_passes(&sl3, "sl3.crit2jet");
    ok &= case_passes(&sl2, "sl2.k1_rank18");
    report("05", "tangent ranks at special points", ok, t, 120.0);
}

#[test]
fn criterion_06_sl2_uniqueness() {
    let t = Instant::now();
    let r = run_suite("sl2", &Config::default()).unwrap();
    let ok = case_passes(&r, "sl2.kernel_dim") && case_passes(&r, "sl2.held_out");
    report("06", "SL(2) trivector uniqueness", ok, t, 60.0);
}

#[test]
fn criterion_07_excess_mechanics() {
    let t = Instant::now();
    let r = run_suite("sp4", &Config::default()).unwrap();
    let ok = case_passes(&r, "sp4.excess_iff") && case_passes(&r, "sp4.excess_designed_pairs");
    report("07", "excess projection matches the induced cubic", ok, t, 60.0);
}

#[test]
fn criterion_08_heegner_criterion() {
    let t = Instant::now();
    let got: Vec<i64> = (1..=30).filter(|&e| heegner_nonempty(e)).collect();
    let want: Vec<i64> = (1..=30)
        .filter(|e| [0, 1, 3, 4, 5, 9].contains(&(e % 11)))
        .collect();
    let mut ok = got == want;
    for e in [1, 3, 5, 9, 11, 15] {
        ok &= heegner_nonempty(e);
    }
    ok &= !heegner_nonempty(2) && !heegner_nonempty(0);
    report("08", "Heegner nonemptiness", ok, t, 1.0);
}

#[test]
fn criterion_09_family_identity() {
    let t = Instant::now();
    let mut ok = true;
    for m in 0..=10u64 {
        let e = m * m + m + 3;
        let c = NSClass::new(e, 2, -(2 * m as i64 + 1));
        ok &= c.bbf_square() == BigInt::from(22);
        ok &= c.bbf_div() == BigInt::from(2);
        ok &= movable_classes_22(e).contains(&c);
        ok &= ample_classes_22(e).contains(&c);
    }
    report("09", "the degree family of movable ample classes", ok, t, 1.0);
}

#[test]
fn criterion_10_aux_chern_checks() {
    let t = Instant::now();
    let aux = aux_chern_checks();
    let ok = (aux.gr37_pairings.0 != BigInt::from(0) || aux.gr37_pairings.1 != BigInt::from(0))
        && !aux.gr47_c4.is_zero()
        && aux.gr57_c10 == BigInt::from(0);
    report("10", "auxiliary top-Chern checks", ok, t, 30.0);
}
