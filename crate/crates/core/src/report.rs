//! Suite runner binding every module to its checkable claims, with
//! deterministic seeded sampling and JSON/CSV/text report rendering.

use crate::dv::{
    self, dv_member, dv_tangent_rank, excess_project, gauss_point, monomial_sweeps,
    quadric_points, sl2_k1_point, sl3_l_space, sl3_m_space, sp4_induced_cubic,
    sp4_j, sp4_pair, x_singular_at,
};
use crate::exterior::{combinations, AltForm};
use crate::field::{Field, Fp, Rat};
use crate::matrix::Matrix;
use crate::periods::{
    ample_classes_22, heegner_nonempty, minimal_norm_table, movable_classes_22, mu, neg11_min, nu,
    pell_fundamental,
};
use crate::schubert::{aux_chern_checks, dv_segre_numbers, grassmannian_degree, SchubertClass};
use crate::subspace::Subspace;
use crate::symw3::{self, apolar_annihilator, mul_dual_w3_sym2, square};
use crate::zoo::{g2sl3_sigma0, random_trivector, sl2_sigma0, sl2_vspaces, sp4_sigma0, FANO_LINES};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub seed: u64,
    pub prime: u64,
    pub samples: usize,
    pub bound: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            prime: 10007,
            samples: 20,
            bound: 120,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An observation with no pinned expectation.
    Recorded,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub paper_anchor: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: Config,
    pub cases: Vec<CaseRecord>,
}

impl SuiteReport {
    fn new(suite: &str, config: &Config) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            config: config.clone(),
            cases: Vec::new(),
        }
    }

    fn push(&mut self, id: &str, anchor: &str, expected: String, actual: String) {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.cases.push(CaseRecord {
            id: id.to_string(),
            paper_anchor: anchor.to_string(),
            expected,
            actual,
            status,
        });
    }

    fn record(&mut self, id: &str, anchor: &str, actual: String) {
        self.cases.push(CaseRecord {
            id: id.to_string(),
            paper_anchor: anchor.to_string(),
            expected: "(recorded)".to_string(),
            actual,
            status: Status::Recorded,
        });
    }

    pub fn failures(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.cases.extend(other.cases);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,paper_anchor,expected,actual,status\n");
        for c in &self.cases {
            let esc = |s: &str| s.replace(',', ";");
            out.push_str(&format!(
                "{},{},{},{},{:?}\n",
                esc(&c.id),
                esc(&c.paper_anchor),
                esc(&c.expected),
                esc(&c.actual),
                c.status
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Recorded => "rec ",
            };
            out.push_str(&format!(
                "[{mark}] {}: expected {} actual {}\n",
                c.id, c.expected, c.actual
            ));
        }
        out.push_str(&format!(
            "{}: {} cases, {} failures\n",
            self.suite,
            self.cases.len(),
            self.failures()
        ));
        out
    }
}

// ---------------------------------------------------------------------------
// reductions mod p
// ---------------------------------------------------------------------------

pub fn form_mod_p(f: &AltForm<Rat>, p: u64) -> Option<AltForm<Fp>> {
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        coeffs.push(c.to_fp(p)?);
    }
    Some(AltForm::new(f.degree, f.ambient_dim, coeffs))
}

pub fn matrix_mod_p(m: &Matrix<Rat>, p: u64) -> Option<Matrix<Fp>> {
    let mut entries = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        for e in m.row(i) {
            entries.push(e.to_fp(p)?);
        }
    }
    Some(Matrix::new(m.rows, m.cols, entries))
}

pub fn subspace_mod_p(s: &Subspace<Rat>, p: u64) -> Option<Subspace<Fp>> {
    // RREF structure survives reduction at primes coprime to every
    // denominator, pivots staying 1.
    let mut rows = Vec::with_capacity(s.dim());
    for i in 0..s.dim() {
        let mut row = Vec::with_capacity(s.ambient_dim());
        for e in s.basis_vector(i) {
            row.push(e.to_fp(p)?);
        }
        rows.push(row);
    }
    let red = Subspace::from_vectors(rows);
    if red.dim() == s.dim() {
        Some(red)
    } else {
        None
    }
}

/// The three primes used to cross-check rank computations; the configured
/// prime leads, the fixed companions guard against a bad choice.
pub fn validation_primes(p: u64) -> [u64; 3] {
    let companions = [20011u64, 30011, 40009];
    let mut out = [p, 0, 0];
    let mut k = 1;
    for c in companions {
        if c != p && k < 3 {
            out[k] = c;
            k += 1;
        }
    }
    out
}

fn rat_sampler(lo: i64, hi: i64) -> impl FnMut(&mut ChaCha8Rng) -> Rat {
    move |rng: &mut ChaCha8Rng| Rat::from_int(rng.gen_range(lo..=hi))
}

fn fp_sampler(p: u64) -> impl FnMut(&mut ChaCha8Rng) -> Fp {
    move |rng: &mut ChaCha8Rng| Fp::new(rng.gen_range(0..p), p)
}

fn nonzero_vec<F: Field>(
    n: usize,
    rng: &mut ChaCha8Rng,
    sample: &mut dyn FnMut(&mut ChaCha8Rng) -> F,
) -> Vec<F> {
    loop {
        let v: Vec<F> = (0..n).map(|_| sample(rng)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

// ---------------------------------------------------------------------------
// table1 / table2 / heegner
// ---------------------------------------------------------------------------

fn opt_pair_str(p: &Option<(BigInt, BigInt)>) -> String {
    match p {
        Some((a, b)) => format!("({a};{b})"),
        None => "-".to_string(),
    }
}

fn classes_str(cs: &[crate::periods::NSClass]) -> String {
    if cs.is_empty() {
        "-".to_string()
    } else {
        cs.iter()
            .map(|c| c.render())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// One row of the movable/nef table for a given half-degree e.
pub fn table1_row(e: u64) -> Vec<String> {
    vec![
        e.to_string(),
        opt_pair_str(&pell_fundamental(e)),
        mu(e).render(),
        opt_pair_str(&neg11_min(e)),
        classes_str(&movable_classes_22(e)),
        nu(e).render(),
        classes_str(&ample_classes_22(e)),
    ]
}

pub fn table1_csv(es: &[u64]) -> String {
    let mut out = String::from("e,a1b1,mu,a2b2,movable,nu,ample\n");
    for &e in es {
        out.push_str(&table1_row(e).join(","));
        out.push('\n');
    }
    out
}

fn run_table1(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("table1", cfg);
    let expected: [(u64, [&str; 6]); 6] = [
        (1, ["-", "1", "(5;3)", "6L-5δ", "2/3", "-"]),
        (3, ["(2;1)", "3/2", "(1;1)", "2L-δ", "3/2", "2L-δ"]),
        (5, ["(9;4)", "20/9", "(3;1)", "2L-3δ;6L-13δ", "2", "2L-3δ"]),
        (9, ["-", "3", "(5;1)", "2L-5δ", "3", "2L-5δ"]),
        (11, ["(10;3)", "33/10", "(33;5)", "10L-33δ", "22/7", "-"]),
        (15, ["(4;1)", "15/4", "(7;1)", "2L-7δ", "15/4", "2L-7δ"]),
    ];
    for (e, exp) in expected {
        let row = table1_row(e);
        let fields = ["a1b1", "mu", "a2b2", "movable", "nu", "ample"];
        for (i, f) in fields.iter().enumerate() {
            r.push(
                &format!("table1.e{e}.{f}"),
                "movable and nef classes of square 22 and divisibility 2",
                exp[i].to_string(),
                row[i + 1].clone(),
            );
        }
    }
    r
}

fn run_table2(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("table2", cfg);
    match minimal_norm_table(cfg.bound) {
        Ok(table) => {
            let expected = [(1u64, 1u64), (2, 15), (3, 9), (4, 5), (5, 3)];
            for (a, e) in expected {
                let row = table.iter().find(|t| t.a == a);
                r.push(
                    &format!("table2.class{a}"),
                    "minimal-norm divisibility-11 vectors per discriminant class",
                    format!("e={e}"),
                    row.map_or("missing".to_string(), |t| format!("e={}", t.e)),
                );
            }
            let pattern: Vec<String> = table
                .iter()
                .map(|t| format!("a={}→e≡{} (mod 11)", t.a, t.e % 11))
                .collect();
            r.record(
                "table2.congruence_pattern",
                "observed class/norm congruences; the search is the oracle",
                pattern.join("; "),
            );
        }
        Err(e) => {
            r.push(
                "table2.search",
                "minimal-norm vector search",
                "complete".to_string(),
                format!("error: {e}"),
            );
        }
    }
    r
}

fn run_heegner(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("heegner", cfg);
    let max_e = 30i64;
    let got: Vec<i64> = (1..=max_e).filter(|&e| heegner_nonempty(e)).collect();
    let residues: Vec<i64> = (1..=max_e)
        .filter(|e| [0, 1, 3, 4, 5, 9].contains(&(e % 11)))
        .collect();
    r.push(
        "heegner.range",
        "nonempty iff e is positive and a square modulo 11",
        format!("{residues:?}"),
        format!("{got:?}"),
    );
    for e in [1i64, 3, 5, 9, 11, 15] {
        r.push(
            &format!("heegner.e{e}"),
            "the divisors carrying Hilbert-square periods",
            "nonempty".to_string(),
            if heegner_nonempty(e) {
                "nonempty"
            } else {
                "empty"
            }
            .to_string(),
        );
    }
    // Theorem-style family: q(2L-(2m+1)d) = 22 at e = m^2+m+3, movable and
    // ample for m = 0..10.
    for m in 0..=10u64 {
        let e = m * m + m + 3;
        let c = crate::periods::NSClass::new(e, 2, -(2 * m as i64 + 1));
        let ok = c.bbf_square() == BigInt::from(22)
            && c.bbf_div() == BigInt::from(2)
            && movable_classes_22(e).contains(&c)
            && ample_classes_22(e).contains(&c);
        r.push(
            &format!("family.m{m}"),
            "the class 2L-(2m+1)δ is always movable and ample at e=m²+m+3",
            "movable+ample, square 22, div 2".to_string(),
            if ok {
                "movable+ample, square 22, div 2".to_string()
            } else {
                "violated".to_string()
            },
        );
    }
    r
}

// ---------------------------------------------------------------------------
// segre / monomials
// ---------------------------------------------------------------------------

fn run_segre(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("segre", cfg);
    let s = dv_segre_numbers();
    let pairs = [
        ("s1^4", &s.s1_4, 1452i64),
        ("s1^2*s2", &s.s1_2_s2, 825),
        ("s1*s3", &s.s1_s3, 330),
        ("s2^2", &s.s2_2, 477),
        ("s4", &s.s4, 105),
    ];
    for (name, got, want) in pairs {
        r.push(
            &format!("segre.{name}"),
            "Segre numbers of the rank-4 tautological quotient on the fourfolds",
            want.to_string(),
            got.to_string(),
        );
    }
    r.push(
        "segre.plucker_degree",
        "the fourfolds are subvarieties of degree 1452",
        "1452".to_string(),
        s.s1_4.to_string(),
    );
    let aux = aux_chern_checks();
    r.push(
        "aux.gr37_top_chern_nonzero",
        "top Chern class of the rank-10 bundle on Gr(3,7) is nonzero",
        "nonzero".to_string(),
        if aux.gr37_pairings.0 != BigInt::from(0) || aux.gr37_pairings.1 != BigInt::from(0) {
            "nonzero".to_string()
        } else {
            "zero".to_string()
        },
    );
    r.record(
        "aux.gr37_pairing_values",
        "pairings of the top Chern class against the codimension-2 basis",
        format!("{} and {}", aux.gr37_pairings.0, aux.gr37_pairings.1),
    );
    r.push(
        "aux.gr47_c4_nonzero",
        "the isotropic-4-space locus is the zero locus of a rank-4 bundle section",
        "nonzero class".to_string(),
        if aux.gr47_c4.is_zero() {
            "zero class".to_string()
        } else {
            "nonzero class".to_string()
        },
    );
    r.push(
        "aux.gr57_c10_integral",
        "a general 3-form on a 7-space has no isotropic 5-space",
        "0".to_string(),
        aux.gr57_c10.to_string(),
    );
    // hook-length degree formula against the Pieri route
    let mut c = SchubertClass::one(6, 10);
    for _ in 0..24 {
        c = c.pieri(1);
    }
    r.push(
        "aux.gr610_degree",
        "Pluecker degree of Gr(6,10), two routes",
        grassmannian_degree(6, 10).to_string(),
        c.integrate().to_string(),
    );
    r
}

fn run_monomials(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("monomials", cfg);
    let s = monomial_sweeps();
    r.push(
        "monomials.singular_count",
        "exactly the tangent spaces of the Veronese among monomial 3-spaces",
        "3 of 120".to_string(),
        format!("{} of 120", s.singular_triples.len()),
    );
    let mut sets = s.singular_triples.clone();
    sets.sort();
    r.push(
        "monomials.singular_sets",
        "the singular monomial 3-spaces are m^2.W3 for the three variables",
        "[[0, 3, 7], [1, 5, 6], [2, 4, 8]]".to_string(),
        format!("{sets:?}"),
    );
    r.push(
        "monomials.criterion",
        "nonzero iff column sums are (3,3,3) and not all three are xyz",
        "220/220".to_string(),
        format!("{}/{}", s.criterion_matches, s.multisets_scanned),
    );
    r.push(
        "monomials.isotropic_six",
        "no monomial 6-space of the 7-monomial span is isotropic",
        "0 of 7".to_string(),
        format!("{} of 7", s.isotropic_six.len()),
    );
    r
}

// ---------------------------------------------------------------------------
// model suites
// ---------------------------------------------------------------------------

fn run_sl3(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("sl3", cfg);
    let sigma = crate::zoo::sl3_sigma0();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x513));

    // support and magnitudes
    let nonzero = sigma.coeffs.iter().filter(|c| !c.is_zero()).count();
    r.push(
        "sl3.support",
        "nine anchored coefficient triples",
        "9".to_string(),
        nonzero.to_string(),
    );
    r.push(
        "sl3.normalization",
        "coefficient at the three cubes is 1",
        "1".to_string(),
        sigma.coeff(&[0, 1, 2]).render(),
    );

    // det^3 oracle on sampled cube triples
    let mut det_ok = 0;
    let trials = cfg.samples.max(50);
    for _ in 0..trials {
        let u = nonzero_vec(3, &mut rng, &mut rat_sampler(-6, 6));
        let v = nonzero_vec(3, &mut rng, &mut rat_sampler(-6, 6));
        let w = nonzero_vec(3, &mut rng, &mut rat_sampler(-6, 6));
        let lhs = sigma.eval3(&symw3::cube(&u), &symw3::cube(&v), &symw3::cube(&w));
        if lhs == crate::zoo::det3(&u, &v, &w) {
            det_ok += 1;
        }
    }
    r.push(
        "sl3.det_cubed",
        "sigma0 on cubes is det^3",
        format!("{trials}/{trials}"),
        format!("{det_ok}/{trials}"),
    );

    // K_M points: rank 20, tangent dimension 4
    let mut m_ok = 0;
    let mut m_tried = 0;
    while m_tried < cfg.samples {
        let a = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let x = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let Ok(m) = sl3_m_space(&a, &x) else {
            continue;
        };
        m_tried += 1;
        if let Ok(t) = dv_tangent_rank(&sigma, &m) {
            if t.rank == 20 && t.tangent_dim == 4 {
                m_ok += 1;
            }
        }
    }
    r.push(
        "sl3.km_rank20",
        "generically reduced along the second component",
        format!("{}/{}", cfg.samples, cfg.samples),
        format!("{m_ok}/{m_tried}"),
    );

    // K_L points: member, rank < 20, the two restriction functionals kill
    // the image of the differential (zero rows), observed rank recorded
    let mut l_ok = 0;
    let mut l_tried = 0;
    let mut observed_ranks = std::collections::BTreeSet::new();
    while l_tried < cfg.samples {
        let x = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let y = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let gx = gauss_point(&x);
        let gy = gauss_point(&y);
        if gx.sum(&gy).dim() != 6 {
            continue;
        }
        l_tried += 1;
        // basis adapted to the two blocks
        let rows: Vec<Vec<Rat>> = (0..3)
            .map(|i| gx.basis_vector(i))
            .chain((0..3).map(|i| gy.basis_vector(i)))
            .collect();
        let w6 = Subspace::from_vectors(rows.clone());
        if w6.dim() != 6 || !dv_member(&sigma, &w6) {
            continue;
        }
        // the coordinate functionals on the adapted spanning set: evaluate
        // the differential against the two all-in-one-block triples
        let diff_rows_vanish = {
            let comp = w6.complement_coords();
            let mut ok = true;
            // recompute differential entries for the triples built from the
            // adapted spanning set (not the RREF basis): both all-gx and
            // all-gy triples must die
            for (block, tri) in [(&rows[0..3], "gx"), (&rows[3..6], "gy")] {
                let _ = tri;
                for a in 0..3 {
                    for &mcol in &comp {
                        let mut em = vec![Rat::zero(); 10];
                        em[mcol] = Rat::one();
                        let args: Vec<&[Rat]> = (0..3)
                            .map(|i| {
                                if i == a {
                                    em.as_slice()
                                } else {
                                    block[i].as_slice()
                                }
                            })
                            .collect();
                        if !sigma.eval(&args).is_zero() {
                            ok = false;
                        }
                    }
                }
            }
            ok
        };
        if let Ok(t) = dv_tangent_rank(&sigma, &w6) {
            observed_ranks.insert(t.rank);
            if t.rank < 20 && t.tangent_dim > 4 && diff_rows_vanish {
                l_ok += 1;
            }
        }
    }
    r.push(
        "sl3.kl_rank_below_20",
        "tangent dimension exceeds 4 along the Gauss-pair component, and the two restriction functionals vanish on the image",
        format!("{}/{}", cfg.samples, cfg.samples),
        format!("{l_ok}/{l_tried}"),
    );
    r.record(
        "sl3.kl_observed_ranks",
        "generic rank along the first component is observed, not asserted",
        format!("{observed_ranks:?}"),
    );

    // membership of random L(a, H) and M(a, x)
    let mut lm_ok = 0;
    let mut lm_tried = 0;
    while lm_tried < cfg.samples {
        let a = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let ka = symw3::linear_form_kernel(&a);
        if ka.dim() != 2 {
            continue;
        }
        // H = span of two random quadrics on the kernel of a
        let q1 = {
            let c: Vec<Rat> = (0..2).map(|_| rat_sampler(-5, 5)(&mut rng)).collect();
            let v: Vec<Rat> = (0..3)
                .map(|i| {
                    ka.basis_vector(0)[i]
                        .mul(&c[0])
                        .add(&ka.basis_vector(1)[i].mul(&c[1]))
                })
                .collect();
            square(&v)
        };
        let q2 = {
            let c: Vec<Rat> = (0..2).map(|_| rat_sampler(-5, 5)(&mut rng)).collect();
            let v: Vec<Rat> = (0..3)
                .map(|i| {
                    ka.basis_vector(0)[i]
                        .mul(&c[0])
                        .add(&ka.basis_vector(1)[i].mul(&c[1]))
                })
                .collect();
            square(&v)
        };
        let h = Subspace::from_vectors(vec![q1, q2]);
        if h.dim() != 2 {
            continue;
        }
        let Ok(l) = sl3_l_space(&a, &h) else {
            continue;
        };
        lm_tried += 1;
        if dv_member(&sigma, &l) {
            lm_ok += 1;
        }
    }
    r.push(
        "sl3.l_membership",
        "the first distinguished family lies in the variety",
        format!("{}/{}", cfg.samples, cfg.samples),
        format!("{lm_ok}/{lm_tried}"),
    );

    // 2-jet criterion at sampled member points
    let mut jet_ok = 0;
    let mut jet_tried = 0;
    while jet_tried < cfg.samples {
        let x = nonzero_vec(3, &mut rng, &mut rat_sampler(-4, 4));
        let y = nonzero_vec(3, &mut rng, &mut rat_sampler(-4, 4));
        let g = gauss_point(&x).sum(&gauss_point(&y));
        if g.dim() != 6 {
            continue;
        }
        let a = nonzero_vec(3, &mut rng, &mut rat_sampler(-4, 4));
        jet_tried += 1;
        let u6_perp = apolar_annihilator(&g);
        // a . Sym^2 W3-dual, 6-dimensional
        let gens: Vec<Vec<Rat>> = (0..6)
            .map(|nu| {
                let mut psi = vec![Rat::zero(); 6];
                psi[nu] = Rat::one();
                mul_dual_w3_sym2(&a, &psi)
            })
            .collect();
        let a_span = Subspace::from_vectors(gens);
        if a_span.intersect(&u6_perp).dim() > 0 {
            jet_ok += 1;
        }
    }
    r.push(
        "sl3.crit2jet",
        "(a Sym^2 W3-dual) meets the orthogonal of every member 6-space",
        format!("{}/{}", cfg.samples, cfg.samples),
        format!("{jet_ok}/{jet_tried}"),
    );
    r
}

fn run_sp4(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("sp4", cfg);
    let model = sp4_sigma0();
    let primes = validation_primes(cfg.prime);
    let pair_target = cfg.samples.max(50);

    // rank-18 members at sampled pairs, at three primes
    for &p in &primes {
        let Some(sigma_p) = form_mod_p(&model.sigma, p) else {
            r.push(
                &format!("sp4.rank18.p{p}"),
                "smooth of dimension 6",
                "reducible model".to_string(),
                "prime divides a denominator".to_string(),
            );
            continue;
        };
        let gram_p = matrix_mod_p(&model.gram, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ p);
        let x0: Vec<Fp> = {
            let mut v = vec![Fp::new(0, p); 5];
            v[0] = Fp::new(1, p);
            v
        };
        let mut sampler = fp_sampler(p);
        let mut ok = 0;
        let mut tried = 0;
        while tried < pair_target {
            let pts = quadric_points(&gram_p, &x0, 2, &mut rng, &mut sampler);
            let Ok(w6) = sp4_pair(&gram_p, &pts[0], &pts[1]) else {
                continue;
            };
            tried += 1;
            if !dv_member(&sigma_p, &w6) {
                continue;
            }
            if let Ok(t) = dv_tangent_rank(&sigma_p, &w6) {
                if t.rank == 18 && t.tangent_dim == 6 {
                    ok += 1;
                }
            }
        }
        r.push(
            &format!("sp4.rank18.p{p}"),
            "the incidence model is smooth of dimension 6",
            format!("{pair_target}/{pair_target}"),
            format!("{ok}/{tried}"),
        );
    }

    // the image of the quadric embedding lies in the singular locus
    {
        let p = primes[0];
        let sigma_p = form_mod_p(&model.sigma, p).unwrap();
        let gram_p = matrix_mod_p(&model.gram, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xace);
        let mut sampler = fp_sampler(p);
        let x0: Vec<Fp> = {
            let mut v = vec![Fp::new(0, p); 5];
            v[0] = Fp::new(1, p);
            v
        };
        let pts = quadric_points(&gram_p, &x0, cfg.samples, &mut rng, &mut sampler);
        let mut ok = 0;
        for x in &pts {
            if let Ok(j) = sp4_j(&gram_p, x) {
                if x_singular_at(&sigma_p, &j) {
                    ok += 1;
                }
            }
        }
        r.push(
            "sp4.j_singular",
            "the embedded quadric lies in the singular locus of the hypersurface",
            format!("{}/{}", pts.len(), pts.len()),
            format!("{ok}/{}", pts.len()),
        );
    }

    // block-restriction functionals: at a pair point the differential's
    // image dies on both all-in-one-block triples
    {
        let p = primes[0];
        let sigma_p = form_mod_p(&model.sigma, p).unwrap();
        let gram_p = matrix_mod_p(&model.gram, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xb10);
        let mut sampler = fp_sampler(p);
        let x0: Vec<Fp> = {
            let mut v = vec![Fp::new(0, p); 5];
            v[0] = Fp::new(1, p);
            v
        };
        let mut ok = 0;
        let mut tried = 0;
        while tried < 5 {
            let pts = quadric_points(&gram_p, &x0, 2, &mut rng, &mut sampler);
            let (Ok(jx), Ok(jy)) = (sp4_j(&gram_p, &pts[0]), sp4_j(&gram_p, &pts[1])) else {
                continue;
            };
            let w6 = jx.sum(&jy);
            if w6.dim() != 6 || !dv_member(&sigma_p, &w6) {
                continue;
            }
            tried += 1;
            let comp = w6.complement_coords();
            let mut vanish = true;
            for block in [&jx, &jy] {
                let rows: Vec<Vec<Fp>> = (0..3).map(|i| block.basis_vector(i)).collect();
                for a in 0..3 {
                    for &m in &comp {
                        let mut em = vec![Fp::new(0, p); 10];
                        em[m] = Fp::new(1, p);
                        let args: Vec<&[Fp]> = (0..3)
                            .map(|i| if i == a { em.as_slice() } else { rows[i].as_slice() })
                            .collect();
                        if !sigma_p.eval(&args).is_zero() {
                            vanish = false;
                        }
                    }
                }
            }
            if vanish {
                ok += 1;
            }
        }
        r.push(
            "sp4.block_functionals",
            "the two block-restriction functionals vanish on the image of the differential",
            "5/5".to_string(),
            format!("{ok}/{tried}"),
        );
    }

    // rational sanity points
    {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xbee);
        let x0: Vec<Rat> = {
            let mut v = vec![Rat::zero(); 5];
            v[0] = Rat::one();
            v
        };
        let mut sampler = rat_sampler(-9, 9);
        let mut ok = 0;
        let mut tried = 0;
        while tried < 5 {
            let pts = quadric_points(&model.gram, &x0, 2, &mut rng, &mut sampler);
            let Ok(w6) = sp4_pair(&model.gram, &pts[0], &pts[1]) else {
                continue;
            };
            tried += 1;
            if let Ok(t) = dv_tangent_rank(&model.sigma, &w6) {
                if t.rank == 18 {
                    ok += 1;
                }
            }
        }
        r.push(
            "sp4.rank18.rational",
            "rank 18 holds over the rationals as well",
            "5/5".to_string(),
            format!("{ok}/{tried}"),
        );
    }

    // excess mechanics: projection vanishes iff the induced cubic vanishes
    // at both points of the pair
    {
        let p = primes[0];
        let sigma_p = form_mod_p(&model.sigma, p).unwrap();
        let gram_p = matrix_mod_p(&model.gram, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xfee);
        let sigma_prime = form_mod_p(&random_trivector(cfg.seed.wrapping_add(17)), p).unwrap();
        let mut sampler = fp_sampler(p);
        let x0: Vec<Fp> = {
            let mut v = vec![Fp::new(0, p); 5];
            v[0] = Fp::new(1, p);
            v
        };
        // designed points: cubic zeros on the quadric
        let designed = dv::sp4_cubic_zero_points(&gram_p, &sigma_prime, &x0, 12, &mut rng);
        let mut consistent = 0;
        let mut designed_pairs = 0;
        let mut total = 0;
        let mut idx = 0;
        while total < 50 {
            // mix: designed-designed, designed-random, random-random
            let (x, y) = if total < 10 && idx + 1 < designed.len() {
                let pair = (designed[idx].clone(), designed[idx + 1].clone());
                idx += 1;
                pair
            } else if total < 20 && !designed.is_empty() {
                let d = designed[total % designed.len()].clone();
                let rp = quadric_points(&gram_p, &x0, 1, &mut rng, &mut sampler);
                (d, rp[0].clone())
            } else {
                let rp = quadric_points(&gram_p, &x0, 2, &mut rng, &mut sampler);
                (rp[0].clone(), rp[1].clone())
            };
            let Ok(w6) = sp4_pair(&gram_p, &x, &y) else {
                continue;
            };
            let Ok(t) = dv_tangent_rank(&sigma_p, &w6) else {
                continue;
            };
            total += 1;
            let proj = excess_project(&t.excess, &sigma_prime);
            let proj_zero = proj.iter().all(|c| c.is_zero());
            let cx = sp4_induced_cubic(&gram_p, &sigma_prime, &x).unwrap();
            let cy = sp4_induced_cubic(&gram_p, &sigma_prime, &y).unwrap();
            let both_zero = cx.is_zero() && cy.is_zero();
            if both_zero {
                designed_pairs += 1;
            }
            if proj_zero == both_zero {
                consistent += 1;
            }
        }
        r.push(
            "sp4.excess_iff",
            "the central fiber of the degeneration is cut out by the projected deformation",
            "50/50".to_string(),
            format!("{consistent}/{total}"),
        );
        r.push(
            "sp4.excess_designed_pairs",
            "pairs designed to vanish",
            ">=10".to_string(),
            if designed_pairs >= 10 {
                ">=10".to_string()
            } else {
                format!("{designed_pairs}")
            },
        );
    }
    r
}

fn run_g2sl3(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("g2sl3", cfg);
    let model = g2sl3_sigma0();
    let sigma = &model.sigma;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x625);

    // all 21 coordinate W4 + W2 points
    let coordinate_w2s: Vec<Subspace<Rat>> = combinations(3, 2)
        .into_iter()
        .map(|pair| {
            let gens: Vec<Vec<Rat>> = pair
                .iter()
                .map(|&i| {
                    let mut v = vec![Rat::zero(); 3];
                    v[i] = Rat::one();
                    v
                })
                .collect();
            Subspace::from_vectors(gens)
        })
        .collect();
    let mut ok = 0;
    for line in FANO_LINES.iter() {
        let comp: Vec<usize> = (0..7).filter(|i| !line.contains(i)).collect();
        for w2 in &coordinate_w2s {
            let w6 = dv::g2sl3_block_point(&comp, w2, &Rat::one());
            if dv_member(sigma, &w6) {
                if let Ok(t) = dv_tangent_rank(sigma, &w6) {
                    if t.rank == 14 && t.tangent_dim == 10 {
                        ok += 1;
                    }
                }
            }
        }
    }
    r.push(
        "g2sl3.coordinate_points_rank14",
        "smooth of dimension 10, a product of the two factors",
        "21/21".to_string(),
        format!("{ok}/21"),
    );

    // 20 random W2
    let mut rnd_ok = 0;
    let mut tried = 0;
    while tried < cfg.samples.max(20) {
        let line = &FANO_LINES[rng.gen_range(0..7)];
        let comp: Vec<usize> = (0..7).filter(|i| !line.contains(i)).collect();
        let g1 = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let g2 = nonzero_vec(3, &mut rng, &mut rat_sampler(-5, 5));
        let w2 = Subspace::from_spanning(&Matrix::from_rows(vec![g1, g2]));
        if w2.dim() != 2 {
            continue;
        }
        tried += 1;
        let w6 = dv::g2sl3_block_point(&comp, &w2, &Rat::one());
        if dv_member(sigma, &w6) {
            if let Ok(t) = dv_tangent_rank(sigma, &w6) {
                if t.rank == 14 {
                    rnd_ok += 1;
                }
            }
        }
    }
    r.push(
        "g2sl3.random_w2_rank14",
        "rank 14 along the whole product",
        format!("{tried}/{tried}"),
        format!("{rnd_ok}/{tried}"),
    );

    // adversarial: a 5-dimensional projection to the 7-space must fail
    let mut adv_fail = 0;
    for _ in 0..cfg.samples.max(20) {
        let mut gens: Vec<Vec<Rat>> = (0..5)
            .map(|_| {
                let mut v = vec![Rat::zero(); 10];
                for c in v.iter_mut().take(7) {
                    *c = rat_sampler(-5, 5)(&mut rng);
                }
                v
            })
            .collect();
        let mut w3v = vec![Rat::zero(); 10];
        w3v[7 + rng.gen_range(0..3)] = Rat::one();
        gens.push(w3v);
        let w6 = Subspace::from_spanning(&Matrix::from_rows(gens));
        if w6.dim() != 6 {
            continue;
        }
        if !dv_member(sigma, &w6) {
            adv_fail += 1;
        }
    }
    r.push(
        "g2sl3.adversarial_5dim",
        "no member has a 5-dimensional component in the 7-space",
        format!("{}/{}", cfg.samples.max(20), cfg.samples.max(20)),
        format!("{adv_fail}/{}", cfg.samples.max(20)),
    );
    r
}

fn run_sl2(cfg: &Config) -> SuiteReport {
    let mut r = SuiteReport::new("sl2", cfg);
    let model = sl2_sigma0();
    r.push(
        "sl2.kernel_dim",
        "a unique trivector satisfies the incidence conditions",
        "1".to_string(),
        model.kernel_dim.to_string(),
    );

    // held-out points: vanishing conditions and nonzero restriction
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x512);
    let mut held_ok = 0;
    let mut held = 0;
    while held < 10 {
        let x = nonzero_vec(5, &mut rng, &mut rat_sampler(-7, 7));
        if model.solve_points.contains(&x) {
            continue;
        }
        held += 1;
        let (v4, v7) = sl2_vspaces(&model.w3, &x);
        let mut all_zero = true;
        for a in 0..4 {
            let va = v4.basis_vector(a);
            for bc in combinations(7, 2) {
                if !model
                    .sigma
                    .eval3(&va, &v7.basis_vector(bc[0]), &v7.basis_vector(bc[1]))
                    .is_zero()
                {
                    all_zero = false;
                }
            }
        }
        let nonzero_restriction = !model.sigma.restrict(&v7).is_zero();
        if all_zero && nonzero_restriction {
            held_ok += 1;
        }
    }
    r.push(
        "sl2.held_out",
        "the defining vanishing holds at fresh points, with nonzero restriction",
        "10/10".to_string(),
        format!("{held_ok}/{held}"),
    );

    // K1 points: members of rank 18; and W6 meets every x ^ V5
    let target = cfg.samples.max(30);
    let mut k1_ok = 0;
    let mut k1_tried = 0;
    let mut meets_ok = 0;
    let mut meets_tried = 0;
    while k1_tried < target {
        let x = nonzero_vec(5, &mut rng, &mut rat_sampler(-5, 5));
        let (_, v7) = sl2_vspaces(&model.w3, &x);
        let lift0: Vec<Rat> = {
            let c: Vec<Rat> = (0..7).map(|_| rat_sampler(-3, 3)(&mut rng)).collect();
            (0..10)
                .map(|i| {
                    (0..7).fold(Rat::zero(), |acc, k| {
                        acc.add(&c[k].mul(&v7.basis_vector(k)[i]))
                    })
                })
                .collect()
        };
        let lift1: Vec<Rat> = {
            let c: Vec<Rat> = (0..7).map(|_| rat_sampler(-3, 3)(&mut rng)).collect();
            (0..10)
                .map(|i| {
                    (0..7).fold(Rat::zero(), |acc, k| {
                        acc.add(&c[k].mul(&v7.basis_vector(k)[i]))
                    })
                })
                .collect()
        };
        let Ok(w6) = sl2_k1_point(&model.w3, &x, &[lift0, lift1]) else {
            continue;
        };
        k1_tried += 1;
        if dv_member(&model.sigma, &w6) {
            if let Ok(t) = dv_tangent_rank(&model.sigma, &w6) {
                if t.rank == 18 && t.tangent_dim == 6 {
                    k1_ok += 1;
                }
            }
        }
        // the member must meet x ^ V5 for every direction y
        if meets_tried < 10 {
            meets_tried += 1;
            let y = nonzero_vec(5, &mut rng, &mut rat_sampler(-5, 5));
            let (v4y, _) = sl2_vspaces(&model.w3, &y);
            if w6.intersect(&v4y).dim() >= 1 {
                meets_ok += 1;
            }
        }
    }
    r.push(
        "sl2.k1_rank18",
        "the incidence component is smooth of dimension 6 along its open part",
        format!("{target}/{target}"),
        format!("{k1_ok}/{k1_tried}"),
    );
    r.push(
        "sl2.meets_v4",
        "every member 6-space meets every x ^ V5",
        format!("{meets_tried}/{meets_tried}"),
        format!("{meets_ok}/{meets_tried}"),
    );

    // threefold points over F_p: U3 singular; pairs are members
    let p = cfg.prime;
    if let (Some(sigma_p), Some(w3_p)) = (form_mod_p(&model.sigma, p), subspace_mod_p(&model.w3, p))
    {
        let mut sampler = fp_sampler(p);
        let pts = dv::fano3fold_points(&w3_p, cfg.samples.max(10), &mut rng, &mut sampler);
        let mut sing_ok = 0;
        for pt in &pts {
            if x_singular_at(&sigma_p, &pt.u3) {
                sing_ok += 1;
            }
        }
        r.push(
            "sl2.x_singular",
            "the threefold sits inside the singular locus of the hypersurface",
            format!("{}/{}", pts.len(), pts.len()),
            format!("{sing_ok}/{}", pts.len()),
        );
        let mut pair_ok = 0;
        let mut pair_tried = 0;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if pair_tried >= cfg.samples {
                    break;
                }
                let s = pts[i].u3.sum(&pts[j].u3);
                if s.dim() != 6 {
                    continue;
                }
                pair_tried += 1;
                if dv_member(&sigma_p, &s) {
                    pair_ok += 1;
                }
            }
        }
        r.push(
            "sl2.pair_membership",
            "general pairs of threefold points span members",
            format!("{pair_tried}/{pair_tried}"),
            format!("{pair_ok}/{pair_tried}"),
        );
    }
    r
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

pub const SUITES: [&str; 10] = [
    "table1",
    "table2",
    "heegner",
    "sl3",
    "sp4",
    "sl2",
    "g2sl3",
    "segre",
    "monomials",
    "all",
];

pub fn run_suite(name: &str, cfg: &Config) -> Result<SuiteReport, String> {
    if cfg.prime < 5 || !is_prime(cfg.prime) {
        return Err(format!("invalid prime {}", cfg.prime));
    }
    match name {
        "table1" => Ok(run_table1(cfg)),
        "table2" => Ok(run_table2(cfg)),
        "heegner" => Ok(run_heegner(cfg)),
        "segre" => Ok(run_segre(cfg)),
        "monomials" => Ok(run_monomials(cfg)),
        "sl3" => Ok(run_sl3(cfg)),
        "sp4" => Ok(run_sp4(cfg)),
        "g2sl3" => Ok(run_g2sl3(cfg)),
        "sl2" => Ok(run_sl2(cfg)),
        "all" => {
            let mut r = SuiteReport::new("all", cfg);
            for s in [
                "table1",
                "table2",
                "heegner",
                "segre",
                "monomials",
                "sl3",
                "sp4",
                "g2sl3",
                "sl2",
            ] {
                r.merge(run_suite(s, cfg)?);
            }
            Ok(r)
        }
        other => Err(format!("unknown suite '{other}'")),
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_csv_is_deterministic_and_exact() {
        let csv = table1_csv(&[1, 3, 5, 9, 11, 15]);
        let expected = "\
e,a1b1,mu,a2b2,movable,nu,ample
1,-,1,(5;3),6L-5δ,2/3,-
3,(2;1),3/2,(1;1),2L-δ,3/2,2L-δ
5,(9;4),20/9,(3;1),2L-3δ;6L-13δ,2,2L-3δ
9,-,3,(5;1),2L-5δ,3,2L-5δ
11,(10;3),33/10,(33;5),10L-33δ,22/7,-
15,(4;1),15/4,(7;1),2L-7δ,15/4,2L-7δ
";
        assert_eq!(csv, expected);
        assert_eq!(csv, table1_csv(&[1, 3, 5, 9, 11, 15]));
    }

    #[test]
    fn unknown_suite_is_a_config_error() {
        assert!(run_suite("nope", &Config::default()).is_err());
        let bad = Config {
            prime: 10,
            ..Config::default()
        };
        assert!(run_suite("table1", &bad).is_err());
    }

    #[test]
    fn quick_suites_have_no_failures() {
        let cfg = Config::default();
        for s in ["table1", "table2", "heegner", "monomials"] {
            let r = run_suite(s, &cfg).unwrap();
            assert_eq!(r.failures(), 0, "suite {s}:\n{}", r.to_text());
        }
    }

    #[test]
    fn reports_render_all_formats() {
        let r = run_suite("heegner", &Config::default()).unwrap();
        assert!(r.to_json().contains("heegner"));
        assert!(r.to_csv().contains("status"));
        assert!(r.to_text().contains("cases"));
        // the case sets agree between JSON and CSV renderings
        let json_cases = r.cases.len();
        assert_eq!(r.to_csv().lines().count(), json_cases + 1);
    }
}
