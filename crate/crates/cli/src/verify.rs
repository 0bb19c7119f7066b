//! The `verify` subcommand: re-derives every cross-check between the
//! geometric engine, the closed-form formulas, the Casson tables and the
//! gauge group algebra over a caller-chosen range, reporting the first
//! counterexample exactly.

use dehnsurg_core::closed_form::{self, two_q};
use dehnsurg_core::gauge::{
    alpha_beta_letters, solid_torus_spectral_flow, word_to_normal_form, GaugeWord,
    GeneratorLetter, SF_ALPHA, SF_BETA,
};
use dehnsurg_core::surgery::{all_invariants, SurgeryProblem};
use num::bigint::BigInt;
use num::integer::Integer;

pub struct VerifyOptions {
    pub q_set: Vec<u32>,
    pub k_max: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            q_set: vec![3, 5, 7, 9],
            k_max: 4,
        }
    }
}

pub enum VerifyOutcome {
    Pass,
    Mismatch(String),
}

struct XorShift64(u64);

impl XorShift64 {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next() % span) as i64
    }
}

pub fn run(opts: &VerifyOptions) -> VerifyOutcome {
    for &q in &opts.q_set {
        if q < 3 || q % 2 == 0 {
            return VerifyOutcome::Mismatch(format!("q must be odd and >= 3, got {}", q));
        }
    }

    if let Some(m) = group_algebra_suite() {
        return VerifyOutcome::Mismatch(m);
    }
    println!("ok group-algebra: relations, degree, flow constants (1000 random words)");

    if let Some(m) = floor_identity_suite() {
        return VerifyOutcome::Mismatch(m);
    }
    println!("ok floor-identity: exhaustive over q <= 15, k <= 6");

    match engine_suite(opts) {
        Ok(n) => println!(
            "ok engine-vs-closed-form: {} records over q in {:?}, |k| <= {}",
            n, opts.q_set, opts.k_max
        ),
        Err(m) => return VerifyOutcome::Mismatch(m),
    }

    match casson_suite(opts) {
        Ok(()) => {}
        Err(m) => return VerifyOutcome::Mismatch(m),
    }

    VerifyOutcome::Pass
}

fn group_algebra_suite() -> Option<String> {
    let alpha = GaugeWord::new(1, 0, 0);
    let beta = GaugeWord::new(0, 1, 0);
    if alpha.commutator(&beta) != GaugeWord::new(0, 0, -2) {
        return Some(format!(
            "commutator [alpha,beta] = {:?}, expected gamma^-2",
            alpha.commutator(&beta)
        ));
    }
    if 2 * SF_ALPHA + SF_BETA != 2 || 2 * SF_ALPHA + 2 * SF_BETA != 0 {
        return Some(format!(
            "flow constants k_alpha={} k_beta={} violate the gluing equations",
            SF_ALPHA, SF_BETA
        ));
    }
    let mut rng = XorShift64(0x9e3779b97f4a7c15);
    for _ in 0..1000 {
        let (a, b, c) = (rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50));
        let mut letters = alpha_beta_letters(a, b);
        let gamma = if c >= 0 {
            GeneratorLetter::Gamma
        } else {
            GeneratorLetter::GammaInv
        };
        letters.extend(std::iter::repeat_n(gamma, c.unsigned_abs() as usize));
        let word = word_to_normal_form(&letters);
        if word != GaugeWord::new(a, b, c) {
            return Some(format!("normal form of letter word ({}, {}, {}) is {:?}", a, b, c, word));
        }
        if word.degree() != BigInt::from(c - a * b) {
            return Some(format!("deg(a={}, b={}, c={}) != c - ab", a, b, c));
        }
        let ab_letters = alpha_beta_letters(a, b);
        if solid_torus_spectral_flow(&ab_letters) != 2 * (a - b) {
            return Some(format!("solid torus flow of alpha^{} beta^{} != 2(a-b)", a, b));
        }
    }
    None
}

fn floor_identity_suite() -> Option<String> {
    for q in 3..=15i64 {
        for k in 1..=6i64 {
            for ell in 1..=(q - 1) / 2 {
                for i in 1..=k * (q - 2 * ell + 1) {
                    if !closed_form::floor_identities(q, k, ell, i) {
                        return Some(format!(
                            "floor identity fails at (q, k, ell, i) = ({}, {}, {}, {})",
                            q, k, ell, i
                        ));
                    }
                }
            }
        }
    }
    None
}

fn engine_suite(opts: &VerifyOptions) -> Result<usize, String> {
    let mut checked = 0usize;
    for &q in &opts.q_set {
        for k in -opts.k_max..=opts.k_max {
            if k == 0 {
                continue;
            }
            let prob = SurgeryProblem::new(q, k).map_err(|e| e.to_string())?;
            let records = all_invariants(&prob).map_err(|e| e.to_string())?;
            let expected = k.unsigned_abs() * (q as u64 * q as u64 - 1) / 4;
            if records.len() as u64 != expected {
                return Err(format!(
                    "count mismatch at (q, k) = ({}, {}): {} records, expected {}",
                    q,
                    k,
                    records.len(),
                    expected
                ));
            }
            let ka = k.abs();
            for (label, rec) in &records {
                let formula = two_q(q, k, label.ell, label.i as i64).map_err(|e| e.to_string())?;
                if (rec.sf, &rec.cs, &rec.rho) != (formula.sf, &formula.cs, &formula.rho) {
                    return Err(format!(
                        "engine/closed-form mismatch at (q, k, ell, i) = ({}, {}, {}, {}): \
                         engine sf={} cs={} rho={}, formula sf={} cs={} rho={}",
                        q, k, label.ell, label.i, rec.sf, rec.cs, rec.rho,
                        formula.sf, formula.cs, formula.rho
                    ));
                }
                let i = label.i as i64;
                if rec.b != Integer::div_floor(&-i, &ka) {
                    return Err(format!(
                        "b mismatch at (q, k, ell, i) = ({}, {}, {}, {}): b={}",
                        q, k, label.ell, label.i, rec.b
                    ));
                }
                let floor_sum =
                    |hi: i64| -> i64 { (1..=hi).map(|j| Integer::div_floor(&-j, &ka)).sum() };
                let expected_c = if k > 0 { -2 * floor_sum(i - 1) } else { 2 * floor_sum(i) };
                if rec.c != expected_c {
                    return Err(format!(
                        "c mismatch at (q, k, ell, i) = ({}, {}, {}, {}): c={}, expected {}",
                        q, k, label.ell, label.i, rec.c, expected_c
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn casson_suite(opts: &VerifyOptions) -> Result<(), String> {
    for &q in &opts.q_set {
        if closed_form::lambda_prime(q, 0).is_err() {
            println!(
                "skip casson: SU(3) representation counts are not tabulated for q = {}",
                q
            );
            continue;
        }
        for k in -opts.k_max..=opts.k_max {
            let engine = closed_form::lambda_double_prime(q, k).map_err(|e| e.to_string())?;
            let table = closed_form::lambda_double_prime_table(q, k).map_err(|e| e.to_string())?;
            if engine != table {
                return Err(format!(
                    "correction term mismatch at (q, k) = ({}, {}): engine {}, table {}",
                    q, k, engine, table
                ));
            }
            let rec = closed_form::lambda_su3(q, k).map_err(|e| e.to_string())?;
            let table = closed_form::lambda_su3_table(q, k).map_err(|e| e.to_string())?;
            if rec.lambda != table {
                return Err(format!(
                    "Casson invariant mismatch at (q, k) = ({}, {}): engine {}, table {}",
                    q, k, rec.lambda, table
                ));
            }
        }
        println!("ok casson tables: q = {}, |k| <= {}", q, opts.k_max);
    }
    Ok(())
}
