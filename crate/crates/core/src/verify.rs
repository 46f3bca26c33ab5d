//! Identity checker.
//!
//! Every identity the crate relies on is registered as a named check. A check
//! expands into instances over an inclusive `(k, n)` grid and compares two
//! exactly computed sides; the report keeps both sides as strings so a
//! failure can be reproduced from the report alone.
//!
//! Checks run in parallel, but the report is always sorted by check name and
//! then by parameters, so output depends only on the grid.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write};
use std::str::FromStr;
use std::sync::LazyLock;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::faulhaber::{
    fau5_check, faulhaber_b, faulhaber_c, faulhaber_d, horizontal_recurrence_check,
    reconstruct_power_sum, CRoute, FaulhaberCoeffs,
};
use crate::numeric::{
    binomial, factorial, frac, pow2, rat, sign_pow, Integer, Polynomial, Rational,
};
use crate::power_sums::{
    bernoulli_even_from_r, bernoulli_numbers, bernoulli_polynomial, bernoulli_recurrence,
    bernoulli_unit_identity, brute, f_polynomial, f_sum, g_divisor, g_polynomial, merca_t_even,
    odd_bernoulli_identity_polynomial, omega_even, q_polynomial, s_even_knuth, s_even_scaled,
    s_odd_knuth, s_odd_scaled_f, s_odd_scaled_q, s_recursive, s_via_bernoulli, t_even,
    PowerSumKind,
};
use crate::triangles::{
    legendre_stirling_first, lower_u_transform, r_diagonal, r_entry, r_via_partitions, salie,
    triangle_rows, u_central_first, u_central_second, upper_u_transform, Family,
};

/// Seed for the only randomized check, the central factorial inversion.
pub const INVERSION_SEED: u64 = 0x05ee_da30_4330;

pub const DEFAULT_MAX_K: usize = 8;
pub const DEFAULT_MAX_N: u64 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Appendix,
    Faulhaber,
    Bernoulli,
    Triangles,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Appendix => "appendix",
            Suite::Faulhaber => "faulhaber",
            Suite::Bernoulli => "bernoulli",
            Suite::Triangles => "triangles",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Core,
            Suite::Appendix,
            Suite::Faulhaber,
            Suite::Bernoulli,
            Suite::Triangles,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What to run: a whole suite or one named check, over inclusive bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub suite: Suite,
    /// Restrict to a single check by name.
    pub check: Option<String>,
    pub max_k: usize,
    pub max_n: u64,
}

impl CheckSpec {
    pub fn suite(suite: Suite, max_k: usize, max_n: u64) -> Self {
        Self {
            suite,
            check: None,
            max_k,
            max_n,
        }
    }

    pub fn single(name: &str, max_k: usize, max_n: u64) -> Self {
        Self {
            suite: Suite::All,
            check: Some(name.to_string()),
            max_k,
            max_n,
        }
    }
}

impl Default for CheckSpec {
    fn default() -> Self {
        Self::suite(Suite::All, DEFAULT_MAX_K, DEFAULT_MAX_N)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Params,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_k: usize,
    pub max_n: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-check summary followed by every failing instance.
    pub fn to_table(&self) -> String {
        let mut per_check: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = per_check.entry(&c.name).or_default();
            e.0 += 1;
            if c.status == Status::Fail {
                e.1 += 1;
            }
        }
        let width = per_check.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        writeln!(
            out,
            "suite {} (max_k={}, max_n={})",
            self.suite, self.max_k, self.max_n
        )
        .unwrap();
        writeln!(
            out,
            "{:<width$}  {:>9}  {:>6}  status",
            "check", "instances", "failed"
        )
        .unwrap();
        for (name, (total, failed)) in &per_check {
            let status = if *failed == 0 { "pass" } else { "FAIL" };
            writeln!(out, "{name:<width$}  {total:>9}  {failed:>6}  {status}").unwrap();
        }
        for f in self.failures() {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(
                out,
                "FAIL {} [{}]: lhs={} rhs={}",
                f.name,
                params.join(" "),
                f.lhs,
                f.rhs
            )
            .unwrap();
        }
        writeln!(out, "passed={} failed={}", self.passed, self.failed).unwrap();
        out
    }
}

pub struct Bounds {
    pub max_k: usize,
    pub max_n: u64,
}

/// One outcome before the engine stamps the check name on it.
struct Instance {
    params: Params,
    pass: bool,
    lhs: String,
    rhs: String,
}

#[derive(Default)]
struct Recorder {
    items: Vec<Instance>,
}

impl Recorder {
    fn check<T: PartialEq + Display>(
        &mut self,
        params: &[(&str, i64)],
        lhs: Result<T>,
        rhs: Result<T>,
    ) {
        let show = |r: &Result<T>| match r {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let pass = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        self.items.push(Instance {
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            pass,
            lhs: show(&lhs),
            rhs: show(&rhs),
        });
    }

    fn eq<T: PartialEq + Display>(&mut self, params: &[(&str, i64)], lhs: T, rhs: T) {
        self.check(params, Ok(lhs), Ok(rhs));
    }
}

type Runner = fn(&Bounds, &mut Recorder);

/// A registered identity.
pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    /// The identity being checked, written out.
    pub anchor: &'static str,
    run: Runner,
}

/// Registry size. The registry holds one check per documented identity of
/// the triangles, power-sum and Faulhaber modules (method-agreement and
/// reconstruction identities are split per method), plus table/display
/// snapshots; adding or removing an identity must update this number.
pub const REGISTRY_SIZE: usize = 50;

static REGISTRY: LazyLock<Vec<Check>> = LazyLock::new(|| {
    let checks = build_registry();
    assert_eq!(checks.len(), REGISTRY_SIZE, "check registry size drifted");
    checks
});

/// Every registered check, in name order.
pub fn registry() -> &'static [Check] {
    &REGISTRY
}

/// `(name, suite, anchor)` for every check, in name order.
pub fn list_checks() -> Vec<(&'static str, Suite, &'static str)> {
    registry()
        .iter()
        .map(|c| (c.name, c.suite, c.anchor))
        .collect()
}

pub fn run_suite(spec: &CheckSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let selected: Vec<&Check> = match &spec.check {
        Some(name) => vec![registry()
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Usage(format!("unknown check {name:?}")))?],
        None => registry()
            .iter()
            .filter(|c| spec.suite.includes(c.suite))
            .collect(),
    };
    let bounds = Bounds {
        max_k: spec.max_k,
        max_n: spec.max_n,
    };
    let mut checks: Vec<CheckResult> = selected
        .par_iter()
        .flat_map_iter(|check| {
            let mut rec = Recorder::default();
            (check.run)(&bounds, &mut rec);
            rec.items.into_iter().map(move |i| CheckResult {
                name: check.name.to_string(),
                params: i.params,
                status: if i.pass { Status::Pass } else { Status::Fail },
                lhs: i.lhs,
                rhs: i.rhs,
            })
        })
        .collect();
    checks.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    let suite = match &spec.check {
        Some(name) => name.clone(),
        None => spec.suite.name().to_string(),
    };
    Ok(VerificationReport {
        suite,
        max_k: spec.max_k,
        max_n: spec.max_n,
        passed: checks.len() - failed,
        failed,
        checks,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

fn ki(k: usize) -> i64 {
    k as i64
}

fn ni(n: u64) -> i64 {
    n as i64
}

/// Product of the consecutive integers `lo..=hi`; 1 when empty.
fn consecutive_product(lo: i64, hi: i64) -> Integer {
    (lo..=hi).fold(Integer::one(), |acc, t| acc * t)
}

fn kronecker(a: usize, b: usize) -> Integer {
    if a == b {
        Integer::one()
    } else {
        Integer::zero()
    }
}

fn show_seq(v: &[Integer]) -> String {
    let items: Vec<String> = v.iter().map(Integer::to_string).collect();
    format!("[{}]", items.join(","))
}

fn build_registry() -> Vec<Check> {
    let mut v = vec![
        // triangles
        Check { name: "table1_values", suite: Suite::Triangles, anchor: "R(k,m) rows 0..6 equal the published triangle", run: table1_values },
        Check { name: "table2_values", suite: Suite::Triangles, anchor: "Ps_m^(r) rows 0..6 equal the published triangle", run: table2_values },
        Check { name: "r_u_relation", suite: Suite::Triangles, anchor: "2 R(k,m) = (2m)! U(k,m)", run: r_u_relation },
        Check { name: "partitions_vs_r", suite: Suite::Triangles, anchor: "R(k,m) = 2^(2k+m-1) m! sum (2k)!/(b_1!...b_k!) prod (1/(4^r (2r)!))^b_r", run: partitions_vs_r },
        Check { name: "orthogonality", suite: Suite::Triangles, anchor: "sum_m u(k,m) U(m,i) = sum_m U(k,m) u(m,i) = delta_(k,i)", run: orthogonality },
        Check { name: "inversion_roundtrip", suite: Suite::Triangles, anchor: "a_k = sum u(k,m) b_m <=> b_k = sum U(k,m) a_m", run: inversion_roundtrip },
        Check { name: "diagonal_closed_forms", suite: Suite::Triangles, anchor: "R(k,k-s) closed forms for s = 0..4", run: diagonal_closed_forms },
        Check { name: "u_form_recurrence", suite: Suite::Triangles, anchor: "sum_m (-1)^m ((m-1)!)^2 U(k,m) = 0, k >= 2", run: u_form_recurrence },
        Check { name: "salie_vien2", suite: Suite::Triangles, anchor: "Omega_2k(n) = 1/2 sum_r s(k,r) (n(n+1))^r", run: salie_vien2 },
        Check { name: "u_first_generating_function", suite: Suite::Triangles, anchor: "sum_m u(k,m) x^m = x (x-1^2) ... (x-(k-1)^2)", run: u_first_generating_function },
        Check { name: "ps_first_column", suite: Suite::Triangles, anchor: "Ps_m^(1) = (-1)^(m-1) m! (m-1)!", run: ps_first_column },
        // power sums
        Check { name: "theorem1_vs_brute", suite: Suite::Core, anchor: "2^(2k) S_2k(n) = sum_m R(k,m) C(2n+m+1, 2m+1)", run: theorem1_vs_brute },
        Check { name: "knuth_even_vs_brute", suite: Suite::Core, anchor: "S_2k(n) = sum_m R(k,m) (2n+1)/(2m+1) C(n+m, 2m)", run: knuth_even_vs_brute },
        Check { name: "knuth_odd_vs_brute", suite: Suite::Core, anchor: "S_(2k-1)(n) = sum_m R(k,m)/m C(n+m, 2m)", run: knuth_odd_vs_brute },
        Check { name: "t_even_vs_brute", suite: Suite::Core, anchor: "T_2k(n) = sum_m R(k,m) C(2n+m, 2m+1)", run: t_even_vs_brute },
        Check { name: "omega_even_vs_brute", suite: Suite::Core, anchor: "Omega_2k(n) = sum_m R(k,m) C(n+m, 2m)", run: omega_even_vs_brute },
        Check { name: "q_form_vs_brute", suite: Suite::Core, anchor: "2^(2k-1) S_(2k-1)(n) = sum_m Q_(k,m)(n) C(n+m, 2m-1)", run: q_form_vs_brute },
        Check { name: "f_form_vs_brute", suite: Suite::Core, anchor: "2^(2k-1) S_(2k-1)(n) = sum_m R(k,m) F_m(n)/m", run: f_form_vs_brute },
        Check { name: "bernoulli_formula_vs_brute", suite: Suite::Core, anchor: "S_k(n) = n^(k+1)/(k+1) + n^k/2 - 1/(k+1) sum_j sum_m (-1)^m m!(m-1)!/(2m+1)! C(k+1,2j) R(j,m) n^(k+1-2j)", run: bernoulli_formula_vs_brute },
        Check { name: "recursive_vs_brute", suite: Suite::Core, anchor: "S_k(n) = (n+1) S_(k-1)(n) - sum_i S_(k-1)(i)", run: recursive_vs_brute },
        Check { name: "q_parity", suite: Suite::Core, anchor: "Q_(k,m) is odd of degree 2k-2m+1", run: q_parity },
        Check { name: "q5_displayed", suite: Suite::Core, anchor: "Q_(5,1..5) equal the published polynomials", run: q5_displayed },
        Check { name: "f_matches_sum", suite: Suite::Core, anchor: "F_m(n) = sum_i C(2i+m-1, 2m-1)", run: f_matches_sum },
        Check { name: "fg_factorization", suite: Suite::Core, anchor: "F_m(n) = G_m(n) C(n+h, 2h), h = floor((m+1)/2)", run: fg_factorization },
        Check { name: "g_displayed", suite: Suite::Core, anchor: "F_1..F_7 equal the published factored forms", run: g_displayed },
        Check { name: "kind_cross_relations", suite: Suite::Core, anchor: "T_k(n) = S_k(2n) - 2^k S_k(n); Omega_k(2n) = S_k(2n) - 2T_k(n); Omega_k(2n-1) = 2T_k(n) - S_k(2n-1)", run: kind_cross_relations },
        Check { name: "knuth_iff_pair", suite: Suite::Core, anchor: "S_2k/(2n+1) = sum a_m C(n+m,2m) and S_(2k-1) = sum (2m+1)/m a_m C(n+m,2m), a_m = R(k,m)/(2m+1)", run: knuth_iff_pair },
        // bernoulli
        Check { name: "bernoulli_r_vs_recurrence", suite: Suite::Bernoulli, anchor: "B_2k = sum_m (-1)^(m-1) m!(m-1)!/(2m+1)! R(k,m)", run: bernoulli_r_vs_recurrence },
        Check { name: "bernoulli_spot_values", suite: Suite::Bernoulli, anchor: "B_2 = 1/6, B_4 = -1/30, B_6 = 1/42", run: bernoulli_spot_values },
        Check { name: "bernoulli_odd_vanish", suite: Suite::Bernoulli, anchor: "B_(2k+1) = 0, k >= 1", run: bernoulli_odd_vanish },
        Check { name: "merca_identity", suite: Suite::Bernoulli, anchor: "T_2k(n) = 2^(2k)/(2k+1) B_(2k+1)(n+1/2)", run: merca_identity },
        Check { name: "odd_bernoulli_identity", suite: Suite::Bernoulli, anchor: "B_(2k+1)(x) = (2k+1)/2^(2k) sum_m R(k,m) C(2x+m-1, 2m+1)", run: odd_bernoulli_identity },
        Check { name: "bernoulli_unit_identity", suite: Suite::Bernoulli, anchor: "sum_j sum_m (-1)^(m-1) m!(m-1)!/(2m+1)! C(2r+2,2j) R(j,m) = r", run: bernoulli_unit_identity_check },
        Check { name: "bernoulli_shift_relation", suite: Suite::Bernoulli, anchor: "S_2k(n) = (B_(2k+1)(n+1) - B_(2k+1))/(2k+1)", run: bernoulli_shift_relation },
        // faulhaber
        Check { name: "c_route_agreement", suite: Suite::Faulhaber, anchor: "c_(k,r) via Legendre-Stirling = via b relation = via Bernoulli numbers", run: c_route_agreement },
        Check { name: "b_c_relation", suite: Suite::Faulhaber, anchor: "(4k+2) b_(k,r) = (3r+3) c_(k,r)", run: b_c_relation },
        Check { name: "reconstruct_b", suite: Suite::Faulhaber, anchor: "S_2k(n) = S_2(n) sum_r b_(k,r) S_1(n)^(r-1)", run: reconstruct_b },
        Check { name: "reconstruct_c", suite: Suite::Faulhaber, anchor: "S_(2k+1)(n) = S_1(n)^2 sum_r c_(k,r) S_1(n)^(r-1)", run: reconstruct_c },
        Check { name: "reconstruct_d", suite: Suite::Faulhaber, anchor: "Omega_2k(n) = sum_r d_(k,r) S_1(n)^r", run: reconstruct_d },
        Check { name: "b1_equals_6_bernoulli", suite: Suite::Faulhaber, anchor: "b_(k,1) = 6 B_2k", run: b1_equals_6_bernoulli },
        Check { name: "salie_d_relation", suite: Suite::Faulhaber, anchor: "d_(k,r) = 2^(r-1) s(k,r)", run: salie_d_relation },
        Check { name: "coeffs_nonzero", suite: Suite::Faulhaber, anchor: "b_(k,r) != 0 and c_(k,r) != 0", run: coeffs_nonzero },
        Check { name: "horizontal_recurrence", suite: Suite::Faulhaber, anchor: "sum_m (-1)^m ((m-1)!)^2/(2m)! R(k,m) = 0, k >= 2", run: horizontal_recurrence },
        Check { name: "linear_term_vanishes", suite: Suite::Faulhaber, anchor: "sum_m R(k+1,m) Ps_m^(1)/((2m)! m) = 0", run: linear_term_vanishes },
        Check { name: "binomial_ps_expansion", suite: Suite::Faulhaber, anchor: "C(n+m, 2m) = 1/(2m)! sum_r Ps_m^(r) (n(n+1))^r", run: binomial_ps_expansion },
        // appendix
        Check { name: "lemma3_lm31", suite: Suite::Appendix, anchor: "sum_i 2i C(2i+k-1, 2k-1) = k C(2n+k+1, 2k+1)", run: lemma3_binomial },
        Check { name: "lemma3_product_form", suite: Suite::Appendix, anchor: "sum_i 4i (2i-k+1)...(2i+k-1) = (2n-k+1)...(2n+k+1)/(2k+1); tails from i = ceil(k/2) for even and odd k", run: lemma3_product_form },
        Check { name: "lemma6_lm51", suite: Suite::Appendix, anchor: "sum_i i C(i+k-1, 2k-1) = k(2n+1)/(2k+1) C(n+k, 2k)", run: lemma6_binomial },
        Check { name: "lemma6_product_form", suite: Suite::Appendix, anchor: "sum_i 2i (i-k+1)...(i+k-1) = (2n+1)(n-k+1)...(n+k)/(2k+1); tail from i = k", run: lemma6_product_form },
        Check { name: "identity58", suite: Suite::Appendix, anchor: "sum_i C(i+k-1, 2k-1) = C(n+k, 2k)", run: identity58 },
    ];
    v.sort_by_key(|c| c.name);
    v
}

const TABLE_1: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[0, 1, 12],
    &[0, 1, 60, 360],
    &[0, 1, 252, 5040, 20160],
    &[0, 1, 1020, 52920, 604800, 1814400],
    &[0, 1, 4092, 506880, 12640320, 99792000, 239500800],
];

const TABLE_2: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[0, -2, 1],
    &[0, 12, -8, 1],
    &[0, -144, 108, -20, 1],
    &[0, 2880, -2304, 508, -40, 1],
    &[0, -86400, 72000, -17544, 1708, -70, 1],
];

fn compare_table(family: Family, table: &[&[i64]], rec: &mut Recorder) {
    let t = triangle_rows(family, table.len() - 1);
    for (k, row) in table.iter().enumerate() {
        for (m, &v) in row.iter().enumerate() {
            let got = t.get(k, m).cloned().unwrap_or_default();
            rec.eq(&[("k", ki(k)), ("m", ki(m))], got, Integer::from(v));
        }
    }
}

fn table1_values(_: &Bounds, rec: &mut Recorder) {
    compare_table(Family::R, &TABLE_1, rec);
}

fn table2_values(_: &Bounds, rec: &mut Recorder) {
    compare_table(Family::Ps, &TABLE_2, rec);
}

fn r_u_relation(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for m in 1..=k {
            let rhs = u_central_second(k, m).map(|u| u * factorial(2 * m as u64));
            rec.check(&[("k", ki(k)), ("m", ki(m))], Ok(r_entry(k, m) * 2u32), rhs);
        }
    }
}

fn partitions_vs_r(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for m in 1..=k {
            rec.check(
                &[("k", ki(k)), ("m", ki(m))],
                r_via_partitions(k, m),
                Ok(r_entry(k, m)),
            );
        }
    }
}

fn orthogonality(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for i in 1..=k {
            let sum = |first: fn(usize, usize) -> Result<Integer>,
                       second: fn(usize, usize) -> Result<Integer>| {
                (i..=k).try_fold(Integer::zero(), |acc, m| {
                    Ok(acc + first(k, m)? * second(m, i)?)
                })
            };
            rec.check(
                &[("i", ki(i)), ("k", ki(k)), ("order", 0)],
                sum(u_central_first, u_central_second),
                Ok(kronecker(k, i)),
            );
            rec.check(
                &[("i", ki(i)), ("k", ki(k)), ("order", 1)],
                sum(u_central_second, u_central_first),
                Ok(kronecker(k, i)),
            );
        }
    }
}

fn inversion_roundtrip(b: &Bounds, rec: &mut Recorder) {
    let mut rng = ChaCha8Rng::seed_from_u64(INVERSION_SEED);
    for trial in 0..8 {
        let seq: Vec<Integer> = (0..b.max_k)
            .map(|_| Integer::from(rng.gen_range(-1000i64..=1000)))
            .collect();
        let back = upper_u_transform(&lower_u_transform(&seq));
        rec.eq(
            &[("len", ki(b.max_k)), ("trial", trial)],
            show_seq(&back),
            show_seq(&seq),
        );
    }
}

fn diagonal_closed_forms(b: &Bounds, rec: &mut Recorder) {
    for s in 0..=4 {
        for k in s + 1..=b.max_k {
            rec.check(
                &[("k", ki(k)), ("s", ki(s))],
                r_diagonal(k, s),
                Ok(r_entry(k, k - s)),
            );
        }
    }
}

fn u_form_recurrence(b: &Bounds, rec: &mut Recorder) {
    for k in 2..=b.max_k {
        let lhs = (1..=k).try_fold(Integer::zero(), |acc, m| {
            let f = factorial(m as u64 - 1);
            Ok(acc + sign_pow(m as u64) * &f * &f * u_central_second(k, m)?)
        });
        rec.check(&[("k", ki(k))], lhs, Ok(Integer::zero()));
    }
}

fn salie_vien2(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            let x = Integer::from(n) * (n + 1);
            let rhs = (1..=k).try_fold(Rational::zero(), |acc, r| {
                Ok(acc + rat(salie(k, r)? * num_traits::pow(x.clone(), r)) / rat(2))
            });
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                brute(PowerSumKind::Omega, 2 * k, n).map(rat),
                rhs,
            );
        }
    }
}

fn u_first_generating_function(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        // independent route: evaluate both sides at integer points
        for x in 0..=ki(k) + 2 {
            let product = (1..ki(k)).fold(Integer::from(x), |acc, j| acc * (x - j * j));
            let series = (1..=k).try_fold(Integer::zero(), |acc, m| {
                Ok(acc + u_central_first(k, m)? * num_traits::pow(Integer::from(x), m))
            });
            rec.check(&[("k", ki(k)), ("x", x)], series, Ok(product));
        }
    }
}

fn ps_first_column(b: &Bounds, rec: &mut Recorder) {
    for m in 1..=b.max_k.max(1) {
        let m64 = m as u64;
        rec.eq(
            &[("m", ki(m))],
            legendre_stirling_first(m, 1),
            sign_pow(m64 - 1) * factorial(m64) * factorial(m64 - 1),
        );
    }
}

fn scaled_brute(kind: PowerSumKind, exponent: usize, n: u64) -> Result<Integer> {
    brute(kind, exponent, n).map(|v| v * pow2(exponent as u64))
}

fn theorem1_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                s_even_scaled(k, n),
                scaled_brute(PowerSumKind::S, 2 * k, n),
            );
        }
    }
}

fn knuth_even_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                s_even_knuth(k, n),
                brute(PowerSumKind::S, 2 * k, n),
            );
        }
    }
}

fn knuth_odd_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                s_odd_knuth(k, n),
                brute(PowerSumKind::S, 2 * k - 1, n),
            );
        }
    }
}

fn t_even_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                t_even(k, n),
                brute(PowerSumKind::T, 2 * k, n),
            );
        }
    }
}

fn omega_even_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                omega_even(k, n),
                brute(PowerSumKind::Omega, 2 * k, n),
            );
        }
    }
}

fn q_form_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                s_odd_scaled_q(k, n),
                scaled_brute(PowerSumKind::S, 2 * k - 1, n),
            );
        }
    }
}

fn f_form_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                s_odd_scaled_f(k, n),
                scaled_brute(PowerSumKind::S, 2 * k - 1, n),
            );
        }
    }
}

fn bernoulli_formula_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for e in 1..=2 * b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("e", ki(e)), ("n", ni(n))],
                s_via_bernoulli(e, n),
                brute(PowerSumKind::S, e, n),
            );
        }
    }
}

fn recursive_vs_brute(b: &Bounds, rec: &mut Recorder) {
    for e in 1..=2 * b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("e", ki(e)), ("n", ni(n))],
                s_recursive(e, n),
                brute(PowerSumKind::S, e, n),
            );
        }
    }
}

fn q_parity(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for m in 1..=k {
            let lhs =
                q_polynomial(k, m).map(|q| format!("odd={} degree={:?}", q.is_odd(), q.degree()));
            let rhs = format!("odd=true degree={:?}", Some(2 * k - 2 * m + 1));
            rec.check(&[("k", ki(k)), ("m", ki(m))], lhs, Ok(rhs));
        }
    }
}

fn q5_displayed(_: &Bounds, rec: &mut Recorder) {
    let displayed = [
        "n^9",
        "18*n + 168*n^3 + 252*n^5 + 72*n^7",
        "4536*n + 10080*n^3 + 3024*n^5",
        "90720*n + 60480*n^3",
        "362880*n",
    ];
    for (i, text) in displayed.iter().enumerate() {
        let m = i + 1;
        let got = q_polynomial(5, m).map(|q| q.display_in("n").to_string());
        rec.check(&[("m", ki(m))], got, Ok(text.to_string()));
    }
}

fn f_matches_sum(b: &Bounds, rec: &mut Recorder) {
    for m in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("m", ki(m)), ("n", ni(n))],
                f_polynomial(m).map(|f| f.eval_int(n)),
                Ok(rat(f_sum(m, n))),
            );
        }
    }
}

fn fg_factorization(b: &Bounds, rec: &mut Recorder) {
    for m in 1..=b.max_k {
        let rhs = g_polynomial(m).map(|g| &g * &g_divisor(m));
        let degree = g_polynomial(m).map(|g| g.degree());
        rec.check(&[("m", ki(m)), ("part", 0)], f_polynomial(m), rhs);
        let h = m.div_ceil(2);
        rec.check(
            &[("m", ki(m)), ("part", 1)],
            degree.map(|d| format!("{d:?}")),
            Ok(format!("{:?}", Some(2 * m - 2 * h))),
        );
    }
}

fn g_displayed(_: &Bounds, rec: &mut Recorder) {
    let forms: [(i64, i64, &[i64]); 7] = [
        (2, 1, &[0]),
        (1, 3, &[-1, 2, 2]),
        (2, 15, &[-3, 8, 8]),
        (1, 105, &[9, -32, -24, 16, 8]),
        (2, 315, &[15, -62, -46, 32, 16]),
        (1, 10395, &[-225, 1077, 677, -768, -304, 96, 32]),
        (2, 135135, &[-1575, 8336, 5168, -6080, -2400, 768, 256]),
    ];
    for (i, (num, den, coeffs)) in forms.iter().enumerate() {
        let m = i + 1;
        // F_1 = 2 C(n+1, 2) is the constant-G case
        let g = if m == 1 {
            Polynomial::constant(rat(*num))
        } else {
            Polynomial::from_integers(coeffs.iter().copied()).scale(&frac(*num, *den))
        };
        rec.check(&[("m", ki(m))], g_polynomial(m), Ok(g));
    }
}

fn kind_cross_relations(b: &Bounds, rec: &mut Recorder) {
    use PowerSumKind::*;
    for k in 1..=b.max_k {
        for n in 1..=b.max_n {
            let p = |rel| [("k", ki(k)), ("n", ni(n)), ("relation", rel)];
            let s_2n = brute(S, k, 2 * n);
            let t_n = brute(T, k, n);
            let rhs0 = brute(S, k, n).and_then(|s| Ok(s_2n.clone()? - s * pow2(k as u64)));
            rec.check(&p(0), t_n.clone(), rhs0);
            let rhs1 = t_n.clone().and_then(|t| Ok(s_2n.clone()? - t * 2u32));
            rec.check(&p(1), brute(Omega, k, 2 * n), rhs1);
            let rhs2 = t_n.and_then(|t| Ok(t * 2u32 - brute(S, k, 2 * n - 1)?));
            rec.check(&p(2), brute(Omega, k, 2 * n - 1), rhs2);
        }
    }
}

fn knuth_iff_pair(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let a: Vec<Rational> = (1..=k)
            .map(|m| Rational::new(r_entry(k, m), (2 * m + 1).into()))
            .collect();
        for n in 1..=b.max_n {
            let c = |m: usize| rat(binomial(n + m as u64, 2 * m as i64));
            let even_rhs: Rational = (1..=k).map(|m| &a[m - 1] * c(m)).sum();
            let odd_rhs: Rational = (1..=k)
                .map(|m| &a[m - 1] * frac(2 * m as u64 + 1, m as u64) * c(m))
                .sum();
            let even_lhs = brute(PowerSumKind::S, 2 * k, n).map(|s| rat(s) / rat(2 * n + 1));
            rec.check(
                &[("k", ki(k)), ("n", ni(n)), ("part", 0)],
                even_lhs,
                Ok(even_rhs),
            );
            rec.check(
                &[("k", ki(k)), ("n", ni(n)), ("part", 1)],
                brute(PowerSumKind::S, 2 * k - 1, n).map(rat),
                Ok(odd_rhs),
            );
        }
    }
}

fn bernoulli_r_vs_recurrence(b: &Bounds, rec: &mut Recorder) {
    let oracle = bernoulli_recurrence(2 * b.max_k);
    for k in 1..=b.max_k {
        rec.check(
            &[("k", ki(k))],
            bernoulli_even_from_r(k),
            Ok(oracle[2 * k].clone()),
        );
    }
}

fn bernoulli_spot_values(_: &Bounds, rec: &mut Recorder) {
    let spots = [(2usize, frac(1, 6)), (4, frac(-1, 30)), (6, frac(1, 42))];
    let values = bernoulli_numbers(6);
    for (i, expected) in spots {
        let got = values.clone().map(|v| v[i].clone());
        rec.check(&[("index", ki(i))], got, Ok(expected));
    }
}

fn bernoulli_odd_vanish(b: &Bounds, rec: &mut Recorder) {
    let oracle = bernoulli_recurrence(2 * b.max_k + 1);
    for k in 1..=b.max_k {
        rec.eq(&[("k", ki(k))], oracle[2 * k + 1].clone(), Rational::zero());
    }
}

fn merca_identity(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for n in 0..=b.max_n {
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                merca_t_even(k, n),
                t_even(k, n).map(rat),
            );
        }
    }
}

fn odd_bernoulli_identity(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        rec.check(
            &[("k", ki(k))],
            odd_bernoulli_identity_polynomial(k),
            Ok(bernoulli_polynomial(2 * k + 1)),
        );
    }
}

fn bernoulli_unit_identity_check(b: &Bounds, rec: &mut Recorder) {
    for r in 1..=b.max_k {
        rec.eq(&[("r", ki(r))], bernoulli_unit_identity(r), rat(r as u64));
    }
}

fn bernoulli_shift_relation(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let poly = bernoulli_polynomial(2 * k + 1);
        let b_const = poly.coeff(0);
        for n in 0..=b.max_n {
            let lhs = (poly.eval_int(n + 1) - &b_const) / rat(2 * k as u64 + 1);
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                Ok(lhs),
                brute(PowerSumKind::S, 2 * k, n).map(rat),
            );
        }
    }
}

fn c_route_agreement(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let base = faulhaber_c(k, CRoute::LegendreStirling);
        for (i, route) in [CRoute::Relation, CRoute::GesselViennot]
            .into_iter()
            .enumerate()
        {
            rec.check(
                &[("k", ki(k)), ("route", i as i64 + 1)],
                faulhaber_c(k, route),
                base.clone(),
            );
        }
    }
}

fn b_c_relation(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let (Ok(bs), Ok(cs)) = (faulhaber_b(k), faulhaber_c(k, CRoute::LegendreStirling)) else {
            rec.check::<Rational>(
                &[("k", ki(k))],
                Err(Error::Invariant("coefficients unavailable".into())),
                Ok(rat(0)),
            );
            continue;
        };
        for r in 1..=k {
            rec.eq(
                &[("k", ki(k)), ("r", ki(r))],
                &bs.values[r - 1] * rat(4 * k as u64 + 2),
                &cs.values[r - 1] * rat(3 * r as u64 + 3),
            );
        }
    }
}

fn reconstruct(
    b: &Bounds,
    rec: &mut Recorder,
    coeffs: fn(usize) -> Result<FaulhaberCoeffs>,
    kind: PowerSumKind,
    exponent: fn(usize) -> usize,
) {
    for k in 1..=b.max_k {
        let c = coeffs(k);
        for n in 0..=b.max_n {
            let lhs = c.clone().and_then(|c| reconstruct_power_sum(&c, n));
            rec.check(
                &[("k", ki(k)), ("n", ni(n))],
                lhs,
                brute(kind, exponent(k), n),
            );
        }
    }
}

fn reconstruct_b(b: &Bounds, rec: &mut Recorder) {
    reconstruct(b, rec, faulhaber_b, PowerSumKind::S, |k| 2 * k);
}

fn reconstruct_c(b: &Bounds, rec: &mut Recorder) {
    reconstruct(
        b,
        rec,
        |k| faulhaber_c(k, CRoute::LegendreStirling),
        PowerSumKind::S,
        |k| 2 * k + 1,
    );
}

fn reconstruct_d(b: &Bounds, rec: &mut Recorder) {
    reconstruct(b, rec, faulhaber_d, PowerSumKind::Omega, |k| 2 * k);
}

fn b1_equals_6_bernoulli(b: &Bounds, rec: &mut Recorder) {
    let oracle = bernoulli_recurrence(2 * b.max_k);
    for k in 1..=b.max_k {
        let lhs = faulhaber_b(k).map(|c| c.values[0].clone());
        rec.check(&[("k", ki(k))], lhs, Ok(&oracle[2 * k] * rat(6)));
    }
}

fn salie_d_relation(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let d = faulhaber_d(k);
        for r in 1..=k {
            // S_1^r = (n(n+1))^r / 2^r, so the two expansions differ by 2^(r-1)
            let lhs = d.clone().map(|d| d.values[r - 1].clone());
            let rhs = salie(k, r).map(|s| rat(s * pow2(r as u64 - 1)));
            rec.check(&[("k", ki(k)), ("r", ki(r))], lhs, rhs);
        }
    }
}

fn coeffs_nonzero(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        for (kind, coeffs) in [
            (0, faulhaber_b(k)),
            (1, faulhaber_c(k, CRoute::LegendreStirling)),
        ] {
            for r in 1..=k {
                let lhs = coeffs.clone().map(|c| !c.values[r - 1].is_zero());
                rec.check(&[("k", ki(k)), ("kind", kind), ("r", ki(r))], lhs, Ok(true));
            }
        }
    }
}

fn horizontal_recurrence(b: &Bounds, rec: &mut Recorder) {
    for k in 2..=b.max_k {
        rec.check(
            &[("k", ki(k))],
            horizontal_recurrence_check(k),
            Ok(Rational::zero()),
        );
    }
}

fn linear_term_vanishes(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        rec.check(&[("k", ki(k))], fau5_check(k), Ok(Rational::zero()));
    }
}

fn binomial_ps_expansion(b: &Bounds, rec: &mut Recorder) {
    for m in 1..=b.max_k {
        for n in 0..=b.max_n {
            let x = Integer::from(n) * (n + 1);
            let sum: Integer = (1..=m)
                .map(|r| legendre_stirling_first(m, r) * num_traits::pow(x.clone(), r))
                .sum();
            rec.eq(
                &[("m", ki(m)), ("n", ni(n))],
                Rational::new(sum, factorial(2 * m as u64)),
                rat(binomial(n + m as u64, 2 * m as i64)),
            );
        }
    }
}

fn lemma3_binomial(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let k64 = k as u64;
        for n in 1..=b.max_n {
            let lhs: Integer = (1..=n)
                .map(|i| binomial(2 * i + k64 - 1, 2 * k as i64 - 1) * (2 * i))
                .sum();
            rec.eq(
                &[("k", ki(k)), ("n", ni(n))],
                lhs,
                binomial(2 * n + k64 + 1, 2 * k as i64 + 1) * k,
            );
        }
    }
}

/// `sum_{i=start}^{n} 4i (2i-k+1)...(2i+k-1)` against the closed product.
fn lemma3_product(k: i64, start: i64, n: i64) -> (Rational, Rational) {
    let lhs: Integer = (start..=n)
        .map(|i| consecutive_product(2 * i - k + 1, 2 * i + k - 1) * (4 * i))
        .sum();
    let rhs = Rational::new(
        consecutive_product(2 * n - k + 1, 2 * n + k + 1),
        (2 * k + 1).into(),
    );
    (rat(lhs), rhs)
}

fn lemma3_product_form(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=ki(b.max_k) {
        for n in 1..=ni(b.max_n) {
            let (lhs, rhs) = lemma3_product(k, 1, n);
            rec.eq(&[("k", k), ("n", n), ("tail", 0)], lhs, rhs);
            // even k sums from k/2, odd k from (k+1)/2
            let start = (k + 1) / 2;
            if n >= start {
                let (lhs, rhs) = lemma3_product(k, start, n);
                rec.eq(&[("k", k), ("n", n), ("tail", 1)], lhs, rhs);
            }
        }
    }
}

fn lemma6_binomial(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let k64 = k as u64;
        for n in 1..=b.max_n {
            let lhs: Integer = (1..=n)
                .map(|i| binomial(i + k64 - 1, 2 * k as i64 - 1) * i)
                .sum();
            let rhs = Rational::new(
                binomial(n + k64, 2 * k as i64) * k * (2 * n + 1),
                (2 * k + 1).into(),
            );
            rec.eq(&[("k", ki(k)), ("n", ni(n))], rat(lhs), rhs);
        }
    }
}

fn lemma6_product(k: i64, start: i64, n: i64) -> (Rational, Rational) {
    let lhs: Integer = (start..=n)
        .map(|i| consecutive_product(i - k + 1, i + k - 1) * (2 * i))
        .sum();
    let rhs = Rational::new(
        consecutive_product(n - k + 1, n + k) * (2 * n + 1),
        (2 * k + 1).into(),
    );
    (rat(lhs), rhs)
}

fn lemma6_product_form(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=ki(b.max_k) {
        for n in 1..=ni(b.max_n) {
            let (lhs, rhs) = lemma6_product(k, 1, n);
            rec.eq(&[("k", k), ("n", n), ("tail", 0)], lhs, rhs);
            if n >= k {
                let (lhs, rhs) = lemma6_product(k, k, n);
                rec.eq(&[("k", k), ("n", n), ("tail", 1)], lhs, rhs);
            }
        }
    }
}

fn identity58(b: &Bounds, rec: &mut Recorder) {
    for k in 1..=b.max_k {
        let k64 = k as u64;
        for n in 1..=b.max_n {
            let lhs: Integer = (1..=n)
                .map(|i| binomial(i + k64 - 1, 2 * k as i64 - 1))
                .sum();
            rec.eq(
                &[("k", ki(k)), ("n", ni(n))],
                lhs,
                binomial(n + k64, 2 * k as i64),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_size_and_unique_names() {
        let names: Vec<_> = registry().iter().map(|c| c.name).collect();
        assert_eq!(names.len(), REGISTRY_SIZE);
        let mut dedup = names.clone();
        dedup.dedup();
        assert_eq!(dedup, names, "names must be unique and sorted");
        for required in ["theorem1_vs_brute", "lemma3_lm31", "salie_vien2"] {
            assert!(names.contains(&required), "{required}");
        }
        assert!(registry().iter().all(|c| !c.anchor.is_empty()));
    }

    #[test]
    fn suites_examples_pass() {
        for (suite, k, n) in [
            (Suite::Core, 4, 20),
            (Suite::Appendix, 6, 50),
            (Suite::All, 1, 1),
            (Suite::Core, 1, 0),
        ] {
            let report = run_suite(&CheckSpec::suite(suite, k, n)).unwrap();
            assert!(report.is_success(), "{}", report.to_table());
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn every_check_runs_alone() {
        for c in registry() {
            let report = run_suite(&CheckSpec::single(c.name, 3, 6)).unwrap();
            assert!(report.is_success(), "{}", report.to_table());
            assert!(report.checks.iter().all(|r| r.name == c.name));
        }
    }

    #[test]
    fn unknown_check_is_usage_error() {
        assert!(matches!(
            run_suite(&CheckSpec::single("nope", 2, 2)),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            "bogus-suite".parse::<Suite>(),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = CheckSpec::suite(Suite::All, 3, 8);
        let mut a = run_suite(&spec).unwrap();
        let mut b = run_suite(&spec).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a.to_json(), b.to_json());
        let sorted = a
            .checks
            .windows(2)
            .all(|w| (&w[0].name, &w[0].params) <= (&w[1].name, &w[1].params));
        assert!(sorted);
    }

    #[test]
    fn failures_are_recorded_with_both_sides() {
        let mut rec = Recorder::default();
        rec.eq(&[("k", 1)], frac(1, 2), frac(1, 3));
        rec.check::<Integer>(
            &[("k", 2)],
            Err(Error::Invariant("boom".into())),
            Ok(Integer::one()),
        );
        assert!(rec.items.iter().all(|i| !i.pass));
        assert_eq!(rec.items[0].lhs, "1/2");
        assert_eq!(rec.items[0].rhs, "1/3");
        assert!(rec.items[1].lhs.starts_with("error:"));
    }

    #[test]
    fn json_shape() {
        let report = run_suite(&CheckSpec::single("identity58", 1, 2)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["suite"], "identity58");
        assert_eq!(v["failed"], 0);
        let first = &v["checks"][0];
        assert_eq!(first["name"], "identity58");
        assert_eq!(first["status"], "pass");
        assert_eq!(first["params"]["k"], 1);
        assert!(first["lhs"].is_string() && first["rhs"].is_string());
    }
}
