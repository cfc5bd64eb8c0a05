//! Machine verification suites: per-shape checks that exhaustively test the
//! lemmas, the star bijection, the full-twist identity and the classical
//! cross-checks, with a minimal witness on failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dyck::{
    classify_pair, enumerate, enumerate_rugged, geometric_h, Bucket, DyckPath, Step, TorusShape,
};
use crate::error::Result;
use crate::oracle;
use crate::poly::LaurentPolynomial;
use crate::superpoly::{self, mellit_superpolynomial, p_minus, p_plus};
use crate::util::gcd;

/// The individual verification suites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    FullTwist,
    Kalman,
    Lemma1,
    Lemma2,
    Bijection,
    Alexander,
    Extraction,
    Mfw,
    Count,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::FullTwist,
        CheckKind::Kalman,
        CheckKind::Lemma1,
        CheckKind::Lemma2,
        CheckKind::Bijection,
        CheckKind::Alexander,
        CheckKind::Extraction,
        CheckKind::Mfw,
        CheckKind::Count,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FullTwist => "full_twist",
            CheckKind::Kalman => "kalman",
            CheckKind::Lemma1 => "lemma1",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::Bijection => "bijection",
            CheckKind::Alexander => "alexander",
            CheckKind::Extraction => "extraction",
            CheckKind::Mfw => "mfw",
            CheckKind::Count => "count",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Outcome of one check on one shape. Polynomial-identity checks carry both
/// sides; path-level checks carry a witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub m: u32,
    pub n: u32,
    pub check: CheckKind,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<LaurentPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<LaurentPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    fn passed(shape: TorusShape, check: CheckKind) -> Self {
        CheckReport {
            m: shape.m(),
            n: shape.n(),
            check,
            pass: true,
            lhs: None,
            rhs: None,
            witness: None,
        }
    }

    fn failed(shape: TorusShape, check: CheckKind, witness: String) -> Self {
        CheckReport {
            m: shape.m(),
            n: shape.n(),
            check,
            pass: false,
            lhs: None,
            rhs: None,
            witness: Some(witness),
        }
    }
}

/// A sweep over all coprime pairs with bounded `m + n`.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    max_sum: u32,
    checks: Vec<CheckKind>,
}

impl SweepSpec {
    /// `max_sum` must be at least 3 and `checks` nonempty. The checks are
    /// stored deduplicated in canonical order.
    pub fn new(max_sum: u32, checks: &[CheckKind]) -> std::result::Result<Self, String> {
        if max_sum < 3 {
            return Err(format!("max-sum must be at least 3, got {max_sum}"));
        }
        if checks.is_empty() {
            return Err("at least one check must be selected".to_string());
        }
        let set: BTreeSet<CheckKind> = checks.iter().copied().collect();
        Ok(SweepSpec {
            max_sum,
            checks: set.into_iter().collect(),
        })
    }

    pub fn all_checks(max_sum: u32) -> std::result::Result<Self, String> {
        Self::new(max_sum, &CheckKind::ALL)
    }

    pub fn max_sum(&self) -> u32 {
        self.max_sum
    }

    pub fn checks(&self) -> &[CheckKind] {
        &self.checks
    }
}

/// Pass/fail tallies for a sweep.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
}

impl SweepSummary {
    pub fn record(&mut self, report: &CheckReport) {
        self.total += 1;
        if report.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

/// All coprime pairs `(m,n)` with `2 <= m+n <= max_sum`, in lexicographic
/// `(m+n, n)` order.
pub fn coprime_pairs(max_sum: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for s in 2..=max_sum {
        for n in 1..s {
            let m = s - n;
            if gcd(u64::from(m), u64::from(n)) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

/// Run one check on one shape.
pub fn run_check(shape: TorusShape, kind: CheckKind) -> Result<CheckReport> {
    match kind {
        CheckKind::FullTwist => {
            let r = superpoly::verify_full_twist(shape)?;
            Ok(CheckReport {
                m: r.m,
                n: r.n,
                check: kind,
                pass: r.pass,
                lhs: Some(r.lhs),
                rhs: Some(r.rhs),
                witness: None,
            })
        }
        CheckKind::Kalman => {
            let r = superpoly::kalman_check(shape)?;
            Ok(CheckReport {
                m: r.m,
                n: r.n,
                check: kind,
                pass: r.pass,
                lhs: Some(r.lhs),
                rhs: Some(r.rhs),
                witness: None,
            })
        }
        CheckKind::Alexander => {
            let r = oracle::check_alexander(shape.m(), shape.n())?;
            Ok(CheckReport {
                m: r.m,
                n: r.n,
                check: kind,
                pass: r.pass,
                lhs: Some(r.lhs),
                rhs: Some(r.rhs),
                witness: None,
            })
        }
        CheckKind::Lemma1 => Ok(check_lemma1(shape)),
        CheckKind::Lemma2 => Ok(check_lemma2(shape)),
        CheckKind::Bijection => check_bijection(shape),
        CheckKind::Extraction => check_extraction(shape),
        CheckKind::Mfw => check_mfw(shape),
        CheckKind::Count => check_count(shape),
    }
}

/// Run the selected checks for one pair, in canonical order.
pub fn run_checks_for_pair(m: u32, n: u32, kinds: &[CheckKind]) -> Result<Vec<CheckReport>> {
    let shape = TorusShape::new(m, n)?;
    kinds.iter().map(|&k| run_check(shape, k)).collect()
}

/// Sequential sweep; reports stream to `sink` in deterministic order.
pub fn run_sweep(spec: &SweepSpec, mut sink: impl FnMut(&CheckReport)) -> Result<SweepSummary> {
    let mut summary = SweepSummary::default();
    for (m, n) in coprime_pairs(spec.max_sum()) {
        for report in run_checks_for_pair(m, n, spec.checks())? {
            summary.record(&report);
            sink(&report);
        }
    }
    Ok(summary)
}

/// Geometric area equals `(m-1)(n-1)/2 - |O|` on every path.
fn check_lemma1(shape: TorusShape) -> CheckReport {
    for path in enumerate(shape) {
        let geometric = path.area();
        let via_pairs = path.area_via_lemma1();
        if geometric != via_pairs {
            return CheckReport::failed(
                shape,
                CheckKind::Lemma1,
                format!("path {path}: area {geometric} != (m-1)(n-1)/2 - |O| = {via_pairs}"),
            );
        }
    }
    CheckReport::passed(shape, CheckKind::Lemma1)
}

/// On every pair of every path: the strict-inequality buckets coincide with
/// the geometric line-overlap test, the two bucket conditions exclude each
/// other, and the boundary discriminants `-n`, `m-n`, `m` never occur.
fn check_lemma2(shape: TorusShape) -> CheckReport {
    let m = i64::from(shape.m());
    let n = i64::from(shape.n());
    for path in enumerate(shape) {
        for (rh, rv) in path.pairs_o() {
            let class = classify_pair(shape, &rh, &rv);
            let witness = |reason: String| {
                CheckReport::failed(
                    shape,
                    CheckKind::Lemma2,
                    format!(
                        "path {path}, pair (H@{}, V@{}): {reason}",
                        rh.index, rv.index
                    ),
                )
            };
            if class.d == -n || class.d == m - n || class.d == m {
                return witness(format!("boundary discriminant D = {}", class.d));
            }
            let in_h1 = -n < class.d && class.d < m - n;
            let in_h2 = m - n < class.d && class.d < m;
            if in_h1 && in_h2 {
                return witness(format!("buckets overlap at D = {}", class.d));
            }
            let arithmetic = class.bucket != Bucket::None;
            let geometric = geometric_h(shape, &rh, &rv);
            if arithmetic != geometric {
                return witness(format!(
                    "bucket {:?} (D = {}) disagrees with line overlap {geometric}",
                    class.bucket, class.d
                ));
            }
        }
    }
    CheckReport::passed(shape, CheckKind::Lemma2)
}

/// Pairs of `O(path)` as index pairs, and the subset lying in a given bucket.
fn index_pairs_in(path: &DyckPath, bucket: Bucket) -> BTreeSet<(usize, usize)> {
    path.pairs_o()
        .into_iter()
        .filter(|(rh, rv)| classify_pair(path.shape(), rh, rv).bucket == bucket)
        .map(|(rh, rv)| (rh.index, rv.index))
        .collect()
}

/// The star bijection suite: round trips, image characterization, area
/// preservation (A), the h-statistic transfer (B), the componentwise step
/// count identity, and `H = H1(star) restricted to old pairs`.
fn check_bijection(shape: TorusShape) -> Result<CheckReport> {
    let star_shape = shape.star_shape();
    let n = u64::from(shape.n());
    let fail = |witness: String| CheckReport::failed(shape, CheckKind::Bijection, witness);

    let mut star_images: BTreeSet<String> = BTreeSet::new();
    for path in enumerate(shape) {
        let starred = path.star();
        if !starred.is_rugged() {
            return Ok(fail(format!("star({path}) = {starred} is not rugged")));
        }
        match starred.unstar() {
            Ok(back) if back == path => {}
            Ok(back) => return Ok(fail(format!("unstar(star({path})) = {back}"))),
            Err(e) => return Ok(fail(format!("unstar(star({path})) failed: {e}"))),
        }
        if path.area() != starred.area() {
            return Ok(fail(format!(
                "area changed under star: {path} has {}, {starred} has {}",
                path.area(),
                starred.area()
            )));
        }
        let o_growth = n * (n - 1) / 2;
        if starred.pairs_o().len() as u64 != path.pairs_o().len() as u64 + o_growth {
            return Ok(fail(format!(
                "pair count of {starred} is not |O| + n(n-1)/2"
            )));
        }

        let (_p0, vs) = starred.outer_vertices();
        let k_total: i64 = vs.iter().map(|v| v.k as i64).sum();
        let k1_total: u64 = vs.iter().map(|v| v.k1).sum();
        let k2_total: u64 = vs.iter().map(|v| v.k2).sum();
        if path.h_statistic() as i64 != starred.h_statistic() as i64 - k_total {
            return Ok(fail(format!(
                "h transfer fails on {path}: h = {}, starred h = {}, sum k = {k_total}",
                path.h_statistic(),
                starred.h_statistic()
            )));
        }

        // Identify O(path) inside O(starred) through the index map.
        let index_map = path.star_index_map();
        let old_pairs: BTreeSet<(usize, usize)> = path
            .pairs_o()
            .iter()
            .map(|(rh, rv)| (index_map[rh.index], index_map[rv.index]))
            .collect();
        let h1_star = index_pairs_in(&starred, Bucket::H1);
        let h2_star = index_pairs_in(&starred, Bucket::H2);
        let h1_new = h1_star.difference(&old_pairs).count() as u64;
        if h1_new != k1_total {
            return Ok(fail(format!(
                "|H1(star) \\ O| = {h1_new} but sum k1 = {k1_total} on {path}"
            )));
        }
        if h2_star.len() as u64 != k2_total {
            return Ok(fail(format!(
                "|H2(star)| = {} but sum k2 = {k2_total} on {path}",
                h2_star.len()
            )));
        }
        let h_old: BTreeSet<(usize, usize)> = path
            .pairs_o()
            .iter()
            .filter(|(rh, rv)| classify_pair(shape, rh, rv).bucket != Bucket::None)
            .map(|(rh, rv)| (index_map[rh.index], index_map[rv.index]))
            .collect();
        let h1_cap_old: BTreeSet<(usize, usize)> =
            h1_star.intersection(&old_pairs).copied().collect();
        if h_old != h1_cap_old {
            return Ok(fail(format!("H(path) != H1(star) on old pairs for {path}")));
        }

        star_images.insert(starred.step_string());
    }

    // Independent route to the rugged set: filter the full enumeration.
    let mut rugged_filtered: BTreeSet<String> = BTreeSet::new();
    for rho in enumerate(star_shape) {
        if !rho.is_rugged() {
            continue;
        }
        match rho.unstar().map(|u| u.star()) {
            Ok(back) if back == rho => {}
            _ => return Ok(fail(format!("star(unstar({rho})) != {rho}"))),
        }
        rugged_filtered.insert(rho.step_string());
    }
    if star_images != rugged_filtered {
        return Ok(fail(format!(
            "star image has {} paths but {star_shape} has {} rugged paths",
            star_images.len(),
            rugged_filtered.len()
        )));
    }
    Ok(CheckReport::passed(shape, CheckKind::Bijection))
}

/// The direct corollary formulas agree with coefficient extraction from the
/// full superpolynomial at both extreme alpha degrees.
fn check_extraction(shape: TorusShape) -> Result<CheckReport> {
    let full = mellit_superpolynomial(shape)?.poly;
    let minus_direct = p_minus(shape)?;
    let minus_extracted = full.alpha_coefficient(shape.alpha_lower());
    if minus_direct != minus_extracted {
        return Ok(CheckReport {
            m: shape.m(),
            n: shape.n(),
            check: CheckKind::Extraction,
            pass: false,
            lhs: Some(minus_direct),
            rhs: Some(minus_extracted),
            witness: Some("P_- direct vs extracted".to_string()),
        });
    }
    let plus_direct = p_plus(shape)?;
    let plus_extracted = full.alpha_coefficient(shape.alpha_upper());
    if plus_direct != plus_extracted {
        return Ok(CheckReport {
            m: shape.m(),
            n: shape.n(),
            check: CheckKind::Extraction,
            pass: false,
            lhs: Some(plus_direct),
            rhs: Some(plus_extracted),
            witness: Some("P_+ direct vs extracted".to_string()),
        });
    }
    Ok(CheckReport::passed(shape, CheckKind::Extraction))
}

/// Degree bounds and positivity of the full superpolynomial: coefficients
/// are nonnegative, alpha degrees stay inside `[e-n+1, e+n-1]`, the lower
/// bound is attained, the upper bound is attained exactly when rugged paths
/// exist, and total evaluation at one counts `sum over paths of 2^|V|`.
fn check_mfw(shape: TorusShape) -> Result<CheckReport> {
    let result = mellit_superpolynomial(shape)?;
    let fail = |witness: String| CheckReport::failed(shape, CheckKind::Mfw, witness);
    if !result.poly.coefficients_nonnegative() {
        return Ok(fail(
            "negative coefficient in the superpolynomial".to_string(),
        ));
    }
    let Some((lo, hi)) = result.poly.degree_range(crate::poly::Var::Alpha) else {
        return Ok(fail("superpolynomial is zero".to_string()));
    };
    if lo != shape.alpha_lower() {
        return Ok(fail(format!(
            "lowest alpha degree {lo} != {}",
            shape.alpha_lower()
        )));
    }
    if hi > shape.alpha_upper() {
        return Ok(fail(format!(
            "highest alpha degree {hi} > {}",
            shape.alpha_upper()
        )));
    }
    let upper_attained = hi == shape.alpha_upper();
    if upper_attained != (result.rugged_count > 0) {
        return Ok(fail(format!(
            "upper bound attained = {upper_attained} but rugged count = {}",
            result.rugged_count
        )));
    }
    let mut expected: i64 = 0;
    for path in enumerate(shape) {
        let (_p0, vs) = path.outer_vertices();
        expected += 1i64 << vs.len();
    }
    let total = result
        .poly
        .specialize(&crate::poly::Assignment::all_ones())?;
    if total != LaurentPolynomial::constant(expected) {
        return Ok(fail(format!(
            "evaluation at one is {total}, expected {expected}"
        )));
    }
    Ok(CheckReport::passed(shape, CheckKind::Mfw))
}

/// Path count equals the rational Catalan number `binomial(m+n,n)/(m+n)`.
fn check_count(shape: TorusShape) -> Result<CheckReport> {
    let counted = enumerate(shape).count() as u64;
    let formula = shape.catalan_count()?;
    if counted != formula {
        return Ok(CheckReport::failed(
            shape,
            CheckKind::Count,
            format!("enumerated {counted} paths, formula gives {formula}"),
        ));
    }
    Ok(CheckReport::passed(shape, CheckKind::Count))
}

/// Empirical symmetry checks, exposed for the test suites: the
/// superpolynomial is invariant under transposing the shape, and the bare
/// `(q,t)` sum is invariant under swapping `q` and `t`.
pub fn check_symmetry(shape: TorusShape) -> Result<bool> {
    let direct = mellit_superpolynomial(shape)?.poly;
    let transposed = mellit_superpolynomial(shape.transpose())?.poly;
    if direct != transposed {
        return Ok(false);
    }
    let catalan = superpoly::qt_catalan(shape)?;
    Ok(catalan == superpoly::qt_swap(&catalan))
}

/// Rugged paths have no repeated vertical step; used as a cross-check of the
/// pruned enumeration in the test suites.
pub fn rugged_by_filter(shape: TorusShape) -> Vec<DyckPath> {
    enumerate(shape).filter(|p| p.is_rugged()).collect()
}

/// Equality of the pruned rugged enumeration with filtering, in order.
pub fn pruned_rugged_matches_filter(shape: TorusShape) -> bool {
    let pruned: Vec<Vec<Step>> = enumerate_rugged(shape)
        .map(|p| p.steps().to_vec())
        .collect();
    let filtered: Vec<Vec<Step>> = rugged_by_filter(shape)
        .into_iter()
        .map(|p| p.steps().to_vec())
        .collect();
    pruned == filtered
}
