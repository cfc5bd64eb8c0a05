//! Sparse Laurent-polynomial arithmetic in the three variables `Q`, `a` (alpha)
//! and `T`, with arbitrary-sign integer exponents and exact `i64` coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial, so a polynomial is always
//! canonical: no zero coefficients are stored and iteration follows the
//! canonical monomial order (alpha exponent, then Q, then T, ascending). Two
//! polynomials are equal exactly when their term maps are equal.
//!
//! Overflow of a coefficient or an exponent is detected and reported as an
//! error; nothing ever wraps.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three polynomial variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Var {
    Q,
    Alpha,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::Alpha, Var::T];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "Q",
            Var::Alpha => "a",
            Var::T => "T",
        }
    }
}

/// A monomial `Q^dq * a^dalpha * T^dt`. Exponents may be negative.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    pub dq: i64,
    pub dalpha: i64,
    pub dt: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        dq: 0,
        dalpha: 0,
        dt: 0,
    };

    pub fn new(dq: i64, dalpha: i64, dt: i64) -> Self {
        Monomial { dq, dalpha, dt }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn exponent(&self, var: Var) -> i64 {
        match var {
            Var::Q => self.dq,
            Var::Alpha => self.dalpha,
            Var::T => self.dt,
        }
    }

    /// Product of two monomials (exponents add, checked).
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let overflow = || Error::ExponentOverflow {
            op: "monomial product",
        };
        Ok(Monomial {
            dq: self.dq.checked_add(other.dq).ok_or_else(overflow)?,
            dalpha: self.dalpha.checked_add(other.dalpha).ok_or_else(overflow)?,
            dt: self.dt.checked_add(other.dt).ok_or_else(overflow)?,
        })
    }

    /// `self` raised to an integer power (exponents scale, checked).
    pub fn try_scale(&self, factor: i64) -> Result<Monomial> {
        let overflow = || Error::ExponentOverflow {
            op: "monomial power",
        };
        Ok(Monomial {
            dq: self.dq.checked_mul(factor).ok_or_else(overflow)?,
            dalpha: self.dalpha.checked_mul(factor).ok_or_else(overflow)?,
            dt: self.dt.checked_mul(factor).ok_or_else(overflow)?,
        })
    }
}

// Canonical order: alpha exponent first, then Q, then T, all ascending.
// Serialization and display rely on this.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dalpha, self.dq, self.dt).cmp(&(other.dalpha, other.dq, other.dt))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Replacement for a substituted variable: a sign times a monomial in the
/// remaining variables. The two legal shapes are `+-1` (unit, empty monomial)
/// and `+-` a genuine monomial such as `Q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replacement {
    pub negative: bool,
    pub mono: Monomial,
}

impl Replacement {
    pub fn unit(negative: bool) -> Self {
        Replacement {
            negative,
            mono: Monomial::ONE,
        }
    }

    pub fn one() -> Self {
        Self::unit(false)
    }

    pub fn minus_one() -> Self {
        Self::unit(true)
    }

    pub fn monomial(negative: bool, mono: Monomial) -> Self {
        Replacement { negative, mono }
    }
}

/// A simultaneous partial substitution of variables. A replacement monomial
/// may only mention variables that are not themselves substituted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    subs: BTreeMap<Var, Replacement>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder-style insertion.
    pub fn substitute(mut self, var: Var, repl: Replacement) -> Self {
        self.subs.insert(var, repl);
        self
    }

    pub fn get(&self, var: Var) -> Option<&Replacement> {
        self.subs.get(&var)
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    /// `T = -1`, the HOMFLY specialization.
    pub fn t_minus_one() -> Self {
        Self::new().substitute(Var::T, Replacement::minus_one())
    }

    /// `T = -1, a = 1`, the Alexander specialization.
    pub fn alexander() -> Self {
        Self::t_minus_one().substitute(Var::Alpha, Replacement::one())
    }

    /// `Q = 1, a = 1, T = 1`: total evaluation at one.
    pub fn all_ones() -> Self {
        Self::new()
            .substitute(Var::Q, Replacement::one())
            .substitute(Var::Alpha, Replacement::one())
            .substitute(Var::T, Replacement::one())
    }

    fn validate(&self) -> Result<()> {
        for (var, repl) in &self.subs {
            for other in Var::ALL {
                if self.subs.contains_key(&other) && repl.mono.exponent(other) != 0 {
                    return Err(Error::BadSubstitution { var: var.name() });
                }
            }
        }
        Ok(())
    }
}

/// An exact Laurent polynomial over the integers in `Q`, `a`, `T`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    /// The polynomial `c * m`; zero coefficients collapse to the zero polynomial.
    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        LaurentPolynomial { terms }
    }

    /// A single variable to the first power.
    pub fn variable(var: Var) -> Self {
        let mut m = Monomial::ONE;
        match var {
            Var::Q => m.dq = 1,
            Var::Alpha => m.dalpha = 1,
            Var::T => m.dt = 1,
        }
        Self::monomial(m, 1)
    }

    /// Build from `(dq, dalpha, dt, c)` tuples, merging duplicates.
    pub fn from_terms(terms: &[(i64, i64, i64, i64)]) -> Result<Self> {
        let mut p = Self::zero();
        for &(dq, dalpha, dt, c) in terms {
            p.insert_term(Monomial::new(dq, dalpha, dt), c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&Monomial::ONE) == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Add `c * m` into `self`, keeping the map canonical.
    fn insert_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::CoefficientOverflow {
            op: "term accumulation",
        })?;
        if *entry == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    /// Termwise sum with zero terms removed.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert_term(*m, c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_neg(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            let neg = c
                .checked_neg()
                .ok_or(Error::CoefficientOverflow { op: "negation" })?;
            out.terms.insert(*m, neg);
        }
        Ok(out)
    }

    /// Distributive product, canonicalized.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.try_mul(mb)?;
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::CoefficientOverflow { op: "product" })?;
                out.insert_term(m, c)?;
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// `q^e` where `q = Q^2`.
    pub fn inject_q(e: u64) -> Self {
        let e = i64::try_from(e).expect("q exponent out of range");
        Self::monomial(Monomial::new(2 * e, 0, 0), 1)
    }

    /// `t^e` where `t = T^2 Q^-2`; `e` may be negative.
    pub fn inject_t(e: i64) -> Self {
        let dq = e.checked_mul(-2).expect("t exponent out of range");
        let dt = e.checked_mul(2).expect("t exponent out of range");
        Self::monomial(Monomial::new(dq, 0, dt), 1)
    }

    /// The polynomial in `Q, T` multiplying `a^d`; zero if no such terms.
    pub fn alpha_coefficient(&self, d: i64) -> Self {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            if m.dalpha == d {
                out.terms.insert(Monomial::new(m.dq, 0, m.dt), c);
            }
        }
        out
    }

    /// All alpha exponents present, ascending.
    pub fn alpha_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|m| m.dalpha).collect();
        ds.dedup();
        ds
    }

    /// Exact simultaneous substitution. `T = -1` flips the sign of a term by
    /// the parity of its `T` exponent, and a monomial replacement multiplies
    /// exponents straight into the remaining variables.
    pub fn specialize(&self, assignment: &Assignment) -> Result<Self> {
        assignment.validate()?;
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            let mut mono = Monomial::ONE;
            let mut coeff = c;
            for var in Var::ALL {
                let e = m.exponent(var);
                match assignment.get(var) {
                    None => {
                        let keep = Self::monomial_of_var(var, e);
                        mono = mono.try_mul(&keep)?;
                    }
                    Some(repl) => {
                        mono = mono.try_mul(&repl.mono.try_scale(e)?)?;
                        if repl.negative && e.rem_euclid(2) == 1 {
                            coeff = coeff.checked_neg().ok_or(Error::CoefficientOverflow {
                                op: "specialization",
                            })?;
                        }
                    }
                }
            }
            out.insert_term(mono, coeff)?;
        }
        Ok(out)
    }

    fn monomial_of_var(var: Var, e: i64) -> Monomial {
        match var {
            Var::Q => Monomial::new(e, 0, 0),
            Var::Alpha => Monomial::new(0, e, 0),
            Var::T => Monomial::new(0, 0, e),
        }
    }

    /// Extreme exponents of `var` over all terms; `None` for the zero polynomial.
    pub fn degree_range(&self, var: Var) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for m in self.terms.keys() {
            let e = m.exponent(var);
            range = Some(match range {
                None => (e, e),
                Some((lo, hi)) => (lo.min(e), hi.max(e)),
            });
        }
        range
    }

    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Exact division by a polynomial in `Q` alone whose leading (highest
    /// `Q`-degree) coefficient is a unit. The dividend may involve `a` and `T`.
    /// A nonzero remainder is an error.
    pub fn try_div_exact_in_q(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if divisor.terms.keys().any(|m| m.dalpha != 0 || m.dt != 0) {
            return Err(Error::UnsupportedDivisor);
        }
        let (dv_min, dv_max) = divisor.degree_range(Var::Q).expect("nonzero divisor");
        let lead = divisor.coefficient(&Monomial::new(dv_max, 0, 0));
        if lead != 1 && lead != -1 {
            return Err(Error::UnsupportedDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (p_min, _) = self.degree_range(Var::Q).expect("nonzero dividend");
        // For an exact quotient q we have min_Q(q) = min_Q(p) - min_Q(divisor),
        // so any quotient term below that bound witnesses a nonzero remainder.
        let shift_floor = p_min - dv_min;

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_max = rem.degree_range(Var::Q).expect("nonzero remainder").1;
            let shift = r_max - dv_max;
            if shift < shift_floor {
                return Err(Error::InexactDivision);
            }
            let stratum: Vec<(Monomial, i64)> = rem
                .terms
                .iter()
                .filter(|(m, _)| m.dq == r_max)
                .map(|(m, &c)| (*m, c))
                .collect();
            for (m, c) in stratum {
                let qm = Monomial::new(shift, m.dalpha, m.dt);
                let qc = c * lead; // lead is +-1
                quot.insert_term(qm, qc)?;
                // rem -= (qc * qm) * divisor
                for (dm, &dc) in &divisor.terms {
                    let sm = qm.try_mul(dm)?;
                    let sc = qc
                        .checked_mul(dc)
                        .ok_or(Error::CoefficientOverflow { op: "division" })?;
                    let neg = sc
                        .checked_neg()
                        .ok_or(Error::CoefficientOverflow { op: "division" })?;
                    rem.insert_term(sm, neg)?;
                }
            }
        }
        Ok(quot)
    }

    /// Plain-text form `c*Q^i*a^j*T^k` joined by `" + "` with default names.
    pub fn to_text(&self) -> String {
        self.to_text_named(["Q", "a", "T"])
    }

    /// Plain-text form with custom variable names for the three slots.
    pub fn to_text_named(&self, names: [&str; 3]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let neg = c < 0;
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            let mut factors: Vec<String> = Vec::new();
            for (name, e) in [(names[0], m.dq), (names[1], m.dalpha), (names[2], m.dt)] {
                if e == 1 {
                    factors.push(name.to_string());
                } else if e != 0 {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// LaTeX form with `\alpha` and braced exponents.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let neg = c < 0;
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            let mut factors = String::new();
            for (name, e) in [("Q", m.dq), ("\\alpha", m.dalpha), ("T", m.dt)] {
                if e == 1 {
                    factors.push_str(name);
                } else if e != 0 {
                    factors.push_str(&format!("{name}^{{{e}}}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&factors);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({})", self.to_text())
    }
}

/// JSON record for one term, `{"dQ":..,"dAlpha":..,"dT":..,"c":..}`.
#[derive(Serialize, Deserialize)]
struct TermRecord {
    #[serde(rename = "dQ")]
    dq: i64,
    #[serde(rename = "dAlpha")]
    dalpha: i64,
    #[serde(rename = "dT")]
    dt: i64,
    c: i64,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, &c)| TermRecord {
                dq: m.dq,
                dalpha: m.dalpha,
                dt: m.dt,
                c,
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = LaurentPolynomial::zero();
        for r in records {
            p.insert_term(Monomial::new(r.dq, r.dalpha, r.dt), r.c)
                .map_err(|e| D::Error::custom(e.to_string()))?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64, i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms).unwrap()
    }

    /// The trefoil superpolynomial, used as a fixture throughout.
    fn trefoil() -> LaurentPolynomial {
        lp(&[(2, 2, -2, 1), (-2, 2, 0, 1), (0, 4, -3, 1)])
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = lp(&[(2, 0, 0, 1)]);
        let q = lp(&[(2, 0, 0, -1)]);
        assert!(p.try_add(&q).unwrap().is_zero());
    }

    #[test]
    fn add_merges_coefficients() {
        let p = lp(&[(2, 0, 0, 1), (0, 0, 1, 1)]);
        let q = lp(&[(0, 0, 1, 1)]);
        assert_eq!(p.try_add(&q).unwrap(), lp(&[(2, 0, 0, 1), (0, 0, 1, 2)]));
    }

    #[test]
    fn add_trefoil_bracket_sum() {
        // (q + t) + T^-1 a^2, all as (Q, a, T)-monomials
        let qt = lp(&[(2, 0, 0, 1), (-2, 0, 2, 1)]);
        let extra = lp(&[(0, 2, -1, 1)]);
        let sum = qt.try_add(&extra).unwrap();
        assert_eq!(sum, lp(&[(2, 0, 0, 1), (-2, 0, 2, 1), (0, 2, -1, 1)]));
    }

    #[test]
    fn mul_identity() {
        let p = trefoil();
        assert_eq!(LaurentPolynomial::one().try_mul(&p).unwrap(), p);
    }

    #[test]
    fn mul_monomial_square() {
        let ta = lp(&[(0, 1, -1, 1)]); // T^-1 a
        assert_eq!(ta.try_mul(&ta).unwrap(), lp(&[(0, 2, -2, 1)]));
    }

    #[test]
    fn mul_trefoil_product() {
        // (T^-1 a)^2 * (Q^2 + T^2 Q^-2 + T^-1 a^2) = the trefoil superpolynomial
        let pref = lp(&[(0, 2, -2, 1)]);
        let sum = lp(&[(2, 0, 0, 1), (-2, 0, 2, 1), (0, 2, -1, 1)]);
        assert_eq!(pref.try_mul(&sum).unwrap(), trefoil());
    }

    #[test]
    fn inject_q_examples() {
        assert!(LaurentPolynomial::inject_q(0).is_one());
        assert_eq!(LaurentPolynomial::inject_q(1), lp(&[(2, 0, 0, 1)]));
        assert_eq!(LaurentPolynomial::inject_q(3), lp(&[(6, 0, 0, 1)]));
    }

    #[test]
    fn inject_t_examples() {
        assert!(LaurentPolynomial::inject_t(0).is_one());
        assert_eq!(LaurentPolynomial::inject_t(1), lp(&[(-2, 0, 2, 1)]));
        assert_eq!(LaurentPolynomial::inject_t(-1), lp(&[(2, 0, -2, 1)]));
    }

    #[test]
    fn alpha_coefficient_trefoil() {
        let p = trefoil();
        assert_eq!(p.alpha_coefficient(2), lp(&[(2, 0, -2, 1), (-2, 0, 0, 1)]));
        assert_eq!(p.alpha_coefficient(4), lp(&[(0, 0, -3, 1)]));
        assert!(p.alpha_coefficient(3).is_zero());
    }

    #[test]
    fn specialize_trefoil_homfly() {
        let p = trefoil().specialize(&Assignment::t_minus_one()).unwrap();
        assert_eq!(p, lp(&[(2, 2, 0, 1), (-2, 2, 0, 1), (0, 4, 0, -1)]));
    }

    #[test]
    fn specialize_trefoil_alexander() {
        let p = trefoil().specialize(&Assignment::alexander()).unwrap();
        assert_eq!(p, lp(&[(2, 0, 0, 1), (-2, 0, 0, 1), (0, 0, 0, -1)]));
    }

    #[test]
    fn specialize_empty_is_identity() {
        let p = trefoil();
        assert_eq!(p.specialize(&Assignment::new()).unwrap(), p);
    }

    #[test]
    fn specialize_monomial_substitution() {
        // a -> Q^2 (the sl(2) view) on a^2 T^-1 gives Q^4 T^-1.
        let p = lp(&[(0, 2, -1, 1)]);
        let a = Assignment::new().substitute(
            Var::Alpha,
            Replacement::monomial(false, Monomial::new(2, 0, 0)),
        );
        assert_eq!(p.specialize(&a).unwrap(), lp(&[(4, 0, -1, 1)]));
    }

    #[test]
    fn specialize_rejects_substituted_variable_reuse() {
        let a = Assignment::new()
            .substitute(Var::T, Replacement::minus_one())
            .substitute(
                Var::Alpha,
                Replacement::monomial(false, Monomial::new(0, 0, 2)),
            );
        assert!(trefoil().specialize(&a).is_err());
    }

    #[test]
    fn degree_range_examples() {
        assert_eq!(trefoil().degree_range(Var::Alpha), Some((2, 4)));
        assert_eq!(LaurentPolynomial::zero().degree_range(Var::Alpha), None);
        let p = lp(&[(-2, 0, 0, 1), (5, 0, 0, 1)]);
        assert_eq!(p.degree_range(Var::Q), Some((-2, 5)));
    }

    #[test]
    fn overflow_is_detected() {
        let big = lp(&[(0, 0, 0, i64::MAX)]);
        let one = LaurentPolynomial::one();
        assert!(matches!(
            big.try_add(&one),
            Err(Error::CoefficientOverflow { .. })
        ));
        let two = lp(&[(0, 0, 0, 2)]);
        assert!(matches!(
            big.try_mul(&two),
            Err(Error::CoefficientOverflow { .. })
        ));
    }

    #[test]
    fn exponent_overflow_is_detected() {
        let hi = lp(&[(i64::MAX, 0, 0, 1)]);
        let q = lp(&[(1, 0, 0, 1)]);
        assert!(matches!(
            hi.try_mul(&q),
            Err(Error::ExponentOverflow { .. })
        ));
    }

    #[test]
    fn canonical_text_form() {
        assert_eq!(trefoil().to_text(), "Q^-2*a^2 + Q^2*a^2*T^-2 + a^4*T^-3");
        assert_eq!(LaurentPolynomial::zero().to_text(), "0");
        let p = lp(&[(0, 0, 0, -1), (2, 0, 0, 1), (-2, 0, 0, 1)]);
        assert_eq!(p.to_text(), "Q^-2 - 1 + Q^2");
        let q = lp(&[(0, 0, 1, 2), (1, 0, 0, -3)]);
        assert_eq!(q.to_text(), "2*T - 3*Q");
    }

    #[test]
    fn latex_form() {
        assert_eq!(
            trefoil().to_latex(),
            "Q^{-2}\\alpha^{2} + Q^{2}\\alpha^{2}T^{-2} + \\alpha^{4}T^{-3}"
        );
    }

    #[test]
    fn json_round_trip_and_golden() {
        let p = trefoil();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"dQ":-2,"dAlpha":2,"dT":0,"c":1},{"dQ":2,"dAlpha":2,"dT":-2,"c":1},{"dQ":0,"dAlpha":4,"dT":-3,"c":1}]"#
        );
        let back: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division_by_skein_binomial() {
        // (Q^-1 - Q) * (a - a^3) is exactly divisible; adding 1 is not.
        let skein = lp(&[(-1, 0, 0, 1), (1, 0, 0, -1)]);
        let quot = lp(&[(0, 1, 0, 1), (0, 3, 0, -1)]);
        let prod = skein.try_mul(&quot).unwrap();
        assert_eq!(prod.try_div_exact_in_q(&skein).unwrap(), quot);
        let bad = prod.try_add(&LaurentPolynomial::one()).unwrap();
        assert!(matches!(
            bad.try_div_exact_in_q(&skein),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn division_guards() {
        let p = lp(&[(0, 1, 0, 1)]);
        assert!(matches!(
            p.try_div_exact_in_q(&LaurentPolynomial::zero()),
            Err(Error::DivisionByZero)
        ));
        let with_alpha = lp(&[(1, 1, 0, 1)]);
        assert!(matches!(
            p.try_div_exact_in_q(&with_alpha),
            Err(Error::UnsupportedDivisor)
        ));
        let non_unit = lp(&[(1, 0, 0, 2)]);
        assert!(matches!(
            p.try_div_exact_in_q(&non_unit),
            Err(Error::UnsupportedDivisor)
        ));
    }
}
