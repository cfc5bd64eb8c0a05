//! The superpolynomial of a positive torus knot as a sum over Dyck paths,
//! the extreme alpha-coefficients both as direct closed forms and by
//! extraction, and the full-twist identity between them.
//!
//! For a coprime shape `(m,n)` the superpolynomial is
//!
//! ```text
//! P(T_{m,n}) = (T^-1 a)^{(m-1)(n-1)}
//!              * sum over paths of  q^area * t^h * prod_{p in V} (1 + T^-1 a^2 t^-k(p))
//! ```
//!
//! with `q = Q^2` and `t = T^2 Q^-2`, so everything expands to a genuine
//! Laurent polynomial in `(Q, a, T)` with nonnegative integer coefficients.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dyck::{enumerate, enumerate_rugged, DyckPath, TorusShape};
use crate::error::{Error, Result};
use crate::poly::{Assignment, LaurentPolynomial, Monomial};

/// The full superpolynomial with enumeration metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpolyResult {
    pub shape: TorusShape,
    pub poly: LaurentPolynomial,
    pub path_count: u64,
    pub rugged_count: u64,
}

impl Serialize for SuperpolyResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SuperpolyResult", 5)?;
        s.serialize_field("m", &self.shape.m())?;
        s.serialize_field("n", &self.shape.n())?;
        s.serialize_field("pathCount", &self.path_count)?;
        s.serialize_field("ruggedCount", &self.rugged_count)?;
        s.serialize_field("terms", &self.poly)?;
        s.end()
    }
}

/// `T^-1 a^2` as a monomial.
fn t_inv_alpha_sq() -> Monomial {
    Monomial::new(0, 2, -1)
}

/// The contribution of one path: `q^area * t^h * prod_{p in V}(1 + T^-1 a^2 t^-k(p))`.
pub fn term_of_path(path: &DyckPath) -> Result<LaurentPolynomial> {
    let area = LaurentPolynomial::inject_q(path.area());
    let h = LaurentPolynomial::inject_t(path.h_statistic() as i64);
    let mut term = area.try_mul(&h)?;
    let (_p0, vs) = path.outer_vertices();
    for v in &vs {
        let t_pow = LaurentPolynomial::inject_t(-(v.k as i64));
        let factor = LaurentPolynomial::one()
            .try_add(&LaurentPolynomial::monomial(t_inv_alpha_sq(), 1).try_mul(&t_pow)?)?;
        term = term.try_mul(&factor)?;
    }
    Ok(term)
}

/// Full superpolynomial: prefactor times the sum of `term_of_path` over all
/// paths of the shape.
pub fn mellit_superpolynomial(shape: TorusShape) -> Result<SuperpolyResult> {
    let e0 = shape.alpha_lower();
    let prefactor = LaurentPolynomial::monomial(Monomial::new(0, e0, -e0), 1);
    let mut sum = LaurentPolynomial::zero();
    let mut path_count = 0u64;
    let mut rugged_count = 0u64;
    for path in enumerate(shape) {
        sum = sum.try_add(&term_of_path(&path)?)?;
        path_count += 1;
        if path.is_rugged() {
            rugged_count += 1;
        }
    }
    Ok(SuperpolyResult {
        shape,
        poly: prefactor.try_mul(&sum)?,
        path_count,
        rugged_count,
    })
}

/// Lowest alpha-coefficient, directly: `T^{-(m-1)(n-1)} * sum q^area t^h`.
pub fn p_minus(shape: TorusShape) -> Result<LaurentPolynomial> {
    let mut sum = LaurentPolynomial::zero();
    for path in enumerate(shape) {
        let term = LaurentPolynomial::inject_q(path.area())
            .try_mul(&LaurentPolynomial::inject_t(path.h_statistic() as i64))?;
        sum = sum.try_add(&term)?;
    }
    let prefactor = LaurentPolynomial::monomial(Monomial::new(0, 0, -shape.alpha_lower()), 1);
    prefactor.try_mul(&sum)
}

/// Highest alpha-coefficient, directly:
/// `T^{-m(n-1)} * sum over rugged paths of q^area t^{h - sum k(p)}`.
/// The zero polynomial when the shape has no rugged paths.
pub fn p_plus(shape: TorusShape) -> Result<LaurentPolynomial> {
    let mut sum = LaurentPolynomial::zero();
    for path in enumerate_rugged(shape) {
        let (_p0, vs) = path.outer_vertices();
        let k_total: i64 = vs.iter().map(|v| v.k as i64).sum();
        let term = LaurentPolynomial::inject_q(path.area()).try_mul(
            &LaurentPolynomial::inject_t(path.h_statistic() as i64 - k_total),
        )?;
        sum = sum.try_add(&term)?;
    }
    let prefactor = LaurentPolynomial::monomial(Monomial::new(0, 0, -shape.exponent_sum()), 1);
    prefactor.try_mul(&sum)
}

/// Outcome of an exact two-sided identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistReport {
    pub m: u32,
    pub n: u32,
    pub pass: bool,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
}

/// Full-twist identity: `P_-(m,n) = T^{n^2-1} * P_+(m+n,n)`, exactly.
pub fn verify_full_twist(shape: TorusShape) -> Result<TwistReport> {
    let n = i64::from(shape.n());
    let lhs = p_minus(shape)?;
    let twist = LaurentPolynomial::monomial(Monomial::new(0, 0, n * n - 1), 1);
    let rhs = twist.try_mul(&p_plus(shape.star_shape())?)?;
    Ok(TwistReport {
        m: shape.m(),
        n: shape.n(),
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}

/// The HOMFLY shadow of the full twist identity:
/// `P_-(m,n)|_{T=-1} = (-1)^{n-1} * P_+(m+n,n)|_{T=-1}`.
pub fn kalman_check(shape: TorusShape) -> Result<TwistReport> {
    let homfly = Assignment::t_minus_one();
    let lhs = p_minus(shape)?.specialize(&homfly)?;
    let sign = if shape.n().is_multiple_of(2) { -1 } else { 1 };
    let rhs = p_plus(shape.star_shape())?
        .specialize(&homfly)?
        .try_mul(&LaurentPolynomial::constant(sign))?;
    Ok(TwistReport {
        m: shape.m(),
        n: shape.n(),
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}

/// The bare sum `sum q^area t^h` in the `(q,t)` view: the first slot holds
/// the exponent of `q` and the third the exponent of `t`.
pub fn qt_catalan(shape: TorusShape) -> Result<LaurentPolynomial> {
    let mut sum = LaurentPolynomial::zero();
    for path in enumerate(shape) {
        let mono = Monomial::new(path.area() as i64, 0, path.h_statistic() as i64);
        sum = sum.try_add(&LaurentPolynomial::monomial(mono, 1))?;
    }
    Ok(sum)
}

/// Swap the two exponent slots of a `(q,t)`-view polynomial.
pub fn qt_swap(p: &LaurentPolynomial) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (m, &c) in p.terms() {
        out = out
            .try_add(&LaurentPolynomial::monomial(
                Monomial::new(m.dt, m.dalpha, m.dq),
                c,
            ))
            .expect("slot swap cannot overflow");
    }
    out
}

/// Rewrite a polynomial of the sub-algebra generated by `q`, `t` and
/// `T^-1 a^2` in the primed convention `q' = t`, `a' = -T^-1 a^2`, `t' = q`.
/// In the output the first slot is the exponent of `q'`, the second of `a'`
/// and the third of `t'`. Monomials outside the sub-algebra are reported.
pub fn convert_convention(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for (m, &c) in p.terms() {
        let fail = Error::NotConvertible {
            dq: m.dq,
            dalpha: m.dalpha,
            dt: m.dt,
        };
        // Solve Q^dq a^da T^dt = q^x t^y (T^-1 a^2)^z over the integers.
        if m.dalpha % 2 != 0 {
            return Err(fail);
        }
        let z = m.dalpha / 2;
        if (m.dt + z) % 2 != 0 {
            return Err(fail);
        }
        let y = (m.dt + z) / 2;
        if m.dq % 2 != 0 {
            return Err(fail);
        }
        let x = m.dq / 2 + y;
        // (T^-1 a^2)^z = (-1)^z a'^z
        let coeff = if z.rem_euclid(2) == 1 { -c } else { c };
        out = out.try_add(&LaurentPolynomial::monomial(Monomial::new(y, z, x), coeff))?;
    }
    Ok(out)
}

/// Inverse of [`convert_convention`]; the round trip is the identity.
pub fn convert_convention_inverse(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for (m, &c) in p.terms() {
        let (y, z, x) = (m.dq, m.dalpha, m.dt);
        let mono = Monomial::new(2 * x - 2 * y, 2 * z, 2 * y - z);
        let coeff = if z.rem_euclid(2) == 1 { -c } else { c };
        out = out.try_add(&LaurentPolynomial::monomial(mono, coeff))?;
    }
    Ok(out)
}
