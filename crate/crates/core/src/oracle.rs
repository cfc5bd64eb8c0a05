//! Independent classical computations used to cross-check the engine at
//! `T = -1`: the two-strand skein recursion for HOMFLY values and the closed
//! form of the Alexander polynomial of a torus knot.
//!
//! Neither function shares any code path with the Dyck-path evaluator beyond
//! raw polynomial arithmetic.

use crate::error::{Error, Result};
use crate::poly::{Assignment, LaurentPolynomial, Monomial};
use crate::superpoly::{mellit_superpolynomial, TwistReport};
use crate::util::gcd;

/// `Q^-1 - Q`, the skein multiplier.
fn skein_binomial() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(&[(-1, 0, 0, 1), (1, 0, 0, -1)]).unwrap()
}

/// HOMFLY value of the closure of the 2-braid `sigma_1^k`, for odd `k`.
///
/// The skein relation gives `P_k = a^2 P_{k-2} + a (Q^-1 - Q) P_{k-1}` with
/// `P_1 = 1` and `P_0 = (a^-1 - a)/(Q^-1 - Q)` (the two-component unlink,
/// forced by applying the relation to a kinked unknot). The base case is the
/// only place a division appears; we run the recursion on the scaled values
/// `S_j = (Q^-1 - Q) P_j`, which are all genuine Laurent polynomials, and
/// divide exactly once at the end. That division is exact precisely when the
/// closure is a knot, i.e. when `k` is odd; even `k` is rejected.
pub fn two_strand_homfly(k: u32) -> Result<LaurentPolynomial> {
    if k.is_multiple_of(2) {
        return Err(Error::EvenTwoBraid { k });
    }
    let skein = skein_binomial();
    let alpha_sq = LaurentPolynomial::monomial(Monomial::new(0, 2, 0), 1);
    let alpha = LaurentPolynomial::monomial(Monomial::new(0, 1, 0), 1);
    // S_0 = a^-1 - a, S_1 = Q^-1 - Q
    let mut prev = LaurentPolynomial::from_terms(&[(0, -1, 0, 1), (0, 1, 0, -1)]).unwrap();
    let mut cur = skein.clone();
    for _ in 2..=k {
        let next = alpha_sq
            .try_mul(&prev)?
            .try_add(&alpha.try_mul(&skein)?.try_mul(&cur)?)?;
        prev = cur;
        cur = next;
    }
    cur.try_div_exact_in_q(&skein)
}

/// Symmetric Alexander polynomial of the `(m,n)`-torus knot in the variable
/// `s` (stored in the first exponent slot):
///
/// ```text
/// s^{-(m-1)(n-1)/2} (s^{mn} - 1)(s - 1) / ((s^m - 1)(s^n - 1))
/// ```
///
/// computed by exact polynomial division. `(m-1)(n-1)` is even for coprime
/// pairs, so the recentering exponent is an integer and the result is
/// invariant under `s -> s^-1`.
pub fn alexander_torus(m: u32, n: u32) -> Result<LaurentPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidShape {
            m,
            n,
            reason: "extents must be positive",
        });
    }
    if gcd(u64::from(m), u64::from(n)) != 1 {
        return Err(Error::InvalidShape {
            m,
            n,
            reason: "extents must be coprime",
        });
    }
    let (m, n) = (i64::from(m), i64::from(n));
    let s_pow_minus_one =
        |e: i64| LaurentPolynomial::from_terms(&[(e, 0, 0, 1), (0, 0, 0, -1)]).unwrap();

    // (s^{mn}-1)/(s^m-1) = 1 + s^m + ... + s^{m(n-1)}
    let cyclic = s_pow_minus_one(m * n).try_div_exact_in_q(&s_pow_minus_one(m))?;
    let numerator = cyclic.try_mul(&s_pow_minus_one(1))?;
    let balanced = numerator.try_div_exact_in_q(&s_pow_minus_one(n))?;
    let shift = (m - 1) * (n - 1) / 2;
    balanced.try_mul(&LaurentPolynomial::monomial(Monomial::new(-shift, 0, 0), 1))
}

/// Check that the Alexander specialization of the superpolynomial,
/// `P(Q, a, T)` at `T = -1, a = 1`, equals the closed form under `s = Q^2`.
pub fn check_alexander(m: u32, n: u32) -> Result<TwistReport> {
    let shape = crate::dyck::TorusShape::new(m, n)?;
    let lhs = mellit_superpolynomial(shape)?
        .poly
        .specialize(&Assignment::alexander())?;
    let alex = alexander_torus(m, n)?;
    // s = Q^2: double the stored exponent
    let mut rhs = LaurentPolynomial::zero();
    for (mono, &c) in alex.terms() {
        rhs = rhs.try_add(&LaurentPolynomial::monomial(
            Monomial::new(2 * mono.dq, 0, 0),
            c,
        ))?;
    }
    Ok(TwistReport {
        m,
        n,
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}
