//! Property tests: ring axioms on random small polynomials, specialization
//! homomorphisms, coefficient reconstruction, serialization round trips, and
//! path statistics on randomly selected paths of randomly selected shapes.

use proptest::prelude::*;

use fulltwist::{
    convert_convention, convert_convention_inverse, coprime_pairs, enumerate, Assignment, DyckPath,
    LaurentPolynomial, Monomial, Replacement, TorusShape, Var,
};

fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
    proptest::collection::vec(((-4i64..=4), (-4i64..=4), (-4i64..=4), (-5i64..=5)), 0..6)
        .prop_map(|terms| LaurentPolynomial::from_terms(&terms).unwrap())
}

/// A random coprime shape with m+n <= 10 together with one of its paths.
fn arb_path() -> impl Strategy<Value = DyckPath> {
    let pairs = coprime_pairs(10);
    (0..pairs.len(), any::<proptest::sample::Index>()).prop_map(move |(i, index)| {
        let (m, n) = pairs[i];
        let shape = TorusShape::new(m, n).unwrap();
        let all: Vec<DyckPath> = enumerate(shape).collect();
        all[index.index(all.len())].clone()
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        let left = a.try_add(&b).unwrap().try_add(&c).unwrap();
        let right = a.try_add(&b.try_add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        let left = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn units_behave(a in arb_poly()) {
        prop_assert_eq!(a.try_add(&LaurentPolynomial::zero()).unwrap(), a.clone());
        prop_assert_eq!(a.try_mul(&LaurentPolynomial::one()).unwrap(), a.clone());
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn inject_exponent_law(e in 0u64..50, f in -50i64..50) {
        // inject_q(e) * inject_t(f) carries dQ = 2e - 2f and dT = 2f.
        let p = LaurentPolynomial::inject_q(e).try_mul(&LaurentPolynomial::inject_t(f)).unwrap();
        let expected = LaurentPolynomial::monomial(Monomial::new(2 * e as i64 - 2 * f, 0, 2 * f), 1);
        prop_assert_eq!(p, expected);
    }

    #[test]
    fn homfly_specialization_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
        let t = Assignment::t_minus_one();
        let sum = a.try_add(&b).unwrap().specialize(&t).unwrap();
        let sum_spec = a.specialize(&t).unwrap().try_add(&b.specialize(&t).unwrap()).unwrap();
        prop_assert_eq!(sum, sum_spec);
        let prod = a.try_mul(&b).unwrap().specialize(&t).unwrap();
        let prod_spec = a.specialize(&t).unwrap().try_mul(&b.specialize(&t).unwrap()).unwrap();
        prop_assert_eq!(prod, prod_spec);
    }

    #[test]
    fn alpha_coefficients_reconstruct(a in arb_poly()) {
        let mut rebuilt = LaurentPolynomial::zero();
        for d in a.alpha_degrees() {
            let alpha_pow = LaurentPolynomial::monomial(Monomial::new(0, d, 0), 1);
            let piece = a.alpha_coefficient(d).try_mul(&alpha_pow).unwrap();
            rebuilt = rebuilt.try_add(&piece).unwrap();
        }
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: LaurentPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn convention_round_trip(x in -6i64..6, y in -6i64..6, z in -6i64..6, c in 1i64..5) {
        // c * q^x t^y (T^-1 a^2)^z is in the convertible sub-algebra.
        let q = LaurentPolynomial::inject_q(0).try_mul(&LaurentPolynomial::monomial(Monomial::new(2 * x, 0, 0), 1)).unwrap();
        let t = LaurentPolynomial::inject_t(y);
        let ahat = LaurentPolynomial::monomial(Monomial::new(0, 2 * z, -z), c);
        let p = q.try_mul(&t).unwrap().try_mul(&ahat).unwrap();
        let converted = convert_convention(&p).unwrap();
        prop_assert_eq!(convert_convention_inverse(&converted).unwrap(), p);
    }

    #[test]
    fn substitution_of_alpha_by_power_of_q(a in arb_poly(), npow in -3i64..=3) {
        // a -> Q^N keeps Q-degrees integral and leaves T untouched.
        let sub = Assignment::new()
            .substitute(Var::Alpha, Replacement::monomial(false, Monomial::new(npow, 0, 0)));
        let p = a.specialize(&sub).unwrap();
        prop_assert_eq!(p.degree_range(Var::Alpha).map(|r| r.0).unwrap_or(0), 0);
        prop_assert_eq!(p.degree_range(Var::Alpha).map(|r| r.1).unwrap_or(0), 0);
    }

    #[test]
    fn path_statistics_invariants(path in arb_path()) {
        let shape = path.shape();
        let n = shape.n() as usize;
        // Outer-vertex machinery: |V| <= n-1, k = k1 + k2, distinct keys,
        // k(p0) = 0 are all asserted inside outer_vertices/k_counts.
        let (p0, vs) = path.outer_vertices();
        prop_assert!(vs.len() < n);
        prop_assert_eq!(p0.k, 0);
        for v in &vs {
            prop_assert_eq!(v.k, v.k1 + v.k2);
            prop_assert!(v.diag_key > 0);
            prop_assert!(v.diag_key < p0.diag_key);
        }
        // Both area routes agree.
        prop_assert_eq!(path.area(), path.area_via_lemma1());
        // Star round trip.
        let starred = path.star();
        prop_assert!(starred.is_rugged());
        prop_assert_eq!(starred.unstar().unwrap(), path.clone());
        prop_assert_eq!(starred.area(), path.area());
    }

    #[test]
    fn enumeration_is_sorted_and_valid(i in 0usize..coprime_pairs(9).len()) {
        let (m, n) = coprime_pairs(9)[i];
        let shape = TorusShape::new(m, n).unwrap();
        let all: Vec<DyckPath> = enumerate(shape).collect();
        let mut sorted = all.clone();
        sorted.sort();
        prop_assert_eq!(&all, &sorted);
        for p in &all {
            // Re-validate through the public constructor.
            prop_assert!(DyckPath::parse(shape, &p.step_string()).is_ok());
        }
        prop_assert_eq!(all.len() as u64, shape.catalan_count().unwrap());
    }
}
