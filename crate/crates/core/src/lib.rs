//! Exact combinatorial engine for superpolynomials of positive torus knots.
//!
//! The engine evaluates the Dyck-path formula for the superpolynomial of the
//! `(m,n)`-torus knot, extracts the extreme alpha-coefficients both from the
//! full polynomial and from their direct closed forms, and machine-verifies
//! the full-twist identity relating them, together with the supporting area
//! and line-counting lemmas and the star bijection between plain and rugged
//! paths. Classical oracles (a two-strand skein recursion and the torus-knot
//! Alexander closed form) cross-check the `T = -1` shadow.
//!
//! All arithmetic is exact: integer coefficients with overflow detection,
//! integer exponents, and integer lattice geometry. No floating point.

pub mod checks;
pub mod dyck;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod superpoly;
mod util;

pub use checks::{
    coprime_pairs, run_check, run_checks_for_pair, run_sweep, CheckKind, CheckReport, SweepSpec,
    SweepSummary,
};
pub use dyck::{
    classify_pair, enumerate, enumerate_rugged, geometric_h, Bucket, DyckPath, OuterRecord,
    OuterVertex, PairClassification, PathIter, PathRecord, Step, StepRef, TorusShape,
};
pub use error::{Error, Result};
pub use oracle::{alexander_torus, check_alexander, two_strand_homfly};
pub use poly::{Assignment, LaurentPolynomial, Monomial, Replacement, Var};
pub use superpoly::{
    convert_convention, convert_convention_inverse, kalman_check, mellit_superpolynomial, p_minus,
    p_plus, qt_catalan, qt_swap, term_of_path, verify_full_twist, SuperpolyResult, TwistReport,
};

#[cfg(test)]
mod concurrency_contract {
    // Everything is immutable after construction; sharing and sending across
    // threads is part of the contract.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::LaurentPolynomial>();
        assert_send_sync::<crate::Monomial>();
        assert_send_sync::<crate::Assignment>();
        assert_send_sync::<crate::TorusShape>();
        assert_send_sync::<crate::DyckPath>();
        assert_send_sync::<crate::PathIter>();
        assert_send_sync::<crate::SuperpolyResult>();
        assert_send_sync::<crate::CheckReport>();
    }
}
