//! Exact arithmetic substrate: finite fields, integer number theory and the
//! arithmetic predicates that reduce some group-theoretic case analysis to
//! integer facts.

mod field;
mod numtheory;
mod predicates;

pub use field::{Field, MAX_FIELD_ORDER};
pub use numtheory::{
    divisors, euler_phi, factor, gcd, is_prime, is_prime_power, lcm, mulmod, multiplicative_order,
    powmod, IntFact,
};
pub use predicates::{
    lemma22_case3_scan, odd_prime_bound_exceeds_one, suzuki_factor_check, SUZUKI_MAX_EXPONENT,
    TERNARY_SCAN_MAX,
};
