//! Exhaustive reference computations on explicit element sets.

use std::collections::HashSet;

use crate::algebra::is_prime_power;
use crate::classes::oracle::{all_elements, brute_force_classes};
use crate::perm::{PermGroup, Permutation};

/// Closure of a set of elements under multiplication.
fn generated(seeds: &[Permutation], degree: usize) -> HashSet<Permutation> {
    all_elements(seeds, degree).into_iter().collect()
}

fn is_p_power(n: usize, p: u64) -> bool {
    n == 1 || matches!(is_prime_power(n as u64), Some((q, _)) if q == p)
}

/// The largest normal p-subgroup as an explicit element set: the subgroup
/// generated by every conjugacy class whose normal closure is a p-group.
pub fn largest_normal_p_subgroup(group: &PermGroup, p: u64) -> HashSet<Permutation> {
    let degree = group.degree();
    let mut good: Vec<Permutation> = Vec::new();
    for class in brute_force_classes(group) {
        let closure = generated(&class, degree);
        if closure.len() > 1 && is_p_power(closure.len(), p) {
            good.extend(class);
        }
    }
    generated(&good, degree)
}
