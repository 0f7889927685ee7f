//! Reference implementations by exhaustive search, for cross-checking.

use std::collections::{HashMap, HashSet};

use crate::perm::{PermGroup, Permutation};

/// All elements of the group generated by `gens`, by closure under right
/// multiplication.
pub fn all_elements(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i].mul(g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Conjugacy classes as sets `{g⁻¹xg : g ∈ G}`, each sorted, listed by
/// least member.
pub fn brute_force_classes(group: &PermGroup) -> Vec<Vec<Permutation>> {
    let elements = all_elements(group.generators(), group.degree());
    let mut assigned: HashMap<Permutation, usize> = HashMap::new();
    let mut classes: Vec<Vec<Permutation>> = Vec::new();
    let mut sorted = elements.clone();
    sorted.sort();
    for x in &sorted {
        if assigned.contains_key(x) {
            continue;
        }
        let mut class: Vec<Permutation> = elements
            .iter()
            .map(|g| x.conjugate_by(g))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        class.sort();
        for y in &class {
            assigned.insert(y.clone(), classes.len());
        }
        classes.push(class);
    }
    classes
}
