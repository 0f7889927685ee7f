//! Character tables by the Dixon–Schneider method.
//!
//! Values are stored as eigenvalue multiplicities ([`Cyclotomic`]); reality,
//! rationality and the orthogonality relations are decided exactly on that
//! representation.

mod checks;
mod cyclotomic;
mod dixon;
mod modp;

use serde::{Deserialize, Serialize};

use crate::classes::{real_data, ClassSet};
use crate::{Error, Result};

pub use checks::{lemma31_check, lemma41_check, restriction_norm, Lemma31Report, Lemma41Witness};
pub use cyclotomic::{cyclotomic_polynomial, integer_at_root_of_unity, mobius, Cyclotomic};
pub use dixon::{character_table, class_matrices, class_matrix, dixon_prime, MAX_TABLE_CLASSES};

/// An irreducible character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
    pub real: bool,
    pub rational: bool,
}

impl Character {
    pub fn new(degree: u64, values: Vec<Cyclotomic>) -> Character {
        let real = values.iter().all(Cyclotomic::is_real);
        let rational = values.iter().all(Cyclotomic::is_rational);
        Character {
            degree,
            values,
            real,
            rational,
        }
    }

    pub fn conj(&self) -> Character {
        Character::new(self.degree, self.values.iter().map(Cyclotomic::conj).collect())
    }

    /// Image under `ζ ↦ ζ^j` applied to every value.
    pub fn galois(&self, j: i64) -> Character {
        Character::new(self.degree, self.values.iter().map(|v| v.galois(j)).collect())
    }

    /// True when every listed class lies in the kernel.
    pub fn trivial_on(&self, class_indices: &[usize]) -> bool {
        class_indices
            .iter()
            .all(|&k| self.values[k].is_trivial_of_degree(self.degree))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group_order: u64,
    pub exponent: u64,
    pub prime: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub class_real: Vec<bool>,
    pub class_rational: Vec<bool>,
    pub rows: Vec<Character>,
}

impl CharacterTable {
    fn from_parts(classes: &ClassSet, prime: u64, rows: Vec<Character>) -> CharacterTable {
        let c = classes.classes();
        CharacterTable {
            group_order: classes.group_order(),
            exponent: classes.exponent(),
            prime,
            class_sizes: c.iter().map(|k| k.size).collect(),
            class_orders: c.iter().map(|k| k.order).collect(),
            class_real: c.iter().map(|k| k.real).collect(),
            class_rational: c.iter().map(|k| k.rational).collect(),
            rows,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// Numbers of real-valued and of rational-valued irreducible characters.
    pub fn real_rational_counts(&self) -> (usize, usize) {
        (
            self.rows.iter().filter(|r| r.real).count(),
            self.rows.iter().filter(|r| r.rational).count(),
        )
    }

    /// Verifies the table exactly: degrees, both orthogonality relations
    /// and Brauer's equalities between real (rational) rows and classes.
    pub fn check(&self) -> Result<()> {
        let n = self.group_order as i128;
        let r = self.class_sizes.len();
        if self.rows.len() != r {
            return Err(Error::Integrity(format!("{} rows for {r} classes", self.rows.len())));
        }
        let sum_sq: u128 = self.rows.iter().map(|c| (c.degree as u128).pow(2)).sum();
        if sum_sq != n as u128 {
            return Err(Error::Integrity(format!("sum of squared degrees {sum_sq} ≠ {n}")));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if !(n as u64).is_multiple_of(row.degree) || !row.values[0].is_trivial_of_degree(row.degree) {
                return Err(Error::Integrity(format!("row {i} has an inconsistent degree")));
            }
            let mut acc = vec![0i128; self.exponent as usize];
            for (k, v) in row.values.iter().enumerate() {
                v.accumulate_norm(self.class_sizes[k] as i128, &mut acc);
            }
            if integer_at_root_of_unity(acc) != Some(n) {
                return Err(Error::Integrity(format!("row {i} is not of norm one")));
            }
        }
        for k in 0..r {
            let mut acc = vec![0i128; self.class_orders[k] as usize];
            for row in &self.rows {
                row.values[k].accumulate_norm(1, &mut acc);
            }
            let centralizer = n / self.class_sizes[k] as i128;
            if integer_at_root_of_unity(acc) != Some(centralizer) {
                return Err(Error::Integrity(format!("column {k} fails orthogonality")));
            }
        }
        let (kr, kq) = self.real_rational_counts();
        let real_classes = self.class_real.iter().filter(|&&b| b).count();
        let rational_classes = self.class_rational.iter().filter(|&&b| b).count();
        if kr != real_classes || kq != rational_classes {
            return Err(Error::Integrity(format!(
                "{kr} real / {kq} rational rows against {real_classes} real / \
                 {rational_classes} rational classes"
            )));
        }
        Ok(())
    }

    /// CSV with one row per character; values in exact `E(n)^m` notation.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,real,rational");
        for label in class_labels(&self.class_orders) {
            out.push(',');
            out.push_str(&label);
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{},{},{}", row.degree, row.real, row.rational));
            for v in &row.values {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// GAP-style labels (`1a`, `2a`, `5a`, `5b`, …) for classes with these
/// element orders.
pub fn class_labels(orders: &[u64]) -> Vec<String> {
    (0..orders.len())
        .map(|k| format!("{}{}", orders[k], class_suffix(k, orders)))
        .collect()
}

fn class_suffix(k: usize, orders: &[u64]) -> String {
    let rank = orders[..k].iter().filter(|&&o| o == orders[k]).count();
    let mut label = String::new();
    let mut x = rank;
    loop {
        label.insert(0, (b'a' + (x % 26) as u8) as char);
        if x < 26 {
            break;
        }
        x = x / 26 - 1;
    }
    label
}

/// Real and rational row counts, cross-checked against the classes.
pub fn real_rational_counts(table: &CharacterTable, classes: &ClassSet) -> Result<(usize, usize)> {
    let (kr, kq) = table.real_rational_counts();
    let rd = real_data(classes);
    if kr != rd.real_classes || kq != rd.rational_classes {
        return Err(Error::Integrity(format!(
            "Brauer mismatch: {kr}/{kq} rows against {}/{} classes",
            rd.real_classes, rd.rational_classes
        )));
    }
    Ok((kr, kq))
}

#[cfg(test)]
mod tests;
