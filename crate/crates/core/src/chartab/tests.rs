
use super::*;
use crate::algebra::gcd;
use crate::classes::oracle::all_elements;
use crate::perm::{PermGroup, Permutation};

fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

fn sl32() -> PermGroup {
    PermGroup::new(
        vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]]), p(7, &[&[1, 3], &[2, 6]])],
        7,
    )
    .unwrap()
}

fn table(g: &PermGroup) -> (ClassSet, CharacterTable) {
    let c = ClassSet::new(g).unwrap();
    let t = character_table(&c, 7).unwrap();
    (c, t)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p² > 4n`, by scanning every integer.
fn dixon_prime_oracle(n: u64, e: u64) -> u64 {
    (2u64..)
        .find(|&p| p % e == 1 && p * p > 4 * n && (2..p).all(|d| p % d != 0))
        .unwrap()
}

#[test]
fn dixon_primes() {
    for (n, e) in [(60, 30), (3, 3), (168, 84), (120, 60), (29120, 1820), (7, 7)] {
        assert_eq!(dixon_prime(n, e), dixon_prime_oracle(n, e));
    }
    // 31 ≡ 1 (mod 30) is prime and exceeds 2√60.
    assert_eq!(dixon_prime(60, 30), 31);
    assert_eq!(dixon_prime(3, 3), 7);
    assert_eq!(dixon_prime(168, 84), 337);
}

#[test]
fn a5_table() {
    let (c, t) = table(&PermGroup::alternating(5).unwrap());
    assert_eq!(t.prime, 31);
    assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
    assert_eq!(real_rational_counts(&t, &c).unwrap(), (5, 3));
    // The degree-3 rows take the values (1 ± √5)/2 on 5-elements.
    let three = &t.rows[1];
    assert!(three.real && !three.rational);
    assert_eq!(three.values[1].rational_value(), Some(-1));
    assert_eq!(three.values[2].rational_value(), Some(0));
}

#[test]
fn cyclic_seven() {
    let (_, t) = table(&PermGroup::cyclic(7).unwrap());
    assert_eq!(t.degrees(), vec![1; 7]);
    assert_eq!(t.real_rational_counts(), (1, 1));
}

#[test]
fn sl32_table() {
    let (c, t) = table(&sl32());
    assert_eq!(t.degrees(), vec![1, 3, 3, 6, 7, 8]);
    assert_eq!(real_rational_counts(&t, &c).unwrap(), (4, 4));
    assert!(!t.rows[1].real && !t.rows[2].real);
    assert_eq!(t.rows[1].conj(), t.rows[2]);
}

#[test]
fn s3_structure_constants_by_brute_force() {
    let g = PermGroup::symmetric(3).unwrap();
    let c = ClassSet::new(&g).unwrap();
    let a = class_matrices(&c);
    let elements = all_elements(g.generators(), 3);
    let r = c.len();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let z = &c.classes()[k].representative;
                let count = elements
                    .iter()
                    .flat_map(|x| elements.iter().map(move |y| (x, y)))
                    .filter(|(x, y)| {
                        c.class_of(x) == Some(i) && c.class_of(y) == Some(j) && x.mul(y) == *z
                    })
                    .count() as u64;
                assert_eq!(a[i][j][k], count, "a[{i}][{j}][{k}]");
            }
        }
    }
    // Involutions squared: three times the identity and three 3-cycles.
    assert_eq!(a[1][1][0], 3);
    assert_eq!(a[1][1][2], 3);
    for (j, row) in a[0].iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            assert_eq!(x, u64::from(j == k));
        }
    }
}

#[test]
fn a5_counting_identity() {
    let g = PermGroup::alternating(5).unwrap();
    let c = ClassSet::new(&g).unwrap();
    let a = class_matrices(&c);
    let sizes: Vec<u64> = c.classes().iter().map(|k| k.size).collect();
    for i in 0..c.len() {
        for j in 0..c.len() {
            let total: u64 = (0..c.len()).map(|k| a[i][j][k] * sizes[k]).sum();
            assert_eq!(total, sizes[i] * sizes[j]);
        }
        for k in 0..c.len() {
            assert_eq!((0..c.len()).map(|j| a[i][j][k]).sum::<u64>(), sizes[i]);
        }
    }
}

#[test]
fn tables_are_closed_under_galois_action() {
    let groups = [
        sl32(),
        PermGroup::symmetric(5).unwrap(),
        PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7).unwrap(),
        PermGroup::alternating(5).unwrap().wreath_c2().unwrap(),
    ];
    for g in groups {
        let (c, t) = table(&g);
        let e = t.exponent as i64;
        for j in (1..e).filter(|&j| gcd(j as u128, e as u128) == 1) {
            let mut images: Vec<Character> = t.rows.iter().map(|r| r.galois(j)).collect();
            let mut rows = t.rows.clone();
            let key = |r: &Character| (r.degree, r.values.clone());
            images.sort_by_key(key);
            rows.sort_by_key(key);
            assert_eq!(images, rows);
        }
        let fixed = t.rows.iter().filter(|r| r.conj() == **r).count();
        assert_eq!(fixed, t.real_rational_counts().0);
        assert!(t.degrees().iter().all(|d| c.group_order() % d == 0));
    }
}

#[test]
fn odd_order_tables_have_one_real_row() {
    let f21 = PermGroup::new(vec![p(7, &[&[0, 1, 2, 3, 4, 5, 6]]), p(7, &[&[1, 2, 4], &[3, 6, 5]])], 7).unwrap();
    let (_, t) = table(&f21);
    assert_eq!(t.degrees(), vec![1, 1, 1, 3, 3]);
    assert_eq!(t.real_rational_counts().0, 1);
}

#[test]
fn wreath_has_at_least_two_rational_rows() {
    let (_, t) = table(&PermGroup::alternating(5).unwrap().wreath_c2().unwrap());
    assert!(t.real_rational_counts().1 >= 2);
}

#[test]
fn tables_do_not_depend_on_the_seed() {
    let c = ClassSet::new(&PermGroup::symmetric(6).unwrap()).unwrap();
    let a = character_table(&c, 1).unwrap();
    let b = character_table(&c, 99).unwrap();
    assert_eq!(a, b);
}

#[test]
fn values_agree_with_permutation_character() {
    // The natural permutation character of S₅ is 1 + χ_(4,1).
    let g = PermGroup::symmetric(5).unwrap();
    let (c, t) = table(&g);
    let fixed: Vec<i64> = c
        .classes()
        .iter()
        .map(|k| (0..5).filter(|&i| k.representative.image(i) == i).count() as i64)
        .collect();
    let four = t.rows.iter().find(|r| r.degree == 4 && {
        r.values.iter().zip(&fixed).all(|(v, &f)| v.rational_value() == Some(f - 1))
    });
    assert!(four.is_some());
}

#[test]
fn lemma41_examples() {
    let s5 = PermGroup::symmetric(5).unwrap();
    let a5 = PermGroup::alternating(5).unwrap();
    let w = lemma41_check(&a5, &s5, 1).unwrap().expect("witness");
    assert_eq!(w.degree, 4);
    let s6 = PermGroup::symmetric(6).unwrap();
    let a6 = PermGroup::alternating(6).unwrap();
    assert_eq!(lemma41_check(&a6, &s6, 1).unwrap().unwrap().degree, 5);
}

#[test]
fn lemma31_examples() {
    let s5 = PermGroup::symmetric(5).unwrap();
    let a5 = PermGroup::alternating(5).unwrap();
    let r = lemma31_check(&a5, &s5, 2, 1).unwrap();
    assert_eq!((r.kr_group, r.kr_quotient, r.kr_relative), (7, 2, 5));
    assert!(r.holds());
    let r = lemma31_check(&a5, &a5, 2, 1).unwrap();
    assert_eq!((r.kr_group, r.kr_quotient, r.kr_relative), (5, 1, 4));
    assert!(r.holds());
}

#[test]
fn csv_has_header_and_rows() {
    let (_, t) = table(&PermGroup::alternating(5).unwrap());
    let csv = t.to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "degree,real,rational,1a,2a,3a,5a,5b");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("1,true,true,1,1,1,1,1"));
}
