mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoknot::fox::{fox_derivative, fundamental_identity_check, GroupRingElement};
use twoknot::matrix::smith_normal_form;
use twoknot::word::parse_word;
use twoknot::{Generator, IntMatrix, LaurentPolynomial, Letter, Presentation, Word};

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..n, any::<bool>()).prop_map(|(g, inv)| Letter::new(g, inv)), 0..=max_len)
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(n, max_len).prop_map(Word::from_letters)
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-3i64..3, prop::collection::vec(-6i64..=6, 0..5)).prop_map(|(min, c)| LaurentPolynomial::from_coeffs(min, &c))
}

fn names(n: usize) -> Vec<String> {
    ["a", "b", "c", "d"][..n].iter().map(|s| s.to_string()).collect()
}

/// Cancels adjacent inverse pairs at randomly chosen positions until none remain.
fn reduce_in_random_order(mut v: Vec<Letter>, seed: u64) -> Vec<Letter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let spots: Vec<usize> = (0..v.len().saturating_sub(1)).filter(|&i| v[i] == v[i + 1].inv()).collect();
        if spots.is_empty() {
            return v;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        v.drain(i..i + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn free_reduction_is_confluent(v in letters(3, 64), seed in any::<u64>()) {
        let w = Word::from_letters(v.clone());
        prop_assert_eq!(w.letters(), &reduce_in_random_order(v, seed)[..]);
    }

    #[test]
    fn multiplication_is_associative(u in word(3, 20), v in word(3, 20), w in word(3, 20)) {
        prop_assert_eq!((&u * &v) * w.clone(), &u * &(&v * &w));
        prop_assert_eq!(&u * &Word::identity(), u.clone());
    }

    #[test]
    fn inverse_is_an_anti_homomorphism(u in word(3, 20), v in word(3, 20)) {
        prop_assert_eq!((&u * &v).inverse(), &v.inverse() * &u.inverse());
        prop_assert_eq!(u.inverse().inverse(), u.clone());
        prop_assert!((&u * &u.inverse()).is_empty());
    }

    #[test]
    fn exponent_sums_are_additive(u in word(4, 20), v in word(4, 20)) {
        prop_assert_eq!((&u * &v).exponent_sums(4), &u.exponent_sums(4) + &v.exponent_sums(4));
    }

    #[test]
    fn killing_commutes_with_reduction(v in letters(3, 40), g in 0usize..3) {
        let deleted_first = Word::from_letters(v.iter().copied().filter(|l| l.generator != g));
        prop_assert_eq!(Word::from_letters(v).delete_generator(g), deleted_first);
    }

    #[test]
    fn print_then_parse_is_identity(w in word(4, 30)) {
        let n = names(4);
        prop_assert_eq!(parse_word(&w.display(&n).to_string(), &n).unwrap(), w);
    }

    #[test]
    fn presentation_text_round_trips(rels in prop::collection::vec(word(3, 12), 0..4)) {
        let p = Presentation::new(names(3), rels).unwrap();
        prop_assert_eq!(p.to_string().parse::<Presentation>().unwrap(), p);
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn unit_normal_form(a in laurent(), k in -4i64..4, negate in any::<bool>()) {
        prop_assume!(!a.is_zero());
        let n = a.normalize_unit().unwrap();
        prop_assert_eq!(n.normalize_unit().unwrap(), n.clone());
        prop_assert!(a.unit_equivalent(&n));
        let mut b = a.shift(k);
        if negate { b = -b; }
        prop_assert!(b.unit_equivalent(&a));
        prop_assert_eq!(n.min_exp(), Some(0));
    }

    #[test]
    fn text_form_round_trips(a in laurent()) {
        let n = if a.is_zero() { a.clone() } else { a.normalize_unit().unwrap() };
        prop_assert_eq!(n.to_string().parse::<LaurentPolynomial>().unwrap().to_string(), n.to_string());
        prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a);
    }

    #[test]
    fn reciprocal_is_a_ring_automorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).reciprocal(), &a.reciprocal() * &b.reciprocal());
        prop_assert_eq!(a.reciprocal().reciprocal(), a.clone());
    }

    #[test]
    fn gcd_divides_and_is_symmetric(a in laurent(), b in laurent(), g in laurent()) {
        let (a, b) = (&a * &g, &b * &g);
        prop_assume!(!a.is_zero() || !b.is_zero());
        let d = a.gcd(&b).unwrap();
        prop_assert!(d.divides(&a).is_some());
        prop_assert!(d.divides(&b).is_some());
        prop_assert!(d.unit_equivalent(&b.gcd(&a).unwrap()));
        if !g.is_zero() && !(a.is_zero() && b.is_zero()) {
            prop_assert!(g.divides(&d).is_some(), "common factor {} lost in gcd {}", g, d);
        }
    }

    #[test]
    fn gcd_with_zero(a in laurent()) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.gcd(&LaurentPolynomial::zero()).unwrap().unit_equivalent(&a));
    }

    #[test]
    fn divides_returns_exact_quotient(a in laurent(), q in laurent()) {
        prop_assume!(!a.is_zero());
        let b = &a * &q;
        prop_assert_eq!(a.divides(&b), Some(q));
    }

    #[test]
    fn product_rule(u in word(3, 16), v in word(3, 16), g in 0usize..3) {
        let lhs = fox_derivative(&(&u * &v), Generator(g));
        let rhs = &fox_derivative(&u, Generator(g)) + &fox_derivative(&v, Generator(g)).left_mul(&u);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fundamental_identity(w in word(4, 32)) {
        prop_assert!(fundamental_identity_check(&w, 4));
    }
}

/// Determinantal divisors: the product of the first k invariant factors is
/// the gcd of all k x k minors. Brute force over minors for small matrices.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    use num_integer::Integer;
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
    }
    let mut g = BigInt::zero();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            let entries: Vec<Vec<i64>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| i64::try_from(a[(i, j)].clone()).unwrap()).collect())
                .collect();
            g = g.gcd(&IntMatrix::from_i64_rows(k, k, &entries).determinant());
        }
    }
    g
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let a = IntMatrix::from_i64_rows(m, n, &rows);
        let s = smith_normal_form(&a);
        let mut prefix = BigInt::one();
        for (k, d) in s.diagonal.iter().enumerate() {
            prefix *= d;
            assert_eq!(prefix, determinantal_divisor(&a, k + 1), "matrix {a}");
        }
    }
}

#[test]
fn smith_diagonal_product_is_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let a = IntMatrix::from_i64_rows(n, n, &rows);
        let product: BigInt = smith_normal_form(&a).diagonal.iter().product();
        assert_eq!(product, num_traits::Signed::abs(&a.determinant()));
    }
}

#[test]
fn group_ring_multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let elem = |rng: &mut ChaCha8Rng| {
        let mut e = GroupRingElement::zero();
        for _ in 0..rng.gen_range(0..4) {
            e.add_term(common::random_word(rng, 2, 6), rng.gen_range(-3..=3));
        }
        e
    };
    for _ in 0..200 {
        let (a, b, c) = (elem(&mut rng), elem(&mut rng), elem(&mut rng));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}
