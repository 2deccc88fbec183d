#![allow(dead_code)]

use rand::Rng;
use twoknot::{Letter, Word};

/// Unreduced letter sequence of length `0..=max_len` over `n` generators.
pub fn random_letters<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5))).collect()
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    Word::from_letters(random_letters(rng, n, max_len))
}

/// Permutations of `0..degree` as images; composition applies `a` then `b`.
pub type Perm = Vec<usize>;

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i]).collect()
}

pub fn invert(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn evaluate(word: &Word, gens: &[Perm]) -> Perm {
    let degree = gens.first().map_or(0, Vec::len);
    let mut acc: Perm = (0..degree).collect();
    for l in word.letters() {
        let g = if l.inverse { invert(&gens[l.generator]) } else { gens[l.generator].clone() };
        acc = compose(&acc, &g);
    }
    acc
}

/// Order of the permutation group generated by `gens`, by closure.
pub fn closure_order(gens: &[Perm], degree: usize) -> usize {
    let id: Perm = (0..degree).collect();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}
