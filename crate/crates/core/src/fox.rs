//! Fox free differential calculus and Alexander invariants.
//!
//! The derivative `d/dg` on the integral group ring `ZF` is the linear map
//! with `dg/dg = 1`, `d(g^-1)/dg = -g^-1` and `d(uv)/dg = du/dg + u dv/dg`.
//! Abelianizing along `g -> t^(w_g)` turns the relator-by-generator matrix
//! of derivatives into the Alexander matrix, whose `(n-1)`-minors generate
//! the first elementary ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::FoxError;
use crate::laurent::LaurentPolynomial;
use crate::matrix::integer_kernel;
use crate::presentation::Presentation;
use crate::word::{Generator, Letter, Word};

/// Finite integer combination of freely reduced words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::identity())
    }

    pub fn word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            out.add_term(u.multiply(w), c);
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> GroupRingDisplay<'a> {
        GroupRingDisplay { elem: self, names }
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, &a) in &self.terms {
            for (v, &b) in &rhs.terms {
                out.add_term(u.multiply(v), a * b);
            }
        }
        out
    }
}

pub struct GroupRingDisplay<'a> {
    elem: &'a GroupRingElement,
    names: &'a [String],
}

impl fmt::Display for GroupRingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, &c)) in self.elem.terms.iter().enumerate() {
            if c < 0 {
                f.write_str(if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                f.write_str(" + ")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}")?;
                if !w.is_empty() {
                    f.write_str("*")?;
                }
            }
            if abs != 1 || !w.is_empty() {
                if !w.is_empty() {
                    write!(f, "{}", w.display(self.names))?;
                }
            } else {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}

/// `d w / d g`: sum over the letters of `w` equal to `g^(+-1)` of
/// `+prefix` (for `g`) or `-prefix * g^-1` (for `g^-1`).
pub fn fox_derivative(w: &Word, g: Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (prefix, letter) in w.prefixes() {
        if letter.generator != g.0 {
            continue;
        }
        if letter.inverse {
            out.add_term(prefix.multiply(&Word::letter(letter)), -1);
        } else {
            out.add_term(prefix, 1);
        }
    }
    out
}

/// Checks `sum_g (dw/dg)(g - 1) = w - 1` in `ZF`, with `n` generators.
pub fn fundamental_identity_check(w: &Word, n: usize) -> bool {
    let mut lhs = GroupRingElement::zero();
    for g in 0..n {
        let mut g_minus_one = GroupRingElement::word(Word::letter(Letter::pos(g)));
        g_minus_one.add_term(Word::identity(), -1);
        lhs = &lhs + &(&fox_derivative(w, Generator(g)) * &g_minus_one);
    }
    let mut rhs = GroupRingElement::word(w.clone());
    rhs.add_term(Word::identity(), -1);
    lhs == rhs
}

/// Exponents of `t` assigned to the generators by a surjection onto `<t>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientationWeights(Vec<i64>);

impl OrientationWeights {
    /// Validates that `weights` is primitive, nonzero and kills every relator.
    pub fn new(p: &Presentation, weights: Vec<i64>) -> Result<Self, FoxError> {
        let n = p.generator_count();
        let g = weights.iter().fold(0i64, |g, w| g.gcd(w));
        let kills = p.relators().iter().all(|r| r.exponent_sums(n).dot(&weights) == 0);
        if weights.len() != n || g != 1 || !kills {
            return Err(FoxError::InvalidWeights(weights));
        }
        Ok(OrientationWeights(weights))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        OrientationWeights(self.0.iter().map(|w| -w).collect())
    }

    pub fn exponent(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| l.sign() * self.0[l.generator]).sum()
    }
}

impl fmt::Display for OrientationWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The primitive kernel vector of the exponent matrix, first nonzero entry
/// positive. Requires the abelianization to have free rank one.
pub fn solve_orientation_weights(p: &Presentation) -> Result<OrientationWeights, FoxError> {
    let kernel = integer_kernel(&p.exponent_matrix());
    if kernel.len() != 1 {
        return Err(FoxError::FreeRank(kernel.len()));
    }
    let v = &kernel[0];
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let weights: Vec<i64> = v
        .iter()
        .map(|x| {
            let x = if flip { -x } else { x.clone() };
            i64::try_from(x).map_err(|_| FoxError::InvalidWeights(vec![]))
        })
        .collect::<Result<_, _>>()?;
    OrientationWeights::new(p, weights)
}

pub fn abelianize(e: &GroupRingElement, w: &OrientationWeights) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (word, c) in e.terms() {
        out.add_term(w.exponent(word), BigInt::from(c));
    }
    out
}

/// `t^w_g - 1`
fn generator_minus_one(w: &OrientationWeights, g: usize) -> LaurentPolynomial {
    &LaurentPolynomial::monomial(1, w.as_slice()[g]) - &LaurentPolynomial::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderMatrix {
    pub entries: Vec<Vec<LaurentPolynomial>>,
    pub weights: OrientationWeights,
    pub generators: usize,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.generators
    }

    /// Minors obtained by choosing `size` rows and `size` columns.
    pub fn minors(&self, size: usize) -> Vec<LaurentPolynomial> {
        let mut out = Vec::new();
        if size > self.rows() || size > self.cols() {
            return out;
        }
        for rows in combinations(self.rows(), size) {
            for cols in combinations(self.cols(), size) {
                let sub: Vec<Vec<LaurentPolynomial>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
                out.push(laurent_determinant(&sub));
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion along the first row.
fn laurent_determinant(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    match m.len() {
        0 => LaurentPolynomial::one(),
        1 => m[0][0].clone(),
        n => {
            let mut det = LaurentPolynomial::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPolynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * &laurent_determinant(&minor);
                det = if j % 2 == 0 { &det + &term } else { &det - &term };
            }
            det
        }
    }
}

pub fn alexander_matrix(p: &Presentation) -> Result<AlexanderMatrix, FoxError> {
    let w = solve_orientation_weights(p)?;
    alexander_matrix_with_weights(p, &w)
}

/// Abelianized Fox derivatives of the cyclically reduced relators, with the
/// row identity `sum_j a_ij (t^w_j - 1) = 0` verified.
pub fn alexander_matrix_with_weights(
    p: &Presentation,
    w: &OrientationWeights,
) -> Result<AlexanderMatrix, FoxError> {
    let n = p.generator_count();
    let mut entries = Vec::with_capacity(p.relators().len());
    for (i, r) in p.relators().iter().enumerate() {
        let r = r.cyclic_reduce();
        let row: Vec<LaurentPolynomial> =
            (0..n).map(|g| abelianize(&fox_derivative(&r, Generator(g)), w)).collect();
        let check = row
            .iter()
            .enumerate()
            .fold(LaurentPolynomial::zero(), |acc, (g, a)| &acc + &(a * &generator_minus_one(w, g)));
        if !check.is_zero() {
            return Err(FoxError::IdentityViolation(i));
        }
        entries.push(row);
    }
    Ok(AlexanderMatrix { entries, weights: w.clone(), generators: n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Principality {
    /// A minor equals the gcd up to a unit and all minors are multiples of
    /// it, so the first elementary ideal is generated by the gcd.
    CertifiedPrincipal,
    /// Only the gcd of the minors is known.
    GcdOnly,
}

impl fmt::Display for Principality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Principality::CertifiedPrincipal => "certified principal",
            Principality::GcdOnly => "gcd only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderResult {
    /// Unit-normalized.
    pub polynomial: LaurentPolynomial,
    pub principality: Principality,
    pub weights: OrientationWeights,
}

pub fn alexander_polynomial(p: &Presentation) -> Result<AlexanderResult, FoxError> {
    let w = solve_orientation_weights(p)?;
    alexander_polynomial_with_weights(p, &w)
}

pub fn alexander_polynomial_with_weights(
    p: &Presentation,
    w: &OrientationWeights,
) -> Result<AlexanderResult, FoxError> {
    let matrix = alexander_matrix_with_weights(p, w)?;
    let size = p.generator_count().saturating_sub(1);
    let minors: Vec<LaurentPolynomial> = matrix.minors(size).into_iter().filter(|m| !m.is_zero()).collect();
    let Some(first) = minors.first() else {
        return Err(FoxError::ElementaryIdealZero);
    };
    let mut gcd = first.normalize_unit().expect("nonzero");
    for m in &minors[1..] {
        gcd = gcd.gcd(m).expect("nonzero");
    }
    let all_multiples = minors.iter().all(|m| gcd.divides(m).is_some());
    let attained = minors.iter().any(|m| m.unit_equivalent(&gcd));
    let principality = if all_multiples && attained {
        Principality::CertifiedPrincipal
    } else {
        Principality::GcdOnly
    };
    Ok(AlexanderResult { polynomial: gcd, principality, weights: w.clone() })
}

/// True when `d` may still be the Alexander polynomial of a classical knot:
/// symmetric up to units and `|d(1)| = 1`.
pub fn is_knot_like(d: &LaurentPolynomial) -> bool {
    d.is_symmetric() && d.evaluate_at(1).map(|v| v.abs().is_one()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    fn xy_word(s: &str) -> Word {
        pres("<x, y | >").parse_word(s).unwrap()
    }

    #[test]
    fn derivative_base_rules() {
        let x = xy_word("x");
        assert_eq!(fox_derivative(&x, Generator(0)), GroupRingElement::one());
        let mut minus_x_inv = GroupRingElement::zero();
        minus_x_inv.add_term(xy_word("X"), -1);
        assert_eq!(fox_derivative(&xy_word("X"), Generator(0)), minus_x_inv);
        assert!(fox_derivative(&Word::identity(), Generator(0)).is_zero());
        assert!(fox_derivative(&x, Generator(1)).is_zero());
    }

    #[test]
    fn trefoil_derivative() {
        let r = xy_word("xyxYXY");
        let d = fox_derivative(&r, Generator(0));
        let mut expected = GroupRingElement::one();
        expected.add_term(xy_word("xy"), 1);
        expected.add_term(xy_word("xyxYX"), -1);
        assert_eq!(d, expected);
        let w = OrientationWeights(vec![1, 1]);
        assert_eq!(abelianize(&d, &w), lp("1-t+t^2"));
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(d.display(&names).to_string(), "1 + xy - xyxYX");
    }

    #[test]
    fn orientation_weights() {
        assert_eq!(solve_orientation_weights(&pres("<x, y | xyxYXyxyXY>")).unwrap().as_slice(), &[1, -1]);
        assert_eq!(solve_orientation_weights(&pres("<x, y | xyxYXYxyXY>")).unwrap().as_slice(), &[1, 1]);
        assert_eq!(solve_orientation_weights(&pres("<x | >")).unwrap().as_slice(), &[1]);
        assert_eq!(solve_orientation_weights(&pres("<x, y | >")), Err(FoxError::FreeRank(2)));
        assert_eq!(solve_orientation_weights(&pres("<x | x^2>")), Err(FoxError::FreeRank(0)));
        assert!(OrientationWeights::new(&pres("<x, y | xy>"), vec![2, -2]).is_err());
        assert!(OrientationWeights::new(&pres("<x, y | xy>"), vec![1, 1]).is_err());
    }

    #[test]
    fn weights_with_torsion_in_h1() {
        // H1 = Z + Z/2
        let p = pres("<x, y | y^2, xyXY>");
        assert_eq!(solve_orientation_weights(&p).unwrap().as_slice(), &[1, 0]);
    }

    #[test]
    fn alexander_matrices_of_family() {
        let m = alexander_matrix(&pres("<x, y | xyxYXYxyXY>")).unwrap();
        assert_eq!(m.entries, vec![vec![lp("2-2t+t^2"), lp("-2+2t-t^2")]]);
        let m = alexander_matrix(&pres("<x, y | xyxyXYxYXY>")).unwrap();
        assert_eq!(m.entries, vec![vec![lp("1-t+2t^2-t^3"), lp("-1+t-2t^2+t^3")]]);
        let m = alexander_matrix(&pres("<x | >")).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
        let ee = alexander_matrix(&pres("<x, y | xyxYXyxyXY>")).unwrap();
        assert_eq!(ee.entries[0][0], lp("3-t-t^-1"));
    }

    #[test]
    fn alexander_polynomials() {
        let a = alexander_polynomial(&pres("<x, y | xyxYXyxyXY>")).unwrap();
        assert_eq!(a.polynomial, lp("t^2-3t+1"));
        assert_eq!(a.principality, Principality::CertifiedPrincipal);
        let a = alexander_polynomial(&pres("<x, y | xyxYXY>")).unwrap();
        assert_eq!(a.polynomial, lp("t^2-t+1"));
        let a = alexander_polynomial(&pres("<x | >")).unwrap();
        assert_eq!(a.polynomial, lp("1"));
        assert_eq!(
            alexander_polynomial(&pres("<x, y, z | xyXY>")),
            Err(FoxError::FreeRank(3))
        );
    }

    #[test]
    fn gcd_only_when_no_minor_attains_gcd() {
        // H1 = Z + Z/2; the 1-minors are 2 and t+1, generating a non-principal ideal.
        let p = pres("<x, y | y^2, xyXy>");
        let m = alexander_matrix(&p).unwrap();
        assert_eq!(m.entries, vec![vec![lp("0"), lp("2")], vec![lp("0"), lp("t+1")]]);
        let a = alexander_polynomial(&p).unwrap();
        assert_eq!(a.polynomial, lp("1"));
        assert_eq!(a.principality, Principality::GcdOnly);
    }

    #[test]
    fn fundamental_identity_examples() {
        assert!(fundamental_identity_check(&Word::identity(), 2));
        assert!(fundamental_identity_check(&xy_word("xyxyXyxYXY"), 2));
        assert!(fundamental_identity_check(&xy_word("XXyxYYYx"), 2));
    }

    #[test]
    fn knot_like_polynomials() {
        assert!(is_knot_like(&lp("t^2-3t+1")));
        assert!(!is_knot_like(&lp("2-2t+t^2")));
        assert!(!is_knot_like(&lp("1-t+2t^2-t^3")));
        assert!(!is_knot_like(&lp("t^2+t+1")));
    }
}
