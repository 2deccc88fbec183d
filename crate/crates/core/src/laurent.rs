//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, ParseError};

/// Finite sum of `c * t^e` with `c` in `Z`, `e` in `Z`. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `coeffs[i]` is the coefficient of `t^(min_exp + i)`.
    pub fn from_coeffs(min_exp: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(min_exp + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// The unit multiple `±t^k * self` with lowest exponent 0 and positive
    /// leading coefficient.
    pub fn normalize_unit(&self) -> Result<Self, AlgebraError> {
        let min = self.min_exp().ok_or(AlgebraError::ZeroPolynomial)?;
        let shifted = self.shift(-min);
        let lead = shifted.terms.values().next_back().expect("nonzero");
        Ok(if lead.is_negative() { -shifted } else { shifted })
    }

    /// True when `self = ±t^k * other`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Substitutes `t -> t^-1`.
    pub fn reciprocal(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// True when `self` is unit-equivalent to its reciprocal.
    pub fn is_symmetric(&self) -> bool {
        self.unit_equivalent(&self.reciprocal())
    }

    /// Value at `t = 1` or `t = -1`.
    pub fn evaluate_at(&self, t0: i64) -> Result<BigInt, AlgebraError> {
        if t0 != 1 && t0 != -1 {
            return Err(AlgebraError::EvaluationPoint(t0));
        }
        Ok(self
            .terms
            .iter()
            .map(|(&e, c)| if t0 == -1 && e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .sum())
    }

    /// Returns `q` with `other = self * q` when such a Laurent polynomial
    /// with integer coefficients exists.
    pub fn divides(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if other.is_zero() {
            return Some(Self::zero());
        }
        let (a_min, a) = to_dense(self);
        let (b_min, b) = to_dense(other);
        let q = exact_div(&b, &a)?;
        Some(from_dense(b_min - a_min, &q))
    }

    /// Greatest common divisor in `Z[t, t^-1]`, unit-normalized.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(AlgebraError::GcdOfZeros),
            (false, true) => return self.normalize_unit(),
            (true, false) => return other.normalize_unit(),
            _ => {}
        }
        let (_, a) = to_dense(self);
        let (_, b) = to_dense(other);
        let content = dense_content(&a).gcd(&dense_content(&b));
        let (mut a, mut b) = (primitive_part(&a), primitive_part(&b));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = if r.is_empty() { r } else { primitive_part(&r) };
        }
        let g: Vec<BigInt> = a.iter().map(|c| c * &content).collect();
        from_dense(0, &g).normalize_unit()
    }
}

// Dense ascending coefficient vectors with no trailing zeros; empty is zero.
type Dense = Vec<BigInt>;

fn to_dense(p: &LaurentPolynomial) -> (i64, Dense) {
    let min = p.min_exp().unwrap_or(0);
    let max = p.max_exp().unwrap_or(-1);
    let mut v = vec![BigInt::zero(); (max - min + 1).max(0) as usize];
    for (&e, c) in &p.terms {
        v[(e - min) as usize] = c.clone();
    }
    (min, v)
}

fn from_dense(min_exp: i64, v: &[BigInt]) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (i, c) in v.iter().enumerate() {
        p.add_term(min_exp + i as i64, c.clone());
    }
    p
}

fn trim(v: &mut Dense) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Dense {
    let c = dense_content(v);
    let sign = if v.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    v.iter().map(|x| x / &c).collect()
}

// lc(b)^k * a reduced modulo b; only used up to primitive part.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

fn exact_div(b: &[BigInt], a: &[BigInt]) -> Option<Dense> {
    let mut r: Dense = b.to_vec();
    if r.len() < a.len() {
        return None;
    }
    let la = a.last().expect("nonzero divisor");
    let mut q = vec![BigInt::zero(); r.len() - a.len() + 1];
    while !r.is_empty() {
        if r.len() < a.len() {
            return None;
        }
        let (quot, rem) = r.last().unwrap().div_rem(la);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - a.len();
        for (i, ac) in a.iter().enumerate() {
            r[i + shift] -= &quot * ac;
        }
        q[shift] = quot;
        trim(&mut r);
    }
    Some(q)
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $f(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Descending exponents: `t^2-3t+1`, `2t^-1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if e == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = ParseError;

    /// Accepts sums of terms `c`, `ct`, `c*t^e`, `t^e` with optional signs.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(ParseError::syntax(0, "empty polynomial"));
        }
        let mut p = LaurentPolynomial::zero();
        let mut i = 0;
        let pos = |i: usize| chars.get(i).map_or(text.len(), |&(p, _)| p);
        let digits = |i: &mut usize| {
            let start = *i;
            while *i < chars.len() && chars[*i].1.is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().map(|&(_, c)| c).collect::<String>()
        };
        while i < chars.len() {
            let mut negative = false;
            match chars[i].1 {
                '+' => i += 1,
                '-' => {
                    negative = true;
                    i += 1
                }
                _ if i > 0 => return Err(ParseError::syntax(pos(i), "expected '+' or '-'")),
                _ => {}
            }
            let term_start = i;
            let coeff_digits = digits(&mut i);
            let mut coeff = if coeff_digits.is_empty() {
                BigInt::one()
            } else {
                coeff_digits.parse::<BigInt>().expect("digits")
            };
            if !coeff_digits.is_empty() && i < chars.len() && chars[i].1 == '*' {
                i += 1;
                if i >= chars.len() || chars[i].1 != 't' {
                    return Err(ParseError::syntax(pos(i), "expected 't' after '*'"));
                }
            }
            let mut exp = 0i64;
            if i < chars.len() && chars[i].1 == 't' {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    let exp_pos = pos(i);
                    let neg_exp = i < chars.len() && chars[i].1 == '-';
                    if neg_exp {
                        i += 1;
                    }
                    let d = digits(&mut i);
                    if d.is_empty() {
                        return Err(ParseError::syntax(exp_pos, "expected exponent"));
                    }
                    exp = d.parse::<i64>().map_err(|_| ParseError::syntax(exp_pos, "exponent out of range"))?;
                    if neg_exp {
                        exp = -exp;
                    }
                }
            } else if coeff_digits.is_empty() {
                return Err(ParseError::syntax(pos(term_start), "expected a coefficient or 't'"));
            }
            if negative {
                coeff = -coeff;
            }
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}
