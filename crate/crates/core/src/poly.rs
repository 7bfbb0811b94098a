//! Exact one-variable Laurent polynomials with integer coefficients.
//!
//! The representation is dense: a lowest exponent plus a coefficient vector
//! with no zero coefficient at either end. The zero polynomial has an empty
//! vector.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        Self::from_coeffs(exp, vec![coeff])
    }

    /// Builds `sum coeffs[k] * x^(low + k)`.
    pub fn from_coeffs(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let terms: Vec<(i32, i64)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn max_exp(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    /// `max_exp - min_exp`, or 0 for the zero polynomial.
    pub fn span(&self) -> u32 {
        (self.max_exp() - self.min_exp()) as u32
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[k as usize]
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.max_exp(),
            coeffs,
        }
    }

    /// Substitutes `x -> x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Divides every exponent by `d`; `None` if some exponent is not divisible.
    pub fn divide_exponents(&self, d: i32) -> Option<Self> {
        assert!(d != 0);
        if self.terms().any(|(e, _)| e % d != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / d, c))))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dl = d.coeffs[0];
        let mut rem = self.clone();
        let mut q = Vec::new();
        let qlow = self.low - d.low;
        while !rem.is_zero() {
            if rem.span() < d.span() {
                return None;
            }
            let c = rem.coeffs[0];
            if c % dl != 0 {
                return None;
            }
            let k = c / dl;
            let at = (rem.low - d.low - qlow) as usize;
            q.resize(at + 1, 0);
            q[at] = k;
            rem = &rem - &d.shift(rem.low - d.low).scale(k);
        }
        Some(Self::from_coeffs(qlow, q))
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Value at `x = -1`.
    pub fn eval_minus_one(&self) -> i64 {
        self.terms()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    /// True when `coeff(e) == coeff(-e)` for every exponent.
    pub fn is_symmetric(&self) -> bool {
        self.is_zero()
            || (self.low == -self.max_exp() && self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// Ascending-exponent lexicographic comparison of the term lists.
    pub fn cmp_terms(&self, other: &Self) -> Ordering {
        self.terms().cmp(other.terms())
    }

    /// Formats with the given variable name, e.g. `-t^-4+t^-3+t^-1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            out.push_str(sign);
            let a = c.unsigned_abs();
            match e {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&a.to_string());
                    }
                    out.push_str(var);
                    if e != 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }

    /// Parses the format produced by [`LaurentPoly::display_with`]. Also
    /// accepts `*` between coefficient and variable, spaces, and exponents
    /// wrapped in parentheses.
    pub fn parse(text: &str, var: char) -> Option<Self> {
        let s: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        let s = s.replace('\u{2212}', "-");
        if s.is_empty() {
            return None;
        }
        if s == "0" {
            return Some(Self::zero());
        }
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut terms = Vec::new();
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if i > start {
                bytes[start..i].iter().collect::<String>().parse().ok()?
            } else {
                1
            };
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == var {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let paren = i < bytes.len() && bytes[i] == '(';
                    if paren {
                        i += 1;
                    }
                    let es = i;
                    if i < bytes.len() && (bytes[i] == '-' || bytes[i] == '+') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = bytes[es..i].iter().collect::<String>().parse().ok()?;
                    if paren {
                        if i >= bytes.len() || bytes[i] != ')' {
                            return None;
                        }
                        i += 1;
                    }
                }
            } else if i == start {
                return None;
            }
            terms.push((exp, sign * coeff));
        }
        Some(Self::from_terms(terms))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_terms(other)
    }
}

fn add_scaled(a: &LaurentPoly, b: &LaurentPoly, sign: i64) -> LaurentPoly {
    if a.is_zero() {
        return b.scale(sign);
    }
    if b.is_zero() {
        return a.clone();
    }
    let low = a.low.min(b.low);
    let high = a.max_exp().max(b.max_exp());
    let mut coeffs = vec![0i64; (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        coeffs[(b.low - low) as usize + k] += sign * c;
    }
    LaurentPoly::from_coeffs(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, 1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, -1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(i32, i64)> = self.terms().collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms: Vec<(i32, i64)> = Vec::deserialize(d)?;
        Ok(LaurentPoly::from_terms(terms))
    }
}
