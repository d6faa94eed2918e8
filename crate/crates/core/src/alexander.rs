//! Alexander quandles on `Z_n`: `a^b = t*a + (1 - t)*b` for a unit `t`,
//! together with the closed forms for powers, orbits, cycle sums and
//! alternating words, and the explicit word reaching any element from a
//! generating pair.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{QuandleError, Result};
use crate::modular::{gcd, inverse, is_prime, mul_mod, multiplicative_order, pow_mod, residue};
use crate::quandle::FiniteQuandle;
use crate::word::{Letter, Word};

/// Modulus `n` and unit `t`, with `t^-1` and the order of `t` cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderParams {
    n: u64,
    t: u64,
    t_inv: u64,
    order: u64,
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    n: u64,
    t: i64,
}

impl AlexanderParams {
    pub fn new(n: u64, t: i64) -> Result<Self> {
        if n == 0 {
            return Err(QuandleError::EmptyCarrier);
        }
        let tr = residue(t as i128, n);
        let t_inv = inverse(tr, n).ok_or(QuandleError::NotAUnit { n, t })?;
        Ok(Self {
            n,
            t: tr,
            t_inv,
            order: multiplicative_order(tr, n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn t_inv(&self) -> u64 {
        self.t_inv
    }

    pub fn one_minus_t(&self) -> u64 {
        self.reduce(1 - self.t as i128)
    }

    pub fn one_minus_t_inverse(&self) -> Option<u64> {
        inverse(self.one_minus_t(), self.n)
    }

    /// Whether `t = 1` in `Z_n`, i.e. the quandle is trivial.
    pub fn is_trivial(&self) -> bool {
        self.t == 1 % self.n
    }

    /// Least `m >= 1` with `t^m = 1`.
    pub fn order_of_t(&self) -> u64 {
        self.order
    }

    #[inline]
    pub fn reduce(&self, x: i128) -> u64 {
        residue(x, self.n)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.n)
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(&self, k: i64) -> u64 {
        let e = k.unsigned_abs() % self.order;
        if k >= 0 {
            pow_mod(self.t, e, self.n)
        } else {
            pow_mod(self.t_inv, e, self.n)
        }
    }

    pub fn op(&self, a: u64, b: u64) -> u64 {
        self.reduce(self.mul(self.t, a) as i128 + self.mul(self.one_minus_t(), b) as i128)
    }

    pub fn quandle(&self) -> FiniteQuandle {
        let n = self.n as usize;
        FiniteQuandle::from_fn_unchecked(n, |a, b| self.op(a as u64, b as u64) as usize)
    }

    /// `a^{b^k} = t^k a + (1 - t^k) b`.
    pub fn power_formula(&self, a: u64, b: u64, k: i64) -> u64 {
        let tk = self.t_pow(k);
        let one_minus = self.reduce(1 - tk as i128);
        self.reduce(self.mul(tk, a % self.n) as i128 + self.mul(one_minus, b % self.n) as i128)
    }

    /// `{a^{b^k} : k = 0..m-1}`, which is the whole forward orbit of `a`
    /// under `rho_b`.
    pub fn cycle_orbit(&self, a: u64, b: u64) -> BTreeSet<u64> {
        (0..self.order as i64)
            .map(|k| self.power_formula(a, b, k))
            .collect()
    }

    /// `a + a^b + ... + a^{b^k}`.
    pub fn cycle_sum(&self, a: u64, b: u64, k: u64) -> u64 {
        (0..=k).fold(0, |acc, j| {
            self.reduce(acc as i128 + self.power_formula(a, b, (j % self.order) as i64) as i128)
        })
    }

    /// `(m mod n) * b`, the value a full cycle sum takes when `1 - t` is a unit.
    pub fn full_cycle_sum_closed_form(&self, b: u64) -> u64 {
        self.mul(self.order % self.n, b % self.n)
    }

    /// `sum_{i=1..n} (-1)^{i+1} t^{k_i + ... + k_n}`.
    pub fn signed_power_sum(&self, exponents: &[i64]) -> u64 {
        let mut suffix: i64 = 0;
        let mut acc: i128 = 0;
        for (idx, &k) in exponents.iter().enumerate().rev() {
            suffix += k;
            let term = self.t_pow(suffix) as i128;
            // idx is 0-based, so i = idx + 1 and the sign is (-1)^idx
            if idx % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        self.reduce(acc)
    }

    /// Closed-form value of an alternating word in `a` and `b`, written as
    /// `C (a - b) + a`.
    pub fn alternating_word_value(
        &self,
        a: u64,
        b: u64,
        pattern: &AlternatingPattern,
    ) -> Result<u64> {
        if pattern.exponents.is_empty() {
            return Err(QuandleError::EmptyExponents);
        }
        let s = self.signed_power_sum(&pattern.exponents) as i128;
        let c = match pattern.form() {
            AlternatingForm::Ab1 => s - 1,
            AlternatingForm::Ab2 => -s,
            AlternatingForm::Ab3 => s,
            AlternatingForm::Ab4 => -1 - s,
        };
        let c = self.reduce(c);
        let diff = self.reduce(a as i128 - b as i128);
        Ok(self.reduce(self.mul(c, diff) as i128 + (a % self.n) as i128))
    }

    /// The unique `c` with `a^c = b`, namely `(1 - t)^-1 (b - t a)`.
    pub fn solve_transport(&self, a: u64, b: u64) -> Result<u64> {
        let inv = self
            .one_minus_t_inverse()
            .ok_or(QuandleError::OneMinusTNotInvertible { n: self.n })?;
        let rhs = self.reduce(b as i128 - self.mul(self.t, a % self.n) as i128);
        Ok(self.mul(inv, rhs))
    }

    /// A word `b^-1 a b^-1 a ...` of even length that carries `a` to `c`.
    ///
    /// With exponents alternating `-1, +1` the signed power sum of an even
    /// word of length `L` is `L (1 - t) / 2`, so `L` is chosen as the even
    /// representative of `2 (1 - t)^-1 (c - a) (a - b)^-1 mod p`.
    pub fn generating_word(&self, a: u64, b: u64, c: u64) -> Result<Word> {
        let p = self.n;
        if p == 2 || !is_prime(p) {
            return Err(QuandleError::Precondition(format!(
                "modulus {p} is not an odd prime"
            )));
        }
        if self.is_trivial() {
            return Err(QuandleError::Precondition(
                "t = 1 gives the trivial quandle".into(),
            ));
        }
        let (a, b, c) = (a % p, b % p, c % p);
        if a == b {
            return Err(QuandleError::Precondition(
                "generators must be distinct".into(),
            ));
        }
        let len = self.generating_word_length(a, b, c);
        let (a, b) = (a as usize, b as usize);
        Ok(Word::new((0..len).map(|i| {
            if i % 2 == 0 {
                Letter::neg(b)
            } else {
                Letter::pos(a)
            }
        })))
    }

    fn generating_word_length(&self, a: u64, b: u64, c: u64) -> u64 {
        let p = self.n;
        let diff_inv = inverse(self.reduce(a as i128 - b as i128), p).expect("a != b mod prime");
        let d = self.mul(self.reduce(c as i128 - a as i128), diff_inv);
        let omt_inv = self.one_minus_t_inverse().expect("t != 1 mod prime");
        let base = self.mul(self.mul(2, omt_inv), d);
        if base.is_multiple_of(2) {
            base
        } else {
            base + p
        }
    }
}

impl Serialize for AlexanderParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsJson {
            n: self.n,
            t: self.t as i64,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlexanderParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ParamsJson::deserialize(d)?;
        AlexanderParams::new(j.n, j.t).map_err(serde::de::Error::custom)
    }
}

/// An Alexander quandle with its defining parameters attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderQuandle {
    params: AlexanderParams,
    quandle: FiniteQuandle,
}

impl AlexanderQuandle {
    pub fn params(&self) -> &AlexanderParams {
        &self.params
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn into_quandle(self) -> FiniteQuandle {
        self.quandle
    }
}

impl std::ops::Deref for AlexanderQuandle {
    type Target = FiniteQuandle;

    fn deref(&self) -> &FiniteQuandle {
        &self.quandle
    }
}

/// Tabulates `a^b = t a + (1 - t) b` on `Z_n`. Fails unless `gcd(t, n) = 1`.
pub fn alexander_quandle(n: u64, t: i64) -> Result<AlexanderQuandle> {
    let params = AlexanderParams::new(n, t)?;
    Ok(AlexanderQuandle {
        quandle: params.quandle(),
        params,
    })
}

/// Whether `gcd(t, n) = 1`.
pub fn is_unit(t: u64, n: u64) -> bool {
    gcd(t % n.max(1), n) == 1
}

/// Which letter the alternating word acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseLetter {
    /// `a^{b^{k_1} a^{k_2} ...}`
    A,
    /// `b^{a^{k_1} b^{k_2} ...}`
    B,
}

/// The four shapes an alternating word in two letters can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlternatingForm {
    /// base `a`, odd length, ends in a power of `b`
    Ab1,
    /// base `b`, odd length, ends in a power of `a`
    Ab2,
    /// base `a`, even length, ends in a power of `a`
    Ab3,
    /// base `b`, even length, ends in a power of `b`
    Ab4,
}

/// An alternating word `x^{y^{k_1} x^{k_2} y^{k_3} ...}` with `x` the base
/// letter and `y` the other one. The form follows from the base letter and
/// the parity of the number of exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternatingPattern {
    pub base: BaseLetter,
    pub exponents: Vec<i64>,
}

impl AlternatingPattern {
    pub fn new(base: BaseLetter, exponents: Vec<i64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(QuandleError::EmptyExponents);
        }
        Ok(Self { base, exponents })
    }

    pub fn form(&self) -> AlternatingForm {
        let odd = self.exponents.len() % 2 == 1;
        match (self.base, odd) {
            (BaseLetter::A, true) => AlternatingForm::Ab1,
            (BaseLetter::B, true) => AlternatingForm::Ab2,
            (BaseLetter::A, false) => AlternatingForm::Ab3,
            (BaseLetter::B, false) => AlternatingForm::Ab4,
        }
    }

    /// The element the word acts on.
    pub fn base_element(&self, a: usize, b: usize) -> usize {
        match self.base {
            BaseLetter::A => a,
            BaseLetter::B => b,
        }
    }

    /// The literal word `y^{k_1} x^{k_2} y^{k_3} ...`.
    pub fn word(&self, a: usize, b: usize) -> Word {
        let (x, y) = match self.base {
            BaseLetter::A => (a, b),
            BaseLetter::B => (b, a),
        };
        Word::from_powers(
            self.exponents
                .iter()
                .enumerate()
                .map(|(i, &k)| (if i % 2 == 0 { y } else { x }, k)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::validate_axioms;
    use crate::word::evaluate;

    fn p(n: u64, t: i64) -> AlexanderParams {
        AlexanderParams::new(n, t).unwrap()
    }

    #[test]
    fn construction() {
        let q = alexander_quandle(5, 2).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(q.op(a, b).unwrap(), (2 * a + 4 * b) % 5);
            }
        }
        assert!(validate_axioms(&q.rows()).unwrap().valid);
        assert_eq!(
            alexander_quandle(6, 2).unwrap_err(),
            QuandleError::NotAUnit { n: 6, t: 2 }
        );
        assert!(alexander_quandle(7, 1).unwrap().is_trivial());
        assert_eq!(
            alexander_quandle(0, 1).unwrap_err(),
            QuandleError::EmptyCarrier
        );
        assert_eq!(p(5, -3).t(), 2);
    }

    #[test]
    fn order() {
        assert_eq!(p(5, 2).order_of_t(), 4);
        assert_eq!(p(7, 2).order_of_t(), 3);
        assert_eq!(p(11, 1).order_of_t(), 1);
        assert_eq!(p(1, 0).order_of_t(), 1);
    }

    #[test]
    fn powers() {
        let q = p(5, 2);
        assert_eq!(q.power_formula(1, 0, 3), 3);
        assert_eq!(q.power_formula(1, 0, -1), 3);
        assert_eq!(q.op(3, 0), 1);
        for a in 0..5 {
            assert_eq!(q.power_formula(a, 4, 0), a);
        }
        assert_eq!(q.power_formula(2, 3, 7), q.power_formula(2, 3, 3));
    }

    #[test]
    fn orbits() {
        assert_eq!(p(5, 2).cycle_orbit(1, 0), BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(p(5, 2).cycle_orbit(3, 3), BTreeSet::from([3]));
        assert_eq!(p(7, 2).cycle_orbit(1, 0), BTreeSet::from([1, 2, 4]));
    }

    #[test]
    fn cycle_sums() {
        let q = p(5, 2);
        assert_eq!(q.cycle_sum(1, 0, 3), 0);
        assert_eq!(q.cycle_sum(0, 1, 3), 4);
        assert_eq!(q.cycle_sum(3, 1, 0), 3);
        assert_eq!(q.full_cycle_sum_closed_form(1), 4);
    }

    #[test]
    fn alternating_words() {
        let q = p(5, 2);
        let quandle = q.quandle();
        let pat = AlternatingPattern::new(BaseLetter::A, vec![1, 1]).unwrap();
        assert_eq!(pat.form(), AlternatingForm::Ab3);
        assert_eq!(q.alternating_word_value(1, 0, &pat).unwrap(), 3);
        assert_eq!(evaluate(&quandle, 1, &pat.word(1, 0)).unwrap(), 3);

        let alt: Vec<i64> = (1..=6).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        let pat = AlternatingPattern::new(BaseLetter::A, alt).unwrap();
        assert_eq!(q.signed_power_sum(&pat.exponents), 2);
        assert_eq!(q.alternating_word_value(1, 0, &pat).unwrap(), 3);
        assert_eq!(evaluate(&quandle, 1, &pat.word(1, 0)).unwrap(), 3);

        for k in -4..=4 {
            let pat = AlternatingPattern::new(BaseLetter::A, vec![k]).unwrap();
            assert_eq!(pat.form(), AlternatingForm::Ab1);
            assert_eq!(
                q.alternating_word_value(2, 4, &pat).unwrap(),
                q.power_formula(2, 4, k)
            );
        }
        assert_eq!(
            AlternatingPattern::new(BaseLetter::B, vec![]),
            Err(QuandleError::EmptyExponents)
        );
        let empty = AlternatingPattern {
            base: BaseLetter::B,
            exponents: vec![],
        };
        assert_eq!(
            q.alternating_word_value(1, 0, &empty),
            Err(QuandleError::EmptyExponents)
        );
    }

    #[test]
    fn forms_by_base_and_parity() {
        let f = |base, len| AlternatingPattern::new(base, vec![1; len]).unwrap().form();
        assert_eq!(f(BaseLetter::A, 3), AlternatingForm::Ab1);
        assert_eq!(f(BaseLetter::B, 1), AlternatingForm::Ab2);
        assert_eq!(f(BaseLetter::A, 4), AlternatingForm::Ab3);
        assert_eq!(f(BaseLetter::B, 2), AlternatingForm::Ab4);
    }

    #[test]
    fn transport() {
        let q = p(5, 2);
        assert_eq!(q.solve_transport(1, 0).unwrap(), 2);
        assert_eq!(q.op(1, 2), 0);
        for a in 0..5 {
            assert_eq!(q.solve_transport(a, a).unwrap(), a);
        }
        assert_eq!(
            p(9, 4).solve_transport(0, 1),
            Err(QuandleError::OneMinusTNotInvertible { n: 9 })
        );
    }

    #[test]
    fn generating_words() {
        let q = p(5, 2);
        let w = q.generating_word(1, 0, 3).unwrap();
        assert_eq!(w.to_string(), "0^-1 1 0^-1 1 0^-1 1");
        assert_eq!(evaluate(&q.quandle(), 1, &w).unwrap(), 3);
        assert!(q.generating_word(1, 0, 1).unwrap().is_empty());

        let q3 = p(3, 2);
        let w = q3.generating_word(0, 1, 2).unwrap();
        assert_eq!(w.to_string(), "1^-1 0 1^-1 0");
        assert_eq!(evaluate(&q3.quandle(), 0, &w).unwrap(), 2);
    }

    #[test]
    fn generating_word_preconditions() {
        assert!(p(9, 2).generating_word(0, 1, 2).is_err());
        assert!(p(2, 1).generating_word(0, 1, 1).is_err());
        assert!(p(5, 1).generating_word(0, 1, 2).is_err());
        assert!(p(5, 2).generating_word(3, 3, 2).is_err());
    }

    #[test]
    fn params_json() {
        let s = serde_json::to_string(&p(5, 2)).unwrap();
        assert_eq!(s, r#"{"n":5,"t":2}"#);
        let back: AlexanderParams = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(5, 2));
        assert!(serde_json::from_str::<AlexanderParams>(r#"{"n":6,"t":2}"#).is_err());
    }
}
