//! Sparse polynomials in the formal weights `a`, `b`, `c` with
//! arbitrary-precision integer coefficients, and the per-family path weights.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::paths::{
    BicoloredStep, ColoredDyckStep, DyckStep, GStep, HColor, MarkedStep, Path, SchroderStep, Step,
};

/// `a^ea · b^eb · c^ec`. Ordered degree-lexicographically: total degree
/// first, then the exponent of `a`, then `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };
    pub const A: Monomial = Monomial { a: 1, b: 0, c: 0 };
    pub const B: Monomial = Monomial { a: 0, b: 1, c: 0 };
    pub const C: Monomial = Monomial { a: 0, b: 0, c: 1 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    fn key(&self) -> (u32, u32, u32, u32) {
        (self.degree(), self.a, self.b, self.c)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in [('a', self.a), ('b', self.b), ('c', self.c)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Canonical sparse polynomial: no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(value: impl Into<BigInt>) -> Self {
        Self::term(value, Monomial::ONE)
    }

    pub fn term(coeff: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, coeff.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn a() -> Self {
        Self::monomial(Monomial::A)
    }

    pub fn b() -> Self {
        Self::monomial(Monomial::B)
    }

    pub fn c() -> Self {
        Self::monomial(Monomial::C)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending degree-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Substitutes polynomials for `a`, `b` and `c`.
    pub fn substitute(&self, a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, coeff) in &self.terms {
            let t = a.pow(m.a) * &b.pow(m.b) * &c.pow(m.c);
            out += &t.scale(coeff);
        }
        out
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(m, coeff)| {
                BigRational::from_integer(coeff.clone())
                    * Pow::pow(a, m.a)
                    * Pow::pow(b, m.b)
                    * Pow::pow(c, m.c)
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// Evaluation at integer points.
    pub fn eval_int(&self, a: i64, b: i64, c: i64) -> BigInt {
        let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        self.terms
            .iter()
            .map(|(m, coeff)| coeff * Pow::pow(&a, m.a) * Pow::pow(&b, m.b) * Pow::pow(&c, m.c))
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            match (i, coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the canonical text form, e.g. `a^3*b^2*c^2 + 2*a*b - 1`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("malformed polynomial {s:?}"));
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut out = Polynomial::zero();
        let mut rest = s;
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(q)) if q < p => (&rest[..q], Some((&rest[q + 3..], -1))),
                (Some(p), _) => (&rest[..p], Some((&rest[p + 3..], 1))),
                (None, Some(q)) => (&rest[..q], Some((&rest[q + 3..], -1))),
                (None, None) => (rest, None),
            };
            let mut coeff = BigInt::one();
            let mut m = Monomial::ONE;
            for factor in term.split('*') {
                if let Ok(n) = factor.parse::<BigInt>() {
                    coeff *= n;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                match name {
                    "a" => m.a += exp,
                    "b" => m.b += exp,
                    "c" => m.c += exp,
                    _ => return Err(err()),
                }
            }
            out.add_term(m, coeff * &sign);
            match next {
                Some((r, sg)) => {
                    rest = r;
                    sign = BigInt::from(sg);
                }
                None => break,
            }
        }
        Ok(out)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        &self * rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

/// Named step-weight tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weighting {
    /// G-Motzkin: u→1, h→a, v→b, d→c.
    GMotzkinAbc,
    /// G-Motzkin with c := b².
    GMotzkinAbBsq,
    /// Motzkin: h→a, d→b.
    MotzkinAb,
    /// Dyck: d closing a ud-peak → a, other d → b. On colored Dyck paths
    /// the colors decide.
    DyckPeakAb,
    /// Schröder: H→a, d→b.
    SchroderAb,
    /// Bicolored Motzkin: Ha→a, Hb→b, d→ab.
    BicoloredMotzkinAb,
    /// h^n strings: A→a, B→b.
    HStringAb,
    /// Marked Motzkin: A→a, a→b, b→b, D→ab, d→b².
    MarkedMotzkinAb,
}

impl Weighting {
    pub const ALL: [Weighting; 8] = [
        Weighting::GMotzkinAbc,
        Weighting::GMotzkinAbBsq,
        Weighting::MotzkinAb,
        Weighting::DyckPeakAb,
        Weighting::SchroderAb,
        Weighting::BicoloredMotzkinAb,
        Weighting::HStringAb,
        Weighting::MarkedMotzkinAb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Weighting::GMotzkinAbc => "gmotzkin_abc",
            Weighting::GMotzkinAbBsq => "gmotzkin_ab_bsq",
            Weighting::MotzkinAb => "motzkin_ab",
            Weighting::DyckPeakAb => "dyck_peak_ab",
            Weighting::SchroderAb => "schroder_ab",
            Weighting::BicoloredMotzkinAb => "bicolored_motzkin_ab",
            Weighting::HStringAb => "hstring_ab",
            Weighting::MarkedMotzkinAb => "marked_motzkin_ab",
        }
    }
}

impl FromStr for Weighting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weighting::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown weighting {s:?}")))
    }
}

/// Step alphabets that know how to weigh a step sequence.
pub trait Weighable: Step {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial>;
}

fn mismatch<S: Step>(w: Weighting) -> Error {
    Error::FamilyMismatch(format!(
        "weighting {} does not apply to {}",
        w.name(),
        std::any::type_name::<S>()
    ))
}

impl Weighable for GStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        let (h, v, d) = match w {
            Weighting::GMotzkinAbc => (Monomial::A, Monomial::B, Monomial::C),
            Weighting::GMotzkinAbBsq => (Monomial::A, Monomial::B, Monomial::new(0, 2, 0)),
            Weighting::MotzkinAb => {
                if steps.contains(&GStep::V) {
                    return Err(Error::FamilyMismatch(
                        "motzkin_ab on a path with v steps".into(),
                    ));
                }
                (Monomial::A, Monomial::ONE, Monomial::B)
            }
            _ => return Err(mismatch::<Self>(w)),
        };
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            GStep::U => m,
            GStep::H => m * h,
            GStep::V => m * v,
            GStep::D => m * d,
        }))
    }
}

impl Weighable for DyckStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::DyckPeakAb {
            return Err(mismatch::<Self>(w));
        }
        let mut m = Monomial::ONE;
        for (i, s) in steps.iter().enumerate() {
            if *s == DyckStep::D {
                m = m * if i > 0 && steps[i - 1] == DyckStep::U {
                    Monomial::A
                } else {
                    Monomial::B
                };
            }
        }
        Ok(m)
    }
}

impl Weighable for ColoredDyckStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::DyckPeakAb {
            return Err(mismatch::<Self>(w));
        }
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            ColoredDyckStep::U => m,
            ColoredDyckStep::PeakA => m * Monomial::A,
            ColoredDyckStep::D => m * Monomial::B,
        }))
    }
}

impl Weighable for SchroderStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::SchroderAb {
            return Err(mismatch::<Self>(w));
        }
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            SchroderStep::U => m,
            SchroderStep::H => m * Monomial::A,
            SchroderStep::D => m * Monomial::B,
        }))
    }
}

impl Weighable for BicoloredStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::BicoloredMotzkinAb {
            return Err(mismatch::<Self>(w));
        }
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            BicoloredStep::U => m,
            BicoloredStep::Ha => m * Monomial::A,
            BicoloredStep::Hb => m * Monomial::B,
            BicoloredStep::D => m * Monomial::new(1, 1, 0),
        }))
    }
}

impl Weighable for HColor {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::HStringAb {
            return Err(mismatch::<Self>(w));
        }
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            HColor::A => m * Monomial::A,
            HColor::B => m * Monomial::B,
        }))
    }
}

impl Weighable for MarkedStep {
    fn monomial(steps: &[Self], w: Weighting) -> Result<Monomial> {
        if w != Weighting::MarkedMotzkinAb {
            return Err(mismatch::<Self>(w));
        }
        Ok(steps.iter().fold(Monomial::ONE, |m, s| match s {
            MarkedStep::U => m,
            MarkedStep::HaA => m * Monomial::A,
            MarkedStep::HaB | MarkedStep::Hb => m * Monomial::B,
            MarkedStep::DA => m * Monomial::new(1, 1, 0),
            MarkedStep::DB => m * Monomial::new(0, 2, 0),
        }))
    }
}

/// `w(P)`: the product of the step weights of `path`.
pub fn weight<S: Weighable>(path: &Path<S>, weighting: Weighting) -> Result<Polynomial> {
    S::monomial(path.steps(), weighting).map(Polynomial::monomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{ColoredDyckPath, DyckPath, GMotzkinPath};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn ring_examples() {
        let s = Polynomial::a() + Polynomial::b();
        assert_eq!(s.eval(&q(1), &q(1), &q(7)), q(2));
        let ab = Polynomial::a() * Polynomial::b();
        assert_eq!(
            &ab * &Polynomial::b(),
            Polynomial::monomial(Monomial::new(1, 2, 0))
        );
        let w = Polynomial::monomial(Monomial::new(3, 2, 2));
        assert_eq!(w.eval(&q(1), &q(1), &q(1)), q(1));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn canonical_text() {
        let p = Polynomial::monomial(Monomial::new(3, 2, 2))
            + Polynomial::term(2, Monomial::new(1, 1, 0));
        assert_eq!(p.to_string(), "a^3*b^2*c^2 + 2*a*b");
        let p = Polynomial::a() - Polynomial::b();
        assert_eq!(p.to_string(), "a - b");
        let p = Polynomial::constant(-3) + Polynomial::b().pow(2);
        assert_eq!(p.to_string(), "b^2 - 3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        // a^2 before a*b before b^2 within one degree
        let p = (Polynomial::a() + Polynomial::b()).pow(2);
        assert_eq!(p.to_string(), "a^2 + 2*a*b + b^2");
        for text in [
            "a^2 + 2*a*b + b^2",
            "-a*c - 7",
            "0",
            "5",
            "a^3*b^2*c^2 + 2*a*b",
        ] {
            assert_eq!(text.parse::<Polynomial>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn eval_negative_point() {
        let p = Polynomial::a() * Polynomial::c() + Polynomial::b();
        assert_eq!(p.eval_int(-3, 4, 16), BigInt::from(-44));
        assert_eq!(p.eval(&q(-3), &q(4), &q(16)), q(-44));
    }

    #[test]
    fn substitute_pushes_values_through() {
        // C_2(a,b) = a^2 + ab, evaluated at (a+b, b)
        let c2 = Polynomial::a().pow(2) + Polynomial::a() * Polynomial::b();
        let sub = c2.substitute(
            &(Polynomial::a() + Polynomial::b()),
            &Polynomial::b(),
            &Polynomial::c(),
        );
        assert_eq!(sub.to_string(), "a^2 + 3*a*b + 2*b^2");
    }

    #[test]
    fn weight_examples() {
        let p = GMotzkinPath::parse("uhuduuvvdhh").unwrap();
        assert_eq!(
            weight(&p, Weighting::GMotzkinAbc).unwrap().to_string(),
            "a^3*b^2*c^2"
        );
        let ud = DyckPath::parse("ud").unwrap();
        assert_eq!(weight(&ud, Weighting::DyckPeakAb).unwrap(), Polynomial::a());
        let uudd = DyckPath::parse("uudd").unwrap();
        assert_eq!(
            weight(&uudd, Weighting::DyckPeakAb).unwrap().to_string(),
            "a*b"
        );
        let uv = GMotzkinPath::parse("uv").unwrap();
        assert_eq!(
            weight(&uv, Weighting::GMotzkinAbBsq).unwrap(),
            Polynomial::b()
        );
        let g_ud = GMotzkinPath::parse("ud").unwrap();
        assert_eq!(
            weight(&g_ud, Weighting::GMotzkinAbBsq).unwrap().to_string(),
            "b^2"
        );
        assert!(matches!(
            weight(&uv, Weighting::SchroderAb).unwrap_err(),
            Error::FamilyMismatch(_)
        ));
    }

    #[test]
    fn colored_dyck_all_a_matches_structural_rule() {
        let plain = DyckPath::parse("uududdud").unwrap();
        let colored = ColoredDyckPath::parse("uuDuDdud".replace("ud", "uD").as_str()).unwrap();
        assert_eq!(
            weight(&plain, Weighting::DyckPeakAb).unwrap(),
            weight(&colored, Weighting::DyckPeakAb).unwrap()
        );
    }

    #[test]
    fn bsq_is_c_substitution() {
        let p = GMotzkinPath::parse("uhuduuvvdhh").unwrap();
        let abc = weight(&p, Weighting::GMotzkinAbc).unwrap();
        let bsq = weight(&p, Weighting::GMotzkinAbBsq).unwrap();
        assert_eq!(
            abc.substitute(&Polynomial::a(), &Polynomial::b(), &Polynomial::b().pow(2)),
            bsq
        );
    }
}
