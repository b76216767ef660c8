//! Truncated formal power series with exact rational coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 24;

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// Series from leading coefficients, zero-padded or cut to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I, order: usize) -> Self {
        Self::new(coeffs.into_iter().map(q).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_integers([0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `[x^n]`.
    pub fn coeff(&self, n: usize) -> Result<&BigRational> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            requested: n,
            order: self.order(),
        })
    }

    /// `[x^n]`, certified integral.
    pub fn int_coeff(&self, n: usize) -> Result<BigInt> {
        let c = self.coeff(n)?;
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(Error::NonInteger(c.to_string()))
        }
    }

    /// All coefficients, certified integral.
    pub fn int_coeffs(&self) -> Result<Vec<BigInt>> {
        (0..=self.order()).map(|n| self.int_coeff(n)).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        Self::new(
            (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
            n,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common(other);
        Self::new(
            (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
            n,
        )
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out, n)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out, n))
    }

    /// `C(t)` for this series `t`, which must have zero constant term.
    pub fn catalan_of(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "Catalan substitution needs t(0) = 0".into(),
            ));
        }
        let n = self.order();
        let cat = named(SeriesName::Catalan, n);
        // Horner over C_0 + C_1 t + ... + C_N t^N.
        let mut acc = Self::zero(n);
        for m in (0..=n).rev() {
            acc = acc.mul(self).add(&Self::constant(cat.coeffs[m].clone(), n));
        }
        Ok(acc)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The fixed set of series the library knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    /// `x`.
    X,
    /// Catalan: `C = 1 + x C^2`.
    Catalan,
    /// Large Schröder at a=b=1: `S = 1 + x S + x S^2`.
    LargeSchroder,
    /// Little Schröder at a=b=1: `(1 + S) / 2`.
    LittleSchroder,
    /// `1 / (1 + x)`.
    OneOver1px,
    /// `1 + x^2`.
    OnePlusX2,
}

impl SeriesName {
    pub const ALL: [SeriesName; 6] = [
        SeriesName::X,
        SeriesName::Catalan,
        SeriesName::LargeSchroder,
        SeriesName::LittleSchroder,
        SeriesName::OneOver1px,
        SeriesName::OnePlusX2,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            SeriesName::X => "x",
            SeriesName::Catalan => "C",
            SeriesName::LargeSchroder => "S",
            SeriesName::LittleSchroder => "s",
            SeriesName::OneOver1px => "one_over_1px",
            SeriesName::OnePlusX2 => "one_plus_x2",
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.symbol() == s)
            .ok_or_else(|| Error::Parse(format!("unknown series {s:?}")))
    }
}

/// A named series truncated at `order`, built from its defining recurrence.
pub fn named(name: SeriesName, order: usize) -> TruncatedSeries {
    let ints: Vec<BigInt> = match name {
        SeriesName::X => (0..=order).map(|n| BigInt::from((n == 1) as u8)).collect(),
        SeriesName::Catalan => {
            let mut c = vec![BigInt::one()];
            for n in 1..=order {
                let v = (0..n).map(|k| &c[k] * &c[n - 1 - k]).sum();
                c.push(v);
            }
            c
        }
        SeriesName::LargeSchroder => large_schroder_ints(order),
        SeriesName::LittleSchroder => {
            let s = large_schroder_ints(order);
            let mut out: Vec<BigInt> = vec![BigInt::one()];
            out.extend(s.iter().skip(1).map(|v| v / 2));
            out
        }
        SeriesName::OneOver1px => (0..=order)
            .map(|n| BigInt::from(if n % 2 == 0 { 1 } else { -1 }))
            .collect(),
        SeriesName::OnePlusX2 => (0..=order)
            .map(|n| BigInt::from((n == 0 || n == 2) as u8))
            .collect(),
    };
    TruncatedSeries::new(
        ints.into_iter().map(BigRational::from_integer).collect(),
        order,
    )
}

fn large_schroder_ints(order: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::one()];
    for n in 1..=order {
        let conv: BigInt = (0..n).map(|k| &s[k] * &s[n - 1 - k]).sum();
        let v = &s[n - 1] + conv;
        s.push(v);
    }
    s
}

/// `[x^m] C(x)^k`, read off the series power.
pub fn ballot_coeff(m: usize, k: u32) -> BigInt {
    named(SeriesName::Catalan, m)
        .pow(k)
        .int_coeff(m)
        .expect("powers of an integer series are integral")
}
