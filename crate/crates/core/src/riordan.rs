//! Riordan arrays `(d(x), h(x))` and the name-expression vocabulary used to
//! build them from the command line.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{named, SeriesName, TruncatedSeries};

/// Lower-triangular matrix whose column `i` has generating function
/// `d(x) h(x)^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    d: TruncatedSeries,
    h: TruncatedSeries,
}

impl RiordanArray {
    pub fn new(d: TruncatedSeries, h: TruncatedSeries) -> Result<Self> {
        if !d.coeffs()[0].is_one() {
            return Err(Error::InvalidRiordan("d(0) must be 1"));
        }
        if !h.coeffs()[0].is_zero() {
            return Err(Error::InvalidRiordan("h(0) must be 0"));
        }
        Ok(RiordanArray { d, h })
    }

    pub fn order(&self) -> usize {
        self.d.order().min(self.h.order())
    }

    /// Column `i` as a series: `d h^i`.
    pub fn column(&self, i: usize) -> TruncatedSeries {
        self.d.mul(&self.h.pow(i as u32))
    }

    /// `[x^n] d(x) h(x)^i`.
    pub fn entry(&self, n: usize, i: usize) -> Result<BigRational> {
        if n > self.order() {
            return Err(Error::TruncationExceeded {
                requested: n,
                order: self.order(),
            });
        }
        if i > n {
            return Ok(BigRational::zero());
        }
        Ok(self.column(i).coeff(n)?.clone())
    }

    /// Rows `0..=n_max` of the triangle, certified integral.
    pub fn matrix(&self, n_max: usize) -> Result<Vec<Vec<BigInt>>> {
        if n_max > self.order() {
            return Err(Error::TruncationExceeded {
                requested: n_max,
                order: self.order(),
            });
        }
        let cols: Vec<TruncatedSeries> = (0..=n_max).map(|i| self.column(i)).collect();
        (0..=n_max)
            .map(|n| (0..=n).map(|i| cols[i].int_coeff(n)).collect())
            .collect()
    }
}

/// A product of named series powers, e.g. `x*S^2` or `one_plus_x2*S^4*one_over_1px`.
/// `S_pow_k` is accepted as a spelling of `S^k`. The empty product is `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameExpr {
    factors: Vec<(SeriesName, u32)>,
}

impl NameExpr {
    pub fn factors(&self) -> &[(SeriesName, u32)] {
        &self.factors
    }

    pub fn eval(&self, order: usize) -> TruncatedSeries {
        self.factors
            .iter()
            .fold(TruncatedSeries::one(order), |acc, (name, k)| {
                acc.mul(&named(*name, order).pow(*k))
            })
    }
}

impl FromStr for NameExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(NameExpr {
                factors: Vec::new(),
            });
        }
        let mut factors = Vec::new();
        for raw in s.split('*') {
            let raw = raw.trim();
            let (name, k) = if let Some(k) = raw.strip_prefix("S_pow_") {
                ("S", k)
            } else {
                raw.split_once('^').unwrap_or((raw, "1"))
            };
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {raw:?}")))?;
            factors.push((name.parse::<SeriesName>()?, k));
        }
        Ok(NameExpr { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn array(d: &str, h: &str) -> RiordanArray {
        let n = 12;
        RiordanArray::new(
            d.parse::<NameExpr>().unwrap().eval(n),
            h.parse::<NameExpr>().unwrap().eval(n),
        )
        .unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn entry_examples() {
        let u = array("S^3*one_over_1px", "x*S^2");
        assert_eq!(u.entry(1, 0).unwrap(), int(5));
        assert_eq!(u.entry(2, 1).unwrap(), int(9));
        let h = array("S^2", "x*S_pow_2");
        assert_eq!(h.entry(3, 1).unwrap(), int(48));
        let p = array("one_plus_x2*S^4*one_over_1px", "x*S^2");
        // entry (n, i) holds the point count at (n+1, i+1)
        assert_eq!(p.entry(3, 1).unwrap(), int(86));
        assert_eq!(p.entry(4, 2).unwrap(), int(146));
    }

    #[test]
    fn construction_checks() {
        let one = TruncatedSeries::one(4);
        let x = TruncatedSeries::x(4);
        assert_eq!(
            RiordanArray::new(x.clone(), x.clone()).unwrap_err(),
            Error::InvalidRiordan("d(0) must be 1")
        );
        assert_eq!(
            RiordanArray::new(one.clone(), one.clone()).unwrap_err(),
            Error::InvalidRiordan("h(0) must be 0")
        );
        let pascal = RiordanArray::new(
            TruncatedSeries::from_integers([1, 1, 1, 1, 1], 4),
            x.mul(&TruncatedSeries::from_integers([1, 1, 1, 1, 1], 4)),
        )
        .unwrap();
        assert_eq!(
            pascal.matrix(3).unwrap()[3],
            vec![1, 3, 3, 1]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert!(matches!(
            pascal.entry(5, 0).unwrap_err(),
            Error::TruncationExceeded { .. }
        ));
    }

    #[test]
    fn name_expr_rejects_unknown() {
        assert!("T^2".parse::<NameExpr>().is_err());
        assert!("S^x".parse::<NameExpr>().is_err());
    }
}
