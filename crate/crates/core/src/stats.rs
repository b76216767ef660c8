//! Level statistics over uvu-avoiding G-Motzkin paths: step counts per
//! level and point counts per level, by brute force, Riordan arrays and
//! explicit sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerate::{binom, for_each_path, EnumSpec};
use crate::error::{Error, Result};
use crate::paths::{GStep, PathFamily, Pattern, Step, Surface};
use crate::riordan::RiordanArray;
use crate::series::{ballot_coeff, named, SeriesName, TruncatedSeries};

/// A level statistic. The `_r` variants are restricted to paths with no h
/// on the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatId {
    /// u-steps at level i+1 over size n+1.
    U,
    /// v-steps at level i over size n+1.
    V,
    /// d-steps at level i over size n+2.
    D,
    /// h-steps at level i over size n+1.
    H,
    /// Points at level i over size n.
    P,
    UR,
    VR,
    DR,
    /// h-steps at level i+1 over size n+2.
    HR,
    PR,
}

impl StatId {
    pub const ALL: [StatId; 10] = [
        StatId::U,
        StatId::V,
        StatId::D,
        StatId::H,
        StatId::P,
        StatId::UR,
        StatId::VR,
        StatId::DR,
        StatId::HR,
        StatId::PR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatId::U => "U",
            StatId::V => "V",
            StatId::D => "D",
            StatId::H => "H",
            StatId::P => "P",
            StatId::UR => "u_r",
            StatId::VR => "v_r",
            StatId::DR => "d_r",
            StatId::HR => "h_r",
            StatId::PR => "p_r",
        }
    }

    pub fn is_restricted(self) -> bool {
        matches!(
            self,
            StatId::UR | StatId::VR | StatId::DR | StatId::HR | StatId::PR
        )
    }

    /// Routes available for this statistic.
    pub fn methods(self) -> &'static [Method] {
        if self.is_restricted() {
            &[Method::Brute, Method::Riordan]
        } else {
            &[Method::Brute, Method::Riordan, Method::Formula]
        }
    }

    /// Path size that row `n` is taken over.
    pub fn size(self, n: usize) -> usize {
        match self {
            StatId::D | StatId::DR | StatId::HR => n + 2,
            StatId::P | StatId::PR => n,
            _ => n + 1,
        }
    }

    /// Family the statistic is taken over.
    pub fn family(self) -> PathFamily {
        let fam = PathFamily::gmotzkin_avoiding(&[Pattern::Uvu]);
        if self.is_restricted() {
            fam.with_surface(Surface::NoHOnAxis)
        } else {
            fam
        }
    }

    /// Contribution of one step (or, for point statistics, one point at
    /// `level`) to column `i`. Returns the column index, if any.
    fn column(self, step: Option<GStep>, level: i32) -> Option<usize> {
        let hit = |kind: GStep, offset: i32| match step {
            Some(s) if s == kind && level >= offset => Some((level - offset) as usize),
            _ => None,
        };
        match self {
            StatId::U | StatId::UR => hit(GStep::U, 1),
            StatId::V | StatId::VR => hit(GStep::V, 0),
            StatId::D | StatId::DR => hit(GStep::D, 0),
            StatId::H => hit(GStep::H, 0),
            StatId::HR => hit(GStep::H, 1),
            StatId::P | StatId::PR => Some(level as usize),
        }
    }
}

impl fmt::Display for StatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatId::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Riordan,
    Formula,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Riordan, Method::Formula];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Riordan => "riordan",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Lower-triangular table of a statistic, rows `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub stat: StatId,
    pub method: Method,
    pub rows: Vec<Vec<BigInt>>,
}

impl StatTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, i: usize) -> Option<&BigInt> {
        self.rows.get(n).and_then(|r| r.get(i))
    }
}

/// Row `n` by exhaustive enumeration.
pub fn brute_row(stat: StatId, n: usize) -> Result<Vec<BigInt>> {
    let mut row = vec![0u64; n + 1];
    let spec = EnumSpec::new(stat.family(), stat.size(n));
    let point_stat = matches!(stat, StatId::P | StatId::PR);
    for_each_path::<GStep, _>(&spec, |steps| {
        let mut level = 0i32;
        if point_stat {
            row[0] += 1;
        }
        for &s in steps {
            level += s.dy();
            let col = if point_stat {
                stat.column(None, level)
            } else {
                stat.column(Some(s), level)
            };
            if let Some(c) = col.filter(|&c| c <= n) {
                row[c] += 1;
            }
        }
    })?;
    Ok(row.into_iter().map(BigInt::from).collect())
}

pub fn stat_brute(stat: StatId, n: usize, i: usize) -> Result<BigInt> {
    check_index(n, i)?;
    Ok(brute_row(stat, n)?.swap_remove(i))
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i > n {
        Err(Error::Precondition(format!("column {i} exceeds row {n}")))
    } else {
        Ok(())
    }
}

fn series(name: SeriesName, order: usize) -> TruncatedSeries {
    named(name, order)
}

/// `(d, x S^2)` with `d` built from named series at the given order.
fn array_with(d: TruncatedSeries, order: usize) -> RiordanArray {
    let h = series(SeriesName::X, order).mul(&series(SeriesName::LargeSchroder, order).pow(2));
    RiordanArray::new(d, h).expect("d(0) = 1 and h(0) = 0 by construction")
}

/// The Riordan array of a primary statistic, or `None` for derived ones.
pub fn stat_array(stat: StatId, order: usize) -> Option<RiordanArray> {
    let big = series(SeriesName::LargeSchroder, order);
    let little = series(SeriesName::LittleSchroder, order);
    let inv = series(SeriesName::OneOver1px, order);
    let one_plus_x2 = series(SeriesName::OnePlusX2, order);
    let d = match stat {
        StatId::U | StatId::D => big.pow(3).mul(&inv),
        StatId::H => big.pow(2),
        StatId::P => one_plus_x2.mul(&big.pow(4)).mul(&inv),
        StatId::UR | StatId::DR => little.pow(2).mul(&big).mul(&inv),
        StatId::HR => little.pow(2).mul(&big.pow(2)),
        StatId::PR => one_plus_x2.mul(&inv).mul(&little.pow(2)).mul(&big.pow(2)),
        StatId::V | StatId::VR => return None,
    };
    Some(array_with(d, order))
}

/// Series for restricted points on the x-axis: `s + x s S / (1 + x)`.
pub fn restricted_axis_points_series(order: usize) -> TruncatedSeries {
    let big = series(SeriesName::LargeSchroder, order);
    let little = series(SeriesName::LittleSchroder, order);
    let tail = series(SeriesName::X, order)
        .mul(&little)
        .mul(&big)
        .mul(&series(SeriesName::OneOver1px, order));
    little.add(&tail)
}

fn shifted_rows(
    n_max: usize,
    axis: impl Fn(usize) -> Result<BigInt>,
    inner: &RiordanArray,
) -> Result<Vec<Vec<BigInt>>> {
    let m = inner.matrix(n_max.saturating_sub(1))?;
    (0..=n_max)
        .map(|n| {
            let mut row = vec![axis(n)?];
            if n >= 1 {
                row.extend(m[n - 1].iter().cloned());
            }
            Ok(row)
        })
        .collect()
}

fn differenced(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    (0..rows.len())
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let prev = if n >= 1 && i < n {
                        rows[n - 1][i].clone()
                    } else {
                        BigInt::zero()
                    };
                    &rows[n][i] - prev
                })
                .collect()
        })
        .collect()
}

/// Rows `0..=n_max` via Riordan arrays.
pub fn riordan_rows(stat: StatId, n_max: usize) -> Result<Vec<Vec<BigInt>>> {
    let order = n_max + 2;
    match stat {
        StatId::V => Ok(differenced(riordan_rows(StatId::U, n_max)?)),
        StatId::VR => Ok(differenced(riordan_rows(StatId::UR, n_max)?)),
        StatId::P => {
            let u = riordan_rows(StatId::U, n_max)?;
            let h = riordan_rows(StatId::H, n_max)?;
            let big = series(SeriesName::LargeSchroder, order).int_coeffs()?;
            let axis = |n: usize| {
                Ok(if n == 0 {
                    BigInt::from(1)
                } else {
                    &big[n] + &u[n - 1][0] + &h[n - 1][0]
                })
            };
            shifted_rows(n_max, axis, &stat_array(StatId::P, order).expect("primary"))
        }
        StatId::PR => {
            let axis_series = restricted_axis_points_series(order);
            shifted_rows(
                n_max,
                |n| axis_series.int_coeff(n),
                &stat_array(StatId::PR, order).expect("primary"),
            )
        }
        _ => stat_array(stat, order).expect("primary").matrix(n_max),
    }
}

pub fn stat_riordan(stat: StatId, n: usize, i: usize) -> Result<BigInt> {
    check_index(n, i)?;
    Ok(riordan_rows(stat, n)?.swap_remove(n).swap_remove(i))
}

/// Explicit sum for u-steps at level i+1.
fn u_formula(n: usize, i: usize) -> BigInt {
    let (ni, ii) = (n as i64, i as i64);
    let k = 2 * i as u32 + 3;
    let mut total = BigInt::zero();
    for j in 0..=(ni - ii) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for m in 0..=(ni - ii - j) {
            total +=
                binom(ni + m + ii - j + 2, ni - ii - j - m) * ballot_coeff(m as usize, k) * sign;
        }
    }
    total
}

/// Explicit sum for h-steps at level i.
fn h_formula(n: usize, i: usize) -> BigInt {
    let (ni, ii) = (n as i64, i as i64);
    let k = 2 * i as u32 + 2;
    (0..=(ni - ii))
        .map(|m| binom(ni + m + ii + 1, ni - ii - m) * ballot_coeff(m as usize, k))
        .sum()
}

/// Explicit sum for points at level i+1 over size n+1.
fn p_formula_shifted(n: usize, i: usize) -> BigInt {
    let (ni, ii) = (n as i64, i as i64);
    let k = 2 * i as u32 + 4;
    let mut total = BigInt::zero();
    for j in 0..=(ni - ii) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for m in 0..=(ni - ii - j) {
            total +=
                binom(ni + m + ii - j + 3, ni - ii - j - m) * ballot_coeff(m as usize, k) * sign;
        }
    }
    for j in 0..=(ni - ii - 2) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for m in 0..=(ni - ii - j - 2) {
            total += binom(ni + m + ii - j + 1, ni - ii - j - m - 2)
                * ballot_coeff(m as usize, k)
                * sign;
        }
    }
    total
}

/// Explicit-sum value. V and D go through the u-step sum.
pub fn stat_formula(stat: StatId, n: usize, i: usize) -> Result<BigInt> {
    check_index(n, i)?;
    match stat {
        StatId::U | StatId::D => Ok(u_formula(n, i)),
        StatId::V => {
            let prev = if n >= 1 && i < n {
                u_formula(n - 1, i)
            } else {
                BigInt::zero()
            };
            Ok(u_formula(n, i) - prev)
        }
        StatId::H => Ok(h_formula(n, i)),
        StatId::P => Ok(match (n, i) {
            (0, _) => BigInt::from(1),
            (_, 0) => {
                let big = series(SeriesName::LargeSchroder, n).int_coeff(n)?;
                big + u_formula(n - 1, 0) + h_formula(n - 1, 0)
            }
            _ => p_formula_shifted(n - 1, i - 1),
        }),
        _ => Err(Error::Precondition(format!("no explicit sum for {stat}"))),
    }
}

/// Full triangle by one route.
pub fn stat_table(stat: StatId, method: Method, n_max: usize) -> Result<StatTable> {
    if !stat.methods().contains(&method) {
        return Err(Error::Precondition(format!("{stat} has no {method} route")));
    }
    let rows = match method {
        Method::Brute => (0..=n_max)
            .map(|n| brute_row(stat, n))
            .collect::<Result<_>>()?,
        Method::Riordan => riordan_rows(stat, n_max)?,
        Method::Formula => (0..=n_max)
            .map(|n| (0..=n).map(|i| stat_formula(stat, n, i)).collect())
            .collect::<Result<_>>()?,
    };
    Ok(StatTable { stat, method, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn spot_values() {
        assert_eq!(stat_brute(StatId::U, 1, 0).unwrap(), BigInt::from(5));
        assert_eq!(stat_brute(StatId::V, 2, 0).unwrap(), BigInt::from(20));
        assert_eq!(stat_brute(StatId::P, 0, 0).unwrap(), BigInt::from(1));
        assert_eq!(stat_riordan(StatId::U, 6, 2).unwrap(), BigInt::from(5489));
        assert_eq!(stat_riordan(StatId::H, 5, 1).unwrap(), BigInt::from(1408));
        assert_eq!(stat_riordan(StatId::P, 6, 3).unwrap(), BigInt::from(1166));
        assert_eq!(stat_formula(StatId::U, 3, 1).unwrap(), BigInt::from(61));
        assert_eq!(stat_formula(StatId::H, 2, 0).unwrap(), BigInt::from(16));
        assert_eq!(stat_formula(StatId::P, 5, 2).unwrap(), BigInt::from(578));
    }

    #[test]
    fn small_tables() {
        let u = stat_table(StatId::U, Method::Riordan, 3).unwrap();
        assert_eq!(
            u.rows,
            rows(&[&[1], &[5, 1], &[25, 9, 1], &[121, 61, 13, 1]])
        );
        let d = stat_table(StatId::D, Method::Brute, 3).unwrap();
        assert_eq!(d.rows, u.rows);
        let v = stat_table(StatId::V, Method::Formula, 3).unwrap();
        assert_eq!(
            v.rows,
            rows(&[&[1], &[4, 1], &[20, 8, 1], &[96, 52, 12, 1]])
        );
    }

    #[test]
    fn routes_agree_to_five() {
        for stat in StatId::ALL {
            if stat == StatId::PR {
                continue;
            }
            let tables: Vec<StatTable> = stat
                .methods()
                .iter()
                .map(|&m| stat_table(stat, m, 5).unwrap())
                .collect();
            for t in &tables[1..] {
                assert_eq!(
                    t.rows, tables[0].rows,
                    "{stat} {} vs {}",
                    t.method, tables[0].method
                );
            }
        }
    }

    #[test]
    fn restricted_points_off_axis_agree() {
        let brute = stat_table(StatId::PR, Method::Brute, 6).unwrap();
        let riordan = stat_table(StatId::PR, Method::Riordan, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(brute.rows[n][1..], riordan.rows[n][1..], "row {n}");
        }
    }

    #[test]
    fn restricted_axis_points_follow_squared_little_schroder() {
        // Brute force matches s + x s^2 S / (1 + x), the series obtained by
        // splitting at the marked axis point into a prefix not ending in uv
        // (s / (1 + x)) and a nonempty suffix (s - 1 = x s S).
        let order = 9;
        let big = named(SeriesName::LargeSchroder, order);
        let little = named(SeriesName::LittleSchroder, order);
        let series = little.add(
            &named(SeriesName::X, order)
                .mul(&little.pow(2))
                .mul(&big)
                .mul(&named(SeriesName::OneOver1px, order)),
        );
        for n in 0..=order {
            assert_eq!(
                brute_row(StatId::PR, n).unwrap()[0],
                series.int_coeff(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn restricted_without_formula() {
        assert!(stat_table(StatId::UR, Method::Formula, 2).is_err());
        assert!(stat_formula(StatId::HR, 2, 1).is_err());
    }

    #[test]
    fn parse_names() {
        for s in StatId::ALL {
            assert_eq!(s.name().parse::<StatId>().unwrap(), s);
        }
        assert_eq!("riordan".parse::<Method>().unwrap(), Method::Riordan);
    }
}
