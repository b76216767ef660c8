//! Exhaustive generation, weighted counts, coefficient recurrences and the
//! closed-form sums for the path families.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{
    leading_level_symbols, BicoloredStep, ColoredDyckStep, DyckStep, FamilyKind, GStep, HColor,
    MarkedStep, Path, PathFamily, Prefix, SchroderStep, Step, Surface,
};
use crate::poly::{Monomial, Polynomial, Weighable, Weighting};
use crate::series::{named, SeriesName, TruncatedSeries};

/// Default bound for unrestricted G-Motzkin paths.
pub const DEFAULT_MAX_N_UNRESTRICTED: usize = 9;
/// Default bound for every other family.
pub const DEFAULT_MAX_N: usize = 12;
/// Environment variable overriding both bounds.
pub const MAX_N_ENV: &str = "GPATHS_MAX_N";

/// A family at a fixed size. `n` is the x-length, or the semilength for
/// Dyck-like and Schröder families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub family: PathFamily,
    pub n: usize,
    pub max_n: Option<usize>,
}

impl EnumSpec {
    pub fn new(family: PathFamily, n: usize) -> Self {
        EnumSpec {
            family,
            n,
            max_n: None,
        }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = Some(max_n);
        self
    }

    /// Guard bound in force: explicit override, then the environment, then
    /// the per-family default.
    pub fn limit(&self) -> usize {
        if let Some(m) = self.max_n {
            return m;
        }
        if let Some(m) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            return m;
        }
        if self.family.kind == FamilyKind::GMotzkin && !self.family.is_restricted() {
            DEFAULT_MAX_N_UNRESTRICTED
        } else {
            DEFAULT_MAX_N
        }
    }

    fn check_limit(&self) -> Result<()> {
        let limit = self.limit();
        if self.n > limit {
            Err(Error::SizeLimitExceeded { n: self.n, limit })
        } else {
            Ok(())
        }
    }
}

struct Walker<'a, S: Step, F: FnMut(&[S])> {
    family: &'a PathFamily,
    alphabet: Vec<S>,
    patterns: Vec<Vec<char>>,
    leading: &'static str,
    target: u32,
    vertical: bool,
    steps: Vec<S>,
    symbols: Vec<char>,
    visit: F,
}

impl<S: Step, F: FnMut(&[S])> Walker<'_, S, F> {
    fn complete_ok(&self) -> bool {
        match self.family.prefix {
            Prefix::Any => true,
            Prefix::StartsH => !self.steps.is_empty(),
            Prefix::StartsUd => self.steps.len() >= 2,
        }
    }

    fn last_ok(&self, level: i32) -> bool {
        let len = self.symbols.len();
        let last = self.steps[len - 1];
        for p in &self.patterns {
            if len >= p.len() && self.symbols[len - p.len()..] == p[..] {
                return false;
            }
        }
        if self.family.surface == Surface::NoHOnAxis && last.is_level() && level == 0 {
            return false;
        }
        match self.family.prefix {
            Prefix::Any => true,
            Prefix::StartsH => len > 1 || self.leading.contains(self.symbols[0]),
            Prefix::StartsUd => match len {
                1 => self.symbols[0] == 'u',
                2 => self.symbols[1] == 'd',
                _ => true,
            },
        }
    }

    fn walk(&mut self, x: u32, level: i32) {
        if x == self.target && level == 0 && self.complete_ok() {
            (self.visit)(&self.steps);
        }
        for idx in 0..self.alphabet.len() {
            let s = self.alphabet[idx];
            let nx = x + s.dx();
            let nl = level + s.dy();
            if nl < 0 || nx > self.target {
                continue;
            }
            if !self.vertical && nl as u32 > self.target - nx {
                continue;
            }
            if !S::may_follow(self.steps.last().copied(), s) {
                continue;
            }
            self.steps.push(s);
            self.symbols.push(s.symbol());
            if self.last_ok(nl) {
                self.walk(nx, nl);
            }
            self.steps.pop();
            self.symbols.pop();
        }
    }
}

/// Calls `visit` on every path of the family, depth-first in alphabet order.
pub fn for_each_path<S: Step, F: FnMut(&[S])>(spec: &EnumSpec, visit: F) -> Result<()> {
    spec.check_limit()?;
    let kind = spec.family.kind;
    if !S::supports(kind) {
        return Err(Error::FamilyMismatch(format!(
            "step type {} cannot carry family {kind}",
            std::any::type_name::<S>()
        )));
    }
    let alphabet: Vec<S> = S::ALPHABET
        .iter()
        .copied()
        .filter(|s| kind.alphabet().contains(s.symbol()))
        .collect();
    let vertical = alphabet.iter().any(|s| s.dx() == 0);
    let mut walker = Walker {
        family: &spec.family,
        patterns: spec
            .family
            .avoid
            .iter()
            .map(|p| p.as_str().chars().collect())
            .collect(),
        leading: leading_level_symbols(kind),
        alphabet,
        target: spec.n as u32 * kind.x_per_unit(),
        vertical,
        steps: Vec::new(),
        symbols: Vec::new(),
        visit,
    };
    walker.walk(0, 0);
    Ok(())
}

pub fn generate<S: Step>(spec: &EnumSpec) -> Result<Vec<Path<S>>> {
    let mut out = Vec::new();
    for_each_path::<S, _>(spec, |steps| out.push(Path::from_valid(steps.to_vec())))?;
    Ok(out)
}

pub fn count<S: Step>(spec: &EnumSpec) -> Result<u64> {
    let mut total = 0u64;
    for_each_path::<S, _>(spec, |_| total += 1)?;
    Ok(total)
}

/// Sum of path weights over the family.
pub fn weighted_count<S: Weighable>(spec: &EnumSpec, weighting: Weighting) -> Result<Polynomial> {
    let mut tally: HashMap<Monomial, u64> = HashMap::new();
    let mut failure = None;
    for_each_path::<S, _>(spec, |steps| match S::monomial(steps, weighting) {
        Ok(m) => *tally.entry(m).or_default() += 1,
        Err(e) => {
            failure.get_or_insert(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let mut out = Polynomial::zero();
    for (m, k) in tally {
        out.add_term(m, BigInt::from(k));
    }
    Ok(out)
}

/// Visits every path of the family rendered as text, dispatching on the
/// family's step alphabet.
pub fn for_each_rendered<F: FnMut(String)>(spec: &EnumSpec, mut visit: F) -> Result<()> {
    fn go<S: Step>(spec: &EnumSpec, visit: &mut dyn FnMut(String)) -> Result<()> {
        for_each_path::<S, _>(spec, |steps| {
            visit(steps.iter().map(|s| s.symbol()).collect())
        })
    }
    match spec.family.kind {
        FamilyKind::GMotzkin | FamilyKind::Motzkin => go::<GStep>(spec, &mut visit),
        FamilyKind::Dyck => go::<DyckStep>(spec, &mut visit),
        FamilyKind::ColoredDyck => go::<ColoredDyckStep>(spec, &mut visit),
        FamilyKind::Schroder => go::<SchroderStep>(spec, &mut visit),
        FamilyKind::BicoloredMotzkin => go::<BicoloredStep>(spec, &mut visit),
        FamilyKind::HString => go::<HColor>(spec, &mut visit),
        FamilyKind::MarkedMotzkin => go::<MarkedStep>(spec, &mut visit),
    }
}

/// The natural weighting of a family.
pub fn default_weighting(kind: FamilyKind) -> Weighting {
    match kind {
        FamilyKind::GMotzkin => Weighting::GMotzkinAbc,
        FamilyKind::Motzkin => Weighting::MotzkinAb,
        FamilyKind::Dyck | FamilyKind::ColoredDyck => Weighting::DyckPeakAb,
        FamilyKind::Schroder => Weighting::SchroderAb,
        FamilyKind::BicoloredMotzkin => Weighting::BicoloredMotzkinAb,
        FamilyKind::HString => Weighting::HStringAb,
        FamilyKind::MarkedMotzkin => Weighting::MarkedMotzkinAb,
    }
}

/// `weighted_count` dispatched on the family's step alphabet.
pub fn weighted_count_any(spec: &EnumSpec, weighting: Weighting) -> Result<Polynomial> {
    match spec.family.kind {
        FamilyKind::GMotzkin | FamilyKind::Motzkin => weighted_count::<GStep>(spec, weighting),
        FamilyKind::Dyck => weighted_count::<DyckStep>(spec, weighting),
        FamilyKind::ColoredDyck => weighted_count::<ColoredDyckStep>(spec, weighting),
        FamilyKind::Schroder => weighted_count::<SchroderStep>(spec, weighting),
        FamilyKind::BicoloredMotzkin => weighted_count::<BicoloredStep>(spec, weighting),
        FamilyKind::HString => weighted_count::<HColor>(spec, weighting),
        FamilyKind::MarkedMotzkin => weighted_count::<MarkedStep>(spec, weighting),
    }
}

fn conv(g: &[Polynomial], n: usize) -> Polynomial {
    // sum_{k=0}^{n} g_k g_{n-k}
    (0..=n).map(|k| &g[k] * &g[n - k]).sum()
}

/// Coefficients `G_0..G_{n_max}` of the uvu-avoiding (a,b,c) series.
pub fn guvu_coeffs(n_max: usize) -> Vec<Polynomial> {
    let (a, b, c) = (Polynomial::a(), Polynomial::b(), Polynomial::c());
    let a_minus_b = &a - &b;
    let ab = &a * &b;
    let mut g = vec![Polynomial::one()];
    for n in 1..=n_max {
        let mut v = &a_minus_b * &g[n - 1];
        if n == 1 {
            v += &b;
        }
        if n >= 2 {
            v += &(&ab * &g[n - 2]);
            v += &(&c * &conv(&g, n - 2));
        }
        v += &(&b * &conv(&g, n - 1));
        g.push(v);
    }
    g
}

/// Coefficients of the unrestricted (a,b,c) G-Motzkin series,
/// `G = 1 + a x G + b x G^2 + c x^2 G^2`.
pub fn gfull_coeffs(n_max: usize) -> Vec<Polynomial> {
    let (a, b, c) = (Polynomial::a(), Polynomial::b(), Polynomial::c());
    let mut g = vec![Polynomial::one()];
    for n in 1..=n_max {
        let mut v = &a * &g[n - 1];
        v += &(&b * &conv(&g, n - 1));
        if n >= 2 {
            v += &(&c * &conv(&g, n - 2));
        }
        g.push(v);
    }
    g
}

/// The uvu-avoiding series at a numeric point through the Catalan
/// substitution `(1/(1-ax)) C(x(b+cx) / ((1-ax)^2 (1+bx)))`.
pub fn guvu_series_at(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    order: usize,
) -> Result<TruncatedSeries> {
    let one = BigRational::one();
    let lin = |c0: &BigRational, c1: &BigRational| {
        TruncatedSeries::new(vec![c0.clone(), c1.clone()], order)
    };
    let one_minus_ax = lin(&one, &-a);
    let num = TruncatedSeries::x(order).mul(&lin(b, c));
    let den = one_minus_ax.pow(2).mul(&lin(&one, b));
    let t = num.mul(&den.recip()?);
    Ok(one_minus_ax.recip()?.mul(&t.catalan_of()?))
}

/// Accumulates rational multiples of monomials and certifies integrality.
#[derive(Debug, Default)]
struct RationalPoly {
    terms: HashMap<Monomial, BigRational>,
}

impl RationalPoly {
    fn add(&mut self, m: Monomial, coeff: BigRational) {
        if !coeff.is_zero() {
            *self.terms.entry(m).or_insert_with(BigRational::zero) += coeff;
        }
    }

    fn into_integral(self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms {
            if !c.is_integer() {
                return Err(Error::NonInteger(format!("{c} at {m}")));
            }
            out.add_term(m, c.to_integer());
        }
        Ok(out)
    }
}

/// `binom(n, k)` for integer `n` of any sign and `k >= 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn catalan(k: usize) -> BigInt {
    binom(2 * k as i64, k as i64) / BigInt::from(k + 1)
}

fn q(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// The (a,b)-weighted families with explicit sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    Dyck,
    Motzkin,
    Schroder,
    LittleSchroder,
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dyck_ab" => Ok(ClosedForm::Dyck),
            "motzkin_ab" => Ok(ClosedForm::Motzkin),
            "schroder_ab" => Ok(ClosedForm::Schroder),
            "little_schroder_ab" => Ok(ClosedForm::LittleSchroder),
            _ => Err(Error::Parse(format!("unknown closed form {s:?}"))),
        }
    }
}

/// Closed-form weight polynomial of size `n`, in the weights `a`, `b`.
pub fn closed_form(form: ClosedForm, n: usize) -> Result<Polynomial> {
    let mut acc = RationalPoly::default();
    let ni = n as i64;
    match form {
        ClosedForm::Dyck => {
            if n == 0 {
                return Ok(Polynomial::one());
            }
            for k in 1..=ni {
                let c = q(binom(ni, k - 1) * binom(ni, k)) / q(BigInt::from(ni));
                acc.add(Monomial::new(k as u32, (ni - k) as u32, 0), c);
            }
        }
        ClosedForm::Motzkin => {
            for k in 0..=ni / 2 {
                let c = binom(ni, 2 * k) * catalan(k as usize);
                acc.add(Monomial::new((ni - 2 * k) as u32, k as u32, 0), q(c));
            }
        }
        ClosedForm::Schroder => {
            for k in 0..=ni {
                let c = binom(ni + k, 2 * k) * catalan(k as usize);
                acc.add(Monomial::new((ni - k) as u32, k as u32, 0), q(c));
            }
        }
        ClosedForm::LittleSchroder => {
            return Ok(little_schroder_coeffs(n).pop().expect("nonempty"))
        }
    }
    acc.into_integral()
}

/// `s_0..s_{n_max}` from `s = 1 + b x S s`: a little Schröder path is empty
/// or an arch over a large Schröder path followed by a little one.
fn little_schroder_coeffs(n_max: usize) -> Vec<Polynomial> {
    let big: Vec<Polynomial> = (0..n_max)
        .map(|k| closed_form(ClosedForm::Schroder, k).expect("integral"))
        .collect();
    let b = Polynomial::b();
    let mut s = vec![Polynomial::one()];
    for n in 1..=n_max {
        let conv: Polynomial = (0..n).map(|k| &big[k] * &s[n - 1 - k]).sum();
        s.push(&b * &conv);
    }
    s
}

/// Which of the two displayed triple sums to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleSumVariant {
    First,
    Second,
}

/// The explicit triple sum for the uvu-avoiding coefficient `G_n(a,b,c)`.
pub fn triple_sum(n: usize, variant: TripleSumVariant) -> Result<Polynomial> {
    let mut acc = RationalPoly::default();
    let n = n as i64;
    for k in 0..=n {
        let ck = catalan(k as usize);
        for j in 0..=k {
            for l in 0..=(n - k - j) {
                let (coeff, m) = match variant {
                    TripleSumVariant::First => {
                        let sign = if l % 2 == 0 { 1 } else { -1 };
                        let c =
                            binom(k, j) * binom(k + l - 1, l) * binom(n + k - j - l, 2 * k) * &ck;
                        (
                            c * sign,
                            Monomial::new((n - k - j - l) as u32, (k + l - j) as u32, j as u32),
                        )
                    }
                    TripleSumVariant::Second => {
                        let sign = if (n - k - j - l) % 2 == 0 { 1 } else { -1 };
                        let c = binom(k, j)
                            * binom(2 * k + l, l)
                            * binom(n - j - l - 1, n - k - j - l)
                            * &ck;
                        (
                            c * sign,
                            Monomial::new(l as u32, (n - 2 * j - l) as u32, j as u32),
                        )
                    }
                };
                acc.add(m, q(coeff));
            }
        }
    }
    acc.into_integral()
}

/// `[x^m] C(x)^k` through the ballot closed form `k/(2m+k) binom(2m+k, m)`.
pub fn ballot_closed(m: usize, k: u32) -> BigRational {
    let (m, k) = (m as i64, k as i64);
    BigRational::new(
        BigInt::from(k) * binom(2 * m + k, m),
        BigInt::from(2 * m + k),
    )
}

/// The alternative reading `k/(m+k) binom(2m+k, m)`.
pub fn ballot_as_printed(m: usize, k: u32) -> BigRational {
    let (m, k) = (m as i64, k as i64);
    BigRational::new(BigInt::from(k) * binom(2 * m + k, m), BigInt::from(m + k))
}

/// Evaluates each coefficient at an integer point.
pub fn eval_coeffs(coeffs: &[Polynomial], a: i64, b: i64, c: i64) -> Vec<BigInt> {
    coeffs.iter().map(|p| p.eval_int(a, b, c)).collect()
}

/// Reference counts at a=b=1 for the named series.
pub fn reference_counts(name: SeriesName, n_max: usize) -> Vec<BigInt> {
    named(name, n_max).int_coeffs().expect("integer series")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{Pattern, SchroderPath};
    use crate::poly::weight;

    fn uvu() -> PathFamily {
        PathFamily::gmotzkin_avoiding(&[Pattern::Uvu])
    }

    fn rendered(spec: &EnumSpec) -> Vec<String> {
        let mut out = Vec::new();
        for_each_rendered(spec, |s| out.push(s)).unwrap();
        out
    }

    #[test]
    fn generate_examples() {
        assert_eq!(rendered(&EnumSpec::new(uvu(), 1)), vec!["uv", "h"]);
        assert_eq!(
            count::<DyckStep>(&EnumSpec::new(PathFamily::new(FamilyKind::Dyck), 3)).unwrap(),
            5
        );
        assert_eq!(
            rendered(&EnumSpec::new(PathFamily::new(FamilyKind::HString), 2)),
            vec!["aa", "ab", "ba", "bb"]
        );
        assert_eq!(rendered(&EnumSpec::new(uvu(), 0)), vec![""]);
    }

    #[test]
    fn generated_paths_are_distinct_members() {
        let fam = uvu();
        let paths = generate::<GStep>(&EnumSpec::new(fam.clone(), 5)).unwrap();
        let mut seen = std::collections::HashSet::new();
        for p in &paths {
            assert!(fam.check(p).is_ok());
            assert_eq!(p.x_length(), 5);
            assert!(seen.insert(p.clone()));
        }
    }

    #[test]
    fn family_filters_and_mismatch() {
        let motzkin = EnumSpec::new(PathFamily::new(FamilyKind::Motzkin), 4);
        assert_eq!(count::<GStep>(&motzkin).unwrap(), 9);
        let little = PathFamily::new(FamilyKind::Schroder).with_surface(Surface::NoHOnAxis);
        assert_eq!(
            count::<SchroderStep>(&EnumSpec::new(little, 4)).unwrap(),
            45
        );
        let err = count::<DyckStep>(&EnumSpec::new(uvu(), 2)).unwrap_err();
        assert!(matches!(err, Error::FamilyMismatch(_)));
        let colored = EnumSpec::new(PathFamily::new(FamilyKind::ColoredDyck), 3);
        // each of the C_3 paths doubles per peak: sum over Dyck paths of 2^peaks
        assert_eq!(count::<ColoredDyckStep>(&colored).unwrap(), 22);
    }

    #[test]
    fn guard_bound() {
        let spec = EnumSpec::new(PathFamily::gmotzkin(), 10);
        assert_eq!(
            count::<GStep>(&spec).unwrap_err(),
            Error::SizeLimitExceeded { n: 10, limit: 9 }
        );
        let spec = EnumSpec::new(uvu(), 3).with_max_n(2);
        assert_eq!(
            count::<GStep>(&spec).unwrap_err(),
            Error::SizeLimitExceeded { n: 3, limit: 2 }
        );
    }

    #[test]
    fn weighted_count_examples() {
        let g1 = weighted_count::<GStep>(&EnumSpec::new(uvu(), 1), Weighting::GMotzkinAbc).unwrap();
        assert_eq!(g1.to_string(), "a + b");
        let s1 = weighted_count::<SchroderStep>(
            &EnumSpec::new(PathFamily::new(FamilyKind::Schroder), 1),
            Weighting::SchroderAb,
        )
        .unwrap();
        assert_eq!(s1.to_string(), "a + b");
        assert_eq!(count::<GStep>(&EnumSpec::new(uvu(), 9)).unwrap(), 206098);
        assert_eq!(count::<GStep>(&EnumSpec::new(uvu(), 10)).unwrap(), 1037718);
    }

    #[test]
    fn recurrence_matches_brute_force() {
        let g = guvu_coeffs(7);
        assert_eq!(g[0], Polynomial::one());
        assert_eq!(g[1].to_string(), "a + b");
        assert_eq!(g[2].eval_int(1, 1, 1), BigInt::from(6));
        for (n, gn) in g.iter().enumerate() {
            let brute =
                weighted_count::<GStep>(&EnumSpec::new(uvu(), n), Weighting::GMotzkinAbc).unwrap();
            assert_eq!(&brute, gn, "n = {n}");
        }
        let full = gfull_coeffs(8);
        assert_eq!(full[1].to_string(), "a + b");
        for (n, gn) in full.iter().enumerate() {
            let brute = weighted_count::<GStep>(
                &EnumSpec::new(PathFamily::gmotzkin(), n),
                Weighting::GMotzkinAbc,
            )
            .unwrap();
            assert_eq!(&brute, gn, "n = {n}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form(ClosedForm::Schroder, 0).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            closed_form(ClosedForm::Dyck, 2).unwrap().to_string(),
            "a^2 + a*b"
        );
        let s: Vec<BigInt> = (0..=5)
            .map(|n| {
                closed_form(ClosedForm::Schroder, n)
                    .unwrap()
                    .eval_int(1, 1, 0)
            })
            .collect();
        assert_eq!(s, [1, 2, 6, 22, 90, 394].map(BigInt::from));
        let little: Vec<BigInt> = (0..=5)
            .map(|n| {
                closed_form(ClosedForm::LittleSchroder, n)
                    .unwrap()
                    .eval_int(1, 1, 0)
            })
            .collect();
        assert_eq!(little, [1, 1, 3, 11, 45, 197].map(BigInt::from));
        assert_eq!(
            closed_form(ClosedForm::Motzkin, 10)
                .unwrap()
                .eval_int(1, 1, 0),
            BigInt::from(2188)
        );
    }

    #[test]
    fn closed_forms_match_weighted_brute_force() {
        for n in 0..=6 {
            let dyck = weighted_count::<DyckStep>(
                &EnumSpec::new(PathFamily::new(FamilyKind::Dyck), n),
                Weighting::DyckPeakAb,
            )
            .unwrap();
            assert_eq!(dyck, closed_form(ClosedForm::Dyck, n).unwrap());
            let motzkin = weighted_count::<GStep>(
                &EnumSpec::new(PathFamily::new(FamilyKind::Motzkin), n),
                Weighting::MotzkinAb,
            )
            .unwrap();
            assert_eq!(motzkin, closed_form(ClosedForm::Motzkin, n).unwrap());
            let schroder = EnumSpec::new(PathFamily::new(FamilyKind::Schroder), n);
            assert_eq!(
                weighted_count::<SchroderStep>(&schroder, Weighting::SchroderAb).unwrap(),
                closed_form(ClosedForm::Schroder, n).unwrap()
            );
            let little = EnumSpec::new(
                PathFamily::new(FamilyKind::Schroder).with_surface(Surface::NoHOnAxis),
                n,
            );
            assert_eq!(
                weighted_count::<SchroderStep>(&little, Weighting::SchroderAb).unwrap(),
                closed_form(ClosedForm::LittleSchroder, n).unwrap()
            );
        }
    }

    #[test]
    fn triple_sums_agree_with_recurrence() {
        assert_eq!(
            triple_sum(0, TripleSumVariant::First).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            triple_sum(3, TripleSumVariant::Second)
                .unwrap()
                .eval_int(1, 1, 1),
            BigInt::from(22)
        );
        for (n, g) in guvu_coeffs(10).iter().enumerate() {
            assert_eq!(
                &triple_sum(n, TripleSumVariant::First).unwrap(),
                g,
                "first, n = {n}"
            );
            assert_eq!(
                &triple_sum(n, TripleSumVariant::Second).unwrap(),
                g,
                "second, n = {n}"
            );
        }
    }

    #[test]
    fn catalan_substitution_route() {
        let g = guvu_coeffs(10);
        for (a, b, c) in [(1, 1, 1), (0, 1, 1), (1, 0, 2), (-3, 4, 16)] {
            let r = |v: i64| BigRational::from_integer(v.into());
            let series = guvu_series_at(&r(a), &r(b), &r(c), 10).unwrap();
            assert_eq!(
                series.int_coeffs().unwrap(),
                eval_coeffs(&g, a, b, c),
                "at {a},{b},{c}"
            );
        }
    }

    #[test]
    fn ballot_routes() {
        use crate::series::ballot_coeff;
        for m in 0..=12 {
            for k in 1..=15 {
                assert_eq!(ballot_closed(m, k), q(ballot_coeff(m, k)), "m={m} k={k}");
            }
        }
        assert_eq!(
            ballot_as_printed(1, 3),
            BigRational::new(15.into(), 4.into())
        );
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binom(-1, 0), BigInt::one());
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(-2, 2), BigInt::from(3));
        assert_eq!(binom(5, -1), BigInt::zero());
    }

    #[test]
    fn schroder_weight_of_generated_paths() {
        let paths =
            generate::<SchroderStep>(&EnumSpec::new(PathFamily::new(FamilyKind::Schroder), 2))
                .unwrap();
        let rendered: Vec<String> = paths.iter().map(SchroderPath::render).collect();
        assert_eq!(rendered, vec!["uudd", "uHd", "udud", "udH", "Hud", "HH"]);
        let total: Polynomial = paths
            .iter()
            .map(|p| weight(p, Weighting::SchroderAb).unwrap())
            .sum();
        assert_eq!(total, closed_form(ClosedForm::Schroder, 2).unwrap());
    }
}
