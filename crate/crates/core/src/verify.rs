//! Executable checks grouped into suites. Each check reports its first
//! counterexamples instead of stopping at the first failure.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bijections::{self, first_axis_h};
use crate::enumerate::{
    ballot_as_printed, ballot_closed, closed_form, count, eval_coeffs, generate, guvu_coeffs,
    guvu_series_at, triple_sum, weighted_count, ClosedForm, EnumSpec, TripleSumVariant,
};
use crate::error::{Error, Result};
use crate::paths::{
    BicoloredStep, ColoredDyckStep, DyckStep, FamilyKind, GStep, HColor, MarkedStep, Path,
    PathFamily, Pattern, Prefix, SchroderStep, Surface,
};
use crate::poly::{weight, Polynomial, Weighable, Weighting};
use crate::series::{ballot_coeff, named, SeriesName};
use crate::stats::{brute_row, stat_table, Method, StatId};

/// Reference triangles, rows `0..=6`.
pub mod golden {
    /// u-steps at level i+1 (also d-steps at level i).
    pub const U: [&[u64]; 7] = [
        &[1],
        &[5, 1],
        &[25, 9, 1],
        &[121, 61, 13, 1],
        &[593, 369, 113, 17, 1],
        &[2941, 2121, 825, 181, 21, 1],
        &[14777, 11881, 5489, 1553, 265, 25, 1],
    ];

    /// v-steps at level i.
    pub const V: [&[u64]; 7] = [
        &[1],
        &[4, 1],
        &[20, 8, 1],
        &[96, 52, 12, 1],
        &[472, 308, 100, 16, 1],
        &[2348, 1752, 712, 164, 20, 1],
        &[11836, 9760, 4664, 1372, 244, 24, 1],
    ];

    /// h-steps at level i.
    pub const H: [&[u64]; 7] = [
        &[1],
        &[4, 1],
        &[16, 8, 1],
        &[68, 48, 12, 1],
        &[304, 264, 96, 16, 1],
        &[1412, 1408, 652, 160, 20, 1],
        &[6752, 7432, 4080, 1296, 240, 24, 1],
    ];

    /// Points at level i.
    pub const P: [&[u64]; 7] = [
        &[1],
        &[4, 1],
        &[15, 7, 1],
        &[63, 42, 11, 1],
        &[279, 230, 86, 15, 1],
        &[1291, 1226, 578, 146, 19, 1],
        &[6159, 6470, 3598, 1166, 222, 23, 1],
    ];

    pub const MAX_N: usize = 6;
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

/// Number of counterexamples kept per check.
const MAX_REPORTED: usize = 5;

/// Collects failures for one check.
struct Tally {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(msg) = outcome {
            self.failures.push(msg);
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl fmt::Display,
        left: T,
        right: T,
    ) {
        let outcome = if left == right {
            Ok(())
        } else {
            Err(format!("{what}: {left} != {right}"))
        };
        self.record(outcome);
    }

    fn finish(self, summary: impl Into<String>) -> Check {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} ({} checks)", summary.into(), self.checked)
        } else {
            let shown: Vec<&str> = self
                .failures
                .iter()
                .take(MAX_REPORTED)
                .map(String::as_str)
                .collect();
            format!(
                "{} of {} checks failed; {}",
                self.failures.len(),
                self.checked,
                shown.join("; ")
            )
        };
        Check {
            name: self.name,
            passed,
            detail,
        }
    }
}

fn rows_display(rows: &[Vec<BigInt>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// First cell where two triangles differ.
fn first_difference(
    left: &[Vec<BigInt>],
    right: &[Vec<BigInt>],
) -> Option<(usize, usize, String, String)> {
    let n = left.len().max(right.len());
    for r in 0..n {
        let (a, b) = (left.get(r), right.get(r));
        let width = a.map_or(0, Vec::len).max(b.map_or(0, Vec::len));
        for i in 0..width {
            let x = a.and_then(|row| row.get(i));
            let y = b.and_then(|row| row.get(i));
            if x != y {
                let show =
                    |v: Option<&BigInt>| v.map_or("missing".to_string(), ToString::to_string);
                return Some((r, i, show(x), show(y)));
            }
        }
    }
    None
}

pub fn golden_rows(table: &[&[u64]], n_max: usize) -> Vec<Vec<BigInt>> {
    table
        .iter()
        .take(n_max + 1)
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn golden_for(stat: StatId) -> Option<&'static [&'static [u64]; 7]> {
    match stat {
        StatId::U | StatId::D => Some(&golden::U),
        StatId::V => Some(&golden::V),
        StatId::H => Some(&golden::H),
        StatId::P => Some(&golden::P),
        _ => None,
    }
}

/// Every route of U, V, D, H, P reproduces the reference triangles.
pub fn golden_tables(n_max: usize) -> Check {
    let n_max = n_max.min(golden::MAX_N);
    let mut t = Tally::new("golden tables");
    for stat in [StatId::U, StatId::V, StatId::D, StatId::H, StatId::P] {
        let expected = golden_rows(golden_for(stat).expect("primary statistic"), n_max);
        for &method in stat.methods() {
            let outcome = match stat_table(stat, method, n_max) {
                Err(e) => Err(format!("{stat} by {method}: {e}")),
                Ok(table) => match first_difference(&table.rows, &expected) {
                    None => Ok(()),
                    Some((n, i, got, want)) => {
                        Err(format!("{stat} by {method} at ({n},{i}): {got} != {want}"))
                    }
                },
            };
            t.record(outcome);
        }
    }
    t.finish(format!("U, V, D, H, P by every route, n <= {n_max}"))
}

fn int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Specializations of the uvu-avoiding series, cross-checked by brute force
/// and by the three symbolic routes.
pub fn specializations(n_max: usize) -> Check {
    let mut t = Tally::new("series specializations");
    let g = guvu_coeffs(n_max);
    let brute = |kind: FamilyKind, n: usize| -> BigInt {
        let spec = EnumSpec::new(PathFamily::new(kind), n);
        let c = match kind {
            FamilyKind::Dyck => count::<DyckStep>(&spec),
            FamilyKind::Schroder => count::<SchroderStep>(&spec),
            _ => count::<GStep>(&spec),
        };
        c.map(BigInt::from).unwrap_or_default()
    };
    for (point, kind, label) in [
        ((0, 1, 1), FamilyKind::Dyck, "Catalan"),
        ((1, 0, 1), FamilyKind::Motzkin, "Motzkin"),
        ((1, 1, 1), FamilyKind::Schroder, "large Schroder"),
    ] {
        let values = eval_coeffs(&g, point.0, point.1, point.2);
        for (n, v) in values.iter().enumerate() {
            t.expect_eq(
                format_args!("G_{n}{point:?} vs {label} count"),
                v.clone(),
                brute(kind, n),
            );
        }
    }
    for (a, b, c) in [(1, 0, 2), (-3, 4, 16)] {
        let rec = eval_coeffs(&g, a, b, c);
        let q = |v: i64| BigRational::from_integer(v.into());
        let series = guvu_series_at(&q(a), &q(b), &q(c), n_max);
        for (n, r) in rec.iter().enumerate() {
            for variant in [TripleSumVariant::First, TripleSumVariant::Second] {
                let outcome = match triple_sum(n, variant) {
                    Ok(p) => {
                        let v = p.eval_int(a, b, c);
                        if &v == r {
                            Ok(())
                        } else {
                            Err(format!(
                                "explicit sum {variant:?} at n={n}, ({a},{b},{c}): {v} != {r}"
                            ))
                        }
                    }
                    Err(e) => Err(format!("explicit sum {variant:?} at n={n}: {e}")),
                };
                t.record(outcome);
            }
            let outcome = match series
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|s| s.coeff(n).cloned())
            {
                Ok(v) if v == int(r) => Ok(()),
                Ok(v) => Err(format!(
                    "substitution series at n={n}, ({a},{b},{c}): {v} != {r}"
                )),
                Err(e) => Err(format!("substitution series at n={n}: {e}")),
            };
            t.record(outcome);
        }
    }
    t.finish(format!("n <= {n_max}"))
}

/// Exhaustive two-sided certification of `fwd` between `dom` and `cod`.
#[allow(clippy::too_many_arguments)]
fn certify<X, Y, F, G>(
    t: &mut Tally,
    label: &str,
    n: usize,
    dom: &[Path<X>],
    cod: &[Path<Y>],
    fwd: F,
    inv: G,
    weights: Option<(Weighting, Weighting)>,
) where
    X: Weighable + Hash + Eq,
    Y: Weighable + Hash + Eq,
    F: Fn(&Path<X>) -> Result<Path<Y>>,
    G: Fn(&Path<Y>) -> Result<Path<X>>,
{
    let cod_set: HashSet<&Path<Y>> = cod.iter().collect();
    let mut images = HashSet::with_capacity(dom.len());
    let mut outcome = Ok(());
    for q in dom {
        let p = match fwd(q) {
            Ok(p) => p,
            Err(e) => {
                outcome = Err(format!("{label} n={n}: {q} rejected: {e}"));
                break;
            }
        };
        if !cod_set.contains(&p) {
            outcome = Err(format!(
                "{label} n={n}: image {p} of {q} outside the codomain"
            ));
            break;
        }
        match inv(&p) {
            Ok(back) if back == *q => {}
            Ok(back) => {
                outcome = Err(format!("{label} n={n}: {q} -> {p} -> {back}"));
                break;
            }
            Err(e) => {
                outcome = Err(format!("{label} n={n}: inverse rejects {p}: {e}"));
                break;
            }
        }
        if let Some((wx, wy)) = weights {
            let (a, b) = (weight(q, wx), weight(&p, wy));
            if a.as_ref().ok() != b.as_ref().ok() || a.is_err() {
                outcome = Err(format!(
                    "{label} n={n}: weight of {q} is {a:?}, of {p} is {b:?}"
                ));
                break;
            }
        }
        if !images.insert(p.clone()) {
            outcome = Err(format!("{label} n={n}: {p} hit twice"));
            break;
        }
    }
    if outcome.is_ok() && images.len() != cod.len() {
        outcome = Err(format!(
            "{label} n={n}: {} images, codomain has {}",
            images.len(),
            cod.len()
        ));
    }
    if outcome.is_ok() {
        for p in cod {
            match inv(p).and_then(|q| fwd(&q)) {
                Ok(back) if back == *p => {}
                Ok(back) => {
                    outcome = Err(format!("{label} n={n}: {p} -> {back} through the inverse"));
                    break;
                }
                Err(e) => {
                    outcome = Err(format!("{label} n={n}: {p}: {e}"));
                    break;
                }
            }
        }
    }
    t.record(outcome);
}

fn paths<S: crate::paths::Step>(family: PathFamily, n: usize) -> Result<Vec<Path<S>>> {
    generate::<S>(&EnumSpec::new(family, n))
}

/// Size bounds for [`bijection_certification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BijectionBounds {
    pub sigma: usize,
    pub theta: usize,
    pub varphi: usize,
    pub phi_vartheta_rho: usize,
    pub psi: usize,
}

impl Default for BijectionBounds {
    fn default() -> Self {
        BijectionBounds {
            sigma: 8,
            theta: 10,
            varphi: 8,
            phi_vartheta_rho: 8,
            psi: 7,
        }
    }
}

impl BijectionBounds {
    /// Every bound clamped to `n_max`.
    pub fn capped(n_max: usize) -> Self {
        let d = Self::default();
        BijectionBounds {
            sigma: d.sigma.min(n_max),
            theta: d.theta.min(n_max),
            varphi: d.varphi.min(n_max),
            phi_vartheta_rho: d.phi_vartheta_rho.min(n_max),
            psi: d.psi.min(n_max),
        }
    }
}

/// Fixed input/output pairs, forward and inverse.
pub const MAP_VECTORS: &[(&str, &str, &str)] = &[
    ("sigma", "uv", "ud"),
    ("sigma", "h", "H"),
    (
        "sigma",
        "uuuvhudvvhuuuuuvdvvvud",
        "uduudHuudddHuduuduuudddduudd",
    ),
    ("phi_peak", "uD", "H"),
    ("phi_peak", "uduuDuduuuDddduD", "uduHuduuHdddH"),
    ("phi_peak", "uudd", "uudd"),
    ("vartheta", "udH", "Hud"),
    ("vartheta", "udHH", "HuHd"),
    ("vartheta", "uduuddH", "Huuddud"),
    ("theta", "uv", "b"),
    ("theta", "uhv", "ud"),
    (
        "theta",
        "uhhhuhuhhuhuvhvvuddvhhhuhhuhvuvdhuhd",
        "uaabuuaubaddbbddaaabuaudbdabud",
    ),
    ("theta", "huhvuhdhuhuhuduvdv", "audbudaububbbdd"),
    ("rho", "hh", "aa"),
    ("rho", "uv", "b"),
    ("rho", "uhd", "bab"),
    ("varphi", "a", "ud"),
    ("varphi", "aa", "udud"),
    ("varphi", "ab", "uudd"),
    ("varphi", "aud", "uduudd"),
    (
        "varphi",
        "audbudaububbbdd",
        "uuduuddduudduduuudduuuuudddddd",
    ),
    (
        "varphi_theta",
        "huhvuhdhuhuhuduvdv",
        "uuduuddduudduduuudduuuuudddddd",
    ),
    ("psi", "h", "A"),
    ("psi", "uv", "a"),
];

fn vectors(t: &mut Tally) {
    use bijections::{apply, BijectionId, Direction};
    for &(name, input, output) in MAP_VECTORS {
        let id: BijectionId = name.parse().expect("known bijection");
        for (dir, from, to) in [
            (Direction::Forward, input, output),
            (Direction::Inverse, output, input),
        ] {
            let outcome = match apply(id, dir, from) {
                Ok(m) if m.output == to => Ok(()),
                Ok(m) => Err(format!("{name} {dir:?} {from}: {} != {to}", m.output)),
                Err(e) => Err(format!("{name} {dir:?} {from}: {e}")),
            };
            t.record(outcome);
        }
    }
}

fn has_axis_h(steps: &[SchroderStep]) -> bool {
    first_axis_h(steps).is_some()
}

/// Exhaustive round trips, weight preservation and image-set equality for
/// every bijection, plus the fixed vectors.
pub fn bijection_certification(bounds: BijectionBounds) -> Check {
    let mut t = Tally::new("bijection certification");
    vectors(&mut t);
    let run = |t: &mut Tally, label: &str, n: usize, f: &dyn Fn(&mut Tally) -> Result<()>| {
        if let Err(e) = f(t) {
            t.record(Err(format!("{label} n={n}: {e}")));
        }
    };
    let uvu = PathFamily::gmotzkin_avoiding(&[Pattern::Uvu]);
    let schroder = PathFamily::new(FamilyKind::Schroder);
    let bsq = Weighting::GMotzkinAbBsq;

    for n in 0..=bounds.sigma {
        run(&mut t, "sigma", n, &|t| {
            let dom = paths::<GStep>(uvu.clone(), n)?;
            let cod = paths::<SchroderStep>(schroder.clone(), n)?;
            certify(
                t,
                "sigma",
                n,
                &dom,
                &cod,
                bijections::sigma,
                |p| Ok(bijections::sigma_inv(p)),
                Some((bsq, Weighting::SchroderAb)),
            );
            Ok(())
        });
    }
    for n in 0..=bounds.theta {
        run(&mut t, "theta", n, &|t| {
            let dom = paths::<GStep>(
                PathFamily::gmotzkin_avoiding(&[Pattern::Uvu, Pattern::Uu]),
                n,
            )?;
            let cod = paths::<BicoloredStep>(PathFamily::new(FamilyKind::BicoloredMotzkin), n)?;
            certify(
                t,
                "theta",
                n,
                &dom,
                &cod,
                bijections::theta,
                |p| Ok(bijections::theta_inv(p)),
                Some((bsq, Weighting::BicoloredMotzkinAb)),
            );
            Ok(())
        });
    }
    for n in 1..=bounds.varphi {
        run(&mut t, "varphi", n, &|t| {
            let dom = paths::<BicoloredStep>(
                PathFamily::new(FamilyKind::BicoloredMotzkin).with_prefix(Prefix::StartsH),
                n,
            )?;
            let cod = paths::<DyckStep>(PathFamily::new(FamilyKind::Dyck), n)?;
            certify(
                t,
                "varphi",
                n,
                &dom,
                &cod,
                bijections::varphi,
                bijections::varphi_inv,
                Some((Weighting::BicoloredMotzkinAb, Weighting::DyckPeakAb)),
            );
            Ok(())
        });
    }
    for n in 0..=bounds.phi_vartheta_rho {
        run(&mut t, "phi_peak", n, &|t| {
            let dom = paths::<ColoredDyckStep>(PathFamily::new(FamilyKind::ColoredDyck), n)?;
            let cod = paths::<SchroderStep>(schroder.clone(), n)?;
            certify(
                t,
                "phi_peak",
                n,
                &dom,
                &cod,
                |p| Ok(bijections::phi_peak(p)),
                |s| Ok(bijections::phi_peak_inv(s)),
                Some((Weighting::DyckPeakAb, Weighting::SchroderAb)),
            );
            Ok(())
        });
        run(&mut t, "vartheta", n, &|t| {
            let mut dom = paths::<SchroderStep>(schroder.clone().with_prefix(Prefix::StartsUd), n)?;
            dom.retain(|p| has_axis_h(p.steps()));
            let mut cod = paths::<SchroderStep>(schroder.clone().with_prefix(Prefix::StartsH), n)?;
            cod.retain(|p| p.len() > 1 && !has_axis_h(&p.steps()[1..]));
            certify(
                t,
                "vartheta",
                n,
                &dom,
                &cod,
                bijections::vartheta,
                bijections::vartheta_inv,
                Some((Weighting::SchroderAb, Weighting::SchroderAb)),
            );
            Ok(())
        });
        run(&mut t, "rho", n, &|t| {
            let fam = PathFamily::gmotzkin_avoiding(&[Pattern::Uvu, Pattern::Uu, Pattern::Hu]);
            let dom = paths::<GStep>(fam, n)?;
            let cod = paths::<HColor>(PathFamily::new(FamilyKind::HString), n)?;
            certify(
                t,
                "rho",
                n,
                &dom,
                &cod,
                bijections::rho,
                |s| Ok(bijections::rho_inv(s)),
                Some((bsq, Weighting::HStringAb)),
            );
            Ok(())
        });
    }
    for n in 1..=bounds.psi {
        run(&mut t, "psi", n, &|t| {
            let dom = paths::<GStep>(uvu.clone(), n)?;
            let marked = PathFamily::new(FamilyKind::MarkedMotzkin).with_prefix(Prefix::StartsH);
            let cod = paths::<MarkedStep>(marked, n)?;
            certify(
                t,
                "psi",
                n,
                &dom,
                &cod,
                bijections::psi,
                bijections::psi_inv,
                Some((bsq, Weighting::MarkedMotzkinAb)),
            );
            Ok(())
        });
    }
    t.finish(format!(
        "sigma n <= {}, theta n <= {}, varphi n <= {}, phi_peak/vartheta/rho n <= {}, psi n <= {}",
        bounds.sigma, bounds.theta, bounds.varphi, bounds.phi_vartheta_rho, bounds.psi
    ))
}

fn poly_check(
    t: &mut Tally,
    what: impl fmt::Display,
    left: Result<Polynomial>,
    right: Result<Polynomial>,
) {
    let outcome = match (left, right) {
        (Ok(l), Ok(r)) if l == r => Ok(()),
        (Ok(l), Ok(r)) => Err(format!("{what}: {l} != {r}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("{what}: {e}")),
    };
    t.record(outcome);
}

/// Symbolic identities between weighted counts.
pub fn polynomial_identities(n_max: usize) -> Check {
    let mut t = Tally::new("polynomial identities");
    let (a, b, c) = (Polynomial::a(), Polynomial::b(), Polynomial::c());
    let a_plus_b = &a + &b;
    let schroder = |n| closed_form(ClosedForm::Schroder, n);
    let brute_g = |fam: PathFamily, n: usize| {
        weighted_count::<GStep>(&EnumSpec::new(fam, n), Weighting::GMotzkinAbBsq)
    };
    for n in 0..=n_max {
        poly_check(
            &mut t,
            format_args!("S_{n} closed vs enumerated"),
            schroder(n),
            weighted_count::<SchroderStep>(
                &EnumSpec::new(PathFamily::new(FamilyKind::Schroder), n),
                Weighting::SchroderAb,
            ),
        );
        poly_check(
            &mut t,
            format_args!("S_{n}(a,b) = C_{n}(a+b,b)"),
            schroder(n),
            closed_form(ClosedForm::Dyck, n).map(|p| p.substitute(&a_plus_b, &b, &c)),
        );
        if n >= 1 {
            let m_args = (&a + &(&b + &b), &a_plus_b * &b);
            poly_check(
                &mut t,
                format_args!("S_{n}(a,b) = (a+b) M_{}(a+2b,(a+b)b)", n - 1),
                schroder(n),
                closed_form(ClosedForm::Motzkin, n - 1)
                    .map(|p| &a_plus_b * &p.substitute(&m_args.0, &m_args.1, &c)),
            );
        }
        if n >= 1 {
            poly_check(
                &mut t,
                format_args!("b S_{n} = (a+b) s_{n}"),
                schroder(n).map(|p| &b * &p),
                closed_form(ClosedForm::LittleSchroder, n).map(|p| &a_plus_b * &p),
            );
        }
        poly_check(
            &mut t,
            format_args!("s_{n} closed vs enumerated"),
            closed_form(ClosedForm::LittleSchroder, n),
            weighted_count::<SchroderStep>(
                &EnumSpec::new(
                    PathFamily::new(FamilyKind::Schroder).with_surface(Surface::NoHOnAxis),
                    n,
                ),
                Weighting::SchroderAb,
            ),
        );
        for (label, extra) in [("{uvu,uu,uh}", Pattern::Uh), ("{uvu,uu,hu}", Pattern::Hu)] {
            poly_check(
                &mut t,
                format_args!("{label}-avoiding count at n={n} = (a+b)^{n}"),
                brute_g(
                    PathFamily::gmotzkin_avoiding(&[Pattern::Uvu, Pattern::Uu, extra]),
                    n,
                ),
                Ok(a_plus_b.pow(n as u32)),
            );
        }
        let prefixed = weighted_count::<BicoloredStep>(
            &EnumSpec::new(
                PathFamily::new(FamilyKind::BicoloredMotzkin).with_prefix(Prefix::StartsH),
                n + 1,
            ),
            Weighting::BicoloredMotzkinAb,
        );
        poly_check(
            &mut t,
            format_args!(
                "Ha-prefixed bicolored count at n={} = C_{}(a,b)",
                n + 1,
                n + 1
            ),
            prefixed.clone(),
            closed_form(ClosedForm::Dyck, n + 1),
        );
        poly_check(
            &mut t,
            format_args!(
                "Ha-prefixed bicolored count at n={} = a M_{n}(a+b,ab)",
                n + 1
            ),
            prefixed,
            closed_form(ClosedForm::Motzkin, n)
                .map(|p| &a * &p.substitute(&a_plus_b, &(&a * &b), &c)),
        );
    }
    t.finish(format!("n <= {n_max}"))
}

fn brute_rows(stat: StatId, n_max: usize) -> Result<Vec<Vec<BigInt>>> {
    (0..=n_max).map(|n| brute_row(stat, n)).collect()
}

fn cell(rows: &[Vec<BigInt>], n: isize, i: usize) -> BigInt {
    if n < 0 {
        return BigInt::default();
    }
    rows.get(n as usize)
        .and_then(|r| r.get(i))
        .cloned()
        .unwrap_or_default()
}

/// Relations between the brute-force statistic triangles.
pub fn statistic_identities(n_max: usize) -> Check {
    let mut t = Tally::new("statistic identities");
    let tables = (|| -> Result<_> {
        Ok((
            brute_rows(StatId::U, n_max)?,
            brute_rows(StatId::V, n_max)?,
            brute_rows(StatId::D, n_max)?,
            brute_rows(StatId::H, n_max)?,
            brute_rows(StatId::P, n_max + 1)?,
        ))
    })();
    let (u, v, d, h, p) = match tables {
        Ok(x) => x,
        Err(e) => {
            t.record(Err(e.to_string()));
            return t.finish("");
        }
    };
    let big = named(SeriesName::LargeSchroder, n_max + 1)
        .int_coeffs()
        .expect("integer series");
    for n in 0..=n_max {
        let ni = n as isize;
        for i in 0..=n {
            t.expect_eq(
                format_args!("D({n},{i}) = U({n},{i})"),
                cell(&d, ni, i),
                cell(&u, ni, i),
            );
            t.expect_eq(
                format_args!("V({n},{i}) = U({n},{i}) - U({},{i})", ni - 1),
                cell(&v, ni, i),
                cell(&u, ni, i) - cell(&u, ni - 1, i),
            );
            t.expect_eq(
                format_args!("U({n},{i}) = V({n},{i}) + D({},{i})", ni - 1),
                cell(&u, ni, i),
                cell(&v, ni, i) + cell(&d, ni - 1, i),
            );
        }
        t.expect_eq(
            format_args!("H({n},0) = S_{} - S_{n}", n + 1),
            cell(&h, ni, 0),
            &big[n + 1] - &big[n],
        );
        t.expect_eq(
            format_args!("P({},0) = S_{} + U({n},0) + H({n},0)", n + 1, n + 1),
            cell(&p, ni + 1, 0),
            &big[n + 1] + cell(&u, ni, 0) + cell(&h, ni, 0),
        );
    }
    t.finish(format!("brute force, n <= {n_max}"))
}

/// Brute force against the Riordan arrays for the restricted statistics.
pub fn restricted_statistics(n_max: usize) -> Check {
    let mut t = Tally::new("restricted statistics");
    for stat in [StatId::UR, StatId::VR, StatId::DR, StatId::HR, StatId::PR] {
        let outcome = match (
            stat_table(stat, Method::Brute, n_max),
            stat_table(stat, Method::Riordan, n_max),
        ) {
            (Ok(b), Ok(r)) => match first_difference(&b.rows, &r.rows) {
                None => Ok(()),
                Some((n, i, x, y)) => Err(format!(
                    "{stat} at ({n},{i}): brute {x}, riordan {y} [brute {}] [riordan {}]",
                    rows_display(&b.rows),
                    rows_display(&r.rows)
                )),
            },
            (Err(e), _) | (_, Err(e)) => Err(format!("{stat}: {e}")),
        };
        t.record(outcome);
    }
    t.finish(format!("u_r, v_r, d_r, h_r, p_r, n <= {n_max}"))
}

/// The ballot coefficient from the series against its closed form, and the
/// explicit u-step sum built on it against the reference triangle.
pub fn ballot_resolution(m_max: usize, k_max: u32, n_max: usize) -> Check {
    let mut t = Tally::new("ballot coefficient");
    for m in 0..=m_max {
        for k in 1..=k_max {
            t.expect_eq(
                format_args!("[x^{m}]C^{k}"),
                int(&ballot_coeff(m, k)),
                ballot_closed(m, k),
            );
        }
    }
    let n_max = n_max.min(golden::MAX_N);
    let outcome = match stat_table(StatId::U, Method::Formula, n_max) {
        Ok(table) => match first_difference(&table.rows, &golden_rows(&golden::U, n_max)) {
            None => Ok(()),
            Some((n, i, x, y)) => Err(format!("u-step sum at ({n},{i}): {x} != {y}")),
        },
        Err(e) => Err(format!("u-step sum: {e}")),
    };
    t.record(outcome);
    let printed = ballot_as_printed(1, 3);
    let summary = format!(
        "m <= {m_max}, 1 <= k <= {k_max}, u-step sum n <= {n_max}; the (k/(m+k)) reading gives {printed} at (1,3) against {}",
        ballot_coeff(1, 3)
    );
    t.finish(summary)
}

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Counts,
    Bijections,
    Stats,
    Identities,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Counts,
        Suite::Bijections,
        Suite::Stats,
        Suite::Identities,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Bijections => "bijections",
            Suite::Stats => "stats",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub const DEFAULT_COUNTS_N: usize = 10;
pub const DEFAULT_IDENTITIES_N: usize = 8;
pub const DEFAULT_STATS_N: usize = 6;
pub const BALLOT_M_MAX: usize = 12;
pub const BALLOT_K_MAX: u32 = 15;

/// Runs a suite. `n_max` caps every size bound; without it each check
/// uses its default.
pub fn run_suite(suite: Suite, n_max: Option<usize>) -> Vec<Check> {
    let cap = |d: usize| n_max.map_or(d, |n| n.min(d));
    let bounds = n_max.map_or_else(BijectionBounds::default, BijectionBounds::capped);
    match suite {
        Suite::Counts => vec![specializations(cap(DEFAULT_COUNTS_N))],
        Suite::Bijections => vec![bijection_certification(bounds)],
        Suite::Stats => vec![
            golden_tables(cap(DEFAULT_STATS_N)),
            statistic_identities(cap(DEFAULT_STATS_N)),
            restricted_statistics(cap(DEFAULT_STATS_N)),
        ],
        Suite::Identities => vec![
            polynomial_identities(cap(DEFAULT_IDENTITIES_N)),
            ballot_resolution(BALLOT_M_MAX, BALLOT_K_MAX, cap(DEFAULT_STATS_N)),
        ],
        Suite::All => [
            Suite::Counts,
            Suite::Bijections,
            Suite::Identities,
            Suite::Stats,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, n_max))
        .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for check in [
            golden_tables(3),
            specializations(5),
            bijection_certification(BijectionBounds::capped(4)),
            polynomial_identities(4),
            statistic_identities(3),
            ballot_resolution(4, 5, 3),
        ] {
            assert!(check.passed, "{check}");
        }
    }

    #[test]
    fn failures_carry_counterexamples() {
        let check = restricted_statistics(3);
        assert!(!check.passed);
        assert!(
            check.detail.contains("p_r at (2,0): brute 6, riordan 5"),
            "{}",
            check.detail
        );
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
