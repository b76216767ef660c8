//! Constructive bijections between the path families, their inverses and
//! the composite maps.
//!
//! Every map works on bare step structure. Weights are recomputed by
//! [`crate::poly::weight`] afterwards.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{
    is_primitive, last_arch_start, matching_index, nested_uv_split, point_levels,
    BicoloredMotzkinPath, BicoloredStep as B, ColoredDyckPath, ColoredDyckStep as CD, DyckPath,
    DyckStep as DS, FamilyKind, GMotzkinPath, GStep as G, HColor, HString, MarkedMotzkinPath,
    MarkedStep as MS, Path, PathFamily, Pattern, Prefix, SchroderPath, SchroderStep as SS, Step,
};

/// Case labels recorded while a map recurses.
pub type Trace = Vec<&'static str>;

fn check_domain<S: Step>(family: &PathFamily, path: &Path<S>) -> Result<()> {
    family.check(path).map_err(|e| match e {
        Error::ConstraintViolation(m) => Error::DomainViolation(m),
        other => other,
    })
}

fn uvu_family() -> PathFamily {
    PathFamily::gmotzkin_avoiding(&[Pattern::Uvu])
}

fn theta_family() -> PathFamily {
    PathFamily::gmotzkin_avoiding(&[Pattern::Uvu, Pattern::Uu])
}

fn rho_family() -> PathFamily {
    PathFamily::gmotzkin_avoiding(&[Pattern::Uvu, Pattern::Uu, Pattern::Hu])
}

// ---------------------------------------------------------------------------
// sigma: uvu-avoiding G-Motzkin -> Schröder

pub fn sigma(q: &GMotzkinPath) -> Result<SchroderPath> {
    sigma_traced(q, &mut Trace::new())
}

pub fn sigma_traced(q: &GMotzkinPath, trace: &mut Trace) -> Result<SchroderPath> {
    check_domain(&uvu_family(), q)?;
    let mut out = Vec::with_capacity(q.len());
    sigma_rec(q.steps(), &mut out, trace);
    Ok(Path::from_valid(out))
}

fn push_udu(out: &mut Vec<SS>, times: usize) {
    for _ in 0..times {
        out.extend([SS::U, SS::D, SS::U]);
    }
}

fn push_d(out: &mut Vec<SS>, times: usize) {
    out.extend(std::iter::repeat_n(SS::D, times));
}

fn sigma_rec(q: &[G], out: &mut Vec<SS>, trace: &mut Trace) {
    let Some(&first) = q.first() else {
        trace.push("base");
        return;
    };
    if first == G::H {
        trace.push("C1");
        out.push(SS::H);
        return sigma_rec(&q[1..], out, trace);
    }
    let m = matching_index(q, 0).expect("balanced");
    if q[m] == G::D {
        trace.push("C5");
        out.extend([SS::U, SS::U]);
        sigma_rec(&q[1..m], out, trace);
        out.extend([SS::D, SS::D]);
        return sigma_rec(&q[m + 1..], out, trace);
    }
    if q == [G::U, G::V] {
        trace.push("base");
        out.extend([SS::U, SS::D]);
        return;
    }
    if m == 1 && q[2] == G::H {
        trace.push("C2");
        out.extend([SS::U, SS::D, SS::H]);
        return sigma_rec(&q[3..], out, trace);
    }
    let (i, core, tail) = nested_uv_split(q).expect("u matched by v");
    let j = i.div_ceil(2);
    let odd = i % 2 == 1;
    if is_primitive(core) && core.last() == Some(&G::D) {
        trace.push("C3");
        if odd {
            push_udu(out, j - 1);
            out.extend([SS::U, SS::D]);
            sigma_rec(core, out, trace);
            push_d(out, j - 1);
        } else {
            out.push(SS::U);
            push_udu(out, j - 1);
            out.extend([SS::U, SS::D]);
            sigma_rec(core, out, trace);
            push_d(out, j);
        }
    } else {
        trace.push("C4");
        if odd {
            out.push(SS::U);
            push_udu(out, j - 1);
        } else {
            push_udu(out, j);
        }
        sigma_rec(core, out, trace);
        push_d(out, j);
    }
    sigma_rec(tail, out, trace)
}

pub fn sigma_inv(p: &SchroderPath) -> GMotzkinPath {
    sigma_inv_traced(p, &mut Trace::new())
}

pub fn sigma_inv_traced(p: &SchroderPath, trace: &mut Trace) -> GMotzkinPath {
    let mut out = Vec::with_capacity(p.len());
    sigma_inv_rec(p.steps(), &mut out, trace);
    Path::from_valid(out)
}

fn sigma_inv_rec(p: &[SS], out: &mut Vec<G>, trace: &mut Trace) {
    let Some(&first) = p.first() else {
        trace.push("base");
        return;
    };
    if first == SS::H {
        trace.push("C1");
        out.push(G::H);
        return sigma_inv_rec(&p[1..], out, trace);
    }
    let m = matching_index(p, 0).expect("balanced");
    if m == 1 {
        // p starts with ud
        let rest = &p[2..];
        match rest.first() {
            None => {
                trace.push("base");
                out.extend([G::U, G::V]);
            }
            Some(SS::H) => {
                trace.push("C2");
                out.extend([G::U, G::V, G::H]);
                sigma_inv_rec(&rest[1..], out, trace);
            }
            Some(_) => {
                trace.push("C3");
                let e = matching_index(rest, 0).expect("balanced");
                out.push(G::U);
                sigma_inv_rec(&rest[..=e], out, trace);
                out.push(G::V);
                sigma_inv_rec(&rest[e + 1..], out, trace);
            }
        }
        return;
    }
    let inner = &p[1..m];
    let tail = &p[m + 1..];
    out.push(G::U);
    if is_primitive(inner) {
        trace.push("C5");
        sigma_inv_rec(&inner[1..inner.len() - 1], out, trace);
        out.push(G::D);
    } else {
        trace.push("C4");
        sigma_inv_rec(inner, out, trace);
        out.push(G::V);
    }
    sigma_inv_rec(tail, out, trace)
}

// ---------------------------------------------------------------------------
// phi: colored Dyck <-> Schröder, A-colored peaks <-> H

pub fn phi_peak(p: &ColoredDyckPath) -> SchroderPath {
    let mut out = Vec::with_capacity(p.len());
    for &s in p.steps() {
        match s {
            CD::U => out.push(SS::U),
            CD::PeakA => {
                out.pop();
                out.push(SS::H);
            }
            CD::D => out.push(SS::D),
        }
    }
    Path::from_valid(out)
}

pub fn phi_peak_inv(s: &SchroderPath) -> ColoredDyckPath {
    let mut out = Vec::with_capacity(s.len() * 2);
    for &step in s.steps() {
        match step {
            SS::U => out.push(CD::U),
            SS::H => out.extend([CD::U, CD::PeakA]),
            SS::D => out.push(CD::D),
        }
    }
    Path::from_valid(out)
}

// ---------------------------------------------------------------------------
// vartheta: ud-prefixed Schröder with an axis H -> H-prefixed little Schröder

pub(crate) fn first_axis_h(steps: &[SS]) -> Option<usize> {
    let levels = point_levels(steps);
    (0..steps.len()).find(|&t| steps[t] == SS::H && levels[t] == 0)
}

pub fn vartheta(p: &SchroderPath) -> Result<SchroderPath> {
    let s = p.steps();
    if !s.starts_with(&[SS::U, SS::D]) {
        return Err(Error::DomainViolation(format!(
            "{p} does not start with ud"
        )));
    }
    let k = first_axis_h(s)
        .ok_or_else(|| Error::DomainViolation(format!("{p} has no H on the x-axis")))?;
    let mut out = Vec::with_capacity(s.len());
    out.push(SS::H);
    out.extend_from_slice(&s[2..k]);
    out.push(SS::U);
    out.extend_from_slice(&s[k + 1..]);
    out.push(SS::D);
    Ok(Path::from_valid(out))
}

pub fn vartheta_inv(p: &SchroderPath) -> Result<SchroderPath> {
    let s = p.steps();
    if s.first() != Some(&SS::H) || s.len() < 3 {
        return Err(Error::DomainViolation(format!(
            "{p} is not H followed by a nonempty path"
        )));
    }
    let rest = &s[1..];
    if first_axis_h(rest).is_some() {
        return Err(Error::DomainViolation(format!(
            "{p} has an H on the x-axis after the first step"
        )));
    }
    let a = last_arch_start(rest);
    let mut out = Vec::with_capacity(s.len());
    out.extend([SS::U, SS::D]);
    out.extend_from_slice(&rest[..a]);
    out.push(SS::H);
    out.extend_from_slice(&rest[a + 1..rest.len() - 1]);
    Ok(Path::from_valid(out))
}

// ---------------------------------------------------------------------------
// theta: {uvu, uu}-avoiding G-Motzkin -> bicolored Motzkin

pub fn theta(q: &GMotzkinPath) -> Result<BicoloredMotzkinPath> {
    theta_traced(q, &mut Trace::new())
}

pub fn theta_traced(q: &GMotzkinPath, trace: &mut Trace) -> Result<BicoloredMotzkinPath> {
    check_domain(&theta_family(), q)?;
    let mut out = Vec::with_capacity(q.len());
    theta_rec(q.steps(), &mut out, trace);
    Ok(Path::from_valid(out))
}

fn theta_rec(q: &[G], out: &mut Vec<B>, trace: &mut Trace) {
    let Some(&first) = q.first() else {
        trace.push("base");
        return;
    };
    if first == G::H {
        trace.push("C1");
        out.push(B::Ha);
        return theta_rec(&q[1..], out, trace);
    }
    let m = matching_index(q, 0).expect("balanced");
    let inner = &q[1..m];
    let tail = &q[m + 1..];
    match (q[m], inner.is_empty()) {
        (G::D, true) => {
            trace.push("C2");
            out.extend([B::Hb, B::Hb]);
        }
        (G::D, false) => {
            trace.push("C3");
            out.extend([B::Hb, B::U]);
            theta_rec(&inner[1..], out, trace);
            out.push(B::D);
        }
        (_, true) => match tail.first() {
            None => {
                trace.push("base");
                out.push(B::Hb);
            }
            Some(_) => {
                trace.push("C4");
                out.extend([B::Hb, B::Ha]);
                return theta_rec(&tail[1..], out, trace);
            }
        },
        (_, false) => {
            trace.push("C5");
            out.push(B::U);
            theta_rec(&inner[1..], out, trace);
            out.push(B::D);
        }
    }
    theta_rec(tail, out, trace)
}

pub fn theta_inv(p: &BicoloredMotzkinPath) -> GMotzkinPath {
    theta_inv_traced(p, &mut Trace::new())
}

pub fn theta_inv_traced(p: &BicoloredMotzkinPath, trace: &mut Trace) -> GMotzkinPath {
    let mut out = Vec::with_capacity(p.len() * 2);
    theta_inv_rec(p.steps(), &mut out, trace);
    Path::from_valid(out)
}

fn theta_inv_rec(p: &[B], out: &mut Vec<G>, trace: &mut Trace) {
    let Some(&first) = p.first() else {
        trace.push("base");
        return;
    };
    match first {
        B::Ha => {
            trace.push("C1");
            out.push(G::H);
            theta_inv_rec(&p[1..], out, trace)
        }
        B::Hb => match p.get(1) {
            None => {
                trace.push("base");
                out.extend([G::U, G::V]);
            }
            Some(B::Hb) => {
                trace.push("C2");
                out.extend([G::U, G::D]);
                theta_inv_rec(&p[2..], out, trace)
            }
            Some(B::Ha) => {
                trace.push("C4");
                out.extend([G::U, G::V, G::H]);
                theta_inv_rec(&p[2..], out, trace)
            }
            Some(_) => {
                trace.push("C3");
                let rest = &p[1..];
                let e = matching_index(rest, 0).expect("balanced");
                out.extend([G::U, G::H]);
                theta_inv_rec(&rest[1..e], out, trace);
                out.push(G::D);
                theta_inv_rec(&rest[e + 1..], out, trace)
            }
        },
        _ => {
            trace.push("C5");
            let e = matching_index(p, 0).expect("balanced");
            out.extend([G::U, G::H]);
            theta_inv_rec(&p[1..e], out, trace);
            out.push(G::V);
            theta_inv_rec(&p[e + 1..], out, trace)
        }
    }
}

// ---------------------------------------------------------------------------
// rho: {uvu, uu, hu}-avoiding G-Motzkin -> colored h-strings

pub fn rho(q: &GMotzkinPath) -> Result<HString> {
    rho_traced(q, &mut Trace::new())
}

pub fn rho_traced(q: &GMotzkinPath, trace: &mut Trace) -> Result<HString> {
    check_domain(&rho_family(), q)?;
    let mut out = Vec::with_capacity(q.len());
    let mut s = q.steps();
    loop {
        match s.first() {
            None => {
                trace.push("base");
                break;
            }
            Some(G::H) => {
                // hu is forbidden, so the rest is all h
                trace.push("C1");
                out.extend(std::iter::repeat_n(HColor::A, s.len()));
                break;
            }
            Some(_) => {
                let run = s[1..].iter().take_while(|&&t| t == G::H).count();
                let closer = s[1 + run];
                let rest = &s[run + 2..];
                if closer == G::V && run == 0 {
                    trace.push("C2");
                    out.push(HColor::B);
                    out.extend(std::iter::repeat_n(HColor::A, rest.len()));
                    break;
                }
                if closer == G::V {
                    trace.push("C3");
                    out.extend(std::iter::repeat_n(HColor::A, run));
                    out.push(HColor::B);
                } else {
                    trace.push("C4");
                    out.push(HColor::B);
                    out.extend(std::iter::repeat_n(HColor::A, run));
                    out.push(HColor::B);
                }
                s = rest;
            }
        }
    }
    Ok(Path::from_valid(out))
}

pub fn rho_inv(p: &HString) -> GMotzkinPath {
    rho_inv_traced(p, &mut Trace::new())
}

pub fn rho_inv_traced(p: &HString, trace: &mut Trace) -> GMotzkinPath {
    let mut out = Vec::with_capacity(p.len() * 2);
    let mut s = p.steps();
    loop {
        let Some(&first) = s.first() else {
            trace.push("base");
            break;
        };
        let run_from = |k: usize| s[k..].iter().take_while(|&&c| c == HColor::A).count();
        if first == HColor::A {
            let run = run_from(0);
            if run == s.len() {
                trace.push("C1");
                out.extend(std::iter::repeat_n(G::H, run));
                break;
            }
            trace.push("C3");
            out.push(G::U);
            out.extend(std::iter::repeat_n(G::H, run));
            out.push(G::V);
            s = &s[run + 1..];
        } else {
            let run = run_from(1);
            if 1 + run == s.len() {
                trace.push("C2");
                out.extend([G::U, G::V]);
                out.extend(std::iter::repeat_n(G::H, run));
                break;
            }
            trace.push("C4");
            out.push(G::U);
            out.extend(std::iter::repeat_n(G::H, run));
            out.push(G::D);
            s = &s[run + 2..];
        }
    }
    Path::from_valid(out)
}

// ---------------------------------------------------------------------------
// varphi: Ha-prefixed bicolored Motzkin -> Dyck

fn ha_prefixed() -> PathFamily {
    PathFamily::new(FamilyKind::BicoloredMotzkin).with_prefix(Prefix::StartsH)
}

pub fn varphi(q: &BicoloredMotzkinPath) -> Result<DyckPath> {
    varphi_traced(q, &mut Trace::new())
}

pub fn varphi_traced(q: &BicoloredMotzkinPath, trace: &mut Trace) -> Result<DyckPath> {
    check_domain(&ha_prefixed(), q)?;
    let mut out = Vec::with_capacity(q.len() * 2);
    varphi_rec(q.steps(), &mut out, trace);
    Ok(Path::from_valid(out))
}

fn varphi_rec(q: &[B], out: &mut Vec<DS>, trace: &mut Trace) {
    let n = q.len();
    if n == 1 {
        trace.push("base");
        out.extend([DS::U, DS::D]);
        return;
    }
    match q[n - 1] {
        B::Ha => {
            trace.push("C1");
            varphi_rec(&q[..n - 1], out, trace);
            out.extend([DS::U, DS::D]);
        }
        B::Hb => {
            trace.push("C2");
            out.push(DS::U);
            varphi_rec(&q[..n - 1], out, trace);
            out.push(DS::D);
        }
        _ => {
            trace.push("C3");
            let a = last_arch_start(q);
            varphi_rec(&q[..a], out, trace);
            out.push(DS::U);
            let mut lifted = Vec::with_capacity(n - a - 1);
            lifted.push(B::Ha);
            lifted.extend_from_slice(&q[a + 1..n - 1]);
            varphi_rec(&lifted, out, trace);
            out.push(DS::D);
        }
    }
}

pub fn varphi_inv(p: &DyckPath) -> Result<BicoloredMotzkinPath> {
    varphi_inv_traced(p, &mut Trace::new())
}

pub fn varphi_inv_traced(p: &DyckPath, trace: &mut Trace) -> Result<BicoloredMotzkinPath> {
    if p.is_empty() {
        return Err(Error::DomainViolation(
            "the empty Dyck path has no preimage".into(),
        ));
    }
    let mut out = Vec::with_capacity(p.len());
    varphi_inv_rec(p.steps(), &mut out, trace);
    Ok(Path::from_valid(out))
}

fn varphi_inv_rec(p: &[DS], out: &mut Vec<B>, trace: &mut Trace) {
    let n = p.len();
    if n == 2 {
        trace.push("base");
        out.push(B::Ha);
        return;
    }
    let a = last_arch_start(p);
    if a == n - 2 {
        trace.push("C1");
        varphi_inv_rec(&p[..a], out, trace);
        out.push(B::Ha);
    } else if a == 0 {
        trace.push("C2");
        varphi_inv_rec(&p[1..n - 1], out, trace);
        out.push(B::Hb);
    } else {
        trace.push("C3");
        varphi_inv_rec(&p[..a], out, trace);
        out.push(B::U);
        let mut inner = Vec::with_capacity(n - a - 2);
        varphi_inv_rec(&p[a + 1..n - 1], &mut inner, trace);
        out.extend_from_slice(&inner[1..]);
        out.push(B::D);
    }
}

// ---------------------------------------------------------------------------
// Composites

/// Peak colors of a colored Dyck path, left to right, as `true` for A.
fn peak_colors(p: &ColoredDyckPath) -> (DyckPath, Vec<bool>) {
    let mut steps = Vec::with_capacity(p.len());
    let mut colors = Vec::new();
    let s = p.steps();
    for (t, &step) in s.iter().enumerate() {
        match step {
            CD::U => steps.push(DS::U),
            CD::PeakA => {
                steps.push(DS::D);
                colors.push(true);
            }
            CD::D => {
                steps.push(DS::D);
                if t > 0 && s[t - 1] == CD::U {
                    colors.push(false);
                }
            }
        }
    }
    (Path::from_valid(steps), colors)
}

fn color_peaks(p: &DyckPath, colors: &[bool]) -> ColoredDyckPath {
    let s = p.steps();
    let mut next = colors.iter();
    let steps = s
        .iter()
        .enumerate()
        .map(|(t, &step)| match step {
            DS::U => CD::U,
            DS::D if t > 0 && s[t - 1] == DS::U => {
                if *next.next().expect("one color per peak") {
                    CD::PeakA
                } else {
                    CD::D
                }
            }
            DS::D => CD::D,
        })
        .collect();
    Path::from_valid(steps)
}

pub fn psi(q: &GMotzkinPath) -> Result<MarkedMotzkinPath> {
    psi_traced(q, &mut Trace::new())
}

/// `varphi_inv ∘ phi_inv ∘ sigma`, carrying the peak colors onto the Ha and
/// d steps of the result in left-to-right order.
pub fn psi_traced(q: &GMotzkinPath, trace: &mut Trace) -> Result<MarkedMotzkinPath> {
    if q.x_length() == 0 {
        return Err(Error::DomainViolation("psi needs a nonempty path".into()));
    }
    let schroder = sigma_traced(q, trace)?;
    let (dyck, colors) = peak_colors(&phi_peak_inv(&schroder));
    let motzkin = varphi_inv_traced(&dyck, trace)?;
    let mut next = colors.iter();
    let mut mark = |a: MS, b: MS| {
        if *next.next().expect("one color per peak") {
            a
        } else {
            b
        }
    };
    let steps = motzkin
        .steps()
        .iter()
        .map(|&s| match s {
            B::U => MS::U,
            B::Ha => mark(MS::HaA, MS::HaB),
            B::Hb => MS::Hb,
            B::D => mark(MS::DA, MS::DB),
        })
        .collect();
    Ok(Path::from_valid(steps))
}

pub fn psi_inv(p: &MarkedMotzkinPath) -> Result<GMotzkinPath> {
    psi_inv_traced(p, &mut Trace::new())
}

pub fn psi_inv_traced(p: &MarkedMotzkinPath, trace: &mut Trace) -> Result<GMotzkinPath> {
    let fam = PathFamily::new(FamilyKind::MarkedMotzkin).with_prefix(Prefix::StartsH);
    check_domain(&fam, p)?;
    let mut colors = Vec::new();
    let steps = p
        .steps()
        .iter()
        .map(|&s| match s {
            MS::U => B::U,
            MS::HaA | MS::HaB => {
                colors.push(s == MS::HaA);
                B::Ha
            }
            MS::Hb => B::Hb,
            MS::DA | MS::DB => {
                colors.push(s == MS::DA);
                B::D
            }
        })
        .collect();
    let dyck = varphi_traced(&Path::from_valid(steps), trace)?;
    let schroder = phi_peak(&color_peaks(&dyck, &colors));
    Ok(sigma_inv_traced(&schroder, trace))
}

fn varphi_theta_family() -> PathFamily {
    theta_family().with_prefix(Prefix::StartsH)
}

/// `varphi ∘ theta` on h-prefixed {uvu, uu}-avoiding paths.
pub fn varphi_theta(q: &GMotzkinPath) -> Result<DyckPath> {
    varphi_theta_traced(q, &mut Trace::new())
}

pub fn varphi_theta_traced(q: &GMotzkinPath, trace: &mut Trace) -> Result<DyckPath> {
    check_domain(&varphi_theta_family(), q)?;
    varphi_traced(&theta_traced(q, trace)?, trace)
}

pub fn varphi_theta_inv(p: &DyckPath) -> Result<GMotzkinPath> {
    varphi_theta_inv_traced(p, &mut Trace::new())
}

pub fn varphi_theta_inv_traced(p: &DyckPath, trace: &mut Trace) -> Result<GMotzkinPath> {
    Ok(theta_inv_traced(&varphi_inv_traced(p, trace)?, trace))
}

// ---------------------------------------------------------------------------
// Dynamic dispatch by name

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BijectionId {
    Sigma,
    PhiPeak,
    Vartheta,
    Theta,
    Rho,
    Varphi,
    Psi,
    VarphiTheta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

impl BijectionId {
    pub const ALL: [BijectionId; 8] = [
        BijectionId::Sigma,
        BijectionId::PhiPeak,
        BijectionId::Vartheta,
        BijectionId::Theta,
        BijectionId::Rho,
        BijectionId::Varphi,
        BijectionId::Psi,
        BijectionId::VarphiTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionId::Sigma => "sigma",
            BijectionId::PhiPeak => "phi_peak",
            BijectionId::Vartheta => "vartheta",
            BijectionId::Theta => "theta",
            BijectionId::Rho => "rho",
            BijectionId::Varphi => "varphi",
            BijectionId::Psi => "psi",
            BijectionId::VarphiTheta => "varphi_theta",
        }
    }

    /// Families of the forward map's domain and codomain.
    pub fn families(self) -> (PathFamily, PathFamily) {
        use FamilyKind as K;
        let schroder = PathFamily::new(K::Schroder);
        match self {
            BijectionId::Sigma => (uvu_family(), schroder),
            BijectionId::PhiPeak => (PathFamily::new(K::ColoredDyck), schroder),
            BijectionId::Vartheta => (
                schroder.clone().with_prefix(Prefix::StartsUd),
                schroder.with_prefix(Prefix::StartsH),
            ),
            BijectionId::Theta => (theta_family(), PathFamily::new(K::BicoloredMotzkin)),
            BijectionId::Rho => (rho_family(), PathFamily::new(K::HString)),
            BijectionId::Varphi => (ha_prefixed(), PathFamily::new(K::Dyck)),
            BijectionId::Psi => (
                uvu_family(),
                PathFamily::new(K::MarkedMotzkin).with_prefix(Prefix::StartsH),
            ),
            BijectionId::VarphiTheta => (varphi_theta_family(), PathFamily::new(K::Dyck)),
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BijectionId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bijection {s:?}")))
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fwd" | "forward" => Ok(Direction::Forward),
            "inv" | "inverse" => Ok(Direction::Inverse),
            _ => Err(Error::Parse(format!("unknown direction {s:?}"))),
        }
    }
}

/// Image of a map applied to text, with its case trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapped {
    pub output: String,
    pub trace: Vec<String>,
}

fn parse_in<S: Step>(family: &PathFamily, text: &str) -> Result<Path<S>> {
    family.parse::<S>(text).map_err(|e| match e {
        Error::ConstraintViolation(m) => Error::DomainViolation(m),
        other => other,
    })
}

/// Applies a bijection to a path given as text.
pub fn apply(id: BijectionId, direction: Direction, input: &str) -> Result<Mapped> {
    let (dom, cod) = id.families();
    let fam = match direction {
        Direction::Forward => dom,
        Direction::Inverse => cod,
    };
    let mut trace = Trace::new();
    let t = &mut trace;
    let output = match (id, direction) {
        (BijectionId::Sigma, Direction::Forward) => {
            sigma_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::Sigma, Direction::Inverse) => {
            sigma_inv_traced(&parse_in(&fam, input)?, t).render()
        }
        (BijectionId::PhiPeak, Direction::Forward) => phi_peak(&parse_in(&fam, input)?).render(),
        (BijectionId::PhiPeak, Direction::Inverse) => {
            phi_peak_inv(&parse_in(&fam, input)?).render()
        }
        (BijectionId::Vartheta, Direction::Forward) => vartheta(&parse_in(&fam, input)?)?.render(),
        (BijectionId::Vartheta, Direction::Inverse) => {
            vartheta_inv(&parse_in(&fam, input)?)?.render()
        }
        (BijectionId::Theta, Direction::Forward) => {
            theta_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::Theta, Direction::Inverse) => {
            theta_inv_traced(&parse_in(&fam, input)?, t).render()
        }
        (BijectionId::Rho, Direction::Forward) => rho_traced(&parse_in(&fam, input)?, t)?.render(),
        (BijectionId::Rho, Direction::Inverse) => {
            rho_inv_traced(&parse_in(&fam, input)?, t).render()
        }
        (BijectionId::Varphi, Direction::Forward) => {
            varphi_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::Varphi, Direction::Inverse) => {
            varphi_inv_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::Psi, Direction::Forward) => psi_traced(&parse_in(&fam, input)?, t)?.render(),
        (BijectionId::Psi, Direction::Inverse) => {
            psi_inv_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::VarphiTheta, Direction::Forward) => {
            varphi_theta_traced(&parse_in(&fam, input)?, t)?.render()
        }
        (BijectionId::VarphiTheta, Direction::Inverse) => {
            varphi_theta_inv_traced(&parse_in(&fam, input)?, t)?.render()
        }
    };
    Ok(Mapped {
        output,
        trace: trace.into_iter().map(String::from).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{generate, EnumSpec};
    use crate::paths::Surface;
    use crate::poly::{weight, Polynomial, Weighting};
    use std::collections::HashSet;

    fn g(s: &str) -> GMotzkinPath {
        GMotzkinPath::parse(s).unwrap()
    }

    fn sch(s: &str) -> SchroderPath {
        SchroderPath::parse(s).unwrap()
    }

    fn bic(s: &str) -> BicoloredMotzkinPath {
        BicoloredMotzkinPath::parse(s).unwrap()
    }

    const NESTED_IN: &str = "uuuvhudvvhuuuuuvdvvvud";
    const NESTED_OUT: &str = "uduudHuudddHuduuduuudddduudd";

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&g("uv")).unwrap().render(), "ud");
        assert_eq!(sigma(&g("h")).unwrap().render(), "H");
        assert_eq!(sigma(&g(NESTED_IN)).unwrap().render(), NESTED_OUT);
        assert_eq!(sigma_inv(&sch(NESTED_OUT)).render(), NESTED_IN);
        assert_eq!(sigma_inv(&sch("ud")).render(), "uv");
        assert_eq!(sigma_inv(&sch("uudd")).render(), "ud");
        assert!(matches!(
            sigma(&g("uvuv")).unwrap_err(),
            Error::DomainViolation(_)
        ));
    }

    #[test]
    fn sigma_case_two_matches_case_four_reading() {
        // uv·h·rest read as a depth-1 nest with empty core gives u σ(ε) d σ(h·rest)
        for rest in ["", "h", "uvh", "ud"] {
            let q = g(&format!("uvh{rest}"));
            let via_c4 = format!("ud{}", sigma(&g(&format!("h{rest}"))).unwrap().render());
            assert_eq!(sigma(&q).unwrap().render(), via_c4);
        }
    }

    #[test]
    fn sigma_exhaustive() {
        for n in 0..=6 {
            let dom = generate::<G>(&EnumSpec::new(uvu_family(), n)).unwrap();
            let mut images = HashSet::new();
            for q in &dom {
                let p = sigma(q).unwrap();
                assert_eq!(p.x_length(), 2 * q.x_length());
                assert_eq!(sigma_inv(&p), *q);
                assert_eq!(
                    weight(&p, Weighting::SchroderAb).unwrap(),
                    weight(q, Weighting::GMotzkinAbBsq).unwrap()
                );
                images.insert(p);
            }
            let cod =
                generate::<SS>(&EnumSpec::new(PathFamily::new(FamilyKind::Schroder), n)).unwrap();
            assert_eq!(images, cod.into_iter().collect::<HashSet<_>>(), "n = {n}");
        }
    }

    #[test]
    fn sigma_keeps_axis_h() {
        let fam = uvu_family().with_surface(Surface::NoHOnAxis);
        let little = PathFamily::new(FamilyKind::Schroder).with_surface(Surface::NoHOnAxis);
        for n in 0..=6 {
            for q in generate::<G>(&EnumSpec::new(fam.clone(), n)).unwrap() {
                assert!(little.check(&sigma(&q).unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn phi_examples() {
        let p = ColoredDyckPath::parse("uD").unwrap();
        assert_eq!(phi_peak(&p).render(), "H");
        let p = ColoredDyckPath::parse("uduuDuduuuDddduD").unwrap();
        assert_eq!(phi_peak(&p).render(), "uduHuduuHdddH");
        assert_eq!(phi_peak_inv(&sch("uduHuduuHdddH")), p);
        let p = ColoredDyckPath::parse("uudd").unwrap();
        assert_eq!(phi_peak(&p).render(), "uudd");
    }

    #[test]
    fn vartheta_examples() {
        for (a, b) in [("udH", "Hud"), ("udHH", "HuHd"), ("uduuddH", "Huuddud")] {
            assert_eq!(vartheta(&sch(a)).unwrap().render(), b);
            assert_eq!(vartheta_inv(&sch(b)).unwrap().render(), a);
        }
        assert!(vartheta(&sch("Hud")).is_err());
        assert!(vartheta(&sch("udud")).is_err());
        assert!(vartheta_inv(&sch("HHud")).is_err());
        assert!(vartheta_inv(&sch("H")).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&g("uv")).unwrap().render(), "b");
        assert_eq!(theta(&g("uhv")).unwrap().render(), "ud");
        assert_eq!(theta_inv(&bic("b")).render(), "uv");
        assert_eq!(theta_inv(&bic("ud")).render(), "uhv");
        let long_path = "uhhhuhuhhuhuvhvvuddvhhhuhhuhvuvdhuhd";
        let image = "uaabuuaubaddbbddaaabuaudbdabud";
        assert_eq!(theta(&g(long_path)).unwrap().render(), image);
        assert_eq!(theta_inv(&bic(image)).render(), long_path);
        assert!(matches!(
            theta(&g("uudd")).unwrap_err(),
            Error::DomainViolation(_)
        ));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&g("hh")).unwrap().render(), "aa");
        assert_eq!(rho(&g("uv")).unwrap().render(), "b");
        assert_eq!(rho(&g("uhd")).unwrap().render(), "bab");
        for s in ["", "a", "b", "ab", "ba", "bab", "abba", "bbbb"] {
            let h = HString::parse(s).unwrap();
            assert_eq!(rho(&rho_inv(&h)).unwrap(), h);
        }
    }

    #[test]
    fn varphi_examples() {
        for (a, b) in [
            ("a", "ud"),
            ("aa", "udud"),
            ("ab", "uudd"),
            ("aud", "uduudd"),
        ] {
            assert_eq!(varphi(&bic(a)).unwrap().render(), b);
            assert_eq!(
                varphi_inv(&DyckPath::parse(b).unwrap()).unwrap().render(),
                a
            );
        }
        assert!(matches!(
            varphi(&bic("bud")).unwrap_err(),
            Error::DomainViolation(_)
        ));
        assert!(matches!(
            varphi_inv(&DyckPath::empty()).unwrap_err(),
            Error::DomainViolation(_)
        ));
    }

    #[test]
    fn varphi_theta_worked_example() {
        let q = g("huhvuhdhuhuhuduvdv");
        let mid = theta(&q).unwrap();
        assert_eq!(mid.render(), "audbudaububbbdd");
        let expected = concat!("uud", "uuddd", "uudd", "ud", "uuudd", "uuuuudddddd");
        assert_eq!(varphi(&mid).unwrap().render(), expected);
        assert_eq!(varphi_theta(&q).unwrap().render(), expected);
        assert_eq!(
            varphi_theta_inv(&DyckPath::parse(expected).unwrap()).unwrap(),
            q
        );
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&g("h")).unwrap().render(), "A");
        assert_eq!(psi(&g("uv")).unwrap().render(), "a");
        assert_eq!(
            psi_inv(&MarkedMotzkinPath::parse("A").unwrap()).unwrap(),
            g("h")
        );
        assert!(psi(&GMotzkinPath::empty()).is_err());
    }

    #[test]
    fn psi_exhaustive_small() {
        let marked = PathFamily::new(FamilyKind::MarkedMotzkin).with_prefix(Prefix::StartsH);
        for n in 1..=5 {
            let dom = generate::<G>(&EnumSpec::new(uvu_family(), n)).unwrap();
            let mut images = HashSet::new();
            for q in &dom {
                let m = psi(q).unwrap();
                assert_eq!(m.x_length(), q.x_length());
                assert_eq!(psi_inv(&m).unwrap(), *q);
                assert_eq!(
                    weight(&m, Weighting::MarkedMotzkinAb).unwrap(),
                    weight(q, Weighting::GMotzkinAbBsq).unwrap()
                );
                images.insert(m);
            }
            let cod = generate::<MS>(&EnumSpec::new(marked.clone(), n)).unwrap();
            assert_eq!(images, cod.into_iter().collect::<HashSet<_>>(), "n = {n}");
        }
    }

    #[test]
    fn varphi_weights() {
        for n in 1..=6 {
            let dom = generate::<B>(&EnumSpec::new(ha_prefixed(), n)).unwrap();
            let mut total = Polynomial::zero();
            for q in &dom {
                let p = varphi(q).unwrap();
                assert_eq!(varphi_inv(&p).unwrap(), *q);
                let w = weight(&p, Weighting::DyckPeakAb).unwrap();
                assert_eq!(w, weight(q, Weighting::BicoloredMotzkinAb).unwrap());
                total += &w;
            }
            assert_eq!(
                total,
                crate::enumerate::closed_form(crate::enumerate::ClosedForm::Dyck, n).unwrap()
            );
        }
    }

    #[test]
    fn apply_by_name() {
        let m = apply(BijectionId::Sigma, Direction::Forward, "uv").unwrap();
        assert_eq!(m.output, "ud");
        assert_eq!(m.trace, vec!["base"]);
        let m = apply(BijectionId::Sigma, Direction::Forward, "huv").unwrap();
        assert_eq!(m.trace, vec!["C1", "base"]);
        assert!(matches!(
            apply(BijectionId::Sigma, Direction::Forward, "uvuv").unwrap_err(),
            Error::DomainViolation(_)
        ));
        assert_eq!(
            apply(BijectionId::Rho, Direction::Inverse, "bab")
                .unwrap()
                .output,
            "uhd"
        );
        for id in BijectionId::ALL {
            assert_eq!(id.name().parse::<BijectionId>().unwrap(), id);
        }
    }
}
