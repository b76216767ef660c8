//! Step alphabets, path values and the structural decompositions consumed by
//! the bijections.
//!
//! Every family shares one generic [`Path`] type parameterised by its step
//! alphabet. A `Path<S>` is always geometrically valid: it never dips below
//! the x-axis and ends on it. Family-level restrictions (pattern avoidance,
//! surface and prefix constraints) live in [`PathFamily`] and are checked
//! separately.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A step alphabet. `ALPHABET` lists the steps in enumeration order.
pub trait Step: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const ALPHABET: &'static [Self];

    fn symbol(self) -> char;
    fn dx(self) -> u32;
    fn dy(self) -> i32;

    /// Whether this alphabet can carry paths of the given family.
    fn supports(kind: FamilyKind) -> bool;

    fn from_symbol(c: char) -> Option<Self> {
        Self::ALPHABET.iter().copied().find(|s| s.symbol() == c)
    }

    fn is_up(self) -> bool {
        self.dy() > 0
    }

    fn is_down(self) -> bool {
        self.dy() < 0
    }

    fn is_level(self) -> bool {
        self.dy() == 0
    }

    /// Local adjacency rule between consecutive steps.
    fn may_follow(_prev: Option<Self>, _next: Self) -> bool {
        true
    }
}

/// G-Motzkin steps: u=(1,1), h=(1,0), v=(0,-1), d=(1,-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GStep {
    U,
    H,
    V,
    D,
}

impl Step for GStep {
    const ALPHABET: &'static [Self] = &[GStep::U, GStep::H, GStep::V, GStep::D];

    fn symbol(self) -> char {
        match self {
            GStep::U => 'u',
            GStep::H => 'h',
            GStep::V => 'v',
            GStep::D => 'd',
        }
    }

    fn dx(self) -> u32 {
        match self {
            GStep::V => 0,
            _ => 1,
        }
    }

    fn dy(self) -> i32 {
        match self {
            GStep::U => 1,
            GStep::H => 0,
            GStep::V | GStep::D => -1,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        matches!(kind, FamilyKind::GMotzkin | FamilyKind::Motzkin)
    }
}

/// Schröder steps: u=(1,1), H=(2,0), d=(1,-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchroderStep {
    U,
    H,
    D,
}

impl Step for SchroderStep {
    const ALPHABET: &'static [Self] = &[SchroderStep::U, SchroderStep::H, SchroderStep::D];

    fn symbol(self) -> char {
        match self {
            SchroderStep::U => 'u',
            SchroderStep::H => 'H',
            SchroderStep::D => 'd',
        }
    }

    fn dx(self) -> u32 {
        match self {
            SchroderStep::H => 2,
            _ => 1,
        }
    }

    fn dy(self) -> i32 {
        match self {
            SchroderStep::U => 1,
            SchroderStep::H => 0,
            SchroderStep::D => -1,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::Schroder
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckStep {
    U,
    D,
}

impl Step for DyckStep {
    const ALPHABET: &'static [Self] = &[DyckStep::U, DyckStep::D];

    fn symbol(self) -> char {
        match self {
            DyckStep::U => 'u',
            DyckStep::D => 'd',
        }
    }

    fn dx(self) -> u32 {
        1
    }

    fn dy(self) -> i32 {
        match self {
            DyckStep::U => 1,
            DyckStep::D => -1,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::Dyck
    }
}

/// Dyck steps where a down step closing a ud-peak may carry color A
/// (symbol `D`). Plain `d` steps are color B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColoredDyckStep {
    U,
    PeakA,
    D,
}

impl Step for ColoredDyckStep {
    const ALPHABET: &'static [Self] = &[
        ColoredDyckStep::U,
        ColoredDyckStep::PeakA,
        ColoredDyckStep::D,
    ];

    fn symbol(self) -> char {
        match self {
            ColoredDyckStep::U => 'u',
            ColoredDyckStep::PeakA => 'D',
            ColoredDyckStep::D => 'd',
        }
    }

    fn dx(self) -> u32 {
        1
    }

    fn dy(self) -> i32 {
        match self {
            ColoredDyckStep::U => 1,
            _ => -1,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::ColoredDyck
    }

    fn may_follow(prev: Option<Self>, next: Self) -> bool {
        next != ColoredDyckStep::PeakA || prev == Some(ColoredDyckStep::U)
    }
}

/// Motzkin steps with two colors of horizontal step: `a` (Ha) and `b` (Hb).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BicoloredStep {
    U,
    Ha,
    Hb,
    D,
}

impl Step for BicoloredStep {
    const ALPHABET: &'static [Self] = &[
        BicoloredStep::U,
        BicoloredStep::Ha,
        BicoloredStep::Hb,
        BicoloredStep::D,
    ];

    fn symbol(self) -> char {
        match self {
            BicoloredStep::U => 'u',
            BicoloredStep::Ha => 'a',
            BicoloredStep::Hb => 'b',
            BicoloredStep::D => 'd',
        }
    }

    fn dx(self) -> u32 {
        1
    }

    fn dy(self) -> i32 {
        match self {
            BicoloredStep::U => 1,
            BicoloredStep::Ha | BicoloredStep::Hb => 0,
            BicoloredStep::D => -1,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::BicoloredMotzkin
    }
}

/// One colored horizontal step of a path `h^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HColor {
    A,
    B,
}

impl Step for HColor {
    const ALPHABET: &'static [Self] = &[HColor::A, HColor::B];

    fn symbol(self) -> char {
        match self {
            HColor::A => 'a',
            HColor::B => 'b',
        }
    }

    fn dx(self) -> u32 {
        1
    }

    fn dy(self) -> i32 {
        0
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::HString
    }
}

/// Bicolored Motzkin steps whose Ha and d steps additionally remember the
/// color of the Dyck peak they were transported from. Uppercase marks color A.
///
/// `A`/`a` are Ha steps marked A/B, `b` is Hb, `D`/`d` are down steps marked
/// A/B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkedStep {
    U,
    HaA,
    HaB,
    Hb,
    DA,
    DB,
}

impl Step for MarkedStep {
    const ALPHABET: &'static [Self] = &[
        MarkedStep::U,
        MarkedStep::HaA,
        MarkedStep::HaB,
        MarkedStep::Hb,
        MarkedStep::DA,
        MarkedStep::DB,
    ];

    fn symbol(self) -> char {
        match self {
            MarkedStep::U => 'u',
            MarkedStep::HaA => 'A',
            MarkedStep::HaB => 'a',
            MarkedStep::Hb => 'b',
            MarkedStep::DA => 'D',
            MarkedStep::DB => 'd',
        }
    }

    fn dx(self) -> u32 {
        1
    }

    fn dy(self) -> i32 {
        match self {
            MarkedStep::U => 1,
            MarkedStep::DA | MarkedStep::DB => -1,
            _ => 0,
        }
    }

    fn supports(kind: FamilyKind) -> bool {
        kind == FamilyKind::MarkedMotzkin
    }
}

/// A geometrically valid lattice path: running ordinate never negative,
/// final ordinate zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path<S: Step> {
    steps: Vec<S>,
}

pub type GMotzkinPath = Path<GStep>;
pub type SchroderPath = Path<SchroderStep>;
pub type DyckPath = Path<DyckStep>;
pub type ColoredDyckPath = Path<ColoredDyckStep>;
pub type BicoloredMotzkinPath = Path<BicoloredStep>;
pub type HString = Path<HColor>;
pub type MarkedMotzkinPath = Path<MarkedStep>;

impl<S: Step> Path<S> {
    pub fn empty() -> Self {
        Path { steps: Vec::new() }
    }

    pub fn new(steps: Vec<S>) -> Result<Self> {
        validate(&steps)?;
        Ok(Path { steps })
    }

    /// Wraps steps already known to be valid. Checked in debug builds.
    pub(crate) fn from_valid(steps: Vec<S>) -> Self {
        debug_assert!(
            validate(&steps).is_ok(),
            "invalid path {}",
            render_steps(&steps)
        );
        Path { steps }
    }

    /// Parses a path over this alphabet, checking geometry only.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(position, symbol)| {
                S::from_symbol(symbol).ok_or(Error::UnknownSymbol { position, symbol })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn render(&self) -> String {
        render_steps(&self.steps)
    }

    pub fn steps(&self) -> &[S] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<S> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn x_length(&self) -> u32 {
        self.steps.iter().map(|s| s.dx()).sum()
    }

    /// Ordinate of the endpoint of step `index`.
    pub fn step_level(&self, index: usize) -> Result<i32> {
        if index >= self.steps.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        Ok(self.steps[..=index].iter().map(|s| s.dy()).sum())
    }

    /// Ordinates of all `len() + 1` lattice points, in order.
    pub fn point_levels(&self) -> Vec<i32> {
        point_levels(&self.steps)
    }

    /// True iff `pattern` occurs as a contiguous run of step symbols.
    pub fn contains_pattern(&self, pattern: &str) -> bool {
        contains_symbols(&self.steps, pattern)
    }

    /// `u·P'·d` (or `u·P'·v`) with no interior return to level 0.
    pub fn is_primitive(&self) -> bool {
        is_primitive(&self.steps)
    }

    /// Index of the matching down step of the up step at `u_index`: the
    /// leftmost later step ending one level below the up step's endpoint.
    pub fn matching_index(&self, u_index: usize) -> Result<usize> {
        match self.steps.get(u_index) {
            None => Err(Error::IndexOutOfRange {
                index: u_index,
                len: self.steps.len(),
            }),
            Some(s) if !s.is_up() => Err(Error::Precondition(format!(
                "step {u_index} is not an up step"
            ))),
            Some(_) => Ok(matching_index(&self.steps, u_index)
                .expect("valid paths return to the axis, so every up step is matched")),
        }
    }

    pub fn first_return_decompose(&self) -> Result<FirstReturn<S>> {
        let (head, rest) = self.steps.split_first().ok_or(Error::EmptyPath)?;
        if !head.is_up() {
            return Ok(FirstReturn {
                head: *head,
                inner: Path::empty(),
                closer: None,
                tail: Path::from_valid(rest.to_vec()),
            });
        }
        let m = matching_index(&self.steps, 0).expect("valid path");
        Ok(FirstReturn {
            head: *head,
            inner: Path::from_valid(self.steps[1..m].to_vec()),
            closer: Some(self.steps[m]),
            tail: Path::from_valid(self.steps[m + 1..].to_vec()),
        })
    }

    /// Splits off the final arch: the suffix after the last return to level
    /// 0 that precedes the final step. Requires a final down step.
    pub fn last_primitive_suffix(&self) -> Result<PrimitiveSuffix<S>> {
        match self.steps.last() {
            None => Err(Error::EmptyPath),
            Some(s) if !s.is_down() => Err(Error::Precondition(
                "path does not end with a down step".into(),
            )),
            Some(_) => {
                let split = last_arch_start(&self.steps);
                Ok(PrimitiveSuffix {
                    prefix: Path::from_valid(self.steps[..split].to_vec()),
                    arch: Path::from_valid(self.steps[split..].to_vec()),
                })
            }
        }
    }

    /// Concatenation of two valid paths.
    pub fn concat(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Path { steps }
    }
}

impl GMotzkinPath {
    /// Writes the path as `u^i · core · v^i · tail` with `i` maximal, where
    /// the first `i` up steps are matched by `i` consecutive v steps.
    pub fn nested_uv_decompose(&self) -> Result<NestedUv> {
        let (depth, core, tail) = nested_uv_split(&self.steps).ok_or_else(|| {
            Error::Precondition("path must start with u matched by a v step".into())
        })?;
        Ok(NestedUv {
            depth,
            core: Path::from_valid(core.to_vec()),
            tail: Path::from_valid(tail.to_vec()),
        })
    }
}

impl<S: Step> fmt::Display for Path<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: Step> fmt::Debug for Path<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({:?})", self.render())
    }
}

impl<S: Step> FromStr for Path<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstReturn<S: Step> {
    pub head: S,
    pub inner: Path<S>,
    pub closer: Option<S>,
    pub tail: Path<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedUv {
    pub depth: usize,
    pub core: GMotzkinPath,
    pub tail: GMotzkinPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveSuffix<S: Step> {
    pub prefix: Path<S>,
    pub arch: Path<S>,
}

// Slice-level helpers shared with the bijections. They assume the slice is a
// balanced path segment starting at relative level 0.

pub(crate) fn validate<S: Step>(steps: &[S]) -> Result<()> {
    let mut level = 0i32;
    let mut prev = None;
    for (position, &s) in steps.iter().enumerate() {
        if !S::may_follow(prev, s) {
            return Err(Error::ConstraintViolation(format!(
                "step {:?} may not follow {:?} at position {position}",
                s.symbol(),
                prev.map(|p: S| p.symbol())
            )));
        }
        level += s.dy();
        if level < 0 {
            return Err(Error::GeometryViolation {
                position,
                reason: "path dips below level 0",
            });
        }
        prev = Some(s);
    }
    if level != 0 {
        return Err(Error::GeometryViolation {
            position: steps.len(),
            reason: "path does not end at level 0",
        });
    }
    Ok(())
}

pub(crate) fn render_steps<S: Step>(steps: &[S]) -> String {
    steps.iter().map(|s| s.symbol()).collect()
}

pub(crate) fn point_levels<S: Step>(steps: &[S]) -> Vec<i32> {
    let mut levels = Vec::with_capacity(steps.len() + 1);
    let mut level = 0;
    levels.push(level);
    for s in steps {
        level += s.dy();
        levels.push(level);
    }
    levels
}

pub(crate) fn contains_symbols<S: Step>(steps: &[S], pattern: &str) -> bool {
    let pat: Vec<char> = pattern.chars().collect();
    if pat.is_empty() || pat.len() > steps.len() {
        return pat.is_empty();
    }
    steps
        .windows(pat.len())
        .any(|w| w.iter().zip(&pat).all(|(s, &c)| s.symbol() == c))
}

/// Matching down step of the up step at `j`, relative to the slice.
pub(crate) fn matching_index<S: Step>(steps: &[S], j: usize) -> Option<usize> {
    let mut rel = 0i32;
    for (t, s) in steps.iter().enumerate().skip(j) {
        rel += s.dy();
        if t > j && rel == 0 {
            return Some(t);
        }
    }
    None
}

pub(crate) fn is_primitive<S: Step>(steps: &[S]) -> bool {
    match steps.first() {
        Some(s) if s.is_up() => matching_index(steps, 0) == Some(steps.len() - 1),
        _ => false,
    }
}

/// Start index of the final arch of a nonempty balanced slice ending with a
/// down step.
pub(crate) fn last_arch_start<S: Step>(steps: &[S]) -> usize {
    let levels = point_levels(steps);
    (0..steps.len())
        .rev()
        .find(|&p| levels[p] == 0)
        .expect("point 0 is at level 0")
}

/// `(depth, core, tail)` of the maximal nested-uv split, or `None` when the
/// slice does not start with an up step matched by v.
pub(crate) fn nested_uv_split(steps: &[GStep]) -> Option<(usize, &[GStep], &[GStep])> {
    if steps.first() != Some(&GStep::U) {
        return None;
    }
    let m1 = matching_index(steps, 0)?;
    if steps[m1] != GStep::V {
        return None;
    }
    let mut depth = 1;
    while 2 * depth < m1
        && steps[depth] == GStep::U
        && matching_index(steps, depth) == Some(m1 - depth)
        && steps[m1 - depth] == GStep::V
    {
        depth += 1;
    }
    Some((depth, &steps[depth..=m1 - depth], &steps[m1 + 1..]))
}

/// The families the library enumerates and validates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    GMotzkin,
    Dyck,
    ColoredDyck,
    Motzkin,
    Schroder,
    BicoloredMotzkin,
    HString,
    MarkedMotzkin,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::GMotzkin,
        FamilyKind::Dyck,
        FamilyKind::ColoredDyck,
        FamilyKind::Motzkin,
        FamilyKind::Schroder,
        FamilyKind::BicoloredMotzkin,
        FamilyKind::HString,
        FamilyKind::MarkedMotzkin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::GMotzkin => "gmotzkin",
            FamilyKind::Dyck => "dyck",
            FamilyKind::ColoredDyck => "colored_dyck",
            FamilyKind::Motzkin => "motzkin",
            FamilyKind::Schroder => "schroder",
            FamilyKind::BicoloredMotzkin => "bicolored_motzkin",
            FamilyKind::HString => "hstring",
            FamilyKind::MarkedMotzkin => "marked_motzkin",
        }
    }

    /// Serialization alphabet.
    pub fn alphabet(self) -> &'static str {
        match self {
            FamilyKind::GMotzkin => "uhvd",
            FamilyKind::Dyck => "ud",
            FamilyKind::ColoredDyck => "uDd",
            FamilyKind::Motzkin => "uhd",
            FamilyKind::Schroder => "uHd",
            FamilyKind::BicoloredMotzkin => "uabd",
            FamilyKind::HString => "ab",
            FamilyKind::MarkedMotzkin => "uAabDd",
        }
    }

    /// x-displacement per unit of size: Dyck-like families are measured by
    /// semilength.
    pub fn x_per_unit(self) -> u32 {
        match self {
            FamilyKind::Dyck | FamilyKind::ColoredDyck | FamilyKind::Schroder => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Forbidden contiguous step strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    Uvu,
    Uu,
    Uh,
    Hu,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::Uvu => "uvu",
            Pattern::Uu => "uu",
            Pattern::Uh => "uh",
            Pattern::Hu => "hu",
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uvu" => Ok(Pattern::Uvu),
            "uu" => Ok(Pattern::Uu),
            "uh" => Ok(Pattern::Uh),
            "hu" => Ok(Pattern::Hu),
            _ => Err(Error::Parse(format!("unknown pattern {s:?}"))),
        }
    }
}

/// Restriction on level steps at level 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Surface {
    #[default]
    Any,
    /// No horizontal step (h for G-Motzkin, H for Schröder) on the x-axis.
    NoHOnAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Prefix {
    #[default]
    Any,
    /// First step is the family's first level step: h, H or Ha.
    StartsH,
    /// First two steps are u, d.
    StartsUd,
}

/// A family of paths: alphabet plus avoidance, surface and prefix
/// constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub kind: FamilyKind,
    pub avoid: Vec<Pattern>,
    pub surface: Surface,
    pub prefix: Prefix,
}

impl PathFamily {
    pub fn new(kind: FamilyKind) -> Self {
        PathFamily {
            kind,
            avoid: Vec::new(),
            surface: Surface::Any,
            prefix: Prefix::Any,
        }
    }

    pub fn gmotzkin() -> Self {
        Self::new(FamilyKind::GMotzkin)
    }

    /// G-Motzkin paths avoiding every listed pattern.
    pub fn gmotzkin_avoiding(patterns: &[Pattern]) -> Self {
        Self::gmotzkin().avoiding(patterns)
    }

    pub fn avoiding(mut self, patterns: &[Pattern]) -> Self {
        for &p in patterns {
            if !self.avoid.contains(&p) {
                self.avoid.push(p);
            }
        }
        self.avoid.sort();
        self
    }

    pub fn with_surface(mut self, surface: Surface) -> Self {
        self.surface = surface;
        self
    }

    pub fn with_prefix(mut self, prefix: Prefix) -> Self {
        self.prefix = prefix;
        self
    }

    pub fn is_restricted(&self) -> bool {
        !self.avoid.is_empty() || self.surface != Surface::Any || self.prefix != Prefix::Any
    }

    /// Parses `text` as a path of this family.
    pub fn parse<S: Step>(&self, text: &str) -> Result<Path<S>> {
        self.ensure_alphabet::<S>()?;
        let alphabet = self.kind.alphabet();
        if let Some((position, symbol)) = text
            .chars()
            .enumerate()
            .find(|(_, c)| !alphabet.contains(*c))
        {
            return Err(Error::UnknownSymbol { position, symbol });
        }
        let path = Path::parse(text)?;
        self.check_constraints(&path)?;
        Ok(path)
    }

    /// Checks alphabet, avoidance, surface and prefix constraints.
    pub fn check<S: Step>(&self, path: &Path<S>) -> Result<()> {
        self.ensure_alphabet::<S>()?;
        let alphabet = self.kind.alphabet();
        if let Some((position, s)) = path
            .steps()
            .iter()
            .enumerate()
            .find(|(_, s)| !alphabet.contains(s.symbol()))
        {
            return Err(Error::UnknownSymbol {
                position,
                symbol: s.symbol(),
            });
        }
        self.check_constraints(path)
    }

    fn ensure_alphabet<S: Step>(&self) -> Result<()> {
        if S::supports(self.kind) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch(format!(
                "step type {} cannot carry family {}",
                std::any::type_name::<S>(),
                self.kind
            )))
        }
    }

    fn check_constraints<S: Step>(&self, path: &Path<S>) -> Result<()> {
        for p in &self.avoid {
            if path.contains_pattern(p.as_str()) {
                return Err(Error::ConstraintViolation(format!(
                    "path {} contains {}",
                    path,
                    p.as_str()
                )));
            }
        }
        if self.surface == Surface::NoHOnAxis {
            let levels = path.point_levels();
            if path
                .steps()
                .iter()
                .enumerate()
                .any(|(i, s)| s.is_level() && levels[i + 1] == 0)
            {
                return Err(Error::ConstraintViolation(format!(
                    "path {path} has a level step on the x-axis"
                )));
            }
        }
        let steps = path.steps();
        let ok = match self.prefix {
            Prefix::Any => true,
            Prefix::StartsH => steps
                .first()
                .is_some_and(|s| leading_level_symbols(self.kind).contains(s.symbol())),
            Prefix::StartsUd => {
                steps.len() >= 2 && steps[0].symbol() == 'u' && steps[1].symbol() == 'd'
            }
        };
        if !ok {
            return Err(Error::ConstraintViolation(format!(
                "path {path} violates prefix constraint {:?}",
                self.prefix
            )));
        }
        Ok(())
    }
}

/// Symbols of the level steps a `StartsH` prefix accepts. For marked
/// Motzkin paths both marks of Ha qualify.
pub(crate) fn leading_level_symbols(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::Schroder => "H",
        FamilyKind::BicoloredMotzkin | FamilyKind::HString => "a",
        FamilyKind::MarkedMotzkin => "Aa",
        _ => "h",
    }
}
