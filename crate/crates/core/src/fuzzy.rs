//! Discretised fuzzy sets over a real universe of discourse.
//!
//! A [`FuzzySet`] is a list of `(x, μ)` points sorted strictly ascending in
//! `x`. Membership between listed points is linearly interpolated and is zero
//! outside the listed range. α-cuts are unions of disjoint closed intervals,
//! computed either exactly (inverse linear interpolation on each segment) or
//! snapped to an equidistant grid on the x-axis.

use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::RatingHistogram;

/// Slack allowed on ingested membership grades before they count as out of
/// range. Values within the slack are clamped into `[0, 1]`.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-9;

/// `|height - 1|` at or below this counts as normal.
pub const NORMALITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("a fuzzy set needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("x values must be strictly ascending (point {index}: {x} after {prev})")]
    NotAscending { index: usize, prev: f64, x: f64 },
    #[error("non-finite coordinate in point {index}")]
    NonFinite { index: usize },
    #[error("membership grade {value} outside [0, 1]")]
    MembershipOutOfRange { value: f64 },
    #[error("all memberships are zero; the set cannot be normalised")]
    DegenerateSet,
    #[error("invalid interval [{l}, {r}]")]
    InvalidInterval { l: f64, r: f64 },
    #[error("alpha level {0} outside [0, 1]")]
    InvalidLevel(f64),
    #[error("alpha grid has no levels")]
    EmptyGrid,
    #[error("alpha grid levels must be strictly ascending")]
    GridNotAscending,
    #[error("histogram has zero total count")]
    ZeroTotal,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// One `(x, μ)` sample of a membership function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipPoint {
    pub x: f64,
    pub mu: f64,
}

impl MembershipPoint {
    /// Validates `x` and `mu`; grades within [`MEMBERSHIP_TOLERANCE`] of the
    /// unit interval are clamped.
    pub fn new(x: f64, mu: f64) -> Result<Self, FuzzyError> {
        if !x.is_finite() || !mu.is_finite() {
            return Err(FuzzyError::NonFinite { index: 0 });
        }
        let mu = clamp_membership(mu)?;
        Ok(Self { x, mu })
    }
}

fn clamp_membership(mu: f64) -> Result<f64, FuzzyError> {
    if !(-MEMBERSHIP_TOLERANCE..=1.0 + MEMBERSHIP_TOLERANCE).contains(&mu) {
        return Err(FuzzyError::MembershipOutOfRange { value: mu });
    }
    Ok(mu.clamp(0.0, 1.0))
}

/// Closed real interval `[l, r]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub l: f64,
    pub r: f64,
}

impl Interval {
    pub fn new(l: f64, r: f64) -> Result<Self, FuzzyError> {
        if !(l.is_finite() && r.is_finite()) || l > r {
            return Err(FuzzyError::InvalidInterval { l, r });
        }
        Ok(Self { l, r })
    }

    pub fn width(&self) -> f64 {
        self.r - self.l
    }

    pub fn contains(&self, x: f64) -> bool {
        self.l <= x && x <= self.r
    }

    /// True when `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.l, self.r)
    }
}

/// The α-cut of a fuzzy set at one level: sorted, pairwise disjoint segments.
/// An empty segment list is the empty cut.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaCutSet {
    pub level: f64,
    pub segments: Vec<Interval>,
}

impl AlphaCutSet {
    pub fn empty(level: f64) -> Self {
        Self {
            level,
            segments: Vec::new(),
        }
    }

    /// Builds a cut from segments, sorting them and checking disjointness.
    pub fn from_segments(level: f64, mut segments: Vec<Interval>) -> Result<Self, FuzzyError> {
        if !(0.0..=1.0).contains(&level) {
            return Err(FuzzyError::InvalidLevel(level));
        }
        segments.sort_by(|a, b| a.l.total_cmp(&b.l));
        if let Some(w) = segments.windows(2).find(|w| w[1].l <= w[0].r) {
            return Err(FuzzyError::InvalidInterval {
                l: w[1].l,
                r: w[0].r,
            });
        }
        Ok(Self { level, segments })
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.segments.iter().any(|s| s.contains(x))
    }

    /// Smallest interval covering every segment.
    pub fn hull(&self) -> Option<Interval> {
        let first = self.segments.first()?;
        let last = self.segments.last()?;
        Some(Interval {
            l: first.l,
            r: last.r,
        })
    }
}

impl fmt::Display for AlphaCutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return write!(f, "{}/[]", self.level);
        }
        write!(f, "{}/", self.level)?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Strictly ascending α-levels in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaGrid {
    levels: Vec<f64>,
}

/// Rounds away the drift of repeated decimal steps so `0.1 + 2 * 0.1` lands
/// on the nearest double to `0.3`.
fn tidy_level(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl AlphaGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self, FuzzyError> {
        if levels.is_empty() {
            return Err(FuzzyError::EmptyGrid);
        }
        if let Some(&bad) = levels.iter().find(|l| !(0.0..=1.0).contains(*l)) {
            return Err(FuzzyError::InvalidLevel(bad));
        }
        if levels.windows(2).any(|w| w[1] <= w[0]) {
            return Err(FuzzyError::GridNotAscending);
        }
        Ok(Self { levels })
    }

    /// `count` equally spaced levels `i / (count - 1)` covering `[0, 1]`.
    /// A count of 1 yields the single level 1.
    pub fn uniform(count: usize) -> Result<Self, FuzzyError> {
        match count {
            0 => Err(FuzzyError::EmptyGrid),
            1 => Self::new(vec![1.0]),
            n => Self::new(
                (0..n)
                    .map(|i| i as f64 / (n - 1) as f64)
                    .collect(),
            ),
        }
    }

    /// Levels `start, start + step, ...` up to and including `stop`.
    pub fn stepped(start: f64, stop: f64, step: f64) -> Result<Self, FuzzyError> {
        if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
            return Err(FuzzyError::EmptyGrid);
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
        Self::new((0..n).map(|i| tidy_level(start + i as f64 * step)).collect())
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// `n >= 2` equidistant abscissae from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k == n - 1 {
                hi
            } else {
                lo + (hi - lo) * k as f64 / last
            }
        })
        .collect()
}

/// A discretised membership function with piecewise-linear interpolation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzySet {
    points: Vec<MembershipPoint>,
    label: Option<String>,
}

impl FuzzySet {
    pub fn new(points: Vec<MembershipPoint>) -> Result<Self, FuzzyError> {
        if points.len() < 2 {
            return Err(FuzzyError::TooFewPoints(points.len()));
        }
        for (index, p) in points.iter().enumerate() {
            if !p.x.is_finite() || !p.mu.is_finite() {
                return Err(FuzzyError::NonFinite { index });
            }
            clamp_membership(p.mu)?;
        }
        for (index, w) in points.windows(2).enumerate() {
            if w[1].x <= w[0].x {
                return Err(FuzzyError::NotAscending {
                    index: index + 1,
                    prev: w[0].x,
                    x: w[1].x,
                });
            }
        }
        let points = points
            .into_iter()
            .map(|p| MembershipPoint {
                x: p.x,
                mu: p.mu.clamp(0.0, 1.0),
            })
            .collect();
        Ok(Self {
            points,
            label: None,
        })
    }

    /// Convenience constructor from `(x, μ)` pairs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, FuzzyError>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut points = Vec::new();
        for (index, (x, mu)) in pairs.into_iter().enumerate() {
            if !x.is_finite() || !mu.is_finite() {
                return Err(FuzzyError::NonFinite { index });
            }
            points.push(MembershipPoint { x, mu });
        }
        Self::new(points)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn points(&self) -> &[MembershipPoint] {
        &self.points
    }

    /// First and last listed abscissa.
    pub fn x_range(&self) -> (f64, f64) {
        (self.points[0].x, self.points[self.points.len() - 1].x)
    }

    pub fn membership_at(&self, x: f64) -> f64 {
        let pts = &self.points;
        let (lo, hi) = self.x_range();
        if x < lo || x > hi || x.is_nan() {
            return 0.0;
        }
        // index of the first point with p.x > x
        let idx = pts.partition_point(|p| p.x <= x);
        if idx == 0 {
            return 0.0;
        }
        let left = pts[idx - 1];
        if left.x == x || idx == pts.len() {
            return left.mu;
        }
        let right = pts[idx];
        let t = (x - left.x) / (right.x - left.x);
        (left.mu + t * (right.mu - left.mu)).clamp(0.0, 1.0)
    }

    /// Maximum membership (attained at a listed point).
    pub fn height(&self) -> f64 {
        self.points.iter().map(|p| p.mu).fold(0.0, f64::max)
    }

    pub fn is_normal(&self) -> bool {
        (self.height() - 1.0).abs() <= NORMALITY_TOLERANCE
    }

    /// True when every positive-level α-cut is a single interval, i.e. the
    /// listed grades rise weakly to a maximum and then fall weakly.
    pub fn is_convex(&self) -> bool {
        let mut falling = false;
        for w in self.points.windows(2) {
            if w[1].mu < w[0].mu {
                falling = true;
            } else if w[1].mu > w[0].mu && falling {
                return false;
            }
        }
        true
    }

    /// Exact α-cut by inverse linear interpolation on each segment.
    ///
    /// Level 0 yields the closed convex hull of `{x : μ(x) > 0}` (empty when
    /// every grade is zero).
    pub fn alpha_cut(&self, level: f64) -> AlphaCutSet {
        assert!(
            (0.0..=1.0).contains(&level),
            "alpha level {level} outside [0, 1]"
        );
        if level == 0.0 {
            return self.support_hull();
        }
        let mut pieces: Vec<Interval> = Vec::new();
        let mut push = |l: f64, r: f64| match pieces.last_mut() {
            Some(last) if l <= last.r => last.r = last.r.max(r),
            _ => pieces.push(Interval { l, r }),
        };
        let pts = &self.points;
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            match (a.mu >= level, b.mu >= level) {
                (true, true) => push(a.x, b.x),
                (true, false) => {
                    let t = (a.mu - level) / (a.mu - b.mu);
                    push(a.x, a.x + t * (b.x - a.x));
                }
                (false, true) => {
                    let t = (b.mu - level) / (b.mu - a.mu);
                    push(b.x - t * (b.x - a.x), b.x);
                }
                (false, false) => {}
            }
        }
        AlphaCutSet {
            level,
            segments: pieces,
        }
    }

    fn support_hull(&self) -> AlphaCutSet {
        let pts = &self.points;
        let first = pts.iter().position(|p| p.mu > 0.0);
        let last = pts.iter().rposition(|p| p.mu > 0.0);
        let (Some(i), Some(j)) = (first, last) else {
            return AlphaCutSet::empty(0.0);
        };
        let l = if i > 0 { pts[i - 1].x } else { pts[i].x };
        let r = if j + 1 < pts.len() { pts[j + 1].x } else { pts[j].x };
        AlphaCutSet {
            level: 0.0,
            segments: vec![Interval { l, r }],
        }
    }

    /// α-cut restricted to the abscissae in `grid`: each maximal run of grid
    /// points whose membership reaches `level` becomes one segment spanning
    /// the run's first and last point. Level 0 selects points with μ > 0.
    pub fn alpha_cut_on_grid(&self, level: f64, grid: &[f64]) -> AlphaCutSet {
        assert!(
            (0.0..=1.0).contains(&level),
            "alpha level {level} outside [0, 1]"
        );
        let inside = |mu: f64| if level == 0.0 { mu > 0.0 } else { mu >= level };
        let mut segments = Vec::new();
        let mut run: Option<(f64, f64)> = None;
        for &x in grid {
            if inside(self.membership_at(x)) {
                run = Some(match run {
                    Some((l, _)) => (l, x),
                    None => (x, x),
                });
            } else if let Some((l, r)) = run.take() {
                segments.push(Interval { l, r });
            }
        }
        if let Some((l, r)) = run {
            segments.push(Interval { l, r });
        }
        AlphaCutSet { level, segments }
    }

    /// Divides every grade by the height so the result peaks at exactly 1.
    pub fn peak_normalize(&self) -> Result<FuzzySet, FuzzyError> {
        let peak = self.height();
        if peak <= 0.0 {
            return Err(FuzzyError::DegenerateSet);
        }
        Ok(self.map_membership(|mu| if mu == peak { 1.0 } else { mu / peak }))
    }

    /// Divides every grade by their sum, so listed grades sum to 1.
    pub fn proportion_rescale(&self) -> Result<FuzzySet, FuzzyError> {
        let total: f64 = self.points.iter().map(|p| p.mu).sum();
        if total <= 0.0 {
            return Err(FuzzyError::DegenerateSet);
        }
        Ok(self.map_membership(|mu| mu / total))
    }

    /// Translates the set by `t` along the x-axis.
    pub fn shift(&self, t: f64) -> FuzzySet {
        FuzzySet {
            points: self
                .points
                .iter()
                .map(|p| MembershipPoint { x: p.x + t, mu: p.mu })
                .collect(),
            label: self.label.clone(),
        }
    }

    fn map_membership(&self, f: impl Fn(f64) -> f64) -> FuzzySet {
        FuzzySet {
            points: self
                .points
                .iter()
                .map(|p| MembershipPoint {
                    x: p.x,
                    mu: f(p.mu).clamp(0.0, 1.0),
                })
                .collect(),
            label: self.label.clone(),
        }
    }

    /// Reads the tab-separated `x<TAB>mu` text format. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn read_text<R: BufRead>(reader: R) -> Result<FuzzySet, FuzzyError> {
        let mut points = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line_no = i + 1;
            let line = line.map_err(|e| FuzzyError::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split('\t');
            let (Some(xs), Some(ms), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(FuzzyError::Parse {
                    line: line_no,
                    message: format!("expected `x<TAB>mu`, got {trimmed:?}"),
                });
            };
            let parse = |s: &str| {
                s.trim().parse::<f64>().map_err(|e| FuzzyError::Parse {
                    line: line_no,
                    message: format!("{s:?}: {e}"),
                })
            };
            let (x, mu) = (parse(xs)?, parse(ms)?);
            let mu = clamp_membership(mu).map_err(|e| FuzzyError::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            points.push(MembershipPoint { x, mu });
        }
        FuzzySet::new(points)
    }

    pub fn parse_text(text: &str) -> Result<FuzzySet, FuzzyError> {
        Self::read_text(text.as_bytes())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.label {
            out.push_str("# ");
            out.push_str(label);
            out.push('\n');
        }
        for p in &self.points {
            out.push_str(&format!("{}\t{}\n", p.x, p.mu));
        }
        out
    }
}

/// Frequency membership: grade at each rating is `count / total`.
pub fn proportion_scale(hist: &RatingHistogram) -> Result<FuzzySet, FuzzyError> {
    if hist.total == 0 {
        return Err(FuzzyError::ZeroTotal);
    }
    let total = hist.total as f64;
    let set = FuzzySet::from_pairs(
        hist.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| ((i + 1) as f64, c as f64 / total)),
    )?;
    Ok(set.with_label(hist.title.clone()))
}

/// Raw counts divided by the largest count.
pub fn peak_scale(hist: &RatingHistogram) -> Result<FuzzySet, FuzzyError> {
    let peak = hist.counts.iter().copied().max().unwrap_or(0);
    if peak == 0 {
        return Err(FuzzyError::DegenerateSet);
    }
    let set = FuzzySet::from_pairs(
        hist.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| ((i + 1) as f64, c as f64 / peak as f64)),
    )?;
    Ok(set.with_label(hist.title.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn smb() -> FuzzySet {
        FuzzySet::from_pairs([(1.0, 0.385), (2.0, 0.269), (3.0, 0.231), (4.0, 0.115), (5.0, 0.0)])
            .unwrap()
    }

    fn sw() -> FuzzySet {
        FuzzySet::from_pairs([(1.0, 0.015), (2.0, 0.027), (3.0, 0.098), (4.0, 0.302), (5.0, 0.557)])
            .unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn membership_interpolates() {
        let s = smb();
        assert_eq!(s.membership_at(1.0), 0.385);
        assert!(close(s.membership_at(1.5), 0.327, 1e-12));
        assert_eq!(s.membership_at(0.5), 0.0);
        assert_eq!(s.membership_at(5.5), 0.0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FuzzySet::from_pairs([(1.0, 0.5)]).unwrap_err(),
            FuzzyError::TooFewPoints(1)
        );
        assert!(matches!(
            FuzzySet::from_pairs([(1.0, 0.5), (1.0, 0.2)]),
            Err(FuzzyError::NotAscending { .. })
        ));
        assert!(matches!(
            FuzzySet::from_pairs([(1.0, 0.5), (2.0, 1.2)]),
            Err(FuzzyError::MembershipOutOfRange { .. })
        ));
        assert!(Interval::new(2.0, 1.0).is_err());
        // within tolerance: clamped
        let s = FuzzySet::from_pairs([(1.0, 1.0 + 5e-10), (2.0, -5e-10)]).unwrap();
        assert_eq!(s.points()[0].mu, 1.0);
        assert_eq!(s.points()[1].mu, 0.0);
    }

    #[test]
    fn exact_cuts_of_appendix_sets() {
        // inverse interpolation between (3, 0.098) and (4, 0.302)
        let c = sw().alpha_cut(0.2);
        assert_eq!(c.segments.len(), 1);
        assert!(close(c.segments[0].l, 3.5, 1e-12));
        assert_eq!(c.segments[0].r, 5.0);

        let c = smb().alpha_cut(0.1);
        assert_eq!(c.segments[0].l, 1.0);
        assert!(close(c.segments[0].r, 4.0 + 0.015 / 0.115, 1e-12));

        assert!(smb().alpha_cut(0.5).is_empty());
    }

    #[test]
    fn height_relative_grid_cut_matches_listed_value() {
        // SW peak-normalised, cut on a 101-point grid over [1, 5]
        let grid = linspace(1.0, 5.0, 101);
        let c = sw().peak_normalize().unwrap().alpha_cut_on_grid(0.2, &grid);
        assert_eq!(c.segments.len(), 1);
        assert!(close(c.segments[0].l, 3.08, 1e-12));
        assert_eq!(c.segments[0].r, 5.0);
    }

    fn bimodal() -> FuzzySet {
        FuzzySet::from_pairs([(0.4, 0.0), (2.15, 1.0), (3.05, 0.6), (3.95, 1.0), (5.7, 0.0)])
            .unwrap()
    }

    #[test]
    fn non_convex_cut_splits() {
        let c = bimodal().alpha_cut(0.8);
        assert_eq!(c.segments.len(), 2);
        let expect = [(1.8, 2.6), (3.5, 4.3)];
        for (s, (l, r)) in c.segments.iter().zip(expect) {
            assert!(close(s.l, l, 1e-12), "{s}");
            assert!(close(s.r, r, 1e-12), "{s}");
        }
        assert!(!bimodal().is_convex());
    }

    #[test]
    fn level_zero_is_support_hull() {
        let s = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 0.0), (2.0, 1.0), (3.0, 0.0), (4.0, 0.0)])
            .unwrap();
        let c = s.alpha_cut(0.0);
        assert_eq!(c.segments, vec![Interval { l: 1.0, r: 3.0 }]);
        let c = smb().alpha_cut(0.0);
        assert_eq!(c.segments, vec![Interval { l: 1.0, r: 5.0 }]);
    }

    #[test]
    fn plateau_included_at_its_level() {
        let s = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 0.5), (2.0, 0.5), (3.0, 1.0), (4.0, 0.0)])
            .unwrap();
        let c = s.alpha_cut(0.5);
        assert_eq!(c.segments.len(), 1);
        assert_eq!(c.segments[0].l, 1.0);
        assert!(close(c.segments[0].r, 3.5, 1e-12));
    }

    #[test]
    fn isolated_peak_gives_degenerate_segment() {
        let s = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]).unwrap();
        let c = s.alpha_cut(1.0);
        assert_eq!(c.segments, vec![Interval { l: 1.0, r: 1.0 }]);
    }

    #[test]
    fn normalisation() {
        let s = FuzzySet::from_pairs([(0.0, 0.2), (1.0, 0.4)]).unwrap();
        let n = s.peak_normalize().unwrap();
        assert_eq!(n.points()[0].mu, 0.5);
        assert_eq!(n.points()[1].mu, 1.0);
        assert!(n.is_normal());
        assert_eq!(n.peak_normalize().unwrap(), n);

        let z = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert_eq!(z.peak_normalize().unwrap_err(), FuzzyError::DegenerateSet);
        assert!(z.alpha_cut(0.0).is_empty());
    }

    #[test]
    fn predicates() {
        let tri = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]).unwrap();
        assert!(tri.is_normal());
        assert!(tri.is_convex());
        assert!(!smb().is_normal());
        assert_eq!(smb().height(), 0.385);
        // plateau at zero between humps breaks convexity
        let gap = FuzzySet::from_pairs([(0.0, 1.0), (1.0, 0.0), (2.0, 0.0), (3.0, 1.0)]).unwrap();
        assert!(!gap.is_convex());
    }

    #[test]
    fn grids() {
        let g = AlphaGrid::uniform(51).unwrap();
        assert_eq!(g.len(), 51);
        assert_eq!(g.levels()[0], 0.0);
        assert_eq!(g.levels()[50], 1.0);
        let g = AlphaGrid::stepped(0.0, 0.5, 0.1).unwrap();
        assert_eq!(g.levels(), &[0.0, 0.1, 0.2, 0.3, 0.4, 0.5]);
        assert_eq!(AlphaGrid::new(vec![]).unwrap_err(), FuzzyError::EmptyGrid);
        assert_eq!(
            AlphaGrid::new(vec![0.2, 0.1]).unwrap_err(),
            FuzzyError::GridNotAscending
        );
        assert!(AlphaGrid::new(vec![1.5]).is_err());
        let xs = linspace(1.0, 5.0, 101);
        assert_eq!(xs[75], 4.0);
        assert_eq!(xs[100], 5.0);
    }

    #[test]
    fn text_format() {
        let text = "# SMB\n1\t0.385\n2\t0.269\n\n# trailing comment\n3\t0.2\n";
        let s = FuzzySet::parse_text(text).unwrap();
        assert_eq!(s.points().len(), 3);
        assert_eq!(s.points()[2].mu, 0.2);

        let err = FuzzySet::parse_text("1\t0.5\n2 0.5\n").unwrap_err();
        assert!(matches!(err, FuzzyError::Parse { line: 2, .. }));
        let err = FuzzySet::parse_text("1\t0.5\n2\t1.5\n").unwrap_err();
        assert!(matches!(err, FuzzyError::Parse { line: 2, .. }));
        let err = FuzzySet::parse_text("1\t0.5\n0\t0.5\n").unwrap_err();
        assert!(matches!(err, FuzzyError::NotAscending { .. }));

        let back = FuzzySet::parse_text(&smb().with_label("SMB").to_text()).unwrap();
        assert_eq!(back.points(), smb().points());
    }

    #[test]
    fn histogram_scalings() {
        let hist = RatingHistogram {
            item_id: 1,
            title: "t".into(),
            counts: [1, 2, 1, 0, 0],
            total: 4,
        };
        let p = proportion_scale(&hist).unwrap();
        let mus: Vec<f64> = p.points().iter().map(|p| p.mu).collect();
        assert_eq!(mus, vec![0.25, 0.5, 0.25, 0.0, 0.0]);

        let smb_counts = RatingHistogram {
            item_id: 2,
            title: "SMB".into(),
            counts: [10, 7, 6, 3, 0],
            total: 26,
        };
        let p = proportion_scale(&smb_counts).unwrap();
        assert!(close(p.points()[0].mu, 0.385, 5e-4));
        assert_eq!(p.points()[4].mu, 0.0);
        assert!(!p.is_normal());
        let n = peak_scale(&smb_counts).unwrap();
        assert_eq!(n.height(), 1.0);
        assert_eq!(n.points()[0].mu, 1.0);

        let empty = RatingHistogram {
            item_id: 3,
            title: "none".into(),
            counts: [0; 5],
            total: 0,
        };
        assert_eq!(proportion_scale(&empty).unwrap_err(), FuzzyError::ZeroTotal);
        assert_eq!(peak_scale(&empty).unwrap_err(), FuzzyError::DegenerateSet);
    }
}
