//! Hausdorff-style distances between fuzzy sets.
//!
//! Every α-cut based measure is built from one per-level kernel,
//! [`cut_kernel`], which compares two (possibly multi-segment) cuts. With the
//! signed kernel the result keeps direction: positive when the second operand
//! lies to the right of the first, and `d(A, B) = -d(B, A)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{linspace, AlphaCutSet, AlphaGrid, FuzzyError, FuzzySet, Interval};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("{label} is not normal (height {height}); peak-normalise it or use a non-normal measure")]
    NotNormal { label: String, height: f64 },
    #[error("cannot compare an empty alpha-cut")]
    EmptyCut,
    #[error("no alpha level has both cuts non-empty")]
    NoOverlapLevels,
    #[error("{0} has all-zero membership")]
    Degenerate(String),
    #[error("x-grid abscissae sum to zero; shift the universe of discourse away from the origin")]
    ZeroAbscissaSum,
    #[error("alpha grid has no positive level")]
    NoPositiveLevels,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// How α-cut endpoints are located.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutResolution {
    /// Inverse linear interpolation on every segment.
    Exact,
    /// Endpoints snapped to `n` equidistant abscissae spanning the operands'
    /// common x-range.
    Grid(usize),
}

impl fmt::Display for CutResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutResolution::Exact => f.write_str("exact"),
            CutResolution::Grid(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for CutResolution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("exact") {
            return Ok(CutResolution::Exact);
        }
        match s.parse::<usize>() {
            Ok(n) if n >= 2 => Ok(CutResolution::Grid(n)),
            _ => Err(format!("expected `exact` or an integer >= 2, got {s:?}")),
        }
    }
}

/// x-axis resolution used for the film experiments; places cut endpoints on
/// a 0.04 step over the rating scale 1..5.
pub const FILM_CUT_POINTS: usize = 101;

/// Parameters shared by every measure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureParams {
    pub grid: AlphaGrid,
    /// Weight of the membership-difference term of the non-normal CR measure.
    pub epsilon: f64,
    /// Number of equidistant x-samples for the vertical-slice measure and
    /// the ε-term.
    pub x_grid_count: usize,
    pub signed: bool,
    pub cut_resolution: CutResolution,
}

impl MeasureParams {
    /// 51 levels, ε = 1, 51 x-points, signed kernel, exact cuts.
    pub fn new(grid: AlphaGrid) -> Self {
        Self {
            grid,
            epsilon: 1.0,
            x_grid_count: 51,
            signed: true,
            cut_resolution: CutResolution::Exact,
        }
    }

    /// The protocol of the film experiments: 51 α-levels, 51 x-points for
    /// the ε-term, ε = 1, cut endpoints on a 101-point x-grid.
    pub fn film_protocol() -> Self {
        Self {
            cut_resolution: CutResolution::Grid(FILM_CUT_POINTS),
            ..Self::default()
        }
    }

    pub fn signed(mut self, signed: bool) -> Self {
        self.signed = signed;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_x_grid_count(mut self, n: usize) -> Self {
        self.x_grid_count = n;
        self
    }

    pub fn with_cut_resolution(mut self, r: CutResolution) -> Self {
        self.cut_resolution = r;
        self
    }

    pub fn validate(&self) -> Result<(), MetricError> {
        if self.grid.is_empty() {
            return Err(MetricError::InvalidParams("empty alpha grid".into()));
        }
        if self.x_grid_count < 2 {
            return Err(MetricError::InvalidParams(
                "x_grid_count must be at least 2".into(),
            ));
        }
        if !(self.epsilon.is_finite() && self.epsilon >= 0.0) {
            return Err(MetricError::InvalidParams(format!(
                "epsilon must be finite and >= 0, got {}",
                self.epsilon
            )));
        }
        if let CutResolution::Grid(n) = self.cut_resolution {
            if n < 2 {
                return Err(MetricError::InvalidParams(
                    "cut grid needs at least 2 points".into(),
                ));
            }
        }
        Ok(())
    }
}

impl Default for MeasureParams {
    fn default() -> Self {
        Self::new(AlphaGrid::uniform(51).expect("51 levels"))
    }
}

pub fn interval_hausdorff(a: &Interval, b: &Interval) -> f64 {
    (a.l - b.l).abs().max((a.r - b.r).abs())
}

/// Endpoint difference of larger magnitude, keeping its sign. Ties take the
/// right-endpoint difference.
pub fn signed_interval_hausdorff(a: &Interval, b: &Interval) -> f64 {
    let dl = b.l - a.l;
    let dr = b.r - a.r;
    if dl.abs() > dr.abs() {
        dl
    } else {
        dr
    }
}

fn interval_kernel(a: &Interval, b: &Interval, signed: bool) -> f64 {
    if signed {
        signed_interval_hausdorff(a, b)
    } else {
        interval_hausdorff(a, b)
    }
}

/// Mean interval kernel over every (segment of `a`, segment of `b`) pair.
/// Reduces to the interval kernel when both cuts are single intervals.
pub fn cut_kernel(a: &AlphaCutSet, b: &AlphaCutSet, signed: bool) -> Result<f64, MetricError> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricError::EmptyCut);
    }
    let mut sum = 0.0;
    for sa in &a.segments {
        for sb in &b.segments {
            sum += interval_kernel(sa, sb, signed);
        }
    }
    Ok(sum / (a.segments.len() * b.segments.len()) as f64)
}

/// Union of the operands' listed x-ranges.
pub fn common_range(a: &FuzzySet, b: &FuzzySet) -> (f64, f64) {
    let (al, ar) = a.x_range();
    let (bl, br) = b.x_range();
    (al.min(bl), ar.max(br))
}

/// Cuts both operands at `level` using the configured resolution.
struct CutMaker {
    grid: Option<Vec<f64>>,
}

impl CutMaker {
    fn new(a: &FuzzySet, b: &FuzzySet, resolution: CutResolution) -> Self {
        let grid = match resolution {
            CutResolution::Exact => None,
            CutResolution::Grid(n) => {
                let (lo, hi) = common_range(a, b);
                Some(linspace(lo, hi, n))
            }
        };
        Self { grid }
    }

    /// Falls back to the exact cut when a narrow peak falls between grid
    /// points and no grid point reaches `level`.
    fn cut(&self, set: &FuzzySet, level: f64) -> AlphaCutSet {
        match &self.grid {
            None => set.alpha_cut(level),
            Some(g) => {
                let snapped = set.alpha_cut_on_grid(level, g);
                if snapped.is_empty() {
                    set.alpha_cut(level)
                } else {
                    snapped
                }
            }
        }
    }
}

fn label_of(set: &FuzzySet, fallback: &str) -> String {
    set.label().unwrap_or(fallback).to_string()
}

fn require_normal(a: &FuzzySet, b: &FuzzySet) -> Result<(), MetricError> {
    for (set, name) in [(a, "first operand"), (b, "second operand")] {
        if !set.is_normal() {
            return Err(MetricError::NotNormal {
                label: label_of(set, name),
                height: set.height(),
            });
        }
    }
    Ok(())
}

/// Per-level kernels for two normal sets over the given levels.
fn level_kernels(
    a: &FuzzySet,
    b: &FuzzySet,
    params: &MeasureParams,
    levels: impl Iterator<Item = f64>,
) -> Result<Vec<(f64, f64)>, MetricError> {
    let maker = CutMaker::new(a, b, params.cut_resolution);
    levels
        .map(|level| {
            let k = cut_kernel(&maker.cut(a, level), &maker.cut(b, level), params.signed)?;
            Ok((level, k))
        })
        .collect()
}

/// Mean absolute membership difference over `x_grid_count` equidistant
/// points on the common x-range.
pub fn vertical_slice_distance(a: &FuzzySet, b: &FuzzySet, params: &MeasureParams) -> f64 {
    let (lo, hi) = common_range(a, b);
    let xs = linspace(lo, hi, params.x_grid_count.max(2));
    let sum: f64 = xs
        .iter()
        .map(|&x| (a.membership_at(x) - b.membership_at(x)).abs())
        .sum();
    sum / xs.len() as f64
}

/// Mean of the unsigned kernel over every grid level (level 0 uses the
/// support hull). Always unsigned.
pub fn alpha_cut_mean_distance(
    a: &FuzzySet,
    b: &FuzzySet,
    params: &MeasureParams,
) -> Result<f64, MetricError> {
    params.validate()?;
    require_normal(a, b)?;
    let unsigned = params.clone().signed(false);
    let ks = level_kernels(a, b, &unsigned, params.grid.levels().iter().copied())?;
    Ok(ks.iter().map(|(_, k)| k).sum::<f64>() / ks.len() as f64)
}

/// Discretised ∫₀¹ h(A_α, B_α) dα: the mean kernel over the positive grid
/// levels.
pub fn d_rr(a: &FuzzySet, b: &FuzzySet, params: &MeasureParams) -> Result<f64, MetricError> {
    params.validate()?;
    require_normal(a, b)?;
    let ks = level_kernels(a, b, params, positive_levels(&params.grid))?;
    if ks.is_empty() {
        return Err(MetricError::NoPositiveLevels);
    }
    Ok(ks.iter().map(|(_, k)| k).sum::<f64>() / ks.len() as f64)
}

/// Level-weighted mean kernel, `Σ α·h / Σ α`.
pub fn d_cr(a: &FuzzySet, b: &FuzzySet, params: &MeasureParams) -> Result<f64, MetricError> {
    params.validate()?;
    require_normal(a, b)?;
    let ks = level_kernels(a, b, params, positive_levels(&params.grid))?;
    weighted_mean(&ks)
}

fn positive_levels(grid: &AlphaGrid) -> impl Iterator<Item = f64> + '_ {
    grid.levels().iter().copied().filter(|&l| l > 0.0)
}

fn weighted_mean(ks: &[(f64, f64)]) -> Result<f64, MetricError> {
    let weight: f64 = ks.iter().map(|(l, _)| l).sum();
    if weight <= 0.0 {
        return Err(MetricError::NoPositiveLevels);
    }
    Ok(ks.iter().map(|(l, k)| l * k).sum::<f64>() / weight)
}

fn nondegenerate(set: &FuzzySet, name: &str) -> Result<FuzzySet, MetricError> {
    set.peak_normalize()
        .map_err(|_| MetricError::Degenerate(label_of(set, name)))
}

/// The ε-term: `ε · Σ_x (μ_b − μ_a) / Σ_x x` (absolute differences when
/// unsigned) over `x_grid_count` points on the common range.
pub fn membership_offset_term(
    a: &FuzzySet,
    b: &FuzzySet,
    params: &MeasureParams,
) -> Result<f64, MetricError> {
    let (lo, hi) = common_range(a, b);
    let xs = linspace(lo, hi, params.x_grid_count);
    let denom: f64 = xs.iter().sum();
    let scale: f64 = xs.iter().map(|x| x.abs()).sum();
    if denom.abs() <= 1e-12 * scale {
        return Err(MetricError::ZeroAbscissaSum);
    }
    let num: f64 = xs
        .iter()
        .map(|&x| {
            let d = b.membership_at(x) - a.membership_at(x);
            if params.signed {
                d
            } else {
                d.abs()
            }
        })
        .sum();
    Ok(params.epsilon * num / denom)
}

/// CR measure for non-normal sets: the level-weighted kernel on
/// peak-normalised copies plus the ε-term on the original sets.
pub fn d_cr_nonnormal(
    a: &FuzzySet,
    b: &FuzzySet,
    params: &MeasureParams,
) -> Result<f64, MetricError> {
    params.validate()?;
    let na = nondegenerate(a, "first operand")?;
    let nb = nondegenerate(b, "second operand")?;
    let ks = level_kernels(&na, &nb, params, positive_levels(&params.grid))?;
    Ok(weighted_mean(&ks)? + membership_offset_term(a, b, params)?)
}

/// Kernel value at one level after empty-cut substitution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelKernel {
    pub level: f64,
    pub value: f64,
    /// True if one cut was empty and the value was borrowed from the
    /// largest-magnitude level.
    pub substituted: bool,
}

/// Resolves per-level kernels when cuts may be empty.
///
/// Levels where both cuts exist use [`cut_kernel`]. A level where exactly one
/// cut is empty takes the kernel at the level whose kernel has the largest
/// magnitude among the fully present levels (sign kept; the lowest such level
/// wins ties). Levels where both cuts are empty are dropped.
pub fn empty_cut_policy(
    levels: &[(f64, AlphaCutSet, AlphaCutSet)],
    signed: bool,
) -> Result<Vec<LevelKernel>, MetricError> {
    let mut direct: Vec<Option<f64>> = Vec::with_capacity(levels.len());
    let mut extreme: Option<f64> = None;
    for (_, a, b) in levels {
        if a.is_empty() || b.is_empty() {
            direct.push(None);
            continue;
        }
        let k = cut_kernel(a, b, signed)?;
        if extreme.is_none_or(|e| k.abs() > e.abs()) {
            extreme = Some(k);
        }
        direct.push(Some(k));
    }
    let extreme = extreme.ok_or(MetricError::NoOverlapLevels)?;
    Ok(levels
        .iter()
        .zip(direct)
        .filter(|((_, a, b), _)| !(a.is_empty() && b.is_empty()))
        .map(|((level, _, _), k)| LevelKernel {
            level: *level,
            value: k.unwrap_or(extreme),
            substituted: k.is_none(),
        })
        .collect())
}

/// Everything the non-normal CRF measure computes along the way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrfTrace {
    /// Highest grid level at which either operand is present.
    pub lambda: f64,
    pub kernels: Vec<LevelKernel>,
    pub cuts: Vec<(f64, AlphaCutSet, AlphaCutSet)>,
    pub value: f64,
}

/// Non-normal measure with empty-cut substitution, with its per-level trace.
///
/// An operand is present at level α when its height reaches α. The geometry
/// of a present cut is taken from the operand's peak-normalised copy at the
/// same level, so a low set still contributes its shape. Summation runs over
/// the positive grid levels up to λ, the highest level at which either
/// operand is present, weighted by the level.
pub fn d_crf_trace(
    a: &FuzzySet,
    b: &FuzzySet,
    params: &MeasureParams,
) -> Result<CrfTrace, MetricError> {
    params.validate()?;
    let na = nondegenerate(a, "first operand")?;
    let nb = nondegenerate(b, "second operand")?;
    let (ha, hb) = (a.height(), b.height());
    let maker = CutMaker::new(a, b, params.cut_resolution);
    let cuts: Vec<(f64, AlphaCutSet, AlphaCutSet)> = positive_levels(&params.grid)
        .filter(|&level| level <= ha || level <= hb)
        .map(|level| {
            let ca = if level <= ha {
                maker.cut(&na, level)
            } else {
                AlphaCutSet::empty(level)
            };
            let cb = if level <= hb {
                maker.cut(&nb, level)
            } else {
                AlphaCutSet::empty(level)
            };
            (level, ca, cb)
        })
        .collect();
    let lambda = cuts.last().map(|(l, _, _)| *l).ok_or(MetricError::NoOverlapLevels)?;
    let kernels = empty_cut_policy(&cuts, params.signed)?;
    let pairs: Vec<(f64, f64)> = kernels.iter().map(|k| (k.level, k.value)).collect();
    let value = weighted_mean(&pairs)?;
    Ok(CrfTrace {
        lambda,
        kernels,
        cuts,
        value,
    })
}

pub fn d_crf(a: &FuzzySet, b: &FuzzySet, params: &MeasureParams) -> Result<f64, MetricError> {
    d_crf_trace(a, b, params).map(|t| t.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Measure {
    Vertical,
    Alphacut,
    Rr,
    Cr,
    CrNonnormal,
    Crf,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Vertical,
        Measure::Alphacut,
        Measure::Rr,
        Measure::Cr,
        Measure::CrNonnormal,
        Measure::Crf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Vertical => "vertical",
            Measure::Alphacut => "alphacut",
            Measure::Rr => "rr",
            Measure::Cr => "cr",
            Measure::CrNonnormal => "cr-nonnormal",
            Measure::Crf => "crf",
        }
    }

    /// Whether both operands must already be normal.
    pub fn requires_normal(self) -> bool {
        matches!(self, Measure::Alphacut | Measure::Rr | Measure::Cr)
    }

    pub fn evaluate(
        self,
        a: &FuzzySet,
        b: &FuzzySet,
        params: &MeasureParams,
    ) -> Result<f64, MetricError> {
        match self {
            Measure::Vertical => {
                params.validate()?;
                Ok(vertical_slice_distance(a, b, params))
            }
            Measure::Alphacut => alpha_cut_mean_distance(a, b, params),
            Measure::Rr => d_rr(a, b, params),
            Measure::Cr => d_cr(a, b, params),
            Measure::CrNonnormal => d_cr_nonnormal(a, b, params),
            Measure::Crf => d_crf(a, b, params),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown measure {s:?}"))
    }
}

/// One computed distance with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub measure: Measure,
    pub value: f64,
    pub params: MeasureParams,
    pub operands: (String, String),
}

impl DistanceReport {
    pub fn compute(
        measure: Measure,
        a: &FuzzySet,
        b: &FuzzySet,
        params: &MeasureParams,
    ) -> Result<Self, MetricError> {
        let value = measure.evaluate(a, b, params)?;
        Ok(Self {
            measure,
            value,
            params: params.clone(),
            operands: (label_of(a, "A"), label_of(b, "B")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(l: f64, r: f64) -> Interval {
        Interval::new(l, r).unwrap()
    }

    fn cut(level: f64, segs: &[(f64, f64)]) -> AlphaCutSet {
        AlphaCutSet::from_segments(level, segs.iter().map(|&(l, r)| iv(l, r)).collect()).unwrap()
    }

    fn tri(l: f64, p: f64, r: f64) -> FuzzySet {
        FuzzySet::from_pairs([(l, 0.0), (p, 1.0), (r, 0.0)]).unwrap()
    }

    #[test]
    fn interval_kernels() {
        assert_eq!(interval_hausdorff(&iv(1.0, 3.0), &iv(5.0, 11.0)), 8.0);
        assert_eq!(interval_hausdorff(&iv(0.0, 10.0), &iv(2.0, 9.0)), 2.0);
        assert_eq!(interval_hausdorff(&iv(2.0, 4.0), &iv(2.0, 4.0)), 0.0);
        assert_eq!(signed_interval_hausdorff(&iv(1.0, 3.0), &iv(5.0, 11.0)), 8.0);
        assert_eq!(signed_interval_hausdorff(&iv(5.0, 11.0), &iv(1.0, 3.0)), -8.0);
        // tie goes to the right-endpoint difference
        assert_eq!(signed_interval_hausdorff(&iv(0.0, 4.0), &iv(-2.0, 6.0)), 2.0);
    }

    #[test]
    fn cut_kernel_cases() {
        let a = cut(0.8, &[(1.8, 2.6), (3.5, 4.3)]);
        let b = cut(0.8, &[(6.8, 9.2)]);
        assert_eq!(cut_kernel(&a, &b, true).unwrap(), 5.75);

        let single_a = cut(0.5, &[(1.0, 3.0)]);
        let single_b = cut(0.5, &[(5.0, 11.0)]);
        assert_eq!(cut_kernel(&single_a, &single_b, true).unwrap(), 8.0);

        // pairwise kernels +2, -2, 0, 0
        let c = cut(0.5, &[(0.0, 1.0), (2.0, 3.0)]);
        assert_eq!(cut_kernel(&c, &c, true).unwrap(), 0.0);
        assert_eq!(cut_kernel(&c, &c, false).unwrap(), 1.0);

        assert_eq!(
            cut_kernel(&AlphaCutSet::empty(0.5), &b, true).unwrap_err(),
            MetricError::EmptyCut
        );
    }

    #[test]
    fn normal_measures_reject_non_normal() {
        let low = FuzzySet::from_pairs([(0.0, 0.0), (1.0, 0.5), (2.0, 0.0)]).unwrap();
        let t = tri(0.0, 1.0, 2.0);
        let p = MeasureParams::default();
        for m in [Measure::Rr, Measure::Cr, Measure::Alphacut] {
            assert!(matches!(
                m.evaluate(&t, &low, &p),
                Err(MetricError::NotNormal { .. })
            ));
        }
        assert!(Measure::CrNonnormal.evaluate(&t, &low, &p).is_ok());
        assert!(Measure::Crf.evaluate(&t, &low, &p).is_ok());
    }

    #[test]
    fn shifted_triangle() {
        let s = tri(0.0, 1.0, 3.0);
        let p = MeasureParams::default();
        let t = s.shift(2.5);
        assert!((d_rr(&s, &t, &p).unwrap() - 2.5).abs() < 1e-12);
        assert!((d_cr(&s, &t, &p).unwrap() - 2.5).abs() < 1e-12);
        assert!((d_rr(&t, &s, &p).unwrap() + 2.5).abs() < 1e-12);
        assert!((alpha_cut_mean_distance(&s, &t, &p).unwrap() - 2.5).abs() < 1e-12);
        assert!((alpha_cut_mean_distance(&t, &s, &p).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn epsilon_zero_reduces_to_cr() {
        let a = tri(0.0, 1.0, 3.0);
        let b = tri(1.0, 2.0, 4.5);
        let p = MeasureParams::default().with_epsilon(0.0);
        assert_eq!(d_cr_nonnormal(&a, &b, &p).unwrap(), d_cr(&a, &b, &p).unwrap());
    }

    #[test]
    fn zero_abscissa_sum_is_an_error() {
        let a = tri(-1.0, 0.0, 1.0);
        let p = MeasureParams::default();
        assert_eq!(
            d_cr_nonnormal(&a, &a, &p).unwrap_err(),
            MetricError::ZeroAbscissaSum
        );
    }

    #[test]
    fn degenerate_operands() {
        let z = FuzzySet::from_pairs([(1.0, 0.0), (2.0, 0.0)]).unwrap();
        let t = tri(1.0, 1.5, 2.0);
        let p = MeasureParams::default();
        assert!(matches!(d_crf(&z, &t, &p), Err(MetricError::Degenerate(_))));
        assert!(matches!(
            d_cr_nonnormal(&t, &z, &p),
            Err(MetricError::Degenerate(_))
        ));
    }

    #[test]
    fn empty_cut_policy_substitutes_extreme() {
        let levels = vec![
            (0.1, cut(0.1, &[(1.0, 4.6)]), cut(0.1, &[(2.44, 5.0)])),
            (0.2, cut(0.2, &[(1.0, 4.32)]), cut(0.2, &[(3.08, 5.0)])),
            (0.3, cut(0.3, &[(1.0, 4.0)]), cut(0.3, &[(3.36, 5.0)])),
            (0.4, AlphaCutSet::empty(0.4), cut(0.4, &[(3.64, 5.0)])),
            (0.5, AlphaCutSet::empty(0.5), cut(0.5, &[(3.92, 5.0)])),
            (0.6, AlphaCutSet::empty(0.6), AlphaCutSet::empty(0.6)),
        ];
        let ks = empty_cut_policy(&levels, true).unwrap();
        assert_eq!(ks.len(), 5);
        let expect = [1.44, 2.08, 2.36, 2.36, 2.36];
        for (k, e) in ks.iter().zip(expect) {
            assert!((k.value - e).abs() < 1e-12, "{k:?}");
        }
        assert!(!ks[2].substituted && ks[3].substituted);

        // reversed operands: substituted values keep the negative sign
        let flipped: Vec<_> = levels
            .iter()
            .map(|(l, a, b)| (*l, b.clone(), a.clone()))
            .collect();
        let ks = empty_cut_policy(&flipped, true).unwrap();
        assert!((ks[4].value + 2.36).abs() < 1e-12);

        let none = vec![(0.5, AlphaCutSet::empty(0.5), cut(0.5, &[(0.0, 1.0)]))];
        assert_eq!(
            empty_cut_policy(&none, true).unwrap_err(),
            MetricError::NoOverlapLevels
        );
    }

    #[test]
    fn grid_without_positive_levels() {
        let s = tri(0.0, 1.0, 2.0);
        let p = MeasureParams::new(AlphaGrid::new(vec![0.0]).unwrap());
        assert_eq!(d_rr(&s, &s, &p).unwrap_err(), MetricError::NoPositiveLevels);
        assert_eq!(alpha_cut_mean_distance(&s, &s, &p).unwrap(), 0.0);
    }

    #[test]
    fn invalid_params() {
        let s = tri(0.0, 1.0, 2.0);
        let p = MeasureParams::default().with_x_grid_count(1);
        assert!(matches!(
            Measure::Vertical.evaluate(&s, &s, &p),
            Err(MetricError::InvalidParams(_))
        ));
        let p = MeasureParams::default().with_epsilon(-1.0);
        assert!(matches!(
            d_cr_nonnormal(&s, &s, &p),
            Err(MetricError::InvalidParams(_))
        ));
    }

    #[test]
    fn parse_names() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert!("hamming".parse::<Measure>().is_err());
        assert_eq!("exact".parse::<CutResolution>().unwrap(), CutResolution::Exact);
        assert_eq!("101".parse::<CutResolution>().unwrap(), CutResolution::Grid(101));
        assert!("1".parse::<CutResolution>().is_err());
    }
}
