//! Characteristic-cubic analysis of the origin: multiplier sets, fixed-point
//! classification, the Lorenz / figure-8 region inequalities, boundary
//! curves, and saddle-chart rasters over the (A, C) plane.

use crate::cubic::{self, CubicRoots};
use crate::sweep::Rect;
use num_complex::Complex64;
use thiserror::Error;

/// Default unit-circle tolerance: roots within this of |λ| = 1 are reported
/// as sitting on a bifurcation curve rather than classified to a side.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("region lemma assumes B > 0, got B = {b}")]
    AssumptionViolated { b: f64 },
    #[error("saddle value needs exactly one unstable multiplier, found {count}")]
    NotASaddle31 { count: usize },
}

/// Roots of χ(λ) = λ³ − A·λ² − C·λ − B.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MultiplierSet {
    /// Three real multipliers, sorted by modulus descending.
    Real([f64; 3]),
    /// One real multiplier plus a conjugate pair re ± i·im, im > 0.
    Mixed { real: f64, re: f64, im: f64 },
}

impl MultiplierSet {
    /// All three multipliers (conjugates expanded), modulus descending.
    pub fn as_complex(&self) -> [Complex64; 3] {
        let mut v = match *self {
            MultiplierSet::Real(r) => [
                Complex64::new(r[0], 0.0),
                Complex64::new(r[1], 0.0),
                Complex64::new(r[2], 0.0),
            ],
            MultiplierSet::Mixed { real, re, im } => [
                Complex64::new(real, 0.0),
                Complex64::new(re, im),
                Complex64::new(re, -im),
            ],
        };
        v.sort_by(|p, q| {
            q.norm()
                .partial_cmp(&p.norm())
                .unwrap()
                .then(q.im.partial_cmp(&p.im).unwrap())
        });
        v
    }

    pub fn moduli(&self) -> [f64; 3] {
        let c = self.as_complex();
        [c[0].norm(), c[1].norm(), c[2].norm()]
    }

    pub fn unstable_count(&self) -> usize {
        self.moduli().iter().filter(|m| **m > 1.0).count()
    }

    pub fn has_complex_pair(&self) -> bool {
        matches!(self, MultiplierSet::Mixed { .. })
    }

    /// max |χ(λᵢ)| over the roots, for the residual contract.
    pub fn max_residual(&self, a: f64, b: f64, c: f64) -> f64 {
        self.as_complex()
            .iter()
            .map(|&x| cubic::characteristic(a, b, c, x).norm())
            .fold(0.0, f64::max)
    }
}

/// Multipliers of the origin for parameters (A, B, C). At B = 0 the cubic
/// factors exactly as λ·(λ² − Aλ − C) and the zero root is returned exactly.
pub fn solve_characteristic(a: f64, b: f64, c: f64) -> MultiplierSet {
    if b == 0.0 {
        let disc = a * a + 4.0 * c;
        if disc >= 0.0 {
            let half = 0.5 * a;
            let s = disc.sqrt();
            let q = -0.5 * (-a - a.signum() * s);
            // stable quadratic split of λ² − Aλ − C; fall back for a = 0
            let (r1, r2) = if q != 0.0 {
                (q, -c / q)
            } else {
                (half + 0.5 * s, half - 0.5 * s)
            };
            let mut roots = [r1, r2, 0.0];
            roots.sort_by(|p, q| q.abs().partial_cmp(&p.abs()).unwrap());
            MultiplierSet::Real(roots)
        } else {
            MultiplierSet::Mixed {
                real: 0.0,
                re: 0.5 * a,
                im: 0.5 * (-disc).sqrt(),
            }
        }
    } else {
        match cubic::solve_monic(-a, -c, -b) {
            CubicRoots::ThreeReal(mut r) => {
                r.sort_by(|p, q| q.abs().partial_cmp(&p.abs()).unwrap());
                MultiplierSet::Real(r)
            }
            CubicRoots::OneRealPair { real, re, im } => MultiplierSet::Mixed { real, re, im },
        }
    }
}

/// σ = |λ_unstable| · max stable modulus; defined for (2,1)-saddles only.
pub fn saddle_value(m: &MultiplierSet) -> Result<f64, SpectrumError> {
    let count = m.unstable_count();
    if count != 1 {
        return Err(SpectrumError::NotASaddle31 { count });
    }
    let mods = m.moduli();
    Ok(mods[0] * mods[1])
}

/// Lemma-1 inequalities (Lorenz-type saddle): (a) C > A+B+1, (b) C < 1−B−A,
/// (c) AC+B < 0, (d) C > 1+AB+B². The (c) form is the A<0 resonance
/// inequality cleared of its denominator.
pub fn lemma1_inequalities(a: f64, b: f64, c: f64) -> [bool; 4] {
    [
        c > a + b + 1.0,
        c < 1.0 - b - a,
        a * c + b < 0.0,
        c > 1.0 + a * b + b * b,
    ]
}

/// Lemma-2 inequalities (figure-8-type saddle): (a) C > A+B+1, (b) C < 1−B−A,
/// (c) AC+B > 0, (d) C < B²−AB−1.
pub fn lemma2_inequalities(a: f64, b: f64, c: f64) -> [bool; 4] {
    [
        c > a + b + 1.0,
        c < 1.0 - b - a,
        a * c + b > 0.0,
        c < b * b - a * b - 1.0,
    ]
}

/// True iff all four Lemma-1 inequalities hold strictly. Proved for B > 0.
pub fn lorenz_region_test(a: f64, b: f64, c: f64) -> Result<bool, SpectrumError> {
    if b <= 0.0 {
        return Err(SpectrumError::AssumptionViolated { b });
    }
    Ok(lemma1_inequalities(a, b, c).iter().all(|&x| x))
}

/// True iff all four Lemma-2 inequalities hold strictly. Proved for B > 0.
pub fn figure8_region_test(a: f64, b: f64, c: f64) -> Result<bool, SpectrumError> {
    if b <= 0.0 {
        return Err(SpectrumError::AssumptionViolated { b });
    }
    Ok(lemma2_inequalities(a, b, c).iter().all(|&x| x))
}

/// Saddle-chart domain of the origin fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    Stable,
    LA,
    LQA,
    A8,
    QA8,
    D8A,
    D8QA,
    S8A,
    S8QA,
    SpiralPoint,
    ShilnikovPoint,
    Saddle12Real,
    Saddle21Mixed,
    Repeller,
    OnBoundary,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 15] = [
        RegionLabel::Stable,
        RegionLabel::LA,
        RegionLabel::LQA,
        RegionLabel::A8,
        RegionLabel::QA8,
        RegionLabel::D8A,
        RegionLabel::D8QA,
        RegionLabel::S8A,
        RegionLabel::S8QA,
        RegionLabel::SpiralPoint,
        RegionLabel::ShilnikovPoint,
        RegionLabel::Saddle12Real,
        RegionLabel::Saddle21Mixed,
        RegionLabel::Repeller,
        RegionLabel::OnBoundary,
    ];

    pub fn code(&self) -> u8 {
        Self::ALL.iter().position(|l| l == self).unwrap() as u8
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegionLabel::Stable => "stable",
            RegionLabel::LA => "LA",
            RegionLabel::LQA => "LQA",
            RegionLabel::A8 => "8A",
            RegionLabel::QA8 => "8QA",
            RegionLabel::D8A => "D8A",
            RegionLabel::D8QA => "D8QA",
            RegionLabel::S8A => "S8A",
            RegionLabel::S8QA => "S8QA",
            RegionLabel::SpiralPoint => "spiral-point",
            RegionLabel::ShilnikovPoint => "shilnikov-point",
            RegionLabel::Saddle12Real => "saddle(1,2)",
            RegionLabel::Saddle21Mixed => "saddle(2,1)-mixed",
            RegionLabel::Repeller => "repeller",
            RegionLabel::OnBoundary => "on-boundary",
        }
    }
}

/// Which bifurcation locus a near-unit multiplier (or double root) sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BifurcationMarker {
    LPlus,
    LMinus,
    LPhi,
    DoubleRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Real,
    Complex,
}

/// Everything classification derives from the multipliers.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointDescriptor {
    pub multipliers: MultiplierSet,
    /// B = 0: the exact zero root is excluded from stable/unstable counting.
    pub two_dimensional: bool,
    pub unstable_count: usize,
    pub unstable_real: bool,
    /// Kind of the stable pair for (2,1)-saddles, None otherwise.
    pub stable_pair_kind: Option<PairKind>,
    /// Signs of the real multipliers, modulus descending (0 for an exact zero).
    pub real_signs: Vec<i8>,
    /// Sign of the largest-modulus stable multiplier when real, None for a
    /// complex stable pair or when no stable multiplier exists.
    pub leading_stable_sign: Option<i8>,
    /// |λu| · max stable modulus for (2,1)-saddles.
    pub sigma: Option<f64>,
    pub on_bifurcation: Option<BifurcationMarker>,
}

fn sign_of(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Classify the origin of the map with parameters (A, B, C). Multipliers
/// within `tol` of the unit circle yield `OnBoundary` instead of a side.
pub fn classify_point(a: f64, b: f64, c: f64, tol: f64) -> (FixedPointDescriptor, RegionLabel) {
    let m = solve_characteristic(a, b, c);
    let two_d = b == 0.0;

    // roots that take part in stable/unstable counting
    let counted: Vec<Complex64> = m
        .as_complex()
        .into_iter()
        .filter(|r| !(two_d && r.re == 0.0 && r.im == 0.0))
        .collect();

    let real_signs: Vec<i8> = m
        .as_complex()
        .iter()
        .filter(|r| r.im == 0.0)
        .map(|r| sign_of(r.re))
        .collect();

    let on_circle = counted.iter().find(|r| (r.norm() - 1.0).abs() <= tol);
    if let Some(r) = on_circle {
        let marker = if r.im != 0.0 {
            BifurcationMarker::LPhi
        } else if r.re > 0.0 {
            BifurcationMarker::LPlus
        } else {
            BifurcationMarker::LMinus
        };
        let unstable_count = counted.iter().filter(|r| r.norm() > 1.0 + tol).count();
        return (
            FixedPointDescriptor {
                multipliers: m,
                two_dimensional: two_d,
                unstable_count,
                unstable_real: false,
                stable_pair_kind: None,
                real_signs,
                leading_stable_sign: None,
                sigma: None,
                on_bifurcation: Some(marker),
            },
            RegionLabel::OnBoundary,
        );
    }

    let unstable: Vec<&Complex64> = counted.iter().filter(|r| r.norm() > 1.0).collect();
    let stable: Vec<&Complex64> = counted.iter().filter(|r| r.norm() < 1.0).collect();
    let unstable_count = unstable.len();
    let unstable_real = unstable.iter().all(|r| r.im == 0.0) && !unstable.is_empty();

    let marker = if cubic::char_discriminant(a, b, c).abs()
        <= tol * (1.0 + a.abs() + b.abs() + c.abs()).powi(6)
    {
        Some(BifurcationMarker::DoubleRoot)
    } else {
        None
    };

    // leading stable multiplier = largest stable modulus (counted roots are
    // modulus-descending, so it is the first stable entry)
    let leading_stable = stable.first().copied();
    let leading_stable_sign = leading_stable.and_then(|r| (r.im == 0.0).then(|| sign_of(r.re)));

    let (stable_pair_kind, sigma) = if unstable_count == 1 {
        let kind = if stable.iter().any(|r| r.im != 0.0) {
            PairKind::Complex
        } else {
            PairKind::Real
        };
        let sig = unstable[0].norm() * leading_stable.map(|r| r.norm()).unwrap_or(0.0);
        (Some(kind), Some(sig))
    } else {
        (None, None)
    };

    let label = if unstable_count == 0 {
        RegionLabel::Stable
    } else if unstable_count == counted.len() && !two_d {
        RegionLabel::Repeller
    } else if unstable_count == 1 && !unstable_real {
        // cannot happen: a lone unstable root off the axis has its conjugate
        RegionLabel::Saddle21Mixed
    } else if unstable_count == 1 {
        let lu = unstable[0].re;
        if stable_pair_kind == Some(PairKind::Complex) {
            RegionLabel::SpiralPoint
        } else {
            let sig = sigma.unwrap();
            let pseudo = sig > 1.0;
            // stable-pair sign pattern; in 2D mode the excluded zero root
            // leaves a single stable root whose sign decides the family
            let signs: Vec<i8> = stable.iter().map(|r| sign_of(r.re)).collect();
            let mixed = signs.len() == 2 && signs[0] * signs[1] < 0;
            let all_neg = signs.iter().all(|&s| s < 0);
            let all_pos = signs.iter().all(|&s| s >= 0);
            let lead_pos = signs.first().map(|&s| s >= 0).unwrap_or(true);
            if lu < -1.0 && (mixed || two_d) {
                match (lead_pos, pseudo) {
                    (true, true) => RegionLabel::LA,
                    (true, false) => RegionLabel::LQA,
                    (false, true) => RegionLabel::A8,
                    (false, false) => RegionLabel::QA8,
                }
            } else if lu > 1.0 && all_neg {
                if pseudo {
                    RegionLabel::D8A
                } else {
                    RegionLabel::D8QA
                }
            } else if lu > 1.0 && all_pos {
                if pseudo {
                    RegionLabel::S8A
                } else {
                    RegionLabel::S8QA
                }
            } else {
                RegionLabel::Saddle21Mixed
            }
        }
    } else if unstable_count == 2 && !unstable_real {
        RegionLabel::ShilnikovPoint
    } else {
        RegionLabel::Saddle12Real
    };

    (
        FixedPointDescriptor {
            multipliers: m,
            two_dimensional: two_d,
            unstable_count,
            unstable_real,
            stable_pair_kind,
            real_signs,
            leading_stable_sign,
            sigma,
            on_bifurcation: marker,
        },
        label,
    )
}

/// Named boundary curves of the saddle chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    /// multiplier +1: C = 1 − A − B
    LPlus,
    /// multiplier −1: C = A + B + 1
    LMinus,
    /// unit-modulus complex pair: C = B² − 1 − AB on −2 < A−B < 2
    LPhi,
    /// λ₁λ₂ = −1 (Lorenz-side σ = 1): C = 1 + AB + B²
    SigmaUnit,
    /// resonance λ₁ = −λ₂: AC + B = 0, A < 0
    Resonance,
    /// positive double root
    SPlus,
    /// negative double root
    SMinus,
}

impl CurveKind {
    pub fn name(&self) -> &'static str {
        match self {
            CurveKind::LPlus => "L+",
            CurveKind::LMinus => "L-",
            CurveKind::LPhi => "L_phi",
            CurveKind::SigmaUnit => "sigma1",
            CurveKind::Resonance => "resonance",
            CurveKind::SPlus => "S+",
            CurveKind::SMinus => "S-",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCurve {
    pub kind: CurveKind,
    /// (A, C) vertices; may be empty when the curve misses the A-range.
    pub points: Vec<(f64, f64)>,
}

/// Point of S± for double-root location t: A = 2t + B/t², C = −t² − 2B/t.
pub fn s_curve_point(b: f64, t: f64) -> (f64, f64) {
    (2.0 * t + b / (t * t), -t * t - 2.0 * b / t)
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |k| lo + k as f64 * step)
}

/// All seven chart boundary curves at fixed B, sampled over an A-interval.
pub fn boundary_curves(b: f64, a_range: (f64, f64), samples: usize) -> Vec<BoundaryCurve> {
    assert!(samples >= 2, "need at least 2 samples per curve");
    let (lo, hi) = a_range;
    let line = |kind: CurveKind, f: &dyn Fn(f64) -> f64| BoundaryCurve {
        kind,
        points: linspace(lo, hi, samples).map(|a| (a, f(a))).collect(),
    };

    let mut out = vec![
        line(CurveKind::LPlus, &|a| 1.0 - a - b),
        line(CurveKind::LMinus, &|a| a + b + 1.0),
        line(CurveKind::SigmaUnit, &|a| 1.0 + a * b + b * b),
    ];

    // L_phi is the |A−B| < 2 arc of C = B² − 1 − AB
    let (plo, phi) = (lo.max(b - 2.0), hi.min(b + 2.0));
    out.push(BoundaryCurve {
        kind: CurveKind::LPhi,
        points: if plo < phi {
            linspace(plo, phi, samples)
                .map(|a| (a, b * b - 1.0 - a * b))
                .collect()
        } else {
            Vec::new()
        },
    });

    let rhi = hi.min(-1e-6);
    out.push(BoundaryCurve {
        kind: CurveKind::Resonance,
        points: if lo < rhi {
            linspace(lo, rhi, samples).map(|a| (a, -b / a)).collect()
        } else {
            Vec::new()
        },
    });

    // S±: geometric t-grid wide enough for |A(t)| to sweep the range
    let amax = lo.abs().max(hi.abs()).max(1.0);
    let t_hi = amax;
    let t_lo = if b == 0.0 {
        amax * 1e-6
    } else {
        (b.abs() / amax).sqrt() * 0.5
    };
    let ratio = t_hi / t_lo;
    let ts: Vec<f64> = (0..samples)
        .map(|k| t_lo * ratio.powf(k as f64 / (samples - 1) as f64))
        .collect();
    out.push(BoundaryCurve {
        kind: CurveKind::SPlus,
        points: ts.iter().map(|&t| s_curve_point(b, t)).collect(),
    });
    out.push(BoundaryCurve {
        kind: CurveKind::SMinus,
        points: ts.iter().rev().map(|&t| s_curve_point(b, -t)).collect(),
    });
    out
}

/// Region-label raster over an (A, C) rectangle at fixed B. Cell (i, j) is
/// classified at its center; row j = 0 is the bottom (smallest C).
#[derive(Clone, Debug)]
pub struct ChartRaster {
    pub b: f64,
    pub rect: Rect,
    pub width: usize,
    pub height: usize,
    pub labels: Vec<RegionLabel>,
}

impl ChartRaster {
    pub fn label(&self, i: usize, j: usize) -> RegionLabel {
        self.labels[j * self.width + i]
    }

    /// Parameter-plane center of cell (i, j).
    pub fn cell_params(&self, i: usize, j: usize) -> (f64, f64) {
        self.rect.cell_center(i, j, self.width, self.height)
    }
}

pub fn saddle_chart(b: f64, rect: Rect, resolution: (usize, usize), tol: f64) -> ChartRaster {
    let (width, height) = resolution;
    assert!(width >= 1 && height >= 1);
    let mut labels = vec![RegionLabel::Stable; width * height];
    crate::sweep::for_each_row(&mut labels, width, |j, row| {
        for (i, slot) in row.iter_mut().enumerate() {
            let (a, c) = rect.cell_center(i, j, width, height);
            *slot = classify_point(a, b, c, tol).1;
        }
    });
    ChartRaster {
        b,
        rect,
        width,
        height,
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = DEFAULT_CLASSIFY_TOL;

    #[test]
    fn pure_cube_root_multipliers() {
        match solve_characteristic(0.0, 0.5, 0.0) {
            MultiplierSet::Mixed { real, re, im } => {
                let m = 0.5f64.cbrt();
                assert!((real - m).abs() < 1e-12);
                let pair = Complex64::new(re, im);
                assert!((pair.norm() - m).abs() < 1e-12);
                assert!((pair.arg() - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-12);
            }
            other => panic!("expected complex pair, got {other:?}"),
        }
    }

    #[test]
    fn unit_root_when_coefficients_sum_to_one() {
        // A + B + C = 1 puts λ = 1 on the spectrum (the L+ surface)
        let m = solve_characteristic(0.3, 0.5, 0.2);
        let best = m
            .as_complex()
            .iter()
            .map(|r| (r - Complex64::new(1.0, 0.0)).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(best < 1e-10);
    }

    #[test]
    fn lorenz_point_root_pattern() {
        // cross-checked against the Lemma-1 inequality oracle
        assert!(lorenz_region_test(-1.1, 0.7, 0.85).unwrap());
        match solve_characteristic(-1.1, 0.7, 0.85) {
            MultiplierSet::Real(r) => {
                assert!(r[0] < -1.0);
                assert!(r[1] > 0.0 && r[1] < 1.0);
                assert!(r[2] > -1.0 && r[2] < 0.0);
                assert!(r[1] > r[2].abs());
                assert!((r[0] * r[1]).abs() > 1.0);
            }
            other => panic!("expected three real roots, got {other:?}"),
        }
    }

    #[test]
    fn vieta_identities() {
        for (a, b, c) in [
            (-1.1, 0.7, 0.85),
            (2.13, 0.5, -1.29),
            (0.0, 0.5, 0.0),
            (3.71, 0.05, -2.75),
            (-1.767, 0.0, 0.3),
        ] {
            let roots = solve_characteristic(a, b, c).as_complex();
            let sum: Complex64 = roots.iter().sum();
            let prod: Complex64 = roots.iter().product();
            let pair = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
            assert!((sum.re - a).abs() < 1e-9 && sum.im.abs() < 1e-9);
            assert!((pair.re + c).abs() < 1e-9 && pair.im.abs() < 1e-9);
            assert!((prod.re - b).abs() < 1e-9 && prod.im.abs() < 1e-9);
        }
    }

    #[test]
    fn residual_contract() {
        for (a, b, c) in [(-1.86, 0.72, 0.03), (0.82, 0.5, 2.06), (1.43, 0.5, -1.84)] {
            assert!(solve_characteristic(a, b, c).max_residual(a, b, c) < 1e-10);
        }
    }

    #[test]
    fn saddle_values() {
        assert!((saddle_value(&MultiplierSet::Real([-1.5, 0.8, -0.3])).unwrap() - 1.2) < 1e-15);
        assert_eq!(
            saddle_value(&MultiplierSet::Real([2.0, 0.5, 0.25])).unwrap(),
            1.0
        );
        let m = MultiplierSet::Mixed {
            real: 2.0,
            re: 0.0,
            im: 0.4,
        };
        assert!((saddle_value(&m).unwrap() - 0.8).abs() < 1e-15);
        assert_eq!(
            saddle_value(&MultiplierSet::Real([1.5, 1.2, 0.1])).unwrap_err(),
            SpectrumError::NotASaddle31 { count: 2 }
        );
    }

    #[test]
    fn lemma_tests_at_reference_points() {
        assert!(lorenz_region_test(-1.1, 0.7, 0.85).unwrap());
        assert!(!lorenz_region_test(0.0, 0.5, 0.0).unwrap());
        // figure-8 point violates the resonance-side inequality: AC+B = 0.6642 > 0
        assert!(!lorenz_region_test(-1.86, 0.72, 0.03).unwrap());

        assert!(figure8_region_test(-1.86, 0.72, 0.03).unwrap());
        assert!(!figure8_region_test(-1.1, 0.7, 0.85).unwrap());
        assert!(!figure8_region_test(0.0, 0.5, 0.0).unwrap());

        assert_eq!(
            lorenz_region_test(-1.1, 0.0, 0.85).unwrap_err(),
            SpectrumError::AssumptionViolated { b: 0.0 }
        );
        assert!(figure8_region_test(-1.86, -0.5, 0.03).is_err());
    }

    #[test]
    fn classify_reference_points() {
        let cases = [
            ((0.0, 0.5, 0.0), RegionLabel::Stable),
            ((-1.1, 0.7, 0.85), RegionLabel::LA),
            ((-1.86, 0.72, 0.03), RegionLabel::A8),
            ((0.82, 0.5, 2.06), RegionLabel::D8A),
            ((3.71, 0.05, -2.75), RegionLabel::S8A),
            ((2.13, 0.5, -1.29), RegionLabel::SpiralPoint),
            ((1.43, 0.5, -1.84), RegionLabel::ShilnikovPoint),
        ];
        for ((a, b, c), want) in cases {
            let (_, got) = classify_point(a, b, c, TOL);
            assert_eq!(got, want, "at ({a}, {b}, {c})");
        }
    }

    #[test]
    fn descriptor_fields_at_lorenz_point() {
        let (d, label) = classify_point(-1.1, 0.7, 0.85, TOL);
        assert_eq!(label, RegionLabel::LA);
        assert_eq!(d.unstable_count, 1);
        assert!(d.unstable_real);
        assert_eq!(d.stable_pair_kind, Some(PairKind::Real));
        assert_eq!(d.leading_stable_sign, Some(1));
        assert_eq!(d.real_signs, vec![-1, 1, -1]);
        let sig = d.sigma.unwrap();
        assert!(sig > 1.0 && sig < 1.2);
        assert!(d.on_bifurcation.is_none());
    }

    #[test]
    fn on_boundary_at_l_plus() {
        // C = 1 − A − B puts a root at exactly λ = 1
        let (d, label) = classify_point(0.3, 0.5, 0.2, TOL);
        assert_eq!(label, RegionLabel::OnBoundary);
        assert_eq!(d.on_bifurcation, Some(BifurcationMarker::LPlus));
    }

    #[test]
    fn repeller_far_outside() {
        // λ³ = 8: all moduli 2
        let (_, label) = classify_point(0.0, 8.0, 0.0, TOL);
        assert_eq!(label, RegionLabel::Repeller);
    }

    #[test]
    fn two_dimensional_mode_labels() {
        // classic 2D Hénon points through the B = 0 factorization
        let (d, label) = classify_point(-1.767, 0.0, 0.3, TOL);
        assert!(d.two_dimensional);
        assert_eq!(label, RegionLabel::LQA);
        let (_, label) = classify_point(-1.92, 0.0, -0.4, TOL);
        assert_eq!(label, RegionLabel::QA8);
    }

    #[test]
    fn boundary_curve_shapes() {
        let curves = boundary_curves(0.5, (-4.0, 4.0), 33);
        let by = |k: CurveKind| curves.iter().find(|c| c.kind == k).unwrap();

        for &(a, c) in &by(CurveKind::LPlus).points {
            assert!(solve_characteristic(a, 0.5, c).max_residual(a, 0.5, c) < 1e-9);
            assert!((c - (1.0 - a - 0.5)).abs() < 1e-12);
        }
        for &(a, c) in &by(CurveKind::LMinus).points {
            // multiplier −1: χ(−1) = −1 − A + C − B = 0
            assert!((-1.0 - a + c - 0.5).abs() < 1e-12);
        }
        for &(a, _) in &by(CurveKind::LPhi).points {
            assert!(a - 0.5 > -2.0 - 1e-12 && a - 0.5 < 2.0 + 1e-12);
        }
        for &(a, c) in &by(CurveKind::Resonance).points {
            assert!(a < 0.0);
            assert!((a * c + 0.5).abs() < 1e-12);
        }
        // every S± vertex is a double-root point
        for kind in [CurveKind::SPlus, CurveKind::SMinus] {
            for &(a, c) in &by(kind).points {
                assert!(
                    cubic::char_discriminant(a, 0.5, c).abs()
                        < 1e-9 * (1.0 + a.abs() + c.abs()).powi(6),
                    "disc {} at ({a},{c})",
                    cubic::char_discriminant(a, 0.5, c)
                );
            }
        }
    }

    #[test]
    fn s_curve_expansions() {
        // (λ−1)²(λ−0.5) = λ³ − 2.5λ² + 2λ − 0.5 gives (A,C) = (2.5, −2)
        assert_eq!(s_curve_point(0.5, 1.0), (2.5, -2.0));
        // (λ+1)²(λ−0.5) gives (A,C) = (−1.5, 0)
        assert_eq!(s_curve_point(0.5, -1.0), (-1.5, 0.0));
    }

    #[test]
    fn chart_single_cell() {
        let chart = saddle_chart(
            0.5,
            Rect::new(-0.5, 0.5, -0.5, 0.5),
            (1, 1),
            TOL,
        );
        assert_eq!(chart.label(0, 0), RegionLabel::Stable);
        assert_eq!(chart.cell_params(0, 0), (0.0, 0.0));
    }

    #[test]
    fn lqa_to_la_transition_along_scan() {
        // Lemma-1(d) boundary at A = −1.5, B = 0.5 sits at C = 1 + AB + B² = 0.5
        let mut first_la = None;
        let mut c = 0.3;
        while c <= 0.7 {
            let (_, label) = classify_point(-1.5, 0.5, c, TOL);
            if label == RegionLabel::LA {
                first_la = Some(c);
                break;
            }
            assert_eq!(label, RegionLabel::LQA, "unexpected label at C = {c}");
            c += 1e-3;
        }
        let flip = first_la.expect("no LA cell found along the scan");
        assert!((flip - 0.5).abs() <= 1e-3 + 1e-12, "flip at {flip}");
    }

    #[test]
    fn b_zero_chart_has_no_spiral_points() {
        // at B = 0 one multiplier is exactly 0, so a stable complex pair
        // with a real unstable root cannot occur
        let chart = saddle_chart(0.0, Rect::new(-4.0, 4.0, -4.0, 4.0), (64, 64), TOL);
        assert!(chart
            .labels
            .iter()
            .all(|&l| l != RegionLabel::SpiralPoint));
    }

    #[test]
    fn region_codes_are_stable() {
        assert_eq!(RegionLabel::Stable.code(), 0);
        assert_eq!(RegionLabel::LA.code(), 1);
        assert_eq!(RegionLabel::OnBoundary.code(), 14);
    }
}
