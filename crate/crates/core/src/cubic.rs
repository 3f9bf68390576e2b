//! Closed-form cubic solver (trigonometric for three real roots, Cardano for
//! one real plus a complex pair) with Newton polishing. Exactness near the
//! discriminant-zero and unit-circle loci is what the saddle charts depend on.

use num_complex::Complex64;

/// Relative tolerance deciding when the discriminant counts as zero.
const DISC_REL_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CubicRoots {
    /// Three real roots, unordered.
    ThreeReal([f64; 3]),
    /// One real root and a conjugate pair re ± i·im with im > 0.
    OneRealPair { real: f64, re: f64, im: f64 },
}

/// Roots of the monic cubic x³ + c2·x² + c1·x + c0.
pub fn solve_monic(c2: f64, c1: f64, c0: f64) -> CubicRoots {
    // depress: x = t − c2/3 gives t³ + p·t + q
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

    let four_p3 = 4.0 * p * p * p;
    let disc = -four_p3 - 27.0 * q * q;
    let disc_scale = four_p3.abs() + 27.0 * q * q;

    let roots = if disc.abs() <= DISC_REL_TOL * disc_scale {
        // multiple root: t1 = 3q/p single, t2 = t3 = −3q/(2p); triple at 0 if p ≈ 0
        if p.abs() <= DISC_REL_TOL * (1.0 + q.abs().cbrt().powi(2)) {
            CubicRoots::ThreeReal([-shift; 3])
        } else {
            let single = 3.0 * q / p - shift;
            let double = -1.5 * q / p - shift;
            CubicRoots::ThreeReal([single, double, double])
        }
    } else if disc > 0.0 {
        // three distinct real roots (p < 0 here)
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt();
        let theta = arg.clamp(-1.0, 1.0).acos() / 3.0;
        const TAU_3: f64 = 2.0 * std::f64::consts::PI / 3.0;
        CubicRoots::ThreeReal([
            m * theta.cos() - shift,
            m * (theta - TAU_3).cos() - shift,
            m * (theta + TAU_3).cos() - shift,
        ])
    } else {
        // one real root; pick the large-magnitude cube-root branch to avoid cancellation
        let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let w = if q <= 0.0 { -q / 2.0 + s } else { -q / 2.0 - s };
        let u = w.cbrt();
        let v = if u != 0.0 { -p / (3.0 * u) } else { 0.0 };
        let real = u + v - shift;
        CubicRoots::OneRealPair {
            real,
            re: -(u + v) / 2.0 - shift,
            im: (3.0f64.sqrt() / 2.0) * (u - v).abs(),
        }
    };
    polish(c2, c1, c0, roots)
}

fn polish(c2: f64, c1: f64, c0: f64, roots: CubicRoots) -> CubicRoots {
    let newton_real = |mut x: f64| {
        for _ in 0..3 {
            let f = ((x + c2) * x + c1) * x + c0;
            let d = (3.0 * x + 2.0 * c2) * x + c1;
            if d.abs() < 1e-100 {
                break;
            }
            let step = f / d;
            if !step.is_finite() || step.abs() > 0.5 * (1.0 + x.abs()) {
                break; // near a double root Newton is untrustworthy
            }
            x -= step;
        }
        x
    };
    match roots {
        CubicRoots::ThreeReal(mut r) => {
            for x in r.iter_mut() {
                *x = newton_real(*x);
            }
            CubicRoots::ThreeReal(r)
        }
        CubicRoots::OneRealPair { real, re, im } => {
            let real = newton_real(real);
            // deflate by the polished real root; the pair solves
            // x² + (c2+real)·x + prod with prod from the constant term
            let b = c2 + real;
            let prod = if real.abs() > 1e-100 { -c0 / real } else { c1 + real * b };
            let half = -b / 2.0;
            let disc = prod - half * half;
            if disc > 0.0 {
                CubicRoots::OneRealPair {
                    real,
                    re: half,
                    im: disc.sqrt(),
                }
            } else {
                CubicRoots::OneRealPair { real, re, im }
            }
        }
    }
}

/// Characteristic polynomial of the origin: χ(λ) = λ³ − A·λ² − C·λ − B.
pub fn characteristic(a: f64, b: f64, c: f64, lambda: Complex64) -> Complex64 {
    ((lambda - a) * lambda - c) * lambda - b
}

/// Discriminant of χ; zero exactly on the multiple-root curves S±.
pub fn char_discriminant(a: f64, b: f64, c: f64) -> f64 {
    -18.0 * a * b * c - 4.0 * a * a * a * b + a * a * c * c + 4.0 * c * c * c - 27.0 * b * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(c2: f64, c1: f64, c0: f64, x: Complex64) -> f64 {
        (((x + c2) * x + c1) * x + c0).norm()
    }

    #[test]
    fn distinct_real_roots() {
        // (x−1)(x−2)(x−3) = x³ − 6x² + 11x − 6
        match solve_monic(-6.0, 11.0, -6.0) {
            CubicRoots::ThreeReal(mut r) => {
                r.sort_by(|a, b| a.partial_cmp(b).unwrap());
                for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
                    assert!((got - want).abs() < 1e-12);
                }
            }
            other => panic!("expected three real roots, got {other:?}"),
        }
    }

    #[test]
    fn complex_pair() {
        // x³ = 0.5: real root 0.5^{1/3}, pair at modulus 0.5^{1/3}, argument ±2π/3
        match solve_monic(0.0, 0.0, -0.5) {
            CubicRoots::OneRealPair { real, re, im } => {
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
    fn double_root() {
        // (x−1)²(x−0.5) = x³ − 2.5x² + 2x − 0.5
        match solve_monic(-2.5, 2.0, -0.5) {
            CubicRoots::ThreeReal(mut r) => {
                r.sort_by(|a, b| a.partial_cmp(b).unwrap());
                assert!((r[0] - 0.5).abs() < 1e-7);
                assert!((r[1] - 1.0).abs() < 1e-7);
                assert!((r[2] - 1.0).abs() < 1e-7);
            }
            other => panic!("expected real roots, got {other:?}"),
        }
    }

    #[test]
    fn triple_root() {
        // (x+2)³ = x³ + 6x² + 12x + 8
        match solve_monic(6.0, 12.0, 8.0) {
            CubicRoots::ThreeReal(r) => {
                for x in r {
                    assert!((x + 2.0).abs() < 1e-5);
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn residuals_below_contract() {
        let cases = [
            (1.1, -0.85, -0.7),
            (1.86, -0.03, -0.72),
            (-0.82, -2.06, -0.5),
            (-3.71, 2.75, -0.05),
            (-2.13, 1.29, -0.5),
            (-1.43, 1.84, -0.5),
            (0.0, 0.0, -0.5),
        ];
        for (c2, c1, c0) in cases {
            let roots: Vec<Complex64> = match solve_monic(c2, c1, c0) {
                CubicRoots::ThreeReal(r) => r.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
                CubicRoots::OneRealPair { real, re, im } => vec![
                    Complex64::new(real, 0.0),
                    Complex64::new(re, im),
                    Complex64::new(re, -im),
                ],
            };
            for x in roots {
                assert!(
                    residual(c2, c1, c0, x) < 1e-10,
                    "residual {} at {x} for ({c2},{c1},{c0})",
                    residual(c2, c1, c0, x)
                );
            }
        }
    }

    #[test]
    fn discriminant_vanishes_at_s_curve_points() {
        // S⁺ at t=1, B=0.5: (A,C) = (2.5, −2); S⁻ at t=−1: (−1.5, 0)
        assert!(char_discriminant(2.5, 0.5, -2.0).abs() < 1e-12);
        assert!(char_discriminant(-1.5, 0.5, 0.0).abs() < 1e-12);
        // generic point is far from zero
        assert!(char_discriminant(-1.1, 0.7, 0.85).abs() > 1e-3);
    }
}
