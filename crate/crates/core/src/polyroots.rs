//! Real roots of real univariate polynomials by recursive derivative
//! isolation: the critical points of p split the line into monotone
//! intervals, each holding at most one root, which bisection brackets and
//! Newton polishes. Deterministic and allocation-light for the small degrees
//! that arise from fixed-point equations.

/// `coeffs[k]` multiplies x^k. Returns all real roots, ascending, deduplicated.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let mut c = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    let mut roots = roots_trimmed(&c);
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + a.abs()));
    roots
}

fn roots_trimmed(c: &[f64]) -> Vec<f64> {
    match c.len() {
        0 | 1 => Vec::new(),
        2 => vec![-c[0] / c[1]],
        3 => quadratic(c[0], c[1], c[2]),
        _ => isolate(c),
    }
}

fn quadratic(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        return Vec::new();
    }
    if disc == 0.0 {
        return vec![-c1 / (2.0 * c2)];
    }
    // avoid cancellation: compute the larger-magnitude root first
    let q = -0.5 * (c1 + c1.signum() * disc.sqrt());
    let r1 = q / c2;
    let r2 = if q != 0.0 { c0 / q } else { -c1 / c2 - r1 };
    let mut v = vec![r1, r2];
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn eval(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &ck in c.iter().rev() {
        acc = acc * x + ck;
    }
    acc
}

fn eval_deriv(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &ck) in c.iter().enumerate().skip(1).rev() {
        acc = acc * x + k as f64 * ck;
    }
    acc
}

fn isolate(c: &[f64]) -> Vec<f64> {
    let n = c.len() - 1;
    let lead = c[n];
    // Cauchy bound: all roots lie in |x| <= 1 + max|a_i / a_n|
    let bound = 1.0
        + c[..n]
            .iter()
            .map(|a| (a / lead).abs())
            .fold(0.0, f64::max);

    let deriv: Vec<f64> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| k as f64 * ck)
        .collect();
    let mut knots = real_roots(&deriv);
    knots.retain(|t| t.abs() < bound);
    let mut grid = Vec::with_capacity(knots.len() + 2);
    grid.push(-bound);
    grid.extend(knots);
    grid.push(bound);

    let mut out = Vec::new();
    let scale: f64 = c.iter().map(|a| a.abs()).sum::<f64>() * bound.max(1.0).powi(n as i32);
    for w in grid.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(c, lo), eval(c, hi));
        // a critical point sitting on the axis is a multiple root
        if fhi.abs() <= 1e-14 * scale && hi != bound {
            out.push(polish(c, hi));
            continue;
        }
        if flo == 0.0 {
            out.push(lo);
            continue;
        }
        if flo * fhi < 0.0 {
            out.push(polish(c, bisect(c, lo, hi, flo)));
        }
    }
    out
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64, flo: f64) -> f64 {
    let neg_left = flo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = eval(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == neg_left {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn polish(c: &[f64], mut x: f64) -> f64 {
    for _ in 0..4 {
        let f = eval(c, x);
        let d = eval_deriv(c, x);
        if d.abs() < 1e-300 {
            break;
        }
        let step = f / d;
        x -= step;
        if step.abs() <= 1e-16 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(coeffs: &[f64], expected: &[f64]) {
        let got = real_roots(coeffs);
        assert_eq!(got.len(), expected.len(), "{got:?} vs {expected:?}");
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < 1e-10, "{g} vs {e}");
        }
    }

    #[test]
    fn low_degrees() {
        assert_roots(&[], &[]);
        assert_roots(&[3.0], &[]);
        assert_roots(&[-2.0, 1.0], &[2.0]);
        assert_roots(&[2.0, -3.0, 1.0], &[1.0, 2.0]);
        assert_roots(&[1.0, 0.0, 1.0], &[]);
    }

    #[test]
    fn cubic_with_three_roots() {
        // (x+1)x(x−2) = x³ − x² − 2x
        assert_roots(&[0.0, -2.0, -1.0, 1.0], &[-1.0, 0.0, 2.0]);
    }

    #[test]
    fn double_root_detected() {
        // (x−1)²(x+2) = x³ − 3x + 2
        assert_roots(&[2.0, -3.0, 0.0, 1.0], &[-2.0, 1.0]);
    }

    #[test]
    fn quintic() {
        // (x²+1)(x−0.5)(x+3)(x−4)
        // = x⁵ − 1.5x⁴ − 12.5x³ + 4.5x² − 13.5x + 6... expand directly instead:
        let mut c = vec![1.0, 0.0, 1.0]; // x²+1
        for r in [0.5, -3.0, 4.0] {
            let mut nxt = vec![0.0; c.len() + 1];
            for (k, &ck) in c.iter().enumerate() {
                nxt[k + 1] += ck;
                nxt[k] -= r * ck;
            }
            c = nxt;
        }
        assert_roots(&c, &[-3.0, 0.5, 4.0]);
    }

    #[test]
    fn residuals_are_small() {
        let c = [0.55, -1.0, 0.0, 0.2, -0.03];
        for r in real_roots(&c) {
            assert!(eval(&c, r).abs() < 1e-10);
        }
    }
}
