//! Lyapunov spectra by tangent-frame co-evolution with modified Gram-Schmidt
//! re-orthonormalization, escape detection, homoclinic proximity tracking,
//! attractor color codes, and the pseudohyperbolicity spectrum condition
//! Λ₁ > 0, Λ₁+Λ₂ > 0, Λ₁+Λ₂+Λ₃ < 0.

use crate::map::{HenonMap, State};
use crate::spectrum::{solve_characteristic, MultiplierSet};
use crate::vec3::{dot, norm, normalize, scale, sub, V3};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LyapunovConfig {
    pub n_transient: usize,
    pub n_measure: usize,
    pub renorm_period: usize,
    pub escape_radius: f64,
    /// |Λ| at or below this counts as a zero exponent.
    pub zero_threshold: f64,
    /// orbit distance to the origin below this flags homoclinic proximity
    pub epsilon_homoclinic: f64,
    /// offset of the default initial state from the origin
    pub initial_offset: f64,
}

impl Default for LyapunovConfig {
    fn default() -> Self {
        LyapunovConfig {
            n_transient: 10_000,
            n_measure: 1_000_000,
            renorm_period: 1,
            escape_radius: 1e5,
            zero_threshold: 1e-3,
            epsilon_homoclinic: 1e-4,
            initial_offset: 1e-3,
        }
    }
}

impl LyapunovConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n_measure < 1 {
            return Err("n_measure must be >= 1".into());
        }
        if self.renorm_period < 1 {
            return Err("renorm_period must be >= 1".into());
        }
        if !(self.escape_radius > 0.0) {
            return Err("escape_radius must be > 0".into());
        }
        if !(self.epsilon_homoclinic > 0.0) {
            return Err("epsilon_homoclinic must be > 0".into());
        }
        Ok(())
    }
}

/// Result of one orbit-plus-tangent-frame run.
#[derive(Clone, Debug)]
pub struct LyapunovRun {
    /// Per-iterate log rates, sorted descending; empty when the orbit escaped,
    /// two entries in the planar (B = 0) mode, three otherwise.
    pub exponents: Vec<f64>,
    pub escaped: bool,
    /// Minimum distance to the origin over the measurement phase (planar
    /// distance in 2D mode).
    pub min_distance_to_origin: f64,
    /// Strided sample of measurement-phase states, bounded by the requested cap.
    pub sample: Vec<State>,
    pub pseudohyperbolic: bool,
    pub homoclinic: bool,
}

impl LyapunovRun {
    pub fn lambda(&self, k: usize) -> f64 {
        self.exponents[k]
    }

    pub fn sum(&self) -> f64 {
        self.exponents.iter().sum()
    }

    fn escaped_run(min_distance: f64, sample: Vec<State>) -> LyapunovRun {
        LyapunovRun {
            exponents: Vec::new(),
            escaped: true,
            min_distance_to_origin: min_distance,
            sample,
            pseudohyperbolic: false,
            homoclinic: false,
        }
    }
}

/// The spectrum condition Λ₁ > 0 ∧ Λ₁+Λ₂ > 0 ∧ Λ₁+Λ₂+Λ₃ < 0. False for
/// anything other than a full three-exponent spectrum.
pub fn pseudohyperbolic_flag(exponents: &[f64]) -> bool {
    match exponents {
        [l1, l2, l3] => *l1 > 0.0 && l1 + l2 > 0.0 && l1 + l2 + l3 < 0.0,
        _ => false,
    }
}

/// Diagram color codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttractorClass {
    /// 0, white: orbit escapes
    Escape,
    /// 1, green: Λ₁ < 0
    Periodic,
    /// 2, light blue: Λ₁ ≈ 0
    InvariantCurve,
    /// 3, yellow: Λ₁ > 0 > Λ₂
    Chaos,
    /// 4, red: Λ₁ > 0, Λ₂ ≈ 0
    ChaosZero2,
    /// 5, dark blue: Λ₁ > 0, Λ₂ > 0
    Hyperchaos,
    /// 6, dark grey: chaotic and the orbit passes within ε of the origin
    HomoclinicChaos,
}

impl AttractorClass {
    pub fn code(&self) -> u8 {
        match self {
            AttractorClass::Escape => 0,
            AttractorClass::Periodic => 1,
            AttractorClass::InvariantCurve => 2,
            AttractorClass::Chaos => 3,
            AttractorClass::ChaosZero2 => 4,
            AttractorClass::Hyperchaos => 5,
            AttractorClass::HomoclinicChaos => 6,
        }
    }

    pub fn from_code(code: u8) -> Option<AttractorClass> {
        [
            AttractorClass::Escape,
            AttractorClass::Periodic,
            AttractorClass::InvariantCurve,
            AttractorClass::Chaos,
            AttractorClass::ChaosZero2,
            AttractorClass::Hyperchaos,
            AttractorClass::HomoclinicChaos,
        ]
        .into_iter()
        .find(|c| c.code() == code)
    }
}

/// Color-code assignment from a completed run.
pub fn classify_attractor(run: &LyapunovRun, cfg: &LyapunovConfig) -> AttractorClass {
    if run.escaped {
        return AttractorClass::Escape;
    }
    let l1 = run.exponents[0];
    if l1 < -cfg.zero_threshold {
        return AttractorClass::Periodic;
    }
    if l1 <= cfg.zero_threshold {
        return AttractorClass::InvariantCurve;
    }
    if run.min_distance_to_origin < cfg.epsilon_homoclinic {
        return AttractorClass::HomoclinicChaos;
    }
    let l2 = run.exponents.get(1).copied().unwrap_or(f64::NEG_INFINITY);
    if l2 > cfg.zero_threshold {
        AttractorClass::Hyperchaos
    } else if l2 >= -cfg.zero_threshold {
        AttractorClass::ChaosZero2
    } else {
        AttractorClass::Chaos
    }
}

/// Origin plus `initial_offset` along the unstable eigendirection when the
/// origin has a real unstable multiplier; otherwise a diagonal offset.
pub fn default_initial_state(map: &HenonMap, cfg: &LyapunovConfig) -> State {
    let d = cfg.initial_offset;
    match unstable_real_multiplier(map) {
        Some(lambda) => {
            let v = normalize(&[1.0, lambda, lambda * lambda]);
            State::new(d * v[0], d * v[1], d * v[2])
        }
        None => State::new(d, d, d),
    }
}

/// Largest-modulus real multiplier outside the unit circle, if any.
fn unstable_real_multiplier(map: &HenonMap) -> Option<f64> {
    match solve_characteristic(map.a(), map.b(), map.c()) {
        MultiplierSet::Real(r) => r.into_iter().find(|l| l.abs() > 1.0),
        MultiplierSet::Mixed { real, .. } => (real.abs() > 1.0).then_some(real),
    }
}

pub fn lyapunov_spectrum(map: &HenonMap, x0: State, cfg: &LyapunovConfig) -> LyapunovRun {
    lyapunov_spectrum_sampled(map, x0, cfg, 0)
}

/// As `lyapunov_spectrum`, also collecting up to `sample_cap` states
/// (strided evenly over the measurement phase).
pub fn lyapunov_spectrum_sampled(
    map: &HenonMap,
    x0: State,
    cfg: &LyapunovConfig,
    sample_cap: usize,
) -> LyapunovRun {
    if let Err(msg) = cfg.validate() {
        panic!("invalid LyapunovConfig: {msg}");
    }
    if map.is_two_dimensional() {
        run_2d(map, x0, cfg, sample_cap)
    } else {
        run_3d(map, x0, cfg, sample_cap, identity_frame())
    }
}

/// 3D run with a caller-supplied initial orthonormal tangent frame.
pub fn lyapunov_spectrum_with_frame(
    map: &HenonMap,
    x0: State,
    cfg: &LyapunovConfig,
    frame: [V3; 3],
) -> LyapunovRun {
    assert!(
        !map.is_two_dimensional(),
        "custom frames are for the 3D mode"
    );
    run_3d(map, x0, cfg, 0, frame)
}

fn identity_frame() -> [V3; 3] {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

#[inline(always)]
fn out_of_bounds(s: &State, radius: f64) -> bool {
    !(s.max_abs() <= radius) // catches NaN as well
}

fn gram_schmidt3(w: &mut [V3; 3]) -> [f64; 3] {
    let n0 = norm(&w[0]);
    w[0] = scale(&w[0], 1.0 / n0);
    w[1] = sub(&w[1], &scale(&w[0], dot(&w[1], &w[0])));
    let n1 = norm(&w[1]);
    w[1] = scale(&w[1], 1.0 / n1);
    w[2] = sub(&w[2], &scale(&w[0], dot(&w[2], &w[0])));
    w[2] = sub(&w[2], &scale(&w[1], dot(&w[2], &w[1])));
    let n2 = norm(&w[2]);
    w[2] = scale(&w[2], 1.0 / n2);
    [n0, n1, n2]
}

fn finish(
    mut acc: Vec<f64>,
    n: usize,
    min_dist: f64,
    sample: Vec<State>,
    epsilon: f64,
) -> LyapunovRun {
    for a in acc.iter_mut() {
        *a /= n as f64;
    }
    acc.sort_by(|p, q| q.partial_cmp(p).unwrap());
    if acc.iter().any(|l| !l.is_finite()) {
        return LyapunovRun::escaped_run(min_dist, sample);
    }
    let pseudo = pseudohyperbolic_flag(&acc);
    let homoclinic = acc[0] > 0.0 && min_dist < epsilon;
    LyapunovRun {
        pseudohyperbolic: pseudo,
        homoclinic,
        exponents: acc,
        escaped: false,
        min_distance_to_origin: min_dist,
        sample,
    }
}

fn run_3d(
    map: &HenonMap,
    x0: State,
    cfg: &LyapunovConfig,
    sample_cap: usize,
    mut frame: [V3; 3],
) -> LyapunovRun {
    let mut s = x0;
    for _ in 0..cfg.n_transient {
        s = map.step(s);
        if out_of_bounds(&s, cfg.escape_radius) {
            return LyapunovRun::escaped_run(f64::INFINITY, Vec::new());
        }
    }

    let (a, b, c) = (map.a(), map.b(), map.c());
    let f = map.nonlinearity();
    let mut acc = [0.0f64; 3];
    let mut min_d2 = f64::INFINITY;
    let mut sample = Vec::with_capacity(sample_cap.min(cfg.n_measure));
    let stride = if sample_cap > 0 {
        (cfg.n_measure / sample_cap).max(1)
    } else {
        usize::MAX
    };

    for k in 0..cfg.n_measure {
        // tangent update with the derivative at the pre-step state
        let (fy, fz) = f.grad(s.y, s.z);
        let (jy, jz) = (c + fy, a + fz);
        for v in frame.iter_mut() {
            *v = [v[1], v[2], b * v[0] + jy * v[1] + jz * v[2]];
        }
        s = map.step(s);
        if out_of_bounds(&s, cfg.escape_radius) {
            return LyapunovRun::escaped_run(min_d2.sqrt(), sample);
        }
        let d2 = s.x * s.x + s.y * s.y + s.z * s.z;
        if d2 < min_d2 {
            min_d2 = d2;
        }
        if (k + 1) % cfg.renorm_period == 0 {
            let norms = gram_schmidt3(&mut frame);
            for (ai, ni) in acc.iter_mut().zip(norms) {
                *ai += ni.ln();
            }
        }
        if k % stride == 0 && sample.len() < sample_cap {
            sample.push(s);
        }
    }
    if cfg.n_measure % cfg.renorm_period != 0 {
        let norms = gram_schmidt3(&mut frame);
        for (ai, ni) in acc.iter_mut().zip(norms) {
            *ai += ni.ln();
        }
    }
    finish(
        acc.to_vec(),
        cfg.n_measure,
        min_d2.sqrt(),
        sample,
        cfg.epsilon_homoclinic,
    )
}

/// Planar mode for B = 0: the (y, z) subsystem carries the dynamics and the
/// tangent frame is two-dimensional. Two exponents are reported.
fn run_2d(map: &HenonMap, x0: State, cfg: &LyapunovConfig, sample_cap: usize) -> LyapunovRun {
    let mut s = x0;
    for _ in 0..cfg.n_transient {
        s = map.step(s);
        if out_of_bounds(&s, cfg.escape_radius) {
            return LyapunovRun::escaped_run(f64::INFINITY, Vec::new());
        }
    }

    let (a, c) = (map.a(), map.c());
    let f = map.nonlinearity();
    let mut v0 = [1.0f64, 0.0];
    let mut v1 = [0.0f64, 1.0];
    let mut acc = [0.0f64; 2];
    let mut min_d2 = f64::INFINITY;
    let mut sample = Vec::with_capacity(sample_cap.min(cfg.n_measure));
    let stride = if sample_cap > 0 {
        (cfg.n_measure / sample_cap).max(1)
    } else {
        usize::MAX
    };

    for k in 0..cfg.n_measure {
        let (fy, fz) = f.grad(s.y, s.z);
        let (jy, jz) = (c + fy, a + fz);
        v0 = [v0[1], jy * v0[0] + jz * v0[1]];
        v1 = [v1[1], jy * v1[0] + jz * v1[1]];
        s = map.step(s);
        if out_of_bounds(&s, cfg.escape_radius) {
            return LyapunovRun::escaped_run(min_d2.sqrt(), sample);
        }
        let d2 = s.y * s.y + s.z * s.z;
        if d2 < min_d2 {
            min_d2 = d2;
        }
        if (k + 1) % cfg.renorm_period == 0 {
            let n0 = (v0[0] * v0[0] + v0[1] * v0[1]).sqrt();
            v0 = [v0[0] / n0, v0[1] / n0];
            let d = v1[0] * v0[0] + v1[1] * v0[1];
            v1 = [v1[0] - d * v0[0], v1[1] - d * v0[1]];
            let n1 = (v1[0] * v1[0] + v1[1] * v1[1]).sqrt();
            v1 = [v1[0] / n1, v1[1] / n1];
            acc[0] += n0.ln();
            acc[1] += n1.ln();
        }
        if k % stride == 0 && sample.len() < sample_cap {
            sample.push(s);
        }
    }
    finish(
        acc.to_vec(),
        cfg.n_measure,
        min_d2.sqrt(),
        sample,
        cfg.epsilon_homoclinic,
    )
}
