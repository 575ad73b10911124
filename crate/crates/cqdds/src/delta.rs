//! Characteristic-constraint dynamics.
//!
//! The scalar `δ(r) = exp(2kr) − 5·exp(−2kr) + 4kr + 4` links an internal
//! coordinate `r` to the localization condition of the double-delta well.
//! `δ` overflows f64 once `|r|` is large, so all dynamics operate on an
//! internal coordinate `r ∈ [R_FLOOR, R_CEIL]` mapped affinely onto each
//! dimension's search box; positions are mapped back for evaluation. The
//! internal domain also keeps `δ > 0`, which the band conditions
//! `(0.5·δ, 2·δ)` rely on for their ordering semantics.

use crate::error::{Error, Result};
use rand::Rng;
use rand_distr::{Distribution, Normal};

/// Lower clamp of the internal coordinate.
pub const R_FLOOR: f64 = 1e-6;
/// Upper clamp of the internal coordinate.
pub const R_CEIL: f64 = 1.0;
/// Default well-shape constant.
pub const DEFAULT_K: f64 = 5.0;
/// Learning-rate schedule start.
pub const DEFAULT_ALPHA_HI: f64 = 1.0;
/// Learning-rate schedule floor.
pub const DEFAULT_ALPHA_LO: f64 = 0.3;

/// Per-run parameters of the δ dynamics. `theta` is drawn once per run as
/// `1e-3 × Normal(0, 0.5)` and then fixed.
#[derive(Debug, Clone, Copy)]
pub struct DeltaParams {
    pub k: f64,
    pub theta: f64,
    pub alpha_hi: f64,
    pub alpha_lo: f64,
    pub r_floor: f64,
    pub r_ceil: f64,
}

impl DeltaParams {
    pub fn with_theta(theta: f64) -> Self {
        Self {
            k: DEFAULT_K,
            theta,
            alpha_hi: DEFAULT_ALPHA_HI,
            alpha_lo: DEFAULT_ALPHA_LO,
            r_floor: R_FLOOR,
            r_ceil: R_CEIL,
        }
    }

    /// Draws the per-run scale factor θ.
    pub fn draw(rng: &mut impl Rng) -> Self {
        let normal = Normal::new(0.0, 0.5).expect("valid std dev");
        Self::with_theta(1e-3 * normal.sample(rng))
    }

    /// The δ interval corresponding to the internal domain.
    pub fn delta_range(&self) -> (f64, f64) {
        (
            raw_delta(self.r_floor, self.k),
            raw_delta(self.r_ceil, self.k),
        )
    }

    pub fn learning_rate(&self, t: u64, t_max: u64) -> Result<f64> {
        learning_rate_between(t, t_max, self.alpha_hi, self.alpha_lo)
    }
}

/// Per-dimension δ history of one agent.
#[derive(Debug, Clone)]
pub struct DeltaHistory {
    /// δ at the previous touch, per dimension.
    pub prev: Vec<f64>,
    /// δ two touches back, per dimension.
    pub prev2: Vec<f64>,
}

fn raw_delta(r: f64, k: f64) -> f64 {
    (2.0 * k * r).exp() - 5.0 * (-2.0 * k * r).exp() + 4.0 * k * r + 4.0
}

fn raw_delta_derivative(r: f64, k: f64) -> f64 {
    2.0 * k * (2.0 * k * r).exp() + 10.0 * k * (-2.0 * k * r).exp() + 4.0 * k
}

/// δ(r) on the closed domain `[0, R_CEIL]`. `r = 0` is admitted as a
/// boundary probe (δ(0) = 0); optimizer state keeps `r ≥ R_FLOOR`.
pub fn delta_of_r(r: f64, k: f64) -> Result<f64> {
    if !r.is_finite() {
        return Err(Error::NonFinite {
            context: "delta_of_r input",
        });
    }
    if !(0.0..=R_CEIL).contains(&r) {
        return Err(Error::InvalidParam(format!(
            "internal coordinate {r} outside [0, {R_CEIL}]; clamp before calling"
        )));
    }
    Ok(raw_delta(r, k))
}

/// Solves `δ(r) = delta` for `r` on `[R_FLOOR, R_CEIL]` by safeguarded
/// Newton iteration with bisection fallback. Out-of-range deltas clamp to
/// the nearest endpoint.
pub fn invert_delta(delta: f64, k: f64) -> Result<f64> {
    if !delta.is_finite() {
        return Err(Error::NonFinite {
            context: "invert_delta input",
        });
    }
    let (mut lo, mut hi) = (R_FLOOR, R_CEIL);
    if delta <= raw_delta(lo, k) {
        return Ok(lo);
    }
    if delta >= raw_delta(hi, k) {
        return Ok(hi);
    }
    let tol = 1e-10 * delta.abs().max(1.0);
    let mut r = 0.5 * (lo + hi);
    for _ in 0..200 {
        let f = raw_delta(r, k) - delta;
        if f.abs() <= tol {
            return Ok(r);
        }
        // keep the bracket tight; δ is strictly increasing
        if f > 0.0 {
            hi = r;
        } else {
            lo = r;
        }
        let step = f / raw_delta_derivative(r, k);
        let newton = r - step;
        r = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        // bracket width at the machine floor
        if (hi - lo).abs() < f64::EPSILON {
            break;
        }
    }
    Ok(r)
}

/// Linear schedule from `hi` at `t = 1` down to `lo` at `t = t_max`.
pub fn learning_rate_between(t: u64, t_max: u64, hi: f64, lo: f64) -> Result<f64> {
    if t_max < 2 {
        return Err(Error::InvalidParam(format!(
            "learning-rate schedule needs t_max >= 2, got {t_max}"
        )));
    }
    if t < 1 || t > t_max {
        return Err(Error::InvalidParam(format!(
            "iteration {t} outside schedule range [1, {t_max}]"
        )));
    }
    Ok(hi - (hi - lo) * (t - 1) as f64 / (t_max - 1) as f64)
}

/// Linear schedule with the default 1.0 → 0.3 endpoints.
pub fn learning_rate(t: u64, t_max: u64) -> Result<f64> {
    learning_rate_between(t, t_max, DEFAULT_ALPHA_HI, DEFAULT_ALPHA_LO)
}

/// One gradient-band correction step for a single dimension.
///
/// The temporal gradient is `g = δ_{t−1} − δ_{t−2}`. Outside the band
/// `[0.5·δ_{t−2}, 2·δ_{t−2}]` the previous δ is nudged by `θ·g·α` with the
/// sign dictated by the band side and the gradient sign; inside the band
/// the value passes through unchanged. The result is clamped into the δ
/// range of the internal domain.
pub fn corrected_delta(prev: f64, prev2: f64, params: &DeltaParams, alpha: f64) -> f64 {
    debug_assert!(prev.is_finite() && prev2.is_finite());
    let g = prev - prev2;
    let step = params.theta * g * alpha;
    let next = if prev > 2.0 * prev2 {
        if g > 0.0 {
            prev - step
        } else {
            prev + step
        }
    } else if prev < 0.5 * prev2 {
        if g < 0.0 {
            prev - step
        } else {
            prev + step
        }
    } else {
        prev
    };
    let (dlo, dhi) = params.delta_range();
    next.clamp(dlo, dhi)
}

/// Maps a search-space coordinate into the internal domain.
pub fn to_internal(x: f64, lo: f64, hi: f64) -> f64 {
    debug_assert!(lo < hi);
    R_FLOOR + (x - lo) / (hi - lo) * (R_CEIL - R_FLOOR)
}

/// Maps an internal coordinate back into the search box.
pub fn from_internal(r: f64, lo: f64, hi: f64) -> f64 {
    debug_assert!(lo < hi);
    lo + (r - R_FLOOR) / (R_CEIL - R_FLOOR) * (hi - lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn delta_at_boundary_probe_is_zero() {
        assert_eq!(delta_of_r(0.0, 5.0).unwrap(), 0.0);
        assert_eq!(delta_of_r(0.0, 17.0).unwrap(), 0.0);
    }

    #[test]
    fn delta_matches_direct_evaluation() {
        // e^1 − 5e^{−1} + 2 + 4
        let d = delta_of_r(0.1, 5.0).unwrap();
        assert!((d - 6.878885).abs() < 5e-6, "got {d}");
        // e^10 − 5e^{−10} + 24
        let d = delta_of_r(1.0, 5.0).unwrap();
        assert!((d - 22050.4656).abs() < 5e-4, "got {d}");
    }

    #[test]
    fn delta_rejects_out_of_domain() {
        assert!(delta_of_r(-0.5, 5.0).is_err());
        assert!(delta_of_r(1.5, 5.0).is_err());
        assert!(delta_of_r(f64::NAN, 5.0).is_err());
    }

    #[test]
    fn delta_positive_and_increasing_on_domain() {
        let mut rng = crate::rng::stream(7);
        for _ in 0..10_000 {
            let a = rng.random_range(R_FLOOR..R_CEIL);
            let b = rng.random_range(R_FLOOR..R_CEIL);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let dlo = delta_of_r(lo, 5.0).unwrap();
            let dhi = delta_of_r(hi, 5.0).unwrap();
            assert!(dlo > 0.0);
            if hi > lo {
                assert!(dhi >= dlo, "not monotone at {lo} vs {hi}");
            }
        }
    }

    #[test]
    fn inversion_roundtrip_identity() {
        let target = delta_of_r(0.5, 5.0).unwrap();
        let r = invert_delta(target, 5.0).unwrap();
        assert!((r - 0.5).abs() < 1e-9, "got {r}");
    }

    #[test]
    fn inversion_of_worked_example() {
        let r = invert_delta(6.878885, 5.0).unwrap();
        assert!((r - 0.1).abs() < 1e-6, "got {r}");
    }

    #[test]
    fn inversion_clamps_below_range() {
        assert_eq!(invert_delta(-999.0, 5.0).unwrap(), R_FLOOR);
        assert_eq!(invert_delta(1e300, 5.0).unwrap(), R_CEIL);
        assert!(invert_delta(f64::INFINITY, 5.0).is_err());
    }

    #[test]
    fn inversion_roundtrip_sweep() {
        let mut rng = crate::rng::stream(11);
        for _ in 0..1_000 {
            let r = rng.random_range(R_FLOOR..=R_CEIL);
            let back = invert_delta(delta_of_r(r, 5.0).unwrap(), 5.0).unwrap();
            assert!((back - r).abs() < 1e-9, "r={r} back={back}");
        }
    }

    #[test]
    fn schedule_endpoints_and_midpoint() {
        assert_eq!(learning_rate(1, 1000).unwrap(), 1.0);
        assert!((learning_rate(1000, 1000).unwrap() - 0.3).abs() < 1e-15);
        assert!((learning_rate(501, 1001).unwrap() - 0.65).abs() < 1e-12);
        assert!(learning_rate(1, 1).is_err());
    }

    #[test]
    fn schedule_is_non_increasing() {
        let mut last = f64::INFINITY;
        for t in 1..=500 {
            let a = learning_rate(t, 500).unwrap();
            assert!(a <= last && (0.3..=1.0).contains(&a));
            last = a;
        }
    }

    #[test]
    fn correction_identity_in_band() {
        let p = DeltaParams::with_theta(0.01);
        assert_eq!(corrected_delta(7.0, 7.0, &p, 1.0), 7.0);
        // band edges inclusive
        assert_eq!(corrected_delta(8.0, 4.0, &p, 1.0), 8.0);
        assert_eq!(corrected_delta(2.0, 4.0, &p, 1.0), 2.0);
    }

    #[test]
    fn correction_branch_arithmetic() {
        // θ·α = 0.01
        let p = DeltaParams::with_theta(0.01);
        // high band, g = 6 > 0 → 10 − 0.06
        let d = corrected_delta(10.0, 4.0, &p, 1.0);
        assert!((d - 9.94).abs() < 1e-12, "got {d}");
        // low band, g = −3 < 0 → 1 + 0.03
        let d = corrected_delta(1.0, 4.0, &p, 1.0);
        assert!((d - 1.03).abs() < 1e-12, "got {d}");
    }

    #[test]
    fn correction_result_stays_in_delta_range() {
        let p = DeltaParams::with_theta(50.0);
        let (dlo, dhi) = p.delta_range();
        let d = corrected_delta(22050.0, 1.0, &p, 1.0);
        assert!((dlo..=dhi).contains(&d));
        let d = corrected_delta(1e-4, 22050.0, &p, 1.0);
        assert!((dlo..=dhi).contains(&d));
    }

    #[test]
    fn internal_mapping_endpoints_and_midpoint() {
        assert_eq!(to_internal(-100.0, -100.0, 100.0), R_FLOOR);
        assert_eq!(to_internal(100.0, -100.0, 100.0), R_CEIL);
        let mid = to_internal(0.0, -100.0, 100.0);
        assert!((mid - 0.5000005).abs() < 1e-12, "got {mid}");
    }

    #[test]
    fn internal_mapping_roundtrip() {
        let mut rng = crate::rng::stream(3);
        for _ in 0..1_000 {
            let lo = rng.random_range(-600.0..0.0);
            let hi = rng.random_range(1.0..600.0);
            let x = rng.random_range(lo..hi);
            let back = from_internal(to_internal(x, lo, hi), lo, hi);
            let scale = x.abs().max(1.0);
            assert!((back - x).abs() / scale < 1e-12, "x={x} back={back}");
        }
    }
}
