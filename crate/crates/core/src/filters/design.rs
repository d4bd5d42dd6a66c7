//! Filter design. Frequencies are normalized to Nyquist: 1.0 is `fs/2`.
//!
//! Butterworth designs go through an analog prototype, a frequency
//! transformation, and the bilinear transform `s = 2(z-1)/(z+1)` with the
//! band edges pre-warped (`Ω = 2 tan(πf/2)`) so the digital half-power points
//! land exactly on the requested frequencies.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::IirCoefficients;
use crate::{Error, Result};

/// Orders above this are rejected by [`design_classical`].
pub const MAX_CLASSICAL_ORDER: usize = 20;

fn check_normalized(name: &str, f: f64) -> Result<()> {
    if f.is_finite() && f > 0.0 && f < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{name} must lie in (0, 1) as a fraction of Nyquist, got {f}"
        )))
    }
}

fn prewarp(f: f64) -> f64 {
    2.0 * (PI * f / 2.0).tan()
}

/// Poles of the unit-cutoff analog Butterworth low-pass.
fn prototype_poles(order: usize) -> Vec<Complex64> {
    let n = order as f64;
    (0..order)
        .map(|k| Complex64::from_polar(1.0, PI * (2.0 * k as f64 + n + 1.0) / (2.0 * n)))
        .collect()
}

fn bilinear(s: Complex64) -> Complex64 {
    (2.0 + s) / (2.0 - s)
}

/// Expand `Π (1 - r z^-1)` into real coefficients.
fn expand(roots: &[Complex64]) -> Vec<f64> {
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        poly.push(Complex64::new(0.0, 0.0));
        for i in (1..poly.len()).rev() {
            let prev = poly[i - 1];
            poly[i] -= r * prev;
        }
    }
    poly.into_iter().map(|c| c.re).collect()
}

fn eval(poly: &[f64], z_inv: Complex64) -> Complex64 {
    poly.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z_inv + c)
}

/// Build coefficients from digital zeros and poles, scaled to unit gain at
/// digital frequency `omega_ref` (radians per sample).
fn from_zpk(zeros: &[Complex64], poles: &[Complex64], omega_ref: f64) -> Result<IirCoefficients> {
    let mut b = expand(zeros);
    let a = expand(poles);
    let z_inv = Complex64::from_polar(1.0, -omega_ref);
    let gain = (eval(&a, z_inv) / eval(&b, z_inv)).norm();
    b.iter_mut().for_each(|c| *c *= gain);
    IirCoefficients::new(b, a)
}

fn lowpass_from_cutoff(order: usize, cutoff_warped: f64) -> Result<IirCoefficients> {
    let poles: Vec<_> = prototype_poles(order)
        .into_iter()
        .map(|p| bilinear(p * cutoff_warped))
        .collect();
    let zeros = vec![Complex64::new(-1.0, 0.0); order];
    from_zpk(&zeros, &poles, 0.0)
}

fn highpass_from_cutoff(order: usize, cutoff_warped: f64) -> Result<IirCoefficients> {
    let poles: Vec<_> = prototype_poles(order)
        .into_iter()
        .map(|p| bilinear(cutoff_warped / p))
        .collect();
    let zeros = vec![Complex64::new(1.0, 0.0); order];
    from_zpk(&zeros, &poles, PI)
}

/// Low-pass prototype mapped through `s -> (s^2 + Ω0^2) / (s B)`.
fn bandpass_from_edges(order: usize, low_warped: f64, high_warped: f64) -> Result<IirCoefficients> {
    let bw = high_warped - low_warped;
    let center_sq = low_warped * high_warped;
    let mut poles = Vec::with_capacity(2 * order);
    for p in prototype_poles(order) {
        let pb = p * bw;
        let disc = (pb * pb - 4.0 * center_sq).sqrt();
        poles.push(bilinear((pb + disc) / 2.0));
        poles.push(bilinear((pb - disc) / 2.0));
    }
    let mut zeros = vec![Complex64::new(1.0, 0.0); order];
    zeros.extend(vec![Complex64::new(-1.0, 0.0); order]);
    let omega_center = 2.0 * (center_sq.sqrt() / 2.0).atan();
    from_zpk(&zeros, &poles, omega_center)
}

/// Digital Butterworth low-pass of the given order with half-power point at
/// `wn` (fraction of Nyquist).
pub fn design_butterworth_lowpass(order: usize, wn: f64) -> Result<IirCoefficients> {
    if order == 0 {
        return Err(Error::invalid("filter order must be at least 1"));
    }
    check_normalized("cutoff", wn)?;
    lowpass_from_cutoff(order, prewarp(wn))
}

/// Digital Butterworth high-pass with half-power point at `wn`.
pub fn design_butterworth_highpass(order: usize, wn: f64) -> Result<IirCoefficients> {
    if order == 0 {
        return Err(Error::invalid("filter order must be at least 1"));
    }
    check_normalized("cutoff", wn)?;
    highpass_from_cutoff(order, prewarp(wn))
}

/// Digital Butterworth band-pass (order `2*order`) with half-power points at
/// `low` and `high`.
pub fn design_butterworth_bandpass(order: usize, low: f64, high: f64) -> Result<IirCoefficients> {
    if order == 0 {
        return Err(Error::invalid("filter order must be at least 1"));
    }
    check_normalized("low edge", low)?;
    check_normalized("high edge", high)?;
    if low >= high {
        return Err(Error::invalid(
            "band-pass low edge must be below the high edge",
        ));
    }
    bandpass_from_edges(order, prewarp(low), prewarp(high))
}

/// Second-order notch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NotchSpec {
    /// Center, fraction of Nyquist.
    pub w0: f64,
    /// Distance between the half-power points, fraction of Nyquist.
    pub bandwidth: f64,
}

impl NotchSpec {
    pub fn new(w0: f64, bandwidth: f64) -> Result<Self> {
        let spec = Self { w0, bandwidth };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_normalized("notch center", self.w0)?;
        check_normalized("notch bandwidth", self.bandwidth)?;
        let (lo, hi) = (
            self.w0 - self.bandwidth / 2.0,
            self.w0 + self.bandwidth / 2.0,
        );
        if lo <= 0.0 || hi >= 1.0 {
            return Err(Error::invalid(format!(
                "notch band [{lo}, {hi}] leaves (0, 1)"
            )));
        }
        Ok(())
    }
}

/// Notch with zeros on the unit circle at `±π w0` and poles pulled inward so
/// that the half-power points are `bandwidth` apart. Unit gain at DC and at
/// Nyquist.
pub fn design_iir_notch(spec: NotchSpec) -> Result<IirCoefficients> {
    spec.validate()?;
    let cos_w0 = (PI * spec.w0).cos();
    let beta = (PI * spec.bandwidth / 2.0).tan();
    let g = 1.0 / (1.0 + beta);
    IirCoefficients::new(
        vec![g, -2.0 * g * cos_w0, g],
        vec![1.0, -2.0 * g * cos_w0, 2.0 * g - 1.0],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FilterKind {
    Lowpass = 0,
    Highpass = 1,
    Bandpass = 2,
}

impl TryFrom<u8> for FilterKind {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(FilterKind::Lowpass),
            1 => Ok(FilterKind::Highpass),
            2 => Ok(FilterKind::Bandpass),
            other => Err(Error::invalid(format!(
                "filter kind {other} (expected 0, 1 or 2)"
            ))),
        }
    }
}

/// Edge-frequency description of a low-, high- or band-pass filter.
///
/// For band-pass, `fstop2 < fpass1 <= fpass2 < fstop1`: `fstop2` is the
/// lower stop edge and `fstop1` the upper one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalFilterSpec {
    pub kind: FilterKind,
    pub fpass1: f64,
    pub fpass2: f64,
    pub fstop1: f64,
    pub fstop2: f64,
    pub passband_ripple_db: f64,
    pub stopband_atten_db: f64,
}

impl Default for ClassicalFilterSpec {
    fn default() -> Self {
        Self {
            kind: FilterKind::Lowpass,
            fpass1: 0.2,
            fpass2: 0.0,
            fstop1: 0.3,
            fstop2: 0.1,
            passband_ripple_db: 0.1,
            stopband_atten_db: 60.0,
        }
    }
}

impl ClassicalFilterSpec {
    pub fn validate(&self) -> Result<()> {
        check_normalized("fpass1", self.fpass1)?;
        check_normalized("fstop1", self.fstop1)?;
        if !(self.passband_ripple_db.is_finite() && self.passband_ripple_db > 0.0) {
            return Err(Error::invalid("passband ripple must be positive dB"));
        }
        if !(self.stopband_atten_db.is_finite() && self.stopband_atten_db > 0.0) {
            return Err(Error::invalid("stopband attenuation must be positive dB"));
        }
        match self.kind {
            FilterKind::Lowpass if self.fpass1 >= self.fstop1 => {
                Err(Error::invalid("low-pass needs fpass1 < fstop1"))
            }
            FilterKind::Highpass if self.fstop1 >= self.fpass1 => {
                Err(Error::invalid("high-pass needs fstop1 < fpass1"))
            }
            FilterKind::Bandpass => {
                check_normalized("fpass2", self.fpass2)?;
                check_normalized("fstop2", self.fstop2)?;
                if !(self.fstop2 < self.fpass1
                    && self.fpass1 <= self.fpass2
                    && self.fpass2 < self.fstop1)
                {
                    return Err(Error::invalid(
                        "band-pass needs fstop2 < fpass1 <= fpass2 < fstop1",
                    ));
                }
                if self.fpass1 == self.fpass2 {
                    return Err(Error::invalid("band-pass passband has zero width"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn ripple_eps_sq(&self) -> f64 {
        10f64.powf(self.passband_ripple_db / 10.0) - 1.0
    }

    /// Stop-to-pass edge ratio of the equivalent analog low-pass prototype.
    fn selectivity(&self) -> f64 {
        let (p1, s1) = (prewarp(self.fpass1), prewarp(self.fstop1));
        match self.kind {
            FilterKind::Lowpass => s1 / p1,
            FilterKind::Highpass => p1 / s1,
            FilterKind::Bandpass => {
                let p2 = prewarp(self.fpass2);
                let s2 = prewarp(self.fstop2);
                let bw = p2 - p1;
                let c2 = p1 * p2;
                let map = |w: f64| (w * w - c2).abs() / (w * bw);
                map(s1).min(map(s2))
            }
        }
    }

    /// Minimum Butterworth order meeting both the ripple and the attenuation.
    pub fn minimum_order(&self) -> Result<usize> {
        self.validate()?;
        let d = (10f64.powf(self.stopband_atten_db / 10.0) - 1.0) / self.ripple_eps_sq();
        let raw = d.log10() / (2.0 * self.selectivity().log10());
        let n = (raw - 1e-9).ceil().max(1.0);
        if n > MAX_CLASSICAL_ORDER as f64 {
            return Err(Error::invalid(format!(
                "required order {n} exceeds {MAX_CLASSICAL_ORDER}"
            )));
        }
        Ok(n as usize)
    }
}

/// Butterworth filter of minimum order for `spec`, with the passband edge
/// placed exactly at the allowed ripple.
pub fn design_classical(spec: &ClassicalFilterSpec) -> Result<IirCoefficients> {
    let n = spec.minimum_order()?;
    let eps_root = spec.ripple_eps_sq().sqrt().powf(1.0 / n as f64);
    let p1 = prewarp(spec.fpass1);
    match spec.kind {
        FilterKind::Lowpass => lowpass_from_cutoff(n, p1 / eps_root),
        FilterKind::Highpass => highpass_from_cutoff(n, p1 * eps_root),
        FilterKind::Bandpass => {
            let p2 = prewarp(spec.fpass2);
            // widening the prototype cutoff widens the band about the same center
            let center = (p1 * p2).sqrt();
            let bw = (p2 - p1) / eps_root;
            let low = (-bw + (bw * bw + 4.0 * center * center).sqrt()) / 2.0;
            bandpass_from_edges(n, low, low + bw)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::magnitude_at;

    #[test]
    fn lowpass_half_power_and_dc() {
        let c = design_butterworth_lowpass(2, 0.002).unwrap();
        assert!((magnitude_at(&c, 0.0) - 1.0).abs() < 1e-12);
        assert!((magnitude_at(&c, 0.002) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn first_order_is_monotone() {
        let c = design_butterworth_lowpass(1, 0.5).unwrap();
        assert_eq!(c.order(), 1);
        let mags: Vec<f64> = (0..=200)
            .map(|i| magnitude_at(&c, i as f64 / 200.0))
            .collect();
        assert!(mags.windows(2).all(|w| w[1] <= w[0] + 1e-15));
        assert!(mags[200] < 1e-12);
    }

    #[test]
    fn highpass_and_bandpass_edges() {
        let hp = design_butterworth_highpass(3, 0.3).unwrap();
        assert!((magnitude_at(&hp, 1.0) - 1.0).abs() < 1e-12);
        assert!((magnitude_at(&hp, 0.3) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(magnitude_at(&hp, 0.0) < 1e-12);

        let bp = design_butterworth_bandpass(2, 0.2, 0.4).unwrap();
        assert_eq!(bp.order(), 4);
        assert!((magnitude_at(&bp, 0.2) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((magnitude_at(&bp, 0.4) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(magnitude_at(&bp, 0.0) < 1e-12 && magnitude_at(&bp, 1.0) < 1e-12);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(design_butterworth_lowpass(0, 0.2).is_err());
        assert!(design_butterworth_lowpass(2, 1.0).is_err());
        assert!(design_butterworth_lowpass(2, 0.0).is_err());
        assert!(design_butterworth_bandpass(2, 0.4, 0.2).is_err());
    }

    #[test]
    fn notch_quarter_rate_zeros_at_plus_minus_i() {
        for bw in [0.01, 0.1, 0.5] {
            let c = design_iir_notch(NotchSpec::new(0.5, bw).unwrap()).unwrap();
            assert!(c.b()[1].abs() < 1e-15);
            assert!((c.b()[0] - c.b()[2]).abs() < 1e-15);
            assert!(c.a()[1].abs() < 1e-15);
        }
    }

    #[test]
    fn notch_spec_validation() {
        assert!(NotchSpec::new(0.33, 0.1).is_ok());
        assert!(NotchSpec::new(1.2, 0.1).is_err());
        assert!(NotchSpec::new(0.02, 0.1).is_err());
        assert!(NotchSpec::new(0.5, 0.0).is_err());
    }

    #[test]
    fn classical_spec_validation() {
        let mut s = ClassicalFilterSpec {
            fstop1: 0.1,
            ..ClassicalFilterSpec::default()
        };
        assert!(s.validate().is_err());
        s.kind = FilterKind::Highpass;
        assert!(s.validate().is_ok());
        let bp = ClassicalFilterSpec {
            kind: FilterKind::Bandpass,
            ..Default::default()
        };
        assert!(bp.validate().is_err(), "default fpass2 = 0 is not a band");
        assert!(FilterKind::try_from(3).is_err());
    }

    #[test]
    fn degenerate_half_power_spec_is_first_order() {
        let spec = ClassicalFilterSpec {
            fpass1: 0.2,
            fstop1: 0.9,
            passband_ripple_db: 3.01,
            stopband_atten_db: 3.01,
            ..Default::default()
        };
        assert_eq!(spec.minimum_order().unwrap(), 1);
        assert_eq!(design_classical(&spec).unwrap().order(), 1);
    }

    #[test]
    fn too_steep_is_rejected() {
        let spec = ClassicalFilterSpec {
            fpass1: 0.2,
            fstop1: 0.21,
            ..Default::default()
        };
        assert!(spec.minimum_order().is_err());
    }
}
