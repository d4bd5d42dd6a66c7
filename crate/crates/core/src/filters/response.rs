use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use super::IirCoefficients;
use crate::{Error, Result};

/// `H(e^{iω})` sampled on `[0, fs/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResponse {
    pub frequencies_hz: Vec<f64>,
    pub magnitude: Vec<f64>,
    pub phase_rad: Vec<f64>,
}

impl FrequencyResponse {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["frequency_hz", "magnitude", "phase_rad"])?;
        for i in 0..self.frequencies_hz.len() {
            w.write_record([
                self.frequencies_hz[i].to_string(),
                self.magnitude[i].to_string(),
                self.phase_rad[i].to_string(),
            ])?;
        }
        w.flush().map_err(|e| Error::io("response csv", e))
    }
}

/// `H` at digital frequency `omega` in radians per sample.
pub fn response_at(coeffs: &IirCoefficients, omega: f64) -> Complex64 {
    let z_inv = Complex64::from_polar(1.0, -omega);
    let horner = |p: &[f64]| {
        p.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z_inv + c)
    };
    horner(coeffs.b()) / horner(coeffs.a())
}

/// `|H|` at a frequency given as a fraction of Nyquist.
pub fn magnitude_at(coeffs: &IirCoefficients, normalized: f64) -> f64 {
    response_at(coeffs, PI * normalized).norm()
}

/// Evaluate `H` at `n_points` equally spaced frequencies from 0 to `fs/2`
/// inclusive.
pub fn frequency_response(
    coeffs: &IirCoefficients,
    n_points: usize,
    fs: f64,
) -> Result<FrequencyResponse> {
    if n_points < 2 {
        return Err(Error::invalid("frequency response needs at least 2 points"));
    }
    if !(fs.is_finite() && fs > 0.0) {
        return Err(Error::invalid(format!("sample rate {fs}")));
    }
    let step = 1.0 / (n_points - 1) as f64;
    let mut resp = FrequencyResponse {
        frequencies_hz: Vec::with_capacity(n_points),
        magnitude: Vec::with_capacity(n_points),
        phase_rad: Vec::with_capacity(n_points),
    };
    for k in 0..n_points {
        let frac = k as f64 * step;
        let h = response_at(coeffs, PI * frac);
        resp.frequencies_hz.push(frac * fs / 2.0);
        resp.magnitude.push(h.norm());
        resp.phase_rad.push(h.arg());
    }
    Ok(resp)
}
