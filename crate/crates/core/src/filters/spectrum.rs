use std::io::Write;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::{EcgRecord, Error, Result};

/// Single-sided amplitude spectrum: a sinusoid that falls on a bin shows up
/// with its time-domain amplitude.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeSpectrum {
    pub frequencies_hz: Vec<f64>,
    pub amplitude: Vec<f64>,
}

impl AmplitudeSpectrum {
    pub fn bin_width_hz(&self) -> f64 {
        self.frequencies_hz.get(1).copied().unwrap_or(0.0)
    }

    /// Index of the bin closest to `freq_hz`.
    pub fn nearest_bin(&self, freq_hz: f64) -> usize {
        let w = self.bin_width_hz();
        if w == 0.0 {
            return 0;
        }
        ((freq_hz / w).round().max(0.0) as usize).min(self.amplitude.len() - 1)
    }

    pub fn amplitude_at(&self, freq_hz: f64) -> f64 {
        self.amplitude[self.nearest_bin(freq_hz)]
    }

    /// `(frequency, amplitude)` of the largest bin, DC excluded.
    pub fn peak(&self) -> Option<(f64, f64)> {
        (1..self.amplitude.len())
            .max_by(|&i, &j| self.amplitude[i].total_cmp(&self.amplitude[j]))
            .map(|i| (self.frequencies_hz[i], self.amplitude[i]))
    }

    /// Σ amplitude² over bins with `lo <= f < hi`.
    pub fn band_power(&self, lo_hz: f64, hi_hz: f64) -> f64 {
        self.frequencies_hz
            .iter()
            .zip(&self.amplitude)
            .filter(|(&f, _)| f >= lo_hz && f < hi_hz)
            .map(|(_, a)| a * a)
            .sum()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["frequency_hz", "magnitude"])?;
        for (f, a) in self.frequencies_hz.iter().zip(&self.amplitude) {
            w.write_record([f.to_string(), a.to_string()])?;
        }
        w.flush().map_err(|e| Error::io("spectrum csv", e))
    }
}

/// Unnormalized forward DFT, `X[k] = Σ x[n] e^{-2πikn/N}`.
pub fn dft(samples: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    if !buf.is_empty() {
        FftPlanner::new()
            .plan_fft_forward(buf.len())
            .process(&mut buf);
    }
    buf
}

/// Inverse of [`dft`], including the `1/N` factor.
pub fn inverse_dft(spectrum: &[Complex64]) -> Vec<f64> {
    let mut buf = spectrum.to_vec();
    if buf.is_empty() {
        return Vec::new();
    }
    let n = buf.len() as f64;
    FftPlanner::new()
        .plan_fft_inverse(buf.len())
        .process(&mut buf);
    buf.into_iter().map(|c| c.re / n).collect()
}

/// `2|X[k]|/N` for `k = 1 .. ceil(N/2)-1`, `|X[0]|/N` at DC; bin `k` sits
/// at `fs k / N`.
pub fn single_sided_spectrum(record: &EcgRecord) -> Result<AmplitudeSpectrum> {
    let n = record.len();
    if n < 2 {
        return Err(Error::degenerate(format!(
            "spectrum needs at least 2 samples, got {n}"
        )));
    }
    let x = dft(record.samples());
    let bins = n.div_ceil(2);
    let nf = n as f64;
    let fs = record.sample_rate_hz();
    let amplitude = x[..bins]
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k == 0 {
                c.norm() / nf
            } else {
                2.0 * c.norm() / nf
            }
        })
        .collect();
    let frequencies_hz = (0..bins).map(|k| fs * k as f64 / nf).collect();
    Ok(AmplitudeSpectrum {
        frequencies_hz,
        amplitude,
    })
}
