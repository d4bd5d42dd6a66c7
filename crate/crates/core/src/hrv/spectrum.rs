use serde::{Deserialize, Serialize};

use super::{mean, RrSeries};
use crate::filters::{single_sided_spectrum, AmplitudeSpectrum};
use crate::{EcgRecord, Error, Result};

pub const DEFAULT_RESAMPLE_HZ: f64 = 4.0;
/// Low- and high-frequency bands, half-open `[lo, hi)`.
pub const LF_BAND_HZ: (f64, f64) = (0.04, 0.15);
pub const HF_BAND_HZ: (f64, f64) = (0.15, 0.40);
pub const MIN_SPECTRUM_SPAN_S: f64 = 10.0;
const MIN_SPECTRUM_INTERVALS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct RrSpectrum {
    pub spectrum: AmplitudeSpectrum,
    /// Σ amplitude² over the LF band.
    pub lf_power: f64,
    /// Σ amplitude² over the HF band.
    pub hf_power: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandPowers {
    pub lf_power: f64,
    pub hf_power: f64,
}

impl RrSpectrum {
    pub fn band_powers(&self) -> BandPowers {
        BandPowers {
            lf_power: self.lf_power,
            hf_power: self.hf_power,
        }
    }
}

/// Amplitude spectrum of the tachogram.
///
/// Each interval is placed at the time its closing beat occurs (the running
/// sum of intervals), linearly interpolated onto a uniform grid at
/// `resample_hz`, and mean-removed before the transform.
pub fn rr_spectrum(rr: &RrSeries, resample_hz: f64) -> Result<RrSpectrum> {
    if !(resample_hz.is_finite() && resample_hz > 0.0) {
        return Err(Error::invalid(format!("resample rate {resample_hz} Hz")));
    }
    let x = rr.intervals_s();
    if x.len() < MIN_SPECTRUM_INTERVALS {
        return Err(Error::degenerate(format!(
            "RR spectrum needs at least {MIN_SPECTRUM_INTERVALS} intervals, got {}",
            x.len()
        )));
    }
    let times: Vec<f64> = x
        .iter()
        .scan(0.0, |acc, v| {
            *acc += v;
            Some(*acc)
        })
        .collect();
    let span = times[times.len() - 1] - times[0];
    if span < MIN_SPECTRUM_SPAN_S {
        return Err(Error::degenerate(format!(
            "RR spectrum needs a span of {MIN_SPECTRUM_SPAN_S} s, got {span:.3} s"
        )));
    }

    let n = (span * resample_hz).floor() as usize + 1;
    let mut grid = Vec::with_capacity(n);
    let mut seg = 0;
    for k in 0..n {
        let t = times[0] + k as f64 / resample_hz;
        while seg + 2 < times.len() && times[seg + 1] < t {
            seg += 1;
        }
        let (t0, t1) = (times[seg], times[seg + 1]);
        let frac = ((t - t0) / (t1 - t0)).clamp(0.0, 1.0);
        grid.push(x[seg] + frac * (x[seg + 1] - x[seg]));
    }
    let m = mean(&grid);
    grid.iter_mut().for_each(|v| *v -= m);

    let tachogram = EcgRecord::new(grid, resample_hz, "tachogram")?;
    let spectrum = single_sided_spectrum(&tachogram)?;
    Ok(RrSpectrum {
        lf_power: spectrum.band_power(LF_BAND_HZ.0, LF_BAND_HZ.1),
        hf_power: spectrum.band_power(HF_BAND_HZ.0, HF_BAND_HZ.1),
        spectrum,
    })
}
