//! Heart-rate variability over RR interval series: time-domain statistics,
//! histogram, Poincaré descriptors and the resampled-tachogram spectrum.
//!
//! Standard deviations are population (divide-by-n) throughout.

mod poincare;
mod spectrum;
mod stats;

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use poincare::{poincare, PoincareDescriptor};
pub use spectrum::{
    rr_spectrum, BandPowers, RrSpectrum, DEFAULT_RESAMPLE_HZ, HF_BAND_HZ, LF_BAND_HZ,
    MIN_SPECTRUM_SPAN_S,
};
pub use stats::{hrv_statistics, rr_histogram, HrvStatistics, RrHistogram, DEFAULT_BIN_WIDTH_S};

/// Inter-beat intervals in seconds, all positive and finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RrSeries {
    intervals_s: Vec<f64>,
}

impl RrSeries {
    pub fn new(intervals_s: Vec<f64>) -> Result<Self> {
        if let Some(bad) = intervals_s.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::invalid(format!("RR interval {bad} is not positive")));
        }
        Ok(Self { intervals_s })
    }

    pub fn intervals_s(&self) -> &[f64] {
        &self.intervals_s
    }

    pub fn len(&self) -> usize {
        self.intervals_s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals_s.is_empty()
    }

    /// One interval per line, header `rr_s`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["rr_s"])?;
        for v in &self.intervals_s {
            w.write_record([v.to_string()])?;
        }
        w.flush().map_err(|e| Error::io("rr csv", e))
    }
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Population standard deviation.
pub(crate) fn pop_std(x: &[f64]) -> f64 {
    let m = mean(x);
    (x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / x.len() as f64).sqrt()
}
