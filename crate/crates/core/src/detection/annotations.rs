use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::hrv::RrSeries;
use crate::{Error, Result};

/// Detected beats: strictly ascending times and the signal value at each.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct BeatAnnotations {
    times_s: Vec<f64>,
    peak_amplitudes: Vec<f64>,
}

impl BeatAnnotations {
    pub fn new(times_s: Vec<f64>, peak_amplitudes: Vec<f64>) -> Result<Self> {
        if times_s.len() != peak_amplitudes.len() {
            return Err(Error::invalid(
                "annotation times and amplitudes differ in length",
            ));
        }
        if times_s
            .iter()
            .chain(&peak_amplitudes)
            .any(|v| !v.is_finite())
        {
            return Err(Error::invalid("annotations must be finite"));
        }
        if times_s.first().is_some_and(|&t| t < 0.0) {
            return Err(Error::invalid("annotation times must be nonnegative"));
        }
        if times_s.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::invalid(
                "annotation times must be strictly ascending",
            ));
        }
        Ok(Self {
            times_s,
            peak_amplitudes,
        })
    }

    pub fn times_s(&self) -> &[f64] {
        &self.times_s
    }

    pub fn peak_amplitudes(&self) -> &[f64] {
        &self.peak_amplitudes
    }

    pub fn len(&self) -> usize {
        self.times_s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times_s.is_empty()
    }

    /// `time_s,amplitude` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["time_s", "amplitude"])?;
        for (t, a) in self.times_s.iter().zip(&self.peak_amplitudes) {
            w.write_record([t.to_string(), a.to_string()])?;
        }
        w.flush().map_err(|e| Error::io("annotation csv", e))
    }
}

/// Differences of consecutive beat times.
pub fn rr_intervals(ann: &BeatAnnotations) -> Result<RrSeries> {
    if ann.len() < 2 {
        return Err(Error::degenerate(format!(
            "need at least 2 beats for RR intervals, got {}",
            ann.len()
        )));
    }
    RrSeries::new(ann.times_s.windows(2).map(|w| w[1] - w[0]).collect())
}
