use std::io::Write;

use serde::{Deserialize, Serialize};

use super::{mean, pop_std, RrSeries};
use crate::{Error, Result};

pub const DEFAULT_BIN_WIDTH_S: f64 = 1.0 / 128.0;

/// Successive differences above this count toward pNN50.
const NN50_S: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HrvStatistics {
    pub mean_rr_s: f64,
    pub sdnn_s: f64,
    pub rmssd_s: f64,
    pub pnn50: f64,
    pub min_rr_s: f64,
    pub max_rr_s: f64,
    pub mean_hr_bpm: f64,
}

pub fn hrv_statistics(rr: &RrSeries) -> Result<HrvStatistics> {
    let x = rr.intervals_s();
    if x.len() < 2 {
        return Err(Error::degenerate(format!(
            "HRV statistics need at least 2 intervals, got {}",
            x.len()
        )));
    }
    let diffs: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let mean_rr_s = mean(x);
    Ok(HrvStatistics {
        mean_rr_s,
        sdnn_s: pop_std(x),
        rmssd_s: (diffs.iter().map(|d| d * d).sum::<f64>() / diffs.len() as f64).sqrt(),
        pnn50: diffs.iter().filter(|d| d.abs() > NN50_S).count() as f64 / diffs.len() as f64,
        min_rr_s: x.iter().copied().fold(f64::INFINITY, f64::min),
        max_rr_s: x.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean_hr_bpm: 60.0 / mean_rr_s,
    })
}

/// Uniform half-open bins `[edge, edge + width)` starting at
/// `floor(min / width) * width`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RrHistogram {
    pub bin_edges_s: Vec<f64>,
    pub counts: Vec<usize>,
}

impl RrHistogram {
    /// `bin_start_s,bin_end_s,count` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["bin_start_s", "bin_end_s", "count"])?;
        for (i, c) in self.counts.iter().enumerate() {
            w.write_record([
                self.bin_edges_s[i].to_string(),
                self.bin_edges_s[i + 1].to_string(),
                c.to_string(),
            ])?;
        }
        w.flush().map_err(|e| Error::io("histogram csv", e))
    }
}

pub fn rr_histogram(rr: &RrSeries, bin_width_s: f64) -> Result<RrHistogram> {
    if !(bin_width_s.is_finite() && bin_width_s > 0.0) {
        return Err(Error::invalid(format!(
            "bin width must be positive, got {bin_width_s}"
        )));
    }
    let x = rr.intervals_s();
    if x.is_empty() {
        return Err(Error::degenerate("histogram of an empty RR series"));
    }
    let lo_idx = x
        .iter()
        .map(|v| (v / bin_width_s).floor())
        .fold(f64::INFINITY, f64::min);
    let hi_idx = x
        .iter()
        .map(|v| (v / bin_width_s).floor())
        .fold(f64::NEG_INFINITY, f64::max);
    let bins = (hi_idx - lo_idx) as usize + 1;
    let mut counts = vec![0usize; bins];
    for v in x {
        let b = ((v / bin_width_s).floor() - lo_idx) as usize;
        counts[b] += 1;
    }
    let bin_edges_s = (0..=bins)
        .map(|i| (lo_idx + i as f64) * bin_width_s)
        .collect();
    Ok(RrHistogram {
        bin_edges_s,
        counts,
    })
}
