use std::io::Write;

use serde::{Deserialize, Serialize};

use super::{pop_std, RrSeries};
use crate::{Error, Result};

/// Dispersion of the `(RR[n], RR[n+1])` scatter.
///
/// `sd1` is the RMS distance of the points from the identity line, so
/// `rmssd == sd1 * √2` holds exactly. `sd2` is the population spread of
/// the points' projections along that line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoincareDescriptor {
    pub sd1_s: f64,
    pub sd2_s: f64,
    pub points: Vec<(f64, f64)>,
}

impl PoincareDescriptor {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["rr_n_s", "rr_next_s"])?;
        for (a, b) in &self.points {
            w.write_record([a.to_string(), b.to_string()])?;
        }
        w.flush().map_err(|e| Error::io("poincare csv", e))
    }
}

pub fn poincare(rr: &RrSeries) -> Result<PoincareDescriptor> {
    let x = rr.intervals_s();
    if x.len() < 3 {
        return Err(Error::degenerate(format!(
            "Poincaré analysis needs at least 3 intervals, got {}",
            x.len()
        )));
    }
    let points: Vec<(f64, f64)> = x.windows(2).map(|w| (w[0], w[1])).collect();
    let n = points.len() as f64;
    let diff_sq = points.iter().map(|(a, b)| (b - a) * (b - a)).sum::<f64>() / n;
    let sums: Vec<f64> = points.iter().map(|(a, b)| a + b).collect();
    Ok(PoincareDescriptor {
        sd1_s: (diff_sq / 2.0).sqrt(),
        sd2_s: pop_std(&sums) / std::f64::consts::SQRT_2,
        points,
    })
}
