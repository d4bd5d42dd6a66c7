use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::BeatAnnotations;
use crate::{EcgRecord, Error, Result};

/// Accepted-peak amplitudes averaged for the adaptive threshold.
pub const THRESHOLD_HISTORY: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QrsDetectorParams {
    /// Sets the refractory interval, `60 / rough_highest_hr_bpm` seconds.
    pub rough_highest_hr_bpm: f64,
    /// Threshold in signal units until the first beat is accepted.
    pub initial_threshold: f64,
    /// Fraction of the recent mean peak amplitude used as the next
    /// threshold. Strictly between 0 and 1.
    pub threshold_factor: f64,
}

impl Default for QrsDetectorParams {
    fn default() -> Self {
        Self {
            rough_highest_hr_bpm: 60.0,
            initial_threshold: 0.5,
            threshold_factor: 0.5,
        }
    }
}

impl QrsDetectorParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.threshold_factor > 0.0 && self.threshold_factor < 1.0) {
            return Err(Error::invalid(format!(
                "threshold factor must be greater than 0 and less than 1, got {}",
                self.threshold_factor
            )));
        }
        if !(self.rough_highest_hr_bpm.is_finite() && self.rough_highest_hr_bpm > 0.0) {
            return Err(Error::invalid(format!(
                "rough highest heart rate must be positive, got {}",
                self.rough_highest_hr_bpm
            )));
        }
        if !self.initial_threshold.is_finite() {
            return Err(Error::invalid("initial threshold must be finite"));
        }
        Ok(())
    }

    pub fn refractory_s(&self) -> f64 {
        60.0 / self.rough_highest_hr_bpm
    }
}

/// Adaptive-threshold QRS detection.
///
/// Candidates are strict local maxima above the current threshold. A
/// candidate within the refractory interval of the last accepted beat
/// replaces it if taller and is dropped otherwise. After each acceptance the
/// threshold becomes `threshold_factor` times the mean of the last
/// [`THRESHOLD_HISTORY`] accepted amplitudes.
pub fn detect_qrs(record: &EcgRecord, params: &QrsDetectorParams) -> Result<BeatAnnotations> {
    params.validate()?;
    if record.is_empty() {
        return Err(Error::degenerate("QRS detection on an empty record"));
    }
    let x = record.samples();
    let fs = record.sample_rate_hz();
    let refractory = params.refractory_s();

    let mut threshold = params.initial_threshold;
    let mut beats: Vec<(usize, f64)> = Vec::new();
    let mut recent: VecDeque<f64> = VecDeque::with_capacity(THRESHOLD_HISTORY);
    let adapt = |recent: &VecDeque<f64>| {
        params.threshold_factor * recent.iter().sum::<f64>() / recent.len() as f64
    };

    for k in 1..x.len().saturating_sub(1) {
        let v = x[k];
        if !(v > x[k - 1] && v > x[k + 1] && v > threshold) {
            continue;
        }
        if let Some(last) = beats.last_mut() {
            if ((k - last.0) as f64) / fs < refractory {
                if v > last.1 {
                    *last = (k, v);
                    if let Some(back) = recent.back_mut() {
                        *back = v;
                    }
                    threshold = adapt(&recent);
                }
                continue;
            }
        }
        beats.push((k, v));
        if recent.len() == THRESHOLD_HISTORY {
            recent.pop_front();
        }
        recent.push_back(v);
        threshold = adapt(&recent);
    }

    let (times, amps) = beats
        .into_iter()
        .map(|(k, v)| (record.time_of(k), v))
        .unzip();
    BeatAnnotations::new(times, amps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(x: Vec<f64>, fs: f64) -> EcgRecord {
        EcgRecord::new(x, fs, "").unwrap()
    }

    #[test]
    fn factor_must_be_inside_unit_interval() {
        let r = rec(vec![0.0; 10], 10.0);
        for f in [0.0, 1.0, 1.2, -0.3, f64::NAN] {
            let p = QrsDetectorParams {
                threshold_factor: f,
                ..Default::default()
            };
            assert!(matches!(
                detect_qrs(&r, &p),
                Err(Error::InvalidParameter(_))
            ));
        }
    }

    #[test]
    fn zero_record_has_no_beats() {
        let ann = detect_qrs(&rec(vec![0.0; 1000], 100.0), &Default::default()).unwrap();
        assert!(ann.is_empty());
        assert!(detect_qrs(&rec(vec![], 100.0), &Default::default()).is_err());
    }

    #[test]
    fn refractory_keeps_the_taller_peak() {
        // two peaks 0.2 s apart inside a 1 s refractory window
        let mut x = vec![0.0; 300];
        x[100] = 1.0;
        x[120] = 2.0;
        x[250] = 1.5;
        let ann = detect_qrs(&rec(x, 100.0), &Default::default()).unwrap();
        assert_eq!(ann.times_s(), &[1.2, 2.5]);
        assert_eq!(ann.peak_amplitudes(), &[2.0, 1.5]);
    }

    #[test]
    fn threshold_adapts_to_recent_peaks() {
        // big beats lift the threshold above the small bump at 5.5 s
        let mut x = vec![0.0; 700];
        for k in 0..5 {
            x[100 * k + 50] = 2.0;
        }
        x[550] = 0.9;
        x[650] = 1.1;
        let p = QrsDetectorParams {
            rough_highest_hr_bpm: 100.0,
            initial_threshold: 0.5,
            threshold_factor: 0.5,
        };
        let ann = detect_qrs(&rec(x, 100.0), &p).unwrap();
        assert_eq!(ann.len(), 6);
        assert_eq!(*ann.times_s().last().unwrap(), 6.5);
    }
}
