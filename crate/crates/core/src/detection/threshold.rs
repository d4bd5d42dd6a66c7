use crate::{EcgRecord, Error, Result};

/// Raw-unit level a peak must exceed to count as a beat.
pub const DEFAULT_THRESHOLD: f64 = 1.0;

/// Indices `k` in `1..N-1` that are strictly above both neighbours and
/// strictly above `threshold`. Flat tops are not peaks.
pub fn threshold_peaks(samples: &[f64], threshold: f64) -> Vec<usize> {
    samples
        .windows(3)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0] && w[1] > w[2] && w[1] > threshold)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Number of [`threshold_peaks`]; starts from zero.
pub fn count_beats_threshold(record: &EcgRecord, threshold: f64) -> usize {
    threshold_peaks(record.samples(), threshold).len()
}

/// Beats per minute, `beat_count / (duration_s / 60)`.
pub fn compute_bpm(beat_count: usize, duration_s: f64) -> Result<f64> {
    if !(duration_s.is_finite() && duration_s > 0.0) {
        return Err(Error::invalid(format!(
            "duration must be positive, got {duration_s}"
        )));
    }
    Ok(beat_count as f64 / (duration_s / 60.0))
}
