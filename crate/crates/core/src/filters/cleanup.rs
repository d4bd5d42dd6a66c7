use super::{apply_filter, design_butterworth_lowpass, design_iir_notch, NotchSpec};
use crate::{EcgRecord, Error, Result};

/// Order and normalized cutoff of the baseline-wander estimator.
pub const BASELINE_ORDER: usize = 2;
pub const BASELINE_CUTOFF: f64 = 0.002;

/// Split a record into a slow baseline estimate and the corrected signal.
///
/// The baseline is a 2nd-order Butterworth low-pass at 0.002 × Nyquist;
/// `corrected = record - baseline`.
pub fn remove_baseline(record: &EcgRecord) -> Result<(EcgRecord, EcgRecord)> {
    if record.is_empty() {
        return Err(Error::degenerate("baseline removal on an empty record"));
    }
    let lp = design_butterworth_lowpass(BASELINE_ORDER, BASELINE_CUTOFF)?;
    let baseline = apply_filter(&lp, record)?.with_label(format!("{}|baseline", record.label()));
    let corrected = record.minus(&baseline, format!("{}|corrected", record.label()))?;
    Ok((corrected, baseline))
}

/// Notch out mains at `mains_hz` (50 or 60). Returns the refined signal and
/// the removed interference, `record - refined`.
pub fn remove_powerline(
    record: &EcgRecord,
    mains_hz: f64,
    bandwidth_hz: f64,
) -> Result<(EcgRecord, EcgRecord)> {
    if mains_hz != 50.0 && mains_hz != 60.0 {
        return Err(Error::invalid(format!(
            "mains frequency {mains_hz} Hz (expected 50 or 60)"
        )));
    }
    if !(bandwidth_hz.is_finite() && bandwidth_hz > 0.0) {
        return Err(Error::invalid(format!("notch bandwidth {bandwidth_hz} Hz")));
    }
    let nyquist = record.sample_rate_hz() / 2.0;
    if mains_hz >= nyquist {
        return Err(Error::invalid(format!(
            "mains {mains_hz} Hz is not below Nyquist {nyquist} Hz"
        )));
    }
    let spec = NotchSpec::new(mains_hz / nyquist, bandwidth_hz / nyquist)?;
    let refined = apply_filter(&design_iir_notch(spec)?, record)?
        .with_label(format!("{}|refined", record.label()));
    let interference = record.minus(&refined, format!("{}|interference", record.label()))?;
    Ok((refined, interference))
}
