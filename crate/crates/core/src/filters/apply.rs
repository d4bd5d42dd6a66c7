use super::IirCoefficients;
use crate::{EcgRecord, Error, Result};

/// Run `coeffs` over `record` from zero initial state.
///
/// `y[n] = Σ b[k] x[n-k] - Σ_{k>=1} a[k] y[n-k]`, evaluated in transposed
/// direct form II. Output has the input's length and sample rate.
pub fn apply_filter(coeffs: &IirCoefficients, record: &EcgRecord) -> Result<EcgRecord> {
    if !coeffs.is_stable() {
        return Err(Error::UnstableFilter);
    }
    let out = filter_samples(coeffs, record.samples());
    record.with_samples(out, format!("{}|filtered", record.label()))
}

pub(crate) fn filter_samples(coeffs: &IirCoefficients, input: &[f64]) -> Vec<f64> {
    let (b, a) = (coeffs.b(), coeffs.a());
    let taps = b.len().max(a.len());
    let coef = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    let mut state = vec![0.0; taps];
    input
        .iter()
        .map(|&x| {
            let y = coef(b, 0) * x + state[0];
            for i in 1..taps {
                let next = if i + 1 < taps { state[i] } else { 0.0 };
                state[i - 1] = coef(b, i) * x - coef(a, i) * y + next;
            }
            y
        })
        .collect()
}
