use crate::{Error, Result};

/// A uniformly sampled single-channel trace.
///
/// Samples are finite and the sample rate is positive; an empty record is
/// allowed and represents a zero-length acquisition.
#[derive(Debug, Clone, PartialEq)]
pub struct EcgRecord {
    samples: Vec<f64>,
    sample_rate_hz: f64,
    label: String,
}

impl EcgRecord {
    pub fn new(samples: Vec<f64>, sample_rate_hz: f64, label: impl Into<String>) -> Result<Self> {
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::invalid(format!(
                "sample rate must be positive and finite, got {sample_rate_hz}"
            )));
        }
        if let Some(i) = samples.iter().position(|x| !x.is_finite()) {
            return Err(Error::invalid(format!("sample {i} is not finite")));
        }
        Ok(Self {
            samples,
            sample_rate_hz,
            label: label.into(),
        })
    }

    pub fn zeros(len: usize, sample_rate_hz: f64) -> Result<Self> {
        Self::new(vec![0.0; len], sample_rate_hz, "zeros")
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Length in seconds, `N / fs`.
    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz
    }

    pub fn time_of(&self, index: usize) -> f64 {
        index as f64 / self.sample_rate_hz
    }

    /// Same rate, new samples.
    pub fn with_samples(&self, samples: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        Self::new(samples, self.sample_rate_hz, label)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Sample-wise `self - other`. Both records must share length and rate.
    pub fn minus(&self, other: &EcgRecord, label: impl Into<String>) -> Result<Self> {
        if self.len() != other.len() || self.sample_rate_hz != other.sample_rate_hz {
            return Err(Error::invalid("records differ in length or sample rate"));
        }
        let diff = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(diff, self.sample_rate_hz, label)
    }

    pub fn rms(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        (self.samples.iter().map(|x| x * x).sum::<f64>() / self.samples.len() as f64).sqrt()
    }
}
