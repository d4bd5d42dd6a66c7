//! Beat detectors selectable by name.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{detect_qrs, threshold_peaks, BeatAnnotations, QrsDetectorParams, DEFAULT_THRESHOLD};
use crate::{EcgRecord, Error, Result};

pub trait BeatDetector: Send + Sync {
    fn name(&self) -> &'static str;

    fn detect(&self, record: &EcgRecord) -> Result<BeatAnnotations>;
}

/// Parameters for every built-in detector; each reads its own fields.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorSettings {
    pub threshold: f64,
    pub qrs: QrsDetectorParams,
}

impl Default for DetectorSettings {
    fn default() -> Self {
        Self {
            threshold: DEFAULT_THRESHOLD,
            qrs: QrsDetectorParams::default(),
        }
    }
}

pub type DetectorFactory = fn(&DetectorSettings) -> Result<Box<dyn BeatDetector>>;

/// Every strict local maximum above a fixed level is a beat.
struct FixedThreshold {
    threshold: f64,
}

impl BeatDetector for FixedThreshold {
    fn name(&self) -> &'static str {
        "threshold"
    }

    fn detect(&self, record: &EcgRecord) -> Result<BeatAnnotations> {
        let x = record.samples();
        let (times, amps) = threshold_peaks(x, self.threshold)
            .into_iter()
            .map(|k| (record.time_of(k), x[k]))
            .unzip();
        BeatAnnotations::new(times, amps)
    }
}

struct AdaptiveQrs {
    params: QrsDetectorParams,
}

impl BeatDetector for AdaptiveQrs {
    fn name(&self) -> &'static str {
        "qrs"
    }

    fn detect(&self, record: &EcgRecord) -> Result<BeatAnnotations> {
        detect_qrs(record, &self.params)
    }
}

pub struct DetectorRegistry {
    factories: BTreeMap<&'static str, DetectorFactory>,
}

impl DetectorRegistry {
    pub fn empty() -> Self {
        Self {
            factories: BTreeMap::new(),
        }
    }

    /// `threshold` and `qrs`.
    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register("threshold", |s| {
            if !s.threshold.is_finite() {
                return Err(Error::invalid("threshold must be finite"));
            }
            Ok(Box::new(FixedThreshold {
                threshold: s.threshold,
            }))
        });
        reg.register("qrs", |s| {
            s.qrs.validate()?;
            Ok(Box::new(AdaptiveQrs { params: s.qrs }))
        });
        reg
    }

    pub fn register(&mut self, name: &'static str, factory: DetectorFactory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn create(&self, name: &str, settings: &DetectorSettings) -> Result<Box<dyn BeatDetector>> {
        let factory = self.factories.get(name).ok_or_else(|| {
            Error::invalid(format!(
                "unknown detector '{name}' (known: {})",
                self.names().collect::<Vec<_>>().join(", ")
            ))
        })?;
        factory(settings)
    }
}

impl Default for DetectorRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
