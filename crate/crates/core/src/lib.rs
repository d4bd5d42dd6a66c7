//! Software side of a sound-card ECG: ingest audio traces, clean them up,
//! find beats, and summarize heart-rate variability. A small calculator for
//! the analog front-end lives alongside.
//!
//! Every stage passes an [`EcgRecord`] along; filters are plain
//! [`IirCoefficients`]; detectors and filter designs are also reachable by
//! name through [`detection::DetectorRegistry`] and
//! [`filters::FilterRegistry`].

pub mod acquisition;
pub mod detection;
mod error;
pub mod export;
pub mod filters;
pub mod frontend;
pub mod hrv;
mod record;

pub use error::{Error, Result};
pub use record::EcgRecord;

pub use acquisition::{ChannelSelect, GroundTruth, SynthConfig, WavFormat};
pub use detection::{BeatAnnotations, QrsDetectorParams};
pub use filters::{AmplitudeSpectrum, FrequencyResponse, IirCoefficients};
pub use hrv::RrSeries;
