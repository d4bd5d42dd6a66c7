//! Beat finding: the fixed-threshold peak counter, an adaptive QRS detector,
//! BPM, and RR intervals.

mod annotations;
mod qrs;
mod registry;
mod threshold;

pub use annotations::{rr_intervals, BeatAnnotations};
pub use qrs::{detect_qrs, QrsDetectorParams, THRESHOLD_HISTORY};
pub use registry::{BeatDetector, DetectorFactory, DetectorRegistry, DetectorSettings};
pub use threshold::{compute_bpm, count_beats_threshold, threshold_peaks, DEFAULT_THRESHOLD};
