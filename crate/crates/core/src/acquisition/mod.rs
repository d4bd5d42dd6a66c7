//! Getting traces into the pipeline: WAV files, a synthetic generator with
//! known beat times, and the live-capture adapter contract.

mod capture;
mod synth;
mod wav;

pub use capture::{capture_live, find_device, CaptureDevice, PlaybackDevice};
pub use synth::{synthesize_ecg, GaussianWave, GroundTruth, Sinusoid, SynthConfig, WaveSet};
pub use wav::{read_wav, write_record_csv, write_wav, ChannelSelect, WavFormat};
