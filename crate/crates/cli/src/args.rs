use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ecg_core::acquisition::{Sinusoid, SynthConfig};
use ecg_core::detection::{DetectorSettings, QrsDetectorParams, DEFAULT_THRESHOLD};
use ecg_core::filters::{ClassicalFilterSpec, FilterKind, FilterSettings, NotchSpec};
use ecg_core::hrv::{DEFAULT_BIN_WIDTH_S, DEFAULT_RESAMPLE_HZ};
use ecg_core::ChannelSelect;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "ECG_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "ecg",
    version,
    about = "ECG acquisition, filtering, beat detection and HRV analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic ECG as WAV plus its beat-time ground truth.
    Synth(SynthCmd),
    /// Baseline removal, mains notch, beat detection, BPM and HRV in one run.
    Pipeline(PipelineCmd),
    /// Evaluate the analog front-end component values.
    Design(DesignCmd),
    /// Design a digital filter; optionally apply it to a recording.
    Filter(FilterCmd),
    /// Single-sided amplitude spectrum of a recording.
    Spectrum(SpectrumCmd),
    /// Detect beats in a recording.
    Detect(DetectCmd),
    /// HRV analysis of a beat-time or RR-interval CSV.
    Hrv(HrvCmd),
    /// Print a bundled JSON schema.
    Schema(SchemaCmd),
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output directory.
    #[arg(long, short = 'o', env = OUT_DIR_ENV, default_value = "ecg-out")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 72.0)]
    pub bpm: f64,
    /// Seconds.
    #[arg(long, default_value_t = 60.0)]
    pub duration: f64,
    /// Sample rate in Hz.
    #[arg(long, default_value_t = 500)]
    pub fs: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Standard deviation of additive white noise.
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long, default_value_t = 0.0)]
    pub wander_amplitude: f64,
    #[arg(long, default_value_t = 0.25)]
    pub wander_hz: f64,
    #[arg(long, default_value_t = 0.0)]
    pub mains_amplitude: f64,
    #[arg(long, default_value_t = 50.0)]
    pub mains_hz: f64,
    /// Multiplies every wave amplitude. The default keeps the 1.5-unit R
    /// wave inside the ±1 full scale of a WAV file.
    #[arg(long, default_value_t = 0.5)]
    pub amplitude_scale: f64,
}

impl SynthArgs {
    pub fn config(&self) -> SynthConfig {
        let mut cfg = SynthConfig::new(self.bpm, self.duration, self.fs as f64);
        cfg.wave_set = cfg.wave_set.amplitude_scaled(self.amplitude_scale);
        cfg.noise_sigma = self.noise;
        cfg.rng_seed = self.seed;
        cfg.baseline_wander = Sinusoid::new(self.wander_amplitude, self.wander_hz);
        cfg.mains = Sinusoid::new(self.mains_amplitude, self.mains_hz);
        cfg
    }
}

#[derive(Debug, Args)]
pub struct SynthCmd {
    #[command(flatten)]
    pub synth: SynthArgs,
    /// File stem for `<name>.wav` and `<name>_truth.csv`.
    #[arg(long, default_value = "synth")]
    pub name: String,
    #[arg(long, value_parser = ["8", "16"], default_value = "16")]
    pub bits: String,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// WAV recording to analyze.
    #[arg(long, short = 'i')]
    pub input: PathBuf,
    /// left | right for stereo files, mono for single-channel files.
    #[arg(long, default_value = "mono")]
    pub channel: ChannelSelect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetectorChoice {
    Threshold,
    Qrs,
}

impl DetectorChoice {
    pub fn registry_name(self) -> &'static str {
        match self {
            DetectorChoice::Threshold => "threshold",
            DetectorChoice::Qrs => "qrs",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct DetectorArgs {
    #[arg(long, value_enum, default_value = "qrs")]
    pub detector: DetectorChoice,
    /// Fixed amplitude threshold of the threshold detector.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    pub threshold: f64,
    /// QRS detector: highest expected heart rate, sets the refractory interval.
    #[arg(long, default_value_t = 180.0)]
    pub highest_hr: f64,
    /// QRS detector: threshold before the first accepted beat.
    #[arg(long, default_value_t = QrsDetectorParams::default().initial_threshold)]
    pub initial_threshold: f64,
    /// QRS detector: fraction of recent peak amplitudes, strictly in (0, 1).
    #[arg(long, default_value_t = QrsDetectorParams::default().threshold_factor)]
    pub threshold_factor: f64,
}

impl DetectorArgs {
    pub fn settings(&self) -> DetectorSettings {
        DetectorSettings {
            threshold: self.threshold,
            qrs: QrsDetectorParams {
                rough_highest_hr_bpm: self.highest_hr,
                initial_threshold: self.initial_threshold,
                threshold_factor: self.threshold_factor,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct EmitArgs {
    /// Write per-stage CSV files.
    #[arg(long)]
    pub csv: bool,
    /// Write the JSON report file.
    #[arg(long)]
    pub json: bool,
    /// Write SVG plots.
    #[arg(long)]
    pub svg: bool,
}

impl EmitArgs {
    /// With no flag given, CSV and JSON are written.
    pub fn resolved(self) -> Self {
        if self.csv || self.json || self.svg {
            self
        } else {
            Self {
                csv: true,
                json: true,
                svg: false,
            }
        }
    }
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["input", "synth"]))]
pub struct PipelineCmd {
    /// WAV recording to analyze.
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    /// Generate the input instead of reading a file.
    #[arg(long)]
    pub synth: bool,
    #[command(flatten)]
    pub synth_args: SynthArgs,
    #[arg(long, default_value = "mono")]
    pub channel: ChannelSelect,
    /// Mains frequency to notch out, 50 or 60 Hz.
    #[arg(long, default_value_t = 50.0)]
    pub mains: f64,
    /// Notch -3 dB width in Hz.
    #[arg(long, default_value_t = 2.0)]
    pub notch_bandwidth: f64,
    /// Skip baseline-wander removal.
    #[arg(long)]
    pub no_baseline: bool,
    /// Skip the mains notch.
    #[arg(long)]
    pub no_notch: bool,
    #[command(flatten)]
    pub detector: DetectorArgs,
    #[command(flatten)]
    pub emit: EmitArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DesignCmd {
    /// Also list every gain-table row.
    #[arg(long)]
    pub table1: bool,
    /// Print the report as JSON instead of a text table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Lowpass,
    Highpass,
    Bandpass,
}

impl From<KindArg> for FilterKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Lowpass => FilterKind::Lowpass,
            KindArg::Highpass => FilterKind::Highpass,
            KindArg::Bandpass => FilterKind::Bandpass,
        }
    }
}

#[derive(Debug, Args)]
pub struct FilterCmd {
    /// Registered design name; `--list` shows them.
    #[arg(long, default_value = "baseline")]
    pub design: String,
    /// List registered designs and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub order: Option<usize>,
    /// Cutoff (band-pass: lower edge) as a fraction of Nyquist.
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// Band-pass upper edge as a fraction of Nyquist.
    #[arg(long)]
    pub cutoff_high: Option<f64>,
    /// Notch center as a fraction of Nyquist.
    #[arg(long)]
    pub w0: Option<f64>,
    /// Notch -3 dB width as a fraction of Nyquist.
    #[arg(long)]
    pub bandwidth: Option<f64>,
    /// Classical design response type.
    #[arg(long, value_enum, default_value = "lowpass")]
    pub kind: KindArg,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().fpass1)]
    pub fpass1: f64,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().fpass2)]
    pub fpass2: f64,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().fstop1)]
    pub fstop1: f64,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().fstop2)]
    pub fstop2: f64,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().passband_ripple_db)]
    pub ripple_db: f64,
    #[arg(long, default_value_t = ClassicalFilterSpec::default().stopband_atten_db)]
    pub atten_db: f64,
    /// Frequency-response points from 0 to Nyquist.
    #[arg(long, default_value_t = 512)]
    pub points: usize,
    /// Sample rate used to label response frequencies when no input is given.
    #[arg(long, default_value_t = 2.0)]
    pub fs: f64,
    /// Recording to filter.
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "mono")]
    pub channel: ChannelSelect,
    #[command(flatten)]
    pub emit: EmitArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

impl FilterCmd {
    pub fn settings(&self) -> FilterSettings {
        FilterSettings {
            order: self.order,
            cutoff: self.cutoff,
            cutoff_high: self.cutoff_high,
            notch: match (self.w0, self.bandwidth) {
                (Some(w0), Some(bandwidth)) => Some(NotchSpec { w0, bandwidth }),
                _ => None,
            },
            classical: Some(ClassicalFilterSpec {
                kind: self.kind.into(),
                fpass1: self.fpass1,
                fpass2: self.fpass2,
                fstop1: self.fstop1,
                fstop2: self.fstop2,
                passband_ripple_db: self.ripple_db,
                stopband_atten_db: self.atten_db,
            }),
        }
    }
}

#[derive(Debug, Args)]
pub struct SpectrumCmd {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub emit: EmitArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DetectCmd {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub detector: DetectorArgs,
    #[command(flatten)]
    pub emit: EmitArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("series").required(true).args(["beats", "rr"]))]
pub struct HrvCmd {
    /// CSV whose first column is beat time in seconds, with a header row.
    #[arg(long)]
    pub beats: Option<PathBuf>,
    /// CSV whose first column is RR interval in seconds, with a header row.
    #[arg(long)]
    pub rr: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BIN_WIDTH_S)]
    pub bin_width: f64,
    /// Tachogram resampling rate in Hz.
    #[arg(long, default_value_t = DEFAULT_RESAMPLE_HZ)]
    pub resample_hz: f64,
    #[command(flatten)]
    pub emit: EmitArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemaName {
    Synth,
    Pipeline,
    Design,
    Error,
}

#[derive(Debug, Args)]
pub struct SchemaCmd {
    #[arg(value_enum)]
    pub name: SchemaName,
}
