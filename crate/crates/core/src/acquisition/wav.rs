use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use hound::{SampleFormat, WavReader, WavSpec, WavWriter};

use crate::{EcgRecord, Error, Result};

/// PCM layout of a WAV file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WavFormat {
    pub sample_rate_hz: u32,
    pub channels: u16,
    pub bits_per_sample: u16,
}

impl WavFormat {
    pub fn new(sample_rate_hz: u32, channels: u16, bits_per_sample: u16) -> Result<Self> {
        let fmt = Self {
            sample_rate_hz,
            channels,
            bits_per_sample,
        };
        fmt.validate()?;
        Ok(fmt)
    }

    /// 16-bit mono at the record's (integral) sample rate.
    pub fn mono16_for(record: &EcgRecord) -> Result<Self> {
        Self::new(integral_rate(record.sample_rate_hz())?, 1, 16)
    }

    fn validate(&self) -> Result<()> {
        if self.sample_rate_hz == 0 {
            return Err(Error::UnsupportedFormat("sample rate 0".into()));
        }
        if !matches!(self.channels, 1 | 2) {
            return Err(Error::UnsupportedFormat(format!(
                "{} channels (expected 1 or 2)",
                self.channels
            )));
        }
        if !matches!(self.bits_per_sample, 8 | 16) {
            return Err(Error::UnsupportedFormat(format!(
                "{}-bit samples (expected 8 or 16)",
                self.bits_per_sample
            )));
        }
        Ok(())
    }

    fn full_scale(&self) -> f64 {
        if self.bits_per_sample == 8 {
            128.0
        } else {
            32768.0
        }
    }
}

fn integral_rate(fs: f64) -> Result<u32> {
    let rounded = fs.round();
    if (fs - rounded).abs() > 1e-9 || rounded < 1.0 || rounded > u32::MAX as f64 {
        return Err(Error::invalid(format!(
            "sample rate {fs} Hz cannot be stored in a WAV header"
        )));
    }
    Ok(rounded as u32)
}

/// Which channel of a file becomes the record.
///
/// On the 3.5 mm microphone plug the tip carries the left channel
/// (channel 1) and the ring the right channel (channel 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChannelSelect {
    #[default]
    Left,
    Right,
    Mono,
}

impl ChannelSelect {
    fn index(self, channels: u16) -> Result<usize> {
        match (self, channels) {
            (ChannelSelect::Mono, 1) => Ok(0),
            (ChannelSelect::Left, 2) => Ok(0),
            (ChannelSelect::Right, 2) => Ok(1),
            _ => Err(Error::ChannelMismatch {
                select: self.to_string(),
                channels,
            }),
        }
    }
}

impl fmt::Display for ChannelSelect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelSelect::Left => "left",
            ChannelSelect::Right => "right",
            ChannelSelect::Mono => "mono",
        })
    }
}

impl FromStr for ChannelSelect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" | "1" | "ch1" | "channel1" => Ok(ChannelSelect::Left),
            "right" | "r" | "2" | "ch2" | "channel2" => Ok(ChannelSelect::Right),
            "mono" | "m" => Ok(ChannelSelect::Mono),
            other => Err(Error::invalid(format!(
                "unknown channel selection '{other}'"
            ))),
        }
    }
}

fn map_hound(path: &Path, err: hound::Error) -> Error {
    match err {
        hound::Error::IoError(e) => Error::io(path, e),
        hound::Error::Unsupported => Error::UnsupportedFormat("not a PCM integer WAV file".into()),
        other => Error::Wav(other),
    }
}

/// Load one channel of a PCM WAV file, scaled to [-1, 1).
///
/// 8-bit data is unsigned with a 128 offset, 16-bit is two's complement;
/// both are divided by their full-scale magnitude (128 and 32768).
pub fn read_wav(path: impl AsRef<Path>, select: ChannelSelect) -> Result<EcgRecord> {
    let path = path.as_ref();
    let mut reader = WavReader::open(path).map_err(|e| map_hound(path, e))?;
    let spec = reader.spec();
    if spec.sample_format != SampleFormat::Int {
        return Err(Error::UnsupportedFormat("floating-point samples".into()));
    }
    let format = WavFormat {
        sample_rate_hz: spec.sample_rate,
        channels: spec.channels,
        bits_per_sample: spec.bits_per_sample,
    };
    format.validate()?;
    let channel = select.index(spec.channels)?;
    let stride = spec.channels as usize;
    let scale = format.full_scale();

    let interleaved: Vec<i32> = match spec.bits_per_sample {
        8 => reader
            .samples::<i8>()
            .map(|s| s.map(i32::from))
            .collect::<std::result::Result<_, _>>(),
        _ => reader
            .samples::<i16>()
            .map(|s| s.map(i32::from))
            .collect::<std::result::Result<_, _>>(),
    }
    .map_err(|e| map_hound(path, e))?;

    let samples = interleaved
        .iter()
        .skip(channel)
        .step_by(stride)
        .map(|&v| v as f64 / scale)
        .collect();
    EcgRecord::new(
        samples,
        spec.sample_rate as f64,
        format!("{}:{}", path.display(), select),
    )
}

/// Quantize and write a record as PCM. Samples outside [-1, 1] are clipped
/// (with a warning); stereo output carries the record on both channels.
pub fn write_wav(record: &EcgRecord, path: impl AsRef<Path>, format: WavFormat) -> Result<()> {
    let path = path.as_ref();
    format.validate()?;
    if integral_rate(record.sample_rate_hz())? != format.sample_rate_hz {
        return Err(Error::invalid(format!(
            "record sampled at {} Hz but format says {} Hz",
            record.sample_rate_hz(),
            format.sample_rate_hz
        )));
    }
    let clipped = record.samples().iter().filter(|x| x.abs() > 1.0).count();
    if clipped > 0 {
        log::warn!(
            "{}: clipping {clipped} samples outside [-1, 1]",
            path.display()
        );
    }

    let spec = WavSpec {
        channels: format.channels,
        sample_rate: format.sample_rate_hz,
        bits_per_sample: format.bits_per_sample,
        sample_format: SampleFormat::Int,
    };
    let mut writer = WavWriter::create(path, spec).map_err(|e| map_hound(path, e))?;
    let scale = format.full_scale();
    for &x in record.samples() {
        let q = (x * scale).round().clamp(-scale, scale - 1.0);
        for _ in 0..format.channels {
            let res = if format.bits_per_sample == 8 {
                writer.write_sample(q as i8)
            } else {
                writer.write_sample(q as i16)
            };
            res.map_err(|e| map_hound(path, e))?;
        }
    }
    writer.finalize().map_err(|e| map_hound(path, e))
}

/// `t_seconds,amplitude`, one row per sample.
pub fn write_record_csv<W: Write>(record: &EcgRecord, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t_seconds", "amplitude"])?;
    for (i, x) in record.samples().iter().enumerate() {
        w.write_record([record.time_of(i).to_string(), x.to_string()])?;
    }
    w.flush().map_err(|e| Error::io("csv output", e))
}
