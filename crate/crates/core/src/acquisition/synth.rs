use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::{EcgRecord, Error, Result};

/// Each bump is treated as occupying this many widths (±2.5σ) when
/// checking that a beat fits inside one period.
const FOOTPRINT_WIDTHS: f64 = 5.0;

/// One Gaussian component of a beat, placed relative to the R peak.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianWave {
    pub amplitude: f64,
    pub center_offset_s: f64,
    pub width_s: f64,
}

impl GaussianWave {
    pub const fn new(amplitude: f64, center_offset_s: f64, width_s: f64) -> Self {
        Self {
            amplitude,
            center_offset_s,
            width_s,
        }
    }

    fn value_at(&self, dt: f64) -> f64 {
        let z = (dt - self.center_offset_s) / self.width_s;
        self.amplitude * (-0.5 * z * z).exp()
    }

    /// Half-extent past which the bump is treated as zero.
    fn reach(&self) -> f64 {
        self.center_offset_s.abs() + 8.0 * self.width_s
    }
}

/// P, Q, R, S and T components of a single beat.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveSet {
    pub p: GaussianWave,
    pub q: GaussianWave,
    pub r: GaussianWave,
    pub s: GaussianWave,
    pub t: GaussianWave,
}

impl WaveSet {
    /// Morphology of a resting beat at 60 bpm, R amplitude 1.5.
    pub const fn standard() -> Self {
        Self {
            p: GaussianWave::new(0.15, -0.20, 0.025),
            q: GaussianWave::new(-0.15, -0.03, 0.010),
            r: GaussianWave::new(1.5, 0.0, 0.010),
            s: GaussianWave::new(-0.25, 0.03, 0.010),
            t: GaussianWave::new(0.30, 0.30, 0.040),
        }
    }

    /// The standard beat compressed in time by `sqrt(60 / bpm)` above 60 bpm,
    /// so it still fits one period up to 240 bpm.
    pub fn for_heart_rate(bpm: f64) -> Self {
        let k = (60.0 / bpm).min(1.0).sqrt();
        Self::standard().time_scaled(k)
    }

    pub fn time_scaled(&self, k: f64) -> Self {
        let scale =
            |w: GaussianWave| GaussianWave::new(w.amplitude, w.center_offset_s * k, w.width_s * k);
        Self {
            p: scale(self.p),
            q: scale(self.q),
            r: scale(self.r),
            s: scale(self.s),
            t: scale(self.t),
        }
    }

    /// Same timing, every amplitude multiplied by `gain`.
    pub fn amplitude_scaled(&self, gain: f64) -> Self {
        let scale =
            |w: GaussianWave| GaussianWave::new(w.amplitude * gain, w.center_offset_s, w.width_s);
        Self {
            p: scale(self.p),
            q: scale(self.q),
            r: scale(self.r),
            s: scale(self.s),
            t: scale(self.t),
        }
    }

    pub fn waves(&self) -> [GaussianWave; 5] {
        [self.p, self.q, self.r, self.s, self.t]
    }

    fn footprint_s(&self) -> f64 {
        self.waves()
            .iter()
            .map(|w| FOOTPRINT_WIDTHS * w.width_s)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Sinusoid {
    pub amplitude: f64,
    pub frequency_hz: f64,
}

impl Sinusoid {
    pub const fn new(amplitude: f64, frequency_hz: f64) -> Self {
        Self {
            amplitude,
            frequency_hz,
        }
    }

    fn at(&self, t: f64) -> f64 {
        self.amplitude * (2.0 * PI * self.frequency_hz * t).sin()
    }
}

/// Parameters of the synthetic ECG generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub heart_rate_bpm: f64,
    pub duration_s: f64,
    pub sample_rate_hz: f64,
    pub wave_set: WaveSet,
    pub baseline_wander: Sinusoid,
    pub mains: Sinusoid,
    pub noise_sigma: f64,
    pub rng_seed: u64,
}

impl SynthConfig {
    /// Clean signal: no wander, no mains, no noise.
    pub fn new(heart_rate_bpm: f64, duration_s: f64, sample_rate_hz: f64) -> Self {
        Self {
            heart_rate_bpm,
            duration_s,
            sample_rate_hz,
            wave_set: WaveSet::for_heart_rate(heart_rate_bpm),
            baseline_wander: Sinusoid::new(0.0, 0.25),
            mains: Sinusoid::new(0.0, 50.0),
            noise_sigma: 0.0,
            rng_seed: 0,
        }
    }

    pub fn period_s(&self) -> f64 {
        60.0 / self.heart_rate_bpm
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must be positive, got {v}")))
            }
        };
        positive("heart_rate_bpm", self.heart_rate_bpm)?;
        positive("duration_s", self.duration_s)?;
        positive("sample_rate_hz", self.sample_rate_hz)?;
        for w in self.wave_set.waves() {
            positive("wave width_s", w.width_s)?;
            if !(w.amplitude.is_finite() && w.center_offset_s.is_finite()) {
                return Err(Error::invalid("wave parameters must be finite"));
            }
        }
        let r = self.wave_set.r.amplitude;
        let others = [
            self.wave_set.p,
            self.wave_set.q,
            self.wave_set.s,
            self.wave_set.t,
        ];
        if others.iter().any(|w| w.amplitude.abs() >= r) {
            return Err(Error::invalid(
                "R amplitude must exceed the magnitude of every other wave",
            ));
        }
        if self.period_s() <= self.wave_set.footprint_s() {
            return Err(Error::invalid(format!(
                "beat period {:.4} s does not exceed the wave footprint {:.4} s",
                self.period_s(),
                self.wave_set.footprint_s()
            )));
        }
        if !(self.noise_sigma.is_finite() && self.noise_sigma >= 0.0) {
            return Err(Error::invalid("noise_sigma must be nonnegative"));
        }
        if self.mains.frequency_hz != 50.0 && self.mains.frequency_hz != 60.0 {
            return Err(Error::invalid("mains frequency must be 50 or 60 Hz"));
        }
        if !(self.baseline_wander.amplitude.is_finite()
            && self.baseline_wander.frequency_hz.is_finite()
            && self.mains.amplitude.is_finite())
        {
            return Err(Error::invalid("wander and mains parameters must be finite"));
        }
        Ok(())
    }
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self::new(72.0, 10.0, 500.0)
    }
}

/// R-peak times of a synthesized record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundTruth {
    pub beat_times_s: Vec<f64>,
    pub config: SynthConfig,
}

impl GroundTruth {
    pub fn beat_count(&self) -> usize {
        self.beat_times_s.len()
    }
}

/// Sum of Gaussian beats, baseline sinusoid, mains sinusoid and white noise.
///
/// R peaks sit at `period/2 + k*period` for every such time below the
/// duration. Output is a pure function of the config (including seed).
pub fn synthesize_ecg(config: &SynthConfig) -> Result<(EcgRecord, GroundTruth)> {
    config.validate()?;
    let fs = config.sample_rate_hz;
    let n = (config.duration_s * fs).round() as usize;
    let period = config.period_s();

    let beat_times_s: Vec<f64> = (0..)
        .map(|k| period * (k as f64 + 0.5))
        .take_while(|&t| t < config.duration_s)
        .collect();

    let mut samples: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 / fs;
            config.baseline_wander.at(t) + config.mains.at(t)
        })
        .collect();

    for &beat in &beat_times_s {
        for wave in config.wave_set.waves() {
            let lo = ((beat - wave.reach()) * fs).floor().max(0.0) as usize;
            let hi = (((beat + wave.reach()) * fs).ceil().max(0.0) as usize).min(n);
            for (i, x) in samples.iter_mut().enumerate().take(hi).skip(lo) {
                *x += wave.value_at(i as f64 / fs - beat);
            }
        }
    }

    if config.noise_sigma > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
        let normal = Normal::new(0.0, config.noise_sigma)
            .map_err(|e| Error::invalid(format!("noise distribution: {e}")))?;
        for x in samples.iter_mut() {
            *x += normal.sample(&mut rng);
        }
    }

    let record = EcgRecord::new(
        samples,
        fs,
        format!("synth:{}bpm:seed{}", config.heart_rate_bpm, config.rng_seed),
    )?;
    Ok((
        record,
        GroundTruth {
            beat_times_s,
            config: config.clone(),
        },
    ))
}
