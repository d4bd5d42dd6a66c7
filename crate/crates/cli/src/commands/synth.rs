use ecg_core::acquisition::{synthesize_ecg, write_wav, WavFormat};
use serde::Serialize;

use crate::args::SynthCmd;
use crate::failure::{CliResult, Failure};
use crate::output::{print_json, OutputDir};

#[derive(Debug, Serialize)]
struct SynthSummary {
    wav: String,
    truth_csv: String,
    samples: usize,
    sample_rate_hz: f64,
    duration_s: f64,
    beat_count: usize,
    heart_rate_bpm: f64,
    seed: u64,
    bits_per_sample: u16,
}

pub fn run(cmd: &SynthCmd) -> CliResult<()> {
    let cfg = cmd.synth.config();
    let (record, truth) = synthesize_ecg(&cfg)?;
    let bits: u16 = cmd.bits.parse().expect("restricted by clap");

    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    let wav_name = format!("{}.wav", cmd.name);
    let truth_name = format!("{}_truth.csv", cmd.name);
    let format = WavFormat::new(cmd.synth.fs, 1, bits)?;
    write_wav(&record, out.path(&wav_name), format)?;
    out.note(&wav_name);
    out.write_with(&truth_name, |w| {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["beat", "time_s"])?;
        for (i, t) in truth.beat_times_s.iter().enumerate() {
            csv.write_record([i.to_string(), t.to_string()])?;
        }
        csv.flush()
            .map_err(|e| Failure::io(&cmd.out.out_dir.join(&truth_name), e))
    })?;

    print_json(&SynthSummary {
        wav: out.path(&wav_name).display().to_string(),
        truth_csv: out.path(&truth_name).display().to_string(),
        samples: record.len(),
        sample_rate_hz: record.sample_rate_hz(),
        duration_s: record.duration_s(),
        beat_count: truth.beat_count(),
        heart_rate_bpm: cfg.heart_rate_bpm,
        seed: cfg.rng_seed,
        bits_per_sample: bits,
    });
    Ok(())
}
