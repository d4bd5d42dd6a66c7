use ecg_core::detection::{compute_bpm, DetectorRegistry, DetectorSettings};
use serde::Serialize;

use super::load;
use crate::args::DetectCmd;
use crate::failure::CliResult;
use crate::output::{print_json, OutputDir};

#[derive(Debug, Serialize)]
struct DetectSummary {
    detector: &'static str,
    detector_settings: DetectorSettings,
    duration_s: f64,
    beat_count: usize,
    bpm: f64,
    beats_csv: Option<String>,
}

pub fn run(cmd: &DetectCmd) -> CliResult<()> {
    let name = cmd.detector.detector.registry_name();
    let settings = cmd.detector.settings();
    let detector = DetectorRegistry::with_builtins().create(name, &settings)?;
    let record = load(&cmd.input)?;
    let beats = detector.detect(&record)?;

    let emit = cmd.emit.resolved();
    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    let beats_csv = if emit.csv {
        out.write_with("beats.csv", |w| Ok(beats.write_csv(w)?))?;
        Some(out.path("beats.csv").display().to_string())
    } else {
        None
    };
    print_json(&DetectSummary {
        detector: name,
        detector_settings: settings,
        duration_s: record.duration_s(),
        beat_count: beats.len(),
        bpm: compute_bpm(beats.len(), record.duration_s())?,
        beats_csv,
    });
    Ok(())
}
