use ecg_core::acquisition::{read_wav, synthesize_ecg, SynthConfig};
use ecg_core::detection::{compute_bpm, rr_intervals, DetectorRegistry, DetectorSettings};
use ecg_core::filters::{remove_baseline, remove_powerline, single_sided_spectrum};
use ecg_core::hrv::{DEFAULT_BIN_WIDTH_S, DEFAULT_RESAMPLE_HZ};
use serde::Serialize;

use super::{analyze_rr, emit_record, emit_spectrum, no_beats, HrvSummary};
use crate::args::PipelineCmd;
use crate::failure::CliResult;
use crate::output::{print_json, OutputDir};

#[derive(Debug, Serialize)]
struct Source {
    kind: &'static str,
    path: Option<String>,
    channel: Option<String>,
    synth: Option<SynthConfig>,
}

#[derive(Debug, Serialize)]
struct NotchParams {
    mains_hz: f64,
    bandwidth_hz: f64,
}

#[derive(Debug, Serialize)]
struct Params {
    baseline_removal: bool,
    notch: Option<NotchParams>,
    detector: &'static str,
    detector_settings: DetectorSettings,
}

#[derive(Debug, Serialize)]
struct PipelineReport {
    source: Source,
    sample_rate_hz: f64,
    samples: usize,
    duration_s: f64,
    beat_count: usize,
    bpm: f64,
    #[serde(flatten)]
    hrv: HrvSummary,
    params: Params,
    files: Vec<String>,
}

pub fn run(cmd: &PipelineCmd) -> CliResult<()> {
    let detector_name = cmd.detector.detector.registry_name();
    let settings = cmd.detector.settings();
    let detector = DetectorRegistry::with_builtins().create(detector_name, &settings)?;

    let (record, source) = match &cmd.input {
        Some(path) => (
            read_wav(path, cmd.channel)?,
            Source {
                kind: "wav",
                path: Some(path.display().to_string()),
                channel: Some(cmd.channel.to_string()),
                synth: None,
            },
        ),
        None => {
            let cfg = cmd.synth_args.config();
            let (record, _) = synthesize_ecg(&cfg)?;
            let source = Source {
                kind: "synth",
                path: None,
                channel: None,
                synth: Some(cfg),
            };
            (record, source)
        }
    };

    let emit = cmd.emit.resolved();
    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    emit_record(&mut out, emit, "input", &record)?;

    let mut signal = record;
    if !cmd.no_baseline {
        let (corrected, baseline) = remove_baseline(&signal)?;
        emit_record(&mut out, emit, "baseline", &baseline)?;
        emit_record(&mut out, emit, "corrected", &corrected)?;
        signal = corrected;
    }
    if !cmd.no_notch {
        let (refined, interference) = remove_powerline(&signal, cmd.mains, cmd.notch_bandwidth)?;
        emit_record(&mut out, emit, "interference", &interference)?;
        emit_record(&mut out, emit, "refined", &refined)?;
        signal = refined;
    }
    if signal.len() >= 2 {
        emit_spectrum(&mut out, emit, "spectrum", &single_sided_spectrum(&signal)?)?;
    }

    let beats = detector.detect(&signal)?;
    if emit.csv {
        out.write_with("beats.csv", |w| Ok(beats.write_csv(w)?))?;
    }
    if beats.len() < 2 {
        return Err(no_beats(beats.len()));
    }
    let bpm = compute_bpm(beats.len(), signal.duration_s())?;
    let rr = rr_intervals(&beats)?;
    let hrv = analyze_rr(
        &rr,
        DEFAULT_BIN_WIDTH_S,
        DEFAULT_RESAMPLE_HZ,
        &mut out,
        emit,
    )?;

    let mut report = PipelineReport {
        source,
        sample_rate_hz: signal.sample_rate_hz(),
        samples: signal.len(),
        duration_s: signal.duration_s(),
        beat_count: beats.len(),
        bpm,
        hrv,
        params: Params {
            baseline_removal: !cmd.no_baseline,
            notch: (!cmd.no_notch).then_some(NotchParams {
                mains_hz: cmd.mains,
                bandwidth_hz: cmd.notch_bandwidth,
            }),
            detector: detector_name,
            detector_settings: settings,
        },
        files: Vec::new(),
    };
    report.files = out.written().to_vec();
    if emit.json {
        report.files.push("report.json".into());
        out.write_json("report.json", &report)?;
    }
    print_json(&report);
    Ok(())
}
