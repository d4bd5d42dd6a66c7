use ecg_core::filters::single_sided_spectrum;
use serde::Serialize;

use super::{emit_spectrum, load};
use crate::args::SpectrumCmd;
use crate::failure::CliResult;
use crate::output::{print_json, OutputDir};

#[derive(Debug, Serialize)]
struct SpectrumSummary {
    samples: usize,
    sample_rate_hz: f64,
    bin_width_hz: f64,
    bins: usize,
    dc_amplitude: f64,
    peak_hz: Option<f64>,
    peak_amplitude: Option<f64>,
}

pub fn run(cmd: &SpectrumCmd) -> CliResult<()> {
    let record = load(&cmd.input)?;
    let spectrum = single_sided_spectrum(&record)?;
    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    emit_spectrum(&mut out, cmd.emit.resolved(), "spectrum", &spectrum)?;
    let peak = spectrum.peak();
    print_json(&SpectrumSummary {
        samples: record.len(),
        sample_rate_hz: record.sample_rate_hz(),
        bin_width_hz: spectrum.bin_width_hz(),
        bins: spectrum.amplitude.len(),
        dc_amplitude: spectrum.amplitude[0],
        peak_hz: peak.map(|p| p.0),
        peak_amplitude: peak.map(|p| p.1),
    });
    Ok(())
}
