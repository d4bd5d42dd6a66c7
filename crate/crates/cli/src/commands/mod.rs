mod design;
mod detect;
mod filter;
mod hrv;
mod pipeline;
mod schema;
mod spectrum;
mod synth;

pub use design::run as design;
pub use detect::run as detect;
pub use filter::run as filter;
pub use hrv::run as hrv;
pub use pipeline::run as pipeline;
pub use schema::run as schema;
pub use spectrum::run as spectrum;
pub use synth::run as synth;

use ecg_core::acquisition::{read_wav, write_record_csv};
use ecg_core::export::svg::{self, PlotKind};
use ecg_core::filters::AmplitudeSpectrum;
use ecg_core::hrv::{
    hrv_statistics, poincare, rr_histogram, rr_spectrum, BandPowers, HrvStatistics, RrSeries,
};
use ecg_core::{EcgRecord, Error};
use serde::Serialize;

use crate::args::{EmitArgs, InputArgs};
use crate::failure::{CliResult, Failure};
use crate::output::OutputDir;

fn load(input: &InputArgs) -> CliResult<EcgRecord> {
    Ok(read_wav(&input.input, input.channel)?)
}

fn emit_record(
    out: &mut OutputDir,
    emit: EmitArgs,
    stem: &str,
    record: &EcgRecord,
) -> CliResult<()> {
    if emit.csv {
        out.write_with(&format!("{stem}.csv"), |w| Ok(write_record_csv(record, w)?))?;
    }
    if emit.svg {
        let t: Vec<f64> = (0..record.len()).map(|i| record.time_of(i)).collect();
        let plot = svg::plot(
            PlotKind::Line,
            stem,
            "time (s)",
            "amplitude",
            &t,
            record.samples(),
        );
        out.write_text(&format!("{stem}.svg"), &plot)?;
    }
    Ok(())
}

fn emit_spectrum(
    out: &mut OutputDir,
    emit: EmitArgs,
    stem: &str,
    spectrum: &AmplitudeSpectrum,
) -> CliResult<()> {
    if emit.csv {
        out.write_with(&format!("{stem}.csv"), |w| Ok(spectrum.write_csv(w)?))?;
    }
    if emit.svg {
        let plot = svg::plot(
            PlotKind::Line,
            stem,
            "frequency (Hz)",
            "amplitude",
            &spectrum.frequencies_hz,
            &spectrum.amplitude,
        );
        out.write_text(&format!("{stem}.svg"), &plot)?;
    }
    Ok(())
}

/// Run an analysis whose only acceptable failure is too little data.
fn optional<T>(result: ecg_core::Result<T>) -> CliResult<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::Degenerate(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PoincareSummary {
    pub sd1_s: f64,
    pub sd2_s: f64,
}

/// HRV results. Each part is null when the series is too short for it.
#[derive(Debug, Clone, Serialize)]
pub struct HrvSummary {
    pub interval_count: usize,
    pub statistics: Option<HrvStatistics>,
    pub poincare: Option<PoincareSummary>,
    pub band_powers: Option<BandPowers>,
}

fn analyze_rr(
    rr: &RrSeries,
    bin_width_s: f64,
    resample_hz: f64,
    out: &mut OutputDir,
    emit: EmitArgs,
) -> CliResult<HrvSummary> {
    if emit.csv {
        out.write_with("rr.csv", |w| Ok(rr.write_csv(w)?))?;
    }
    let histogram = rr_histogram(rr, bin_width_s)?;
    if emit.csv {
        out.write_with("rr_histogram.csv", |w| Ok(histogram.write_csv(w)?))?;
    }
    if emit.svg {
        let centers: Vec<f64> = histogram
            .bin_edges_s
            .windows(2)
            .map(|e| 0.5 * (e[0] + e[1]))
            .collect();
        let counts: Vec<f64> = histogram.counts.iter().map(|&c| c as f64).collect();
        let plot = svg::plot(
            PlotKind::Bars,
            "RR histogram",
            "RR (s)",
            "count",
            &centers,
            &counts,
        );
        out.write_text("rr_histogram.svg", &plot)?;
    }

    let statistics = optional(hrv_statistics(rr))?;

    let descriptor = optional(poincare(rr))?;
    if let Some(p) = &descriptor {
        if emit.csv {
            out.write_with("poincare.csv", |w| Ok(p.write_csv(w)?))?;
        }
        if emit.svg {
            let (xs, ys): (Vec<f64>, Vec<f64>) = p.points.iter().copied().unzip();
            let plot = svg::plot(
                PlotKind::Scatter,
                "Poincaré",
                "RR[n] (s)",
                "RR[n+1] (s)",
                &xs,
                &ys,
            );
            out.write_text("poincare.svg", &plot)?;
        }
    }

    let spectrum = optional(rr_spectrum(rr, resample_hz))?;
    if let Some(s) = &spectrum {
        emit_spectrum(out, emit, "rr_spectrum", &s.spectrum)?;
    }

    Ok(HrvSummary {
        interval_count: rr.len(),
        statistics,
        poincare: descriptor.map(|p| PoincareSummary {
            sd1_s: p.sd1_s,
            sd2_s: p.sd2_s,
        }),
        band_powers: spectrum.map(|s| s.band_powers()),
    })
}

fn no_beats(found: usize) -> Failure {
    Failure::degenerate(format!(
        "degenerate signal: {found} beat(s) detected, at least 2 are needed for an RR interval"
    ))
}
