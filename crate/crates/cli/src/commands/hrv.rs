use std::path::Path;

use ecg_core::detection::{rr_intervals, BeatAnnotations};
use ecg_core::hrv::RrSeries;

use super::{analyze_rr, no_beats};
use crate::args::HrvCmd;
use crate::failure::{CliResult, Failure};
use crate::output::{print_json, OutputDir};

/// First column of a headed CSV, parsed as seconds.
fn first_column(path: &Path) -> CliResult<Vec<f64>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| Failure::io(path, e))?;
    let mut values = Vec::new();
    for (row, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Failure::io(path, e))?;
        let field = rec.get(0).unwrap_or("").trim();
        let v: f64 = field.parse().map_err(|_| {
            Failure::validation(format!(
                "{}: row {}: '{field}' is not a number",
                path.display(),
                row + 1
            ))
        })?;
        values.push(v);
    }
    Ok(values)
}

pub fn run(cmd: &HrvCmd) -> CliResult<()> {
    let rr = match (&cmd.beats, &cmd.rr) {
        (Some(path), _) => {
            let times = first_column(path)?;
            let n = times.len();
            let beats = BeatAnnotations::new(times, vec![0.0; n])?;
            if beats.len() < 2 {
                return Err(no_beats(beats.len()));
            }
            rr_intervals(&beats)?
        }
        (None, Some(path)) => RrSeries::new(first_column(path)?)?,
        (None, None) => unreachable!("clap requires one series"),
    };
    if rr.is_empty() {
        return Err(Failure::degenerate("degenerate signal: empty RR series"));
    }
    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    let summary = analyze_rr(
        &rr,
        cmd.bin_width,
        cmd.resample_hz,
        &mut out,
        cmd.emit.resolved(),
    )?;
    print_json(&summary);
    Ok(())
}
