use ecg_core::acquisition::read_wav;
use ecg_core::filters::{apply_filter, frequency_response, FilterRegistry};
use serde::Serialize;

use super::emit_record;
use crate::args::FilterCmd;
use crate::failure::CliResult;
use crate::output::{print_json, OutputDir};

#[derive(Debug, Serialize)]
struct FilterSummary {
    design: String,
    order: usize,
    b: Vec<f64>,
    a: Vec<f64>,
    stable: bool,
    response_sample_rate_hz: f64,
    filtered_samples: Option<usize>,
}

pub fn run(cmd: &FilterCmd) -> CliResult<()> {
    let registry = FilterRegistry::with_builtins();
    if cmd.list {
        for name in registry.names() {
            println!("{name}");
        }
        return Ok(());
    }
    let coeffs = registry.create(&cmd.design, &cmd.settings())?.design()?;
    let input = cmd
        .input
        .as_ref()
        .map(|p| read_wav(p, cmd.channel))
        .transpose()?;
    let fs = input.as_ref().map_or(cmd.fs, |r| r.sample_rate_hz());
    let response = frequency_response(&coeffs, cmd.points, fs)?;

    let emit = cmd.emit.resolved();
    let mut out = OutputDir::create(&cmd.out.out_dir)?;
    if emit.csv {
        out.write_with("coefficients.csv", |w| Ok(coeffs.write_csv(w)?))?;
        out.write_with("response.csv", |w| Ok(response.write_csv(w)?))?;
    }
    let filtered = match &input {
        Some(record) => {
            let y = apply_filter(&coeffs, record)?;
            emit_record(&mut out, emit, "filtered", &y)?;
            Some(y.len())
        }
        None => None,
    };

    print_json(&FilterSummary {
        design: cmd.design.clone(),
        order: coeffs.order(),
        b: coeffs.b().to_vec(),
        a: coeffs.a().to_vec(),
        stable: coeffs.is_stable(),
        response_sample_rate_hz: fs,
        filtered_samples: filtered,
    });
    Ok(())
}
