use ecg_core::frontend::{
    build_reference_design, verify_gain_table, CheckStatus, DesignCheck, FrontEndReport, GAIN_TABLE,
};
use serde::Serialize;

use crate::args::DesignCmd;
use crate::failure::{CliResult, Failure};
use crate::output::print_json;

#[derive(Debug, Serialize)]
struct DesignOutput {
    all_pass: bool,
    front_end: FrontEndReport,
    gain_table: Vec<DesignCheck>,
}

fn status_label(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::PaperDiscrepant => "discrepant",
    }
}

fn print_check(c: &DesignCheck) {
    println!(
        "  {:<42} {:>14.6} {:>12} {:>10.2e}  {}",
        c.name,
        c.computed,
        c.target,
        c.relative_error(),
        status_label(c.status)
    );
    if c.status == CheckStatus::PaperDiscrepant && !c.note.is_empty() {
        println!("  {:<42} note: {}", "", c.note);
    }
}

pub fn run(cmd: &DesignCmd) -> CliResult<()> {
    let front_end = build_reference_design();
    let gain_table = verify_gain_table();
    let all_pass = front_end.all_pass() && gain_table.iter().all(|c| c.status != CheckStatus::Fail);

    if cmd.json {
        print_json(&DesignOutput {
            all_pass,
            front_end,
            gain_table,
        });
    } else {
        println!("front end");
        println!(
            "  instrumentation gain   {:.6}",
            front_end.instrumentation_gain
        );
        println!(
            "  high-pass corner       {:.6} Hz",
            front_end.highpass_corner_hz
        );
        println!(
            "  low-pass corner        {:.6} Hz",
            front_end.lowpass_corner_hz
        );
        println!("  DRL gain               {:.6}", front_end.drl_gain);
        println!(
            "  DRL low-pass           {:.6} Hz",
            front_end.drl_lowpass_hz
        );
        println!("  DC-shift gain          {:.6}", front_end.dc_shift_gain);
        println!(
            "  filter stage gain      {:.6}",
            front_end.filter_stage_gain
        );
        println!("  mid-band gain          {:.6}", front_end.midband_gain);
        println!();
        println!(
            "  {:<42} {:>14} {:>12} {:>10}  status",
            "check", "computed", "target", "rel err"
        );
        front_end.checks.iter().for_each(print_check);
        if cmd.table1 {
            println!();
            println!("gain table (1% column | 0.1% column)");
            println!(
                "  {:>8} {:>8} {:>10} {:<10} | {:>8} {:>8} {:>10} status",
                "Rg (Ω)", "gain", "computed", "status", "Rg (Ω)", "gain", "computed"
            );
            for (row, pair) in GAIN_TABLE.iter().zip(gain_table.chunks(2)) {
                let line = format!(
                    "  {:>8} {:>8} {:>10.4} {:<10} | {:>8} {:>8} {:>10.4} {}",
                    row.0,
                    row.1,
                    pair[0].computed,
                    status_label(pair[0].status),
                    row.2,
                    row.3,
                    pair[1].computed,
                    status_label(pair[1].status)
                );
                println!("{}", line.trim_end());
            }
        }
    }

    if all_pass {
        Ok(())
    } else {
        Err(Failure::validation("front-end design checks failed"))
    }
}
