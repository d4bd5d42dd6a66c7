//! Analog front-end arithmetic: AD620 gain law, RC corners, op-amp stage
//! gains and cascade noise, plus a report that checks the reference build.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sum of the AD620's two trimmed 24.7 kΩ internal resistors.
pub const AD620_INTERNAL_OHMS: f64 = 49_400.0;

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} must be positive, got {v}")))
    }
}

/// `G = 1 + 49.4 kΩ / Rg`.
pub fn ad620_gain(rg_ohms: f64) -> Result<f64> {
    positive("Rg", rg_ohms)?;
    Ok(1.0 + AD620_INTERNAL_OHMS / rg_ohms)
}

/// Inverse of [`ad620_gain`].
pub fn rg_for_gain(gain: f64) -> Result<f64> {
    if !(gain.is_finite() && gain > 1.0) {
        return Err(Error::invalid(format!(
            "AD620 gain must exceed 1, got {gain}"
        )));
    }
    Ok(AD620_INTERNAL_OHMS / (gain - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ad620Design {
    pub rg_ohms: f64,
    pub gain: f64,
}

impl Ad620Design {
    pub fn from_rg(rg_ohms: f64) -> Result<Self> {
        Ok(Self {
            rg_ohms,
            gain: ad620_gain(rg_ohms)?,
        })
    }
}

/// `f = 1 / (2π R C)`.
pub fn rc_cutoff(r_ohms: f64, c_farads: f64) -> Result<f64> {
    positive("R", r_ohms)?;
    positive("C", c_farads)?;
    Ok(1.0 / (2.0 * PI * r_ohms * c_farads))
}

/// The known half of an RC pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum KnownComponent {
    Resistance(f64),
    Capacitance(f64),
}

/// Solve `1/(2πRC) = cutoff` for whichever component is not given. The
/// result is ohms when a capacitance is known and farads otherwise.
pub fn component_for_cutoff(cutoff_hz: f64, known: KnownComponent) -> Result<f64> {
    positive("cutoff", cutoff_hz)?;
    let v = match known {
        KnownComponent::Resistance(r) => {
            positive("R", r)?;
            r
        }
        KnownComponent::Capacitance(c) => {
            positive("C", c)?;
            c
        }
    };
    Ok(1.0 / (2.0 * PI * cutoff_hz * v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CornerKind {
    HighpassCorner,
    LowpassCorner,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RcStage {
    pub r_ohms: f64,
    pub c_farads: f64,
    pub cutoff_hz: f64,
    pub kind: CornerKind,
}

impl RcStage {
    pub fn new(r_ohms: f64, c_farads: f64, kind: CornerKind) -> Result<Self> {
        Ok(Self {
            r_ohms,
            c_farads,
            cutoff_hz: rc_cutoff(r_ohms, c_farads)?,
            kind,
        })
    }
}

/// One amplifier in a chain: noise referred to its input, then gain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CascadeStage {
    pub gain: f64,
    pub input_noise: f64,
}

/// Output noise of a chain, `((n1 A1 + n2) A2 + n3) A3 ...`.
pub fn cascade_output_noise(stages: &[CascadeStage]) -> Result<f64> {
    if stages.is_empty() {
        return Err(Error::invalid("cascade needs at least one stage"));
    }
    if stages
        .iter()
        .any(|s| !(s.gain.is_finite() && s.input_noise.is_finite() && s.input_noise >= 0.0))
    {
        return Err(Error::invalid(
            "stage gains and noises must be finite, noise nonnegative",
        ));
    }
    Ok(stages
        .iter()
        .fold(0.0, |acc, s| (acc + s.input_noise) * s.gain))
}

/// `|Rf / Rin|` of an inverting stage.
pub fn inverting_gain(r_feedback_ohms: f64, r_input_ohms: f64) -> Result<f64> {
    positive("feedback resistance", r_feedback_ohms)?;
    positive("input resistance", r_input_ohms)?;
    Ok(r_feedback_ohms / r_input_ohms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The stated value contradicts the stated design equation; both are
    /// reported and the row does not gate the overall result.
    PaperDiscrepant,
}

/// One computed value compared against its published target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignCheck {
    pub name: String,
    pub computed: f64,
    pub target: f64,
    pub relative_tolerance: f64,
    pub status: CheckStatus,
    pub note: String,
}

impl DesignCheck {
    fn compare(name: &str, computed: f64, target: f64, tol: f64, note: &str) -> Self {
        let ok = ((computed - target) / target).abs() <= tol;
        Self {
            name: name.into(),
            computed,
            target,
            relative_tolerance: tol,
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            note: note.into(),
        }
    }

    fn discrepant_if_off(mut self) -> Self {
        if self.status == CheckStatus::Fail {
            self.status = CheckStatus::PaperDiscrepant;
        }
        self
    }

    pub fn relative_error(&self) -> f64 {
        ((self.computed - self.target) / self.target).abs()
    }
}

/// AD620 gain table: `(1% Rg, gain, 0.1% Rg, gain)` per row.
pub const GAIN_TABLE: [(f64, f64, f64, f64); 9] = [
    (49_900.0, 1.990, 49_300.0, 2.002),
    (12_400.0, 4.984, 12_400.0, 4.984),
    (5_490.0, 9.998, 5_490.0, 9.998),
    (2_610.0, 19.93, 2_610.0, 19.93),
    (1_000.0, 50.40, 1_010.0, 49.91),
    (499.0, 100.0, 499.0, 100.0),
    (249.0, 199.4, 249.0, 199.4),
    (100.0, 495.0, 98.8, 501.0),
    (49.9, 991.0, 49.3, 1003.0),
];

/// Tables are rounded to about four figures.
pub const GAIN_TABLE_TOLERANCE: f64 = 0.005;

/// Checks every resistor/gain pair of [`GAIN_TABLE`], 1% column first.
pub fn verify_gain_table() -> Vec<DesignCheck> {
    GAIN_TABLE
        .iter()
        .flat_map(|&(rg1, g1, rg01, g01)| [(rg1, g1, "1%"), (rg01, g01, "0.1%")])
        .map(|(rg, target, column)| {
            let computed = 1.0 + AD620_INTERNAL_OHMS / rg;
            DesignCheck::compare(
                &format!("ad620 gain, Rg {rg} Ω ({column} column)"),
                computed,
                target,
                GAIN_TABLE_TOLERANCE,
                "",
            )
        })
        .collect()
}

/// Component values of the reference circuit.
pub mod reference {
    pub const HIGHPASS_R_OHMS: f64 = 3.18e6;
    pub const HIGHPASS_C_FARADS: f64 = 1e-6;
    pub const LOWPASS_R_OHMS: f64 = 106e3;
    pub const LOWPASS_C_FARADS: f64 = 0.01e-6;
    pub const DRL_LOWPASS_R_OHMS: f64 = 10e3;
    pub const DRL_LOWPASS_C_FARADS: f64 = 106e-9;
    pub const DRL_FEEDBACK_OHMS: f64 = 1e6;
    pub const DRL_INPUT_OHMS: f64 = 25e3;
    pub const DC_SHIFT_R1_OHMS: f64 = 5e3;
    pub const DC_SHIFT_R2_OHMS: f64 = 125e3;
    /// Stated gain of the filter stage; its resistor network is not given.
    pub const FILTER_STAGE_GAIN: f64 = 5.0;
    /// Rg actually fitted, and the gain claimed for it.
    pub const REALIZED_RG_OHMS: f64 = 27e3;
    pub const REALIZED_CLAIMED_GAIN: f64 = 10.0;
}

/// Computed values of the reference front end and how they compare.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontEndReport {
    pub instrumentation_gain: f64,
    pub highpass_corner_hz: f64,
    pub lowpass_corner_hz: f64,
    pub drl_gain: f64,
    pub drl_lowpass_hz: f64,
    pub dc_shift_gain: f64,
    pub filter_stage_gain: f64,
    /// instrumentation × filter stage × DC shift, using the computed AD620 gain.
    pub midband_gain: f64,
    pub checks: Vec<DesignCheck>,
}

impl FrontEndReport {
    /// True when every check that is not flagged as discrepant passes.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

const CORNER_TOLERANCE: f64 = 0.01;

/// Evaluate the reference circuit.
///
/// The 0.05 Hz corner blocks drift (high-pass) and the 150 Hz corner limits
/// bandwidth (low-pass).
pub fn build_reference_design() -> FrontEndReport {
    use reference::*;

    let hp = 1.0 / (2.0 * PI * HIGHPASS_R_OHMS * HIGHPASS_C_FARADS);
    let lp = 1.0 / (2.0 * PI * LOWPASS_R_OHMS * LOWPASS_C_FARADS);
    let drl_lp = 1.0 / (2.0 * PI * DRL_LOWPASS_R_OHMS * DRL_LOWPASS_C_FARADS);
    let drl_gain = DRL_FEEDBACK_OHMS / DRL_INPUT_OHMS;
    let dc_shift_gain = DC_SHIFT_R2_OHMS / DC_SHIFT_R1_OHMS;
    let ina_gain = 1.0 + AD620_INTERNAL_OHMS / REALIZED_RG_OHMS;

    let checks = vec![
        DesignCheck::compare(
            "high-pass corner (Hz)",
            hp,
            0.05,
            CORNER_TOLERANCE,
            "3.18 MΩ, 1 µF",
        ),
        DesignCheck::compare(
            "low-pass corner (Hz)",
            lp,
            150.0,
            CORNER_TOLERANCE,
            "106 kΩ, 0.01 µF",
        ),
        DesignCheck::compare("DC-shift gain", dc_shift_gain, 25.0, 0.0, "125 kΩ / 5 kΩ"),
        DesignCheck::compare("DRL feedback gain", drl_gain, 40.0, 0.0, "1 MΩ / 25 kΩ"),
        DesignCheck::compare(
            "DRL low-pass (Hz)",
            drl_lp,
            150.0,
            CORNER_TOLERANCE,
            "10 kΩ, 106 nF",
        ),
        DesignCheck::compare(
            "filter stage gain",
            FILTER_STAGE_GAIN,
            5.0,
            0.0,
            "stated constant, not derived",
        ),
        DesignCheck::compare(
            "realized AD620 gain, Rg 27 kΩ",
            ina_gain,
            REALIZED_CLAIMED_GAIN,
            GAIN_TABLE_TOLERANCE,
            "gain law gives 2.83 for 27 kΩ; claimed 10",
        )
        .discrepant_if_off(),
    ];

    FrontEndReport {
        instrumentation_gain: ina_gain,
        highpass_corner_hz: hp,
        lowpass_corner_hz: lp,
        drl_gain,
        drl_lowpass_hz: drl_lp,
        dc_shift_gain,
        filter_stage_gain: FILTER_STAGE_GAIN,
        midband_gain: ina_gain * FILTER_STAGE_GAIN * dc_shift_gain,
        checks,
    }
}
