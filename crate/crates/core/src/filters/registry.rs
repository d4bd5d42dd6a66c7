//! Filter designs addressable by name, for configuration files and the CLI.

use std::collections::BTreeMap;

use super::{
    design_butterworth_bandpass, design_butterworth_highpass, design_butterworth_lowpass,
    design_classical, design_iir_notch, ClassicalFilterSpec, IirCoefficients, NotchSpec,
    BASELINE_CUTOFF, BASELINE_ORDER,
};
use crate::{Error, Result};

/// A fully parameterized design that can produce coefficients.
pub trait FilterDesign: Send + Sync {
    fn name(&self) -> &'static str;

    fn design(&self) -> Result<IirCoefficients>;
}

/// Loose bag of parameters; each factory reads the fields it needs.
/// Frequencies are fractions of Nyquist.
#[derive(Debug, Clone, Default)]
pub struct FilterSettings {
    pub order: Option<usize>,
    pub cutoff: Option<f64>,
    pub cutoff_high: Option<f64>,
    pub notch: Option<NotchSpec>,
    pub classical: Option<ClassicalFilterSpec>,
}

pub type FilterFactory = fn(&FilterSettings) -> Result<Box<dyn FilterDesign>>;

fn required<T: Copy>(v: Option<T>, what: &str, design: &str) -> Result<T> {
    v.ok_or_else(|| Error::invalid(format!("filter '{design}' needs {what}")))
}

struct Lowpass {
    order: usize,
    cutoff: f64,
}

impl FilterDesign for Lowpass {
    fn name(&self) -> &'static str {
        "butterworth-lowpass"
    }

    fn design(&self) -> Result<IirCoefficients> {
        design_butterworth_lowpass(self.order, self.cutoff)
    }
}

struct Highpass {
    order: usize,
    cutoff: f64,
}

impl FilterDesign for Highpass {
    fn name(&self) -> &'static str {
        "butterworth-highpass"
    }

    fn design(&self) -> Result<IirCoefficients> {
        design_butterworth_highpass(self.order, self.cutoff)
    }
}

struct Bandpass {
    order: usize,
    low: f64,
    high: f64,
}

impl FilterDesign for Bandpass {
    fn name(&self) -> &'static str {
        "butterworth-bandpass"
    }

    fn design(&self) -> Result<IirCoefficients> {
        design_butterworth_bandpass(self.order, self.low, self.high)
    }
}

struct Notch(NotchSpec);

impl FilterDesign for Notch {
    fn name(&self) -> &'static str {
        "notch"
    }

    fn design(&self) -> Result<IirCoefficients> {
        design_iir_notch(self.0)
    }
}

struct Classical(ClassicalFilterSpec);

impl FilterDesign for Classical {
    fn name(&self) -> &'static str {
        "classical"
    }

    fn design(&self) -> Result<IirCoefficients> {
        design_classical(&self.0)
    }
}

/// Name → factory table. [`FilterRegistry::with_builtins`] knows
/// `baseline`, `butterworth-lowpass`, `butterworth-highpass`,
/// `butterworth-bandpass`, `notch` and `classical`.
pub struct FilterRegistry {
    factories: BTreeMap<&'static str, FilterFactory>,
}

impl FilterRegistry {
    pub fn empty() -> Self {
        Self {
            factories: BTreeMap::new(),
        }
    }

    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register("baseline", |_| {
            Ok(Box::new(Lowpass {
                order: BASELINE_ORDER,
                cutoff: BASELINE_CUTOFF,
            }))
        });
        reg.register("butterworth-lowpass", |s| {
            Ok(Box::new(Lowpass {
                order: required(s.order, "an order", "butterworth-lowpass")?,
                cutoff: required(s.cutoff, "a cutoff", "butterworth-lowpass")?,
            }))
        });
        reg.register("butterworth-highpass", |s| {
            Ok(Box::new(Highpass {
                order: required(s.order, "an order", "butterworth-highpass")?,
                cutoff: required(s.cutoff, "a cutoff", "butterworth-highpass")?,
            }))
        });
        reg.register("butterworth-bandpass", |s| {
            Ok(Box::new(Bandpass {
                order: required(s.order, "an order", "butterworth-bandpass")?,
                low: required(s.cutoff, "a low cutoff", "butterworth-bandpass")?,
                high: required(s.cutoff_high, "a high cutoff", "butterworth-bandpass")?,
            }))
        });
        reg.register("notch", |s| {
            Ok(Box::new(Notch(required(
                s.notch,
                "a center and bandwidth",
                "notch",
            )?)))
        });
        reg.register("classical", |s| {
            Ok(Box::new(Classical(s.classical.unwrap_or_default())))
        });
        reg
    }

    /// Adds or replaces a design.
    pub fn register(&mut self, name: &'static str, factory: FilterFactory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn create(&self, name: &str, settings: &FilterSettings) -> Result<Box<dyn FilterDesign>> {
        let factory = self.factories.get(name).ok_or_else(|| {
            Error::invalid(format!(
                "unknown filter '{name}' (known: {})",
                self.names().collect::<Vec<_>>().join(", ")
            ))
        })?;
        factory(settings)
    }
}

impl Default for FilterRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
