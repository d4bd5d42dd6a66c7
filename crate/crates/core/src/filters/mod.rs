//! Filter design and application, frequency responses and amplitude spectra.

mod apply;
mod cleanup;
mod coeffs;
mod design;
mod registry;
mod response;
mod spectrum;

pub use apply::apply_filter;
pub use cleanup::{remove_baseline, remove_powerline, BASELINE_CUTOFF, BASELINE_ORDER};
pub use coeffs::IirCoefficients;
pub use design::{
    design_butterworth_bandpass, design_butterworth_highpass, design_butterworth_lowpass,
    design_classical, design_iir_notch, ClassicalFilterSpec, FilterKind, NotchSpec,
    MAX_CLASSICAL_ORDER,
};
pub use registry::{FilterDesign, FilterFactory, FilterRegistry, FilterSettings};
pub use response::{frequency_response, magnitude_at, response_at, FrequencyResponse};
pub use spectrum::{dft, inverse_dft, single_sided_spectrum, AmplitudeSpectrum};
