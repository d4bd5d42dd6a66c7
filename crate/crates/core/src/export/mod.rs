//! Output plumbing shared by the CLI: SVG plots.

pub mod svg;
