use crate::args::{SchemaCmd, SchemaName};
use crate::failure::CliResult;

pub const SYNTH: &str = include_str!("../../schemas/synth.schema.json");
pub const PIPELINE: &str = include_str!("../../schemas/pipeline.schema.json");
pub const DESIGN: &str = include_str!("../../schemas/design.schema.json");
pub const ERROR: &str = include_str!("../../schemas/error.schema.json");

pub fn run(cmd: &SchemaCmd) -> CliResult<()> {
    let text = match cmd.name {
        SchemaName::Synth => SYNTH,
        SchemaName::Pipeline => PIPELINE,
        SchemaName::Design => DESIGN,
        SchemaName::Error => ERROR,
    };
    print!("{text}");
    Ok(())
}
