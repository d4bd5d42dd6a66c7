use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::failure::{CliResult, Failure};

/// Directory that receives every file a subcommand writes.
#[derive(Debug, Clone)]
pub struct OutputDir {
    root: PathBuf,
    written: Vec<String>,
}

impl OutputDir {
    pub fn create(root: &Path) -> CliResult<Self> {
        fs::create_dir_all(root).map_err(|e| Failure::io(root, e))?;
        Ok(Self {
            root: root.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    /// Names of the files written so far, in write order.
    pub fn written(&self) -> &[String] {
        &self.written
    }

    /// Open `name` for writing, hand it to `fill`, and flush.
    pub fn write_with<F>(&mut self, name: &str, fill: F) -> CliResult<()>
    where
        F: FnOnce(&mut BufWriter<File>) -> CliResult<()>,
    {
        let path = self.path(name);
        let file = File::create(&path).map_err(|e| Failure::io(&path, e))?;
        let mut w = BufWriter::new(file);
        fill(&mut w)?;
        w.flush().map_err(|e| Failure::io(&path, e))?;
        self.written.push(name.to_string());
        Ok(())
    }

    pub fn write_text(&mut self, name: &str, text: &str) -> CliResult<()> {
        let path = self.path(name);
        self.write_with(name, |w| {
            w.write_all(text.as_bytes())
                .map_err(|e| Failure::io(&path, e))
        })
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> CliResult<()> {
        self.write_text(name, &(to_json(value) + "\n"))
    }

    /// Record a file written by library code that takes a path directly.
    pub fn note(&mut self, name: &str) {
        self.written.push(name.to_string());
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// A closed stdout (e.g. piped into `head`) is not an error.
pub fn print_json<T: Serialize>(value: &T) {
    let _ = writeln!(io::stdout().lock(), "{}", to_json(value));
}
