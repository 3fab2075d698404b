use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Line-oriented writer that remembers the chosen format.
pub struct Sink<W: Write> {
    inner: W,
    format: Format,
}

impl<W: Write> Sink<W> {
    pub fn new(inner: W, format: Format) -> Self {
        Sink { inner, format }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.inner, "{s}")
    }

    /// One compact JSON document per line.
    pub fn json(&mut self, v: &serde_json::Value) -> io::Result<()> {
        serde_json::to_writer(&mut self.inner, v)?;
        writeln!(self.inner)
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}
