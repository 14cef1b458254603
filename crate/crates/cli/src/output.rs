//! Output formats. Plain tables are "index value" rows; plain sequences are
//! bare values, one per line, so they can be fed straight back in as sequence
//! files. CSV always carries a header; JSON sequences are arrays of strings.

use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

pub fn emit_table(
    out: &mut dyn Write,
    format: OutputFormat,
    first_index: usize,
    values: &[String],
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => {
            for (offset, value) in values.iter().enumerate() {
                writeln!(out, "{} {}", first_index + offset, value)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "index,value")?;
            for (offset, value) in values.iter().enumerate() {
                writeln!(out, "{},{}", first_index + offset, value)?;
            }
        }
        OutputFormat::Json => write_json_array(out, values)?,
    }
    Ok(())
}

pub fn emit_sequence(
    out: &mut dyn Write,
    format: OutputFormat,
    values: &[String],
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => {
            for value in values {
                writeln!(out, "{value}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "index,value")?;
            for (index, value) in values.iter().enumerate() {
                writeln!(out, "{index},{value}")?;
            }
        }
        OutputFormat::Json => write_json_array(out, values)?,
    }
    Ok(())
}

pub fn emit_partitions(
    out: &mut dyn Write,
    format: OutputFormat,
    rendered: &[String],
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => {
            for line in rendered {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "count {}", rendered.len())?;
        }
        OutputFormat::Csv => {
            writeln!(out, "index,partition")?;
            for (index, line) in rendered.iter().enumerate() {
                writeln!(out, "{index},{line}")?;
            }
            writeln!(out, "count,{}", rendered.len())?;
        }
        OutputFormat::Json => {
            let document = serde_json::json!({
                "partitions": rendered,
                "count": rendered.len(),
            });
            writeln!(out, "{document}")?;
        }
    }
    Ok(())
}

fn write_json_array(out: &mut dyn Write, values: &[String]) -> io::Result<()> {
    let text = serde_json::to_string(values).expect("string array serialization cannot fail");
    writeln!(out, "{text}")
}
