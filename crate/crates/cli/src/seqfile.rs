//! Sequence files: one rational per line, `num/den` or a bare integer, the
//! line number (from zero) being the sequence index.

use std::path::Path;

use partex::rational::parse_rational;
use partex::Rational;

use crate::CliError;

pub fn read_terms(path: &Path) -> Result<Vec<Rational>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    text.lines()
        .enumerate()
        .map(|(index, line)| {
            parse_rational(line).map_err(|source| CliError::SequenceParse {
                path: path.display().to_string(),
                line: index + 1,
                source,
            })
        })
        .collect()
}
