//! Parsing of untrusted value syntax: simple-type labels and comma-separated
//! integer vectors. These are the crate's parser entry points and the
//! functions exercised by the fuzz targets; they must never panic.

use crate::rootsys::Series;
use crate::Error;

/// Parse a simple-type label such as `"G2"`, `"a7"`, or a bare series letter
/// (rank supplied separately). Returns the series and the embedded rank, if
/// the label carried one. Validity of the (series, rank) pair is decided at
/// construction time, not here.
pub fn parse_type_label(s: &str) -> Result<(Series, Option<usize>), Error> {
    let t = s.trim();
    let mut chars = t.chars();
    let first = chars
        .next()
        .ok_or_else(|| Error::InvalidInput("empty type label".into()))?;
    let series = Series::from_letter(first).ok_or_else(|| Error::InvalidType(t.to_string()))?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok((series, None));
    }
    let rank: usize = rest
        .parse()
        .map_err(|_| Error::InvalidType(t.to_string()))?;
    Ok((series, Some(rank)))
}

/// Parse a comma-separated integer vector like `"1,0"` or `"-3, 12"`.
pub fn parse_int_vector(s: &str) -> Result<Vec<i64>, Error> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::InvalidInput("empty integer vector".into()));
    }
    t.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {part:?}")))
        })
        .collect()
}
