//! Input parsing: the compact `a0,a1,a2,a3;n` form and the JSON document
//! form `{"a": [[re,im],...], "n": k}`.

use biquat::{Biquaternion, ComplexScalar};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Domain(String),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

/// A parsed quaternion plus the exponent if the input carried one.
#[derive(Debug, PartialEq)]
pub struct ParsedInput {
    pub a: Biquaternion,
    pub n: Option<u32>,
}

#[derive(Deserialize)]
struct JsonInput {
    a: [[f64; 2]; 4],
    n: Option<u32>,
}

/// Parses either input form. Leading `{` selects the JSON document.
pub fn parse_input(text: &str) -> Result<ParsedInput, InputError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let doc: JsonInput = serde_json::from_str(trimmed)?;
        let comps: Vec<ComplexScalar> = doc
            .a
            .iter()
            .map(|[re, im]| ComplexScalar::new(*re, *im))
            .collect();
        let a = Biquaternion::from_components(comps[0], comps[1], comps[2], comps[3]);
        if !a.is_finite() {
            return Err(InputError::Domain("components must be finite".into()));
        }
        return Ok(ParsedInput {
            a,
            n: validate_n(doc.n)?,
        });
    }
    parse_compact(trimmed)
}

fn validate_n(n: Option<u32>) -> Result<Option<u32>, InputError> {
    if let Some(n) = n {
        if n < 2 {
            return Err(InputError::Domain(format!("n must be at least 2, got {n}")));
        }
    }
    Ok(n)
}

fn parse_compact(text: &str) -> Result<ParsedInput, InputError> {
    let (components_part, n_part) = match text.find(';') {
        Some(split) => (&text[..split], Some((&text[split + 1..], split + 1))),
        None => (text, None),
    };

    let mut components = Vec::with_capacity(4);
    let mut offset = 0;
    for (k, piece) in components_part.split(',').enumerate() {
        if k >= 4 {
            return Err(InputError::Parse {
                pos: offset,
                msg: "expected exactly 4 components".into(),
            });
        }
        components.push(parse_complex(piece, offset)?);
        offset += piece.len() + 1;
    }
    if components.len() != 4 {
        return Err(InputError::Parse {
            pos: components_part.len(),
            msg: format!("expected 4 components, got {}", components.len()),
        });
    }

    let n = match n_part {
        Some((raw, pos)) => {
            let n: u32 = raw.trim().parse().map_err(|_| InputError::Parse {
                pos,
                msg: format!("invalid exponent {raw:?}"),
            })?;
            validate_n(Some(n))?
        }
        None => None,
    };

    let a =
        Biquaternion::from_components(components[0], components[1], components[2], components[3]);
    Ok(ParsedInput { a, n })
}

/// One complex literal: `<re>`, `<im>i`, `<re>+<im>i` or `<re>-<im>i`, with
/// optional signs, decimals and exponents; a bare `i` means `1i`.
fn parse_complex(piece: &str, base: usize) -> Result<ComplexScalar, InputError> {
    let bytes = piece.as_bytes();
    let mut pos = 0;
    let mut re: Option<f64> = None;
    let mut im: Option<f64> = None;

    skip_spaces(bytes, &mut pos);
    if pos == bytes.len() {
        return Err(InputError::Parse {
            pos: base + pos,
            msg: "empty component".into(),
        });
    }
    while pos < bytes.len() {
        let (value, imaginary) = parse_term(piece, bytes, &mut pos, base)?;
        let slot = if imaginary { &mut im } else { &mut re };
        if slot.is_some() {
            return Err(InputError::Parse {
                pos: base + pos,
                msg: format!(
                    "duplicate {} part in component {piece:?}",
                    if imaginary { "imaginary" } else { "real" }
                ),
            });
        }
        *slot = Some(value);
        skip_spaces(bytes, &mut pos);
    }
    Ok(ComplexScalar::new(re.unwrap_or(0.0), im.unwrap_or(0.0)))
}

fn skip_spaces(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos] == b' ' {
        *pos += 1;
    }
}

// One signed term, returning (value, is_imaginary). Consumes a trailing `i`.
fn parse_term(
    piece: &str,
    bytes: &[u8],
    pos: &mut usize,
    base: usize,
) -> Result<(f64, bool), InputError> {
    skip_spaces(bytes, pos);
    let start = *pos;
    let mut sign = 1.0;
    if *pos < bytes.len() && (bytes[*pos] == b'+' || bytes[*pos] == b'-') {
        if bytes[*pos] == b'-' {
            sign = -1.0;
        }
        *pos += 1;
    }
    skip_spaces(bytes, pos);

    // Bare imaginary unit.
    if *pos < bytes.len() && bytes[*pos] == b'i' {
        *pos += 1;
        return Ok((sign, true));
    }

    let digits_start = *pos;
    let mut seen_exp = false;
    while *pos < bytes.len() {
        let b = bytes[*pos];
        let is_number_char = b.is_ascii_digit()
            || b == b'.'
            || b == b'e'
            || b == b'E'
            || ((b == b'+' || b == b'-') && seen_exp && matches!(bytes[*pos - 1], b'e' | b'E'));
        if !is_number_char {
            break;
        }
        if b == b'e' || b == b'E' {
            seen_exp = true;
        }
        *pos += 1;
    }
    if digits_start == *pos {
        return Err(InputError::Parse {
            pos: base + start,
            msg: format!("expected a number in component {piece:?}"),
        });
    }
    let value: f64 = piece[digits_start..*pos]
        .parse()
        .map_err(|_| InputError::Parse {
            pos: base + digits_start,
            msg: format!("invalid number {:?}", &piece[digits_start..*pos]),
        })?;

    let imaginary = if *pos < bytes.len() && bytes[*pos] == b'i' {
        *pos += 1;
        true
    } else {
        false
    };
    Ok((sign * value, imaginary))
}
