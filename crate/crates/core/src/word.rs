//! Text syntax for elements.
//!
//! Tokens are separated by whitespace, commas or dots. A token is a signed
//! atom index (`2`, `-3`), `D` or `D^k` for a power of Δ, or `e` for the
//! identity. When every atom index is a single digit, an unsigned digit
//! string such as `12132143` stands for the positive word `1 2 1 3 2 1 4 3`.
//! The output of [`NormalForm`]'s `Display` parses back to the same element.

use crate::error::{GarsideError, Result};
use crate::normal_form::NormalForm;
use crate::structure::GarsideStructure;

fn parse_error(token: &str, reason: impl Into<String>) -> GarsideError {
    GarsideError::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// Parses `text` and returns the normal form of the element it spells.
pub fn parse_word<G: GarsideStructure>(text: &str, group: G) -> Result<NormalForm<G>> {
    let mut x = NormalForm::identity(group);
    let digits = group.atom_count() <= 9;
    for token in text
        .split(|c: char| c.is_whitespace() || c == ',' || c == '.')
        .filter(|t| !t.is_empty())
    {
        if token == "e" {
            continue;
        }
        if let Some(rest) = token.strip_prefix('D') {
            let k = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1,
                Some(exp) => exp
                    .parse::<i64>()
                    .map_err(|e| parse_error(token, e.to_string()))?,
                None => return Err(parse_error(token, "expected `D` or `D^k`")),
            };
            x.mul_delta_power(k);
            continue;
        }
        let letters: Vec<i64> = if digits && token.len() > 1 && token.bytes().all(|b| b.is_ascii_digit()) {
            token.bytes().map(|b| (b - b'0') as i64).collect()
        } else {
            vec![token
                .parse::<i64>()
                .map_err(|e| parse_error(token, e.to_string()))?]
        };
        let tail = NormalForm::from_word(group, &letters)?;
        x = x.multiply(&tail);
    }
    Ok(x)
}

/// Parses a single simple element given as a positive word.
pub fn parse_simple<G: GarsideStructure>(text: &str, group: G) -> Result<G::Simple> {
    let x = parse_word(text, group)?;
    match (x.inf(), x.canonical_length()) {
        (0, 0) => Ok(group.identity()),
        (1, 0) => Ok(group.delta()),
        (0, 1) => Ok(x.factors()[0].clone()),
        _ => Err(parse_error(text, "not a simple element")),
    }
}
