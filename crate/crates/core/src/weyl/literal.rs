//! The `t[a1,...,an]*cyc(...)*cyc(...)` element literal.

use std::str::FromStr;

use super::element::ExtAffineElement;
use super::perm::Permutation;
use crate::{Error, Result};

fn parse_err(text: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn parse_list<T: FromStr>(text: &str, inner: &str) -> Result<Vec<T>> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| parse_err(text, format!("bad entry `{}`", s.trim())))
        })
        .collect()
}

/// Strips `name(`…`)` or `name[`…`]` from the front, returning the contents
/// and the remainder.
fn take_call<'a>(rest: &'a str, name: &str, open: char, close: char) -> Option<(&'a str, &'a str)> {
    let body = rest.strip_prefix(name)?.trim_start().strip_prefix(open)?;
    let end = body.find(close)?;
    Some((&body[..end], &body[end + 1..]))
}

/// Parses an element literal. The rank is taken from the translation part;
/// cycle factors multiply left to right as functions.
pub fn parse_element(text: &str) -> Result<ExtAffineElement> {
    let s = text.trim();
    let (inner, mut rest) =
        take_call(s, "t", '[', ']').ok_or_else(|| parse_err(text, "expected `t[...]`"))?;
    let trans: Vec<i64> = parse_list(text, inner)?;
    let n = trans.len();
    let mut perm = Permutation::identity(n);
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix('*')
            .or_else(|| rest.strip_prefix('·'))
            .ok_or_else(|| parse_err(text, format!("unexpected `{rest}`")))?
            .trim_start();
        if let Some(r) = rest.strip_prefix("id") {
            rest = r;
            continue;
        }
        let (inner, r) = take_call(rest, "cyc", '(', ')')
            .ok_or_else(|| parse_err(text, "expected `cyc(...)`"))?;
        let points: Vec<usize> = parse_list(text, inner)?;
        let c = Permutation::cycle(n, &points).map_err(|e| parse_err(text, e.to_string()))?;
        perm = perm.compose(&c);
        rest = r;
    }
    Ok(ExtAffineElement::from_parts(trans, perm))
}

/// Canonical literal: translation, then disjoint cycles sorted by least entry.
pub fn format_element(w: &ExtAffineElement) -> String {
    w.to_string()
}

impl FromStr for ExtAffineElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}
