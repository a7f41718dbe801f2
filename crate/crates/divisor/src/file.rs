//! The `divisor:` text format.
//!
//! After the header, each line holds `LABEL : COEFF` (further entries may
//! follow on the same line as `LABEL:COEFF` without inner spaces), or
//! `equation: POLY` for the most recent label. Entries may also follow the
//! header on its own line. Coefficients are `p/q` rationals, constant
//! expressions such as `1 + 2*i`, or tower-element JSON objects.

use crate::cdivisor::CDivisor;
use crate::error::DivisorError;
use numtower::{json, Tower, TowerElem};

fn perr(line: usize, col: usize, msg: impl Into<String>) -> DivisorError {
    DivisorError::Parse { line, col, msg: msg.into() }
}

fn coefficient(text: &str, ctx: &mut Tower, line: usize, col: usize) -> Result<TowerElem, DivisorError> {
    let t = text.trim();
    let c = if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| perr(line, col, e.to_string()))?;
        json::from_json_in(ctx, &v).map_err(|e| perr(line, col, e.to_string()))?
    } else {
        symbolic::parse_constant(t).map_err(|e| perr(line, col + e.col - 1, e.msg))?
    };
    if c.tower().height() > ctx.height() && ctx.is_prefix_of(c.tower()) {
        *ctx = c.tower().clone();
    }
    if c.is_zero() {
        return Err(perr(line, col, "coefficients must be nonzero"));
    }
    Ok(c)
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && l != "equation" && l.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '.')
}

fn entries(
    text: &str,
    line: usize,
    col0: usize,
    d: &mut CDivisor,
    last: &mut Option<String>,
    ctx: &mut Tower,
) -> Result<(), DivisorError> {
    let (label, rest) = text.split_once(':').ok_or_else(|| perr(line, col0, "expected LABEL : COEFF"))?;
    let label = label.trim();
    let rest_col = col0 + label.len() + 1 + (text.len() - label.len() - 1 - rest.len());
    if label == "equation" {
        let l = last.as_ref().ok_or_else(|| perr(line, col0, "equation before any label"))?;
        let eq = symbolic::parse_poly(rest).map_err(|e| perr(line, rest_col + e.col - 1, e.msg))?;
        return d.set_equation(l, eq);
    }
    if !valid_label(label) {
        return Err(perr(line, col0, format!("invalid label '{label}'")));
    }
    if d.coeff(label).is_some() {
        return Err(perr(line, col0, format!("duplicate label '{label}'")));
    }
    let rest_trim = rest.trim_start();
    let col = rest_col + (rest.len() - rest_trim.len());
    if rest_trim.starts_with('{') {
        let c = coefficient(rest_trim, ctx, line, col)?;
        d.add(label, c);
        *last = Some(label.to_string());
        return Ok(());
    }
    let mut parts = rest_trim.splitn(2, char::is_whitespace);
    let first = parts.next().unwrap_or("");
    let tail = parts.next().unwrap_or("").trim_start();
    let more = !tail.is_empty() && tail.split_whitespace().all(|w| w.contains(':'));
    let coeff_text = if more { first } else { rest_trim };
    let c = coefficient(coeff_text, ctx, line, col)?;
    d.add(label, c);
    *last = Some(label.to_string());
    if more {
        let tail_col = col + (rest_trim.len() - tail.len());
        let mut off = 0;
        for w in tail.split_whitespace() {
            let at = tail[off..].find(w).unwrap() + off;
            entries(w, line, tail_col + at, d, last, ctx)?;
            off = at + w.len();
        }
    }
    Ok(())
}

/// Parses a `divisor:` document.
pub fn parse_divisor(text: &str) -> Result<CDivisor, DivisorError> {
    let mut d = CDivisor::new();
    let mut seen_header = false;
    let mut last = None;
    let mut ctx = Tower::rationals();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = body.len() - body.trim_start().len() + 1;
        if !seen_header {
            let rest = trimmed.strip_prefix("divisor:").ok_or_else(|| perr(line, col, "expected the header 'divisor:'"))?;
            seen_header = true;
            let r = rest.trim_start();
            if !r.is_empty() {
                entries(r, line, col + trimmed.len() - r.len(), &mut d, &mut last, &mut ctx)?;
            }
            continue;
        }
        entries(trimmed, line, col, &mut d, &mut last, &mut ctx)?;
    }
    if !seen_header {
        return Err(perr(1, 1, "empty document"));
    }
    if d.is_empty() {
        return Err(perr(1, 1, "a divisor needs at least one component"));
    }
    Ok(d)
}
