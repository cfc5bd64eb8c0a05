//! Parser for the `--specialize` flag: comma-separated `var=value` entries
//! where `var` is one of `Q`, `a`, `T` and `value` is `1`, `-1`, or a signed
//! monomial in the remaining variables such as `Q^2`, `-Q^3*T^2` or `Q`.

use fulltwist::{Assignment, Monomial, Replacement, Var};

fn var_of(name: &str) -> Result<Var, String> {
    match name {
        "Q" => Ok(Var::Q),
        "a" => Ok(Var::Alpha),
        "T" => Ok(Var::T),
        other => Err(format!("unknown variable {other:?} (expected Q, a or T)")),
    }
}

fn parse_exponent(text: &str) -> Result<i64, String> {
    text.parse::<i64>()
        .map_err(|_| format!("bad exponent {text:?} (integers only)"))
}

/// Parse one replacement value: `1`, `-1`, or `[-]factor[*factor...]` with
/// `factor = var[^int]`.
fn parse_replacement(value: &str) -> Result<Replacement, String> {
    let (negative, body) = match value.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, value),
    };
    if body.is_empty() {
        return Err("empty substitution value".to_string());
    }
    if body.chars().next().unwrap().is_ascii_digit() {
        let n: i64 = body.parse().map_err(|_| format!("bad integer {body:?}"))?;
        if n != 1 {
            return Err(format!(
                "integer substitutions must be 1 or -1, got {}{body}",
                if negative { "-" } else { "" }
            ));
        }
        return Ok(Replacement::unit(negative));
    }
    let mut mono = Monomial::ONE;
    for factor in body.split('*') {
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => (name, parse_exponent(exp)?),
            None => (factor, 1),
        };
        let var = var_of(name)?;
        let slot = match var {
            Var::Q => &mut mono.dq,
            Var::Alpha => &mut mono.dalpha,
            Var::T => &mut mono.dt,
        };
        *slot = slot.checked_add(exp).ok_or("exponent overflow")?;
    }
    Ok(Replacement::monomial(negative, mono))
}

pub fn parse_assignment(text: &str) -> Result<Assignment, String> {
    let mut assignment = Assignment::new();
    let mut seen: Vec<Var> = Vec::new();
    for entry in text.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            return Err("empty substitution entry".to_string());
        }
        let (name, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("expected var=value, got {entry:?}"))?;
        let var = var_of(name.trim())?;
        if seen.contains(&var) {
            return Err(format!("variable {} substituted twice", var.name()));
        }
        seen.push(var);
        assignment = assignment.substitute(var, parse_replacement(value.trim())?);
    }
    if seen.is_empty() {
        return Err("no substitutions given".to_string());
    }
    // Reject replacements that mention substituted variables up front, so the
    // caller can map the failure to the malformed-specialization exit code.
    for &var in &seen {
        let repl = assignment.get(var).unwrap();
        for other in &seen {
            if repl.mono.exponent(*other) != 0 {
                return Err(format!(
                    "substitution for {} mentions {}, which is itself substituted",
                    var.name(),
                    other.name()
                ));
            }
        }
    }
    Ok(assignment)
}
