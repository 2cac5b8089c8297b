//! Branch, curve and germ syntax on top of the expression parser.
//!
//! * branch: `<m>:<expression in u>`, e.g. `8:u^10+u^11`; a leading `swap`
//!   exchanges the coordinates, so `swap 2:u^3` is `(u^3, u^2)`.
//! * curve file: one branch per line; blank lines and `#` comments skipped.
//! * germ: `<p>|<q>` for `(x, p, q)`.

use germs::mapgerm::CorankOneGerm;
use germs::poly::{Polynomial, Var};
use germs::puiseux::{PlaneCurveGerm, PuiseuxBranch};

use crate::expr::{parse_polynomial, ParseError, ParseErrorKind};
use crate::CliError;

fn syntax(msg: impl Into<String>, line: usize, col: usize) -> CliError {
    CliError::Parse(ParseError { kind: ParseErrorKind::Syntax(msg.into()), line, col })
}

/// Shifts the column of an error raised on a substring starting at `offset`.
fn shifted(e: ParseError, line: usize, offset: usize) -> CliError {
    let col = if e.line == 1 { e.col + offset } else { e.col };
    CliError::Parse(ParseError { line: e.line + line - 1, col, ..e })
}

fn only_vars(p: &Polynomial, allowed: &[Var], what: &str) -> Result<(), CliError> {
    match p.variables().into_iter().find(|v| !allowed.contains(v)) {
        Some(v) => Err(CliError::Input(format!("{what} may not involve {v}"))),
        None => Ok(()),
    }
}

fn branch_on_line(src: &str, line: usize) -> Result<PuiseuxBranch, CliError> {
    let trimmed = src.trim_start();
    let mut offset = src.len() - trimmed.len();
    let (swap, rest) = match trimmed.strip_prefix("swap") {
        Some(r) if r.starts_with(char::is_whitespace) => (true, r),
        _ => (false, trimmed),
    };
    if swap {
        offset += 4;
    }
    let Some((m_src, y_src)) = rest.split_once(':') else {
        return Err(syntax("expected '<m>:<expression in u>'", line, offset + 1));
    };
    let m: u64 = m_src
        .trim()
        .parse()
        .map_err(|_| syntax(format!("'{}' is not a multiplicity", m_src.trim()), line, offset + 1))?;
    let y_offset = offset + m_src.len() + 1;
    let y = parse_polynomial(y_src).map_err(|e| shifted(e, line, y_offset))?;
    only_vars(&y, &[Var::U], "a branch")?;
    let terms = y.terms().map(|(mono, c)| (mono.exp(Var::U) as u64, c.clone()));
    let b = PuiseuxBranch::new(m, terms)?;
    Ok(if swap { b.swapped() } else { b })
}

pub fn parse_branch(src: &str) -> Result<PuiseuxBranch, CliError> {
    branch_on_line(src, 1)
}

pub fn parse_curve(text: &str) -> Result<PlaneCurveGerm, CliError> {
    let mut branches = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        branches.push(branch_on_line(content, i + 1)?);
    }
    if branches.is_empty() {
        return Err(CliError::Input("curve file has no branches".into()));
    }
    Ok(PlaneCurveGerm::new(branches)?)
}

pub fn parse_germ(src: &str) -> Result<CorankOneGerm, CliError> {
    let Some((p_src, q_src)) = src.split_once('|') else {
        return Err(syntax("expected '<p>|<q>'", 1, 1));
    };
    let p = parse_polynomial(p_src)?;
    let q = parse_polynomial(q_src).map_err(|e| shifted(e, 1, p_src.len() + 1))?;
    for c in [&p, &q] {
        only_vars(c, &[Var::X, Var::Y], "a germ coordinate")?;
    }
    Ok(CorankOneGerm::new(p, q)?)
}

/// An unfolding term in `x, y, t`.
pub fn parse_delta(src: &str) -> Result<Polynomial, CliError> {
    let d = parse_polynomial(src)?;
    only_vars(&d, &[Var::X, Var::Y, Var::T], "an unfolding term")?;
    Ok(d)
}

/// `m1,k1;m2,k2;...`
pub fn parse_multi(src: &str) -> Result<(Vec<u64>, Vec<usize>), CliError> {
    let mut ms = Vec::new();
    let mut ks = Vec::new();
    let mut col = 1;
    for part in src.split(';') {
        let bad = || syntax(format!("expected 'm,k', found '{}'", part.trim()), 1, col);
        let (m, k) = part.split_once(',').ok_or_else(bad)?;
        ms.push(m.trim().parse().map_err(|_| bad())?);
        ks.push(k.trim().parse().map_err(|_| bad())?);
        col += part.len() + 1;
    }
    Ok((ms, ks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_col(e: CliError) -> (usize, usize) {
        match e {
            CliError::Parse(p) => (p.line, p.col),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn branches() {
        assert_eq!(parse_branch("8:u^10+u^11").unwrap().to_string(), "(u^8, u^10 + u^11)");
        assert_eq!(parse_branch("swap 2:u^3").unwrap().to_string(), "(u^3, u^2)");
        assert_eq!(parse_col(parse_branch("8:u^^2").unwrap_err()), (1, 5));
        assert!(matches!(parse_branch("4:u^6+x"), Err(CliError::Input(_))));
        assert!(matches!(parse_branch("4:u^6"), Err(CliError::Germs(_))));
    }

    #[test]
    fn curves() {
        let g = parse_curve("# two cusps\n2:u^3\n\nswap 2:u^3\n").unwrap();
        assert_eq!(g.branches().len(), 2);
        assert_eq!(parse_col(parse_curve("2:u^3\n3:u^^4").unwrap_err()), (2, 5));
    }

    #[test]
    fn germs() {
        let f = parse_germ("y^16+x*y^13|y^22+x*y^19+x^7*y").unwrap();
        assert_eq!(f.p().to_string(), "y^16 + x*y^13");
        assert_eq!(parse_col(parse_germ("y^2|x*y*").unwrap_err()), (1, 9));
        assert!(matches!(parse_germ("y^2"), Err(CliError::Parse(_))));
        assert_eq!(parse_multi("2,2; 4,3").unwrap(), (vec![2, 4], vec![2, 3]));
    }
}
