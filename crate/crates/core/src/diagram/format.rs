//! Text format for closed diagrams.
//!
//! ```text
//! # right-handed trefoil
//! pd 6
//! X 1 5 2 4 +1
//! X 3 1 4 6 +1
//! X 5 3 6 2 +1
//! unknots 0
//! ```
//!
//! `pd n` comes first and fixes the arc labels `1..=n`. Each `X` line lists
//! four labels counterclockwise from the incoming under-strand and then the
//! sign (`+1`, `-1`, `+` or `-`). `unknots k` adds crossing-free circles.
//! `#` starts a comment; blank lines are ignored. Every label must occur
//! exactly twice, once entering and once leaving a crossing.

use std::fmt::Write;

use super::{check_arc_ends, Crossing, End, PlanarDiagram, Sign};
use crate::error::{Error, Result};

/// Non-blank lines with comments removed, split into tokens.
pub(crate) struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        let items = src
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let body = line.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = body.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Self { items, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    /// Line number to blame for a premature end of input.
    pub(crate) fn last_line(&self) -> usize {
        self.items.last().map_or(1, |(l, _)| *l)
    }
}

pub(crate) fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

pub(crate) fn parse_sign(token: &str, line: usize) -> Result<Sign> {
    match token {
        "+1" | "+" | "1" => Ok(Sign::Positive),
        "-1" | "-" => Ok(Sign::Negative),
        _ => Err(Error::parse(line, format!("bad crossing sign {token:?}"))),
    }
}

pub(crate) fn parse_label(token: &str, line: usize, n_arcs: usize) -> Result<usize> {
    let a = parse_count(token, line, "an arc label")?;
    if a == 0 || a > n_arcs {
        return Err(Error::parse(line, format!("arc label {a} outside 1..={n_arcs}")));
    }
    Ok(a - 1)
}

/// Parses the tokens of an `X a b c d sign` line.
pub(crate) fn parse_crossing(tokens: &[&str], line: usize, n_arcs: usize) -> Result<Crossing> {
    if tokens.len() != 6 {
        return Err(Error::parse(line, "a crossing needs four arc labels and a sign"));
    }
    let mut slots = [0; 4];
    for (slot, token) in slots.iter_mut().zip(&tokens[1..5]) {
        *slot = parse_label(token, line, n_arcs)?;
    }
    Ok(Crossing::new(slots, parse_sign(tokens[5], line)?))
}

pub fn parse_diagram(src: &str) -> Result<PlanarDiagram> {
    let mut lines = Lines::new(src);
    let (header_line, header) = lines
        .next_line()
        .ok_or_else(|| Error::parse(1, "empty input, expected `pd <arcs>`"))?;
    if header.len() != 2 || header[0] != "pd" {
        return Err(Error::parse(header_line, "expected `pd <arcs>`"));
    }
    let n_arcs = parse_count(header[1], header_line, "an arc count")?;
    let mut crossings = Vec::new();
    let mut crossing_lines = Vec::new();
    let mut unknots: Option<usize> = None;
    while let Some((line, tokens)) = lines.next_line() {
        match tokens[0] {
            "X" => {
                crossings.push(parse_crossing(&tokens, line, n_arcs)?);
                crossing_lines.push(line);
            }
            "unknots" => {
                if unknots.is_some() {
                    return Err(Error::parse(line, "repeated `unknots` line"));
                }
                if tokens.len() != 2 {
                    return Err(Error::parse(line, "expected `unknots <count>`"));
                }
                unknots = Some(parse_count(tokens[1], line, "a circle count")?);
            }
            other => return Err(Error::parse(line, format!("unexpected {other:?}"))),
        }
    }
    let ends = crossings.iter().zip(&crossing_lines).flat_map(|(c, &line)| {
        (0..4).map(move |s| {
            let end = if c.is_head(s) { End::Head } else { End::Tail };
            (c.slots[s], end, line)
        })
    });
    check_arc_ends(n_arcs, ends).map_err(|(at, msg)| Error::parse(at.unwrap_or(header_line), msg))?;
    let free = unknots.unwrap_or(0);
    PlanarDiagram::new(n_arcs, crossings, free).map_err(|e| Error::parse(header_line, e.to_string()))
}

fn sign_token(s: Sign) -> &'static str {
    match s {
        Sign::Positive => "+1",
        Sign::Negative => "-1",
    }
}

pub(crate) fn write_crossings(out: &mut String, crossings: &[Crossing]) {
    for c in crossings {
        let [a, b, x, y] = c.slots.map(|s| s + 1);
        writeln!(out, "X {a} {b} {x} {y} {}", sign_token(c.sign)).unwrap();
    }
}

pub fn write_diagram(d: &PlanarDiagram) -> String {
    let mut out = format!("pd {}\n", d.n_arcs());
    write_crossings(&mut out, d.crossings());
    if d.free_loops() > 0 {
        writeln!(out, "unknots {}", d.free_loops()).unwrap();
    }
    out
}
