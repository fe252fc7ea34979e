//! Text format for cut presentations.
//!
//! ```text
//! cut 1
//! tangle 1
//! pd 3
//! X 1 3 2 2 +1
//! boundary a1 1 b1 3
//! tangle 2
//! pd 1
//! boundary a1 1 b1 1
//! ```
//!
//! Each tangle section is a diagram block whose labels must each occur
//! twice counting both crossing slots and `boundary` entries. `boundary`
//! names the cut points in order `a1 b1 a2 b2 ...` and may be split over
//! several lines. Points are listed around the cut from the marked one; if
//! the orientations only fit with the marking moved one point along, the
//! labels are rotated accordingly.

use std::fmt::Write;

use super::{CutPresentation, Side, Tangle};
use crate::diagram::{
    check_arc_ends, parse_count, parse_crossing, parse_label, write_crossings, Crossing, End, Lines,
};
use crate::error::{Error, Result};

struct Section {
    header_line: usize,
    n_arcs: usize,
    crossings: Vec<(Crossing, usize)>,
    free_loops: usize,
    boundary: Vec<(usize, usize)>,
}

fn expect_keyword(lines: &mut Lines, words: &[&str]) -> Result<(usize, Vec<String>)> {
    let Some((line, tokens)) = lines.next_line() else {
        return Err(Error::parse(
            lines.last_line(),
            format!("unexpected end of input, expected `{}`", words.join(" ")),
        ));
    };
    if tokens.len() != words.len() + 1 || tokens[..words.len()] != *words {
        return Err(Error::parse(
            line,
            format!("expected `{} <count>`", words.join(" ")),
        ));
    }
    Ok((line, tokens.iter().map(|t| t.to_string()).collect()))
}

fn parse_section(lines: &mut Lines, number: usize, n: usize) -> Result<Section> {
    let (tline, tokens) = lines
        .next_line()
        .ok_or_else(|| Error::parse(lines.last_line(), format!("missing `tangle {number}`")))?;
    if tokens != ["tangle", number.to_string().as_str()] {
        return Err(Error::parse(tline, format!("expected `tangle {number}`")));
    }
    let (header_line, pd) = expect_keyword(lines, &["pd"])?;
    let n_arcs = parse_count(&pd[1], header_line, "an arc count")?;
    let mut section = Section {
        header_line,
        n_arcs,
        crossings: Vec::new(),
        free_loops: 0,
        boundary: Vec::new(),
    };
    let mut seen_unknots = false;
    while let Some((line, tokens)) = lines.peek().cloned() {
        match tokens[0] {
            "tangle" => break,
            "X" => section
                .crossings
                .push((parse_crossing(&tokens, line, n_arcs)?, line)),
            "unknots" => {
                if seen_unknots || tokens.len() != 2 {
                    return Err(Error::parse(line, "expected a single `unknots <count>`"));
                }
                seen_unknots = true;
                section.free_loops = parse_count(tokens[1], line, "a circle count")?;
            }
            "boundary" => {
                if tokens.len() % 2 == 0 {
                    return Err(Error::parse(line, "boundary entries come in name/label pairs"));
                }
                for pair in tokens[1..].chunks(2) {
                    let k = section.boundary.len();
                    let name = format!("{}{}", if k.is_multiple_of(2) { 'a' } else { 'b' }, k / 2 + 1);
                    if pair[0] != name {
                        return Err(Error::parse(
                            line,
                            format!("expected boundary point {name}, found {:?}", pair[0]),
                        ));
                    }
                    section.boundary.push((parse_label(pair[1], line, n_arcs)?, line));
                }
            }
            other => return Err(Error::parse(line, format!("unexpected {other:?}"))),
        }
        lines.next_line();
    }
    if section.boundary.len() != 2 * n {
        return Err(Error::parse(
            header_line,
            format!(
                "tangle {number} lists {} boundary points, the cut has {}",
                section.boundary.len(),
                2 * n
            ),
        ));
    }
    Ok(section)
}

/// Orientation check of a section with its boundary rotated left by `shift`.
fn check_section(s: &Section, side: Side, shift: usize) -> Result<Vec<usize>> {
    let mut boundary = s.boundary.clone();
    boundary.rotate_left(shift);
    let slots = s.crossings.iter().flat_map(|(c, line)| {
        (0..4).map(move |k| {
            let end = if c.is_head(k) { End::Head } else { End::Tail };
            (c.slots[k], end, *line)
        })
    });
    let ends = boundary
        .iter()
        .enumerate()
        .map(|(j, &(a, line))| (a, side.boundary_end(j), line));
    check_arc_ends(s.n_arcs, slots.chain(ends))
        .map_err(|(at, msg)| Error::parse(at.unwrap_or(s.header_line), msg))?;
    Ok(boundary.into_iter().map(|(a, _)| a).collect())
}

pub fn parse_cut(src: &str) -> Result<CutPresentation> {
    let mut lines = Lines::new(src);
    let (line, header) = expect_keyword(&mut lines, &["cut"])?;
    let n = parse_count(&header[1], line, "the number of point pairs")?;
    if n == 0 {
        return Err(Error::parse(line, "a cut needs at least one pair of points"));
    }
    let s1 = parse_section(&mut lines, 1, n)?;
    let s2 = parse_section(&mut lines, 2, n)?;
    if let Some((extra, _)) = lines.next_line() {
        return Err(Error::parse(extra, "unexpected text after tangle 2"));
    }
    let attempt = |shift| -> Result<(Vec<usize>, Vec<usize>)> {
        Ok((
            check_section(&s1, Side::One, shift)?,
            check_section(&s2, Side::Two, shift)?,
        ))
    };
    let (b1, b2) = attempt(0).or_else(|first| attempt(1).map_err(|_| first))?;
    let tangle = |s: &Section, side, boundary| {
        let crossings = s.crossings.iter().map(|(c, _)| *c).collect();
        Tangle::new(side, s.n_arcs, crossings, s.free_loops, boundary)
            .map_err(|e| Error::parse(s.header_line, e.to_string()))
    };
    CutPresentation::new(tangle(&s1, Side::One, b1)?, tangle(&s2, Side::Two, b2)?)
        .map_err(|e| Error::parse(line, e.to_string()))
}

pub fn write_cut(c: &CutPresentation) -> String {
    let mut out = format!("cut {}\n", c.n());
    for side in [Side::One, Side::Two] {
        let t = c.tangle(side);
        writeln!(out, "tangle {}", side.number()).unwrap();
        writeln!(out, "pd {}", t.n_arcs()).unwrap();
        write_crossings(&mut out, t.crossings());
        if t.free_loops() > 0 {
            writeln!(out, "unknots {}", t.free_loops()).unwrap();
        }
        out.push_str("boundary");
        for (j, a) in t.boundary().iter().enumerate() {
            let name = if j % 2 == 0 { 'a' } else { 'b' };
            write!(out, " {name}{} {}", j / 2 + 1, a + 1).unwrap();
        }
        out.push('\n');
    }
    out
}
