//! Planar diagrams from a bottom-to-top sweep.
//!
//! A word of moves acts on a row of strand positions: `Cup(i)` opens two
//! new strands at `i, i + 1`, `Cap(i)` joins the strands at `i, i + 1`, and
//! `Cross` crosses them. The picture is planar by construction. A word may
//! leave strands open at the top; those ends are then read left to right.

use rand::Rng;

use super::{Crossing, PlanarDiagram, Sign};
use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Cup(usize),
    Cap(usize),
    /// Crosses the strands at `at` and `at + 1`; `left_over` puts the strand
    /// arriving from the lower left on top.
    Cross {
        at: usize,
        left_over: bool,
    },
}

/// A planar diagram with open ends on its top line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenDiagram {
    pub n_arcs: usize,
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
    /// Arc meeting each top position, left to right.
    pub ends: Vec<usize>,
}

const BL: usize = 0;
const BR: usize = 1;
const TR: usize = 2;
const TL: usize = 3;
const THROUGH: [usize; 4] = [TR, TL, BL, BR];
const CCW: [usize; 4] = [BR, TR, TL, BL];
const CCW_MIRRORED: [usize; 4] = [BL, TL, TR, BR];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Port {
    Corner(usize, usize),
    Top(usize),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidDiagram(msg.into())
}

/// Sweeps `moves`, orients every strand and reads off PD crossings.
///
/// With `tail_parity = Some(p)` every open strand must run from a top
/// position of parity `p` to one of the other parity. `mirrored` reflects
/// the picture in a horizontal line, which reverses the cyclic order at
/// each crossing. `flip` chooses the direction of each closed component.
pub fn trace(
    moves: &[Move],
    mirrored: bool,
    tail_parity: Option<usize>,
    flip: &mut dyn FnMut() -> bool,
) -> Result<OpenDiagram> {
    let mut pos: Vec<usize> = Vec::new();
    let mut ports: Vec<Vec<Port>> = Vec::new();
    let mut caps: Vec<(usize, usize)> = Vec::new();
    let mut over_left: Vec<bool> = Vec::new();
    let mut corners: Vec<[usize; 4]> = Vec::new();
    let new_edge = |ports: &mut Vec<Vec<Port>>| {
        ports.push(Vec::new());
        ports.len() - 1
    };
    for (step, mv) in moves.iter().enumerate() {
        match *mv {
            Move::Cup(i) => {
                if i > pos.len() {
                    return Err(bad(format!("move {}: cup at {i} outside the row", step + 1)));
                }
                let e = new_edge(&mut ports);
                pos.splice(i..i, [e, e]);
            }
            Move::Cap(i) => {
                if i + 1 >= pos.len() {
                    return Err(bad(format!("move {}: cap at {i} outside the row", step + 1)));
                }
                let (x, y) = (pos[i], pos[i + 1]);
                pos.drain(i..i + 2);
                caps.push((x, y));
            }
            Move::Cross { at, left_over } => {
                if at + 1 >= pos.len() {
                    return Err(bad(format!(
                        "move {}: crossing at {at} outside the row",
                        step + 1
                    )));
                }
                let c = corners.len();
                let (bl, br) = (pos[at], pos[at + 1]);
                let (tl, tr) = (new_edge(&mut ports), new_edge(&mut ports));
                let mut here = [0; 4];
                for (corner, e) in [(BL, bl), (BR, br), (TR, tr), (TL, tl)] {
                    ports[e].push(Port::Corner(c, corner));
                    here[corner] = e;
                }
                corners.push(here);
                over_left.push(left_over);
                pos[at] = tl;
                pos[at + 1] = tr;
            }
        }
    }
    for (j, &e) in pos.iter().enumerate() {
        ports[e].push(Port::Top(j));
    }

    // arcs are edges joined through caps
    let mut ds = DisjointSets::new(ports.len());
    for &(x, y) in &caps {
        ds.union(x, y);
    }
    let mut arc_of_root = vec![usize::MAX; ports.len()];
    let mut arc_ports: Vec<Vec<Port>> = Vec::new();
    let mut free_loops = 0;
    let mut grouped: Vec<Vec<Port>> = vec![Vec::new(); ports.len()];
    let mut has_edge = vec![false; ports.len()];
    for (e, p) in ports.iter().enumerate() {
        let r = ds.find(e);
        has_edge[r] = true;
        grouped[r].extend_from_slice(p);
    }
    for r in 0..ports.len() {
        if !has_edge[r] {
            continue;
        }
        match grouped[r].len() {
            0 => free_loops += 1,
            2 => {
                arc_of_root[r] = arc_ports.len();
                arc_ports.push(grouped[r].clone());
            }
            k => unreachable!("an arc has {k} ends"),
        }
    }
    let arc_at = |ds: &mut DisjointSets, e: usize| arc_of_root[ds.find(e)];
    let corner_arcs: Vec<[usize; 4]> = corners.iter().map(|c| c.map(|e| arc_at(&mut ds, e))).collect();
    let top_arcs: Vec<usize> = pos.iter().map(|&e| arc_at(&mut ds, e)).collect();
    let arc_of_port = |p: Port| match p {
        Port::Corner(c, k) => corner_arcs[c][k],
        Port::Top(j) => top_arcs[j],
    };
    let other_end = |arc: usize, p: Port| {
        let [a, b] = [arc_ports[arc][0], arc_ports[arc][1]];
        if a == p {
            b
        } else {
            a
        }
    };

    // orient each component by walking it; head[arc] is where the arc ends
    let n_arcs = arc_ports.len();
    let mut head: Vec<Option<Port>> = vec![None; n_arcs];
    let walk = |start: Port, head: &mut Vec<Option<Port>>| -> (Vec<usize>, Port) {
        let mut tail = start;
        let mut visited = Vec::new();
        loop {
            let arc = arc_of_port(tail);
            if head[arc].is_some() {
                return (visited, tail);
            }
            let h = other_end(arc, tail);
            head[arc] = Some(h);
            visited.push(arc);
            match h {
                Port::Corner(c, k) => tail = Port::Corner(c, THROUGH[k]),
                Port::Top(_) => return (visited, h),
            }
        }
    };
    let reverse = |arcs: &[usize], head: &mut Vec<Option<Port>>| {
        for &a in arcs {
            let h = head[a].unwrap();
            head[a] = Some(other_end(a, h));
        }
    };
    for j in 0..top_arcs.len() {
        if head[top_arcs[j]].is_some() {
            continue;
        }
        let (arcs, end) = walk(Port::Top(j), &mut head);
        let Port::Top(k) = end else {
            unreachable!("open strands end on the top line")
        };
        if let Some(p) = tail_parity {
            if j % 2 == k % 2 {
                return Err(bad(format!(
                    "strand joins top positions {j} and {k} of equal parity"
                )));
            }
            if j % 2 != p {
                reverse(&arcs, &mut head);
            }
        }
    }
    for arc in 0..n_arcs {
        if head[arc].is_some() {
            continue;
        }
        let (arcs, _) = walk(arc_ports[arc][0], &mut head);
        if flip() {
            reverse(&arcs, &mut head);
        }
    }

    let ccw = if mirrored { CCW_MIRRORED } else { CCW };
    let crossings = corner_arcs
        .iter()
        .enumerate()
        .map(|(c, arcs)| {
            let is_head = |k: usize| head[arcs[k]] == Some(Port::Corner(c, k));
            let (under, over) = if over_left[c] {
                ([BR, TL], [BL, TR])
            } else {
                ([BL, TR], [BR, TL])
            };
            let u = if is_head(under[0]) { under[0] } else { under[1] };
            let o = if is_head(over[0]) { over[0] } else { over[1] };
            let start = ccw.iter().position(|&k| k == u).unwrap();
            let order: [usize; 4] = std::array::from_fn(|s| ccw[(start + s) % 4]);
            let sign = if order[3] == o {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Crossing::new(order.map(|k| arcs[k]), sign)
        })
        .collect();
    Ok(OpenDiagram {
        n_arcs,
        crossings,
        free_loops,
        ends: top_arcs,
    })
}

/// Closed diagram from a word that ends with an empty row.
pub fn build_closed(moves: &[Move], flip: &mut dyn FnMut() -> bool) -> Result<PlanarDiagram> {
    let open = trace(moves, false, None, flip)?;
    if !open.ends.is_empty() {
        return Err(bad(format!("{} strands left open", open.ends.len())));
    }
    PlanarDiagram::new(open.n_arcs, open.crossings, open.free_loops)
}

/// A random word with exactly `crossings` crossings that leaves `open_ends`
/// strands (an even number) at the top and never exceeds `max_width`.
pub fn random_word<R: Rng + ?Sized>(
    rng: &mut R,
    crossings: usize,
    open_ends: usize,
    max_width: usize,
) -> Vec<Move> {
    let max_width = max_width.max(open_ends).max(2);
    let mut moves = Vec::new();
    let mut width = 0;
    let mut placed = 0;
    while placed < crossings {
        if width < 2 {
            moves.push(Move::Cup(0));
            width += 2;
            continue;
        }
        match rng.gen_range(0..4) {
            0 if width + 2 <= max_width => {
                moves.push(Move::Cup(rng.gen_range(0..=width)));
                width += 2;
            }
            1 if width >= 4 => {
                moves.push(Move::Cap(rng.gen_range(0..width - 1)));
                width -= 2;
            }
            _ => {
                moves.push(Move::Cross {
                    at: rng.gen_range(0..width - 1),
                    left_over: rng.gen(),
                });
                placed += 1;
            }
        }
    }
    while width > open_ends {
        moves.push(Move::Cap(rng.gen_range(0..width - 1)));
        width -= 2;
    }
    while width < open_ends {
        moves.push(Move::Cup(rng.gen_range(0..=width)));
        width += 2;
    }
    if width == 0 && moves.is_empty() {
        moves.extend([Move::Cup(0), Move::Cap(0)]);
    }
    moves
}

/// A random closed diagram with at most `max_crossings` crossings.
pub fn random_closed<R: Rng + ?Sized>(rng: &mut R, max_crossings: usize) -> PlanarDiagram {
    let n = rng.gen_range(0..=max_crossings);
    let moves = random_word(rng, n, 0, 6);
    let flips: Vec<bool> = (0..moves.len()).map(|_| rng.gen()).collect();
    let mut it = flips.into_iter();
    build_closed(&moves, &mut || it.next().unwrap_or(false)).expect("random words are well formed")
}
