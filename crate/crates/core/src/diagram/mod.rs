//! Planar link diagrams in PD form and the Kauffman bracket.
//!
//! A crossing lists the arcs at its four corners counterclockwise, starting
//! at the incoming under-strand, so the under-strand runs from slot 0 to
//! slot 2. The over-strand runs from slot 3 to slot 1 at a positive crossing
//! and from slot 1 to slot 3 at a negative one.

mod format;
pub mod morse;
mod skein;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

pub(crate) use format::{parse_count, parse_crossing, parse_label, write_crossings, Lines};
pub use format::{parse_diagram, write_diagram};
pub use skein::bracket_skein;

use crate::error::{Error, Result};
use crate::polyring::{substitute_jones, LaurentPolynomial};
use crate::union_find::DisjointSets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    /// Arc ids (0-based) at the four corners, counterclockwise from the
    /// incoming under-strand.
    pub slots: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(slots: [usize; 4], sign: Sign) -> Self {
        Self { slots, sign }
    }

    /// Slots where an arc enters the crossing.
    pub fn head_slots(&self) -> [usize; 2] {
        match self.sign {
            Sign::Positive => [0, 3],
            Sign::Negative => [0, 1],
        }
    }

    /// Slots where an arc leaves the crossing.
    pub fn tail_slots(&self) -> [usize; 2] {
        match self.sign {
            Sign::Positive => [2, 1],
            Sign::Negative => [2, 3],
        }
    }

    pub fn is_head(&self, slot: usize) -> bool {
        self.head_slots().contains(&slot)
    }
}

/// Corner pairings of the two smoothings: state 0 carries weight `A`,
/// state 1 carries `A^-1`.
pub const SMOOTHINGS: [[(usize, usize); 2]; 2] = [[(0, 1), (2, 3)], [(0, 3), (1, 2)]];

/// Which end of an arc an occurrence represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    Head,
    Tail,
}

/// Checks that each arc in `0..n_arcs` has exactly one head and one tail.
/// On failure returns the origin tag of the offending occurrence (or `None`
/// for a missing one) with a message.
pub(crate) fn check_arc_ends<T: Copy>(
    n_arcs: usize,
    ends: impl IntoIterator<Item = (usize, End, T)>,
) -> std::result::Result<(), (Option<T>, String)> {
    let mut seen: Vec<[u8; 2]> = vec![[0, 0]; n_arcs];
    for (arc, end, origin) in ends {
        if arc >= n_arcs {
            return Err((Some(origin), format!("arc {} out of range 1..={n_arcs}", arc + 1)));
        }
        let k = match end {
            End::Head => 0,
            End::Tail => 1,
        };
        seen[arc][k] += 1;
        if seen[arc][0] + seen[arc][1] > 2 {
            return Err((Some(origin), format!("arc {} appears more than twice", arc + 1)));
        }
        if seen[arc][k] > 1 {
            let what = if k == 0 { "entered" } else { "left" };
            return Err((
                Some(origin),
                format!("arc {} is {what} twice; orientations disagree", arc + 1),
            ));
        }
    }
    if let Some(arc) = seen.iter().position(|s| s[0] + s[1] != 2) {
        return Err((None, format!("arc {} does not appear exactly twice", arc + 1)));
    }
    Ok(())
}

/// A closed oriented link diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanarDiagram {
    n_arcs: usize,
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl PlanarDiagram {
    pub fn new(n_arcs: usize, crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let ends = crossings.iter().enumerate().flat_map(|(i, c)| {
            (0..4).map(move |s| {
                let end = if c.is_head(s) { End::Head } else { End::Tail };
                (c.slots[s], end, i)
            })
        });
        check_arc_ends(n_arcs, ends).map_err(|(at, msg)| {
            Error::InvalidDiagram(match at {
                Some(i) => format!("crossing {}: {msg}", i + 1),
                None => msg,
            })
        })?;
        if n_arcs + free_loops == 0 {
            return Err(Error::InvalidDiagram("diagram has no components".into()));
        }
        Ok(Self {
            n_arcs,
            crossings,
            free_loops,
        })
    }

    /// The crossing-free unknot.
    pub fn unknot() -> Self {
        Self::unknots(1)
    }

    /// `k >= 1` disjoint crossing-free circles.
    pub fn unknots(k: usize) -> Self {
        assert!(k > 0, "a diagram needs at least one component");
        Self {
            n_arcs: 0,
            crossings: Vec::new(),
            free_loops: k,
        }
    }

    pub fn n_arcs(&self) -> usize {
        self.n_arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign == Sign::Positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        let mut ds = DisjointSets::new(self.n_arcs);
        for c in &self.crossings {
            ds.union(c.slots[0], c.slots[2]);
            ds.union(c.slots[1], c.slots[3]);
        }
        ds.count() + self.free_loops
    }

    /// Disjoint union with `k` extra crossing-free circles.
    pub fn with_unknots(&self, k: usize) -> Self {
        let mut d = self.clone();
        d.free_loops += k;
        d
    }

    /// Disjoint union, with `other`'s arcs renumbered after `self`'s.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.n_arcs;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            slots: c.slots.map(|a| a + off),
            sign: c.sign,
        }));
        Self {
            n_arcs: self.n_arcs + other.n_arcs,
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// The same diagram with every component reversed.
    pub fn reversed(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, x, y] = c.slots;
                Crossing::new([x, y, a, b], c.sign)
            })
            .collect();
        Self {
            crossings,
            ..self.clone()
        }
    }

    /// The mirror image: every crossing switched, the plane kept.
    pub fn mirrored(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, x, y] = c.slots;
                let slots = match c.sign {
                    Sign::Positive => [y, a, b, x],
                    Sign::Negative => [b, x, y, a],
                };
                Crossing::new(slots, c.sign.flip())
            })
            .collect();
        Self {
            crossings,
            ..self.clone()
        }
    }

    fn head_slot_of(&self, arc: usize) -> (usize, usize) {
        for (i, c) in self.crossings.iter().enumerate() {
            for s in c.head_slots() {
                if c.slots[s] == arc {
                    return (i, s);
                }
            }
        }
        unreachable!("validated diagrams give every arc a head")
    }

    /// Inserts a Reidemeister I curl on `arc`. On a crossing-free diagram
    /// the curl goes on one of the free circles and `arc` is ignored.
    pub fn with_kink(&self, arc: usize, sign: Sign) -> Result<Self> {
        let mut d = self.clone();
        if self.crossings.is_empty() {
            let (k, m) = (d.n_arcs, d.n_arcs + 1);
            d.n_arcs += 2;
            d.free_loops -= 1;
            d.crossings.push(match sign {
                Sign::Positive => Crossing::new([k, k, m, m], sign),
                Sign::Negative => Crossing::new([k, m, m, k], sign),
            });
            return Ok(d);
        }
        if arc >= self.n_arcs {
            return Err(Error::InvalidDiagram(format!("no arc {}", arc + 1)));
        }
        let (ci, slot) = self.head_slot_of(arc);
        let (m, p) = (d.n_arcs, d.n_arcs + 1);
        d.n_arcs += 2;
        d.crossings[ci].slots[slot] = p;
        d.crossings.push(match sign {
            Sign::Positive => Crossing::new([arc, p, m, m], sign),
            Sign::Negative => Crossing::new([arc, m, m, p], sign),
        });
        Ok(d)
    }
}

pub fn writhe(d: &PlanarDiagram) -> i64 {
    d.crossings.iter().map(|c| c.sign.value()).sum()
}

/// An assignment of a smoothing to every crossing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct State {
    bits: Vec<bool>,
}

impl State {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Crossing `i` takes bit `i` of `index`.
    pub fn from_index(index: u64, len: usize) -> Self {
        Self {
            bits: (0..len).map(|i| index >> i & 1 == 1).collect(),
        }
    }

    /// All `2^len` states in binary counting order.
    pub fn all(len: usize) -> impl Iterator<Item = State> {
        (0..1u64 << len).map(move |i| State::from_index(i, len))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `|s^-1(0)| - |s^-1(1)|`, the exponent of `A` in the state weight.
    pub fn weight(&self) -> i64 {
        self.bits.iter().map(|&b| if b { -1 } else { 1 }).sum()
    }

    pub fn concat(&self, other: &State) -> State {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        State { bits }
    }
}

/// Joins the arcs of `d` according to the smoothing chosen at each crossing.
pub(crate) fn smooth_into(d: &PlanarDiagram, bit: impl Fn(usize) -> bool, ds: &mut DisjointSets) {
    for (i, c) in d.crossings.iter().enumerate() {
        for (p, q) in SMOOTHINGS[bit(i) as usize] {
            ds.union(c.slots[p], c.slots[q]);
        }
    }
}

/// Union-find over the arcs of the smoothed diagram.
pub fn smoothing(d: &PlanarDiagram, s: &State) -> Result<DisjointSets> {
    if s.len() != d.crossing_count() {
        return Err(Error::StateMismatch {
            expected: d.crossing_count(),
            got: s.len(),
        });
    }
    let mut ds = DisjointSets::new(d.n_arcs);
    smooth_into(d, |i| s.bits[i], &mut ds);
    Ok(ds)
}

/// Number of circles in the smoothing of `d` by `s`.
pub fn circle_count(d: &PlanarDiagram, s: &State) -> Result<usize> {
    Ok(smoothing(d, s)?.count() + d.free_loops)
}

fn circles_at(d: &PlanarDiagram, index: u64, ds: &mut DisjointSets) -> usize {
    *ds = DisjointSets::new(d.n_arcs);
    smooth_into(d, |i| index >> i & 1 == 1, ds);
    ds.count() + d.free_loops
}

/// Crossing count above which the state sum is split across threads.
const PARALLEL_THRESHOLD: usize = 14;

/// Number of states for each `(A-weight, circle count)` pair.
pub fn state_table(d: &PlanarDiagram) -> BTreeMap<(i64, usize), u64> {
    let n = d.crossing_count();
    assert!(n < 63, "state sum over {n} crossings is out of reach");
    let tally = |range: std::ops::Range<u64>| {
        let mut table = BTreeMap::new();
        let mut ds = DisjointSets::new(d.n_arcs);
        for index in range {
            let k = circles_at(d, index, &mut ds);
            let ones = index.count_ones() as i64;
            *table.entry((n as i64 - 2 * ones, k)).or_insert(0) += 1;
        }
        table
    };
    let total = 1u64 << n;
    if n < PARALLEL_THRESHOLD {
        return tally(0..total);
    }
    let chunk = 1u64 << 10;
    (0..total / chunk)
        .into_par_iter()
        .map(|c| tally(c * chunk..(c + 1) * chunk))
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        })
}

/// Powers `delta^0 ..= delta^max`.
pub(crate) fn delta_powers(max: usize) -> Vec<LaurentPolynomial> {
    let delta = LaurentPolynomial::delta();
    let mut out = vec![LaurentPolynomial::one()];
    for i in 0..max {
        let next = &out[i] * &delta;
        out.push(next);
    }
    out
}

/// `sum count * A^w * delta^(k - offset)` over a state table.
pub(crate) fn assemble(table: &BTreeMap<(i64, usize), u64>, offset: usize) -> LaurentPolynomial {
    let max_k = table.keys().map(|&(_, k)| k).max().unwrap_or(offset);
    let powers = delta_powers(max_k - offset);
    table
        .iter()
        .map(|(&(w, k), &count)| {
            powers[k - offset]
                .shift(w)
                .scale(&BigRational::from_integer(BigInt::from(count)))
        })
        .sum()
}

/// The Kauffman bracket by direct summation over all states.
pub fn bracket_state_sum(d: &PlanarDiagram) -> LaurentPolynomial {
    assemble(&state_table(d), 1)
}

/// `(-A)^(-3w)` for writhe `w`.
pub fn writhe_factor(w: i64) -> LaurentPolynomial {
    let sign = if w % 2 == 0 { 1 } else { -1 };
    LaurentPolynomial::monomial(BigRational::from_integer(sign.into()), -3 * w)
}

pub fn kauffman_function(d: &PlanarDiagram) -> LaurentPolynomial {
    writhe_factor(writhe(d)) * bracket_state_sum(d)
}

/// The Jones polynomial, as a Laurent polynomial in `t^(1/4)`.
pub fn jones(d: &PlanarDiagram) -> LaurentPolynomial {
    substitute_jones(&kauffman_function(d))
}
