//! Links split by an alternate cut into two tangles.
//!
//! The cut meets the link in `2n` points `a1, b1, ..., an, bn`, stored as
//! boundary positions `0..2n` with `a_i` at `2(i - 1)`. In tangle 1 every
//! strand starts at an `a` point and ends at a `b` point; in tangle 2 it
//! starts at a `b` point and ends at an `a` point. Gluing, surgeries and the
//! partition maps are all arc identifications.

mod format;
pub mod random;

use std::collections::{BTreeMap, HashMap};

pub use format::{parse_cut, write_cut};
pub use random::{random_cut, random_tangle};

use crate::diagram::{assemble, check_arc_ends, smooth_into, Crossing, End, PlanarDiagram, State};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_nc, SetPartition};
use crate::polyring::LaurentPolynomial;
use crate::union_find::DisjointSets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn from_number(k: usize) -> Option<Self> {
        match k {
            1 => Some(Side::One),
            2 => Some(Side::Two),
            _ => None,
        }
    }

    pub fn number(self) -> usize {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    /// The role of boundary position `j` for arcs of this side's tangle.
    pub(crate) fn boundary_end(self, j: usize) -> End {
        match (self, j.is_multiple_of(2)) {
            (Side::One, true) | (Side::Two, false) => End::Tail,
            _ => End::Head,
        }
    }
}

/// One side of a cut: a diagram with `2n` open ends on the cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tangle {
    n_arcs: usize,
    crossings: Vec<Crossing>,
    free_loops: usize,
    boundary: Vec<usize>,
}

impl Tangle {
    /// Checks that every arc has one head and one tail, counting boundary
    /// points by their role on `side`.
    pub fn new(
        side: Side,
        n_arcs: usize,
        crossings: Vec<Crossing>,
        free_loops: usize,
        boundary: Vec<usize>,
    ) -> Result<Self> {
        if boundary.is_empty() || boundary.len() % 2 == 1 {
            return Err(Error::BoundaryMismatch(format!(
                "a tangle needs a positive even number of boundary points, got {}",
                boundary.len()
            )));
        }
        let slot_ends = crossings.iter().enumerate().flat_map(|(i, c)| {
            (0..4).map(move |s| {
                let end = if c.is_head(s) { End::Head } else { End::Tail };
                (c.slots[s], end, Some(i))
            })
        });
        let boundary_ends = boundary
            .iter()
            .enumerate()
            .map(|(j, &a)| (a, side.boundary_end(j), None));
        check_arc_ends(n_arcs, slot_ends.chain(boundary_ends))
            .map_err(|(_, msg)| Error::BoundaryMismatch(format!("tangle {}: {msg}", side.number())))?;
        Ok(Self {
            n_arcs,
            crossings,
            free_loops,
            boundary,
        })
    }

    pub fn n(&self) -> usize {
        self.boundary.len() / 2
    }

    pub fn n_arcs(&self) -> usize {
        self.n_arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Arc at each boundary position.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }
}

/// Cuts `d` open along `arc`, giving a tangle with one `a` and one `b` point.
pub fn open_arc(d: &PlanarDiagram, arc: usize, side: Side) -> Result<Tangle> {
    if arc >= d.n_arcs() {
        return Err(Error::InvalidDiagram(format!("no arc {} to open", arc + 1)));
    }
    let fresh = d.n_arcs();
    let mut crossings = d.crossings().to_vec();
    let (ci, slot) = crossings
        .iter()
        .enumerate()
        .find_map(|(i, c)| {
            c.tail_slots()
                .into_iter()
                .find(|&s| c.slots[s] == arc)
                .map(|s| (i, s))
        })
        .expect("validated diagrams give every arc a tail");
    crossings[ci].slots[slot] = fresh;
    // the piece keeping the label enters a crossing, so it starts on the cut
    let boundary = match side {
        Side::One => vec![arc, fresh],
        Side::Two => vec![fresh, arc],
    };
    Tangle::new(side, fresh + 1, crossings, d.free_loops(), boundary)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutPresentation {
    n: usize,
    tangle1: Tangle,
    tangle2: Tangle,
}

impl CutPresentation {
    pub fn new(tangle1: Tangle, tangle2: Tangle) -> Result<Self> {
        if tangle1.n() != tangle2.n() {
            return Err(Error::BoundaryMismatch(format!(
                "tangles meet the cut in {} and {} points",
                2 * tangle1.n(),
                2 * tangle2.n()
            )));
        }
        Ok(Self {
            n: tangle1.n(),
            tangle1,
            tangle2,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tangle(&self, side: Side) -> &Tangle {
        match side {
            Side::One => &self.tangle1,
            Side::Two => &self.tangle2,
        }
    }

    /// The tangles with their roles exchanged.
    pub fn swapped(&self) -> Result<Self> {
        let t1 = &self.tangle2;
        let t2 = &self.tangle1;
        // rotating by one point turns b points into a points
        let rot = |b: &[usize]| {
            let mut v = b.to_vec();
            v.rotate_left(1);
            v
        };
        Self::new(
            Tangle::new(
                Side::One,
                t1.n_arcs,
                t1.crossings.clone(),
                t1.free_loops,
                rot(&t1.boundary),
            )?,
            Tangle::new(
                Side::Two,
                t2.n_arcs,
                t2.crossings.clone(),
                t2.free_loops,
                rot(&t2.boundary),
            )?,
        )
    }

    /// Connected sum of two closed diagrams, each opened on its first arc.
    pub fn connected_sum(d1: &PlanarDiagram, d2: &PlanarDiagram) -> Result<Self> {
        Self::new(open_arc(d1, 0, Side::One)?, open_arc(d2, 0, Side::Two)?)
    }
}

/// Identifies arcs of a crossing set and returns the closed diagram with
/// the component key of every original arc. Keys below the new arc count
/// are arcs; larger keys name crossing-free circles.
fn identify(
    n_arcs: usize,
    crossings: &[Crossing],
    free_loops: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<(PlanarDiagram, Vec<usize>)> {
    let mut ds = DisjointSets::new(n_arcs);
    for (x, y) in pairs {
        ds.union(x, y);
    }
    let mut used = vec![false; n_arcs];
    for c in crossings {
        for &a in &c.slots {
            used[ds.find(a)] = true;
        }
    }
    let mut id = vec![usize::MAX; n_arcs];
    let mut next = 0;
    for a in 0..n_arcs {
        let r = ds.find(a);
        if used[r] && id[r] == usize::MAX {
            id[r] = next;
            next += 1;
        }
    }
    let n_new = next;
    let mut loops = 0;
    for a in 0..n_arcs {
        let r = ds.find(a);
        if id[r] == usize::MAX {
            id[r] = n_new + loops;
            loops += 1;
        }
    }
    let keys: Vec<usize> = (0..n_arcs).map(|a| id[ds.find(a)]).collect();
    let new_crossings = crossings
        .iter()
        .map(|c| Crossing::new(c.slots.map(|a| keys[a]), c.sign))
        .collect();
    let d = PlanarDiagram::new(n_new, new_crossings, free_loops + loops)?;
    Ok((d, keys))
}

/// The closed diagram obtained by gluing the two tangles along the cut;
/// crossings of tangle 1 come first.
pub fn glue(c: &CutPresentation) -> Result<PlanarDiagram> {
    let (t1, t2) = (&c.tangle1, &c.tangle2);
    let off = t1.n_arcs;
    let mut crossings = t1.crossings.clone();
    crossings.extend(
        t2.crossings
            .iter()
            .map(|x| Crossing::new(x.slots.map(|a| a + off), x.sign)),
    );
    let pairs = t1.boundary.iter().zip(&t2.boundary).map(|(&a, &b)| (a, b + off));
    let (d, _) = identify(
        t1.n_arcs + t2.n_arcs,
        &crossings,
        t1.free_loops + t2.free_loops,
        pairs,
    )
    .map_err(|e| Error::BoundaryMismatch(e.to_string()))?;
    Ok(d)
}

/// A point of the cut, numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutPoint {
    A(usize),
    B(usize),
}

impl CutPoint {
    /// Boundary position of this point.
    pub fn position(self) -> usize {
        match self {
            CutPoint::A(i) => 2 * (i - 1),
            CutPoint::B(i) => 2 * (i - 1) + 1,
        }
    }
}

fn require_noncrossing(p: &SetPartition) -> Result<()> {
    if p.is_noncrossing() {
        Ok(())
    } else {
        Err(Error::CrossingPartition(p.to_string()))
    }
}

/// Directed closing arcs: for a block `i1 < ... < ik` the arcs
/// `b_i1 -> a_i2, ..., b_ik -> a_i1`, all reversed on request.
pub fn closure_arcs(p: &SetPartition, reversed: bool) -> Result<Vec<(CutPoint, CutPoint)>> {
    require_noncrossing(p)?;
    let mut arcs = Vec::with_capacity(p.n());
    for block in p.blocks() {
        for (k, &i) in block.iter().enumerate() {
            let j = block[(k + 1) % block.len()];
            let arc = (CutPoint::B(i), CutPoint::A(j));
            arcs.push(if reversed { (arc.1, arc.0) } else { arc });
        }
    }
    Ok(arcs)
}

struct Closed {
    diagram: PlanarDiagram,
    keys: Vec<usize>,
}

fn close_side(c: &CutPresentation, side: Side, p: &SetPartition) -> Result<Closed> {
    if p.n() != c.n {
        return Err(Error::GroundSetMismatch(p.n(), c.n));
    }
    let t = c.tangle(side);
    let arcs = closure_arcs(p, side == Side::Two)?;
    let pairs = arcs
        .iter()
        .map(|(x, y)| (t.boundary[x.position()], t.boundary[y.position()]));
    let (diagram, keys) = identify(t.n_arcs, &t.crossings, t.free_loops, pairs)?;
    Ok(Closed { diagram, keys })
}

/// The surgery closing one side with the arcs of `p` (reversed on side 2).
pub fn surgery(c: &CutPresentation, side: Side, p: &SetPartition) -> Result<PlanarDiagram> {
    Ok(close_side(c, side, p)?.diagram)
}

/// Circles and 2-point loops of the link formed by the closing arcs of `a`
/// on one side of the cut and the reversed arcs of `b` on the other.
pub fn nc_link_circles(a: &SetPartition, b: &SetPartition) -> Result<(usize, usize)> {
    if a.n() != b.n() {
        return Err(Error::GroundSetMismatch(a.n(), b.n()));
    }
    let mut ds = DisjointSets::new(2 * a.n());
    // connectivity ignores the direction of the reversed arcs
    for p in [a, b] {
        for (x, y) in closure_arcs(p, false)? {
            ds.union(x.position(), y.position());
        }
    }
    let mut loops = 0;
    let mut seen = vec![false; 2 * a.n()];
    for v in 0..2 * a.n() {
        let r = ds.find(v);
        if !seen[r] {
            seen[r] = true;
            if ds.set_size(r) == 2 {
                loops += 1;
            }
        }
    }
    Ok((ds.count(), loops))
}

/// What a single state of one side produces on its full surgery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideState {
    pub partition: SetPartition,
    /// Exponent of `A` in the state weight.
    pub weight: i64,
    pub circles: usize,
}

fn side_state(closed: &Closed, t: &Tangle, index: u64, ds: &mut DisjointSets) -> SideState {
    let d = &closed.diagram;
    *ds = DisjointSets::new(d.n_arcs());
    smooth_into(d, |i| index >> i & 1 == 1, ds);
    let circles = ds.count() + d.free_loops();
    let n_new = d.n_arcs();
    let partition = SetPartition::from_keys((0..t.n()).map(|i| {
        let key = closed.keys[t.boundary[2 * i]];
        if key < n_new {
            ds.find(key)
        } else {
            key
        }
    }));
    let ones = index.count_ones() as i64;
    SideState {
        partition,
        weight: d.crossing_count() as i64 - 2 * ones,
        circles,
    }
}

/// Same-circle relation of the `a` points in the smoothing of the full
/// surgery of one side.
pub fn state_partition(c: &CutPresentation, side: Side, s: &State) -> Result<SetPartition> {
    let t = c.tangle(side);
    if s.len() != t.crossings.len() {
        return Err(Error::StateMismatch {
            expected: t.crossings.len(),
            got: s.len(),
        });
    }
    let closed = close_side(c, side, &SetPartition::full(c.n)?)?;
    let index = s
        .bits()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
    let mut ds = DisjointSets::new(0);
    Ok(side_state(&closed, t, index, &mut ds).partition)
}

/// Every state of one side, in binary counting order.
pub fn side_states(c: &CutPresentation, side: Side) -> Result<Vec<SideState>> {
    let t = c.tangle(side);
    let closed = close_side(c, side, &SetPartition::full(c.n)?)?;
    let mut ds = DisjointSets::new(0);
    Ok((0..1u64 << t.crossings.len())
        .map(|index| side_state(&closed, t, index, &mut ds))
        .collect())
}

/// Restricted brackets of one side for every partition in `enumerate_nc`
/// order. A state whose partition is crossing means the tangle is not
/// planar and is reported as an error.
pub fn restricted_brackets(c: &CutPresentation, side: Side) -> Result<Vec<LaurentPolynomial>> {
    let order = enumerate_nc(c.n)?;
    let index: HashMap<&SetPartition, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut tables: Vec<BTreeMap<(i64, usize), u64>> = vec![BTreeMap::new(); order.len()];
    for s in side_states(c, side)? {
        let &i = index
            .get(&s.partition)
            .ok_or_else(|| Error::CrossingPartition(s.partition.to_string()))?;
        *tables[i].entry((s.weight, s.circles)).or_insert(0) += 1;
    }
    Ok(tables
        .iter()
        .zip(&order)
        .map(|(t, p)| {
            if t.is_empty() {
                LaurentPolynomial::zero()
            } else {
                assemble(t, p.block_count())
            }
        })
        .collect())
}

pub fn restricted_bracket(c: &CutPresentation, side: Side, p: &SetPartition) -> Result<LaurentPolynomial> {
    require_noncrossing(p)?;
    if p.n() != c.n {
        return Err(Error::GroundSetMismatch(p.n(), c.n));
    }
    let order = enumerate_nc(c.n)?;
    let i = order.iter().position(|q| q == p).expect("noncrossing");
    Ok(restricted_brackets(c, side)?.swap_remove(i))
}
