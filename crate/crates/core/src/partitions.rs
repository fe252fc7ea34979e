//! Set partitions of `{1..n}`, the partition lattice and its noncrossing part.
//!
//! A partition is stored as its restricted growth string: element `i` maps to
//! the index of its block when blocks are ordered by their minimum. The
//! derived `Ord` on that string is the canonical order used to index
//! matrices.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
    blocks: usize,
}

impl SetPartition {
    /// Canonical partition whose blocks are the classes of equal keys.
    pub fn from_keys<K: Eq + Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut seen: HashMap<K, usize> = HashMap::new();
        let mut labels = Vec::new();
        for k in keys {
            let next = seen.len();
            labels.push(*seen.entry(k).or_insert(next));
        }
        let blocks = seen.len();
        Self { labels, blocks }
    }

    /// Builds a partition from blocks of 1-based elements.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..={n}")));
                }
                if owner[x - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                owner[x - 1] = b;
            }
        }
        if let Some(missing) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {} not covered",
                missing + 1
            )));
        }
        Ok(Self::from_keys(owner))
    }

    /// The partition into singletons, the bottom of the lattice.
    pub fn full(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Self::from_keys(0..n))
    }

    /// The one-block partition, the top of the lattice.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Self::from_keys(std::iter::repeat_n(0, n)))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    /// Restricted growth string, 0-based element to 0-based block index.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Blocks of 1-based elements in canonical order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (i, &b) in self.labels.iter().enumerate() {
            out[b].push(i + 1);
        }
        out
    }

    /// Whether 1-based elements `i` and `j` share a block.
    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.labels[i - 1] == self.labels[j - 1]
    }

    /// No `i < j < k < l` with `i, k` in one block and `j, l` in another.
    pub fn is_noncrossing(&self) -> bool {
        let l = &self.labels;
        let n = l.len();
        for i in 0..n {
            for j in i + 1..n {
                if l[j] == l[i] {
                    continue;
                }
                for k in j + 1..n {
                    if l[k] != l[i] {
                        continue;
                    }
                    if l[k + 1..].contains(&l[j]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    /// Coarsest common refinement: the nonempty pairwise block intersections.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(Self::from_keys(
            self.labels.iter().zip(&other.labels).map(|(a, b)| (*a, *b)),
        ))
    }

    /// Finest common coarsening, computed in the full partition lattice.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let n = self.n();
        let mut ds = DisjointSets::new(n);
        for labels in [&self.labels, &other.labels] {
            let mut first = vec![usize::MAX; n];
            for (i, &b) in labels.iter().enumerate() {
                if first[b] == usize::MAX {
                    first[b] = i;
                } else {
                    ds.union(first[b], i);
                }
            }
        }
        Ok(Self::from_keys((0..n).map(|i| ds.find(i))))
    }

    /// `self` is finer than (or equal to) `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        Ok(self.meet(other)? == *self)
    }

    /// Keeps only the given 1-based elements, renumbered in increasing order.
    pub fn restrict(&self, elements: &[usize]) -> Self {
        Self::from_keys(elements.iter().map(|&x| self.labels[x - 1]))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `{{1,3},{2},{4}}`; whitespace is ignored and `n` is the largest
    /// element, which must leave no gaps.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::parse(1, format!("{msg} in partition {s:?}"));
        let inner = compact
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("expected outer braces"))?;
        let mut blocks = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
            let close = body.find('}').ok_or_else(|| bad("unclosed block"))?;
            let block: Vec<usize> = body[..close]
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad element")))
                .collect::<Result<_>>()?;
            blocks.push(block);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(bad("expected ','"));
            }
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::from_blocks(n, &blocks).map_err(|e| bad(&e.to_string()))
    }
}

/// All partitions of `{1..n}` in canonical order.
pub fn enumerate_all(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    fn grow(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition {
                labels: labels.clone(),
                blocks: max,
            });
            return;
        }
        for b in 0..=max {
            labels.push(b);
            grow(labels, max.max(b + 1), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut vec![0], 1, n, &mut out);
    Ok(out)
}

/// Noncrossing partitions of `0..len` as lists of blocks. The block holding
/// the first element splits the rest into gaps, each partitioned
/// independently.
fn nc_block_lists(len: usize, memo: &mut Vec<Option<Vec<Vec<Vec<usize>>>>>) -> Vec<Vec<Vec<usize>>> {
    if let Some(done) = &memo[len] {
        return done.clone();
    }
    let result = if len == 0 {
        vec![Vec::new()]
    } else {
        let mut all = Vec::new();
        for mask in 0u64..(1u64 << (len - 1)) {
            let mut block = vec![0];
            block.extend((1..len).filter(|&i| mask >> (i - 1) & 1 == 1));
            let mut gaps: Vec<(usize, usize)> =
                block.windows(2).map(|w| (w[0] + 1, w[1] - w[0] - 1)).collect();
            let last = *block.last().unwrap();
            gaps.push((last + 1, len - last - 1));
            let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block]];
            for (offset, glen) in gaps {
                let fillings = nc_block_lists(glen, memo);
                let mut next = Vec::with_capacity(partial.len() * fillings.len());
                for p in &partial {
                    for fill in &fillings {
                        let mut q = p.clone();
                        q.extend(
                            fill.iter()
                                .map(|b| b.iter().map(|x| x + offset).collect::<Vec<_>>()),
                        );
                        next.push(q);
                    }
                }
                partial = next;
            }
            all.extend(partial);
        }
        all
    };
    memo[len] = Some(result.clone());
    result
}

/// All noncrossing partitions of `{1..n}`, in canonical order.
pub fn enumerate_nc(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut memo = vec![None; n + 1];
    let mut out: Vec<SetPartition> = nc_block_lists(n, &mut memo)
        .into_iter()
        .map(|blocks| {
            let mut owner = vec![0; n];
            for (b, block) in blocks.iter().enumerate() {
                for &x in block {
                    owner[x] = b;
                }
            }
            SetPartition::from_keys(owner)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn crossing_predicate() {
        assert!(!part("{{1,3},{2,4}}").is_noncrossing());
        assert!(part("{{1,4},{2,3}}").is_noncrossing());
        assert!(part("{{1,2,3},{4,5,6,7}}").is_noncrossing());
        assert!(!part("{{1,4},{2,5},{3}}").is_noncrossing());
    }

    #[test]
    fn meet_of_figure_partitions() {
        let a = part("{{1,2,3},{4,5,6,7}}");
        let b = part("{{1},{2,3,4},{5,6,7}}");
        let m = a.meet(&b).unwrap();
        assert_eq!(m, part("{{1},{2,3},{4},{5,6,7}}"));
        assert_eq!(m.block_count(), 4);
        assert_eq!(a.join(&b).unwrap(), SetPartition::trivial(7).unwrap());
    }

    #[test]
    fn bottom_and_top() {
        let p = part("{{1,3},{2},{4}}");
        let full = SetPartition::full(4).unwrap();
        let trivial = SetPartition::trivial(4).unwrap();
        assert_eq!(full.meet(&p).unwrap(), full);
        assert_eq!(trivial.join(&p).unwrap(), trivial);
        assert_eq!(p.meet(&p).unwrap(), p);
        assert_eq!(p.join(&p).unwrap(), p);
    }

    #[test]
    fn join_leaves_the_noncrossing_set() {
        let a = part("{{1,3},{2},{4}}");
        let b = part("{{1},{2,4},{3}}");
        assert!(a.is_noncrossing() && b.is_noncrossing());
        let j = a.join(&b).unwrap();
        assert_eq!(j, part("{{1,3},{2,4}}"));
        assert!(!j.is_noncrossing());
    }

    #[test]
    fn mismatched_ground_sets() {
        let a = SetPartition::full(3).unwrap();
        let b = SetPartition::full(4).unwrap();
        assert_eq!(a.meet(&b), Err(Error::GroundSetMismatch(3, 4)));
        assert_eq!(a.join(&b), Err(Error::GroundSetMismatch(3, 4)));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_nc(1).unwrap(), vec![part("{{1}}")]);
        assert_eq!(enumerate_nc(3).unwrap().len(), 5);
        let nc4 = enumerate_nc(4).unwrap();
        assert_eq!(nc4.len(), 14);
        assert!(!nc4.contains(&part("{{1,3},{2,4}}")));
        assert_eq!(enumerate_nc(0), Err(Error::EmptyGroundSet));
        // n = 2: trivial sorts before full
        assert_eq!(enumerate_nc(2).unwrap(), vec![part("{{1,2}}"), part("{{1},{2}}")]);
    }

    #[test]
    fn enumeration_is_sorted_and_matches_catalan() {
        for n in 1..=8 {
            let nc = enumerate_nc(n).unwrap();
            assert_eq!(nc.len() as u64, catalan(n));
            assert!(nc.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(enumerate_all(5).unwrap().len(), 52);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let p = part(" { {1, 3}, {2}, { 4 } } ");
        assert_eq!(p.to_string(), "{{1,3},{2},{4}}");
        assert_eq!(part(&p.to_string()), p);
        assert!("{{1,3},{4}}".parse::<SetPartition>().is_err());
        assert!("{{1},{1}}".parse::<SetPartition>().is_err());
        assert!("{1,2}".parse::<SetPartition>().is_err());
        assert!("{{1},}".parse::<SetPartition>().is_err());
    }

    #[test]
    fn blocks_in_canonical_order() {
        let p = SetPartition::from_blocks(4, &[vec![4, 2], vec![3, 1]]).unwrap();
        assert_eq!(p.blocks(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(p.labels(), &[0, 1, 0, 1]);
    }
}
