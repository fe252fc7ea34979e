//! Reference implementations used by the integration tests. They share no
//! code with the library beyond its data types and ring operations.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use knot_split::cut::{parse_cut, CutPresentation};
use knot_split::diagram::{parse_diagram, PlanarDiagram, Sign};
use knot_split::partitions::SetPartition;
use knot_split::polyring::LaurentPolynomial;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

pub fn corpus_diagram(name: &str) -> PlanarDiagram {
    let src = std::fs::read_to_string(corpus_path(name)).unwrap();
    parse_diagram(&src).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn corpus_cut(name: &str) -> CutPresentation {
    let src = std::fs::read_to_string(corpus_path(name)).unwrap();
    parse_cut(&src).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub const DIAGRAMS: &[&str] = &[
    "unknot.pd",
    "two_unknots.pd",
    "unknot_kinks.pd",
    "hopf.pd",
    "trefoil_right.pd",
    "trefoil_left.pd",
    "figure_eight.pd",
    "r2_before.pd",
    "r2_after.pd",
    "r3_left.pd",
    "r3_right.pd",
];

pub const CUTS: &[&str] = &[
    "trefoil_split.cut",
    "trefoil_swapped.cut",
    "trefoil_n3.cut",
    "trefoil_figure_eight.cut",
    "hopf_split.cut",
    "plain_n2.cut",
    "plain_n3.cut",
];

pub fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_int_terms(terms)
}

// ---- polynomials ----

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Value at a nonzero rational point.
pub fn evaluate(p: &LaurentPolynomial, x: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (e, c) in p.terms() {
        let mut power = BigRational::one();
        let base = if e < 0 { x.recip() } else { x.clone() };
        for _ in 0..e.unsigned_abs() {
            power *= &base;
        }
        total += c * power;
    }
    total
}

pub fn sample_points() -> Vec<BigRational> {
    vec![rational(2, 1), rational(-3, 2), rational(5, 7), rational(-1, 3)]
}

// ---- partitions ----

/// Every set partition of `1..=n` as sorted lists of sorted blocks.
pub fn brute_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::<Vec<usize>>::new()];
    for x in 1..=n {
        let mut next = Vec::new();
        for p in &out {
            for k in 0..p.len() {
                let mut q = p.clone();
                q[k].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    for p in &mut out {
        p.sort();
    }
    out
}

fn block_of(p: &[Vec<usize>], x: usize) -> usize {
    p.iter().position(|b| b.contains(&x)).unwrap()
}

pub fn brute_noncrossing(p: &[Vec<usize>]) -> bool {
    let n: usize = p.iter().map(|b| b.len()).sum();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let (ba, bb) = (block_of(p, a), block_of(p, b));
                    if ba == block_of(p, c) && bb == block_of(p, d) && ba != bb {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Join by repeated merging of overlapping blocks.
pub fn brute_join(p: &[Vec<usize>], q: &[Vec<usize>]) -> usize {
    let mut blocks: Vec<BTreeSet<usize>> = p.iter().chain(q).map(|b| b.iter().copied().collect()).collect();
    loop {
        let mut merged = false;
        'outer: for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if !blocks[i].is_disjoint(&blocks[j]) {
                    let b = blocks.remove(j);
                    blocks[i].extend(b);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            return blocks.len();
        }
    }
}

/// Meet as the set of nonempty pairwise intersections.
pub fn brute_meet(p: &[Vec<usize>], q: &[Vec<usize>]) -> usize {
    let mut count = 0;
    for a in p {
        for b in q {
            if a.iter().any(|x| b.contains(x)) {
                count += 1;
            }
        }
    }
    count
}

pub fn to_partition(p: &[Vec<usize>]) -> SetPartition {
    let n = p.iter().map(|b| b.len()).sum();
    SetPartition::from_blocks(n, p).unwrap()
}

// ---- matchings on 2n points around a circle ----

/// Noncrossing perfect matchings of `0..2n` as partner tables.
pub fn noncrossing_matchings(n: usize) -> Vec<Vec<usize>> {
    fn pairings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        // the partner of the first point leaves an even number inside
        for k in (1..points.len()).step_by(2) {
            for inner in pairings(&points[1..k]) {
                for outer in pairings(&points[k + 1..]) {
                    let mut m = vec![(points[0], points[k])];
                    m.extend(&inner);
                    m.extend(&outer);
                    out.push(m);
                }
            }
        }
        out
    }
    let points: Vec<usize> = (0..2 * n).collect();
    pairings(&points)
        .into_iter()
        .map(|pairs| {
            let mut partner = vec![0; 2 * n];
            for (x, y) in pairs {
                partner[x] = y;
                partner[y] = x;
            }
            partner
        })
        .collect()
}

/// Number of circles formed by two perfect matchings of the same points.
pub fn circles_of(m1: &[usize], m2: &[usize]) -> usize {
    let mut seen = vec![false; m1.len()];
    let mut count = 0;
    for start in 0..m1.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut v = start;
        loop {
            seen[v] = true;
            let w = m1[v];
            seen[w] = true;
            v = m2[w];
            if v == start {
                break;
            }
        }
    }
    count
}

/// The partition of `1..=n` read off a matching: `i ~ j` when `a_i` and
/// `a_j` (points `2i-2`, `2j-2`) share a circle once every `a_k` is joined
/// to its neighbour `b_k`.
pub fn matching_partition(m: &[usize]) -> Vec<Vec<usize>> {
    let n = m.len() / 2;
    let adjacent: Vec<usize> = (0..2 * n).map(|v| v ^ 1).collect();
    let mut label = vec![usize::MAX; 2 * n];
    let mut next = 0;
    for start in 0..2 * n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut v = start;
        loop {
            label[v] = next;
            let w = m[v];
            label[w] = next;
            v = adjacent[w];
            if v == start {
                break;
            }
        }
        next += 1;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut ids: Vec<usize> = Vec::new();
    for i in 1..=n {
        let l = label[2 * (i - 1)];
        match ids.iter().position(|&x| x == l) {
            Some(k) => blocks[k].push(i),
            None => {
                ids.push(l);
                blocks.push(vec![i]);
            }
        }
    }
    blocks
}

// ---- brackets ----

/// Kauffman bracket by explicit circle tracing over all states.
pub fn traced_bracket(d: &PlanarDiagram) -> LaurentPolynomial {
    let k = d.crossing_count();
    let delta = LaurentPolynomial::from_int_terms(&[(-2, -1), (2, -1)]);
    let mut total = LaurentPolynomial::zero();
    for index in 0u64..1 << k {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); d.n_arcs()];
        let mut exponent = 0i64;
        for (i, c) in d.crossings().iter().enumerate() {
            let s = &c.slots;
            // state 0 joins slots 0-1 and 2-3, state 1 joins 0-3 and 1-2
            let pairs = if index >> i & 1 == 0 {
                exponent += 1;
                [(s[0], s[1]), (s[2], s[3])]
            } else {
                exponent -= 1;
                [(s[0], s[3]), (s[1], s[2])]
            };
            for (x, y) in pairs {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let mut seen = vec![false; d.n_arcs()];
        let mut circles = d.free_loops();
        for v in 0..d.n_arcs() {
            if seen[v] {
                continue;
            }
            circles += 1;
            let mut stack = vec![v];
            seen[v] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        total += LaurentPolynomial::from_int_terms(&[(exponent, 1)]) * delta.pow(circles as u32 - 1);
    }
    total
}

pub fn sign_sum(d: &PlanarDiagram) -> i64 {
    d.crossings()
        .iter()
        .map(|c| if c.sign == Sign::Positive { 1 } else { -1 })
        .sum()
}

/// Jones polynomial in quarter powers of `t` from the traced bracket.
pub fn traced_jones(d: &PlanarDiagram) -> LaurentPolynomial {
    let w = sign_sum(d);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = LaurentPolynomial::from_int_terms(&[(-3 * w, sign)]) * traced_bracket(d);
    f.mirror()
}
