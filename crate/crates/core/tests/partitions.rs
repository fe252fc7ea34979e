mod common;

use common::{brute_join, brute_meet, brute_noncrossing, brute_partitions, to_partition};
use knot_split::partitions::{catalan, enumerate_all, enumerate_nc, SetPartition};
use proptest::prelude::*;

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=7 {
        let all = enumerate_all(n).unwrap();
        let brute = brute_partitions(n);
        assert_eq!(all.len(), brute.len());
        let mut expected: Vec<SetPartition> = brute.iter().map(|p| to_partition(p)).collect();
        expected.sort();
        let mut got = all.clone();
        got.sort();
        assert_eq!(got, expected);
        let nc: Vec<SetPartition> = brute
            .iter()
            .filter(|p| brute_noncrossing(p))
            .map(|p| to_partition(p))
            .collect();
        assert_eq!(nc.len() as u64, catalan(n));
        let mut listed = enumerate_nc(n).unwrap();
        assert!(listed.windows(2).all(|w| w[0] < w[1]));
        listed.sort();
        let mut nc_sorted = nc;
        nc_sorted.sort();
        assert_eq!(listed, nc_sorted);
    }
    assert_eq!(
        (0..=8).map(catalan).collect::<Vec<_>>(),
        [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    );
}

#[test]
fn order_of_small_index_sets() {
    let two: Vec<String> = enumerate_nc(2).unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(two, ["{{1,2}}", "{{1},{2}}"]);
    let all3 = enumerate_all(3).unwrap();
    assert_eq!(all3[0], SetPartition::trivial(3).unwrap());
    assert_eq!(all3[4], SetPartition::full(3).unwrap());
}

#[test]
fn lattice_operations_match_brute_force() {
    for n in 1..=5 {
        let brute = brute_partitions(n);
        for p in &brute {
            for q in &brute {
                let (a, b) = (to_partition(p), to_partition(q));
                let meet = a.meet(&b).unwrap();
                let join = a.join(&b).unwrap();
                assert_eq!(meet.block_count(), brute_meet(p, q));
                assert_eq!(join.block_count(), brute_join(p, q));
                assert!(meet.refines(&a).unwrap() && meet.refines(&b).unwrap());
                assert!(a.refines(&join).unwrap() && b.refines(&join).unwrap());
                let finer = p
                    .iter()
                    .all(|x| q.iter().any(|y| x.iter().all(|e| y.contains(e))));
                assert_eq!(a.refines(&b).unwrap(), finer);
                assert!(meet.block_count() >= join.block_count());
                assert_eq!(meet.block_count() == join.block_count(), a == b);
                assert_eq!(a.is_noncrossing(), brute_noncrossing(p));
                if a.is_noncrossing() && b.is_noncrossing() {
                    assert!(meet.is_noncrossing());
                }
            }
        }
    }
}

#[test]
fn join_leaves_the_noncrossing_lattice() {
    let a: SetPartition = "{{1,3},{2},{4}}".parse().unwrap();
    let b: SetPartition = "{{1},{2,4},{3}}".parse().unwrap();
    assert!(a.is_noncrossing() && b.is_noncrossing());
    let j = a.join(&b).unwrap();
    assert_eq!(j.to_string(), "{{1,3},{2,4}}");
    assert!(!j.is_noncrossing());
}

#[test]
fn text_syntax() {
    let p: SetPartition = " { {4, 2}, {1,3} } ".parse().unwrap();
    assert_eq!(p.to_string(), "{{1,3},{2,4}}");
    for bad in ["{{1,2},{2}}", "{{1},{3}}", "{1,2}", "{{}}", "{{1,x}}", ""] {
        assert!(bad.parse::<SetPartition>().is_err(), "{bad:?}");
    }
    assert!(SetPartition::trivial(0).is_err());
    let a = SetPartition::full(2).unwrap();
    assert!(a.meet(&SetPartition::full(3).unwrap()).is_err());
}

fn partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(0..n, n).prop_map(SetPartition::from_keys))
}

fn pair(max_n: usize) -> impl Strategy<Value = (SetPartition, SetPartition, SetPartition)> {
    (1..=max_n).prop_flat_map(|n| {
        let p = || prop::collection::vec(0..n, n).prop_map(SetPartition::from_keys);
        (p(), p(), p())
    })
}

proptest! {
    #[test]
    fn lattice_axioms((a, b, c) in pair(9)) {
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap().meet(&c).unwrap(), a.meet(&b.meet(&c).unwrap()).unwrap());
        prop_assert_eq!(a.join(&b).unwrap().join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        if a.refines(&b).unwrap() && b.refines(&c).unwrap() {
            prop_assert!(a.refines(&c).unwrap());
        }
    }

    #[test]
    fn text_round_trip(p in partition(10)) {
        prop_assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
    }

    #[test]
    fn restriction_keeps_relations(p in partition(8), mask in prop::collection::vec(any::<bool>(), 8)) {
        let keep: Vec<usize> = (1..=p.n()).filter(|&i| mask[i - 1]).collect();
        prop_assume!(!keep.is_empty());
        let r = p.restrict(&keep);
        for (x, &i) in keep.iter().enumerate() {
            for (y, &j) in keep.iter().enumerate() {
                prop_assert_eq!(r.same_block(x + 1, y + 1), p.same_block(i, j));
            }
        }
        if p.is_noncrossing() {
            prop_assert!(r.is_noncrossing());
        }
    }
}
