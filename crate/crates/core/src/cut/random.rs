use rand::Rng;

use super::{CutPresentation, Side, Tangle};
use crate::diagram::morse::{random_word, trace};

/// A random planar tangle for `side` with `2n` boundary points and at most
/// `max_crossings` crossings, by rejection until the open strands join
/// points of opposite parity.
pub fn random_tangle<R: Rng + ?Sized>(rng: &mut R, side: Side, n: usize, max_crossings: usize) -> Tangle {
    // tangle 2 lies on the far side of the cut, reflected
    let (mirrored, tail_parity) = match side {
        Side::One => (false, 0),
        Side::Two => (true, 1),
    };
    loop {
        let crossings = rng.gen_range(0..=max_crossings);
        let word = random_word(rng, crossings, 2 * n, 2 * n + 2);
        let flips: Vec<bool> = (0..word.len()).map(|_| rng.gen()).collect();
        let mut it = flips.into_iter();
        let Ok(open) = trace(&word, mirrored, Some(tail_parity), &mut || {
            it.next().unwrap_or(false)
        }) else {
            continue;
        };
        return Tangle::new(side, open.n_arcs, open.crossings, open.free_loops, open.ends)
            .expect("traced tangles are consistently oriented");
    }
}

/// A random cut presentation with `2n` cut points.
pub fn random_cut<R: Rng + ?Sized>(rng: &mut R, n: usize, max_crossings_per_side: usize) -> CutPresentation {
    let t1 = random_tangle(rng, Side::One, n, max_crossings_per_side);
    let t2 = random_tangle(rng, Side::Two, n, max_crossings_per_side);
    CutPresentation::new(t1, t2).expect("both tangles have 2n points")
}
