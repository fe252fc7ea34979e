use super::{PlanarDiagram, SMOOTHINGS};
use crate::polyring::LaurentPolynomial;

/// The Kauffman bracket by the skein rules: the last crossing is resolved
/// both ways, each resolution relabels arcs of the remaining crossings, and
/// the crossing-free base case is `delta^(circles - 1)`.
///
/// Shares no code with the state sum and serves as its oracle.
pub fn bracket_skein(d: &PlanarDiagram) -> LaurentPolynomial {
    let crossings: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.slots).collect();
    expand(&crossings, d.free_loops())
}

fn expand(crossings: &[[usize; 4]], loops: usize) -> LaurentPolynomial {
    let Some((&last, rest)) = crossings.split_last() else {
        return LaurentPolynomial::delta().pow(loops as u32 - 1);
    };
    let a = resolve(rest, last, SMOOTHINGS[0], loops);
    let b = resolve(rest, last, SMOOTHINGS[1], loops);
    a.shift(1) + b.shift(-1)
}

fn resolve(
    rest: &[[usize; 4]],
    mut corners: [usize; 4],
    pairs: [(usize, usize); 2],
    mut loops: usize,
) -> LaurentPolynomial {
    let mut rest = rest.to_vec();
    for (p, q) in pairs {
        let (keep, gone) = (corners[p], corners[q]);
        if keep == gone {
            loops += 1;
            continue;
        }
        for label in rest.iter_mut().flatten().chain(corners.iter_mut()) {
            if *label == gone {
                *label = keep;
            }
        }
    }
    expand(&rest, loops)
}
