//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus_cut, corpus_diagram, CUTS, DIAGRAMS};
use knot_split::cut::{glue, nc_link_circles, random_cut, CutPresentation, Side};
use knot_split::diagram::morse::random_closed;
use knot_split::diagram::{bracket_skein, bracket_state_sum, jones, writhe, writhe_factor};
use knot_split::partitions::{catalan, enumerate_all, enumerate_nc, SetPartition};
use knot_split::polyring::{parse, substitute_jones, LaurentPolynomial, RationalFunction, Variable};
use knot_split::splitting::{
    build_matrix, check_crossing_additivity, delta_determinant, invert_matrix, verify_corollary_two,
    verify_identity_one, verify_splitting, Level, MatrixKind,
};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANDOM_CUTS: usize = 60;
const RANDOM_DIAGRAMS: usize = 200;
const WITNESS: &str = "plain_n4_two_circles.cut";

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }
}

fn t(s: &str) -> LaurentPolynomial {
    parse(s, Variable::T).unwrap()
}

fn random_set() -> Vec<(String, CutPresentation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut all: Vec<(String, CutPresentation)> =
        CUTS.iter().map(|n| (n.to_string(), corpus_cut(n))).collect();
    for k in 0..RANDOM_CUTS {
        let n = 2 + k % 2;
        all.push((format!("random #{k} (n={n})"), random_cut(&mut rng, n, 5)));
    }
    all
}

fn order_two() -> Outcome {
    let d = build_matrix(2, MatrixKind::D).unwrap();
    let diag = t("-t^(1/2) - t^(-1/2)");
    let one = LaurentPolynomial::one();
    let d_ok = d.entries() == vec![vec![diag.clone(), one.clone()], vec![one.clone(), diag]];
    let inv = invert_matrix(&d).unwrap();
    let s = t("t^(1/2) + t^(-1/2)");
    let scale = RationalFunction::new(-one.clone(), &(&s * &s) - &one).unwrap();
    let expected = [[s.clone(), one.clone()], [one.clone(), s]];
    let c_ok = (0..2).all(|i| {
        (0..2)
            .all(|j| inv.inverse[i][j] == &scale * &RationalFunction::from_polynomial(expected[i][j].clone()))
    });
    Outcome::new(
        d_ok && c_ok,
        format!("d entries {}, inverse entries {}", ok(d_ok), ok(c_ok)),
    )
}

fn connected_sums() -> Outcome {
    let names = ["trefoil_right.pd", "hopf.pd", "figure_eight.pd"];
    let mut failures = Vec::new();
    let mut count = 0;
    for a in names {
        for b in names {
            let (da, db) = (corpus_diagram(a), corpus_diagram(b));
            let c = CutPresentation::connected_sum(&da, &db).unwrap();
            let j = jones(&glue(&c).unwrap());
            let split = verify_splitting(&c, Level::Jones).unwrap().holds;
            count += 1;
            if j != &jones(&da) * &jones(&db) || !split || c.n() != 1 {
                failures.push(format!("{a} # {b}"));
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("{count} sums, failures: {failures:?}"),
    )
}

fn circle_counts() -> Outcome {
    let mut total_failures = Vec::new();
    let mut loop_failures = Vec::new();
    let mut pairs = 0;
    let mut first_total = None;
    let mut first_loops = None;
    for n in 1..=6 {
        let nc = enumerate_nc(n).unwrap();
        let (mut tf, mut lf) = (0, 0);
        for a in &nc {
            for b in &nc {
                pairs += 1;
                let meet = a.meet(b).unwrap().block_count();
                let join = a.join(b).unwrap().block_count();
                let (total, loops) = nc_link_circles(a, b).unwrap();
                if total != n - meet + join {
                    tf += 1;
                    first_total.get_or_insert(format!(
                        "A={a} B={b}: {total} circles, formula {}",
                        n - meet + join
                    ));
                }
                if loops != n - meet {
                    lf += 1;
                    first_loops.get_or_insert(format!("A={a} B={b}: {loops} loops, formula {}", n - meet));
                }
            }
        }
        total_failures.push(tf);
        loop_failures.push(lf);
    }
    let pass = total_failures.iter().all(|&f| f == 0) && loop_failures.iter().all(|&f| f == 0);
    let mut o = Outcome::new(
        pass,
        format!("{pairs} pairs; total-count failures by n {total_failures:?}, loop-count failures by n {loop_failures:?}"),
    );
    if let Some(s) = first_total {
        o.notes.push(format!("first total-count counterexample {s}"));
    }
    if let Some(s) = first_loops {
        o.notes.push(format!("first loop-count counterexample {s}"));
    }
    if !pass {
        o.notes.push(
            "the total count holds for n <= 3 only; the loop count fails already for A = B = singletons"
                .to_string(),
        );
    }
    o
}

fn bracket_identities(set: &[(String, CutPresentation)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (name, c) in set {
        let mut holds = verify_identity_one(c).unwrap().holds;
        checks += 1;
        for side in [Side::One, Side::Two] {
            for p in enumerate_nc(c.n()).unwrap() {
                holds &= verify_corollary_two(c, side, &p).unwrap().holds;
                checks += 1;
            }
        }
        if !holds {
            failures.push(name.clone());
        }
    }
    let mut o = Outcome::new(
        failures.is_empty(),
        format!("{} cuts, {checks} identities, failures: {failures:?}", set.len()),
    );
    let witness = verify_identity_one(&corpus_cut(WITNESS)).unwrap();
    o.notes.push(format!(
        "outside the stated range: {WITNESS} (n=4) gives lhs {} against rhs {}",
        witness.lhs, witness.rhs
    ));
    o
}

fn splitting_formulas(set: &[(String, CutPresentation)]) -> Outcome {
    let mut failures = Vec::new();
    for (name, c) in set {
        let l = glue(c).unwrap();
        let additive = check_crossing_additivity(c).unwrap()
            && writhe(&l) == c.tangle(Side::One).writhe() + c.tangle(Side::Two).writhe();
        let bracket = verify_splitting(c, Level::Bracket).unwrap().holds;
        let jones = verify_splitting(c, Level::Jones).unwrap().holds;
        if !(additive && bracket && jones) {
            failures.push(name.clone());
        }
    }
    let mut o = Outcome::new(
        failures.is_empty(),
        format!(
            "{} cuts at both levels with writhe additivity, failures: {failures:?}",
            set.len()
        ),
    );
    let w = corpus_cut(WITNESS);
    let holds = [Level::Bracket, Level::Jones].map(|l| verify_splitting(&w, l).unwrap().holds);
    o.notes.push(format!(
        "outside the stated range: {WITNESS} (n=4) holds at bracket/jones level: {holds:?}"
    ));
    o
}

fn bracket_oracle() -> Outcome {
    let mut failures = Vec::new();
    for name in DIAGRAMS {
        let d = corpus_diagram(name);
        if d.crossing_count() <= 8 && bracket_state_sum(&d) != bracket_skein(&d) {
            failures.push(name.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 0..RANDOM_DIAGRAMS {
        let d = random_closed(&mut rng, 6);
        if bracket_state_sum(&d) != bracket_skein(&d) {
            failures.push(format!("random #{k}"));
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "{} corpus and {RANDOM_DIAGRAMS} random diagrams, failures: {failures:?}",
            DIAGRAMS.len()
        ),
    )
}

fn known_values() -> Outcome {
    let cases = [
        ("unknot.pd", "1"),
        ("hopf.pd", "-t^(1/2) - t^(5/2)"),
        ("trefoil_right.pd", "-t^4 + t^3 + t"),
    ];
    let mut failures = Vec::new();
    for (name, value) in cases {
        let d = corpus_diagram(name);
        let skein = substitute_jones(&(&writhe_factor(writhe(&d)) * &bracket_skein(&d)));
        let frozen = t(value);
        if skein != frozen || jones(&d) != frozen {
            failures.push(name);
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("{} values, failures: {failures:?}", cases.len()),
    )
}

fn nonsingularity() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in 1..=5 {
        let start = Instant::now();
        let det = delta_determinant(&build_matrix(n, MatrixKind::D).unwrap());
        let elapsed = start.elapsed();
        let degree = catalan(n) as i64 * (n as i64 - 1);
        let limit = if n <= 4 {
            Duration::from_secs(10)
        } else {
            Duration::from_secs(600)
        };
        let good = !det.is_zero()
            && det.max_exponent() == Some(degree)
            && det.coefficient(degree) == BigRational::from_integer(1.into())
            && elapsed < limit;
        pass &= good;
        parts.push(format!(
            "n={n} degree {degree} {} ({:.2} s)",
            ok(good),
            elapsed.as_secs_f64()
        ));
    }
    Outcome::new(pass, parts.join(", "))
}

fn lattice() -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut check = |cond: bool, what: &str| {
        if !cond && !failures.iter().any(|f| f == what) {
            failures.push(what.to_string());
        }
    };
    for n in 1..=5 {
        let all = enumerate_all(n).unwrap();
        for a in &all {
            for b in &all {
                let meet = a.meet(b).unwrap();
                let join = a.join(b).unwrap();
                check(
                    meet == b.meet(a).unwrap() && join == b.join(a).unwrap(),
                    "commutativity",
                );
                check(
                    a.meet(&join).unwrap() == *a && a.join(&meet).unwrap() == *a,
                    "absorption",
                );
                check(
                    meet.refines(a).unwrap() && meet.refines(b).unwrap(),
                    "meet is a lower bound",
                );
                check(
                    a.refines(&join).unwrap() && b.refines(&join).unwrap(),
                    "join is an upper bound",
                );
                check(meet.block_count() >= join.block_count(), "block inequality");
                check(
                    (meet.block_count() == join.block_count()) == (a == b),
                    "equality case",
                );
                if a.is_noncrossing() && b.is_noncrossing() {
                    check(meet.is_noncrossing(), "noncrossing closure under meet");
                }
            }
        }
        if n <= 4 {
            for a in &all {
                for b in &all {
                    for c in &all {
                        let m = a.meet(b).unwrap().meet(c).unwrap() == a.meet(&b.meet(c).unwrap()).unwrap();
                        let j = a.join(b).unwrap().join(c).unwrap() == a.join(&b.join(c).unwrap()).unwrap();
                        check(m && j, "associativity");
                    }
                }
            }
        }
    }
    let a: SetPartition = "{{1,3},{2},{4}}".parse().unwrap();
    let b: SetPartition = "{{1},{2,4},{3}}".parse().unwrap();
    let j = a.join(&b).unwrap();
    check(
        a.is_noncrossing() && b.is_noncrossing() && j.to_string() == "{{1,3},{2,4}}" && !j.is_noncrossing(),
        "join witness",
    );
    Outcome::new(
        failures.is_empty(),
        format!("exhaustive n <= 5, failures: {failures:?}"),
    )
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "wrong"
    }
}

fn main() -> ExitCode {
    // libtest flags such as --nocapture are accepted and ignored
    let set = random_set();
    let criteria: Vec<Criterion> = vec![
        (
            "order-two matrix and inverse",
            Duration::from_secs(1),
            Box::new(order_two),
        ),
        (
            "connected sums factor",
            Duration::from_secs(1),
            Box::new(connected_sums),
        ),
        (
            "circle counts over noncrossing pairs, n = 1..6",
            Duration::from_secs(10),
            Box::new(circle_counts),
        ),
        (
            "bracket identities on corpus and random cuts",
            Duration::from_secs(60),
            Box::new(|| bracket_identities(&set)),
        ),
        (
            "splitting formulas, division free",
            Duration::from_secs(120),
            Box::new(|| splitting_formulas(&set)),
        ),
        (
            "state sum against skein recursion",
            Duration::from_secs(30),
            Box::new(bracket_oracle),
        ),
        (
            "known Jones polynomials",
            Duration::from_secs(30),
            Box::new(known_values),
        ),
        (
            "determinant of d for n <= 5",
            Duration::from_secs(610),
            Box::new(nonsingularity),
        ),
        ("partition lattice", Duration::from_secs(30), Box::new(lattice)),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed < *limit;
        failed += !pass as usize;
        println!(
            "criterion {} {}: {name} ({:.3} s, limit {} s): {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            o.detail
        );
        for note in &o.notes {
            println!("    {note}");
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
