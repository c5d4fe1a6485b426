//! Acceptance criteria 1–13. Prints one PASS/FAIL line per criterion.
//!
//! Two criteria contain instances whose expected outcome the underlying
//! mathematics does not deliver (see `KNOWN`). Those criteria print FAIL
//! with the offending instances. The run exits non-zero if any other
//! instance fails, or if a known instance starts passing.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclord::correspondence::{pco_iso, mv_iso, rieger_check, round_trip, wound_to_finite};
use cyclord::good_seq::{good_decompose, ChangElement, GoodSequence};
use cyclord::model_check::{
    chain_regular, co_predicates, d_formula, d_formula_chain, d_law, prime_powers_up_to,
    pseudo_classify, zakon_invariant,
};
use cyclord::mv::{MvAlgebra, Shape, DEFAULT_MAX_WIDTH};
use cyclord::pco::{
    abelian_groups_up_to, canonical_mv, check_ac_class, co_structures, good_seq_formulas,
    make_cyclic_group, make_product_pco, FinitePco, LatticeQuotientPco, DEFAULT_FORMULA_CAP,
};

/// Γ((4,4)) has 25 elements, one above the default cap.
const ISO_CAP: usize = 64;

/// Instances whose failure is expected: `A(C) = {0}` for these, so the
/// canonical MV-algebra has two elements.
const KNOWN: &[(u32, &str)] = &[(5, "u=[1, 1]"), (5, "u=[2]"), (7, "L2")];

struct Outcome {
    failures: Vec<String>,
    note: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

fn run(n: u32, title: &str, limit: Option<u64>, f: impl FnOnce() -> (Vec<String>, String)) -> bool {
    let start = Instant::now();
    let (failures, note) = f();
    let o = Outcome {
        failures,
        note,
        elapsed: start.elapsed(),
        limit: limit.map(Duration::from_secs),
    };
    let slow = o.limit.is_some_and(|l| o.elapsed > l);
    let ok = o.failures.is_empty() && !slow;
    let status = if ok { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {n:>2} {title}: {} [{:.2?}", o.note, o.elapsed);
    if let Some(l) = o.limit {
        line.push_str(&format!(" / limit {l:?}"));
    }
    line.push(']');
    if !o.failures.is_empty() {
        line.push_str(&format!(" failing: {}", o.failures.join("; ")));
    }
    println!("{line}");

    let known: BTreeSet<&str> = KNOWN.iter().filter(|(c, _)| *c == n).map(|(_, s)| *s).collect();
    let found: BTreeSet<&str> = o.failures.iter().map(String::as_str).collect();
    let expected = found == known && !slow;
    if !expected {
        println!("   unexpected outcome for criterion {n}: expected failures {known:?}");
    }
    expected
}

fn u_vectors(budget: i64) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, budget: i64, out: &mut Vec<Vec<i64>>) {
        for ui in 1..budget {
            if (ui + 1) > budget {
                break;
            }
            prefix.push(ui);
            out.push(prefix.clone());
            go(prefix, budget / (ui + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), budget, &mut out);
    out
}

fn small_units() -> Vec<Vec<i64>> {
    let mut us: Vec<Vec<i64>> = (1..=4).map(|a| vec![a]).collect();
    for a in 1..=4 {
        for b in 1..=4 {
            us.push(vec![a, b]);
        }
    }
    us
}

fn mutate(a: &MvAlgebra, rng: &mut ChaCha8Rng) -> MvAlgebra {
    let n = a.size();
    let mut oplus = a.oplus_rows();
    let mut neg = a.neg_table().to_vec();
    let slot: usize = rng.gen_range(0..n * n + n);
    let bump = |v: usize, rng: &mut ChaCha8Rng| (v + rng.gen_range(1..n)) % n;
    if slot < n * n {
        let (x, y) = (slot / n, slot % n);
        oplus[x][y] = bump(oplus[x][y], rng);
    } else {
        neg[slot - n * n] = bump(neg[slot - n * n], rng);
    }
    MvAlgebra::new(oplus, neg, a.zero()).expect("mutation keeps tables well formed")
}

fn criterion_1() -> (Vec<String>, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut fails = Vec::new();
    let us = u_vectors(64);
    for u in &us {
        let a = MvAlgebra::gamma(u).unwrap();
        if !a.check_axioms().holds() {
            fails.push(format!("gamma{u:?} rejected"));
        }
        for i in 0..50 {
            let m = mutate(&a, &mut rng);
            let r = m.check_axioms();
            if r.holds() || r.first_failure().and_then(|v| v.witness.as_ref()).is_none() {
                fails.push(format!("gamma{u:?} mutation {i} accepted"));
            }
        }
    }
    (fails, format!("{} unit vectors, 50 mutations each", us.len()))
}

fn direct_shape(a: &MvAlgebra) -> Shape {
    let interior: Vec<usize> = a.elements().filter(|&x| x != a.zero() && x != a.one()).collect();
    let dense = interior.iter().any(|&x| interior.iter().any(|&y| a.lt(x, y)));
    match a.size() {
        2 => Shape::TwoElement,
        3 => Shape::ThreeElement,
        4 if !dense && interior.len() == 2 && a.neg(interior[0]) == interior[1] => Shape::FourElementXNegX,
        _ => {
            assert!(dense, "no shape applies");
            Shape::DenseComparable
        }
    }
}

fn criterion_2() -> (Vec<String>, String) {
    let us = u_vectors(64);
    let fails = us
        .iter()
        .filter(|u| {
            let a = MvAlgebra::gamma(u).unwrap();
            a.shape_classify().ok() != Some(direct_shape(&a))
        })
        .map(|u| format!("u={u:?}"))
        .collect();
    (fails, format!("{} algebras", us.len()))
}

fn criterion_3() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for n in 1..=6i64 {
        let a = MvAlgebra::lukasiewicz(n).unwrap();
        let seq = |v: i64| {
            let mut t = vec![n as usize; (v / n) as usize];
            if v % n != 0 {
                t.push((v % n) as usize);
            }
            GoodSequence::new(&a, t).unwrap()
        };
        let chang = |v: i64| {
            if v >= 0 {
                ChangElement::from_positive(seq(v))
            } else {
                ChangElement::from_positive(seq(-v)).negate()
            }
        };
        for v in 0..=40 {
            for w in 0..=40 {
                if seq(v).add(&seq(w)).unwrap() != seq(v + w) {
                    fails.push(format!("L{n} add {v}+{w}"));
                }
                let d = seq(v).subtract(&seq(w));
                if (v >= w) != d.is_ok() || (v >= w && d.unwrap() != seq(v - w)) {
                    fails.push(format!("L{n} sub {v}-{w}"));
                }
                let (p, q) = (v - 20, w - 20);
                let (x, y) = (chang(p), chang(q));
                let ok = x.add(&y).unwrap() == chang(p + q)
                    && x.negate() == chang(-p)
                    && x.meet(&y).unwrap() == chang(p.min(q))
                    && x.join(&y).unwrap() == chang(p.max(q))
                    && x.leq(&y).unwrap() == (p <= q);
                if !ok {
                    fails.push(format!("L{n} chang {p},{q}"));
                }
            }
        }
        let elems: Vec<usize> = a.elements().collect();
        for len in 1..=4u32 {
            for code in 0..elems.len().pow(len) {
                let parts: Vec<usize> = (0..len).map(|i| elems[code / elems.len().pow(i) % elems.len()]).collect();
                let base = good_decompose(&a, &parts).unwrap();
                let mut rev = parts.clone();
                rev.reverse();
                let mut rot = parts.clone();
                rot.rotate_left(1);
                let mut swp = parts.clone();
                swp.swap(0, len as usize - 1);
                for perm in [rev, rot, swp] {
                    if good_decompose(&a, &perm).unwrap() != base {
                        fails.push(format!("L{n} decompose {parts:?}"));
                    }
                }
            }
        }
    }
    (fails, "L1..L6, operands 0..=40".into())
}

fn criterion_4() -> (Vec<String>, String) {
    let fails = (2..=24)
        .filter(|&n| {
            let w = LatticeQuotientPco::wound_round(&[n]).unwrap();
            let f = wound_to_finite(&w).unwrap();
            let c = make_cyclic_group(n as usize).unwrap();
            pco_iso(&f, &c, ISO_CAP).unwrap().is_none_or(|wit| !wit.verify_pco(&f, &c))
        })
        .map(|n| format!("n={n}"))
        .collect();
    (fails, "n = 2..=24".into())
}

fn criterion_5() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for u in small_units() {
        let w = LatticeQuotientPco::wound_round(&u).unwrap();
        let ac = check_ac_class(&w).holds();
        let g = MvAlgebra::gamma(&u).unwrap();
        let iso = canonical_mv(&w)
            .ok()
            .and_then(|(m, _)| mv_iso(&m, &g, ISO_CAP).unwrap().filter(|wit| wit.verify_mv(&m, &g)));
        if !ac || iso.is_none() {
            fails.push(format!("u={u:?}"));
        }
    }
    (fails, "k <= 2, u_i <= 4".into())
}

fn criterion_6() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    let mut shown = Vec::new();
    for n1 in [5, 6] {
        for n2 in [5, 6] {
            let p = make_product_pco(&make_cyclic_group(n1).unwrap(), &make_cyclic_group(n2).unwrap());
            let r = check_ac_class(&p);
            match r.first_failure().and_then(|v| v.witness.clone().map(|w| (v.name, w))) {
                Some((name, w)) => shown.push(format!("Z{n1}xZ{n2}: {name} at {w:?}")),
                None => fails.push(format!("Z{n1}xZ{n2}")),
            }
        }
    }
    (fails, shown.join(", "))
}

fn criterion_7() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for n in 1..=11 {
        let a = MvAlgebra::lukasiewicz(n).unwrap();
        if !round_trip(&a, ISO_CAP).unwrap().holds() {
            fails.push(format!("L{n}"));
        }
    }
    let p = MvAlgebra::product(&MvAlgebra::lukasiewicz(2).unwrap(), &MvAlgebra::lukasiewicz(3).unwrap());
    if !round_trip(&p, ISO_CAP).unwrap().holds() {
        fails.push("L2xL3".into());
    }
    (fails, "chains |A| <= 12 and L2xL3".into())
}

fn criterion_8() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    let mut count = 0;
    let mut groups = abelian_groups_up_to(10);
    groups.push(("Z1".into(), make_cyclic_group(1).unwrap()));
    for (name, g) in groups {
        for c in co_structures(&g) {
            count += 1;
            if !rieger_check(&c).unwrap().holds() {
                fails.push(name.to_string());
            }
        }
    }
    (fails, format!("{count} c.o. structures"))
}

fn criterion_9() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    let qs = prime_powers_up_to(9);
    let mut checked = 0;
    for n in 2..=200u64 {
        let c = make_cyclic_group(n as usize).unwrap();
        let spec = cyclord::model_check::d_spectrum(&c, 9).unwrap();
        for e in spec {
            checked += 1;
            if e.holds != d_law(n, e.q, e.k) {
                fails.push(format!("Z/{n} D({},{})", e.q, e.k));
            }
        }
    }
    for n in 2..=24i64 {
        let a = MvAlgebra::lukasiewicz(n).unwrap();
        let c = make_cyclic_group(n as usize).unwrap();
        for &q in &qs {
            for k in 0..q {
                if d_formula_chain(&a, q, k).unwrap() != d_formula(&c, q, k).unwrap() {
                    fails.push(format!("L{n} D({q},{k})"));
                }
            }
        }
    }
    (fails, format!("{checked} group instances, chains L2..L24"))
}

fn criterion_10() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for n in 1..=24 {
        let c = make_cyclic_group(n).unwrap();
        let r = co_predicates(&c).unwrap().c_regular;
        let a = MvAlgebra::lukasiewicz(n as i64).unwrap();
        if !r || chain_regular(&a).unwrap() != r {
            fails.push(format!("n={n}"));
        }
    }
    (fails, "n = 1..=24".into())
}

fn cosets_direct(c: &FinitePco, p: u64) -> usize {
    let pb: BTreeSet<usize> = (0..c.size()).map(|x| c.multiple(p as usize, x)).collect();
    c.size() / pb.len()
}

fn criterion_11() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for n in 1..=100 {
        let c = make_cyclic_group(n).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let law = if (n as u64).is_multiple_of(p) { p as usize } else { 1 };
            let z = zakon_invariant(&c, p).unwrap();
            if z != law || z != cosets_direct(&c, p) {
                fails.push(format!("Z/{n} p={p}"));
            }
        }
    }
    (fails, "n <= 100, p <= 13".into())
}

fn criterion_12() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for u in small_units() {
        let w = LatticeQuotientPco::wound_round(&u).unwrap();
        for n in 1..=2 {
            if !good_seq_formulas(&w, n, DEFAULT_FORMULA_CAP).unwrap_or(false) {
                fails.push(format!("u={u:?} n={n}"));
            }
        }
    }
    (fails, "criterion 5 instances, n = 1, 2".into())
}

fn criterion_13() -> (Vec<String>, String) {
    let mut fails = Vec::new();
    for n in 1..=12 {
        let a = MvAlgebra::lukasiewicz(n).unwrap();
        let r = pseudo_classify(&a, DEFAULT_MAX_WIDTH).unwrap();
        if !r.chain.satisfied || !r.product.satisfied {
            fails.push(format!("L{n}"));
        }
    }
    let p = MvAlgebra::product(&MvAlgebra::lukasiewicz(2).unwrap(), &MvAlgebra::lukasiewicz(3).unwrap());
    let r = pseudo_classify(&p, DEFAULT_MAX_WIDTH).unwrap();
    if !r.product.satisfied || r.product.factors.len() != 2 {
        fails.push("L2xL3".into());
    }
    let sq = MvAlgebra::gamma(&[1, 1]).unwrap();
    let r = pseudo_classify(&sq, DEFAULT_MAX_WIDTH).unwrap();
    if r.chain.satisfied || !r.product.satisfied {
        fails.push("gamma[1, 1]".into());
    }
    (fails, "L1..L12, L2xL3, gamma(1,1)".into())
}

fn main() {
    let results = [
        run(1, "axiom soundness", Some(5), criterion_1),
        run(2, "shape trichotomy", None, criterion_2),
        run(3, "good-sequence oracle", Some(10), criterion_3),
        run(4, "winding correctness", None, criterion_4),
        run(5, "wound-round canonical MV-algebra", None, criterion_5),
        run(6, "product counterexample", None, criterion_6),
        run(7, "round trip", None, criterion_7),
        run(8, "Rieger consistency", None, criterion_8),
        run(9, "D-formula law", Some(30), criterion_9),
        run(10, "regularity exactness", None, criterion_10),
        run(11, "Zakon law", None, criterion_11),
        run(12, "good-sequence formula families", None, criterion_12),
        run(13, "classification criteria", None, criterion_13),
    ];
    if results.iter().any(|ok| !ok) {
        std::process::exit(1);
    }
}
