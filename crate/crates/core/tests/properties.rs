use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclord::correspondence::{co_from_chain, mv_iso, pco_iso, DEFAULT_ISO_CAP};
use cyclord::io::{parse_structure, serialize_structure, Structure};
use cyclord::model_check::{
    chain_regular, co_predicates, d_formula, d_law, eq_invariants, Bounds, Subject,
};
use cyclord::mv::MvAlgebra;
use cyclord::pco::{make_cyclic_group, make_product_pco, FinitePco};

fn relabel_pco(c: &FinitePco, seed: u64) -> (FinitePco, Vec<usize>) {
    let n = c.size();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut add = vec![vec![0; n]; n];
    let mut neg = vec![0; n];
    for x in 0..n {
        neg[perm[x]] = perm[c.neg(x)];
        for y in 0..n {
            add[perm[x]][perm[y]] = perm[c.add(x, y)];
        }
    }
    let triples: Vec<[usize; 3]> = c.triples().iter().map(|t| t.map(|v| perm[v])).collect();
    (FinitePco::new(add, neg, perm[c.zero()], &triples).unwrap(), perm)
}

fn relabel_mv(a: &MvAlgebra, seed: u64) -> MvAlgebra {
    let n = a.size();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut oplus = vec![vec![0; n]; n];
    let mut neg = vec![0; n];
    for x in 0..n {
        neg[perm[x]] = perm[a.neg(x)];
        for y in 0..n {
            oplus[perm[x]][perm[y]] = perm[a.oplus(x, y)];
        }
    }
    MvAlgebra::new(oplus, neg, perm[a.zero()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_relabeling(n in 1usize..14, m in 1usize..4, seed in any::<u64>()) {
        let c = make_product_pco(&make_cyclic_group(n).unwrap(), &make_cyclic_group(m).unwrap());
        let (d, _) = relabel_pco(&c, seed);
        let b = Bounds::default();
        prop_assert_eq!(eq_invariants(Subject::Pco(&c), b).unwrap(), eq_invariants(Subject::Pco(&d), b).unwrap());
        let w = pco_iso(&c, &d, 64).unwrap();
        prop_assert!(w.is_some_and(|w| w.verify_pco(&c, &d)));
    }

    #[test]
    fn mv_invariants_survive_relabeling(u in prop::collection::vec(1i64..4, 1..3), seed in any::<u64>()) {
        let a = MvAlgebra::gamma(&u).unwrap();
        let b = relabel_mv(&a, seed);
        prop_assert!(b.check_axioms().holds());
        let bounds = Bounds::default();
        prop_assert_eq!(eq_invariants(Subject::Mv(&a), bounds).unwrap(), eq_invariants(Subject::Mv(&b), bounds).unwrap());
        let w = mv_iso(&a, &b, DEFAULT_ISO_CAP).unwrap();
        prop_assert!(w.is_some_and(|w| w.verify_mv(&a, &b)));
    }

    #[test]
    fn d_formula_matches_law(n in 2u64..120, qi in 0usize..7, k in 0u64..9) {
        let q = [2u64, 3, 4, 5, 7, 8, 9][qi];
        let k = k % q;
        let c = make_cyclic_group(n as usize).unwrap();
        prop_assert_eq!(d_formula(&c, q, k).unwrap(), d_law(n, q, k));
    }

    #[test]
    fn regularity_equivalence(n in 1i64..17) {
        let a = MvAlgebra::lukasiewicz(n).unwrap();
        let c = co_from_chain(&a).unwrap();
        prop_assert_eq!(chain_regular(&a).unwrap(), co_predicates(&c).unwrap().c_regular);
    }

    #[test]
    fn serialization_round_trips(n in 1usize..8, m in 1usize..4, seed in any::<u64>()) {
        let c = make_product_pco(&make_cyclic_group(n).unwrap(), &make_cyclic_group(m).unwrap());
        let (d, _) = relabel_pco(&c, seed);
        let s = Structure::Pco(d);
        let text = serialize_structure(&s);
        let back = parse_structure(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(serialize_structure(&back), text);
    }
}
