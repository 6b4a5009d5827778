mod common;

use common::{corpus, is_artinian, random_artinian, random_map, seeded};
use frobforge::algebra::relative_frobenius;
use frobforge::homology::{algebra_as_module, frobenius_pushforward, tor};
use frobforge::oracle::{
    enumerate_algebra, oracle_map_bijective, oracle_subring_closure, oracle_tensor_dimension,
    subring_closure,
};
use frobforge::pipeline::is_relatively_semiperfect;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn engine_and_oracle_agree_on_artinian_corpus() {
    let mut checked = 0;
    for (name, f) in corpus() {
        if !is_artinian(&f) {
            continue;
        }
        checked += 1;
        assert_eq!(
            is_relatively_semiperfect(&f).unwrap().semiperfect,
            oracle_subring_closure(&f).unwrap(),
            "{name}"
        );
        let rf = relative_frobenius(&f).unwrap();
        if enumerate_algebra(rf.domain()).is_ok() {
            assert_eq!(
                rf.is_isomorphism().unwrap(),
                oracle_map_bijective(&rf).unwrap(),
                "{name}"
            );
        }
        let m = algebra_as_module(&f).unwrap();
        let n = frobenius_pushforward(f.domain()).unwrap();
        let t0 = tor(&m, &n, 0).unwrap();
        assert_eq!(
            t0[0].dimension,
            Some(oracle_tensor_dimension(&m, &n).unwrap()),
            "{name}"
        );
    }
    assert!(checked >= 6);
}

#[test]
fn closure_of_dual_numbers_over_the_prime_field() {
    let dual = common::alg(2, &["x"], &["x^2"]);
    let c = subring_closure(&common::structure(&dual)).unwrap();
    assert_eq!((c.size, c.total), (2, 4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tables_satisfy_ring_axioms(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = if seed % 2 == 0 { 2 } else { 3 };
        let a = random_artinian(&mut rng, p, 10, &["x", "y"]);
        let t = enumerate_algebra(&a).unwrap();
        let n = t.element_count();
        for _ in 0..8 {
            let [x, y, z] = [0; 3].map(|_| t.element(rng.gen_range(0..n)));
            prop_assert_eq!(t.mul(&t.mul(&x, &y), &z), t.mul(&x, &t.mul(&y, &z)));
            prop_assert_eq!(t.mul(&x, &t.add(&y, &z)), t.add(&t.mul(&x, &y), &t.mul(&x, &z)));
            prop_assert_eq!(t.mul(&x, &y), t.mul(&y, &x));
            prop_assert_eq!(t.mul(&t.one(), &x), x.clone());
            // Products re-expand against normal forms.
            let prod = &t.to_polynomial(&x) * &t.to_polynomial(&y);
            prop_assert_eq!(t.to_vector(&prod).unwrap(), t.mul(&x, &y));
        }
    }

    #[test]
    fn enumeration_is_exhaustive(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_artinian(&mut rng, 3, 6, &["x", "y"]);
        let t = enumerate_algebra(&a).unwrap();
        let mut seen: Vec<u64> = t.elements().map(|v| t.index_of(&v)).collect();
        seen.dedup();
        prop_assert_eq!(seen.len() as u64, t.element_count());
    }

    #[test]
    fn engine_and_oracle_agree_on_random_maps(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = if seed % 2 == 0 { 2 } else { 3 };
        let r = random_artinian(&mut rng, p, 6, &["t", "u"]);
        let s = random_artinian(&mut rng, p, 6, &["x", "y"]);
        if let Some(f) = random_map(&mut rng, &r, &s) {
            let rf = relative_frobenius(&f).unwrap();
            if enumerate_algebra(rf.domain()).is_ok() {
                prop_assert_eq!(rf.is_isomorphism().unwrap(), oracle_map_bijective(&rf).unwrap());
            }
        }
    }
}
