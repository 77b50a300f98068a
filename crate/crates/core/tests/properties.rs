use proptest::prelude::*;

use covercensus::moebius::pgl2_order;
use covercensus::{Embedding, Field, FqElem, Moebius, PP1};

const FIELDS: [(u32, u32); 8] = [(2, 1), (2, 3), (2, 4), (3, 2), (5, 1), (5, 2), (7, 1), (13, 1)];

fn field_and_elems(k: usize) -> impl Strategy<Value = (Field, Vec<FqElem>)> {
    (0..FIELDS.len(), proptest::collection::vec(any::<u32>(), k)).prop_map(|(i, raw)| {
        let (p, n) = FIELDS[i];
        let f = Field::auto(p, n).unwrap();
        let elems = raw.iter().map(|r| f.from_index(r % f.order())).collect();
        (f, elems)
    })
}

fn moebius(f: &Field, e: &[FqElem]) -> Option<Moebius> {
    Moebius::new(&e[0], &e[1], &e[2], &e[3]).ok().filter(|m| m.field().same(f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((_f, e) in field_and_elems(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + &(-a), a.field().zero());
        prop_assert_eq!(a - b, a + &(-b));
        if !a.is_zero() {
            prop_assert_eq!(a * &a.inv().unwrap(), a.field().one());
            prop_assert_eq!(a.inv().unwrap(), a.inv_euclid().unwrap());
        }
    }

    #[test]
    fn frobenius_is_additive_and_has_order_n((f, e) in field_and_elems(2)) {
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!((a + b).frobenius(), &a.frobenius() + &b.frobenius());
        let mut x = a.clone();
        for _ in 0..f.degree() {
            x = x.frobenius();
        }
        prop_assert_eq!(&x, a);
    }

    #[test]
    fn embedding_is_a_ring_map((f, e) in field_and_elems(2), r in 1u32..3) {
        prop_assume!((f.order() as u64).pow(r) <= 1 << 16);
        let emb = Embedding::tower(&f, r).unwrap();
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!(emb.map(&(a + b)).unwrap(), &emb.map(a).unwrap() + &emb.map(b).unwrap());
        prop_assert_eq!(emb.map(&(a * b)).unwrap(), &emb.map(a).unwrap() * &emb.map(b).unwrap());
        prop_assert_eq!(emb.preimage(&emb.map(a).unwrap()).unwrap(), Some(a.clone()));
    }

    #[test]
    fn moebius_group_laws((f, e) in field_and_elems(13)) {
        let (Some(g), Some(h), Some(k)) = (moebius(&f, &e[0..4]), moebius(&f, &e[4..8]), moebius(&f, &e[8..12])) else {
            return Ok(());
        };
        let x = if e[12].index() % 7 == 0 { PP1::Infinity } else { PP1::Affine(e[12].clone()) };
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(gh.apply(&x).unwrap(), g.apply(&h.apply(&x).unwrap()).unwrap());
        prop_assert_eq!(gh.compose(&k).unwrap(), g.compose(&h.compose(&k).unwrap()).unwrap());
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        let ord = g.order();
        prop_assert!(g.pow(ord).is_identity());
        prop_assert_eq!(pgl2_order(f.order() as u64) % ord, 0);
    }

    #[test]
    fn three_point_maps_interpolate((f, e) in field_and_elems(6)) {
        let pt = |x: &FqElem| if x.index() == 1 { PP1::Infinity } else { PP1::Affine(x.clone()) };
        let src: Vec<PP1> = e[0..3].iter().map(pt).collect();
        let dst: Vec<PP1> = e[3..6].iter().map(pt).collect();
        let distinct = |v: &[PP1]| v[0] != v[1] && v[1] != v[2] && v[0] != v[2];
        prop_assume!(distinct(&src) && distinct(&dst));
        let g = Moebius::from_three_points([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]).unwrap();
        prop_assert!(g.field().same(&f));
        for (s, d) in src.iter().zip(&dst) {
            prop_assert_eq!(&g.apply(s).unwrap(), d);
        }
    }

    #[test]
    fn fixed_points_are_fixed((f, e) in field_and_elems(4)) {
        let Some(g) = moebius(&f, &e) else { return Ok(()) };
        prop_assume!(!g.is_identity());
        let emb = Embedding::tower(&f, 2).unwrap();
        let big = g.lift(&emb).unwrap();
        let fixed = g.fixed_points_in(&emb).unwrap();
        prop_assert!(matches!(fixed.len(), 1 | 2));
        for x in &fixed {
            prop_assert_eq!(&big.apply(x).unwrap(), x);
        }
    }
}
