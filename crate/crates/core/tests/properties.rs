use orw_core::grassmann::ExtElement;
use orw_core::scalar::{rat, PolyScalar, Rational};
use orw_core::superalg::{koszul, named, orw, DegreeWindow, HalfInt};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = PolyScalar> {
    prop::collection::vec((small_rat(), 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        let (x, y) = (PolyScalar::var("x"), PolyScalar::var("y"));
        terms.into_iter().fold(PolyScalar::zero(), |acc, (c, i, j)| {
            &acc + &(&x.pow(i) * &y.pow(j)).scale(&c)
        })
    })
}

fn ext() -> impl Strategy<Value = ExtElement> {
    prop::collection::vec((small_rat(), prop::collection::vec(-3i64..3, 0..3)), 0..3).prop_map(|terms| {
        let mut e = ExtElement::zero();
        for (c, idx) in terms {
            let letters: Vec<HalfInt> = idx.into_iter().map(HalfInt::half).collect();
            e.add_scaled(&c, &ExtElement::from_letters(&letters));
        }
        e
    })
}

proptest! {
    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn difference_lowers_degree(p in poly()) {
        let d = p.degree_in("x");
        prop_assert!(p.finite_difference("x", d as usize + 1).is_zero());
        let shifted = p.subst("x", &(&PolyScalar::var("x") + &PolyScalar::one()));
        prop_assert_eq!(p.finite_difference("x", 1), &p - &shifted);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), v in small_rat()) {
        let at = |f: &PolyScalar| f.subst("x", &PolyScalar::constant(v.clone()));
        prop_assert_eq!(at(&(&p * &q)), &at(&p) * &at(&q));
    }

    #[test]
    fn wedge_is_associative_and_graded(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        let g = ExtElement::from_letters(&[HalfInt::half(0)]);
        prop_assert!(g.wedge(&g).is_zero());
    }

    #[test]
    fn odd_letters_anticommute(i in -4i64..4, j in -4i64..4) {
        let (x, y) = (HalfInt::half(i), HalfInt::half(j));
        let xy = ExtElement::from_letters(&[x, y]);
        let yx = ExtElement::from_letters(&[y, x]);
        let mut sum = xy.clone();
        sum.add_scaled(&rat(1, 1), &yx);
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn halfint_parse_round_trips(d in -400i64..400) {
        let h = HalfInt::from_doubled(d);
        prop_assert_eq!(HalfInt::parse(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn brackets_are_super_antisymmetric(l in -2i64..=2, eps in 0i64..=1, i in 0usize..64, j in 0usize..64) {
        for alg in [orw(rat(l, 2), eps), named("ns"), named("q")] {
            let gens = alg.generators_in(DegreeWindow::degrees(-3, 3));
            let (x, y) = (gens[i % gens.len()], gens[j % gens.len()]);
            let mut lhs = alg.bracket(x, y);
            let sign = -koszul(alg.parity(x), alg.parity(y));
            lhs.add_scaled(&(-sign), &alg.bracket(y, x));
            prop_assert!(lhs.is_zero(), "{} {} {}", alg.name(), alg.format_generator(x), alg.format_generator(y));
        }
    }
}
