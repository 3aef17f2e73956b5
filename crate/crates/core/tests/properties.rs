//! Invariants checked on generated inputs.

use proptest::prelude::*;

use tangent_cone::basis::{ideal_equal, local_contains, Ideal};
use tangent_cone::deform::{
    dehomogenize, extended_ring, homogenize_into, specialize_t_zero, t_decompose, t_degree, tangent_cone,
};
use tangent_cone::monomial::Monomial;
use tangent_cone::spectrum::{connectedness_of_primes, min_primes_monomial};
use tangent_cone::{parse_polynomial, CoefficientField, MonomialOrder, Polynomial, Ring, RingRef};

fn ring3() -> RingRef {
    Ring::rational(&["x", "y", "z"])
}

/// Random local bases over Q can grow huge coefficients.
fn ring3_mod() -> RingRef {
    Ring::new(&["x", "y", "z"], CoefficientField::Prime(32003), MonomialOrder::DegRevLex).unwrap()
}

fn poly_strategy(max_deg: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-6i64..=6, prop::collection::vec(0..=max_deg, 3)), 1..6)
}

/// Up to four terms of total degree at most `max_deg`.
fn small_poly_strategy(max_deg: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    let exps = prop::collection::vec(0..=max_deg, 3).prop_map(move |mut e| {
        while e.iter().sum::<u32>() > max_deg {
            let i = (0..3).max_by_key(|&i| e[i]).unwrap();
            e[i] -= 1;
        }
        e
    });
    prop::collection::vec((-6i64..=6, exps), 1..5)
}

fn build(r: &RingRef, shape: &[(i64, Vec<u32>)]) -> Polynomial {
    let terms = shape.iter().map(|(c, e)| (r.field().from_i64(*c), Monomial::from_slice(e))).collect();
    Polynomial::from_terms(r, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hom_is_multiplicative(a in poly_strategy(3), b in poly_strategy(3)) {
        let r = ring3();
        let (f, g) = (build(&r, &a), build(&r, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let ext = extended_ring(&r);
        let lhs = homogenize_into(&(&f * &g), &ext).unwrap();
        let rhs = &homogenize_into(&f, &ext).unwrap() * &homogenize_into(&g, &ext).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dehomogenize_inverts_hom(a in poly_strategy(4)) {
        let r = ring3();
        let f = build(&r, &a);
        prop_assume!(!f.is_zero());
        let h = homogenize_into(&f, &extended_ring(&r)).unwrap();
        prop_assert_eq!(dehomogenize(&h).unwrap(), f.clone());
        prop_assert_eq!(specialize_t_zero(&h).unwrap(), f.initial_form().unwrap());
        // hom(f) is t-homogeneous of degree o(f)
        prop_assert_eq!(t_degree(&h).unwrap(), Some(i64::from(f.order_of().unwrap())));
    }

    #[test]
    fn t_parts_resum(a in prop::collection::vec((-6i64..=6, prop::collection::vec(0..=3u32, 4)), 1..8)) {
        let ext = extended_ring(&ring3());
        let f = build(&ext, &a);
        let parts = t_decompose(&f).unwrap();
        let mut sum = Polynomial::zero(&ext);
        for (d, p) in &parts {
            prop_assert_eq!(t_degree(p).unwrap(), Some(*d));
            sum = &sum + p;
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn display_parses_back(a in poly_strategy(4)) {
        let r = ring3();
        let f = build(&r, &a);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn groebner_basis_ignores_generator_order(
        gens in prop::collection::vec(small_poly_strategy(3), 1..5),
        seed in any::<u64>(),
    ) {
        let r = ring3();
        let polys: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let mut shuffled = polys.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        if seed % 2 == 0 {
            shuffled.reverse();
        }
        let scaled: Vec<Polynomial> = shuffled.iter().map(|g| g.scale(&r.field().from_i64(-3))).collect();
        let a = Ideal::new(&r, polys).unwrap().groebner().unwrap();
        let b = Ideal::new(&r, scaled).unwrap().groebner().unwrap();
        prop_assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn homogeneous_ideals_are_their_own_tangent_cones(gens in prop::collection::vec(prop::collection::vec((-4i64..=4, 0usize..6), 1..4), 1..3)) {
        let r = ring3();
        let quad = ["x^2", "x*y", "y^2", "y*z", "z^2", "x*z"];
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|g| {
                let terms = g.iter().map(|(c, i)| format!("({c})*{}", quad[*i])).collect::<Vec<_>>().join(" + ");
                parse_polynomial(&terms, &r).unwrap()
            })
            .filter(|p| !p.is_zero())
            .collect();
        prop_assume!(!polys.is_empty());
        let i = Ideal::new(&r, polys).unwrap();
        prop_assert!(ideal_equal(&tangent_cone(&i).unwrap(), &i).unwrap());
    }

    #[test]
    fn combinations_are_local_members(
        a in small_poly_strategy(3),
        b in small_poly_strategy(3),
        c in small_poly_strategy(2),
        d in small_poly_strategy(2),
        u in small_poly_strategy(2),
    ) {
        let r = ring3_mod();
        let (f, g) = (build(&r, &a), build(&r, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        // 1 + u with u(0) = 0 is a unit at the origin
        let u = build(&r, &u);
        let unit = &Polynomial::one(&r) + &(&u - &Polynomial::constant(&r, u.constant_term()));
        let i = Ideal::new(&r, vec![&unit * &f, g.clone()]).unwrap();
        let combo = &(&build(&r, &c) * &f) + &(&build(&r, &d) * &g);
        prop_assert!(local_contains(&i, &combo, None));
        prop_assert!(local_contains(&i, &combo, Some(6)));
    }

    #[test]
    fn gamma_graphs_grow_with_s(gens in prop::collection::vec(prop::collection::vec(0..=2u32, 4), 1..5)) {
        let r = Ring::rational(&["a", "b", "c", "d"]);
        let polys: Vec<Polynomial> = gens
            .iter()
            .filter(|e| e.iter().any(|&x| x > 0))
            .map(|e| Polynomial::monomial(&r, r.field().one(), Monomial::from_slice(e)))
            .collect();
        prop_assume!(!polys.is_empty());
        let primes = min_primes_monomial(&Ideal::new(&r, polys).unwrap()).unwrap();
        let c = connectedness_of_primes(&primes, 0).unwrap();
        for s in 0..4 {
            prop_assert!(c.graph.at(s).is_subgraph_of(&c.graph.at(s + 1)));
        }
    }
}
