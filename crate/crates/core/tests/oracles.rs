//! Library results against the independent oracles in `common`.

mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use tangent_cone::deform::tangent_cone;
use tangent_cone::hilbert::{hilbert_samuel, hilbert_series, hilbert_series_monomial, local_hilbert_series};
use tangent_cone::monideal::MonomialIdeal;
use tangent_cone::spectrum::{dimension, min_primes_monomial};
use tangent_cone::verify::build_example;
use tangent_cone::{Ideal, Polynomial, Ring};

#[test]
fn groebner_membership_matches_linear_algebra() {
    let mut g = rng(11);
    let r = Ring::rational(&["x", "y", "z"]);
    for _ in 0..40 {
        let gens: Vec<Polynomial> = (0..3).map(|_| random_homogeneous(&mut g, &r, 3, 2)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let gb = ideal.groebner().unwrap();
        let lead = MonomialIdeal::from_ideal(&gb.leading_ideal().unwrap()).unwrap();
        for d in 0..=5 {
            let in_lead = binomial(d as u64 + 2, 2) - lead.standard_monomials_in_degree(d);
            assert_eq!(in_lead as usize, graded_piece_dim(&gens, 3, d), "{ideal} in degree {d}");
        }
        for _ in 0..5 {
            let f = random_homogeneous(&mut g, &r, 4, 3);
            let by_gb = gb.normal_form(&f).unwrap().is_zero();
            let mut with_f = gens.clone();
            with_f.push(f.clone());
            let by_rank = graded_piece_dim(&with_f, 3, 3) == graded_piece_dim(&gens, 3, 3);
            assert_eq!(by_gb, by_rank, "{f} in {ideal}");
        }
    }
}

#[test]
fn graded_hilbert_function_matches_rank_counts() {
    let mut g = rng(12);
    let r = Ring::rational(&["x", "y", "z", "w"]);
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..3).map(|k| random_homogeneous(&mut g, &r, 3, 2 + (k % 2))).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let h = hilbert_series(&ideal).unwrap();
        for d in 0..=6u32 {
            let expected = binomial(d as u64 + 3, 3) - graded_piece_dim(&gens, 4, d) as u64;
            assert_eq!(h.hilbert_function(d as usize), BigInt::from(expected), "{ideal} degree {d}");
        }
    }
}

#[test]
fn monomial_series_match_brute_force_counts() {
    let mut g = rng(13);
    for n in 1..=4usize {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let r = Ring::rational(&names);
        for _ in 0..30 {
            let count = g.gen_range_usize(1, 5);
            let gens = random_monomial_gens(&mut g, n, count, 4);
            let polys: Vec<Polynomial> = gens.iter().map(|e| monomial_poly(&r, e)).collect();
            let ideal = Ideal::new(&r, polys).unwrap();
            let h = hilbert_series_monomial(&ideal).unwrap();
            let maxdeg = gens.iter().map(|e| e.iter().sum::<u32>()).max().unwrap();
            for d in 0..=2 * maxdeg + 4 {
                assert_eq!(
                    h.hilbert_function(d as usize),
                    BigInt::from(standard_monomial_count(&gens, n, d)),
                    "{ideal} degree {d}"
                );
            }
            // graded and monomial entry points agree
            assert_eq!(hilbert_series(&ideal).unwrap().numerator, h.numerator);
        }
    }
}

trait RangeExt {
    fn gen_range_usize(&mut self, lo: usize, hi: usize) -> usize;
}

impl RangeExt for rand_chacha::ChaCha8Rng {
    fn gen_range_usize(&mut self, lo: usize, hi: usize) -> usize {
        use rand::Rng;
        self.gen_range(lo..=hi)
    }
}

#[test]
fn local_hilbert_samuel_matches_truncated_ranks() {
    let mut g = rng(14);
    let r = Ring::rational(&["x", "y", "z"]);
    for _ in 0..25 {
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut g, &r, 3, 1, 4)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        for j in 0..=5u32 {
            let lib = hilbert_samuel(&ideal, j).unwrap();
            assert_eq!(lib, BigInt::from(hilbert_samuel_oracle(&gens, 3, j)), "{ideal} at j = {j}");
        }
    }
}

#[test]
fn family_tangent_cones_match_truncated_ranks() {
    for n in 1..=2u32 {
        let p = build_example(n).unwrap();
        let cone = local_hilbert_series(&p).unwrap();
        for j in 0..=(n + 5) {
            let oracle = hilbert_samuel_oracle(p.generators(), 4, j);
            assert_eq!(cone.hilbert_samuel(j as usize), BigInt::from(oracle), "n = {n}, j = {j}");
        }
    }
}

#[test]
fn tangent_cone_elements_are_initial_forms() {
    // every generator of in(I) of degree e is the degree-e part of an element of I + m^(e+1)
    let mut g = rng(15);
    let r = Ring::rational(&["x", "y", "z"]);
    let mut checked = 0;
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut g, &r, 3, 1, 3)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let Ok(cone) = tangent_cone(&ideal) else { continue };
        checked += 1;
        for c in cone.generators() {
            let e = c.degree().unwrap();
            assert!(truncated_member(&c.in_ring(&r), &gens, 3, e), "{c} from {ideal}");
        }
    }
    assert!(checked >= 10);
}

#[test]
fn multiplicity_is_leading_growth() {
    let mut g = rng(16);
    let r = Ring::rational(&["x", "y", "z"]);
    let mut checked = 0;
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut g, &r, 3, 1, 3)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let h = local_hilbert_series(&ideal).unwrap();
        let Some(d) = h.dim else { continue };
        checked += 1;
        assert!(is_positive(&h.e[0]));
        let fact: BigInt = (1..=d).map(BigInt::from).product();
        let lead = h.hs_polynomial.0[d].clone() * BigRational::from_integer(fact);
        assert_eq!(lead, BigRational::from_integer(h.e[0].clone()), "{ideal}");
        // HP agrees with HS once j passes the degree of h
        for j in h.numerator.len()..h.numerator.len() + 6 {
            assert_eq!(h.hs_polynomial.eval_int(j as i64), h.hilbert_samuel(j).into(), "{ideal} at {j}");
        }
        let at_20 = BigRational::from_integer(hilbert_samuel_oracle(&gens, 3, 20).into());
        assert_eq!(h.hs_polynomial.eval_int(20), at_20, "{ideal}");
    }
    assert!(checked >= 10);
}

#[test]
fn monomial_minimal_primes_are_minimal_vertex_covers() {
    let mut g = rng(17);
    let r = Ring::rational(&["a", "b", "c", "d"]);
    for _ in 0..60 {
        let gens = random_monomial_gens(&mut g, 4, 3, 3);
        let ideal = Ideal::new(&r, gens.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let expected = minimal_vertex_covers(&gens, 4);
        let mut got: Vec<u32> = min_primes_monomial(&ideal)
            .unwrap()
            .iter()
            .map(|p| p.variables().unwrap().iter().map(|&v| 1u32 << v).sum())
            .collect();
        got.sort_unstable();
        assert_eq!(got, expected, "{ideal}");
        let dim = expected.iter().map(|s| 4 - s.count_ones() as usize).max();
        assert_eq!(dimension(&ideal).unwrap(), dim);
    }
}
