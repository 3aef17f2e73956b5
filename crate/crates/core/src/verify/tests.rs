use super::*;

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn parametrization() {
    for n in 1..=4 {
        assert!(parametrization_vanishes(n).unwrap());
    }
    assert!(build_example(0).is_err());
}

#[test]
fn family_report() {
    for n in 1..=3u32 {
        let rep = verify_example(n).unwrap();
        let ni = i64::from(n);
        assert!(rep.certified(), "{n}: {:?}", rep.to_json());
        assert_eq!(rep.hilbert.numerator, [b(1), b(2)].into_iter().chain((2..=ni).map(|_| b(0))).chain([b(-1)]).collect::<Vec<_>>());
        assert_eq!(rep.hilbert.e, [b(2), b(1 - ni), b(-ni * (ni + 1) / 2)]);
        assert_eq!(rep.ell, 2);
        assert!(!rep.verdict("A").unwrap().holds);
        assert!(!rep.verdict("N").unwrap().holds);
        assert_eq!(rep.verdict("S.1").unwrap().holds, n == 1);
        assert!(!rep.verdict("S.2").unwrap().holds);
        assert!(rep.verdict("GN").unwrap().is_equality());
        assert!(rep.verdict("corrected-A").unwrap().holds);
        assert!(rep.verdict("h2-bound").unwrap().holds);
        assert_eq!(rep.goto_nishida.e1_of_q, -ni);
        assert_eq!(rep.n_squared, u64::from(n * n));
    }
}

#[test]
fn corrected_bound_rejects_linear_forms() {
    let r = family_ring();
    let i = Ideal::parse(&r, &["x", "y^2"]).unwrap();
    assert!(matches!(corrected_abhyankar(&i), Err(Error::Precondition(_))));
}

#[test]
fn goto_nishida_lengths_are_linear() {
    for n in 1..=4 {
        let gn = goto_nishida_e1(n).unwrap();
        for &(j, l) in &gn.lengths {
            assert_eq!(l, u64::from(2 * (j + 1) + n));
        }
    }
}

#[test]
fn resolution_and_perturbation() {
    for n in 1..=4 {
        assert!(verify_resolution(n).unwrap().ok);
        let mut m = resolution_matrices(n).unwrap();
        m.m2[1][2] = &m.m2[1][2] + &Polynomial::var(m.m2[0][0].ring(), 0);
        let c = m.check();
        assert!(!c.ok);
        assert!(c.witness.is_some());
        let mut m = resolution_matrices(n).unwrap();
        m.m3 = misprinted_last_syzygy(n).unwrap();
        let c = m.check();
        assert_eq!(c.witness.unwrap().0, "M2*M3");
    }
}

#[test]
fn jacobian_minors() {
    for n in 1..=2 {
        let j = jacobian_evidence(n).unwrap();
        assert!(j.minor_24_14_expected && j.minor_13_34_expected);
        assert!(j.z_in_radical && j.w_in_radical);
    }
}

#[test]
fn hilbert_polynomials_differ() {
    assert!(distinct_hilbert_polynomials(&[1, 2, 3, 4]).unwrap());
    assert_eq!(family_hilbert_polynomial(2).unwrap().to_string(), "j^2 + 4*j");
}

#[test]
fn counterexample() {
    let rep = verify_counterexample().unwrap();
    assert!(rep.exhibits_gap());
    assert_eq!(rep.sdim_ring, Some(1));
    assert_eq!(rep.sdim_cone, Some(2));
}
