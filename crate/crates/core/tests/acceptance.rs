//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach the output.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng as _;

use tangent_cone::basis::{ideal_equal, Ideal};
use tangent_cone::deform::{dehomogenize, extended_ring, homogenize_into, t_decompose, t_degree, tangent_cone};
use tangent_cone::error::Error;
use tangent_cone::hilbert::{artinian_length, hilbert_series};
use tangent_cone::monideal::MonomialIdeal;
use tangent_cone::spectrum::{connectedness_of_primes, min_primes_monomial, slice_check};
use tangent_cone::verify::{
    build_example, expected_tangent_cone, goto_nishida_e1, misprinted_last_syzygy, resolution_matrices,
    verify_counterexample, verify_example,
};
use tangent_cone::{Polynomial, Ring};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn tangent_cones() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 1..=4 {
        let start = Instant::now();
        let cone = tangent_cone(&build_example(n).unwrap()).unwrap();
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(ideal_equal(&cone, &expected_tangent_cone(n)).unwrap(), || format!("n = {n}: got {cone}"))?;
        ensure(took < Duration::from_secs(10), || format!("n = {n} took {took:?}"))?;
        // the reduced bases agree generator for generator
        ensure(
            cone.groebner().unwrap().generators() == expected_tangent_cone(n).groebner().unwrap().generators(),
            || format!("n = {n}: reduced bases differ"),
        )?;
    }
    Ok(format!("in(p_n) = (x^2, xy, y^2, yz^n - xw^n) for n = 1..4, slowest {slowest:.2?}"))
}

fn hilbert_numerators() -> Outcome {
    for n in 1..=4i64 {
        let cone = tangent_cone(&build_example(n as u32).unwrap()).unwrap();
        let h = hilbert_series(&cone).unwrap();
        let mut expected = vec![big(1), big(2)];
        expected.resize(n as usize + 1, big(0));
        expected.push(big(-1));
        ensure(h.numerator == expected, || format!("n = {n}: h = {}", h.numerator_string()))?;
        ensure(h.dim == Some(2), || format!("n = {n}: dim {:?}", h.dim))?;
        ensure(h.e[0] == big(2) && h.e[1] == big(1 - n), || format!("n = {n}: e = {:?}", h.e))?;
    }
    Ok("h = 1 + 2t - t^(n+1), d = 2, e0 = 2, e1 = 1 - n for n = 1..4".into())
}

fn hilbert_polynomials() -> Outcome {
    let mut checked = 0;
    for n in 1..=4u32 {
        let p = build_example(n).unwrap();
        let cone = tangent_cone(&p).unwrap();
        let lead = MonomialIdeal::from_ideal(&cone.degrevlex_basis().leading_ideal().unwrap()).unwrap();
        let lead: Vec<Vec<u32>> = lead.generators().iter().map(|m| m.exponents().to_vec()).collect();
        let h = hilbert_series(&cone).unwrap();
        let ni = i64::from(n);
        for j in n + 1..=2 * n + 6 {
            let ji = i64::from(j);
            let formula = ji * ji + (ni + 2) * ji - (ni + 1) * (ni - 2) / 2;
            let counted: u64 = (0..=j).map(|i| standard_monomial_count(&lead, 4, i)).sum();
            ensure(counted as i64 == formula, || format!("n = {n}, j = {j}: counted {counted}, formula {formula}"))?;
            ensure(h.hilbert_samuel(j as usize) == big(formula), || format!("n = {n}, j = {j}: library disagrees"))?;
            // rank count on p_n itself, independent of any standard basis
            if n <= 2 {
                let ranks = hilbert_samuel_oracle(p.generators(), 4, j);
                ensure(ranks as i64 == formula, || format!("n = {n}, j = {j}: rank oracle {ranks}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("HP_n(j) = j^2 + (n+2)j - (n+1)(n-2)/2 at {checked} points against monomial counts"))
}

fn inequalities() -> Outcome {
    for n in 1..=4u32 {
        let r = verify_example(n).map_err(|e| e.to_string())?;
        let v = |name: &str| r.verdict(name).unwrap().clone();
        let a = v("A");
        ensure(!a.holds && a.lhs == big(2) && a.rhs == big(3), || format!("n = {n}: {a:?}"))?;
        ensure(!v("N").holds, || format!("n = {n}: Northcott holds"))?;
        let sally = v("S.1").holds && v("S.2").holds;
        ensure(n < 2 || !sally, || format!("n = {n}: Sally holds"))?;
        ensure(r.ell == 2, || format!("n = {n}: ell = {}", r.ell))?;
        let strict = r.corrected.strict.clone().ok_or(format!("n = {n}: strict clause not evaluated"))?;
        ensure(strict.holds && strict.rhs == big(1), || format!("n = {n}: {strict:?}"))?;
        let h2 = v("h2-bound");
        ensure(h2.holds && h2.rhs == big(-4), || format!("n = {n}: {h2:?}"))?;
    }
    Ok("A and N fail, Sally fails for n >= 2, e0 = 2 > 1 with l = 2, h2 >= -4, n = 1..4".into())
}

fn radicals() -> Outcome {
    for n in 1..=4u32 {
        let r = verify_example(n).map_err(|e| e.to_string())?;
        ensure(r.radical_check.equal, || format!("n = {n}: {:?}", r.radical_check))?;
        ensure(r.radical.ideal.to_string() == "(x, y)", || format!("n = {n}: radical {}", r.radical.ideal))?;
        ensure(r.saturated_at_irrelevant, || format!("n = {n}: not saturated"))?;
    }
    Ok("rad in(p_n) = (x, y) and (in(p_n) : m^inf) = in(p_n) for n = 1..4".into())
}

fn goto_nishida() -> Outcome {
    for n in 1..=4u32 {
        let gn = goto_nishida_e1(n).map_err(|e| e.to_string())?;
        for &(j, len) in &gn.lengths {
            let expected = 2 * (u64::from(j) + 1) + u64::from(n);
            let gens = vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![1, 0, n], vec![0, 0, j + 1]];
            let counted = box_count(&gens, 3, j + 2);
            ensure(len == expected && counted == expected, || format!("n = {n}, j = {j}: {len}, counted {counted}"))?;
        }
        let ni = i64::from(n);
        ensure(gn.e1_of_q == -ni, || format!("n = {n}: e1(q) = {}", gn.e1_of_q))?;
        // e1(R_n) - e1(q) = e0 - 1
        ensure((1 - ni) - gn.e1_of_q == 2 - 1, || format!("n = {n}: GN equality"))?;
    }
    Ok("lengths 2(j+1) + n for j in [n, n+4], e1(q) = -n, e1 - e1(q) = e0 - 1, n = 1..4".into())
}

fn lengths() -> Outcome {
    let r = Ring::rational(&["x", "y", "z", "w"]);
    for n in 1..=5u32 {
        let ideal = Ideal::parse(&r, &["x".to_string(), "y".into(), format!("z^{n}"), format!("w^{n}")]).unwrap();
        let len = artinian_length(&ideal).unwrap();
        let counted = box_count(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, n, 0], vec![0, 0, 0, n]], 4, n);
        ensure(len == u64::from(n * n) && counted == len, || format!("n = {n}: {len}, counted {counted}"))?;
    }
    Ok("length k[x,y,z,w]/(x, y, z^n, w^n) = n^2 for n = 1..5".into())
}

fn resolutions() -> Outcome {
    for n in 1..=3u32 {
        let m = resolution_matrices(n).unwrap();
        let check = m.check();
        ensure(check.ok, || format!("n = {n}: {:?}", check.witness))?;

        let mut misprint = m.clone();
        misprint.m3 = misprinted_last_syzygy(n).unwrap();
        let bad = misprint.check();
        ensure(!bad.ok && bad.witness.is_some(), || format!("n = {n}: misprinted column passes"))?;

        let mut perturbed = m.clone();
        let r = perturbed.m2[0][0].ring().clone();
        perturbed.m2[1][2] = &perturbed.m2[1][2] + &Polynomial::var(&r, 0);
        let bad = perturbed.check();
        ensure(!bad.ok && bad.witness.is_some(), || format!("n = {n}: perturbed M2 passes"))?;
    }
    Ok("row*M2 = 0 and M2*M3 = 0 for n = 1..3; perturbed controls fail with witnesses".into())
}

fn counterexample() -> Outcome {
    let c = verify_counterexample().map_err(|e| e.to_string())?;
    ensure(c.cone_matches, || format!("tangent cone {}", c.tangent_cone))?;
    ensure(c.cone.connected, || "the cone is not connected in codimension 1".into())?;
    ensure(!c.ring.connected, || "the ring is connected in codimension 1".into())?;
    let mut comps: Vec<String> = c.ring.graph.vertices.iter().map(|p| p.ideal.to_string()).collect();
    comps.sort();
    ensure(comps == ["(x)", "(z, y^2 + x)"], || format!("components {comps:?}"))?;
    // local Hilbert-Samuel function of I against the cone
    let gens = c.ideal.generators().to_vec();
    let h = hilbert_series(&c.tangent_cone).unwrap();
    for j in 0..=8 {
        ensure(h.hilbert_samuel(j as usize) == BigInt::from(hilbert_samuel_oracle(&gens, 3, j)), || {
            format!("Hilbert-Samuel disagrees at {j}")
        })?;
    }
    Ok("in(x(x+y^2), xz) = (x^2, xz); G connected in codim 1, R with (x), (x+y^2, z) not".into())
}

fn hom_identities(g: &mut rand_chacha::ChaCha8Rng) -> std::result::Result<usize, String> {
    let r = Ring::rational(&["x", "y", "z"]);
    let ext = extended_ring(&r);
    let mut count = 0;
    while count < 1000 {
        let f = random_poly(g, &r, 5, 0, 5);
        let h = random_poly(g, &r, 5, 0, 5);
        let (hf, hh) = (homogenize_into(&f, &ext).unwrap(), homogenize_into(&h, &ext).unwrap());
        ensure(homogenize_into(&(&f * &h), &ext).unwrap() == &hf * &hh, || format!("hom({f} * {h})"))?;
        ensure(dehomogenize(&hf).unwrap() == f, || format!("Θ(hom({f}))"))?;
        ensure(t_degree(&hf).unwrap() == Some(i64::from(f.order_of().unwrap())), || format!("t-degree of hom({f})"))?;
        let q = random_poly(g, &ext, 8, 0, 6);
        let parts = t_decompose(&q).unwrap();
        let sum = parts.values().fold(Polynomial::zero(&ext), |acc, p| &acc + p);
        ensure(sum == q, || format!("t-parts of {q}"))?;
        count += 3;
    }
    Ok(count)
}

/// Monomial ideals in at most four variables with at most five generators.
fn corpus(g: &mut rand_chacha::ChaCha8Rng) -> Vec<(usize, Vec<Vec<u32>>)> {
    (0..240)
        .map(|_| {
            let n = g.gen_range(2..=4);
            let k = g.gen_range(1..=5);
            (n, random_monomial_gens(g, n, k, 3))
        })
        .collect()
}

fn gamma_agreement(corpus: &[(usize, Vec<Vec<u32>>)]) -> std::result::Result<usize, String> {
    let mut cases = 0;
    for (n, gens) in corpus {
        let names: Vec<String> = (0..*n).map(|i| format!("x{i}")).collect();
        let r = Ring::rational(&names);
        let ideal = Ideal::new(&r, gens.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let primes = min_primes_monomial(&ideal).unwrap();
        let covers = minimal_vertex_covers(gens, *n);
        for s in 0..=*n {
            let c = connectedness_of_primes(&primes, s).map_err(|e| format!("{ideal}, s = {s}: {e}"))?;
            let graph = graph_connected(&covers, *n, s);
            let parts = partitions_connected(&covers, *n, s);
            ensure(graph == parts, || format!("oracle graph/partition split on {ideal}, s = {s}"))?;
            ensure(c.connected == graph && c.partition_check.unwrap_or(graph) == parts, || {
                format!("{ideal}, s = {s}: library {} / {:?}, oracle {graph}", c.connected, c.partition_check)
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn slicing(corpus: &[(usize, Vec<Vec<u32>>)], g: &mut rand_chacha::ChaCha8Rng) -> std::result::Result<usize, String> {
    let mut applicable = 0;
    for (n, gens) in corpus {
        let names: Vec<String> = (0..*n).map(|i| format!("x{i}")).collect();
        let r = Ring::rational(&names);
        let ideal = Ideal::new(&r, gens.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap();
        let a = g.gen_range(0..*n);
        let x = if g.gen_bool(0.5) {
            Polynomial::var(&r, a)
        } else {
            let b = (a + 1 + g.gen_range(0..*n - 1)) % *n;
            &Polynomial::var(&r, a) + &Polynomial::var(&r, b).scale(&r.field().from_i64(g.gen_range(1..=3)))
        };
        for s in 1..=2 {
            match slice_check(&ideal, &x, s) {
                Ok(report) => {
                    let v = report.violations();
                    ensure(v.is_empty(), || format!("{ideal} sliced by {x}, s = {s}: {v:?}"))?;
                    applicable += 1;
                }
                Err(Error::Precondition(_)) | Err(Error::CannotCertify(_)) => {}
                Err(e) => return Err(format!("{ideal} sliced by {x}: {e}")),
            }
        }
    }
    ensure(applicable >= 100, || format!("only {applicable} applicable slices"))?;
    Ok(applicable)
}

fn shuffles(g: &mut rand_chacha::ChaCha8Rng) -> std::result::Result<usize, String> {
    let r = Ring::rational(&["x", "y", "z"]);
    for _ in 0..200 {
        let k = g.gen_range(1..=4);
        let gens: Vec<Polynomial> = (0..k).map(|_| random_poly(g, &r, 4, 0, 3)).collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(g);
        let shuffled: Vec<Polynomial> =
            shuffled.iter().map(|p| p.scale(&r.field().from_i64(g.gen_range(1..=5)))).collect();
        let a = Ideal::new(&r, gens).unwrap().groebner().unwrap();
        let b = Ideal::new(&r, shuffled).unwrap().groebner().unwrap();
        ensure(a.generators() == b.generators(), || format!("{a} vs {b}"))?;
    }
    Ok(200)
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let mut g = rng(2024);
    let hom = hom_identities(&mut g)?;
    let corpus = corpus(&mut g);
    let gamma = gamma_agreement(&corpus)?;
    let sliced = slicing(&corpus, &mut g)?;
    let shuffled = shuffles(&mut g)?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!(
        "{hom} polynomials for hom identities; {} monomial ideals ({gamma} graph/partition cases); \
         {sliced} slices without violations; {shuffled} shuffled bases; {took:.2?}",
        corpus.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("tangent cones of the family", tangent_cones),
        ("Hilbert numerators and e0, e1", hilbert_numerators),
        ("Hilbert polynomials against monomial counts", hilbert_polynomials),
        ("classical and corrected multiplicity bounds", inequalities),
        ("radical and saturation of the tangent cones", radicals),
        ("Goto-Nishida lengths and e1(q)", goto_nishida),
        ("lengths n^2", lengths),
        ("resolution complex and perturbed controls", resolutions),
        ("non-reduced tangent cone example", counterexample),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
