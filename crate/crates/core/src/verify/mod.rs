//! End-to-end checks on the family `p_n` of curve singularities whose
//! tangent cones violate the classical multiplicity bounds, and on a
//! non-reduced tangent cone whose connectedness differs from the ring's.

mod inequalities;
mod report;

use num_bigint::BigInt;

use crate::basis::{ideal_equal, ideal_intersect, radical_membership, saturate_ideal, Ideal};
use crate::deform::tangent_cone;
use crate::error::{Error, Result};
use crate::hilbert::{artinian_length, embedding_codim, hilbert_series, QPoly};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use crate::spectrum::{
    connected_in_codim, min_primes_general, radical_equals_candidate, sdim, PrimeCertificate,
};

pub use inequalities::{check_abhyankar, check_goto_nishida, check_northcott, check_sally, Inequality};
pub use report::{CounterexampleReport, ExampleReport};

fn positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Precondition("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn family_ring() -> RingRef {
    Ring::rational(&["x", "y", "z", "w"])
}

fn parse(r: &RingRef, s: &str) -> Polynomial {
    crate::parse::parse_polynomial(s, r).expect("well-formed")
}

/// The generators of `p_n` in the order used by the resolution matrices.
pub fn example_generators(r: &RingRef, n: u32) -> Vec<Polynomial> {
    [
        format!("x^2 - z^{}*w", 2 * n + 1),
        format!("x*y - z^{}*w^{}", n + 1, n + 1),
        format!("y^2 - z*w^{}", 2 * n + 1),
        format!("y*z^{n} - x*w^{n}"),
    ]
    .iter()
    .map(|s| parse(r, s))
    .collect()
}

/// `p_n = (x² - z^(2n+1) w, xy - z^(n+1) w^(n+1), y² - z w^(2n+1), y zⁿ - x wⁿ)`.
pub fn build_example(n: u32) -> Result<Ideal> {
    positive(n)?;
    let r = family_ring();
    Ideal::new(&r, example_generators(&r, n))
}

/// `(x², xy, y², y zⁿ - x wⁿ)`, the expected tangent cone.
pub fn expected_tangent_cone(n: u32) -> Ideal {
    let r = family_ring();
    Ideal::parse(&r, &["x^2".to_string(), "x*y".into(), "y^2".into(), format!("y*z^{n} - x*w^{n}")]).unwrap()
}

/// The generators vanish under `x = s t^(2n+1), y = s^(2n+1) t, z = t², w = s²`.
pub fn parametrization_vanishes(n: u32) -> Result<bool> {
    positive(n)?;
    let r = family_ring();
    let ext = r.extend(&["s", "t"]);
    let (s, t) = (Polynomial::var(&ext, 4), Polynomial::var(&ext, 5));
    let images = [&s * &t.pow(2 * n + 1), &s.pow(2 * n + 1) * &t, t.pow(2), s.pow(2)];
    Ok(example_generators(&r, n).iter().all(|g| {
        let mut f = g.embed(&ext);
        for (v, img) in images.iter().enumerate() {
            f = f.substitute(v, img);
        }
        f.is_zero()
    }))
}

/// Outcome of the corrected multiplicity bound on a tangent cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectedAbhyankar {
    /// Dimension of the degree-one part of the radical.
    pub ell: usize,
    pub e0: BigInt,
    pub delta: BigInt,
    pub dim: usize,
    /// `e0 ≥ δ + 1 - ℓ`.
    pub bound: Inequality,
    /// `e0 > δ + 1 - ℓ`, evaluated when the (S1) check passes and `ℓ ≠ 0`.
    pub strict: Option<Inequality>,
    pub s1_certified: bool,
    pub h2: BigInt,
    /// `h2 ≥ -d ℓ`.
    pub h2_bound: Inequality,
}

/// The radical of a homogeneous ideal as the intersection of its
/// certified minimal primes.
pub fn certified_radical(ideal: &Ideal) -> Result<(Vec<PrimeCertificate>, Ideal)> {
    let primes = min_primes_general(ideal)?;
    let mut acc = Ideal::unit(ideal.ring());
    for p in &primes {
        acc = ideal_intersect(&acc, &p.ideal)?;
    }
    Ok((primes, acc.degrevlex_basis()))
}

/// `(I : m^∞) = I` for the ideal `m` of all variables.
pub fn saturated_at_irrelevant(ideal: &Ideal) -> Result<bool> {
    let r = ideal.ring();
    let m = Ideal::new(r, (0..r.nvars()).map(|v| Polynomial::var(r, v)).collect())?;
    ideal_equal(&saturate_ideal(ideal, &m)?, ideal)
}

pub fn corrected_abhyankar(cone: &Ideal) -> Result<CorrectedAbhyankar> {
    let gb = cone.degrevlex_basis();
    if let Some(g) = gb.generators().iter().find(|g| g.degree() == Some(1)) {
        return Err(Error::Precondition(format!("presentation contains the linear form {g}")));
    }
    let hd = hilbert_series(&gb)?;
    let dim = hd.dim.ok_or(Error::UnitIdeal)?;
    let e0 = hd.e[0].clone();
    let delta = BigInt::from(embedding_codim(&hd).unwrap());
    let (primes, radical) = certified_radical(&gb)?;
    let ell = radical.generators().iter().filter(|g| g.degree() == Some(1)).count();
    let rhs: BigInt = &delta + 1 - BigInt::from(ell);
    let bound = Inequality::new("corrected-A", e0.clone(), rhs.clone(), false);
    let s1_certified = primes.len() == 1 && saturated_at_irrelevant(&gb)?;
    let strict = (s1_certified && ell != 0).then(|| Inequality::new("corrected-A strict", e0.clone(), rhs, true));
    let h2 = hd.numerator.get(2).cloned().unwrap_or_default();
    let h2_bound = Inequality::new("h2-bound", h2.clone(), -BigInt::from(dim * ell), false);
    Ok(CorrectedAbhyankar { ell, e0, delta, dim, bound, strict, s1_certified, h2, h2_bound })
}

/// Lengths of `k[x,y,w]/(x², xy, y², x wⁿ, w^(j+1))` and the fitted `e1(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotoNishida {
    pub n: u32,
    /// `(j, length)` for `j = n..=n+4`.
    pub lengths: Vec<(u32, u64)>,
    /// Slope and intercept of `length = a (j+1) + b`.
    pub a: i64,
    pub b: i64,
    pub e1_of_q: i64,
}

pub fn goto_nishida_lengths(n: u32, j: u32) -> Result<u64> {
    let r = Ring::rational(&["x", "y", "w"]);
    let gens = ["x^2".to_string(), "x*y".into(), "y^2".into(), format!("x*w^{n}"), format!("w^{}", j + 1)];
    artinian_length(&Ideal::parse(&r, &gens)?)
}

pub fn goto_nishida_e1(n: u32) -> Result<GotoNishida> {
    positive(n)?;
    let lengths = (n..=n + 4).map(|j| Ok((j, goto_nishida_lengths(n, j)?))).collect::<Result<Vec<_>>>()?;
    let (j0, l0) = lengths[0];
    let (_, l1) = lengths[1];
    let a = l1 as i64 - l0 as i64;
    let b = l0 as i64 - a * (j0 as i64 + 1);
    if lengths.iter().any(|&(j, l)| l as i64 != a * (j as i64 + 1) + b) {
        return Err(Error::CertificateFailed {
            identity: "lengths linear in j".into(),
            detail: format!("{lengths:?}"),
        });
    }
    if a != 2 {
        return Err(Error::CertificateFailed { identity: "e0(q) = 2".into(), detail: format!("slope {a}") });
    }
    Ok(GotoNishida { n, lengths, a, b, e1_of_q: -b })
}

/// Matrices of the resolution of `k[x,y,z,w]/p_n`: the generator row,
/// the 4×4 first syzygies and the last syzygy column.
#[derive(Debug, Clone)]
pub struct ResolutionMatrices {
    pub row: Vec<Polynomial>,
    pub m2: Vec<Vec<Polynomial>>,
    pub m3: Vec<Polynomial>,
}

pub fn resolution_matrices(n: u32) -> Result<ResolutionMatrices> {
    positive(n)?;
    let r = family_ring();
    let p = |s: String| parse(&r, &s);
    let zero = Polynomial::zero(&r);
    let m2 = vec![
        vec![p("y".into()), zero.clone(), p(format!("w^{n}")), zero.clone()],
        vec![p("-x".into()), p("y".into()), p(format!("-z^{n}")), p(format!("w^{n}"))],
        vec![zero.clone(), p("-x".into()), zero, p(format!("-z^{n}"))],
        vec![p(format!("z^{}*w", n + 1)), p(format!("z*w^{}", n + 1)), p("x".into()), p("y".into())],
    ];
    let m3 = vec![p(format!("w^{n}")), p(format!("-z^{n}")), p("-y".into()), p("x".into())];
    Ok(ResolutionMatrices { row: example_generators(&r, n), m2, m3 })
}

/// The last syzygy column with the signs `(wⁿ, zⁿ, -y, -x)`, which does
/// not compose to zero with `m2`.
pub fn misprinted_last_syzygy(n: u32) -> Result<Vec<Polynomial>> {
    positive(n)?;
    let r = family_ring();
    Ok(vec![parse(&r, &format!("w^{n}")), parse(&r, &format!("z^{n}")), parse(&r, "-y"), parse(&r, "-x")])
}

/// Result of checking that consecutive maps compose to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexCheck {
    pub ok: bool,
    /// The first nonzero entry, as `(product, row, column, value)`.
    pub witness: Option<(String, usize, usize, String)>,
}

impl ResolutionMatrices {
    pub fn check(&self) -> ComplexCheck {
        let r = self.row[0].ring().clone();
        for c in 0..4 {
            let mut acc = Polynomial::zero(&r);
            for k in 0..4 {
                acc = &acc + &(&self.row[k] * &self.m2[k][c]);
            }
            if !acc.is_zero() {
                return ComplexCheck { ok: false, witness: Some(("row*M2".into(), 0, c, acc.to_string())) };
            }
        }
        for i in 0..4 {
            let mut acc = Polynomial::zero(&r);
            for k in 0..4 {
                acc = &acc + &(&self.m2[i][k] * &self.m3[k]);
            }
            if !acc.is_zero() {
                return ComplexCheck { ok: false, witness: Some(("M2*M3".into(), i, 0, acc.to_string())) };
            }
        }
        ComplexCheck { ok: true, witness: None }
    }
}

pub fn verify_resolution(n: u32) -> Result<ComplexCheck> {
    Ok(resolution_matrices(n)?.check())
}

/// Evidence that `p_n` defines an isolated singularity.
#[derive(Debug, Clone)]
pub struct JacobianEvidence {
    /// Rows are the variables `x, y, z, w`, columns the generators.
    pub jacobian: Vec<Vec<Polynomial>>,
    pub minor_24_14: Polynomial,
    pub minor_13_34: Polynomial,
    pub minor_24_14_expected: bool,
    pub minor_13_34_expected: bool,
    pub z_in_radical: bool,
    pub w_in_radical: bool,
}

fn minor(j: &[Vec<Polynomial>], rows: [usize; 2], cols: [usize; 2]) -> Polynomial {
    &(&j[rows[0]][cols[0]] * &j[rows[1]][cols[1]]) - &(&j[rows[0]][cols[1]] * &j[rows[1]][cols[0]])
}

pub fn jacobian_evidence(n: u32) -> Result<JacobianEvidence> {
    positive(n)?;
    let r = family_ring();
    let gens = example_generators(&r, n);
    let jacobian: Vec<Vec<Polynomial>> = (0..4).map(|v| gens.iter().map(|g| g.differentiate(v)).collect()).collect();
    let minor_24_14 = minor(&jacobian, [1, 3], [0, 3]);
    let minor_13_34 = minor(&jacobian, [0, 2], [2, 3]);
    let mut ideal_gens = gens.clone();
    for rows in pairs() {
        for cols in pairs() {
            ideal_gens.push(minor(&jacobian, rows, cols));
        }
    }
    let singular = Ideal::new(&r, ideal_gens)?;
    Ok(JacobianEvidence {
        minor_24_14_expected: minor_24_14 == parse(&r, &format!("z^{}", 3 * n + 1)),
        minor_13_34_expected: minor_13_34 == parse(&r, &format!("-w^{}", 3 * n + 1)),
        z_in_radical: radical_membership(&Polynomial::var(&r, 2), &singular)?,
        w_in_radical: radical_membership(&Polynomial::var(&r, 3), &singular)?,
        jacobian,
        minor_24_14,
        minor_13_34,
    })
}

fn pairs() -> impl Iterator<Item = [usize; 2]> {
    (0..4).flat_map(|a| (a + 1..4).map(move |b| [a, b]))
}

/// Hilbert-Samuel polynomial of the tangent cone of `p_n`.
pub fn family_hilbert_polynomial(n: u32) -> Result<QPoly> {
    let cone = tangent_cone(&build_example(n)?)?;
    Ok(hilbert_series(&cone)?.hs_polynomial)
}

/// The Hilbert polynomials of the tangent cones are pairwise different.
pub fn distinct_hilbert_polynomials(ns: &[u32]) -> Result<bool> {
    let polys = ns.iter().map(|&n| family_hilbert_polynomial(n)).collect::<Result<Vec<_>>>()?;
    Ok(polys.iter().enumerate().all(|(i, a)| polys[i + 1..].iter().all(|b| a != b)))
}

fn stage<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| e.at_stage(name))
}

fn require(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::CertificateFailed { identity: name.into(), detail: detail() }.at_stage(name))
    }
}

/// Runs every check on `p_n`.
pub fn verify_example(n: u32) -> Result<ExampleReport> {
    let ideal = stage("build", build_example(n))?;
    let parametrization = stage("parametrization", parametrization_vanishes(n))?;
    require("parametrization", parametrization, || "a generator does not vanish".into())?;

    let cone = stage("tangent cone", tangent_cone(&ideal))?;
    let expected = expected_tangent_cone(n);
    require("tangent cone", stage("tangent cone", ideal_equal(&cone, &expected))?, || format!("got {cone}"))?;

    let r = family_ring();
    let xy = PrimeCertificate::certify(&Ideal::parse(&r, &["x", "y"])?).expect("variable-generated");
    let radical_check = stage("radical", radical_equals_candidate(&cone, &xy))?;
    require("radical", radical_check.equal, || format!("{radical_check:?}"))?;
    let saturated = stage("saturation", saturated_at_irrelevant(&cone))?;

    let hilbert = stage("hilbert", hilbert_series(&cone))?;
    let delta = BigInt::from(embedding_codim(&hilbert).expect("proper"));
    let corrected = stage("corrected bound", corrected_abhyankar(&cone))?;

    let gn = stage("goto-nishida", goto_nishida_e1(n))?;
    let e = &hilbert.e;
    let (s1, s2) = check_sally(&e[0], &e[1], &e[2]);
    let verdicts = vec![
        check_abhyankar(&e[0], &delta),
        check_northcott(&e[0], &e[1]),
        s1,
        s2,
        check_goto_nishida(&e[1], &BigInt::from(gn.e1_of_q), &e[0]),
        corrected.bound.clone(),
        corrected.h2_bound.clone(),
    ];

    let zn = format!("z^{n}");
    let wn = format!("w^{n}");
    let n_squared = stage("length", artinian_length(&Ideal::parse(&r, &["x", "y", zn.as_str(), wn.as_str()])?))?;

    let resolution = stage("resolution", verify_resolution(n))?;
    require("resolution", resolution.ok, || format!("{:?}", resolution.witness))?;
    let jacobian = stage("jacobian", jacobian_evidence(n))?;

    Ok(ExampleReport {
        n,
        ideal,
        parametrization_vanishes: parametrization,
        tangent_cone: cone,
        radical: xy,
        radical_check,
        saturated_at_irrelevant: saturated,
        hilbert,
        delta,
        ell: corrected.ell,
        verdicts,
        corrected,
        n_squared,
        goto_nishida: gn,
        resolution,
        jacobian,
    })
}

/// `I = (x(x + y²), xz)`: its tangent cone is connected in codimension 1
/// while the ring itself is not.
pub fn verify_counterexample() -> Result<CounterexampleReport> {
    let r = Ring::rational(&["x", "y", "z"]);
    let ideal = Ideal::parse(&r, &["x*(x + y^2)", "x*z"])?;
    let cone = stage("tangent cone", tangent_cone(&ideal))?;
    let expected = Ideal::parse(&r, &["x^2", "x*z"])?;
    let cone_matches = stage("tangent cone", ideal_equal(&cone, &expected))?;
    let ring_connectedness = stage("components", connected_in_codim(&ideal, 1))?;
    let cone_connectedness = stage("cone components", connected_in_codim(&cone, 1))?;
    Ok(CounterexampleReport {
        sdim_ring: stage("sdim", sdim(&ideal))?,
        sdim_cone: stage("sdim", sdim(&cone))?,
        ideal,
        tangent_cone: cone,
        cone_matches,
        ring: ring_connectedness,
        cone: cone_connectedness,
    })
}

#[cfg(test)]
mod tests;
