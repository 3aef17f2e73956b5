//! The `t`-deformation of an ideal: homogenization, `t`-homogeneous
//! decomposition, dehomogenization and the tangent cone.

use std::collections::BTreeMap;

use crate::basis::{ideal_colon, ideal_equal, local_contains_all, Ideal};
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingRef;

mod identities;

pub use identities::{check_hom_identities, check_hom_identities_with, hom_ideal, HomIdentityReport, IdentityCheck};

/// The original ring with `t` appended as the last variable, under degrevlex.
pub fn extended_ring(ring: &RingRef) -> RingRef {
    ring.with_order(MonomialOrder::DegRevLex).with_t()
}

fn t_index(ring: &RingRef) -> Result<usize> {
    ring.t_variable()
        .ok_or_else(|| Error::Precondition(format!("{ring} has no deformation variable")))
}

/// `hom(f) = Σ t^(i - o(f)) f_i` in the extended ring of `f`'s ring.
pub fn homogenize_poly(f: &Polynomial) -> Result<Polynomial> {
    homogenize_into(f, &extended_ring(f.ring()))
}

/// As [`homogenize_poly`], into a given extended ring.
pub fn homogenize_into(f: &Polynomial, ext: &RingRef) -> Result<Polynomial> {
    let t = t_index(ext)?;
    if ext.nvars() != f.ring().nvars() + 1 {
        return Err(Error::RingMismatch);
    }
    let o = f.order_of()?;
    let terms = f
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut e: Vec<u32> = m.exponents().to_vec();
            e.push(m.degree() - o);
            debug_assert_eq!(e.len() - 1, t);
            (c.clone(), crate::monomial::Monomial::from_slice(&e))
        })
        .collect();
    Ok(Polynomial::from_terms(ext, terms))
}

/// Degree of a monomial under `w(x_i) = 1`, `w(t) = -1`.
fn t_weight(m: &crate::monomial::Monomial, t: usize) -> i64 {
    m.degree() as i64 - 2 * m.exp(t) as i64
}

/// Splits `f` into its `t`-homogeneous parts, keyed by degree.
pub fn t_decompose(f: &Polynomial) -> Result<BTreeMap<i64, Polynomial>> {
    let t = t_index(f.ring())?;
    let mut parts: BTreeMap<i64, Vec<_>> = BTreeMap::new();
    for (c, m) in f.terms() {
        parts.entry(t_weight(m, t)).or_default().push((c.clone(), m.clone()));
    }
    Ok(parts.into_iter().map(|(d, terms)| (d, Polynomial::from_terms(f.ring(), terms))).collect())
}

/// The `t`-degree of a `t`-homogeneous polynomial, `None` otherwise (or for zero).
pub fn t_degree(f: &Polynomial) -> Result<Option<i64>> {
    let parts = t_decompose(f)?;
    Ok(if parts.len() == 1 { parts.keys().next().copied() } else { None })
}

fn drop_t(f: &Polynomial, keep: impl Fn(u32) -> bool) -> Result<Polynomial> {
    let t = t_index(f.ring())?;
    let target = f.ring().without_t().expect("t is set");
    let map: Vec<Option<usize>> = (0..target.nvars()).map(|j| Some(j + usize::from(j >= t))).collect();
    let terms = f
        .terms()
        .iter()
        .filter(|(_, m)| keep(m.exp(t)))
        .map(|(c, m)| (c.clone(), m.remap(&map)))
        .collect();
    Ok(Polynomial::from_terms(&target, terms))
}

/// `Θ`: substitutes `t = 1` and drops `t`.
pub fn dehomogenize(f: &Polynomial) -> Result<Polynomial> {
    drop_t(f, |_| true)
}

/// Substitutes `t = 0` and drops `t`.
pub fn specialize_t_zero(f: &Polynomial) -> Result<Polynomial> {
    drop_t(f, |e| e == 0)
}

/// The tangent cone: initial forms of a local standard basis, returned as a
/// reduced degrevlex Groebner basis in the original variables.
pub fn tangent_cone(ideal: &Ideal) -> Result<Ideal> {
    let sb = ideal.local_basis();
    if sb.generators().iter().any(|g| !g.constant_term().is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let ring = ideal.ring().with_order(MonomialOrder::DegRevLex);
    let forms = sb
        .generators()
        .iter()
        .map(|g| g.initial_form().map(|f| f.in_ring(&ring)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(&ring, forms)?.groebner().expect("degrevlex"))
}

/// Outcome of one certificate attached to a homogenization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub identity: &'static str,
    pub holds: bool,
    pub detail: String,
}

pub const CERT_SPECIAL_FIBER: &str = "hom(I)|t=0 = in(I)";
pub const CERT_DEHOMOGENIZE: &str = "Θ(hom(I)) = I";
pub const CERT_T_REGULAR: &str = "(hom(I) : t) = hom(I)";

/// `hom(I)` represented by the homogenization of a local standard basis.
#[derive(Debug, Clone)]
pub struct HomogenizedIdeal {
    pub extended_ring: RingRef,
    pub generators: Vec<Polynomial>,
    pub origin: Ideal,
    pub t_weight_degree: Vec<i64>,
    pub truncation: u32,
    pub certificates: Vec<Certificate>,
}

impl HomogenizedIdeal {
    pub fn as_ideal(&self) -> Ideal {
        Ideal::new(&self.extended_ring, self.generators.clone()).expect("extended ring")
    }
}

/// Default truncation degree for local comparisons: `2 * maxdeg + 2`.
pub fn default_truncation(ideal: &Ideal) -> u32 {
    2 * ideal.max_degree() + 2
}

/// `hom` applied generator by generator, without a standard basis.
pub fn naive_homogenization(ideal: &Ideal) -> Result<Ideal> {
    let ext = extended_ring(ideal.ring());
    let gens = ideal.generators().iter().map(|g| homogenize_into(g, &ext)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&ext, gens)
}

/// Whether `t` is a nonzerodivisor modulo `h`, i.e. `(h : t) = h`.
pub fn is_t_regular(h: &Ideal) -> Result<bool> {
    let t = t_index(h.ring())?;
    let colon = ideal_colon(h, &Polynomial::var(h.ring(), t))?;
    ideal_equal(&colon, h)
}

/// Computes `hom(I)` and checks its three certificates. Any failing
/// certificate aborts with [`Error::CertificateFailed`].
pub fn homogenized_ideal(ideal: &Ideal, truncation: Option<u32>) -> Result<HomogenizedIdeal> {
    let h = homogenized_ideal_unchecked(ideal, truncation)?;
    if let Some(c) = h.certificates.iter().find(|c| !c.holds) {
        return Err(Error::CertificateFailed { identity: c.identity.into(), detail: c.detail.clone() });
    }
    Ok(h)
}

/// As [`homogenized_ideal`] but returns failing certificates instead of an error.
pub fn homogenized_ideal_unchecked(ideal: &Ideal, truncation: Option<u32>) -> Result<HomogenizedIdeal> {
    let sb = ideal.local_basis();
    if sb.generators().iter().any(|g| !g.constant_term().is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let ext = extended_ring(ideal.ring());
    let generators = sb.generators().iter().map(|g| homogenize_into(g, &ext)).collect::<Result<Vec<_>>>()?;
    let t_weight_degree = sb.generators().iter().map(|g| g.order_of().map(i64::from)).collect::<Result<Vec<_>>>()?;
    let truncation = truncation.unwrap_or_else(|| default_truncation(ideal));
    let h = Ideal::new(&ext, generators.clone())?;

    let mut certificates = Vec::with_capacity(3);

    let cone = tangent_cone(ideal)?;
    let fiber = generators.iter().map(specialize_t_zero).collect::<Result<Vec<_>>>()?;
    let fiber = Ideal::new(cone.ring(), fiber)?;
    let holds = ideal_equal(&fiber, &cone)?;
    certificates.push(Certificate {
        identity: CERT_SPECIAL_FIBER,
        holds,
        detail: format!("special fiber {} vs tangent cone {cone}", fiber.degrevlex_basis()),
    });

    let back = generators.iter().map(dehomogenize).collect::<Result<Vec<_>>>()?;
    let back = Ideal::new(ideal.ring(), back)?;
    let forward = local_contains_all(ideal, back.generators(), Some(truncation));
    let reverse = local_contains_all(&back, ideal.generators(), Some(truncation));
    certificates.push(Certificate {
        identity: CERT_DEHOMOGENIZE,
        holds: forward && reverse,
        detail: format!("Θ(H) ⊆ I: {forward}, I ⊆ Θ(H): {reverse}, modulo degree > {truncation}"),
    });

    let holds = is_t_regular(&h)?;
    certificates.push(Certificate {
        identity: CERT_T_REGULAR,
        holds,
        detail: if holds { "t is a nonzerodivisor".into() } else { format!("(H : t) is strictly larger than {h}") },
    });

    Ok(HomogenizedIdeal {
        extended_ring: ext,
        generators,
        origin: ideal.clone(),
        t_weight_degree,
        truncation,
        certificates,
    })
}
