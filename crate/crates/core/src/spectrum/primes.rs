use crate::basis::{radical_membership, Ideal};
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// How primality of a [`PrimeCertificate`] was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeKind {
    /// Generated by variables.
    VariableGenerated,
    /// Every generator can be peeled off as `c*v + h`, with `v` occurring
    /// in no other remaining generator; the quotient is a polynomial ring.
    Triangular,
    /// Primality taken on trust; the note says from where.
    ExternallyAsserted(String),
}

impl PrimeKind {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeKind::VariableGenerated => "variable-generated",
            PrimeKind::Triangular => "triangular",
            PrimeKind::ExternallyAsserted(_) => "externally-asserted",
        }
    }
}

/// A prime ideal together with the evidence for its primality.
#[derive(Debug, Clone)]
pub struct PrimeCertificate {
    pub ideal: Ideal,
    pub kind: PrimeKind,
    /// Krull dimension of the quotient.
    pub dim: usize,
}

impl PrimeCertificate {
    /// Certifies `ideal` if its generators (or their reduced degrevlex
    /// basis) are variable-generated or triangular.
    pub fn certify(ideal: &Ideal) -> Option<PrimeCertificate> {
        let gb = ideal.degrevlex_basis();
        for candidate in [&gb, ideal] {
            if let Some((kind, count)) = certify_generators(candidate.generators()) {
                let cert = PrimeCertificate { ideal: candidate.clone(), kind, dim: ideal.ring().nvars() - count };
                return Some(match cert.variables() {
                    Some(vars) => variable_primes(ideal.ring(), vec![vars]).remove(0),
                    None => cert,
                });
            }
        }
        None
    }

    pub fn asserted(ideal: &Ideal, dim: usize, note: &str) -> PrimeCertificate {
        PrimeCertificate {
            ideal: ideal.clone(),
            kind: PrimeKind::ExternallyAsserted(note.to_string()),
            dim,
        }
    }

    /// Every generator vanishes at the origin.
    pub fn through_origin(&self) -> bool {
        self.ideal.generators().iter().all(|g| g.constant_term().is_zero())
    }

    /// Allowlisted primes have polynomial-ring quotients, whose completions
    /// at the origin are domains.
    pub fn analytically_irreducible(&self) -> bool {
        !matches!(self.kind, PrimeKind::ExternallyAsserted(_))
    }

    pub fn is_monomial(&self) -> bool {
        self.kind == PrimeKind::VariableGenerated
    }

    /// The variables generating a variable-generated prime.
    pub fn variables(&self) -> Option<Vec<usize>> {
        if !self.is_monomial() {
            return None;
        }
        let mut vars: Vec<usize> = self.ideal.generators().iter().flat_map(|g| g.support_vars()).collect();
        vars.sort_unstable();
        vars.dedup();
        Some(vars)
    }
}

/// `v` occurs in `g` only through a single term `c*v`.
fn is_linear_pivot(g: &Polynomial, v: usize) -> bool {
    let mut hits = g.terms().iter().filter(|(_, m)| m.exp(v) > 0);
    matches!((hits.next(), hits.next()), (Some((_, m)), None) if m.degree() == 1)
}

fn linear_pivot(g: &Polynomial) -> Option<usize> {
    g.support_vars().into_iter().find(|&v| is_linear_pivot(g, v))
}

fn mentions(g: &Polynomial, v: usize) -> bool {
    g.terms().iter().any(|(_, m)| m.exp(v) > 0)
}

/// Returns the kind and the number of independent generators.
fn certify_generators(gens: &[Polynomial]) -> Option<(PrimeKind, usize)> {
    if gens.iter().any(|g| g.is_constant()) {
        return None;
    }
    if gens.iter().all(|g| g.is_monomial() && g.degree() == Some(1)) {
        let mut vars: Vec<usize> = gens.iter().flat_map(|g| g.support_vars()).collect();
        vars.sort_unstable();
        vars.dedup();
        return Some((PrimeKind::VariableGenerated, vars.len()));
    }
    let mut rest: Vec<&Polynomial> = gens.iter().collect();
    while !rest.is_empty() {
        let peel = (0..rest.len()).find(|&k| {
            let g = rest[k];
            g.support_vars().into_iter().any(|v| {
                is_linear_pivot(g, v) && rest.iter().enumerate().all(|(j, h)| j == k || !mentions(h, v))
            })
        })?;
        rest.remove(peel);
    }
    Some((PrimeKind::Triangular, gens.len()))
}

/// `√I = p`, decided by `I ⊆ p` and `p ⊆ √I` (Rabinowitsch on each generator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalCheck {
    pub equal: bool,
    /// Generators of `I` outside `p`.
    pub outside_prime: Vec<Polynomial>,
    /// Generators of `p` outside `√I`.
    pub outside_radical: Vec<Polynomial>,
}

pub fn radical_equals_candidate(ideal: &Ideal, prime: &PrimeCertificate) -> Result<RadicalCheck> {
    let p = prime.ideal.degrevlex_basis();
    let outside_prime: Vec<Polynomial> =
        ideal.generators().iter().filter(|g| !p.normal_form(g).unwrap().is_zero()).cloned().collect();
    let mut outside_radical = Vec::new();
    for g in prime.ideal.generators() {
        if !radical_membership(g, ideal)? {
            outside_radical.push(g.clone());
        }
    }
    Ok(RadicalCheck { equal: outside_prime.is_empty() && outside_radical.is_empty(), outside_prime, outside_radical })
}

pub fn min_primes_monomial(ideal: &Ideal) -> Result<Vec<PrimeCertificate>> {
    let mi = MonomialIdeal::from_ideal(ideal)?;
    Ok(variable_primes(ideal.ring(), mi.minimal_prime_supports()))
}

pub fn ass_primes_monomial(ideal: &Ideal) -> Result<Vec<PrimeCertificate>> {
    let mi = MonomialIdeal::from_ideal(ideal)?;
    Ok(variable_primes(ideal.ring(), mi.associated_prime_supports()))
}

pub(crate) fn variable_primes(ring: &RingRef, supports: Vec<Vec<usize>>) -> Vec<PrimeCertificate> {
    let n = ring.nvars();
    supports
        .into_iter()
        .map(|s| PrimeCertificate {
            ideal: MonomialIdeal::from_variables(n, &s).to_ideal(&ring.with_order(crate::monomial::MonomialOrder::DegRevLex)),
            kind: PrimeKind::VariableGenerated,
            dim: n - s.len(),
        })
        .collect()
}

/// The ideal `a_{>h}`: intersection of the primary components of height at
/// most `h` in the irredundant irreducible decomposition.
pub fn a_greater_than(ideal: &Ideal, h: usize) -> Result<Ideal> {
    let mi = MonomialIdeal::from_ideal(ideal)?;
    let n = mi.nvars();
    let mut acc = MonomialIdeal::new(n, vec![crate::monomial::Monomial::one(n)]);
    for comp in mi.irreducible_components() {
        if comp.len() <= h {
            acc = acc.intersect(&MonomialIdeal::component_ideal(n, &comp));
        }
    }
    Ok(acc.to_ideal(&ideal.ring().with_order(crate::monomial::MonomialOrder::DegRevLex)))
}

const MAX_SPLIT_DEPTH: usize = 64;

/// Minimal primes through the origin, found by splitting on monomial
/// factors, substituting linear pivots and certifying the leaves.
pub fn min_primes_general(ideal: &Ideal) -> Result<Vec<PrimeCertificate>> {
    let ring = ideal.ring().with_order(crate::monomial::MonomialOrder::DegRevLex);
    let mut found = Vec::new();
    split(&ideal.in_ring(&ring), 0, &mut found)?;
    found.retain(|p: &PrimeCertificate| p.through_origin());
    Ok(prune(found))
}

fn split(ideal: &Ideal, depth: usize, out: &mut Vec<PrimeCertificate>) -> Result<()> {
    if depth > MAX_SPLIT_DEPTH {
        return Err(Error::CannotCertify(format!("splitting did not terminate for {ideal}")));
    }
    let gb = ideal.groebner()?;
    if gb.is_unit() {
        return Ok(());
    }
    if gb.is_monomial() {
        out.extend(min_primes_monomial(&gb)?);
        return Ok(());
    }
    if let Some(p) = PrimeCertificate::certify(&gb) {
        out.push(p);
        return Ok(());
    }
    let ring = gb.ring();
    // a generator c*v + h with v absent from h: eliminate v by substitution
    for (k, g) in gb.generators().iter().enumerate() {
        if let Some(v) = linear_pivot(g) {
            let term = g.terms().iter().find(|(_, m)| m.exp(v) > 0).unwrap().clone();
            let h = &Polynomial::from_terms(ring, vec![term.clone()]) - g;
            let value = h.scale(&term.0.inv());
            let others: Vec<Polynomial> = gb
                .generators()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, f)| f.substitute(v, &value))
                .collect();
            let mut sub = Vec::new();
            split(&Ideal::new(ring, others)?, depth + 1, &mut sub)?;
            for p in sub {
                let mut gens = p.ideal.generators().to_vec();
                gens.push(g.clone());
                let lifted = Ideal::new(ring, gens)?;
                let cert = PrimeCertificate::certify(&lifted).ok_or_else(|| {
                    Error::CannotCertify(format!("lifted component {lifted} is not triangular"))
                })?;
                out.push(cert);
            }
            return Ok(());
        }
    }
    // g = m * g': a prime containing I contains a variable of m or g'
    for g in gb.generators() {
        let m = g.monomial_content().unwrap();
        if m.is_one() {
            continue;
        }
        let rest = g.div_monomial(&m);
        for v in m.support() {
            let mut gens = gb.generators().to_vec();
            gens.push(Polynomial::var(ring, v));
            split(&Ideal::new(ring, gens)?, depth + 1, out)?;
        }
        if !rest.is_constant() {
            let mut gens = gb.generators().to_vec();
            gens.push(rest);
            split(&Ideal::new(ring, gens)?, depth + 1, out)?;
        }
        return Ok(());
    }
    Err(Error::CannotCertify(format!("no certified splitting for {gb}")))
}

/// Drops duplicates and primes containing another prime of the list.
fn prune(mut primes: Vec<PrimeCertificate>) -> Vec<PrimeCertificate> {
    primes.sort_by_key(|p| std::cmp::Reverse(p.dim));
    let mut kept: Vec<PrimeCertificate> = Vec::new();
    for p in primes {
        let gb = p.ideal.degrevlex_basis();
        if kept.iter().any(|q| q.ideal.generators().iter().all(|g| gb.normal_form(g).unwrap().is_zero())) {
            continue;
        }
        kept.push(PrimeCertificate { ideal: canonical_form(&p), ..p });
    }
    kept.sort_by_key(|p| p.ideal.to_string());
    kept
}

/// Prefer the reduced basis when it is itself certifiable.
fn canonical_form(p: &PrimeCertificate) -> Ideal {
    if let Some(vars) = p.variables() {
        return variable_primes(p.ideal.ring(), vec![vars]).remove(0).ideal;
    }
    let gb = p.ideal.degrevlex_basis();
    if certify_generators(gb.generators()).is_some() {
        gb
    } else {
        p.ideal.clone()
    }
}
