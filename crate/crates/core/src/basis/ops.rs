use crate::basis::reduce::mora_normal_form_truncated;
use crate::basis::Ideal;
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingRef};

fn check(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring().same_variables(b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Reduced Groebner basis under the ring's order when it is global,
/// degrevlex otherwise.
fn canonical(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
    let ideal = Ideal::new(ring, gens).expect("same ring");
    if ring.order().is_global() {
        ideal.groebner().unwrap()
    } else {
        ideal.degrevlex_basis()
    }
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(a, b)?;
    let b = b.in_ring(a.ring());
    let gens = a.generators().iter().chain(b.generators()).cloned().collect();
    Ok(canonical(a.ring(), gens))
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(a, b)?;
    let b = b.in_ring(a.ring());
    let mut gens = Vec::new();
    for f in a.generators() {
        for g in b.generators() {
            gens.push(f * g);
        }
    }
    Ok(canonical(a.ring(), gens))
}

/// Generators of `I ∩ k[remaining variables]`, returned as a reduced
/// Groebner basis in the ideal's ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let elim_ring = ring.with_order(MonomialOrder::elimination(ring.nvars(), vars));
    let gb = ideal.in_ring(&elim_ring).groebner().expect("elimination order is global");
    let kept = gb
        .generators()
        .iter()
        .filter(|g| g.terms().iter().all(|(_, m)| vars.iter().all(|&v| m.exp(v) == 0)))
        .map(|g| g.in_ring(ring))
        .collect();
    canonical(ring, kept)
}

/// Adds one auxiliary variable, runs `build` in the extended ring and
/// eliminates the auxiliary variable.
fn with_auxiliary<F>(ring: &RingRef, build: F) -> Ideal
where
    F: FnOnce(&RingRef, &Polynomial) -> Vec<Polynomial>,
{
    let ext = ring.extend(&["aux"]).with_order(MonomialOrder::DegRevLex);
    let aux = Polynomial::var(&ext, ext.nvars() - 1);
    let gens = build(&ext, &aux);
    let elim = eliminate(&Ideal::new(&ext, gens).unwrap(), &[ext.nvars() - 1]);
    let n = ring.nvars();
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let back = elim.generators().iter().map(|g| g.remap(ring, &map)).collect();
    canonical(ring, back)
}

/// `I ∩ J` via `s*I + (1-s)*J` and elimination of `s`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(a, b)?;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(a.ring()));
    }
    let b = b.in_ring(a.ring());
    Ok(with_auxiliary(a.ring(), |ext, s| {
        let one_minus_s = &Polynomial::one(ext) - s;
        let mut gens: Vec<Polynomial> = a.generators().iter().map(|f| s * &f.embed(ext)).collect();
        gens.extend(b.generators().iter().map(|g| &one_minus_s * &g.embed(ext)));
        gens
    }))
}

/// `(I : f)`, computed from `I ∩ (f)` by exact division.
pub fn ideal_colon(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if !ideal.ring().same_variables(f.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring();
    let f = f.in_ring(ring);
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = ideal_intersect(ideal, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.div_exact(&f).expect("elements of (f) are divisible by f"))
        .collect();
    Ok(canonical(ring, gens))
}

/// `(I : J) = ∩ (I : g)` over generators `g` of `J`.
pub fn ideal_colon_ideal(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(a, b)?;
    let mut acc = Ideal::unit(a.ring());
    for g in b.generators() {
        let c = ideal_colon(a, g)?;
        acc = ideal_intersect(&acc, &c)?;
    }
    Ok(canonical(a.ring(), acc.generators().to_vec()))
}

/// `(I : f^∞)` via `I + (1 - y f)` and elimination of `y`. The result is
/// certified stable: `(result : f) = result`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Precondition("saturation by the zero polynomial".into()));
    }
    if !ideal.ring().same_variables(f.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring();
    let f = f.in_ring(ring);
    let result = with_auxiliary(ring, |ext, y| {
        let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.embed(ext)).collect();
        gens.push(&Polynomial::one(ext) - &(y * &f.embed(ext)));
        gens
    });
    let again = ideal_colon(&result, &f)?;
    if !ideal_equal(&again, &result)? {
        return Err(Error::CertificateFailed {
            identity: "(sat : f) = sat".into(),
            detail: format!("{again} differs from {result}"),
        });
    }
    Ok(result)
}

/// `(I : J^∞) = ∩ (I : g^∞)` over generators `g` of `J`.
pub fn saturate_ideal(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(a, b)?;
    let mut acc = Ideal::unit(a.ring());
    for g in b.generators() {
        let s = saturate(a, g)?;
        acc = ideal_intersect(&acc, &s)?;
    }
    Ok(canonical(a.ring(), acc.generators().to_vec()))
}

/// `f ∈ √I` iff `1 ∈ I + (1 - y f)` (Rabinowitsch).
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !ideal.ring().same_variables(f.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let ext = ideal.ring().extend(&["aux"]).with_order(MonomialOrder::DegRevLex);
    let y = Polynomial::var(&ext, ext.nvars() - 1);
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.embed(&ext)).collect();
    gens.push(&Polynomial::one(&ext) - &(&y * &f.embed(&ext)));
    Ok(Ideal::new(&ext, gens)?.is_unit())
}

/// Equality of ideals by comparison of reduced degrevlex bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    check(a, b)?;
    let ga = a.degrevlex_basis();
    let gb = b.in_ring(a.ring()).degrevlex_basis();
    Ok(ga.generators() == gb.generators())
}

/// Membership in the localisation at the origin, optionally modulo the
/// `(d+1)`-th power of the maximal ideal.
pub fn local_contains(ideal: &Ideal, f: &Polynomial, truncation: Option<u32>) -> bool {
    local_contains_all(ideal, std::slice::from_ref(f), truncation)
}

/// Local membership of every polynomial in `fs`, sharing one standard basis.
///
/// Truncated membership uses Mora's normal form. Otherwise the members are
/// decided at once: for `I ⊆ J` the localisations agree iff the standard
/// bases have the same leading ideal, applied to `J = I + (fs)`.
pub fn local_contains_all(ideal: &Ideal, fs: &[Polynomial], truncation: Option<u32>) -> bool {
    let sb = ideal.local_basis();
    let ring = sb.ring();
    let fs: Vec<Polynomial> =
        fs.iter().map(|f| if same_ring(f.ring(), ring) { f.clone() } else { f.in_ring(ring) }).collect();
    if truncation.is_some() {
        return fs.iter().all(|f| mora_normal_form_truncated(f, sb.generators(), truncation).is_zero());
    }
    let global = ideal.degrevlex_basis();
    let outside: Vec<Polynomial> =
        fs.into_iter().filter(|f| !global.normal_form(f).unwrap().is_zero()).collect();
    if outside.is_empty() {
        return true;
    }
    let lead = |g: &Polynomial| g.leading_monomial().unwrap().clone();
    let old: Vec<_> = sb.generators().iter().map(lead).collect();
    if outside.iter().any(|f| !old.iter().any(|m| m.divides(&lead(f)))) {
        return false;
    }
    let mut gens = sb.generators().to_vec();
    gens.extend(outside);
    let bigger = Ideal::new(ring, gens).expect("same ring").local_basis();
    bigger.generators().iter().all(|g| old.iter().any(|m| m.divides(&lead(g))))
}

/// Equality in the localisation at the origin (optionally truncated).
pub fn local_equal(a: &Ideal, b: &Ideal, truncation: Option<u32>) -> Result<bool> {
    check(a, b)?;
    Ok(local_contains_all(a, b.generators(), truncation) && local_contains_all(b, a.generators(), truncation))
}
