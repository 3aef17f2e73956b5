//! Checks that `hom` commutes with intersections, inclusions, radicals,
//! minimal primes and the graphs `Γ_s`, on concrete ideals.

use crate::basis::{ideal_equal, ideal_intersect, local_contains_all, local_equal, radical_membership, Ideal};
use crate::error::{Error, Result};
use crate::spectrum::{connectedness_of_primes, min_primes_general, PrimeCertificate};

use super::{default_truncation, extended_ring, homogenize_into};

/// One identity, evaluated on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub item: String,
    pub holds: bool,
    /// Why the identity failed, when it did.
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct HomIdentityReport {
    pub truncation: u32,
    pub checks: Vec<IdentityCheck>,
}

impl HomIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, item: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.item == item)
    }
}

fn check(item: impl Into<String>, holds: bool, witness: impl FnOnce() -> String) -> IdentityCheck {
    IdentityCheck { item: item.into(), holds, witness: (!holds).then(witness) }
}

/// `hom` of a local standard basis, without certificates.
pub fn hom_ideal(ideal: &Ideal) -> Result<Ideal> {
    let ext = extended_ring(ideal.ring());
    let sb = ideal.local_basis();
    let gens = sb.generators().iter().map(|g| homogenize_into(g, &ext)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&ext, gens)
}

/// Runs the identity suite on `I` and `J`, comparing local ideals modulo
/// the `(truncation+1)`-th power of the maximal ideal.
pub fn check_hom_identities(i: &Ideal, j: &Ideal, truncation: Option<u32>) -> Result<HomIdentityReport> {
    check_hom_identities_with(i, j, truncation, &[])
}

/// As [`check_hom_identities`], trusting the given primes when the
/// decomposition cannot certify an ideal equal to one of them.
pub fn check_hom_identities_with(
    i: &Ideal,
    j: &Ideal,
    truncation: Option<u32>,
    asserted: &[PrimeCertificate],
) -> Result<HomIdentityReport> {
    let d = truncation.unwrap_or_else(|| default_truncation(i).max(default_truncation(j)));
    let hi = hom_ideal(i)?;
    let hj = hom_ideal(j)?;
    let mut checks = Vec::new();

    let meet = ideal_intersect(i, j)?;
    let lhs = hom_ideal(&meet)?;
    let rhs = ideal_intersect(&hi, &hj)?;
    checks.push(check("1", local_equal(&lhs, &rhs, Some(d))?, || format!("hom(I∩J) = {lhs}, hom(I)∩hom(J) = {rhs}")));

    let mut holds = true;
    let mut witness = String::new();
    for (name, a, b, ha, hb) in [("I ⊆ J", i, j, &hi, &hj), ("J ⊆ I", j, i, &hj, &hi)] {
        let below = local_contains_all(b, a.generators(), Some(d));
        let above = local_contains_all(hb, ha.generators(), Some(d));
        if below != above {
            holds = false;
            witness = format!("{name} is {below} but the homogenized inclusion is {above}");
        }
    }
    checks.push(check("2", holds, || witness));

    let same = ideal_equal(i, j)?;
    let inputs: Vec<(&str, &Ideal, &Ideal)> = if same { vec![("I", i, &hi)] } else { vec![("I", i, &hi), ("J", j, &hj)] };
    for (label, ideal, hom) in inputs {
        checks.extend(prime_identities(label, ideal, hom, d, asserted)?);
    }
    Ok(HomIdentityReport { truncation: d, checks })
}

fn primes_of(ideal: &Ideal, asserted: &[PrimeCertificate]) -> Result<Vec<PrimeCertificate>> {
    match min_primes_general(ideal) {
        Err(e) if e.is_cannot_certify() => {
            for p in asserted {
                if p.ideal.ring().same_variables(ideal.ring()) && ideal_equal(&p.ideal, ideal)? {
                    return Ok(vec![p.clone()]);
                }
            }
            Err(e)
        }
        other => other,
    }
}

fn intersect_all(ring: &crate::ring::RingRef, ideals: impl Iterator<Item = Ideal>) -> Result<Ideal> {
    let mut acc = Ideal::unit(ring);
    for p in ideals {
        acc = ideal_intersect(&acc, &p)?;
    }
    Ok(acc)
}

/// Items 5, 6 and 7 for one ideal.
fn prime_identities(
    label: &str,
    ideal: &Ideal,
    hom: &Ideal,
    d: u32,
    asserted: &[PrimeCertificate],
) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let ext = hom.ring().clone();
    let primes = primes_of(ideal, asserted)?;
    let hom_asserted: Vec<PrimeCertificate> = asserted
        .iter()
        .map(|p| {
            Ok(PrimeCertificate::asserted(&hom_ideal(&p.ideal)?, p.dim + 1, "homogenization of an asserted prime"))
        })
        .collect::<Result<_>>()?;

    // hom of each minimal prime, certified when its shape allows
    let mut hom_primes = Vec::with_capacity(primes.len());
    for p in &primes {
        let h = hom_ideal(&p.ideal)?;
        let cert = match PrimeCertificate::certify(&h) {
            Some(c) => c,
            None => hom_asserted
                .iter()
                .find(|q| ideal_equal(&q.ideal, &h).unwrap_or(false))
                .cloned()
                .ok_or_else(|| Error::CannotCertify(format!("hom({}) = {h} is not certified prime", p.ideal)))?,
        };
        hom_primes.push(cert);
    }

    // (5) hom(√I) = √hom(I)
    let radical = intersect_all(ideal.ring(), primes.iter().map(|p| p.ideal.clone()))?;
    let hom_radical = hom_ideal(&radical)?;
    let contains_hom = local_contains_all(&hom_radical, hom.generators(), Some(d));
    let mut in_radical = true;
    for g in hom_radical.generators() {
        in_radical &= radical_membership(g, hom)?;
    }
    let meet = intersect_all(&ext, hom_primes.iter().map(|p| p.ideal.clone()))?;
    let is_radical = local_equal(&hom_radical, &meet, Some(d))?;
    out.push(check(format!("5[{label}]"), contains_hom && in_radical && is_radical, || {
        format!("hom(I) ⊆ hom(√I): {contains_hom}, hom(√I) ⊆ √hom(I): {in_radical}, hom(√I) = ∩ hom(p): {is_radical}")
    }));

    // (6) Min(hom(I)) = { hom(p) }
    let found = primes_of(hom, &hom_asserted)?;
    let mut matching = vec![None; hom_primes.len()];
    let mut unmatched = Vec::new();
    for q in &found {
        let hit = hom_primes.iter().position(|p| local_equal(&p.ideal, &q.ideal, Some(d)).unwrap_or(false));
        match hit {
            Some(k) if matching[k].is_none() => matching[k] = Some(q.clone()),
            _ => unmatched.push(q.ideal.to_string()),
        }
    }
    let bijective = unmatched.is_empty() && matching.iter().all(Option::is_some);
    out.push(check(format!("6[{label}]"), bijective, || {
        format!("{} primes below, {} above, unmatched: {unmatched:?}", primes.len(), found.len())
    }));

    // (7) Γ_s agree vertex by vertex for every s up to dim + 1
    let below = connectedness_of_primes(&primes, 0)?;
    if !bijective {
        out.push(check(format!("7[{label}]"), false, || "no prime correspondence".into()));
        return Ok(out);
    }
    let paired: Vec<PrimeCertificate> = matching.into_iter().map(Option::unwrap).collect();
    let above = connectedness_of_primes(&paired, 0)?;
    let top = below.d.map_or(0, |x| x + 1);
    let mut first_bad = None;
    for s in 0..=top {
        let a = below.graph.at(s);
        let b = above.graph.at(s);
        if a.adjacency != b.adjacency && first_bad.is_none() {
            first_bad = Some(s);
        }
    }
    out.push(check(format!("7[{label}]"), first_bad.is_none(), || format!("graphs differ at s = {}", first_bad.unwrap())));
    Ok(out)
}
