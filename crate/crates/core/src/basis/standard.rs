//! Standard bases for local orders, via Lazard's homogenization.
//!
//! With the local order `x^a > x^b` iff `w·a > w·b` (ties by degrevlex),
//! homogenize every generator for the positive grading `-w` with a new
//! variable `h` of weight 1. On each graded piece of `k[x, h]`, the order
//! "larger power of `h` first, then degrevlex" agrees with the local order
//! on the `x`-parts. So a Groebner basis of any homogeneous ideal between
//! the homogenized generators and their saturation by `h` dehomogenizes to
//! a standard basis. New elements are divided by powers of `h` on the way.

use std::sync::Arc;

use crate::basis::groebner::groebner_basis_stripping;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Positive grading that the local order refines.
fn grading(ring: &RingRef) -> Vec<u32> {
    match ring.order() {
        MonomialOrder::Weighted(w) => w.iter().map(|&x| (-x) as u32).collect(),
        _ => vec![1; ring.nvars()],
    }
}

fn graded_degree(m: &Monomial, g: &[u32]) -> u32 {
    m.exponents().iter().zip(g).map(|(e, w)| e * w).sum()
}

/// A minimal standard basis of the ideal generated by `gens` in the
/// localisation at the origin. The ring order must be local.
pub(crate) fn standard_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    // a nonzero constant term makes a generator a unit
    if gens.iter().any(|f| !f.constant_term().is_zero()) {
        return vec![Polynomial::one(&ring)];
    }
    let n = ring.nvars();
    let g = grading(&ring);
    let mut weights = vec![0i64; n + 1];
    weights[n] = 1;
    let ext = ring.extend(&["h"]).with_order(MonomialOrder::Weighted(Arc::from(weights)));

    let homogenized: Vec<Polynomial> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            let top = f.terms().iter().map(|(_, m)| graded_degree(m, &g)).max().unwrap();
            let terms = f
                .terms()
                .iter()
                .map(|(c, m)| {
                    let mut e = m.exponents().to_vec();
                    e.push(top - graded_degree(m, &g));
                    (c.clone(), Monomial::from_slice(&e))
                })
                .collect();
            Polynomial::from_terms(&ext, terms)
        })
        .collect();

    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let basis: Vec<Polynomial> = groebner_basis_stripping(&homogenized, n)
        .iter()
        .map(|p| p.remap(&ring, &map).primitive())
        .filter(|p| !p.is_zero())
        .collect();
    if basis.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one())) {
        return vec![Polynomial::one(&ring)];
    }

    // drop elements whose leading monomial is divisible by another one
    let mut out: Vec<Polynomial> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let lp = p.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial().unwrap();
            j != k && lq.divides(lp) && (lq != lp || j < k)
        });
        if !redundant {
            out.push(p.clone());
        }
    }
    let order = ring.order().clone();
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}
