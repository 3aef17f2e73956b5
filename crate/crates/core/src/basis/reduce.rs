//! Division steps: full normal forms for global orders and Mora's weak
//! normal form for local orders.

use std::collections::{BinaryHeap, HashMap};

use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::scalar::Scalar;

/// Index of the first polynomial whose leading monomial divides `m`.
pub(crate) fn find_divisor<'a, I>(m: &Monomial, basis: I) -> Option<usize>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    basis
        .into_iter()
        .position(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Replaces `h` by `lc(g)*h - c*m*g` where `c*m` cancels the term of `h`
/// at monomial `target` (coefficient `c_target`), then removes content.
fn cancel(h: &Polynomial, c_target: &crate::Scalar, target: &Monomial, g: &Polynomial) -> Polynomial {
    let (lc_g, lm_g) = g.leading_term().expect("nonzero reducer");
    let m = target.div(lm_g);
    h.scaled_sub_term(lc_g, c_target, &m, g).primitive()
}

/// Division by `basis` with a hash-map accumulator and a heap of pending
/// monomials. Stops at the first irreducible term unless `full`. The
/// remainder is exact: `f - sum q_i g_i`.
fn divide(f: &Polynomial, basis: &[Polynomial], full: bool) -> Polynomial {
    let ring = f.ring();
    let order = ring.order();
    let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(f.len() * 2);
    let mut heap: BinaryHeap<(Vec<i64>, Monomial)> = BinaryHeap::new();
    for (c, m) in f.terms() {
        acc.insert(m.clone(), c.clone());
        heap.push((order.sort_key(m), m.clone()));
    }
    let mut rest: Vec<Term> = Vec::new();
    while let Some((_, m)) = heap.pop() {
        let Some(c) = acc.remove(&m) else { continue };
        if c.is_zero() {
            continue;
        }
        let Some(i) = find_divisor(&m, basis) else {
            rest.push((c, m));
            if full {
                continue;
            }
            rest.extend(acc.drain().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)));
            break;
        };
        let g = &basis[i];
        let (lc_g, lm_g) = g.leading_term().unwrap();
        let q = c.div(lc_g);
        let shift = m.div(lm_g);
        for (d, t) in &g.terms()[1..] {
            let mm = t.mul(&shift);
            let delta = q.mul(d);
            match acc.get_mut(&mm) {
                Some(e) => *e = e.sub(&delta),
                None => {
                    heap.push((order.sort_key(&mm), mm.clone()));
                    acc.insert(mm, delta.neg());
                }
            }
        }
    }
    Polynomial::from_terms(ring, rest)
}

/// Full reduction of `f` modulo `basis` under a global order. The result
/// has no term divisible by a leading monomial of `basis`. The result is
/// normalised up to a nonzero scalar (content removed).
pub(crate) fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    divide(f, basis, true).primitive()
}

/// Full reduction with field division instead of content removal, so the
/// remainder is the exact one: `f - sum q_i g_i`.
pub(crate) fn reduce_full_exact(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    divide(f, basis, true)
}

/// Reduces only the leading term until it is irreducible.
pub(crate) fn reduce_top(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    divide(f, basis, false).primitive()
}

/// `deg(f) - deg(lm(f))` for a local order, where the leading monomial has
/// the smallest degree.
pub(crate) fn ecart(f: &Polynomial) -> u32 {
    match (f.degree(), f.leading_monomial()) {
        (Some(d), Some(lm)) => d - lm.degree(),
        _ => 0,
    }
}

fn truncate(f: Polynomial, bound: Option<u32>) -> Polynomial {
    match bound {
        Some(d) if f.degree().is_some_and(|deg| deg > d) => {
            let terms = f.terms().iter().filter(|(_, m)| m.degree() <= d).cloned().collect();
            Polynomial::from_terms(f.ring(), terms)
        }
        _ => f,
    }
}

/// Mora's weak normal form of `f` with respect to `basis` under a local
/// order. Reducers are chosen by minimal ecart (ties by index); whenever the
/// chosen reducer has larger ecart than the current remainder, the
/// remainder joins the reducer set. The result `r` satisfies
/// `u*f = sum a_i g_i + r` for a unit `u`, and its leading monomial is
/// divisible by no leading monomial of `basis`.
///
/// With `truncation = Some(d)` every term of degree above `d` is discarded,
/// i.e. the computation takes place modulo the `(d+1)`-th power of the
/// maximal ideal.
pub fn mora_normal_form_truncated(f: &Polynomial, basis: &[Polynomial], truncation: Option<u32>) -> Polynomial {
    let mut h = truncate(f.primitive(), truncation);
    let mut reducers: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut ecarts: Vec<u32> = reducers.iter().map(ecart).collect();
    loop {
        let Some((c, m)) = h.leading_term().cloned() else { return h };
        let best = reducers
            .iter()
            .enumerate()
            .filter(|(_, g)| g.leading_monomial().is_some_and(|lm| lm.divides(&m)))
            .min_by_key(|(i, _)| (ecarts[*i], *i))
            .map(|(i, _)| i);
        let Some(i) = best else { return h };
        let eh = ecart(&h);
        if ecarts[i] > eh {
            reducers.push(h.clone());
            ecarts.push(eh);
        }
        let g = reducers[i].clone();
        h = truncate(cancel(&h, &c, &m, &g), truncation);
    }
}

/// Mora's weak normal form without truncation.
pub fn mora_normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    mora_normal_form_truncated(f, basis, None)
}
