//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer-Moeller installation of the product and chain criteria.

use std::cmp::Ordering;

use crate::basis::reduce::{reduce_full, reduce_top};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lm(f: &Polynomial) -> &Monomial {
    f.leading_monomial().expect("nonzero")
}

/// S-polynomial of `f` and `g` with cross-multiplied leading coefficients.
pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (cf, mf) = f.leading_term().unwrap();
    let (cg, mg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(cg, &l.div(mf));
    a.scaled_sub_term(&cf.field().one(), cf, &l.div(mg), g)
}

struct State {
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn active_basis(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Inserts `h` and updates the pair set (Gebauer-Moeller).
    fn update(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        let lh = lm(&h).clone();
        let olds: Vec<usize> = (0..hi).filter(|&k| self.active[k]).collect();

        // candidate new pairs (h, g)
        let cands: Vec<Pair> = olds
            .iter()
            .map(|&k| Pair { i: k, j: hi, lcm: lh.lcm(lm(&self.polys[k])) })
            .collect();
        let coprime = |p: &Pair, polys: &[Polynomial]| lm(&polys[p.i]).is_coprime(&lh);

        // chain criterion among the new pairs: drop (h,g1) when some other
        // (h,g2) has a lcm properly dividing it, or an equal lcm with a
        // smaller index
        let mut kept: Vec<Pair> = Vec::new();
        for (a, p) in cands.iter().enumerate() {
            if coprime(p, &self.polys) {
                kept.push(p.clone());
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(b, q)| {
                b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a)
            });
            if !dominated {
                kept.push(p.clone());
            }
        }
        // among pairs with equal lcm keep one; product criterion removes the coprime ones
        let mut fresh: Vec<Pair> = Vec::new();
        for p in kept {
            if fresh.iter().any(|q| q.lcm == p.lcm) {
                continue;
            }
            fresh.push(p);
        }
        let fresh: Vec<Pair> = fresh.into_iter().filter(|p| !coprime(p, &self.polys)).collect();

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = lm(&polys[p.i]).lcm(&lh);
            let lj = lm(&polys[p.j]).lcm(&lh);
            !(lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        self.pairs.extend(fresh);

        for &k in &olds {
            if lh.divides(lm(&self.polys[k])) {
                self.active[k] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }
}

/// Reduced Groebner basis of `gens` under the ring's (global) order:
/// monic, tail-reduced, sorted by ascending leading monomial.
pub(crate) fn reduced_groebner_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    buchberger(gens, None)
}

/// As [`reduced_groebner_basis`] for an ideal homogeneous in a grading,
/// except that every new element is divided by the largest power of the
/// variable `v` dividing it. The result is a Groebner basis of an ideal
/// between the input and its saturation by `v`.
pub(crate) fn groebner_basis_stripping(gens: &[Polynomial], v: usize) -> Vec<Polynomial> {
    buchberger(gens, Some(v))
}

fn strip_var(h: Polynomial, v: Option<usize>) -> Polynomial {
    let Some(v) = v else { return h };
    let k = h.terms().iter().map(|(_, m)| m.exp(v)).min().unwrap_or(0);
    if k == 0 {
        return h;
    }
    let n = h.ring().nvars();
    h.div_monomial(&Monomial::one(n).with_exp(v, k))
}

fn buchberger(gens: &[Polynomial], strip: Option<usize>) -> Vec<Polynomial> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let order = first.ring().order().clone();
    debug_assert!(order.is_global());
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.primitive()).collect();
    input.sort_by(|a, b| order.cmp(lm(a), lm(b)));

    let mut st = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for f in input {
        let h = reduce_full(&f, &st.active_basis());
        if h.is_zero() {
            continue;
        }
        if h.is_unit_constant() {
            return vec![Polynomial::one(h.ring())];
        }
        st.update(h);
    }

    while !st.pairs.is_empty() {
        // normal strategy: smallest lcm degree, then generator indices
        let (idx, _) = st
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .unwrap();
        let pair = st.pairs.swap_remove(idx);
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let h = strip_var(reduce_top(&s, &st.active_basis()), strip);
        if h.is_zero() {
            continue;
        }
        if h.is_unit_constant() {
            return vec![Polynomial::one(h.ring())];
        }
        st.update(h);
    }

    interreduce(st.active_basis(), &order)
}

/// Minimalises, tail-reduces, normalises and sorts a Groebner basis.
pub(crate) fn interreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != k && lm(h).divides(lm(g)) && (lm(h) != lm(g) || j < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p.clone()).collect();
        out.push(reduce_full(&minimal[k], &others).monic());
    }
    out.sort_by(|a, b| order.cmp(lm(a), lm(b)));
    out
}

/// Compares two polynomials by leading monomial.
#[allow(dead_code)]
pub(crate) fn cmp_lm(order: &MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    order.cmp(lm(a), lm(b))
}
