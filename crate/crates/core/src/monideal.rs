//! Monomial ideals as sets of minimal generators.

use crate::basis::Ideal;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// A monomial ideal kept as its (sorted, unique) minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    // sorted by degree first, so a divisor precedes its multiples
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// The monomial ideal generated by the monomial generators of `ideal`.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut gens = Vec::new();
        for g in ideal.generators() {
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            gens.push(g.leading_monomial().unwrap().clone());
        }
        Ok(Self::new(ideal.ring().nvars(), gens))
    }

    /// Generators listed from largest to smallest under the ring's order.
    pub fn to_ideal(&self, ring: &RingRef) -> Ideal {
        let one = ring.field().one();
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| ring.order().cmp(b, a));
        let gens = gens.into_iter().map(|m| Polynomial::monomial(ring, one.clone(), m)).collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    /// The prime generated by the variables in `vars`.
    pub fn from_variables(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&v| Monomial::var(nvars, v)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Every generator is a single variable.
    pub fn is_prime(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|g| g.degree() == 1)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::new(self.nvars, gens)
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(m))).collect();
        Self::new(self.nvars, gens)
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Minimal sets of variables meeting the support of every generator;
    /// these are the minimal primes. Empty for the unit ideal.
    pub fn minimal_prime_supports(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support().collect()).collect();
        let mut covers: Vec<Vec<bool>> = Vec::new();
        let mut chosen = vec![false; self.nvars];
        fn rec(supports: &[Vec<usize>], chosen: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            match supports.iter().find(|s| !s.iter().any(|&v| chosen[v])) {
                None => out.push(chosen.clone()),
                Some(s) => {
                    for &v in s {
                        chosen[v] = true;
                        rec(supports, chosen, out);
                        chosen[v] = false;
                    }
                }
            }
        }
        rec(&supports, &mut chosen, &mut covers);
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(x, y)| !*x || *y);
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for (k, c) in covers.iter().enumerate() {
            let redundant = covers.iter().enumerate().any(|(j, d)| {
                j != k && subset(d, c) && (d != c || j < k)
            });
            if !redundant {
                minimal.push((0..self.nvars).filter(|&v| c[v]).collect());
            }
        }
        minimal.sort();
        minimal
    }

    /// Krull dimension of the quotient; `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        self.minimal_prime_supports().iter().map(|s| self.nvars - s.len()).max()
    }

    /// Irredundant decomposition into irreducible components, each given
    /// by its pure-power generators `(variable, exponent)`.
    pub fn irreducible_components(&self) -> Vec<Vec<(usize, u32)>> {
        if self.is_unit() {
            return Vec::new();
        }
        let mut raw: Vec<Vec<(usize, u32)>> = Vec::new();
        let mut stack = vec![self.gens.clone()];
        while let Some(gens) = stack.pop() {
            let gens = minimalize(gens);
            if gens.iter().any(|g| g.is_one()) {
                continue;
            }
            match gens.iter().position(|g| g.support().count() >= 2) {
                None => {
                    let mut comp: Vec<(usize, u32)> = gens
                        .iter()
                        .map(|g| {
                            let v = g.support().next().unwrap();
                            (v, g.exp(v))
                        })
                        .collect();
                    comp.sort();
                    raw.push(comp);
                }
                Some(k) => {
                    let m = &gens[k];
                    let v = m.support().next().unwrap();
                    let power = Monomial::one(self.nvars).with_exp(v, m.exp(v));
                    let rest = m.div(&power);
                    let mut left = gens.clone();
                    left[k] = power;
                    let mut right = gens.clone();
                    right[k] = rest;
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        // C' ⊆ C iff every x^b of C' is divisible by some x^a of C
        let contained = |small: &[(usize, u32)], big: &[(usize, u32)]| {
            small.iter().all(|&(v, b)| big.iter().any(|&(w, a)| w == v && a <= b))
        };
        raw.sort();
        raw.dedup();
        let mut out = Vec::new();
        for (k, c) in raw.iter().enumerate() {
            let redundant = raw.iter().enumerate().any(|(j, d)| j != k && contained(d, c));
            if !redundant {
                out.push(c.clone());
            }
        }
        out
    }

    pub fn component_ideal(nvars: usize, comp: &[(usize, u32)]) -> MonomialIdeal {
        let gens = comp.iter().map(|&(v, e)| Monomial::one(nvars).with_exp(v, e)).collect();
        MonomialIdeal::new(nvars, gens)
    }

    /// Supports of the associated primes (radicals of the irreducible
    /// components), sorted and without repetition.
    pub fn associated_prime_supports(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .irreducible_components()
            .iter()
            .map(|c| c.iter().map(|&(v, _)| v).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Number of standard monomials of degree `d`.
    pub fn standard_monomials_in_degree(&self, d: u32) -> u64 {
        let mut count = 0u64;
        let mut exps = vec![0u32; self.nvars];
        fn rec(ideal: &MonomialIdeal, i: usize, left: u32, exps: &mut Vec<u32>, count: &mut u64) {
            if i + 1 == ideal.nvars {
                exps[i] = left;
                if !ideal.contains(&Monomial::from_slice(exps)) {
                    *count += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                rec(ideal, i + 1, left - e, exps, count);
            }
        }
        if self.nvars == 0 {
            return u64::from(d == 0 && !self.is_unit());
        }
        rec(self, 0, d, &mut exps, &mut count);
        count
    }
}
