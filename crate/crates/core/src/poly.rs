//! Sparse polynomials in canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{same_ring, RingRef};
use crate::scalar::Scalar;

pub type Term = (Scalar, Monomial);

/// A polynomial whose terms are nonzero, pairwise distinct and sorted
/// strictly descending under the ring's active order.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_variables(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &RingRef, c: Scalar, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            Self::zero(ring)
        } else {
            Polynomial { ring: ring.clone(), terms: vec![(c, m)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: merges equal
    /// monomials, drops zeros and sorts.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = last.0.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.0.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if matches!(out.last(), Some(last) if last.0.is_zero()) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// A nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The order `o(f)`: smallest total degree of a term.
    pub fn order_of(&self) -> Result<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).min().ok_or(Error::ZeroPolynomial)
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(_, m)| m.degree() == d).cloned().collect(),
        }
    }

    /// The initial form `in(f)`: the homogeneous component of degree `o(f)`.
    pub fn initial_form(&self) -> Result<Polynomial> {
        Ok(self.homogeneous_part(self.order_of()?))
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => self.terms.iter().all(|(_, m)| m.degree() == m0.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].0.neg() } else { b[j].0.clone() };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].0.sub(&b[j].0) } else { a[i].0.add(&b[j].0) };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| (if negate { c.neg() } else { c.clone() }, m.clone())));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc = Polynomial::zero(&self.ring);
        // multiply by the shorter factor term-wise; each partial product is already sorted
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for (c, m) in &short.terms {
            acc = acc.merge(&long.mul_term(c, m), false);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a.mul(c), m.clone())).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, n)| (a.mul(c), n.mul(m))).collect(),
        }
    }

    /// `a * self - c * m * g`, the elementary reduction step.
    pub(crate) fn scaled_sub_term(&self, a: &Scalar, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let lhs = if a.is_one() { self.clone() } else { self.scale(a) };
        lhs.merge(&g.mul_term(c, m), true)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `v`.
    pub fn differentiate(&self, v: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exp(v) > 0)
            .map(|(c, m)| {
                let e = m.exp(v);
                (c.mul(&field.from_i64(e as i64)), m.with_exp(v, e - 1))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-sorts under the order of `ring`, which must have the same variables.
    pub fn in_ring(&self, ring: &RingRef) -> Polynomial {
        assert!(self.ring.same_variables(ring), "in_ring: variables differ");
        if same_ring(&self.ring, ring) {
            return self.clone();
        }
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Moves into `ring` using a variable map: variable `j` of `ring`
    /// takes the exponent of variable `map[j]` of `self` (or zero).
    /// Every variable of `self` with positive exponent must be mapped.
    pub fn remap(&self, ring: &RingRef, map: &[Option<usize>]) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), m.remap(map))).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Embeds into a ring whose first variables coincide with ours.
    pub fn embed(&self, ring: &RingRef) -> Polynomial {
        let n = self.ring.nvars();
        let map: Vec<Option<usize>> = (0..ring.nvars()).map(|j| (j < n).then_some(j)).collect();
        self.remap(ring, &map)
    }

    /// Substitutes the scalar `value` for variable `v`, keeping `v` in the ring.
    pub fn evaluate_var(&self, v: usize, value: &Scalar) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut c = c.clone();
                for _ in 0..m.exp(v) {
                    c = c.mul(value);
                }
                (c, m.with_exp(v, 0))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes the polynomial `value` for variable `v`.
    pub fn substitute(&self, v: usize, value: &Polynomial) -> Polynomial {
        let mut powers = vec![Polynomial::one(&self.ring)];
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let rest = m.with_exp(v, 0);
            acc = &acc + &powers[e].mul_term(c, &rest);
        }
        acc
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Removes the scalar content. Over the rationals the result has
    /// coprime integer coefficients and a positive leading coefficient;
    /// over a prime field it is monic.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        if self.terms[0].0.as_rational().is_none() {
            return self.monic();
        }
        let mut den_lcm = BigInt::one();
        for (c, _) in &self.terms {
            den_lcm = den_lcm.lcm(c.as_rational().unwrap().denom());
        }
        let mut num_gcd = BigInt::zero();
        for (c, _) in &self.terms {
            let q = c.as_rational().unwrap();
            let n = q.numer() * (&den_lcm / q.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        if self.terms[0].0.is_negative() {
            num_gcd = -num_gcd;
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        if factor.is_one() {
            return self.clone();
        }
        self.scale(&Scalar::Rational(factor))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lc_d, lm_d) = divisor.leading_term()?;
        let mut rest = self.clone();
        let mut quotient: Vec<Term> = Vec::new();
        while let Some((c, m)) = rest.leading_term().cloned() {
            if !lm_d.divides(&m) {
                return None;
            }
            let q = c.div(lc_d);
            let qm = m.div(lm_d);
            rest = rest.scaled_sub_term(&self.ring.field().one(), &q, &qm, divisor);
            quotient.push((q, qm));
        }
        Some(Polynomial::from_terms(&self.ring, quotient))
    }

    /// Variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&i| self.terms.iter().any(|(_, m)| m.exp(i) > 0)).collect()
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.1.clone();
        Some(it.fold(first, |g, (_, m)| g.gcd(m)))
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, n)| (c.clone(), n.div(m))).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, names, m)?;
            }
        }
        Ok(())
    }
}
