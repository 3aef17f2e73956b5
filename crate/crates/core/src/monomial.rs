use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// A power product `x_1^a_1 ... x_n^a_n` with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn new(exps: impl Into<Exponents>) -> Result<Self> {
        let exps = exps.into();
        let mut degree = 0u32;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { degree, exps })
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        Self::new(Exponents::from_slice(exps)).expect("exponent overflow")
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree.checked_add(other.degree).expect("exponent overflow"),
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            degree: self.degree - other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// The squarefree part (every positive exponent replaced by one).
    pub fn radical(&self) -> Monomial {
        let exps: Exponents = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial { degree: exps.iter().sum(), exps }
    }

    /// Reorders or pads exponents: entry `j` of the result is the exponent
    /// of `map[j]` in `self` (zero when `map[j]` is `None`).
    pub(crate) fn remap(&self, map: &[Option<usize>]) -> Monomial {
        let exps: Exponents = map.iter().map(|m| m.map_or(0, |i| self.exps[i])).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub(crate) fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

/// A total order on monomials of a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic: global.
    DegRevLex,
    /// Pure lexicographic: global.
    Lex,
    /// Negative degree reverse lexicographic: local, every variable is
    /// smaller than 1.
    NegDegRevLex,
    /// Weight vector first, degrevlex as tie-break.
    Weighted(Arc<[i64]>),
}

fn revlex_tail(a: &Monomial, b: &Monomial) -> Ordering {
    // smaller exponent in the last differing variable wins
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    pub fn weighted(weights: impl Into<Vec<i64>>) -> Self {
        MonomialOrder::Weighted(Arc::from(weights.into()))
    }

    /// An elimination order for the variables flagged in `eliminate`.
    pub fn elimination(nvars: usize, eliminate: &[usize]) -> Self {
        let mut w = vec![0i64; nvars];
        for &i in eliminate {
            w[i] = 1;
        }
        Self::weighted(w)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::NegDegRevLex => {
                b.degree.cmp(&a.degree).then_with(|| revlex_tail(a, b))
            }
            MonomialOrder::Weighted(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| degrevlex(a, b)),
        }
    }

    /// A key whose lexicographic order agrees with this order.
    pub fn sort_key(&self, m: &Monomial) -> Vec<i64> {
        let tail = m.exps.iter().rev().map(|&e| -i64::from(e));
        let deg = i64::from(m.degree);
        match self {
            MonomialOrder::DegRevLex => std::iter::once(deg).chain(tail).collect(),
            MonomialOrder::Lex => m.exps.iter().map(|&e| i64::from(e)).collect(),
            MonomialOrder::NegDegRevLex => std::iter::once(-deg).chain(tail).collect(),
            MonomialOrder::Weighted(w) => [m.weighted_degree(w), deg].into_iter().chain(tail).collect(),
        }
    }

    /// A global order is a well-order with `1 < x_i` for every variable.
    pub fn is_global(&self) -> bool {
        match self {
            MonomialOrder::DegRevLex | MonomialOrder::Lex => true,
            MonomialOrder::NegDegRevLex => false,
            MonomialOrder::Weighted(w) => w.iter().all(|&x| x >= 0),
        }
    }

    /// Local orders have `x_i < 1` for every variable.
    pub fn is_local(&self) -> bool {
        match self {
            MonomialOrder::NegDegRevLex => true,
            MonomialOrder::Weighted(w) => w.iter().all(|&x| x < 0),
            _ => false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::NegDegRevLex => "negdegrevlex".into(),
            MonomialOrder::Weighted(w) => format!("weighted{:?}", &w[..]),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "degrevlex" | "dp" => Some(MonomialOrder::DegRevLex),
            "lex" | "lp" => Some(MonomialOrder::Lex),
            "negdegrevlex" | "ds" | "local" => Some(MonomialOrder::NegDegRevLex),
            _ => None,
        }
    }
}
