//! Ideals, Groebner bases for global orders, standard bases for local
//! orders and ideal arithmetic.

mod groebner;
mod ops;
mod reduce;
mod standard;

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingRef};

pub use ops::{
    eliminate, ideal_colon, ideal_colon_ideal, ideal_equal, ideal_intersect, ideal_product, ideal_sum,
    local_contains, local_contains_all, local_equal, radical_membership, saturate, saturate_ideal,
};
pub use reduce::{mora_normal_form, mora_normal_form_truncated};

/// Certification state of a generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisStatus {
    Raw,
    /// Reduced Groebner basis (monic, tail-reduced, sorted) for a global order.
    Groebner(MonomialOrder),
    /// Minimal standard basis for a local order.
    Standard(MonomialOrder),
}

/// An ideal given by nonzero generators in a common ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    status: BasisStatus,
}

impl Ideal {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !same_ring(g.ring(), ring) {
                if g.ring().same_variables(ring) {
                    gens.push(g.in_ring(ring));
                    continue;
                }
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        gens.retain(|g| !g.is_zero());
        Ok(Ideal { ring: ring.clone(), generators: gens, status: BasisStatus::Raw })
    }

    /// Parses each string as a generator.
    pub fn parse<S: AsRef<str>>(ring: &RingRef, gens: &[S]) -> Result<Self> {
        let polys = gens.iter().map(|s| parse_polynomial(s.as_ref(), ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), status: BasisStatus::Raw }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)], status: BasisStatus::Raw }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn status(&self) -> &BasisStatus {
        &self.status
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Same generators viewed under another order of the same variables.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        Ideal {
            generators: self.generators.iter().map(|g| g.in_ring(&ring)).collect(),
            ring,
            status: BasisStatus::Raw,
        }
    }

    /// Moves the generators into `ring`, which has the same variables.
    pub fn in_ring(&self, ring: &RingRef) -> Ideal {
        if same_ring(&self.ring, ring) {
            return self.clone();
        }
        Ideal {
            generators: self.generators.iter().map(|g| g.in_ring(ring)).collect(),
            ring: ring.clone(),
            status: BasisStatus::Raw,
        }
    }

    /// Reduced Groebner basis for the ring's order, which must be global.
    pub fn groebner(&self) -> Result<Ideal> {
        let order = self.ring.order().clone();
        if !order.is_global() {
            return Err(Error::WrongOrder { expected: "global" });
        }
        if self.status == BasisStatus::Groebner(order.clone()) {
            return Ok(self.clone());
        }
        let gb = groebner::reduced_groebner_basis(&self.generators);
        Ok(Ideal { ring: self.ring.clone(), generators: gb, status: BasisStatus::Groebner(order) })
    }

    /// Reduced Groebner basis for degrevlex on the same variables.
    pub fn degrevlex_basis(&self) -> Ideal {
        self.with_order_if_needed(MonomialOrder::DegRevLex).groebner().expect("degrevlex is global")
    }

    fn with_order_if_needed(&self, order: MonomialOrder) -> Ideal {
        if *self.ring.order() == order {
            self.clone()
        } else {
            self.with_order(order)
        }
    }

    /// Standard basis in the localisation at the origin (Mora). The ring
    /// order must be local.
    pub fn standard_basis(&self) -> Result<Ideal> {
        let order = self.ring.order().clone();
        if !order.is_local() {
            return Err(Error::WrongOrder { expected: "local" });
        }
        if self.status == BasisStatus::Standard(order.clone()) {
            return Ok(self.clone());
        }
        let sb = standard::standard_basis(&self.generators);
        Ok(Ideal { ring: self.ring.clone(), generators: sb, status: BasisStatus::Standard(order) })
    }

    /// Standard basis under negdegrevlex on the same variables.
    pub fn local_basis(&self) -> Ideal {
        self.with_order_if_needed(MonomialOrder::NegDegRevLex).standard_basis().expect("negdegrevlex is local")
    }

    /// Normal form of `f` modulo this ideal, which must carry Groebner status.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !matches!(self.status, BasisStatus::Groebner(_)) {
            return Err(Error::NotGroebner);
        }
        let f = f.in_ring(&self.ring);
        Ok(reduce::reduce_full_exact(&f, &self.generators))
    }

    /// Membership via a Groebner basis for the ring's order (degrevlex if
    /// the order is not global).
    pub fn contains(&self, f: &Polynomial) -> bool {
        let gb = if self.ring.order().is_global() {
            self.groebner().expect("global")
        } else {
            self.degrevlex_basis()
        };
        gb.normal_form(f).expect("groebner").is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.degrevlex_basis();
        other.generators.iter().all(|g| gb.normal_form(g).unwrap().is_zero())
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        let gb = self.degrevlex_basis();
        gb.generators.len() == 1 && gb.generators[0].is_unit_constant()
    }

    /// The leading monomial ideal of the Groebner or standard basis.
    pub fn leading_ideal(&self) -> Result<Ideal> {
        if matches!(self.status, BasisStatus::Raw) {
            return Err(Error::NotGroebner);
        }
        let one = self.ring.field().one();
        let gens = self
            .generators
            .iter()
            .map(|g| Polynomial::monomial(&self.ring, one.clone(), g.leading_monomial().unwrap().clone()))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Largest generator degree.
    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
