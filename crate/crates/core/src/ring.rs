use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::scalar::CoefficientField;

/// Variables, coefficient field and active monomial order of a polynomial
/// ring. Rings are shared through [`RingRef`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
    t_variable: Option<usize>,
}

pub type RingRef = Arc<Ring>;

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], field: CoefficientField, order: MonomialOrder) -> Result<RingRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not an identifier")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("variable `{n}` repeated")));
            }
        }
        if let CoefficientField::Prime(p) = field {
            CoefficientField::prime(p)?;
        }
        if let MonomialOrder::Weighted(w) = &order {
            if w.len() != names.len() {
                return Err(Error::InvalidRing("weight vector length differs from variable count".into()));
            }
        }
        Ok(Arc::new(Ring { names, field, order, t_variable: None }))
    }

    /// Rational coefficients, degrevlex.
    pub fn rational<S: AsRef<str>>(names: &[S]) -> RingRef {
        Self::new(names, CoefficientField::Rationals, MonomialOrder::DegRevLex).expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn t_variable(&self) -> Option<usize> {
        self.t_variable
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        if let MonomialOrder::Weighted(w) = &order {
            assert_eq!(w.len(), self.nvars(), "weight vector length");
        }
        Arc::new(Ring { order, ..self.clone() })
    }

    /// Appends fresh variables. Names that collide get a numeric suffix.
    /// Weight vectors are padded with zeros.
    pub fn extend(&self, extra: &[&str]) -> RingRef {
        let mut names = self.names.clone();
        for e in extra {
            let mut name = e.to_string();
            let mut k = 0;
            while names.contains(&name) {
                k += 1;
                name = format!("{e}{k}");
            }
            names.push(name);
        }
        let order = match &self.order {
            MonomialOrder::Weighted(w) => {
                let mut w = w.to_vec();
                w.resize(names.len(), 0);
                MonomialOrder::weighted(w)
            }
            o => o.clone(),
        };
        Arc::new(Ring { names, field: self.field, order, t_variable: self.t_variable })
    }

    /// The ring with one extra variable designated as the deformation
    /// parameter `t`.
    pub fn with_t(&self) -> RingRef {
        let ext = self.extend(&["t"]);
        let mut r = (*ext).clone();
        r.t_variable = Some(r.nvars() - 1);
        Arc::new(r)
    }

    /// Drops the designated `t` (which must be the last variable).
    pub fn without_t(&self) -> Option<RingRef> {
        let t = self.t_variable?;
        debug_assert_eq!(t, self.nvars() - 1);
        let mut names = self.names.clone();
        names.pop();
        let order = match &self.order {
            MonomialOrder::Weighted(w) => MonomialOrder::weighted(w[..t].to_vec()),
            o => o.clone(),
        };
        Some(Arc::new(Ring { names, field: self.field, order, t_variable: None }))
    }

    /// Same variables and field, ignoring the order.
    pub fn same_variables(&self, other: &Ring) -> bool {
        self.names == other.names && self.field == other.field
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} [{}]", self.field, self.names.join(","))
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert!(Ring::new(&["x", "x"], CoefficientField::Rationals, MonomialOrder::Lex).is_err());
        assert!(Ring::new(&["x", "1y"], CoefficientField::Rationals, MonomialOrder::Lex).is_err());
        assert!(Ring::new(&["x"], CoefficientField::Prime(10), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn t_extension_round_trip() {
        let r = Ring::rational(&["x", "t"]);
        let e = r.with_t();
        assert_eq!(e.names(), &["x", "t", "t1"]);
        assert_eq!(e.t_variable(), Some(2));
        assert_eq!(*e.without_t().unwrap(), *r);
    }
}
