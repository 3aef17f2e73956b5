use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::basis::Ideal;
use crate::hilbert::HilbertData;
use crate::spectrum::{Connectedness, PrimeCertificate, RadicalCheck};

use super::{ComplexCheck, CorrectedAbhyankar, GotoNishida, Inequality, JacobianEvidence};

/// Everything computed for one member of the family.
#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub n: u32,
    pub ideal: Ideal,
    pub parametrization_vanishes: bool,
    pub tangent_cone: Ideal,
    pub radical: PrimeCertificate,
    pub radical_check: RadicalCheck,
    pub saturated_at_irrelevant: bool,
    pub hilbert: HilbertData,
    pub delta: BigInt,
    pub ell: usize,
    /// A, N, S.1, S.2, GN, the corrected bound and the `h2` bound, in that order.
    pub verdicts: Vec<Inequality>,
    pub corrected: CorrectedAbhyankar,
    /// Length of `k[x,y,z,w]/(x, y, zⁿ, wⁿ)`.
    pub n_squared: u64,
    pub goto_nishida: GotoNishida,
    pub resolution: ComplexCheck,
    pub jacobian: JacobianEvidence,
}

/// The non-reduced tangent cone example.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub ideal: Ideal,
    pub tangent_cone: Ideal,
    pub cone_matches: bool,
    pub ring: Connectedness,
    pub cone: Connectedness,
    pub sdim_ring: Option<usize>,
    pub sdim_cone: Option<usize>,
}

pub(crate) fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub(crate) fn inequality_json(i: &Inequality) -> Value {
    json!({
        "name": i.name,
        "lhs": i.lhs.to_string(),
        "relation": i.relation(),
        "rhs": i.rhs.to_string(),
        "holds": i.holds,
        "equality": i.is_equality(),
    })
}

pub(crate) fn hilbert_json(h: &HilbertData) -> Value {
    json!({
        "numerator": h.numerator_string(),
        "numerator_coefficients": ints(&h.numerator),
        "dim": h.dim,
        "e": ints(&h.e),
        "derivatives": ints(&h.derivatives),
        "hilbert_polynomial": h.hf_polynomial.to_string(),
        "hilbert_samuel_polynomial": h.hs_polynomial.to_string(),
    })
}

pub(crate) fn connectedness_json(c: &Connectedness) -> Value {
    json!({
        "s": c.s,
        "dim": c.d,
        "vertices": c.graph.vertices.iter().map(|p| p.ideal.to_string()).collect::<Vec<_>>(),
        "edges": c.graph.edges(),
        "connected": c.connected,
        "partition_check": c.partition_check,
        "analytically_irreducible": c.analytically_irreducible,
    })
}

impl ExampleReport {
    /// True when every structural check succeeded (the classical bounds
    /// are expected to fail and are not part of this).
    pub fn certified(&self) -> bool {
        self.parametrization_vanishes
            && self.radical_check.equal
            && self.resolution.ok
            && self.jacobian.minor_24_14_expected
            && self.jacobian.minor_13_34_expected
            && self.jacobian.z_in_radical
            && self.jacobian.w_in_radical
            && self.n_squared == u64::from(self.n * self.n)
    }

    pub fn verdict(&self, name: &str) -> Option<&Inequality> {
        self.verdicts.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> Value {
        let e = &self.hilbert.e;
        json!({
            "n": self.n,
            "ideal": self.ideal.to_string(),
            "parametrization_vanishes": self.parametrization_vanishes,
            "tangent_cone": self.tangent_cone.to_string(),
            "radical": {
                "ideal": self.radical.ideal.to_string(),
                "kind": self.radical.kind.name(),
                "equal": self.radical_check.equal,
            },
            "saturated_at_irrelevant": self.saturated_at_irrelevant,
            "hilbert": hilbert_json(&self.hilbert),
            "e0": e[0].to_string(),
            "e1": e[1].to_string(),
            "e2": e[2].to_string(),
            "e2_raw_derivative": self.hilbert.derivatives[2].to_string(),
            "delta": self.delta.to_string(),
            "ell": self.ell,
            "inequalities": self.verdicts.iter().map(inequality_json).collect::<Vec<_>>(),
            "corrected_strict": self.corrected.strict.as_ref().map(inequality_json),
            "s1_certified": self.corrected.s1_certified,
            "length_n_squared": self.n_squared.to_string(),
            "goto_nishida": {
                "lengths": self.goto_nishida.lengths.iter().map(|(j, l)| json!([j, l.to_string()])).collect::<Vec<_>>(),
                "slope": self.goto_nishida.a.to_string(),
                "intercept": self.goto_nishida.b.to_string(),
                "e1_of_q": self.goto_nishida.e1_of_q.to_string(),
            },
            "resolution": { "ok": self.resolution.ok, "witness": self.resolution.witness },
            "jacobian": {
                "minor_24_14": self.jacobian.minor_24_14.to_string(),
                "minor_13_34": self.jacobian.minor_13_34.to_string(),
                "z_in_radical": self.jacobian.z_in_radical,
                "w_in_radical": self.jacobian.w_in_radical,
            },
            "certified": self.certified(),
        })
    }
}

impl CounterexampleReport {
    /// The cone is connected in codimension 1 and the ring is not.
    pub fn exhibits_gap(&self) -> bool {
        self.cone_matches && self.cone.connected && !self.ring.connected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ideal": self.ideal.to_string(),
            "tangent_cone": self.tangent_cone.to_string(),
            "cone_matches": self.cone_matches,
            "ring": connectedness_json(&self.ring),
            "cone": connectedness_json(&self.cone),
            "sdim_ring": self.sdim_ring,
            "sdim_cone": self.sdim_cone,
            "exhibits_gap": self.exhibits_gap(),
        })
    }
}
