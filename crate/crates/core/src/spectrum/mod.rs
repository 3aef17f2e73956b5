//! Minimal and associated primes, dimensions, the graphs `Γ_s` and
//! connectedness in codimension `s`.

mod gamma;
mod primes;

use crate::basis::Ideal;
use crate::deform::tangent_cone;
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;

pub use gamma::{
    a_sdim, connected_in_codim, connectedness_of_primes, gamma_graph, sdim, slice_check, Connectedness, GammaGraph,
    SliceReport, Verdict, PARTITION_CHECK_LIMIT,
};
pub use primes::{
    a_greater_than, ass_primes_monomial, min_primes_general, min_primes_monomial, radical_equals_candidate,
    PrimeCertificate, PrimeKind, RadicalCheck,
};

/// Krull dimension of `k[x]/I` from the degrevlex leading ideal; `None`
/// for the unit ideal.
pub fn dimension(ideal: &Ideal) -> Result<Option<usize>> {
    let lead = ideal.degrevlex_basis().leading_ideal()?;
    Ok(MonomialIdeal::from_ideal(&lead)?.dimension())
}

/// Dimension of the localisation at the origin, read off the tangent
/// cone; `None` when the ideal is locally the unit ideal.
pub fn local_dimension(ideal: &Ideal) -> Result<Option<usize>> {
    if ideal.is_monomial() {
        return Ok(MonomialIdeal::from_ideal(ideal)?.dimension());
    }
    let cone = match tangent_cone(ideal) {
        Ok(c) => c,
        Err(Error::UnitIdeal) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(MonomialIdeal::from_ideal(&cone.leading_ideal()?)?.dimension())
}
