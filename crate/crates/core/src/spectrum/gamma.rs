use crate::basis::{ideal_intersect, ideal_sum, Ideal};
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::poly::Polynomial;

use super::primes::{ass_primes_monomial, min_primes_general, PrimeCertificate};
use super::local_dimension;

/// `Γ_s`: minimal primes joined when `dim A/(p+q) ≥ d - s`.
#[derive(Debug, Clone)]
pub struct GammaGraph {
    pub s: usize,
    pub d: usize,
    pub vertices: Vec<PrimeCertificate>,
    pub adjacency: Vec<Vec<bool>>,
    /// `dim A/(p+q)`, `None` for the empty scheme. The diagonal holds `dim A/p`.
    pub pair_dims: Vec<Vec<Option<usize>>>,
}

fn edge(pair_dim: Option<usize>, d: usize, s: usize) -> bool {
    pair_dim.is_some_and(|e| e + s >= d)
}

/// Dimension of the sum of two primes, locally at the origin.
fn pair_dimension(p: &PrimeCertificate, q: &PrimeCertificate) -> Result<Option<usize>> {
    if let (Some(a), Some(b)) = (p.variables(), q.variables()) {
        let mut all = a;
        all.extend(b);
        all.sort_unstable();
        all.dedup();
        return Ok(Some(p.ideal.ring().nvars() - all.len()));
    }
    local_dimension(&ideal_sum(&p.ideal, &q.ideal)?)
}

pub fn gamma_graph(primes: &[PrimeCertificate], d: usize, s: usize) -> Result<GammaGraph> {
    let k = primes.len();
    let mut pair_dims = vec![vec![None; k]; k];
    for i in 0..k {
        pair_dims[i][i] = Some(primes[i].dim);
        for j in i + 1..k {
            let e = pair_dimension(&primes[i], &primes[j])?;
            pair_dims[i][j] = e;
            pair_dims[j][i] = e;
        }
    }
    Ok(GammaGraph::from_pair_dims(primes.to_vec(), pair_dims, d, s))
}

impl GammaGraph {
    pub fn from_pair_dims(vertices: Vec<PrimeCertificate>, pair_dims: Vec<Vec<Option<usize>>>, d: usize, s: usize) -> Self {
        let k = vertices.len();
        let adjacency = (0..k)
            .map(|i| (0..k).map(|j| i != j && edge(pair_dims[i][j], d, s)).collect())
            .collect();
        GammaGraph { s, d, vertices, adjacency, pair_dims }
    }

    /// The same vertices and pair dimensions at another `s`.
    pub fn at(&self, s: usize) -> GammaGraph {
        Self::from_pair_dims(self.vertices.clone(), self.pair_dims.clone(), self.d, s)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().flatten().filter(|&&e| e).count() / 2
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.vertices.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for w in (0..k).filter(|&w| self.adjacency[v][w]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Edges of `self` are edges of `other`.
    pub fn is_subgraph_of(&self, other: &GammaGraph) -> bool {
        self.adjacency.iter().flatten().zip(other.adjacency.iter().flatten()).all(|(a, b)| !a || *b)
    }
}

/// Largest number of minimal primes for which every bipartition is checked.
pub const PARTITION_CHECK_LIMIT: usize = 12;

/// Verdict on connectedness in codimension `s`.
#[derive(Debug, Clone)]
pub struct Connectedness {
    pub s: usize,
    /// `dim A`, `None` for the empty scheme.
    pub d: Option<usize>,
    pub graph: GammaGraph,
    pub connected: bool,
    /// Verdict from all bipartitions `(U, V)`, when there are few enough primes.
    pub partition_check: Option<bool>,
    /// False when some component's primality was taken on trust, in which
    /// case analytic irreducibility is assumed rather than known.
    pub analytically_irreducible: bool,
}

pub fn connected_in_codim(ideal: &Ideal, s: usize) -> Result<Connectedness> {
    let primes = min_primes_general(ideal)?;
    connectedness_of_primes(&primes, s)
}

pub fn connectedness_of_primes(primes: &[PrimeCertificate], s: usize) -> Result<Connectedness> {
    let d = primes.iter().map(|p| p.dim).max();
    let graph = gamma_graph(primes, d.unwrap_or(0), s)?;
    let connected = d.is_some() && graph.is_connected();
    let partition_check = if primes.len() <= PARTITION_CHECK_LIMIT {
        Some(d.is_some() && partitions_connected(primes, d.unwrap(), s)?)
    } else {
        None
    };
    if partition_check.is_some_and(|p| p != connected) {
        return Err(Error::CertificateFailed {
            identity: "graph connectivity = partition criterion".into(),
            detail: format!("graph says {connected}, partitions say {}", !connected),
        });
    }
    Ok(Connectedness {
        s,
        d,
        graph,
        connected,
        partition_check,
        analytically_irreducible: primes.iter().all(|p| p.analytically_irreducible()),
    })
}

/// Every bipartition `(U, V)` has `dim A/(∩U + ∩V) ≥ d - s`.
fn partitions_connected(primes: &[PrimeCertificate], d: usize, s: usize) -> Result<bool> {
    let k = primes.len();
    if k <= 1 {
        return Ok(true);
    }
    if primes.iter().all(|p| p.is_monomial()) {
        let n = primes[0].ideal.ring().nvars();
        let mono: Vec<MonomialIdeal> =
            primes.iter().map(|p| MonomialIdeal::from_variables(n, &p.variables().unwrap())).collect();
        let meets = subset_meets(k, |a: &MonomialIdeal, i| a.intersect(&mono[i]), MonomialIdeal::new(n, vec![crate::monomial::Monomial::one(n)]));
        let full = (1usize << k) - 1;
        return Ok((1..full).filter(|u| u & 1 == 1).all(|u| edge(meets[u].sum(&meets[full ^ u]).dimension(), d, s)));
    }
    let ring = primes[0].ideal.ring().clone();
    let mut meets: Vec<Ideal> = vec![Ideal::unit(&ring); 1 << k];
    for u in 1usize..1 << k {
        let i = u.trailing_zeros() as usize;
        meets[u] = ideal_intersect(&meets[u & (u - 1)], &primes[i].ideal)?;
    }
    let full = (1usize << k) - 1;
    for u in (1..full).filter(|u| u & 1 == 1) {
        let sum = ideal_sum(&meets[u], &meets[full ^ u])?;
        if !edge(local_dimension(&sum)?, d, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subset_meets<T: Clone>(k: usize, meet: impl Fn(&T, usize) -> T, top: T) -> Vec<T> {
    let mut out = vec![top; 1 << k];
    for u in 1usize..1 << k {
        let i = u.trailing_zeros() as usize;
        out[u] = meet(&out[u & (u - 1)], i);
    }
    out
}

/// `min dim A/p` over minimal primes; `None` for the empty scheme.
pub fn sdim(ideal: &Ideal) -> Result<Option<usize>> {
    Ok(min_primes_general(ideal)?.iter().map(|p| p.dim).min())
}

/// `min dim A/p` over associated primes of a monomial ideal.
pub fn a_sdim(ideal: &Ideal) -> Result<Option<usize>> {
    Ok(ass_primes_monomial(ideal)?.iter().map(|p| p.dim).min())
}

/// Outcome of a conditional check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not applicable",
        }
    }
}

/// Behaviour of `sdim` and `Γ_s` under passing from `A` to `A/(x)`.
#[derive(Debug, Clone)]
pub struct SliceReport {
    pub s: usize,
    pub sdim_before: Option<usize>,
    pub sdim_after: Option<usize>,
    /// `sdim(A/(x)) ≥ sdim(A) - 1`.
    pub sdim_drop: Verdict,
    pub connected_before: bool,
    pub connected_after: bool,
    /// Connected in codimension `s` passes from `A` to `A/(x)`.
    pub connectivity_preserved: Verdict,
    /// `I + (x)` has a squarefree degrevlex leading ideal.
    pub radical_certified: bool,
    /// `A/(x)` connected implies `A` connected (needs the radical certificate).
    pub converse: Verdict,
    pub components_before: usize,
    pub components_after: usize,
    /// Equal component counts of `Γ_s` (needs the radical certificate).
    pub component_count: Verdict,
}

impl SliceReport {
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.sdim_drop == Verdict::Violated {
            v.push("sdim drop");
        }
        if self.connectivity_preserved == Verdict::Violated {
            v.push("connectivity");
        }
        if self.converse == Verdict::Violated {
            v.push("converse");
        }
        if self.component_count == Verdict::Violated {
            v.push("component count");
        }
        v
    }
}

pub fn slice_check(ideal: &Ideal, x: &Polynomial, s: usize) -> Result<SliceReport> {
    if s == 0 {
        return Err(Error::Precondition("slicing needs s > 0".into()));
    }
    if !x.constant_term().is_zero() {
        return Err(Error::Precondition(format!("{x} is not in the maximal ideal")));
    }
    let before = min_primes_general(ideal)?;
    for p in &before {
        if p.ideal.contains(x) {
            return Err(Error::Precondition(format!("{x} lies in the minimal prime {}", p.ideal)));
        }
    }
    let sliced = ideal_sum(ideal, &Ideal::new(ideal.ring(), vec![x.clone()])?)?;
    let after = min_primes_general(&sliced)?;
    let sdim_before = before.iter().map(|p| p.dim).min();
    let sdim_after = after.iter().map(|p| p.dim).min();
    let sdim_drop = match (sdim_before, sdim_after) {
        (Some(b), Some(a)) => Verdict::from_bool(a + 1 >= b),
        (Some(_), None) => Verdict::Violated,
        _ => Verdict::NotApplicable,
    };
    let cb = connectedness_of_primes(&before, s)?;
    let ca = connectedness_of_primes(&after, s)?;
    let connectivity_preserved = if cb.connected { Verdict::from_bool(ca.connected) } else { Verdict::NotApplicable };
    let lead = MonomialIdeal::from_ideal(&sliced.degrevlex_basis().leading_ideal()?)?;
    let radical_certified = lead.is_squarefree();
    let components_before = cb.graph.components().len();
    let components_after = ca.graph.components().len();
    let (converse, component_count) = if radical_certified {
        (
            if ca.connected { Verdict::from_bool(cb.connected) } else { Verdict::NotApplicable },
            Verdict::from_bool(components_before == components_after),
        )
    } else {
        (Verdict::NotApplicable, Verdict::NotApplicable)
    };
    Ok(SliceReport {
        s,
        sdim_before,
        sdim_after,
        sdim_drop,
        connected_before: cb.connected,
        connected_after: ca.connected,
        connectivity_preserved,
        radical_certified,
        converse,
        components_before,
        components_after,
        component_count,
    })
}
