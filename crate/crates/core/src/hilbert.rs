//! Hilbert series of graded quotients, Hilbert coefficients, Hilbert
//! polynomials and Hilbert-Samuel lengths of local rings.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::basis::Ideal;
use crate::deform::tangent_cone;
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A univariate polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly(pub Vec<BigRational>);

impl QPoly {
    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn add_scaled(&mut self, other: &QPoly, c: &BigRational) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * c;
        }
        *self = Self::trimmed(std::mem::take(&mut self.0));
    }

    /// `binom(j + a, b)` as a polynomial in `j`.
    fn binomial_shifted(a: i64, b: usize) -> QPoly {
        let mut acc = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for m in 0..b {
            // multiply by (j + a - m)
            let c = BigRational::from_integer((a - m as i64).into());
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, x) in acc.iter().enumerate() {
                next[k + 1] += x;
                next[k] += x * &c;
            }
            acc = next;
            denom *= BigInt::from(m + 1);
        }
        let d = BigRational::from_integer(denom);
        QPoly::trimmed(acc.into_iter().map(|x| x / &d).collect())
    }

    /// Prints with the given variable name, highest degree first.
    pub fn display(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("j"))
    }
}

/// Prints an integer polynomial in `t`, lowest degree first (`1 + 2*t - t^2`).
pub fn format_numerator(h: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The Hilbert series `h(t)/(1-t)^d` of a standard graded quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// `K(t)` with series `K(t)/(1-t)^nvars`.
    pub raw_numerator: Vec<BigInt>,
    /// `h(t)` with `h(1) != 0`; empty for the zero ring.
    pub numerator: Vec<BigInt>,
    /// Krull dimension; `None` for the zero ring.
    pub dim: Option<usize>,
    /// `e_i = h^(i)(1) / i!` for `i = 0..=d`.
    pub e: Vec<BigInt>,
    /// `h^(i)(1)` without the factorial.
    pub derivatives: Vec<BigInt>,
    /// Hilbert polynomial of the Hilbert function (degree `d - 1`).
    pub hf_polynomial: QPoly,
    /// Hilbert-Samuel polynomial `Σ_{i≤j} HF(i)` (degree `d`).
    pub hs_polynomial: QPoly,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

/// `1 - t^d`.
fn one_minus_power(d: u32) -> Vec<BigInt> {
    if d == 0 {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = BigInt::one();
    v[d as usize] = -BigInt::one();
    v
}

/// `K(t)` of `k[x]/I` by the pivot recursion `K(I) = K(I + (x)) + t K(I : x)`.
struct Numerators {
    memo: HashMap<MonomialIdeal, Vec<BigInt>>,
}

impl Numerators {
    fn compute(&mut self, ideal: &MonomialIdeal) -> Vec<BigInt> {
        if let Some(k) = self.memo.get(ideal) {
            return k.clone();
        }
        let gens = ideal.generators();
        let n = ideal.nvars();
        let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        let result = if pairwise_coprime {
            gens.iter().fold(vec![BigInt::one()], |acc, g| poly_mul(&acc, &one_minus_power(g.degree())))
        } else {
            // the variable shared by the most non-linear generators
            let mut counts = vec![0usize; n];
            for g in gens.iter().filter(|g| g.degree() > 1) {
                for v in g.support() {
                    counts[v] += 1;
                }
            }
            let pivot = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
            let x = Monomial::var(n, pivot);
            let plus = ideal.sum(&MonomialIdeal::new(n, vec![x.clone()]));
            let colon = ideal.colon(&x);
            let a = self.compute(&plus);
            let b = self.compute(&colon);
            let mut shifted = vec![BigInt::zero()];
            shifted.extend(b);
            poly_add(&a, &trim(shifted))
        };
        self.memo.insert(ideal.clone(), result.clone());
        result
    }
}

fn binomial(n: i64, k: usize) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        if n - i < 0 {
            return BigInt::zero();
        }
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `e_i = h^(i)(1)/i!` for `i = 0..=d`.
pub fn hilbert_coefficients(h: &[BigInt], d: usize) -> Vec<BigInt> {
    (0..=d).map(|i| h.iter().enumerate().map(|(k, c)| c * binomial(k as i64, i)).sum()).collect()
}

/// `h^(i)(1)` for `i = 0..=d`.
pub fn numerator_derivatives(h: &[BigInt], d: usize) -> Vec<BigInt> {
    hilbert_coefficients(h, d).into_iter().enumerate().map(|(i, e)| e * factorial(i)).collect()
}

/// `Σ_i (-1)^i e_i binom(j + d - i, d - i)`, a polynomial of degree `d` in `j`.
pub fn hilbert_polynomial(e: &[BigInt], d: usize) -> QPoly {
    let mut acc = QPoly(Vec::new());
    for (i, ei) in e.iter().enumerate().take(d + 1) {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let c = BigRational::from_integer(sign * ei);
        acc.add_scaled(&QPoly::binomial_shifted((d - i) as i64, d - i), &c);
    }
    acc
}

impl HilbertData {
    fn from_raw(nvars: usize, raw: Vec<BigInt>) -> HilbertData {
        if raw.is_empty() {
            return HilbertData {
                nvars,
                raw_numerator: raw,
                numerator: Vec::new(),
                dim: None,
                e: Vec::new(),
                derivatives: Vec::new(),
                hf_polynomial: QPoly(Vec::new()),
                hs_polynomial: QPoly(Vec::new()),
            };
        }
        let mut h = raw.clone();
        let mut d = nvars;
        // divide by (1 - t) while h(1) = 0
        while h.iter().sum::<BigInt>().is_zero() {
            let mut q = vec![BigInt::zero(); h.len() - 1];
            let mut acc = BigInt::zero();
            for k in 0..h.len() - 1 {
                acc += &h[k];
                q[k] = acc.clone();
            }
            h = trim(q);
            d -= 1;
        }
        let e = hilbert_coefficients(&h, d);
        let derivatives = numerator_derivatives(&h, d);
        let mut hf = QPoly(Vec::new());
        let mut hs = QPoly(Vec::new());
        for (k, c) in h.iter().enumerate() {
            let c = BigRational::from_integer(c.clone());
            if d > 0 {
                hf.add_scaled(&QPoly::binomial_shifted(d as i64 - 1 - k as i64, d - 1), &c);
            }
            hs.add_scaled(&QPoly::binomial_shifted(d as i64 - k as i64, d), &c);
        }
        HilbertData {
            nvars,
            raw_numerator: raw,
            numerator: h,
            dim: Some(d),
            e,
            derivatives,
            hf_polynomial: hf,
            hs_polynomial: hs,
        }
    }

    /// `HF(j)`, the coefficient of `t^j` in the series.
    pub fn hilbert_function(&self, j: usize) -> BigInt {
        let Some(d) = self.dim else { return BigInt::zero() };
        if d == 0 {
            return self.numerator.get(j).cloned().unwrap_or_default();
        }
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| *k <= j)
            .map(|(k, c)| c * binomial((j - k + d - 1) as i64, d - 1))
            .sum()
    }

    /// `Σ_{i≤j} HF(i)`.
    pub fn hilbert_samuel(&self, j: usize) -> BigInt {
        (0..=j).map(|i| self.hilbert_function(i)).sum()
    }

    pub fn multiplicity(&self) -> Option<&BigInt> {
        self.e.first()
    }

    pub fn numerator_string(&self) -> String {
        format_numerator(&self.numerator)
    }
}

/// Hilbert series of `k[x]/I` for a monomial ideal.
pub fn hilbert_series_monomial(ideal: &Ideal) -> Result<HilbertData> {
    let mi = MonomialIdeal::from_ideal(ideal)?;
    Ok(hilbert_series_of(&mi))
}

pub fn hilbert_series_of(mi: &MonomialIdeal) -> HilbertData {
    let mut num = Numerators { memo: HashMap::new() };
    let raw = num.compute(mi);
    HilbertData::from_raw(mi.nvars(), raw)
}

/// Hilbert series of `k[x]/I` for a homogeneous ideal, through its
/// degrevlex leading ideal.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertData> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    hilbert_series_monomial(&ideal.degrevlex_basis().leading_ideal()?)
}

/// Hilbert series of the associated graded ring `k[x]/in(I)`.
pub fn local_hilbert_series(ideal: &Ideal) -> Result<HilbertData> {
    match tangent_cone(ideal) {
        Ok(cone) => hilbert_series(&cone),
        Err(Error::UnitIdeal) => Ok(HilbertData::from_raw(ideal.ring().nvars(), Vec::new())),
        Err(e) => Err(e),
    }
}

/// `Σ_{i≤j} HF(i)` of the local ring, by counting standard monomials of
/// the leading ideal of the tangent cone.
pub fn hilbert_samuel(ideal: &Ideal, j: u32) -> Result<BigInt> {
    let lead = match tangent_cone(ideal) {
        Ok(cone) => MonomialIdeal::from_ideal(&cone.leading_ideal()?)?,
        Err(Error::UnitIdeal) => return Ok(BigInt::zero()),
        Err(e) => return Err(e),
    };
    Ok((0..=j).map(|i| BigInt::from(lead.standard_monomials_in_degree(i))).sum())
}

/// `dim_k k[x]/I` for a zero-dimensional ideal: the number of standard
/// monomials of its degrevlex leading ideal.
pub fn artinian_length(ideal: &Ideal) -> Result<u64> {
    let lead = MonomialIdeal::from_ideal(&ideal.degrevlex_basis().leading_ideal()?)?;
    if lead.dimension() != Some(0) {
        return Err(if lead.is_unit() { Error::UnitIdeal } else { Error::NotArtinian });
    }
    let mut total = 0u64;
    let mut d = 0;
    loop {
        let c = lead.standard_monomials_in_degree(d);
        if c == 0 {
            return Ok(total);
        }
        total += c;
        d += 1;
    }
}

/// `δ = HF(1) - d`.
pub fn embedding_codim(hd: &HilbertData) -> Option<i64> {
    let d = hd.dim?;
    (hd.hilbert_function(1) - BigInt::from(d)).to_i64()
}
