//! Independent oracles for the integration tests: modular linear algebra
//! on explicit monomial bases, brute-force monomial counts and seeded
//! random inputs.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tangent_cone::monomial::Monomial;
use tangent_cone::{Polynomial, RingRef, Scalar};

/// Large prime for the rank oracle. Ranks mod p never exceed rational ranks.
pub const P: u64 = 2_305_843_009_213_693_951;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn bigint_mod(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

/// A rational coefficient reduced mod P.
pub fn scalar_mod(c: &Scalar) -> u64 {
    let q = c.as_rational().expect("rational coefficients");
    mulmod(bigint_mod(q.numer()), invmod(bigint_mod(q.denom())))
}

/// Incremental row echelon form over F_P with sparse rows.
#[derive(Default)]
pub struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, u64>>,
}

impl Echelon {
    fn reduce(&self, mut row: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
        let mut from = 0;
        loop {
            let Some((&c, &v)) = row.range(from..).next() else { return row };
            if let Some(p) = self.pivots.get(&c) {
                // pivot rows are normalized to 1 at their pivot column
                for (&k, &pv) in p {
                    let cur = row.get(&k).copied().unwrap_or(0);
                    let next = (cur + P - mulmod(v, pv)) % P;
                    if next == 0 {
                        row.remove(&k);
                    } else {
                        row.insert(k, next);
                    }
                }
            } else {
                from = c + 1;
            }
        }
    }

    /// Adds a row; returns whether it was independent.
    pub fn insert(&mut self, row: BTreeMap<usize, u64>) -> bool {
        let row = self.reduce(row);
        let Some((&c, &v)) = row.iter().next() else { return false };
        let inv = invmod(v);
        let row = row.into_iter().map(|(k, x)| (k, mulmod(x, inv))).collect();
        self.pivots.insert(c, row);
        true
    }

    pub fn contains(&self, row: BTreeMap<usize, u64>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Column index for each monomial of degree at most `d`.
pub fn column_index(n: usize, d: u32) -> HashMap<Vec<u32>, usize> {
    monomials_up_to(n, d).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// The terms of `m * f` of degree at most `d`, as a sparse row.
fn truncated_row(f: &Polynomial, shift: &[u32], d: u32, cols: &HashMap<Vec<u32>, usize>) -> BTreeMap<usize, u64> {
    let mut row = BTreeMap::new();
    for (c, m) in f.terms() {
        let e: Vec<u32> = m.exponents().iter().zip(shift).map(|(a, b)| a + b).collect();
        if e.iter().sum::<u32>() <= d {
            let v = scalar_mod(c);
            if v != 0 {
                row.insert(cols[&e], v);
            }
        }
    }
    row
}

/// Echelon form of `I + m^(d+1)` inside `k[x]/m^(d+1)`.
pub fn truncated_ideal(gens: &[Polynomial], n: usize, d: u32) -> (Echelon, HashMap<Vec<u32>, usize>) {
    let cols = column_index(n, d);
    let mut ech = Echelon::default();
    for g in gens {
        let Some(low) = g.terms().iter().map(|(_, m)| m.degree()).min() else { continue };
        if low > d {
            continue;
        }
        for shift in monomials_up_to(n, d - low) {
            ech.insert(truncated_row(g, &shift, d, &cols));
        }
    }
    (ech, cols)
}

/// `length k[x]/(I + m^(j+1))`, the Hilbert-Samuel function of the local
/// ring at the origin, by rank counting.
pub fn hilbert_samuel_oracle(gens: &[Polynomial], n: usize, j: u32) -> u64 {
    let (ech, _) = truncated_ideal(gens, n, j);
    binomial(n as u64 + j as u64, n as u64) - ech.rank() as u64
}

/// `f ∈ I + m^(d+1)`, by linear algebra.
pub fn truncated_member(f: &Polynomial, gens: &[Polynomial], n: usize, d: u32) -> bool {
    let (ech, cols) = truncated_ideal(gens, n, d);
    ech.contains(truncated_row(f, &vec![0; n], d, &cols))
}

/// `dim_k (I)_d` for homogeneous generators.
pub fn graded_piece_dim(gens: &[Polynomial], n: usize, d: u32) -> usize {
    let cols: HashMap<Vec<u32>, usize> = monomials_of_degree(n, d).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::default();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd > d {
            continue;
        }
        for shift in monomials_of_degree(n, d - gd) {
            let mut row = BTreeMap::new();
            for (c, m) in g.terms() {
                let e: Vec<u32> = m.exponents().iter().zip(&shift).map(|(a, b)| a + b).collect();
                row.insert(cols[&e], scalar_mod(c));
            }
            ech.insert(row);
        }
    }
    ech.rank()
}

/// Monomials of degree `d` divisible by no generator.
pub fn standard_monomial_count(gens: &[Vec<u32>], n: usize, d: u32) -> u64 {
    monomials_of_degree(n, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.iter().zip(m.iter()).all(|(a, b)| a <= b)))
        .count() as u64
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, min_deg: u32, max_deg: u32) -> Monomial {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_slice(&e)
}

/// A polynomial with up to `terms` terms of degree in `[min_deg, max_deg]`
/// and small integer coefficients; never zero.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, terms: usize, min_deg: u32, max_deg: u32) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=terms);
        let ts = (0..k)
            .map(|_| {
                let c = rng.gen_range(-4i64..=4);
                (ring.field().from_i64(c), random_monomial(rng, ring.nvars(), min_deg, max_deg))
            })
            .collect();
        let f = Polynomial::from_terms(ring, ts);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A homogeneous polynomial of degree `d`.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &RingRef, terms: usize, d: u32) -> Polynomial {
    random_poly(rng, ring, terms, d, d)
}

/// Exponent vectors of a random monomial ideal.
pub fn random_monomial_gens(rng: &mut ChaCha8Rng, n: usize, count: usize, max_deg: u32) -> Vec<Vec<u32>> {
    (0..count).map(|_| random_monomial(rng, n, 1, max_deg).exponents().to_vec()).collect()
}

pub fn monomial_poly(ring: &RingRef, e: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, ring.field().one(), Monomial::from_slice(e))
}

pub fn is_positive(x: &BigInt) -> bool {
    x.is_positive()
}

/// Minimal vertex covers of the supports of `gens`, as bitmasks: the
/// variable sets of the minimal primes of a monomial ideal.
pub fn minimal_vertex_covers(gens: &[Vec<u32>], n: usize) -> Vec<u32> {
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|s| gens.iter().all(|e| e.iter().enumerate().any(|(v, &x)| x > 0 && s & (1 << v) != 0)))
        .collect();
    let mut minimal: Vec<u32> =
        covers.iter().copied().filter(|&s| !covers.iter().any(|&t| t != s && t & s == t)).collect();
    minimal.sort_unstable();
    minimal
}

/// Monomials with every exponent at most `bound` and divisible by no
/// generator: the length of an Artinian monomial quotient when `bound` is
/// large enough.
pub fn box_count(gens: &[Vec<u32>], n: usize, bound: u32) -> u64 {
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        while i < n && e[i] == bound {
            e[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        e[i] += 1;
    }
}

/// `dim k[x]/(p + q)` for variable-generated primes given as bitmasks.
fn pair_dim(n: usize, p: u32, q: u32) -> usize {
    n - (p | q).count_ones() as usize
}

/// Connectivity of the graph with an edge when `dim(p + q) ≥ d - s`.
pub fn graph_connected(primes: &[u32], n: usize, s: usize) -> bool {
    let Some(d) = primes.iter().map(|p| n - p.count_ones() as usize).max() else { return false };
    let mut seen = vec![false; primes.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..primes.len() {
            if !seen[j] && pair_dim(n, primes[i], primes[j]) + s >= d {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Every bipartition `(U, V)` meets in dimension at least `d - s`, where
/// `V(∩U + ∩V)` is the union of the `V(p + q)`.
pub fn partitions_connected(primes: &[u32], n: usize, s: usize) -> bool {
    let Some(d) = primes.iter().map(|p| n - p.count_ones() as usize).max() else { return false };
    let k = primes.len();
    (1usize..(1 << k) - 1).filter(|u| u & 1 == 1).all(|u| {
        let meet = (0..k)
            .filter(|i| u & (1 << i) != 0)
            .flat_map(|i| (0..k).filter(move |j| u & (1 << j) == 0).map(move |j| (i, j)))
            .map(|(i, j)| pair_dim(n, primes[i], primes[j]))
            .max()
            .unwrap();
        meet + s >= d
    })
}
