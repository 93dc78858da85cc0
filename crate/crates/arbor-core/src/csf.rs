//! The chromatic symmetric function X_T, held exactly in the power-sum
//! basis.
//!
//! X_G expands over edge subsets S as (-1)^|S| p_{lambda(S)}, where
//! lambda(S) is the multiset of connected-component sizes of (V, S). For a
//! tree the 2^(n-1) subsets make this the practical exact route; it is
//! validated against a direct proper-coloring oracle restricted to a few
//! variables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::tree::Tree;
use crate::CapExceeded;

/// Default vertex cap for the edge-subset expansion.
pub const DEFAULT_CSF_CAP: usize = 24;

/// Vertex cap for the coloring-wise oracle.
pub const ORACLE_CAP: usize = 9;

/// A homogeneous symmetric function of degree `n` in the power-sum basis.
///
/// Equality of values is equality of the underlying symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumFunction {
    n: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl PowerSumFunction {
    /// Homogeneous degree (the vertex count of the source graph).
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coefficient(&self, partition: &Partition) -> BigInt {
        self.coeffs.get(partition).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Expands to a polynomial in `num_vars` variables by distributing each
    /// power sum p_k over the variables. Zero coefficients are dropped.
    pub fn expand(&self, num_vars: usize) -> MonomialPoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (partition, coeff) in &self.coeffs {
            // p_lambda = prod_i (x_1^{l_i} + ... + x_m^{l_i}): walk every
            // assignment of parts to variables.
            let mut exps = alloc::vec![0u32; num_vars];
            distribute(partition.parts(), 0, &mut exps, coeff, &mut terms);
        }
        terms.retain(|_, c| !c.is_zero());
        MonomialPoly { num_vars, terms }
    }

    /// Canonical byte serialization in descending lexicographic order.
    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.n.to_be_bytes());
        out.extend_from_slice(&(self.coeffs.len() as u64).to_be_bytes());
        for (partition, coeff) in self.terms() {
            out.extend_from_slice(&(partition.len() as u64).to_be_bytes());
            for &part in partition.parts() {
                out.extend_from_slice(&part.to_be_bytes());
            }
            let (sign, mag) = (coeff.sign(), coeff.magnitude());
            out.push(match sign {
                num_bigint::Sign::Minus => b'-',
                _ => b'+',
            });
            let bytes = mag.to_bytes_be();
            out.extend_from_slice(&(bytes.len() as u64).to_be_bytes());
            out.extend_from_slice(&bytes);
        }
    }

    /// SHA-256 of the canonical serialization.
    pub fn fingerprint(&self) -> [u8; 32] {
        use sha2::{Digest, Sha256};
        let mut bytes = Vec::new();
        self.write_canonical(&mut bytes);
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        hasher.finalize().into()
    }
}

fn distribute(
    parts: &[u32],
    idx: usize,
    exps: &mut Vec<u32>,
    coeff: &BigInt,
    terms: &mut BTreeMap<Vec<u32>, BigInt>,
) {
    if idx == parts.len() {
        *terms.entry(exps.clone()).or_default() += coeff;
        return;
    }
    for var in 0..exps.len() {
        exps[var] += parts[idx];
        distribute(parts, idx + 1, exps, coeff, terms);
        exps[var] -= parts[idx];
    }
}

/// A polynomial in finitely many variables, keyed by exponent vector; the
/// truncation of a symmetric function to x_1..x_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialPoly {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }
}

/// X_T in the power-sum basis, by signed summation over the 2^(n-1) edge
/// subsets.
pub fn csf(t: &Tree, cap: usize) -> Result<PowerSumFunction, CapExceeded> {
    let n = t.n();
    if n > cap || n > 63 {
        return Err(CapExceeded {
            n,
            cap: cap.min(63),
        });
    }
    let edges: Vec<(u32, u32)> = t.edges().collect();
    let m = edges.len();
    let mut coeffs: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut uf = UnionFind::new(n);
    for mask in 0u64..(1 << m) {
        uf.reset();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                uf.union(u as usize, v as usize);
            }
        }
        let partition = uf.component_partition();
        let entry = coeffs.entry(partition).or_default();
        if mask.count_ones() % 2 == 0 {
            *entry += 1;
        } else {
            *entry -= 1;
        }
    }
    // Component count determines |S| for forests, so signs never cancel.
    debug_assert!(coeffs.values().all(|c| !c.is_zero()));
    Ok(PowerSumFunction { n: n as u32, coeffs })
}

/// The truncation of X_T to `num_vars` variables, by summing the monomial
/// of every proper coloring directly. Validation oracle only.
pub fn csf_oracle(t: &Tree, num_vars: usize) -> Result<MonomialPoly, CapExceeded> {
    let n = t.n();
    if n > ORACLE_CAP || num_vars > ORACLE_CAP {
        return Err(CapExceeded {
            n: n.max(num_vars),
            cap: ORACLE_CAP,
        });
    }
    let edges: Vec<(u32, u32)> = t.edges().collect();
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let mut coloring = alloc::vec![0usize; n];
    loop {
        let proper = edges
            .iter()
            .all(|&(u, v)| coloring[u as usize] != coloring[v as usize]);
        if proper {
            let mut exps = alloc::vec![0u32; num_vars];
            for &color in &coloring {
                exps[color] += 1;
            }
            *terms.entry(exps).or_default() += 1;
        }
        // Odometer over num_vars^n colorings.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(MonomialPoly { num_vars, terms });
            }
            coloring[pos] += 1;
            if coloring[pos] < num_vars {
                break;
            }
            coloring[pos] = 0;
            pos += 1;
        }
    }
}

/// Number of proper colorings with `m` colors: the specialization
/// x_1 = ... = x_m = 1, under which every p_k evaluates to m.
pub fn count_proper_colorings(f: &PowerSumFunction, m: u32) -> BigInt {
    let m = BigInt::from(m);
    let mut total = BigInt::zero();
    for (partition, coeff) in &f.coeffs {
        let mut power = BigInt::one();
        for _ in 0..partition.len() {
            power *= &m;
        }
        total += coeff * power;
    }
    total
}

/// SHA-256 fingerprint of a power-sum function; equal functions give equal
/// fingerprints, and collision scans confirm matches by full equality.
pub fn csf_fingerprint(f: &PowerSumFunction) -> [u8; 32] {
    f.fingerprint()
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: alloc::vec![1; n],
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.size.fill(1);
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            self.parent[x] = self.parent[self.parent[x] as usize];
            x = self.parent[x] as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
    }

    /// Partition of component sizes.
    fn component_partition(&mut self) -> Partition {
        let mut sizes = Vec::new();
        for v in 0..self.parent.len() {
            if self.find(v) == v {
                sizes.push(self.size[v]);
            }
        }
        Partition::new(sizes)
    }
}
