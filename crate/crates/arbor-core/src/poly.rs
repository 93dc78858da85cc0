//! The bivariate subtree polynomial S_T(q, r).
//!
//! Every subtree (connected induced subgraph with at least one edge)
//! contributes one term q^edges * r^leaves, where leaves are counted inside
//! the subtree. Two routes compute it: an exhaustive enumeration of
//! connected vertex subsets, capped for safety, and a per-vertex dynamic
//! program that scales to large trees. They must agree everywhere.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::tree::Tree;
use crate::CapExceeded;

/// Default vertex cap for the brute-force enumeration.
pub const DEFAULT_BRUTE_CAP: usize = 22;

/// Sparse polynomial in q (edge count) and r (leaf count) with
/// arbitrary-precision coefficients.
///
/// Terms are kept in lexicographic (q, r) order, which fixes the
/// serialization and the fingerprint.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(u32, u32), BigUint>,
}

impl BivariatePoly {
    pub fn new() -> BivariatePoly {
        BivariatePoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigUint)>) -> BivariatePoly {
        let mut p = BivariatePoly::new();
        for (q, r, c) in terms {
            p.add_term(q, r, c);
        }
        p
    }

    pub fn add_term(&mut self, q_exp: u32, r_exp: u32, coeff: BigUint) {
        if !coeff.is_zero() {
            *self.coeffs.entry((q_exp, r_exp)).or_default() += coeff;
        }
    }

    /// Stored coefficient of q^edges * r^leaves, or zero.
    pub fn coefficient(&self, edges: u32, leaves: u32) -> BigUint {
        self.coeffs.get(&(edges, leaves)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic (q, r) order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.coeffs.iter().map(|(&(q, r), c)| (q, r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest q exponent; `None` for the zero polynomial.
    pub fn max_q(&self) -> Option<u32> {
        self.coeffs.keys().next_back().map(|&(q, _)| q)
    }

    /// All terms with the given q exponent, as (r exponent, coefficient).
    pub fn terms_at_q(&self, q_exp: u32) -> impl Iterator<Item = (u32, &BigUint)> {
        self.coeffs
            .range((q_exp, 0)..(q_exp + 1, 0))
            .map(|(&(_, r), c)| (r, c))
    }

    /// Value at q = r = 1, i.e. the number of subtrees.
    pub fn total_subtrees(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Canonical byte serialization: term count then, per term in
    /// lexicographic order, exponents and the big-endian coefficient bytes,
    /// all length-prefixed.
    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.coeffs.len() as u64).to_be_bytes());
        for (q, r, c) in self.terms() {
            out.extend_from_slice(&q.to_be_bytes());
            out.extend_from_slice(&r.to_be_bytes());
            let bytes = c.to_bytes_be();
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

/// Exhaustive S_T: enumerates every connected vertex subset of size >= 2
/// exactly once, growing each subset from its minimum vertex.
pub fn subtree_poly_bruteforce(t: &Tree, cap: usize) -> Result<BivariatePoly, CapExceeded> {
    let n = t.n();
    if n > cap || n > 63 {
        return Err(CapExceeded {
            n,
            cap: cap.min(63),
        });
    }
    let adj: Vec<u64> = (0..n as u32)
        .map(|v| t.neighbors(v).iter().map(|&w| 1u64 << w).sum())
        .collect();
    let mut poly = BivariatePoly::new();
    let mut record = |subset: u64| {
        if subset.count_ones() < 2 {
            return;
        }
        let edges = subset.count_ones() - 1;
        let leaves = (0..n)
            .filter(|&v| subset & (1 << v) != 0 && (adj[v] & subset).count_ones() == 1)
            .count() as u32;
        poly.add_term(edges, leaves, BigUint::one());
    };
    for start in 0..n {
        let below = (1u64 << start) - 1;
        grow(
            &adj,
            1u64 << start,
            adj[start] & !below,
            below,
            &mut record,
        );
    }
    Ok(poly)
}

/// Connected-subset enumeration: each candidate in `ext` is either added to
/// the subset (recursing with the enlarged frontier) or moved to the
/// excluded set, so every connected superset is visited exactly once.
fn grow(adj: &[u64], subset: u64, ext: u64, excluded: u64, record: &mut impl FnMut(u64)) {
    record(subset);
    let mut ext = ext;
    let mut excluded = excluded;
    while ext != 0 {
        let v = ext.trailing_zeros() as usize;
        let bit = 1u64 << v;
        ext &= !bit;
        let new_subset = subset | bit;
        let new_ext = ext | (adj[v] & !new_subset & !excluded);
        grow(adj, new_subset, new_ext, excluded, record);
        excluded |= bit;
    }
}

/// Per-vertex state of the subtree DP: (edge count, leaves strictly below
/// the top vertex, number of chosen children capped at 2) -> count.
type DpState = BTreeMap<(u32, u32, u8), BigUint>;

/// S_T by dynamic programming; handles trees far beyond the brute-force cap.
///
/// The tree is rooted at vertex 0 and every subtree is counted at its
/// topmost vertex. A child's leaf status is resolved the moment the edge to
/// its parent is chosen: a child with no chosen children of its own becomes
/// a leaf, any other child stays interior. The top vertex itself is a leaf
/// exactly when it has one chosen child.
pub fn subtree_poly_fast(t: &Tree) -> BivariatePoly {
    let n = t.n();
    let mut poly = BivariatePoly::new();
    if n < 2 {
        return poly;
    }

    // Iterative DFS from 0: compute a post-order and parents.
    let mut parent = alloc::vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = alloc::vec![0u32];
    let mut seen = alloc::vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = v;
                stack.push(w);
            }
        }
    }

    let mut states: Vec<DpState> = alloc::vec![DpState::new(); n];
    for &v in order.iter().rev() {
        let mut state = DpState::new();
        state.insert((0, 0, 0), BigUint::one());
        for &c in t.neighbors(v) {
            if c == parent[v as usize] {
                continue;
            }
            let child = core::mem::take(&mut states[c as usize]);
            // Either leave the child branch out, or attach the edge v-c
            // combined with each way to continue below c.
            let mut merged = state.clone();
            for (&(e, l, k), cnt) in &state {
                for (&(ce, cl, ck), ccnt) in &child {
                    let new_e = e + ce + 1;
                    let new_l = l + cl + u32::from(ck == 0);
                    let new_k = (k + 1).min(2);
                    *merged.entry((new_e, new_l, new_k)).or_default() += cnt * ccnt;
                }
            }
            state = merged;
        }
        // Harvest subtrees whose topmost vertex is v.
        for (&(e, l, k), cnt) in &state {
            if e >= 1 {
                let leaves = l + u32::from(k == 1);
                poly.add_term(e, leaves, cnt.clone());
            }
        }
        states[v as usize] = state;
    }
    poly
}
