//! Recovering the trunk size and twig-length multiset of a tree from its
//! subtree polynomial alone.
//!
//! The r-degree row r^a (a = leaf count) of the polynomial is the lever:
//! every subtree with all a leaves contains the trunk plus an initial
//! segment of each twig, so the counts along that row are bounded
//! composition counts in the twig lengths and can be peeled shortest twig
//! first.

use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::compositions::count_bounded_compositions;
use crate::decompose::{decompose, DecomposeError};
use crate::poly::BivariatePoly;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    /// At least one vertex of degree three or more; nonempty trunk.
    Standard,
    /// A path: empty trunk, two coincident full-length twigs.
    Path,
}

/// The shape data recoverable from a subtree polynomial: how many vertices
/// the trunk has and the multiset of twig lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredProfile {
    pub kind: ProfileKind,
    /// Vertex count of the tree.
    pub n: usize,
    /// Leaf count; equals the number of twigs for standard trees.
    pub leaves: u32,
    /// Trunk vertex count; zero exactly for paths.
    pub trunk_size: u32,
    /// Twig lengths in edges, ascending.
    pub twig_lengths: Vec<u32>,
}

impl RecoveredProfile {
    /// The degenerate profile of the n-vertex path: each of the two leaves
    /// owns the whole path as its twig.
    pub fn path(n: usize) -> RecoveredProfile {
        RecoveredProfile {
            kind: ProfileKind::Path,
            n,
            leaves: 2,
            trunk_size: 0,
            twig_lengths: alloc::vec![n as u32 - 1; 2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecoveryError {
    /// No terms at all; the one-vertex tree and malformed input land here.
    Empty,
    /// The maximal q-degree is shared by several terms; a subtree
    /// polynomial has exactly one, contributed by the whole tree.
    AmbiguousTop { terms: usize },
    /// The whole-tree term must have coefficient one.
    TopCoefficientNotOne,
    /// Fewer than two leaves claimed by the top term.
    LeafCountOutOfRange { leaves: u32 },
    /// No term in the full-leaf row at all.
    LeafRowMissing { leaves: u32 },
    /// The minimal full-leaf subtree would have no room for a trunk.
    LeafExcess { vertices: usize, leaves: u32 },
    /// The minimal full-leaf subtree must be unique.
    SeedCoefficientNotOne { vertices: usize },
    /// A row count fell outside what any twig multiset could produce.
    TailOutOfRange { step: u32 },
    /// Twig counts failed to close after n rounds.
    Unresolved,
    /// Recovered trunk and twigs do not add up to the vertex count.
    SizeMismatch { expected: usize, recovered: usize },
}

impl fmt::Display for RecoveryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecoveryError::Empty => write!(f, "polynomial has no terms"),
            RecoveryError::AmbiguousTop { terms } => {
                write!(f, "{terms} terms share the maximal q-degree, expected one")
            }
            RecoveryError::TopCoefficientNotOne => {
                write!(f, "top term coefficient is not one")
            }
            RecoveryError::LeafCountOutOfRange { leaves } => {
                write!(f, "top term reports {leaves} leaves, expected at least two")
            }
            RecoveryError::LeafRowMissing { leaves } => {
                write!(f, "no term with r-degree {leaves}")
            }
            RecoveryError::LeafExcess { vertices, leaves } => {
                write!(
                    f,
                    "minimal subtree with {leaves} leaves has only {vertices} vertices"
                )
            }
            RecoveryError::SeedCoefficientNotOne { vertices } => {
                write!(
                    f,
                    "several full-leaf subtrees with {vertices} vertices, expected one"
                )
            }
            RecoveryError::TailOutOfRange { step } => {
                write!(f, "row count at step {step} is unreachable by any twig multiset")
            }
            RecoveryError::Unresolved => write!(f, "twig counts did not close"),
            RecoveryError::SizeMismatch {
                expected,
                recovered,
            } => write!(
                f,
                "trunk and twigs cover {recovered} vertices, tree has {expected}"
            ),
        }
    }
}

impl core::error::Error for RecoveryError {}

/// Reads (n, a) off the top term: n is one more than the maximal q-degree
/// and a is that term's r-degree, since the whole tree is the unique
/// maximal subtree and exhibits every leaf.
pub fn read_top(p: &BivariatePoly) -> Result<(usize, u32), RecoveryError> {
    let top_q = p.max_q().ok_or(RecoveryError::Empty)?;
    let mut row = p.terms_at_q(top_q);
    let (a, coeff) = row.next().expect("max_q row is nonempty");
    if row.next().is_some() {
        let terms = p.terms_at_q(top_q).count();
        return Err(RecoveryError::AmbiguousTop { terms });
    }
    if !coeff.is_one() {
        return Err(RecoveryError::TopCoefficientNotOne);
    }
    Ok((top_q as usize + 1, a))
}

/// Smallest vertex count of any subtree with a leaves: the minimal
/// q-degree carrying r-degree a, plus one.
pub fn minimal_a_leaf_size(p: &BivariatePoly, a: u32) -> Option<usize> {
    p.terms()
        .find(|&(_, r, _)| r == a)
        .map(|(q, _, _)| q as usize + 1)
}

/// Runs the full recovery on a subtree polynomial.
///
/// Writing v for the minimal full-leaf subtree size, the coefficient of
/// q^(v-1+k) r^a counts the ways to hand k extra vertices to the a twigs,
/// each twig j taking at most (length of j) - 1. Splitting off the
/// assignments that dump everything on one twig isolates, round by round,
/// the number of twigs of each exact length.
pub fn recover_profile(p: &BivariatePoly) -> Result<RecoveredProfile, RecoveryError> {
    let (n, a) = read_top(p)?;
    if a < 2 {
        return Err(RecoveryError::LeafCountOutOfRange { leaves: a });
    }
    if a == 2 {
        return Ok(RecoveredProfile::path(n));
    }
    let v = minimal_a_leaf_size(p, a).ok_or(RecoveryError::LeafRowMissing { leaves: a })?;
    if v as u32 <= a {
        return Err(RecoveryError::LeafExcess { vertices: v, leaves: a });
    }
    if !p.coefficient(v as u32 - 1, a).is_one() {
        return Err(RecoveryError::SeedCoefficientNotOne { vertices: v });
    }
    let trunk_size = v as u32 - a;
    // counts[i] = twigs of length exactly i + 1; twigs of length <= k are
    // known after round k.
    let mut counts: Vec<u32> = Vec::new();
    let mut known: u32 = 0;
    let mut k: u32 = 0;
    while known < a {
        if k as usize > n {
            return Err(RecoveryError::Unresolved);
        }
        let unknown = a - known;
        // Subtrees with v + k + 1 vertices and all a leaves.
        let row = p.coefficient(v as u32 + k, a);
        // Assignments of k + 1 extra vertices in which no unknown twig
        // receives more than k; the remainder each put all k + 1 on a
        // single twig of length >= k + 2.
        let mut caps: Vec<(u32, u32)> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u32, c))
            .collect();
        caps.push((k, unknown));
        let bounded = count_bounded_compositions(k + 1, &caps);
        if row < bounded {
            return Err(RecoveryError::TailOutOfRange { step: k + 1 });
        }
        let tail = &row - &bounded;
        if tail > BigUint::from(unknown) {
            return Err(RecoveryError::TailOutOfRange { step: k + 1 });
        }
        let tail = tail.to_u32().expect("tail bounded by leaf count");
        counts.push(unknown - tail);
        known += unknown - tail;
        k += 1;
    }
    let mut twig_lengths = Vec::new();
    let mut covered = trunk_size as usize;
    for (i, &c) in counts.iter().enumerate() {
        covered += (i + 1) * c as usize;
        for _ in 0..c {
            twig_lengths.push(i as u32 + 1);
        }
    }
    if covered != n {
        return Err(RecoveryError::SizeMismatch {
            expected: n,
            recovered: covered,
        });
    }
    Ok(RecoveredProfile {
        kind: ProfileKind::Standard,
        n,
        leaves: a,
        trunk_size,
        twig_lengths,
    })
}

/// The profile read directly off the tree, for checking recovery against.
pub fn tree_profile(t: &Tree) -> Result<RecoveredProfile, DecomposeError> {
    let d = decompose(t)?;
    if d.degenerate {
        return Ok(RecoveredProfile::path(t.n()));
    }
    Ok(RecoveredProfile {
        kind: ProfileKind::Standard,
        n: t.n(),
        leaves: d.twigs.len() as u32,
        trunk_size: d.trunk_size() as u32,
        twig_lengths: d.twig_lengths(),
    })
}
