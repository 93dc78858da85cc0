//! Exact invariants of trees: the bivariate subtree polynomial, the
//! chromatic symmetric function, trunk/twig decompositions, and the
//! reconstruction of trunk size and twig lengths from the subtree
//! polynomial alone.
//!
//! All arithmetic is arbitrary precision; all operations are pure
//! functions of immutable inputs and need only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod compositions;
pub mod csf;
pub mod decompose;
pub mod enumerate;
pub mod partition;
pub mod poly;
pub mod recovery;
pub mod tree;

pub use canon::{canonical_code, code_digest};
pub use compositions::count_bounded_compositions;
pub use csf::{
    count_proper_colorings, csf, csf_fingerprint, csf_oracle, MonomialPoly, PowerSumFunction,
    DEFAULT_CSF_CAP,
};
pub use decompose::{decompose, Decomposition, DecomposeError, Twig};
pub use enumerate::{free_trees, prufer_oracle, prufer_tree, FreeTrees, DEFAULT_FREE_TREE_CAP};
pub use partition::{partitions_of, Partition};
pub use poly::{subtree_poly_bruteforce, subtree_poly_fast, BivariatePoly, DEFAULT_BRUTE_CAP};
pub use recovery::{
    minimal_a_leaf_size, read_top, recover_profile, tree_profile, ProfileKind, RecoveredProfile,
    RecoveryError,
};
pub use tree::{Tree, TreeError};

/// Input size exceeded an enforced cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}

impl core::fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "input size {} exceeds cap {}", self.n, self.cap)
    }
}

impl core::error::Error for CapExceeded {}
