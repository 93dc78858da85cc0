//! Exhaustive generation of free trees, and a Prüfer-sequence oracle to
//! check it against.
//!
//! Rooted trees stream out of the classic level-sequence successor (each
//! sequence is the canonically largest DFS level listing of its rooted
//! class, and the successor steps to the next class in decreasing order).
//! Free trees are the rooted ones whose root lies on a center, deduplicated
//! by canonical code to merge the two rootings of bicentral trees.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::canonical_code;
use crate::tree::Tree;
use crate::CapExceeded;

/// Largest n the free-tree stream accepts by default.
pub const DEFAULT_FREE_TREE_CAP: usize = 20;

/// Largest n the Prüfer oracle will enumerate (n^(n-2) sequences).
pub const PRUFER_ORACLE_CAP: usize = 9;

/// Iterator over all free trees on n vertices, one per isomorphism class.
/// Vertex 0 of every yielded tree is a center.
pub struct FreeTrees {
    levels: Option<Vec<u32>>,
    seen: BTreeSet<Vec<u8>>,
}

/// Streams the free trees on `n` vertices.
pub fn free_trees(n: usize, cap: usize) -> Result<FreeTrees, CapExceeded> {
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    let levels = if n == 0 {
        None
    } else {
        // The path rooted at an end is the first level sequence.
        Some((1..=n as u32).collect())
    };
    Ok(FreeTrees {
        levels,
        seen: BTreeSet::new(),
    })
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let levels = self.levels.as_ref()?;
            let t = level_seq_to_tree(levels);
            self.advance();
            if t.centers().contains(&0) && self.seen.insert(canonical_code(&t)) {
                return Some(t);
            }
        }
    }
}

impl FreeTrees {
    fn advance(&mut self) {
        let levels = self.levels.as_mut().expect("advance past end");
        if !next_level_seq(levels) {
            self.levels = None;
        }
    }
}

/// Steps `levels` to the successor rooted level sequence; false once the
/// star [1, 2, 2, ..] has been passed.
fn next_level_seq(levels: &mut [u32]) -> bool {
    let Some(p) = levels.iter().rposition(|&l| l > 2) else {
        return false;
    };
    let q = levels[..p]
        .iter()
        .rposition(|&l| l == levels[p] - 1)
        .expect("level above 2 has an ancestor level");
    for i in p..levels.len() {
        levels[i] = levels[i - (p - q)];
    }
    true
}

/// The rooted tree a level sequence describes: each vertex hangs off the
/// most recent earlier vertex one level up.
fn level_seq_to_tree(levels: &[u32]) -> Tree {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    // last[l] = latest vertex seen at level l + 1.
    let mut last = alloc::vec![0u32; n];
    for (v, &level) in levels.iter().enumerate() {
        if level > 1 {
            edges.push((last[level as usize - 2], v as u32));
        }
        last[level as usize - 1] = v as u32;
    }
    Tree::from_edges(n, &edges).expect("level sequence describes a tree")
}

/// Decodes a Prüfer sequence over vertices 0..n into its tree.
pub fn prufer_tree(seq: &[u32], n: usize) -> Tree {
    assert!(n >= 2, "Prüfer codes need at least two vertices");
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    let mut degree = alloc::vec![1u32; n];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        let x = x as usize;
        edges.push((leaf as u32, x as u32));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            // x just became a leaf behind the scan point; use it next.
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf as u32, n as u32 - 1));
    Tree::from_edges(n, &edges).expect("Prüfer decode yields a tree")
}

/// Counts tree isomorphism classes on n vertices by decoding every one of
/// the n^(n-2) Prüfer sequences and collecting canonical codes.
pub fn prufer_oracle(n: usize) -> Result<usize, CapExceeded> {
    if !(2..=PRUFER_ORACLE_CAP).contains(&n) {
        return Err(CapExceeded {
            n,
            cap: PRUFER_ORACLE_CAP,
        });
    }
    let mut seen = BTreeSet::new();
    let mut seq = alloc::vec![0u32; n - 2];
    loop {
        seen.insert(canonical_code(&prufer_tree(&seq, n)));
        let mut pos = 0;
        loop {
            if pos == seq.len() {
                return Ok(seen.len());
            }
            seq[pos] += 1;
            if seq[pos] < n as u32 {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}
