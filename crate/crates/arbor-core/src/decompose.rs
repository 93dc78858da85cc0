//! Trunk/twig decomposition.
//!
//! The trunk is the smallest connected induced subgraph containing every
//! vertex of degree at least 3. Each leaf has a twig: the longest path
//! through it whose interior vertices all have degree 2 in the tree. A tree
//! with maximum degree at most 2 is a path; it has no trunk, and both
//! leaf-wise twigs coincide with the whole path (reported with the
//! `degenerate` flag set).

use alloc::vec::Vec;

use crate::tree::Tree;

/// One twig: the path from its attachment vertex out to a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twig {
    /// First vertex of `path`; lies on the trunk in the non-degenerate case.
    pub attachment: u32,
    /// Ordered vertices from attachment to leaf, inclusive.
    pub path: Vec<u32>,
}

impl Twig {
    /// Length in edges.
    pub fn length(&self) -> u32 {
        (self.path.len() - 1) as u32
    }

    pub fn leaf(&self) -> u32 {
        *self.path.last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Trunk vertices, sorted; empty iff degenerate.
    pub trunk: Vec<u32>,
    /// One twig per leaf, sorted by leaf vertex.
    pub twigs: Vec<Twig>,
    /// Set when the tree is a path (no vertex of degree >= 3).
    pub degenerate: bool,
}

impl Decomposition {
    /// Trunk size in vertices.
    pub fn trunk_size(&self) -> usize {
        self.trunk.len()
    }

    /// Twig lengths in edges, sorted ascending.
    pub fn twig_lengths(&self) -> Vec<u32> {
        let mut lengths: Vec<u32> = self.twigs.iter().map(Twig::length).collect();
        lengths.sort_unstable();
        lengths
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeError {
    /// A single vertex has no subtree, hence no decomposition.
    NoEdges,
}

impl core::fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DecomposeError::NoEdges => write!(f, "tree has no edges"),
        }
    }
}

impl core::error::Error for DecomposeError {}

/// Decomposes a tree into its trunk and twigs.
pub fn decompose(t: &Tree) -> Result<Decomposition, DecomposeError> {
    let n = t.n();
    if n < 2 {
        return Err(DecomposeError::NoEdges);
    }
    let degenerate = t.max_degree() <= 2;
    let trunk = if degenerate { Vec::new() } else { trunk_vertices(t) };

    let mut twigs: Vec<Twig> = t.leaves().map(|leaf| walk_twig(t, leaf)).collect();
    twigs.sort_unstable_by_key(Twig::leaf);
    Ok(Decomposition {
        trunk,
        twigs,
        degenerate,
    })
}

/// Iteratively prunes leaves of tree-degree < 3 until every remaining leaf
/// has tree-degree >= 3. What is left is the trunk.
fn trunk_vertices(t: &Tree) -> Vec<u32> {
    let n = t.n();
    let mut alive = alloc::vec![true; n];
    let mut degree: Vec<usize> = (0..n as u32).map(|v| t.degree(v)).collect();
    let mut queue: Vec<u32> = (0..n as u32).filter(|&v| t.degree(v) == 1).collect();
    while let Some(v) = queue.pop() {
        alive[v as usize] = false;
        for &w in t.neighbors(v) {
            if alive[w as usize] {
                degree[w as usize] -= 1;
                if degree[w as usize] <= 1 && t.degree(w) < 3 {
                    queue.push(w);
                }
            }
        }
    }
    (0..n as u32).filter(|&v| alive[v as usize]).collect()
}

/// Walks from a leaf through degree-2 vertices to the twig's attachment:
/// the first vertex of degree >= 3, or the far leaf when the tree is a path.
fn walk_twig(t: &Tree, leaf: u32) -> Twig {
    let mut path = alloc::vec![leaf];
    let mut prev = leaf;
    let mut cur = t.neighbors(leaf)[0];
    while t.degree(cur) == 2 {
        let next = t
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        path.push(cur);
        prev = cur;
        cur = next;
    }
    path.push(cur);
    path.reverse();
    Twig {
        attachment: cur,
        path,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 11-vertex fixture: trunk 2-3-6-7 with twigs of lengths
    /// 1,1,1,1,1,2 hanging off vertices 1, 3, and 7.
    pub(crate) fn fixture_tree() -> Tree {
        Tree::parse("11\n0 1\n1 2\n1 3\n3 4\n3 5\n3 6\n6 7\n7 8\n7 9\n9 10").unwrap()
    }

    #[test]
    fn fixture_decomposition() {
        let t = fixture_tree();
        assert_eq!(
            t.degree_sequence(),
            alloc::vec![4, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1]
        );
        let d = decompose(&t).unwrap();
        assert!(!d.degenerate);
        assert_eq!(d.trunk, alloc::vec![1, 3, 6, 7]);
        assert_eq!(d.trunk_size(), 4);
        assert_eq!(d.twig_lengths(), alloc::vec![1, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn spider_trunk_is_center() {
        let t = Tree::spider(&[2, 2, 3]);
        let d = decompose(&t).unwrap();
        assert_eq!(d.trunk, alloc::vec![0]);
        assert_eq!(d.twig_lengths(), alloc::vec![2, 2, 3]);
        // Oracle: the trunk is the smallest connected vertex set containing
        // all vertices of degree >= 3, found by brute force over subsets.
        assert_eq!(d.trunk, minimal_connected_superset(&t));
    }

    #[test]
    fn fixture_trunk_matches_bruteforce() {
        let t = fixture_tree();
        assert_eq!(decompose(&t).unwrap().trunk, minimal_connected_superset(&t));
    }

    /// Brute-force trunk: the smallest vertex subset that induces a
    /// connected subgraph and contains every vertex of degree >= 3.
    fn minimal_connected_superset(t: &Tree) -> Vec<u32> {
        let n = t.n();
        assert!(n <= 16);
        let required: u32 = (0..n as u32)
            .filter(|&v| t.degree(v) >= 3)
            .map(|v| 1u32 << v)
            .sum();
        assert!(required != 0);
        let mut best: Option<u32> = None;
        for mask in 1u32..(1 << n) {
            if mask & required != required || !mask_connected(t, mask) {
                continue;
            }
            if best.is_none_or(|b| mask.count_ones() < b.count_ones()) {
                best = Some(mask);
            }
        }
        let best = best.unwrap();
        (0..n as u32).filter(|&v| best & (1 << v) != 0).collect()
    }

    fn mask_connected(t: &Tree, mask: u32) -> bool {
        let start = mask.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for &w in t.neighbors(v) {
                let bit = 1u32 << w;
                if mask & bit != 0 && seen & bit == 0 {
                    seen |= bit;
                    stack.push(w);
                }
            }
        }
        seen == mask
    }

    #[test]
    fn path_is_degenerate() {
        let d = decompose(&Tree::path(5)).unwrap();
        assert!(d.degenerate);
        assert_eq!(d.trunk_size(), 0);
        assert_eq!(d.twig_lengths(), alloc::vec![4, 4]);
        // Both twigs span the whole path, from opposite ends.
        assert_eq!(d.twigs[0].path, alloc::vec![4, 3, 2, 1, 0]);
        assert_eq!(d.twigs[1].path, alloc::vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn two_vertices() {
        let d = decompose(&Tree::path(2)).unwrap();
        assert!(d.degenerate);
        assert_eq!(d.twig_lengths(), alloc::vec![1, 1]);
    }

    #[test]
    fn single_vertex_errors() {
        assert_eq!(
            decompose(&Tree::parse("1").unwrap()),
            Err(DecomposeError::NoEdges)
        );
    }

    #[test]
    fn star_trunk() {
        let d = decompose(&Tree::star(4)).unwrap();
        assert_eq!(d.trunk, alloc::vec![0]);
        assert_eq!(d.twig_lengths(), alloc::vec![1, 1, 1, 1]);
    }
}
