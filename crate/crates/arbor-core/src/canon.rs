//! Canonical form for free trees.
//!
//! The code is an AHU-style nested-parenthesis encoding of the tree rooted
//! at its center; bicentral trees encode both halves in sorted order. Two
//! trees get equal codes iff they are isomorphic.

use alloc::vec;
use alloc::vec::Vec;

use crate::tree::Tree;

const NO_PARENT: u32 = u32::MAX;

fn rooted_code(t: &Tree, v: u32, parent: u32, out: &mut Vec<u8>) {
    let mut child_codes: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mut code = Vec::new();
            rooted_code(t, w, v, &mut code);
            code
        })
        .collect();
    child_codes.sort_unstable();
    out.push(b'(');
    for code in child_codes {
        out.extend_from_slice(&code);
    }
    out.push(b')');
}

/// Canonical byte code of a free tree; equal codes iff isomorphic trees.
pub fn canonical_code(t: &Tree) -> Vec<u8> {
    let centers = t.centers();
    match centers[..] {
        [c] => {
            let mut out = vec![b'1'];
            rooted_code(t, c, NO_PARENT, &mut out);
            out
        }
        [c1, c2] => {
            let mut a = Vec::new();
            rooted_code(t, c1, c2, &mut a);
            let mut b = Vec::new();
            rooted_code(t, c2, c1, &mut b);
            if b < a {
                core::mem::swap(&mut a, &mut b);
            }
            let mut out = vec![b'2'];
            out.extend_from_slice(&a);
            out.extend_from_slice(&b);
            out
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// SHA-256 of the canonical code; used to name exported trees and to key
/// scan buckets.
pub fn code_digest(code: &[u8]) -> [u8; 32] {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(code);
    hasher.finalize().into()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_invariance_p3() {
        let a = Tree::parse("3\n0 1\n1 2").unwrap();
        let b = Tree::parse("3\n0 2\n2 1").unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn star_vs_path() {
        assert_ne!(
            canonical_code(&Tree::star(3)),
            canonical_code(&Tree::path(4))
        );
    }

    #[test]
    fn bicentral_halves_sorted() {
        // P4 rooted at either center gives the same pair either way round.
        let p4 = Tree::path(4);
        let relabeled = p4.relabel(&[3, 2, 1, 0]);
        assert_eq!(canonical_code(&p4), canonical_code(&relabeled));
    }

    #[test]
    fn single_vertex_and_edge() {
        assert_eq!(canonical_code(&Tree::parse("1").unwrap()), b"1()");
        assert_eq!(canonical_code(&Tree::path(2)), b"2()()");
    }
}
