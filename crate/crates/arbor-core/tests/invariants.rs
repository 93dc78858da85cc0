//! Cross-checks between the invariants: closed forms, independent counting
//! routes, relabeling invariance, and the recovery roundtrip on every small
//! tree.

use arbor_core::{
    canonical_code, count_bounded_compositions, count_proper_colorings, csf, decompose,
    free_trees, prufer_tree, recover_profile, subtree_poly_bruteforce, subtree_poly_fast,
    tree_profile, Partition, Tree, DEFAULT_BRUTE_CAP, DEFAULT_CSF_CAP, DEFAULT_FREE_TREE_CAP,
};

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn small_trees(lo: usize, hi: usize) -> impl Iterator<Item = Tree> {
    (lo..=hi).flat_map(|n| free_trees(n, DEFAULT_FREE_TREE_CAP).unwrap())
}

fn random_tree(n: usize, rng: &mut StdRng) -> Tree {
    let seq: Vec<u32> = (0..n - 2).map(|_| rng.gen_range(0..n as u32)).collect();
    prufer_tree(&seq, n)
}

fn random_perm(n: usize, rng: &mut StdRng) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

#[test]
fn fast_polynomial_matches_bruteforce() {
    for t in small_trees(1, 9) {
        assert_eq!(
            subtree_poly_fast(&t),
            subtree_poly_bruteforce(&t, DEFAULT_BRUTE_CAP).unwrap()
        );
    }
}

#[test]
fn path_polynomial_closed_form() {
    // P_n holds n - k subpaths with k edges, each with two leaves.
    for n in 2..=40u32 {
        let p = subtree_poly_fast(&Tree::path(n as usize));
        assert_eq!(p.term_count(), n as usize - 1);
        for k in 1..n {
            assert_eq!(p.coefficient(k, 2), BigUint::from(n - k));
        }
    }
}

#[test]
fn star_polynomial_closed_form() {
    // K_{1,m}: a subtree is the hub with any nonempty leaf subset; k >= 2
    // chosen leaves stay leaves, a single chosen leaf gives a bare edge.
    for m in 2..=12u32 {
        let p = subtree_poly_fast(&Tree::star(m as usize));
        assert_eq!(p.coefficient(1, 2), BigUint::from(m));
        for k in 2..=m {
            assert_eq!(p.coefficient(k, k), BigUint::from(binomial(m, k)));
        }
        assert_eq!(p.total_subtrees(), BigUint::from((1u64 << m) - 1));
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[test]
fn total_count_matches_rooted_product_dp() {
    // Counting connected subgraphs at their vertex nearest the root:
    // f(v) = prod over children (1 + f(child)); the sum of f over all
    // vertices counts every connected subgraph once, single vertices
    // included.
    for t in small_trees(1, 10) {
        let n = t.n();
        let mut f = vec![BigUint::from(1u32); n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![(0u32, u32::MAX)];
        while let Some((v, parent)) = stack.pop() {
            order.push((v, parent));
            for &w in t.neighbors(v) {
                if w != parent {
                    stack.push((w, v));
                }
            }
        }
        for &(v, parent) in order.iter().rev() {
            if parent != u32::MAX {
                let child = f[v as usize].clone();
                f[parent as usize] *= child + BigUint::from(1u32);
            }
        }
        let all: BigUint = f.iter().sum();
        let with_edge = all - BigUint::from(n as u32);
        assert_eq!(subtree_poly_fast(&t).total_subtrees(), with_edge);
    }
}

#[test]
fn invariants_survive_relabeling() {
    let mut rng = StdRng::seed_from_u64(0xa11_0f_7e35);
    for round in 0..100 {
        let n = rng.gen_range(3..=14);
        let t = random_tree(n, &mut rng);
        let s = t.relabel(&random_perm(n, &mut rng));
        assert_eq!(canonical_code(&t), canonical_code(&s), "round {round}");
        assert_eq!(subtree_poly_fast(&t), subtree_poly_fast(&s), "round {round}");
        if n <= 14 {
            assert_eq!(
                csf(&t, DEFAULT_CSF_CAP).unwrap(),
                csf(&s, DEFAULT_CSF_CAP).unwrap(),
                "round {round}"
            );
        }
    }
}

#[test]
fn decomposition_accounts_for_every_vertex() {
    for t in small_trees(2, 12) {
        let d = decompose(&t).unwrap();
        assert_eq!(d.degenerate, t.max_degree() <= 2);
        assert_eq!(d.twigs.len(), t.leaf_count());
        for twig in &d.twigs {
            assert_eq!(twig.path.first(), Some(&twig.attachment));
            assert_eq!(t.degree(twig.leaf()), 1);
            // Interior vertices pass straight through.
            for &v in &twig.path[1..twig.path.len() - 1] {
                assert_eq!(t.degree(v), 2);
            }
        }
        if d.degenerate {
            assert!(d.trunk.is_empty());
            let lens = d.twig_lengths();
            assert_eq!(lens, vec![t.n() as u32 - 1; 2]);
        } else {
            let twig_total: u32 = d.twig_lengths().iter().sum();
            assert_eq!(d.trunk_size() as u32 + twig_total, t.n() as u32);
            // Every branching vertex sits on the trunk, and each twig
            // hangs off a trunk vertex.
            for v in 0..t.n() as u32 {
                if t.degree(v) >= 3 {
                    assert!(d.trunk.binary_search(&v).is_ok());
                }
            }
            for twig in &d.twigs {
                assert!(d.trunk.binary_search(&twig.attachment).is_ok());
            }
            assert!(trunk_is_connected(&t, &d.trunk));
        }
    }
}

fn trunk_is_connected(t: &Tree, trunk: &[u32]) -> bool {
    let inside = |v: u32| trunk.binary_search(&v).is_ok();
    let mut seen = vec![false; t.n()];
    let mut stack = vec![trunk[0]];
    seen[trunk[0] as usize] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &w in t.neighbors(v) {
            if inside(w) && !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
    }
    count == trunk.len()
}

#[test]
fn decomposition_commutes_with_relabeling() {
    let mut rng = StdRng::seed_from_u64(7_031_906);
    for _ in 0..60 {
        let n = rng.gen_range(3..=16);
        let t = random_tree(n, &mut rng);
        let perm = random_perm(n, &mut rng);
        let (d, e) = (decompose(&t).unwrap(), decompose(&t.relabel(&perm)).unwrap());
        assert_eq!(d.degenerate, e.degenerate);
        let mut mapped: Vec<u32> = d.trunk.iter().map(|&v| perm[v as usize]).collect();
        mapped.sort_unstable();
        assert_eq!(mapped, e.trunk);
        assert_eq!(d.twig_lengths(), e.twig_lengths());
    }
}

#[test]
fn csf_signs_follow_component_count() {
    // Each edge subset contributes sign (-1)^(n - components), so a
    // partition's coefficient sign is forced; in particular the all-ones
    // partition carries +1 and the full partition (-1)^(n-1).
    for t in small_trees(1, 8) {
        let n = t.n() as u32;
        let f = csf(&t, DEFAULT_CSF_CAP).unwrap();
        assert_eq!(
            f.coefficient(&Partition::new(vec![1; n as usize])),
            BigInt::from(1)
        );
        let top = f.coefficient(&Partition::new(vec![n]));
        assert_eq!(top, BigInt::from(if n % 2 == 1 { 1 } else { -1 }));
        for (partition, coeff) in f.terms() {
            let expect_negative = (n - partition.len() as u32) % 2 == 1;
            assert_eq!(coeff < &BigInt::from(0), expect_negative);
            assert_eq!(partition.size(), n);
        }
    }
}

#[test]
fn csf_counts_proper_colorings() {
    for t in small_trees(1, 8) {
        let f = csf(&t, DEFAULT_CSF_CAP).unwrap();
        for m in 2..=3u32 {
            let direct = brute_force_colorings(&t, m);
            assert_eq!(count_proper_colorings(&f, m), BigInt::from(direct));
        }
        // A tree on n vertices has m (m-1)^(n-1) proper m-colorings.
        let n = t.n() as u32;
        assert_eq!(
            count_proper_colorings(&f, 4),
            BigInt::from(4u64 * 3u64.pow(n - 1))
        );
    }
}

fn brute_force_colorings(t: &Tree, m: u32) -> u64 {
    let n = t.n();
    let mut coloring = vec![0u32; n];
    let mut count = 0;
    loop {
        if t.edges().all(|(u, v)| coloring[u as usize] != coloring[v as usize]) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            coloring[pos] += 1;
            if coloring[pos] < m {
                break;
            }
            coloring[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn recovery_roundtrips_every_small_tree() {
    for t in small_trees(2, 10) {
        let p = subtree_poly_fast(&t);
        assert_eq!(recover_profile(&p).unwrap(), tree_profile(&t).unwrap());
    }
}

#[test]
fn full_leaf_row_counts_bounded_compositions() {
    // For a branching tree the subtrees showing every leaf are exactly
    // trunk plus a nonempty initial segment of each twig, so the r^a row
    // counts bounded compositions of the extra vertices.
    for t in small_trees(3, 10) {
        if t.max_degree() <= 2 {
            continue;
        }
        let d = decompose(&t).unwrap();
        let a = d.twigs.len() as u32;
        let v = d.trunk_size() as u32 + a;
        let caps: Vec<(u32, u32)> = d.twig_lengths().iter().map(|&l| (l - 1, 1)).collect();
        let p = subtree_poly_fast(&t);
        let n = t.n() as u32;
        for k in 0..=n {
            let want = if v - 1 + k <= n - 1 {
                count_bounded_compositions(k, &caps)
            } else {
                BigUint::from(0u32)
            };
            assert_eq!(p.coefficient(v - 1 + k, a), want);
        }
        // No subtree shows more leaves than the tree itself.
        assert!(p.terms().all(|(_, r, _)| r <= a));
        // And none with all leaves is smaller than trunk plus one vertex
        // per twig.
        assert!(p
            .terms()
            .filter(|&(_, r, _)| r == a)
            .all(|(q, _, _)| q >= v - 1));
    }
}

#[test]
fn two_leaf_row_counts_paths_of_each_length() {
    // A subtree with two leaves is a path, so coefficient (k, 2) must
    // equal the number of vertex pairs at distance k.
    for t in small_trees(2, 12) {
        let n = t.n();
        let mut pairs_at = vec![0u32; n];
        for start in 0..n as u32 {
            let mut dist = vec![u32::MAX; n];
            dist[start as usize] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in t.neighbors(v) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in dist.iter().filter(|&&d| d > 0) {
                pairs_at[d as usize] += 1;
            }
        }
        let p = subtree_poly_fast(&t);
        for k in 1..n as u32 {
            // Each unordered pair was seen from both ends.
            assert_eq!(p.coefficient(k, 2), BigUint::from(pairs_at[k as usize] / 2));
        }
    }
}

#[test]
fn single_vertex_has_empty_polynomial() {
    let t = Tree::parse("1").unwrap();
    assert!(subtree_poly_fast(&t).is_zero());
    assert!(subtree_poly_bruteforce(&t, DEFAULT_BRUTE_CAP).unwrap().is_zero());
}
