//! Tree representation and the edge-list text format.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A simple undirected tree over vertex ids `0..n-1`.
///
/// Construction validates the tree invariants: exactly `n-1` edges, no
/// self-loops or duplicates, connected. Adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The vertex-count header is missing or not a number.
    BadHeader(String),
    /// A line is not of the form `u v` (line numbers are 1-based).
    BadEdgeLine { line: usize, text: String },
    EmptyTree,
    VertexOutOfRange { vertex: u32, n: usize },
    SelfLoop { vertex: u32 },
    DuplicateEdge { u: u32, v: u32 },
    CycleDetected,
    Disconnected,
}

impl core::fmt::Display for TreeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TreeError::BadHeader(s) => write!(f, "bad vertex-count header: {s:?}"),
            TreeError::BadEdgeLine { line, text } => {
                write!(f, "line {line}: expected \"u v\", got {text:?}")
            }
            TreeError::EmptyTree => write!(f, "vertex count must be at least 1"),
            TreeError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            TreeError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            TreeError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            TreeError::CycleDetected => write!(f, "edges contain a cycle"),
            TreeError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for TreeError {}

impl Tree {
    /// Builds a tree from `n` and an edge list, checking all invariants.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::EmptyTree);
        }
        let mut adj = vec![Vec::new(); n];
        // Union-find over vertices; an edge joining an already-joined pair
        // closes a cycle.
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop { vertex: u });
            }
            if adj[u as usize].contains(&v) {
                return Err(TreeError::DuplicateEdge { u, v });
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(TreeError::CycleDetected);
            }
            parent[ru as usize] = rv;
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        if edges.len() != n - 1 {
            // Acyclic with fewer than n-1 edges means several components.
            return Err(TreeError::Disconnected);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree { adj })
    }

    /// Parses the edge-list text format: first nonempty line is `n`, each
    /// following nonempty line is `u v`.
    pub fn parse(text: &str) -> Result<Tree, TreeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(TreeError::BadHeader(String::new()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| TreeError::BadHeader(String::from(header.trim())))?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let mut it = line.split_whitespace();
            let bad = || TreeError::BadEdgeLine {
                line: idx + 1,
                text: String::from(line.trim()),
            };
            let u: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let v: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            edges.push((u, v));
        }
        Tree::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Degrees in weakly decreasing order.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut degs: Vec<u32> = self.adj.iter().map(|l| l.len() as u32).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    pub fn leaves(&self) -> impl Iterator<Item = u32> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, l)| l.len() == 1)
            .map(|(v, _)| v as u32)
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().count()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Tree {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, v) in self.edges() {
            let (pu, pv) = (perm[u as usize], perm[v as usize]);
            adj[pu as usize].push(pv);
            adj[pv as usize].push(pu);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Tree { adj }
    }

    /// The one or two middle vertices of a longest path, found by pruning
    /// leaves in rounds until at most two vertices remain.
    pub fn centers(&self) -> Vec<u32> {
        let n = self.n();
        if n <= 2 {
            return (0..n as u32).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(|l| l.len()).collect();
        let mut alive = alloc::vec![true; n];
        let mut remaining = n;
        let mut layer: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                alive[v as usize] = false;
                for &w in self.neighbors(v) {
                    if alive[w as usize] {
                        degree[w as usize] -= 1;
                        if degree[w as usize] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        (0..n as u32).filter(|&v| alive[v as usize]).collect()
    }

    /// `P_n`: the path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Tree {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    /// The star `K_{1,k}`: center `0` joined to `1..=k`.
    pub fn star(k: usize) -> Tree {
        let edges: Vec<(u32, u32)> = (1..=k as u32).map(|v| (0, v)).collect();
        Tree::from_edges(k + 1, &edges).expect("star is a tree")
    }

    /// A spider: center `0` with one path leg per entry of `legs`.
    pub fn spider(legs: &[u32]) -> Tree {
        let n = 1 + legs.iter().sum::<u32>() as usize;
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1u32;
        for &len in legs {
            let mut prev = 0u32;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edges(n, &edges).expect("spider is a tree")
    }
}

impl core::str::FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Tree, TreeError> {
        Tree::parse(s)
    }
}
