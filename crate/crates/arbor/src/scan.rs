//! Collision scanning over all free trees of an order, and the exhaustive
//! recovery roundtrip. Work is parallel over trees; reports are merged in
//! stream order and sorted, so the same inputs always produce the same
//! report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use arbor_core::{
    canonical_code, csf, free_trees, recover_profile, subtree_poly_fast, tree_profile,
    BivariatePoly, CapExceeded, PowerSumFunction, RecoveredProfile, Tree, DEFAULT_CSF_CAP,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Csf,
    SubtreePoly,
    RecoveredProfile,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Csf => "csf",
            Invariant::SubtreePoly => "subtree_poly",
            Invariant::RecoveredProfile => "recovered_profile",
        }
    }

    /// Default order cap per invariant; minutes-scale runs.
    pub fn default_cap(self) -> usize {
        match self {
            Invariant::Csf => 12,
            Invariant::SubtreePoly | Invariant::RecoveredProfile => 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub tree_count: usize,
    pub invariant: Invariant,
    /// Canonical-code pairs (each pair sorted, list sorted) whose trees
    /// share the invariant value despite being non-isomorphic.
    pub collisions: Vec<(String, String)>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanError {
    Cap(CapExceeded),
    /// Recovery disagreed with the direct decomposition; seeing this would
    /// falsify the recovery procedure.
    RoundTrip { code: String, detail: String },
}

impl fmt::Display for ScanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanError::Cap(c) => c.fmt(f),
            ScanError::RoundTrip { code, detail } => {
                write!(f, "round trip failed for {code}: {detail}")
            }
        }
    }
}

impl std::error::Error for ScanError {}

enum InvariantValue {
    Csf(PowerSumFunction),
    Poly(BivariatePoly),
    Profile(RecoveredProfile),
}

impl InvariantValue {
    fn fingerprint(&self) -> Vec<u8> {
        match self {
            InvariantValue::Csf(f) => f.fingerprint().to_vec(),
            InvariantValue::Poly(p) => p.fingerprint().to_vec(),
            InvariantValue::Profile(p) => {
                let mut out = vec![match p.kind {
                    arbor_core::ProfileKind::Standard => 1u8,
                    arbor_core::ProfileKind::Path => 2,
                }];
                out.extend((p.n as u64).to_be_bytes());
                out.extend(p.leaves.to_be_bytes());
                out.extend(p.trunk_size.to_be_bytes());
                for &l in &p.twig_lengths {
                    out.extend(l.to_be_bytes());
                }
                out
            }
        }
    }

    fn same_value(&self, other: &InvariantValue) -> bool {
        match (self, other) {
            (InvariantValue::Csf(a), InvariantValue::Csf(b)) => a == b,
            (InvariantValue::Poly(a), InvariantValue::Poly(b)) => a == b,
            (InvariantValue::Profile(a), InvariantValue::Profile(b)) => a == b,
            _ => false,
        }
    }
}

fn code_string(t: &Tree) -> String {
    String::from_utf8(canonical_code(t)).expect("canonical codes are ascii")
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool")
}

fn evaluate(t: &Tree, invariant: Invariant) -> Result<InvariantValue, ScanError> {
    match invariant {
        Invariant::Csf => Ok(InvariantValue::Csf(
            csf(t, DEFAULT_CSF_CAP).map_err(ScanError::Cap)?,
        )),
        Invariant::SubtreePoly => Ok(InvariantValue::Poly(subtree_poly_fast(t))),
        Invariant::RecoveredProfile => {
            let code = code_string(t);
            let direct = tree_profile(t).map_err(|e| ScanError::RoundTrip {
                code: code.clone(),
                detail: e.to_string(),
            })?;
            let recovered =
                recover_profile(&subtree_poly_fast(t)).map_err(|e| ScanError::RoundTrip {
                    code: code.clone(),
                    detail: e.to_string(),
                })?;
            if recovered != direct {
                return Err(ScanError::RoundTrip {
                    code,
                    detail: "recovered profile differs from direct decomposition".into(),
                });
            }
            Ok(InvariantValue::Profile(recovered))
        }
    }
}

/// Computes the invariant for every free tree of order n (jobs worker
/// threads; 0 picks a default) and reports value collisions. Fingerprints
/// bucket the trees; full-value comparison inside each bucket decides.
pub fn scan(n: usize, invariant: Invariant, jobs: usize, cap: usize) -> Result<ScanReport, ScanError> {
    let start = Instant::now();
    let trees: Vec<Tree> = free_trees(n, cap).map_err(ScanError::Cap)?.collect();
    let values: Vec<(Vec<u8>, InvariantValue, String)> = pool(jobs).install(|| {
        trees
            .par_iter()
            .map(|t| {
                let value = evaluate(t, invariant)?;
                Ok((value.fingerprint(), value, code_string(t)))
            })
            .collect::<Result<_, ScanError>>()
    })?;
    let mut buckets: BTreeMap<&[u8], Vec<usize>> = BTreeMap::new();
    for (i, (fp, _, _)) in values.iter().enumerate() {
        buckets.entry(fp).or_default().push(i);
    }
    let mut collisions = Vec::new();
    for bucket in buckets.values() {
        for (pos, &i) in bucket.iter().enumerate() {
            for &j in &bucket[pos + 1..] {
                if values[i].1.same_value(&values[j].1) {
                    let (a, b) = (values[i].2.clone(), values[j].2.clone());
                    collisions.push(if a <= b { (a, b) } else { (b, a) });
                }
            }
        }
    }
    collisions.sort();
    Ok(ScanReport {
        n,
        tree_count: trees.len(),
        invariant,
        collisions,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub n_max: usize,
    /// Trees examined, all orders 2..=n_max.
    pub trees: usize,
    /// Canonical codes of trees whose recovery disagreed; empty unless the
    /// implementation is wrong.
    pub failures: Vec<String>,
}

impl RoundtripReport {
    pub fn summary(&self) -> String {
        let status = if self.failures.is_empty() { "ok" } else { "failed" };
        format!(
            "{status}: {} trees, failures: {}",
            self.trees,
            self.failures.len()
        )
    }
}

/// Recovers the profile from the subtree polynomial of every free tree of
/// order 2..=n_max and compares with the direct decomposition.
pub fn roundtrip(n_max: usize, jobs: usize, cap: usize) -> Result<RoundtripReport, ScanError> {
    let mut trees = Vec::new();
    for n in 2..=n_max {
        trees.extend(free_trees(n, cap).map_err(ScanError::Cap)?);
    }
    let failures: Vec<String> = pool(jobs).install(|| {
        trees
            .par_iter()
            .filter_map(|t| {
                let ok = tree_profile(t).is_ok_and(|direct| {
                    recover_profile(&subtree_poly_fast(t)) == Ok(direct)
                });
                (!ok).then(|| code_string(t))
            })
            .collect()
    });
    Ok(RoundtripReport {
        n_max,
        trees: trees.len(),
        failures,
    })
}
