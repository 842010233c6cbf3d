//! Exhaustive enumeration of strong and weak independent sets.
//!
//! These routines are the oracle that every closed form and recurrence in
//! the crate is checked against, so they never consult a formula. Strong
//! sets are enumerated depth-first in ascending vertex order with a bitmask
//! of still-allowed vertices; weak sets use per-edge occupancy counters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{uniform_hyperpath, Hypergraph};
use crate::polyseq::IntPoly;

/// Default cap on the number of vertices an enumeration will accept.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 40;

/// Hard ceiling imposed by the 64-bit vertex masks.
pub const MAX_ENUMERATION_LIMIT: usize = 64;

/// Counts of independent sets by size; `counts[k]` is the number of sets of
/// size `k`. Trailing zeros are trimmed, so `counts[0] = 1` is always present.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CountVector(#[serde(serialize_with = "crate::bigjson::serialize_slice")] Vec<BigInt>);

impl CountVector {
    fn from_u64(mut raw: Vec<u64>) -> Self {
        while raw.len() > 1 && raw.last() == Some(&0) {
            raw.pop();
        }
        CountVector(raw.into_iter().map(BigInt::from).collect())
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.0
    }

    pub fn get(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn into_poly(self) -> IntPoly {
        IntPoly::new(self.0)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl From<CountVector> for Vec<BigInt> {
    fn from(c: CountVector) -> Self {
        c.0
    }
}

/// Enumerator with a configurable vertex limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

impl Enumerator {
    pub fn with_limit(limit: usize) -> Result<Self> {
        if limit > MAX_ENUMERATION_LIMIT {
            return Err(invalid(format!(
                "enumeration limit {limit} exceeds the supported maximum of {MAX_ENUMERATION_LIMIT}"
            )));
        }
        Ok(Enumerator { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, h: &Hypergraph) -> Result<()> {
        if h.n_vertices() > self.limit {
            return Err(Error::EnumerationLimit {
                vertices: h.n_vertices(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Strong independent sets (at most one vertex from each edge) by size.
    pub fn count_strong(&self, h: &Hypergraph) -> Result<CountVector> {
        self.check(h)?;
        let adj = strong_adjacency(h);
        let n = h.n_vertices();
        let all = full_mask(n);
        // Split on the smallest vertex of the set; the pieces are summed in a
        // fixed order, so the result does not depend on scheduling.
        let parts: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|v| {
                let mut counts = vec![0u64; n + 1];
                let allowed = all & !adj[v] & above(v);
                strong_dfs(&adj, allowed, 1, &mut counts);
                counts
            })
            .collect();
        let mut total = vec![0u64; n + 1];
        total[0] = 1;
        for part in parts {
            for (t, c) in total.iter_mut().zip(part) {
                *t += c;
            }
        }
        Ok(CountVector::from_u64(total))
    }

    /// Weak independent sets (containing no edge entirely) by size.
    pub fn count_weak(&self, h: &Hypergraph) -> Result<CountVector> {
        self.check(h)?;
        let n = h.n_vertices();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        let mut room: Vec<usize> = h.edges().iter().map(Vec::len).collect();
        let mut counts = vec![0u64; n + 1];
        weak_dfs(&incident, &mut room, 0, 0, &mut counts);
        Ok(CountVector::from_u64(counts))
    }

    /// Calls `visit` with every strong independent set of size `k`, as an
    /// ascending vertex list.
    pub fn for_each_strong_set(
        &self,
        h: &Hypergraph,
        k: usize,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<()> {
        self.check(h)?;
        let adj = strong_adjacency(h);
        let mut stack = Vec::with_capacity(k);
        sets_dfs(&adj, full_mask(h.n_vertices()), k, &mut stack, &mut visit);
        Ok(())
    }

    /// Buckets the size-`k` strong independent sets of `P_{n,ell}` by their
    /// number of forced vertices, each further split by sub-block.
    pub fn skeleton_census(&self, n: usize, ell: usize, k: usize) -> Result<SkeletonCensus> {
        if n < 2 || k < 2 || ell < 3 {
            return Err(invalid(
                "the skeleton census needs n >= 2, k >= 2, ell >= 3",
            ));
        }
        let h = uniform_hyperpath(n, ell)?;
        let mut census = SkeletonCensus::default();
        let mut failure = None;
        self.for_each_strong_set(&h, k, |set| {
            if failure.is_some() {
                return;
            }
            match classify_skeleton(n, ell, set) {
                Ok(profile) => census.record(&profile),
                Err(e) => failure = Some(e),
            }
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(census),
        }
    }

    /// Sizes of the forced-vertex buckets `j -> count` for size-`k` sets of
    /// `P_{n,ell}`.
    pub fn partition_by_forced(
        &self,
        n: usize,
        ell: usize,
        k: usize,
    ) -> Result<BTreeMap<usize, BigInt>> {
        Ok(self
            .skeleton_census(n, ell, k)?
            .by_forced
            .into_iter()
            .map(|(j, s)| (j, BigInt::from(s.total())))
            .collect())
    }

    /// The four sub-block sizes of bucket `j`.
    pub fn partition_by_subblock(
        &self,
        n: usize,
        ell: usize,
        k: usize,
        j: usize,
    ) -> Result<SubblockCounts> {
        let census = self.skeleton_census(n, ell, k)?;
        Ok(census
            .by_forced
            .get(&j)
            .copied()
            .map(RawSubblocks::to_big)
            .unwrap_or_default())
    }

    /// Splits the size-`k` strong independent sets of `P_{n,ell}` into the
    /// deletion classes around the last two edges.
    pub fn bijection_classify(&self, n: usize, ell: usize, k: usize) -> Result<BijectionParts> {
        if n < 3 || k < 1 || ell < 2 {
            return Err(invalid("bijection classes need n >= 3, k >= 1, ell >= 2"));
        }
        let h = uniform_hyperpath(n, ell)?;
        let step = ell - 1;
        // v: shared by e_{n-1} and e_n. The private vertices of e_{n-1} sit
        // strictly between its two overlap vertices.
        let v = (n - 1) * step;
        let private_prev = (v - step + 1)..v;
        // w is the smallest vertex of e_n other than v; the rest are w_i.
        let w = v + 1;
        let others = (w + 1)..=(n * step);
        let mut parts = [0u64; 3];
        self.for_each_strong_set(&h, k, |set| {
            let has = |u: usize| set.binary_search(&u).is_ok();
            let has_w = has(w);
            let has_wi = set.iter().any(|u| others.contains(u));
            let has_vi = set.iter().any(|u| private_prev.contains(u));
            let class = match (has_w, has_wi, has_vi) {
                (true, _, false) => 0,
                (false, false, _) => 1,
                _ => 2,
            };
            parts[class] += 1;
        })?;
        Ok(BijectionParts {
            a: parts[0].into(),
            b: parts[1].into(),
            c_or_d: parts[2].into(),
        })
    }
}

/// Strong counts with the default limit.
pub fn count_strong(h: &Hypergraph) -> Result<CountVector> {
    Enumerator::default().count_strong(h)
}

/// Weak counts with the default limit.
pub fn count_weak(h: &Hypergraph) -> Result<CountVector> {
    Enumerator::default().count_weak(h)
}

/// Strong-independence polynomial by enumeration, with the default limit.
pub fn brute_force_poly(h: &Hypergraph) -> Result<IntPoly> {
    count_strong(h).map(CountVector::into_poly)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices strictly above `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((1u64 << (v + 1)) - 1)
    }
}

/// `adj[v]`: vertices sharing an edge with `v`, including `v` itself.
fn strong_adjacency(h: &Hypergraph) -> Vec<u64> {
    let mut adj: Vec<u64> = (0..h.n_vertices()).map(|v| 1u64 << v).collect();
    for e in h.edges() {
        let mask = e.iter().fold(0u64, |m, &v| m | (1u64 << v));
        for &v in e {
            adj[v] |= mask;
        }
    }
    adj
}

fn strong_dfs(adj: &[u64], allowed: u64, size: usize, counts: &mut [u64]) {
    counts[size] += 1;
    let mut rest = allowed;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        strong_dfs(adj, allowed & !adj[v] & above(v), size + 1, counts);
    }
}

fn sets_dfs(
    adj: &[u64],
    allowed: u64,
    k: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if stack.len() == k {
        visit(stack);
        return;
    }
    let mut rest = allowed;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        stack.push(v);
        sets_dfs(adj, allowed & !adj[v] & above(v), k, stack, visit);
        stack.pop();
    }
}

/// `room[e]` counts the vertices of edge `e` not yet in the set; a vertex may
/// join only if that leaves every incident edge with room at least one.
fn weak_dfs(
    incident: &[Vec<usize>],
    room: &mut [usize],
    v: usize,
    size: usize,
    counts: &mut [u64],
) {
    if v == incident.len() {
        counts[size] += 1;
        return;
    }
    weak_dfs(incident, room, v + 1, size, counts);
    if incident[v].iter().all(|&e| room[e] > 1) {
        for &e in &incident[v] {
            room[e] -= 1;
        }
        weak_dfs(incident, room, v + 1, size + 1, counts);
        for &e in &incident[v] {
            room[e] += 1;
        }
    }
}

/// Lengths `(a_k, a_{k+1})` of the last two runs of unmarked edges, in
/// the four classes used to split each forced-vertex bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subblock {
    /// `a_k = 0`, `a_{k+1} >= 1`
    ZeroPositive,
    /// `a_k = a_{k+1} = 0`
    ZeroZero,
    /// `a_k, a_{k+1} >= 1`
    PositivePositive,
    /// `a_k >= 1`, `a_{k+1} = 0`
    PositiveZero,
}

impl Subblock {
    fn from_runs(before_last: usize, after_last: usize) -> Self {
        match (before_last == 0, after_last == 0) {
            (true, false) => Subblock::ZeroPositive,
            (true, true) => Subblock::ZeroZero,
            (false, false) => Subblock::PositivePositive,
            (false, true) => Subblock::PositiveZero,
        }
    }
}

/// Skeleton statistic of one independent set of `P_{n,ell}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonProfile {
    pub k: usize,
    /// Number of forced middle vertices.
    pub j: usize,
    pub subblock: Subblock,
    /// Marked edge of each vertex (0-based edge index).
    pub marked_edges: Vec<usize>,
    /// Forced flag of each middle vertex `v_2 .. v_{k-1}`.
    pub forced: Vec<bool>,
    /// Unmarked-run lengths `a_1 .. a_{k+1}`.
    pub runs: Vec<usize>,
}

/// Computes the skeleton statistic of a strong independent set of
/// `P_{n,ell}` (vertex ids as built by [`uniform_hyperpath`]).
///
/// Each vertex marks its unique edge, or the right one of its two edges.
/// A middle vertex is forced when it is the leftmost vertex of its marked
/// edge.
pub fn skeleton_profile(n: usize, ell: usize, set: &[usize]) -> Result<SkeletonProfile> {
    if ell < 3 {
        return Err(invalid(format!("ell must be at least 3, got {ell}")));
    }
    let k = set.len();
    if k < 2 {
        return Err(invalid(format!("skeleton statistic needs k >= 2, got {k}")));
    }
    let h = uniform_hyperpath(n, ell)?;
    check_strong_independent(&h, set)?;
    classify_skeleton(n, ell, set)
}

fn check_strong_independent(h: &Hypergraph, set: &[usize]) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIndependent(
            "vertices must be strictly ascending".into(),
        ));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= h.n_vertices()) {
        return Err(Error::NotIndependent(format!("vertex {v} out of range")));
    }
    for (i, e) in h.edges().iter().enumerate() {
        let hits = e.iter().filter(|v| set.binary_search(v).is_ok()).count();
        if hits > 1 {
            return Err(Error::NotIndependent(format!(
                "edge {i} contains {hits} vertices of the set"
            )));
        }
    }
    Ok(())
}

/// Assumes `set` is an ascending strong independent set of `P_{n,ell}`
/// with at least two vertices.
fn classify_skeleton(n: usize, ell: usize, set: &[usize]) -> Result<SkeletonProfile> {
    let step = ell - 1;
    let k = set.len();
    let marked_edges: Vec<usize> = set.iter().map(|&v| (v / step).min(n - 1)).collect();
    if marked_edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIndependent(
            "two vertices mark the same edge".into(),
        ));
    }
    let forced: Vec<bool> = (1..k - 1)
        .map(|i| set[i] == marked_edges[i] * step)
        .collect();
    let j = forced.iter().filter(|&&f| f).count();
    let mut runs = Vec::with_capacity(k + 1);
    runs.push(marked_edges[0]);
    runs.extend(marked_edges.windows(2).map(|w| w[1] - w[0] - 1));
    runs.push(n - 1 - marked_edges[k - 1]);
    debug_assert_eq!(runs.iter().sum::<usize>(), n - k);
    let subblock = Subblock::from_runs(runs[k - 1], runs[k]);
    Ok(SkeletonProfile {
        k,
        j,
        subblock,
        marked_edges,
        forced,
        runs,
    })
}

/// The four sub-block sizes of one forced-vertex bucket.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SubblockCounts {
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub zero_positive: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub zero_zero: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub positive_positive: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub positive_zero: BigInt,
}

impl SubblockCounts {
    pub fn total(&self) -> BigInt {
        &self.zero_positive + &self.zero_zero + &self.positive_positive + &self.positive_zero
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct RawSubblocks([u64; 4]);

impl RawSubblocks {
    fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    fn to_big(self) -> SubblockCounts {
        SubblockCounts {
            zero_positive: self.0[0].into(),
            zero_zero: self.0[1].into(),
            positive_positive: self.0[2].into(),
            positive_zero: self.0[3].into(),
        }
    }
}

/// All size-`k` sets of one hyperpath, bucketed by forced count and
/// sub-block.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SkeletonCensus {
    by_forced: BTreeMap<usize, RawSubblocks>,
}

impl SkeletonCensus {
    fn record(&mut self, p: &SkeletonProfile) {
        let slot = match p.subblock {
            Subblock::ZeroPositive => 0,
            Subblock::ZeroZero => 1,
            Subblock::PositivePositive => 2,
            Subblock::PositiveZero => 3,
        };
        self.by_forced.entry(p.j).or_default().0[slot] += 1;
    }

    /// Forced counts that occur, ascending.
    pub fn forced_values(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_forced.keys().copied()
    }

    pub fn bucket(&self, j: usize) -> BigInt {
        self.by_forced.get(&j).map_or(0, RawSubblocks::total).into()
    }

    pub fn subblocks(&self, j: usize) -> SubblockCounts {
        self.by_forced
            .get(&j)
            .copied()
            .map(RawSubblocks::to_big)
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.by_forced
            .values()
            .map(RawSubblocks::total)
            .sum::<u64>()
            .into()
    }
}

/// Class sizes `(|A|, |B|, |C ∪ D|)` of the last-edge deletion bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionParts {
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub c_or_d: BigInt,
}

impl BijectionParts {
    pub fn total(&self) -> BigInt {
        &self.a + &self.b + &self.c_or_d
    }
}
