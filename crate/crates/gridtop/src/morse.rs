//! Discrete Morse matchings on simplicial complexes.
//!
//! A partial matching pairs faces `σ ⊂ σ ∪ {v}` of adjacent cardinalities so
//! that no face appears twice. Matchings are built here by *element matching
//! sequences*: process vertices one at a time, and at each step pair every
//! still-unmatched face `σ` (with `v ∉ σ`) whose partner `σ ∪ {v}` is also
//! still unmatched. Unmatched faces at the end are *critical*.
//!
//! Every analysis run performs the two cross-checks the rest of the crate
//! depends on: the alternating count of critical cells equals the reduced
//! Euler characteristic, and in each dimension the number of critical cells
//! is at least the Betti number (over each requested prime).
//!
//! For the two 3×n-derived graph families whose total 2-cut complexes have
//! hanging last vertices, [`family_matching_census`] runs the canonical
//! sequence (the hanging vertex first, then a breadth-first order from its
//! neighbour) and reports the resulting critical-cell census.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::bits;
use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::cutgen::total_cut_complex;
use crate::error::{Error, Result};
use crate::graph::{make_family, Graph, GridFamily};
use crate::homology::{betti_suite_with_cap, BettiSuite};

/// A partial matching on the faces of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMatching {
    pairs: Vec<(u64, u64)>,
}

impl PartialMatching {
    /// Validate and wrap a list of `(lower, upper)` pairs: both must be faces
    /// of `k`, differ by exactly one vertex, and no face may appear twice.
    pub fn new(k: &SimplicialComplex, mut pairs: Vec<(u64, u64)>) -> Result<Self> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &(lo, hi) in &pairs {
            if lo & !hi != 0 || hi.count_ones() != lo.count_ones() + 1 {
                return Err(Error::domain(format!(
                    "pair ({lo:b}, {hi:b}) is not a codimension-one inclusion"
                )));
            }
            if !k.is_face(hi) {
                return Err(Error::domain(format!("{hi:b} is not a face")));
            }
            if !seen.insert(lo) || !seen.insert(hi) {
                return Err(Error::domain("a face appears in two pairs"));
            }
        }
        pairs.sort_unstable();
        Ok(PartialMatching { pairs })
    }

    /// The matched pairs, sorted by lower face.
    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// No pairs at all?
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Is the empty face matched?
    pub fn empty_face_matched(&self) -> bool {
        self.pairs.first().is_some_and(|&(lo, _)| lo == 0)
    }

    /// All faces touched by the matching.
    pub fn matched_faces(&self) -> HashSet<u64> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

/// One element-matching step: pair every remaining `σ` (without `v`) whose
/// partner `σ ∪ {v}` also remains; both leave `remaining`. Returns the pairs
/// formed, in ascending order of the lower face.
pub fn element_matching_step(remaining: &mut BTreeSet<u64>, v: usize) -> Vec<(u64, u64)> {
    let b = bits::bit(v);
    let lowers: Vec<u64> = remaining
        .iter()
        .copied()
        .filter(|&f| f & b == 0 && remaining.contains(&(f | b)))
        .collect();
    let mut pairs = Vec::with_capacity(lowers.len());
    for lo in lowers {
        remaining.remove(&lo);
        remaining.remove(&(lo | b));
        pairs.push((lo, lo | b));
    }
    pairs
}

/// Per-step record of a matching sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    /// The vertex processed.
    pub vertex: usize,
    /// Pairs formed by this step.
    pub pairs_added: usize,
    /// Histogram of still-unmatched faces after the step, by cardinality.
    pub remaining_by_size: Vec<usize>,
}

/// A matching produced by a vertex sequence, with its per-step trace.
#[derive(Debug, Clone)]
pub struct SequenceTrace {
    /// The accumulated matching.
    pub matching: PartialMatching,
    /// One record per processed vertex, in order.
    pub steps: Vec<StepRecord>,
}

/// Run an element-matching sequence over all faces of `k` (default cap).
///
/// Repeated vertices are harmless: a second pass over a vertex finds nothing
/// left to pair.
pub fn sequence_matching(k: &SimplicialComplex, vertices: &[usize]) -> Result<SequenceTrace> {
    sequence_matching_with_cap(k, vertices, DEFAULT_FACE_CAP)
}

/// [`sequence_matching`] with an explicit enumeration cap.
pub fn sequence_matching_with_cap(
    k: &SimplicialComplex,
    vertices: &[usize],
    cap: usize,
) -> Result<SequenceTrace> {
    for &v in vertices {
        if v >= k.universe_size() {
            return Err(Error::VertexOutOfRange(v, k.universe_size()));
        }
    }
    let mut remaining: BTreeSet<u64> = k.all_faces_with_cap(cap)?.into_iter().collect();
    let mut pairs = Vec::new();
    let mut steps = Vec::with_capacity(vertices.len());
    for &v in vertices {
        let new = element_matching_step(&mut remaining, v);
        let top = remaining
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut hist = vec![0usize; top + 1];
        for f in &remaining {
            hist[f.count_ones() as usize] += 1;
        }
        steps.push(StepRecord {
            vertex: v,
            pairs_added: new.len(),
            remaining_by_size: hist,
        });
        pairs.extend(new);
    }
    Ok(SequenceTrace {
        matching: PartialMatching::new(k, pairs)?,
        steps,
    })
}

/// Is the matching acyclic? Directed paths alternate "up along the matching,
/// down to another matched lower face"; a cycle among same-level pairs
/// disqualifies the matching as a Morse function's gradient.
pub fn check_acyclic(matching: &PartialMatching) -> bool {
    let pairs = matching.pairs();
    let max_size = pairs
        .iter()
        .map(|&(lo, _)| lo.count_ones() as usize)
        .max()
        .unwrap_or(0);
    for size in 0..=max_size {
        let level: Vec<(u64, u64)> = pairs
            .iter()
            .copied()
            .filter(|&(lo, _)| lo.count_ones() as usize == size)
            .collect();
        if level.len() <= 1 {
            continue;
        }
        // Edge p -> q when q's lower face is a facet of p's upper face.
        let succ: Vec<Vec<usize>> = level
            .iter()
            .map(|&(a, up)| {
                level
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(b, _))| b != a && b & !up == 0)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let mut indegree = vec![0usize; level.len()];
        for out in &succ {
            for &j in out {
                indegree[j] += 1;
            }
        }
        let mut queue: VecDeque<usize> = indegree
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(i, _)| i)
            .collect();
        let mut seen = 0;
        while let Some(i) = queue.pop_front() {
            seen += 1;
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if seen != level.len() {
            return false;
        }
    }
    true
}

/// Homotopy verdict read off a matching's critical cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseVerdict {
    /// Everything (including the empty face) is matched.
    Contractible,
    /// The empty face is matched and all critical cells share one dimension.
    Wedge { count: usize, dim: i64 },
    /// Critical cells in several dimensions (or an unmatched empty face):
    /// no wedge conclusion from the matching alone.
    Mixed,
}

/// Full analysis of a matching on a complex.
#[derive(Debug, Clone)]
pub struct MatchingReport {
    /// Number of matched pairs.
    pub pair_count: usize,
    /// Critical (unmatched) faces, ascending.
    pub critical: Vec<u64>,
    /// Critical-cell counts by dimension (−1 for the empty face).
    pub criticals_by_dim: Vec<(i64, usize)>,
    /// Acyclicity certificate.
    pub acyclic: bool,
    /// Whether the empty face is matched.
    pub empty_face_matched: bool,
    /// The verdict derived from the critical cells.
    pub verdict: MorseVerdict,
    /// Σ (−1)^dim over critical cells equals the Euler characteristic.
    pub morse_euler_ok: bool,
    /// Critical count ≥ Betti number in every dimension, every prime.
    pub weak_morse_ok: bool,
    /// The homology run the checks were made against.
    pub betti: BettiSuite,
}

impl MatchingReport {
    /// All certificates hold (acyclicity plus both numeric checks).
    pub fn all_checks_pass(&self) -> bool {
        self.acyclic && self.morse_euler_ok && self.weak_morse_ok
    }
}

/// Analyze a matching: criticals, acyclicity, verdict, and the mandatory
/// numeric cross-checks against homology over the given primes.
pub fn analyze_matching(
    k: &SimplicialComplex,
    matching: &PartialMatching,
    primes: &[u32],
) -> Result<MatchingReport> {
    analyze_matching_with_cap(k, matching, primes, DEFAULT_FACE_CAP)
}

/// [`analyze_matching`] with an explicit enumeration cap.
pub fn analyze_matching_with_cap(
    k: &SimplicialComplex,
    matching: &PartialMatching,
    primes: &[u32],
    cap: usize,
) -> Result<MatchingReport> {
    let matched = matching.matched_faces();
    let critical: Vec<u64> = k
        .all_faces_with_cap(cap)?
        .into_iter()
        .filter(|f| !matched.contains(f))
        .collect();
    let mut by_dim: Vec<(i64, usize)> = Vec::new();
    for &f in &critical {
        let d = f.count_ones() as i64 - 1;
        match by_dim.iter_mut().find(|(dd, _)| *dd == d) {
            Some((_, c)) => *c += 1,
            None => by_dim.push((d, 1)),
        }
    }
    by_dim.sort_unstable();

    let empty_face_matched = matching.empty_face_matched();
    let verdict = if !empty_face_matched && k.is_face(0) {
        if critical.len() == 1 && critical[0] == 0 {
            // Only the empty face is critical: the complex is {∅}-like.
            MorseVerdict::Wedge { count: 1, dim: -1 }
        } else {
            MorseVerdict::Mixed
        }
    } else if critical.is_empty() {
        MorseVerdict::Contractible
    } else if by_dim.len() == 1 {
        MorseVerdict::Wedge {
            count: by_dim[0].1,
            dim: by_dim[0].0,
        }
    } else {
        MorseVerdict::Mixed
    };

    let betti = betti_suite_with_cap(k, primes, cap)?;
    let alternating: i64 = critical
        .iter()
        .map(|&f| {
            if (f.count_ones() as i64 - 1).rem_euclid(2) == 0 {
                1i64
            } else {
                -1
            }
        })
        .sum();
    let morse_euler_ok = alternating == betti.euler;
    let weak_morse_ok = betti.profiles.iter().all(|p| {
        p.values.iter().enumerate().all(|(i, &b)| {
            let d = i as i64 - 1;
            let c = by_dim
                .iter()
                .find(|&&(dd, _)| dd == d)
                .map_or(0, |&(_, c)| c);
            c >= b
        })
    });

    Ok(MatchingReport {
        pair_count: matching.len(),
        critical,
        criticals_by_dim: by_dim,
        acyclic: check_acyclic(matching),
        empty_face_matched,
        verdict,
        morse_euler_ok,
        weak_morse_ok,
        betti,
    })
}

/// The canonical vertex sequence for a graph whose last vertex hangs by a
/// single edge: the hanging vertex first, then a breadth-first order from
/// its neighbour (ties broken by ascending index).
///
/// # Errors
/// The last vertex must have degree exactly 1 and the rest of the graph must
/// be connected.
pub fn hanging_vertex_sequence(g: &Graph) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph has no vertex sequence"));
    }
    let w = g.n() - 1;
    if g.degree(w) != 1 {
        return Err(Error::domain(format!(
            "vertex {} must have degree 1, has {}",
            g.label(w),
            g.degree(w)
        )));
    }
    let x0 = bits::iter(g.neighbors(w)).next().expect("degree 1");
    let mut order = vec![w, x0];
    let mut seen = bits::bit(w) | bits::bit(x0);
    let mut queue = VecDeque::from([x0]);
    while let Some(u) = queue.pop_front() {
        for v in bits::iter(g.neighbors(u) & !seen) {
            seen |= bits::bit(v);
            order.push(v);
            queue.push_back(v);
        }
    }
    if seen != g.vertex_set() {
        return Err(Error::domain(
            "graph is disconnected away from the hanging vertex",
        ));
    }
    Ok(order)
}

/// Census produced by running the canonical sequence on the total k-cut
/// complex of a grid-family member.
#[derive(Debug, Clone)]
pub struct FamilyCensus {
    /// The complex that was matched.
    pub complex: SimplicialComplex,
    /// The vertex sequence, as labels.
    pub sequence: Vec<String>,
    /// Unmatched-face histogram (by cardinality) after the first step.
    pub after_first_step: Vec<usize>,
    /// Full analysis of the final matching.
    pub report: MatchingReport,
}

/// Run the canonical matching for the total k-cut complex of a family member
/// and analyze the outcome.
pub fn family_matching_census(
    family: GridFamily,
    m: usize,
    k: usize,
    primes: &[u32],
) -> Result<FamilyCensus> {
    family_matching_census_with_cap(family, m, k, primes, DEFAULT_FACE_CAP)
}

/// [`family_matching_census`] with an explicit enumeration cap.
pub fn family_matching_census_with_cap(
    family: GridFamily,
    m: usize,
    k: usize,
    primes: &[u32],
    cap: usize,
) -> Result<FamilyCensus> {
    let g = make_family(family, m)?;
    let complex = total_cut_complex(&g, k)?;
    let sequence = hanging_vertex_sequence(&g)?;
    let trace = sequence_matching_with_cap(&complex, &sequence, cap)?;
    let report = analyze_matching_with_cap(&complex, &trace.matching, primes, cap)?;
    Ok(FamilyCensus {
        complex,
        sequence: sequence.iter().map(|&v| g.label(v).to_string()).collect(),
        after_first_step: trace.steps[0].remaining_by_size.clone(),
        report,
    })
}
