//! Finite simplicial complexes on a labelled vertex universe, stored by their
//! facets (maximal faces) as `u64` bitmasks.
//!
//! Two degenerate complexes are distinguished throughout: the **void** complex
//! (no faces at all, `facets = []`) and the complex whose only face is the
//! empty set (`facets = [0]`). Operations preserve the universe unless they
//! are documented to change it (cone, suspension, join, embed).

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::bits;
use crate::error::{Error, Result};

/// Default bound on the universe size for full face enumeration.
pub const DEFAULT_FACE_CAP: usize = 22;

/// A simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<u64>,
}

fn validate_labels(labels: &[String]) -> Result<()> {
    if labels.len() > 64 {
        return Err(Error::capacity(format!(
            "universes are limited to 64 vertices, got {}",
            labels.len()
        )));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l == "-" || l.starts_with('#') || l.chars().any(char::is_whitespace) {
            return Err(Error::domain(format!("invalid vertex label {l:?}")));
        }
        if labels[..i].contains(l) {
            return Err(Error::domain(format!("duplicate vertex label {l:?}")));
        }
    }
    Ok(())
}

/// Keep only the maximal masks of a family (dedups as well).
fn maximalize(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_unstable();
    faces.dedup();
    // Scan from large cardinality to small so kept sets are never dominated.
    let mut by_size = faces;
    by_size.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    'outer: for f in by_size {
        for &k in &kept {
            if f & !k == 0 {
                continue 'outer;
            }
        }
        kept.push(f);
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The void complex (no faces at all) on the given universe.
    pub fn void(labels: Vec<String>) -> Result<Self> {
        validate_labels(&labels)?;
        Ok(SimplicialComplex {
            labels,
            facets: Vec::new(),
        })
    }

    /// The complex whose only face is the empty set.
    pub fn empty_face_only(labels: Vec<String>) -> Result<Self> {
        validate_labels(&labels)?;
        Ok(SimplicialComplex {
            labels,
            facets: vec![0],
        })
    }

    /// The full simplex on the universe (every subset is a face).
    pub fn simplex(labels: Vec<String>) -> Result<Self> {
        validate_labels(&labels)?;
        let full = bits::full(labels.len());
        Ok(SimplicialComplex {
            labels,
            facets: vec![full],
        })
    }

    /// Build a complex from generating faces; non-maximal ones are dropped.
    ///
    /// An empty generator list yields the void complex; a single empty set
    /// yields the `{∅}` complex.
    pub fn from_facets(labels: Vec<String>, faces: Vec<u64>) -> Result<Self> {
        validate_labels(&labels)?;
        let full = bits::full(labels.len());
        if let Some(&bad) = faces.iter().find(|&&f| f & !full != 0) {
            return Err(Error::VertexOutOfRange(
                bits::max(bad & !full),
                labels.len(),
            ));
        }
        Ok(SimplicialComplex {
            labels,
            facets: maximalize(faces),
        })
    }

    /// Like [`from_facets`](Self::from_facets) but with facets given by label.
    pub fn from_labeled_facets(labels: Vec<String>, faces: &[&[&str]]) -> Result<Self> {
        let k = SimplicialComplex::void(labels)?;
        let masks = faces
            .iter()
            .map(|f| k.mask_from_labels(f))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(k.labels, masks)
    }

    /// Universe labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Universe size (number of available vertices, used or not).
    pub fn universe_size(&self) -> usize {
        self.labels.len()
    }

    /// Facet bitmasks, ascending.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Number of facets.
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Facets as sorted label lists.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| bits::iter(f).map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    /// No faces at all?
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Index of a label in the universe.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Bitmask for a list of labels.
    pub fn mask_from_labels(&self, names: &[&str]) -> Result<u64> {
        let mut m = 0;
        for name in names {
            m |= bits::bit(self.index_of(name)?);
        }
        Ok(m)
    }

    /// Labels of a face mask, in index order.
    pub fn labels_of_mask(&self, face: u64) -> Vec<String> {
        bits::iter(face).map(|v| self.labels[v].clone()).collect()
    }

    /// Dimension of the complex: max facet cardinality minus one.
    ///
    /// # Errors
    /// The void complex has no dimension.
    pub fn dimension(&self) -> Result<i64> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
            .ok_or_else(|| Error::domain("the void complex has no dimension"))
    }

    /// Is every facet of the same dimension? Void and `{∅}` are pure.
    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Is `face` a face of the complex? (Nothing is a face of the void
    /// complex, not even the empty set.)
    pub fn is_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Link of a face: `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    ///
    /// # Errors
    /// `σ` must be a face.
    pub fn link(&self, face: u64) -> Result<Self> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(self.labels_of_mask(face)));
        }
        let gens = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        Ok(SimplicialComplex {
            labels: self.labels.clone(),
            facets: maximalize(gens),
        })
    }

    /// Deletion of a face: `del(σ) = {τ ∈ K : σ ⊄ τ}`.
    ///
    /// Deleting the empty face removes every face (the void complex).
    pub fn delete_face(&self, face: u64) -> Self {
        let mut gens = Vec::new();
        for &f in &self.facets {
            if face & !f != 0 {
                gens.push(f);
            } else {
                // Maximal subsets of f missing at least one vertex of σ.
                for v in bits::iter(face) {
                    gens.push(f & !bits::bit(v));
                }
            }
        }
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: maximalize(gens),
        }
    }

    /// Deletion of a vertex: all faces not containing `v`. The universe is
    /// unchanged (the vertex merely becomes unused).
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.labels.len() {
            return Err(Error::VertexOutOfRange(v, self.labels.len()));
        }
        Ok(self.delete_face(bits::bit(v)))
    }

    /// Star of a face: `st(σ) = {τ ∈ K : σ ∪ τ ∈ K}`.
    ///
    /// A non-face has an empty star (the void complex).
    pub fn star(&self, face: u64) -> Self {
        let gens: Vec<u64> = self
            .facets
            .iter()
            .copied()
            .filter(|&f| face & !f == 0)
            .collect();
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: gens, // already maximal and sorted: a subfamily of facets
        }
    }

    fn fresh_label(&self, label: &str) -> Result<()> {
        if self.labels.iter().any(|l| l == label) {
            return Err(Error::domain(format!(
                "apex label {label:?} already in the universe"
            )));
        }
        Ok(())
    }

    /// Cone over the complex with a fresh apex appended to the universe.
    ///
    /// # Errors
    /// The apex label must not collide with an existing one.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        self.fresh_label(apex)?;
        let mut labels = self.labels.clone();
        labels.push(apex.to_string());
        validate_labels(&labels)?;
        let a = bits::bit(labels.len() - 1);
        let facets = self.facets.iter().map(|&f| f | a).collect();
        Ok(SimplicialComplex { labels, facets })
    }

    /// Suspension: join with two fresh apexes.
    pub fn suspension(&self, north: &str, south: &str) -> Result<Self> {
        if north == south {
            return Err(Error::domain("suspension apexes must differ"));
        }
        self.fresh_label(north)?;
        self.fresh_label(south)?;
        let mut labels = self.labels.clone();
        labels.push(north.to_string());
        labels.push(south.to_string());
        validate_labels(&labels)?;
        let n = bits::bit(labels.len() - 2);
        let s = bits::bit(labels.len() - 1);
        let mut facets: Vec<u64> = self.facets.iter().map(|&f| f | n).collect();
        facets.extend(self.facets.iter().map(|&f| f | s));
        Ok(SimplicialComplex {
            labels,
            facets: maximalize(facets),
        })
    }

    /// Join of two complexes on disjoint universes: faces are all unions
    /// `σ ⊔ τ`. The result's universe is the concatenation.
    ///
    /// # Errors
    /// Universes must not share labels (and must fit in 64 vertices).
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        validate_labels(&labels)?;
        let shift = self.labels.len();
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(f | g << shift);
            }
        }
        Ok(SimplicialComplex {
            labels,
            facets: maximalize(facets),
        })
    }

    /// Union of two complexes on the same universe (labels may be permuted).
    pub fn union_with(&self, other: &Self) -> Result<Self> {
        let other = self.aligned_to(other)?;
        let mut gens = self.facets.clone();
        gens.extend(other);
        Ok(SimplicialComplex {
            labels: self.labels.clone(),
            facets: maximalize(gens),
        })
    }

    /// Intersection of two complexes on the same universe.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        let other = self.aligned_to(other)?;
        let mut gens: Vec<u64> = self
            .facets
            .iter()
            .flat_map(|&f| other.iter().map(move |&g| f & g))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        Ok(SimplicialComplex {
            labels: self.labels.clone(),
            facets: maximalize(gens),
        })
    }

    /// `d`-skeleton: all faces of dimension at most `d`.
    ///
    /// `d = −1` keeps only the empty face; below that, the void complex.
    pub fn skeleton(&self, d: i64) -> Self {
        if self.is_void() || d < -1 {
            return SimplicialComplex {
                labels: self.labels.clone(),
                facets: Vec::new(),
            };
        }
        if d == -1 {
            return SimplicialComplex {
                labels: self.labels.clone(),
                facets: vec![0],
            };
        }
        let want = (d + 1) as u32;
        let mut gens: Vec<u64> = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= want {
                gens.push(f);
            } else {
                let verts = bits::to_vec(f);
                push_k_subsets(&verts, want as usize, &mut gens);
            }
        }
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: maximalize(gens),
        }
    }

    /// Other's facets re-expressed in this complex's vertex indices.
    ///
    /// # Errors
    /// The two universes must contain the same label set.
    fn aligned_to(&self, other: &Self) -> Result<Vec<u64>> {
        if self.labels.len() != other.labels.len() {
            return Err(Error::domain(format!(
                "universes differ: {} vs {} vertices",
                self.labels.len(),
                other.labels.len()
            )));
        }
        if self.labels == other.labels {
            return Ok(other.facets.clone());
        }
        let perm = other
            .labels
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(other
            .facets
            .iter()
            .map(|&f| bits::iter(f).fold(0, |m, v| m | bits::bit(perm[v])))
            .collect())
    }

    /// Do the two complexes have the same faces (universes equal as label
    /// sets, possibly in different order)?
    pub fn equals(&self, other: &Self) -> bool {
        match self.aligned_to(other) {
            Ok(mut aligned) => {
                aligned.sort_unstable();
                aligned == self.facets
            }
            Err(_) => false,
        }
    }

    /// Re-express the complex on another universe, given by label. The target
    /// must contain every vertex that appears in a facet; unused vertices may
    /// be dropped or added freely.
    pub fn embed_into(&self, ambient: &[String]) -> Result<Self> {
        validate_labels(ambient)?;
        let target = SimplicialComplex::void(ambient.to_vec())?;
        let mut map = vec![usize::MAX; self.labels.len()];
        let support = self.facets.iter().fold(0u64, |m, &f| m | f);
        for v in bits::iter(support) {
            map[v] = target.index_of(&self.labels[v])?;
        }
        let facets = self
            .facets
            .iter()
            .map(|&f| bits::iter(f).fold(0, |m, v| m | bits::bit(map[v])))
            .collect();
        Ok(SimplicialComplex {
            labels: target.labels,
            facets,
        })
    }

    /// Every face of the complex (including the empty face unless void),
    /// ascending as bitmasks, under the default universe cap.
    pub fn all_faces(&self) -> Result<Vec<u64>> {
        self.all_faces_with_cap(DEFAULT_FACE_CAP)
    }

    /// Every face, with an explicit universe-size cap.
    ///
    /// # Errors
    /// Capacity error when the universe exceeds `cap`.
    pub fn all_faces_with_cap(&self, cap: usize) -> Result<Vec<u64>> {
        let support = self.facets.iter().fold(0u64, |m, &f| m | f);
        if support.count_ones() as usize > cap {
            return Err(Error::capacity(format!(
                "face enumeration over {} vertices exceeds cap {cap}",
                support.count_ones()
            )));
        }
        let mut faces: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            for s in bits::submasks(f) {
                faces.insert(s);
            }
        }
        let mut out: Vec<u64> = faces.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Face counts by dimension, from −1 upward. The pentagon boundary gives
    /// `[(−1, 1), (0, 5), (1, 5)]`; the void complex gives an empty census.
    pub fn face_census(&self) -> Result<Vec<(i64, usize)>> {
        self.face_census_with_cap(DEFAULT_FACE_CAP)
    }

    /// Face census with an explicit universe-size cap.
    pub fn face_census_with_cap(&self, cap: usize) -> Result<Vec<(i64, usize)>> {
        let faces = self.all_faces_with_cap(cap)?;
        if faces.is_empty() {
            return Ok(Vec::new());
        }
        let top = faces.iter().map(|f| f.count_ones()).max().unwrap() as usize;
        let mut counts = vec![0usize; top + 1];
        for f in faces {
            counts[f.count_ones() as usize] += 1;
        }
        Ok(counts
            .into_iter()
            .enumerate()
            .map(|(size, c)| (size as i64 - 1, c))
            .collect())
    }

    /// Serialize as the facet-list text format (stable round trip).
    pub fn to_text(&self) -> String {
        let mut s = String::from("#universe:");
        for l in &self.labels {
            let _ = write!(s, " {l}");
        }
        s.push('\n');
        for &f in &self.facets {
            if f == 0 {
                s.push('-');
            } else {
                let mut first = true;
                for v in bits::iter(f) {
                    if !first {
                        s.push(' ');
                    }
                    let _ = write!(s, "{}", self.labels[v]);
                    first = false;
                }
            }
            s.push('\n');
        }
        s
    }

    /// Parse the facet-list text format.
    ///
    /// An optional `#universe: a1 b1 …` header fixes the universe; without it
    /// the universe is the labels in order of first appearance. Lines starting
    /// with `#` are otherwise comments, blank lines are skipped, and a lone
    /// `-` denotes the empty face. No facet lines at all means the void
    /// complex.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut universe: Option<Vec<String>> = None;
        let mut facet_lines: Vec<Vec<String>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("#universe:") {
                if universe.is_some() || !facet_lines.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {}: universe header must come first, once",
                        i + 1
                    )));
                }
                universe = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            if line == "-" {
                facet_lines.push(Vec::new());
            } else {
                facet_lines.push(line.split_whitespace().map(str::to_string).collect());
            }
        }
        let labels = match universe {
            Some(u) => u,
            None => {
                let mut seen = Vec::new();
                for f in &facet_lines {
                    for l in f {
                        if !seen.contains(l) {
                            seen.push(l.clone());
                        }
                    }
                }
                seen
            }
        };
        let k = SimplicialComplex::void(labels)?;
        let masks = facet_lines
            .iter()
            .map(|f| {
                let names: Vec<&str> = f.iter().map(String::as_str).collect();
                k.mask_from_labels(&names)
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(k.labels, masks)
    }
}

/// Append all `k`-subsets of `verts` (as masks) to `out`.
fn push_k_subsets(verts: &[usize], k: usize, out: &mut Vec<u64>) {
    fn rec(verts: &[usize], k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=verts.len() - k {
            rec(verts, k - 1, i + 1, acc | bits::bit(verts[i]), out);
        }
    }
    if k <= verts.len() {
        rec(verts, k, 0, 0, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn named(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    /// The worked example: facets 146, 236, 245, 246 on universe 1..6.
    fn k31() -> SimplicialComplex {
        SimplicialComplex::from_labeled_facets(
            named(6),
            &[
                &["1", "4", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "4", "6"],
            ],
        )
        .unwrap()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_labeled_facets(
            named(5),
            &[
                &["1", "2"],
                &["2", "3"],
                &["3", "4"],
                &["4", "5"],
                &["5", "1"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn from_facets_drops_non_maximal() {
        let k = SimplicialComplex::from_labeled_facets(
            named(6),
            &[
                &["1", "4", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "4", "6"],
                &["4", "6"],
                &["2"],
            ],
        )
        .unwrap();
        assert!(k.equals(&k31()));
        assert_eq!(k.facet_count(), 4);
        assert_eq!(k.dimension().unwrap(), 2);
    }

    #[test]
    fn void_vs_empty_face_complex() {
        let v = SimplicialComplex::void(named(2)).unwrap();
        let e = SimplicialComplex::empty_face_only(named(2)).unwrap();
        assert!(v.is_void());
        assert!(!e.is_void());
        assert!(!v.is_face(0));
        assert!(e.is_face(0));
        assert!(v.dimension().is_err());
        assert_eq!(e.dimension().unwrap(), -1);
        assert!(!v.equals(&e));
    }

    #[test]
    fn link_of_vertex_four() {
        let k = k31();
        let four = k.mask_from_labels(&["4"]).unwrap();
        let lk = k.link(four).unwrap();
        let expect = SimplicialComplex::from_labeled_facets(
            named(6),
            &[&["1", "6"], &["2", "5"], &["2", "6"]],
        )
        .unwrap();
        assert!(lk.equals(&expect));
    }

    #[test]
    fn link_edge_cases() {
        let k = k31();
        assert!(k.link(0).unwrap().equals(&k));
        let edge = SimplicialComplex::from_labeled_facets(named(2), &[&["1", "2"]]).unwrap();
        let lk = edge.link(0b11).unwrap();
        assert_eq!(lk.facets(), &[0]); // {∅}
        let nonface = k.mask_from_labels(&["1", "2"]).unwrap();
        assert!(matches!(k.link(nonface), Err(Error::NotAFace(_))));
    }

    #[test]
    fn delete_vertex_four() {
        let k = k31();
        let got = k.delete_vertex(k.index_of("4").unwrap()).unwrap();
        let expect = SimplicialComplex::from_labeled_facets(
            named(6),
            &[&["2", "3", "6"], &["1", "6"], &["2", "5"]],
        )
        .unwrap();
        assert!(got.equals(&expect));
    }

    #[test]
    fn delete_face_examples() {
        let k = k31();
        assert!(k.delete_face(0).is_void());
        let got = k.delete_face(k.mask_from_labels(&["2", "6"]).unwrap());
        let expect = SimplicialComplex::from_labeled_facets(
            named(6),
            &[&["1", "4", "6"], &["2", "4", "5"], &["2", "3"], &["3", "6"]],
        )
        .unwrap();
        assert!(got.equals(&expect));
    }

    #[test]
    fn star_examples() {
        let k = k31();
        let four = k.mask_from_labels(&["4"]).unwrap();
        let st = k.star(four);
        let expect = SimplicialComplex::from_labeled_facets(
            named(6),
            &[&["1", "4", "6"], &["2", "4", "5"], &["2", "4", "6"]],
        )
        .unwrap();
        assert!(st.equals(&expect));
        assert!(st.is_face(0));
        assert!(k.star(0).equals(&k));
        assert!(k.star(k.mask_from_labels(&["1", "2"]).unwrap()).is_void());
    }

    #[test]
    fn star_is_simplex_join_link() {
        let k = k31();
        for &f in k.all_faces().unwrap().iter() {
            let st = k.star(f);
            let lk = k.link(f).unwrap();
            let sigma = SimplicialComplex::simplex(k.labels_of_mask(f)).unwrap();
            let support: Vec<String> = k
                .labels()
                .iter()
                .filter(|l| {
                    let v = k.index_of(l).unwrap();
                    !bits::has(f, v)
                })
                .cloned()
                .collect();
            let lk_small = lk.embed_into(&support).unwrap();
            let joined = sigma
                .join(&lk_small)
                .unwrap()
                .embed_into(k.labels())
                .unwrap();
            assert!(st.equals(&joined), "star ≠ σ ∗ link at face {f:b}");
        }
    }

    #[test]
    fn cone_and_suspension() {
        let k = pentagon();
        let c = k.cone("apex").unwrap();
        assert_eq!(c.universe_size(), 6);
        assert_eq!(c.dimension().unwrap(), 2);
        assert!(k.cone("3").is_err());

        let s = k.suspension("n", "s").unwrap();
        let kf = k.all_faces().unwrap().len();
        assert_eq!(s.all_faces().unwrap().len(), 3 * kf);

        // Suspension of {∅} is two points (a 0-sphere).
        let e = SimplicialComplex::empty_face_only(vec!["x".into()]).unwrap();
        let s0 = e.suspension("n", "s").unwrap();
        assert_eq!(s0.facet_count(), 2);
        assert_eq!(s0.dimension().unwrap(), 0);
    }

    #[test]
    fn join_identities() {
        let point = SimplicialComplex::simplex(vec!["x".into()]).unwrap();
        let other = SimplicialComplex::simplex(vec!["y".into()]).unwrap();
        let edge = point.join(&other).unwrap();
        assert_eq!(edge.facets(), &[0b11]);

        let void = SimplicialComplex::void(vec!["z".into()]).unwrap();
        assert!(void.join(&pentagon()).unwrap().is_void());

        let e = SimplicialComplex::empty_face_only(vec!["w".into()]).unwrap();
        let j = e.join(&pentagon()).unwrap();
        assert_eq!(j.facet_count(), 5);
        assert_eq!(j.dimension().unwrap(), 1);

        assert!(point.join(&point).is_err()); // label collision
    }

    #[test]
    fn skeleton_examples() {
        let tri = SimplicialComplex::simplex(named(3)).unwrap();
        let sk = tri.skeleton(1);
        assert_eq!(sk.facet_count(), 3);
        assert!(sk.is_pure());
        assert_eq!(tri.skeleton(-1).facets(), &[0]);
        assert!(tri.skeleton(-2).is_void());
        assert!(SimplicialComplex::void(named(3))
            .unwrap()
            .skeleton(1)
            .is_void());
    }

    #[test]
    fn intersect_examples() {
        let a =
            SimplicialComplex::from_labeled_facets(named(3), &[&["1", "2"], &["2", "3"]]).unwrap();
        let b =
            SimplicialComplex::from_labeled_facets(named(3), &[&["1", "3"], &["2", "3"]]).unwrap();
        let i = a.intersect(&b).unwrap();
        let expect =
            SimplicialComplex::from_labeled_facets(named(3), &[&["1"], &["2", "3"]]).unwrap();
        assert!(i.equals(&expect));
    }

    #[test]
    fn census_of_pentagon() {
        assert_eq!(
            pentagon().face_census().unwrap(),
            vec![(-1, 1), (0, 5), (1, 5)]
        );
        assert_eq!(
            SimplicialComplex::void(named(3))
                .unwrap()
                .face_census()
                .unwrap(),
            Vec::new()
        );
    }

    #[test]
    fn equality_is_label_aware() {
        let a = SimplicialComplex::from_labeled_facets(vec!["x".into(), "y".into()], &[&["x"]])
            .unwrap();
        let b = SimplicialComplex::from_labeled_facets(vec!["y".into(), "x".into()], &[&["x"]])
            .unwrap();
        assert!(a.equals(&b));
        let c = SimplicialComplex::from_labeled_facets(vec!["y".into(), "x".into()], &[&["y"]])
            .unwrap();
        assert!(!a.equals(&c));
    }

    #[test]
    fn embed_and_restrict() {
        let small =
            SimplicialComplex::from_labeled_facets(vec!["a".into(), "b".into()], &[&["a", "b"]])
                .unwrap();
        let big_universe: Vec<String> = vec!["z".into(), "a".into(), "b".into()];
        let big = small.embed_into(&big_universe).unwrap();
        assert_eq!(big.universe_size(), 3);
        assert!(big.is_face(big.mask_from_labels(&["a", "b"]).unwrap()));
        // Shrinking back drops the unused vertex.
        let back = big.embed_into(&["a".to_string(), "b".to_string()]).unwrap();
        assert!(back.equals(&small));
        // Dropping a used vertex fails.
        assert!(big.embed_into(&["a".to_string()]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let k = k31();
        let text = k.to_text();
        let back = SimplicialComplex::parse_text(&text).unwrap();
        assert!(back.equals(&k));
        assert_eq!(back.labels(), k.labels());

        let only_empty = SimplicialComplex::parse_text("-\n").unwrap();
        assert_eq!(only_empty.facets(), &[0]);

        let void = SimplicialComplex::parse_text("#universe: p q\n").unwrap();
        assert!(void.is_void());
        assert_eq!(void.universe_size(), 2);

        let headerless = SimplicialComplex::parse_text("1 2\n2 3\n").unwrap();
        assert_eq!(headerless.labels(), &["1", "2", "3"]);

        assert!(SimplicialComplex::parse_text("1 2\n#universe: 1 2\n").is_err());
    }

    #[test]
    fn face_cap_is_enforced() {
        let labels: Vec<String> = (1..=24).map(|i| format!("v{i}")).collect();
        let k = SimplicialComplex::simplex(labels).unwrap();
        assert!(k.all_faces().unwrap_err().is_capacity());
        assert!(k.all_faces_with_cap(24).is_ok());
    }

    proptest! {
        /// Rebuilding a complex from all of its faces changes nothing.
        #[test]
        fn from_facets_idempotent(masks in proptest::collection::vec(0u64..256, 0..12)) {
            let k = SimplicialComplex::from_facets(named(8), masks).unwrap();
            let rebuilt =
                SimplicialComplex::from_facets(named(8), k.all_faces().unwrap()).unwrap();
            prop_assert!(rebuilt.equals(&k));
        }

        /// The census of a join multiplies censuses (face counts multiply).
        #[test]
        fn join_multiplies_face_counts(
            a in proptest::collection::vec(0u64..64, 1..6),
            b in proptest::collection::vec(0u64..16, 1..5),
        ) {
            let ka = SimplicialComplex::from_facets(named(6), a).unwrap();
            let kb = SimplicialComplex::from_facets(
                (7..=10).map(|i| i.to_string()).collect(),
                b,
            ).unwrap();
            let j = ka.join(&kb).unwrap();
            prop_assert_eq!(
                j.all_faces().unwrap().len(),
                ka.all_faces().unwrap().len() * kb.all_faces().unwrap().len()
            );
        }

        /// Deletion and star partition-overlap: every face lies in st(σ) or del(σ).
        #[test]
        fn star_and_deletion_cover(masks in proptest::collection::vec(0u64..256, 1..10), sigma in 0u64..256) {
            let k = SimplicialComplex::from_facets(named(8), masks).unwrap();
            let st = k.star(sigma);
            let del = k.delete_face(sigma);
            for f in k.all_faces().unwrap() {
                prop_assert!(st.is_face(f) || del.is_face(f));
            }
        }
    }
}
