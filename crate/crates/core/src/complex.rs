//! Facet-list representation of finite simplicial complexes and the purely
//! combinatorial operations on them.
//!
//! A [`SimplicialComplex`] is stored as its antichain of facets over a vertex
//! universe `0..n`. Every vertex carries a string label; complexes built
//! without explicit labels use the decimal id. Faces are never stored beyond
//! the facets, the downward closure is implicit.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A face: a strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Face(Vec<VertexId>);

impl Face {
    /// Builds a face from arbitrary vertex ids, sorting and removing duplicates.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    /// Builds a face from ids the caller guarantees are strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The face with its `j`-th smallest vertex removed.
    pub fn without_index(&self, j: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(j);
        Face(v)
    }

    /// All codimension-one subfaces, in the order of the removed vertex.
    pub fn ridges(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.len()).map(move |j| self.without_index(j))
    }

    /// Every subset of the face (including the empty face and the face itself).
    pub fn subsets(&self) -> Vec<Face> {
        let k = self.len();
        assert!(k < 32, "face too large for subset enumeration");
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u32..(1u32 << k) {
            let verts = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.0[i])
                .collect();
            out.push(Face(verts));
        }
        out
    }

    /// Subsets of a fixed cardinality, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(src: &[VertexId], start: usize, size: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Face>) {
            if cur.len() == size {
                out.push(Face(cur.clone()));
                return;
            }
            let need = size - cur.len();
            for i in start..src.len() {
                if src.len() - i < need {
                    break;
                }
                cur.push(src[i]);
                rec(src, i + 1, size, cur, out);
                cur.pop();
            }
        }
        if size <= self.len() {
            rec(&self.0, 0, size, &mut current, &mut out);
        }
        out
    }

    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Vec<VertexId>> for Face {
    fn from(v: Vec<VertexId>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[VertexId; N]> for Face {
    fn from(v: [VertexId; N]) -> Self {
        Face::new(v.to_vec())
    }
}

/// Face counts `f_{-1}, f_0, …, f_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`; zero beyond the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// Reduced Euler characteristic `sum_i (-1)^i f_i` over `i >= -1`.
    pub fn reduced_euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// `h_0..h_d` computed with an explicit `d`. Entries of `f` beyond
    /// `f_{d-1}` are ignored.
    pub fn h_vector_with_d(&self, d: usize) -> HVector {
        let mut h = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut acc: i64 = 0;
            for k in 0..=i {
                let term = binomial((d - k) as u64, (i - k) as u64) as i64 * self.get(k as isize - 1) as i64;
                if (i - k) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            h.push(acc);
        }
        HVector(h)
    }
}

/// `h_0..h_d`; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Orders labels numerically when every label is an integer, lexicographically otherwise.
pub fn compare_labels(labels: &[String]) -> impl Fn(&String, &String) -> Ordering {
    let numeric = labels.iter().all(|l| l.parse::<i64>().is_ok());
    move |a: &String, b: &String| {
        if numeric {
            let (x, y) = (a.parse::<i64>().unwrap(), b.parse::<i64>().unwrap());
            x.cmp(&y)
        } else {
            a.cmp(b)
        }
    }
}

fn sorted_labels(mut labels: Vec<String>) -> Vec<String> {
    labels.sort();
    labels.dedup();
    let cmp = compare_labels(&labels);
    labels.sort_by(|a, b| cmp(a, b));
    labels
}

/// Sorts, deduplicates and removes non-maximal faces. Returns the antichain and
/// how many input faces were dropped.
pub(crate) fn canonical_antichain(mut faces: Vec<Face>) -> (Vec<Face>, usize) {
    let input = faces.len();
    // larger faces first so that containment only needs checking against kept faces
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    let small = faces.iter().all(|f| f.vertices().last().is_none_or(|&v| v < 64));
    if small {
        let mut masks: Vec<u64> = Vec::new();
        for f in faces {
            let m = f.mask();
            if !masks.iter().any(|&k| k & m == m) {
                masks.push(m);
                kept.push(f);
            }
        }
    } else {
        for f in faces {
            if !kept.iter().any(|k| f.is_subset(k)) {
                kept.push(f);
            }
        }
    }
    kept.sort();
    let dropped = input - kept.len();
    (kept, dropped)
}

/// A finite abstract simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
}

/// Output of [`SimplicialComplex::from_facets`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonicalized {
    pub complex: SimplicialComplex,
    /// Input facets dropped because they were duplicates or contained in another facet.
    pub dropped: usize,
}

impl SimplicialComplex {
    /// Builds a complex from facets given as sets of vertex labels. Vertex ids are
    /// assigned in label order (numeric when every label is an integer).
    pub fn from_facets<S: AsRef<str>>(facet_sets: &[Vec<S>]) -> Result<Canonicalized> {
        Self::from_facets_with_universe(facet_sets, &[] as &[&str])
    }

    /// Like [`from_facets`](Self::from_facets), with extra vertex labels that belong to the
    /// universe even when no facet uses them.
    pub fn from_facets_with_universe<S: AsRef<str>, T: AsRef<str>>(
        facet_sets: &[Vec<S>],
        extra_vertices: &[T],
    ) -> Result<Canonicalized> {
        let mut all: Vec<String> = extra_vertices.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, facet) in facet_sets.iter().enumerate() {
            let mut seen = HashSet::new();
            for l in facet {
                let l = l.as_ref();
                if l.is_empty() {
                    return Err(Error::Malformed(format!("facet {i} has an empty vertex label")));
                }
                if !seen.insert(l) {
                    return Err(Error::Malformed(format!("facet {i} repeats vertex `{l}`")));
                }
                all.push(l.to_string());
            }
        }
        let labels = sorted_labels(all);
        let index: HashMap<&str, VertexId> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as VertexId)).collect();
        let faces = facet_sets
            .iter()
            .map(|f| Face::new(f.iter().map(|l| index[l.as_ref()]).collect()))
            .collect();
        let (facets, dropped) = canonical_antichain(faces);
        Ok(Canonicalized {
            complex: SimplicialComplex { labels, facets },
            dropped,
        })
    }

    /// Builds a complex over the universe `0..n` with decimal labels.
    pub fn from_id_facets(n: usize, facets: Vec<Face>) -> Result<Self> {
        if let Some(v) = facets.iter().flat_map(|f| f.vertices().iter()).max() {
            if *v as usize >= n {
                return Err(Error::UniverseTooSmall { n, needed: *v as usize + 1 });
            }
        }
        let (facets, _) = canonical_antichain(facets);
        Ok(SimplicialComplex {
            labels: (0..n).map(|i| i.to_string()).collect(),
            facets,
        })
    }

    /// Same complex with vertex `i` labelled `i + 1`.
    pub fn one_based(&self) -> Self {
        SimplicialComplex {
            labels: (1..=self.n()).map(|i| i.to_string()).collect(),
            facets: self.facets.clone(),
        }
    }

    /// Convenience for tests and the catalog: facets as integer labels.
    pub fn from_int_facets(facets: &[&[i64]]) -> Self {
        let sets: Vec<Vec<String>> = facets.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
        Self::from_facets(&sets).expect("integer facets are well formed").complex
    }

    /// Same labels, new facet list (canonicalized).
    pub(crate) fn with_facets(&self, facets: Vec<Face>) -> Self {
        let (facets, _) = canonical_antichain(facets);
        SimplicialComplex {
            labels: self.labels.clone(),
            facets,
        }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            labels: (0..n).map(|i| i.to_string()).collect(),
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            labels: (0..n).map(|i| i.to_string()).collect(),
            facets: vec![Face::empty()],
        }
    }

    /// Size of the vertex universe.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(|i| i as VertexId)
    }

    /// Resolves a face given by labels.
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::Malformed(format!("unknown vertex `{}`", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Face::new(ids))
    }

    pub fn face_labels(&self, face: &Face) -> Vec<String> {
        face.vertices().iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Largest facet cardinality; 0 for the void and irrelevant complexes.
    pub fn d(&self) -> usize {
        self.facets.iter().map(Face::len).max().unwrap_or(0)
    }

    /// `d - 1`. The void complex also reports -1; use [`is_void`](Self::is_void) to tell it apart.
    pub fn dim(&self) -> isize {
        self.d() as isize - 1
    }

    /// No faces at all.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Only the empty face.
    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.d();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Vertices that occur in some facet.
    pub fn support(&self) -> Face {
        Face::new(self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect())
    }

    /// All faces grouped by cardinality: entry `k` holds the faces with `k` vertices,
    /// sorted lexicographically. Empty for the void complex.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        faces_by_size(&self.facets)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_size().iter().map(|l| l.len() as u64).collect())
    }

    /// h-vector from the f-vector via the alternating binomial transform.
    pub fn h_vector(&self) -> Result<HVector> {
        if self.is_void() {
            return Err(Error::Void);
        }
        Ok(self.f_vector().h_vector_with_d(self.d()))
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().reduced_euler()
    }

    /// Facets of the link of `sigma` in the original vertex ids.
    pub(crate) fn link_facets(&self, sigma: &Face) -> Vec<Face> {
        link_facets(&self.facets, sigma)
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`, re-indexed over its own vertex support.
    pub fn link(&self, sigma: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::FaceNotInComplex(sigma.clone()));
        }
        let facets = self.link_facets(sigma);
        Ok(self.restrict_to_support(facets))
    }

    fn restrict_to_support(&self, facets: Vec<Face>) -> SimplicialComplex {
        let support = Face::new(facets.iter().flat_map(|f| f.vertices().iter().copied()).collect());
        let remap: HashMap<VertexId, VertexId> = support
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        let labels = support.vertices().iter().map(|&v| self.labels[v as usize].clone()).collect();
        let facets = facets
            .into_iter()
            .map(|f| Face::from_sorted(f.vertices().iter().map(|v| remap[v]).collect()))
            .collect();
        let (facets, _) = canonical_antichain(facets);
        SimplicialComplex { labels, facets }
    }

    /// The complex generated by every facet except `facet`. Vertex universe and labels are kept.
    pub fn remove_facet(&self, facet: &Face) -> Result<SimplicialComplex> {
        let pos = self
            .facets
            .binary_search(facet)
            .map_err(|_| Error::NotAFacet(facet.clone()))?;
        let mut facets = self.facets.clone();
        facets.remove(pos);
        Ok(SimplicialComplex {
            labels: self.labels.clone(),
            facets,
        })
    }

    /// Adds a face as a new generator; facets it contains are absorbed.
    pub fn add_facet(&self, face: &Face) -> Result<SimplicialComplex> {
        if let Some(&v) = face.vertices().last() {
            if v as usize >= self.n() {
                return Err(Error::UniverseTooSmall { n: self.n(), needed: v as usize + 1 });
            }
        }
        let mut facets = self.facets.clone();
        facets.push(face.clone());
        Ok(self.with_facets(facets))
    }

    /// `Δ^{(i)}`: all faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        let max = self.dim();
        if self.is_void() || i < -1 || i > max {
            return Err(Error::SkeletonOutOfRange { requested: i, max });
        }
        let size = (i + 1) as usize;
        let mut faces: Vec<Face> = self
            .facets
            .iter()
            .flat_map(|f| if f.len() <= size { vec![f.clone()] } else { f.subsets_of_size(size) })
            .collect();
        faces.sort();
        faces.dedup();
        Ok(self.with_facets(faces))
    }

    /// Join `Δ ⋆ Γ`. Γ's vertices are placed after Δ's; clashing labels of Γ get a `'` suffix.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let offset = self.n() as VertexId;
        let mut labels = self.labels.clone();
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push('\'');
            }
            taken.insert(l.clone());
            labels.push(l);
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut v = f.vertices().to_vec();
                v.extend(g.vertices().iter().map(|w| w + offset));
                facets.push(Face::from_sorted(v));
            }
        }
        let (facets, _) = canonical_antichain(facets);
        SimplicialComplex { labels, facets }
    }

    /// Minimal non-faces, found level by level: a set of size `k` is a candidate
    /// only when all of its `(k-1)`-subsets are faces. Candidates stop at size `d + 1`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let n = self.n() as VertexId;
        if self.is_void() {
            return vec![Face::empty()];
        }
        let mut out = Vec::new();
        let mut level: Vec<Face> = vec![Face::empty()];
        let max_size = self.d() + 1;
        for size in 1..=max_size {
            let level_set: HashSet<&Face> = level.iter().collect();
            let mut next = Vec::new();
            for f in &level {
                let start = f.vertices().last().map_or(0, |&v| v + 1);
                for v in start..n {
                    let mut verts = f.vertices().to_vec();
                    verts.push(v);
                    let cand = Face::from_sorted(verts);
                    let all_sub = size == 1 || cand.ridges().all(|r| level_set.contains(&r));
                    if !all_sub {
                        continue;
                    }
                    if self.contains_face(&cand) {
                        next.push(cand);
                    } else {
                        out.push(cand);
                    }
                }
            }
            level = next;
            if level.is_empty() {
                break;
            }
        }
        out.sort();
        out
    }

    /// `Δ^∨ = {F ⊆ [n] : [n] - F ∉ Δ}`; its facets are complements of minimal non-faces of Δ.
    pub fn alexander_dual(&self, n: usize) -> Result<SimplicialComplex> {
        if n < self.n() {
            let needed = self.support().vertices().last().map_or(0, |&v| v as usize + 1);
            if n < needed {
                return Err(Error::UniverseTooSmall { n, needed });
            }
        }
        let base = self.with_universe(n);
        let full = Face::from_sorted((0..n as VertexId).collect());
        let facets = base.minimal_nonfaces().iter().map(|m| full.difference(m)).collect();
        Ok(base.with_facets(facets))
    }

    /// The same complex over the universe `0..n`, truncating unused trailing vertices or
    /// appending fresh ones.
    pub fn with_universe(&self, n: usize) -> SimplicialComplex {
        let mut labels = self.labels.clone();
        labels.truncate(n);
        let numeric = labels.iter().all(|l| l.parse::<i64>().is_ok());
        let mut taken: HashSet<String> = labels.iter().cloned().collect();
        let mut next = labels.iter().filter_map(|l| l.parse::<i64>().ok()).max().map_or(0, |m| m + 1);
        while labels.len() < n {
            let cand = if numeric { next.to_string() } else { format!("v{next}") };
            next += 1;
            if taken.insert(cand.clone()) {
                labels.push(cand);
            }
        }
        SimplicialComplex {
            labels,
            facets: self.facets.clone(),
        }
    }

    /// Number of facets containing each ridge (face with `d - 1` vertices lying in a `d`-facet).
    pub fn ridge_incidence(&self) -> BTreeMap<Face, usize> {
        let d = self.d();
        let mut counts: BTreeMap<Face, usize> = BTreeMap::new();
        if d == 0 {
            return counts;
        }
        for f in self.facets.iter().filter(|f| f.len() == d) {
            for r in f.ridges() {
                *counts.entry(r).or_default() += 1;
            }
        }
        // a lower-dimensional facet equal to a ridge also counts as containing it
        for f in self.facets.iter().filter(|f| f.len() == d - 1) {
            if let Some(c) = counts.get_mut(f) {
                *c += 1;
            }
        }
        counts
    }

    /// Ridges contained in exactly one facet.
    pub fn boundary_ridges(&self) -> Vec<Face> {
        self.ridge_incidence()
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(r, _)| r)
            .collect()
    }

    pub fn has_no_boundary_ridges(&self) -> bool {
        self.ridge_incidence().values().all(|&c| c != 1)
    }

    /// The subcomplex generated by the boundary ridges; void when there are none.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.with_facets(self.boundary_ridges()))
    }

    /// Number of boundary ridges inside each facet, in canonical facet order.
    pub fn ridges_per_facet(&self) -> Vec<(Face, usize)> {
        let inc = self.ridge_incidence();
        let d = self.d();
        self.facets
            .iter()
            .map(|f| {
                let c = if f.len() == d {
                    f.ridges().filter(|r| inc.get(r) == Some(&1)).count()
                } else {
                    0
                };
                (f.clone(), c)
            })
            .collect()
    }

    /// Facets as nodes, edges between facets sharing a ridge.
    pub fn dual_graph(&self) -> DualGraph {
        let d = self.d();
        let e = self.facets.len();
        let mut adjacency = vec![Vec::new(); e];
        if d > 0 {
            let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
            for (i, f) in self.facets.iter().enumerate() {
                if f.len() == d {
                    for r in f.ridges() {
                        by_ridge.entry(r).or_default().push(i);
                    }
                } else if f.len() + 1 == d {
                    by_ridge.entry(f.clone()).or_default().push(i);
                }
            }
            for ids in by_ridge.values() {
                for a in 0..ids.len() {
                    for b in a + 1..ids.len() {
                        adjacency[ids[a]].push(ids[b]);
                        adjacency[ids[b]].push(ids[a]);
                    }
                }
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        DualGraph { adjacency }
    }

    /// Pure, connected dual graph, and every ridge in exactly two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        !self.is_void()
            && self.d() > 0
            && self.is_pure()
            && self.dual_graph().is_connected()
            && self.ridge_incidence().values().all(|&c| c == 2)
    }

    /// Union of two complexes, identifying vertices with equal labels.
    pub fn glue(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut labels: Vec<String> = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        labels = sorted_labels(labels);
        let index: HashMap<&str, VertexId> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as VertexId)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| self.translate(f, &index))
            .chain(other.facets.iter().map(|f| other.translate(f, &index)))
            .collect();
        let (facets, _) = canonical_antichain(facets);
        SimplicialComplex { labels, facets }
    }

    /// Faces lying in both complexes, matched by label. The universe is the set of shared labels.
    pub fn intersect(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let theirs: HashSet<&str> = other.labels.iter().map(String::as_str).collect();
        let labels = sorted_labels(self.labels.iter().filter(|l| theirs.contains(l.as_str())).cloned().collect());
        let index: HashMap<&str, VertexId> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as VertexId)).collect();
        let restrict = |c: &SimplicialComplex, f: &Face| -> Face {
            Face::new(
                f.vertices()
                    .iter()
                    .filter_map(|&v| index.get(c.labels[v as usize].as_str()).copied())
                    .collect(),
            )
        };
        let mine: Vec<Face> = self.facets.iter().map(|f| restrict(self, f)).collect();
        let other_faces: Vec<Face> = other.facets.iter().map(|f| restrict(other, f)).collect();
        let mut facets = Vec::new();
        // a face in both must avoid unshared vertices, so it lies in the restricted facets
        for f in &mine {
            for g in &other_faces {
                facets.push(f.intersection(g));
            }
        }
        let (facets, _) = canonical_antichain(facets);
        SimplicialComplex { labels, facets }
    }

    fn translate(&self, f: &Face, index: &HashMap<&str, VertexId>) -> Face {
        Face::new(f.vertices().iter().map(|&v| index[self.labels[v as usize].as_str()]).collect())
    }

    /// Subcomplex induced on a vertex subset.
    pub fn induced(&self, vertices: &Face) -> SimplicialComplex {
        let facets = if self.is_void() {
            Vec::new()
        } else {
            self.facets.iter().map(|f| f.intersection(vertices)).collect()
        };
        self.with_facets(facets)
    }

    /// True when the facets of `sub` are facets of `self` (compared by label).
    pub fn is_facet_subcomplex(&self, sub: &SimplicialComplex) -> bool {
        sub.facets.iter().all(|f| {
            self.face_from_labels(&sub.face_labels(f))
                .map(|g| self.is_facet(&g))
                .unwrap_or(false)
        })
    }

    /// Re-expresses the facets of `sub` in this complex's vertex ids.
    pub fn translate_facets(&self, sub: &SimplicialComplex) -> Result<Vec<Face>> {
        sub.facets.iter().map(|f| self.face_from_labels(&sub.face_labels(f))).collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "<void>");
        }
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", self.face_labels(facet).join(","))?;
        }
        write!(f, ">")
    }
}

/// Facet adjacency through shared ridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adjacency.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }
}

pub(crate) fn faces_by_size(facets: &[Face]) -> Vec<Vec<Face>> {
    let d = facets.iter().map(Face::len).max();
    let Some(d) = d else { return Vec::new() };
    let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); d + 1];
    for f in facets {
        for s in f.subsets() {
            sets[s.len()].insert(s);
        }
    }
    sets.into_iter()
        .map(|s| {
            let mut v: Vec<Face> = s.into_iter().collect();
            v.sort();
            v
        })
        .collect()
}

pub(crate) fn link_facets(facets: &[Face], sigma: &Face) -> Vec<Face> {
    let faces: Vec<Face> = facets
        .iter()
        .filter(|f| sigma.is_subset(f))
        .map(|f| f.difference(sigma))
        .collect();
    // facets containing σ stay incomparable after removing σ
    let mut faces = faces;
    faces.sort();
    faces
}
