//! Depth, Cohen-Macaulayness, Serre's condition and the minimality verdicts.
//!
//! Everything here reduces to vanishing of reduced homology of links: depth is
//! the least `i + |T|` with `H̃_{i-1}(lk T) ≠ 0`, capped at `d`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{self, homology_of_facets, BettiVector};

/// A link with nonvanishing homology below the Cohen-Macaulay range:
/// `H̃_degree(lk face) ≠ 0` with `degree < d - |face| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmWitness {
    pub face: Face,
    pub degree: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CMReport {
    pub field: FieldSpec,
    pub depth: usize,
    pub is_cm: bool,
    pub witness: Option<CmWitness>,
}

/// Link homology memoised on the link's facet list.
#[derive(Default)]
struct LinkCache {
    map: HashMap<Vec<Face>, BettiVector>,
}

impl LinkCache {
    fn get(&mut self, facets: &[Face], sigma: &Face, field: FieldSpec) -> BettiVector {
        let link = crate::complex::link_facets(facets, sigma);
        if let Some(b) = self.map.get(&link) {
            return b.clone();
        }
        let b = homology_of_facets(&link, field);
        self.map.insert(link, b.clone());
        b
    }
}

fn depth_with_cache(complex: &SimplicialComplex, field: FieldSpec, cache: &mut LinkCache) -> usize {
    let d = complex.d();
    let mut best = d;
    for (size, level) in complex.faces_by_size().iter().enumerate() {
        if size >= best {
            break;
        }
        for t in level {
            let h = cache.get(complex.facets(), t, field);
            if let Some(j) = h.lowest_nonzero() {
                best = best.min((j + 1) as usize + size);
            }
        }
    }
    best
}

/// Largest `ℓ` such that `H̃_{i-1}(lk T) = 0` whenever `i + |T| < ℓ`.
pub fn depth(complex: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    if complex.is_void() {
        return Err(Error::Void);
    }
    Ok(depth_with_cache(complex, field, &mut LinkCache::default()))
}

/// `max{ i : Δ^{(i-1)} is CM }`, an independent route to the depth.
pub fn depth_via_skeletons(complex: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    if complex.is_void() {
        return Err(Error::Void);
    }
    let mut best = 0;
    for i in 0..=complex.d() {
        let skel = complex.skeleton(i as isize - 1)?;
        if cm_violation(skel.facets(), field).is_none() {
            best = i;
        }
    }
    Ok(best)
}

/// First violating link, checking the empty face and then faces by decreasing size.
fn cm_violation(facets: &[Face], field: FieldSpec) -> Option<CmWitness> {
    if facets.is_empty() || (facets.len() == 1 && facets[0].is_empty()) {
        return None;
    }
    let d = facets.iter().map(Face::len).max().unwrap_or(0);
    let pure_size = facets.iter().map(Face::len).min().unwrap_or(0);
    let check = |t: &Face| -> Option<CmWitness> {
        let h = homology_of_facets(&crate::complex::link_facets(facets, t), field);
        let bound = d as isize - t.len() as isize - 1;
        h.lowest_nonzero()
            .filter(|&j| j < bound)
            .map(|j| CmWitness { face: t.clone(), degree: j })
    };
    if let Some(w) = check(&Face::empty()) {
        return Some(w);
    }
    if pure_size < d {
        // a small facet has link {∅}
        let f = facets.iter().find(|f| f.len() < d).unwrap();
        return Some(CmWitness { face: f.clone(), degree: -1 });
    }
    let levels = crate::complex::faces_by_size(facets);
    for level in levels.iter().skip(1).rev() {
        for t in level {
            if let Some(w) = check(t) {
                return Some(w);
            }
        }
    }
    None
}

pub(crate) fn is_cm_facets(facets: &[Face], field: FieldSpec) -> bool {
    cm_violation(facets, field).is_none()
}

/// Cohen-Macaulay verdict with depth and, when not CM, a violating link.
/// The void and irrelevant complexes are CM.
pub fn is_cm(complex: &SimplicialComplex, field: FieldSpec) -> CMReport {
    if complex.is_void() {
        return CMReport { field, depth: 0, is_cm: true, witness: None };
    }
    let witness = cm_violation(complex.facets(), field);
    let depth = depth_with_cache(complex, field, &mut LinkCache::default());
    CMReport {
        field,
        depth,
        is_cm: witness.is_none(),
        witness,
    }
}

/// Serre's condition `(S_ℓ)`: `H̃_{i-1}(lk T) = 0` whenever `i + |T| < d` and `0 <= i < ℓ`.
pub fn satisfies_serre(complex: &SimplicialComplex, field: FieldSpec, l: usize) -> Result<bool> {
    if l == 0 {
        return Err(Error::InvalidArgument("Serre's condition needs l >= 1".into()));
    }
    if l == 1 || complex.is_void() {
        return Ok(true);
    }
    let d = complex.d();
    let mut cache = LinkCache::default();
    for (size, level) in complex.faces_by_size().iter().enumerate() {
        if size >= d {
            break;
        }
        for t in level {
            let h = cache.get(complex.facets(), t, field);
            // i ranges over 0..l with i + size < d
            let limit = l.min(d - size);
            if (0..limit).any(|i| h.get(i as isize - 1) != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Fast minimality certificate: the complex is `ℓ`-fold acyclic and CM, and no facet
/// contains more than `ℓ - 1` boundary ridges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RidgeBoundCertificate {
    pub l: usize,
    pub max_boundary_ridges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub field: FieldSpec,
    pub is_cm: bool,
    pub is_minimal: bool,
    /// Facets whose removal keeps the complex CM. Only computed for CM inputs
    /// without a fast-path certificate.
    pub removable_facets: Vec<Face>,
    pub fast_path: Option<RidgeBoundCertificate>,
}

fn ridge_bound_certificate(complex: &SimplicialComplex, field: FieldSpec) -> Option<RidgeBoundCertificate> {
    if complex.is_void() || complex.is_irrelevant() {
        return None;
    }
    let max_b = complex.ridges_per_facet().iter().map(|(_, c)| *c).max().unwrap_or(0);
    let l = max_b + 1;
    homology::is_l_fold_acyclic(complex, field, l)
        .ok()
        .filter(|&ok| ok)
        .map(|_| RidgeBoundCertificate { l, max_boundary_ridges: max_b })
}

/// Facets whose removal leaves a CM complex, in canonical order. Checks run in parallel.
pub fn removable_facets(complex: &SimplicialComplex, field: FieldSpec) -> Vec<Face> {
    complex
        .facets()
        .par_iter()
        .filter(|f| {
            let rest: Vec<Face> = complex.facets().iter().filter(|g| g != f).cloned().collect();
            is_cm_facets(&rest, field)
        })
        .cloned()
        .collect()
}

/// CM, and removing any single facet destroys CM-ness.
pub fn is_minimal_cm(complex: &SimplicialComplex, field: FieldSpec, use_fast_path: bool) -> MinimalityReport {
    let cm = cm_violation(complex.facets(), field).is_none();
    let mut report = MinimalityReport {
        field,
        is_cm: cm,
        is_minimal: false,
        removable_facets: Vec::new(),
        fast_path: None,
    };
    if !cm {
        return report;
    }
    if use_fast_path {
        if let Some(cert) = ridge_bound_certificate(complex, field) {
            report.is_minimal = true;
            report.fast_path = Some(cert);
            return report;
        }
    }
    report.removable_facets = removable_facets(complex, field);
    report.is_minimal = report.removable_facets.is_empty();
    report
}

/// CM, and removing any single facet keeps it CM.
pub fn is_strongly_cm(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    if !is_cm_facets(complex.facets(), field) {
        return false;
    }
    removable_facets(complex, field).len() == complex.num_facets()
}

/// Outcome of the boundary-ridge test for one facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RidgeBoundCheck {
    /// Removing the facet is certified to destroy CM-ness. `h_top` is
    /// `h_{d-j}(lk_{Δ_F}(σ))`, which the argument forces to be -1.
    Certified {
        sigma: Face,
        l: usize,
        link_d: usize,
        h_top: i64,
    },
    Inapplicable(String),
}

impl RidgeBoundCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, RidgeBoundCheck::Certified { .. })
    }
}

/// For a facet `F` with `j` boundary ridges: if Δ is CM and `(j + 1)`-fold acyclic,
/// then `Δ_F` is not CM, witnessed by a negative top h-entry of `lk_{Δ_F}(σ)` where
/// `σ` collects the vertices opposite the boundary ridges of `F`.
pub fn ridge_bound_check(complex: &SimplicialComplex, field: FieldSpec, facet: &Face) -> Result<RidgeBoundCheck> {
    if !complex.is_facet(facet) {
        return Err(Error::NotAFacet(facet.clone()));
    }
    let inc = complex.ridge_incidence();
    let boundary: Vec<Face> = facet.ridges().filter(|r| inc.get(r) == Some(&1)).collect();
    let j = boundary.len();
    let l = j + 1;
    if !is_cm_facets(complex.facets(), field) {
        return Ok(RidgeBoundCheck::Inapplicable("complex is not CM".into()));
    }
    if !homology::is_l_fold_acyclic(complex, field, l)? {
        return Ok(RidgeBoundCheck::Inapplicable(format!("complex is not {l}-fold acyclic")));
    }
    let sigma = Face::new(boundary.iter().flat_map(|r| facet.difference(r).vertices().to_vec()).collect());
    let rest = complex.remove_facet(facet)?;
    let link = rest.link_facets(&sigma);
    let f = FVector(crate::complex::faces_by_size(&link).iter().map(|l| l.len() as u64).collect());
    let link_d = complex.d() - j;
    let h = f.h_vector_with_d(link_d);
    Ok(RidgeBoundCheck::Certified {
        sigma,
        l,
        link_d,
        h_top: *h.0.last().unwrap(),
    })
}

/// A facet from the support of a nonzero top cycle, with the depth before and after
/// removing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopCycleRemoval {
    pub facet: Face,
    pub depth_before: usize,
    pub depth_after: usize,
}

/// When `H̃_{d-1} ≠ 0`, removes the first facet in a top cycle's support. Removing it
/// leaves the `(d-2)`-skeleton intact, so depth and lower homology are unchanged.
pub fn top_cycle_facet(complex: &SimplicialComplex, field: FieldSpec) -> Option<TopCycleRemoval> {
    let cycle = homology::top_cycle(complex, field)?;
    let facet = cycle.terms.first()?.0.clone();
    let rest = complex.remove_facet(&facet).ok()?;
    debug_assert_eq!(
        complex.skeleton(complex.dim() - 1).ok(),
        rest.skeleton(complex.dim() - 1).ok()
    );
    Some(TopCycleRemoval {
        depth_before: depth(complex, field).ok()?,
        depth_after: depth(&rest, field).ok()?,
        facet,
    })
}

/// Facets `F` whose boundary ridges form a proper non-empty set and cover `⟨F⟩ ∩ ∂Δ`.
pub fn free_facets(complex: &SimplicialComplex) -> Result<Vec<Face>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let d = complex.d();
    let boundary = complex.boundary_ridges();
    let mut out = Vec::new();
    for f in complex.facets() {
        let own: Vec<&Face> = boundary.iter().filter(|r| r.is_subset(f)).collect();
        if own.is_empty() || own.len() >= d {
            continue;
        }
        let covered = boundary.iter().all(|r| {
            let meet = r.intersection(f);
            own.iter().any(|o| meet.is_subset(o))
        });
        if covered {
            out.push(f.clone());
        }
    }
    Ok(out)
}

pub fn free_facet(complex: &SimplicialComplex) -> Result<Option<Face>> {
    Ok(free_facets(complex)?.into_iter().next())
}

/// No free facet and more than one facet.
pub fn is_strongly_nonshellable(complex: &SimplicialComplex) -> Result<bool> {
    Ok(complex.num_facets() > 1 && free_facets(complex)?.is_empty())
}

/// Necessary conditions for a complex to be a ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallCheck {
    pub pure: bool,
    pub acyclic: bool,
    pub ridges_in_at_most_two_facets: bool,
    pub dual_graph_connected: bool,
    pub boundary_nonempty: bool,
    pub boundary_is_homology_sphere: bool,
}

impl BallCheck {
    pub fn passes(&self) -> bool {
        self.pure
            && self.acyclic
            && self.ridges_in_at_most_two_facets
            && self.dual_graph_connected
            && self.boundary_nonempty
            && self.boundary_is_homology_sphere
    }
}

pub fn check_ball_necessary(complex: &SimplicialComplex, field: FieldSpec) -> BallCheck {
    let pure = complex.is_pure();
    let boundary = complex.with_facets(complex.boundary_ridges());
    let bh = homology::reduced_homology(&boundary, field);
    let top = complex.dim() - 1;
    let sphere = !boundary.is_void() && bh.0.iter().enumerate().all(|(k, &b)| b == usize::from(k as isize - 1 == top));
    BallCheck {
        pure,
        acyclic: !complex.is_void() && homology::is_acyclic(complex, field),
        ridges_in_at_most_two_facets: complex.ridge_incidence().values().all(|&c| c <= 2),
        dual_graph_connected: complex.dual_graph().is_connected(),
        boundary_nonempty: !boundary.is_void(),
        boundary_is_homology_sphere: sphere && bh.get(top) == 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(f: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_int_facets(f)
    }

    #[test]
    fn depth_small_cases() {
        assert_eq!(depth(&cx(&[&[1], &[2]]), FieldSpec::Rational).unwrap(), 1);
        let bowtie = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(depth(&bowtie, FieldSpec::Rational).unwrap(), 2);
        assert_eq!(depth_via_skeletons(&bowtie, FieldSpec::Rational).unwrap(), 2);
        assert!(depth(&SimplicialComplex::void(2), FieldSpec::Rational).is_err());
    }

    #[test]
    fn simplex_is_cm_not_minimal() {
        let s = cx(&[&[1, 2, 3]]);
        let r = is_cm(&s, FieldSpec::Rational);
        assert!(r.is_cm);
        assert_eq!(r.depth, 3);
        let m = is_minimal_cm(&s, FieldSpec::Rational, true);
        assert!(!m.is_minimal);
        assert_eq!(m.removable_facets.len(), 1);
        assert!(is_strongly_cm(&s, FieldSpec::Rational));
    }

    #[test]
    fn conventions_for_void_and_irrelevant() {
        assert!(is_cm(&SimplicialComplex::void(0), FieldSpec::Rational).is_cm);
        assert!(is_cm(&SimplicialComplex::irrelevant(0), FieldSpec::Rational).is_cm);
    }

    #[test]
    fn serre_cases() {
        let bowtie = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(satisfies_serre(&bowtie, FieldSpec::Rational, 1).unwrap());
        assert!(!satisfies_serre(&bowtie, FieldSpec::Rational, 2).unwrap());
        let nonpure = cx(&[&[1, 2, 3], &[3, 4]]);
        assert!(!satisfies_serre(&nonpure, FieldSpec::Rational, 2).unwrap());
        assert!(satisfies_serre(&nonpure, FieldSpec::Rational, 0).is_err());
    }

    #[test]
    fn circle_is_strongly_cm() {
        let c = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_strongly_cm(&c, FieldSpec::Rational));
        assert!(!is_minimal_cm(&c, FieldSpec::Rational, false).is_minimal);
    }

    #[test]
    fn free_facet_of_two_triangles() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let f = free_facet(&c).unwrap().unwrap();
        assert_eq!(c.face_labels(&f), vec!["1", "2", "3"]);
        assert!(!is_strongly_nonshellable(&c).unwrap());
        assert!(!is_strongly_nonshellable(&cx(&[&[1, 2, 3]])).unwrap());
        assert_eq!(free_facets(&cx(&[&[1, 2, 3], &[3, 4]])), Err(Error::NotPure));
    }

    #[test]
    fn ridge_bound_inapplicable_on_sphere() {
        let s = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let r = ridge_bound_check(&s, FieldSpec::Rational, &s.facets()[0].clone()).unwrap();
        assert!(!r.is_certified());
    }

    #[test]
    fn ball_check_on_triangle_pair() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(check_ball_necessary(&c, FieldSpec::Rational).passes());
        let sphere = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let r = check_ball_necessary(&sphere, FieldSpec::Rational);
        assert!(!r.boundary_nonempty);
        assert!(!r.passes());
    }
}
