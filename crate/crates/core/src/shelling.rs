//! Shelling moves, "shelled over" search and the reduction of a CM complex to a
//! minimal CM complex it is shelled over.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cm::is_cm_facets;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::io::ComplexDocument;

/// `⟨F⟩ ∩ ⟨others⟩` is pure of dimension `|F| - 2`. Attaching to nothing always succeeds.
pub(crate) fn attaches_cleanly<'a>(facet: &Face, others: impl IntoIterator<Item = &'a Face>) -> bool {
    let target = facet.len().saturating_sub(1);
    let mut meets: Vec<Face> = Vec::new();
    let mut any = false;
    for g in others {
        any = true;
        meets.push(facet.intersection(g));
    }
    if !any {
        return true;
    }
    if facet.is_empty() {
        return false;
    }
    let ridges: Vec<&Face> = meets.iter().filter(|m| m.len() == target).collect();
    if ridges.is_empty() {
        return false;
    }
    meets.iter().all(|m| ridges.iter().any(|r| m.is_subset(r)))
}

/// Whether going from `Δ_F` to `Δ` is a shelling move.
pub fn is_shelling_move(complex: &SimplicialComplex, facet: &Face) -> Result<bool> {
    if !complex.is_facet(facet) {
        return Err(Error::NotAFacet(facet.clone()));
    }
    Ok(attaches_cleanly(facet, complex.facets().iter().filter(|g| *g != facet)))
}

/// A sequence of shelling moves taking `base` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub base: SimplicialComplex,
    pub moves: Vec<Face>,
    pub target: SimplicialComplex,
}

impl ShellingCertificate {
    /// Re-applies the moves to the base, checking every step and the final complex.
    pub fn replay(&self) -> Result<()> {
        let mut current: Vec<Face> = self.base.facets().to_vec();
        for (i, f) in self.moves.iter().enumerate() {
            if current.contains(f) {
                return Err(Error::Invariant(format!("move {i} re-adds facet {f}")));
            }
            if !attaches_cleanly(f, current.iter()) {
                return Err(Error::Invariant(format!("move {i} ({f}) is not a shelling move")));
            }
            current.push(f.clone());
        }
        let replayed = self.base.with_facets(current);
        if replayed != self.target {
            return Err(Error::Invariant("replayed complex differs from the target".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn to_document(&self) -> CertificateDocument {
        CertificateDocument {
            base: ComplexDocument::from_complex(&self.base),
            moves: self.moves.iter().map(|f| self.target.face_labels(f)).collect(),
            target: ComplexDocument::from_complex(&self.target),
        }
    }

    pub fn from_document(doc: &CertificateDocument) -> Result<Self> {
        let base = doc.base.to_complex()?;
        let target = doc.target.to_complex()?;
        let moves = doc
            .moves
            .iter()
            .map(|m| target.face_from_labels(m))
            .collect::<Result<Vec<_>>>()?;
        let base = target.with_facets(target.translate_facets(&base)?);
        Ok(ShellingCertificate { base, moves, target })
    }
}

/// Serialized certificate: base facets, ordered moves, target facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub base: ComplexDocument,
    pub moves: Vec<Vec<String>>,
    pub target: ComplexDocument,
}

/// Greedily removes the canonically first facet whose removal stays CM until none
/// exists. Returns the minimal CM complex reached and the certificate that shells
/// it back up to the input.
pub fn reduce_to_minimal(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<(SimplicialComplex, ShellingCertificate)> {
    if !is_cm_facets(complex.facets(), field) {
        return Err(Error::NotCohenMacaulay(field.to_string()));
    }
    let mut current: Vec<Face> = complex.facets().to_vec();
    let mut removed: Vec<Face> = Vec::new();
    loop {
        let pick = current.par_iter().position_first(|f| {
            let rest: Vec<Face> = current.iter().filter(|g| *g != f).cloned().collect();
            is_cm_facets(&rest, field)
        });
        let Some(i) = pick else { break };
        let f = current.remove(i);
        // every CM complex satisfies (S_2), so each removal must undo a shelling move
        if !attaches_cleanly(&f, current.iter()) {
            return Err(Error::Invariant(format!("removing {f} is not the inverse of a shelling move")));
        }
        removed.push(f);
    }
    removed.reverse();
    let minimal = complex.with_facets(current);
    let cert = ShellingCertificate {
        base: minimal.clone(),
        moves: removed,
        target: complex.clone(),
    };
    Ok((minimal, cert))
}

struct Search<'a> {
    extra: &'a [Face],
    visited: HashSet<Vec<u64>>,
}

impl Search<'_> {
    fn run(&mut self, current: &mut Vec<Face>, used: &mut Vec<u64>, order: &mut Vec<usize>) -> bool {
        if order.len() == self.extra.len() {
            return true;
        }
        if !self.visited.insert(used.clone()) {
            return false;
        }
        for i in 0..self.extra.len() {
            if used[i / 64] & (1 << (i % 64)) != 0 {
                continue;
            }
            let f = &self.extra[i];
            if !attaches_cleanly(f, current.iter()) {
                continue;
            }
            used[i / 64] |= 1 << (i % 64);
            current.push(f.clone());
            order.push(i);
            if self.run(current, used, order) {
                return true;
            }
            order.pop();
            current.pop();
            used[i / 64] &= !(1 << (i % 64));
        }
        false
    }
}

/// Searches for a sequence of shelling moves from `base` to `complex`. The facets of
/// `base` must be facets of `complex` (matched by label). Exhaustive, with failed
/// intermediate facet sets memoised.
pub fn shelled_over(complex: &SimplicialComplex, base: &SimplicialComplex) -> Result<Option<ShellingCertificate>> {
    if !complex.is_facet_subcomplex(base) {
        return Err(Error::NotFacetSubcomplex(base.to_string()));
    }
    let base_facets = complex.translate_facets(base)?;
    let base = complex.with_facets(base_facets.clone());
    let extra: Vec<Face> = complex
        .facets()
        .iter()
        .filter(|f| !base_facets.contains(f))
        .cloned()
        .collect();
    let mut search = Search {
        extra: &extra,
        visited: HashSet::new(),
    };
    let mut current = base_facets;
    let mut used = vec![0u64; extra.len().div_ceil(64).max(1)];
    let mut order = Vec::new();
    if !search.run(&mut current, &mut used, &mut order) {
        return Ok(None);
    }
    Ok(Some(ShellingCertificate {
        base,
        moves: order.into_iter().map(|i| extra[i].clone()).collect(),
        target: complex.clone(),
    }))
}

/// A shelling of a pure complex, i.e. a certificate that it is shelled over the void complex.
pub fn is_shellable(complex: &SimplicialComplex) -> Result<Option<ShellingCertificate>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    shelled_over(complex, &complex.with_facets(Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(f: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_int_facets(f)
    }

    fn face(c: &SimplicialComplex, l: &[i64]) -> Face {
        let l: Vec<String> = l.iter().map(|v| v.to_string()).collect();
        c.face_from_labels(&l).unwrap()
    }

    #[test]
    fn shelling_move_cases() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(is_shelling_move(&c, &face(&c, &[2, 3, 4])).unwrap());
        let bowtie = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(!is_shelling_move(&bowtie, &face(&bowtie, &[3, 4, 5])).unwrap());
        assert!(is_shelling_move(&c, &face(&c, &[2, 3])).is_err());
        let single = cx(&[&[1, 2, 3]]);
        assert!(is_shelling_move(&single, &single.facets()[0].clone()).unwrap());
    }

    #[test]
    fn simplex_reduces_to_void() {
        let s = cx(&[&[1, 2, 3]]);
        let (m, cert) = reduce_to_minimal(&s, FieldSpec::Rational).unwrap();
        assert!(m.is_void());
        assert_eq!(cert.len(), 1);
        cert.replay().unwrap();
    }

    #[test]
    fn reduce_rejects_non_cm() {
        let bowtie = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(matches!(reduce_to_minimal(&bowtie, FieldSpec::Rational), Err(Error::NotCohenMacaulay(_))));
    }

    #[test]
    fn shelled_over_cases() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(shelled_over(&c, &c).unwrap().unwrap().is_empty());
        let bowtie = cx(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(shelled_over(&bowtie, &cx(&[&[1, 2, 3]])).unwrap().is_none());
        assert!(shelled_over(&bowtie, &cx(&[&[1, 2, 4]])).is_err());
    }

    #[test]
    fn shellable_requires_pure() {
        assert_eq!(is_shellable(&cx(&[&[1, 2, 3], &[3, 4]])), Err(Error::NotPure));
        let cert = is_shellable(&cx(&[&[1, 2, 3], &[2, 3, 4]])).unwrap().unwrap();
        assert_eq!(cert.len(), 2);
        cert.replay().unwrap();
    }

    #[test]
    fn tampered_certificate_fails_replay() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4], &[4, 5, 6]]);
        let cert = ShellingCertificate {
            base: c.with_facets(vec![]),
            moves: c.facets().to_vec(),
            target: c.clone(),
        };
        assert!(cert.replay().is_err());
    }
}
