//! Squarefree monomial ideals attached to a complex through Alexander duality:
//! graded Betti numbers by Hochster's formula, linear resolutions, linear
//! quotients, and colon ideals by a monomial.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{canonical_antichain, Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::homology_of_facets;

/// A squarefree monomial ideal in `k[x_0..x_{n-1}]`, stored by the supports of its
/// minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquarefreeIdeal {
    pub n: usize,
    pub generators: Vec<Face>,
}

impl SquarefreeIdeal {
    /// Keeps only minimal supports.
    pub fn new(n: usize, generators: Vec<Face>) -> Result<Self> {
        if let Some(&v) = generators.iter().flat_map(|g| g.vertices().iter()).max() {
            if v as usize >= n {
                return Err(Error::UniverseTooSmall { n, needed: v as usize + 1 });
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Face> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.is_subset(g)))
            .cloned()
            .collect();
        Ok(SquarefreeIdeal { n, generators: minimal })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Contains the monomial 1.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Face::is_empty)
    }

    pub fn is_degenerate(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    /// The common generator degree, if all generators have the same degree.
    pub fn generator_degree(&self) -> Option<usize> {
        let first = self.generators.first()?.len();
        self.generators.iter().all(|g| g.len() == first).then_some(first)
    }

    /// The complex whose minimal non-faces are the generators.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let full = Face::from_sorted((0..self.n as VertexId).collect());
        let complements: Vec<Face> = self.generators.iter().map(|g| full.difference(g)).collect();
        SimplicialComplex::from_id_facets(self.n, complements)
            .and_then(|c| c.alexander_dual(self.n))
            .expect("generators lie in the universe")
    }
}

/// `I_{Δ^∨}`: generated by `∏_{i ∉ F} x_i` for each facet `F` of Δ.
pub fn dual_ideal(complex: &SimplicialComplex, n: usize) -> Result<SquarefreeIdeal> {
    if complex.is_void() {
        return Err(Error::Void);
    }
    let needed = complex.support().vertices().last().map_or(0, |&v| v as usize + 1);
    if n < needed {
        return Err(Error::UniverseTooSmall { n, needed });
    }
    let full = Face::from_sorted((0..n as VertexId).collect());
    SquarefreeIdeal::new(n, complex.facets().iter().map(|f| full.difference(f)).collect())
}

/// Graded Betti numbers `β_{i,j}` of the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Rows as `(i, j, β_{i,j})` with nonzero values.
    pub fn rows(&self) -> Vec<(usize, usize, usize)> {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect()
    }
}

/// Hochster's formula: `β_{i,j}(I_Γ) = Σ_{|W| = j} dim H̃_{j-i-2}(Γ_W)`.
pub fn betti_table(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal("zero ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal("unit ideal".into()));
    }
    let n = ideal.n;
    if n >= 26 {
        return Err(Error::TooLarge(format!("Hochster sum over 2^{n} vertex subsets")));
    }
    let gamma = ideal.stanley_reisner_complex();
    let facets = gamma.facets().to_vec();
    let partial: Vec<BTreeMap<(usize, usize), usize>> = (1u32..(1u32 << n))
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, mask| {
            let w = Face::from_sorted((0..n as VertexId).filter(|&v| mask & (1 << v) != 0).collect());
            let j = w.len();
            let (induced, _) = canonical_antichain(facets.iter().map(|f| f.intersection(&w)).collect());
            let h = homology_of_facets(&induced, field);
            for (k, &b) in h.0.iter().enumerate() {
                // slot k holds H̃_{k-1}, so i = j - (k - 1) - 2
                if b > 0 && j > k {
                    *acc.entry((j - k - 1, j)).or_insert(0) += b;
                }
            }
            acc
        })
        .collect();
    let mut table = BettiTable::default();
    for m in partial {
        for (k, v) in m {
            *table.entries.entry(k).or_insert(0) += v;
        }
    }
    Ok(table)
}

/// Every nonzero `β_{i,j}` sits at `j = i + c` where `c` is the generator degree.
/// Ideals with mixed generator degrees never have a linear resolution.
pub fn has_linear_resolution(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_degenerate() {
        return Err(Error::DegenerateIdeal("resolution of a zero or unit ideal".into()));
    }
    let Some(c) = ideal.generator_degree() else { return Ok(false) };
    let table = betti_table(ideal, field)?;
    Ok(table.entries.keys().all(|&(i, j)| j == i + c))
}

/// Minimal generators of `(gens) : m`, as supports.
pub fn colon_generators<'a>(gens: impl IntoIterator<Item = &'a Face>, monomial: &Face) -> Vec<Face> {
    let quotients: Vec<Face> = gens.into_iter().map(|g| g.difference(monomial)).collect();
    let mut q = quotients;
    q.sort();
    q.dedup();
    q.iter()
        .filter(|g| !q.iter().any(|h| h != *g && h.is_subset(g)))
        .cloned()
        .collect()
}

fn colon_is_linear<'a>(gens: impl IntoIterator<Item = &'a Face>, monomial: &Face) -> bool {
    colon_generators(gens, monomial).iter().all(|g| g.len() == 1)
}

/// `(I : f)` is generated by variables, where `f = ∏_{i ∈ [n] - F} x_i`.
pub fn colon_is_degree_one(ideal: &SquarefreeIdeal, face: &Face, n: usize) -> bool {
    let full = Face::from_sorted((0..n as VertexId).collect());
    colon_is_linear(ideal.generators.iter(), &full.difference(face))
}

/// `(I_{(Δ_F)^∨} : x^{[n]-F})` is generated by variables: the algebraic form of the
/// shelling-move test for adding `F` back to `Δ_F`. The colon of the zero ideal (when
/// `F` is the only facet) counts as generated by variables.
pub fn facet_colon_is_degree_one(complex: &SimplicialComplex, facet: &Face) -> Result<bool> {
    if !complex.is_facet(facet) {
        return Err(Error::NotAFacet(facet.clone()));
    }
    let full = Face::from_sorted((0..complex.n() as VertexId).collect());
    let others: Vec<Face> = complex
        .facets()
        .iter()
        .filter(|g| *g != facet)
        .map(|g| full.difference(g))
        .collect();
    Ok(colon_is_linear(others.iter(), &full.difference(facet)))
}

/// An order `m_1, …, m_e` of the generators such that each `(m_1..m_{j-1}) : m_j` is
/// generated by variables, found by backtracking in lexicographic order.
pub fn has_linear_quotients(ideal: &SquarefreeIdeal) -> Result<Option<Vec<Face>>> {
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal("unit ideal".into()));
    }
    if ideal.generator_degree().is_none() && !ideal.is_zero() {
        return Ok(None);
    }
    let gens = &ideal.generators;
    let mut order: Vec<usize> = Vec::new();
    let mut used = vec![false; gens.len()];
    let mut dead: HashSet<Vec<bool>> = HashSet::new();
    fn rec(
        gens: &[Face],
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        dead: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if order.len() == gens.len() {
            return true;
        }
        if dead.contains(used) {
            return false;
        }
        for i in 0..gens.len() {
            if used[i] {
                continue;
            }
            let ok = order.is_empty() || colon_is_linear(order.iter().map(|&k| &gens[k]), &gens[i]);
            if !ok {
                continue;
            }
            used[i] = true;
            order.push(i);
            if rec(gens, order, used, dead) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        dead.insert(used.clone());
        false
    }
    if rec(gens, &mut order, &mut used, &mut dead) {
        Ok(Some(order.into_iter().map(|i| gens[i].clone()).collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(n, gens.iter().map(|g| Face::new(g.to_vec())).collect()).unwrap()
    }

    #[test]
    fn dual_ideal_of_path() {
        let c = SimplicialComplex::from_int_facets(&[&[1, 2], &[2, 3]]);
        let i = dual_ideal(&c, 3).unwrap();
        // complements of {1,2} and {2,3} are {3} and {1}: ids 2 and 0
        assert_eq!(i.generators, vec![Face::from([0]), Face::from([2])]);
        assert!(dual_ideal(&c, 2).is_err());
    }

    #[test]
    fn dual_ideal_of_full_simplex_is_unit() {
        let c = SimplicialComplex::from_int_facets(&[&[1, 2, 3]]);
        let i = dual_ideal(&c, 3).unwrap();
        assert!(i.is_unit());
        assert!(betti_table(&i, FieldSpec::Rational).is_err());
        assert!(has_linear_resolution(&i, FieldSpec::Rational).is_err());
    }

    #[test]
    fn koszul_betti_numbers() {
        let m = ideal(3, &[&[0], &[1], &[2]]);
        let t = betti_table(&m, FieldSpec::Rational).unwrap();
        assert_eq!(t.rows(), vec![(0, 1, 3), (1, 2, 3), (2, 3, 1)]);
        assert!(has_linear_resolution(&m, FieldSpec::Rational).unwrap());
    }

    #[test]
    fn principal_ideal() {
        let p = ideal(4, &[&[0, 2, 3]]);
        let t = betti_table(&p, FieldSpec::GF2).unwrap();
        assert_eq!(t.rows(), vec![(0, 3, 1)]);
        assert!(has_linear_resolution(&p, FieldSpec::GF2).unwrap());
        assert_eq!(has_linear_quotients(&p).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn mixed_degrees_are_not_linear() {
        let i = ideal(3, &[&[0], &[1, 2]]);
        assert!(!has_linear_resolution(&i, FieldSpec::Rational).unwrap());
        assert!(has_linear_quotients(&i).unwrap().is_none());
    }

    #[test]
    fn colon_examples() {
        // (x1x2, x1x3) : x2x3 = (x1)
        let i = ideal(3, &[&[0, 1], &[0, 2]]);
        assert_eq!(colon_generators(i.generators.iter(), &Face::from([1, 2])), vec![Face::from([0])]);
        assert!(colon_is_degree_one(&i, &Face::from([0]), 3));
        // (x1x2) : x3 = (x1x2)
        let j = ideal(3, &[&[0, 1]]);
        assert!(!colon_is_degree_one(&j, &Face::from([0, 1]), 3));
    }

    #[test]
    fn facet_colon_matches_attachment() {
        // 234 meets 123 and 345 in two edges
        let c = SimplicialComplex::from_int_facets(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let f = |l: &[&str]| c.face_from_labels(l).unwrap();
        assert!(facet_colon_is_degree_one(&c, &f(&["2", "3", "4"])).unwrap());
        // 234 meets the rest in an edge plus the isolated vertex 4, 456 in a vertex
        let c = SimplicialComplex::from_int_facets(&[&[1, 2, 3], &[2, 3, 4], &[4, 5, 6]]);
        let f = |l: &[&str]| c.face_from_labels(l).unwrap();
        assert!(!facet_colon_is_degree_one(&c, &f(&["2", "3", "4"])).unwrap());
        assert!(!facet_colon_is_degree_one(&c, &f(&["4", "5", "6"])).unwrap());
        let single = SimplicialComplex::from_int_facets(&[&[1, 2]]);
        assert!(facet_colon_is_degree_one(&single, &single.facets()[0].clone()).unwrap());
    }

    #[test]
    fn stanley_reisner_complex_of_maximal_ideal_is_irrelevant() {
        let m = ideal(3, &[&[0], &[1], &[2]]);
        assert!(m.stanley_reisner_complex().is_irrelevant());
    }
}
