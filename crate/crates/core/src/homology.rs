//! Reduced simplicial homology over a field via boundary-matrix ranks.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::{faces_by_size, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::SparseMatrix;

/// `∂_i : C_i → C_{i-1}`. Columns are the `i`-faces, rows the `(i-1)`-faces, both in
/// canonical order. `∂_0` is the augmentation onto the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub field: FieldSpec,
    pub row_faces: Vec<Face>,
    pub col_faces: Vec<Face>,
    pub matrix: SparseMatrix,
}

impl BoundaryMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank(self.field)
    }
}

/// Dimensions of `H̃_{-1}, H̃_0, …` over the chosen field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// Lowest degree with nonzero homology.
    pub fn lowest_nonzero(&self) -> Option<isize> {
        self.0.iter().position(|&b| b != 0).map(|k| k as isize - 1)
    }

    /// `sum_i (-1)^i dim H̃_i`.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// A chain with coefficients in the field; over GF(p) coefficients are residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub degree: usize,
    pub terms: Vec<(Face, BigInt)>,
}

impl Cycle {
    pub fn support(&self) -> Vec<Face> {
        self.terms.iter().map(|(f, _)| f.clone()).collect()
    }
}

struct ChainData {
    faces: Vec<Vec<Face>>,
}

impl ChainData {
    fn new(facets: &[Face]) -> Self {
        ChainData {
            faces: faces_by_size(facets),
        }
    }

    /// Boundary of the `degree`-faces (those with `degree + 1` vertices).
    fn boundary(&self, degree: usize) -> SparseMatrix {
        let cols = &self.faces[degree + 1];
        let rows = &self.faces[degree];
        let index: HashMap<&Face, usize> = rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = SparseMatrix::zeros(rows.len(), cols.len());
        for (c, face) in cols.iter().enumerate() {
            let mut col: Vec<(usize, i64)> = (0..face.len())
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    (index[&face.without_index(j)], sign)
                })
                .collect();
            col.sort_unstable();
            m.columns[c] = col;
        }
        m
    }
}

/// Boundary matrices `∂_0, …, ∂_{d-1}` with sign convention `∂σ = Σ_j (-1)^j (σ - v_j)`.
pub fn boundary_matrices(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<BoundaryMatrix>> {
    if complex.is_void() {
        return Err(Error::Void);
    }
    let data = ChainData::new(complex.facets());
    Ok((0..complex.d())
        .map(|i| BoundaryMatrix {
            degree: i,
            field,
            row_faces: data.faces[i].clone(),
            col_faces: data.faces[i + 1].clone(),
            matrix: data.boundary(i),
        })
        .collect())
}

/// Reduced homology of the complex generated by `facets`.
pub(crate) fn homology_of_facets(facets: &[Face], field: FieldSpec) -> BettiVector {
    if facets.is_empty() {
        return BettiVector(Vec::new());
    }
    let data = ChainData::new(facets);
    let d = data.faces.len() - 1;
    // ranks[i] = rank ∂_i, for i in 0..d
    let ranks: Vec<usize> = (0..d).map(|i| data.boundary(i).rank(field)).collect();
    let betti = (0..=d)
        .map(|k| {
            // k indexes H̃_{k-1}; chain group C_{k-1} has faces[k]
            let dim = data.faces[k].len();
            let out = if k >= 1 { ranks[k - 1] } else { 0 };
            let inc = if k < d { ranks[k] } else { 0 };
            dim - out - inc
        })
        .collect();
    BettiVector(betti)
}

/// `dim H̃_i = nullity(∂_i) - rank(∂_{i+1})`. The void complex has no homology; the
/// irrelevant complex has `H̃_{-1} = k`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    homology_of_facets(complex.facets(), field)
}

pub fn is_acyclic(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    reduced_homology(complex, field).is_zero()
}

/// Every face with fewer than `l` vertices (the empty face included) has an acyclic link.
pub fn is_l_fold_acyclic(complex: &SimplicialComplex, field: FieldSpec, l: usize) -> Result<bool> {
    if l == 0 {
        return Err(Error::InvalidArgument("l-fold acyclicity needs l >= 1".into()));
    }
    for (size, level) in complex.faces_by_size().iter().enumerate() {
        if size >= l {
            break;
        }
        for sigma in level {
            if !homology_of_facets(&complex.link_facets(sigma), field).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A nonzero element of `ker ∂_{d-1}`, the top homology, if there is one.
pub fn top_cycle(complex: &SimplicialComplex, field: FieldSpec) -> Option<Cycle> {
    let d = complex.d();
    if d == 0 {
        return None;
    }
    let data = ChainData::new(complex.facets());
    let top = d - 1;
    let m = data.boundary(top);
    let kernel = m.kernel_vector(field)?;
    let terms = kernel
        .into_iter()
        .map(|(c, x)| (data.faces[top + 1][c].clone(), x))
        .collect();
    Some(Cycle { degree: top, terms })
}

/// Applies `∂` to a chain and reports whether the result vanishes in the field.
pub fn is_cycle(chain: &Cycle, field: FieldSpec) -> bool {
    let mut acc: HashMap<Face, BigInt> = HashMap::new();
    for (face, coeff) in &chain.terms {
        for j in 0..face.len() {
            let e = acc.entry(face.without_index(j)).or_default();
            if j % 2 == 0 {
                *e += coeff;
            } else {
                *e -= coeff;
            }
        }
    }
    acc.values().all(|v| match field {
        FieldSpec::Rational => v == &BigInt::from(0),
        FieldSpec::Prime(p) => (v % BigInt::from(p)) == BigInt::from(0),
    })
}
