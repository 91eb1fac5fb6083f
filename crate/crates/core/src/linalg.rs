//! Exact rank and kernel computations for integer matrices interpreted over a field.
//!
//! Matrices are stored column-major and sparse. Rank over GF(p) uses ordinary
//! column reduction; over Q the reduction is fraction-free (integer column
//! combinations divided by their content). Matrices denser than 25% are
//! eliminated in dense form instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{mod_inverse, FieldSpec};

const DENSE_THRESHOLD: f64 = 0.25;

/// Column-major sparse integer matrix. Each column is sorted by row index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        self.nnz() as f64 / (self.rows as f64 * self.cols as f64)
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .binary_search_by_key(&row, |&(r, _)| r)
            .map(|i| self.columns[col][i].1)
            .unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] = v;
            }
        }
        m
    }

    /// Integer product `self * rhs`.
    pub fn multiply(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = SparseMatrix::zeros(self.rows, rhs.cols);
        for (j, col) in rhs.columns.iter().enumerate() {
            let mut acc = vec![0i64; self.rows];
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    acc[i] += a * b;
                }
            }
            out.columns[j] = acc.into_iter().enumerate().filter(|&(_, v)| v != 0).collect();
        }
        out
    }

    /// All entries vanish in the given field.
    pub fn is_zero_over(&self, field: FieldSpec) -> bool {
        match field {
            FieldSpec::Rational => self.columns.iter().all(|c| c.iter().all(|&(_, v)| v == 0)),
            FieldSpec::Prime(p) => self
                .columns
                .iter()
                .all(|c| c.iter().all(|&(_, v)| v.rem_euclid(p as i64) == 0)),
        }
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.density() > DENSE_THRESHOLD {
            self.rank_dense(field)
        } else {
            self.rank_sparse(field)
        }
    }

    pub fn rank_sparse(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => reduce_mod_p(self, p as u64, false).0,
            FieldSpec::Rational => reduce_rational(self, false).0,
        }
    }

    pub fn rank_dense(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => dense_rank_mod_p(self.to_dense(), p as u64),
            FieldSpec::Rational => bareiss_rank(self.to_dense()),
        }
    }

    /// A nonzero vector `x` with `self * x = 0` over the field, as `(column, coefficient)`
    /// pairs with nonzero coefficients. Over GF(p) coefficients are residues in `0..p`.
    pub fn kernel_vector(&self, field: FieldSpec) -> Option<Vec<(usize, BigInt)>> {
        match field {
            FieldSpec::Prime(p) => reduce_mod_p(self, p as u64, true)
                .1
                .map(|v| v.into_iter().map(|(i, c)| (i, BigInt::from(c))).collect()),
            FieldSpec::Rational => reduce_rational(self, true).1,
        }
    }
}

fn low<T>(col: &[(usize, T)]) -> Option<usize> {
    col.last().map(|&(r, _)| r)
}

/// `a - factor * b` over GF(p), both sorted by row.
fn axpy_mod(a: &[(usize, u64)], b: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let neg = (p - factor % p) % p;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map(|x| x.0);
        let rb = b.get(j).map(|x| x.0);
        match (ra, rb) {
            (Some(x), Some(y)) if x == y => {
                let v = (a[i].1 + neg * b[j].1) % p;
                if v != 0 {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i]);
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i]);
                i += 1;
            }
            _ => {
                let v = neg * b[j].1 % p;
                if v != 0 {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
        }
    }
    out
}

/// Column reduction over GF(p). Returns the rank and, when `track` is set, the
/// first column combination that reduced to zero.
fn reduce_mod_p(m: &SparseMatrix, p: u64, track: bool) -> (usize, Option<Vec<(usize, u64)>>) {
    let mut cols: Vec<Vec<(usize, u64)>> = m
        .columns
        .iter()
        .map(|c| {
            c.iter()
                .filter_map(|&(r, v)| {
                    let x = v.rem_euclid(p as i64) as u64;
                    (x != 0).then_some((r, x))
                })
                .collect()
        })
        .collect();
    let mut combos: Vec<Vec<(usize, u64)>> = if track {
        (0..m.cols).map(|j| vec![(j, 1u64)]).collect()
    } else {
        Vec::new()
    };
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.rows];
    let mut rank = 0;
    let mut kernel = None;
    for j in 0..m.cols {
        while let Some(r) = low(&cols[j]) {
            match pivot_of_row[r] {
                Some(q) => {
                    let cj = cols[j].last().unwrap().1;
                    let cq = cols[q].last().unwrap().1;
                    let factor = cj * mod_inverse(cq, p) % p;
                    cols[j] = axpy_mod(&cols[j], &cols[q], factor, p);
                    if track {
                        let mut a = combos[j].clone();
                        a.sort_unstable();
                        let mut b = combos[q].clone();
                        b.sort_unstable();
                        combos[j] = axpy_mod(&a, &b, factor, p);
                    }
                }
                None => {
                    pivot_of_row[r] = Some(j);
                    rank += 1;
                    break;
                }
            }
        }
        if track && cols[j].is_empty() && kernel.is_none() {
            kernel = Some(combos[j].clone());
        }
    }
    (rank, kernel)
}

fn content(v: &[(usize, BigInt)]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x))
}

/// `s * a - t * b` over the integers, both sorted by row.
fn combine_int(a: &[(usize, BigInt)], s: &BigInt, b: &[(usize, BigInt)], t: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map(|x| x.0);
        let rb = b.get(j).map(|x| x.0);
        match (ra, rb) {
            (Some(x), Some(y)) if x == y => {
                let v = s * &a[i].1 - t * &b[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, s * &a[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, s * &a[i].1));
                i += 1;
            }
            _ => {
                out.push((b[j].0, -(t * &b[j].1)));
                j += 1;
            }
        }
    }
    out
}

/// Fraction-free column reduction over Z, valid for ranks over Q.
fn reduce_rational(m: &SparseMatrix, track: bool) -> (usize, Option<Vec<(usize, BigInt)>>) {
    let mut cols: Vec<Vec<(usize, BigInt)>> = m
        .columns
        .iter()
        .map(|c| c.iter().filter(|&&(_, v)| v != 0).map(|&(r, v)| (r, BigInt::from(v))).collect())
        .collect();
    let mut combos: Vec<Vec<(usize, BigInt)>> = if track {
        (0..m.cols).map(|j| vec![(j, BigInt::one())]).collect()
    } else {
        Vec::new()
    };
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.rows];
    let mut rank = 0;
    let mut kernel = None;
    for j in 0..m.cols {
        while let Some(r) = low(&cols[j]) {
            match pivot_of_row[r] {
                Some(q) => {
                    let cj = cols[j].last().unwrap().1.clone();
                    let cq = cols[q].last().unwrap().1.clone();
                    let g = cj.gcd(&cq);
                    let (s, t) = (&cq / &g, &cj / &g);
                    let mut next = combine_int(&cols[j], &s, &cols[q], &t);
                    let mut gc = content(&next);
                    if track {
                        let mut a = combos[j].clone();
                        a.sort_by_key(|x| x.0);
                        let mut b = combos[q].clone();
                        b.sort_by_key(|x| x.0);
                        let mut nc = combine_int(&a, &s, &b, &t);
                        gc = gc.gcd(&content(&nc));
                        if gc > BigInt::one() {
                            for (_, x) in nc.iter_mut() {
                                *x /= &gc;
                            }
                        }
                        combos[j] = nc;
                    }
                    if gc > BigInt::one() {
                        for (_, x) in next.iter_mut() {
                            *x /= &gc;
                        }
                    }
                    cols[j] = next;
                }
                None => {
                    pivot_of_row[r] = Some(j);
                    rank += 1;
                    break;
                }
            }
        }
        if track && cols[j].is_empty() && kernel.is_none() {
            let mut v = combos[j].clone();
            v.retain(|(_, x)| !x.is_zero());
            v.sort_by_key(|x| x.0);
            // normalise sign so the first coefficient is positive
            if v.first().is_some_and(|(_, x)| x.is_negative()) {
                for (_, x) in v.iter_mut() {
                    *x = -x.clone();
                }
            }
            kernel = Some(v);
        }
    }
    (rank, kernel)
}

fn dense_rank_mod_p(mut a: Vec<Vec<i64>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> = a
        .iter_mut()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for (x, &y) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Bareiss fraction-free elimination; every intermediate entry is an exact minor.
fn bareiss_rank(a: Vec<Vec<i64>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(d: &[&[i64]]) -> SparseMatrix {
        let rows = d.len();
        let cols = d[0].len();
        let mut m = SparseMatrix::zeros(rows, cols);
        for c in 0..cols {
            m.columns[c] = (0..rows).filter(|&r| d[r][c] != 0).map(|r| (r, d[r][c])).collect();
        }
        m
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let m = from_dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank_sparse(FieldSpec::Rational), 2);
        assert_eq!(m.rank_dense(FieldSpec::Rational), 2);
        assert_eq!(m.rank_sparse(FieldSpec::GF2), 1);
        assert_eq!(m.rank_dense(FieldSpec::GF2), 1);
        assert_eq!(m.rank_sparse(FieldSpec::GF3), 2);
    }

    #[test]
    fn kernel_vector_is_in_kernel() {
        let m = from_dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        for f in [FieldSpec::Rational, FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Prime(7)] {
            let k = m.kernel_vector(f).expect("singular");
            for r in 0..3 {
                let s: BigInt = k.iter().map(|(c, x)| x * BigInt::from(m.get(r, *c))).sum();
                match f {
                    FieldSpec::Rational => assert!(s.is_zero()),
                    FieldSpec::Prime(p) => assert!((s % BigInt::from(p)).is_zero()),
                }
            }
        }
        let id = from_dense(&[&[1, 0], &[0, 1]]);
        assert!(id.kernel_vector(FieldSpec::Rational).is_none());
    }

    #[test]
    fn multiply_small() {
        let a = from_dense(&[&[1, 0], &[0, 2]]);
        let b = from_dense(&[&[3], &[4]]);
        assert_eq!(a.multiply(&b).to_dense(), vec![vec![3], vec![8]]);
    }
}
