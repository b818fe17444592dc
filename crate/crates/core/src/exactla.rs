//! Exact sparse linear algebra over arbitrary-precision rationals.
//!
//! Elimination runs on primitive integer rows: a row is cleared against a
//! pivot row by cross-multiplication and then divided by the gcd of its
//! entries, so no denominators appear until the final normalization of a
//! reduced echelon form. Pivots are always the first nonzero column, which
//! makes the reduced form canonical.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed matrix dump: {0}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sparse vector with sorted indices and no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from unsorted entries, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in it {
            *map.entry(i).or_insert_with(Rational::zero) += c;
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Entries must already be sorted by index with no duplicates.
    pub fn from_sorted(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries: entries.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += x * y;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Reindexes entries through `f`; indices mapped to `None` are dropped.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect() }
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and divides out the content; the leading entry is
/// made positive.
fn to_primitive(v: &SparseVec) -> IntRow {
    if v.is_zero() {
        return Vec::new();
    }
    let mut l = BigInt::one();
    for (_, c) in v.iter() {
        l = l.lcm(c.denom());
    }
    let row: IntRow = v.iter().map(|(i, c)| (i, c.numer() * (&l / c.denom()))).collect();
    normalize(row)
}

fn normalize(mut row: IntRow) -> IntRow {
    if row.is_empty() {
        return row;
    }
    let mut g = BigInt::zero();
    for (_, c) in &row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
    row
}

/// `a*v - b*p`, where `p` has its leading entry at a column of `v` with value `b`.
fn cross_eliminate(v: &IntRow, a: &BigInt, b: &BigInt, p: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let take_v = j >= p.len() || (i < v.len() && v[i].0 < p[j].0);
        let take_p = i >= v.len() || (j < p.len() && p[j].0 < v[i].0);
        if take_v {
            out.push((v[i].0, a * &v[i].1));
            i += 1;
        } else if take_p {
            out.push((p[j].0, -(b * &p[j].1)));
            j += 1;
        } else {
            let s = a * &v[i].1 - b * &p[j].1;
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    normalize(out)
}

/// Row echelon form built one vector at a time, by fraction-free elimination.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_int(&self, mut v: IntRow) -> IntRow {
        let mut idx = 0;
        while idx < v.len() {
            let col = v[idx].0;
            match self.rows.get(&col) {
                Some(p) => {
                    let a = p[0].1.clone();
                    let b = v[idx].1.clone();
                    let g = a.gcd(&b);
                    // entries left of `col` stay nonzero, so the scan resumes in place
                    v = cross_eliminate(&v, &(&a / &g), &(&b / &g), p);
                }
                None => idx += 1,
            }
        }
        v
    }

    /// True if `v` lies in the span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_int(to_primitive(v)).is_empty()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce_int(to_primitive(v));
        if r.is_empty() {
            return false;
        }
        self.rows.insert(r[0].0, r);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Canonical reduced echelon form: pivot entries 1, zeros above pivots.
    pub fn rref(&self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut reduced: BTreeMap<usize, IntRow> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut v = self.rows[&p].clone();
            // clear entries at later pivots using already reduced rows
            let mut idx = 1;
            while idx < v.len() {
                let col = v[idx].0;
                if let Some(q) = reduced.get(&col) {
                    let a = q[0].1.clone();
                    let b = v[idx].1.clone();
                    let g = a.gcd(&b);
                    v = cross_eliminate(&v, &(&a / &g), &(&b / &g), q);
                } else {
                    idx += 1;
                }
            }
            reduced.insert(p, v);
        }
        reduced
            .into_values()
            .map(|row| {
                let lead = row[0].1.clone();
                SparseVec::from_sorted(
                    row.into_iter().map(|(i, c)| (i, Rational::new(c, lead.clone()))).collect(),
                )
            })
            .collect()
    }
}

/// Linear relations among `vecs`: a basis of `{x : Σ x_j vecs[j] = 0}`.
pub fn relations(vecs: &[SparseVec]) -> Vec<SparseVec> {
    let offset = vecs.iter().filter_map(|v| v.max_index()).max().map_or(0, |m| m + 1);
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (j, v) in vecs.iter().enumerate() {
        let aug = SparseVec::from_sorted(
            v.entries().iter().cloned().chain(std::iter::once((offset + j, Rational::one()))).collect(),
        );
        let r = ech.reduce_int(to_primitive(&aug));
        if r[0].0 >= offset {
            out.push(SparseVec::from_sorted(
                r.into_iter().map(|(i, c)| (i - offset, Rational::from_integer(c))).collect(),
            ));
        } else {
            ech.rows.insert(r[0].0, r);
        }
    }
    out
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

#[derive(Serialize, Deserialize)]
struct MatrixDump {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        RationalMatrix { rows, cols }
    }

    pub fn from_rows_i64(data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let ncols = data.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| SparseVec::from_sorted((0..rows).map(|i| (i, rat(data[i][j]))).collect()))
            .collect();
        RationalMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, x) in v.iter() {
            for (i, a) in self.cols[j].iter() {
                *acc.entry(i).or_insert_with(Rational::zero) += a * x;
            }
        }
        SparseVec::from_sorted(acc.into_iter().collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.ncols() != other.nrows() {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows,
                self.ncols(),
                other.rows,
                other.ncols()
            )));
        }
        Ok(RationalMatrix { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(c)).collect() })
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        self.lin_comb(other, &Rational::one())
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        self.lin_comb(other, &-Rational::one())
    }

    fn lin_comb(&self, other: &RationalMatrix, c: &Rational) -> Result<RationalMatrix, LinalgError> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(LinalgError::Shape("sum of differently shaped matrices".into()));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add_scaled(b, c)).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[i].push((j, x.clone()));
            }
        }
        RationalMatrix { rows: self.ncols(), cols: cols.into_iter().map(SparseVec::from_sorted).collect() }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for c in &self.cols {
            ech.insert(c);
        }
        ech.rank()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.ncols(), &relations(&self.cols))
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, &self.cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                entries.push((i, j, x.to_string()));
            }
        }
        entries.sort();
        serde_json::to_value(MatrixDump { rows: self.rows, cols: self.ncols(), entries })
            .expect("matrix dump serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, LinalgError> {
        let d: MatrixDump = serde_json::from_value(v.clone()).map_err(|e| LinalgError::Parse(e.to_string()))?;
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d.cols];
        for (i, j, s) in d.entries {
            if i >= d.rows || j >= d.cols {
                return Err(LinalgError::Parse(format!("entry ({i},{j}) out of range")));
            }
            let x: Rational = s.parse().map_err(|_| LinalgError::Parse(format!("bad rational {s:?}")))?;
            cols[j].push((i, x));
        }
        Ok(RationalMatrix {
            rows: d.rows,
            cols: cols.into_iter().map(SparseVec::from_entries).collect(),
        })
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.ncols()).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of `Q^ambient_dim`, stored as its reduced row echelon basis.
/// Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(SparseVec::unit).collect() }
    }

    pub fn span(ambient_dim: usize, vecs: &[SparseVec]) -> Self {
        let mut ech = Echelon::new();
        for v in vecs {
            ech.insert(v);
        }
        Subspace { ambient_dim, basis: ech.rref() }
    }

    pub fn from_echelon(ambient_dim: usize, ech: &Echelon) -> Self {
        Subspace { ambient_dim, basis: ech.rref() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.leading().expect("basis vectors are nonzero")).collect()
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, self.basis.clone())
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut residual = v.clone();
        let mut coords = Vec::new();
        for (k, b) in self.basis.iter().enumerate() {
            let p = b.leading().expect("nonzero basis vector");
            let c = residual.get(p);
            if !c.is_zero() {
                residual = residual.add_scaled(b, &-c.clone());
                coords.push((k, c));
            }
        }
        residual.is_zero().then(|| SparseVec::from_sorted(coords))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, c) in coords.iter() {
            out = out.add_scaled(&self.basis[k], c);
        }
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let all: Vec<SparseVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.ambient_dim, &all))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let a = self.dim();
        let cols: Vec<SparseVec> = self.basis.iter().cloned().chain(other.basis.iter().map(|w| w.neg())).collect();
        let vecs: Vec<SparseVec> = relations(&cols)
            .into_iter()
            .map(|rel| self.combine(&rel.remap(|i| (i < a).then_some(i))))
            .collect();
        Ok(Subspace::span(self.ambient_dim, &vecs))
    }
}

/// Coordinates for the quotient `U / W`.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Surjection from `U`-coordinates onto quotient coordinates.
    pub map: RationalMatrix,
    /// For each quotient coordinate, the index of the `U` basis vector lifting it.
    pub lifts: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.lifts.len()
    }
}

/// Builds quotient coordinates for `U / W`, with `W ⊆ U`.
pub fn quotient(u: &Subspace, w: &Subspace) -> Result<Quotient, LinalgError> {
    u.check_ambient(w)?;
    let mut in_u = Vec::with_capacity(w.dim());
    for b in w.basis() {
        in_u.push(u.coordinates(b).ok_or(LinalgError::NotContained)?);
    }
    let w_rref = Subspace::span(u.dim(), &in_u);
    let pivots = w_rref.pivots();
    let lifts: Vec<usize> = (0..u.dim()).filter(|t| !pivots.contains(t)).collect();
    let pos: BTreeMap<usize, usize> = lifts.iter().enumerate().map(|(q, &t)| (t, q)).collect();
    let mut cols = vec![SparseVec::new(); u.dim()];
    for &t in &lifts {
        cols[t] = SparseVec::unit(pos[&t]);
    }
    for (row, &p) in w_rref.basis().iter().zip(&pivots) {
        cols[p] = SparseVec::from_entries(
            row.iter().filter(|(i, _)| *i != p).map(|(i, c)| (pos[&i], -c.clone())),
        );
    }
    Ok(Quotient { map: RationalMatrix::from_columns(lifts.len(), cols), lifts })
}

/// The surjection `U-coordinates -> U/W` and the quotient dimension.
pub fn quotient_map(u: &Subspace, w: &Subspace) -> Result<(RationalMatrix, usize), LinalgError> {
    let q = quotient(u, w)?;
    let d = q.dim();
    Ok((q.map, d))
}

pub fn rank(a: &RationalMatrix) -> usize {
    a.rank()
}

pub fn kernel(a: &RationalMatrix) -> Subspace {
    a.kernel()
}

pub fn image(a: &RationalMatrix) -> Subspace {
    a.image()
}

pub fn intersect(u: &Subspace, w: &Subspace) -> Result<Subspace, LinalgError> {
    u.intersect(w)
}

pub fn sum(u: &Subspace, w: &Subspace) -> Result<Subspace, LinalgError> {
    u.sum(w)
}

pub fn contains(u: &Subspace, v: &SparseVec) -> bool {
    u.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_kernel_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(id.rank(), 2);
        assert_eq!(id.kernel().dim(), 0);
        let z = RationalMatrix::zeros(3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().dim(), 3);
        let a = RationalMatrix::from_rows_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&sv(&[2, -1])));
    }

    #[test]
    fn subspace_operations() {
        let e1 = Subspace::span(2, &[sv(&[1, 0])]);
        let e2 = Subspace::span(2, &[sv(&[0, 1])]);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        let diag = Subspace::span(2, &[sv(&[1, 1])]);
        let all = Subspace::span(2, &[sv(&[1, 0]), sv(&[0, 1])]);
        assert_eq!(diag.intersect(&all).unwrap(), diag);
        assert!(matches!(e1.sum(&Subspace::zero(3)), Err(LinalgError::AmbientMismatch(2, 3))));
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(3);
        let e1 = Subspace::span(3, &[sv(&[1, 0, 0])]);
        assert_eq!(quotient_map(&full, &e1).unwrap().1, 2);
        assert_eq!(quotient_map(&full, &full).unwrap().1, 0);
        assert!(quotient_map(&e1, &full).is_err());
        let big = Subspace::full(16);
        let line = Subspace::span(16, &[SparseVec::unit(3).add(&SparseVec::unit(7))]);
        let (m, d) = quotient_map(&big, &line).unwrap();
        assert_eq!(d, 15);
        assert_eq!(m.rank(), 15);
        // the line maps to zero
        let coords = big.coordinates(&line.basis()[0]).unwrap();
        assert!(m.apply(&coords).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let a = RationalMatrix::from_columns(
            2,
            vec![SparseVec::from_entries([(0, Rational::new(3.into(), 2.into()))]), SparseVec::unit(1)],
        );
        let j = a.to_json();
        assert_eq!(j["entries"][0], serde_json::json!([0, 0, "3/2"]));
        assert_eq!(RationalMatrix::from_json(&j).unwrap(), a);
    }

    fn matrix_with_rows(r: usize) -> impl Strategy<Value = RationalMatrix> {
        (1usize..6).prop_flat_map(move |c| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r)
                .prop_map(|rows| RationalMatrix::from_rows_i64(&rows))
        })
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..6).prop_flat_map(matrix_with_rows)
    }

    fn matrix_pair() -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
        (1usize..6).prop_flat_map(|r| (matrix_with_rows(r), matrix_with_rows(r)))
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(a.rank() + a.kernel().dim(), a.ncols());
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn kernel_is_annihilated(a in small_matrix()) {
            for v in a.kernel().basis() {
                prop_assert!(a.apply(v).is_zero());
            }
        }

        #[test]
        fn product_image_inside(a in small_matrix(), seed in proptest::collection::vec(-2i64..3, 25)) {
            let k = a.ncols();
            let rows: Vec<Vec<i64>> = (0..k).map(|i| (0..5).map(|j| seed[(i * 5 + j) % 25]).collect()).collect();
            let b = RationalMatrix::from_rows_i64(&rows);
            let ab = a.mul(&b).unwrap();
            prop_assert!(a.image().contains_subspace(&ab.image()));
        }

        #[test]
        fn canonical_form(a in small_matrix(), mix in proptest::collection::vec(-2i64..3, 36)) {
            // a different spanning set of the same column space gives the same subspace
            let n = a.ncols();
            let mut cols = Vec::new();
            for j in 0..n {
                let mut v = a.column(j).clone();
                for t in 0..n {
                    if t > j {
                        v = v.add_scaled(a.column(t), &rat(mix[(j * 6 + t) % 36]));
                    }
                }
                cols.push(v);
            }
            let b = RationalMatrix::from_columns(a.nrows(), cols);
            prop_assert_eq!(a.image(), b.image());
        }

        #[test]
        fn dimension_formula((a, b) in matrix_pair()) {
            let (u, w) = (a.image(), b.image());
            let i = u.intersect(&w).unwrap();
            let s = u.sum(&w).unwrap();
            prop_assert_eq!(u.dim() + w.dim(), i.dim() + s.dim());
            prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        }
    }
}
