//! Characters in the Schur basis.
//!
//! Labels are partitions; a [`SchurSum`] is a formal integer combination of
//! Schur functors of a single space and a [`PairSchurSum`] is the analogue for
//! a product of two spaces. Littlewood-Richardson coefficients are computed by
//! enumerating LR tableaux, with no tables.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{enumerate_partitions, pq_rs, p_rs, Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfuncError {
    #[error("requires dim E > s+r (got dim E = {n}, s+r = {sr})")]
    DimTooSmall { n: usize, sr: usize },
    #[error("requires dim E >= s+r and dim F >= s+r (got dim E = {n}, dim F = {m}, s+r = {sr})")]
    PairDimTooSmall { n: usize, m: usize, sr: usize },
    #[error("requires s >= 1")]
    ZeroS,
    #[error("requires r >= 1 (r = 0 is the Koszul complex)")]
    ZeroR,
}

/// Which Pieri rule to apply: tensoring with `S^k` (row) or with `∧^k` (column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieriKind {
    Row,
    Column,
}

/// Integer combination of Schur labels. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurSum {
    terms: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    shape: Partition,
    coeff: i64,
}

impl SchurSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(shape: Partition) -> Self {
        let mut s = Self::new();
        s.add_term(shape, 1);
        s
    }

    pub fn add_term(&mut self, shape: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(shape.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&shape);
        }
    }

    pub fn coeff(&self, shape: &Partition) -> i64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &SchurSum) -> SchurSum {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurSum) -> SchurSum {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), -c);
        }
        out
    }

    /// Product via Littlewood-Richardson coefficients.
    pub fn mul(&self, other: &SchurSum) -> SchurSum {
        let mut out = SchurSum::new();
        for (mu, a) in self.terms() {
            for (nu, b) in other.terms() {
                for (lambda, c) in lr_product(mu, nu).terms() {
                    out.add_term(lambda.clone(), a * b * c);
                }
            }
        }
        out
    }

    /// Drops labels with more than `n` rows (they vanish on an `n`-dimensional space).
    pub fn truncate(&self, n: usize) -> SchurSum {
        SchurSum {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= n)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    /// Total dimension on an `n`-dimensional space.
    pub fn dim(&self, n: usize) -> i128 {
        self.terms()
            .map(|(p, c)| c as i128 * dim_schur(p, n) as i128)
            .sum()
    }

    /// Coefficientwise `self >= other`.
    pub fn dominates(&self, other: &SchurSum) -> bool {
        other.terms().all(|(p, c)| self.coeff(p) >= c)
    }
}

impl fmt::Display for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .terms
            .iter()
            .rev()
            .map(|(p, &c)| if c == 1 { format!("{p}") } else { format!("{c}*{p}") })
            .join(" + ");
        write!(f, "{s}")
    }
}

impl Serialize for SchurSum {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<SchurTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(p, &c)| SchurTerm { shape: p.clone(), coeff: c })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SchurSum {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<SchurTerm>::deserialize(de)?;
        let mut out = SchurSum::new();
        for t in v {
            out.add_term(t.shape, t.coeff);
        }
        Ok(out)
    }
}

/// Integer combination of pairs of Schur labels `(label on E*, label on F)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSchurSum {
    terms: BTreeMap<(Partition, Partition), i64>,
}

#[derive(Serialize, Deserialize)]
struct PairTerm {
    #[serde(rename = "shapeE")]
    shape_e: Partition,
    #[serde(rename = "shapeF")]
    shape_f: Partition,
    coeff: i64,
}

impl PairSchurSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, e: Partition, f: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (e, f);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, e: &Partition, f: &Partition) -> i64 {
        self.terms.get(&(e.clone(), f.clone())).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, i64)> {
        self.terms.iter().map(|((e, f), &c)| (e, f, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Outer product of two single-space sums.
    pub fn tensor(a: &SchurSum, b: &SchurSum) -> PairSchurSum {
        let mut out = PairSchurSum::new();
        for (p, x) in a.terms() {
            for (q, y) in b.terms() {
                out.add_term(p.clone(), q.clone(), x * y);
            }
        }
        out
    }

    pub fn add(&self, other: &PairSchurSum) -> PairSchurSum {
        let mut out = self.clone();
        for (e, f, c) in other.terms() {
            out.add_term(e.clone(), f.clone(), c);
        }
        out
    }

    pub fn dim(&self, n: usize, m: usize) -> i128 {
        self.terms()
            .map(|(e, f, c)| c as i128 * dim_schur(e, n) as i128 * dim_schur(f, m) as i128)
            .sum()
    }

    pub fn dominates(&self, other: &PairSchurSum) -> bool {
        other.terms().all(|(e, f, c)| self.coeff(e, f) >= c)
    }
}

impl fmt::Display for PairSchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .terms
            .iter()
            .rev()
            .map(|((a, b), &c)| {
                if c == 1 {
                    format!("({a};{b})")
                } else {
                    format!("{c}*({a};{b})")
                }
            })
            .join(" + ");
        write!(f, "{s}")
    }
}

impl Serialize for PairSchurSum {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<PairTerm> = self
            .terms
            .iter()
            .rev()
            .map(|((e, f), &c)| PairTerm { shape_e: e.clone(), shape_f: f.clone(), coeff: c })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PairSchurSum {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<PairTerm>::deserialize(de)?;
        let mut out = PairSchurSum::new();
        for t in v {
            out.add_term(t.shape_e, t.shape_f, t.coeff);
        }
        Ok(out)
    }
}

/// Dimension of `S_lambda` of an `n`-dimensional space (hook-content formula).
pub fn dim_schur(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let conj = lambda.transpose();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.cells() {
        let content = n + j - i;
        let hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
        num *= content as u64;
        den *= hook as u64;
    }
    let q = num / den;
    q.to_u64().expect("Schur dimension fits in u64")
}

/// Dimension of the irreducible `gl(n)`-module with dominant integral highest
/// weight `w` (entries may be negative).
pub fn dim_highest_weight(w: &[i64]) -> u64 {
    if w.is_empty() {
        return 1;
    }
    let low = *w.iter().min().unwrap();
    let parts: Vec<usize> = w.iter().map(|&x| (x - low) as usize).collect();
    match Partition::new(parts) {
        Ok(p) => dim_schur(&p, w.len()),
        Err(_) => 0,
    }
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=n`.
pub fn count_ssyt(lambda: &Partition, n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let lo = lo_row.max(lo_col);
        let mut total = 0;
        for v in lo..=n {
            grid[i][j] = v;
            total += rec(k + 1, cells, grid, n);
        }
        grid[i][j] = 0;
        total
    }
    if n == 0 {
        return u64::from(lambda.is_empty());
    }
    rec(0, &cells, &mut grid, n)
}

/// Multiplicity of `S_lambda` in `S_mu ⊗ S_nu`, by counting LR tableaux of
/// shape `lambda/mu` and content `nu`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let rows = lambda.len();
    // Rows are filled top to bottom, each right to left, so the fill order is
    // the reverse reading word and the lattice condition can be checked
    // incrementally.
    let mut order = Vec::new();
    for i in 0..rows {
        for j in (mu.part(i)..lambda.part(i)).rev() {
            order.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lambda.part(i)]).collect();
    let mut counts = vec![0usize; nu.len() + 1];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
    ) -> u64 {
        if k == order.len() {
            return 1;
        }
        let (i, j) = order[k];
        // weakly increasing along the row: the cell to the right is already filled
        let hi = if j + 1 < lambda.part(i) { grid[i][j + 1] } else { nu.len() };
        // strictly increasing down the column
        let lo = if i > 0 && j >= mu.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi.min(nu.len()) {
            if counts[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            grid[i][j] = v;
            total += rec(k + 1, order, grid, counts, mu, lambda, nu);
            counts[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &order, &mut grid, &mut counts, mu, lambda, nu)
}

/// `S_mu · S_nu` expanded in the Schur basis.
pub fn lr_product(mu: &Partition, nu: &Partition) -> SchurSum {
    let size = mu.size() + nu.size();
    let mut out = SchurSum::new();
    for lambda in enumerate_partitions(size, Some(mu.len() + nu.len()), Some(mu.first_part() + nu.first_part())) {
        let c = lr_coeff(&lambda, mu, nu);
        out.add_term(lambda, c as i64);
    }
    out
}

/// Pieri rule: `S_mu ⊗ S^k` (row) or `S_mu ⊗ ∧^k` (column).
pub fn pieri(mu: &Partition, k: usize, kind: PieriKind) -> SchurSum {
    let size = mu.size() + k;
    let mut out = SchurSum::new();
    for lambda in enumerate_partitions(size, Some(mu.len() + k), Some(mu.first_part() + k)) {
        if !lambda.contains(mu) {
            continue;
        }
        let sh = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
        let ok = match kind {
            PieriKind::Row => sh.is_horizontal_strip(),
            PieriKind::Column => sh.is_vertical_strip(),
        };
        if ok {
            out.add_term(lambda, 1);
        }
    }
    out
}

/// `S_{outer/inner} = Σ_ν c^{outer}_{inner,ν} S_ν`.
pub fn skew_expand(sh: &SkewShape) -> SchurSum {
    let outer = sh.outer();
    let mut out = SchurSum::new();
    for nu in enumerate_partitions(sh.size(), Some(outer.len()), Some(outer.first_part())) {
        if !outer.contains(&nu) {
            continue;
        }
        let c = lr_coeff(outer, sh.inner(), &nu);
        out.add_term(nu, c as i64);
    }
    out
}

/// Homological degree `i` part of the Schur complex `S_mu(W_0 ⊕ W_1)`:
/// the pairs `(mu/nu, nu†)` over `nu ⊆ mu` with `|nu| = i`.
pub fn schur_complex_terms(mu: &Partition, i: usize) -> Vec<(SkewShape, Partition)> {
    enumerate_partitions(i, Some(mu.len()), Some(mu.first_part()))
        .into_iter()
        .filter(|nu| mu.contains(nu))
        .map(|nu| {
            let t = nu.transpose();
            (SkewShape::new(mu.clone(), nu).expect("containment checked"), t)
        })
        .collect()
}

/// Predicted character of the degree-`i` term of the symmetric-matrix strand:
/// the sum of `S_{P_{r,s}(α)}` over `|α| = i`, `ℓ(α) <= s`, `s+r+α_1 <= n`.
pub fn jpw_character(r: usize, s: usize, i: usize, n: usize) -> Result<SchurSum, SymfuncError> {
    if s == 0 {
        return Err(SymfuncError::ZeroS);
    }
    if n <= s + r {
        return Err(SymfuncError::DimTooSmall { n, sr: s + r });
    }
    let mut out = SchurSum::new();
    for alpha in enumerate_partitions(i, Some(s), None) {
        if s + r + alpha.first_part() > n {
            continue;
        }
        out.add_term(p_rs(&alpha, r, s).expect("length bounded by s"), 1);
    }
    Ok(out)
}

/// Predicted character of the degree-`i` term of the generic-matrix strand,
/// labelled by `(shape on E*, shape on F)`.
pub fn lascoux_character(
    r: usize,
    s: usize,
    i: usize,
    n: usize,
    m: usize,
) -> Result<PairSchurSum, SymfuncError> {
    if r == 0 {
        return Err(SymfuncError::ZeroR);
    }
    if n < s + r || m < s + r {
        return Err(SymfuncError::PairDimTooSmall { n, m, sr: s + r });
    }
    let mut out = PairSchurSum::new();
    for a in 0..=i {
        for alpha in enumerate_partitions(a, Some(s), None) {
            for beta in enumerate_partitions(i - a, None, Some(s)) {
                let (p, q) = pq_rs(&alpha, &beta, r, s).expect("constraints enforced by enumeration");
                if p.len() <= n && q.len() <= m {
                    out.add_term(p, q, 1);
                }
            }
        }
    }
    Ok(out)
}

/// Degree-`i` character of `S_λ(E ⊕ E*[1]) ⊗ (det E*)^s` with
/// `λ = (s^{n-s-r})`, written in labels of `E*`.
///
/// The rectangle rule turns `S_{λ/ν}E ⊗ (det E*)^s` into `S_{(s^{s+r}, ν)}E*`.
pub fn twisted_schur_complex_character(n: usize, r: usize, s: usize, i: usize) -> SchurSum {
    let lambda = Partition::rectangle(s, n.saturating_sub(s + r));
    let head = Partition::rectangle(s, s + r);
    let mut out = SchurSum::new();
    for (sh, nu_t) in schur_complex_terms(&lambda, i) {
        let even = head.concat(sh.inner()).expect("inner shape fits under the rectangle");
        out = out.add(&SchurSum::single(even).mul(&SchurSum::single(nu_t)));
    }
    out.truncate(n)
}

/// Degree-`h` character of `S_λ(E ⊕ F) ⊗ S_μ(F* ⊕ E*) ⊗ (det E*)^s ⊗ (det F)^s`
/// with `λ = (s^{n-r-s})`, `μ = (s^{m-r-s})`, in labels `(E*, F)`.
pub fn gl_twisted_schur_complex_character(n: usize, m: usize, r: usize, s: usize, h: usize) -> PairSchurSum {
    let lambda = Partition::rectangle(s, n.saturating_sub(s + r));
    let mu = Partition::rectangle(s, m.saturating_sub(s + r));
    let head = Partition::rectangle(s, s + r);
    let mut out = PairSchurSum::new();
    for a in 0..=h {
        for (sh_l, nu_t) in schur_complex_terms(&lambda, a) {
            for (sh_m, rho_t) in schur_complex_terms(&mu, h - a) {
                let e_part = SchurSum::single(head.concat(sh_l.inner()).expect("fits"))
                    .mul(&SchurSum::single(rho_t.clone()))
                    .truncate(n);
                let f_part = SchurSum::single(head.concat(sh_m.inner()).expect("fits"))
                    .mul(&SchurSum::single(nu_t.clone()))
                    .truncate(m);
                out = out.add(&PairSchurSum::tensor(&e_part, &f_part));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use proptest::prelude::*;

    #[test]
    fn dim_examples() {
        assert_eq!(dim_schur(&partition![2, 1], 3), 8);
        assert_eq!(dim_schur(&partition![1, 1, 1, 1, 1], 4), 0);
        assert_eq!(dim_schur(&partition![2, 1, 1], 4), 15);
        assert_eq!(dim_schur(&Partition::empty(), 3), 1);
        assert_eq!(count_ssyt(&partition![2, 1], 3), 8);
        assert_eq!(dim_highest_weight(&[1, 0, 0, -1]), 15);
        assert_eq!(dim_highest_weight(&[0, 0, -1, -1]), 6);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&partition![2, 1], &partition![1], &partition![1, 1]), 1);
        assert_eq!(lr_coeff(&partition![3, 2], &partition![2, 1], &partition![1, 1]), 1);
        assert_eq!(lr_coeff(&partition![3], &partition![1], &partition![1, 1]), 0);
        assert_eq!(lr_coeff(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]), 2);
    }

    #[test]
    fn pieri_examples() {
        let mut want = SchurSum::single(partition![3]);
        want.add_term(partition![2, 1], 1);
        assert_eq!(pieri(&partition![1], 2, PieriKind::Row), want);
        assert_eq!(pieri(&Partition::empty(), 3, PieriKind::Column), SchurSum::single(partition![1, 1, 1]));
        // (i, 1^{r+i-1}) ⊗ S^2 never contains (i, 1^{r+i+1})
        for (i, r) in [(1, 1), (2, 1), (1, 2), (2, 3)] {
            let mut mu = vec![i];
            mu.extend(std::iter::repeat_n(1, r + i - 1));
            let mut target = vec![i];
            target.extend(std::iter::repeat_n(1, r + i + 1));
            let sum = pieri(&Partition::new(mu).unwrap(), 2, PieriKind::Row);
            assert_eq!(sum.coeff(&Partition::new(target).unwrap()), 0);
        }
    }

    #[test]
    fn skew_examples() {
        let sh = |o: Partition, i: Partition| SkewShape::new(o, i).unwrap();
        assert_eq!(skew_expand(&sh(partition![2, 2], partition![1])), SchurSum::single(partition![2, 1]));
        assert_eq!(skew_expand(&sh(partition![2, 1], Partition::empty())), SchurSum::single(partition![2, 1]));
        let mut want = SchurSum::single(partition![2]);
        want.add_term(partition![1, 1], 1);
        assert_eq!(skew_expand(&sh(partition![2, 1], partition![1])), want);
    }

    #[test]
    fn schur_complex_examples() {
        let t = schur_complex_terms(&partition![1, 1], 1);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].0, SkewShape::new(partition![1, 1], partition![1]).unwrap());
        assert_eq!(t[0].1, partition![1]);
        let t = schur_complex_terms(&partition![1, 1], 2);
        assert_eq!(t, vec![(SkewShape::new(partition![1, 1], partition![1, 1]).unwrap(), partition![2])]);
        let t = schur_complex_terms(&partition![2], 0);
        assert_eq!(t, vec![(SkewShape::new(partition![2], Partition::empty()).unwrap(), Partition::empty())]);
    }

    #[test]
    fn jpw_examples() {
        assert_eq!(jpw_character(1, 1, 0, 4).unwrap(), SchurSum::single(partition![1, 1]));
        assert_eq!(jpw_character(1, 1, 1, 4).unwrap(), SchurSum::single(partition![2, 1, 1]));
        assert!(jpw_character(1, 1, 3, 4).unwrap().is_empty());
        assert_eq!(
            jpw_character(2, 1, 0, 3),
            Err(SymfuncError::DimTooSmall { n: 3, sr: 3 })
        );
    }

    #[test]
    fn lascoux_examples() {
        let la = lascoux_character(1, 1, 0, 3, 3).unwrap();
        assert_eq!(la.len(), 1);
        assert_eq!(la.coeff(&partition![1, 1], &partition![1, 1]), 1);
        let la = lascoux_character(1, 1, 1, 3, 3).unwrap();
        assert_eq!(la.len(), 2);
        assert_eq!(la.coeff(&partition![2, 1], &partition![1, 1, 1]), 1);
        assert_eq!(la.coeff(&partition![1, 1, 1], &partition![2, 1]), 1);
        let la = lascoux_character(2, 0, 0, 2, 2).unwrap();
        assert_eq!(la.coeff(&Partition::empty(), &Partition::empty()), 1);
        assert_eq!(la.len(), 1);
        assert_eq!(lascoux_character(0, 1, 0, 3, 3), Err(SymfuncError::ZeroR));
    }

    #[test]
    fn twisted_complex_degree_zero_is_rectangle() {
        for (n, r, s) in [(4, 1, 1), (5, 1, 2), (5, 2, 2), (6, 1, 2)] {
            let c = twisted_schur_complex_character(n, r, s, 0);
            assert_eq!(c, SchurSum::single(Partition::rectangle(s, s + r)));
        }
    }

    #[test]
    fn json_shapes() {
        let mut s = SchurSum::single(partition![2, 1]);
        s.add_term(partition![1, 1, 1], 2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"[{"shape":[2,1],"coeff":1},{"shape":[1,1,1],"coeff":2}]"#);
        assert_eq!(serde_json::from_str::<SchurSum>(&j).unwrap(), s);
        let mut p = PairSchurSum::new();
        p.add_term(partition![1, 1], partition![1, 1], 1);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"[{"shapeE":[1,1],"shapeF":[1,1],"coeff":1}]"#);
    }

    fn partition_upto(max: usize) -> impl Strategy<Value = Partition> {
        (0usize..=max).prop_flat_map(|n| {
            let all = enumerate_partitions(n, None, None);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn pieri_matches_lr(mu in partition_upto(5), k in 1usize..4) {
            let via_lr = lr_product(&mu, &Partition::rectangle(k, 1));
            prop_assert_eq!(pieri(&mu, k, PieriKind::Row), via_lr);
            let via_lr = lr_product(&mu, &Partition::rectangle(1, k));
            prop_assert_eq!(pieri(&mu, k, PieriKind::Column), via_lr);
        }

        #[test]
        fn product_commutes(mu in partition_upto(4), nu in partition_upto(4)) {
            let a = SchurSum::single(mu.clone()).mul(&SchurSum::single(nu.clone()));
            let b = SchurSum::single(nu).mul(&SchurSum::single(mu));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn product_associates(a in partition_upto(3), b in partition_upto(2), c in partition_upto(2)) {
            let (a, b, c) = (SchurSum::single(a), SchurSum::single(b), SchurSum::single(c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn transpose_symmetry_of_lr(mu in partition_upto(4), nu in partition_upto(3)) {
            for (lambda, c) in lr_product(&mu, &nu).terms() {
                prop_assert_eq!(lr_coeff(&lambda.transpose(), &mu.transpose(), &nu.transpose()) as i64, c);
            }
        }

        #[test]
        fn hook_content_matches_ssyt(lambda in partition_upto(7), n in 0usize..5) {
            prop_assert_eq!(dim_schur(&lambda, n), count_ssyt(&lambda, n));
        }

        #[test]
        fn schur_complex_superdimension(mu in partition_upto(5), a in 0usize..4, b in 0usize..4) {
            // the alternating sum of term dimensions is the content polynomial at a - b
            let mut sdim: i128 = 0;
            for i in 0..=mu.size() {
                for (sh, nu_t) in schur_complex_terms(&mu, i) {
                    let term = skew_expand(&sh).dim(a) * dim_schur(&nu_t, b) as i128;
                    sdim += if i % 2 == 0 { term } else { -term };
                }
            }
            let x = a as i128 - b as i128;
            let conj = mu.transpose();
            let (mut num, mut den) = (1i128, 1i128);
            for (i, j) in mu.cells() {
                num *= x + j as i128 - i as i128;
                den *= ((mu.part(i) - j) + (conj.part(j) - i) - 1) as i128;
            }
            prop_assert_eq!(sdim, num / den);
        }
    }
}
