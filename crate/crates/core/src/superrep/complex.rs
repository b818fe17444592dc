//! Abstract weight-graded modules with explicit generator matrices.
//!
//! A [`TwoSidedComplex`] stores one coordinate space per weight and, for each
//! generator, one matrix per source weight. Everything downstream of the
//! tensor construction (characters, highest weight vectors, isotypic
//! pieces, orbit closures, axioms) runs here.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{quotient, relations, rat, Echelon, RationalMatrix, SparseVec, Subspace};
use crate::partitions::Partition;
use crate::symfunc::{PairSchurSum, SchurSum};

use super::algebra::{AlgebraKind, SuperAlgebra};
use super::space::{Parity, Weight};
use super::SuperrepError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CxBlock {
    pub weight: Weight,
    pub degree: usize,
    pub dim: usize,
}

/// A weight-homogeneous operator: for each source block, the target block
/// and the matrix between them (`None` when the operator vanishes there).
#[derive(Clone, Debug)]
pub struct BlockOp {
    pub name: String,
    pub parity: Parity,
    pub shift: Weight,
    pub maps: Vec<Option<(usize, RationalMatrix)>>,
}

impl BlockOp {
    pub fn zero(name: impl Into<String>, parity: Parity, shift: Weight, blocks: usize) -> Self {
        BlockOp { name: name.into(), parity, shift, maps: vec![None; blocks] }
    }

    /// Image of a vector of block `b`; `None` when it is zero.
    pub fn apply(&self, b: usize, v: &SparseVec) -> Option<(usize, SparseVec)> {
        let (t, m) = self.maps[b].as_ref()?;
        let out = m.apply(v);
        (!out.is_zero()).then_some((*t, out))
    }

    /// Matrix of `self ∘ other` on block `b`.
    fn after(&self, other: &BlockOp, b: usize) -> Option<(usize, RationalMatrix)> {
        let (t1, m1) = other.maps[b].as_ref()?;
        let (t2, m2) = self.maps[*t1].as_ref()?;
        Some((*t2, m2.mul(m1).expect("block shapes agree")))
    }

    pub fn negated(&self) -> Self {
        BlockOp {
            name: format!("-{}", self.name),
            parity: self.parity,
            shift: self.shift.clone(),
            maps: self.maps.iter().map(|o| o.as_ref().map(|(t, m)| (*t, m.scale(&rat(-1))))).collect(),
        }
    }
}

/// A parameterized family of odd operators, stored on a basis of the
/// parameter space.
#[derive(Clone, Debug)]
pub struct OddOperatorFamily {
    pub degree_shift: i32,
    pub ops: Vec<BlockOp>,
}

impl OddOperatorFamily {
    pub fn new(ops: Vec<BlockOp>, degree_shift: i32) -> Self {
        OddOperatorFamily { degree_shift, ops }
    }

    pub fn param_space_dim(&self) -> usize {
        self.ops.len()
    }
}

/// Which generators to use for closures and images.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Even,
    Phi,
    PhiPrime,
    All,
}

/// A subspace of each block (in block coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    pub spaces: Vec<Subspace>,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim()).sum()
    }

    pub fn contains(&self, b: usize, v: &SparseVec) -> bool {
        self.spaces[b].contains(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub sq_zero_phi: bool,
    pub sq_zero_phi_prime: bool,
    pub bracket: bool,
    /// The commutator form of the mixed relation; recorded, never asserted.
    pub bracket_commutator_form: bool,
    pub degree_shift: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.sq_zero_phi && self.sq_zero_phi_prime && self.bracket && self.degree_shift
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Irreducibility {
    Irreducible,
    Reducible { weight: Weight, closure_dim: usize, total_dim: usize },
    Inconclusive { reason: String },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// A finite-dimensional weight module for a Z-graded superalgebra, with the
/// odd generators split into the lowering family `Φ` and the raising family `Φ′`.
#[derive(Clone, Debug)]
pub struct TwoSidedComplex {
    algebra: Arc<SuperAlgebra>,
    twist: usize,
    blocks: Vec<CxBlock>,
    index: HashMap<Weight, usize>,
    even: Vec<BlockOp>,
    phi: OddOperatorFamily,
    phi_prime: OddOperatorFamily,
}

/// E*-label of the weight `w` after twisting by `(det E*)^s`.
pub fn pe_label(w: &[i64], s: usize) -> Option<Partition> {
    let parts: Option<Vec<usize>> = w.iter().rev().map(|&x| usize::try_from(s as i64 - x).ok()).collect();
    Partition::new(parts?).ok()
}

/// Inverse of [`pe_label`].
pub fn pe_weight(p: &Partition, n: usize, s: usize) -> Weight {
    let padded = p.padded(n);
    (0..n).map(|i| s as i64 - padded[n - 1 - i] as i64).collect()
}

/// `(E*, F)` labels of the weight `w` after twisting by `(det E*)^s ⊗ (det F)^s`.
pub fn gl_labels(w: &[i64], n: usize, s: usize) -> Option<(Partition, Partition)> {
    let p = pe_label(&w[..n], s)?;
    let q: Option<Vec<usize>> = w[n..].iter().map(|&x| usize::try_from(x + s as i64).ok()).collect();
    Some((p, Partition::new(q?).ok()?))
}

/// Inverse of [`gl_labels`].
pub fn gl_weight(p: &Partition, q: &Partition, n: usize, m: usize, s: usize) -> Weight {
    let mut w = pe_weight(p, n, s);
    w.extend(q.padded(m).into_iter().map(|x| x as i64 - s as i64));
    w
}

impl TwoSidedComplex {
    pub fn new(
        algebra: Arc<SuperAlgebra>,
        twist: usize,
        blocks: Vec<CxBlock>,
        even: Vec<BlockOp>,
        phi: OddOperatorFamily,
        phi_prime: OddOperatorFamily,
    ) -> Self {
        let index = blocks.iter().enumerate().map(|(i, b)| (b.weight.clone(), i)).collect();
        TwoSidedComplex { algebra, twist, blocks, index, even, phi, phi_prime }
    }

    /// The one-dimensional trivial module in degree 0.
    pub fn trivial(algebra: Arc<SuperAlgebra>) -> Self {
        let rank = algebra.rank();
        let blocks = vec![CxBlock { weight: vec![0; rank], degree: 0, dim: 1 }];
        let zero = |g: &super::algebra::GeneratorOp| BlockOp::zero(g.name.clone(), g.parity, g.shift.clone(), 1);
        let even = algebra.even.iter().map(zero).collect();
        let phi = OddOperatorFamily::new(algebra.phi.iter().map(zero).collect(), -1);
        let phi_prime = OddOperatorFamily::new(algebra.phi_prime.iter().map(zero).collect(), 1);
        Self::new(algebra, 0, blocks, even, phi, phi_prime)
    }

    pub fn algebra(&self) -> &Arc<SuperAlgebra> {
        &self.algebra
    }

    pub fn twist(&self) -> usize {
        self.twist
    }

    pub fn blocks(&self) -> &[CxBlock] {
        &self.blocks
    }

    pub fn block_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn even(&self) -> &[BlockOp] {
        &self.even
    }

    pub fn phi(&self) -> &OddOperatorFamily {
        &self.phi
    }

    pub fn phi_prime(&self) -> &OddOperatorFamily {
        &self.phi_prime
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim).sum()
    }

    pub fn graded_dims(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            *out.entry(b.degree).or_insert(0) += b.dim;
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.graded_dims().into_keys().collect()
    }

    fn ops(&self, family: Family) -> Vec<&BlockOp> {
        match family {
            Family::Even => self.even.iter().collect(),
            Family::Phi => self.phi.ops.iter().collect(),
            Family::PhiPrime => self.phi_prime.ops.iter().collect(),
            Family::All => self.even.iter().chain(&self.phi.ops).chain(&self.phi_prime.ops).collect(),
        }
    }

    /// Copy with `Φ′` negated but the bracket constants unchanged; a
    /// negative control for [`TwoSidedComplex::verify_axioms`].
    pub fn with_corrupted_phi_prime(&self) -> Self {
        let mut out = self.clone();
        out.phi_prime.ops = self.phi_prime.ops.iter().map(|o| o.negated()).collect();
        out
    }

    fn raising_images(&self, b: usize, v: &SparseVec) -> SparseVec {
        // concatenate the images under every raising operator
        let mut parts = Vec::new();
        let mut offset = 0;
        for &k in &self.algebra.raising {
            let op = &self.even[k];
            if let Some((t, m)) = &op.maps[b] {
                parts.extend(m.apply(v).shifted(offset).entries().iter().cloned());
                offset += self.blocks[*t].dim;
            }
        }
        SparseVec::from_sorted(parts)
    }

    /// Basis of the simultaneous kernel of the raising operators in block `b`.
    pub fn highest_weight_vectors(&self, b: usize) -> Vec<SparseVec> {
        let cols: Vec<SparseVec> = (0..self.blocks[b].dim).map(|j| self.raising_images(b, &SparseVec::unit(j))).collect();
        relations(&cols)
    }

    /// Highest weight vectors lying in `sub`, for block `b`.
    pub fn highest_weight_vectors_in(&self, sub: &GradedSubspace, b: usize) -> Vec<SparseVec> {
        let basis = sub.spaces[b].basis();
        let cols: Vec<SparseVec> = basis.iter().map(|v| self.raising_images(b, v)).collect();
        relations(&cols).iter().map(|x| sub.spaces[b].combine(x)).collect()
    }

    /// Multiplicities of highest weights in degree `h`, with a dimension check.
    pub fn highest_weights(&self, h: usize) -> Result<BTreeMap<Weight, usize>, SuperrepError> {
        let found: Vec<(Weight, usize)> = self
            .blocks
            .par_iter()
            .enumerate()
            .filter(|(_, b)| b.degree == h && self.algebra.is_dominant(&b.weight))
            .map(|(i, b)| (b.weight.clone(), self.highest_weight_vectors(i).len()))
            .filter(|(_, k)| *k > 0)
            .collect();
        let out: BTreeMap<Weight, usize> = found.into_iter().collect();
        let expected = self.graded_dims().get(&h).copied().unwrap_or(0) as u64;
        let got: u64 = out.iter().map(|(w, k)| *k as u64 * self.algebra.irrep_dim(w)).sum();
        if got != expected {
            return Err(SuperrepError::Decomposition { degree: h, expected, got });
        }
        Ok(out)
    }

    /// Same as [`TwoSidedComplex::highest_weights`] restricted to a
    /// submodule for the even part.
    pub fn highest_weights_in(&self, sub: &GradedSubspace, h: usize) -> Result<BTreeMap<Weight, usize>, SuperrepError> {
        let mut out = BTreeMap::new();
        let mut expected = 0u64;
        for (i, b) in self.blocks.iter().enumerate() {
            if b.degree != h {
                continue;
            }
            expected += sub.spaces[i].dim() as u64;
            if self.algebra.is_dominant(&b.weight) {
                let k = self.highest_weight_vectors_in(sub, i).len();
                if k > 0 {
                    out.insert(b.weight.clone(), k);
                }
            }
        }
        let got: u64 = out.iter().map(|(w, k)| *k as u64 * self.algebra.irrep_dim(w)).sum();
        if got != expected {
            return Err(SuperrepError::Decomposition { degree: h, expected, got });
        }
        Ok(out)
    }

    fn to_schur(&self, hw: &BTreeMap<Weight, usize>) -> Result<SchurSum, SuperrepError> {
        let mut out = SchurSum::new();
        for (w, k) in hw {
            let p = pe_label(w, self.twist).ok_or_else(|| SuperrepError::Label(w.clone()))?;
            out.add_term(p, *k as i64);
        }
        Ok(out)
    }

    fn to_pair(&self, hw: &BTreeMap<Weight, usize>) -> Result<PairSchurSum, SuperrepError> {
        let AlgebraKind::GeneralLinear { n, .. } = self.algebra.kind else {
            return Err(SuperrepError::Invalid("pair labels need a general linear algebra".into()));
        };
        let mut out = PairSchurSum::new();
        for (w, k) in hw {
            let (p, q) = gl_labels(w, n, self.twist).ok_or_else(|| SuperrepError::Label(w.clone()))?;
            out.add_term(p, q, *k as i64);
        }
        Ok(out)
    }

    /// Twisted character of degree `h` in labels of `E*` (periplectic case).
    pub fn schur_character(&self, h: usize) -> Result<SchurSum, SuperrepError> {
        self.to_schur(&self.highest_weights(h)?)
    }

    pub fn schur_character_in(&self, sub: &GradedSubspace, h: usize) -> Result<SchurSum, SuperrepError> {
        self.to_schur(&self.highest_weights_in(sub, h)?)
    }

    /// Twisted character of degree `h` in labels `(E*, F)` (general linear case).
    pub fn pair_character(&self, h: usize) -> Result<PairSchurSum, SuperrepError> {
        self.to_pair(&self.highest_weights(h)?)
    }

    /// Label of a block weight after the twist.
    pub fn weight_for_label(&self, p: &Partition, q: Option<&Partition>) -> Weight {
        match (self.algebra.kind, q) {
            (AlgebraKind::Periplectic { n }, _) => pe_weight(p, n, self.twist),
            (AlgebraKind::GeneralLinear { n, m }, Some(q)) => gl_weight(p, q, n, m, self.twist),
            (AlgebraKind::GeneralLinear { n, m }, None) => gl_weight(p, &Partition::empty(), n, m, self.twist),
        }
    }

    pub fn zero_subspace(&self) -> GradedSubspace {
        GradedSubspace { spaces: self.blocks.iter().map(|b| Subspace::zero(b.dim)).collect() }
    }

    pub fn full_subspace(&self) -> GradedSubspace {
        GradedSubspace { spaces: self.blocks.iter().map(|b| Subspace::full(b.dim)).collect() }
    }

    /// Smallest subspace containing `seeds` and closed under `family`.
    /// Stops early once `stop_at` dimensions are reached.
    pub fn closure(&self, seeds: &[(usize, SparseVec)], family: Family, stop_at: Option<usize>) -> GradedSubspace {
        let ops = self.ops(family);
        let mut ech: Vec<Echelon> = vec![Echelon::new(); self.blocks.len()];
        let mut queue = VecDeque::new();
        let mut total = 0;
        for (b, v) in seeds {
            if ech[*b].insert(v) {
                total += 1;
                queue.push_back((*b, v.clone()));
            }
        }
        while let Some((b, v)) = queue.pop_front() {
            if stop_at.is_some_and(|s| total >= s) {
                break;
            }
            for op in &ops {
                if let Some((t, w)) = op.apply(b, &v) {
                    if ech[t].insert(&w) {
                        total += 1;
                        queue.push_back((t, w));
                    }
                }
            }
        }
        GradedSubspace {
            spaces: ech.iter().zip(&self.blocks).map(|(e, b)| Subspace::from_echelon(b.dim, e)).collect(),
        }
    }

    /// The isotypic component of highest weight `w`: the even-part closure of
    /// its highest weight vectors.
    pub fn isotypic(&self, w: &Weight) -> GradedSubspace {
        match self.block_index(w) {
            Some(b) => {
                let seeds: Vec<(usize, SparseVec)> = self.highest_weight_vectors(b).into_iter().map(|v| (b, v)).collect();
                self.closure(&seeds, Family::Even, None)
            }
            None => self.zero_subspace(),
        }
    }

    /// Span of `g(v)` over the generators `g` of `family` and `v` in `sub`.
    pub fn family_image(&self, family: Family, sub: &GradedSubspace) -> GradedSubspace {
        let mut vecs: Vec<Vec<SparseVec>> = vec![Vec::new(); self.blocks.len()];
        for op in self.ops(family) {
            for (b, s) in sub.spaces.iter().enumerate() {
                for v in s.basis() {
                    if let Some((t, w)) = op.apply(b, v) {
                        vecs[t].push(w);
                    }
                }
            }
        }
        GradedSubspace {
            spaces: vecs.iter().zip(&self.blocks).map(|(v, b)| Subspace::span(b.dim, v)).collect(),
        }
    }

    pub fn preserves(&self, family: Family, sub: &GradedSubspace) -> bool {
        self.ops(family).par_iter().all(|op| {
            sub.spaces
                .iter()
                .enumerate()
                .all(|(b, s)| s.basis().iter().all(|v| op.apply(b, v).is_none_or(|(t, w)| sub.spaces[t].contains(&w))))
        })
    }

    /// The quotient by a subspace closed under every generator.
    pub fn quotient(&self, sub: &GradedSubspace) -> Result<TwoSidedComplex, SuperrepError> {
        let qs: Vec<_> = self
            .blocks
            .iter()
            .zip(&sub.spaces)
            .map(|(b, s)| quotient(&Subspace::full(b.dim), s))
            .collect::<Result<_, _>>()?;
        let mut new_index = vec![None; self.blocks.len()];
        let mut blocks = Vec::new();
        for (i, (b, q)) in self.blocks.iter().zip(&qs).enumerate() {
            if q.dim() > 0 {
                new_index[i] = Some(blocks.len());
                blocks.push(CxBlock { weight: b.weight.clone(), degree: b.degree, dim: q.dim() });
            }
        }
        let induce = |op: &BlockOp| -> Result<BlockOp, SuperrepError> {
            let mut maps = vec![None; blocks.len()];
            for (b, s) in sub.spaces.iter().enumerate() {
                for v in s.basis() {
                    if let Some((t, w)) = op.apply(b, v) {
                        if !qs[t].map.apply(&w).is_zero() {
                            return Err(SuperrepError::NotPreserved {
                                op: op.name.clone(),
                                weight: self.blocks[b].weight.clone(),
                            });
                        }
                    }
                }
                let (Some(src), Some((t, _))) = (new_index[b], op.maps[b].as_ref()) else {
                    continue;
                };
                let Some(dst) = new_index[*t] else { continue };
                let cols = qs[b]
                    .lifts
                    .iter()
                    .map(|&l| op.apply(b, &SparseVec::unit(l)).map_or_else(SparseVec::new, |(_, w)| qs[*t].map.apply(&w)))
                    .collect();
                maps[src] = Some((dst, RationalMatrix::from_columns(blocks[dst].dim, cols)));
            }
            Ok(BlockOp { name: op.name.clone(), parity: op.parity, shift: op.shift.clone(), maps })
        };
        let even = self.even.iter().map(&induce).collect::<Result<_, _>>()?;
        let phi = self.phi.ops.iter().map(&induce).collect::<Result<_, _>>()?;
        let phi_prime = self.phi_prime.ops.iter().map(&induce).collect::<Result<_, _>>()?;
        Ok(TwoSidedComplex::new(
            self.algebra.clone(),
            self.twist,
            blocks,
            even,
            OddOperatorFamily::new(phi, self.phi.degree_shift),
            OddOperatorFamily::new(phi_prime, self.phi_prime.degree_shift),
        ))
    }

    /// `A∘B + sign·B∘A` on block `b`, minus `rhs`, is zero.
    fn check_relation(&self, a: &BlockOp, bop: &BlockOp, sign: i64, rhs: &[(usize, crate::exactla::Rational)], b: usize) -> bool {
        let mut acc: Option<(usize, RationalMatrix)> = None;
        let mut add = |term: Option<(usize, RationalMatrix)>, c: &crate::exactla::Rational| {
            if let Some((t, m)) = term {
                let m = m.scale(c);
                acc = Some(match acc.take() {
                    None => (t, m),
                    Some((t0, m0)) => {
                        debug_assert_eq!(t0, t);
                        (t0, m0.add(&m).expect("same block shapes"))
                    }
                });
            }
        };
        add(a.after(bop, b), &rat(1));
        add(bop.after(a, b), &rat(sign));
        for (k, c) in rhs {
            add(self.even[*k].maps[b].clone(), &-c.clone());
        }
        acc.is_none_or(|(_, m)| m.is_zero())
    }

    /// Exact checks of the square-zero and mixed-bracket relations on every
    /// pair of parameter basis elements.
    pub fn verify_axioms(&self) -> AxiomReport {
        let nb = self.blocks.len();
        let phi = &self.phi.ops;
        let prime = &self.phi_prime.ops;
        let square_zero = |fam: &[BlockOp]| -> Vec<String> {
            let pairs: Vec<(usize, usize)> = (0..fam.len()).flat_map(|a| (a..fam.len()).map(move |b| (a, b))).collect();
            pairs
                .par_iter()
                .filter(|&&(a, c)| !(0..nb).all(|b| self.check_relation(&fam[a], &fam[c], 1, &[], b)))
                .map(|&(a, c)| format!("{} {} does not anticommute", fam[a].name, fam[c].name))
                .collect()
        };
        let f_phi = square_zero(phi);
        let f_prime = square_zero(prime);
        let pairs: Vec<(usize, usize)> = (0..phi.len()).flat_map(|a| (0..prime.len()).map(move |b| (a, b))).collect();
        let bracket_fail: Vec<String> = pairs
            .par_iter()
            .filter(|&&(a, c)| !(0..nb).all(|b| self.check_relation(&phi[a], &prime[c], 1, self.algebra.bracket(a, c), b)))
            .map(|&(a, c)| format!("[{}, {}] differs from the even action", phi[a].name, prime[c].name))
            .collect();
        let commutator_ok = pairs
            .par_iter()
            .all(|&(a, c)| (0..nb).all(|b| self.check_relation(&phi[a], &prime[c], -1, self.algebra.bracket(a, c), b)));
        let shift_ok = |fam: &OddOperatorFamily| {
            fam.ops.iter().all(|op| {
                op.maps.iter().enumerate().all(|(b, m)| {
                    m.as_ref().is_none_or(|(t, _)| {
                        self.blocks[*t].degree as i64 - self.blocks[b].degree as i64 == fam.degree_shift as i64
                    })
                })
            })
        };
        let degree_shift = shift_ok(&self.phi) && shift_ok(&self.phi_prime);
        let mut failures: Vec<String> = f_phi.iter().chain(&f_prime).chain(&bracket_fail).take(10).cloned().collect();
        if !degree_shift {
            failures.push("an odd operator has the wrong homological degree".into());
        }
        AxiomReport {
            sq_zero_phi: f_phi.is_empty(),
            sq_zero_phi_prime: f_prime.is_empty(),
            bracket: bracket_fail.is_empty(),
            bracket_commutator_form: commutator_ok,
            degree_shift,
            failures,
        }
    }

    /// Every highest weight vector (of a basis of each highest weight space)
    /// must generate the whole module. With all multiplicities one this
    /// decides irreducibility.
    pub fn check_irreducible(&self) -> Irreducibility {
        let total = self.total_dim();
        if total == 0 {
            return Irreducibility::Inconclusive { reason: "zero module".into() };
        }
        let mut multiple = None;
        for (b, blk) in self.blocks.iter().enumerate() {
            if !self.algebra.is_dominant(&blk.weight) {
                continue;
            }
            let hw = self.highest_weight_vectors(b);
            if hw.len() > 1 {
                multiple = Some(blk.weight.clone());
            }
            for v in hw {
                let cl = self.closure(&[(b, v)], Family::All, Some(total));
                if cl.dim() < total {
                    return Irreducibility::Reducible { weight: blk.weight.clone(), closure_dim: cl.dim(), total_dim: total };
                }
            }
        }
        match multiple {
            Some(w) => Irreducibility::Inconclusive { reason: format!("highest weight {w:?} has multiplicity > 1") },
            None => Irreducibility::Irreducible,
        }
    }
}
