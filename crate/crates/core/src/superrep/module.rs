//! Weight-graded subspaces of a tensor ambient and the passage to an
//! abstract two-sided complex.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{quotient, relations, Echelon, Quotient, RationalMatrix, SparseVec, Subspace};

use super::algebra::{GeneratorOp, SuperAlgebra};
use super::complex::{BlockOp, CxBlock, OddOperatorFamily, TwoSidedComplex};
use super::invariants::{Insertion, Invariant};
use super::space::{TensorAmbient, Weight};
use super::symmetrizer::YoungSymmetrizer;
use super::SuperrepError;

/// One weight space of a [`GradedSubmodule`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBlock {
    pub degree: usize,
    pub space: Subspace,
}

/// Explicit weight spaces of a submodule of a tensor ambient. Vectors use
/// the ambient's global word ids as coordinates.
#[derive(Clone, Debug)]
pub struct GradedSubmodule {
    ambient: TensorAmbient,
    blocks: BTreeMap<Weight, WeightBlock>,
}

#[derive(Serialize)]
pub struct DegreeSummary {
    pub h: usize,
    pub dim: usize,
}

impl GradedSubmodule {
    pub fn zero(ambient: TensorAmbient) -> Self {
        GradedSubmodule { ambient, blocks: BTreeMap::new() }
    }

    pub fn ambient(&self) -> &TensorAmbient {
        &self.ambient
    }

    pub fn blocks(&self) -> &BTreeMap<Weight, WeightBlock> {
        &self.blocks
    }

    pub fn block(&self, w: &Weight) -> Option<&WeightBlock> {
        self.blocks.get(w)
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.space.dim()).sum()
    }

    /// Dimension per homological degree.
    pub fn graded_dims(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for b in self.blocks.values() {
            *out.entry(b.degree).or_insert(0) += b.space.dim();
        }
        out
    }

    fn from_vectors(ambient: TensorAmbient, grouped: BTreeMap<Weight, (usize, Vec<SparseVec>)>) -> Self {
        let dim = ambient.dim();
        let blocks = grouped
            .into_par_iter()
            .map(|(w, (degree, vecs))| (w, WeightBlock { degree, space: Subspace::span(dim, &vecs) }))
            .filter(|(_, b)| !b.space.is_zero())
            .collect();
        GradedSubmodule { ambient, blocks }
    }

    /// Per-block intersection.
    pub fn intersect(&self, other: &GradedSubmodule) -> Result<GradedSubmodule, SuperrepError> {
        let mut blocks = BTreeMap::new();
        for (w, b) in &self.blocks {
            if let Some(o) = other.blocks.get(w) {
                let space = b.space.intersect(&o.space)?;
                if !space.is_zero() {
                    blocks.insert(w.clone(), WeightBlock { degree: b.degree, space });
                }
            }
        }
        Ok(GradedSubmodule { ambient: self.ambient.clone(), blocks })
    }

    pub fn contains_submodule(&self, other: &GradedSubmodule) -> bool {
        other.blocks.iter().all(|(w, b)| match self.blocks.get(w) {
            Some(mine) => mine.space.contains_subspace(&b.space),
            None => b.space.is_zero(),
        })
    }

    /// Whether `op` maps every weight space into the module.
    pub fn is_preserved_by(&self, op: &GeneratorOp) -> bool {
        self.blocks.iter().all(|(w, b)| {
            let target: Weight = w.iter().zip(&op.shift).map(|(a, s)| a + s).collect();
            b.space.basis().iter().all(|v| {
                let image = op.apply(&self.ambient, v);
                image.is_zero() || self.blocks.get(&target).is_some_and(|t| t.space.contains(&image))
            })
        })
    }

    /// Kernel of a contraction restricted to the module.
    pub fn kernel_of_contraction(&self, ins: &Insertion, inv: &Invariant) -> GradedSubmodule {
        let blocks = self
            .blocks
            .par_iter()
            .map(|(w, b)| {
                let images: Vec<SparseVec> = b.space.basis().iter().map(|v| ins.contract(inv, v)).collect();
                let kernel: Vec<SparseVec> = relations(&images).iter().map(|x| b.space.combine(x)).collect();
                (w.clone(), WeightBlock { degree: b.degree, space: Subspace::span(self.ambient.dim(), &kernel) })
            })
            .filter(|(_, b)| !b.space.is_zero())
            .collect();
        GradedSubmodule { ambient: self.ambient.clone(), blocks }
    }

    /// Dimension of the image of a contraction restricted to the module.
    pub fn contraction_rank(&self, ins: &Insertion, inv: &Invariant, degree: Option<usize>) -> usize {
        self.blocks
            .values()
            .filter(|b| degree.is_none_or(|d| b.degree == d))
            .map(|b| {
                let images: Vec<SparseVec> = b.space.basis().iter().map(|v| ins.contract(inv, v)).collect();
                Subspace::span(ins.source.dim(), &images).dim()
            })
            .sum()
    }

    /// Passes to the abstract complex `self / lower`, with every generator of
    /// `algebra` induced on the quotient. Fails if some generator does not
    /// preserve `self` or `lower`.
    pub fn to_complex(
        &self,
        lower: &GradedSubmodule,
        algebra: Arc<SuperAlgebra>,
        twist: usize,
    ) -> Result<TwoSidedComplex, SuperrepError> {
        let dim = self.ambient.dim();
        let mut quotients: BTreeMap<Weight, Quotient> = BTreeMap::new();
        for (w, b) in &self.blocks {
            let low = lower.blocks.get(w).map_or_else(|| Subspace::zero(dim), |l| l.space.clone());
            let q = quotient(&b.space, &low).map_err(|_| SuperrepError::NotPreserved {
                op: "inclusion".into(),
                weight: w.clone(),
            })?;
            quotients.insert(w.clone(), q);
        }
        for w in lower.blocks.keys() {
            if !self.blocks.contains_key(w) {
                return Err(SuperrepError::NotPreserved { op: "inclusion".into(), weight: w.clone() });
            }
        }
        let cx_blocks: Vec<CxBlock> = quotients
            .iter()
            .filter(|(_, q)| q.dim() > 0)
            .map(|(w, q)| CxBlock { weight: w.clone(), degree: self.blocks[w].degree, dim: q.dim() })
            .collect();
        let index: HashMap<Weight, usize> = cx_blocks.iter().enumerate().map(|(i, b)| (b.weight.clone(), i)).collect();

        let induce = |op: &GeneratorOp| -> Result<BlockOp, SuperrepError> {
            let mut maps = vec![None; cx_blocks.len()];
            for (w, b) in &self.blocks {
                let target: Weight = w.iter().zip(&op.shift).map(|(a, s)| a + s).collect();
                let tblock = self.blocks.get(&target);
                let image_coords = |v: &SparseVec| -> Result<Option<SparseVec>, SuperrepError> {
                    let image = op.apply(&self.ambient, v);
                    if image.is_zero() {
                        return Ok(None);
                    }
                    let t = tblock.ok_or_else(|| SuperrepError::NotPreserved { op: op.name.clone(), weight: w.clone() })?;
                    let coords = t
                        .space
                        .coordinates(&image)
                        .ok_or_else(|| SuperrepError::NotPreserved { op: op.name.clone(), weight: w.clone() })?;
                    Ok(Some(coords))
                };
                // the killed subspace must map into the killed subspace
                if let Some(low) = lower.blocks.get(w) {
                    for v in low.space.basis() {
                        if let Some(c) = image_coords(v)? {
                            if !quotients[&target].map.apply(&c).is_zero() {
                                return Err(SuperrepError::NotPreserved {
                                    op: format!("{} (killed part)", op.name),
                                    weight: w.clone(),
                                });
                            }
                        }
                    }
                }
                let q = &quotients[w];
                let mut cols = Vec::with_capacity(q.dim());
                for &t in &q.lifts {
                    let col = match image_coords(&b.space.basis()[t])? {
                        Some(c) => quotients[&target].map.apply(&c),
                        None => SparseVec::new(),
                    };
                    cols.push(col);
                }
                if let (Some(&src), Some(&dst)) = (index.get(w), index.get(&target)) {
                    let rows = cx_blocks[dst].dim;
                    maps[src] = Some((dst, RationalMatrix::from_columns(rows, cols)));
                }
            }
            Ok(BlockOp { name: op.name.clone(), parity: op.parity, shift: op.shift.clone(), maps })
        };

        let even: Vec<BlockOp> = algebra.even.par_iter().map(&induce).collect::<Result<_, _>>()?;
        let phi: Vec<BlockOp> = algebra.phi.par_iter().map(&induce).collect::<Result<_, _>>()?;
        let phi_prime: Vec<BlockOp> = algebra.phi_prime.par_iter().map(&induce).collect::<Result<_, _>>()?;
        Ok(TwoSidedComplex::new(
            algebra,
            twist,
            cx_blocks,
            even,
            OddOperatorFamily::new(phi, -1),
            OddOperatorFamily::new(phi_prime, 1),
        ))
    }

    pub fn summary(&self) -> Vec<DegreeSummary> {
        self.graded_dims().into_iter().map(|(h, dim)| DegreeSummary { h, dim }).collect()
    }
}

/// The image `c · (V_{k_1} ⊗ ... ⊗ V_{k_d})` of a product of Young
/// symmetrizers, computed one content class at a time.
pub fn young_symmetrizer_image(
    sym: &YoungSymmetrizer,
    ambient: &TensorAmbient,
    cap: usize,
) -> Result<GradedSubmodule, SuperrepError> {
    ambient.check_cap(cap)?;
    if sym.degree() != ambient.degree() {
        return Err(SuperrepError::Invalid(format!(
            "symmetrizer of degree {} on an ambient of degree {}",
            sym.degree(),
            ambient.degree()
        )));
    }
    let mut classes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for id in 0..ambient.dim() {
        classes.entry(sym.content_key(&ambient.decode(id))).or_default().push(id);
    }
    let per_class: Vec<(Weight, usize, Vec<SparseVec>)> = classes
        .into_par_iter()
        .map(|(_, ids)| {
            let w0 = ambient.decode(ids[0]);
            let mut ech = Echelon::new();
            for &id in &ids {
                ech.insert(&sym.apply_id(ambient, id));
            }
            (ambient.word_weight(&w0), ambient.word_degree(&w0), ech.rref())
        })
        .collect();
    let mut grouped: BTreeMap<Weight, (usize, Vec<SparseVec>)> = BTreeMap::new();
    for (w, d, vecs) in per_class {
        grouped.entry(w).or_insert_with(|| (d, Vec::new())).1.extend(vecs);
    }
    Ok(GradedSubmodule::from_vectors(ambient.clone(), grouped))
}

/// The image of `u ↦ c(inv inserted into u)` over all words `u` of the
/// insertion's source ambient.
pub fn trace_image(
    ins: &Insertion,
    inv: &Invariant,
    sym: &YoungSymmetrizer,
    cap: usize,
) -> Result<GradedSubmodule, SuperrepError> {
    ins.source.check_cap(cap)?;
    let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for id in 0..ins.source.dim() {
        by_weight.entry(ins.source.word_weight(&ins.source.decode(id))).or_default().push(id);
    }
    let pieces: Vec<(Weight, usize, Vec<SparseVec>)> = by_weight
        .into_par_iter()
        .map(|(_, ids)| {
            let vecs: Vec<SparseVec> = ids.iter().map(|&id| ins.trace_word(inv, Some(sym), id)).filter(|v| !v.is_zero()).collect();
            match vecs.first().and_then(|v| v.leading()) {
                Some(lead) => {
                    let w = ins.target.decode(lead);
                    (ins.target.word_weight(&w), ins.target.word_degree(&w), vecs)
                }
                None => (Vec::new(), 0, Vec::new()),
            }
        })
        .filter(|(_, _, v)| !v.is_empty())
        .collect();
    let mut grouped: BTreeMap<Weight, (usize, Vec<SparseVec>)> = BTreeMap::new();
    for (w, d, vecs) in pieces {
        grouped.entry(w).or_insert_with(|| (d, Vec::new())).1.extend(vecs);
    }
    Ok(GradedSubmodule::from_vectors(ins.target.clone(), grouped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::superrep::space::SuperSpace;

    #[test]
    fn exterior_square_dims() {
        // V of dim (2|2): ∧²V_0 ⊕ V_0⊗V_1 ⊕ S²V_1
        let v = Arc::new(SuperSpace::periplectic(2));
        let amb = TensorAmbient::power(v, 2);
        let m = young_symmetrizer_image(&YoungSymmetrizer::new(&partition![1, 1]), &amb, 1000).unwrap();
        assert_eq!(m.graded_dims().into_values().collect::<Vec<_>>(), vec![1, 4, 3]);
        let v = Arc::new(SuperSpace::periplectic(4));
        let amb = TensorAmbient::power(v, 2);
        let m = young_symmetrizer_image(&YoungSymmetrizer::new(&partition![1, 1]), &amb, 1000).unwrap();
        assert_eq!(m.graded_dims().into_values().collect::<Vec<_>>(), vec![6, 16, 10]);
    }

    #[test]
    fn symmetric_power_of_even_space() {
        for (n, d) in [(3usize, 2usize), (2, 4), (4, 3)] {
            let amb = TensorAmbient::power(Arc::new(SuperSpace::purely_even(n)), d);
            let m = young_symmetrizer_image(&YoungSymmetrizer::new(&Partition::rectangle(d, 1)), &amb, 1000).unwrap();
            let binom = (0..d).fold(1usize, |acc, k| acc * (n + k) / (k + 1));
            assert_eq!(m.dim(), binom);
        }
    }

    #[test]
    fn cap_refusal() {
        let amb = TensorAmbient::power(Arc::new(SuperSpace::periplectic(5)), 4);
        let r = young_symmetrizer_image(&YoungSymmetrizer::new(&partition![2, 2]), &amb, 5000);
        assert!(matches!(r, Err(SuperrepError::Cap { dim: 10000, cap: 5000 })));
    }

    use crate::partitions::Partition;
}
