//! Young symmetrizers with Koszul signs.
//!
//! For a tableau filled row by row, `b` antisymmetrizes over columns and `a`
//! symmetrizes over rows. The symmetrizer used throughout is `c = a ∘ b`
//! (columns first), so its image consists of row-symmetric tensors and a
//! contraction of two first-row slots is a natural evaluation map.

use std::collections::HashMap;

use itertools::Itertools;

use crate::exactla::{rat, SparseVec};
use crate::partitions::Partition;

use super::space::{permute_word, TensorAmbient, Word};

type SignedPerm = (Vec<usize>, i64);

/// A product of Young symmetrizers acting on consecutive blocks of slots.
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    degree: usize,
    shapes: Vec<(Partition, usize)>,
    rows: Vec<SignedPerm>,
    cols: Vec<SignedPerm>,
}

fn perm_sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `degree` slots that preserve each group setwise,
/// with the ordinary sign when `signed`.
fn group_elements(groups: &[Vec<usize>], degree: usize, signed: bool) -> Vec<SignedPerm> {
    let per_group: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|g| g.iter().copied().permutations(g.len()).collect())
        .collect();
    per_group
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|images| {
            let mut p: Vec<usize> = (0..degree).collect();
            let mut sign = 1;
            for (g, img) in groups.iter().zip(images) {
                for (&x, &y) in g.iter().zip(img) {
                    p[x] = y;
                }
                if signed {
                    let local: Vec<usize> = img.iter().map(|y| g.iter().position(|z| z == y).unwrap()).collect();
                    sign *= perm_sign(&local);
                }
            }
            (p, sign)
        })
        .collect()
}

impl YoungSymmetrizer {
    /// Symmetrizer of one shape on slots `0..|λ|`.
    pub fn new(lambda: &Partition) -> Self {
        Self::product(std::slice::from_ref(lambda))
    }

    /// Product of symmetrizers; shape `k` acts on the `k`-th consecutive block.
    pub fn product(shapes: &[Partition]) -> Self {
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        let mut offset = 0;
        let mut placed = Vec::new();
        for lambda in shapes {
            let start: Vec<usize> = (0..lambda.len()).map(|i| offset + lambda.parts()[..i].iter().sum::<usize>()).collect();
            for (i, &p) in lambda.parts().iter().enumerate() {
                if p > 1 {
                    rows.push((0..p).map(|j| start[i] + j).collect::<Vec<_>>());
                }
            }
            for (j, &h) in lambda.transpose().parts().iter().enumerate() {
                if h > 1 {
                    cols.push((0..h).map(|i| start[i] + j).collect::<Vec<_>>());
                }
            }
            placed.push((lambda.clone(), offset));
            offset += lambda.size();
        }
        YoungSymmetrizer {
            degree: offset,
            shapes: placed,
            rows: group_elements(&rows, offset, false),
            cols: group_elements(&cols, offset, true),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn shapes(&self) -> &[(Partition, usize)] {
        &self.shapes
    }

    /// Slot of box `(i, j)` (0-based) of block `k`.
    pub fn slot(&self, block: usize, i: usize, j: usize) -> usize {
        let (lambda, offset) = &self.shapes[block];
        offset + lambda.parts()[..i].iter().sum::<usize>() + j
    }

    /// Slot ranges of the blocks.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        self.shapes.iter().map(|(l, o)| *o..*o + l.size()).collect()
    }

    /// `c(word)` as integer coefficients on word ids.
    pub fn apply_word(&self, ambient: &TensorAmbient, word: &[u8]) -> HashMap<usize, i64> {
        let odd = ambient.odd_flags(word);
        let mut out: HashMap<usize, i64> = HashMap::new();
        for (q, sq) in &self.cols {
            let (w1, o1, k1) = permute_word(q, word, &odd);
            for (p, _) in &self.rows {
                let (w2, _, k2) = permute_word(p, &w1, &o1);
                *out.entry(ambient.encode(&w2)).or_insert(0) += sq * k1 * k2;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn apply_id(&self, ambient: &TensorAmbient, id: usize) -> SparseVec {
        let w: Word = ambient.decode(id);
        SparseVec::from_entries(self.apply_word(ambient, &w).into_iter().map(|(i, c)| (i, rat(c))))
    }

    pub fn apply(&self, ambient: &TensorAmbient, v: &SparseVec) -> SparseVec {
        let mut acc: HashMap<usize, crate::exactla::Rational> = HashMap::new();
        for (id, x) in v.iter() {
            let w = ambient.decode(id);
            for (j, c) in self.apply_word(ambient, &w) {
                *acc.entry(j).or_default() += x * rat(c);
            }
        }
        SparseVec::from_entries(acc)
    }

    /// Key identifying the orbit of a word under the row and column groups:
    /// the sorted letters of each block.
    pub fn content_key(&self, word: &[u8]) -> Word {
        let mut key = Vec::with_capacity(word.len());
        for r in self.block_ranges() {
            let mut part = word[r].to_vec();
            part.sort_unstable();
            key.extend(part);
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::superrep::space::SuperSpace;
    use std::sync::Arc;

    #[test]
    fn group_sizes() {
        let c = YoungSymmetrizer::new(&partition![2, 1]);
        assert_eq!(c.rows.len(), 2);
        assert_eq!(c.cols.len(), 2);
        let c = YoungSymmetrizer::product(&[partition![1, 1], partition![2]]);
        assert_eq!(c.degree(), 4);
        assert_eq!(c.cols.len(), 2);
        assert_eq!(c.rows.len(), 2);
        assert_eq!(c.slot(1, 0, 1), 3);
        assert_eq!(c.slot(0, 1, 0), 1);
    }

    #[test]
    fn exterior_square_of_odd_is_symmetric() {
        let v = Arc::new(SuperSpace::periplectic(1));
        let amb = TensorAmbient::power(v, 2);
        let c = YoungSymmetrizer::new(&partition![1, 1]);
        // e1* ⊗ e1* survives antisymmetrization with Koszul signs
        let out = c.apply_word(&amb, &[1, 1]);
        assert_eq!(out.get(&amb.encode(&[1, 1])), Some(&2));
        // e1 ⊗ e1 dies
        assert!(c.apply_word(&amb, &[0, 0]).is_empty());
    }

    #[test]
    fn quasi_idempotent() {
        // c^2 = (h(λ)) c with h the hook product
        let v = Arc::new(SuperSpace::periplectic(2));
        let amb = TensorAmbient::power(v, 3);
        let c = YoungSymmetrizer::new(&partition![2, 1]);
        for id in [0usize, 5, 17, 40, 63] {
            let once = c.apply_id(&amb, id);
            let twice = c.apply(&amb, &once);
            assert_eq!(twice, once.scale(&rat(3)));
        }
    }
}
