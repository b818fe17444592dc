//! Invariant 2-tensors and pairings, inserted into or contracted out of
//! two chosen slots with Koszul signs.

use std::collections::HashMap;

use crate::exactla::{rat, RationalMatrix, SparseVec};

use super::space::{koszul_sign_unchecked, TensorAmbient};
use super::symmetrizer::YoungSymmetrizer;
use super::SuperrepError;

/// Which side of the construction a map belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantMode {
    Trace,
    Eval,
}

/// An invariant element of a two-fold tensor product and the matching
/// invariant pairing, each indexed by letters of the two factor spaces.
#[derive(Clone, Debug)]
pub struct Invariant {
    /// Terms `c · x ⊗ y`.
    pub element: Vec<(u8, u8, i64)>,
    /// Nonzero values of the pairing.
    pub pairing: HashMap<(u8, u8), i64>,
}

impl Invariant {
    /// `ω = Σ_i (e_i ⊗ e_i* − e_i* ⊗ e_i)` and `ev(e_i, e_i*) = ev(e_i*, e_i) = 1` on `V ⊗ V`.
    pub fn periplectic(n: usize) -> Self {
        let mut element = Vec::new();
        let mut pairing = HashMap::new();
        for i in 0..n {
            let (e, d) = (i as u8, (n + i) as u8);
            element.push((e, d, 1));
            element.push((d, e, -1));
            pairing.insert((e, d), 1);
            pairing.insert((d, e), 1);
        }
        Invariant { element, pairing }
    }

    /// `t = Σ_i e_i ⊗ e_i* − Σ_j f_j ⊗ f_j*` and the diagonal pairing on `V ⊗ V*[1]`.
    pub fn general_linear(n: usize, m: usize) -> Self {
        let mut element = Vec::new();
        let mut pairing = HashMap::new();
        for k in 0..n + m {
            element.push((k as u8, k as u8, if k < n { 1 } else { -1 }));
            pairing.insert((k as u8, k as u8), 1);
        }
        Invariant { element, pairing }
    }

    /// The pairing applied to the element itself.
    pub fn self_pairing(&self) -> i64 {
        self.element.iter().map(|(x, y, c)| c * self.pairing.get(&(*x, *y)).copied().unwrap_or(0)).sum()
    }
}

/// Permutation sending slots `0, 1` to `a, b` and the remaining letters, in
/// order, to the other slots.
fn spread(a: usize, b: usize, degree: usize) -> Vec<usize> {
    let mut perm = vec![a, b];
    perm.extend((0..degree).filter(|&k| k != a && k != b));
    perm
}

/// Inserts an invariant at slots `(a, b)` of a larger ambient, then
/// optionally applies a symmetrizer. `source` is `target` with slots `a, b`
/// removed.
#[derive(Clone, Debug)]
pub struct Insertion {
    pub source: TensorAmbient,
    pub target: TensorAmbient,
    pub slots: (usize, usize),
    perm: Vec<usize>,
}

impl Insertion {
    pub fn new(target: TensorAmbient, a: usize, b: usize) -> Result<Self, SuperrepError> {
        let d = target.degree();
        if a >= d || b >= d || a >= b {
            return Err(SuperrepError::Slot { a, b, degree: d });
        }
        Ok(Insertion { source: target.without_slots(&[a, b]), perm: spread(a, b, d), target, slots: (a, b) })
    }

    /// The unsymmetrized insertion of `inv.element` into the word `id`.
    pub fn insert_word(&self, inv: &Invariant, id: usize) -> Vec<(usize, i64)> {
        let u = self.source.decode(id);
        let mut front = Vec::with_capacity(u.len() + 2);
        let mut out = Vec::with_capacity(inv.element.len());
        for &(x, y, c) in &inv.element {
            front.clear();
            front.push(x);
            front.push(y);
            front.extend_from_slice(&u);
            let mut placed = vec![0u8; front.len()];
            for (k, &p) in self.perm.iter().enumerate() {
                placed[p] = front[k];
            }
            let odd = front_flags(&self.target, &self.perm, &front);
            out.push((self.target.encode(&placed), c * koszul_sign_unchecked(&self.perm, &odd)));
        }
        out
    }

    pub fn trace_word(&self, inv: &Invariant, sym: Option<&YoungSymmetrizer>, id: usize) -> SparseVec {
        let raw = SparseVec::from_entries(self.insert_word(inv, id).into_iter().map(|(j, c)| (j, rat(c))));
        match sym {
            Some(c) => c.apply(&self.target, &raw),
            None => raw,
        }
    }

    /// Contracts slots `(a, b)` of the target word `id` against `inv.pairing`.
    pub fn contract_word(&self, inv: &Invariant, id: usize) -> Option<(usize, i64)> {
        let w = self.target.decode(id);
        let (a, b) = self.slots;
        let c = *inv.pairing.get(&(w[a], w[b]))?;
        // move slots a, b to the front: the inverse of `perm`
        let mut inv_perm = vec![0; w.len()];
        for (k, &p) in self.perm.iter().enumerate() {
            inv_perm[p] = k;
        }
        let odd = self.target.odd_flags(&w);
        let sign = koszul_sign_unchecked(&inv_perm, &odd);
        let rest: Vec<u8> = (0..w.len()).filter(|&k| k != a && k != b).map(|k| w[k]).collect();
        Some((self.source.encode(&rest), c * sign))
    }

    pub fn contract(&self, inv: &Invariant, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(
            v.iter().filter_map(|(id, x)| self.contract_word(inv, id).map(|(j, c)| (j, x * rat(c)))),
        )
    }

    /// Full matrix of the trace (source to target) or evaluation (target to
    /// source) map.
    pub fn matrix(&self, inv: &Invariant, mode: InvariantMode, sym: Option<&YoungSymmetrizer>) -> RationalMatrix {
        match mode {
            InvariantMode::Trace => RationalMatrix::from_columns(
                self.target.dim(),
                (0..self.source.dim()).map(|id| self.trace_word(inv, sym, id)).collect(),
            ),
            InvariantMode::Eval => RationalMatrix::from_columns(
                self.source.dim(),
                (0..self.target.dim()).map(|id| self.contract(inv, &SparseVec::unit(id))).collect(),
            ),
        }
    }
}

/// Odd flags of a word laid out as `(x, y, rest)`, read through the spaces
/// of the slots each letter will occupy.
fn front_flags(target: &TensorAmbient, perm: &[usize], front: &[u8]) -> Vec<bool> {
    front
        .iter()
        .zip(perm)
        .map(|(&l, &p)| target.spaces()[target.slot_space(p)].is_odd(l as usize))
        .collect()
}

/// `insert_invariant`: the matrix of a trace or evaluation map on the
/// ambient of `sym`, at slots `(a, b)`.
pub fn insert_invariant(
    target: &TensorAmbient,
    sym: Option<&YoungSymmetrizer>,
    inv: &Invariant,
    mode: InvariantMode,
    slots: (usize, usize),
) -> Result<RationalMatrix, SuperrepError> {
    let ins = Insertion::new(target.clone(), slots.0, slots.1)?;
    Ok(ins.matrix(inv, mode, sym))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::superrep::algebra::{derivation_extend, SuperAlgebra};
    use crate::superrep::space::SuperSpace;
    use std::sync::Arc;

    fn element_vector(amb: &TensorAmbient, inv: &Invariant) -> SparseVec {
        SparseVec::from_entries(inv.element.iter().map(|&(x, y, c)| (amb.encode(&[x, y]), rat(c))))
    }

    #[test]
    fn invariants_are_annihilated() {
        for n in 1..4 {
            let alg = SuperAlgebra::periplectic(n);
            let amb = TensorAmbient::power(alg.spaces[0].clone(), 2);
            let inv = Invariant::periplectic(n);
            let w = element_vector(&amb, &inv);
            for g in alg.even.iter().chain(&alg.phi).chain(&alg.phi_prime) {
                assert!(g.apply(&amb, &w).is_zero(), "{} moves the trace element", g.name);
                // the pairing is invariant: ev ∘ g = 0 on V ⊗ V
                let m = derivation_extend(g, &amb);
                for id in 0..amb.dim() {
                    let image = m.column(id);
                    let val: i64 = image
                        .iter()
                        .map(|(j, c)| {
                            let wd = amb.decode(j);
                            let p = inv.pairing.get(&(wd[0], wd[1])).copied().unwrap_or(0);
                            (c * rat(p)).to_integer().try_into().unwrap_or(0i64)
                        })
                        .sum();
                    assert_eq!(val, 0, "{} does not preserve the pairing", g.name);
                }
            }
            assert_eq!(inv.self_pairing(), 0);
        }
        for (n, m) in [(1, 1), (2, 1), (2, 3)] {
            let alg = SuperAlgebra::general_linear(n, m);
            let amb = TensorAmbient::new(alg.spaces.clone(), vec![0, 1]).unwrap();
            let inv = Invariant::general_linear(n, m);
            let w = element_vector(&amb, &inv);
            for g in alg.even.iter().chain(&alg.phi).chain(&alg.phi_prime) {
                assert!(g.apply(&amb, &w).is_zero(), "{} moves t", g.name);
            }
            assert_eq!(inv.self_pairing(), n as i64 - m as i64);
        }
    }

    #[test]
    fn pe_eval_after_trace_is_invertible() {
        for n in [3usize, 4] {
            let v = Arc::new(SuperSpace::periplectic(n));
            let lambda = partition![2, 1];
            let sym = YoungSymmetrizer::new(&lambda);
            let amb = TensorAmbient::power(v, 3);
            let inv = Invariant::periplectic(n);
            let trace = Insertion::new(amb.clone(), 0, 2).unwrap();
            let eval = Insertion::new(amb.clone(), 0, 1).unwrap();
            let t = trace.matrix(&inv, InvariantMode::Trace, Some(&sym));
            let e = eval.matrix(&inv, InvariantMode::Eval, None);
            let comp = e.mul(&t).unwrap();
            assert_eq!(comp.rank(), 2 * n);
        }
    }

    #[test]
    fn gl_eval_after_trace_vanishes_when_dims_agree() {
        for n in [2usize, 3] {
            let alg = SuperAlgebra::general_linear(n, n);
            let amb = TensorAmbient::new(alg.spaces.clone(), vec![0, 1]).unwrap();
            let inv = Invariant::general_linear(n, n);
            let ins = Insertion::new(amb, 0, 1).unwrap();
            let t = ins.matrix(&inv, InvariantMode::Trace, None);
            let e = ins.matrix(&inv, InvariantMode::Eval, None);
            assert!(e.mul(&t).unwrap().is_zero());
        }
    }

    #[test]
    fn slot_errors() {
        let amb = TensorAmbient::power(Arc::new(SuperSpace::periplectic(2)), 2);
        assert!(matches!(Insertion::new(amb.clone(), 0, 2), Err(SuperrepError::Slot { .. })));
        assert!(Insertion::new(amb, 1, 0).is_err());
    }
}
