//! Superspaces with weighted bases and their (mixed) tensor powers.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::SuperrepError;

pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// A basis vector: its label, parity and torus weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub label: String,
    pub parity: Parity,
    pub weight: Weight,
}

/// A `Z/2`-graded space with a chosen weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    name: String,
    letters: Vec<Letter>,
    rank: usize,
}

fn unit(rank: usize, i: usize, sign: i64) -> Weight {
    let mut w = vec![0; rank];
    w[i] = sign;
    w
}

impl SuperSpace {
    pub fn new(name: impl Into<String>, letters: Vec<Letter>) -> Result<Self, SuperrepError> {
        let rank = letters.first().map_or(0, |l| l.weight.len());
        for (i, l) in letters.iter().enumerate() {
            if l.weight.len() != rank {
                return Err(SuperrepError::Invalid(format!("letter {} has the wrong weight length", l.label)));
            }
            if letters[..i].iter().any(|m| m.label == l.label) {
                return Err(SuperrepError::Invalid(format!("duplicate label {}", l.label)));
            }
        }
        if letters.len() > u8::MAX as usize {
            return Err(SuperrepError::Invalid("too many basis letters".into()));
        }
        Ok(SuperSpace { name: name.into(), letters, rank })
    }

    /// `V = E ⊕ E*` with `E` even of weights `+ε_i` and `E*` odd of weights `-ε_i`.
    pub fn periplectic(n: usize) -> Self {
        let mut letters: Vec<Letter> = (0..n)
            .map(|i| Letter { label: format!("e{}", i + 1), parity: Parity::Even, weight: unit(n, i, 1) })
            .collect();
        letters.extend((0..n).map(|i| Letter {
            label: format!("e{}*", i + 1),
            parity: Parity::Odd,
            weight: unit(n, i, -1),
        }));
        SuperSpace { name: format!("V(pe{n})"), letters, rank: n }
    }

    /// `V = E ⊕ F` with `E` even and `F` odd; weights live in `Z^{n+m}`.
    pub fn general_linear(n: usize, m: usize) -> Self {
        let rank = n + m;
        let mut letters: Vec<Letter> = (0..n)
            .map(|i| Letter { label: format!("e{}", i + 1), parity: Parity::Even, weight: unit(rank, i, 1) })
            .collect();
        letters.extend((0..m).map(|j| Letter {
            label: format!("f{}", j + 1),
            parity: Parity::Odd,
            weight: unit(rank, n + j, 1),
        }));
        SuperSpace { name: format!("V(gl{n}|{m})"), letters, rank }
    }

    /// `V*[1] = E* ⊕ F*` with `E*` odd and `F*` even. Letter `k` is dual to
    /// letter `k` of [`SuperSpace::general_linear`].
    pub fn general_linear_dual_shifted(n: usize, m: usize) -> Self {
        let rank = n + m;
        let mut letters: Vec<Letter> = (0..n)
            .map(|i| Letter { label: format!("e{}*", i + 1), parity: Parity::Odd, weight: unit(rank, i, -1) })
            .collect();
        letters.extend((0..m).map(|j| Letter {
            label: format!("f{}*", j + 1),
            parity: Parity::Even,
            weight: unit(rank, n + j, -1),
        }));
        SuperSpace { name: format!("V*[1](gl{n}|{m})"), letters, rank }
    }

    pub fn purely_even(n: usize) -> Self {
        let letters = (0..n)
            .map(|i| Letter { label: format!("x{}", i + 1), parity: Parity::Even, weight: unit(n, i, 1) })
            .collect();
        SuperSpace { name: format!("k^{n}"), letters, rank: n }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(dim V_0, dim V_1)`.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.letters.iter().filter(|l| l.parity.is_odd()).count();
        (self.letters.len() - odd, odd)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letter(&self, i: usize) -> &Letter {
        &self.letters[i]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.letters[i].parity.is_odd()
    }

    pub fn even_labels(&self) -> Vec<&str> {
        self.letters.iter().filter(|l| !l.parity.is_odd()).map(|l| l.label.as_str()).collect()
    }

    pub fn odd_labels(&self) -> Vec<&str> {
        self.letters.iter().filter(|l| l.parity.is_odd()).map(|l| l.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.letters.iter().position(|l| l.label == label)
    }
}

/// A word: one letter index per slot.
pub type Word = Vec<u8>;

/// `V_{k_1} ⊗ ... ⊗ V_{k_d}`, with basis words numbered in mixed radix so
/// that numeric order is lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorAmbient {
    spaces: Vec<Arc<SuperSpace>>,
    slots: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
}

impl TensorAmbient {
    pub fn new(spaces: Vec<Arc<SuperSpace>>, slots: Vec<usize>) -> Result<Self, SuperrepError> {
        let mut dim: usize = 1;
        let mut strides = vec![0; slots.len()];
        for k in (0..slots.len()).rev() {
            let sp = spaces
                .get(slots[k])
                .ok_or_else(|| SuperrepError::Invalid(format!("slot {k} names a missing space")))?;
            strides[k] = dim;
            dim = dim
                .checked_mul(sp.len())
                .ok_or_else(|| SuperrepError::Invalid("ambient dimension overflows".into()))?;
        }
        Ok(TensorAmbient { spaces, slots, strides, dim })
    }

    pub fn power(space: Arc<SuperSpace>, d: usize) -> Self {
        Self::new(vec![space], vec![0; d]).expect("single-space power is well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.slots.len()
    }

    pub fn spaces(&self) -> &[Arc<SuperSpace>] {
        &self.spaces
    }

    pub fn slot_space(&self, k: usize) -> usize {
        self.slots[k]
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn check_cap(&self, cap: usize) -> Result<(), SuperrepError> {
        if self.dim > cap {
            return Err(SuperrepError::Cap { dim: self.dim, cap });
        }
        Ok(())
    }

    pub fn encode(&self, word: &[u8]) -> usize {
        word.iter().zip(&self.strides).map(|(&l, &s)| l as usize * s).sum()
    }

    pub fn decode(&self, mut id: usize) -> Word {
        self.strides
            .iter()
            .map(|&st| {
                let l = (id / st) as u8;
                id %= st;
                l
            })
            .collect()
    }

    /// Odd flags of the letters of a word.
    pub fn odd_flags(&self, word: &[u8]) -> Vec<bool> {
        word.iter().enumerate().map(|(k, &l)| self.spaces[self.slots[k]].is_odd(l as usize)).collect()
    }

    /// Homological degree: the number of odd letters.
    pub fn word_degree(&self, word: &[u8]) -> usize {
        self.odd_flags(word).into_iter().filter(|&b| b).count()
    }

    pub fn word_weight(&self, word: &[u8]) -> Weight {
        let rank = self.spaces.first().map_or(0, |s| s.rank());
        let mut w = vec![0; rank];
        for (k, &l) in word.iter().enumerate() {
            for (a, b) in w.iter_mut().zip(&self.spaces[self.slots[k]].letter(l as usize).weight) {
                *a += b;
            }
        }
        w
    }

    pub fn word_label(&self, word: &[u8]) -> String {
        word.iter()
            .enumerate()
            .map(|(k, &l)| self.spaces[self.slots[k]].letter(l as usize).label.clone())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// The ambient with the listed slots removed.
    pub fn without_slots(&self, removed: &[usize]) -> TensorAmbient {
        let slots = self.slots.iter().enumerate().filter(|(k, _)| !removed.contains(k)).map(|(_, &s)| s).collect();
        TensorAmbient::new(self.spaces.clone(), slots).expect("sub-ambient is well formed")
    }
}

/// Sign of moving the letters of a word by `perm` (slot `k` goes to
/// `perm[k]`): one factor `-1` for each crossing of two odd letters.
pub fn koszul_sign(perm: &[usize], odd: &[bool]) -> Result<i64, SuperrepError> {
    if perm.len() != odd.len() {
        return Err(SuperrepError::LengthMismatch { perm: perm.len(), word: odd.len() });
    }
    Ok(koszul_sign_unchecked(perm, odd))
}

pub(crate) fn koszul_sign_unchecked(perm: &[usize], odd: &[bool]) -> i64 {
    let mut crossings = 0usize;
    for k in 0..perm.len() {
        if !odd[k] {
            continue;
        }
        for l in k + 1..perm.len() {
            if odd[l] && perm[k] > perm[l] {
                crossings += 1;
            }
        }
    }
    if crossings.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Applies `perm` to a word, returning the moved word, its odd flags and the
/// Koszul sign.
pub fn permute_word(perm: &[usize], word: &[u8], odd: &[bool]) -> (Word, Vec<bool>, i64) {
    let mut out = vec![0u8; word.len()];
    let mut out_odd = vec![false; word.len()];
    for k in 0..word.len() {
        out[perm[k]] = word[k];
        out_odd[perm[k]] = odd[k];
    }
    (out, out_odd, koszul_sign_unchecked(perm, odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
        tau.iter().map(|&t| sigma[t]).collect()
    }

    #[test]
    fn swap_signs() {
        let swap = [1, 0];
        assert_eq!(koszul_sign(&swap, &[false, false]).unwrap(), 1);
        assert_eq!(koszul_sign(&swap, &[true, true]).unwrap(), -1);
        assert_eq!(koszul_sign(&swap, &[false, true]).unwrap(), 1);
        assert!(koszul_sign(&swap, &[true]).is_err());
    }

    #[test]
    fn space_shapes() {
        let v = SuperSpace::periplectic(3);
        assert_eq!(v.sdim(), (3, 3));
        assert_eq!(v.letter(4).label, "e2*");
        assert_eq!(v.letter(4).weight, vec![0, -1, 0]);
        let g = SuperSpace::general_linear(2, 3);
        assert_eq!(g.sdim(), (2, 3));
        let d = SuperSpace::general_linear_dual_shifted(2, 3);
        assert_eq!(d.even_labels(), vec!["f1*", "f2*", "f3*"]);
        assert_eq!(d.odd_labels(), vec!["e1*", "e2*"]);
    }

    #[test]
    fn encode_roundtrip() {
        let a = TensorAmbient::new(
            vec![Arc::new(SuperSpace::general_linear(2, 1)), Arc::new(SuperSpace::general_linear_dual_shifted(2, 1))],
            vec![0, 0, 1],
        )
        .unwrap();
        assert_eq!(a.dim(), 27);
        for id in 0..a.dim() {
            assert_eq!(a.encode(&a.decode(id)), id);
        }
        let w = a.decode(a.encode(&[2, 0, 0]));
        assert_eq!(a.word_label(&w), "f1⊗e1⊗e1*");
        assert_eq!(a.word_degree(&w), 2);
        assert_eq!(a.word_weight(&w), vec![0, 0, 1]);
    }

    fn perm_and_flags() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<bool>)> {
        (1usize..7).prop_flat_map(|d| {
            (
                Just((0..d).collect::<Vec<_>>()).prop_shuffle(),
                Just((0..d).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), d),
            )
        })
    }

    proptest! {
        #[test]
        fn sign_composition((sigma, tau, odd) in perm_and_flags()) {
            let word: Vec<u8> = (0..odd.len() as u8).collect();
            let (_, odd_tau, s_tau) = permute_word(&tau, &word, &odd);
            let s_sigma = koszul_sign(&sigma, &odd_tau).unwrap();
            let st = compose(&sigma, &tau);
            prop_assert_eq!(koszul_sign(&st, &odd).unwrap(), s_sigma * s_tau);
        }
    }
}
