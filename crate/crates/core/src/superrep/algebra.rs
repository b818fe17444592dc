//! Generators of `pe(n)` and `gl(n|m)` as letter maps, and their extension
//! to tensor words as Koszul-signed derivations.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactla::{rat, relations, Rational, RationalMatrix, SparseVec};

use super::space::{Parity, SuperSpace, TensorAmbient, Weight};
use super::SuperrepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraKind {
    Periplectic { n: usize },
    GeneralLinear { n: usize, m: usize },
}

/// A linear map on a space, given by the images of its basis letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterMap {
    pub images: Vec<Vec<(u8, i64)>>,
}

impl LetterMap {
    pub fn zero(len: usize) -> Self {
        LetterMap { images: vec![Vec::new(); len] }
    }

    pub fn set(&mut self, src: usize, dst: usize, c: i64) {
        self.images[src].push((dst as u8, c));
    }

    pub fn matrix(&self) -> RationalMatrix {
        let n = self.images.len();
        RationalMatrix::from_columns(
            n,
            self.images
                .iter()
                .map(|im| SparseVec::from_entries(im.iter().map(|&(t, c)| (t as usize, rat(c)))))
                .collect(),
        )
    }

    pub fn negated(&self) -> Self {
        LetterMap { images: self.images.iter().map(|im| im.iter().map(|&(t, c)| (t, -c)).collect()).collect() }
    }
}

/// A homogeneous algebra element together with its action on every space
/// the algebra acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOp {
    pub name: String,
    pub parity: Parity,
    pub maps: Vec<LetterMap>,
    pub shift: Weight,
}

impl GeneratorOp {
    fn new(name: String, parity: Parity, maps: Vec<LetterMap>, spaces: &[Arc<SuperSpace>]) -> Self {
        let rank = spaces[0].rank();
        let mut shift = None;
        for (sp, lm) in spaces.iter().zip(&maps) {
            for (src, im) in lm.images.iter().enumerate() {
                for &(dst, _) in im {
                    let d: Weight = sp.letter(dst as usize).weight.iter().zip(&sp.letter(src).weight).map(|(a, b)| a - b).collect();
                    match &shift {
                        None => shift = Some(d),
                        Some(s) => assert_eq!(s, &d, "generator {name} is not a weight vector"),
                    }
                }
            }
        }
        GeneratorOp { name, parity, maps, shift: shift.unwrap_or_else(|| vec![0; rank]) }
    }

    pub fn negated(&self) -> Self {
        GeneratorOp {
            name: format!("-{}", self.name),
            parity: self.parity,
            maps: self.maps.iter().map(|m| m.negated()).collect(),
            shift: self.shift.clone(),
        }
    }

    /// Applies the derivation extension to a basis word.
    pub fn apply_word(&self, ambient: &TensorAmbient, word: &[u8]) -> Vec<(usize, i64)> {
        let odd = ambient.odd_flags(word);
        let mut out = Vec::new();
        let mut odd_before = 0usize;
        let mut w = word.to_vec();
        for k in 0..word.len() {
            let sign = if self.parity.is_odd() && odd_before % 2 == 1 { -1 } else { 1 };
            for &(dst, c) in &self.maps[ambient.slot_space(k)].images[word[k] as usize] {
                w[k] = dst;
                out.push((ambient.encode(&w), sign * c));
            }
            w[k] = word[k];
            if odd[k] {
                odd_before += 1;
            }
        }
        out
    }

    pub fn apply(&self, ambient: &TensorAmbient, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (id, x) in v.iter() {
            let w = ambient.decode(id);
            for (j, c) in self.apply_word(ambient, &w) {
                terms.push((j, x * rat(c)));
            }
        }
        SparseVec::from_entries(terms)
    }
}

/// The full matrix of the derivation extension of `op` on `ambient`.
pub fn derivation_extend(op: &GeneratorOp, ambient: &TensorAmbient) -> RationalMatrix {
    let cols = (0..ambient.dim())
        .map(|id| {
            let w = ambient.decode(id);
            SparseVec::from_entries(op.apply_word(ambient, &w).into_iter().map(|(j, c)| (j, rat(c))))
        })
        .collect();
    RationalMatrix::from_columns(ambient.dim(), cols)
}

/// Generators of a Z-graded superalgebra `g_{-1} ⊕ g_0 ⊕ g_1` acting on a
/// list of spaces, plus the structure constants of the odd-odd bracket.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    pub kind: AlgebraKind,
    pub spaces: Vec<Arc<SuperSpace>>,
    pub even: Vec<GeneratorOp>,
    pub phi: Vec<GeneratorOp>,
    pub phi_prime: Vec<GeneratorOp>,
    /// Indices into `even` of the simple raising operators.
    pub raising: Vec<usize>,
    /// `bracket[a][b]`: `[phi[a], phi_prime[b]]` as a combination of `even`.
    pub bracket: Vec<Vec<Vec<(usize, Rational)>>>,
}

/// `Φ(e_i e_j)` for `i <= j` and `Φ′(e_i* ∧ e_j*)` for `i < j`, acting on `V = E ⊕ E*`.
pub fn pe_phi_families(n: usize) -> (Vec<GeneratorOp>, Vec<GeneratorOp>) {
    let v = Arc::new(SuperSpace::periplectic(n));
    let spaces = [v.clone()];
    let mut phi = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut lm = LetterMap::zero(2 * n);
            // e_k* -> δ_jk e_i + δ_ik e_j
            lm.set(n + j, i, 1);
            lm.set(n + i, j, 1);
            phi.push(GeneratorOp::new(format!("Phi(e{}e{})", i + 1, j + 1), Parity::Odd, vec![lm], &spaces));
        }
    }
    let mut phi_prime = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut lm = LetterMap::zero(2 * n);
            // e_k -> δ_ik e_j* - δ_jk e_i*
            lm.set(i, n + j, 1);
            lm.set(j, n + i, -1);
            phi_prime.push(GeneratorOp::new(
                format!("Phi'(e{}*^e{}*)", i + 1, j + 1),
                Parity::Odd,
                vec![lm],
                &spaces,
            ));
        }
    }
    (phi, phi_prime)
}

/// `Φ(X)` for `X = (f_b ↦ e_a)` and `Φ′(Y)` for `Y = (e_b ↦ f_a)`, acting on
/// `V = E ⊕ F` and on `V*[1]`.
pub fn gl_phi_families(n: usize, m: usize) -> (Vec<GeneratorOp>, Vec<GeneratorOp>) {
    let spaces = [
        Arc::new(SuperSpace::general_linear(n, m)),
        Arc::new(SuperSpace::general_linear_dual_shifted(n, m)),
    ];
    let mut phi = Vec::new();
    for a in 0..n {
        for b in 0..m {
            let mut on_v = LetterMap::zero(n + m);
            on_v.set(n + b, a, 1);
            let mut on_dual = LetterMap::zero(n + m);
            on_dual.set(a, n + b, 1);
            phi.push(GeneratorOp::new(format!("Phi(f{}->e{})", b + 1, a + 1), Parity::Odd, vec![on_v, on_dual], &spaces));
        }
    }
    let mut phi_prime = Vec::new();
    for a in 0..m {
        for b in 0..n {
            let mut on_v = LetterMap::zero(n + m);
            on_v.set(b, n + a, 1);
            let mut on_dual = LetterMap::zero(n + m);
            on_dual.set(n + a, b, -1);
            phi_prime.push(GeneratorOp::new(
                format!("Phi'(e{}->f{})", b + 1, a + 1),
                Parity::Odd,
                vec![on_v, on_dual],
                &spaces,
            ));
        }
    }
    (phi, phi_prime)
}

fn flatten(m: &RationalMatrix) -> SparseVec {
    let r = m.nrows();
    SparseVec::from_entries(
        m.columns().iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (j * r + i, x.clone()))).collect::<Vec<_>>(),
    )
}

fn op_matrix_on(op: &GeneratorOp, space: usize) -> RationalMatrix {
    op.maps[space].matrix()
}

/// Writes `target` as a combination of the even generators' matrices on the
/// defining space.
fn decompose(even: &[GeneratorOp], target: &RationalMatrix) -> Result<Vec<(usize, Rational)>, SuperrepError> {
    let mut cols: Vec<SparseVec> = even.iter().map(|g| flatten(&op_matrix_on(g, 0))).collect();
    cols.push(flatten(target));
    let last = even.len();
    for rel in relations(&cols) {
        let c = rel.get(last);
        if !c.is_zero() {
            let inv = -c.recip();
            return Ok(rel.iter().filter(|(k, _)| *k < last).map(|(k, x)| (k, x * &inv)).collect());
        }
    }
    Err(SuperrepError::Invalid("bracket is not in the even part".into()))
}

impl SuperAlgebra {
    pub fn periplectic(n: usize) -> Self {
        let v = Arc::new(SuperSpace::periplectic(n));
        let spaces = vec![v];
        let mut even = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let mut lm = LetterMap::zero(2 * n);
                lm.set(b, a, 1);
                lm.set(n + a, n + b, -1);
                even.push(GeneratorOp::new(format!("E{}{}", a + 1, b + 1), Parity::Even, vec![lm], &spaces));
            }
        }
        let raising = (0..n.saturating_sub(1)).map(|i| i * n + i + 1).collect();
        let (phi, phi_prime) = pe_phi_families(n);
        Self::assemble(AlgebraKind::Periplectic { n }, spaces, even, phi, phi_prime, raising)
    }

    pub fn general_linear(n: usize, m: usize) -> Self {
        let spaces = vec![
            Arc::new(SuperSpace::general_linear(n, m)),
            Arc::new(SuperSpace::general_linear_dual_shifted(n, m)),
        ];
        let mut even = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let mut on_v = LetterMap::zero(n + m);
                on_v.set(b, a, 1);
                let mut on_dual = LetterMap::zero(n + m);
                on_dual.set(a, b, -1);
                even.push(GeneratorOp::new(format!("E{}{}", a + 1, b + 1), Parity::Even, vec![on_v, on_dual], &spaces));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let mut on_v = LetterMap::zero(n + m);
                on_v.set(n + b, n + a, 1);
                let mut on_dual = LetterMap::zero(n + m);
                on_dual.set(n + a, n + b, -1);
                even.push(GeneratorOp::new(format!("F{}{}", a + 1, b + 1), Parity::Even, vec![on_v, on_dual], &spaces));
            }
        }
        let mut raising: Vec<usize> = (0..n.saturating_sub(1)).map(|i| i * n + i + 1).collect();
        raising.extend((0..m.saturating_sub(1)).map(|j| n * n + j * m + j + 1));
        let (phi, phi_prime) = gl_phi_families(n, m);
        Self::assemble(AlgebraKind::GeneralLinear { n, m }, spaces, even, phi, phi_prime, raising)
    }

    fn assemble(
        kind: AlgebraKind,
        spaces: Vec<Arc<SuperSpace>>,
        even: Vec<GeneratorOp>,
        phi: Vec<GeneratorOp>,
        phi_prime: Vec<GeneratorOp>,
        raising: Vec<usize>,
    ) -> Self {
        let mut bracket = Vec::with_capacity(phi.len());
        for x in &phi {
            let mx = op_matrix_on(x, 0);
            let mut row = Vec::with_capacity(phi_prime.len());
            for y in &phi_prime {
                let my = op_matrix_on(y, 0);
                let (xy, yx) = (mx.mul(&my).expect("square"), my.mul(&mx).expect("square"));
                let anti = xy.add(&yx).expect("same shape");
                row.push(decompose(&even, &anti).expect("odd brackets land in the even part"));
            }
            bracket.push(row);
        }
        SuperAlgebra { kind, spaces, even, phi, phi_prime, raising, bracket }
    }

    /// Number of torus coordinates.
    pub fn rank(&self) -> usize {
        self.spaces[0].rank()
    }

    /// Dominance of a weight for the even part.
    pub fn is_dominant(&self, w: &[i64]) -> bool {
        match self.kind {
            AlgebraKind::Periplectic { .. } => w.windows(2).all(|p| p[0] >= p[1]),
            AlgebraKind::GeneralLinear { n, .. } => {
                w[..n].windows(2).all(|p| p[0] >= p[1]) && w[n..].windows(2).all(|p| p[0] >= p[1])
            }
        }
    }

    /// Dimension of the irreducible even-part module of dominant weight `w`.
    pub fn irrep_dim(&self, w: &[i64]) -> u64 {
        match self.kind {
            AlgebraKind::Periplectic { .. } => crate::symfunc::dim_highest_weight(w),
            AlgebraKind::GeneralLinear { n, .. } => {
                crate::symfunc::dim_highest_weight(&w[..n]) * crate::symfunc::dim_highest_weight(&w[n..])
            }
        }
    }

    /// The even combination `[phi[a], phi_prime[b]]`.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.bracket[a][b]
    }

    /// Replaces `Φ′` by its negative; used as a negative control.
    pub fn with_negated_phi_prime(&self) -> Self {
        let mut out = self.clone();
        out.phi_prime = self.phi_prime.iter().map(|g| g.negated()).collect();
        out
    }

    /// Bracket constants in readable form.
    pub fn bracket_table(&self) -> BTreeMap<(String, String), Vec<(String, String)>> {
        let mut out = BTreeMap::new();
        for (a, x) in self.phi.iter().enumerate() {
            for (b, y) in self.phi_prime.iter().enumerate() {
                let terms = self.bracket[a][b].iter().map(|(k, c)| (self.even[*k].name.clone(), c.to_string())).collect();
                out.insert((x.name.clone(), y.name.clone()), terms);
            }
        }
        out
    }
}
