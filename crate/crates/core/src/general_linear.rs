//! The general linear lab: `S_λ V ⊗ S_μ(V*[1])` for `V = E ⊕ F[1]`, the
//! subquotient cut out by trace and evaluation, and the comparison with the
//! generic-matrix strand.

use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::lab::{AxiomSummary, Bookkeeping, LabError};
use crate::partitions::{pq_rs, Partition};
use crate::periplectic::ConjectureRecord;
use crate::superrep::module::{trace_image, young_symmetrizer_image, GradedSubmodule};
use crate::superrep::{Insertion, Invariant, Irreducibility, SuperAlgebra, TensorAmbient, TwoSidedComplex, YoungSymmetrizer};
use crate::symfunc::{lascoux_character, PairSchurSum};

/// Parameters `(n, m, r, s)` with `λ = (s^{n-r-s})` and `μ = (s^{m-r-s})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlInstance {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub s: usize,
    pub lambda: Partition,
    pub mu: Partition,
}

impl GlInstance {
    pub fn new(n: usize, m: usize, r: usize, s: usize) -> Result<Self, LabError> {
        if r == 0 {
            return Err(LabError::Precondition("requires r >= 1 (got r = 0)".into()));
        }
        if s == 0 {
            return Err(LabError::Precondition("requires s >= 1 (got s = 0)".into()));
        }
        if n < r + s || m < r + s {
            return Err(LabError::Precondition(format!(
                "requires dim E >= r+s and dim F >= r+s (got dim E = {n}, dim F = {m}, r+s = {})",
                r + s
            )));
        }
        Ok(GlInstance {
            n,
            m,
            r,
            s,
            lambda: Partition::rectangle(s, n - r - s),
            mu: Partition::rectangle(s, m - r - s),
        })
    }

    pub fn key(&self) -> String {
        format!("gl-n{}-m{}-r{}-s{}", self.n, self.m, self.r, self.s)
    }

    pub fn top_degree(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }
}

/// `V^{⊗|λ|} ⊗ (V*[1])^{⊗|μ|}` for `gl(n|m)`.
pub fn gl_ambient(algebra: &SuperAlgebra, lambda: &Partition, mu: &Partition) -> Result<TensorAmbient, LabError> {
    let slots = std::iter::repeat_n(0, lambda.size()).chain(std::iter::repeat_n(1, mu.size())).collect();
    Ok(TensorAmbient::new(algebra.spaces.clone(), slots)?)
}

#[derive(Clone, Debug)]
pub struct GlBuild {
    pub instance: GlInstance,
    pub algebra: Arc<SuperAlgebra>,
    pub schur: GradedSubmodule,
    pub kernel: GradedSubmodule,
    pub trace: GradedSubmodule,
    pub meet: GradedSubmodule,
    pub complex: TwoSidedComplex,
    pub bookkeeping: Bookkeeping,
}

/// `S_λ V ⊗ S_μ(V*[1])` as a complex, labelled with the given twist.
pub fn gl_schur_complex(
    n: usize,
    m: usize,
    lambda: &Partition,
    mu: &Partition,
    twist: usize,
    cap: usize,
) -> Result<(GradedSubmodule, TwoSidedComplex), LabError> {
    let algebra = Arc::new(SuperAlgebra::general_linear(n, m));
    let amb = gl_ambient(&algebra, lambda, mu)?;
    let sym = YoungSymmetrizer::product(&[lambda.clone(), mu.clone()]);
    let schur = young_symmetrizer_image(&sym, &amb, cap)?;
    let cx = schur.to_complex(&GradedSubmodule::zero(amb), algebra, twist)?;
    Ok((schur, cx))
}

pub fn build_gl_module(inst: &GlInstance, cap: usize) -> Result<GlBuild, LabError> {
    let algebra = Arc::new(SuperAlgebra::general_linear(inst.n, inst.m));
    let (lambda, mu) = (&inst.lambda, &inst.mu);
    let amb = gl_ambient(&algebra, lambda, mu)?;
    amb.check_cap(cap)?;
    let sym = YoungSymmetrizer::product(&[lambda.clone(), mu.clone()]);
    let schur = young_symmetrizer_image(&sym, &amb, cap)?;
    let inv = Invariant::general_linear(inst.n, inst.m);
    let (kernel, trace) = if lambda.is_empty() || mu.is_empty() {
        (schur.clone(), GradedSubmodule::zero(amb.clone()))
    } else {
        // first slot of each factor
        let ins = Insertion::new(amb.clone(), 0, lambda.size())?;
        if schur.contraction_rank(&ins, &inv, Some(1)) == 0 {
            return Err(LabError::Convention("evaluation vanishes in degree 1".into()));
        }
        let t = trace_image(&ins, &inv, &sym, cap)?;
        if t.graded_dims().get(&1).copied().unwrap_or(0) == 0 {
            return Err(LabError::Convention("trace vanishes in degree 1".into()));
        }
        (schur.kernel_of_contraction(&ins, &inv), t)
    };
    let meet = kernel.intersect(&trace)?;
    let complex = kernel.to_complex(&meet, algebra.clone(), inst.s)?;
    let bookkeeping = Bookkeeping::new(&schur, &kernel, &trace, &meet, &complex.graded_dims(), inst.top_degree());
    Ok(GlBuild { instance: inst.clone(), algebra, schur, kernel, trace, meet, complex, bookkeeping })
}

#[derive(Clone, Debug, Serialize)]
pub struct GlComplexCheck {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub m: usize,
    /// `n - λ†_1 + λ_1 = m - μ†_1 + μ_1`.
    pub condition: bool,
    pub words: usize,
    pub zero: bool,
}

/// `n - ℓ(λ) + λ_1 = m - ℓ(μ) + μ_1`.
pub fn glcomplex_condition(lambda: &Partition, mu: &Partition, n: usize, m: usize) -> bool {
    n as i64 - lambda.len() as i64 + lambda.first_part() as i64 == m as i64 - mu.len() as i64 + mu.first_part() as i64
}

/// Trace followed by evaluation, from homological degree 0 to degree 1,
/// tested on every degree-0 word of the source.
pub fn check_prop_glcomplex(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    m: usize,
    cap: usize,
) -> Result<GlComplexCheck, LabError> {
    if lambda.is_empty() || mu.is_empty() {
        return Err(LabError::Precondition("requires nonempty shapes on both factors".into()));
    }
    let algebra = SuperAlgebra::general_linear(n, m);
    let target = gl_ambient(&algebra, lambda, mu)?;
    let ins = Insertion::new(target.clone(), 0, lambda.size())?;
    // degree 0: only E letters in V and only F* letters in V*[1]
    let alphabets: Vec<Vec<u8>> = (0..ins.source.degree())
        .map(|k| {
            if k < lambda.size() - 1 {
                (0..n as u8).collect()
            } else {
                (n as u8..(n + m) as u8).collect()
            }
        })
        .collect();
    let words: Vec<Vec<u8>> = if alphabets.is_empty() {
        vec![Vec::new()]
    } else {
        alphabets.iter().map(|a| a.iter().copied()).multi_cartesian_product().collect()
    };
    if words.len() > cap {
        return Err(crate::superrep::SuperrepError::Cap { dim: words.len(), cap }.into());
    }
    let sym = YoungSymmetrizer::product(&[lambda.clone(), mu.clone()]);
    let inv = Invariant::general_linear(n, m);
    let zero = words.par_iter().all(|w| {
        let v = ins.trace_word(&inv, Some(&sym), ins.source.encode(w));
        ins.contract(&inv, &v).is_zero()
    });
    Ok(GlComplexCheck {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
        m,
        condition: glcomplex_condition(lambda, mu, n, m),
        words: words.len(),
        zero,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GlDegree {
    pub h: usize,
    pub dim: usize,
    pub character: PairSchurSum,
    pub lascoux: PairSchurSum,
    pub lascoux_dim: i128,
    pub contains: bool,
    pub equal: bool,
}

pub fn lascoux_compare(cx: &TwoSidedComplex, inst: &GlInstance) -> Result<Vec<GlDegree>, LabError> {
    let dims = cx.graded_dims();
    (0..=inst.top_degree())
        .map(|h| {
            let character = cx.pair_character(h)?;
            let lascoux = lascoux_character(inst.r, inst.s, h, inst.n, inst.m)?;
            Ok(GlDegree {
                h,
                dim: dims.get(&h).copied().unwrap_or(0),
                lascoux_dim: lascoux.dim(inst.n, inst.m),
                contains: character.dominates(&lascoux),
                equal: character == lascoux,
                character,
                lascoux,
            })
        })
        .collect()
}

/// The two pairs that survive in degree 1.
pub fn degree_one_pairs(inst: &GlInstance) -> PairSchurSum {
    let one = Partition::new(vec![1]).expect("single box");
    let mut out = PairSchurSum::new();
    for (a, b) in [(one.clone(), Partition::empty()), (Partition::empty(), one)] {
        let (p, q) = pq_rs(&a, &b, inst.r, inst.s).expect("single box fits");
        if p.len() <= inst.n && q.len() <= inst.m {
            out.add_term(p, q, 1);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GlReport {
    pub instance: GlInstance,
    pub degrees: Vec<GlDegree>,
    pub axioms: AxiomSummary,
    pub glcomplex: GlComplexCheck,
    pub irreducible: Irreducibility,
    pub conjecture: ConjectureRecord,
    pub degree_one: bool,
    pub bookkeeping: Bookkeeping,
}

impl GlReport {
    pub fn passed(&self) -> bool {
        self.axioms.passed()
            && self.degrees.iter().all(|d| d.contains && d.dim as i128 >= d.lascoux_dim)
            && (!self.glcomplex.condition || self.glcomplex.zero)
            && (!self.conjecture.all_equal() || self.irreducible.is_irreducible())
            && self.degree_one
            && self.bookkeeping.euler_ok
    }
}

pub fn verify_gl(inst: &GlInstance, cap: usize) -> Result<GlReport, LabError> {
    let build = build_gl_module(inst, cap)?;
    let cx = &build.complex;
    let degrees = lascoux_compare(cx, inst)?;
    let degree_one = degrees.get(1).is_none_or(|d| d.character == degree_one_pairs(inst));
    Ok(GlReport {
        instance: inst.clone(),
        axioms: cx.verify_axioms().into(),
        glcomplex: check_prop_glcomplex(&inst.lambda, &inst.mu, inst.n, inst.m, cap)?,
        irreducible: cx.check_irreducible(),
        conjecture: ConjectureRecord::new(degrees.iter().map(|d| d.equal).collect()),
        degree_one,
        bookkeeping: build.bookkeeping.clone(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::exactla::{rat, SparseVec};
    use crate::symfunc::gl_twisted_schur_complex_character;

    const CAP: usize = 25_000;

    #[test]
    fn preconditions() {
        assert!(GlInstance::new(3, 3, 0, 1).is_err());
        assert!(GlInstance::new(3, 3, 1, 0).is_err());
        assert!(GlInstance::new(3, 1, 1, 1).is_err());
        let g = GlInstance::new(4, 3, 1, 1).unwrap();
        assert_eq!((g.lambda, g.mu), (partition![1, 1], partition![1]));
    }

    #[test]
    fn small_instance_characters() {
        let inst = GlInstance::new(3, 3, 1, 1).unwrap();
        let b = build_gl_module(&inst, CAP).unwrap();
        let mut d0 = PairSchurSum::new();
        d0.add_term(partition![1, 1], partition![1, 1], 1);
        assert_eq!(b.complex.pair_character(0).unwrap(), d0);
        let mut d1 = PairSchurSum::new();
        d1.add_term(partition![2, 1], partition![1, 1, 1], 1);
        d1.add_term(partition![1, 1, 1], partition![2, 1], 1);
        assert_eq!(b.complex.pair_character(1).unwrap(), d1);
        assert_eq!(degree_one_pairs(&inst), d1);
    }

    #[test]
    fn schur_character_matches_formula() {
        for (n, m) in [(3, 3), (3, 2), (2, 3)] {
            let inst = GlInstance::new(n, m, 1, 1).unwrap();
            let (_, cx) = gl_schur_complex(n, m, &inst.lambda, &inst.mu, 1, CAP).unwrap();
            for h in 0..=inst.top_degree() {
                assert_eq!(cx.pair_character(h).unwrap(), gl_twisted_schur_complex_character(n, m, 1, 1, h), "{n} {m} {h}");
            }
        }
    }

    #[test]
    fn glcomplex_examples() {
        let one = partition![1];
        let c = check_prop_glcomplex(&one, &one, 3, 3, CAP).unwrap();
        assert!(c.condition && c.zero);
        // the composite is (n + 1 - m) times the identity
        let c = check_prop_glcomplex(&partition![2], &one, 2, 3, CAP).unwrap();
        assert!(c.condition && c.zero);
        let c = check_prop_glcomplex(&partition![2], &one, 2, 2, CAP).unwrap();
        assert!(!c.condition && !c.zero);
        let c = check_prop_glcomplex(&partition![2], &partition![1, 1], 3, 1, CAP).unwrap();
        assert!(!c.condition);
    }

    #[test]
    fn two_corner_shape_gives_a_swap() {
        // λ = (2,1), μ = (1): the composite on E ⊗ E is (n - m) - swap, so the
        // dimension condition n = m does not make it vanish
        for (n, m) in [(2usize, 2usize), (3, 2), (2, 3)] {
            let alg = SuperAlgebra::general_linear(n, m);
            let ins = Insertion::new(gl_ambient(&alg, &partition![2, 1], &partition![1]).unwrap(), 0, 3).unwrap();
            let sym = YoungSymmetrizer::product(&[partition![2, 1], partition![1]]);
            let inv = Invariant::general_linear(n, m);
            let image = |w: [u8; 2]| {
                let v = ins.trace_word(&inv, Some(&sym), ins.source.encode(&w));
                ins.contract(&inv, &v)
            };
            let d = n as i64 - m as i64;
            let (ab, ba) = (ins.source.encode(&[0, 1]), ins.source.encode(&[1, 0]));
            let expected = SparseVec::from_entries([(ab, rat(d)), (ba, rat(-1))]);
            assert_eq!(image([0, 1]), expected);
            assert_eq!(image([0, 0]), SparseVec::from_entries([(ab - 1, rat(d - 1))]));
        }
        let c = check_prop_glcomplex(&partition![2, 1], &partition![1], 2, 2, CAP).unwrap();
        assert!(c.condition && !c.zero);
    }

    #[test]
    fn untwisted_mixed_tensor_is_reducible() {
        let one = partition![1];
        let (_, cx) = gl_schur_complex(2, 1, &one, &one, 0, CAP).unwrap();
        assert!(matches!(cx.check_irreducible(), Irreducibility::Reducible { .. }));
    }

    #[test]
    fn verify_small() {
        let rep = verify_gl(&GlInstance::new(3, 3, 1, 1).unwrap(), CAP).unwrap();
        assert!(rep.passed(), "{:#?}", rep);
        assert!(rep.conjecture.all_equal());
    }
}
