//! The periplectic lab: the subquotient `k_λ / (k_λ ∩ i_λ)` of `S_λ V` for
//! `V = E ⊕ E*[1]`, its two-sided structure and its comparison with the
//! symmetric-strand character.

use std::sync::Arc;

use serde::Serialize;

use crate::lab::{AxiomSummary, Bookkeeping, LabError};
use crate::partitions::{enumerate_partitions, p_rs, Partition};
use crate::superrep::complex::pe_weight;
use crate::superrep::module::{trace_image, young_symmetrizer_image, GradedSubmodule};
use crate::superrep::{
    Family, Insertion, Invariant, Irreducibility, SuperAlgebra, TensorAmbient, TwoSidedComplex, YoungSymmetrizer,
};
use crate::symfunc::{dim_schur, jpw_character, SchurSum};

/// Parameters `(n, r, s)` and the rectangle `λ = (s^{n-s-r})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeInstance {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub lambda: Partition,
}

impl PeInstance {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self, LabError> {
        if s == 0 {
            return Err(LabError::Precondition("requires s >= 1 (got s = 0)".into()));
        }
        if n <= s + r {
            return Err(LabError::Precondition(format!(
                "requires dim E > s+r (got dim E = {n}, s+r = {})",
                s + r
            )));
        }
        Ok(PeInstance { n, r, s, lambda: Partition::rectangle(s, n - s - r) })
    }

    pub fn key(&self) -> String {
        format!("pe-n{}-r{}-s{}", self.n, self.r, self.s)
    }

    /// Highest homological degree that can be nonzero.
    pub fn top_degree(&self) -> usize {
        self.lambda.size()
    }
}

/// Indices `α` of the degree-`i` strand term: `ℓ(α) ≤ s` and `s+r+α_1 ≤ n`.
pub fn jpw_indices(r: usize, s: usize, i: usize, n: usize) -> Vec<Partition> {
    enumerate_partitions(i, Some(s), None).into_iter().filter(|a| s + r + a.first_part() <= n).collect()
}

/// Every stage of the construction.
#[derive(Clone, Debug)]
pub struct PeBuild {
    pub instance: PeInstance,
    pub algebra: Arc<SuperAlgebra>,
    pub schur: GradedSubmodule,
    pub kernel: GradedSubmodule,
    pub trace: GradedSubmodule,
    pub meet: GradedSubmodule,
    pub complex: TwoSidedComplex,
    pub bookkeeping: Bookkeeping,
}

/// `S_λ V` as a complex with the `(det E*)^twist` labelling.
pub fn pe_schur_complex(
    n: usize,
    lambda: &Partition,
    twist: usize,
    cap: usize,
) -> Result<(GradedSubmodule, TwoSidedComplex), LabError> {
    let algebra = Arc::new(SuperAlgebra::periplectic(n));
    let amb = TensorAmbient::power(algebra.spaces[0].clone(), lambda.size());
    let schur = young_symmetrizer_image(&YoungSymmetrizer::new(lambda), &amb, cap)?;
    let cx = schur.to_complex(&GradedSubmodule::zero(amb), algebra, twist)?;
    Ok((schur, cx))
}

pub fn build_pe_module(inst: &PeInstance, cap: usize) -> Result<PeBuild, LabError> {
    let n = inst.n;
    let lambda = &inst.lambda;
    let algebra = Arc::new(SuperAlgebra::periplectic(n));
    let amb = TensorAmbient::power(algebra.spaces[0].clone(), lambda.size());
    amb.check_cap(cap)?;
    let sym = YoungSymmetrizer::new(lambda);
    let schur = young_symmetrizer_image(&sym, &amb, cap)?;
    let inv = Invariant::periplectic(n);

    // evaluation on two slots of the first row
    let kernel = if lambda.first_part() >= 2 {
        let ins = Insertion::new(amb.clone(), 0, 1)?;
        if schur.contraction_rank(&ins, &inv, Some(1)) == 0 {
            return Err(LabError::Convention("evaluation vanishes in degree 1".into()));
        }
        schur.kernel_of_contraction(&ins, &inv)
    } else {
        schur.clone()
    };
    // trace into two slots of the first column
    let trace = if lambda.len() >= 2 {
        let ins = Insertion::new(amb.clone(), 0, lambda.first_part())?;
        let t = trace_image(&ins, &inv, &sym, cap)?;
        if t.graded_dims().get(&1).copied().unwrap_or(0) == 0 {
            return Err(LabError::Convention("trace vanishes in degree 1".into()));
        }
        t
    } else {
        GradedSubmodule::zero(amb.clone())
    };
    let meet = kernel.intersect(&trace)?;
    let complex = kernel.to_complex(&meet, algebra.clone(), inst.s)?;
    let bookkeeping = Bookkeeping::new(&schur, &kernel, &trace, &meet, &complex.graded_dims(), inst.top_degree());
    Ok(PeBuild { instance: inst.clone(), algebra, schur, kernel, trace, meet, complex, bookkeeping })
}

#[derive(Clone, Debug, Serialize)]
pub struct PeDegree {
    pub h: usize,
    pub dim: usize,
    pub character: SchurSum,
    pub jpw: SchurSum,
    pub jpw_dim: i128,
    /// Coefficientwise containment of the strand character.
    pub contains: bool,
    pub equal: bool,
}

pub fn jpw_compare(cx: &TwoSidedComplex, inst: &PeInstance) -> Result<Vec<PeDegree>, LabError> {
    let dims = cx.graded_dims();
    (0..=inst.top_degree())
        .map(|h| {
            let character = cx.schur_character(h)?;
            let jpw = jpw_character(inst.r, inst.s, h, inst.n)?;
            Ok(PeDegree {
                h,
                dim: dims.get(&h).copied().unwrap_or(0),
                jpw_dim: jpw.dim(inst.n),
                contains: character.dominates(&jpw),
                equal: character == jpw,
                character,
                jpw,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityCheck {
    pub alpha: Partition,
    pub shape: Partition,
    pub multiplicity: i64,
}

pub fn multiplicity_checks(degrees: &[PeDegree], inst: &PeInstance) -> Vec<MultiplicityCheck> {
    degrees
        .iter()
        .flat_map(|d| {
            jpw_indices(inst.r, inst.s, d.h, inst.n).into_iter().map(move |alpha| {
                let shape = p_rs(&alpha, inst.r, inst.s).expect("index set respects the length bound");
                MultiplicityCheck { multiplicity: d.character.coeff(&shape), alpha, shape }
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjCheck {
    pub alpha: Partition,
    pub beta: Partition,
    /// `Φ` maps the `P(α)` piece onto something containing `P(β)`.
    pub phi: bool,
    /// `Φ′` maps the `P(β)` piece onto something containing `P(α)`.
    pub phi_prime: bool,
}

/// For each covering pair `β ⊂ α` of strand indices, pushes one isotypic
/// component through the odd family of the matching degree and looks for a
/// highest weight vector of the other label in the image.
pub fn check_lemma_surj(cx: &TwoSidedComplex, inst: &PeInstance) -> Result<Vec<SurjCheck>, LabError> {
    let (n, r, s) = (inst.n, inst.r, inst.s);
    let mut out = Vec::new();
    for h in 1..=inst.top_degree() {
        for alpha in jpw_indices(r, s, h, n) {
            let wa = pe_weight(&p_rs(&alpha, r, s)?, n, s);
            for beta in alpha.remove_corners() {
                let wb = pe_weight(&p_rs(&beta, r, s)?, n, s);
                let down = cx.family_image(Family::Phi, &cx.isotypic(&wa));
                let up = cx.family_image(Family::PhiPrime, &cx.isotypic(&wb));
                out.push(SurjCheck {
                    phi: cx.highest_weights_in(&down, h - 1)?.contains_key(&wb),
                    phi_prime: cx.highest_weights_in(&up, h)?.contains_key(&wa),
                    alpha: alpha.clone(),
                    beta,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PeLemmas {
    pub multiplicity_one: bool,
    pub surj: bool,
    pub multiplicities: Vec<MultiplicityCheck>,
    pub surj_checks: Vec<SurjCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRecord {
    pub per_degree_equal: Vec<bool>,
    /// `"equal"` when every degree agrees, `"strict"` otherwise.
    pub verdict: String,
}

impl ConjectureRecord {
    pub fn new(per_degree_equal: Vec<bool>) -> Self {
        let verdict = if per_degree_equal.iter().all(|&e| e) { "equal" } else { "strict" };
        ConjectureRecord { per_degree_equal, verdict: verdict.into() }
    }

    pub fn all_equal(&self) -> bool {
        self.verdict == "equal"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeReport {
    pub instance: PeInstance,
    pub degrees: Vec<PeDegree>,
    pub axioms: AxiomSummary,
    pub lemmas: PeLemmas,
    pub irreducible: Irreducibility,
    pub conjecture: ConjectureRecord,
    /// Degree 1 is exactly `S_{(s+1, s^{s+r-1}, 1)} E*`.
    pub degree_one: bool,
    pub bookkeeping: Bookkeeping,
}

impl PeReport {
    /// Every asserted check; conjectural equality is not among them.
    pub fn passed(&self) -> bool {
        self.axioms.passed()
            && self.degrees.iter().all(|d| d.contains && d.dim as i128 >= d.jpw_dim)
            && self.lemmas.multiplicity_one
            && self.lemmas.surj
            && (!self.conjecture.all_equal() || self.irreducible.is_irreducible())
            && self.degree_one
            && self.bookkeeping.euler_ok
    }
}

/// The degree-1 shape `(s+1, s^{s+r-1}, 1)`.
pub fn degree_one_shape(r: usize, s: usize) -> Partition {
    let mut parts = vec![s + 1];
    parts.extend(std::iter::repeat_n(s, s + r - 1));
    parts.push(1);
    Partition::new(parts).expect("weakly decreasing")
}

pub fn verify_pe(inst: &PeInstance, cap: usize) -> Result<PeReport, LabError> {
    let build = build_pe_module(inst, cap)?;
    let cx = &build.complex;
    let degrees = jpw_compare(cx, inst)?;
    let multiplicities = multiplicity_checks(&degrees, inst);
    let surj_checks = check_lemma_surj(cx, inst)?;
    let lemmas = PeLemmas {
        multiplicity_one: multiplicities.iter().all(|m| m.multiplicity == 1),
        surj: surj_checks.iter().all(|c| c.phi && c.phi_prime),
        multiplicities,
        surj_checks,
    };
    let degree_one = degrees.get(1).is_none_or(|d| d.character == SchurSum::single(degree_one_shape(inst.r, inst.s)));
    Ok(PeReport {
        instance: inst.clone(),
        axioms: cx.verify_axioms().into(),
        irreducible: cx.check_irreducible(),
        conjecture: ConjectureRecord::new(degrees.iter().map(|d| d.equal).collect()),
        degree_one,
        bookkeeping: build.bookkeeping.clone(),
        lemmas,
        degrees,
    })
}

/// Degree-`i` character of `∧^{n-1-r} V ⊗ det E*` by the Pieri rule.
pub fn example_s1_expected(n: usize, r: usize, i: usize) -> SchurSum {
    let mut out = SchurSum::new();
    let hook = |arm: usize, legs: usize| {
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, legs));
        Partition::new(parts).expect("hook shape")
    };
    if i >= 1 && r + 2 + i <= n {
        out.add_term(hook(i, r + 1 + i), 1);
    }
    if r + 1 + i <= n {
        out.add_term(hook(i + 1, r + i), 1);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleS1Degree {
    pub i: usize,
    pub character: SchurSum,
    pub expected: SchurSum,
    pub quotient: SchurSum,
    pub jpw: SchurSum,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleS1Report {
    pub n: usize,
    pub r: usize,
    pub degrees: Vec<ExampleS1Degree>,
    pub sub_dims: Vec<usize>,
    pub closed_phi: bool,
    pub closed_phi_prime: bool,
    pub characters_ok: bool,
    pub quotient_ok: bool,
}

impl ExampleS1Report {
    pub fn passed(&self) -> bool {
        self.closed_phi && self.closed_phi_prime && self.characters_ok && self.quotient_ok
    }
}

/// `W = ∧^{n-1-r} V` with the sub `W′` spanned by the `(i, 1^{r+1+i})`
/// isotypic pieces, and the quotient `W / W′`.
pub fn check_example_s1(n: usize, r: usize, cap: usize) -> Result<ExampleS1Report, LabError> {
    if n < r + 3 {
        return Err(LabError::Precondition(format!("requires dim E >= r+3 (got dim E = {n}, r = {r})")));
    }
    let top = n - 1 - r;
    let (_, cx) = pe_schur_complex(n, &Partition::rectangle(1, top), 1, cap)?;
    let mut seeds = Vec::new();
    for i in 1..=top {
        if r + 2 + i > n {
            continue;
        }
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, r + 1 + i));
        let w = pe_weight(&Partition::new(parts)?, n, 1);
        if let Some(b) = cx.block_index(&w) {
            seeds.extend(cx.highest_weight_vectors(b).into_iter().map(|v| (b, v)));
        }
    }
    let sub = cx.closure(&seeds, Family::Even, None);
    let closed_phi = cx.preserves(Family::Phi, &sub);
    let closed_phi_prime = cx.preserves(Family::PhiPrime, &sub);
    let quotient = if closed_phi && closed_phi_prime { Some(cx.quotient(&sub)?) } else { None };
    let mut degrees = Vec::new();
    for i in 0..=top {
        degrees.push(ExampleS1Degree {
            i,
            character: cx.schur_character(i)?,
            expected: example_s1_expected(n, r, i),
            quotient: match &quotient {
                Some(q) => q.schur_character(i)?,
                None => SchurSum::new(),
            },
            jpw: jpw_character(r, 1, i, n)?,
        });
    }
    let mut sub_dims = vec![0; top + 1];
    for (b, s) in cx.blocks().iter().zip(&sub.spaces) {
        sub_dims[b.degree] += s.dim();
    }
    Ok(ExampleS1Report {
        n,
        r,
        characters_ok: degrees.iter().all(|d| d.character == d.expected),
        quotient_ok: quotient.is_some() && degrees.iter().all(|d| d.quotient == d.jpw),
        degrees,
        sub_dims,
        closed_phi,
        closed_phi_prime,
    })
}

/// Lower bound on each degree from the strand: `Σ_{|α|=i} dim S_{P(α)}`.
pub fn jpw_dim_bound(inst: &PeInstance, i: usize) -> u64 {
    jpw_indices(inst.r, inst.s, i, inst.n)
        .iter()
        .map(|a| dim_schur(&p_rs(a, inst.r, inst.s).expect("length bounded by s"), inst.n))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::twisted_schur_complex_character;

    const CAP: usize = 25_000;

    #[test]
    fn preconditions() {
        let err = PeInstance::new(3, 2, 1).unwrap_err();
        assert!(err.to_string().contains("requires dim E > s+r"));
        assert!(PeInstance::new(4, 1, 0).is_err());
        assert_eq!(PeInstance::new(5, 1, 2).unwrap().lambda, partition![2, 2]);
    }

    #[test]
    fn small_instance() {
        let inst = PeInstance::new(4, 1, 1).unwrap();
        let b = build_pe_module(&inst, CAP).unwrap();
        assert_eq!(b.bookkeeping.schur_dims, vec![6, 16, 10]);
        assert_eq!(b.bookkeeping.quotient_dims, vec![6, 15, 10]);
        // λ = (1,1) has no two slots in a row, so nothing is killed by evaluation
        assert_eq!(b.kernel.dim(), b.schur.dim());
        let chars: Vec<SchurSum> = (0..3).map(|h| b.complex.schur_character(h).unwrap()).collect();
        assert_eq!(chars[0], SchurSum::single(partition![1, 1]));
        assert_eq!(chars[1], SchurSum::single(partition![2, 1, 1]));
        assert_eq!(chars[2], SchurSum::single(partition![3, 1, 1, 1]));
        for h in 0..3 {
            assert_eq!(jpw_dim_bound(&inst, h) as usize, b.bookkeeping.quotient_dims[h]);
        }
    }

    #[test]
    fn schur_character_matches_formula() {
        for (n, r, s) in [(4, 1, 1), (4, 2, 1), (5, 2, 2)] {
            let inst = PeInstance::new(n, r, s).unwrap();
            let (_, cx) = pe_schur_complex(n, &inst.lambda, s, CAP).unwrap();
            for h in 0..=inst.top_degree() {
                assert_eq!(cx.schur_character(h).unwrap(), twisted_schur_complex_character(n, r, s, h), "{n} {r} {s} {h}");
            }
        }
    }

    #[test]
    fn full_exterior_square_is_reducible() {
        let (_, cx) = pe_schur_complex(4, &partition![1, 1], 1, CAP).unwrap();
        assert!(matches!(cx.check_irreducible(), Irreducibility::Reducible { .. }));
    }

    #[test]
    fn corrupted_phi_prime_breaks_only_the_bracket() {
        let inst = PeInstance::new(4, 1, 1).unwrap();
        let cx = build_pe_module(&inst, CAP).unwrap().complex.with_corrupted_phi_prime();
        let a = cx.verify_axioms();
        assert!(a.sq_zero_phi && a.sq_zero_phi_prime);
        assert!(!a.bracket);
    }

    #[test]
    fn verify_small() {
        let rep = verify_pe(&PeInstance::new(4, 1, 1).unwrap(), CAP).unwrap();
        assert!(rep.passed(), "{:#?}", rep);
        assert!(rep.conjecture.all_equal());
        assert_eq!(rep.lemmas.surj_checks.len(), 2);
    }

    #[test]
    fn example_s1_small() {
        assert_eq!(example_s1_expected(4, 1, 0), SchurSum::single(partition![1, 1]));
        let mut w1 = SchurSum::single(partition![1, 1, 1, 1]);
        w1.add_term(partition![2, 1, 1], 1);
        assert_eq!(example_s1_expected(4, 1, 1), w1);
        let rep = check_example_s1(4, 1, CAP).unwrap();
        assert!(rep.passed(), "{:#?}", rep);
        assert_eq!(rep.sub_dims, vec![0, 1, 0]);
    }
}
