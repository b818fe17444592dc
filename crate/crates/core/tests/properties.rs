//! Structural properties checked on random inputs.

use std::sync::Arc;

use proptest::prelude::*;
use strand::exactla::{rat, SparseVec};
use strand::partitions::{enumerate_partitions, Partition};
use strand::superrep::complex::{gl_labels, gl_weight, pe_label, pe_weight};
use strand::superrep::{derivation_extend, SuperAlgebra, TensorAmbient, YoungSymmetrizer};
use strand::symfunc::{dim_schur, jpw_character, twisted_schur_complex_character};

fn small_shape() -> impl Strategy<Value = Partition> {
    (1usize..=3).prop_flat_map(|k| {
        let all = enumerate_partitions(k, None, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn shape_up_to(size: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    (0..=size).prop_flat_map(move |k| {
        let all = enumerate_partitions(k, Some(max_len), None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The symmetrizer is a module map: it commutes with every generator.
    #[test]
    fn symmetrizer_is_equivariant(n in 1usize..=3, lambda in small_shape(), seed in 0usize..10_000, pick in 0usize..64) {
        let alg = SuperAlgebra::periplectic(n);
        let amb = TensorAmbient::power(alg.spaces[0].clone(), lambda.size());
        let sym = YoungSymmetrizer::new(&lambda);
        let ops: Vec<_> = alg.even.iter().chain(&alg.phi).chain(&alg.phi_prime).collect();
        let op = ops[pick % ops.len()];
        let v = SparseVec::unit(seed % amb.dim());
        let left = op.apply(&amb, &sym.apply(&amb, &v));
        let right = sym.apply(&amb, &op.apply(&amb, &v));
        prop_assert_eq!(left, right);
    }

    /// Derivation matrices agree with word-by-word application.
    #[test]
    fn derivation_matrix_matches_action(n in 1usize..=2, m in 1usize..=2, pick in 0usize..64, id in 0usize..10_000) {
        let alg = SuperAlgebra::general_linear(n, m);
        let amb = TensorAmbient::new(alg.spaces.clone(), vec![0, 1, 0]).unwrap();
        let ops: Vec<_> = alg.even.iter().chain(&alg.phi).chain(&alg.phi_prime).collect();
        let op = ops[pick % ops.len()];
        let mat = derivation_extend(op, &amb);
        let v = SparseVec::unit(id % amb.dim()).scale(&rat(3));
        prop_assert_eq!(mat.apply(&v), op.apply(&amb, &v));
    }

    #[test]
    fn twisted_labels_roundtrip(p in shape_up_to(8, 4), q in shape_up_to(6, 3), s in 0usize..3) {
        prop_assume!(p.first_part() <= 6);
        let w = pe_weight(&p, 4, 6);
        prop_assert_eq!(pe_label(&w, 6), Some(p.clone()));
        let w = gl_weight(&p, &q, 4, 3, s + 6);
        prop_assert_eq!(gl_labels(&w, 4, s + 6), Some((p, q)));
    }

    /// The strand character sits inside the character of the whole Schur
    /// power, degree by degree.
    #[test]
    fn strand_inside_schur_power(n in 3usize..=7, r in 0usize..3, s in 1usize..3, i in 0usize..5) {
        prop_assume!(n > r + s);
        let full = twisted_schur_complex_character(n, r, s, i);
        let strand = jpw_character(r, s, i, n).unwrap();
        prop_assert!(full.dominates(&strand));
        for (shape, _) in strand.terms() {
            prop_assert!(dim_schur(shape, n) > 0);
        }
    }
}

#[test]
fn algebra_handles_are_shareable() {
    let alg = Arc::new(SuperAlgebra::periplectic(2));
    let clone = alg.clone();
    std::thread::spawn(move || assert_eq!(clone.rank(), 2)).join().unwrap();
    assert_eq!(alg.phi.len(), 3);
    assert_eq!(alg.phi_prime.len(), 1);
}
