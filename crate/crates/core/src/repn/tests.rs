use proptest::prelude::*;

use super::*;
use crate::hopf::{dual, kac_paljutkin, named_group, taft, trivial, NamedGroup};
use crate::substructures::{quotient_by_hopf_ideal, zeta, ker_counit};

fn q8(order: u32) -> HopfAlgebra {
    named_group(NamedGroup::Q8, order)
}

/// Lexicographic permutations of `0..n`.
fn perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// The quaternion matrices `i ↦ diag(i, −i)`, `j ↦ [[0,1],[−1,0]]` in the
/// basis order `1, −1, i, −i, j, −j, k, −k`.
fn quaternion_matrices() -> Vec<Matrix> {
    let z = |e| Cyclo::zeta_pow(4, e);
    let o = Cyclo::zero(4);
    let one = Matrix::identity(2, 4);
    let i = Matrix::from_rows(4, vec![vec![z(1), o.clone()], vec![o.clone(), z(3)]]).unwrap();
    let j = Matrix::from_ints(4, &[&[0, 1], &[-1, 0]]);
    let k = i.checked_mul(&j).unwrap();
    let minus = Cyclo::from_int(4, -1);
    [one, i, j, k].into_iter().flat_map(|m| [m.clone(), m.scale(&minus)]).collect()
}

fn ints(order: u32, v: &[i64]) -> SparseVec {
    SparseVec::from_dense(&v.iter().map(|&x| Cyclo::from_int(order, x)).collect::<Vec<_>>())
}

#[test]
fn radicals() {
    for g in [NamedGroup::S3, NamedGroup::D4, NamedGroup::Q8, NamedGroup::Cyclic(5)] {
        assert!(radical(&named_group(g, 1)).is_zero(), "{g}");
    }
    let t = taft(2);
    let r = radical(&t);
    let expected = Subspace::span(4, t.order(), [t.basis(1), t.basis(3)]);
    assert_eq!(r, expected);
    for x in r.basis() {
        for y in r.basis() {
            assert!(t.mul(x, y).is_zero());
        }
    }
    assert_eq!(radical(&taft(3)).dim(), 6);
    assert!(radical(&kac_paljutkin()).is_zero());
}

#[test]
fn commutative_split_algebra_has_linear_blocks() {
    let h = named_group(NamedGroup::Cyclic(4), 4);
    let w = wedderburn(&h).unwrap();
    assert_eq!(w.degrees, vec![1; 4]);
    assert_eq!(w.ss_dim, 4);
}

#[test]
fn cyclic_group_over_q_does_not_split() {
    let h = named_group(NamedGroup::Cyclic(4), 1);
    match wedderburn(&h) {
        Err(RepnError::NonSplitField { polynomial, suggested_order, .. }) => {
            assert_eq!(polynomial, "x^2 + 1");
            assert_eq!(suggested_order, Some(4));
        }
        other => panic!("expected NonSplitField, got {other:?}"),
    }
}

#[test]
fn s3_over_q() {
    let h = named_group(NamedGroup::S3, 1);
    let w = wedderburn(&h).unwrap();
    assert_eq!(w.degrees, vec![1, 1, 2]);
    assert_eq!(w.block_dims, vec![1, 1, 4]);
    // character table oracle: trivial, sign, and fix(g) − 1
    let ps = perms(3);
    let table: Vec<SparseVec> = vec![
        ints(1, &[1; 6]),
        ints(1, &ps.iter().map(|p| sign(p)).collect::<Vec<_>>()),
        ints(1, &ps.iter().map(|p| (0..3).filter(|&i| p[i] == i).count() as i64 - 1).collect::<Vec<_>>()),
    ];
    let mut chars: Vec<SparseVec> = w.irreps(&h).unwrap().iter().map(|v| v.character().clone()).collect();
    for t in &table {
        let k = chars.iter().position(|c| c == t).expect("character in table");
        chars.remove(k);
    }
}

#[test]
fn q8_needs_gaussian_rationals() {
    match wedderburn(&q8(1)) {
        Err(RepnError::NonSplitField { suggested_order, .. }) => assert_eq!(suggested_order, Some(4)),
        other => panic!("expected NonSplitField, got {other:?}"),
    }
    let h = q8(4);
    let w = wedderburn(&h).unwrap();
    assert_eq!(w.degrees, vec![1, 1, 1, 1, 2]);
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    assert_eq!(two.image_dim(), 4);
    let oracle = Representation::new(&h, quaternion_matrices()).unwrap();
    assert_eq!(two.character(), &oracle.character());
    // the 1-dim irreps factor through Q8/Z
    for v in reps.iter().filter(|v| v.degree() == 1) {
        assert_eq!(v.matrix(1), &Matrix::identity(1, 4));
    }
}

#[test]
fn trivial_algebra_has_counit_irrep() {
    let h = trivial();
    let reps = irreps(&h).unwrap();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].rep(), &Representation::counit(&h));
}

#[test]
fn taft2_irreps() {
    let t = taft(2);
    let reps = irreps(&t).unwrap();
    assert_eq!(reps.iter().map(|v| v.degree()).collect::<Vec<_>>(), vec![1, 1]);
    // x acts by zero; g by ±1
    for v in &reps {
        assert!(v.matrix(1).is_zero());
        let g = v.matrix(2).get(0, 0).clone();
        assert_eq!(&g * &g, Cyclo::one(t.order()));
    }
}

#[test]
fn kac_paljutkin_degrees() {
    let h = kac_paljutkin();
    let w = wedderburn(&h).unwrap();
    assert_eq!(w.degrees, vec![1, 1, 1, 1, 2]);
    assert_eq!(w.degrees.iter().map(|d| d * d).sum::<usize>(), 8);
}

#[test]
fn idempotents_are_orthogonal_and_complete() {
    for h in [q8(4), named_group(NamedGroup::S3, 1), taft(3), kac_paljutkin()] {
        let w = wedderburn(&h).unwrap();
        let es = w.quotient_idempotents();
        let mut sum = SparseVec::new();
        for (a, e) in es.iter().enumerate() {
            sum = sum.add(e);
            for (b, f) in es.iter().enumerate() {
                let p = w.quotient_mul(e, f);
                if a == b {
                    assert_eq!(&p, e);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        assert_eq!(&sum, w.quotient_one());
    }
}

#[test]
fn sum_of_squares_matches_semisimple_dimension() {
    let cases = [
        named_group(NamedGroup::S3, 1),
        named_group(NamedGroup::D4, 1),
        named_group(NamedGroup::S4, 1),
        q8(4),
        dual(&named_group(NamedGroup::S3, 1)),
        taft(2),
        taft(3),
        kac_paljutkin(),
    ];
    for h in cases {
        let w = wedderburn(&h).unwrap();
        let total: usize = w.degrees.iter().map(|d| d * d).sum();
        assert_eq!(total, h.dim() - w.radical.dim(), "{}", h.name());
        for v in w.irreps(&h).unwrap() {
            v.check_algebra_map(&h).unwrap();
            assert_eq!(v.image_dim(), v.degree() * v.degree());
        }
    }
}

#[test]
fn scalar_preimages() {
    let h = q8(4);
    let reps = irreps(&h).unwrap();
    for v in reps.iter().filter(|v| v.degree() == 1) {
        assert!(scalar_preimage(&h, v).unwrap().is_full());
    }
    let oracle = Representation::new(&h, quaternion_matrices()).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    let pre = scalar_preimage(&h, two).unwrap();
    assert_eq!(pre.dim(), 5);
    assert_eq!(pre, scalar_preimage(&h, &oracle).unwrap());
    assert!(pre.contains(&h.basis(1)));
}

#[test]
fn hopf_centers_of_representations() {
    let h = q8(4);
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    let hz = hopf_center_of_rep(&h, two).unwrap();
    let center = Subspace::span(8, 4, [h.basis(0), h.basis(1)]);
    assert_eq!(hz.space(), &center);
    let one = reps.iter().find(|v| v.degree() == 1).unwrap();
    assert!(hopf_center_of_rep(&h, one).unwrap().space().is_full());
    let c4 = named_group(NamedGroup::Cyclic(4), 4);
    for v in irreps(&c4).unwrap() {
        assert!(hopf_center_of_rep(&c4, &v).unwrap().space().is_full());
    }
}

#[test]
fn hopf_kernels_of_representations() {
    let h = q8(4);
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    assert!(hopf_kernel_of_rep(&h, two).unwrap().space().is_zero());
    assert!(is_inner_faithful(&h, two).unwrap());
    let eps = Representation::counit(&h);
    assert_eq!(hopf_kernel_of_rep(&h, &eps).unwrap().space(), &ker_counit(&h));
    assert!(!is_inner_faithful(&h, &eps).unwrap());

    let s3 = named_group(NamedGroup::S3, 1);
    let ps = perms(3);
    let sign_rep = Representation::new(
        &s3,
        ps.iter().map(|p| Matrix::from_ints(1, &[&[sign(p)]])).collect(),
    )
    .unwrap();
    let k = hopf_kernel_of_rep(&s3, &sign_rep).unwrap();
    // the ideal of A3: dim kS3 − dim k[Z/2]
    assert_eq!(k.dim(), 4);
    let (q, _) = quotient_by_hopf_ideal(&s3, &k).unwrap();
    // two grouplikes, one of them the unit, the other an involution: k[Z/2]
    assert_eq!(q.dim(), 2);
    for a in 0..2 {
        assert_eq!(q.comult_basis(a), &SparseVec::unit(3 * a, 1));
    }
    let g = (0..2).find(|&a| q.basis(a) != q.one()).unwrap();
    assert_eq!(q.mul(&q.basis(g), &q.basis(g)), q.one());
}

#[test]
fn regular_representation_is_faithful() {
    let h = kac_paljutkin();
    let reg = Representation::regular(&h);
    reg.check_algebra_map(&h).unwrap();
    assert!(reg.kernel().is_zero());
    assert!(is_inner_faithful(&h, &reg).unwrap());
}

#[test]
fn rejects_non_representations() {
    let h = q8(4);
    let mut ms = quaternion_matrices();
    ms.swap(2, 4);
    assert!(matches!(Representation::new(&h, ms), Err(RepnError::NotARepresentation(_))));
}

#[test]
fn central_characters() {
    let h = named_group(NamedGroup::S3, 1);
    for v in irreps(&h).unwrap() {
        assert!(is_central_character(&h, v.character()));
    }
    let kp = kac_paljutkin();
    assert!(is_central_character(&kp, &character(&Representation::counit(&kp))));
}

#[test]
fn schur_inclusion_and_inner_faithful_equality() {
    for h in [q8(4), named_group(NamedGroup::S3, 1), named_group(NamedGroup::D4, 1), kac_paljutkin(), taft(3)] {
        let z = zeta(&h);
        for v in irreps(&h).unwrap() {
            let hz = hopf_center_of_rep(&h, &v).unwrap();
            assert!(hz.space().contains_subspace(z.space()).unwrap(), "{}", h.name());
            if is_inner_faithful(&h, &v).unwrap() {
                assert_eq!(hz.space(), z.space(), "{}", h.name());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_character_is_convolution(a in 0usize..5, b in 0usize..5, x in proptest::collection::vec(-3i64..=3, 8)) {
        let h = kac_paljutkin();
        let reps = irreps(&h).unwrap();
        let (v, w) = (&reps[a], &reps[b]);
        let vw = v.tensor(&h, w);
        vw.check_algebra_map(&h).unwrap();
        let chi = convolution(&h, v.character(), w.character());
        prop_assert_eq!(vw.character(), chi.clone());
        // evaluated on a random element
        let elt = ints(8, &x);
        prop_assert_eq!(vw.act(&elt).trace(), elt.dot(&chi.to_dense(8, 8), 8));
    }
}
