use super::*;
use crate::hopf::{dual, kac_paljutkin, named_group, taft, tensor_product, trivial, NamedGroup};
use crate::linalg::SparseVec;
use crate::repn::{irreps, Representation};
use crate::scalars::{Cyclo, Rational};
use crate::substructures::{zeta, HopfSub};

fn q8() -> crate::hopf::HopfAlgebra {
    named_group(NamedGroup::Q8, 4)
}

fn int(r: &TheoremReport, key: &str) -> i64 {
    match r.get(key) {
        Some(WitnessValue::Int(n)) => *n,
        other => panic!("{key}: {other:?}"),
    }
}

fn z2_triangular() -> SparseVec {
    let half = |s: i64| Cyclo::from_rational(1, Rational::new(s, 2));
    SparseVec::from_terms(vec![(0, half(1)), (1, half(1)), (2, half(1)), (3, half(-1))])
}

#[test]
fn claim_names_round_trip() {
    for c in Claim::ALL {
        assert_eq!(c.name().parse::<Claim>().unwrap(), c);
    }
    assert!("nope".parse::<Claim>().is_err());
}

#[test]
fn fail_always_has_a_witness() {
    let r = TheoremReport::new("x", Claim::Fd).require(false, "why", 3usize);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.witnesses.len(), 1);
    assert!(!r.passed());
}

#[test]
fn fd_examples() {
    for h in [named_group(NamedGroup::S4, 1), q8(), kac_paljutkin(), named_group(NamedGroup::Cyclic(6), 6)] {
        let r = check_fd(&h).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
    }
    let r = check_fd(&kac_paljutkin()).unwrap();
    assert_eq!(r.get("degrees"), Some(&WitnessValue::Ints(vec![1, 1, 1, 1, 2])));
}

#[test]
fn main_theorem_q8_and_d4() {
    for h in [q8(), named_group(NamedGroup::D4, 1)] {
        let reports = check_main_theorem(&h).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
        }
        let two = reports.iter().find(|r| int(r, "d") == 2).unwrap();
        assert_eq!(int(two, "dim HZ(V)"), 2);
        assert_eq!(two.get("dim H / dim HZ(V)"), Some(&WitnessValue::Ratio(Rational::from(4))));
        assert_eq!(two.get("q"), Some(&WitnessValue::Ratio(Rational::from(2))));
    }
}

#[test]
fn main_theorem_one_dimensional() {
    for r in check_main_theorem(&named_group(NamedGroup::Cyclic(3), 3)).unwrap() {
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(int(&r, "d"), 1);
    }
}

#[test]
fn main_theorem_non_semisimple() {
    let reports = check_main_theorem(&taft(2)).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass && int(r, "d") == 1));
}

#[test]
fn schur_specialization() {
    let r = check_schur_specialization("Z4", &NamedGroup::Cyclic(4).cayley(), 4).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(r.get("|Z(χ)|"), Some(&WitnessValue::Ints(vec![4; 4])));
    let r = check_schur_specialization("Q8", &NamedGroup::Q8.cayley(), 4).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(r.get("degrees"), Some(&WitnessValue::Ints(vec![1, 1, 1, 1, 2])));
    let r = check_schur_specialization("S3", &NamedGroup::S3.cayley(), 1).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(r.get("|Z(χ)|"), Some(&WitnessValue::Ints(vec![6, 6, 1])));
}

#[test]
fn lemma_com_examples() {
    let d4 = named_group(NamedGroup::D4, 1);
    let one = HopfSub::trivial(&d4);
    let r = check_lemma_com(&d4, &one, &one);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.get("(i) K and L commute"), Some(&WitnessValue::Bool(true)));
    // rotations r^a are indices 0..4
    let rot = HopfSub::from_basis_indices(&d4, &[0, 1, 2, 3]).unwrap();
    let r = check_lemma_com(&d4, &rot, &rot);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.get("(ii) [l,k] = ε(l)ε(k)1"), Some(&WitnessValue::Bool(true)));
    let all = HopfSub::whole(&d4);
    let r = check_lemma_com(&d4, &all, &all);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.get("(i) K and L commute"), Some(&WitnessValue::Bool(false)));
    assert_eq!(r.get("(ii) [l,k] = ε(l)ε(k)1"), Some(&WitnessValue::Bool(false)));
    let c = named_group(NamedGroup::Cyclic(4), 1);
    let w = HopfSub::whole(&c);
    assert_eq!(check_lemma_com(&c, &w, &w).get("(i) K and L commute"), Some(&WitnessValue::Bool(true)));
}

#[test]
fn lemma_com_on_kp8() {
    let kp = kac_paljutkin();
    let g = HopfSub::from_basis_indices(&kp, kp.grouplikes().unwrap()).unwrap();
    for (k, l) in [(&g, &g), (&g, &HopfSub::whole(&kp)), (&zeta(&kp), &HopfSub::whole(&kp))] {
        assert_eq!(check_lemma_com(&kp, k, l).verdict, Verdict::Pass);
    }
}

#[test]
fn inner_faithful_examples() {
    let h = q8();
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    let r = check_lemma_inner_faithful(&h, two, 3).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(int(&r, "pairs checked"), 16);
    let one = reps.iter().find(|v| v.degree() == 1).unwrap();
    assert!(matches!(check_lemma_inner_faithful(&h, one, 3).unwrap().verdict, Verdict::Skipped(_)));
    // the sign representation of Z/2 is faithful
    let z2 = named_group(NamedGroup::Cyclic(2), 1);
    let sign = Representation::new(&z2, vec![crate::linalg::Matrix::from_ints(1, &[&[1]]), crate::linalg::Matrix::from_ints(1, &[&[-1]])]).unwrap();
    assert_eq!(check_lemma_inner_faithful(&z2, &sign, 3).unwrap().verdict, Verdict::Pass);
}

#[test]
fn hn_trivial_cases() {
    let s3 = named_group(NamedGroup::S3, 1);
    let data = build_hn(&s3, 2, SizeCaps::default()).unwrap();
    assert!(data.ker_mu_n.space().is_zero());
    assert!(data.hn.same_structure(&crate::hopf::tensor_power(&s3, 2)));
    let data = build_hn(&q8(), 1, SizeCaps::default()).unwrap();
    assert!(data.hn.same_structure(&q8()));
}

#[test]
fn hn_dimensions() {
    for h in [q8(), named_group(NamedGroup::D4, 1)] {
        let r = check_hn_dimension(&h, 2, SizeCaps::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(int(&r, "dim H_n"), 32);
        assert_eq!(r.get("formula"), Some(&WitnessValue::Text("32 = 8²/2".into())));
        assert_eq!(int(&r, "dim (Ker μ_n)H^n"), 32);
    }
    let s3 = named_group(NamedGroup::S3, 1);
    for (n, dim) in [(1, 6), (2, 36), (3, 216)] {
        let r = check_hn_dimension(&s3, n, SizeCaps::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(int(&r, "dim H_n"), dim);
        if n == 3 {
            assert_eq!(r.get("formula"), Some(&WitnessValue::Text("216 = 6³/1²".into())));
        }
    }
}

#[test]
fn hn_mu_is_multiplication() {
    let data = build_hn(&q8(), 2, SizeCaps::default()).unwrap();
    assert_eq!(data.mu_n.len(), 4);
    assert_eq!(data.ker_mu_n.dim(), 2);
    assert_eq!(data.zeta_algebra.dim(), 2);
}

#[test]
fn hn_size_caps() {
    let err = build_hn(&q8(), 4, SizeCaps::default()).unwrap_err();
    assert_eq!(err, TheoremError::SizeCap { what: "dim H^n", size: 4096, cap: 1000 });
    let caps = SizeCaps { full: 1000, coideal: 10 };
    let r = check_hn_dimension(&q8(), 2, caps).unwrap();
    assert!(matches!(r.verdict, Verdict::PartialCertificate(_)));
    assert!(r.passed());
}

#[test]
fn vn_irreducible() {
    let h = q8();
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    let r = check_vn_irreducible_over_hn(&h, two, 2, SizeCaps::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(int(&r, "image dimension"), 16);
    let r = check_vn_irreducible_over_hn(&h, two, 1, SizeCaps::default()).unwrap();
    assert_eq!(int(&r, "image dimension"), 4);
    let one = reps.iter().find(|v| v.degree() == 1).unwrap();
    let r = check_vn_irreducible_over_hn(&h, one, 2, SizeCaps::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(int(&r, "image dimension"), 1);
}

#[test]
fn hbar_chain_examples() {
    let h = q8();
    let reps = irreps(&h).unwrap();
    let two = reps.iter().find(|v| v.degree() == 2).unwrap();
    let r = check_hbar_chain(&h, two).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(int(&r, "dim H̄"), 8);

    let s3 = named_group(NamedGroup::S3, 1);
    let sign = irreps(&s3).unwrap().into_iter().find(|v| v.degree() == 1 && v.matrix(1).get(0, 0) != &Cyclo::one(1)).unwrap();
    let r = check_hbar_chain(&s3, &sign).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r}");
    assert_eq!(int(&r, "dim H̄"), 2);
    assert_eq!(int(&r, "dim ζ(H̄)"), 2);
    assert_eq!(int(&r, "dim H/HZ(V)⁺H"), 1);

    // a nontrivial character of D4 factors through D4/ker χ of order 2
    let d4 = named_group(NamedGroup::D4, 1);
    let c = NamedGroup::D4.cayley();
    for v in irreps(&d4).unwrap().iter().filter(|v| v.degree() == 1) {
        let kernel = (0..8).filter(|&g| v.matrix(g).get(0, 0) == &Cyclo::one(1)).count();
        let r = check_hbar_chain(&d4, v).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(int(&r, "dim H̄") as usize, c.order() / kernel);
    }
}

#[test]
fn central_characters() {
    let r = check_corollary_central_character(&named_group(NamedGroup::S3, 1)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.get("central characters"), Some(&WitnessValue::Ints(vec![0, 1, 2])));
    // H* = kQ8: a character evaluates at one group element, central iff in Z(Q8)
    let dq8 = dual(&q8());
    let r = check_corollary_central_character(&dq8).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    match r.get("central characters") {
        Some(WitnessValue::Ints(v)) => assert_eq!(v.len(), NamedGroup::Q8.cayley().center().len()),
        other => panic!("{other:?}"),
    }
    assert!(matches!(check_corollary_central_character(&taft(2)).unwrap().verdict, Verdict::Skipped(_)));
    assert_eq!(check_corollary_central_character(&kac_paljutkin()).unwrap().verdict, Verdict::Pass);
}

#[test]
fn quasitriangular_examples() {
    let s3 = named_group(NamedGroup::S3, 1);
    let r = verify_quasitriangular(&s3, &s3.one_tensor(2)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    let z2 = named_group(NamedGroup::Cyclic(2), 1);
    assert_eq!(verify_quasitriangular(&z2, &z2_triangular()).unwrap().verdict, Verdict::Pass);
    assert_eq!(verify_quasitriangular(&z2, &SparseVec::new()), Err(TheoremError::NotInvertible));
    // 1⊗g is invertible but fails the first hexagon identity
    let bad = SparseVec::unit(1, 1);
    assert_eq!(verify_quasitriangular(&z2, &bad).unwrap().verdict, Verdict::Fail);
}

#[test]
fn main_theorem_on_tensor_square() {
    let h = tensor_product(&named_group(NamedGroup::S3, 1), &named_group(NamedGroup::S3, 1)).unwrap();
    for r in check_main_theorem(&h).unwrap() {
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
    }
    let t = trivial();
    assert_eq!(check_main_theorem(&t).unwrap().len(), 1);
}

mod properties {
    use super::*;
    use crate::hopf::HopfAlgebra;
    use crate::repn::{hopf_center_of_rep, is_inner_faithful};
    use proptest::prelude::*;

    fn instance(i: usize) -> HopfAlgebra {
        match i % 6 {
            0 => q8(),
            1 => named_group(NamedGroup::D4, 1),
            2 => named_group(NamedGroup::S3, 1),
            3 => kac_paljutkin(),
            4 => dual(&named_group(NamedGroup::S3, 1)),
            _ => taft(3),
        }
    }

    fn group(i: usize) -> NamedGroup {
        [NamedGroup::Q8, NamedGroup::D4, NamedGroup::S3, NamedGroup::Cyclic(6)][i % 4]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn zeta_inside_every_hopf_center(i in 0usize..6, j in 0usize..10) {
            let h = instance(i);
            let reps = irreps(&h).unwrap();
            let v = &reps[j % reps.len()];
            let hz = hopf_center_of_rep(&h, v).unwrap();
            let z = zeta(&h);
            prop_assert!(hz.space().contains_subspace(z.space()).unwrap());
            if is_inner_faithful(&h, v).unwrap() {
                prop_assert_eq!(hz.space(), z.space());
            }
        }

        #[test]
        fn com_equivalence_on_subgroup_pairs(g in 0usize..4, a in 0usize..20, b in 0usize..20) {
            let g = group(g);
            let h = named_group(g, 1);
            let subgroups = g.cayley().subgroups();
            let k = HopfSub::from_basis_indices(&h, &subgroups[a % subgroups.len()]).unwrap();
            let l = HopfSub::from_basis_indices(&h, &subgroups[b % subgroups.len()]).unwrap();
            let r = check_lemma_com(&h, &k, &l);
            prop_assert_eq!(r.verdict, Verdict::Pass);
        }

        #[test]
        fn hn_dimension_formula(g in 0usize..4, n in 1usize..3) {
            let h = named_group(group(g), 4);
            let r = check_hn_dimension(&h, n, SizeCaps::default()).unwrap();
            prop_assert_eq!(&r.verdict, &Verdict::Pass);
            let delta = zeta(&h).dim();
            prop_assert_eq!(int(&r, "dim H_n") as usize, h.dim().pow(n as u32) / delta.pow(n as u32 - 1));
        }

        #[test]
        fn main_theorem_divides(i in 0usize..6) {
            let h = instance(i);
            for r in check_main_theorem(&h).unwrap() {
                let d = int(&r, "d") as usize;
                let hz = int(&r, "dim HZ(V)") as usize;
                prop_assert_eq!(h.dim() % (d * hz), 0);
                prop_assert_eq!(h.dim() % d, 0);
            }
        }

        #[test]
        fn failures_carry_witnesses(oks in proptest::collection::vec(any::<bool>(), 0..8)) {
            let mut r = TheoremReport::new("x", Claim::Main);
            for (i, ok) in oks.iter().enumerate() {
                r = r.require(*ok, "step", i);
            }
            let failed = oks.iter().any(|ok| !ok);
            prop_assert_eq!(r.verdict == Verdict::Fail, failed);
            prop_assert_eq!(r.witnesses.len(), oks.iter().filter(|ok| !**ok).count());
        }
    }
}
