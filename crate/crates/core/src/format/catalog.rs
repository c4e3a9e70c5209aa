use crate::hopf::{dual, kac_paljutkin, named_group, taft, tensor_product, HopfAlgebra, NamedGroup};
use crate::linalg::SparseVec;
use crate::scalars::{Cyclo, Rational};

/// Basis indices of the rotation subgroup in `kD4`.
pub const D4_ROTATIONS: [usize; 4] = [0, 1, 2, 3];

/// One built-in instance and the file stem it ships under.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub stem: &'static str,
    pub hopf: HopfAlgebra,
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kℤ/2`.
fn z2_r_matrix() -> SparseVec {
    let half = |s: i64| Cyclo::from_rational(1, Rational::new(s, 2));
    SparseVec::from_terms(vec![(0, half(1)), (1, half(1)), (2, half(1)), (3, half(-1))])
}

/// Group algebras carry `R = 1⊗1`; Q8 is taken over ℚ(i) so that its
/// two-dimensional representation splits.
fn group(g: NamedGroup, order: u32) -> HopfAlgebra {
    let h = named_group(g, order);
    let r = h.one_tensor(2);
    h.with_r_matrix(Some(r))
}

/// The built-in instances, in file order.
pub fn catalog() -> Vec<CatalogEntry> {
    let z2 = named_group(NamedGroup::Cyclic(2), 1).with_r_matrix(Some(z2_r_matrix()));
    let s3 = group(NamedGroup::S3, 1);
    let d4 = group(NamedGroup::D4, 1);
    let q8 = group(NamedGroup::Q8, 4);
    let s4 = group(NamedGroup::S4, 1);
    let s3xs3 = tensor_product(&s3, &s3).expect("same field");
    let mut out = vec![
        CatalogEntry { stem: "z2", hopf: z2.clone() },
        CatalogEntry { stem: "s3", hopf: s3.clone() },
        CatalogEntry { stem: "d4", hopf: d4.clone() },
        CatalogEntry { stem: "q8", hopf: q8.clone() },
        CatalogEntry { stem: "s4", hopf: s4.clone() },
    ];
    for (stem, h) in [("z2_dual", &z2), ("s3_dual", &s3), ("d4_dual", &d4), ("q8_dual", &q8), ("s4_dual", &s4)] {
        out.push(CatalogEntry { stem, hopf: dual(h) });
    }
    out.push(CatalogEntry { stem: "taft2", hopf: taft(2) });
    out.push(CatalogEntry { stem: "taft3", hopf: taft(3) });
    out.push(CatalogEntry { stem: "kp8", hopf: kac_paljutkin() });
    out.push(CatalogEntry { stem: "s3xs3", hopf: s3xs3 });
    out
}
