use crate::hopf::{verify_axioms, HopfAlgebra, HopfParts};
use crate::linalg::{Projector, SparseVec, Subspace};

use super::{
    ker_counit, normality_witness, project_both, projected_basis, HopfIdealSub, HopfSub, SubError,
};

/// The canonical surjection `H → H/I`. The quotient basis is the image of the
/// basis vectors at the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    projector: Projector,
    complement: Vec<usize>,
}

impl QuotientMap {
    pub fn new(ideal: &Subspace) -> QuotientMap {
        QuotientMap {
            projector: ideal.projector(),
            complement: ideal.complement_indices(),
        }
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.projector.project(x)
    }

    /// Basis index of `H` lifting quotient basis element `k`.
    pub fn lift_index(&self, k: usize) -> usize {
        self.complement[k]
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn kernel(&self) -> &Subspace {
        self.projector.kernel()
    }

    pub fn quotient_dim(&self) -> usize {
        self.projector.quotient_dim()
    }
}

pub(crate) fn quotient_structure(h: &HopfAlgebra, ideal: &Subspace, name: String) -> Result<(HopfAlgebra, QuotientMap), SubError> {
    let q = QuotientMap::new(ideal);
    let m = q.quotient_dim();
    let pb = projected_basis(h, &q.projector);
    let comp = q.complement();
    let mut mult = Vec::with_capacity(m * m);
    for &a in comp {
        for &b in comp {
            mult.push(q.apply(h.mult_basis(a, b)));
        }
    }
    let parts = HopfParts {
        name,
        dim: m,
        order: h.order(),
        mult,
        unit: q.apply(&h.one()),
        comult: comp.iter().map(|&a| project_both(h, h.comult_basis(a), &pb, m)).collect(),
        counit: comp.iter().map(|&a| h.counit_basis(a).clone()).collect(),
        antipode: comp.iter().map(|&a| q.apply(h.antipode_basis(a))).collect(),
        r_matrix: h.r_matrix().map(|r| project_both(h, r, &pb, m)),
        grouplikes: None,
    };
    Ok((HopfAlgebra::from_parts(parts)?, q))
}

/// `H/I` with structure constants induced on the complement basis; the Hopf
/// axioms are re-checked on the result.
pub fn quotient_by_hopf_ideal(h: &HopfAlgebra, ideal: &HopfIdealSub) -> Result<(HopfAlgebra, QuotientMap), SubError> {
    let name = format!("{}/I{}", h.name(), ideal.dim());
    let (quot, map) = quotient_structure(h, ideal.space(), name)?;
    let report = verify_axioms(&quot);
    if let Some(f) = report.first_failure() {
        return Err(SubError::QuotientAxioms(format!("{} (witness {:?})", f.axiom, f.witness)));
    }
    if quot.dim() != h.dim() - ideal.dim() {
        return Err(SubError::DimensionMismatch {
            expected: (h.dim() - ideal.dim()).to_string(),
            found: quot.dim(),
        });
    }
    Ok((quot, map))
}

/// `H/HK⁺` for a normal Hopf subalgebra `K`.
pub fn augmentation_quotient(h: &HopfAlgebra, k: &HopfSub) -> Result<(HopfAlgebra, QuotientMap), SubError> {
    if let Some((i, a)) = normality_witness(h, k) {
        return Err(SubError::NotNormal(format!("adjoint action of b_{i} on basis vector {a} of K")));
    }
    let (ratio, divides) = super::nz_divisibility(h, k);
    if !divides {
        return Err(SubError::DimensionMismatch {
            expected: ratio.to_string(),
            found: 0,
        });
    }
    let k_plus = k.space().intersect(&ker_counit(h)).expect("same ambient");
    let mut hk = Subspace::zero(h.dim(), h.order());
    for i in 0..h.dim() {
        let b = h.basis(i);
        for x in k_plus.basis() {
            hk.insert(h.mul(&b, x));
        }
    }
    let ideal = HopfIdealSub::certify(h, hk, true)?;
    let (quot, map) = quotient_by_hopf_ideal(h, &ideal)?;
    let expected = h.dim() / k.dim();
    if quot.dim() != expected {
        return Err(SubError::DimensionMismatch {
            expected: expected.to_string(),
            found: quot.dim(),
        });
    }
    Ok((quot.with_name(format!("{}/{}K+", h.name(), h.name())), map))
}

/// `K` as a Hopf algebra in its own right, on the echelon basis of `K`.
pub fn sub_hopf_algebra(h: &HopfAlgebra, k: &HopfSub) -> Result<HopfAlgebra, SubError> {
    let n = h.dim();
    let space = k.space();
    let rows = space.basis();
    let pivots = space.pivots();
    let coords = |x: &SparseVec| space.coordinates_sparse(x).expect("certified subalgebra");
    // an element of K⊗K is determined by its entries at pivot pairs
    let pair_coords = |t: &SparseVec| {
        let mut terms = Vec::new();
        for (a, &pa) in pivots.iter().enumerate() {
            for (b, &pb) in pivots.iter().enumerate() {
                if let Some(c) = t.get(pa * n + pb) {
                    terms.push((a * rows.len() + b, c.clone()));
                }
            }
        }
        SparseVec::from_terms(terms)
    };
    let mut mult = Vec::with_capacity(rows.len() * rows.len());
    for x in rows {
        for y in rows {
            mult.push(coords(&h.mul(x, y)));
        }
    }
    let parts = HopfParts {
        name: format!("{}_sub{}", h.name(), rows.len()),
        dim: rows.len(),
        order: h.order(),
        mult,
        unit: coords(&h.one()),
        comult: rows.iter().map(|x| pair_coords(&h.comult(x))).collect(),
        counit: rows.iter().map(|x| h.counit(x)).collect(),
        antipode: rows.iter().map(|x| coords(&h.antipode(x))).collect(),
        r_matrix: None,
        grouplikes: None,
    };
    Ok(HopfAlgebra::from_parts(parts)?)
}
