//! Subspaces of a Hopf algebra with verified structure: Hopf subalgebras,
//! Hopf ideals, the largest-substructure fixed points, normality and quotients.

mod closure;
mod quotient;

pub use closure::{
    center_of_algebra, generated_ideal, generated_subalgebra, ker_counit, largest_hopf_ideal_in,
    largest_hopf_subalgebra_in, largest_subcoalgebra_in, zeta,
};
pub use quotient::{augmentation_quotient, quotient_by_hopf_ideal, sub_hopf_algebra, QuotientMap};

use serde::Serialize;
use thiserror::Error;

use crate::hopf::{map_factor, HopfAlgebra, HopfError};
use crate::linalg::{Projector, SparseVec, Subspace};
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubError {
    #[error("not a unital subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("the Hopf subalgebra is not normal: {0}")]
    NotNormal(String),
    #[error("certificate failed: {condition} (basis vector {witness})")]
    CertificateFailed { condition: &'static str, witness: usize },
    #[error("expected dimension {expected}, constructed {found}")]
    DimensionMismatch { expected: String, found: usize },
    #[error("quotient fails the Hopf axioms: {0}")]
    QuotientAxioms(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A Hopf subalgebra with its verified certificate. Values of this type are
/// only produced by [`HopfSub::certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfSub {
    space: Subspace,
}

/// A Hopf ideal with its verified certificate, produced by
/// [`HopfIdealSub::certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfIdealSub {
    space: Subspace,
    coideal_checked: bool,
}

/// Which conditions were verified for a Hopf ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealCertificate {
    /// ideal, coideal, counit and antipode conditions
    Full,
    /// ideal, counit and antipode conditions; the coideal check was skipped
    Partial,
}

impl HopfSub {
    /// Checks: contains 1, closed under products, `Δ(K) ⊆ K⊗K`, `S(K) ⊆ K`.
    pub fn certify(h: &HopfAlgebra, space: Subspace) -> Result<HopfSub, SubError> {
        let fail = |condition, witness| Err(SubError::CertificateFailed { condition, witness });
        if !space.contains(&h.one()) {
            return fail("contains 1", 0);
        }
        let rows = space.basis();
        for (a, x) in rows.iter().enumerate() {
            for y in rows {
                if !space.contains(&h.mul(x, y)) {
                    return fail("closed under multiplication", a);
                }
            }
        }
        let proj = space.projector();
        let pb = projected_basis(h, &proj);
        for (a, x) in rows.iter().enumerate() {
            if !space.contains(&h.antipode(x)) {
                return fail("S(K) = K", a);
            }
            if !in_both_tensor_sides(h, &h.comult(x), &pb, proj.quotient_dim()) {
                return fail("Δ(K) ⊆ K⊗K", a);
            }
        }
        Ok(HopfSub { space })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn trivial(h: &HopfAlgebra) -> HopfSub {
        HopfSub::certify(h, Subspace::span(h.dim(), h.order(), [h.one()])).expect("k·1 is a Hopf subalgebra")
    }

    pub fn whole(h: &HopfAlgebra) -> HopfSub {
        HopfSub {
            space: Subspace::full(h.dim(), h.order()),
        }
    }

    /// The span of a set of grouplike basis elements closed under products.
    pub fn from_basis_indices(h: &HopfAlgebra, idx: &[usize]) -> Result<HopfSub, SubError> {
        HopfSub::certify(h, Subspace::span(h.dim(), h.order(), idx.iter().map(|&i| h.basis(i))))
    }
}

impl HopfIdealSub {
    /// Checks the ideal, counit and antipode conditions, and the coideal
    /// condition `(π⊗π)Δ(I) = 0` unless `check_coideal` is false.
    pub fn certify(h: &HopfAlgebra, space: Subspace, check_coideal: bool) -> Result<HopfIdealSub, SubError> {
        let fail = |condition, witness| Err(SubError::CertificateFailed { condition, witness });
        let n = h.dim();
        for (a, x) in space.basis().iter().enumerate() {
            if !h.counit(x).is_zero() {
                return fail("ε(I) = 0", a);
            }
            if !space.contains(&h.antipode(x)) {
                return fail("S(I) ⊆ I", a);
            }
            for i in 0..n {
                let b = h.basis(i);
                if !space.contains(&h.mul(&b, x)) || !space.contains(&h.mul(x, &b)) {
                    return fail("two-sided ideal", a);
                }
            }
        }
        if check_coideal {
            let proj = space.projector();
            let pb = projected_basis(h, &proj);
            for (a, x) in space.basis().iter().enumerate() {
                if !project_both(h, &h.comult(x), &pb, proj.quotient_dim()).is_zero() {
                    return fail("Δ(I) ⊆ I⊗H + H⊗I", a);
                }
            }
        }
        Ok(HopfIdealSub {
            space,
            coideal_checked: check_coideal,
        })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn certificate(&self) -> IdealCertificate {
        if self.coideal_checked {
            IdealCertificate::Full
        } else {
            IdealCertificate::Partial
        }
    }
}

/// π(b_i) for every basis element, in quotient coordinates.
pub(crate) fn projected_basis(h: &HopfAlgebra, proj: &Projector) -> Vec<SparseVec> {
    (0..h.dim()).map(|i| proj.project(&h.basis(i))).collect()
}

/// Whether `t ∈ H⊗H` lies in `K⊗H ∩ H⊗K = K⊗K`, i.e. `(π⊗id)t = 0 = (id⊗π)t`.
pub(crate) fn in_both_tensor_sides(h: &HopfAlgebra, t: &SparseVec, pb: &[SparseVec], qdim: usize) -> bool {
    let n = h.dim();
    map_factor(t, n, 2, 0, qdim, |i| &pb[i]).is_zero() && map_factor(t, n, 2, 1, qdim, |i| &pb[i]).is_zero()
}

/// `(π⊗π)t`
pub(crate) fn project_both(h: &HopfAlgebra, t: &SparseVec, pb: &[SparseVec], qdim: usize) -> SparseVec {
    let n = h.dim();
    let mut terms = Vec::new();
    for (idx, c) in t.iter() {
        let (a, b) = (idx / n, idx % n);
        for (u, x) in pb[a].iter() {
            for (v, y) in pb[b].iter() {
                terms.push((u * qdim + v, &(c * x) * y));
            }
        }
    }
    SparseVec::from_terms(terms)
}

/// True when `h₍₁₎ k S(h₍₂₎)` and `S(h₍₁₎) k h₍₂₎` lie in `K` for all basis `h`
/// and basis `k` of `K`.
pub fn is_normal_hopf_subalgebra(h: &HopfAlgebra, k: &HopfSub) -> bool {
    normality_witness(h, k).is_none()
}

pub(crate) fn normality_witness(h: &HopfAlgebra, k: &HopfSub) -> Option<(usize, usize)> {
    let n = h.dim();
    let space = k.space();
    for i in 0..n {
        let d = h.comult_basis(i);
        for (a, x) in space.basis().iter().enumerate() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (idx, c) in d.iter() {
                let (p, q) = (idx / n, idx % n);
                let l = h.mul(&h.mul(&h.basis(p), x), h.antipode_basis(q));
                let r = h.mul(&h.mul(h.antipode_basis(p), x), &h.basis(q));
                left.extend(l.into_entries().into_iter().map(|(j, v)| (j, c * &v)));
                right.extend(r.into_entries().into_iter().map(|(j, v)| (j, c * &v)));
            }
            if !space.contains(&SparseVec::from_terms(left)) || !space.contains(&SparseVec::from_terms(right)) {
                return Some((i, a));
            }
        }
    }
    None
}

/// `dim H / dim K` and whether it is an integer.
pub fn nz_divisibility(h: &HopfAlgebra, k: &HopfSub) -> (Rational, bool) {
    let r = Rational::new(h.dim() as i64, k.dim() as i64);
    let int = r.is_integer();
    (r, int)
}
