//! Representation theory in characteristic 0: radical, Wedderburn blocks,
//! explicit irreducible representations, and the Hopf center and Hopf kernel
//! of a representation.

mod algebra;
mod wedderburn;

pub use wedderburn::{irreps, radical, wedderburn, WedderburnData};

use std::ops::Deref;

use thiserror::Error;

use crate::hopf::{convolution, Element, HopfAlgebra};
use crate::linalg::{left_kernel, preimage_of_columns, Matrix, SparseVec, Subspace};
use crate::scalars::{Cyclo, Poly};
use crate::substructures::{largest_hopf_ideal_in, largest_hopf_subalgebra_in, HopfIdealSub, HopfSub, SubError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepnError {
    #[error("field does not split H: witness polynomial {polynomial} ({detail}){}", suggestion(*.suggested_order))]
    NonSplitField {
        polynomial: String,
        detail: String,
        suggested_order: Option<u32>,
    },
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error(transparent)]
    Sub(#[from] SubError),
}

fn suggestion(order: Option<u32>) -> String {
    match order {
        Some(n) => format!("; try cyclotomic order {n}"),
        None => "; try a larger cyclotomic order".into(),
    }
}

impl RepnError {
    pub(crate) fn non_split(p: Poly, detail: String) -> RepnError {
        RepnError::NonSplitField {
            polynomial: p.to_string(),
            detail,
            suggested_order: wedderburn::suggest_order(&p),
        }
    }
}

/// `ρ: H → End(V)` given by the matrices `ρ(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    order: u32,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Checks that `ρ(1) = Id` and `ρ(b_i b_j) = ρ(b_i)ρ(b_j)` for all pairs.
    pub fn new(h: &HopfAlgebra, matrices: Vec<Matrix>) -> Result<Representation, RepnError> {
        let dim = matrices.first().map(|m| m.rows()).unwrap_or(0);
        if matrices.len() != h.dim() {
            return Err(RepnError::NotARepresentation(format!("{} matrices for dimension {}", matrices.len(), h.dim())));
        }
        if let Some(i) = matrices.iter().position(|m| m.rows() != dim || m.cols() != dim || m.order() != h.order()) {
            return Err(RepnError::NotARepresentation(format!("matrix {i} has the wrong shape or field")));
        }
        let rep = Representation::new_unchecked(dim, h.order(), matrices);
        rep.check_algebra_map(h)?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(dim: usize, order: u32, matrices: Vec<Matrix>) -> Representation {
        Representation { dim, order, matrices }
    }

    pub fn check_algebra_map(&self, h: &HopfAlgebra) -> Result<(), RepnError> {
        if self.act(&h.one()) != Matrix::identity(self.dim, self.order) {
            return Err(RepnError::NotARepresentation("ρ(1) ≠ Id".into()));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = self.act(h.mult_basis(i, j));
                let rhs = self.matrices[i].checked_mul(&self.matrices[j]).expect("square");
                if lhs != rhs {
                    return Err(RepnError::NotARepresentation(format!("ρ(b_{i} b_{j}) ≠ ρ(b_{i})ρ(b_{j})")));
                }
            }
        }
        Ok(())
    }

    /// The trivial representation `ε`.
    pub fn counit(h: &HopfAlgebra) -> Representation {
        let matrices = h.counit_vector().iter().map(|c| Matrix::scalar(1, c)).collect();
        Representation::new_unchecked(1, h.order(), matrices)
    }

    /// Left multiplication on `H`.
    pub fn regular(h: &HopfAlgebra) -> Representation {
        let n = h.dim();
        let matrices = (0..n)
            .map(|i| {
                let columns: Vec<SparseVec> = (0..n).map(|j| h.mult_basis(i, j).clone()).collect();
                Matrix::from_columns(n, h.order(), &columns)
            })
            .collect();
        Representation::new_unchecked(n, h.order(), matrices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `ρ(x)`
    pub fn act(&self, x: &Element) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim, self.order);
        for (i, c) in x.iter() {
            out.add_scaled(c, &self.matrices[*i]);
        }
        out
    }

    /// `vec ρ(b_i)` for every `i`.
    pub fn image_columns(&self) -> Vec<SparseVec> {
        self.matrices.iter().map(Matrix::vectorize).collect()
    }

    /// `dim ρ(H)`
    pub fn image_dim(&self) -> usize {
        Subspace::span(self.dim * self.dim, self.order, self.image_columns()).dim()
    }

    /// `Ker ρ`
    pub fn kernel(&self) -> Subspace {
        left_kernel(&self.image_columns(), self.order)
    }

    /// `V⊗W` through `Δ`.
    pub fn tensor(&self, h: &HopfAlgebra, other: &Representation) -> Representation {
        let n = h.dim();
        let dim = self.dim * other.dim;
        let matrices = (0..n)
            .map(|i| {
                let mut out = Matrix::zeros(dim, dim, self.order);
                for (idx, c) in h.comult_basis(i).iter() {
                    let k = self.matrices[idx / n].kron(&other.matrices[idx % n]);
                    out.add_scaled(c, &k);
                }
                out
            })
            .collect();
        Representation::new_unchecked(dim, self.order, matrices)
    }

    /// `V^{⊗n}`, with `V^{⊗0} = ε`.
    pub fn tensor_power(&self, h: &HopfAlgebra, n: usize) -> Representation {
        (0..n).fold(Representation::counit(h), |acc, _| acc.tensor(h, self))
    }

    /// `χ(b_i) = tr ρ(b_i)` as an element of `H*`.
    pub fn character(&self) -> SparseVec {
        let values: Vec<Cyclo> = self.matrices.iter().map(Matrix::trace).collect();
        SparseVec::from_dense(&values)
    }
}

/// An irreducible representation: a [`Representation`] whose image is all of
/// `End(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    rep: Representation,
    character: SparseVec,
}

impl Irrep {
    /// Checks multiplicativity, `ρ(1) = Id` and `dim ρ(H) = d²`.
    pub fn new(h: &HopfAlgebra, rep: Representation) -> Result<Irrep, RepnError> {
        rep.check_algebra_map(h)?;
        let d = rep.dim();
        let image = rep.image_dim();
        if image != d * d {
            return Err(RepnError::NotARepresentation(format!("image has dimension {image}, not {}", d * d)));
        }
        let character = rep.character();
        Ok(Irrep { rep, character })
    }

    pub fn degree(&self) -> usize {
        self.rep.dim()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn character(&self) -> &SparseVec {
        &self.character
    }
}

impl Deref for Irrep {
    type Target = Representation;

    fn deref(&self) -> &Representation {
        &self.rep
    }
}

/// `ρ⁻¹(k·Id)`, checked to be a unital subalgebra.
pub fn scalar_preimage(h: &HopfAlgebra, rep: &Representation) -> Result<Subspace, RepnError> {
    let id = Matrix::identity(rep.dim(), rep.order()).vectorize();
    let line = Subspace::span(rep.dim() * rep.dim(), rep.order(), [id]);
    let pre = preimage_of_columns(&rep.image_columns(), &line);
    if !pre.contains(&h.one()) {
        return Err(SubError::NotASubalgebra("scalar preimage misses 1".into()).into());
    }
    for x in pre.basis() {
        for y in pre.basis() {
            if !pre.contains(&h.mul(x, y)) {
                return Err(SubError::NotASubalgebra("scalar preimage is not closed".into()).into());
            }
        }
    }
    Ok(pre)
}

/// `𝓗𝓩(V)`: the largest Hopf subalgebra acting by scalars on `V`.
pub fn hopf_center_of_rep(h: &HopfAlgebra, rep: &Representation) -> Result<HopfSub, RepnError> {
    Ok(largest_hopf_subalgebra_in(h, &scalar_preimage(h, rep)?)?)
}

/// The largest Hopf ideal inside `Ker ρ`.
pub fn hopf_kernel_of_rep(h: &HopfAlgebra, rep: &Representation) -> Result<HopfIdealSub, RepnError> {
    Ok(largest_hopf_ideal_in(h, &rep.kernel())?)
}

pub fn is_inner_faithful(h: &HopfAlgebra, rep: &Representation) -> Result<bool, RepnError> {
    Ok(hopf_kernel_of_rep(h, rep)?.space().is_zero())
}

pub fn character(rep: &Representation) -> SparseVec {
    rep.character()
}

/// Whether `χ` lies in the center of `H*`: `δ_j * χ = χ * δ_j` for all `j`.
pub fn is_central_character(h: &HopfAlgebra, chi: &SparseVec) -> bool {
    (0..h.dim()).all(|j| {
        let d = SparseVec::unit(j, h.order());
        convolution(h, &d, chi) == convolution(h, chi, &d)
    })
}

#[cfg(test)]
mod tests;
