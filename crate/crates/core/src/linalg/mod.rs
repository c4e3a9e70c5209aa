//! Exact linear algebra over ℚ(ζ_N).
//!
//! Vectors are sparse; subspaces are stored in canonical reduced echelon form
//! so that equality of subspaces is equality of bases. Tensor products use the
//! fixed ordering `e_i ⊗ e_j ↦ i·dim + j` everywhere in the crate.

mod matrix;
mod sparse;
mod subspace;

pub use matrix::{kernel, preimage, preimage_of_columns, rref, Matrix};
pub use sparse::{linear_combination, SparseVec};
pub use subspace::{left_kernel, solve_combination, Projector, Subspace, TensorSide, TrackedEchelon};

use thiserror::Error;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("shape mismatch: {left:?} against {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("rows of unequal length")]
    Ragged,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `subspace_tensor`: `u ⊗ k^full_dim` or `k^full_dim ⊗ u`.
pub fn subspace_tensor(u: &Subspace, full_dim: usize, side: TensorSide) -> Subspace {
    u.tensor(full_dim, side)
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::scalars::Cyclo;
    use proptest::prelude::*;

    fn vector(dim: usize) -> impl Strategy<Value = SparseVec> {
        proptest::collection::vec(-2i64..=2, dim)
            .prop_map(|xs| SparseVec::from_dense(&xs.into_iter().map(|x| Cyclo::from_int(1, x)).collect::<Vec<_>>()))
    }

    fn subspace(dim: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(vector(dim), 0..=dim).prop_map(move |rows| Subspace::span(dim, 1, rows))
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, rows * cols).prop_map(move |xs| {
            let rows_v = xs
                .chunks(cols.max(1))
                .take(rows)
                .map(|r| r.iter().map(|&x| Cyclo::from_int(1, x)).collect())
                .collect();
            Matrix::from_rows(1, rows_v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn grassmann(a in subspace(6), b in subspace(6)) {
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(s.contains_subspace(&a).unwrap());
            prop_assert!(a.contains_subspace(&i).unwrap() && b.contains_subspace(&i).unwrap());
        }

        #[test]
        fn canonical_bases(rows in proptest::collection::vec(vector(5), 0..5), seed in 0usize..100) {
            let a = Subspace::span(5, 1, rows.clone());
            let mut shuffled = rows.clone();
            if !shuffled.is_empty() {
                let k = seed % shuffled.len();
                shuffled.rotate_left(k);
                let extra = shuffled[0].add(&shuffled[shuffled.len() - 1]);
                shuffled.push(extra);
            }
            let b = Subspace::span(5, 1, shuffled);
            prop_assert_eq!(a.equals(&b).unwrap(), true);
            prop_assert_eq!(a.basis(), b.basis());
        }

        #[test]
        fn preimage_contains_kernel(f in matrix(3, 5), w in subspace(3)) {
            let p = preimage(&f, &w).unwrap();
            prop_assert!(p.contains_subspace(&kernel(&f)).unwrap());
            for v in p.basis() {
                prop_assert!(w.contains(&f.apply(v)));
            }
        }

        #[test]
        fn kernel_rank_nullity(f in matrix(4, 5)) {
            let (_, rank, _) = rref(&f);
            let k = kernel(&f);
            prop_assert_eq!(k.dim(), 5 - rank);
            for v in k.basis() {
                prop_assert!(f.apply(v).is_zero());
            }
        }

        #[test]
        fn kron_associates(a in matrix(2, 2), b in matrix(1, 2), c in matrix(2, 1)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn sparse_kron_associates(a in vector(2), b in vector(3), c in vector(2)) {
            prop_assert_eq!(a.kron(&b, 3).kron(&c, 2), a.kron(&b.kron(&c, 2), 6));
        }
    }
}
