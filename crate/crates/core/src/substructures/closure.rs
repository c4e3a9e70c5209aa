use crate::hopf::{map_factor, HopfAlgebra};
use crate::linalg::{left_kernel, preimage_of_columns, SparseVec, Subspace};

use super::{project_both, projected_basis, HopfIdealSub, HopfSub, SubError};

/// The ordinary center `{z : z·b_i = b_i·z for all i}`.
pub fn center_of_algebra(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    // column j: (b_j b_i − b_i b_j)_i stacked into k^{n·n}
    let columns: Vec<SparseVec> = (0..n)
        .map(|j| {
            let mut terms = Vec::new();
            for i in 0..n {
                let d = h.mult_basis(j, i).sub(h.mult_basis(i, j));
                terms.extend(d.into_entries().into_iter().map(|(k, c)| (i * n + k, c)));
            }
            SparseVec::from_terms(terms)
        })
        .collect();
    left_kernel(&columns, h.order())
}

/// `Ker ε`
pub fn ker_counit(h: &HopfAlgebra) -> Subspace {
    let columns: Vec<SparseVec> = h.counit_vector().iter().map(|c| SparseVec::single(0, c.clone())).collect();
    left_kernel(&columns, h.order())
}

/// Keeps the combinations of `space`'s basis whose images under `f` vanish.
fn restrict(space: &Subspace, f: impl Fn(&SparseVec) -> SparseVec) -> Subspace {
    let images: Vec<SparseVec> = space.basis().iter().map(f).collect();
    let kernel = left_kernel(&images, space.order());
    Subspace::span(space.ambient(), space.order(), kernel.basis().iter().map(|x| space.combine(x)))
}

/// Largest subcoalgebra inside `w`, by iterating
/// `C ← {x ∈ C : (π_C⊗id)Δx = 0 = (id⊗π_C)Δx}`.
pub fn largest_subcoalgebra_in(h: &HopfAlgebra, w: &Subspace) -> Subspace {
    let n = h.dim();
    let mut c = w.clone();
    loop {
        let proj = c.projector();
        let q = proj.quotient_dim();
        let pb = projected_basis(h, &proj);
        let next = restrict(&c, |x| {
            let d = h.comult(x);
            let left = map_factor(&d, n, 2, 0, q, |i| &pb[i]);
            let right = map_factor(&d, n, 2, 1, q, |i| &pb[i]);
            // stack the two conditions into one vector
            let offset = q * n;
            let mut terms = left.into_entries();
            terms.extend(right.into_entries().into_iter().map(|(i, v)| (offset + i, v)));
            SparseVec::from_terms(terms)
        });
        if next.dim() == c.dim() {
            return c;
        }
        c = next;
    }
}

/// Smallest subalgebra containing `1` and `s`.
pub fn generated_subalgebra(h: &HopfAlgebra, s: &Subspace) -> Subspace {
    let mut out = s.clone();
    out.insert(h.one());
    let mut frontier: Vec<SparseVec> = out.basis().to_vec();
    while !frontier.is_empty() {
        let gens = out.basis().to_vec();
        let mut added = Vec::new();
        for x in &frontier {
            for g in &gens {
                for p in [h.mul(x, g), h.mul(g, x)] {
                    if out.insert(p.clone()) {
                        added.push(p);
                    }
                }
            }
        }
        frontier = added;
    }
    out
}

/// Smallest two-sided ideal containing `s`.
pub fn generated_ideal(h: &HopfAlgebra, s: &Subspace) -> Subspace {
    let n = h.dim();
    let mut out = s.clone();
    let mut frontier: Vec<SparseVec> = out.basis().to_vec();
    while !frontier.is_empty() {
        let mut added = Vec::new();
        for x in &frontier {
            for i in 0..n {
                let b = h.basis(i);
                for p in [h.mul(&b, x), h.mul(x, &b)] {
                    if out.insert(p.clone()) {
                        added.push(p);
                    }
                }
            }
        }
        frontier = added;
    }
    out
}

fn check_subalgebra(h: &HopfAlgebra, a: &Subspace) -> Result<(), SubError> {
    if !a.contains(&h.one()) {
        return Err(SubError::NotASubalgebra("does not contain 1".into()));
    }
    for (i, x) in a.basis().iter().enumerate() {
        for (j, y) in a.basis().iter().enumerate() {
            if !a.contains(&h.mul(x, y)) {
                return Err(SubError::NotASubalgebra(format!("product of basis vectors {i} and {j} leaves the subspace")));
            }
        }
    }
    Ok(())
}

fn check_ideal(h: &HopfAlgebra, w: &Subspace) -> Result<(), SubError> {
    for (a, x) in w.basis().iter().enumerate() {
        for i in 0..h.dim() {
            let b = h.basis(i);
            if !w.contains(&h.mul(&b, x)) || !w.contains(&h.mul(x, &b)) {
                return Err(SubError::NotAnIdeal(format!("b_{i} times basis vector {a} leaves the subspace")));
            }
        }
    }
    Ok(())
}

/// Largest Hopf subalgebra inside the unital subalgebra `a`: the largest
/// S-stable subcoalgebra of `a`, then the subalgebra it generates.
pub fn largest_hopf_subalgebra_in(h: &HopfAlgebra, a: &Subspace) -> Result<HopfSub, SubError> {
    check_subalgebra(h, a)?;
    let s_columns: Vec<SparseVec> = (0..h.dim()).map(|i| h.antipode_basis(i).clone()).collect();
    let mut c = a.clone();
    loop {
        let sub = largest_subcoalgebra_in(h, &c);
        let stable = sub.intersect(&preimage_of_columns(&s_columns, &sub)).expect("same ambient");
        if stable.dim() == c.dim() {
            break;
        }
        c = stable;
    }
    HopfSub::certify(h, generated_subalgebra(h, &c))
}

/// ζ(H): the largest Hopf subalgebra inside the center.
pub fn zeta(h: &HopfAlgebra) -> HopfSub {
    largest_hopf_subalgebra_in(h, &center_of_algebra(h)).expect("the center is a unital subalgebra")
}

/// Largest Hopf ideal inside the two-sided ideal `w`: iterate
/// `I ← {x ∈ I : (π_I⊗π_I)Δx = 0, S(x) ∈ I}` from `w ∩ Ker ε`.
///
/// The fixed point is the largest S-stable coideal in `w ∩ Ker ε`; the ideal
/// it generates is again one, so it already is an ideal. The certificate
/// re-checks this.
pub fn largest_hopf_ideal_in(h: &HopfAlgebra, w: &Subspace) -> Result<HopfIdealSub, SubError> {
    check_ideal(h, w)?;
    let mut i = w.intersect(&ker_counit(h)).expect("same ambient");
    loop {
        let proj = i.projector();
        let q = proj.quotient_dim();
        let pb = projected_basis(h, &proj);
        let next = restrict(&i, |x| {
            let mut terms = project_both(h, &h.comult(x), &pb, q).into_entries();
            let s = proj.project(&h.antipode(x));
            terms.extend(s.into_entries().into_iter().map(|(k, v)| (q * q + k, v)));
            SparseVec::from_terms(terms)
        });
        if next.dim() == i.dim() {
            break;
        }
        i = next;
    }
    HopfIdealSub::certify(h, generated_ideal(h, &i), true)
}
