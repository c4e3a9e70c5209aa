use crate::hopf::HopfAlgebra;
use crate::linalg::{left_kernel, Projector, SparseVec, Subspace};
use crate::polyfactor::{factor_over_cyclotomic, minpoly_of_sequence};
use crate::scalars::{Cyclo, Poly};

/// An associative unital algebra by structure constants, used for `H/rad H`.
#[derive(Clone, Debug)]
pub(crate) struct Algebra {
    pub dim: usize,
    pub order: u32,
    mult: Vec<SparseVec>,
    pub unit: SparseVec,
}

impl Algebra {
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, c) in self.mul_basis(*i, *j).iter() {
                    terms.push((*k, &xy * c));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.order)
    }

    /// `H/I` on the complement basis of the ideal `I`.
    pub fn quotient(h: &HopfAlgebra, ideal: &Subspace) -> (Algebra, Projector, Vec<usize>) {
        let proj = ideal.projector();
        let comp = ideal.complement_indices();
        let mut mult = Vec::with_capacity(comp.len() * comp.len());
        for &a in &comp {
            for &b in &comp {
                mult.push(proj.project(h.mult_basis(a, b)));
            }
        }
        let alg = Algebra {
            dim: comp.len(),
            order: h.order(),
            mult,
            unit: proj.project(&h.one()),
        };
        (alg, proj, comp)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let columns: Vec<SparseVec> = (0..n)
            .map(|j| {
                let mut terms = Vec::new();
                for i in 0..n {
                    let d = self.mul_basis(j, i).sub(self.mul_basis(i, j));
                    terms.extend(d.into_entries().into_iter().map(|(k, c)| (i * n + k, c)));
                }
                SparseVec::from_terms(terms)
            })
            .collect();
        left_kernel(&columns, self.order)
    }

    /// `A·a = span{b_j·a}`
    pub fn left_ideal(&self, a: &SparseVec) -> Subspace {
        Subspace::span(self.dim, self.order, (0..self.dim).map(|j| self.mul(&self.basis(j), a)))
    }

    /// `f·A·f`
    pub fn corner(&self, f: &SparseVec) -> Subspace {
        Subspace::span(self.dim, self.order, (0..self.dim).map(|j| self.mul(&self.mul(f, &self.basis(j)), f)))
    }

    /// Minimal polynomial of `x` in an algebra with unit `e` (with `x = x·e`).
    pub fn minpoly_in(&self, x: &SparseVec, e: &SparseVec) -> Poly {
        minpoly_of_sequence(self.order, e.clone(), |v| self.mul(x, v))
    }

    /// `p(x)` with `x⁰ = e`.
    pub fn eval(&self, p: &Poly, x: &SparseVec, e: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(x, &acc).axpy(c, e);
        }
        acc
    }
}

/// The outcome of trying to split the unit `e` of a commutative piece using `x`.
pub(crate) enum Split {
    /// orthogonal idempotents summing to `e`, one per distinct irreducible factor
    Pieces(Vec<SparseVec>),
    /// the minimal polynomial is a power of one linear factor
    Scalar,
    /// an irreducible factor of degree above one
    NonSplit(Poly),
}

/// CRT idempotents of `e` attached to the primary decomposition of the
/// minimal polynomial of `x`.
pub(crate) fn crt_split(alg: &Algebra, x: &SparseVec, e: &SparseVec) -> Split {
    let m = alg.minpoly_in(x, e);
    let fac = factor_over_cyclotomic(&m).expect("minimal polynomials are nonzero");
    if let Some((p, _)) = fac.factors.iter().find(|(p, _)| p.degree() > Some(1)) {
        if fac.factors.len() == 1 {
            return Split::NonSplit(p.clone());
        }
    }
    if fac.factors.len() == 1 {
        return Split::Scalar;
    }
    let primary: Vec<Poly> = fac.factors.iter().map(|(p, k)| p.pow(*k)).collect();
    let pieces = primary
        .iter()
        .map(|q| {
            let (cofactor, r) = m.divrem(q).expect("nonzero");
            debug_assert!(r.is_zero());
            // u·cofactor ≡ 1 mod q
            let (_, u, _) = cofactor.ext_gcd(q);
            let poly = u.mul(&cofactor).rem(&m).expect("nonzero");
            alg.eval(&poly, x, e)
        })
        .collect();
    Split::Pieces(pieces)
}

/// `{a : tr(L_{a·b}) = 0 for all b}`; the radical in characteristic 0.
pub fn trace_form_kernel(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    let order = h.order();
    let traces: Vec<Cyclo> = (0..n)
        .map(|k| {
            let mut acc = Cyclo::zero(order);
            for i in 0..n {
                if let Some(c) = h.mult_basis(k, i).get(i) {
                    acc += c;
                }
            }
            acc
        })
        .collect();
    let rows: Vec<SparseVec> = (0..n)
        .map(|i| {
            let row: Vec<Cyclo> = (0..n).map(|j| h.mult_basis(i, j).dot(&traces, order)).collect();
            SparseVec::from_dense(&row)
        })
        .collect();
    left_kernel(&rows, order)
}
