use crate::linalg::SparseVec;
use crate::scalars::{Cyclo, ScalarError};

use super::{Element, HopfAlgebra, HopfError, HopfParts};

/// The dual Hopf algebra on the dual basis `δ_i`: its product is the transpose
/// of Δ, its coproduct the transpose of the product, and so on.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let order = h.order();
    let mut mult_terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (ij, c) in h.comult_basis(k).iter() {
            mult_terms[*ij].push((k, c.clone()));
        }
    }
    let mut comult_terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mult_basis(i, j).iter() {
                comult_terms[*k].push((i * n + j, c.clone()));
            }
        }
    }
    let mut antipode_terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); n];
    for j in 0..n {
        for (i, c) in h.antipode_basis(j).iter() {
            antipode_terms[*i].push((j, c.clone()));
        }
    }
    let unit = h.one();
    HopfAlgebra::from_parts(HopfParts {
        name: format!("dual({})", h.name()),
        dim: n,
        order,
        mult: mult_terms.into_iter().map(SparseVec::from_terms).collect(),
        unit: SparseVec::from_dense(h.counit_vector()),
        comult: comult_terms.into_iter().map(SparseVec::from_terms).collect(),
        counit: (0..n).map(|i| unit.coeff(i, order)).collect(),
        antipode: antipode_terms.into_iter().map(SparseVec::from_terms).collect(),
        r_matrix: None,
        grouplikes: None,
    })
    .expect("transposed shapes are valid")
}

impl HopfAlgebra {
    /// The same structure constants read in ℚ(ζ_order).
    pub fn embed(&self, order: u32) -> Result<HopfAlgebra, HopfError> {
        if order == self.order() {
            return Ok(self.clone());
        }
        let mut p = self.clone().into_parts();
        p.order = order;
        HopfAlgebra::from_parts(p)
    }
}

fn common_order(a: u32, b: u32) -> Result<u32, HopfError> {
    if b % a == 0 {
        Ok(b)
    } else if a % b == 0 {
        Ok(a)
    } else {
        Err(ScalarError::IncompatibleOrders(a, b).into())
    }
}

/// `H ⊗ K` on the basis `b_i ⊗ c_j ↦ i·dim K + j`.
pub fn tensor_product(h: &HopfAlgebra, k: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let order = common_order(h.order(), k.order())?;
    let h = h.embed(order)?;
    let k = k.embed(order)?;
    let (n, m) = (h.dim(), k.dim());
    let d = n * m;
    let mut mult = Vec::with_capacity(d * d);
    for x in 0..d {
        for y in 0..d {
            let (i, j) = (x / m, x % m);
            let (a, b) = (y / m, y % m);
            mult.push(h.mult_basis(i, a).kron(k.mult_basis(j, b), m));
        }
    }
    let mut comult = Vec::with_capacity(d);
    for x in 0..d {
        let (i, j) = (x / m, x % m);
        let mut terms = Vec::new();
        for (p, c) in h.comult_basis(i).iter() {
            let (a, b) = (p / n, p % n);
            for (q, e) in k.comult_basis(j).iter() {
                let (u, v) = (q / m, q % m);
                terms.push(((a * m + u) * d + (b * m + v), c * e));
            }
        }
        comult.push(SparseVec::from_terms(terms));
    }
    let grouplikes = match (h.grouplikes(), k.grouplikes()) {
        (Some(g), Some(l)) => Some(g.iter().flat_map(|&a| l.iter().map(move |&b| a * m + b)).collect()),
        _ => None,
    };
    HopfAlgebra::from_parts(HopfParts {
        name: format!("{}⊗{}", h.name(), k.name()),
        dim: d,
        order,
        mult,
        unit: h.one().kron(&k.one(), m),
        comult,
        counit: (0..d).map(|x| h.counit_basis(x / m) * k.counit_basis(x % m)).collect(),
        antipode: (0..d).map(|x| h.antipode_basis(x / m).kron(k.antipode_basis(x % m), m)).collect(),
        r_matrix: None,
        grouplikes,
    })
}

/// `H^{⊗n}` for `n ≥ 1`, associated to the left.
pub fn tensor_power(h: &HopfAlgebra, n: usize) -> HopfAlgebra {
    assert!(n >= 1);
    let mut acc = h.clone();
    for _ in 1..n {
        acc = tensor_product(&acc, h).expect("same field");
    }
    acc.with_name(format!("{}^{n}", h.name()))
}

/// Δ^{n−1}(h) in `H^{⊗n}`, expanding the leftmost factor each time.
pub fn delta_power(h: &HopfAlgebra, x: &Element, n: usize) -> SparseVec {
    assert!(n >= 1);
    let d = h.dim();
    let mut acc = x.clone();
    for k in 1..n {
        acc = h.map_factor(&acc, k, 0, d * d, |i| h.comult_basis(i));
    }
    acc
}

/// `[h, k] = h₍₁₎ k₍₁₎ S(h₍₂₎) S(k₍₂₎)`.
pub fn hopf_commutator(h: &HopfAlgebra, x: &Element, y: &Element) -> Element {
    let n = h.dim();
    let dx = h.comult(x);
    let dy = h.comult(y);
    let mut acc = Vec::new();
    for (p, c) in dx.iter() {
        let (a, b) = (p / n, p % n);
        let sb = h.antipode_basis(b);
        for (q, e) in dy.iter() {
            let (u, v) = (q / n, q % n);
            let left = h.mult_basis(a, u);
            if left.is_zero() {
                continue;
            }
            let prod = h.mul(&h.mul(left, sb), h.antipode_basis(v));
            let ce = c * e;
            for (k, z) in prod.iter() {
                acc.push((*k, &ce * z));
            }
        }
    }
    SparseVec::from_terms(acc)
}

/// `(f * g)(b) = Σ f(b₍₁₎) g(b₍₂₎)` for functionals written in the dual basis.
pub fn convolution(h: &HopfAlgebra, f: &SparseVec, g: &SparseVec) -> SparseVec {
    let n = h.dim();
    let order = h.order();
    let fd = f.to_dense(n, order);
    let gd = g.to_dense(n, order);
    let values: Vec<Cyclo> = (0..n)
        .map(|i| {
            let mut acc = Cyclo::zero(order);
            for (p, c) in h.comult_basis(i).iter() {
                let (a, b) = (p / n, p % n);
                if !fd[a].is_zero() && !gd[b].is_zero() {
                    acc += &(&(c * &fd[a]) * &gd[b]);
                }
            }
            acc
        })
        .collect();
    SparseVec::from_dense(&values)
}
