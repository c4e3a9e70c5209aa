//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Basis elements are `b_0, …, b_{n−1}`. Elements of `H` are [`SparseVec`]s of
//! length `n`; elements of `H^{⊗k}` are `SparseVec`s of length `n^k` under the
//! lexicographic index ordering of [`crate::linalg`].

mod axioms;
mod constructors;
mod ops;

pub use axioms::{verify_axioms, Axiom, AxiomCheck, AxiomReport};
pub use constructors::{
    group_algebra, kac_paljutkin, named_group, taft, trivial, CayleyTable, NamedGroup,
};
pub use ops::{convolution, delta_power, dual, hopf_commutator, tensor_power, tensor_product};

use thiserror::Error;

use crate::linalg::SparseVec;
use crate::scalars::{Cyclo, ScalarError};

/// An element of `H` (or of a tensor power), as coordinates in the basis.
pub type Element = SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfAlgebra {
    name: String,
    dim: usize,
    order: u32,
    /// `mult[i·dim + j] = b_i · b_j`
    mult: Vec<SparseVec>,
    unit: SparseVec,
    /// `comult[i] = Δ(b_i)` in `H⊗H`
    comult: Vec<SparseVec>,
    counit: Vec<Cyclo>,
    /// `antipode[i] = S(b_i)`
    antipode: Vec<SparseVec>,
    r_matrix: Option<SparseVec>,
    grouplikes: Option<Vec<usize>>,
}

/// Raw structure constants, checked for shape by [`HopfAlgebra::from_parts`].
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub dim: usize,
    pub order: u32,
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<SparseVec>,
    pub counit: Vec<Cyclo>,
    pub antipode: Vec<SparseVec>,
    pub r_matrix: Option<SparseVec>,
    pub grouplikes: Option<Vec<usize>>,
}

impl HopfAlgebra {
    /// Checks shapes and promotes every scalar to the declared field. The Hopf
    /// axioms are not checked here; see [`verify_axioms`].
    pub fn from_parts(p: HopfParts) -> Result<Self, HopfError> {
        let n = p.dim;
        let bad = |what: &str| Err(HopfError::Malformed(what.to_string()));
        if n == 0 {
            return bad("dimension must be positive");
        }
        if p.mult.len() != n * n {
            return bad("mult needs dim² products");
        }
        if p.comult.len() != n || p.antipode.len() != n || p.counit.len() != n {
            return bad("comult, counit and antipode need one entry per basis element");
        }
        let in_range = |v: &SparseVec, len: usize| v.max_index().is_none_or(|m| m < len);
        if !p.mult.iter().chain(&p.antipode).chain(std::iter::once(&p.unit)).all(|v| in_range(v, n)) {
            return bad("vector index out of range");
        }
        if !p.comult.iter().chain(p.r_matrix.iter()).all(|v| in_range(v, n * n)) {
            return bad("tensor index out of range");
        }
        if let Some(g) = &p.grouplikes {
            if g.iter().any(|&i| i >= n) {
                return bad("grouplike index out of range");
            }
        }
        let order = p.order;
        let promote = |v: SparseVec| -> Result<SparseVec, HopfError> {
            let t = v
                .into_entries()
                .into_iter()
                .map(|(i, c)| Ok((i, c.embed(order)?)))
                .collect::<Result<Vec<_>, ScalarError>>()?;
            Ok(SparseVec::from_terms(t))
        };
        Ok(HopfAlgebra {
            name: p.name,
            dim: n,
            order,
            mult: p.mult.into_iter().map(promote).collect::<Result<_, _>>()?,
            unit: promote(p.unit)?,
            comult: p.comult.into_iter().map(promote).collect::<Result<_, _>>()?,
            counit: p.counit.into_iter().map(|c| c.embed(order)).collect::<Result<_, _>>()?,
            antipode: p.antipode.into_iter().map(promote).collect::<Result<_, _>>()?,
            r_matrix: p.r_matrix.map(promote).transpose()?,
            grouplikes: p.grouplikes,
        })
    }

    pub fn into_parts(self) -> HopfParts {
        HopfParts {
            name: self.name,
            dim: self.dim,
            order: self.order,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode: self.antipode,
            r_matrix: self.r_matrix,
            grouplikes: self.grouplikes,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_r_matrix(mut self, r: Option<SparseVec>) -> Self {
        self.r_matrix = r;
        self
    }

    pub fn with_grouplikes(mut self, g: Option<Vec<usize>>) -> Self {
        self.grouplikes = g;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn r_matrix(&self) -> Option<&SparseVec> {
        self.r_matrix.as_ref()
    }

    pub fn grouplikes(&self) -> Option<&[usize]> {
        self.grouplikes.as_deref()
    }

    /// Equality of everything except the name.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Cyclo {
        &self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    pub fn counit_vector(&self) -> &[Cyclo] {
        &self.counit
    }

    pub fn one(&self) -> Element {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Element {
        SparseVec::unit(i, self.order)
    }

    pub fn zero_scalar(&self) -> Cyclo {
        Cyclo::zero(self.order)
    }

    pub fn scalar(&self, n: i64) -> Cyclo {
        Cyclo::from_int(self.order, n)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut terms = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, c) in self.mult[i * self.dim + j].iter() {
                    terms.push((*k, &xy * c));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn comult(&self, a: &Element) -> Element {
        apply_linear(a, |i| &self.comult[i])
    }

    pub fn counit(&self, a: &Element) -> Cyclo {
        a.dot(&self.counit, self.order)
    }

    pub fn antipode(&self, a: &Element) -> Element {
        apply_linear(a, |i| &self.antipode[i])
    }

    /// The opposite coproduct `τ∘Δ`.
    pub fn comult_op(&self, a: &Element) -> Element {
        self.comult(a).map_indices(|k| (k % self.dim) * self.dim + k / self.dim)
    }

    /// Multiplication in `H^{⊗k}`, factorwise.
    pub fn mul_tensor(&self, x: &SparseVec, y: &SparseVec, k: usize) -> SparseVec {
        let n = self.dim;
        let mut terms = Vec::new();
        let mut da = vec![0usize; k];
        let mut db = vec![0usize; k];
        for (a, xa) in x.iter() {
            digits(*a, n, &mut da);
            for (b, yb) in y.iter() {
                digits(*b, n, &mut db);
                let mut cur: Vec<(usize, Cyclo)> = vec![(0, xa * yb)];
                for t in 0..k {
                    let p = &self.mult[da[t] * n + db[t]];
                    if p.is_zero() {
                        cur.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(cur.len() * p.nnz());
                    for (idx, c) in &cur {
                        for (m, d) in p.iter() {
                            next.push((idx * n + m, c * d));
                        }
                    }
                    cur = next;
                }
                terms.extend(cur);
            }
        }
        SparseVec::from_terms(terms)
    }

    /// `1^{⊗k}`
    pub fn one_tensor(&self, k: usize) -> SparseVec {
        (1..k).fold(self.one(), |acc, _| acc.kron(&self.unit, self.dim))
    }

    /// `Σ x_{ij} b_i b_j` for `x ∈ H⊗H`.
    pub fn multiply_pair(&self, x: &SparseVec) -> Element {
        let n = self.dim;
        let mut terms = Vec::new();
        for (idx, c) in x.iter() {
            for (k, d) in self.mult[(idx / n) * n + idx % n].iter() {
                terms.push((*k, c * d));
            }
        }
        SparseVec::from_terms(terms)
    }

    /// Applies `f` to tensor factor `pos` of `x ∈ H^{⊗k}`; `f` maps a basis
    /// index to a vector of length `out_dim`.
    pub fn map_factor<'a>(
        &self,
        x: &SparseVec,
        k: usize,
        pos: usize,
        out_dim: usize,
        f: impl Fn(usize) -> &'a SparseVec,
    ) -> SparseVec {
        map_factor(x, self.dim, k, pos, out_dim, f)
    }

    /// `(ε ⊗ id^{⊗(k−1)})` style contraction of factor `pos`.
    pub fn counit_on_factor(&self, x: &SparseVec, k: usize, pos: usize) -> SparseVec {
        let n = self.dim;
        let tail = n.pow((k - pos - 1) as u32);
        let mut terms = Vec::new();
        for (idx, c) in x.iter() {
            let right = idx % tail;
            let digit = (idx / tail) % n;
            let left = idx / (tail * n);
            let e = &self.counit[digit];
            if !e.is_zero() {
                terms.push((left * tail + right, c * e));
            }
        }
        SparseVec::from_terms(terms)
    }
}

/// Splits `idx` into `out.len()` base-`n` digits, most significant first.
pub(crate) fn digits(mut idx: usize, n: usize, out: &mut [usize]) {
    for d in out.iter_mut().rev() {
        *d = idx % n;
        idx /= n;
    }
}

pub(crate) fn apply_linear<'a>(a: &SparseVec, f: impl Fn(usize) -> &'a SparseVec) -> SparseVec {
    let mut terms = Vec::new();
    for (i, x) in a.iter() {
        for (k, c) in f(*i).iter() {
            terms.push((*k, x * c));
        }
    }
    SparseVec::from_terms(terms)
}

pub fn map_factor<'a>(
    x: &SparseVec,
    n: usize,
    k: usize,
    pos: usize,
    out_dim: usize,
    f: impl Fn(usize) -> &'a SparseVec,
) -> SparseVec {
    let tail = n.pow((k - pos - 1) as u32);
    let mut terms = Vec::new();
    for (idx, c) in x.iter() {
        let right = idx % tail;
        let digit = (idx / tail) % n;
        let left = idx / (tail * n);
        for (j, d) in f(digit).iter() {
            terms.push(((left * out_dim + j) * tail + right, c * d));
        }
    }
    SparseVec::from_terms(terms)
}
