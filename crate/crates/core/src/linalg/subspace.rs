use std::collections::BTreeMap;

use crate::scalars::Cyclo;

use super::sparse::{linear_combination, SparseVec};
use super::LinalgError;

/// A subspace of `k^ambient`, held as the rows of its reduced row-echelon basis.
///
/// Rows are sorted by pivot, every pivot entry is 1, and every row vanishes at
/// the other rows' pivots. Two equal subspaces therefore have identical bases,
/// and the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    order: u32,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, order: u32) -> Self {
        Subspace {
            ambient,
            order,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, order: u32) -> Self {
        Subspace {
            ambient,
            order,
            rows: (0..ambient).map(|i| SparseVec::unit(i, order)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `rows`, put into reduced row-echelon form.
    pub fn span(ambient: usize, order: u32, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Subspace::zero(ambient, order);
        for r in rows {
            s.insert(r);
        }
        s
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.max_index().is_none_or(|m| m < self.ambient));
        let r = self.reduce(&v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("nonzero leading entry"));
        // clear column p from the existing rows
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(p).cloned() {
                *row = row.axpy(&-c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// The residual of `v` modulo the subspace; it vanishes on every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut hits = Vec::new();
        for (i, c) in v.iter() {
            if let Some(r) = self.pivot_row(*i) {
                hits.push((c.clone(), r));
            }
        }
        if hits.is_empty() {
            return v.clone();
        }
        let negs: Vec<(Cyclo, usize)> = hits.into_iter().map(|(c, r)| (-c, r)).collect();
        let one = Cyclo::one(self.order);
        linear_combination(
            std::iter::once((&one, v)).chain(negs.iter().map(|(c, r)| (c, &self.rows[*r]))),
        )
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Cyclo>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.coeff(p, self.order)).collect())
    }

    /// Coordinates of `v` as a sparse vector over the basis rows.
    pub fn coordinates_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_sorted(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(k, &p)| v.get(p).map(|c| (k, c.clone())))
                .collect(),
        ))
    }

    /// Coordinates that are not pivots: the canonical complement basis.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut it = self.pivots.iter().peekable();
        for i in 0..self.ambient {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        for r in small.rows.iter() {
            out.insert(r.clone());
        }
        Ok(out)
    }

    /// Intersection by the kernel-of-concatenation method: the combinations of
    /// our basis whose residuals modulo `other` cancel.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let residuals: Vec<SparseVec> = self.rows.iter().map(|r| other.reduce(r)).collect();
        let combos = left_kernel(&residuals, self.order);
        Ok(Subspace::span(
            self.ambient,
            self.order,
            combos.rows.iter().map(|x| self.combine(x)),
        ))
    }

    /// Σ x_k · basis_k
    pub fn combine(&self, x: &SparseVec) -> SparseVec {
        linear_combination(x.iter().map(|(k, c)| (c, &self.rows[*k])))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains(r)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// The quotient map `k^ambient → k^ambient / self`, written in the
    /// complement coordinates (`complement_indices`).
    pub fn projector(&self) -> Projector {
        let comp = self.complement_indices();
        let mut slot = vec![usize::MAX; self.ambient];
        for (k, &i) in comp.iter().enumerate() {
            slot[i] = k;
        }
        Projector {
            space: self.clone(),
            slot,
            quotient_dim: comp.len(),
        }
    }

    /// `self ⊗ k^full_dim` (side = Left) or `k^full_dim ⊗ self` (side = Right).
    pub fn tensor(&self, full_dim: usize, side: TensorSide) -> Subspace {
        let order = self.order;
        let ambient = self.ambient * full_dim;
        let mut pairs: Vec<(usize, SparseVec)> = Vec::with_capacity(self.dim() * full_dim);
        match side {
            TensorSide::Left => {
                for (r, &p) in self.rows.iter().zip(&self.pivots) {
                    for j in 0..full_dim {
                        pairs.push((p * full_dim + j, r.kron(&SparseVec::unit(j, order), full_dim)));
                    }
                }
            }
            TensorSide::Right => {
                for i in 0..full_dim {
                    for (r, &p) in self.rows.iter().zip(&self.pivots) {
                        pairs.push((i * self.ambient + p, SparseVec::unit(i, order).kron(r, self.ambient)));
                    }
                }
            }
        }
        pairs.sort_by_key(|(p, _)| *p);
        // Each row keeps a unit pivot and vanishes on the other pivots, so the
        // result is already in reduced echelon form.
        Subspace {
            ambient,
            order,
            pivots: pairs.iter().map(|(p, _)| *p).collect(),
            rows: pairs.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorSide {
    Left,
    Right,
}

/// Projection onto a quotient space in complement coordinates.
#[derive(Clone, Debug)]
pub struct Projector {
    space: Subspace,
    slot: Vec<usize>,
    quotient_dim: usize,
}

impl Projector {
    pub fn quotient_dim(&self) -> usize {
        self.quotient_dim
    }

    pub fn kernel(&self) -> &Subspace {
        &self.space
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.space.reduce(v);
        SparseVec::from_sorted(r.into_entries().into_iter().map(|(i, c)| (self.slot[i], c)).collect())
    }
}

/// All `x` with Σ x_i v_i = 0, as a canonical subspace of `k^{vectors.len()}`.
pub fn left_kernel(vectors: &[SparseVec], order: u32) -> Subspace {
    let mut ech = TrackedEchelon::new(order);
    let kernel: Vec<SparseVec> = vectors.iter().filter_map(|v| ech.push(v.clone()).err()).collect();
    Subspace::span(vectors.len(), order, kernel)
}

/// Solves Σ x_i v_i = target; `None` when the target is outside the span.
pub fn solve_combination(vectors: &[SparseVec], target: &SparseVec, order: u32) -> Option<SparseVec> {
    let mut ech = TrackedEchelon::new(order);
    for v in vectors {
        let _ = ech.push(v.clone());
    }
    ech.express(target)
}

/// Incremental echelon form of a growing list of vectors that remembers, for
/// each stored row, which combination of the inputs produced it.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    order: u32,
    count: usize,
    rows: Vec<(SparseVec, SparseVec)>,
    pivot_index: BTreeMap<usize, usize>,
}

impl TrackedEchelon {
    pub fn new(order: u32) -> Self {
        TrackedEchelon {
            order,
            count: 0,
            rows: Vec::new(),
            pivot_index: BTreeMap::new(),
        }
    }

    /// Number of vectors pushed so far.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Appends the next input vector. When it depends on the earlier inputs,
    /// returns `Err(x)` with Σ x_i v_i = 0 and `x` = 1 at the new index.
    pub fn push(&mut self, v: SparseVec) -> Result<(), SparseVec> {
        let i = self.count;
        self.count += 1;
        let (r, c) = self.reduce(v, SparseVec::unit(i, self.order));
        match r.leading() {
            None => Err(c),
            Some((p, lead)) => {
                let inv = lead.inv().expect("nonzero");
                self.pivot_index.insert(p, self.rows.len());
                self.rows.push((r.scale(&inv), c.scale(&inv)));
                Ok(())
            }
        }
    }

    /// Coefficients expressing `target` through the inputs, if possible.
    pub fn express(&self, target: &SparseVec) -> Option<SparseVec> {
        let (r, c) = self.reduce(target.clone(), SparseVec::new());
        r.is_zero().then(|| c.neg())
    }

    fn reduce(&self, mut r: SparseVec, mut c: SparseVec) -> (SparseVec, SparseVec) {
        let mut floor = 0usize;
        loop {
            let hit = r
                .iter()
                .filter(|(i, _)| *i >= floor)
                .find_map(|(i, a)| self.pivot_index.get(i).map(|&k| (*i, a.clone(), k)));
            let Some((col, a, k)) = hit else {
                return (r, c);
            };
            let neg = -a;
            r = r.axpy(&neg, &self.rows[k].0);
            c = c.axpy(&neg, &self.rows[k].1);
            floor = col + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| Cyclo::from_int(1, x)).collect::<Vec<_>>())
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, 1, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, 1, vec![v(&[1, 3, 4]), v(&[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.basis()[0], v(&[1, 0, 1]));
    }

    #[test]
    fn sum_intersect_contains() {
        let e12 = Subspace::span(3, 1, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let e23 = Subspace::span(3, 1, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = e12.intersect(&e23).unwrap();
        assert_eq!(i, Subspace::span(3, 1, vec![v(&[0, 1, 0])]));
        assert_eq!(e12.intersect(&e12).unwrap(), e12);
        assert_eq!(e12.sum(&Subspace::zero(3, 1)).unwrap(), e12);
        assert!(e12.sum(&e23).unwrap().is_full());
        assert!(e12.contains_subspace(&i).unwrap());
        assert!(e12.intersect(&Subspace::zero(4, 1)).is_err());
    }

    #[test]
    fn left_kernel_basic() {
        let k = left_kernel(&[v(&[1, 1]), v(&[2, 2]), v(&[0, 1])], 1);
        assert_eq!(k, Subspace::span(3, 1, vec![v(&[2, -1, 0])]));
    }

    #[test]
    fn solve() {
        let x = solve_combination(&[v(&[1, 0]), v(&[1, 1])], &v(&[3, 2]), 1).unwrap();
        assert_eq!(x, v(&[1, 2]));
        assert!(solve_combination(&[v(&[1, 1])], &v(&[1, 0]), 1).is_none());
    }

    #[test]
    fn projector_kills_subspace() {
        let s = Subspace::span(3, 1, vec![v(&[1, 1, 0])]);
        let p = s.projector();
        assert_eq!(p.quotient_dim(), 2);
        assert!(p.project(&v(&[2, 2, 0])).is_zero());
        assert_eq!(p.project(&v(&[0, 1, 0])), v(&[1, 0]));
    }

    #[test]
    fn tensor_dimensions() {
        let u = Subspace::span(3, 1, vec![v(&[1, 1, 0])]);
        let l = u.tensor(2, TensorSide::Left);
        let r = u.tensor(2, TensorSide::Right);
        assert_eq!(l.dim(), 2);
        assert_eq!(r.dim(), 2);
        assert_eq!(l, Subspace::span(6, 1, l.basis().to_vec()));
        assert_eq!(r, Subspace::span(6, 1, r.basis().to_vec()));
        assert!(Subspace::zero(3, 1).tensor(4, TensorSide::Left).is_zero());
    }
}
