use std::fmt;

use crate::scalars::Cyclo;

/// A vector stored as sorted `(index, value)` pairs with no explicit zeros.
///
/// This is the universal vector type of the crate: elements of `H`, of `H⊗H`,
/// and rows of echelon bases are all `SparseVec`s. The ambient dimension is
/// carried by whoever owns the vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Cyclo)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// The basis vector `e_i`.
    pub fn unit(i: usize, order: u32) -> Self {
        SparseVec {
            entries: vec![(i, Cyclo::one(order))],
        }
    }

    pub fn single(i: usize, c: Cyclo) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Sums duplicate indices and drops zeros; input order is irrelevant.
    pub fn from_terms(mut terms: Vec<(usize, Cyclo)>) -> Self {
        if terms.len() <= 1 {
            terms.retain(|(_, c)| !c.is_zero());
            return SparseVec { entries: terms };
        }
        terms.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Cyclo)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    /// Builds from entries already sorted by strictly increasing index.
    pub(crate) fn from_sorted(entries: Vec<(usize, Cyclo)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let entries = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Cyclo]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, order: u32) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(order); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Cyclo)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Cyclo)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Cyclo> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn coeff(&self, i: usize, order: u32) -> Cyclo {
        self.get(i).cloned().unwrap_or_else(|| Cyclo::zero(order))
    }

    pub fn leading(&self) -> Option<(usize, &Cyclo)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, a: &Cyclo) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        if a.is_one() {
            return self.clone();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, c * a)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// `self + a·other` by a sorted merge.
    pub fn axpy(&self, a: &Cyclo, other: &SparseVec) -> SparseVec {
        if a.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while p < x.len() || q < y.len() {
            if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
                out.push(x[p].clone());
                p += 1;
            } else if p == x.len() || y[q].0 < x[p].0 {
                out.push((y[q].0, a * &y[q].1));
                q += 1;
            } else {
                let v = &x[p].1 + &(a * &y[q].1);
                if !v.is_zero() {
                    out.push((x[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        if self.is_zero() {
            return other.clone();
        }
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&Cyclo::one(c.order()), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&Cyclo::from_int(c.order(), -1), other),
        }
    }

    /// Σ self_i · w_i for a dense functional `w`.
    pub fn dot(&self, w: &[Cyclo], order: u32) -> Cyclo {
        let mut acc = Cyclo::zero(order);
        for (i, c) in &self.entries {
            if !w[*i].is_zero() {
                acc += &(c * &w[*i]);
            }
        }
        acc
    }

    /// Tensor product under the fixed ordering `e_i ⊗ e_j ↦ i·other_dim + j`.
    pub fn kron(&self, other: &SparseVec, other_dim: usize) -> SparseVec {
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * other_dim + j, a * b));
            }
        }
        // already sorted: i major, j minor
        SparseVec::from_sorted(entries)
    }

    /// Re-indexes entries through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_terms(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    /// Restricts to indices in `range`, shifted down to start at zero.
    pub fn slice(&self, start: usize, end: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < end)
                .map(|(i, c)| (i - start, c.clone()))
                .collect(),
        }
    }

    pub fn into_entries(self) -> Vec<(usize, Cyclo)> {
        self.entries
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, c)| (i, c))).finish()
    }
}

/// Linear combination Σ c_k v_k accumulated by one sort-merge.
pub fn linear_combination<'a>(
    terms: impl IntoIterator<Item = (&'a Cyclo, &'a SparseVec)>,
) -> SparseVec {
    let mut all = Vec::new();
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (i, x) in v.iter() {
            all.push((*i, c * x));
        }
    }
    SparseVec::from_terms(all)
}
