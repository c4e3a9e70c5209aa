use std::fmt;
use std::str::FromStr;

use crate::linalg::SparseVec;
use crate::scalars::{Cyclo, Rational};

use super::{HopfAlgebra, HopfError, HopfParts};

/// Multiplication table of a finite group: `table[a][b]` is the index of `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("validated group")
    }

    /// Checks closure, associativity, identity and inverses.
    pub fn validate(&self) -> Result<(), HopfError> {
        let n = self.order();
        let err = |m: String| Err(HopfError::NotAGroup(m));
        if n == 0 {
            return err("empty table".into());
        }
        if self.identity >= n {
            return err(format!("identity index {} out of range", self.identity));
        }
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return err(format!("row {a} has length {}, expected {n}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return err(format!("entry {x} in row {a} is out of range"));
            }
        }
        for a in 0..n {
            if self.table[self.identity][a] != a || self.table[a][self.identity] != a {
                return err(format!("{} is not a two-sided identity (fails at {a})", self.identity));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        for a in 0..n {
            let has_inverse =
                (0..n).any(|b| self.table[a][b] == self.identity && self.table[b][a] == self.identity);
            if !has_inverse {
                return err(format!("element {a} has no inverse"));
            }
        }
        Ok(())
    }

    /// Subgroup generated by `gens`, as a sorted list of indices.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// All subgroups, each a sorted index list, sorted by (size, elements).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found: Vec<Vec<usize>> = vec![vec![self.identity]];
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for g in 0..n {
                    if h.binary_search(&g).is_ok() {
                        continue;
                    }
                    let mut gens = h.clone();
                    gens.push(g);
                    let k = self.generated_subgroup(&gens);
                    if !found.contains(&k) {
                        found.push(k.clone());
                        next.push(k);
                    }
                }
            }
            frontier = next;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        found
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        (0..self.order()).all(|g| {
            let gi = self.inverse(g);
            sub.iter().all(|&k| sub.binary_search(&self.mul(self.mul(g, k), gi)).is_ok())
        })
    }
}

/// Groups available by name: `Z<n>`, `Q8`, `D4`, `S3`, `S4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    Cyclic(usize),
    Q8,
    D4,
    S3,
    S4,
}

impl FromStr for NamedGroup {
    type Err = HopfError;

    fn from_str(s: &str) -> Result<Self, HopfError> {
        match s.to_ascii_uppercase().as_str() {
            "Q8" => Ok(NamedGroup::Q8),
            "D4" => Ok(NamedGroup::D4),
            "S3" => Ok(NamedGroup::S3),
            "S4" => Ok(NamedGroup::S4),
            other => other
                .strip_prefix('Z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(NamedGroup::Cyclic)
                .ok_or_else(|| HopfError::NotAGroup(format!("unknown group name {s:?}"))),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(n) => write!(f, "Z{n}"),
            NamedGroup::Q8 => f.write_str("Q8"),
            NamedGroup::D4 => f.write_str("D4"),
            NamedGroup::S3 => f.write_str("S3"),
            NamedGroup::S4 => f.write_str("S4"),
        }
    }
}

impl NamedGroup {
    /// Element orderings:
    /// - `Z<n>`: `0, 1, …, n−1` under addition;
    /// - `Q8`: `1, −1, i, −i, j, −j, k, −k`;
    /// - `D4`: `r^0..r^3` then `s·r^0..s·r^3` with `srs = r^{-1}`;
    /// - `S3`, `S4`: permutations in lexicographic order of their image lists,
    ///   composed as functions (`(στ)(x) = σ(τ(x))`).
    pub fn cayley(self) -> CayleyTable {
        let table = match self {
            NamedGroup::Cyclic(n) => (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            NamedGroup::Q8 => q8_table(),
            NamedGroup::D4 => (0..8)
                .map(|x| {
                    (0..8)
                        .map(|y| {
                            let (e, a) = (x / 4, x % 4);
                            let (f, b) = (y / 4, y % 4);
                            let rot = if f == 0 { a + b } else { 4 - a + b };
                            ((e + f) % 2) * 4 + rot % 4
                        })
                        .collect()
                })
                .collect(),
            NamedGroup::S3 => symmetric_table(3),
            NamedGroup::S4 => symmetric_table(4),
        };
        CayleyTable { table, identity: 0 }
    }
}

fn q8_table() -> Vec<Vec<usize>> {
    // units 1, i, j, k as 0..4; product of units as (negated, unit)
    let unit_mul = |u: usize, v: usize| -> (bool, usize) {
        match (u, v) {
            (0, w) | (w, 0) => (false, w),
            (a, b) if a == b => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (neg, w) = unit_mul(x / 2, y / 2);
                    let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
                    2 * w + sign
                })
                .collect()
        })
        .collect()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..m {
        for rest in permutations(m - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn symmetric_table(m: usize) -> Vec<Vec<usize>> {
    let perms = permutations(m);
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
    perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&(0..m).map(|x| s[t[x]]).collect()))
                .collect()
        })
        .collect()
}

/// The group algebra over ℚ(ζ_order): basis = group elements, `Δg = g⊗g`,
/// `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(name: &str, cayley: &CayleyTable, order: u32) -> Result<HopfAlgebra, HopfError> {
    cayley.validate()?;
    let n = cayley.order();
    let one = Cyclo::one(order);
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(SparseVec::unit(cayley.mul(a, b), order));
        }
    }
    HopfAlgebra::from_parts(HopfParts {
        name: name.to_string(),
        dim: n,
        order,
        mult,
        unit: SparseVec::unit(cayley.identity, order),
        comult: (0..n).map(|g| SparseVec::unit(g * n + g, order)).collect(),
        counit: vec![one; n],
        antipode: (0..n).map(|g| SparseVec::unit(cayley.inverse(g), order)).collect(),
        r_matrix: None,
        grouplikes: Some((0..n).collect()),
    })
}

pub fn named_group(g: NamedGroup, order: u32) -> HopfAlgebra {
    group_algebra(&format!("k{g}"), &g.cayley(), order).expect("built-in tables are groups")
}

/// The 1-dimensional Hopf algebra ℚ.
pub fn trivial() -> HopfAlgebra {
    named_group(NamedGroup::Cyclic(1), 1).with_name("trivial")
}

/// Fills in Δ, ε and S from their values on generators: basis element `i`
/// must equal the product of the generators listed in `words[i]`.
fn extend_from_generators(
    mut partial: HopfAlgebra,
    words: &[Vec<usize>],
    gen_delta: &[SparseVec],
    gen_counit: &[Cyclo],
    gen_antipode: &[SparseVec],
) -> HopfAlgebra {
    let n = partial.dim();
    for (i, w) in words.iter().enumerate() {
        let prod = w.iter().fold(partial.one(), |acc, &g| partial.mul(&acc, &partial.basis(g)));
        assert_eq!(prod, partial.basis(i), "word for basis element {i} does not multiply out");
    }
    let mut comult = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for w in words {
        comult.push(w.iter().fold(partial.one_tensor(2), |acc, &g| partial.mul_tensor(&acc, &gen_delta[g], 2)));
        counit.push(w.iter().fold(Cyclo::one(partial.order()), |acc, &g| &acc * &gen_counit[g]));
        antipode.push(w.iter().rev().fold(partial.one(), |acc, &g| partial.mul(&acc, &gen_antipode[g])));
    }
    partial.comult = comult;
    partial.counit = counit;
    partial.antipode = antipode;
    partial
}

fn algebra_only(name: String, dim: usize, order: u32, mult: Vec<SparseVec>, unit: usize) -> HopfAlgebra {
    HopfAlgebra::from_parts(HopfParts {
        name,
        dim,
        order,
        mult,
        unit: SparseVec::unit(unit, order),
        comult: vec![SparseVec::new(); dim],
        counit: vec![Cyclo::zero(order); dim],
        antipode: vec![SparseVec::new(); dim],
        r_matrix: None,
        grouplikes: None,
    })
    .expect("well-shaped")
}

/// The Taft algebra of dimension n² over ℚ(ζ_n): `g^n = 1`, `x^n = 0`,
/// `gx = ζ xg`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`. Basis element `a·n + b` is
/// `g^a x^b`.
pub fn taft(n: usize) -> HopfAlgebra {
    assert!(n >= 2, "Taft algebras need n ≥ 2");
    let order = n as u32;
    let dim = n * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let (a, b) = (i / n, i % n);
            let (c, d) = (j / n, j % n);
            if b + d >= n {
                mult.push(SparseVec::new());
            } else {
                // x^b g^c = ζ^{−bc} g^c x^b
                let coeff = Cyclo::zeta_pow(order, -((b * c) as i64));
                mult.push(SparseVec::single(idx((a + c) % n, b + d), coeff));
            }
        }
    }
    let partial = algebra_only(format!("taft{n}"), dim, order, mult, 0);
    let (g, x) = (idx(1, 0), idx(0, 1));
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|i| std::iter::repeat_n(g, i / n).chain(std::iter::repeat_n(x, i % n)).collect())
        .collect();
    let mut gen_delta = vec![SparseVec::new(); dim];
    gen_delta[g] = SparseVec::unit(g * dim + g, order);
    gen_delta[x] = SparseVec::from_terms(vec![
        (x * dim, Cyclo::one(order)),
        (g * dim + x, Cyclo::one(order)),
    ]);
    let mut gen_counit = vec![Cyclo::zero(order); dim];
    gen_counit[g] = Cyclo::one(order);
    let mut gen_antipode = vec![SparseVec::new(); dim];
    let ginv = idx(n - 1, 0);
    gen_antipode[g] = SparseVec::unit(ginv, order);
    gen_antipode[x] = SparseVec::single(idx(n - 1, 1), Cyclo::from_int(order, -1));
    extend_from_generators(partial, &words, &gen_delta, &gen_counit, &gen_antipode)
        .with_grouplikes(Some((0..n).map(|a| idx(a, 0)).collect()))
}

/// The Kac–Paljutkin algebra over ℚ(ζ_8): generators x, y, z with
/// `x² = y² = 1`, `xy = yx`, `zx = yz`, `zy = xz`, `z² = ½(1 + x + y − xy)`,
/// x and y grouplike, `Δz = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)`, `ε(z) = 1`,
/// `S(z) = z`. Basis order: `1, x, y, xy, z, xz, yz, xyz`.
pub fn kac_paljutkin() -> HopfAlgebra {
    let order = 8;
    let dim = 8;
    let half = Cyclo::from_rational(order, Rational::new(1, 2));
    let swap = |g: usize| ((g & 1) << 1) | ((g >> 1) & 1);
    let mut mult = Vec::with_capacity(64);
    for i in 0..8 {
        for j in 0..8 {
            let (e, g) = (i / 4, i % 4);
            let (f, h) = (j / 4, j % 4);
            let moved = if e == 1 { swap(h) } else { h };
            let base = g ^ moved;
            mult.push(match e + f {
                0 => SparseVec::unit(base, order),
                1 => SparseVec::unit(4 + base, order),
                _ => SparseVec::from_terms(vec![
                    (base, half.clone()),
                    (base ^ 1, half.clone()),
                    (base ^ 2, half.clone()),
                    (base ^ 3, -&half),
                ]),
            });
        }
    }
    let partial = algebra_only("kp8".into(), dim, order, mult, 0);
    let (x, y, z) = (1usize, 2usize, 4usize);
    let words: Vec<Vec<usize>> = (0..8)
        .map(|i: usize| {
            let mut w = Vec::new();
            if i & 1 != 0 {
                w.push(x);
            }
            if i & 2 != 0 {
                w.push(y);
            }
            if i & 4 != 0 {
                w.push(z);
            }
            w
        })
        .collect();
    let t = |a: usize, b: usize| a * dim + b;
    let j = SparseVec::from_terms(vec![
        (t(0, 0), half.clone()),
        (t(0, x), half.clone()),
        (t(y, 0), half.clone()),
        (t(y, x), -&half),
    ]);
    let mut gen_delta = vec![SparseVec::new(); dim];
    gen_delta[x] = SparseVec::unit(t(x, x), order);
    gen_delta[y] = SparseVec::unit(t(y, y), order);
    gen_delta[z] = partial.mul_tensor(&j, &SparseVec::unit(t(z, z), order), 2);
    let gen_counit = vec![Cyclo::one(order); dim];
    let gen_antipode: Vec<SparseVec> = (0..dim).map(|i| SparseVec::unit(i, order)).collect();
    extend_from_generators(partial, &words, &gen_delta, &gen_counit, &gen_antipode)
        .with_grouplikes(Some(vec![0, 1, 2, 3]))
}
