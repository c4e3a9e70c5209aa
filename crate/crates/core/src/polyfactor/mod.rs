//! Univariate factorization over ℚ (Zassenhaus) and over ℚ(ζ_N) (Trager's
//! norm method), plus minimal and characteristic polynomials.

mod fp;
mod zassenhaus;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{Matrix, SparseVec, TrackedEchelon};
use crate::scalars::{euler_phi, Cyclo, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has non-rational coefficients: {0}")]
    NotRational(String),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
}

/// `unit · ∏ factor^multiplicity`, factors monic and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Cyclo,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let order = self.unit.order();
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, k)| acc.mul(&f.embed(order.max(f.order())).expect("same field").pow(*k)))
    }

    fn sort(&mut self) {
        self.factors.sort_by(|(a, ka), (b, kb)| cmp_poly(a, b).then(ka.cmp(kb)));
    }
}

fn cmp_poly(a: &Poly, b: &Poly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Yun's algorithm: pairwise coprime squarefree parts with multiplicities.
pub fn squarefree_decompose(f: &Poly) -> Result<Factorization, FactorError> {
    let unit = f.leading().ok_or(FactorError::ZeroPolynomial)?.clone();
    let f = f.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(Factorization { unit, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.divrem(&a0).expect("nonzero").0;
    let c = df.divrem(&a0).expect("nonzero").0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().is_some_and(|k| k > 0) {
        let a = b.gcd(&d);
        b = b.divrem(&a).expect("nonzero").0;
        let c = d.divrem(&a).expect("nonzero").0;
        d = c.sub(&b.derivative());
        if a.degree().is_some_and(|k| k > 0) {
            factors.push((a, i));
        }
        i += 1;
    }
    Ok(Factorization { unit, factors })
}

fn rational_to_z(f: &Poly) -> Result<(Rational, Vec<BigInt>), FactorError> {
    let rs = f.rational_coeffs().ok_or_else(|| FactorError::NotRational(f.to_string()))?;
    let den = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
    let ints: Vec<BigInt> = rs.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut content = content;
    if ints.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    let prim = ints.iter().map(|c| c / &content).collect();
    Ok((Rational::from_bigints(content, den), prim))
}

fn z_to_poly(order: u32, z: &[BigInt]) -> Poly {
    Poly::from_rationals(order, &z.iter().map(|c| Rational::from_bigint(c.clone())).collect::<Vec<_>>())
}

/// Complete factorization over ℚ; the input must have rational coefficients.
/// Factors are returned in the input's field.
pub fn factor_over_q(f: &Poly) -> Result<Factorization, FactorError> {
    let order = f.order();
    let sqf = squarefree_decompose(f)?;
    if !f.is_rational() {
        return Err(FactorError::NotRational(f.to_string()));
    }
    let mut out = Factorization {
        unit: sqf.unit.clone(),
        factors: Vec::new(),
    };
    for (part, k) in &sqf.factors {
        for g in factor_squarefree_q(part)? {
            out.factors.push((g.embed(order).expect("ℚ embeds everywhere"), *k));
        }
    }
    out.sort();
    Ok(out)
}

/// Monic ℚ-irreducible factors of a squarefree rational polynomial, over ℚ.
fn factor_squarefree_q(f: &Poly) -> Result<Vec<Poly>, FactorError> {
    let (_, z) = rational_to_z(f)?;
    Ok(zassenhaus::factor_squarefree_z(&z).iter().map(|g| z_to_poly(1, g).monic()).collect())
}

/// Complete factorization over the field ℚ(ζ_N) of the input.
pub fn factor_over_cyclotomic(f: &Poly) -> Result<Factorization, FactorError> {
    let order = f.order();
    if euler_phi(order) == 1 {
        return factor_over_q(f);
    }
    let sqf = squarefree_decompose(f)?;
    let mut out = Factorization {
        unit: sqf.unit.clone(),
        factors: Vec::new(),
    };
    for (part, k) in &sqf.factors {
        // factoring over ℚ first keeps the norms small when the input is rational
        let pieces = if part.is_rational() {
            factor_squarefree_q(part)?.into_iter().map(|g| g.embed(order).unwrap()).collect()
        } else {
            vec![part.clone()]
        };
        for piece in pieces {
            for g in trager(&piece)? {
                out.factors.push((g, *k));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Norm of `g` down to ℚ: the product of its Galois conjugates.
fn norm(g: &Poly) -> Poly {
    let order = g.order();
    let prod = Cyclo::galois_exponents(order)
        .into_iter()
        .fold(Poly::one(order), |acc, j| acc.mul(&g.galois(j)));
    let rs = prod.rational_coeffs().expect("norm is rational");
    Poly::from_rationals(1, &rs)
}

/// Trager's algorithm for a monic squarefree polynomial over ℚ(ζ_N).
fn trager(f: &Poly) -> Result<Vec<Poly>, FactorError> {
    let order = f.order();
    let f = f.monic();
    if f.degree().is_some_and(|d| d <= 1) {
        return Ok(vec![f]);
    }
    let zeta = Cyclo::zeta(order);
    for s in 0i64.. {
        let shift = zeta.scale(&Rational::from_integer(s));
        let g = f.shift(&-&shift);
        let n = norm(&g);
        if n.gcd(&n.derivative()).degree() != Some(0) {
            continue;
        }
        let mut out = Vec::new();
        for ni in factor_squarefree_q(&n)? {
            let h = g.gcd(&ni.embed(order).unwrap());
            if h.degree().is_some_and(|d| d > 0) {
                out.push(h.shift(&shift));
            }
        }
        return Ok(out);
    }
    unreachable!("a squarefree norm exists for all but finitely many shifts")
}

/// Roots in the coefficient field, with multiplicity.
pub fn roots_in_field(f: &Poly) -> Result<Vec<Cyclo>, FactorError> {
    let fac = factor_over_cyclotomic(f)?;
    let mut out = Vec::new();
    for (g, k) in &fac.factors {
        if g.degree() == Some(1) {
            let r = -&g.coeff(0);
            out.extend(std::iter::repeat_n(r, *k));
        }
    }
    out.sort();
    Ok(out)
}

pub fn is_irreducible(f: &Poly) -> Result<bool, FactorError> {
    let fac = factor_over_cyclotomic(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Monic polynomial of the first linear dependency among `v, T v, T² v, …`.
pub fn minpoly_of_sequence(order: u32, v0: SparseVec, mut next: impl FnMut(&SparseVec) -> SparseVec) -> Poly {
    let mut ech = TrackedEchelon::new(order);
    let mut v = v0;
    loop {
        let cur = v.clone();
        match ech.push(cur) {
            Ok(()) => v = next(&v),
            Err(x) => {
                let k = ech.len();
                return Poly::new(order, x.to_dense(k, order));
            }
        }
    }
}

/// Minimal polynomial of a square matrix.
pub fn minpoly(m: &Matrix) -> Result<Poly, FactorError> {
    if !m.is_square() {
        return Err(FactorError::NotSquare(m.rows(), m.cols()));
    }
    let order = m.order();
    let n = m.rows();
    let start = Matrix::identity(n, order);
    let mut cur = start.clone();
    Ok(minpoly_of_sequence(order, start.vectorize(), |_| {
        cur = m.checked_mul(&cur).expect("square");
        cur.vectorize()
    }))
}

/// Characteristic polynomial det(x·Id − m) by the Faddeev–LeVerrier recursion.
pub fn charpoly(m: &Matrix) -> Result<Poly, FactorError> {
    if !m.is_square() {
        return Err(FactorError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let order = m.order();
    let mut c = vec![Cyclo::zero(order); n + 1];
    c[n] = Cyclo::one(order);
    let mut mk = Matrix::zeros(n, n, order);
    for k in 1..=n {
        let mut next = m.checked_mul(&mk).expect("square");
        next.add_scaled(&c[n + 1 - k], &Matrix::identity(n, order));
        let am = m.checked_mul(&next).expect("square");
        c[n - k] = -am.trace().scale(&Rational::new(1, k as i64));
        mk = next;
    }
    Ok(Poly::new(order, c))
}
