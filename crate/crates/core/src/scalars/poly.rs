//! Dense univariate polynomials with coefficients in ℚ(ζ_N).

use std::fmt;

use super::cyclo::{field_table, Cyclo};
use super::rational::Rational;
use super::ScalarError;

/// Coefficients are stored constant term first; the leading coefficient is
/// nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    order: u32,
    coeffs: Vec<Cyclo>,
}

impl Poly {
    pub fn zero(order: u32) -> Self {
        Poly {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Poly::constant(Cyclo::one(order))
    }

    pub fn constant(c: Cyclo) -> Self {
        let order = c.order();
        Poly::new(order, vec![c])
    }

    /// `x`
    pub fn x(order: u32) -> Self {
        Poly::new(order, vec![Cyclo::zero(order), Cyclo::one(order)])
    }

    /// `x − a`
    pub fn linear(a: &Cyclo) -> Self {
        let order = a.order();
        Poly::new(order, vec![-a, Cyclo::one(order)])
    }

    pub fn new(order: u32, coeffs: Vec<Cyclo>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| if c.order() == order { c } else { c.embed(order).expect("coefficient outside the field") })
            .collect();
        let mut p = Poly { order, coeffs };
        p.trim();
        p
    }

    /// A polynomial with rational coefficients, constant term first.
    pub fn from_rationals(order: u32, coeffs: &[Rational]) -> Self {
        Poly::new(order, coeffs.iter().map(|r| Cyclo::from_rational(order, r.clone())).collect())
    }

    pub fn from_ints(order: u32, coeffs: &[i64]) -> Self {
        Poly::new(order, coeffs.iter().map(|&r| Cyclo::from_int(order, r)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Cyclo::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Cyclo {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Cyclo::zero(self.order))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Cyclo::is_one)
    }

    /// True when every coefficient lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(Cyclo::is_rational)
    }

    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(Cyclo::to_rational).collect()
    }

    /// Re-expresses the coefficients in a larger cyclotomic field.
    pub fn embed(&self, order: u32) -> Result<Poly, ScalarError> {
        let coeffs = self.coeffs.iter().map(|c| c.embed(order)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(order, coeffs))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Poly {
        Poly::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.order, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.order, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.order);
        }
        let mut out = vec![Cyclo::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(self.order, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), ScalarError> {
        let lead = divisor.leading().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = lead.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.order), self.clone()));
        }
        let mut quot = vec![Cyclo::zero(self.order); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] -= &(&c * dj);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(self.order, quot), Poly::new(self.order, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, ScalarError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let order = self.order;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(order), Poly::zero(order));
        let (mut t0, mut t1) = (Poly::zero(order), Poly::one(order));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.order,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// p(x + a) by Horner composition.
    pub fn shift(&self, a: &Cyclo) -> Poly {
        let lin = Poly::new(self.order, vec![a.clone(), Cyclo::one(self.order)]);
        let mut acc = Poly::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Applies the Galois automorphism ζ ↦ ζ^j to every coefficient.
    pub fn galois(&self, j: u32) -> Poly {
        Poly::new(self.order, self.coeffs.iter().map(|c| c.galois(j)).collect())
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }
}

/// Φ_N as a polynomial over ℚ.
pub fn cyclotomic_polynomial(order: u32) -> Poly {
    assert!(order >= 1, "cyclotomic order must be positive");
    Poly::from_ints(1, &field_table(order).cyclotomic)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let (neg, body) = if c.is_rational() {
                let r = c.to_rational().unwrap();
                let neg = r.is_negative();
                let a = r.abs();
                let body = if i == 0 {
                    a.to_string()
                } else if a.is_one() {
                    mono.clone()
                } else {
                    format!("{a}*{mono}")
                };
                (neg, body)
            } else if i == 0 {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{mono}"))
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
