//! Elements of the cyclotomic field ℚ(ζ_N) in the power basis modulo Φ_N.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use smallvec::SmallVec;

use super::rational::Rational;
use super::ScalarError;

/// Precomputed data for one field order: Φ_N and the reductions of ζ^e, e < N.
#[derive(Debug)]
pub(crate) struct FieldTable {
    pub phi: usize,
    /// Coefficients of Φ_N, constant term first; length φ(N) + 1.
    pub cyclotomic: Vec<i64>,
    /// Power-basis coordinates of ζ^e for 0 ≤ e < N.
    pub zeta_powers: Vec<Vec<i64>>,
}

const SMALL_ORDERS: usize = 129;
static SMALL_TABLES: [OnceLock<Arc<FieldTable>>; SMALL_ORDERS] =
    [const { OnceLock::new() }; SMALL_ORDERS];
static LARGE_TABLES: OnceLock<RwLock<HashMap<u32, Arc<FieldTable>>>> = OnceLock::new();

pub(crate) fn field_table(order: u32) -> Arc<FieldTable> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if (order as usize) < SMALL_ORDERS {
        return SMALL_TABLES[order as usize]
            .get_or_init(|| Arc::new(build_table(order)))
            .clone();
    }
    let map = LARGE_TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = map.read().expect("table lock").get(&order) {
        return t.clone();
    }
    let t = Arc::new(build_table(order));
    map.write().expect("table lock").insert(order, t.clone());
    t
}

/// Φ_N over ℤ: divide x^N − 1 by Φ_d for every proper divisor d of N.
pub(crate) fn cyclotomic_coeffs(order: u32) -> Vec<i64> {
    let n = order as usize;
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..order {
        if order % d == 0 {
            let div = field_table(d).cyclotomic.clone();
            num = exact_monic_division(&num, &div);
        }
    }
    num
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division not exact");
    quot
}

fn build_table(order: u32) -> FieldTable {
    let cyclotomic = cyclotomic_coeffs(order);
    let phi = cyclotomic.len() - 1;
    let mut zeta_powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..order {
        zeta_powers.push(cur.clone());
        // multiply by x and reduce by the monic Φ_N
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        if top != 0 {
            for j in 0..phi {
                next[j] -= top * cyclotomic[j];
            }
        }
        cur = next;
    }
    FieldTable {
        phi,
        cyclotomic,
        zeta_powers,
    }
}

/// Euler's totient.
pub fn euler_phi(order: u32) -> usize {
    let mut n = order;
    let mut result = order;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub(crate) type Coeffs = SmallVec<[Rational; 4]>;

/// An element of ℚ(ζ_N), N = `order`.
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Coeffs,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

impl Cyclo {
    pub fn zero(order: u32) -> Self {
        let phi = field_table(order).phi;
        Cyclo {
            order,
            coeffs: SmallVec::from_elem(Rational::zero(), phi),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(n))
    }

    /// Builds a value from power-basis coordinates; the length must be φ(N).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self, ScalarError> {
        let phi = field_table(order).phi;
        if coeffs.len() != phi {
            return Err(ScalarError::WrongLength {
                order,
                expected: phi,
                found: coeffs.len(),
            });
        }
        Ok(Cyclo {
            order,
            coeffs: coeffs.into_iter().collect(),
        })
    }

    /// ζ_N^e, reduced.
    pub fn zeta_pow(order: u32, e: i64) -> Self {
        let t = field_table(order);
        let idx = e.rem_euclid(order as i64) as usize;
        Cyclo {
            order,
            coeffs: t.zeta_powers[idx].iter().map(|&c| Rational::from_integer(c)).collect(),
        }
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses `self` in ℚ(ζ_N) via ζ_M ↦ ζ_N^{N/M}.
    pub fn embed(&self, order: u32) -> Result<Cyclo, ScalarError> {
        if order == self.order {
            return Ok(self.clone());
        }
        if order % self.order != 0 {
            return Err(ScalarError::NotEmbeddable {
                from: self.order,
                to: order,
            });
        }
        let step = (order / self.order) as i64;
        let t = field_table(order);
        let mut out = Cyclo::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((k as i64) * step).rem_euclid(order as i64) as usize;
            for (j, &z) in t.zeta_powers[idx].iter().enumerate() {
                if z != 0 {
                    out.coeffs[j] = &out.coeffs[j] + &(c * &Rational::from_integer(z));
                }
            }
        }
        Ok(out)
    }

    /// The Galois automorphism ζ ↦ ζ^j (j coprime to N).
    pub fn galois(&self, j: u32) -> Cyclo {
        debug_assert_eq!(gcd_u32(j % self.order.max(1), self.order), 1);
        let t = field_table(self.order);
        let mut out = Cyclo::zero(self.order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((k as u64 * j as u64) % self.order as u64) as usize;
            for (i, &z) in t.zeta_powers[idx].iter().enumerate() {
                if z != 0 {
                    out.coeffs[i] = &out.coeffs[i] + &(c * &Rational::from_integer(z));
                }
            }
        }
        out
    }

    /// Exponents j in [1, N) with gcd(j, N) = 1: the Galois group of ℚ(ζ_N)/ℚ.
    pub fn galois_exponents(order: u32) -> Vec<u32> {
        (1..order.max(2)).filter(|&j| gcd_u32(j, order) == 1).collect()
    }

    fn common_order(a: u32, b: u32) -> Result<u32, ScalarError> {
        if a == b || b % a == 0 {
            Ok(b)
        } else if a % b == 0 {
            Ok(a)
        } else {
            Err(ScalarError::IncompatibleOrders(a, b))
        }
    }

    /// Brings both operands into a common field when one order divides the other.
    fn aligned<'a>(
        a: &'a Cyclo,
        b: &'a Cyclo,
    ) -> Result<(std::borrow::Cow<'a, Cyclo>, std::borrow::Cow<'a, Cyclo>), ScalarError> {
        use std::borrow::Cow;
        if a.order == b.order {
            return Ok((Cow::Borrowed(a), Cow::Borrowed(b)));
        }
        let n = Self::common_order(a.order, b.order)?;
        let a = if a.order == n { Cow::Borrowed(a) } else { Cow::Owned(a.embed(n)?) };
        let b = if b.order == n { Cow::Borrowed(b) } else { Cow::Owned(b.embed(n)?) };
        Ok((a, b))
    }

    pub fn checked_add(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        let (a, b) = Self::aligned(self, other)?;
        Ok(Cyclo {
            order: a.order,
            coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        let (a, b) = Self::aligned(self, other)?;
        Ok(Cyclo {
            order: a.order,
            coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x - y).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        let (a, b) = Self::aligned(self, other)?;
        Ok(a.mul_same(&b))
    }

    fn mul_same(&self, other: &Cyclo) -> Cyclo {
        let phi = self.coeffs.len();
        if phi == 1 {
            return Cyclo {
                order: self.order,
                coeffs: smallvec::smallvec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let t = field_table(self.order);
        let n = self.order as usize;
        let mut out: Coeffs = SmallVec::from_elem(Rational::zero(), phi);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let e = (i + j) % n;
                if e < phi {
                    out[e] = &out[e] + &prod;
                } else {
                    for (k, &z) in t.zeta_powers[e].iter().enumerate() {
                        if z == 1 {
                            out[k] = &out[k] + &prod;
                        } else if z == -1 {
                            out[k] = &out[k] - &prod;
                        } else if z != 0 {
                            out[k] = &out[k] + &(&prod * &Rational::from_integer(z));
                        }
                    }
                }
            }
        }
        Cyclo {
            order: self.order,
            coeffs: out,
        }
    }

    /// Multiplies every coordinate by a rational.
    pub fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Cyclo, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyclo::from_rational(self.order, self.coeffs[0].recip()?));
        }
        let t = field_table(self.order);
        let modulus: Vec<Rational> = t.cyclotomic.iter().map(|&c| Rational::from_integer(c)).collect();
        let a: Vec<Rational> = self.coeffs.to_vec();
        let (g, u) = qpoly::ext_gcd_left(&a, &modulus);
        // Φ_N is irreducible and a ≠ 0 mod Φ_N, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip()?;
        let mut coeffs: Coeffs = u.iter().map(|c| c * &ginv).collect();
        coeffs.resize(t.phi, Rational::zero());
        Ok(Cyclo {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        let mut acc = Cyclo::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact coordinate strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order / gcd_u32(self.order, other.order) * other.order;
        match (self.embed(l), other.embed(l)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclo {}

impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.coeffs.iter().cmp(other.coeffs.iter()))
    }
}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.checked_add(rhs).expect("incompatible cyclotomic orders")
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.checked_sub(rhs).expect("incompatible cyclotomic orders")
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.order == rhs.order {
            return self.mul_same(rhs);
        }
        self.checked_mul(rhs).expect("incompatible cyclotomic orders")
    }
}

impl<'a> Div<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: &Cyclo) -> Cyclo {
        self.checked_div(rhs).expect("cyclotomic division failed")
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                if !b.is_zero() {
                    *a = &*a + b;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                if !b.is_zero() {
                    *a = &*a - b;
                }
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl fmt::Display for Cyclo {
    /// GAP-style rendering: `1/2 + 3*E(8)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = match k {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, k),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                z
            } else if *c == Rational::from_integer(-1) {
                format!("-{z}")
            } else {
                format!("{c}*{z}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dense polynomials over ℚ as coefficient vectors (constant term first),
/// used only for inversion modulo Φ_N.
pub(crate) mod qpoly {
    use crate::scalars::Rational;

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Rational::is_zero) {
            p.pop();
        }
    }

    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        assert!(!b.is_empty(), "polynomial division by zero");
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = b.last().unwrap().recip().unwrap();
        let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = &r[shift + i] - &(&c * bi);
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out: Vec<Rational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                &x - &y
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Returns (g, u) with u·a ≡ g (mod m), g = gcd(a, m) up to a unit.
    pub fn ext_gcd_left(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r0 = m.to_vec();
        trim(&mut r0);
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        (r0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), vec![1, 1]);
        assert_eq!(cyclotomic_coeffs(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn totient_matches_degree() {
        for n in 1..=24u32 {
            assert_eq!(euler_phi(n), cyclotomic_coeffs(n).len() - 1, "N = {n}");
        }
    }

    #[test]
    fn zeta_powers_are_periodic() {
        for n in [1u32, 2, 3, 4, 5, 8, 12, 24] {
            let z = Cyclo::zeta(n);
            assert!(z.pow(n).is_one(), "ζ_{n}^{n} = 1");
            assert_eq!(Cyclo::zeta_pow(n, -1), Cyclo::zeta_pow(n, n as i64 - 1));
        }
    }

    #[test]
    fn i_squared() {
        let i = Cyclo::zeta(4);
        assert_eq!(&i * &i, Cyclo::from_int(4, -1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let z = Cyclo::zeta(3);
        let s = &(&Cyclo::one(3) + &z) + &z.pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn eighth_root_product() {
        // (1+ζ)(1−ζ) = 1 − ζ²
        let z = Cyclo::zeta(8);
        let one = Cyclo::one(8);
        let lhs = &(&one + &z) * &(&one - &z);
        assert_eq!(lhs, &one - &z.pow(2));
    }

    #[test]
    fn inverses() {
        assert!(Cyclo::one(8).inv().unwrap().is_one());
        let z = Cyclo::zeta(8);
        assert_eq!(z.inv().unwrap(), -Cyclo::zeta_pow(8, 3));
        assert_eq!(z.inv().unwrap(), Cyclo::zeta_pow(8, 7));
        let a = &Cyclo::one(4) + &Cyclo::zeta(4);
        let expect = (&Cyclo::one(4) - &Cyclo::zeta(4)).scale(&q(1, 2));
        assert_eq!(a.inv().unwrap(), expect);
        assert_eq!(Cyclo::zero(4).inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn embedding() {
        let r = Cyclo::from_rational(1, q(3, 2));
        assert_eq!(r.embed(4).unwrap(), Cyclo::from_rational(4, q(3, 2)));
        let m1 = Cyclo::zeta(2);
        assert_eq!(m1.embed(8).unwrap(), Cyclo::from_int(8, -1));
        let i = Cyclo::zeta(4).embed(8).unwrap();
        assert_eq!(i, Cyclo::zeta_pow(8, 2));
        assert_eq!(&i * &i, Cyclo::from_int(8, -1));
        assert!(Cyclo::zeta(3).embed(8).is_err());
    }

    #[test]
    fn mixed_orders_promote() {
        let half = Cyclo::from_rational(1, q(1, 2));
        let z = Cyclo::zeta(8);
        assert_eq!((&half * &z).order(), 8);
        assert!(Cyclo::zeta(3).checked_add(&Cyclo::zeta(4)).is_err());
        assert_eq!(Cyclo::one(1), Cyclo::one(8));
    }

    #[test]
    fn galois_action() {
        let z = Cyclo::zeta(8);
        assert_eq!(z.galois(3), Cyclo::zeta_pow(8, 3));
        assert_eq!(Cyclo::galois_exponents(8), vec![1, 3, 5, 7]);
        assert_eq!(Cyclo::galois_exponents(1), vec![1]);
    }

    #[test]
    fn display() {
        let x = &Cyclo::from_rational(8, q(1, 2)) - &Cyclo::zeta_pow(8, 2);
        assert_eq!(x.to_string(), "1/2 - E(8)^2");
        assert_eq!(Cyclo::zero(3).to_string(), "0");
    }
}
