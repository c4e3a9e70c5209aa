//! Factorization of squarefree primitive integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fp::{self, FpPoly};

pub(crate) type ZPoly = Vec<BigInt>;

fn trim(a: &mut ZPoly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut out: ZPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect();
    trim(&mut out);
    out
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut out: ZPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    trim(&mut out);
    out
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

/// Symmetric residues in (−m/2, m/2].
fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Division by a polynomial whose leading coefficient is a unit mod `m`.
fn divrem_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = reduce(a, m);
    let db = b.len() - 1;
    let lead_inv = mod_inverse(&b[db], m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (&r[dr] * &lead_inv).mod_floor(m);
        for (i, y) in b.iter().enumerate() {
            let k = dr - db + i;
            r[k] = (&r[k] - &c * y).mod_floor(m);
        }
        q[dr - db] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient is not a unit");
    e.x.mod_floor(m)
}

fn to_fp(a: &ZPoly, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut out: FpPoly = a.iter().map(|c| c.mod_floor(&pb).to_u64().expect("small")).collect();
    fp::trim(&mut out);
    out
}

fn from_fp(a: &FpPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime ≥ 5 not dividing the leading coefficient and keeping `f`
/// squarefree modulo p.
pub(crate) fn choose_prime(f: &ZPoly) -> u64 {
    let lead = f.last().expect("nonzero");
    (5u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            if (lead % BigInt::from(p)).is_zero() {
                return false;
            }
            let fp_ = fp::monic(&to_fp(f, p), p);
            fp::deg(&fp::gcd(&fp_, &fp::derivative(&fp_, p), p)) == Some(0)
        })
        .expect("some prime works")
}

/// One quadratic Hensel step: from `f ≡ g·h (mod m)`, `s·g + t·h ≡ 1 (mod m)`
/// with `h` monic, to the same relations modulo `m²`.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = reduce(&zsub(f, &zmul(g, h)), &m2);
    let (q, r) = divrem_mod(&zmul(s, &e), h, &m2);
    let g2 = reduce(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h2 = reduce(&zadd(h, &r), &m2);
    let one: ZPoly = vec![BigInt::one()];
    let b = reduce(&zsub(&zadd(&zmul(s, &g2), &zmul(t, &h2)), &one), &m2);
    let (c, d) = divrem_mod(&zmul(s, &b), &h2, &m2);
    let s2 = reduce(&zsub(s, &d), &m2);
    let t2 = reduce(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factors of `f` to monic factors modulo `p^(2^k) ≥ bound`.
fn hensel_lift(f: &ZPoly, factors: &[FpPoly], p: u64, bound: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while &modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let lead = f.last().unwrap().clone();
    let mut target = f.clone();
    let mut lifted = Vec::with_capacity(factors.len());
    for (k, h0) in factors.iter().enumerate() {
        if k + 1 == factors.len() {
            // the remaining cofactor, made monic modulo the final modulus
            let inv = mod_inverse(&lead, &modulus);
            lifted.push(reduce(&target.iter().map(|c| c * &inv).collect(), &modulus));
            break;
        }
        // g0 = lead · ∏ remaining factors (mod p)
        let mut g0: FpPoly = vec![(lead.mod_floor(&pb)).to_u64().unwrap()];
        for other in &factors[k + 1..] {
            g0 = fp::mul(&g0, other, p);
        }
        let (one, s0, t0) = fp::ext_gcd(&g0, h0, p);
        debug_assert_eq!(one, vec![1]);
        let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(h0), from_fp(&s0), from_fp(&t0));
        let mut m = pb.clone();
        while m < modulus {
            (g, h, s, t) = hensel_step(&target, &g, &h, &s, &t, &m);
            m = &m * &m;
        }
        lifted.push(h);
        target = g;
    }
    (lifted, modulus)
}

fn exact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len() - 1;
    let mut r = a.clone();
    if r.len() <= db {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            let k = dr - db + i;
            r[k] = &r[k] - &c * y;
        }
        q[dr - db] = c;
        trim(&mut r);
    }
    r.is_empty().then_some(q)
}

pub(crate) fn primitive_part(a: &ZPoly) -> ZPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: ZPoly = a.iter().map(|c| c / &g).collect();
    if out.last().is_some_and(Signed::is_negative) {
        out = out.into_iter().map(|c| -c).collect();
    }
    out
}

/// Coefficient bound for factors (Landau–Mignotte, generously rounded up),
/// times the leading coefficient, doubled for symmetric residues.
fn lift_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let lead = f.last().unwrap().abs();
    (BigInt::one() << n) * norm * lead * 2
}

/// Irreducible factors over ℤ of a squarefree primitive polynomial with
/// positive leading coefficient.
pub(crate) fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let p = choose_prime(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let fpoly = fp::monic(&to_fp(f, p), p);
    let modular = fp::factor_squarefree(&fpoly, p, &mut rng);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let (lifted, m) = hensel_lift(f, &modular, p, &lift_bound(f));
    recombine(f, lifted, &m)
}

fn recombine(f: &ZPoly, mut pool: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut found = None;
        for subset in Subsets::new(pool.len(), size) {
            let lead = rest.last().unwrap().clone();
            let mut g: ZPoly = vec![lead.clone()];
            for &i in &subset {
                g = reduce(&zmul(&g, &pool[i]), m);
            }
            let g = primitive_part(&symmetric(&g, m));
            // cheap constant-term filter before trial division
            if !g[0].is_zero() && !(&rest[0] % &g[0]).is_zero() {
                continue;
            }
            if let Some(q) = exact_div(&rest, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                rest = q;
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    out.push(primitive_part(&rest));
    out
}

/// k-subsets of 0..n in lexicographic order.
struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut nxt = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - k + i {
                nxt[i] += 1;
                for j in i + 1..k {
                    nxt[j] = nxt[j - 1] + 1;
                }
                self.current = Some(nxt);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(xs: &[i64]) -> ZPoly {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut v: Vec<ZPoly>) -> Vec<ZPoly> {
        v.sort();
        v
    }

    #[test]
    fn subsets_enumerate() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Subsets::new(3, 0).count(), 1);
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        // splits into linear or quadratic factors modulo every prime
        assert_eq!(factor_squarefree_z(&z(&[1, 0, 0, 0, 1])), vec![z(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn x6_minus_1() {
        let fs = sorted(factor_squarefree_z(&z(&[-1, 0, 0, 0, 0, 0, 1])));
        assert_eq!(fs, sorted(vec![z(&[-1, 1]), z(&[1, 1]), z(&[1, 1, 1]), z(&[1, -1, 1])]));
    }

    #[test]
    fn non_monic() {
        // (2x + 3)(3x^2 - 5) = 6x^3 + 9x^2 - 10x - 15
        let fs = sorted(factor_squarefree_z(&z(&[-15, -10, 9, 6])));
        assert_eq!(fs, sorted(vec![z(&[3, 2]), z(&[-5, 0, 3])]));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but reducible mod every prime
        assert_eq!(factor_squarefree_z(&z(&[1, 0, -10, 0, 1])).len(), 1);
    }

    #[test]
    fn large_coefficients_lift() {
        // (x - 1000)(x + 999)(x^2 + 7)
        let f = zmul(&zmul(&z(&[-1000, 1]), &z(&[999, 1])), &z(&[7, 0, 1]));
        let fs = sorted(factor_squarefree_z(&f));
        assert_eq!(fs, sorted(vec![z(&[-1000, 1]), z(&[999, 1]), z(&[7, 0, 1])]));
    }
}
