use crate::hopf::{tensor_power, HopfAlgebra};
use crate::linalg::{left_kernel, linear_combination, Matrix, SparseVec, Subspace};
use crate::repn::Representation;
use crate::substructures::{quotient_by_hopf_ideal, sub_hopf_algebra, zeta, HopfIdealSub, HopfSub, IdealCertificate, QuotientMap, SubError};

use super::{ratio, Claim, SizeCaps, TheoremError, TheoremReport};

/// `H_n = H^{⊗n}/(Ker μ_n)H^{⊗n}` with its intermediate data.
#[derive(Clone, Debug)]
pub struct HnData {
    pub n: usize,
    pub zeta: HopfSub,
    /// `ζ(H)` as a Hopf algebra on the echelon basis of `ζ(H)`
    pub zeta_algebra: HopfAlgebra,
    /// `μ_n(e_J)` for each basis element of `ζ(H)^{⊗n}`, in `ζ(H)` coordinates
    pub mu_n: Vec<SparseVec>,
    pub ker_mu_n: HopfIdealSub,
    pub tensor: HopfAlgebra,
    pub ideal_in_tensor: HopfIdealSub,
    pub hn: HopfAlgebra,
    pub quotient: QuotientMap,
}

fn split_digits(mut idx: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for d in out.iter_mut().rev() {
        *d = idx % base;
        idx /= base;
    }
    out
}

pub fn build_hn(h: &HopfAlgebra, n: usize, caps: SizeCaps) -> Result<HnData, TheoremError> {
    assert!(n >= 1, "H_n needs n ≥ 1");
    let d = h.dim();
    let size = d.checked_pow(n as u32).unwrap_or(usize::MAX);
    if size > caps.full {
        return Err(TheoremError::SizeCap {
            what: "dim H^n",
            size,
            cap: caps.full,
        });
    }
    let z = zeta(h);
    let delta = z.dim();
    let zh = sub_hopf_algebra(h, &z)?;
    let zt = tensor_power(&zh, n);
    let mu: Vec<SparseVec> = (0..zt.dim())
        .map(|j| {
            let parts = split_digits(j, delta, n);
            parts.iter().skip(1).fold(zh.basis(parts[0]), |acc, &p| zh.mul(&acc, &zh.basis(p)))
        })
        .collect();
    let apply_mu = |x: &SparseVec| linear_combination(x.iter().map(|(j, c)| (c, &mu[*j])));
    for a in 0..zt.dim() {
        for b in 0..zt.dim() {
            if apply_mu(zt.mult_basis(a, b)) != zh.mul(&mu[a], &mu[b]) {
                return Err(SubError::CertificateFailed {
                    condition: "μ_n is an algebra map",
                    witness: a,
                }
                .into());
            }
        }
    }
    let ker = left_kernel(&mu, h.order());
    let ker_mu_n = HopfIdealSub::certify(&zt, ker, true)?;

    // ι^{⊗n}: ζ(H)^{⊗n} → H^{⊗n}
    let rows = z.space().basis();
    let embed = |j: usize| {
        let parts = split_digits(j, delta, n);
        parts.iter().skip(1).fold(rows[parts[0]].clone(), |acc, &p| acc.kron(&rows[p], d))
    };
    let ht = if n == 1 { h.clone() } else { tensor_power(h, n) };
    let mut ideal = Subspace::zero(ht.dim(), h.order());
    for x in ker_mu_n.space().basis() {
        let lifted = linear_combination(
            x.iter().map(|(j, c)| (c, embed(*j))).collect::<Vec<_>>().iter().map(|(c, v)| (*c, v)),
        );
        for k in 0..ht.dim() {
            ideal.insert(ht.mul(&lifted, &ht.basis(k)));
        }
    }
    let ideal_in_tensor = HopfIdealSub::certify(&ht, ideal, size <= caps.coideal)?;
    let name = format!("{}_{n}", h.name());
    let (hn, quotient) = if ideal_in_tensor.space().is_zero() {
        (ht.clone().with_name(name), QuotientMap::new(ideal_in_tensor.space()))
    } else {
        let (q, map) = quotient_by_hopf_ideal(&ht, &ideal_in_tensor)?;
        (q.with_name(name), map)
    };
    Ok(HnData {
        n,
        zeta: z,
        zeta_algebra: zh,
        mu_n: mu,
        ker_mu_n,
        tensor: ht,
        ideal_in_tensor,
        hn,
        quotient,
    })
}

/// Exponent in superscript digits; empty for 1.
fn superscript(e: usize) -> String {
    if e == 1 {
        return String::new();
    }
    e.to_string()
        .chars()
        .map(|c| ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'][c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn certificate_note(report: TheoremReport, data: &HnData) -> TheoremReport {
    match data.ideal_in_tensor.certificate() {
        IdealCertificate::Full => report,
        IdealCertificate::Partial => report.partial("coideal condition of (Ker μ_n)H^n not checked above the size cap"),
    }
}

/// `dim H_n = d^n / δ^{n−1}` and `dim (Ker μ_n)H^{⊗n} = d^n − d^n/δ^{n−1}`.
pub fn check_hn_dimension(h: &HopfAlgebra, n: usize, caps: SizeCaps) -> Result<TheoremReport, TheoremError> {
    let data = build_hn(h, n, caps)?;
    let d = h.dim();
    let delta = data.zeta.dim();
    let dn = d.pow(n as u32);
    let expected = ratio(dn, delta.pow(n as u32 - 1));
    let built = data.hn.dim();
    let report = TheoremReport::new(h.name(), Claim::Hn)
        .subject(format!("n={n}"))
        .witness("d", d)
        .witness("δ", delta)
        .witness("dim H_n", built)
        .witness("d^n/δ^(n-1)", expected.clone())
        .witness("formula", format!("{built} = {d}{}/{delta}{}", superscript(n), superscript(n - 1)))
        .witness("dim (Ker μ_n)H^n", data.ideal_in_tensor.dim())
        .require(expected == ratio(built, 1), "dim H_n ≠ d^n/δ^(n-1)", built)
        .require(ratio(dn - data.ideal_in_tensor.dim(), 1) == expected, "dim (Ker μ_n)H^n ≠ d^n − d^n/δ^(n-1)", data.ideal_in_tensor.dim());
    Ok(certificate_note(report, &data))
}

/// `ρ^{⊗n}(b_{j_1}⊗…⊗b_{j_n})` for the basis index `j` of `H^{⊗n}`.
fn tensor_matrix(v: &Representation, j: usize, d: usize, n: usize) -> Matrix {
    let parts = split_digits(j, d, n);
    parts.iter().skip(1).fold(v.matrix(parts[0]).clone(), |acc, &p| acc.kron(v.matrix(p)))
}

/// `V^{⊗n}` is a well-defined irreducible representation of `H_n`.
pub fn check_vn_irreducible_over_hn(h: &HopfAlgebra, v: &Representation, n: usize, caps: SizeCaps) -> Result<TheoremReport, TheoremError> {
    let data = build_hn(h, n, caps)?;
    let d = h.dim();
    let mats: Vec<Matrix> = (0..data.tensor.dim()).map(|j| tensor_matrix(v, j, d, n)).collect();
    let vn = v.dim().pow(n as u32);
    let zero = Matrix::zeros(vn, vn, h.order());
    let act = |x: &SparseVec| {
        let mut out = zero.clone();
        for (j, c) in x.iter() {
            out.add_scaled(c, &mats[*j]);
        }
        out
    };
    let mut report = TheoremReport::new(h.name(), Claim::Hn)
        .subject(format!("V^{n}, d={}", v.dim()))
        .witness("dim V^n", vn)
        .witness("dim H_n", data.hn.dim());
    if let Some(a) = data.ideal_in_tensor.space().basis().iter().position(|x| act(x) != zero) {
        return Ok(report.fail("(Ker μ_n)H^n does not act by zero, basis vector", a));
    }
    let on_hn: Vec<Matrix> = (0..data.hn.dim()).map(|k| mats[data.quotient.lift_index(k)].clone()).collect();
    let rep = match Representation::new(&data.hn, on_hn) {
        Ok(r) => r,
        Err(e) => return Ok(report.fail("V^n over H_n", e.to_string())),
    };
    let image = rep.image_dim();
    report = report
        .witness("image dimension", image)
        .require(image == vn * vn, "image of H_n is not all of End(V^n)", image);
    Ok(certificate_note(report, &data))
}
