use crate::hopf::{group_algebra, hopf_commutator, map_factor, tensor_product, CayleyTable, HopfAlgebra};
use crate::linalg::{solve_combination, Matrix, SparseVec, Subspace};
use crate::repn::{
    hopf_center_of_rep, hopf_kernel_of_rep, irreps, is_central_character, is_inner_faithful, wedderburn, Irrep,
    Representation,
};
use crate::substructures::{augmentation_quotient, is_normal_hopf_subalgebra, quotient_by_hopf_ideal, zeta, HopfSub};

use super::{ratio, Claim, TheoremError, TheoremReport};

fn irrep_label(i: usize, v: &Representation) -> String {
    format!("V{i}, d={}", v.dim())
}

/// Every irreducible degree divides `dim H`.
pub fn check_fd(h: &HopfAlgebra) -> Result<TheoremReport, TheoremError> {
    let w = wedderburn(h)?;
    let bad: Vec<usize> = w.degrees.iter().copied().filter(|d| h.dim() % d != 0).collect();
    Ok(TheoremReport::new(h.name(), Claim::Fd)
        .witness("dim H", h.dim())
        .witness("degrees", w.degrees.clone())
        .require(bad.is_empty(), "non-dividing degrees", bad))
}

/// For each irrep: `dim 𝓗𝓩(V)` divides `dim H`, and `q = dim H / (d·dim 𝓗𝓩(V))`
/// is a positive integer.
pub fn check_main_theorem(h: &HopfAlgebra) -> Result<Vec<TheoremReport>, TheoremError> {
    let n = h.dim();
    irreps(h)?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let hz = hopf_center_of_rep(h, v)?;
            let d = v.degree();
            let q = ratio(n, d * hz.dim());
            let positive = q > ratio(0, 1);
            Ok(TheoremReport::new(h.name(), Claim::Main)
                .subject(irrep_label(i, v))
                .witness("d", d)
                .witness("dim HZ(V)", hz.dim())
                .witness("dim H / dim HZ(V)", ratio(n, hz.dim()))
                .witness("q", q.clone())
                .require(n % hz.dim() == 0, "dim HZ(V) does not divide dim H", hz.dim())
                .require(q.is_integer() && positive, "q is not a positive integer", q))
        })
        .collect()
}

/// Group case: `𝓗𝓩(V)` is spanned by the `g` with `ρ(g)` scalar, and `d`
/// divides `|G| / |Z(χ)|` and `|G| / |Z(G)|`.
pub fn check_schur_specialization(name: &str, g: &CayleyTable, field_order: u32) -> Result<TheoremReport, TheoremError> {
    let h = group_algebra(name, g, field_order)?;
    let order = g.order();
    let center = g.center().len();
    let mut report = TheoremReport::new(name, Claim::Schur).witness("|G|", order).witness("|Z(G)|", center);
    let mut degrees = Vec::new();
    let mut zchi_orders = Vec::new();
    for (i, v) in irreps(&h)?.iter().enumerate() {
        let zchi: Vec<usize> = (0..order).filter(|&x| v.matrix(x).scalar_value().is_some()).collect();
        let span = Subspace::span(order, field_order, zchi.iter().map(|&x| h.basis(x)));
        let hz = hopf_center_of_rep(&h, v)?;
        let d = v.degree();
        report = report
            .require(hz.space() == &span, "HZ(V) differs from span of Z(χ)", irrep_label(i, v))
            .require((order / zchi.len()) % d == 0 && order % zchi.len() == 0, "d does not divide |G|/|Z(χ)|", irrep_label(i, v))
            .require((order / center) % d == 0, "d does not divide |G|/|Z(G)|", irrep_label(i, v));
        degrees.push(d);
        zchi_orders.push(zchi.len());
    }
    Ok(report.witness("degrees", degrees).witness("|Z(χ)|", zchi_orders))
}

/// `kl = lk` for all `k ∈ K, l ∈ L` if and only if `[l, k] = ε(l)ε(k)·1`.
pub fn check_lemma_com(h: &HopfAlgebra, k: &HopfSub, l: &HopfSub) -> TheoremReport {
    let mut commute = None;
    let mut trivial = None;
    for (a, x) in k.space().basis().iter().enumerate() {
        for (b, y) in l.space().basis().iter().enumerate() {
            if commute.is_none() && h.mul(x, y) != h.mul(y, x) {
                commute = Some(vec![a, b]);
            }
            let e = &h.counit(y) * &h.counit(x);
            if trivial.is_none() && hopf_commutator(h, y, x) != h.one().scale(&e) {
                trivial = Some(vec![a, b]);
            }
        }
    }
    let mut report = TheoremReport::new(h.name(), Claim::Com)
        .subject(format!("dim K = {}, dim L = {}", k.dim(), l.dim()))
        .witness("(i) K and L commute", commute.is_none())
        .witness("(ii) [l,k] = ε(l)ε(k)1", trivial.is_none());
    if let Some(p) = &commute {
        report = report.witness("non-commuting basis pair", p.clone());
    }
    if let Some(p) = &trivial {
        report = report.witness("non-trivial commutator pair", p.clone());
    }
    let agree = commute.is_none() == trivial.is_none();
    report.require(agree, "(i) and (ii) disagree", "equivalence violated")
}

/// For inner faithful `V`: `𝓗𝓩(V) = ζ(H)`, and `[h, k]` acts on `V^{⊗n}` as
/// `ε(h)ε(k)·Id` for `n ≤ n_max`, all basis `h` and basis `k` of `𝓗𝓩(V)`.
pub fn check_lemma_inner_faithful(h: &HopfAlgebra, v: &Representation, n_max: usize) -> Result<TheoremReport, TheoremError> {
    let report = TheoremReport::new(h.name(), Claim::InnerFaithful).subject(format!("d={}", v.dim()));
    if !is_inner_faithful(h, v)? {
        let hk = hopf_kernel_of_rep(h, v)?;
        return Ok(report.witness("dim HKer V", hk.dim()).skipped("V is not inner faithful"));
    }
    let hz = hopf_center_of_rep(h, v)?;
    let z = zeta(h);
    let mut report = report
        .witness("dim HZ(V)", hz.dim())
        .witness("dim ζ(H)", z.dim())
        .require(z.space().contains_subspace(hz.space())?, "HZ(V) ⊄ ζ(H)", hz.dim())
        .require(hz.space().contains_subspace(z.space())?, "ζ(H) ⊄ HZ(V)", z.dim());
    let pairs: Vec<(SparseVec, crate::scalars::Cyclo)> = (0..h.dim())
        .flat_map(|i| {
            let b = h.basis(i);
            hz.space()
                .basis()
                .iter()
                .map(|k| (hopf_commutator(h, &b, k), &h.counit(&b) * &h.counit(k)))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut power = Representation::counit(h);
    for n in 0..=n_max {
        if n > 0 {
            power = power.tensor(h, v);
        }
        let dim = power.dim();
        if let Some(j) = pairs.iter().position(|(c, e)| power.act(c) != Matrix::scalar(dim, e)) {
            report = report.fail("failing (n, pair index)", vec![n, j]);
            break;
        }
    }
    Ok(report.witness("n_max", n_max).witness("pairs checked", pairs.len()))
}

/// `H̄ = H/𝓗Ker V`: `V` descends to an inner faithful irreducible of `H̄`,
/// the image of `𝓗𝓩(V)` lies in `ζ(H̄) = 𝓗𝓩_{H̄}(V)`, and
/// `dim H̄/ζ(H̄)⁺H̄` divides `dim H/𝓗𝓩(V)⁺H`.
pub fn check_hbar_chain(h: &HopfAlgebra, v: &Representation) -> Result<TheoremReport, TheoremError> {
    Irrep::new(h, v.clone())?;
    let hk = hopf_kernel_of_rep(h, v)?;
    let mut report = TheoremReport::new(h.name(), Claim::Hbar)
        .subject(format!("d={}", v.dim()))
        .witness("dim HKer V", hk.dim());
    let zero = Matrix::zeros(v.dim(), v.dim(), v.order());
    let descends = hk.space().basis().iter().all(|x| v.act(x) == zero);
    report = report.require(descends, "HKer V does not act by zero", hk.dim());
    let (hbar, q) = quotient_by_hopf_ideal(h, &hk)?;
    let matrices: Vec<Matrix> = (0..hbar.dim()).map(|k| v.matrix(q.lift_index(k)).clone()).collect();
    let vbar = match Representation::new(&hbar, matrices).and_then(|r| Irrep::new(&hbar, r)) {
        Ok(r) => r,
        Err(e) => return Ok(report.fail("V over H̄", e.to_string())),
    };
    let hz = hopf_center_of_rep(h, v)?;
    let zbar = zeta(&hbar);
    let hzbar = hopf_center_of_rep(&hbar, &vbar)?;
    let image = Subspace::span(hbar.dim(), hbar.order(), hz.space().basis().iter().map(|x| q.apply(x)));
    report = report
        .witness("dim H̄", hbar.dim())
        .witness("dim HZ(V)", hz.dim())
        .witness("dim ζ(H̄)", zbar.dim())
        .require(is_inner_faithful(&hbar, &vbar)?, "V is not inner faithful over H̄", hbar.dim())
        .require(zbar.space().contains_subspace(&image)?, "image of HZ(V) ⊄ ζ(H̄)", image.dim())
        .require(hzbar.space() == zbar.space(), "HZ_H̄(V) ≠ ζ(H̄)", hzbar.dim());
    for (alg, k, label) in [(h, &hz, "HZ(V) is not normal in H"), (&hbar, &zbar, "ζ(H̄) is not normal in H̄")] {
        if !is_normal_hopf_subalgebra(alg, k) {
            return Ok(report.fail(label, k.dim()));
        }
    }
    let (top, _) = augmentation_quotient(h, &hz)?;
    let (bottom, _) = augmentation_quotient(&hbar, &zbar)?;
    Ok(report
        .witness("dim H̄/ζ(H̄)⁺H̄", bottom.dim())
        .witness("dim H/HZ(V)⁺H", top.dim())
        .require(top.dim() % bottom.dim() == 0, "chain does not divide", ratio(top.dim(), bottom.dim())))
}

/// For semisimple `H` and each irrep with `χ_V ∈ 𝓩(H*)`: `d` divides
/// `dim H / dim 𝓗𝓩(V)`, and `χ_V⊗χ_V` is central in `(H⊗H)*`.
pub fn check_corollary_central_character(h: &HopfAlgebra) -> Result<TheoremReport, TheoremError> {
    let w = wedderburn(h)?;
    let report = TheoremReport::new(h.name(), Claim::CentralChar);
    if !w.radical.is_zero() {
        return Ok(report.witness("dim rad H", w.radical.dim()).skipped("H is not semisimple"));
    }
    let n = h.dim();
    let mut hh: Option<HopfAlgebra> = None;
    let mut checked = Vec::new();
    let mut not_central = Vec::new();
    let mut report = report;
    for (i, v) in w.irreps(h)?.iter().enumerate() {
        if !is_central_character(h, v.character()) {
            not_central.push(i);
            continue;
        }
        let hz = hopf_center_of_rep(h, v)?;
        let d = v.degree();
        report = report.require((n / hz.dim()) % d == 0 && n % hz.dim() == 0, "d does not divide dim H/dim HZ(V)", irrep_label(i, v));
        let hh = hh.get_or_insert_with(|| tensor_product(h, h).expect("same field"));
        let chi2 = v.character().kron(v.character(), n);
        report = report.require(is_central_character(hh, &chi2), "χ⊗χ is not central in (H⊗H)*", irrep_label(i, v));
        checked.push(i);
    }
    Ok(report.witness("central characters", checked).witness("non-central characters", not_central))
}

/// `RΔ(h)R⁻¹ = Δ^op(h)`, `(Δ⊗id)R = R₁₃R₂₃`, `(id⊗Δ)R = R₁₃R₁₂`.
pub fn verify_quasitriangular(h: &HopfAlgebra, r: &SparseVec) -> Result<TheoremReport, TheoremError> {
    let n = h.dim();
    let order = h.order();
    let one2 = h.one_tensor(2);
    let columns: Vec<SparseVec> = (0..n * n).map(|j| h.mul_tensor(r, &SparseVec::unit(j, order), 2)).collect();
    let rinv = solve_combination(&columns, &one2, order).ok_or(TheoremError::NotInvertible)?;
    if h.mul_tensor(&rinv, r, 2) != one2 {
        return Err(TheoremError::NotInvertible);
    }
    let mut report = TheoremReport::new(h.name(), Claim::Quasitriangular).witness("nnz R", r.nnz());
    if let Some(i) = (0..n).find(|&i| {
        let b = h.basis(i);
        h.mul_tensor(&h.mul_tensor(r, &h.comult(&b), 2), &rinv, 2) != h.comult_op(&b)
    }) {
        report = report.fail("RΔ(b)R⁻¹ ≠ Δ^op(b) at basis", i);
    }
    let one = h.one();
    let mut r13 = Vec::new();
    for (idx, c) in r.iter() {
        let t = h.basis(idx / n).kron(&one, n).kron(&h.basis(idx % n), n);
        r13.extend(t.into_entries().into_iter().map(|(k, x)| (k, c * &x)));
    }
    let r13 = SparseVec::from_terms(r13);
    let r12 = r.kron(&one, n);
    let r23 = one.kron(r, n * n);
    let lhs = map_factor(r, n, 2, 0, n * n, |i| h.comult_basis(i));
    let rhs = h.mul_tensor(&r13, &r23, 3);
    report = report.require(lhs == rhs, "(Δ⊗id)R ≠ R13 R23", "first hexagon");
    let lhs = map_factor(r, n, 2, 1, n * n, |i| h.comult_basis(i));
    let rhs = h.mul_tensor(&r13, &r12, 3);
    Ok(report.require(lhs == rhs, "(id⊗Δ)R ≠ R13 R12", "second hexagon"))
}
