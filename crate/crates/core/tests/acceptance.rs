//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hopfcenter::format::catalog;
use hopfcenter::hopf::{named_group, taft, verify_axioms, CayleyTable, NamedGroup};
use hopfcenter::repn::{
    hopf_center_of_rep, irreps, is_inner_faithful, radical, wedderburn, RepnError,
};
use hopfcenter::scalars::Rational;
use hopfcenter::substructures::{zeta, HopfSub};
use hopfcenter::theorems::{
    build_hn, check_hn_dimension, check_lemma_com, check_lemma_inner_faithful, check_main_theorem,
    check_schur_specialization, check_vn_irreducible_over_hn, SizeCaps, Verdict, WitnessValue,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(report: &hopfcenter::theorems::TheoremReport, key: &str) -> Result<i64, String> {
    match report.get(key) {
        Some(WitnessValue::Int(n)) => Ok(*n),
        other => Err(format!("{}: witness {key} is {other:?}", report.instance)),
    }
}

fn field_order(g: NamedGroup) -> u32 {
    if g == NamedGroup::Q8 {
        4
    } else {
        1
    }
}

fn criterion_axioms() -> Outcome {
    let start = Instant::now();
    let entries = catalog();
    for e in &entries {
        let report = verify_axioms(&e.hopf);
        if let Some(c) = report.first_failure() {
            return Err(format!("{}: {} fails at {:?}", e.stem, c.axiom, c.witness));
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} instances, 9 axioms each, {elapsed:.2?}", entries.len()))
}

/// Conjugacy classes and the order of the abelianization, from the table.
fn class_data(g: &CayleyTable) -> (usize, usize) {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for a in 0..n {
        if seen[a] {
            continue;
        }
        classes += 1;
        for x in 0..n {
            seen[g.mul(g.mul(x, a), g.inverse(x))] = true;
        }
    }
    let commutators: Vec<usize> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))))
        .collect();
    let derived = g.generated_subgroup(&commutators).len();
    (classes, n / derived)
}

fn criterion_schur() -> Outcome {
    let classical: [(NamedGroup, &[usize]); 4] = [
        (NamedGroup::Q8, &[1, 1, 1, 1, 2]),
        (NamedGroup::D4, &[1, 1, 1, 1, 2]),
        (NamedGroup::S3, &[1, 1, 2]),
        (NamedGroup::S4, &[1, 1, 2, 3, 3]),
    ];
    let mut notes = Vec::new();
    for (g, table) in classical {
        let cayley = g.cayley();
        let order = cayley.order();
        let center = cayley.center().len();
        let h = named_group(g, field_order(g));
        let mut degrees = wedderburn(&h).map_err(|e| format!("{g}: {e}"))?.degrees;
        degrees.sort_unstable();
        ensure(degrees == table, || format!("{g}: degrees {degrees:?}, classical {table:?}"))?;
        let (classes, linear) = class_data(&cayley);
        ensure(degrees.len() == classes, || format!("{g}: {} irreps but {classes} classes", degrees.len()))?;
        ensure(degrees.iter().filter(|&&d| d == 1).count() == linear, || format!("{g}: linear characters ≠ |G/[G,G]|"))?;
        ensure(degrees.iter().map(|d| d * d).sum::<usize>() == order, || format!("{g}: Σd² ≠ |G|"))?;
        for &d in &degrees {
            ensure((order / center) % d == 0, || format!("{g}: {d} does not divide |G|/|Z(G)| = {}", order / center))?;
        }
        let r = check_schur_specialization(&g.to_string(), &cayley, field_order(g)).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, || r.to_string())?;
        notes.push(format!("{g}: {degrees:?} | {}", order / center));
    }
    Ok(notes.join("; "))
}

fn criterion_main_theorem() -> Outcome {
    let mut instances = 0;
    let mut rows = 0;
    for e in catalog() {
        if !radical(&e.hopf).is_zero() {
            continue;
        }
        instances += 1;
        let n = e.hopf.dim();
        let reports = check_main_theorem(&e.hopf).map_err(|err| format!("{}: {err}", e.stem))?;
        for r in reports {
            ensure(r.verdict == Verdict::Pass, || r.to_string())?;
            let d = int(&r, "d")? as usize;
            let hz = int(&r, "dim HZ(V)")? as usize;
            ensure(n % (d * hz) == 0, || format!("{}: {d}·{hz} does not divide {n}", e.stem))?;
            let q = Rational::new(n as i64, (d * hz) as i64);
            ensure(r.get("q") == Some(&WitnessValue::Ratio(q.clone())) && q.is_integer() && !q.is_negative() && !q.is_zero(), || {
                format!("{}: q = {q}", e.stem)
            })?;
            rows += 1;
        }
    }
    Ok(format!("{instances} semisimple instances, {rows} irreps"))
}

fn criterion_hn() -> Outcome {
    let start = Instant::now();
    let caps = SizeCaps::default();
    let mut notes = Vec::new();
    let cases = [
        (NamedGroup::Q8, 2, 32),
        (NamedGroup::D4, 2, 32),
        (NamedGroup::S3, 1, 6),
        (NamedGroup::S3, 2, 36),
        (NamedGroup::S3, 3, 216),
    ];
    for (g, n, expected) in cases {
        let h = named_group(g, field_order(g));
        let r = check_hn_dimension(&h, n, caps).map_err(|e| format!("{g} n={n}: {e}"))?;
        ensure(r.verdict == Verdict::Pass, || r.to_string())?;
        let built = int(&r, "dim H_n")?;
        ensure(built == expected, || format!("{g} n={n}: dim H_n = {built}, expected {expected}"))?;
        notes.push(format!("{g}^{n}: {built}"));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{} ({elapsed:.2?})", notes.join(", ")))
}

fn criterion_irreducibility() -> Outcome {
    let h = named_group(NamedGroup::Q8, 4);
    let v = irreps(&h)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|v| v.degree() == 2)
        .ok_or("no 2-dimensional irrep")?;
    let r = check_vn_irreducible_over_hn(&h, &v, 2, SizeCaps::default()).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Pass, || r.to_string())?;
    let image = int(&r, "image dimension")?;
    ensure(image == 16, || format!("image dimension {image}"))?;
    let data = build_hn(&h, 2, SizeCaps::default()).map_err(|e| e.to_string())?;
    Ok(format!("image of H_2 (dim {}) in End(V⊗V) has dim {image}", data.hn.dim()))
}

fn criterion_com() -> Outcome {
    let g = NamedGroup::D4.cayley();
    let h = named_group(NamedGroup::D4, 1);
    let subgroups = g.subgroups();
    ensure(subgroups.len() == 10, || format!("{} subgroups", subgroups.len()))?;
    let subs: Vec<HopfSub> = subgroups
        .iter()
        .map(|s| HopfSub::from_basis_indices(&h, s))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut commuting = 0;
    for (a, k) in subgroups.iter().zip(&subs) {
        for (b, l) in subgroups.iter().zip(&subs) {
            let r = check_lemma_com(&h, k, l);
            ensure(r.verdict == Verdict::Pass, || r.to_string())?;
            let oracle = a.iter().all(|&x| b.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
            ensure(r.get("(i) K and L commute") == Some(&WitnessValue::Bool(oracle)), || {
                format!("{a:?} vs {b:?}: commutation disagrees with the group table")
            })?;
            commuting += usize::from(oracle);
        }
    }
    Ok(format!("100 pairs, {commuting} commuting, (i) ⇔ (ii) in all"))
}

fn criterion_inner_faithful() -> Outcome {
    let mut checked = 0;
    for e in catalog() {
        let h = &e.hopf;
        for v in irreps(h).map_err(|err| format!("{}: {err}", e.stem))? {
            if !is_inner_faithful(h, &v).map_err(|err| err.to_string())? {
                continue;
            }
            let r = check_lemma_inner_faithful(h, &v, 3).map_err(|err| format!("{}: {err}", e.stem))?;
            ensure(r.verdict == Verdict::Pass, || r.to_string())?;
            let hz = hopf_center_of_rep(h, &v).map_err(|err| err.to_string())?;
            ensure(hz.space() == zeta(h).space(), || format!("{}: HZ(V) ≠ ζ(H)", e.stem))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no inner faithful irreps".into())?;
    Ok(format!("{checked} inner faithful irreps, n ≤ 3"))
}

fn criterion_nichols_zoeller() -> Outcome {
    let mut seen: Vec<(String, usize, usize)> = Vec::new();
    let mut record = |what: String, sub: usize, ambient: usize| seen.push((what, sub, ambient));
    for e in catalog() {
        let h = &e.hopf;
        record(format!("ζ({})", e.stem), zeta(h).dim(), h.dim());
        if let Some(g) = h.grouplikes() {
            let sub = HopfSub::from_basis_indices(h, g).map_err(|err| err.to_string())?;
            record(format!("k[G({})]", e.stem), sub.dim(), h.dim());
        }
        for v in irreps(h).map_err(|err| err.to_string())? {
            let hz = hopf_center_of_rep(h, &v).map_err(|err| err.to_string())?;
            record(format!("HZ(V) in {}", e.stem), hz.dim(), h.dim());
        }
    }
    let d4 = named_group(NamedGroup::D4, 1);
    for s in NamedGroup::D4.cayley().subgroups() {
        let sub = HopfSub::from_basis_indices(&d4, &s).map_err(|err| err.to_string())?;
        record(format!("kD4 subgroup {s:?}"), sub.dim(), 8);
    }
    for (g, n) in [(NamedGroup::Q8, 2), (NamedGroup::D4, 2), (NamedGroup::S3, 3)] {
        let h = named_group(g, field_order(g));
        let data = build_hn(&h, n, SizeCaps::default()).map_err(|err| err.to_string())?;
        record(format!("ζ(k{g}) for H_{n}"), data.zeta.dim(), h.dim());
        record(format!("ζ(H_{n}) of k{g}"), zeta(&data.hn).dim(), data.hn.dim());
    }
    for (what, sub, ambient) in &seen {
        ensure(ambient % sub == 0, || format!("{what}: {sub} does not divide {ambient}"))?;
    }
    Ok(format!("{} Hopf subalgebras", seen.len()))
}

fn criterion_non_semisimple() -> Outcome {
    let h = taft(2);
    let w = wedderburn(&h).map_err(|e| e.to_string())?;
    ensure(w.radical.dim() == 2, || format!("radical dim {}", w.radical.dim()))?;
    ensure(w.degrees == [1, 1], || format!("degrees {:?}", w.degrees))?;
    let reports = check_main_theorem(&h).map_err(|e| e.to_string())?;
    ensure(reports.len() == 2, || format!("{} reports", reports.len()))?;
    for r in &reports {
        ensure(r.verdict == Verdict::Pass && int(r, "d")? == 1, || r.to_string())?;
    }
    Ok("rad dim 2, degrees [1, 1], main theorem passes".into())
}

/// Integer coefficients, constant term first, of a polynomial printed as
/// `a*x^k + … + c` with rational coefficients.
fn parse_rational_poly(s: &str) -> Option<Vec<Rational>> {
    let mut coeffs: Vec<Rational> = Vec::new();
    let spaced = s.replace(" - ", " + -").replace(" + ", "\u{0}");
    for term in spaced.split('\u{0}') {
        let term = term.trim();
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term),
        };
        let (c, deg) = match body.split_once('x') {
            None => (body.parse::<Rational>().ok()?, 0),
            Some((c, e)) => {
                let c = match c.strip_suffix('*') {
                    Some(c) => c.parse::<Rational>().ok()?,
                    None if c.is_empty() => Rational::one(),
                    None => return None,
                };
                let deg = match e.strip_prefix('^') {
                    Some(d) => d.parse::<usize>().ok()?,
                    None if e.is_empty() => 1,
                    None => return None,
                };
                (c, deg)
            }
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Rational::zero());
        }
        coeffs[deg] = if neg { -c } else { c };
    }
    Some(coeffs)
}

/// Rational roots of a polynomial with rational coefficients, by the
/// rational root theorem after clearing denominators.
fn has_rational_root(coeffs: &[Rational]) -> bool {
    let lcm = coeffs.iter().fold(1i64, |acc, c| {
        let d = c.denom().try_into().unwrap_or(1i64);
        acc / gcd(acc, d) * d
    });
    let ints: Vec<i64> = coeffs
        .iter()
        .map(|c| (c * &Rational::from(lcm)).to_i64().expect("small coefficients"))
        .collect();
    if ints[0] == 0 {
        return true;
    }
    let divisors = |n: i64| (1..=n.abs()).filter(move |d| n % d == 0);
    let lead = *ints.last().unwrap();
    for p in divisors(ints[0]) {
        for q in divisors(lead) {
            for sign in [1, -1] {
                let x = Rational::new(sign * p, q);
                let value = coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * &x) + c);
                if value.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn criterion_non_split() -> Outcome {
    let over_q = named_group(NamedGroup::Q8, 1);
    let err = match wedderburn(&over_q) {
        Err(e) => e,
        Ok(w) => return Err(format!("kQ8 over ℚ split with degrees {:?}", w.degrees)),
    };
    ensure(wedderburn(&over_q).err() == Some(err.clone()), || "error is not deterministic".into())?;
    let RepnError::NonSplitField { polynomial, suggested_order, .. } = &err else {
        return Err(format!("unexpected error {err}"));
    };
    let coeffs = parse_rational_poly(polynomial).ok_or_else(|| format!("cannot read witness {polynomial}"))?;
    let degree = coeffs.len() - 1;
    ensure((2..=3).contains(&degree), || format!("witness {polynomial} has degree {degree}"))?;
    ensure(!has_rational_root(&coeffs), || format!("witness {polynomial} is reducible over ℚ"))?;
    let over_i = named_group(NamedGroup::Q8, 4);
    let mut degrees = wedderburn(&over_i).map_err(|e| e.to_string())?.degrees;
    degrees.sort_unstable();
    ensure(degrees == [1, 1, 1, 1, 2], || format!("degrees over ℚ(i): {degrees:?}"))?;
    Ok(format!("witness {polynomial} (suggested order {suggested_order:?}); over ℚ(ζ_4) degrees {degrees:?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suite on the catalog", criterion_axioms),
        ("Frobenius/Schur degrees for Q8, D4, S3, S4", criterion_schur),
        ("main theorem on semisimple instances", criterion_main_theorem),
        ("dim H_n = d^n/δ^(n-1)", criterion_hn),
        ("V⊗V irreducible over H_2 for kQ8", criterion_irreducibility),
        ("commutation lemma on all 100 subgroup pairs of D4", criterion_com),
        ("inner faithful irreps: HZ(V) = ζ(H) and trivial commutators", criterion_inner_faithful),
        ("Nichols–Zoeller divisibility", criterion_nichols_zoeller),
        ("non-semisimple pipeline on taft(2)", criterion_non_semisimple),
        ("NonSplitField for kQ8 over ℚ", criterion_non_split),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2}. {title}: {detail} [{elapsed:.2?}]", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2}. {title}: {reason} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
