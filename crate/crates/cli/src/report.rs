//! The invariant report: global invariants of `H` and one row per irrep.

use std::fmt;

use serde::Serialize;

use hopfcenter::hopf::HopfAlgebra;
use hopfcenter::repn::{hopf_center_of_rep, hopf_kernel_of_rep, is_central_character, wedderburn};
use hopfcenter::scalars::Rational;
use hopfcenter::substructures::zeta;
use hopfcenter::theorems::{TheoremError, MAIN_HYPOTHESIS_NOTE};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepRow {
    pub index: usize,
    pub d: usize,
    pub hopf_center_dim: usize,
    pub hopf_kernel_dim: usize,
    pub inner_faithful: bool,
    pub central_character: bool,
    /// `dim H / dim 𝓗𝓩(V)` as a rational string
    pub ratio: String,
    /// `dim H / (d · dim 𝓗𝓩(V))` as a rational string
    pub q: String,
    pub main_theorem: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub dim: usize,
    pub cyclotomic_order: u32,
    pub zeta_dim: usize,
    pub radical_dim: usize,
    pub degrees: Vec<usize>,
    pub hypothesis: &'static str,
    pub irreps: Vec<IrrepRow>,
}

impl InvariantReport {
    pub fn build(h: &HopfAlgebra) -> Result<InvariantReport, TheoremError> {
        let w = wedderburn(h)?;
        let n = h.dim();
        let mut rows = Vec::with_capacity(w.num_blocks());
        for (index, v) in w.irreps(h)?.iter().enumerate() {
            let hz = hopf_center_of_rep(h, v)?.dim();
            let hker = hopf_kernel_of_rep(h, v)?.dim();
            let d = v.degree();
            let q = Rational::new(n as i64, (d * hz) as i64);
            let ok = n % hz == 0 && q.is_integer();
            rows.push(IrrepRow {
                index,
                d,
                hopf_center_dim: hz,
                hopf_kernel_dim: hker,
                inner_faithful: hker == 0,
                central_character: is_central_character(h, v.character()),
                ratio: Rational::new(n as i64, hz as i64).to_string(),
                q: q.to_string(),
                main_theorem: if ok { "pass" } else { "FAIL" },
            });
        }
        Ok(InvariantReport {
            name: h.name().to_string(),
            dim: n,
            cyclotomic_order: h.order(),
            zeta_dim: zeta(h).dim(),
            radical_dim: w.radical.dim(),
            degrees: w.degrees.clone(),
            hypothesis: MAIN_HYPOTHESIS_NOTE,
            irreps: rows,
        })
    }

    pub fn all_pass(&self) -> bool {
        self.irreps.iter().all(|r| r.main_theorem == "pass")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over Q(zeta_{})", self.name, self.cyclotomic_order)?;
        writeln!(f, "note: {}", self.hypothesis)?;
        writeln!(f, "dim H         {}", self.dim)?;
        writeln!(f, "dim ζ(H)      {}", self.zeta_dim)?;
        writeln!(f, "dim rad H     {}", self.radical_dim)?;
        let degrees: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        writeln!(f, "degrees       {}", degrees.join(" "))?;
        writeln!(f)?;
        let header = [
            "V", "d", "dim HZ(V)", "dim HKer V", "inner-faithful", "central χ", "dim H/dim HZ(V)", "q", "main",
        ];
        let body: Vec<[String; 9]> = self
            .irreps
            .iter()
            .map(|r| {
                [
                    format!("V{}", r.index),
                    r.d.to_string(),
                    r.hopf_center_dim.to_string(),
                    r.hopf_kernel_dim.to_string(),
                    yes_no(r.inner_faithful).to_string(),
                    yes_no(r.central_character).to_string(),
                    r.ratio.clone(),
                    r.q.clone(),
                    r.main_theorem.to_string(),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..9)
            .map(|c| body.iter().map(|row| row[c].chars().count()).chain([header[c].chars().count()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(f, "{}", line(header.to_vec()))?;
        for row in &body {
            writeln!(f, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }
}
