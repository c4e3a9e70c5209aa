//! Exact checks of the divisibility results and their proof steps on concrete
//! Hopf algebras, each producing a [`TheoremReport`].

mod checks;
mod hn;

pub use checks::{
    check_corollary_central_character, check_fd, check_hbar_chain, check_lemma_com, check_lemma_inner_faithful,
    check_main_theorem, check_schur_specialization, verify_quasitriangular,
};
pub use hn::{build_hn, check_hn_dimension, check_vn_irreducible_over_hn, HnData};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::hopf::HopfError;
use crate::linalg::LinalgError;
use crate::repn::RepnError;
use crate::scalars::Rational;
use crate::substructures::SubError;

/// Recorded in every report header: membership of `H` in a class closed under
/// tensor products and Hopf images in which FD holds is not computable, so the
/// Main Theorem's hypothesis is assumed rather than verified.
pub const MAIN_HYPOTHESIS_NOTE: &str =
    "hypothesis assumed: H lies in a class closed under tensor products and Hopf quotients in which FD holds";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Repn(#[from] RepnError),
    #[error(transparent)]
    Sub(#[from] SubError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("size cap exceeded: {what} = {size} > {cap}")]
    SizeCap { what: &'static str, size: usize, cap: usize },
    #[error("R is not invertible in H⊗H")]
    NotInvertible,
}

/// Limits on `dim H^{⊗n}` for the `H_n` construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    /// largest `d^n` handled at all
    pub full: usize,
    /// largest `d^n` for which the coideal condition is certified
    pub coideal: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps { full: 1000, coideal: 250 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Fd,
    Main,
    Schur,
    Com,
    InnerFaithful,
    Hn,
    Hbar,
    CentralChar,
    Quasitriangular,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Fd,
        Claim::Main,
        Claim::Schur,
        Claim::Com,
        Claim::InnerFaithful,
        Claim::Hn,
        Claim::Hbar,
        Claim::CentralChar,
        Claim::Quasitriangular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Fd => "fd",
            Claim::Main => "main",
            Claim::Schur => "schur",
            Claim::Com => "com",
            Claim::InnerFaithful => "inner-faithful",
            Claim::Hn => "hn",
            Claim::Hbar => "hbar",
            Claim::CentralChar => "central-char",
            Claim::Quasitriangular => "quasitriangular",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Claim, String> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
    /// passed, with the coideal condition left unchecked
    PartialCertificate(String),
}

impl Verdict {
    /// Pass, skipped and partial verdicts all count as success.
    pub fn is_success(&self) -> bool {
        !matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Skipped(r) => write!(f, "skipped ({r})"),
            Verdict::PartialCertificate(r) => write!(f, "pass, partial certificate ({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Int(i64),
    Ratio(Rational),
    Bool(bool),
    Ints(Vec<i64>),
    Text(String),
}

impl Serialize for WitnessValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            WitnessValue::Int(n) => s.serialize_i64(*n),
            WitnessValue::Ratio(r) => s.serialize_str(&r.to_string()),
            WitnessValue::Bool(b) => s.serialize_bool(*b),
            WitnessValue::Ints(v) => v.serialize(s),
            WitnessValue::Text(t) => s.serialize_str(t),
        }
    }
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Int(n) => write!(f, "{n}"),
            WitnessValue::Ratio(r) => write!(f, "{r}"),
            WitnessValue::Bool(b) => write!(f, "{b}"),
            WitnessValue::Ints(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            WitnessValue::Text(t) => f.write_str(t),
        }
    }
}

impl From<usize> for WitnessValue {
    fn from(n: usize) -> Self {
        WitnessValue::Int(n as i64)
    }
}

impl From<Rational> for WitnessValue {
    fn from(r: Rational) -> Self {
        WitnessValue::Ratio(r)
    }
}

impl From<bool> for WitnessValue {
    fn from(b: bool) -> Self {
        WitnessValue::Bool(b)
    }
}

impl From<Vec<usize>> for WitnessValue {
    fn from(v: Vec<usize>) -> Self {
        WitnessValue::Ints(v.into_iter().map(|x| x as i64).collect())
    }
}

impl From<String> for WitnessValue {
    fn from(t: String) -> Self {
        WitnessValue::Text(t)
    }
}

impl From<&str> for WitnessValue {
    fn from(t: &str) -> Self {
        WitnessValue::Text(t.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub key: String,
    pub value: WitnessValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub instance: String,
    pub claim: Claim,
    /// what the report is about within the instance, e.g. one irrep
    pub subject: Option<String>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl TheoremReport {
    pub fn new(instance: &str, claim: Claim) -> TheoremReport {
        TheoremReport {
            instance: instance.to_string(),
            claim,
            subject: None,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
        }
    }

    pub fn subject(mut self, s: impl Into<String>) -> Self {
        self.subject = Some(s.into());
        self
    }

    pub fn witness(mut self, key: &str, value: impl Into<WitnessValue>) -> Self {
        self.witnesses.push(Witness {
            key: key.to_string(),
            value: value.into(),
        });
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped(reason.into());
        self
    }

    pub fn partial(mut self, reason: impl Into<String>) -> Self {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::PartialCertificate(reason.into());
        }
        self
    }

    /// Marks the report failed with the offending data.
    pub fn fail(mut self, key: &str, value: impl Into<WitnessValue>) -> Self {
        self.verdict = Verdict::Fail;
        self.witness(key, value)
    }

    /// Fails with `key` unless `ok`.
    pub fn require(self, ok: bool, key: &str, value: impl Into<WitnessValue>) -> Self {
        if ok {
            self
        } else {
            self.fail(key, value)
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass || matches!(self.verdict, Verdict::PartialCertificate(_))
    }

    pub fn get(&self, key: &str) -> Option<&WitnessValue> {
        self.witnesses.iter().find(|w| w.key == key).map(|w| &w.value)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.claim, self.instance)?;
        if let Some(s) = &self.subject {
            write!(f, " ({s})")?;
        }
        write!(f, ": {}", self.verdict)?;
        for w in &self.witnesses {
            write!(f, "\n    {} = {}", w.key, w.value)?;
        }
        Ok(())
    }
}

/// `a / b` as an exact rational.
pub(crate) fn ratio(a: usize, b: usize) -> Rational {
    Rational::new(a as i64, b as i64)
}

#[cfg(test)]
mod tests;
