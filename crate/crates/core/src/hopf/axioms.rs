use std::fmt;

use serde::Serialize;

use crate::linalg::SparseVec;

use super::HopfAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    ComultOfUnit,
    CounitOfUnit,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::ComultMultiplicative,
        Axiom::CounitMultiplicative,
        Axiom::ComultOfUnit,
        Axiom::CounitOfUnit,
        Axiom::Antipode,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComultMultiplicative => "comultiplication is an algebra map",
            Axiom::CounitMultiplicative => "counit is an algebra map",
            Axiom::ComultOfUnit => "Δ(1) = 1⊗1",
            Axiom::CounitOfUnit => "ε(1) = 1",
            Axiom::Antipode => "antipode",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result for one axiom; on failure `witness` holds the basis indices of the
/// first offending tuple (empty for axioms about the unit alone).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }
}

fn check(axiom: Axiom, witness: Option<Vec<usize>>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

/// Checks all nine axioms on every basis tuple, exactly.
pub fn verify_axioms(h: &HopfAlgebra) -> AxiomReport {
    AxiomReport {
        checks: vec![
            check(Axiom::Associativity, associativity(h)),
            check(Axiom::Unit, unit(h)),
            check(Axiom::Coassociativity, coassociativity(h)),
            check(Axiom::Counit, counit(h)),
            check(Axiom::ComultMultiplicative, comult_multiplicative(h)),
            check(Axiom::CounitMultiplicative, counit_multiplicative(h)),
            check(Axiom::ComultOfUnit, (h.comult(&h.one()) != h.one_tensor(2)).then(Vec::new)),
            check(Axiom::CounitOfUnit, (!h.counit(&h.one()).is_one()).then(Vec::new)),
            check(Axiom::Antipode, antipode(h)),
        ],
    }
}

fn associativity(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let n = h.dim();
    for i in 0..n {
        let bi = h.basis(i);
        for j in 0..n {
            let ij = h.mult_basis(i, j);
            for k in 0..n {
                let left = h.mul(ij, &h.basis(k));
                let right = h.mul(&bi, h.mult_basis(j, k));
                if left != right {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

fn unit(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let one = h.one();
    (0..h.dim()).find_map(|i| {
        let b = h.basis(i);
        (h.mul(&one, &b) != b || h.mul(&b, &one) != b).then(|| vec![i])
    })
}

fn coassociativity(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let n = h.dim();
    (0..n).find_map(|i| {
        let d = h.comult_basis(i);
        let left = h.map_factor(d, 2, 0, n * n, |j| h.comult_basis(j));
        let right = h.map_factor(d, 2, 1, n * n, |j| h.comult_basis(j));
        (left != right).then(|| vec![i])
    })
}

fn counit(h: &HopfAlgebra) -> Option<Vec<usize>> {
    (0..h.dim()).find_map(|i| {
        let d = h.comult_basis(i);
        let b = h.basis(i);
        (h.counit_on_factor(d, 2, 0) != b || h.counit_on_factor(d, 2, 1) != b).then(|| vec![i])
    })
}

fn comult_multiplicative(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let left = h.comult(h.mult_basis(i, j));
            let right = h.mul_tensor(h.comult_basis(i), h.comult_basis(j), 2);
            if left != right {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

fn counit_multiplicative(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            if h.counit(h.mult_basis(i, j)) != h.counit_basis(i) * h.counit_basis(j) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

fn antipode(h: &HopfAlgebra) -> Option<Vec<usize>> {
    let n = h.dim();
    (0..n).find_map(|i| {
        let d = h.comult_basis(i);
        let target = h.one().scale(h.counit_basis(i));
        let left = h.multiply_pair(&h.map_factor(d, 2, 0, n, |j| h.antipode_basis(j)));
        let right = h.multiply_pair(&h.map_factor(d, 2, 1, n, |j| h.antipode_basis(j)));
        (left != target || right != target).then(|| vec![i])
    })
}

/// `true` when all products commute.
pub(crate) fn is_commutative(h: &HopfAlgebra) -> bool {
    let n = h.dim();
    (0..n).all(|i| (i + 1..n).all(|j| h.mult_basis(i, j) == h.mult_basis(j, i)))
}

/// `true` when `Δ = Δ^op`.
pub(crate) fn is_cocommutative(h: &HopfAlgebra) -> bool {
    (0..h.dim()).all(|i| {
        let b: SparseVec = h.basis(i);
        h.comult(&b) == h.comult_op(&b)
    })
}

impl HopfAlgebra {
    pub fn is_commutative(&self) -> bool {
        is_commutative(self)
    }

    pub fn is_cocommutative(&self) -> bool {
        is_cocommutative(self)
    }
}
