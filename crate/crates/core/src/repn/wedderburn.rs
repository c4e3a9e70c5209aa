use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Projector, SparseVec, Subspace};
use crate::polyfactor::factor_over_cyclotomic;
use crate::scalars::{euler_phi, Cyclo, Poly};

use super::algebra::{crt_split, trace_form_kernel, Algebra, Split};
use super::{Irrep, Representation, RepnError};

/// Jacobson radical, as the kernel of the regular trace form.
pub fn radical(h: &HopfAlgebra) -> Subspace {
    trace_form_kernel(h)
}

/// The Wedderburn decomposition of `H/rad H` into full matrix blocks.
#[derive(Clone, Debug)]
pub struct WedderburnData {
    pub radical: Subspace,
    pub ss_dim: usize,
    /// central primitive idempotents of `H/rad`, lifted to `H` along the
    /// complement basis
    pub central_idempotents: Vec<SparseVec>,
    pub block_dims: Vec<usize>,
    pub degrees: Vec<usize>,
    primitive: Vec<SparseVec>,
    quotient: Algebra,
    projector: Projector,
}

impl WedderburnData {
    pub fn num_blocks(&self) -> usize {
        self.degrees.len()
    }

    /// Image of an element of `H` in `H/rad`, in complement coordinates.
    pub fn project(&self, x: &SparseVec) -> SparseVec {
        self.projector.project(x)
    }

    /// Central idempotents in `H/rad` coordinates.
    pub fn quotient_idempotents(&self) -> Vec<SparseVec> {
        self.central_idempotents.iter().map(|e| self.project(e)).collect()
    }

    /// Product in `H/rad`.
    pub fn quotient_mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.quotient.mul(a, b)
    }

    pub fn quotient_one(&self) -> &SparseVec {
        &self.quotient.unit
    }

    /// One simple module per block: `V = A·f` for a primitive idempotent `f`,
    /// with `H` acting through `H → A`.
    pub fn irreps(&self, h: &HopfAlgebra) -> Result<Vec<Irrep>, RepnError> {
        let alg = &self.quotient;
        let images: Vec<SparseVec> = (0..h.dim()).map(|i| self.project(&h.basis(i))).collect();
        self.primitive
            .iter()
            .zip(&self.degrees)
            .map(|(f, &d)| {
                let v = alg.left_ideal(f);
                debug_assert_eq!(v.dim(), d);
                let matrices = images
                    .iter()
                    .map(|a| {
                        let columns: Vec<SparseVec> = v
                            .basis()
                            .iter()
                            .map(|w| v.coordinates_sparse(&alg.mul(a, w)).expect("left ideal"))
                            .collect();
                        Matrix::from_columns(d, h.order(), &columns)
                    })
                    .collect();
                Irrep::new(h, Representation::new_unchecked(d, h.order(), matrices))
            })
            .collect()
    }
}

pub fn wedderburn(h: &HopfAlgebra) -> Result<WedderburnData, RepnError> {
    let rad = radical(h);
    let (alg, projector, complement) = Algebra::quotient(h, &rad);
    let center = alg.center();
    let centrals = split_center(&alg, &center)?;
    let mut blocks = Vec::with_capacity(centrals.len());
    for e in centrals {
        let dim = alg.left_ideal(&e).dim();
        let d = exact_sqrt(dim).ok_or_else(|| {
            RepnError::non_split(Poly::x(alg.order), format!("block of dimension {dim} is not a perfect square"))
        })?;
        let f = primitive_idempotent(&alg, &e, d)?;
        blocks.push((d, e, f));
    }
    blocks.sort_by_key(|(d, _, _)| *d);
    let lift = |x: &SparseVec| x.map_indices(|k| complement[k]);
    Ok(WedderburnData {
        radical: rad,
        ss_dim: alg.dim,
        central_idempotents: blocks.iter().map(|(_, e, _)| lift(e)).collect(),
        block_dims: blocks.iter().map(|(d, _, _)| d * d).collect(),
        degrees: blocks.iter().map(|(d, _, _)| *d).collect(),
        primitive: blocks.into_iter().map(|(_, _, f)| f).collect(),
        quotient: alg,
        projector,
    })
}

pub fn irreps(h: &HopfAlgebra) -> Result<Vec<Irrep>, RepnError> {
    wedderburn(h)?.irreps(h)
}

fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Refines `1` into central primitive idempotents by splitting with the
/// central basis elements in index order.
fn split_center(alg: &Algebra, center: &Subspace) -> Result<Vec<SparseVec>, RepnError> {
    let mut work = vec![alg.unit.clone()];
    let mut done = Vec::new();
    'next: while let Some(e) = work.pop() {
        for z in center.basis() {
            let x = alg.mul(z, &e);
            match crt_split(alg, &x, &e) {
                Split::Scalar => continue,
                Split::NonSplit(p) => {
                    return Err(RepnError::non_split(p, "the center does not split".into()));
                }
                Split::Pieces(pieces) => {
                    work.extend(pieces.into_iter().rev());
                    continue 'next;
                }
            }
        }
        done.push(e);
    }
    Ok(done)
}

/// Candidate elements of a corner algebra: its basis, then `u + c·v` for
/// small `c`.
fn candidates(corner: &Subspace) -> impl Iterator<Item = SparseVec> + '_ {
    let rows = corner.basis();
    let order = corner.order();
    let singles = rows.iter().cloned();
    let pairs = (1..=3i64).flat_map(move |c| {
        let cc = Cyclo::from_int(order, c);
        (0..rows.len()).flat_map(move |a| {
            let cc = cc.clone();
            (a + 1..rows.len()).map(move |b| rows[a].axpy(&cc, &rows[b]))
        })
    });
    singles.chain(pairs).take(64 + rows.len())
}

/// Shrinks `e` to an idempotent `f` with `f·A·f` one-dimensional, so that
/// `A·f` is a simple module of dimension `d`.
fn primitive_idempotent(alg: &Algebra, e: &SparseVec, d: usize) -> Result<SparseVec, RepnError> {
    let mut f = e.clone();
    'outer: loop {
        let corner = alg.corner(&f);
        if corner.dim() == 1 {
            let v = alg.left_ideal(&f).dim();
            if v != d {
                return Err(RepnError::non_split(Poly::x(alg.order), format!("simple module has dimension {v}, expected {d}")));
            }
            return Ok(f);
        }
        let mut witness = None;
        for x in candidates(&corner) {
            match crt_split(alg, &x, &f) {
                Split::Scalar => {}
                Split::NonSplit(p) => {
                    witness.get_or_insert(p);
                }
                Split::Pieces(pieces) => {
                    f = pieces
                        .into_iter()
                        .min_by_key(|p| alg.corner(p).dim())
                        .expect("at least two pieces");
                    continue 'outer;
                }
            }
        }
        let p = witness.unwrap_or_else(|| Poly::x(alg.order));
        return Err(RepnError::non_split(p, format!("a block of dimension {} does not split", d * d)));
    }
}

/// Smallest multiple of the field order (up to 12 times it) over which `p`
/// splits into linear factors.
pub(crate) fn suggest_order(p: &Poly) -> Option<u32> {
    let n = p.order();
    let deg = p.degree()?;
    (2..=12u32).map(|k| n * k).find(|&m| {
        euler_phi(m) * deg <= 48
            && p.embed(m)
                .ok()
                .and_then(|q| factor_over_cyclotomic(&q).ok())
                .is_some_and(|f| f.factors.iter().all(|(g, _)| g.degree() == Some(1)))
    })
}
