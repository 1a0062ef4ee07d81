//! Generalized inverses of even-order tensors.
//!
//! A tensor `X` is a `{λ}`-inverse of `A` when it satisfies the Penrose
//! equations listed in `λ`:
//!
//! 1. `A∗X∗A = A`
//! 2. `X∗A∗X = X`
//! 3. `(A∗X)* = A∗X`
//! 4. `(X∗A)* = X∗A`
//!
//! The Moore–Penrose inverse `A†` satisfies all four and is unique. The
//! family constructors below generate whole classes of `{1}`, `{1,3}` and
//! `{1,4}` inverses from one known member and a free tensor.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::einstein::kronecker;
use crate::error::{Error, Result};
use crate::matricization::{flatten, matrix_pinv, matrix_svd, unflatten, FlatMatrix};
use crate::shape::{offset_in, MultiIndexIter};
use crate::tensor::{frobenius_distance, relative_residual, DenseTensor};

/// Relative tolerance used when an operation checks its own preconditions.
pub const DEFAULT_TOL: f64 = 1e-10;

/// `A = U∗B∗V*` with unitary `U`, `V` and a core `B` that vanishes off the
/// matched multi-index diagonal.
#[derive(Clone, Debug)]
pub struct SvdTriple {
    pub u: DenseTensor,
    pub core: DenseTensor,
    pub v: DenseTensor,
}

impl SvdTriple {
    /// `U∗B∗V*`.
    pub fn reconstruct(&self) -> Result<DenseTensor> {
        self.u.star(&self.core)?.star(&self.v.conj_transpose())
    }

    /// Diagonal of the core in canonical order.
    pub fn singular_values(&self) -> Vec<f64> {
        let rows = self.core.shape().row_extents();
        let cols = self.core.shape().col_extents();
        let width = self.core.shape().col_count();
        let diag: Vec<usize> = rows.iter().zip(cols).map(|(r, c)| *r.min(c)).collect();
        MultiIndexIter::new(&diag)
            .map(|m| self.core.data()[offset_in(rows, &m) * width + offset_in(cols, &m)].re)
            .collect()
    }
}

/// Tensor SVD.
///
/// Row and column groups must have the same number of axes. Singular values
/// sit on the multi-indices `(m…, m…)` with `m` running over the box
/// `Π min(I_k, J_k)` in canonical order, largest first. When the per-axis
/// extents differ that box can be smaller than the matrix rank; that case is
/// reported as a shape error because no such core exists.
pub fn svd(a: &DenseTensor) -> Result<SvdTriple> {
    let shape = a.shape();
    let rows = shape.row_extents();
    let cols = shape.col_extents();
    if rows.len() != cols.len() {
        return Err(Error::shape(format!(
            "tensor SVD needs row and column groups of equal length, got {shape}"
        )));
    }
    let f = matrix_svd(&flatten(a))?;
    let (m, n) = (shape.row_count(), shape.col_count());

    let diag: Vec<usize> = rows.iter().zip(cols).map(|(r, c)| *r.min(c)).collect();
    let positions: Vec<(usize, usize)> = MultiIndexIter::new(&diag)
        .map(|idx| (offset_in(rows, &idx), offset_in(cols, &idx)))
        .collect();

    let smax = f.s.first().copied().unwrap_or(0.0);
    let cutoff = smax * m.max(n) as f64 * f64::EPSILON;
    if let Some(&extra) = f.s.get(positions.len()) {
        if extra > cutoff {
            return Err(Error::shape(format!(
                "rank of {shape} exceeds the {} diagonal positions of its core",
                positions.len()
            )));
        }
    }

    // permute singular-vector columns so that the k-th pair lands on the
    // k-th diagonal position; leftover columns fill the remaining slots
    let permute = |basis: &FlatMatrix, dim: usize, slots: Vec<usize>| -> Vec<Complex64> {
        let mut target: Vec<Option<usize>> = vec![None; dim];
        for (k, &slot) in slots.iter().enumerate() {
            target[slot] = Some(k);
        }
        let mut next = slots.len();
        let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (slot, src) in target.iter().enumerate() {
            let src = src.unwrap_or_else(|| {
                let s = next;
                next += 1;
                s
            });
            for r in 0..dim {
                out[r * dim + slot] = basis.get(r, src);
            }
        }
        out
    };
    let u_slots: Vec<usize> = positions.iter().map(|p| p.0).collect();
    let v_slots: Vec<usize> = positions.iter().map(|p| p.1).collect();
    let u = DenseTensor::new(
        crate::shape::TensorShape::square(rows)?,
        permute(&f.u, m, u_slots),
    )?;
    let v = DenseTensor::new(
        crate::shape::TensorShape::square(cols)?,
        permute(&f.v, n, v_slots),
    )?;

    let mut core = vec![Complex64::new(0.0, 0.0); m * n];
    for (&(r, c), &sigma) in positions.iter().zip(&f.s) {
        core[r * n + c] = Complex64::new(sigma, 0.0);
    }
    let core = DenseTensor::new(shape.clone(), core)?;
    Ok(SvdTriple { u, core, v })
}

/// Moore–Penrose inverse with the default rank tolerance.
pub fn pinv(a: &DenseTensor) -> Result<DenseTensor> {
    pinv_with_tol(a, None)
}

/// Moore–Penrose inverse; singular values at or below
/// `rank_tol·σ_max` are dropped.
pub fn pinv_with_tol(a: &DenseTensor, rank_tol: Option<f64>) -> Result<DenseTensor> {
    let x = matrix_pinv(&flatten(a), rank_tol)?;
    unflatten(&x, a.shape().swapped())
}

/// Subset of the Penrose equation labels `{1,2,3,4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LambdaKind {
    bits: u8,
}

impl LambdaKind {
    pub const ONE: Self = Self { bits: 0b0001 };
    pub const ONE_TWO: Self = Self { bits: 0b0011 };
    pub const ONE_THREE: Self = Self { bits: 0b0101 };
    pub const ONE_FOUR: Self = Self { bits: 0b1001 };
    pub const MOORE_PENROSE: Self = Self { bits: 0b1111 };

    pub fn new(labels: &[u8]) -> Result<Self> {
        let mut bits = 0;
        for &l in labels {
            if !(1..=4).contains(&l) {
                return Err(Error::Format(format!("Penrose equation label {l} not in 1..=4")));
            }
            bits |= 1 << (l - 1);
        }
        if bits == 0 {
            return Err(Error::Format("empty set of Penrose equations".into()));
        }
        Ok(Self { bits })
    }

    pub fn contains(&self, label: u8) -> bool {
        (1..=4).contains(&label) && self.bits & (1 << (label - 1)) != 0
    }

    pub fn labels(&self) -> Vec<u8> {
        (1..=4).filter(|&l| self.contains(l)).collect()
    }

    pub fn is_moore_penrose(&self) -> bool {
        self.bits == 0b1111
    }
}

impl fmt::Display for LambdaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_moore_penrose() {
            return f.write_str("mp");
        }
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        f.write_str(&labels.join(","))
    }
}

impl FromStr for LambdaKind {
    type Err = Error;

    /// Accepts `mp` or a comma-separated list such as `1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("mp") {
            return Ok(Self::MOORE_PENROSE);
        }
        let labels = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Format(format!("bad Penrose label {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&labels)
    }
}

/// Residuals of the four Penrose equations for a pair `(A, X)`.
///
/// `residuals[k]` is the relative Frobenius residual of equation `k+1`, and
/// `satisfied[k]` is `residuals[k] <= tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PenroseReport {
    pub residuals: [f64; 4],
    pub satisfied: [bool; 4],
    pub tolerance: f64,
}

impl PenroseReport {
    pub fn satisfies(&self, kind: LambdaKind) -> bool {
        kind.labels().iter().all(|&l| self.satisfied[l as usize - 1])
    }

    pub fn all(&self) -> bool {
        self.satisfied.iter().all(|&s| s)
    }

    pub fn max_residual(&self, kind: LambdaKind) -> f64 {
        kind.labels()
            .iter()
            .map(|&l| self.residuals[l as usize - 1])
            .fold(0.0, f64::max)
    }
}

fn hermitian_residual(t: &DenseTensor) -> Result<f64> {
    relative_residual(&t.conj_transpose(), t)
}

/// Evaluates the four Penrose equations for `X` as a candidate inverse of
/// `A`. `X` must have `A`'s groups swapped.
pub fn penrose_check(a: &DenseTensor, x: &DenseTensor, tol: f64) -> Result<PenroseReport> {
    if x.shape() != &a.shape().swapped() {
        return Err(Error::shape(format!(
            "candidate inverse of {} must have shape {}, got {}",
            a.shape(),
            a.shape().swapped(),
            x.shape()
        )));
    }
    let ax = a.star(x)?;
    let xa = x.star(a)?;
    let residuals = [
        relative_residual(&ax.star(a)?, a)?,
        relative_residual(&xa.star(x)?, x)?,
        hermitian_residual(&ax)?,
        hermitian_residual(&xa)?,
    ];
    Ok(PenroseReport {
        residuals,
        satisfied: residuals.map(|r| r <= tol),
        tolerance: tol,
    })
}

fn require_inverse(a: &DenseTensor, g: &DenseTensor, kind: LambdaKind, what: &str) -> Result<()> {
    let report = penrose_check(a, g, DEFAULT_TOL)?;
    if !report.satisfies(kind) {
        return Err(Error::precondition(format!(
            "{what} is not a {{{kind}}}-inverse (max residual {:.3e})",
            report.max_residual(kind)
        )));
    }
    Ok(())
}

/// `G + Y − G∗A∗Y∗A∗G`: ranges over all of `A{1}` as `Y` varies.
pub fn one_inverse_family(a: &DenseTensor, g1: &DenseTensor, y: &DenseTensor) -> Result<DenseTensor> {
    require_inverse(a, g1, LambdaKind::ONE, "seed")?;
    check_free(g1, y)?;
    let correction = g1.star(a)?.star(y)?.star(a)?.star(g1)?;
    Ok(&(g1 + y) - &correction)
}

fn check_free(g: &DenseTensor, y: &DenseTensor) -> Result<()> {
    if g.shape() != y.shape() {
        return Err(Error::shape(format!(
            "free tensor must have shape {}, got {}",
            g.shape(),
            y.shape()
        )));
    }
    Ok(())
}

/// `Y∗A∗Z` for `Y, Z ∈ A{1}`; always a reflexive `{1,2}`-inverse.
pub fn reflexive_from_two(a: &DenseTensor, y: &DenseTensor, z: &DenseTensor) -> Result<DenseTensor> {
    require_inverse(a, y, LambdaKind::ONE, "left factor")?;
    require_inverse(a, z, LambdaKind::ONE, "right factor")?;
    y.star(a)?.star(z)
}

fn unit_like_rows(t: &DenseTensor) -> Result<DenseTensor> {
    DenseTensor::unit(t.shape().row_extents())
}

/// `G + (I − G∗A)∗Y`: ranges over all of `A{1,3}`.
pub fn one_three_family(a: &DenseTensor, g13: &DenseTensor, y: &DenseTensor) -> Result<DenseTensor> {
    require_inverse(a, g13, LambdaKind::ONE_THREE, "seed")?;
    check_free(g13, y)?;
    let ga = g13.star(a)?;
    let proj = &unit_like_rows(&ga)? - &ga;
    Ok(g13 + &proj.star(y)?)
}

/// `G + Y∗(I − A∗G)`: ranges over all of `A{1,4}`.
pub fn one_four_family(a: &DenseTensor, g14: &DenseTensor, y: &DenseTensor) -> Result<DenseTensor> {
    require_inverse(a, g14, LambdaKind::ONE_FOUR, "seed")?;
    check_free(g14, y)?;
    let ag = a.star(g14)?;
    let proj = &unit_like_rows(&ag)? - &ag;
    Ok(g14 + &y.star(&proj)?)
}

/// `A† = A^(1,4)∗A∗A^(1,3)`.
pub fn mp_from_13_14(a: &DenseTensor, g14: &DenseTensor, g13: &DenseTensor) -> Result<DenseTensor> {
    require_inverse(a, g14, LambdaKind::ONE_FOUR, "first factor")?;
    require_inverse(a, g13, LambdaKind::ONE_THREE, "last factor")?;
    g14.star(a)?.star(g13)
}

/// `(A⊗B)† = A†⊗B†`.
pub fn pinv_kronecker(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor> {
    Ok(kronecker(&pinv(a)?, &pinv(b)?))
}

/// One tested hypothesis of a reverse-order diagnostic.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionCheck {
    pub name: String,
    /// Relative residual of the defining equation; `None` when the tensors
    /// involved are not conformable for it.
    pub residual: Option<f64>,
    pub holds: bool,
}

impl ConditionCheck {
    fn measured(name: &str, residual: Result<f64>, tol: f64) -> Self {
        let residual = residual.ok();
        Self {
            name: name.to_string(),
            holds: residual.is_some_and(|r| r <= tol),
            residual,
        }
    }
}

/// Outcome of testing `(A∗B)^(λ) = B^(λ)∗A^(λ)` for given inverses.
#[derive(Clone, Debug, Serialize)]
pub struct ReverseOrderReport {
    pub kind: String,
    /// Penrose report of the inverse used for `A`.
    pub a_inverse: PenroseReport,
    /// Penrose report of the inverse used for `B`.
    pub b_inverse: PenroseReport,
    /// Sufficient conditions known for this λ, each measured.
    pub conditions: Vec<ConditionCheck>,
    /// Penrose report of `B^(λ)∗A^(λ)` against `A∗B`.
    pub candidate: PenroseReport,
    /// The candidate satisfies every equation in λ.
    pub candidate_passes: bool,
    /// For the Moore–Penrose case, `‖B†∗A† − (A∗B)†‖_F`.
    pub distance_to_pinv: Option<f64>,
    #[serde(skip)]
    pub candidate_tensor: DenseTensor,
}

impl ReverseOrderReport {
    pub fn any_condition_holds(&self) -> bool {
        self.conditions.iter().any(|c| c.holds)
    }
}

/// Reverse-order diagnostic using `A†` and `B†` as the λ-inverses.
pub fn reverse_order_diagnose(
    a: &DenseTensor,
    b: &DenseTensor,
    kind: LambdaKind,
) -> Result<ReverseOrderReport> {
    reverse_order_diagnose_with(a, b, kind, &pinv(a)?, &pinv(b)?, DEFAULT_TOL)
}

/// Reverse-order diagnostic for caller-supplied inverses `a_inv`, `b_inv`.
///
/// Measured hypotheses per λ:
/// - `{1}`: `A^(1)∗A∗B∗B^(1)` idempotent (necessary and sufficient);
/// - `{1,4}`: `A^(1,4)∗A∗B∗B*` hermitian, and also `A∗A^(1,4)∗B*∗B`
///   hermitian, the product some counterexamples test instead;
/// - `{1,3}`: `A∗A^(1,3)∗B*∗B` hermitian;
/// - Moore–Penrose: `B = A*`, `B = A†`, `A*∗A = I`, `B∗B* = I` (sufficient
///   only; no characterization is claimed).
///
/// Other λ get no hypotheses, only the empirical candidate check.
pub fn reverse_order_diagnose_with(
    a: &DenseTensor,
    b: &DenseTensor,
    kind: LambdaKind,
    a_inv: &DenseTensor,
    b_inv: &DenseTensor,
    tol: f64,
) -> Result<ReverseOrderReport> {
    let ab = a.star(b)?;
    let a_inverse = penrose_check(a, a_inv, tol)?;
    let b_inverse = penrose_check(b, b_inv, tol)?;
    let candidate_tensor = b_inv.star(a_inv)?;
    let candidate = penrose_check(&ab, &candidate_tensor, tol)?;

    let hermitian = |t: Result<DenseTensor>| t.and_then(|t| hermitian_residual(&t));
    let mut conditions = Vec::new();
    if kind == LambdaKind::ONE {
        let p = a_inv.star(a)?.star(b)?.star(b_inv)?;
        conditions.push(ConditionCheck::measured(
            "A1*A*B*B1 idempotent",
            p.star(&p).and_then(|pp| relative_residual(&pp, &p)),
            tol,
        ));
    } else if kind == LambdaKind::ONE_FOUR {
        let bh = b.conj_transpose();
        conditions.push(ConditionCheck::measured(
            "A14*A*B*B^* hermitian",
            hermitian(a_inv.star(a).and_then(|t| t.star(b)).and_then(|t| t.star(&bh))),
            tol,
        ));
        conditions.push(ConditionCheck::measured(
            "A*A14*B^**B hermitian",
            hermitian(a.star(a_inv).and_then(|t| t.star(&bh)).and_then(|t| t.star(b))),
            tol,
        ));
    } else if kind == LambdaKind::ONE_THREE {
        let bh = b.conj_transpose();
        conditions.push(ConditionCheck::measured(
            "A*A13*B^**B hermitian",
            hermitian(a.star(a_inv).and_then(|t| t.star(&bh)).and_then(|t| t.star(b))),
            tol,
        ));
    } else if kind.is_moore_penrose() {
        let ah = a.conj_transpose();
        let bh = b.conj_transpose();
        let same = |x: &DenseTensor, y: &DenseTensor| relative_residual(x, y);
        conditions.push(ConditionCheck::measured("B = A^*", same(b, &ah), tol));
        conditions.push(ConditionCheck::measured("B = A^+", same(b, &pinv(a)?), tol));
        conditions.push(ConditionCheck::measured(
            "A^**A = I",
            ah.star(a)
                .and_then(|t| relative_residual(&t, &unit_like_rows(&t)?)),
            tol,
        ));
        conditions.push(ConditionCheck::measured(
            "B*B^* = I",
            b.star(&bh)
                .and_then(|t| relative_residual(&t, &unit_like_rows(&t)?)),
            tol,
        ));
    }

    let distance_to_pinv = if kind.is_moore_penrose() {
        Some(frobenius_distance(&candidate_tensor, &pinv(&ab)?)?)
    } else {
        None
    };

    Ok(ReverseOrderReport {
        kind: kind.to_string(),
        a_inverse,
        b_inverse,
        conditions,
        candidate_passes: candidate.satisfies(kind),
        candidate,
        distance_to_pinv,
        candidate_tensor,
    })
}
