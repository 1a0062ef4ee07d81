//! Multilinear systems `A∗X∗B = D`, `A∗X = B` and the pair
//! `A∗X = B, X∗D = F`.
//!
//! Every routine returns a [`SolveOutcome`]. An inconsistent system is a
//! normal outcome with `consistent == false` and the witness residual, not an
//! error. Consistent outcomes carry a particular solution and a
//! [`SolutionGenerator`] that maps a free tensor to another solution.

use crate::einstein::{kronecker, vec};
use crate::error::{Error, Result};
use crate::inverses::{penrose_check, pinv, LambdaKind, DEFAULT_TOL};
use crate::shape::TensorShape;
use crate::tensor::{relative_residual, DenseTensor};

/// Relative residual (against `1 + ‖rhs‖`) accepted by the consistency tests.
pub const CONSISTENCY_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
enum Form {
    /// `X₀ + Z − L∗Z∗R`
    TwoSided { left: DenseTensor, right: DenseTensor },
    /// `X₀ + P∗Z`
    Left { proj: DenseTensor },
    /// `X₀ + P∗Z∗Q`
    Sandwich { left: DenseTensor, right: DenseTensor },
    /// `X₀ + Z − P∗Z` computed on `vec(Z)`
    Vectorized { proj: DenseTensor },
}

/// Parametrization `Z ↦ X(Z)` of the solution set of a consistent system.
///
/// Immutable; safe to call from several threads at once.
#[derive(Clone, Debug)]
pub struct SolutionGenerator {
    x0: DenseTensor,
    form: Form,
}

impl SolutionGenerator {
    /// Shape a free tensor must have; equal to the shape of every solution.
    pub fn free_shape(&self) -> &TensorShape {
        self.x0.shape()
    }

    pub fn particular(&self) -> &DenseTensor {
        &self.x0
    }

    pub fn apply(&self, z: &DenseTensor) -> Result<DenseTensor> {
        if z.shape() != self.x0.shape() {
            return Err(Error::shape(format!(
                "free tensor must have shape {}, got {}",
                self.x0.shape(),
                z.shape()
            )));
        }
        match &self.form {
            Form::TwoSided { left, right } => {
                let lzr = left.star(z)?.star(right)?;
                Ok(&(&self.x0 + z) - &lzr)
            }
            Form::Left { proj } => Ok(&self.x0 + &proj.star(z)?),
            Form::Sandwich { left, right } => Ok(&self.x0 + &left.star(z)?.star(right)?),
            Form::Vectorized { proj } => {
                let zv = vec(z);
                let step = &zv - &proj.star(&zv)?;
                let step = step.reshape(self.x0.shape().clone())?;
                Ok(&self.x0 + &step)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub consistent: bool,
    /// Present when the system is consistent.
    pub particular: Option<DenseTensor>,
    /// Relative residual of the candidate `X₀`; for paired systems the
    /// larger of the two equations' residuals.
    pub residual: f64,
    pub tolerance: f64,
    pub generator: Option<SolutionGenerator>,
}

impl SolveOutcome {
    fn new(candidate: DenseTensor, residual: f64, consistent: bool, tol: f64, form: Form) -> Self {
        if consistent {
            Self {
                consistent,
                particular: Some(candidate.clone()),
                residual,
                tolerance: tol,
                generator: Some(SolutionGenerator { x0: candidate, form }),
            }
        } else {
            Self {
                consistent,
                particular: None,
                residual,
                tolerance: tol,
                generator: None,
            }
        }
    }
}

fn require_one_inverse(a: &DenseTensor, g: &DenseTensor, what: &str) -> Result<()> {
    let r = penrose_check(a, g, DEFAULT_TOL)?;
    if !r.satisfies(LambdaKind::ONE) {
        return Err(Error::precondition(format!(
            "{what} is not a {{1}}-inverse (residual {:.3e})",
            r.residuals[0]
        )));
    }
    Ok(())
}

fn check_axb_shapes(a: &DenseTensor, b: &DenseTensor, d: &DenseTensor) -> Result<()> {
    let want = TensorShape::from_groups(a.shape().row_extents(), b.shape().col_extents())?;
    if d.shape() != &want {
        return Err(Error::shape(format!(
            "right-hand side of A*X*B = D must have shape {want}, got {}",
            d.shape()
        )));
    }
    Ok(())
}

fn unit_on_cols(t: &DenseTensor) -> Result<DenseTensor> {
    DenseTensor::unit(t.shape().col_extents())
}

fn unit_on_rows(t: &DenseTensor) -> Result<DenseTensor> {
    DenseTensor::unit(t.shape().row_extents())
}

/// Solves `A∗X∗B = D` using `A†` and `B†` as the `{1}`-inverses.
pub fn solve_axb(a: &DenseTensor, b: &DenseTensor, d: &DenseTensor) -> Result<SolveOutcome> {
    solve_axb_tol(a, b, d, CONSISTENCY_TOL)
}

pub fn solve_axb_tol(a: &DenseTensor, b: &DenseTensor, d: &DenseTensor, tol: f64) -> Result<SolveOutcome> {
    check_axb_shapes(a, b, d)?;
    solve_axb_with(a, b, d, &pinv(a)?, &pinv(b)?, tol)
}

/// Solves `A∗X∗B = D` with caller-supplied `{1}`-inverses `ga ∈ A{1}` and
/// `gb ∈ B{1}`.
///
/// The system is consistent iff `A∗ga∗D∗gb∗B = D`; the general solution is
/// `ga∗D∗gb + Z − ga∗A∗Z∗B∗gb`.
pub fn solve_axb_with(
    a: &DenseTensor,
    b: &DenseTensor,
    d: &DenseTensor,
    ga: &DenseTensor,
    gb: &DenseTensor,
    tol: f64,
) -> Result<SolveOutcome> {
    check_axb_shapes(a, b, d)?;
    require_one_inverse(a, ga, "inverse of A")?;
    require_one_inverse(b, gb, "inverse of B")?;
    let x0 = ga.star(d)?.star(gb)?;
    let residual = relative_residual(&a.star(&x0)?.star(b)?, d)?;
    let form = Form::TwoSided {
        left: ga.star(a)?,
        right: b.star(gb)?,
    };
    Ok(SolveOutcome::new(x0, residual, residual <= tol, tol, form))
}

/// Solves `A∗X = B`.
///
/// Both settings use `G = A†`: with `use_mp == false` it plays the role of
/// an arbitrary `{1}`-inverse, with `use_mp == true` the Moore–Penrose form
/// `A†∗B + (I − A†∗A)∗W` is returned. The two generators coincide.
pub fn solve_ax(a: &DenseTensor, b: &DenseTensor, _use_mp: bool) -> Result<SolveOutcome> {
    solve_ax_with(a, b, &pinv(a)?, CONSISTENCY_TOL)
}

/// Solves `A∗X = B` with a caller-supplied `g ∈ A{1}`; solutions are
/// `g∗B + (I − g∗A)∗Y`.
pub fn solve_ax_with(a: &DenseTensor, b: &DenseTensor, g: &DenseTensor, tol: f64) -> Result<SolveOutcome> {
    if a.shape().row_extents() != b.shape().row_extents() {
        return Err(Error::shape(format!(
            "A*X = B needs B's row group to match A's: {} vs {}",
            a.shape(),
            b.shape()
        )));
    }
    require_one_inverse(a, g, "inverse of A")?;
    let x0 = g.star(b)?;
    let residual = relative_residual(&a.star(&x0)?, b)?;
    let ga = g.star(a)?;
    let form = Form::Left {
        proj: &unit_on_rows(&ga)? - &ga,
    };
    Ok(SolveOutcome::new(x0, residual, residual <= tol, tol, form))
}

/// Common solution of `A∗X = B` and `X∗D = F`.
///
/// Consistent iff each equation is solvable on its own and `A∗F = B∗D`. The
/// candidate is `A⁽¹⁾∗B + F∗D⁽¹⁾ − A⁽¹⁾∗A∗F∗D⁽¹⁾` and the generator adds
/// `(I − A⁽¹⁾∗A)∗Y∗(I − D∗D⁽¹⁾)`.
pub fn common_solution(
    a: &DenseTensor,
    b: &DenseTensor,
    d: &DenseTensor,
    f: &DenseTensor,
) -> Result<SolveOutcome> {
    common_solution_tol(a, b, d, f, CONSISTENCY_TOL)
}

pub fn common_solution_tol(
    a: &DenseTensor,
    b: &DenseTensor,
    d: &DenseTensor,
    f: &DenseTensor,
    tol: f64,
) -> Result<SolveOutcome> {
    let x_shape = TensorShape::from_groups(a.shape().col_extents(), d.shape().row_extents())?;
    let b_shape = TensorShape::from_groups(a.shape().row_extents(), d.shape().row_extents())?;
    let f_shape = TensorShape::from_groups(a.shape().col_extents(), d.shape().col_extents())?;
    if b.shape() != &b_shape || f.shape() != &f_shape {
        return Err(Error::shape(format!(
            "A*X = B, X*D = F with X of shape {x_shape} needs B {b_shape} and F {f_shape}, got {} and {}",
            b.shape(),
            f.shape()
        )));
    }
    let ga = pinv(a)?;
    let gd = pinv(d)?;
    let gaa = ga.star(a)?;
    let fgd = f.star(&gd)?;
    let x0 = &(&ga.star(b)? + &fgd) - &gaa.star(&fgd)?;

    let left_ok = relative_residual(&a.star(&ga)?.star(b)?, b)? <= tol;
    let right_ok = relative_residual(&fgd.star(d)?, f)? <= tol;
    let compatible = relative_residual(&a.star(f)?, &b.star(d)?)? <= tol;

    let residual = relative_residual(&a.star(&x0)?, b)?.max(relative_residual(&x0.star(d)?, f)?);
    let dgd = d.star(&gd)?;
    let form = Form::Sandwich {
        left: &unit_on_cols(a)? - &gaa,
        right: &unit_on_rows(&dgd)? - &dgd,
    };
    Ok(SolveOutcome::new(
        x0,
        residual,
        left_ok && right_ok && compatible,
        tol,
        form,
    ))
}

/// Solves `A∗X∗B = D` through `(A ⊗ Bᵀ)∗vec(X) = vec(D)`.
///
/// The particular solution is `(A⊗Bᵀ)†∗vec(D)`, reshaped; it is the
/// minimum-norm solution and can differ from the one [`solve_axb`] returns.
/// Free tensors are passed in the shape of `X` and vectorized internally.
pub fn solve_axb_via_kronecker(a: &DenseTensor, b: &DenseTensor, d: &DenseTensor) -> Result<SolveOutcome> {
    solve_axb_via_kronecker_tol(a, b, d, CONSISTENCY_TOL)
}

pub fn solve_axb_via_kronecker_tol(
    a: &DenseTensor,
    b: &DenseTensor,
    d: &DenseTensor,
    tol: f64,
) -> Result<SolveOutcome> {
    check_axb_shapes(a, b, d)?;
    let x_shape = TensorShape::from_groups(a.shape().col_extents(), b.shape().row_extents())?;
    let k = kronecker(a, &b.transpose());
    let gk = pinv(&k)?;
    let dv = vec(d);
    let xv = gk.star(&dv)?;
    let residual = relative_residual(&k.star(&xv)?, &dv)?;
    let x0 = xv.reshape(x_shape)?;
    let form = Form::Vectorized { proj: gk.star(&k)? };
    Ok(SolveOutcome::new(x0, residual, residual <= tol, tol, form))
}

/// Checks two claimed solutions of `A∗X = B, X∗A = D, X∗A∗X = X` against
/// each other. At most one tensor satisfies all three, so `X` and `Y` must
/// agree up to the error the residuals allow.
///
/// Returns `Err(Error::Precondition)` if either tensor violates a relation
/// by more than `tol`, otherwise whether `‖X − Y‖_F` is within the bound
/// propagated from `tol`.
pub fn verify_unique_triple(
    a: &DenseTensor,
    b: &DenseTensor,
    d: &DenseTensor,
    x: &DenseTensor,
    y: &DenseTensor,
    tol: f64,
) -> Result<bool> {
    for (name, t) in [("X", x), ("Y", y)] {
        let ax = a.star(t)?;
        let xa = t.star(a)?;
        let r = [
            relative_residual(&ax, b)?,
            relative_residual(&xa, d)?,
            relative_residual(&xa.star(t)?, t)?,
        ];
        if let Some(k) = r.iter().position(|&v| v > tol) {
            return Err(Error::precondition(format!(
                "{name} violates relation {} (residual {:.3e})",
                k + 1,
                r[k]
            )));
        }
    }
    // X = XAX = XB = XAY = DY = YAY = Y, each step off by at most tol-sized terms
    let (nx, ny) = (x.frobenius_norm(), y.frobenius_norm());
    let (nb, nd) = (b.frobenius_norm(), d.frobenius_norm());
    let bound = tol * ((1.0 + nx) + 2.0 * nx * (1.0 + nb) + 2.0 * ny * (1.0 + nd) + (1.0 + ny))
        + 64.0 * f64::EPSILON * (1.0 + nx + ny);
    Ok(crate::tensor::frobenius_distance(x, y)? <= bound)
}
