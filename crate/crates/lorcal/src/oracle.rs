//! Brute-force reference implementations used to cross-check the closed
//! forms: a scaling-and-squaring series exponential, central-difference
//! directional derivatives, a dense inverse-scaling-and-squaring logarithm,
//! and thin wrappers over the generic eigen/rank kernels.
//!
//! Nothing here calls into [`crate::expmap`]; agreement between the two
//! modules is evidence, not tautology.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::skew::SkewOp;
use crate::{complexify, numeric, real_part, Mat4C, Mat4R, C64};

/// Tunables for the reference implementations.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub series_terms: usize,
    pub scaling_threshold: f64,
    pub fd_step: f64,
    pub rank_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            series_terms: 24,
            scaling_threshold: 0.5,
            fd_step: 1e-5,
            rank_tol: 1e-8,
        }
    }
}

/// Matrix exponential by scaling and squaring of the Taylor series.
pub fn series_exp(m: &Mat4C, cfg: &OracleConfig) -> Mat4C {
    let norm = crate::max_abs_c(m);
    let mut k = 0u32;
    let mut scale = 1.0f64;
    while norm * scale > cfg.scaling_threshold && k < 60 {
        scale *= 0.5;
        k += 1;
    }
    let a = m * C64::new(scale, 0.0);
    let mut term = Mat4C::identity();
    let mut acc = Mat4C::identity();
    for j in 1..=cfg.series_terms {
        term = (term * a) / C64::new(j as f64, 0.0);
        acc += term;
    }
    for _ in 0..k {
        acc *= acc;
    }
    acc
}

/// Series exponential of a real matrix.
pub fn series_exp_real(m: &Mat4R, cfg: &OracleConfig) -> Mat4R {
    real_part(&series_exp(&complexify(m), cfg))
}

/// Central-difference directional derivative of the exponential,
/// `d/dt exp(F + tG)` at `t = 0`, with one Richardson step.
pub fn fd_derivative(f: &SkewOp, g: &SkewOp, step: f64) -> Mat4R {
    let cfg = OracleConfig::default();
    let central = |h: f64| -> Mat4R {
        let plus = series_exp_real(&f.add(&g.scale(h)).matrix(), &cfg);
        let minus = series_exp_real(&f.sub(&g.scale(h)).matrix(), &cfg);
        (plus - minus) / (2.0 * h)
    };
    let d1 = central(step);
    let d2 = central(step / 2.0);
    (d2 * 4.0 - d1) / 3.0
}

/// Numeric rank with singular values below `tol * sigma_max` counting as
/// zero.
pub fn numeric_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    numeric::numeric_rank(m, tol)
}

/// Eigenvalues and right eigenvectors of a dense complex 4x4.
pub fn eigen(m: &Mat4C) -> Result<numeric::Eigen> {
    let d = DMatrix::from_fn(4, 4, |i, j| m[(i, j)]);
    numeric::eigen(&d)
}

/// Principal dense logarithm by inverse scaling and squaring.
///
/// Fails with [`Error::BranchCut`] if the spectrum touches the closed
/// negative real axis.
pub fn dense_log(m: &Mat4C) -> Result<Mat4C> {
    let d = DMatrix::from_fn(4, 4, |i, j| m[(i, j)]);
    let eigs = numeric::eigenvalues(&d)?;
    let scale = eigs.iter().fold(0.0f64, |a, z| a.max(z.norm())).max(1.0);
    for z in &eigs {
        if z.re <= 0.0 && z.im.abs() <= 1e-12 * scale {
            return Err(Error::BranchCut);
        }
    }

    let mut x = *m;
    let mut k = 0u32;
    while crate::max_abs_c(&(x - Mat4C::identity())) > 0.25 {
        x = sqrtm(&x)?;
        k += 1;
        if k > 40 {
            return Err(Error::NoConvergence("inverse scaling for dense log"));
        }
    }
    let e = x - Mat4C::identity();
    // log(I + E) by the alternating series; |E| <= 0.25 so 40 terms land
    // far below machine precision.
    let mut term = Mat4C::identity();
    let mut acc = Mat4C::zeros();
    for j in 1..=40 {
        term *= e;
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        acc += term * C64::new(sign / j as f64, 0.0);
    }
    Ok(acc * C64::new(2f64.powi(k as i32), 0.0))
}

/// Principal matrix square root by the Denman-Beavers iteration.
fn sqrtm(m: &Mat4C) -> Result<Mat4C> {
    let mut y = *m;
    let mut z = Mat4C::identity();
    for _ in 0..60 {
        let y_inv = y
            .try_inverse()
            .ok_or(Error::NoConvergence("singular iterate in sqrtm"))?;
        let z_inv = z
            .try_inverse()
            .ok_or(Error::NoConvergence("singular iterate in sqrtm"))?;
        let y_next = (y + z_inv) * C64::new(0.5, 0.0);
        let z_next = (z + y_inv) * C64::new(0.5, 0.0);
        let delta = crate::max_abs_c(&(y_next - y));
        y = y_next;
        z = z_next;
        if delta <= 1e-15 * (1.0 + crate::max_abs_c(&y)) {
            return Ok(y);
        }
    }
    Err(Error::NoConvergence("Denman-Beavers square root"))
}
