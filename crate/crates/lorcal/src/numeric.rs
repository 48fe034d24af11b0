//! Small dense numeric kernels: a complex Schur-based eigensolver and
//! one-sided Jacobi singular values.
//!
//! Everything here targets the tiny fixed sizes (3..16) used elsewhere in
//! the crate, favouring robustness over speed. The eigensolver reduces to
//! Hessenberg form with Householder reflections, runs an explicitly shifted
//! QR iteration (Wilkinson shift) accumulating the Schur basis, and recovers
//! right eigenvectors by back-substitution on the triangular factor.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

type C = Complex64;

/// Eigenvalues and right eigenvectors of a dense complex matrix.
pub struct Eigen {
    pub values: Vec<C>,
    /// One Euclidean-normalized column per eigenvalue.
    pub vectors: DMatrix<C>,
}

impl Eigen {
    /// Max-entry residual of `A v - lambda v` over all eigenpairs.
    pub fn residual(&self, a: &DMatrix<C>) -> f64 {
        let n = a.nrows();
        let mut worst = 0.0f64;
        for k in 0..n {
            let v = self.vectors.column(k);
            let av = a * v;
            for i in 0..n {
                worst = worst.max((av[i] - self.values[k] * v[i]).norm());
            }
        }
        worst
    }
}

/// Complex Schur decomposition `A = Q T Q^H` with `T` upper triangular.
pub fn schur(a: &DMatrix<C>) -> Result<(DMatrix<C>, DMatrix<C>)> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "schur requires a square matrix");
    let mut h = a.clone();
    let mut q = DMatrix::<C>::identity(n, n);
    hessenberg(&mut h, &mut q);

    let scale = h.iter().fold(0.0f64, |acc, z| acc.max(z.norm())).max(1.0);
    let eps = f64::EPSILON;
    let mut hi = n.saturating_sub(1);
    let mut iters_since_deflation = 0usize;
    let max_iters = 80 * n.max(1);
    let mut total_iters = 0usize;

    while hi > 0 {
        // Deflate converged trailing eigenvalues.
        let mut deflated = false;
        while hi > 0 {
            let off = h[(hi, hi - 1)].norm();
            let local = h[(hi - 1, hi - 1)].norm() + h[(hi, hi)].norm();
            if off <= eps * (local + scale) {
                h[(hi, hi - 1)] = C::new(0.0, 0.0);
                hi -= 1;
                iters_since_deflation = 0;
                deflated = true;
            } else {
                break;
            }
        }
        if hi == 0 {
            break;
        }
        if deflated {
            continue;
        }

        // Active block [lo..=hi].
        let mut lo = hi;
        while lo > 0 {
            let off = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if off <= eps * (local + scale) {
                h[(lo, lo - 1)] = C::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        total_iters += 1;
        iters_since_deflation += 1;
        if total_iters > max_iters {
            return Err(Error::NoConvergence("complex QR iteration"));
        }

        // Wilkinson shift from the trailing 2x2; an occasional exceptional
        // shift breaks symmetry-induced stalls.
        let mu = if iters_since_deflation % 25 == 0 {
            h[(hi, hi)] + C::new(h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        // Explicit shifted QR sweep on the active block.
        let mut rotations = Vec::with_capacity(hi - lo);
        for i in lo..=hi {
            h[(i, i)] -= mu;
        }
        for i in lo..hi {
            let g = Givens::zeroing(h[(i, i)], h[(i + 1, i)]);
            g.apply_left(&mut h, i, i + 1);
            rotations.push((i, g));
        }
        for (i, g) in &rotations {
            g.apply_right(&mut h, *i, *i + 1);
            g.apply_right(&mut q, *i, *i + 1);
        }
        for i in lo..=hi {
            h[(i, i)] += mu;
        }
        // Clean the strictly-lower part the rotations cannot reach.
        for r in lo..=hi {
            for c in lo..r.saturating_sub(1) {
                h[(r, c)] = C::new(0.0, 0.0);
            }
        }
    }

    // Zero the strictly lower triangle (numerically tiny by construction).
    for r in 0..n {
        for c in 0..r {
            h[(r, c)] = C::new(0.0, 0.0);
        }
    }
    Ok((h, q))
}

/// Eigenvalues and right eigenvectors via the Schur form.
pub fn eigen(a: &DMatrix<C>) -> Result<Eigen> {
    let n = a.nrows();
    let (t, q) = schur(a)?;
    let values: Vec<C> = (0..n).map(|i| t[(i, i)]).collect();
    let scale = a.iter().fold(0.0f64, |acc, z| acc.max(z.norm())).max(1.0);
    let mut vectors = DMatrix::<C>::zeros(n, n);
    for k in 0..n {
        let y = triangular_eigenvector(&t, k, scale);
        let v = &q * y;
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            vectors[(i, k)] = v[i] / C::new(norm, 0.0);
        }
    }
    Ok(Eigen { values, vectors })
}

/// Eigenvalues only.
pub fn eigenvalues(a: &DMatrix<C>) -> Result<Vec<C>> {
    let (t, _) = schur(a)?;
    Ok((0..a.nrows()).map(|i| t[(i, i)]).collect())
}

fn triangular_eigenvector(t: &DMatrix<C>, k: usize, scale: f64) -> DMatrix<C> {
    let n = t.nrows();
    let mut y = DMatrix::<C>::zeros(n, 1);
    y[(k, 0)] = C::new(1.0, 0.0);
    let lam = t[(k, k)];
    for i in (0..k).rev() {
        let mut s = C::new(0.0, 0.0);
        for j in i + 1..=k {
            s += t[(i, j)] * y[(j, 0)];
        }
        let mut d = t[(i, i)] - lam;
        // Repeated diagonal entries: perturb the pivot instead of dividing
        // by zero; the residual check downstream decides usability.
        let guard = f64::EPSILON * scale;
        if d.norm() < guard {
            d = C::new(guard, 0.0);
        }
        y[(i, 0)] = -s / d;
    }
    y
}

fn wilkinson_shift(a: C, b: C, c: C, d: C) -> C {
    // Eigenvalue of [[a, b], [c, d]] closest to d.
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr - det * C::new(4.0, 0.0)).sqrt();
    let l1 = (tr + disc) * C::new(0.5, 0.0);
    let l2 = (tr - disc) * C::new(0.5, 0.0);
    if (l1 - d).norm() < (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Reduce to upper Hessenberg form in place, accumulating the orthonormal
/// similarity in `q`.
fn hessenberg(h: &mut DMatrix<C>, q: &mut DMatrix<C>) {
    let n = h.nrows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        // Householder vector for column k below the subdiagonal.
        let mut norm_x = 0.0f64;
        for i in k + 1..n {
            norm_x += h[(i, k)].norm_sqr();
        }
        let norm_x = norm_x.sqrt();
        if norm_x <= f64::EPSILON {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() > 0.0 {
            x0 / C::new(x0.norm(), 0.0)
        } else {
            C::new(1.0, 0.0)
        };
        let alpha = -phase * C::new(norm_x, 0.0);
        let mut v = vec![C::new(0.0, 0.0); n];
        for i in k + 1..n {
            v[i] = h[(i, k)];
        }
        v[k + 1] -= alpha;
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq <= f64::EPSILON * f64::EPSILON {
            continue;
        }
        let beta = 2.0 / vnorm_sq;

        // H <- P H, with P = I - beta v v^H.
        for j in 0..n {
            let mut s = C::new(0.0, 0.0);
            for i in k + 1..n {
                s += v[i].conj() * h[(i, j)];
            }
            s *= C::new(beta, 0.0);
            for i in k + 1..n {
                let vi = v[i];
                h[(i, j)] -= vi * s;
            }
        }
        // H <- H P.
        for i in 0..n {
            let mut s = C::new(0.0, 0.0);
            for j in k + 1..n {
                s += h[(i, j)] * v[j];
            }
            s *= C::new(beta, 0.0);
            for j in k + 1..n {
                let vj = v[j].conj();
                h[(i, j)] -= s * vj;
            }
        }
        // Q <- Q P.
        for i in 0..n {
            let mut s = C::new(0.0, 0.0);
            for j in k + 1..n {
                s += q[(i, j)] * v[j];
            }
            s *= C::new(beta, 0.0);
            for j in k + 1..n {
                let vj = v[j].conj();
                q[(i, j)] -= s * vj;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = C::new(0.0, 0.0);
        }
    }
}

/// Complex Givens rotation `G = [[c, s], [-conj(s), c]]` with real `c`,
/// chosen so that `G * (a, b)^T = (r, 0)^T`.
struct Givens {
    c: f64,
    s: C,
}

impl Givens {
    fn zeroing(a: C, b: C) -> Givens {
        let bn = b.norm();
        if bn == 0.0 {
            return Givens {
                c: 1.0,
                s: C::new(0.0, 0.0),
            };
        }
        let an = a.norm();
        let r = (an * an + bn * bn).sqrt();
        if an == 0.0 {
            // Any unit phase works; pick the one that makes the result real.
            return Givens {
                c: 0.0,
                s: (b / C::new(bn, 0.0)).conj(),
            };
        }
        let c = an / r;
        let s = (a / C::new(an, 0.0)) * b.conj() / C::new(r, 0.0);
        Givens { c, s }
    }

    /// Rows `i`, `j` of `m` <- G * rows.
    fn apply_left(&self, m: &mut DMatrix<C>, i: usize, j: usize) {
        let n = m.ncols();
        for col in 0..n {
            let a = m[(i, col)];
            let b = m[(j, col)];
            m[(i, col)] = a * C::new(self.c, 0.0) + self.s * b;
            m[(j, col)] = -self.s.conj() * a + b * C::new(self.c, 0.0);
        }
    }

    /// Columns `i`, `j` of `m` <- columns * G^H, with
    /// `G^H = [[c, -s], [conj(s), c]]`.
    fn apply_right(&self, m: &mut DMatrix<C>, i: usize, j: usize) {
        let n = m.nrows();
        for row in 0..n {
            let a = m[(row, i)];
            let b = m[(row, j)];
            m[(row, i)] = a * C::new(self.c, 0.0) + b * self.s.conj();
            m[(row, j)] = b * C::new(self.c, 0.0) - a * self.s;
        }
    }
}

/// Singular values of a real matrix by one-sided Jacobi orthogonalization.
pub fn singular_values(a: &DMatrix<f64>) -> Vec<f64> {
    let mut u = if a.nrows() >= a.ncols() {
        a.clone()
    } else {
        a.transpose()
    };
    let n = u.ncols();
    let eps = 1e-15;
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for i in 0..u.nrows() {
                    alpha += u[(i, p)] * u[(i, p)];
                    beta += u[(i, q)] * u[(i, q)];
                    gamma += u[(i, p)] * u[(i, q)];
                }
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..u.nrows() {
                    let up = u[(i, p)];
                    let uq = u[(i, q)];
                    u[(i, p)] = c * up - s * uq;
                    u[(i, q)] = s * up + c * uq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sigmas: Vec<f64> = (0..n)
        .map(|j| (0..u.nrows()).map(|i| u[(i, j)] * u[(i, j)]).sum::<f64>().sqrt())
        .collect();
    sigmas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sigmas
}

/// Numeric rank: singular values below `rel_tol * sigma_max` count as zero.
pub fn numeric_rank(a: &DMatrix<f64>, rel_tol: f64) -> usize {
    let sigmas = singular_values(a);
    match sigmas.first() {
        None => 0,
        Some(&smax) if smax == 0.0 => 0,
        Some(&smax) => sigmas.iter().filter(|&&s| s > rel_tol * smax).count(),
    }
}

/// Numeric rank of a complex matrix via the real embedding
/// `z -> [[Re, -Im], [Im, Re]]` (each singular value appears twice).
pub fn numeric_rank_complex(a: &DMatrix<C>, rel_tol: f64) -> usize {
    let (m, n) = (a.nrows(), a.ncols());
    let mut r = DMatrix::<f64>::zeros(2 * m, 2 * n);
    for i in 0..m {
        for j in 0..n {
            let z = a[(i, j)];
            r[(i, j)] = z.re;
            r[(i, j + n)] = -z.im;
            r[(i + m, j)] = z.im;
            r[(i + m, j + n)] = z.re;
        }
    }
    numeric_rank(&r, rel_tol) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn eigen_of_diagonal() {
        let a = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(1.0, 0.0),
            c(2.0, 1.0),
            c(-3.0, 0.5),
        ]));
        let e = eigen(&a).unwrap();
        assert!(e.residual(&a) < 1e-12);
        let mut got: Vec<(f64, f64)> = e.values.iter().map(|z| (z.re, z.im)).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((got[0].0 + 3.0).abs() < 1e-12);
    }

    #[test]
    fn eigen_of_rotation_block() {
        // [[0, -1], [1, 0]] has eigenvalues +/- i.
        let a = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let e = eigen(&a).unwrap();
        assert!(e.residual(&a) < 1e-12);
        let mut ims: Vec<f64> = e.values.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 1.0).abs() < 1e-12 && (ims[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigen_of_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [3usize, 4, 6] {
            for _ in 0..25 {
                let a = DMatrix::from_fn(n, n, |_, _| {
                    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                });
                let e = eigen(&a).unwrap();
                assert!(
                    e.residual(&a) < 1e-9,
                    "residual {} too large for n={n}",
                    e.residual(&a)
                );
            }
        }
    }

    #[test]
    fn eigen_handles_repeated_eigenvalues() {
        // diag(2, 2, 5) is semisimple with a repeated eigenvalue.
        let a = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(2.0, 0.0),
            c(2.0, 0.0),
            c(5.0, 0.0),
        ]));
        let e = eigen(&a).unwrap();
        assert!(e.residual(&a) < 1e-12);
    }

    #[test]
    fn jacobi_rank_identity_and_deficient() {
        let id = DMatrix::<f64>::identity(4, 4);
        assert_eq!(numeric_rank(&id, 1e-8), 4);
        let mut m = DMatrix::<f64>::zeros(4, 4);
        m[(0, 0)] = 3.0;
        m[(1, 1)] = 1e-12;
        assert_eq!(numeric_rank(&m, 1e-8), 1);
    }

    #[test]
    fn jacobi_singular_values_match_known() {
        // [[3, 0], [0, 4]] has singular values {4, 3}.
        let m = DMatrix::from_row_slice(2, 2, &[3.0, 0.0, 0.0, 4.0]);
        let s = singular_values(&m);
        assert!((s[0] - 4.0).abs() < 1e-12 && (s[1] - 3.0).abs() < 1e-12);
    }
}
