//! The skew-symmetric operator algebra on `R^{3,1}`.
//!
//! A [`SkewOp`] is stored as an electric/magnetic pair `(E, B)` of real
//! 3-vectors; its matrix is `[[0, E^T], [E, xB]]` where `(xB) v = v x B`.
//! The duality star swaps the pair as `(E, B) -> (-B, E)`. The two chiral
//! projections `F -> F -/+ i F*` land in the self-dual and anti-self-dual
//! sectors where every operator squares to a scalar; that scalar's square
//! root (with a fixed branch) is the operator's eigenvalue and drives the
//! whole exponential calculus downstream.

use nalgebra::{Matrix3, Matrix6, Vector3, Vector6};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::Vec4C;
use crate::{cross_c, dot_c, mul_i, mul_neg_i, Mat4C, Mat4R, Vec3C, Vec3R, C64};

/// Relative threshold below which `lambda^2` counts as zero.
pub(crate) fn nullity_tol(a_norm_sq: f64) -> f64 {
    1e-9 * (1.0 + a_norm_sq)
}

/// Real element of `so(3,1)` in `(E, B)` form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewOp {
    e: Vec3R,
    b: Vec3R,
}

/// Chirality tag: the self-dual sector is the `+i` eigenspace of the star,
/// the anti-self-dual sector the `-i` eigenspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chirality {
    #[serde(rename = "c")]
    SelfDual,
    #[serde(rename = "cbar")]
    AntiSelfDual,
}

/// Element of one chiral sector, stored as its complex 3-vector `A`.
///
/// The matrix realization is `[[0, A^T], [A, -i(xA)]]` for the self-dual
/// sector and `[[0, A^T], [A, +i(xA)]]` for the anti-self-dual one; both
/// square to `(A . A) I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralOp {
    a: Vec3C,
    chirality: Chirality,
}

/// Eigenvalue scalar of a chiral operator, branch-fixed so that
/// `Re >= 0`, and `Im >= 0` when `Re = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub lambda: C64,
}

/// Classification of an operator by its null eigenvector count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpClass {
    Zero,
    Null,
    Generic,
}

impl SkewOp {
    pub fn new(e: Vec3R, b: Vec3R) -> Self {
        SkewOp { e, b }
    }

    pub fn zero() -> Self {
        SkewOp {
            e: Vec3R::zeros(),
            b: Vec3R::zeros(),
        }
    }

    pub fn from_e(e: Vec3R) -> Self {
        SkewOp::new(e, Vec3R::zeros())
    }

    pub fn from_b(b: Vec3R) -> Self {
        SkewOp::new(Vec3R::zeros(), b)
    }

    pub fn e(&self) -> Vec3R {
        self.e
    }

    pub fn b(&self) -> Vec3R {
        self.b
    }

    /// Euclidean norm of the six real components.
    pub fn norm(&self) -> f64 {
        (self.e.norm_squared() + self.b.norm_squared()).sqrt()
    }

    pub fn scale(&self, k: f64) -> Self {
        SkewOp::new(self.e * k, self.b * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        SkewOp::new(self.e + other.e, self.b + other.b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        SkewOp::new(self.e - other.e, self.b - other.b)
    }

    /// 4x4 real matrix `[[0, E^T], [E, xB]]`.
    pub fn matrix(&self) -> Mat4R {
        let (e, b) = (self.e, self.b);
        Mat4R::new(
            0.0, e.x, e.y, e.z, //
            e.x, 0.0, b.z, -b.y, //
            e.y, -b.z, 0.0, b.x, //
            e.z, b.y, -b.x, 0.0,
        )
    }

    pub fn matrix_c(&self) -> Mat4C {
        crate::complexify(&self.matrix())
    }

    /// Extract `(E, B)` from the matrix slots. The caller is responsible for
    /// the matrix being metric-skew; combine with [`skew_project`] otherwise.
    pub fn from_matrix(m: &Mat4R) -> Self {
        SkewOp::new(
            Vec3R::new(m[(1, 0)], m[(2, 0)], m[(3, 0)]),
            Vec3R::new(m[(2, 3)], m[(3, 1)], m[(1, 2)]),
        )
    }

    /// Duality star `(E, B) -> (-B, E)`; applying it twice negates.
    pub fn dual(&self) -> Self {
        SkewOp::new(-self.b, self.e)
    }

    /// Self-dual projection `F - i F*`, with `A = E + iB`.
    pub fn self_dual(&self) -> ChiralOp {
        ChiralOp {
            a: Vec3C::new(
                C64::new(self.e.x, self.b.x),
                C64::new(self.e.y, self.b.y),
                C64::new(self.e.z, self.b.z),
            ),
            chirality: Chirality::SelfDual,
        }
    }

    /// Anti-self-dual projection `F + i F*`, with `A = E - iB`.
    pub fn anti_self_dual(&self) -> ChiralOp {
        ChiralOp {
            a: Vec3C::new(
                C64::new(self.e.x, -self.b.x),
                C64::new(self.e.y, -self.b.y),
                C64::new(self.e.z, -self.b.z),
            ),
            chirality: Chirality::AntiSelfDual,
        }
    }

    /// Matrix commutator `[F, G]`, itself metric-skew.
    pub fn bracket(&self, other: &SkewOp) -> SkewOp {
        let m = self.matrix() * other.matrix() - other.matrix() * self.matrix();
        SkewOp::from_matrix(&m)
    }

    /// Coordinates in the `{E_x, E_y, E_z, B_x, B_y, B_z}` basis.
    pub fn coords(&self) -> Vector6<f64> {
        Vector6::new(self.e.x, self.e.y, self.e.z, self.b.x, self.b.y, self.b.z)
    }

    pub fn from_coords(v: &Vector6<f64>) -> Self {
        SkewOp::new(Vec3R::new(v[0], v[1], v[2]), Vec3R::new(v[3], v[4], v[5]))
    }

    /// 6x6 matrix of `G -> [F, G]` in the `{E_i, B_i}` basis.
    ///
    /// Its spectrum is `{0, 0, +/-lambda, +/-conj(lambda)}` where `lambda`
    /// is the self-dual eigenvalue; the factor-2 relation with the chiral
    /// adjoint lives on the chiral side (`2 c ad(F) = ad(cF) c`).
    pub fn ad(&self) -> Matrix6<f64> {
        let mut m = Matrix6::zeros();
        for j in 0..6 {
            let mut coords = Vector6::zeros();
            coords[j] = 1.0;
            let g = SkewOp::from_coords(&coords);
            let col = self.bracket(&g).coords();
            for i in 0..6 {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    /// Classify by the chiral eigenvalue: zero operator, null
    /// (`lambda = 0`), or generic.
    pub fn classify(&self) -> OpClass {
        self.self_dual().classify()
    }

    /// Real null eigendirections, `t`-component normalized to 1.
    ///
    /// A generic operator has two (the `+lambda` direction first), a null
    /// operator one, the zero operator none (error).
    pub fn null_eigenvectors(&self) -> Result<Vec<Vec4C>> {
        let x = self.self_dual();
        match self.classify() {
            OpClass::Zero => Err(Error::ZeroOperator),
            OpClass::Null => {
                // Kernel of both chiral matrices: s = (1, unit(E x B)).
                let k = self.e.cross(&self.b);
                let kn = k.norm();
                if kn <= 1e-14 * (1.0 + self.norm()) {
                    // Degenerate null data; fall back to the matrix kernel.
                    return Err(Error::ZeroOperator);
                }
                let w = k / kn;
                Ok(vec![Vec4C::from_real(1.0, w.x, w.y, w.z)])
            }
            OpClass::Generic => {
                let lambda = x.eigenvalue().lambda;
                let mc = x.matrix();
                let mcbar = self.anti_self_dual().matrix();
                let lam = lambda;
                let lam_bar = lambda.conj();
                // Simultaneous +lambda eigenvector of the self-dual matrix
                // and +conj(lambda) eigenvector of the anti-self-dual one is
                // the real null direction; project a seed vector with both
                // spectral projectors.
                let half = C64::new(0.5, 0.0);
                let id = Mat4C::identity();
                let mut out = Vec::with_capacity(2);
                for sign in [1.0f64, -1.0] {
                    let sgn = C64::new(sign, 0.0);
                    let p_c = (id + mc * (sgn / lam)) * half;
                    let p_cbar = (id + mcbar * (sgn / lam_bar)) * half;
                    let proj = p_cbar * p_c;
                    let mut best: Option<nalgebra::Vector4<C64>> = None;
                    let mut best_norm = 0.0;
                    for seed in 0..4 {
                        let mut v = nalgebra::Vector4::from_element(C64::new(0.0, 0.0));
                        v[seed] = C64::new(1.0, 0.0);
                        let w = proj * v;
                        let n = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                        if n > best_norm {
                            best_norm = n;
                            best = Some(w);
                        }
                    }
                    let mut w = best.ok_or(Error::ZeroOperator)?;
                    // Strip the global phase so the vector is real, then
                    // normalize the time component to one.
                    let pivot = (0..4)
                        .max_by(|&i, &j| w[i].norm().partial_cmp(&w[j].norm()).unwrap())
                        .unwrap();
                    let phase = w[pivot] / C64::new(w[pivot].norm(), 0.0);
                    w = w.map(|z| z / phase);
                    if w[0].norm() <= 1e-12 * best_norm {
                        return Err(Error::ZeroOperator);
                    }
                    let t = w[0];
                    w = w.map(|z| z / t);
                    out.push(Vec4C(w.map(|z| C64::new(z.re, 0.0))));
                }
                Ok(out)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SkewWire {
    #[serde(rename = "E")]
    e: [f64; 3],
    #[serde(rename = "B")]
    b: [f64; 3],
}

impl Serialize for SkewOp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SkewWire {
            e: [self.e.x, self.e.y, self.e.z],
            b: [self.b.x, self.b.y, self.b.z],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewOp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SkewWire::deserialize(d)?;
        Ok(SkewOp::new(Vec3R::from(w.e), Vec3R::from(w.b)))
    }
}

impl ChiralOp {
    pub fn new(a: Vec3C, chirality: Chirality) -> Self {
        ChiralOp { a, chirality }
    }

    pub fn zero(chirality: Chirality) -> Self {
        ChiralOp {
            a: Vec3C::from_element(C64::new(0.0, 0.0)),
            chirality,
        }
    }

    pub fn a(&self) -> Vec3C {
        self.a
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn scale(&self, k: C64) -> Self {
        ChiralOp::new(self.a.map(|z| z * k), self.chirality)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.chirality != other.chirality {
            return Err(Error::MixedChirality);
        }
        Ok(ChiralOp::new(self.a + other.a, self.chirality))
    }

    pub fn norm(&self) -> f64 {
        self.a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The real operator `F` whose chiral projection this is (for a
    /// self-dual `X` the unique real `F` with `F - iF* = X`).
    pub fn real_generator(&self) -> SkewOp {
        match self.chirality {
            Chirality::SelfDual => SkewOp::new(
                Vec3R::new(self.a.x.re, self.a.y.re, self.a.z.re),
                Vec3R::new(self.a.x.im, self.a.y.im, self.a.z.im),
            ),
            Chirality::AntiSelfDual => SkewOp::new(
                Vec3R::new(self.a.x.re, self.a.y.re, self.a.z.re),
                Vec3R::new(-self.a.x.im, -self.a.y.im, -self.a.z.im),
            ),
        }
    }

    /// 4x4 complex matrix `[[0, A^T], [A, -/+ i(xA)]]`.
    ///
    /// Assembled with exact component swaps so that algebraic identities on
    /// integer-valued inputs hold bit-exactly.
    pub fn matrix(&self) -> Mat4C {
        let a = self.a;
        let zero = C64::new(0.0, 0.0);
        // Block (xA) entries; the chirality decides the factor -/+ i.
        let (axy, axz, ayx, ayz, azx, azy) = match self.chirality {
            // -i * (xA): (xA)[0][1] = A_z, etc.
            Chirality::SelfDual => (
                mul_neg_i(a.z),
                mul_neg_i(-a.y),
                mul_neg_i(-a.z),
                mul_neg_i(a.x),
                mul_neg_i(a.y),
                mul_neg_i(-a.x),
            ),
            Chirality::AntiSelfDual => (
                mul_i(a.z),
                mul_i(-a.y),
                mul_i(-a.z),
                mul_i(a.x),
                mul_i(a.y),
                mul_i(-a.x),
            ),
        };
        Mat4C::new(
            zero, a.x, a.y, a.z, //
            a.x, zero, axy, axz, //
            a.y, ayx, zero, ayz, //
            a.z, azx, azy, zero,
        )
    }

    /// `lambda^2 = A . A` (bilinear, unconjugated).
    pub fn lambda_sq(&self) -> C64 {
        dot_c(&self.a, &self.a)
    }

    /// Branch-fixed eigenvalue: `Re >= 0`, ties broken by `Im >= 0`.
    pub fn eigenvalue(&self) -> Eigenvalue {
        let mut lambda = self.lambda_sq().sqrt();
        if lambda.re < 0.0 || (lambda.re == 0.0 && lambda.im < 0.0) {
            lambda = -lambda;
        }
        Eigenvalue { lambda }
    }

    /// Chiral inner product `A_X . A_Y`; equals half the top-left entry of
    /// `XY + YX`.
    pub fn inner(&self, other: &ChiralOp) -> Result<C64> {
        if self.chirality != other.chirality {
            return Err(Error::MixedChirality);
        }
        Ok(dot_c(&self.a, &other.a))
    }

    pub fn classify(&self) -> OpClass {
        let nsq = self.a.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if nsq.sqrt() <= 1e-12 {
            OpClass::Zero
        } else if self.lambda_sq().norm() <= nullity_tol(nsq) {
            OpClass::Null
        } else {
            OpClass::Generic
        }
    }

    /// Bracket within a sector: `A -> +/- 2i (A_X x A_Y)`.
    ///
    /// Opposite sectors commute, so the cross-chirality bracket is the zero
    /// operator (tagged with the left operand's chirality), not an error.
    pub fn bracket(&self, other: &ChiralOp) -> ChiralOp {
        if self.chirality != other.chirality {
            return ChiralOp::zero(self.chirality);
        }
        let cross = cross_c(&self.a, &other.a);
        let factor = match self.chirality {
            Chirality::SelfDual => C64::new(0.0, 2.0),
            Chirality::AntiSelfDual => C64::new(0.0, -2.0),
        };
        ChiralOp::new(cross.map(|z| z * factor), self.chirality)
    }

    /// 3x3 matrix of the adjoint action `A -> +/- 2i (A_self x A)` on the
    /// operator's own sector.
    pub fn ad(&self) -> Matrix3<C64> {
        let f = match self.chirality {
            Chirality::SelfDual => C64::new(0.0, 2.0),
            Chirality::AntiSelfDual => C64::new(0.0, -2.0),
        };
        let a = self.a;
        let z = C64::new(0.0, 0.0);
        // Matrix of v -> a x v, columns a x e_j, scaled by the factor.
        Matrix3::new(
            z, -a.z * f, a.y * f, //
            a.z * f, z, -a.x * f, //
            -a.y * f, a.x * f, z,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct ChiralWire {
    #[serde(rename = "A_re")]
    a_re: [f64; 3],
    #[serde(rename = "A_im")]
    a_im: [f64; 3],
    chirality: Chirality,
}

impl Serialize for ChiralOp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChiralWire {
            a_re: [self.a.x.re, self.a.y.re, self.a.z.re],
            a_im: [self.a.x.im, self.a.y.im, self.a.z.im],
            chirality: self.chirality,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChiralOp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ChiralWire::deserialize(d)?;
        Ok(ChiralOp::new(
            Vec3C::new(
                C64::new(w.a_re[0], w.a_im[0]),
                C64::new(w.a_re[1], w.a_im[1]),
                C64::new(w.a_re[2], w.a_im[2]),
            ),
            w.chirality,
        ))
    }
}

/// Star map on a complex metric-skew matrix, via exact component swaps.
pub fn star_mat(m: &Mat4C) -> Mat4C {
    let (e, b) = extract_eb(m);
    build_skew_c(&b.map(|z| -z), &e)
}

/// The linear map `M -> M - i M*` on complex metric-skew matrices.
pub fn c_mat(m: &Mat4C) -> Mat4C {
    let (e, b) = extract_eb(m);
    // E' = E + iB, B' = B - iE; all entries are component swaps and sums.
    let e_new = Vec3C::new(e.x + mul_i(b.x), e.y + mul_i(b.y), e.z + mul_i(b.z));
    let b_new = Vec3C::new(b.x + mul_neg_i(e.x), b.y + mul_neg_i(e.y), b.z + mul_neg_i(e.z));
    build_skew_c(&e_new, &b_new)
}

/// The linear map `M -> M + i M*` on complex metric-skew matrices.
pub fn cbar_mat(m: &Mat4C) -> Mat4C {
    let (e, b) = extract_eb(m);
    let e_new = Vec3C::new(e.x + mul_neg_i(b.x), e.y + mul_neg_i(b.y), e.z + mul_neg_i(b.z));
    let b_new = Vec3C::new(b.x + mul_i(e.x), b.y + mul_i(e.y), b.z + mul_i(e.z));
    build_skew_c(&e_new, &b_new)
}

/// Complex `(E, B)` slots of a metric-skew matrix.
pub fn extract_eb(m: &Mat4C) -> (Vec3C, Vec3C) {
    (
        Vec3C::new(m[(1, 0)], m[(2, 0)], m[(3, 0)]),
        Vec3C::new(m[(2, 3)], m[(3, 1)], m[(1, 2)]),
    )
}

fn build_skew_c(e: &Vec3C, b: &Vec3C) -> Mat4C {
    let z = C64::new(0.0, 0.0);
    Mat4C::new(
        z, e.x, e.y, e.z, //
        e.x, z, b.z, -b.y, //
        e.y, -b.z, z, b.x, //
        e.z, b.y, -b.x, z,
    )
}

/// Project a real 4x4 matrix onto its metric-skew part
/// `K -> (K - eta K^T eta) / 2` and read off the operator.
pub fn skew_project(m: &Mat4R) -> SkewOp {
    let eta = crate::metric();
    let k = (m - eta * m.transpose() * eta) * 0.5;
    SkewOp::from_matrix(&k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn ex() -> SkewOp {
        SkewOp::from_e(Vec3R::x())
    }

    fn bz() -> SkewOp {
        SkewOp::from_b(Vec3R::z())
    }

    #[test]
    fn matrix_is_metric_skew() {
        let f = SkewOp::new(Vec3R::new(0.3, -1.2, 0.5), Vec3R::new(2.0, 0.1, -0.7));
        let m = f.matrix();
        let eta = crate::metric();
        let defect = (eta * m + (eta * m).transpose()).norm();
        assert!(defect < 1e-12);
        assert_eq!(m.trace(), 0.0);
    }

    #[test]
    fn dual_of_boost_is_rotation() {
        // The dual of E_x is B_x: block form has E' = -B = 0, B' = E = e_x.
        let d = ex().dual();
        assert_eq!(d, SkewOp::from_b(Vec3R::x()));
    }

    #[test]
    fn dual_squares_to_minus_identity() {
        let f = SkewOp::new(Vec3R::new(1.0, 2.0, 3.0), Vec3R::new(-0.5, 0.25, 4.0));
        assert_eq!(f.dual().dual(), f.scale(-1.0));
        assert_eq!(SkewOp::zero().dual(), SkewOp::zero());
    }

    #[test]
    fn chiral_vectors() {
        let x = ex().self_dual();
        assert_eq!(x.a(), Vec3C::new(c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)));
        let y = bz().self_dual();
        assert_eq!(y.a(), Vec3C::new(c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 1.0)));
    }

    #[test]
    fn chiral_sum_recovers_twice_the_operator() {
        let f = SkewOp::new(Vec3R::new(0.7, -0.4, 1.1), Vec3R::new(0.2, 0.9, -1.3));
        let sum = f.self_dual().matrix() + f.anti_self_dual().matrix();
        assert_eq!(sum, f.matrix_c() * c64(2.0, 0.0));
    }

    #[test]
    fn chiral_matrix_squares_to_lambda_sq() {
        let f = SkewOp::new(Vec3R::new(0.9, 0.1, -0.6), Vec3R::new(-0.2, 1.4, 0.8));
        for x in [f.self_dual(), f.anti_self_dual()] {
            let m = x.matrix();
            let diff = m * m - Mat4C::identity() * x.lambda_sq();
            assert!(crate::max_abs_c(&diff) < 1e-12);
        }
    }

    #[test]
    fn eigenvalue_branch() {
        // Boost: lambda = 1.
        assert_eq!(ex().self_dual().eigenvalue().lambda, c64(1.0, 0.0));
        // Rotation: A = i e_z, lambda^2 = -1, branch picks +i.
        assert_eq!(bz().self_dual().eigenvalue().lambda, c64(0.0, 1.0));
        // Null: A = (1, i, 0).
        let n = SkewOp::new(Vec3R::x(), Vec3R::y());
        assert_eq!(n.self_dual().eigenvalue().lambda, c64(0.0, 0.0));
    }

    #[test]
    fn inner_matches_anticommutator() {
        let f = SkewOp::new(Vec3R::new(0.4, -0.9, 0.3), Vec3R::new(1.2, 0.5, -0.1));
        let g = SkewOp::new(Vec3R::new(-0.8, 0.2, 0.9), Vec3R::new(0.3, -1.1, 0.6));
        let (x, y) = (f.self_dual(), g.self_dual());
        let ip = x.inner(&y).unwrap();
        let anti = x.matrix() * y.matrix() + y.matrix() * x.matrix();
        assert!((anti[(0, 0)] * c64(0.5, 0.0) - ip).norm() < 1e-12);
        // And the full anticommutator is that scalar times the identity.
        let diff = anti - Mat4C::identity() * (ip * c64(2.0, 0.0));
        assert!(crate::max_abs_c(&diff) < 1e-12);
    }

    #[test]
    fn inner_rejects_mixed_chirality() {
        let err = ex()
            .self_dual()
            .inner(&ex().anti_self_dual())
            .unwrap_err();
        assert_eq!(err, Error::MixedChirality);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(SkewOp::zero().classify(), OpClass::Zero);
        assert_eq!(SkewOp::new(Vec3R::x(), Vec3R::y()).classify(), OpClass::Null);
        assert_eq!(ex().classify(), OpClass::Generic);
    }

    #[test]
    fn bracket_of_chiral_boosts() {
        // [cE_x, cE_y] has A = 2i e_z.
        let x = ex().self_dual();
        let y = SkewOp::from_e(Vec3R::y()).self_dual();
        let br = x.bracket(&y);
        assert_eq!(
            br.a(),
            Vec3C::new(c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 2.0))
        );
        // Matches the matrix commutator.
        let m = x.matrix() * y.matrix() - y.matrix() * x.matrix();
        assert!(crate::max_diff_c(&m, &br.matrix()) < 1e-14);
    }

    #[test]
    fn bracket_with_self_vanishes() {
        assert_eq!(ex().bracket(&ex()), SkewOp::zero());
    }

    #[test]
    fn opposite_chiralities_commute() {
        let f = SkewOp::new(Vec3R::new(0.3, 0.8, -0.5), Vec3R::new(-1.0, 0.2, 0.4));
        let g = SkewOp::new(Vec3R::new(0.9, -0.3, 0.1), Vec3R::new(0.5, 0.7, -0.2));
        let a = f.self_dual().matrix();
        let b = g.anti_self_dual().matrix();
        assert!(crate::max_diff_c(&(a * b), &(b * a)) < 1e-12);
        // The chiral bracket reports the zero operator for mixed sectors.
        let z = f.self_dual().bracket(&g.anti_self_dual());
        assert_eq!(z.norm(), 0.0);
    }

    #[test]
    fn real_bracket_of_boosts_is_rotation() {
        let exy = SkewOp::from_e(Vec3R::x()).bracket(&SkewOp::from_e(Vec3R::y()));
        assert_eq!(exy, SkewOp::from_b(Vec3R::z()));
    }

    #[test]
    fn chiral_ad_matches_bracket() {
        let f = SkewOp::new(Vec3R::new(0.2, -0.7, 0.4), Vec3R::new(0.9, 0.3, -0.6));
        let g = SkewOp::new(Vec3R::new(-0.4, 0.1, 0.8), Vec3R::new(0.2, -0.9, 0.5));
        let (x, y) = (f.self_dual(), g.self_dual());
        let via_ad = x.ad() * y.a();
        let via_bracket = x.bracket(&y).a();
        assert!((via_ad - via_bracket).norm() < 1e-12);
    }

    #[test]
    fn chiral_relation_between_adjoints() {
        // 2 c([F, G]) = [cF, cG] as matrices, random-ish F, G.
        let f = SkewOp::new(Vec3R::new(1.1, -0.2, 0.5), Vec3R::new(0.4, 0.8, -0.9));
        let g = SkewOp::new(Vec3R::new(-0.6, 0.9, 0.2), Vec3R::new(1.0, -0.3, 0.7));
        let lhs = f.bracket(&g).self_dual().matrix() * c64(2.0, 0.0);
        let rhs = f.self_dual().bracket(&g.self_dual()).matrix();
        assert!(crate::max_diff_c(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn ad_matrix_of_zero() {
        assert_eq!(SkewOp::zero().ad(), Matrix6::zeros());
    }

    #[test]
    fn ad_chiral_of_rotation_eigenvalues() {
        // ad(cB_z): A -> 2i (i e_z) x A = -2 e_z x A, eigenvalues {0, +/-2i}.
        let m = bz().self_dual().ad();
        let dm = nalgebra::DMatrix::from_fn(3, 3, |i, j| m[(i, j)]);
        let mut eigs = crate::numeric::eigenvalues(&dm).unwrap();
        eigs.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((eigs[0] - c64(0.0, -2.0)).norm() < 1e-10);
        assert!(eigs[1].norm() < 1e-10);
        assert!((eigs[2] - c64(0.0, 2.0)).norm() < 1e-10);
    }

    #[test]
    fn null_eigenvectors_of_boost() {
        let dirs = ex().null_eigenvectors().unwrap();
        assert_eq!(dirs.len(), 2);
        // +lambda direction first: e0 + e1; then e0 - e1.
        let plus = Vec4C::from_real(1.0, 1.0, 0.0, 0.0);
        let minus = Vec4C::from_real(1.0, -1.0, 0.0, 0.0);
        assert!(dirs[0].sub(&plus).max_abs() < 1e-10);
        assert!(dirs[1].sub(&minus).max_abs() < 1e-10);
    }

    #[test]
    fn null_eigenvectors_of_null_operator() {
        let n = SkewOp::new(Vec3R::x(), Vec3R::y());
        let dirs = n.null_eigenvectors().unwrap();
        assert_eq!(dirs.len(), 1);
        let expected = Vec4C::from_real(1.0, 0.0, 0.0, 1.0);
        assert!(dirs[0].sub(&expected).max_abs() < 1e-12);
    }

    #[test]
    fn null_eigenvectors_of_rotation() {
        // cB_z at +lambda = +i holds e0 + e3.
        let dirs = bz().null_eigenvectors().unwrap();
        assert_eq!(dirs.len(), 2);
        let plus = Vec4C::from_real(1.0, 0.0, 0.0, 1.0);
        let minus = Vec4C::from_real(1.0, 0.0, 0.0, -1.0);
        assert!(dirs[0].sub(&plus).max_abs() < 1e-10);
        assert!(dirs[1].sub(&minus).max_abs() < 1e-10);
        // And they are genuine chiral eigenvectors.
        let x = bz().self_dual();
        let lam = x.eigenvalue().lambda;
        let m = x.matrix();
        let v = dirs[0].0;
        let resid = m * v - v * lam;
        assert!(resid.iter().map(|z| z.norm()).fold(0.0f64, f64::max) < 1e-10);
    }

    #[test]
    fn null_eigenvectors_reject_zero() {
        assert_eq!(
            SkewOp::zero().null_eigenvectors().unwrap_err(),
            Error::ZeroOperator
        );
    }

    #[test]
    fn null_eigenvectors_of_mixed_rotation() {
        // E = e_x, B = 2 e_z: rotation-type with a non-trivial frame; the
        // real null directions are (1, 0, -1/2, -/+ sqrt(3)/2).
        let f = SkewOp::new(Vec3R::x(), Vec3R::z() * 2.0);
        let dirs = f.null_eigenvectors().unwrap();
        assert_eq!(dirs.len(), 2);
        for s in &dirs {
            let v = s.0;
            let null_defect = crate::minkowski::inner_c(s, s).norm();
            assert!(null_defect < 1e-9, "not null: {null_defect}");
            // Real eigenvector of the real matrix with eigenvalue 0 here.
            let fv = f.matrix_c() * v;
            assert!(fv.iter().map(|z| z.norm()).fold(0.0f64, f64::max) < 1e-9);
        }
        let y = dirs[0].0[2].re;
        assert!((y + 0.5).abs() < 1e-9);
    }

    #[test]
    fn star_and_c_maps_on_matrices_are_exact() {
        let f = SkewOp::new(Vec3R::new(0.3, -0.8, 1.7), Vec3R::new(-0.4, 0.6, 0.9));
        let m = f.matrix_c();
        // c + cbar = 2 id, c o cbar = 0, c o c = 2c; bit-exact.
        assert_eq!(c_mat(&m) + cbar_mat(&m), m * c64(2.0, 0.0));
        assert_eq!(c_mat(&cbar_mat(&m)), Mat4C::zeros());
        assert_eq!(cbar_mat(&c_mat(&m)), Mat4C::zeros());
        assert_eq!(c_mat(&c_mat(&m)), c_mat(&m) * c64(2.0, 0.0));
        assert_eq!(cbar_mat(&cbar_mat(&m)), cbar_mat(&m) * c64(2.0, 0.0));
        // Star of star negates.
        assert_eq!(star_mat(&star_mat(&m)), m * c64(-1.0, 0.0));
        // c_mat agrees with the ChiralOp construction.
        assert_eq!(c_mat(&m), f.self_dual().matrix());
        assert_eq!(cbar_mat(&m), f.anti_self_dual().matrix());
    }

    #[test]
    fn star_commutes_with_operator() {
        let f = SkewOp::new(Vec3R::new(0.5, 1.2, -0.3), Vec3R::new(0.8, -0.2, 0.6));
        let (m, ms) = (f.matrix(), f.dual().matrix());
        assert!(crate::max_diff_r(&(m * ms), &(ms * m)) < 1e-12);
    }

    #[test]
    fn skew_json_shape() {
        let f = SkewOp::new(Vec3R::new(1.0, 2.0, 3.0), Vec3R::new(-1.0, 0.0, 0.5));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"E":[1.0,2.0,3.0],"B":[-1.0,0.0,0.5]}"#);
        assert_eq!(serde_json::from_str::<SkewOp>(&s).unwrap(), f);
    }

    #[test]
    fn chiral_json_shape() {
        let x = bz().self_dual();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"A_re":[0.0,0.0,0.0],"A_im":[0.0,0.0,1.0],"chirality":"c"}"#
        );
        assert_eq!(serde_json::from_str::<ChiralOp>(&s).unwrap(), x);
    }
}
