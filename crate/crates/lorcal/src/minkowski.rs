//! Minkowski 4-vectors over the reals and the complexes.
//!
//! The fixed orthonormal basis is `e0..e3` with `<e0,e0> = -1` and
//! `<ei,ej> = delta_ij` otherwise. Two inner products coexist: the bilinear
//! extension of the metric (which has null vectors) and the Hermitian form
//! `<<v,w>> = <v, conj(w)>` (which is conjugate-symmetric).

use nalgebra::{Vector3, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{cross_c, Vec3C, C64};

/// Complex 4-vector with components (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec4C(pub Vector4<Complex64>);

impl Vec4C {
    pub fn new(t: C64, x: C64, y: C64, z: C64) -> Self {
        Vec4C(Vector4::new(t, x, y, z))
    }

    pub fn from_real(t: f64, x: f64, y: f64, z: f64) -> Self {
        Vec4C(Vector4::new(
            C64::new(t, 0.0),
            C64::new(x, 0.0),
            C64::new(y, 0.0),
            C64::new(z, 0.0),
        ))
    }

    /// The basis vector `e_i`, `i` in `0..4`.
    pub fn basis(i: usize) -> Self {
        let mut v = Vector4::from_element(C64::new(0.0, 0.0));
        v[i] = C64::new(1.0, 0.0);
        Vec4C(v)
    }

    pub fn zero() -> Self {
        Vec4C(Vector4::from_element(C64::new(0.0, 0.0)))
    }

    pub fn t(&self) -> C64 {
        self.0[0]
    }

    /// Spatial part (x, y, z).
    pub fn spatial(&self) -> Vec3C {
        Vector3::new(self.0[1], self.0[2], self.0[3])
    }

    pub fn from_parts(t: C64, spatial: &Vec3C) -> Self {
        Vec4C(Vector4::new(t, spatial.x, spatial.y, spatial.z))
    }

    pub fn conj(&self) -> Self {
        Vec4C(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, k: C64) -> Self {
        Vec4C(self.0.map(|z| z * k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Vec4C(self.0 + other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vec4C(self.0 - other.0)
    }

    /// Euclidean norm of the component vector in `C^4`; used only for
    /// tolerance scaling, never as a geometric quantity.
    pub fn herm_norm_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }
}

#[derive(Serialize, Deserialize)]
struct Vec4CWire {
    re: [f64; 4],
    im: [f64; 4],
}

impl Serialize for Vec4C {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Vec4CWire {
            re: [self.0[0].re, self.0[1].re, self.0[2].re, self.0[3].re],
            im: [self.0[0].im, self.0[1].im, self.0[2].im, self.0[3].im],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vec4C {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Vec4CWire::deserialize(d)?;
        Ok(Vec4C(Vector4::new(
            C64::new(w.re[0], w.im[0]),
            C64::new(w.re[1], w.im[1]),
            C64::new(w.re[2], w.im[2]),
            C64::new(w.re[3], w.im[3]),
        )))
    }
}

/// Bilinear inner product of signature `-+++`, extended complex-linearly in
/// both slots.
pub fn inner_c(v: &Vec4C, w: &Vec4C) -> C64 {
    -v.0[0] * w.0[0] + v.0[1] * w.0[1] + v.0[2] * w.0[2] + v.0[3] * w.0[3]
}

/// Hermitian inner product `<<v,w>> = <v, conj(w)>`.
pub fn inner_hermitian(v: &Vec4C, w: &Vec4C) -> C64 {
    inner_c(v, &w.conj())
}

/// Future-pointing unit timelike real 4-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observer(Vector4<f64>);

impl Observer {
    /// Validates `<u,u> = -1` and a positive time component.
    pub fn new(v: Vector4<f64>) -> Result<Observer> {
        let norm = -v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
        if (norm + 1.0).abs() > 1e-9 * (1.0 + v.norm_squared()) {
            return Err(Error::InvalidState(format!(
                "observer norm is {norm:.6}, expected -1"
            )));
        }
        if v[0] <= 0.0 {
            return Err(Error::InvalidState(
                "observer must be future pointing (t > 0)".into(),
            ));
        }
        Ok(Observer(v))
    }

    /// The canonical observer `e0`.
    pub fn e0() -> Observer {
        Observer(Vector4::new(1.0, 0.0, 0.0, 0.0))
    }

    pub fn vector(&self) -> Vector4<f64> {
        self.0
    }

    pub fn as_vec4c(&self) -> Vec4C {
        Vec4C::from_real(self.0[0], self.0[1], self.0[2], self.0[3])
    }

    pub fn is_e0(&self) -> bool {
        (self.0 - Vector4::new(1.0, 0.0, 0.0, 0.0)).norm() <= 1e-12
    }
}

/// The two families of totally null complex 2-planes, plus the degenerate
/// verdict for planes that are not totally null.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullPlaneType {
    /// Plane bivector annihilated by the anti-self-dual projection (the
    /// plane spanned by `{e0+e1, e2+i*e3}` is the anchor of this family).
    Alpha,
    /// Plane bivector annihilated by the self-dual projection.
    Beta,
    NotTotallyNull,
}

/// Rest-space cross product for the canonical observer, orientation
/// `e1 x e2 = e3`.
///
/// Both arguments must be orthogonal to `u`; this version supports only
/// `u = e0`.
pub fn rest_cross(u: &Observer, a: &Vec4C, b: &Vec4C) -> Result<Vec4C> {
    if !u.is_e0() {
        return Err(Error::UnsupportedObserver);
    }
    let uc = u.as_vec4c();
    for v in [a, b] {
        let defect = inner_c(v, &uc).norm();
        if defect > 1e-9 * (1.0 + v.herm_norm_sq()) {
            return Err(Error::NotInRestSpace(defect));
        }
    }
    Ok(Vec4C::from_parts(
        C64::new(0.0, 0.0),
        &cross_c(&a.spatial(), &b.spatial()),
    ))
}

/// Classify the complex 2-plane spanned by `s` and `t`.
///
/// A totally null plane (`<s,s> = <t,t> = <s,t> = 0`) is assigned to one of
/// the two chirality families by forming the plane bivector
/// `s (eta t)^T - t (eta s)^T` and testing which chiral projection
/// annihilates it.
pub fn classify_null_plane(s: &Vec4C, t: &Vec4C) -> Result<NullPlaneType> {
    // Independence test with the positive-definite C^4 Gram determinant.
    let gss = s.herm_norm_sq();
    let gtt = t.herm_norm_sq();
    let gst: C64 = (0..4).map(|i| s.0[i] * t.0[i].conj()).sum();
    let det = gss * gtt - gst.norm_sqr();
    if det <= 1e-18 * (gss * gtt).max(f64::MIN_POSITIVE) {
        return Err(Error::DegenerateSpan);
    }

    let tol_s = 1e-9 * (1.0 + gss);
    let tol_t = 1e-9 * (1.0 + gtt);
    let tol_st = 1e-9 * (1.0 + (gss * gtt).sqrt());
    if inner_c(s, s).norm() > tol_s
        || inner_c(t, t).norm() > tol_t
        || inner_c(s, t).norm() > tol_st
    {
        return Ok(NullPlaneType::NotTotallyNull);
    }

    // Plane bivector P = s (eta t)^T - t (eta s)^T, a complex metric-skew
    // operator; extract its complex (E, B) pair.
    let eta = [-1.0, 1.0, 1.0, 1.0];
    let mut p = crate::Mat4C::zeros();
    for i in 0..4 {
        for j in 0..4 {
            p[(i, j)] = s.0[i] * t.0[j] * eta[j] - t.0[i] * s.0[j] * eta[j];
        }
    }
    let e = Vec3C::new(p[(1, 0)], p[(2, 0)], p[(3, 0)]);
    let b = Vec3C::new(p[(2, 3)], p[(3, 1)], p[(1, 2)]);
    // Self-dual part vanishes iff E - iB = 0; anti-self-dual iff E + iB = 0.
    let a_c = e + b.map(crate::mul_i);
    let a_cbar = e + b.map(crate::mul_neg_i);
    let nc = a_c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let ncbar = a_cbar.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    // Exactly one of the two must vanish for a genuinely null plane. The
    // anchor plane {e0+e1, e2+i*e3} has vanishing anti-self-dual part and
    // defines the Alpha family.
    if ncbar <= nc {
        Ok(NullPlaneType::Alpha)
    } else {
        Ok(NullPlaneType::Beta)
    }
}
