//! Skew-operator calculus on Minkowski space.
//!
//! The crate works in a single fibre `R^{3,1}` with the `-+++` inner product
//! and revolves around skew-symmetric operators `F` (stored as an electric /
//! magnetic pair of 3-vectors). The main machinery:
//!
//! * [`minkowski`] — complex 4-vectors, the bilinear and Hermitian inner
//!   products, observers, the rest-space cross product, and the two families
//!   of totally null complex 2-planes.
//! * [`skew`] — the operator algebra: duality star, the self-dual /
//!   anti-self-dual (chiral) projections, eigenvalues, brackets, adjoint
//!   matrices, and null eigenvectors.
//! * [`basis16`] — the six-operator basis of `so(3,1)`, the 16-element
//!   Hermitian basis of the 4x4 complex matrices it generates, and Clifford
//!   generator sets.
//! * [`expmap`] — closed-form exponentials on the chiral sectors and on
//!   `SO(3,1)`, the principal logarithm, three independent routes to the
//!   directional derivative of `exp`, its singularity analysis, and the
//!   n-fold composition map.
//! * [`identities`] — executable operator identities (products, sandwiches,
//!   exponential composition/conjugation laws, null-pair relations) together
//!   with the constrained random generators that make their hypotheses
//!   samplable.
//! * [`emfield`] — the electromagnetic field of an accelerated point charge
//!   as a skew-operator field on the future light cone, its Coulomb + null
//!   decomposition, and the conjugation identity relating them.
//! * [`oracle`] — brute-force reference implementations (series exponential,
//!   finite differences, dense logarithm) kept free of the closed-form code
//!   paths so that agreement between the two is evidence.
//! * [`verify`] — seeded sweep runners producing machine-readable residual
//!   summaries; these back the `verify-*` CLI subcommands.

pub mod basis16;
pub mod emfield;
pub mod error;
pub mod expmap;
pub mod identities;
pub mod minkowski;
pub mod numeric;
pub mod oracle;
pub mod skew;
pub mod verify;

pub use error::{Error, Result};

/// Dense 4x4 complex matrix, the workhorse representation of complexified
/// operators.
pub type Mat4C = nalgebra::Matrix4<num_complex::Complex64>;
/// Dense 4x4 real matrix.
pub type Mat4R = nalgebra::Matrix4<f64>;
/// Complex 3-vector.
pub type Vec3C = nalgebra::Vector3<num_complex::Complex64>;
/// Real 3-vector.
pub type Vec3R = nalgebra::Vector3<f64>;
/// Complex scalar.
pub type C64 = num_complex::Complex64;

pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Multiplication by `i` as a component swap; exact in floating point.
#[inline]
pub(crate) fn mul_i(z: C64) -> C64 {
    C64::new(-z.im, z.re)
}

/// Multiplication by `-i` as a component swap; exact in floating point.
#[inline]
pub(crate) fn mul_neg_i(z: C64) -> C64 {
    C64::new(z.im, -z.re)
}

/// Unconjugated (bilinear) dot product of complex 3-vectors.
#[inline]
pub(crate) fn dot_c(a: &Vec3C, b: &Vec3C) -> C64 {
    a.x * b.x + a.y * b.y + a.z * b.z
}

/// Cross product of complex 3-vectors, extended bilinearly with the
/// orientation `e1 x e2 = e3`.
#[inline]
pub(crate) fn cross_c(a: &Vec3C, b: &Vec3C) -> Vec3C {
    Vec3C::new(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )
}

/// Largest entry modulus of a complex matrix.
pub(crate) fn max_abs_c(m: &Mat4C) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Largest entry magnitude of a real matrix.
pub(crate) fn max_abs_r(m: &Mat4R) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// Max-entry distance between two complex matrices.
pub(crate) fn max_diff_c(a: &Mat4C, b: &Mat4C) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a[(i, j)] - b[(i, j)]).norm());
        }
    }
    worst
}

/// Max-entry distance between two real matrices.
pub(crate) fn max_diff_r(a: &Mat4R, b: &Mat4R) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a[(i, j)] - b[(i, j)]).abs());
        }
    }
    worst
}

/// Promote a real matrix to a complex one.
pub(crate) fn complexify(m: &Mat4R) -> Mat4C {
    Mat4C::from_fn(|i, j| C64::new(m[(i, j)], 0.0))
}

/// Real part of a complex matrix.
pub(crate) fn real_part(m: &Mat4C) -> Mat4R {
    Mat4R::from_fn(|i, j| m[(i, j)].re)
}

/// Largest imaginary component of a nominally real complex matrix.
pub(crate) fn max_imag(m: &Mat4C) -> f64 {
    m.iter().fold(0.0, |acc: f64, z| acc.max(z.im.abs()))
}

/// The metric `eta = diag(-1, 1, 1, 1)`.
pub fn metric() -> Mat4R {
    Mat4R::from_diagonal(&nalgebra::Vector4::new(-1.0, 1.0, 1.0, 1.0))
}
