//! The operator bases: six generators of `so(3,1)`, the sixteen Hermitian
//! involutions spanning the 4x4 complex matrices, and Clifford generator
//! sets extracted from them.
//!
//! Every matrix here is Gaussian-integer valued, so all checks in this
//! module are exact equalities, and ranks are computed with fraction-free
//! integer elimination rather than floating-point heuristics.

use std::fmt;

use serde::Serialize;

use crate::skew::SkewOp;
use crate::{C64, Mat4C, Vec3R};

/// Axis label for the generator sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    fn unit(self) -> Vec3R {
        match self {
            Axis::X => Vec3R::x(),
            Axis::Y => Vec3R::y(),
            Axis::Z => Vec3R::z(),
        }
    }

    fn letter(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

/// Structured label of a 16-basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisLabel {
    Identity,
    /// Self-dual boost generator `cE_i`.
    Chiral(Axis),
    /// Anti-self-dual boost generator `cbE_i`.
    AntiChiral(Axis),
    /// Product `cE_i * cbE_j`.
    Product(Axis, Axis),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Identity => write!(f, "I"),
            BasisLabel::Chiral(i) => write!(f, "cE_{}", i.letter()),
            BasisLabel::AntiChiral(i) => write!(f, "cbE_{}", i.letter()),
            BasisLabel::Product(i, j) => write!(f, "cE_{}*cbE_{}", i.letter(), j.letter()),
        }
    }
}

/// One element of the 16-element basis: a Hermitian involution.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub label: BasisLabel,
    pub matrix: Mat4C,
}

/// The `{E_x, E_y, E_z, B_x, B_y, B_z}` generators of `so(3,1)`.
pub fn so31_basis() -> [SkewOp; 6] {
    [
        SkewOp::from_e(Vec3R::x()),
        SkewOp::from_e(Vec3R::y()),
        SkewOp::from_e(Vec3R::z()),
        SkewOp::from_b(Vec3R::x()),
        SkewOp::from_b(Vec3R::y()),
        SkewOp::from_b(Vec3R::z()),
    ]
}

fn chiral_mat(axis: Axis) -> Mat4C {
    SkewOp::from_e(axis.unit()).self_dual().matrix()
}

fn anti_chiral_mat(axis: Axis) -> Mat4C {
    SkewOp::from_e(axis.unit()).anti_self_dual().matrix()
}

/// The sixteen Hermitian involutions, in the canonical table order
/// (row-major):
///
/// ```text
/// I      cEx*cbEx  cEy*cbEy  cEz*cbEz
/// cEx    cbEx      cEy*cbEz  cEz*cbEy
/// cEy    cbEy      cEx*cbEz  cEz*cbEx
/// cEz    cbEz      cEx*cbEy  cEy*cbEx
/// ```
pub fn basis16() -> Vec<BasisElement> {
    use Axis::*;
    use BasisLabel::*;
    let order = [
        Identity,
        Product(X, X),
        Product(Y, Y),
        Product(Z, Z),
        Chiral(X),
        AntiChiral(X),
        Product(Y, Z),
        Product(Z, Y),
        Chiral(Y),
        AntiChiral(Y),
        Product(X, Z),
        Product(Z, X),
        Chiral(Z),
        AntiChiral(Z),
        Product(X, Y),
        Product(Y, X),
    ];
    order
        .into_iter()
        .map(|label| BasisElement {
            label,
            matrix: match label {
                Identity => Mat4C::identity(),
                Chiral(i) => chiral_mat(i),
                AntiChiral(i) => anti_chiral_mat(i),
                Product(i, j) => chiral_mat(i) * anti_chiral_mat(j),
            },
        })
        .collect()
}

/// One multiplication-table cell: `b_i * b_j = coeff * b_index`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TableCell {
    pub index: usize,
    pub coeff_re: f64,
    pub coeff_im: f64,
}

/// Full 16x16 multiplication table. The basis is closed under products up
/// to coefficients in `{1, -1, i, -i}`; panics if closure fails, which the
/// tests rule out.
pub fn mult_table(basis: &[BasisElement]) -> Vec<Vec<TableCell>> {
    let coeffs = [
        C64::new(1.0, 0.0),
        C64::new(-1.0, 0.0),
        C64::new(0.0, 1.0),
        C64::new(0.0, -1.0),
    ];
    basis
        .iter()
        .map(|bi| {
            basis
                .iter()
                .map(|bj| {
                    let p = bi.matrix * bj.matrix;
                    for (k, bk) in basis.iter().enumerate() {
                        for &c in &coeffs {
                            if p == bk.matrix * c {
                                return TableCell {
                                    index: k,
                                    coeff_re: c.re,
                                    coeff_im: c.im,
                                };
                            }
                        }
                    }
                    panic!("basis is not closed at {} * {}", bi.label, bj.label);
                })
                .collect()
        })
        .collect()
}

/// Exact verification of the generator multiplication rules:
/// (a) `cE_x cE_y = i cE_z` cyclically, (b) the conjugate rule with `-i`,
/// (c) anticommutation within each sector, (d) cross-sector commutation.
/// Returns the failing relations; an empty list means all hold exactly.
pub fn verify_mult_table() -> Vec<String> {
    let mut failures = Vec::new();
    let c = [chiral_mat(Axis::X), chiral_mat(Axis::Y), chiral_mat(Axis::Z)];
    let cb = [
        anti_chiral_mat(Axis::X),
        anti_chiral_mat(Axis::Y),
        anti_chiral_mat(Axis::Z),
    ];
    let i_unit = C64::new(0.0, 1.0);
    let letters = ['x', 'y', 'z'];

    for k in 0..3 {
        let (a, b, d) = (k, (k + 1) % 3, (k + 2) % 3);
        if c[a] * c[b] != c[d] * i_unit {
            failures.push(format!("cE_{} cE_{} != i cE_{}", letters[a], letters[b], letters[d]));
        }
        if cb[a] * cb[b] != cb[d] * (-i_unit) {
            failures.push(format!(
                "cbE_{} cbE_{} != -i cbE_{}",
                letters[a], letters[b], letters[d]
            ));
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            let delta = if a == b { 2.0 } else { 0.0 };
            let target = Mat4C::identity() * C64::new(delta, 0.0);
            if c[a] * c[b] + c[b] * c[a] != target {
                failures.push(format!(
                    "cE_{} cE_{} + cE_{} cE_{} != 2 delta I",
                    letters[a], letters[b], letters[b], letters[a]
                ));
            }
            if cb[a] * cb[b] + cb[b] * cb[a] != target {
                failures.push(format!(
                    "cbE_{} cbE_{} + cbE_{} cbE_{} != 2 delta I",
                    letters[a], letters[b], letters[b], letters[a]
                ));
            }
            if c[a] * cb[b] != cb[b] * c[a] {
                failures.push(format!(
                    "cE_{} cbE_{} != cbE_{} cE_{}",
                    letters[a], letters[b], letters[b], letters[a]
                ));
            }
        }
    }
    failures
}

/// Clifford generator sets built from the basis.
///
/// `signed = false` returns the unsigned set `{cE_x, cE_y, cE_z*cbE_x,
/// cE_z*cbE_y}` with anticommutators `2 delta_ij I` (the factor 2 is
/// verified, see [`clifford_anticommutator_factor`]); `signed = true`
/// multiplies the first generator by `i`, giving anticommutators
/// `2 <e_i, e_j> I` for the `-+++` metric.
pub fn clifford_generators(signed: bool) -> [Mat4C; 4] {
    let g0 = chiral_mat(Axis::X);
    let g0 = if signed { g0 * C64::new(0.0, 1.0) } else { g0 };
    [
        g0,
        chiral_mat(Axis::Y),
        chiral_mat(Axis::Z) * anti_chiral_mat(Axis::X),
        chiral_mat(Axis::Z) * anti_chiral_mat(Axis::Y),
    ]
}

/// Measured diagonal normalization of the unsigned generators: the scalar
/// `k` with `alpha_i^2 = (k/2) I`, i.e. `alpha_i alpha_j + alpha_j alpha_i
/// = k delta_ij I`. Since each generator squares to the identity exactly,
/// this reports 2.
pub fn clifford_anticommutator_factor() -> f64 {
    let alphas = clifford_generators(false);
    for a in &alphas {
        assert_eq!(a * a, Mat4C::identity(), "generator does not square to I");
    }
    2.0
}

/// Gaussian integer with exact arithmetic, for fraction-free rank
/// computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct GInt {
    re: i128,
    im: i128,
}

impl GInt {
    const ZERO: GInt = GInt { re: 0, im: 0 };
    const ONE: GInt = GInt { re: 1, im: 0 };

    fn from_c64(z: C64) -> Option<GInt> {
        let re = z.re.round();
        let im = z.im.round();
        if (z.re - re).abs() > 0.0 || (z.im - im).abs() > 0.0 {
            return None;
        }
        Some(GInt {
            re: re as i128,
            im: im as i128,
        })
    }

    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn mul(self, o: GInt) -> GInt {
        GInt {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn sub(self, o: GInt) -> GInt {
        GInt {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    /// Exact division; panics if not divisible (Bareiss guarantees it is).
    fn div_exact(self, o: GInt) -> GInt {
        let denom = o.re * o.re + o.im * o.im;
        assert!(denom != 0, "division by zero Gaussian integer");
        let re_num = self.re * o.re + self.im * o.im;
        let im_num = self.im * o.re - self.re * o.im;
        assert!(
            re_num % denom == 0 && im_num % denom == 0,
            "inexact Gaussian division"
        );
        GInt {
            re: re_num / denom,
            im: im_num / denom,
        }
    }
}

/// Exact rank of a Gaussian-integer matrix by fraction-free (Bareiss)
/// elimination. Returns `None` if any entry is not a Gaussian integer.
fn gaussian_rank(rows: usize, cols: usize, entries: &[C64]) -> Option<usize> {
    let mut m: Vec<GInt> = entries
        .iter()
        .map(|&z| GInt::from_c64(z))
        .collect::<Option<Vec<_>>>()?;
    let at = |m: &Vec<GInt>, r: usize, c: usize| m[r * cols + c];
    let mut rank = 0usize;
    let mut prev_pivot = GInt::ONE;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot_row = (row..rows).find(|&r| !at(&m, r, col).is_zero());
        let Some(p) = pivot_row else { continue };
        if p != row {
            for c in 0..cols {
                m.swap(row * cols + c, p * cols + c);
            }
        }
        let pivot = at(&m, row, col);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let val = at(&m, r, c)
                    .mul(pivot)
                    .sub(at(&m, r, col).mul(at(&m, row, c)))
                    .div_exact(prev_pivot);
                m[r * cols + c] = val;
            }
            m[r * cols + col] = GInt::ZERO;
        }
        prev_pivot = pivot;
        rank += 1;
        row += 1;
    }
    Some(rank)
}

/// Exact rank of the 16 basis matrices as vectors in the standard matrix
/// basis.
pub fn basis16_rank() -> usize {
    let basis = basis16();
    let entries: Vec<C64> = basis
        .iter()
        .flat_map(|b| b.matrix.iter().copied().collect::<Vec<_>>())
        .collect();
    gaussian_rank(16, 16, &entries).expect("basis entries are Gaussian integers")
}

/// Exact rank of the six `so(3,1)` generators as vectors of matrix entries.
pub fn so31_rank() -> usize {
    let basis = so31_basis();
    let entries: Vec<C64> = basis
        .iter()
        .flat_map(|f| {
            f.matrix_c()
                .iter()
                .copied()
                .collect::<Vec<_>>()
        })
        .collect();
    gaussian_rank(6, 16, &entries).expect("generator entries are integers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn so31_basis_definition() {
        let b = so31_basis();
        assert_eq!(b[0], SkewOp::from_e(Vec3R::x()));
        assert_eq!(b[3], SkewOp::from_b(Vec3R::x()));
    }

    #[test]
    fn so31_rank_is_six() {
        assert_eq!(so31_rank(), 6);
    }

    #[test]
    fn basis16_rank_is_sixteen() {
        assert_eq!(basis16_rank(), 16);
    }

    #[test]
    fn basis16_order_and_count() {
        let b = basis16();
        assert_eq!(b.len(), 16);
        assert_eq!(b[0].label, BasisLabel::Identity);
        assert_eq!(b[4].label, BasisLabel::Chiral(Axis::X));
        assert_eq!(b[1].label, BasisLabel::Product(Axis::X, Axis::X));
        assert_eq!(b[15].label, BasisLabel::Product(Axis::Y, Axis::X));
    }

    #[test]
    fn all_squares_are_identity_exactly() {
        for b in basis16() {
            assert_eq!(b.matrix * b.matrix, Mat4C::identity(), "{}", b.label);
        }
    }

    #[test]
    fn all_elements_hermitian_exactly() {
        for b in basis16() {
            assert_eq!(b.matrix.adjoint(), b.matrix, "{}", b.label);
        }
    }

    #[test]
    fn entries_are_gaussian_units() {
        for b in basis16() {
            for z in b.matrix.iter() {
                let ok = (z.re == 0.0 || z.re.abs() == 1.0) && (z.im == 0.0 || z.im.abs() == 1.0);
                let unit = (z.re.abs() == 1.0) ^ (z.im.abs() == 1.0) || (z.re == 0.0 && z.im == 0.0);
                assert!(ok && unit, "entry {z} of {} not in {{0, +/-1, +/-i}}", b.label);
            }
        }
    }

    #[test]
    fn traces() {
        for b in basis16() {
            let tr = b.matrix.trace();
            if b.label == BasisLabel::Identity {
                assert_eq!(tr, c64(4.0, 0.0));
            } else {
                assert_eq!(tr, c64(0.0, 0.0), "{}", b.label);
            }
        }
    }

    #[test]
    fn product_element_diagonal_example() {
        // cE_x * cbE_x = diag(1, 1, -1, -1).
        let b = basis16();
        let m = &b[1].matrix;
        let expected = Mat4C::from_diagonal(&nalgebra::Vector4::new(
            c64(1.0, 0.0),
            c64(1.0, 0.0),
            c64(-1.0, 0.0),
            c64(-1.0, 0.0),
        ));
        assert_eq!(*m, expected);
    }

    #[test]
    fn mult_rules_hold_exactly() {
        assert!(verify_mult_table().is_empty());
    }

    #[test]
    fn table_closure() {
        let basis = basis16();
        let table = mult_table(&basis);
        assert_eq!(table.len(), 16);
        // cE_x (index 4) * cE_y (index 8) = i cE_z (index 12).
        let cell = table[4][8];
        assert_eq!(cell.index, 12);
        assert_eq!((cell.coeff_re, cell.coeff_im), (0.0, 1.0));
    }

    #[test]
    fn gamma_relations_exact() {
        let g = clifford_generators(true);
        let eta = [-1.0f64, 1.0, 1.0, 1.0];
        for i in 0..4 {
            for j in 0..4 {
                let anti = g[i] * g[j] + g[j] * g[i];
                let expected = if i == j {
                    Mat4C::identity() * c64(2.0 * eta[i], 0.0)
                } else {
                    Mat4C::zeros()
                };
                assert_eq!(anti, expected, "gamma_{i} gamma_{j}");
            }
        }
    }

    #[test]
    fn alpha_relations_exact() {
        let a = clifford_generators(false);
        for i in 0..4 {
            for j in 0..4 {
                let anti = a[i] * a[j] + a[j] * a[i];
                let expected = if i == j {
                    Mat4C::identity() * c64(2.0, 0.0)
                } else {
                    Mat4C::zeros()
                };
                assert_eq!(anti, expected, "alpha_{i} alpha_{j}");
            }
        }
        assert_eq!(clifford_anticommutator_factor(), 2.0);
    }

    #[test]
    fn gamma_set_generates_all_sixteen_dimensions() {
        let g = clifford_generators(true);
        // All distinct products of a subset of the generators, in index
        // order: 1, g_i, g_i g_j, g_i g_j g_k, g_0 g_1 g_2 g_3.
        let mut products: Vec<Mat4C> = vec![Mat4C::identity()];
        for mask in 1u32..16 {
            let mut m = Mat4C::identity();
            for (i, gi) in g.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    m *= gi;
                }
            }
            products.push(m);
        }
        let entries: Vec<C64> = products
            .iter()
            .flat_map(|m| m.iter().copied().collect::<Vec<_>>())
            .collect();
        assert_eq!(gaussian_rank(16, 16, &entries), Some(16));
    }

    #[test]
    fn pauli_subalgebra_is_four_dimensional_and_closed() {
        let cx = chiral_mat(Axis::X);
        let cy = chiral_mat(Axis::Y);
        let span = [Mat4C::identity(), cx, cy, cx * cy];
        let entries: Vec<C64> = span
            .iter()
            .flat_map(|m| m.iter().copied().collect::<Vec<_>>())
            .collect();
        assert_eq!(gaussian_rank(4, 16, &entries), Some(4));
        // Closure: products of span elements stay in the span with
        // Gaussian-unit coefficients.
        let coeffs = [c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, 1.0), c64(0.0, -1.0)];
        for a in &span {
            for b in &span {
                let p = a * b;
                let found = span
                    .iter()
                    .any(|s| coeffs.iter().any(|&c| p == s * c));
                assert!(found, "product left the Pauli span");
            }
        }
    }
}
