//! The 4x4-matrix side of the quaternion/matrix isomorphism: q-matrix
//! construction and recognition, characteristic and minimal polynomials,
//! the reduced adjugate and closed-form Jordan decompositions.
//!
//! Every q-matrix is similar to one of three Jordan shapes (scalar,
//! diagonalizable with two double eigenvalues, or two nilpotent 2x2 blocks),
//! and both the transformation matrix and its inverse have closed forms in
//! the four quaternion components. No iterative eigensolver is involved.

use thiserror::Error;

use crate::complex::{complex_sqrt, near_zero, Branch, ComplexScalar};
use crate::quat::Biquaternion;

/// A 4x4 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4C(pub [[ComplexScalar; 4]; 4]);

impl Matrix4C {
    pub fn zero() -> Self {
        Matrix4C([[ComplexScalar::new(0.0, 0.0); 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.0[k][k] = ComplexScalar::new(1.0, 0.0);
        }
        m
    }

    pub fn scale(&self, k: ComplexScalar) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= k;
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> [ComplexScalar; 4] {
        [self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]]
    }

    /// Max absolute value over the 32 real entry components.
    pub fn norm_inf(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .flat_map(|z| [z.re.abs(), z.im.abs()])
            .fold(0.0, f64::max)
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> ComplexScalar {
        let m = &self.0;
        let minor = |r: [usize; 3], c: [usize; 3]| {
            m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
                - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
                + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
        };
        m[0][0] * minor([1, 2, 3], [1, 2, 3]) - m[0][1] * minor([1, 2, 3], [0, 2, 3])
            + m[0][2] * minor([1, 2, 3], [0, 1, 3])
            - m[0][3] * minor([1, 2, 3], [0, 1, 2])
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        let scale = self.norm_inf().max(o.norm_inf());
        let mut max = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                max = max.max((self.0[r][c] - o.0[r][c]).norm());
            }
        }
        max <= tol * (1.0 + scale)
    }

    /// Applies the matrix to a quaternion written as a coefficient column.
    pub fn apply(&self, x: [ComplexScalar; 4]) -> [ComplexScalar; 4] {
        let mut out = [ComplexScalar::new(0.0, 0.0); 4];
        for (r, row) in self.0.iter().enumerate() {
            out[r] = row.iter().zip(x.iter()).map(|(m, v)| m * v).sum();
        }
        out
    }
}

impl std::ops::Mul for &Matrix4C {
    type Output = Matrix4C;
    fn mul(self, o: &Matrix4C) -> Matrix4C {
        let mut out = Matrix4C::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] = (0..4).map(|k| self.0[r][k] * o.0[k][c]).sum();
            }
        }
        out
    }
}

impl std::ops::Add for &Matrix4C {
    type Output = Matrix4C;
    fn add(self, o: &Matrix4C) -> Matrix4C {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] += o.0[r][c];
            }
        }
        out
    }
}

impl std::ops::Sub for &Matrix4C {
    type Output = Matrix4C;
    fn sub(self, o: &Matrix4C) -> Matrix4C {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] -= o.0[r][c];
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix4C {
    type Output = ComplexScalar;
    fn index(&self, (r, c): (usize, usize)) -> &ComplexScalar {
        &self.0[r][c]
    }
}

/// Polynomial coefficients in ascending degree order; characteristic and
/// minimal polynomials are monic.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffs(pub Vec<ComplexScalar>);

impl PolyCoeffs {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, y: ComplexScalar) -> ComplexScalar {
        self.0
            .iter()
            .rev()
            .fold(ComplexScalar::new(0.0, 0.0), |acc, c| acc * y + c)
    }

    /// Evaluates the polynomial at a matrix argument (Horner form).
    pub fn eval_matrix(&self, m: &Matrix4C) -> Matrix4C {
        let mut acc = Matrix4C::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * m) + &Matrix4C::identity().scale(*c);
        }
        acc
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum QMatrixError {
    /// The 16 entries do not follow the q-matrix pattern: the matrix lies
    /// outside the subalgebra isomorphic to the quaternions.
    #[error("matrix does not match the q-matrix pattern (max deviation {deviation:.3e})")]
    NotAQMatrix { deviation: f64 },
    /// All three subcase discriminants vanished while the vector part did
    /// not; impossible over exact arithmetic, so the input/tolerance pair is
    /// numerically inconsistent.
    #[error("no usable subcase: all three component-pair squares vanish at this tolerance")]
    DegenerateSubcase,
}

/// The left-multiplication matrix of `a`: the unique matrix `M` with
/// `M * col(b) = col(a * b)` for every quaternion `b`.
pub fn to_qmatrix(a: Biquaternion) -> Matrix4C {
    let [a0, a1, a2, a3] = a.components();
    Matrix4C([
        [a0, -a1, -a2, -a3],
        [a1, a0, -a3, a2],
        [a2, a3, a0, -a1],
        [a3, -a2, a1, a0],
    ])
}

/// Reads a quaternion back from a q-matrix, verifying all 16 entries match
/// the pattern within `tol * (1 + |m|)`.
pub fn from_qmatrix(m: &Matrix4C, tol: f64) -> Result<Biquaternion, QMatrixError> {
    let [a0, a1, a2, a3] = m.col(0);
    let a = Biquaternion::from_components(a0, a1, a2, a3);
    let expect = to_qmatrix(a);
    let mut deviation = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            deviation = deviation.max((m.0[r][c] - expect.0[r][c]).norm());
        }
    }
    if deviation <= tol * (1.0 + m.norm_inf()) {
        Ok(a)
    } else {
        Err(QMatrixError::NotAQMatrix { deviation })
    }
}

/// Characteristic polynomial `(y^2 - 2 a0 y + a0^2 + a^2)^2`, degree 4.
pub fn char_poly(a: Biquaternion) -> PolyCoeffs {
    let a0 = a.s;
    let k = a.norm_form();
    let two = ComplexScalar::new(2.0, 0.0);
    let four = ComplexScalar::new(4.0, 0.0);
    // (y^2 - 2 a0 y + k)^2 expanded.
    PolyCoeffs(vec![
        k * k,
        -four * a0 * k,
        four * a0 * a0 + two * k,
        -four * a0,
        ComplexScalar::new(1.0, 0.0),
    ])
}

/// Minimal polynomial: `y - a0` when the vector part vanishes, otherwise
/// `y^2 - 2 a0 y + a0^2 + a^2`.
pub fn min_poly(a: Biquaternion, tol: f64) -> PolyCoeffs {
    let one = ComplexScalar::new(1.0, 0.0);
    if near_zero_vec(a, tol) {
        PolyCoeffs(vec![-a.s, one])
    } else {
        PolyCoeffs(vec![
            a.norm_form(),
            -ComplexScalar::new(2.0, 0.0) * a.s,
            one,
        ])
    }
}

fn near_zero_vec(a: Biquaternion, tol: f64) -> bool {
    a.v.norm_inf() <= tol * (1.0 + a.norm_inf())
}

/// The reduced adjugate `C(y) = (y - 2 a0) E + f(a)`, satisfying
/// `(y E - f(a)) C(y) = m(y) E`. Its columns at the two eigenvalues supply
/// the eigenvectors used by the Jordan transformation matrices.
pub fn reduced_adjugate(a: Biquaternion, y: ComplexScalar) -> Matrix4C {
    let mut m = to_qmatrix(a);
    let shift = y - ComplexScalar::new(2.0, 0.0) * a.s;
    for k in 0..4 {
        m.0[k][k] += shift;
    }
    m
}

/// The two eigenvalues `(a0 + i s, a0 - i s)` with `s = sqrt(a^2)` under the
/// chosen branch; each has algebraic multiplicity 2.
pub fn eigenvalues(a: Biquaternion, branch: Branch) -> (ComplexScalar, ComplexScalar) {
    let s = complex_sqrt(a.v.square(), branch);
    let i_s = ComplexScalar::new(0.0, 1.0) * s;
    (a.s + i_s, a.s - i_s)
}

/// Which of the three Jordan shapes a q-matrix takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JordanKind {
    /// Vector part zero: the matrix is already `a0 * E`.
    Scalar,
    /// Nonzero vector part with nonzero vector square: two distinct double
    /// eigenvalues.
    Diagonalizable,
    /// Null (but nonzero) vector part: two 2x2 Jordan blocks at `a0`.
    Nilpotent2,
}

/// Which component-pair discriminant selected the transformation matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcase {
    /// `a2^2 + a3^2` nonzero.
    A,
    /// `a1^2 + a3^2` nonzero.
    B,
    /// `a1^2 + a2^2` nonzero.
    C,
    NotApplicable,
}

/// The closed-form Jordan decomposition `f(a) = U J U^-1`.
#[derive(Clone, Debug)]
pub struct JordanDecomposition {
    pub kind: JordanKind,
    pub j: Matrix4C,
    pub u: Matrix4C,
    pub u_inv: Matrix4C,
    /// `(a0 + i s, a0 - i s)`; equal in the scalar and nilpotent kinds.
    pub eigenvalues: (ComplexScalar, ComplexScalar),
    pub subcase: Subcase,
}

/// Computes the Jordan decomposition of `f(a)` in closed form.
///
/// The subcase is the discriminant of largest magnitude among
/// `a2^2 + a3^2`, `a1^2 + a3^2`, `a1^2 + a2^2` (ties resolved in that
/// order), which keeps the transformation matrix well conditioned. At least
/// one is nonzero whenever the vector part is: all three vanishing forces
/// `a1^2 = a2^2 = a3^2 = 0`.
pub fn jordan_form(
    a: Biquaternion,
    tol: f64,
    branch: Branch,
) -> Result<JordanDecomposition, QMatrixError> {
    let scale = a.norm_inf();
    let [_, a1, a2, a3] = a.components();

    if near_zero_vec(a, tol) {
        return Ok(JordanDecomposition {
            kind: JordanKind::Scalar,
            j: Matrix4C::identity().scale(a.s),
            u: Matrix4C::identity(),
            u_inv: Matrix4C::identity(),
            eigenvalues: (a.s, a.s),
            subcase: Subcase::NotApplicable,
        });
    }

    let q_a = a2 * a2 + a3 * a3;
    let q_b = a1 * a1 + a3 * a3;
    let q_c = a1 * a1 + a2 * a2;
    let (subcase, q) = [(Subcase::A, q_a), (Subcase::B, q_b), (Subcase::C, q_c)]
        .into_iter()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .unwrap();
    if near_zero(q, tol, scale * scale) {
        return Err(QMatrixError::DegenerateSubcase);
    }

    let vec_sq = a.v.square();
    if near_zero(vec_sq, tol, scale * scale) {
        Ok(nilpotent_decomposition(a, subcase, q))
    } else {
        Ok(diagonalizable_decomposition(a, subcase, q, branch))
    }
}

// U columns are eigenvector pairs taken from the reduced adjugate at the two
// eigenvalues; U^-1 was derived by symbolic inversion of U (simplified with
// s^2 = a^2) because the closed form is cheap and exact. The reconstruction
// and U * U^-1 = E tests gate the transcription.
fn diagonalizable_decomposition(
    a: Biquaternion,
    subcase: Subcase,
    q: ComplexScalar,
    branch: Branch,
) -> JordanDecomposition {
    let [_, a1, a2, a3] = a.components();
    let i = ComplexScalar::new(0.0, 1.0);
    let s = complex_sqrt(a.v.square(), branch);
    let is = i * s;
    let (y1, y2) = (a.s + is, a.s - is);

    let mut j = Matrix4C::zero();
    j.0[0][0] = y1;
    j.0[1][1] = y1;
    j.0[2][2] = y2;
    j.0[3][3] = y2;

    let zero = ComplexScalar::new(0.0, 0.0);
    #[rustfmt::skip]
    let (u, m) = match subcase {
        Subcase::A => (
            Matrix4C([
                [is, -a1, -a2, -a3],
                [a1,  is, -a3,  a2],
                [a2,  a3, -is, -a1],
                [a3, -a2,  a1, -is],
            ]),
            Matrix4C([
                [-i * q,                zero,                  a2 * s - i * a1 * a3,  a3 * s + i * a1 * a2],
                [zero,                  -i * q,                a3 * s + i * a1 * a2, -a2 * s + i * a1 * a3],
                [-a2 * s - i * a1 * a3, -a3 * s + i * a1 * a2, i * q,                 zero],
                [-a3 * s + i * a1 * a2,  a2 * s + i * a1 * a3, zero,                  i * q],
            ]),
        ),
        Subcase::B => (
            Matrix4C([
                [is, -a2, -a1, -a3],
                [a1, -a3, -is,  a2],
                [a2,  is,  a3, -a1],
                [a3,  a1, -a2, -is],
            ]),
            Matrix4C([
                [-i * q,                 a1 * s + i * a2 * a3, zero,                   a3 * s - i * a1 * a2],
                [zero,                  -a3 * s + i * a1 * a2, -i * q,                 a1 * s + i * a2 * a3],
                [-a1 * s + i * a2 * a3,  i * q,                 a3 * s + i * a1 * a2,  zero],
                [-a3 * s - i * a1 * a2,  zero,                 -a1 * s + i * a2 * a3,  i * q],
            ]),
        ),
        Subcase::C => (
            Matrix4C([
                [is, -a3, -a1, -a2],
                [a1,  a2, -is, -a3],
                [a2, -a1,  a3, -is],
                [a3,  is, -a2,  a1],
            ]),
            Matrix4C([
                [-i * q,                 a1 * s - i * a2 * a3,  a2 * s + i * a1 * a3,  zero],
                [zero,                   a2 * s + i * a1 * a3, -a1 * s + i * a2 * a3, -i * q],
                [-a1 * s - i * a2 * a3,  i * q,                 zero,                 -a2 * s + i * a1 * a3],
                [-a2 * s + i * a1 * a3,  zero,                  i * q,                 a1 * s + i * a2 * a3],
            ]),
        ),
        Subcase::NotApplicable => unreachable!("subcase always selected for nonzero vector part"),
    };
    let u_inv = m.scale((ComplexScalar::new(2.0, 0.0) * q * s).inv());

    JordanDecomposition {
        kind: JordanKind::Diagonalizable,
        j,
        u,
        u_inv,
        eigenvalues: (y1, y2),
        subcase,
    }
}

// U interleaves a kernel column of C(a0) with the matching identity column
// (a Jordan chain of length 2, twice). U^-1 is again the symbolic inverse,
// simplified with a1^2 + a2^2 + a3^2 = 0.
fn nilpotent_decomposition(
    a: Biquaternion,
    subcase: Subcase,
    q: ComplexScalar,
) -> JordanDecomposition {
    let [a0, a1, a2, a3] = a.components();
    let zero = ComplexScalar::new(0.0, 0.0);
    let one = ComplexScalar::new(1.0, 0.0);

    let mut j = Matrix4C::identity().scale(a0);
    j.0[0][1] = one;
    j.0[2][3] = one;

    #[rustfmt::skip]
    let (u, m) = match subcase {
        Subcase::A => (
            Matrix4C([
                [zero, one, -a1, zero],
                [a1, zero, zero, one],
                [a2, zero, a3, zero],
                [a3, zero, -a2, zero],
            ]),
            Matrix4C([
                [zero, zero, a2, a3],
                [q, zero, a1 * a3, -a1 * a2],
                [zero, zero, a3, -a2],
                [zero, q, -a1 * a2, -a1 * a3],
            ]),
        ),
        Subcase::B => (
            Matrix4C([
                [zero, one, -a2, zero],
                [a1, zero, -a3, zero],
                [a2, zero, zero, one],
                [a3, zero, a1, zero],
            ]),
            Matrix4C([
                [zero, a1, zero, a3],
                [q, -a2 * a3, zero, a1 * a2],
                [zero, -a3, zero, a1],
                [zero, -a1 * a2, q, -a2 * a3],
            ]),
        ),
        Subcase::C => (
            Matrix4C([
                [zero, one, -a3, zero],
                [a1, zero, a2, zero],
                [a2, zero, -a1, zero],
                [a3, zero, zero, one],
            ]),
            Matrix4C([
                [zero, a1, a2, zero],
                [q, a2 * a3, -a1 * a3, zero],
                [zero, a2, -a1, zero],
                [zero, -a1 * a3, -a2 * a3, q],
            ]),
        ),
        Subcase::NotApplicable => unreachable!("subcase always selected for nonzero vector part"),
    };
    let u_inv = m.scale(q.inv());

    JordanDecomposition {
        kind: JordanKind::Nilpotent2,
        j,
        u,
        u_inv,
        eigenvalues: (a0, a0),
        subcase,
    }
}
