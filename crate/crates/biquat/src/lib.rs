//! Closed-form n-th roots of quaternions with complex components.
//!
//! Solving `X^n = A` over the biquaternions reduces, through the
//! left-multiplication isomorphism with 4x4 complex matrices, to a six-way
//! case split on the vector part, its square and the norm form of `A`.
//! Depending on the case the answer is a finite list of isolated roots
//! (`n`, or `n^2` in the generic case), a continuous family of roots
//! described by a fixed scalar part and vector square, or (for a nonzero
//! nilpotent `A` with zero scalar part) no solution at all.
//!
//! - [`quat`]: the biquaternion algebra (product, powers, norm form).
//! - [`qmatrix`]: the matrix side: q-matrices, characteristic/minimal
//!   polynomials, reduced adjugate and closed-form Jordan decompositions.
//! - [`solver`]: case classification and the complete solution sets.
//! - [`verify`]: residual checks and a seeded round-trip oracle; the
//!   batch paths are data-parallel under the default `parallel` feature.
//!
//! Every emitted root can be self-verified by powering; see
//! [`verify::residual`].

pub mod complex;
pub mod qmatrix;
pub mod quat;
pub mod solver;
pub mod verify;

pub use complex::{complex_nth_roots, complex_sqrt, Branch, ComplexScalar};
pub use qmatrix::{
    char_poly, eigenvalues, from_qmatrix, jordan_form, min_poly, reduced_adjugate, to_qmatrix,
    JordanDecomposition, JordanKind, Matrix4C, PolyCoeffs, QMatrixError, Subcase,
};
pub use quat::{Biquaternion, CVector3};
pub use solver::{
    classify, family_samples, sample_family, sets_match, solve_nth_root, BoundaryFlags, CaseLabel,
    FamilyOrigin, SolutionFamily, SolutionSet, SolveMetadata, DEFAULT_TOL,
};
pub use verify::{check_solution_set, oracle_roundtrip, residual, VerificationReport, VerifyError};
