//! Classification of `X^n = A` into six cases and construction of the full
//! solution set: isolated roots, continuous root families, or a proved
//! insolubility verdict.
//!
//! The dispatch depends only on which of three complex quantities vanish at
//! the working tolerance: the vector part, the vector square, and the norm
//! form. Each case then has a closed-form answer, so solving is a handful
//! of complex n-th root enumerations and no iteration.

use crate::complex::{complex_nth_roots, complex_sqrt, Branch, ComplexScalar};
use crate::quat::{Biquaternion, CVector3};

/// Default scale-aware tolerance for classification and self-checks.
pub const DEFAULT_TOL: f64 = 1e-9;

// Classification quantities within this factor of the decision threshold
// get a boundary flag so callers can re-run with a different tolerance.
const BOUNDARY_MARGIN: f64 = 1e3;

/// The six solution-shape cases for `X^n = A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    /// 1a: `A = a0 E` with `a0 != 0`.
    ScalarInvertible,
    /// 1b: `A = 0`.
    ZeroQuaternion,
    /// 2a: vector part and vector square nonzero, norm form nonzero.
    GenericInvertible,
    /// 2b: vector part and vector square nonzero, norm form zero.
    GenericSingular,
    /// 3a: null vector part, scalar part nonzero.
    NilpotentInvertible,
    /// 3b: null vector part, scalar part zero; no solution exists.
    NilpotentSingular,
}

impl CaseLabel {
    pub fn code(self) -> &'static str {
        match self {
            CaseLabel::ScalarInvertible => "1a",
            CaseLabel::ZeroQuaternion => "1b",
            CaseLabel::GenericInvertible => "2a",
            CaseLabel::GenericSingular => "2b",
            CaseLabel::NilpotentInvertible => "3a",
            CaseLabel::NilpotentSingular => "3b",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            CaseLabel::ScalarInvertible => "scalar invertible",
            CaseLabel::ZeroQuaternion => "zero quaternion",
            CaseLabel::GenericInvertible => "generic invertible",
            CaseLabel::GenericSingular => "generic singular",
            CaseLabel::NilpotentInvertible => "nilpotent invertible",
            CaseLabel::NilpotentSingular => "nilpotent singular",
        }
    }

    /// Exact isolated-root and family counts this case must produce.
    pub fn expected_counts(self, n: u32) -> (usize, usize) {
        let n = n as usize;
        match self {
            CaseLabel::ScalarInvertible => (n, n * (n - 1) / 2),
            CaseLabel::ZeroQuaternion => (1, 1),
            CaseLabel::GenericInvertible => (n * n, 0),
            CaseLabel::GenericSingular | CaseLabel::NilpotentInvertible => (n, 0),
            CaseLabel::NilpotentSingular => (0, 0),
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.code(), self.describe())
    }
}

/// How a root family arose.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilyOrigin {
    /// Two distinct n-th roots of a scalar right-hand side.
    PairOfRoots(ComplexScalar, ComplexScalar),
    /// The null cone: zero scalar part and null vector part.
    NullCone,
}

/// A continuous family of roots: every `X` with scalar part `x0` and vector
/// square `c` solves the equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolutionFamily {
    pub x0: ComplexScalar,
    pub c: ComplexScalar,
    pub origin: FamilyOrigin,
}

impl SolutionFamily {
    /// Membership test: scalar part and vector square both match within the
    /// scale-aware tolerance.
    pub fn contains(&self, x: Biquaternion, tol: f64) -> bool {
        (x.s - self.x0).norm() <= tol * (1.0 + self.x0.norm())
            && (x.v.square() - self.c).norm() <= tol * (1.0 + self.c.norm())
    }
}

/// Marks classification quantities that landed near the zero/nonzero
/// decision threshold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundaryFlags {
    pub vec_part: bool,
    pub vec_square: bool,
    pub norm_form: bool,
    pub scalar_part: bool,
}

impl BoundaryFlags {
    pub fn any(self) -> bool {
        self.vec_part || self.vec_square || self.norm_form || self.scalar_part
    }
}

/// Solve parameters echoed with every solution set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveMetadata {
    pub n: u32,
    pub branch: Branch,
    pub tol: f64,
    pub boundary: BoundaryFlags,
}

/// The complete answer to `X^n = A`.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub case: CaseLabel,
    pub isolated: Vec<Biquaternion>,
    pub families: Vec<SolutionFamily>,
    pub insoluble: Option<String>,
    pub metadata: SolveMetadata,
}

fn near(q: ComplexScalar, tol: f64, scale: f64) -> (bool, bool) {
    let threshold = tol * (1.0 + scale);
    let is_zero = q.norm() <= threshold;
    let boundary =
        q.norm() > threshold / BOUNDARY_MARGIN && q.norm() <= threshold * BOUNDARY_MARGIN;
    (is_zero, boundary)
}

fn classify_with_flags(a: Biquaternion, tol: f64) -> (CaseLabel, BoundaryFlags) {
    let scale = a.norm_inf();
    let mut flags = BoundaryFlags::default();

    let vec_threshold = tol * (1.0 + scale);
    let vec_norm = a.v.norm_inf();
    let vec_zero = vec_norm <= vec_threshold;
    flags.vec_part =
        vec_norm > vec_threshold / BOUNDARY_MARGIN && vec_norm <= vec_threshold * BOUNDARY_MARGIN;

    let (scalar_zero, scalar_boundary) = near(a.s, tol, scale);
    // The squared quantities compare against the squared scale.
    let (square_zero, square_boundary) = near(a.v.square(), tol, scale * scale);
    let (norm_zero, norm_boundary) = near(a.norm_form(), tol, scale * scale);

    let label = if vec_zero {
        flags.scalar_part = scalar_boundary;
        if scalar_zero {
            CaseLabel::ZeroQuaternion
        } else {
            CaseLabel::ScalarInvertible
        }
    } else if !square_zero {
        flags.vec_square = square_boundary;
        flags.norm_form = norm_boundary;
        if norm_zero {
            CaseLabel::GenericSingular
        } else {
            CaseLabel::GenericInvertible
        }
    } else {
        flags.vec_square = square_boundary;
        flags.scalar_part = scalar_boundary;
        if scalar_zero {
            CaseLabel::NilpotentSingular
        } else {
            CaseLabel::NilpotentInvertible
        }
    };
    (label, flags)
}

/// Assigns `A` to exactly one of the six cases at the given tolerance.
pub fn classify(a: Biquaternion, tol: f64) -> CaseLabel {
    classify_with_flags(a, tol).0
}

/// Solves `X^n = A` completely for `n >= 2`.
///
/// The returned set carries isolated roots and/or families according to the
/// case contract; for the nilpotent-singular case it carries an
/// insolubility reason instead. Roots appear in a deterministic order:
/// n-th root enumeration order, with the generic case ordered
/// lexicographically by (first eigenroot index, second eigenroot index),
/// and families by root-pair index.
pub fn solve_nth_root(a: Biquaternion, n: u32, tol: f64, branch: Branch) -> SolutionSet {
    assert!(n >= 2, "the equation is posed for n >= 2");
    let (case, boundary) = classify_with_flags(a, tol);
    let metadata = SolveMetadata {
        n,
        branch,
        tol,
        boundary,
    };

    let (isolated, families, insoluble) = match case {
        CaseLabel::ScalarInvertible => scalar_invertible(a.s, n),
        CaseLabel::ZeroQuaternion => zero_quaternion(),
        CaseLabel::GenericInvertible => generic_invertible(a, n, branch),
        CaseLabel::GenericSingular => generic_singular(a, n),
        CaseLabel::NilpotentInvertible => nilpotent_invertible(a, n),
        CaseLabel::NilpotentSingular => (
            Vec::new(),
            Vec::new(),
            Some("nilpotent with zero scalar part".to_string()),
        ),
    };

    SolutionSet {
        case,
        isolated,
        families,
        insoluble,
        metadata,
    }
}

type CaseAnswer = (Vec<Biquaternion>, Vec<SolutionFamily>, Option<String>);

// 1a. The n scalar roots w E, plus one family per unordered pair of
// distinct n-th roots: scalar part (w1+w2)/2, vector square -(w1-w2)^2/4.
fn scalar_invertible(a0: ComplexScalar, n: u32) -> CaseAnswer {
    let roots = complex_nth_roots(a0, n);
    let isolated = roots
        .iter()
        .map(|w| Biquaternion::from_scalar(*w))
        .collect();
    let quarter = ComplexScalar::new(0.25, 0.0);
    let mut families = Vec::new();
    for (i, w1) in roots.iter().enumerate() {
        for w2 in &roots[i + 1..] {
            let d = w1 - w2;
            families.push(SolutionFamily {
                x0: (w1 + w2) * ComplexScalar::new(0.5, 0.0),
                c: -quarter * d * d,
                origin: FamilyOrigin::PairOfRoots(*w1, *w2),
            });
        }
    }
    (isolated, families, None)
}

// 1b. The zero root plus the null cone: any X with zero scalar part and
// null vector part has X^2 = 0, hence X^n = 0.
fn zero_quaternion() -> CaseAnswer {
    let zero = ComplexScalar::new(0.0, 0.0);
    (
        vec![Biquaternion::zero()],
        vec![SolutionFamily {
            x0: zero,
            c: zero,
            origin: FamilyOrigin::NullCone,
        }],
        None,
    )
}

// 2a. With s = sqrt(a^2) and the idempotent pair P± = (1/2, ±a/(2 i s)),
// every root is r1 P+ + r2 P- where r1, r2 range over the n-th roots of the
// two eigenvalues; all n^2 combinations are distinct roots.
fn generic_invertible(a: Biquaternion, n: u32, branch: Branch) -> CaseAnswer {
    let s = complex_sqrt(a.v.square(), branch);
    let i_s = ComplexScalar::new(0.0, 1.0) * s;
    let half = ComplexScalar::new(0.5, 0.0);
    let vec_plus = a.v.scale((i_s * 2.0).inv());
    let p_plus = Biquaternion::new(half, vec_plus);
    let p_minus = Biquaternion::new(half, -vec_plus);

    let roots1 = complex_nth_roots(a.s + i_s, n);
    let roots2 = complex_nth_roots(a.s - i_s, n);
    let mut isolated = Vec::with_capacity(roots1.len() * roots2.len());
    for r1 in &roots1 {
        for r2 in &roots2 {
            isolated.push(p_plus.scale(*r1) + p_minus.scale(*r2));
        }
    }
    (isolated, Vec::new(), None)
}

// 2b. Norm form zero with nonzero vector square forces a0 != 0 and
// A = (2 a0)^(n-1) X for X = (r/2)(1, a/a0); the n roots come from
// r^n = 2 a0.
fn generic_singular(a: Biquaternion, n: u32) -> CaseAnswer {
    let half = ComplexScalar::new(0.5, 0.0);
    let direction = Biquaternion::new(ComplexScalar::new(1.0, 0.0), a.v.scale(a.s.inv()));
    let isolated = complex_nth_roots(a.s * 2.0, n)
        .into_iter()
        .map(|r| direction.scale(r * half))
        .collect();
    (isolated, Vec::new(), None)
}

// 3a. A = a0 E + N with N^2 = 0 splits the binomial: the n roots are
// w (1, a/(n a0)) with w^n = a0.
fn nilpotent_invertible(a: Biquaternion, n: u32) -> CaseAnswer {
    let scaled = a.v.scale((a.s * f64::from(n)).inv());
    let direction = Biquaternion::new(ComplexScalar::new(1.0, 0.0), scaled);
    let isolated = complex_nth_roots(a.s, n)
        .into_iter()
        .map(|w| direction.scale(w))
        .collect();
    (isolated, Vec::new(), None)
}

/// Produces a concrete member of a family from two free vector components:
/// `X = (x0, p1, p2, x3)` with `x3 = sqrt(c - p1^2 - p2^2)`, so the vector
/// square is `c` by construction. Always solvable over the complex field.
pub fn sample_family(
    f: &SolutionFamily,
    p1: ComplexScalar,
    p2: ComplexScalar,
    branch: Branch,
) -> Biquaternion {
    let x3 = complex_sqrt(f.c - p1 * p1 - p2 * p2, branch);
    Biquaternion::new(f.x0, CVector3::new(p1, p2, x3))
}

/// `count` deterministic members of a family, scaled to the family's own
/// magnitude. Used by batch verification and by the CLI's sample output.
pub fn family_samples(f: &SolutionFamily, count: usize, branch: Branch) -> Vec<Biquaternion> {
    let base = (1.0 + f.c.norm()).sqrt();
    (0..count)
        .map(|index| {
            let k = index as f64;
            let p1 = ComplexScalar::new(base * (0.5 + 0.25 * k), base * -0.125 * k);
            let p2 = ComplexScalar::new(base * 0.25 * k, base * (0.5 - 0.125 * k));
            sample_family(f, p1, p2, branch)
        })
        .collect()
}

/// Set equality up to tolerance: true when a perfect matching exists that
/// pairs every element of `xs` with a distinct element of `ys` at
/// componentwise distance within `tol`.
pub fn sets_match(xs: &[Biquaternion], ys: &[Biquaternion], tol: f64) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    // Bipartite matching by augmenting paths over the "within tol" graph.
    let adjacency: Vec<Vec<usize>> = xs
        .iter()
        .map(|x| {
            ys.iter()
                .enumerate()
                .filter(|(_, y)| x.approx_eq(**y, tol))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    fn augment(
        i: usize,
        adjacency: &[Vec<usize>],
        matched_to: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &j in &adjacency[i] {
            if visited[j] {
                continue;
            }
            visited[j] = true;
            if matched_to[j].is_none()
                || augment(matched_to[j].unwrap(), adjacency, matched_to, visited)
            {
                matched_to[j] = Some(i);
                return true;
            }
        }
        false
    }

    let mut matched_to = vec![None; ys.len()];
    (0..xs.len()).all(|i| {
        let mut visited = vec![false; ys.len()];
        augment(i, &adjacency, &mut matched_to, &mut visited)
    })
}
