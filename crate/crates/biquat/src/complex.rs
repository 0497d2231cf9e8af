//! Complex scalar utilities: branch-controlled square roots, n-th root
//! enumeration and the scale-aware comparisons used throughout the crate.

use num_complex::Complex64;

/// The ground field: a double-precision complex number.
pub type ComplexScalar = Complex64;

/// Selects which of the two square roots `complex_sqrt` returns.
///
/// `Principal` picks the root with nonnegative real part; on the negative
/// real axis it picks `+i*sqrt(|z|)`. `Negated` is its negation. Downstream
/// solution sets are invariant under the choice, so callers may flip the
/// branch freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Principal,
    Negated,
}

impl Branch {
    pub fn flip(self) -> Self {
        match self {
            Branch::Principal => Branch::Negated,
            Branch::Negated => Branch::Principal,
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::Principal => write!(f, "principal"),
            Branch::Negated => write!(f, "negated"),
        }
    }
}

// Collapses -0.0 components to +0.0 so that arguments on the negative real
// axis land on the +pi side of the cut, independent of how the input was
// computed.
fn canonical(z: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(z.re + 0.0, z.im + 0.0)
}

/// A square root of `z` under the requested branch convention.
pub fn complex_sqrt(z: ComplexScalar, branch: Branch) -> ComplexScalar {
    let z = canonical(z);
    let w = if z.im == 0.0 {
        // Exact on the real axis; keeps real inputs real and puts the
        // negative axis on the +i side.
        if z.re < 0.0 {
            ComplexScalar::new(0.0, (-z.re).sqrt())
        } else {
            ComplexScalar::new(z.re.sqrt(), 0.0)
        }
    } else {
        z.sqrt()
    };
    match branch {
        Branch::Principal => w,
        Branch::Negated => -w,
    }
}

/// All `n` solutions of `w^n = z`, starting from the principal root and
/// proceeding by ascending argument steps of `2*pi/n`.
///
/// For `z = 0` the n-fold root collapses to the single value `0`; the
/// returned list then has length 1 instead of `n`.
pub fn complex_nth_roots(z: ComplexScalar, n: u32) -> Vec<ComplexScalar> {
    assert!(n >= 1, "n-th roots need n >= 1");
    let z = canonical(z);
    if z.re == 0.0 && z.im == 0.0 {
        return vec![ComplexScalar::new(0.0, 0.0)];
    }
    let modulus = z.norm().powf(1.0 / f64::from(n));
    let base_arg = z.arg() / f64::from(n);
    let step = std::f64::consts::TAU / f64::from(n);
    (0..n)
        .map(|k| {
            let (sin, cos) = (base_arg + step * f64::from(k)).sin_cos();
            ComplexScalar::new(modulus * cos, modulus * sin)
        })
        .collect()
}

/// `|z| <= tol * (1 + scale)`: the scale-aware zero test used by every
/// classification decision in the crate.
pub fn near_zero(z: ComplexScalar, tol: f64, scale: f64) -> bool {
    z.norm() <= tol * (1.0 + scale)
}

/// Componentwise approximate equality, relative to the larger magnitude.
pub fn approx_eq(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}
