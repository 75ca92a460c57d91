//! Exact algebraic numbers given by monic squarefree polynomials.
//!
//! A root is never carried as a float: every θ enters as the text of a
//! monic squarefree polynomial vanishing at it, and multiplicity
//! questions reduce to exact division. When the stated polynomial is
//! irreducible it is the minimal polynomial and `multiplicity_in` is the
//! root multiplicity verbatim. Reducible squarefree inputs are accepted
//! (callers sometimes pass a product of minimal polynomials, such as the
//! quartic `x^4-5x^2+4`); the multiplicity is then defined as the
//! minimum over the irreducible factors, i.e. the largest `k` such that
//! every root of the stated polynomial has multiplicity at least `k`.

use std::fmt;
use std::str::FromStr;

use crate::poly::{IntPolynomial, PolyError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial must be squarefree")]
    NotSquarefree,
    #[error("defining polynomial must be nonconstant")]
    Constant,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// What is known about the defining polynomial's irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrreducibilityStatus {
    /// Checked irreducible: the polynomial is the minimal polynomial.
    Irreducible,
    /// Checked reducible: min-over-factors multiplicity semantics apply.
    Composite,
    /// Degree too large for the factorizer; treated as irreducible.
    Unverified,
}

/// An algebraic number (or a Galois orbit of them) defined by a monic
/// squarefree integer polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicRoot {
    minpoly: IntPolynomial,
    status: IrreducibilityStatus,
    /// Monic irreducible factors of `minpoly` (just `minpoly` itself when
    /// irreducible or unverified).
    factors: Vec<IntPolynomial>,
}

impl AlgebraicRoot {
    /// Validates monicity, squarefreeness, and nonconstancy, then factors
    /// the polynomial (complete for degree <= 9) to fix the semantics.
    pub fn new(minpoly: IntPolynomial) -> Result<Self, RootError> {
        if minpoly.degree().unwrap_or(0) == 0 {
            return Err(RootError::Constant);
        }
        if !minpoly.is_monic() {
            return Err(RootError::NotMonic);
        }
        if !minpoly.is_squarefree()? {
            return Err(RootError::NotSquarefree);
        }
        let (status, factors) = match minpoly.factor_into_irreducibles() {
            Ok(fs) => {
                debug_assert!(fs.iter().all(|(_, m)| *m == 1), "squarefree input");
                if fs.len() == 1 {
                    (IrreducibilityStatus::Irreducible, vec![minpoly.clone()])
                } else {
                    (
                        IrreducibilityStatus::Composite,
                        fs.into_iter().map(|(f, _)| f).collect(),
                    )
                }
            }
            Err(PolyError::FactorDegreeTooLarge { .. }) => {
                (IrreducibilityStatus::Unverified, vec![minpoly.clone()])
            }
            Err(e) => return Err(e.into()),
        };
        Ok(AlgebraicRoot {
            minpoly,
            status,
            factors,
        })
    }

    /// The integer `k` as a root (defining polynomial `x - k`).
    pub fn integer(k: i64) -> Self {
        AlgebraicRoot::new(IntPolynomial::from_i64(&[-k, 1])).expect("x - k is valid")
    }

    /// Root of `x^2 - k` for a nonsquare `k >= 2`.
    pub fn sqrt(k: u64) -> Result<Self, RootError> {
        AlgebraicRoot::new(IntPolynomial::from_i64(&[-(k as i64), 0, 1]))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn status(&self) -> IrreducibilityStatus {
        self.status
    }

    /// Monic irreducible factors of the defining polynomial.
    pub fn irreducible_factors(&self) -> &[IntPolynomial] {
        &self.factors
    }

    /// True when the defining polynomial is exactly `x` (θ = 0).
    pub fn is_zero_root(&self) -> bool {
        self.minpoly == IntPolynomial::x()
    }

    /// Degree of the defining polynomial.
    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("nonconstant")
    }

    /// The root -θ: defining polynomial `±minpoly(-x)`, normalized monic.
    pub fn negated(&self) -> AlgebraicRoot {
        let q = self.minpoly.compose_neg_x();
        let q = if q.is_monic() { q } else { q.neg() };
        AlgebraicRoot::new(q).expect("negation preserves monic squarefree")
    }

    /// Multiplicity of θ as a root of `p`: the exact division multiplicity
    /// of the minimal polynomial for irreducible/unverified inputs, and
    /// the minimum over irreducible factors for composite inputs.
    pub fn multiplicity_in(&self, p: &IntPolynomial) -> usize {
        if p.is_zero() {
            // Every θ divides the zero polynomial arbitrarily often; the
            // callers never ask (matching polynomials are monic).
            return usize::MAX;
        }
        self.factors
            .iter()
            .map(|f| p.factor_multiplicity(f).expect("nonzero p, nonconstant f"))
            .min()
            .expect("at least one factor")
    }

    /// True when θ is a root of `p`.
    pub fn is_root_of(&self, p: &IntPolynomial) -> bool {
        self.multiplicity_in(p) >= 1
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.minpoly)
    }
}

impl fmt::Debug for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicRoot({}, {:?})", self.minpoly, self.status)
    }
}

impl FromStr for AlgebraicRoot {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        let p: IntPolynomial = s.parse()?;
        AlgebraicRoot::new(p)
    }
}

impl serde::Serialize for AlgebraicRoot {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.minpoly.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(s: &str) -> AlgebraicRoot {
        s.parse().unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(root("x-1").status(), IrreducibilityStatus::Irreducible);
        assert_eq!(root("x^2-3").status(), IrreducibilityStatus::Irreducible);
        assert_eq!(root("x^4-5x^2+4").status(), IrreducibilityStatus::Composite);
        assert!(matches!(
            "x^2-2x+1".parse::<AlgebraicRoot>(),
            Err(RootError::NotSquarefree)
        ));
        assert!(matches!(
            "2x-1".parse::<AlgebraicRoot>(),
            Err(RootError::NotMonic)
        ));
        assert!(matches!("5".parse::<AlgebraicRoot>(), Err(RootError::Constant)));
        assert!(root("x").is_zero_root());
        assert_eq!(AlgebraicRoot::integer(1).minpoly(), &root("x-1").minpoly().clone());
    }

    #[test]
    fn composite_multiplicity_is_min_over_factors() {
        let theta = root("x^4-5x^2+4"); // factors x-1, x+1, x-2, x+2
        assert_eq!(theta.irreducible_factors().len(), 4);
        // p = (x-1)(x+1)(x-2)(x+2) => every root multiplicity 1.
        let p: IntPolynomial = "x^4-5x^2+4".parse().unwrap();
        assert_eq!(theta.multiplicity_in(&p), 1);
        // p = (x^2-1)^2 (x^2-4): min(2,2,1,1) = 1.
        let q = IntPolynomial::from_i64(&[-1, 0, 1])
            .pow(2)
            .mul(&"x^2-4".parse().unwrap());
        assert_eq!(theta.multiplicity_in(&q), 1);
        // p missing the root 2 entirely: multiplicity 0.
        let r: IntPolynomial = "x^2-1".parse().unwrap();
        assert_eq!(theta.multiplicity_in(&r), 0);
    }

    #[test]
    fn negation_symmetry() {
        let t = root("x-1");
        assert_eq!(t.negated().minpoly(), &"x+1".parse().unwrap());
        let s = root("x^2-3");
        assert_eq!(s.negated().minpoly(), s.minpoly());
        let c = root("x^3-2");
        assert_eq!(c.negated().minpoly(), &"x^3+2".parse().unwrap());
        assert_eq!(c.negated().negated().minpoly(), c.minpoly());
    }

    #[test]
    fn multiplicity_in_basics() {
        let one = AlgebraicRoot::integer(1);
        let mu: IntPolynomial = "x^6-5x^4+4x^2".parse().unwrap();
        assert_eq!(one.multiplicity_in(&mu), 1);
        let zero = root("x");
        assert_eq!(zero.multiplicity_in(&mu), 2);
        let two = AlgebraicRoot::integer(2);
        assert_eq!(two.multiplicity_in(&mu), 1);
        let r3 = AlgebraicRoot::sqrt(3).unwrap();
        assert_eq!(r3.multiplicity_in(&mu), 0);
    }
}
