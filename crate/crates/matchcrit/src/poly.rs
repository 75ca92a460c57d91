//! Dense univariate polynomials over `BigInt`.
//!
//! The coefficient vector is stored in ascending degree order with no
//! trailing zeros (the zero polynomial is an empty vector). All ring
//! arithmetic stays in integers; rationals enter only through evaluation
//! at rational points and through root isolation, which works on exact
//! endpoint fractions.
//!
//! Beyond arithmetic this module carries the real-root machinery used by
//! the rest of the crate: Yun squarefree decomposition, Sturm-chain root
//! counting on half-open intervals, isolation of the largest real root,
//! and a complete irreducible factorization valid for monic inputs whose
//! degree after stripping powers of `x` is at most nine.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by polynomial operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the divisor over the integers")]
    NotDivisible,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("irreducible factorization is only supported up to degree 9, got degree {degree}")]
    FactorDegreeTooLarge { degree: usize },
    #[error("polynomial parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// A univariate polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    /// Ascending-degree coefficients, no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial::monomial(BigInt::one(), 1)
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg];
        coeffs.push(c);
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending-degree coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when the leading coefficient is exactly `1`.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `p(-x)`.
    pub fn compose_neg_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation at an integer point.
    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(x)` at a rational point, computed without building the
    /// rational value: evaluates the homogenization
    /// `sum a_k * numer^k * denom^(deg-k)` by Horner.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom(); // > 0 by BigRational's invariant
        let deg = self.coeffs.len() - 1;
        // terms[k] = a_k * q^(deg-k), so the Horner sum below equals
        // q^deg * p(x), which has the sign of p(x) because q > 0.
        let mut terms: Vec<BigInt> = vec![BigInt::zero(); self.coeffs.len()];
        let mut qpow = BigInt::one();
        for k in (0..=deg).rev() {
            terms[k] = &self.coeffs[k] * &qpow;
            qpow *= q;
        }
        let mut total = BigInt::zero();
        for k in (0..=deg).rev() {
            total = total * p + &terms[k];
        }
        match total.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Sign of `p(x)` as `x -> +inf` (0 for the zero polynomial).
    pub fn sign_at_pos_inf(&self) -> i8 {
        match self.leading_coeff() {
            None => 0,
            Some(c) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Sign of `p(x)` as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        if s == 0 {
            return 0;
        }
        let deg = self.coeffs.len() - 1;
        if deg % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Exact division in `Z[x]`: returns `q` with `self = q * d`, or
    /// `NotDivisible` when no such integer-coefficient quotient exists.
    pub fn divide_exact(&self, d: &Self) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return Err(PolyError::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let dn = d.coeffs.len();
        let lc = d.leading_coeff().unwrap();
        let qlen = rem.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            // Integer quotient must be exact at every step for a Z[x] quotient.
            let (qc, r) = num_integer::Integer::div_rem(&top, lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPolynomial::from_coeffs(q))
    }

    /// Largest `k` such that `f^k` divides `self` in `Z[x]`.
    ///
    /// Requires `self` nonzero and `f` nonconstant.
    pub fn factor_multiplicity(&self, f: &Self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if f.degree().unwrap_or(0) == 0 {
            return Err(PolyError::ConstantPolynomial);
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.divide_exact(f) {
            k += 1;
            cur = q;
        }
        Ok(k)
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// `self / content`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_part();
        if p.leading_coeff().is_some_and(|c| c.is_negative()) {
            p.neg()
        } else {
            p
        }
    }

    /// Polynomial gcd via the primitive pseudo-remainder sequence.
    /// The result is primitive with positive leading coefficient
    /// (`gcd(0, 0) = 0`).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_positive();
            a = b;
            b = r;
        }
        a
    }

    /// Squarefree part: the product of the distinct irreducible factors,
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let p = self.primitive_positive();
        if p.degree().unwrap() == 0 {
            return Ok(IntPolynomial::one());
        }
        let g = p.gcd(&p.derivative());
        Ok(p.divide_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive_positive())
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree().unwrap() == 0 {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Yun squarefree decomposition.
    ///
    /// Returns `(c, parts)` with `self = c * prod f_i^(m_i)`, where each
    /// `f_i` is primitive with positive leading coefficient, the `m_i`
    /// are strictly increasing, and `c` carries the content and sign.
    pub fn squarefree_decomposition(&self) -> Result<(BigInt, Vec<(Self, usize)>), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut content = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        let q = self.primitive_positive();
        if q.degree().unwrap() == 0 {
            return Ok((content, Vec::new()));
        }
        let d = q.gcd(&q.derivative());
        if d.degree() == Some(0) {
            return Ok((content, vec![(q, 1)]));
        }
        let mut parts = Vec::new();
        let mut w = q.divide_exact(&d).expect("gcd divides").primitive_positive();
        let y = q.derivative().divide_exact(&d).expect("gcd divides q'");
        let mut z = y.sub(&w.derivative());
        let mut i = 1usize;
        while w.degree().unwrap_or(0) > 0 {
            let f = w.gcd(&z);
            if f.degree().unwrap_or(0) > 0 {
                parts.push((f.clone(), i));
            }
            w = w.divide_exact(&f).expect("Yun: f divides w");
            let y = z.divide_exact(&f).expect("Yun: f divides z");
            z = y.sub(&w.derivative());
            i += 1;
        }
        Ok((content, parts))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`,
    /// or on the whole line when no interval is given.
    pub fn count_real_roots(
        &self,
        interval: Option<(&BigRational, &BigRational)>,
    ) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree().unwrap() == 0 {
            return Ok(0);
        }
        let sf = self.squarefree_part()?;
        if sf.degree() == Some(0) {
            return Ok(0);
        }
        let chain = sturm_chain(&sf);
        match interval {
            None => {
                let total = variations_at_neg_inf(&chain) as isize - variations_at_pos_inf(&chain) as isize;
                Ok(total.max(0) as usize)
            }
            Some((a, b)) => {
                if a >= b {
                    return Ok(0);
                }
                Ok(roots_le(&chain, b).saturating_sub(roots_le(&chain, a)))
            }
        }
    }

    /// Real roots counted with multiplicity, over `(a, b]` or the whole line.
    pub fn count_real_roots_with_multiplicity(
        &self,
        interval: Option<(&BigRational, &BigRational)>,
    ) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (_, parts) = self.squarefree_decomposition()?;
        let mut total = 0;
        for (f, m) in &parts {
            total += m * f.count_real_roots(interval)?;
        }
        Ok(total)
    }

    /// A strict upper bound on the absolute value of every real root
    /// (Cauchy bound), as an integer.
    pub fn root_bound(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let lc = self.leading_coeff().unwrap().abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        // 1 + ceil(max/|lc|) >= 1 + max/|lc| > every |root|
        Ok(BigInt::from(2) + num_integer::Integer::div_floor(&max, &lc))
    }

    /// Isolates the largest real root: returns `(a, b]` containing exactly
    /// one distinct real root of `self`, with no real root greater than
    /// `b`. `None` when there are no real roots.
    pub fn isolate_largest_real_root(&self) -> Result<Option<(BigRational, BigRational)>, PolyError> {
        let sf = self.squarefree_part()?;
        if sf.degree().unwrap_or(0) == 0 {
            return Ok(None);
        }
        let chain = sturm_chain(&sf);
        let bound = BigRational::from_integer(self.root_bound()?);
        let total = roots_le(&chain, &bound);
        if total == 0 {
            return Ok(None);
        }
        let mut lo = -bound.clone();
        let mut hi = bound;
        // Invariant: #roots in (lo, hi] >= 1 and none beyond hi.
        loop {
            if roots_le(&chain, &hi).saturating_sub(roots_le(&chain, &lo)) == 1 {
                return Ok(Some((lo, hi)));
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            if total.saturating_sub(roots_le(&chain, &mid)) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// Multiplicity of the largest real root; `None` if no real roots.
    pub fn multiplicity_of_largest_real_root(&self) -> Result<Option<usize>, PolyError> {
        let Some((mut lo, mut hi)) = self.isolate_largest_real_root()? else {
            return Ok(None);
        };
        let (_, parts) = self.squarefree_decomposition()?;
        let sf = self.squarefree_part()?;
        let chain = sturm_chain(&sf);
        loop {
            // The interval holds exactly one root of self; find the unique
            // squarefree part owning it. Refine until only one part has a
            // root inside.
            let mut owner = None;
            let mut hits = 0;
            for (f, m) in &parts {
                let c = f.count_real_roots(Some((&lo, &hi)))?;
                hits += c;
                if c > 0 {
                    owner = Some(*m);
                }
            }
            if hits == 1 {
                return Ok(owner);
            }
            // More than one part root inside: shrink while keeping the
            // largest root of self inside (lo, hi].
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            if roots_le(&chain, &hi).saturating_sub(roots_le(&chain, &mid)) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// Compares the largest real roots of two polynomials exactly.
    /// `None` when either polynomial has no real roots.
    pub fn compare_largest_real_roots(p: &Self, q: &Self) -> Result<Option<Ordering>, PolyError> {
        let Some((mut a1, mut b1)) = p.isolate_largest_real_root()? else {
            return Ok(None);
        };
        let Some((mut a2, mut b2)) = q.isolate_largest_real_root()? else {
            return Ok(None);
        };
        let sfp = p.squarefree_part()?;
        let sfq = q.squarefree_part()?;
        let chain_p = sturm_chain(&sfp);
        let chain_q = sturm_chain(&sfq);
        let g = sfp.gcd(&sfq);
        let half = BigRational::from_integer(BigInt::from(2));
        loop {
            if b1 <= a2 {
                return Ok(Some(Ordering::Less));
            }
            if b2 <= a1 {
                return Ok(Some(Ordering::Greater));
            }
            if g.degree().unwrap_or(0) >= 1 {
                let lo = if a1 >= a2 { a1.clone() } else { a2.clone() };
                let hi = if b1 <= b2 { b1.clone() } else { b2.clone() };
                if lo < hi
                    && g.count_real_roots(Some((&lo, &hi)))? >= 1
                    && roots_le(&chain_p, &hi).saturating_sub(roots_le(&chain_p, &lo)) == 1
                    && total_roots(&chain_p).saturating_sub(roots_le(&chain_p, &hi)) == 0
                    && roots_le(&chain_q, &hi).saturating_sub(roots_le(&chain_q, &lo)) == 1
                    && total_roots(&chain_q).saturating_sub(roots_le(&chain_q, &hi)) == 0
                {
                    // Both largest roots sit alone in (lo, hi] together with
                    // a common root of p and q, so they coincide with it.
                    return Ok(Some(Ordering::Equal));
                }
            }
            let m1 = (&a1 + &b1) / &half;
            if roots_le(&chain_p, &b1).saturating_sub(roots_le(&chain_p, &m1)) >= 1 {
                a1 = m1;
            } else {
                b1 = m1;
            }
            let m2 = (&a2 + &b2) / &half;
            if roots_le(&chain_q, &b2).saturating_sub(roots_le(&chain_q, &m2)) >= 1 {
                a2 = m2;
            } else {
                b2 = m2;
            }
        }
    }

    /// Complete irreducible factorization of a monic polynomial.
    ///
    /// Returns `(factor, multiplicity)` pairs with monic irreducible
    /// factors, sorted by degree and then by coefficients. Valid whenever
    /// the degree remaining after stripping the power of `x` is at most 9
    /// (a composite of degree <= 9 must have a factor of degree <= 4, which
    /// the divisor search below always finds); larger remainders error.
    pub fn factor_into_irreducibles(&self) -> Result<Vec<(Self, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let mut out: Vec<(Self, usize)> = Vec::new();
        // Strip x^k.
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k > 0 {
            out.push((IntPolynomial::x(), k));
        }
        let rest = IntPolynomial::from_coeffs(self.coeffs[k..].to_vec());
        if rest.degree() == Some(0) {
            out.sort_by(cmp_poly_pairs);
            return Ok(out);
        }
        if rest.degree().unwrap() > 9 {
            return Err(PolyError::FactorDegreeTooLarge {
                degree: rest.degree().unwrap(),
            });
        }
        let (_, parts) = rest.squarefree_decomposition()?;
        for (f, m) in parts {
            // Monic input implies monic squarefree parts.
            debug_assert!(f.is_monic());
            for g in split_squarefree_monic(&f)? {
                out.push((g, m));
            }
        }
        out.sort_by(cmp_poly_pairs);
        Ok(out)
    }

    /// Irreducibility over `Q` for monic polynomials of degree 1..=9
    /// (degree after stripping `x^k`; inputs divisible by `x` of degree
    /// above 1 are reducible by inspection).
    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        if self.degree().unwrap_or(0) == 0 {
            return Err(PolyError::ConstantPolynomial);
        }
        let fs = self.factor_into_irreducibles()?;
        Ok(fs.len() == 1 && fs[0].1 == 1)
    }
}

fn cmp_poly_pairs(a: &(IntPolynomial, usize), b: &(IntPolynomial, usize)) -> Ordering {
    a.0.cmp(&b.0).then(a.1.cmp(&b.1))
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: by degree, then coefficients from the top down.
impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

// === pseudo-division and Sturm machinery ===

/// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a`
/// divided by `b`. Requires `deg a >= deg b`, `b` nonzero.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let da = a.degree().expect("pseudo_rem: zero dividend");
    let db = b.degree().expect("pseudo_rem: zero divisor");
    debug_assert!(da >= db);
    let lc = b.leading_coeff().unwrap().clone();
    let mut rem = a.coeffs.clone();
    for k in (db..=da).rev() {
        let top = rem[k].clone();
        // Scale the whole remainder so the division step stays integral;
        // the scaled top coefficient then cancels exactly against top*b.
        for c in rem.iter_mut() {
            *c *= &lc;
        }
        if !top.is_zero() {
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k - db + i] -= &top * bc;
            }
        }
        debug_assert!(rem[k].is_zero());
    }
    rem.truncate(db);
    IntPolynomial::from_coeffs(rem)
}

/// The pseudo-remainder above multiplies `a` by `lc(b)^(da-db+1)`; for the
/// Sturm chain the next element must be a *positive* multiple of the true
/// negated remainder, so the sign of that power is divided back out.
fn sturm_next(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    let r = pseudo_rem(a, b);
    if r.is_zero() {
        return r;
    }
    let steps = (da - db + 1) as u32;
    let lc_negative = b.leading_coeff().unwrap().is_negative();
    let lambda_negative = lc_negative && steps % 2 == 1;
    let signed = if lambda_negative { r } else { r.neg() };
    // Strip positive content to keep coefficients small.
    signed
        .primitive_part()
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    debug_assert!(p.degree().unwrap_or(0) >= 1);
    let mut chain = vec![p.clone(), p.derivative().primitive_part()];
    loop {
        let n = chain.len();
        let b = &chain[n - 1];
        if b.is_zero() || b.degree().unwrap_or(0) == 0 {
            break;
        }
        let next = sturm_next(&chain[n - 2], b);
        if next.is_zero() {
            break;
        }
        chain.push(next);
    }
    chain
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn variations_at(chain: &[IntPolynomial], x: &BigRational) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at(x)))
}

fn variations_at_pos_inf(chain: &[IntPolynomial]) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at_pos_inf()))
}

fn variations_at_neg_inf(chain: &[IntPolynomial]) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at_neg_inf()))
}

/// Number of distinct real roots `<= c` of the chain's base polynomial.
/// Valid for every rational `c`, including roots of the polynomial.
fn roots_le(chain: &[IntPolynomial], c: &BigRational) -> usize {
    let v_minus = variations_at_neg_inf(chain);
    let v_c = variations_at(chain, c);
    v_minus.saturating_sub(v_c)
}

fn total_roots(chain: &[IntPolynomial]) -> usize {
    variations_at_neg_inf(chain).saturating_sub(variations_at_pos_inf(chain))
}

// === irreducible factorization of monic squarefree polynomials ===

/// All divisors of `n != 0`, both signs.
fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(!n.is_zero());
    let a = n.abs();
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= a {
        if num_integer::Integer::is_multiple_of(&a, &d) {
            divs.push(d.clone());
            let e = &a / &d;
            if e != d {
                divs.push(e);
            }
        }
        d += 1;
    }
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(d.clone());
        out.push(-d);
    }
    out.sort();
    out
}

/// Splits a monic squarefree polynomial with nonzero constant term into
/// monic irreducible factors. Complete for degrees up to 9.
fn split_squarefree_monic(f: &IntPolynomial) -> Result<Vec<IntPolynomial>, PolyError> {
    debug_assert!(f.is_monic());
    let mut out = Vec::new();
    let mut rest = f.clone();

    // Degree-1 factors: integer roots divide the constant term.
    loop {
        let Some(d) = rest.degree() else { break };
        if d == 0 {
            break;
        }
        let c0 = rest.coeff(0);
        if c0.is_zero() {
            // Defensive: callers strip x powers already.
            out.push(IntPolynomial::x());
            rest = rest.divide_exact(&IntPolynomial::x()).unwrap();
            continue;
        }
        let mut found = false;
        for r in signed_divisors(&c0) {
            if rest.evaluate_int(&r).is_zero() {
                let lin = IntPolynomial::from_coeffs(vec![-r, BigInt::one()]);
                rest = rest.divide_exact(&lin).expect("root gives a factor");
                out.push(lin);
                found = true;
                break;
            }
        }
        if !found {
            break;
        }
    }

    for d in 2..=4usize {
        loop {
            let deg = rest.degree().unwrap_or(0);
            if deg < 2 * d {
                break;
            }
            match find_monic_factor(&rest, d) {
                Some(g) => {
                    rest = rest.divide_exact(&g).expect("verified factor");
                    out.push(g);
                }
                None => break,
            }
        }
    }

    let deg = rest.degree().unwrap_or(0);
    if deg > 0 {
        if deg > 9 {
            return Err(PolyError::FactorDegreeTooLarge { degree: deg });
        }
        // No factor of degree <= 4 and degree <= 9: irreducible.
        out.push(rest);
    }
    Ok(out)
}

/// Searches for a monic degree-`d` factor (2 <= d <= 4) of a monic
/// polynomial with no integer roots, by enumerating divisor-consistent
/// candidate value tuples at small points and trial-dividing.
fn find_monic_factor(p: &IntPolynomial, d: usize) -> Option<IntPolynomial> {
    let one = BigInt::one();
    let p0 = p.evaluate_int(&BigInt::zero());
    let p1 = p.evaluate_int(&one);
    let pm1 = p.evaluate_int(&BigInt::from(-1));
    // No integer roots remain, so these values are all nonzero.
    debug_assert!(!p0.is_zero() && !p1.is_zero() && !pm1.is_zero());
    let d0s = signed_divisors(&p0);
    let v1s = signed_divisors(&p1);
    match d {
        2 => {
            // f = x^2 + a x + b: b = f(0), f(1) = 1 + a + b.
            for b in &d0s {
                for v1 in &v1s {
                    let a = v1 - &one - b;
                    let f = IntPolynomial::from_coeffs(vec![b.clone(), a, one.clone()]);
                    if p.divide_exact(&f).is_ok() {
                        return Some(f);
                    }
                }
            }
            None
        }
        3 => {
            let vm1s = signed_divisors(&pm1);
            let two = BigInt::from(2);
            // f = x^3 + a x^2 + b x + c: c = f(0),
            // f(1) = 1 + a + b + c, f(-1) = -1 + a - b + c.
            for c in &d0s {
                for v1 in &v1s {
                    for vm1 in &vm1s {
                        let sum = v1 + vm1; // 2a + 2c
                        let diff = v1 - vm1; // 2 + 2b
                        if !num_integer::Integer::is_multiple_of(&sum, &two)
                            || !num_integer::Integer::is_multiple_of(&diff, &two)
                        {
                            continue;
                        }
                        let a = &sum / &two - c;
                        let b = (&diff - &two) / &two;
                        let f = IntPolynomial::from_coeffs(vec![c.clone(), b, a, one.clone()]);
                        if p.divide_exact(&f).is_ok() {
                            return Some(f);
                        }
                    }
                }
            }
            None
        }
        4 => {
            let vm1s = signed_divisors(&pm1);
            let p2 = p.evaluate_int(&BigInt::from(2));
            debug_assert!(!p2.is_zero());
            let v2s = signed_divisors(&p2);
            let two = BigInt::from(2);
            let six = BigInt::from(6);
            // f = x^4 + a x^3 + b x^2 + c x + e:
            // e = f(0); f(1) = 1+a+b+c+e; f(-1) = 1-a+b-c+e;
            // f(2) = 16+8a+4b+2c+e.
            for e in &d0s {
                for v1 in &v1s {
                    for vm1 in &vm1s {
                        let sum = v1 + vm1; // 2 + 2b + 2e
                        let diff = v1 - vm1; // 2a + 2c
                        if !num_integer::Integer::is_multiple_of(&sum, &two)
                            || !num_integer::Integer::is_multiple_of(&diff, &two)
                        {
                            continue;
                        }
                        let b = &sum / &two - &one - e;
                        let s = &diff / &two; // a + c
                        for v2 in &v2s {
                            // 8a + 2c = v2 - 16 - 4b - e, and c = s - a.
                            let rhs = v2 - BigInt::from(16) - BigInt::from(4) * &b - e;
                            let num = &rhs - &two * &s; // 6a
                            if !num_integer::Integer::is_multiple_of(&num, &six) {
                                continue;
                            }
                            let a = &num / &six;
                            let c = &s - &a;
                            let f = IntPolynomial::from_coeffs(vec![
                                e.clone(),
                                c,
                                b.clone(),
                                a,
                                one.clone(),
                            ]);
                            if p.divide_exact(&f).is_ok() {
                                return Some(f);
                            }
                        }
                    }
                }
            }
            None
        }
        _ => unreachable!("factor search only covers degrees 2..=4"),
    }
}

// === text form ===

impl fmt::Display for IntPolynomial {
    /// Canonical text form: descending powers, zero coefficients skipped,
    /// unit coefficients elided on nonconstant terms, e.g.
    /// `x^6-5x^4+4x^2`, `-2x+1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    /// Parses the `Display` grammar: signed terms `c`, `cx`, `cx^k` with
    /// optional whitespace, e.g. `x^4-5x^2+4`, `-x+3`, `0`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let bytes = s.as_bytes();
        let mut i = 0usize;
        let err = |offset: usize, message: &str| PolyError::Parse {
            offset,
            message: message.to_string(),
        };
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let mut acc: Vec<BigInt> = Vec::new();
        let mut add_term = |coeff: BigInt, deg: usize| {
            if acc.len() <= deg {
                acc.resize(deg + 1, BigInt::zero());
            }
            acc[deg] += coeff;
        };
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(err(0, "empty polynomial"));
        }
        let mut first = true;
        while i < bytes.len() {
            skip_ws(&mut i);
            if i == bytes.len() {
                break;
            }
            // Sign.
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(err(i, "expected '+' or '-' between terms"));
            }
            first = false;
            // Magnitude (optional when an x follows).
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let has_digits = i > digits_start;
            let magnitude: BigInt = if has_digits {
                std::str::from_utf8(&bytes[digits_start..i])
                    .unwrap()
                    .parse()
                    .map_err(|_| err(digits_start, "bad integer literal"))?
            } else {
                BigInt::one()
            };
            // Variable part.
            let mut deg = 0usize;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                deg = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let exp_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == exp_start {
                        return Err(err(exp_start, "expected exponent digits after '^'"));
                    }
                    deg = std::str::from_utf8(&bytes[exp_start..i])
                        .unwrap()
                        .parse()
                        .map_err(|_| err(exp_start, "exponent too large"))?;
                }
            } else if !has_digits {
                return Err(err(i, "expected a coefficient or 'x'"));
            }
            let coeff = if negative { -magnitude } else { magnitude };
            add_term(coeff, deg);
        }
        Ok(IntPolynomial::from_coeffs(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "0",
            "1",
            "-1",
            "x",
            "-x",
            "x^2-1",
            "x^6-5x^4+4x^2",
            "x^5-5x^3+4x",
            "2x^3+x^2-7",
            "x^11-10x^9+27x^7-18x^5",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn parse_accepts_whitespace_and_redundant_terms() {
        assert_eq!(p(" x^2 - 2 "), p("x^2-2"));
        assert_eq!(p("x + x"), p("2x"));
        assert_eq!(p("+3"), IntPolynomial::from_i64(&[3]));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<IntPolynomial>().is_err());
        assert!("x^".parse::<IntPolynomial>().is_err());
        assert!("x 2".parse::<IntPolynomial>().is_err());
        assert!("y".parse::<IntPolynomial>().is_err());
        assert!("3*x".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("x^2-1");
        let b = p("x+1");
        assert_eq!(a.mul(&b), p("x^3+x^2-x-1"));
        assert_eq!(a.sub(&a), IntPolynomial::zero());
        assert_eq!(a.add(&a), p("2x^2-2"));
        assert_eq!(p("x^3").derivative(), p("3x^2"));
        assert_eq!(a.compose_neg_x(), a);
        assert_eq!(b.compose_neg_x(), p("-x+1"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^5-5x^3+4x");
        assert_eq!(a.divide_exact(&p("x^2-1")).unwrap(), p("x^3-4x"));
        assert_eq!(a.divide_exact(&p("x^2-4")).unwrap(), p("x^3-x"));
        assert_eq!(a.divide_exact(&p("x^2-2")), Err(PolyError::NotDivisible));
        assert_eq!(
            p("x^2").divide_exact(&IntPolynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
        // Divisible over Q but not over Z.
        assert_eq!(p("x^2-1").divide_exact(&p("2x-2")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn factor_multiplicity_counts_powers() {
        let f = p("x^2-1");
        let g = f.pow(3).mul(&p("x^2-2"));
        assert_eq!(g.factor_multiplicity(&f).unwrap(), 3);
        assert_eq!(g.factor_multiplicity(&p("x^2-2")).unwrap(), 1);
        assert_eq!(g.factor_multiplicity(&p("x^2-3")).unwrap(), 0);
        assert_eq!(g.factor_multiplicity(&p("x-1")).unwrap(), 3);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p("x^2-1").mul(&p("x^2-4"));
        let b = p("x^2-1").mul(&p("x^2-9"));
        assert_eq!(a.gcd(&b), p("x^2-1"));
        let c = p("x^2-1").pow(2).mul(&p("x-3"));
        assert_eq!(c.squarefree_part().unwrap(), p("x^2-1").mul(&p("x-3")));
        assert!(!c.is_squarefree().unwrap());
        assert!(a.is_squarefree().unwrap());
    }

    #[test]
    fn yun_decomposition_reconstructs() {
        let input = p("x-1")
            .pow(1)
            .mul(&p("x^2-2").pow(3))
            .mul(&p("x+4").pow(3))
            .mul_scalar(&BigInt::from(-6));
        let (c, parts) = input.squarefree_decomposition().unwrap();
        let mut acc = IntPolynomial::constant(c);
        let mut last_mult = 0;
        for (f, m) in &parts {
            assert!(*m > last_mult, "multiplicities strictly increasing");
            last_mult = *m;
            assert!(f.leading_coeff().unwrap() > &BigInt::zero());
            assert_eq!(f.content(), BigInt::one());
            acc = acc.mul(&f.pow(*m));
        }
        assert_eq!(acc, input);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (p("x-1"), 1));
        assert_eq!(parts[1], (p("x^2-2").mul(&p("x+4")), 3));
    }

    #[test]
    fn sturm_counts_roots() {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let f = p("x^2-2");
        assert_eq!(f.count_real_roots(None).unwrap(), 2);
        assert_eq!(f.count_real_roots(Some((&q(0, 1), &q(2, 1)))).unwrap(), 1);
        assert_eq!(f.count_real_roots(Some((&q(-2, 1), &q(0, 1)))).unwrap(), 1);
        assert_eq!(f.count_real_roots(Some((&q(3, 2), &q(2, 1)))).unwrap(), 0);
        assert_eq!(p("x^2+1").count_real_roots(None).unwrap(), 0);
        // Half-open: root at the left endpoint excluded, at the right included.
        let g = p("x^2-1");
        assert_eq!(g.count_real_roots(Some((&q(-1, 1), &q(1, 1)))).unwrap(), 1);
        assert_eq!(g.count_real_roots(Some((&q(-2, 1), &q(-1, 1)))).unwrap(), 1);
        // Multiplicity-aware counting.
        let h = p("x^2-1").pow(2).mul(&p("x^2-3"));
        assert_eq!(h.count_real_roots(None).unwrap(), 4);
        assert_eq!(h.count_real_roots_with_multiplicity(None).unwrap(), 6);
        // x^4 - 5x^2 + 4 has roots -2, -1, 1, 2.
        let w = p("x^4-5x^2+4");
        assert_eq!(w.count_real_roots(None).unwrap(), 4);
        assert_eq!(w.count_real_roots(Some((&q(0, 1), &q(3, 1)))).unwrap(), 2);
    }

    #[test]
    fn largest_root_machinery() {
        let f = p("x^2-2").mul(&p("x-3")).mul(&p("x-3"));
        let (a, b) = f.isolate_largest_real_root().unwrap().unwrap();
        let three = BigRational::from_integer(BigInt::from(3));
        assert!(a < three && three <= b);
        assert_eq!(f.multiplicity_of_largest_real_root().unwrap(), Some(2));
        assert_eq!(
            p("x^2-2").multiplicity_of_largest_real_root().unwrap(),
            Some(1)
        );
        assert_eq!(p("x^2+1").multiplicity_of_largest_real_root().unwrap(), None);

        let cmp = IntPolynomial::compare_largest_real_roots;
        assert_eq!(cmp(&p("x^2-2"), &p("x^2-3")).unwrap(), Some(Ordering::Less));
        assert_eq!(cmp(&p("x-5"), &p("x^2-3")).unwrap(), Some(Ordering::Greater));
        // Same largest root through different polynomials.
        assert_eq!(
            cmp(&p("x^2-2").mul(&p("x+7")), &p("x^2-2").mul(&p("x^2-1"))).unwrap(),
            Some(Ordering::Equal)
        );
        assert_eq!(cmp(&p("x^2+1"), &p("x-1")).unwrap(), None);
    }

    #[test]
    fn factorization_small_cases() {
        let f = p("x^4-5x^2+4");
        let fs = f.factor_into_irreducibles().unwrap();
        assert_eq!(
            fs,
            vec![
                (p("x-2"), 1),
                (p("x-1"), 1),
                (p("x+1"), 1),
                (p("x+2"), 1),
            ]
        );
        let g = p("x^5-5x^3+4x");
        let gs = g.factor_into_irreducibles().unwrap();
        assert_eq!(gs.len(), 5);
        assert!(gs.contains(&(p("x"), 1)));

        let h = p("x^2-2").mul(&p("x^2-3")).mul(&p("x^2").clone());
        let hs = h.factor_into_irreducibles().unwrap();
        assert_eq!(
            hs,
            vec![(p("x"), 2), (p("x^2-3"), 1), (p("x^2-2"), 1)]
        );

        assert!(p("x^2-2").is_irreducible().unwrap());
        assert!(p("x^2-3").is_irreducible().unwrap());
        assert!(!p("x^4-5x^2+4").is_irreducible().unwrap());
        assert!(p("x^4-5x^2+5").is_irreducible().unwrap());
        assert!(p("x").is_irreducible().unwrap());
    }

    #[test]
    fn factorization_finds_higher_degree_pieces() {
        // Cubic x^3 - 2 times quadratic x^2 + x + 1 times linear.
        let f = p("x^3-2").mul(&p("x^2+x+1")).mul(&p("x+5"));
        let fs = f.factor_into_irreducibles().unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&(p("x^3-2"), 1)));
        assert!(fs.contains(&(p("x^2+x+1"), 1)));
        assert!(fs.contains(&(p("x+5"), 1)));
        // Quartic times quartic, both irreducible (degree 8).
        let g = p("x^4-5x^2+5").mul(&p("x^4+1"));
        let gs = g.factor_into_irreducibles().unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.contains(&(p("x^4+1"), 1)));
        assert!(gs.contains(&(p("x^4-5x^2+5"), 1)));
        // Irreducible degree 7 stays whole (x^7 - 2 is Eisenstein at 2).
        let h = p("x^7-2");
        assert_eq!(h.factor_into_irreducibles().unwrap(), vec![(p("x^7-2"), 1)]);
        // Degree 10 in the nonzero part is out of contract.
        assert!(matches!(
            p("x^10+x+1").factor_into_irreducibles(),
            Err(PolyError::FactorDegreeTooLarge { degree: 10 })
        ));
        // But x^k * (degree <= 9) is fine.
        assert!(p("x^11-10x^9+27x^7-18x^5").factor_into_irreducibles().is_ok());
    }

    #[test]
    fn evaluation() {
        let f = p("x^3-4x");
        assert_eq!(f.evaluate_int(&BigInt::from(3)), BigInt::from(15));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            f.evaluate(&half),
            BigRational::new(BigInt::from(-15), BigInt::from(8))
        );
        assert_eq!(f.sign_at(&half), -1);
        assert_eq!(f.sign_at(&BigRational::from_integer(BigInt::from(3))), 1);
        assert_eq!(f.sign_at(&BigRational::from_integer(BigInt::from(2))), 0);
    }
}
