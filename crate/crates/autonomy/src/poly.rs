//! Sparse Laurent polynomials over the rationals in `n` variables.
//!
//! A monomial is an exponent vector in `Z^n` (negative exponents allowed); a
//! polynomial is a finite map from monomials to nonzero rational coefficients,
//! kept in canonical sorted order so that equality is structural. The degree of
//! a monomial `s^(d1, ..., dn)` is `|d1| + ... + |dn|`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient type used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Exponent vector of a Laurent monomial; exponents may be negative.
///
/// The derived `Ord` is lexicographic on the exponents, which is the canonical
/// term order used for structural equality and printing (it is unrelated to
/// the Gröbner monomial orders in [`crate::order`]).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    /// The identity monomial (all exponents zero) in `dim` variables.
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    /// The monomial `s_var` (0-based variable index).
    pub fn variable(dim: usize, var: usize) -> Self {
        assert!(var < dim, "variable index {var} out of range for dim {dim}");
        let mut e = vec![0; dim];
        e[var] = 1;
        Monomial(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> i64 {
        self.0[var]
    }

    /// Sum of absolute exponents.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when every exponent is non-negative, i.e. the monomial lies in
    /// the polynomial subring.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise sum: the product of the two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "monomial dimension mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference: the quotient `self / other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "monomial dimension mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The inverse monomial (negated exponents).
    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    /// Divisibility in the polynomial subring: every exponent of `self` is at
    /// most the corresponding exponent of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.dim(), other.dim(), "monomial dimension mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (least common multiple in the polynomial subring).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "monomial dimension mismatch");
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
    }
}

/// A single coefficient–monomial pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero, no two terms share a monomial,
/// and terms are kept sorted ascending by the canonical monomial order, so
/// derived equality is equality in the ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    dim: usize,
    terms: Vec<(Monomial, Rational)>,
}

/// Merges two canonically-sorted term lists, combining equal monomials and
/// dropping zero sums.
fn merge_terms(
    a: impl Iterator<Item = (Monomial, Rational)>,
    b: impl Iterator<Item = (Monomial, Rational)>,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::new();
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        let take_from_a = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                    continue;
                }
            },
        };
        if take_from_a {
            out.push(a.next().unwrap());
        } else {
            out.push(b.next().unwrap());
        }
    }
    out
}

/// A nonzero Laurent polynomial split as `s^shift * poly_part`, where
/// `poly_part` has only non-negative exponents and every variable attains
/// exponent zero in some term of it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalization {
    pub shift: Monomial,
    pub poly_part: LaurentPoly,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly {
            dim,
            terms: Vec::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::from_terms(dim, [(Monomial::one(dim), c)])
    }

    pub fn constant_i64(dim: usize, c: i64) -> Self {
        Self::constant(dim, Rational::from(BigInt::from(c)))
    }

    /// The polynomial `s_var` (0-based variable index).
    pub fn variable(dim: usize, var: usize) -> Self {
        Self::from_terms(dim, [(Monomial::variable(dim, var), Rational::one())])
    }

    /// The single-term polynomial `c * s^m`.
    pub fn term(m: Monomial, c: Rational) -> Self {
        let dim = m.dim();
        Self::from_terms(dim, [(m, c)])
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging
    /// duplicates and dropping zero coefficients.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut raw: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        for (m, _) in &raw {
            assert_eq!(m.dim(), dim, "monomial dimension mismatch");
        }
        raw.sort_by(|(a, _), (b, _)| a.cmp(b));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if c.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((last, acc)) if *last == m => {
                    *acc += c;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((m, c)),
            }
        }
        LaurentPoly { dim, terms: out }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .first()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending lexicographic) monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// The constant coefficient.
    pub fn constant_coeff(&self) -> Rational {
        self.coeff(&Monomial::one(self.dim))
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Maximum term degree, or `None` for the zero polynomial (degree minus
    /// infinity).
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_polynomial())
    }

    /// A Laurent polynomial is a unit exactly when it is a single nonzero
    /// term `c * s^d`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplicative inverse, defined exactly for units.
    pub fn inverse(&self) -> Option<LaurentPoly> {
        if !self.is_unit() {
            return None;
        }
        let (m, c) = &self.terms[0];
        Some(LaurentPoly::term(m.inv(), c.recip()))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.dim);
        }
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `s^m` (shifts every exponent vector);
    /// shifting preserves the canonical term order.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        assert_eq!(m.dim(), self.dim, "monomial dimension mismatch");
        LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// In-place `self -= c * s^m * g`; the workhorse of polynomial division.
    pub(crate) fn sub_scaled_monomial_multiple(
        &mut self,
        c: &Rational,
        m: &Monomial,
        g: &LaurentPoly,
    ) {
        debug_assert_eq!(self.dim, g.dim);
        let shifted = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), -(gc * c)));
        let old = std::mem::take(&mut self.terms);
        self.terms = merge_terms(old.into_iter(), shifted);
    }

    /// In-place multiplication by a nonzero constant.
    pub(crate) fn scale_in_place(&mut self, c: &Rational) {
        debug_assert!(!c.is_zero());
        for (_, v) in &mut self.terms {
            *v *= c;
        }
    }

    /// Positive rational content: gcd of numerators over lcm of
    /// denominators. Zero for the zero polynomial.
    pub(crate) fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::zero();
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Splits a nonzero polynomial as `s^shift * poly_part` with `poly_part`
    /// in the polynomial subring touching exponent zero in every variable.
    ///
    /// Panics on the zero polynomial, which has no such factorization.
    pub fn normalize(&self) -> Normalization {
        assert!(!self.is_zero(), "cannot normalize the zero polynomial");
        let mut shift = vec![i64::MAX; self.dim];
        for (m, _) in &self.terms {
            for (s, &e) in shift.iter_mut().zip(m.exponents()) {
                *s = (*s).min(e);
            }
        }
        let shift = Monomial::new(shift);
        let poly_part = self.mul_monomial(&shift.inv());
        debug_assert!(poly_part.is_polynomial());
        Normalization { shift, poly_part }
    }

    /// Divides out the rational content (and sign), leaving coprime integer
    /// coefficients with the canonically-leading one positive. Monomial units
    /// are not stripped; combine with [`LaurentPoly::normalize`] to reduce a
    /// generator to its canonical associate.
    pub fn primitive_part(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = self.content();
        // Last entry is the canonically-largest monomial; normalize its sign.
        let lead = &self.terms.last().unwrap().1;
        if lead.is_negative() {
            content = -content;
        }
        self.scale(&content.recip())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        LaurentPoly {
            dim: self.dim,
            terms: merge_terms(
                self.terms.iter().cloned(),
                rhs.terms.iter().cloned(),
            ),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut products: Vec<(Monomial, Rational)> =
            Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                products.push((ma.mul(mb), ca * cb));
            }
        }
        LaurentPoly::from_terms(self.dim, products)
    }
}

/// Canonical textual form: terms in descending canonical monomial order,
/// variables written `s1..sN`, rationals as `a/b`, negative exponents as
/// `s1^-2`. Round-trips through the expression parser.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote_factor = true;
            }
            for (var, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "s{}", var + 1)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of Laurent monomials in `n` variables of degree at most `d`:
/// `sum_{j=0}^{n} 2^j * C(n, j) * C(d, j)`.
pub fn count_monomials(n: usize, d: u64) -> u128 {
    assert!(n >= 1, "ambient dimension must be at least 1");
    (0..=n as u64)
        .map(|j| (1u128 << j) * binomial(n as u64, j) * binomial(d, j))
        .sum()
}

/// All exponent vectors in `n` variables with `|d1| + ... + |dn| <= d`, in
/// canonical order.
pub fn monomials_up_to_degree(n: usize, d: u64) -> Vec<Monomial> {
    fn rec(out: &mut Vec<Vec<i64>>, prefix: &mut Vec<i64>, remaining: usize, budget: i64) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in -budget..=budget {
            prefix.push(e);
            rec(out, prefix, remaining - 1, budget - e.abs());
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut raw, &mut Vec::new(), n, d as i64);
    let mut monos: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
    monos.sort();
    monos
}
