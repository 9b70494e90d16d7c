//! Exact arithmetic in the coefficient field Q(q) of rational functions of
//! the deformation parameter q.
//!
//! - [`QLaurent`]: Laurent polynomials in q with arbitrary-precision rational
//!   coefficients, the canonical carrier for q-power phases.
//! - [`QRat`]: fully reduced fractions of Laurent polynomials. The q-power
//!   content lives in the numerator, the denominator is a monic ordinary
//!   polynomial with nonzero constant term, and the numerator/denominator pair
//!   carries no common polynomial factor, so equal values have identical
//!   representations and `==` decides mathematical equality.
//! - [`qint`]: the q-integers `[n] = (q^{2n} - 1)/(q^2 - 1)` that appear in
//!   every eigenvalue formula.
//!
//! All values are immutable and all operations are pure.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Shorthand for an exact integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Laurent polynomial in q over the rationals.
///
/// Stored as a sparse exponent-to-coefficient map with no zero coefficients,
/// so equal values have identical term maps.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl QLaurent {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QLaurent::term(Rational::one(), 0)
    }

    /// The single term `c * q^e`; collapses to zero when `c` is zero.
    pub fn term(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QLaurent { terms }
    }

    /// The monomial `q^e`.
    pub fn q_power(e: i64) -> Self {
        QLaurent::term(Rational::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Exponent-to-coefficient pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// Lowest exponent with nonzero coefficient; `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of q; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.max_exp()
            .map(|e| self.terms[&e].clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Multiply by `q^by`.
    pub fn shifted(&self, by: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        QLaurent { terms }
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        QLaurent { terms }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Exact value at `q = q0`. Fails when `q0 = 0` meets a negative exponent.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, PoleError> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(q0, *e)?;
        }
        Ok(acc)
    }

    /// Dense coefficient vector `[c_0, c_1, ...]`; requires `min_exp >= 0`.
    fn to_dense(&self) -> Vec<Rational> {
        let deg = self.max_exp().unwrap_or(0).max(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            assert!(*e >= 0, "to_dense requires a polynomial");
            out[*e as usize] = c.clone();
        }
        out
    }

    fn from_dense(coeffs: &[Rational]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(e as i64, c.clone());
            }
        }
        QLaurent { terms }
    }
}

/// Error: evaluation hit a pole (vanishing denominator or `0^{negative}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleError {
    pub at: Rational,
}

impl fmt::Display for PoleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pole at q = {}", self.at)
    }
}

impl std::error::Error for PoleError {}

fn rational_pow(q0: &Rational, e: i64) -> Result<Rational, PoleError> {
    if e == 0 {
        return Ok(Rational::one());
    }
    if q0.is_zero() && e < 0 {
        return Err(PoleError { at: q0.clone() });
    }
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q0;
    }
    if e < 0 {
        acc = acc.recip();
    }
    Ok(acc)
}

fn trim(coeffs: &mut Vec<Rational>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut div = b.to_vec();
    trim(&mut div);
    assert!(!div.is_empty(), "polynomial division by zero");
    if rem.len() < div.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - div.len() + 1];
    let lead = div.last().unwrap().clone();
    while rem.len() >= div.len() && !rem.is_empty() {
        let shift = rem.len() - div.len();
        let factor = rem.last().unwrap() / &lead;
        quot[shift] = factor.clone();
        for (i, c) in div.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return x;
    }
    let lead = x.last().unwrap().clone();
    for c in &mut x {
        *c /= &lead;
    }
    x
}

/// Element of the field Q(q), stored as a reduced, normalized fraction of
/// Laurent polynomials.
///
/// Equal values always have identical numerator and denominator maps, so the
/// derived `==` is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: QLaurent,
    den: QLaurent,
}

impl Default for QRat {
    fn default() -> Self {
        QRat::zero()
    }
}

impl QRat {
    /// Build and canonicalize `num/den`.
    pub fn new(num: QLaurent, den: QLaurent) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(q)");
        if num.is_zero() {
            return QRat { num: QLaurent::zero(), den: QLaurent::one() };
        }
        // Move all q-power content into a single shift on the numerator.
        let vn = num.min_exp().unwrap();
        let vd = den.min_exp().unwrap();
        let shift = vn - vd;
        let n0 = num.shifted(-vn).to_dense();
        let d0 = den.shifted(-vd).to_dense();
        let g = poly_gcd(&n0, &d0);
        let (n1, rn) = poly_divmod(&n0, &g);
        let (d1, rd) = poly_divmod(&d0, &g);
        debug_assert!(rn.is_empty() && rd.is_empty());
        // Monic denominator pins the representation.
        let lead = d1.last().unwrap().clone();
        let num = QLaurent::from_dense(&n1).scaled(&lead.recip()).shifted(shift);
        let den = QLaurent::from_dense(&d1).scaled(&lead.recip());
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        QRat { num: QLaurent::one(), den: QLaurent::one() }
    }

    /// The integer `n` as a constant.
    pub fn from_int(n: i64) -> Self {
        QRat { num: QLaurent::term(rat(n), 0), den: QLaurent::one() }
    }

    /// A rational constant.
    pub fn from_rational(c: Rational) -> Self {
        QRat { num: QLaurent::term(c, 0), den: QLaurent::one() }
    }

    /// The monomial `q^e`.
    pub fn q_power(e: i64) -> Self {
        QRat { num: QLaurent::q_power(e), den: QLaurent::one() }
    }

    /// The single term `c * q^e`.
    pub fn term(c: Rational, e: i64) -> Self {
        QRat { num: QLaurent::term(c, e), den: QLaurent::one() }
    }

    /// Numerator of the canonical representation.
    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    /// Denominator of the canonical representation.
    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        QRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        QRat::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        QRat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        QRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero in Q(q)");
        QRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Self {
        QRat::one().div(self)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return QRat::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = QRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact evaluation at `q = q0`; reports poles.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, PoleError> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(PoleError { at: q0.clone() });
        }
        Ok(self.num.eval(q0)? / d)
    }
}

/// Field sum; canonical form in, canonical form out.
pub fn qrat_add(a: &QRat, b: &QRat) -> QRat {
    a.add(b)
}

/// Field product; canonical form in, canonical form out.
pub fn qrat_mul(a: &QRat, b: &QRat) -> QRat {
    a.mul(b)
}

/// Exact evaluation at a rational point, with pole detection.
pub fn qrat_eval(a: &QRat, q0: &Rational) -> Result<Rational, PoleError> {
    a.eval(q0)
}

/// The q-integer `[n] = (q^{2n} - 1)/(q^2 - 1) = 1 + q^2 + ... + q^{2(n-1)}`.
pub fn qint(n: u32) -> QRat {
    let mut acc = QLaurent::zero();
    for j in 0..n {
        acc = acc.add(&QLaurent::q_power(2 * j as i64));
    }
    QRat { num: acc, den: QLaurent::one() }
}

impl std::ops::Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::add(self, rhs)
    }
}

impl std::ops::Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::sub(self, rhs)
    }
}

impl std::ops::Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::mul(self, rhs)
    }
}

impl std::ops::Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        QRat::div(self, rhs)
    }
}

impl std::ops::Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::neg(self)
    }
}

fn rational_text(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn qpower_text(e: i64) -> String {
    match e {
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

/// Body of one Laurent term with the sign stripped; `c` must be positive.
fn laurent_term_text(c: &Rational, e: i64) -> String {
    if e == 0 {
        rational_text(c)
    } else if c.is_one() {
        qpower_text(e)
    } else {
        format!("{}*{}", rational_text(c), qpower_text(e))
    }
}

impl fmt::Display for QLaurent {
    /// Signed sum of `c*q^e` terms in decreasing exponent order, e.g.
    /// `-q^6 - q^4` or `1 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let body = laurent_term_text(&c.abs(), *e);
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for QRat {
    /// Numerator text when the value is a Laurent polynomial, otherwise the
    /// parenthesized fraction `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
