//! The Hopf *-algebra P = SU_q(1,1) in normal-ordered form, together with its
//! circle-grading and the projection onto the structure group.
//!
//! - [`Monomial`]: a normal-ordered basis word `a^m g^k gs^l`, where a negative
//!   `m` stands for the starred generator power `as^|m|`.
//! - [`AlgElt`]: a finite Q(q)-linear combination of basis words; products are
//!   rewritten to the basis eagerly, so no element ever stores both `a` and
//!   `as` factors.
//! - [`TensorElt`]: an element of P (x) P, the coproduct's codomain.
//! - [`GroupElt`]: the structure group algebra spanned by the powers `z^n`.
//!
//! The defining relations, with `g gs = gs g`:
//!
//! ```text
//! as a - gs g = 1          a as - q^2 g gs = 1
//! q g a = a g              q gs a = a gs
//! ```
//!
//! Every element has a well-defined decomposition into Z-homogeneous parts
//! ([`AlgElt::zdegree`] for the homogeneous case); the degree of `a^m g^k gs^l`
//! is `m + k - l`. Degree zero is the quantum hyperboloid subalgebra, generated
//! by `rho = g gs` and `xi = a gs`.

use crate::coeffs::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// Normal-ordered basis word `a^m g^k gs^l` (negative `m` means `as^|m|`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    /// Signed power of `a`; `-m` encodes `as^m`.
    pub a: i64,
    /// Power of `g`.
    pub k: u32,
    /// Power of `gs`.
    pub l: u32,
}

impl Monomial {
    pub fn new(a: i64, k: u32, l: u32) -> Self {
        Monomial { a, k, l }
    }

    pub fn unit() -> Self {
        Monomial { a: 0, k: 0, l: 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.a == 0 && self.k == 0 && self.l == 0
    }

    /// Degree under the circle grading: `a + k - l`.
    pub fn zdegree(&self) -> i64 {
        self.a + self.k as i64 - self.l as i64
    }

    /// Total generator count, the length of the word.
    pub fn length(&self) -> u64 {
        self.a.unsigned_abs() + self.k as u64 + self.l as u64
    }
}

/// Element of P: finite linear combination of normal-ordered monomials over
/// Q(q). No zero coefficients are stored, so `==` decides equality in P.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgElt {
    terms: BTreeMap<Monomial, QRat>,
}

impl AlgElt {
    pub fn zero() -> Self {
        AlgElt { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        AlgElt::basis(0, 0, 0)
    }

    /// The basis word `a^m g^k gs^l` with coefficient 1.
    pub fn basis(a: i64, k: u32, l: u32) -> Self {
        AlgElt::term(QRat::one(), Monomial::new(a, k, l))
    }

    /// A single scaled basis word.
    pub fn term(c: QRat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgElt { terms }
    }

    /// A scalar multiple of the unit.
    pub fn scalar(c: QRat) -> Self {
        AlgElt::term(c, Monomial::unit())
    }

    /// Generator `a`.
    pub fn gen_a() -> Self {
        AlgElt::basis(1, 0, 0)
    }

    /// Generator `as = a*`.
    pub fn gen_a_star() -> Self {
        AlgElt::basis(-1, 0, 0)
    }

    /// Generator `g`.
    pub fn gen_g() -> Self {
        AlgElt::basis(0, 1, 0)
    }

    /// Generator `gs = g*`.
    pub fn gen_g_star() -> Self {
        AlgElt::basis(0, 0, 1)
    }

    /// Hyperboloid radius-like generator `rho = g gs`.
    pub fn rho() -> Self {
        AlgElt::basis(0, 1, 1)
    }

    /// Hyperboloid generator `xi = a gs`.
    pub fn xi() -> Self {
        AlgElt::basis(1, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Basis-word/coefficient pairs in lexicographic `(a, k, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> QRat {
        self.terms.get(m).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(QRat::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgElt {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return AlgElt::zero();
        }
        AlgElt {
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
        }
    }

    /// Product in P, rewritten to the normal-ordered basis.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = AlgElt::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul(c2);
                for (m, phase) in mono_mul(m1, m2).terms {
                    out.add_term(m, &phase.mul(&c));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = AlgElt::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The *-structure: reverses words and stars each generator. On the basis,
    /// `(a^m g^k gs^l)* = q^{m(k+l)} a^{-m} g^l gs^k`.
    pub fn star(&self) -> Self {
        let mut out = AlgElt::zero();
        for (m, c) in &self.terms {
            let phase = QRat::q_power(m.a * (m.k as i64 + m.l as i64));
            out.add_term(Monomial::new(-m.a, m.l, m.k), &phase.mul(c));
        }
        out
    }

    /// The antipode, an algebra anti-homomorphism. On the basis,
    /// `S(a^m g^k gs^l) = (-1)^{k+l} q^{k-l+m(k+l)} a^{-m} g^k gs^l`.
    pub fn antipode(&self) -> Self {
        let mut out = AlgElt::zero();
        for (m, c) in &self.terms {
            let e = m.k as i64 - m.l as i64 + m.a * (m.k as i64 + m.l as i64);
            let mut phase = QRat::q_power(e);
            if (m.k + m.l) % 2 == 1 {
                phase = phase.neg();
            }
            out.add_term(Monomial::new(-m.a, m.k, m.l), &phase.mul(c));
        }
        out
    }

    /// The counit: `a, as -> 1` and `g, gs -> 0`, extended as a homomorphism.
    pub fn counit(&self) -> QRat {
        let mut out = QRat::zero();
        for (m, c) in &self.terms {
            if m.k == 0 && m.l == 0 {
                out = out.add(c);
            }
        }
        out
    }

    /// The coproduct, an algebra homomorphism into P (x) P determined by
    /// `a -> a(x)a + q gs(x)g` and `g -> g(x)a + as(x)g` and their stars.
    pub fn coproduct(&self) -> TensorElt {
        let mut out = TensorElt::zero();
        for (m, c) in &self.terms {
            out = out.add(&coproduct_monomial(m).scale(c));
        }
        out
    }

    /// The degree `n` with `x -> x (x) z^n` under the circle coaction, when
    /// all words agree on it.
    pub fn zdegree(&self) -> Result<i64, Inhomogeneous> {
        let mut degree: Option<i64> = None;
        for m in self.terms.keys() {
            match degree {
                None => degree = Some(m.zdegree()),
                Some(n) if n == m.zdegree() => {}
                Some(n) => {
                    return Err(Inhomogeneous { seen: n, conflicting: m.zdegree() })
                }
            }
        }
        Ok(degree.unwrap_or(0))
    }

    /// Splits into Z-homogeneous parts, keyed by degree.
    pub fn zdegree_parts(&self) -> BTreeMap<i64, AlgElt> {
        let mut out: BTreeMap<i64, AlgElt> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.zdegree()).or_insert_with(AlgElt::zero).add_term(*m, c);
        }
        out
    }

    /// The Hopf projection onto the structure group: `a -> z`, `g -> 0`.
    pub fn jproject(&self) -> GroupElt {
        let mut out = GroupElt::zero();
        for (m, c) in &self.terms {
            if m.k == 0 && m.l == 0 {
                out.add_term(m.a, c);
            }
        }
        out
    }
}

/// Error: the element mixes words of different circle degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inhomogeneous {
    pub seen: i64,
    pub conflicting: i64,
}

impl fmt::Display for Inhomogeneous {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "inhomogeneous element: degrees {} and {} both occur",
            self.seen, self.conflicting
        )
    }
}

impl std::error::Error for Inhomogeneous {}

/// Product of two basis words, as a normal-ordered element.
///
/// The `g`-block passes the incoming `a`-power with the uniform phase
/// `g^k gs^l a^m = q^{-m(k+l)} a^m g^k gs^l`, after which only the two pure
/// `a`-powers interact.
fn mono_mul(m1: &Monomial, m2: &Monomial) -> AlgElt {
    let phase = QRat::q_power(-m2.a * (m1.k as i64 + m1.l as i64));
    let alpha = alpha_power_product(m1.a, m2.a);
    let mut out = AlgElt::zero();
    for (m, c) in &alpha.terms {
        let merged = Monomial::new(m.a, m.k + m1.k + m2.k, m.l + m1.l + m2.l);
        out.add_term(merged, &phase.mul(c));
    }
    out
}

/// Normal-ordered form of `a^{m1} a^{m2}` with the sign convention
/// `a^{-m} = as^m`; mixed pairs reduce through `a as = 1 + q^2 g gs` and
/// `as a = 1 + g gs`.
fn alpha_power_product(m1: i64, m2: i64) -> AlgElt {
    if m1 == 0 || m2 == 0 || (m1 > 0) == (m2 > 0) {
        return AlgElt::basis(m1 + m2, 0, 0);
    }
    let mut out = AlgElt::basis(m1 + m2, 0, 0);
    if m1 > 0 {
        // a^a as^b = a^{a-b} prod_{j=b-s+1..b} (1 + q^{2j} g gs), s = min(a,b).
        let (a, b) = (m1, -m2);
        let s = a.min(b);
        for j in (b - s + 1)..=b {
            out = out.mul(&one_plus_q_rho(2 * j));
        }
    } else {
        // as^b a^a = a^{a-b} prod_{j=a-s..a-1} (1 + q^{-2j} g gs), s = min(a,b).
        let (b, a) = (-m1, m2);
        let s = a.min(b);
        for j in (a - s)..=(a - 1) {
            out = out.mul(&one_plus_q_rho(-2 * j));
        }
    }
    out
}

/// The central-looking factor `1 + q^e g gs`.
fn one_plus_q_rho(e: i64) -> AlgElt {
    let mut out = AlgElt::one();
    out.add_term(Monomial::new(0, 1, 1), &QRat::q_power(e));
    out
}

/// Element of P (x) P.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElt {
    terms: BTreeMap<(Monomial, Monomial), QRat>,
}

impl TensorElt {
    pub fn zero() -> Self {
        TensorElt { terms: BTreeMap::new() }
    }

    /// The unit `1 (x) 1`.
    pub fn one() -> Self {
        TensorElt::term(QRat::one(), Monomial::unit(), Monomial::unit())
    }

    pub fn term(c: QRat, left: Monomial, right: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((left, right), c);
        }
        TensorElt { terms }
    }

    /// The simple tensor `x (x) y`.
    pub fn of(x: &AlgElt, y: &AlgElt) -> Self {
        let mut out = TensorElt::zero();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                out.add_term(*mx, *my, &cx.mul(cy));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &QRat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right)).or_insert_with(QRat::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&(left, right));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(*l, *r, c);
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return TensorElt::zero();
        }
        TensorElt {
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
        }
    }

    /// Componentwise product `(x1 (x) y1)(x2 (x) y2) = x1 x2 (x) y1 y2`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TensorElt::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let c = c1.mul(c2);
                let left = mono_mul(l1, l2);
                let right = mono_mul(r1, r2);
                for (ml, cl) in left.terms() {
                    for (mr, cr) in right.terms() {
                        out.add_term(*ml, *mr, &c.mul(cl).mul(cr));
                    }
                }
            }
        }
        out
    }

    /// Applies `f` to each left leg and multiplies against the right leg;
    /// computes contractions like `sum S(x') x''`.
    pub fn contract_left<F>(&self, f: F) -> AlgElt
    where
        F: Fn(&AlgElt) -> AlgElt,
    {
        let mut out = AlgElt::zero();
        for ((l, r), c) in &self.terms {
            let image = f(&AlgElt::basis(l.a, l.k, l.l));
            out = out.add(&image.mul(&AlgElt::term(c.clone(), *r)));
        }
        out
    }

    /// Applies `f` to each right leg and multiplies the left leg against it.
    pub fn contract_right<F>(&self, f: F) -> AlgElt
    where
        F: Fn(&AlgElt) -> AlgElt,
    {
        let mut out = AlgElt::zero();
        for ((l, r), c) in &self.terms {
            let image = f(&AlgElt::basis(r.a, r.k, r.l));
            out = out.add(&AlgElt::term(c.clone(), *l).mul(&image));
        }
        out
    }
}

fn coproduct_monomial(m: &Monomial) -> TensorElt {
    let mut out = TensorElt::one();
    let alpha_leg = if m.a >= 0 { delta_a() } else { delta_a_star() };
    for _ in 0..m.a.unsigned_abs() {
        out = out.mul(&alpha_leg);
    }
    for _ in 0..m.k {
        out = out.mul(&delta_g());
    }
    for _ in 0..m.l {
        out = out.mul(&delta_g_star());
    }
    out
}

fn delta_a() -> TensorElt {
    let mut out = TensorElt::term(QRat::one(), Monomial::new(1, 0, 0), Monomial::new(1, 0, 0));
    out.add_term(Monomial::new(0, 0, 1), Monomial::new(0, 1, 0), &QRat::q_power(1));
    out
}

fn delta_a_star() -> TensorElt {
    let mut out = TensorElt::term(QRat::one(), Monomial::new(-1, 0, 0), Monomial::new(-1, 0, 0));
    out.add_term(Monomial::new(0, 1, 0), Monomial::new(0, 0, 1), &QRat::q_power(1));
    out
}

fn delta_g() -> TensorElt {
    let mut out = TensorElt::term(QRat::one(), Monomial::new(0, 1, 0), Monomial::new(1, 0, 0));
    out.add_term(Monomial::new(-1, 0, 0), Monomial::new(0, 1, 0), &QRat::one());
    out
}

fn delta_g_star() -> TensorElt {
    let mut out = TensorElt::term(QRat::one(), Monomial::new(0, 0, 1), Monomial::new(-1, 0, 0));
    out.add_term(Monomial::new(1, 0, 0), Monomial::new(0, 0, 1), &QRat::one());
    out
}

/// Element of the structure group algebra, a Laurent polynomial in `z`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupElt {
    terms: BTreeMap<i64, QRat>,
}

impl GroupElt {
    pub fn zero() -> Self {
        GroupElt { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        GroupElt::z_power(0)
    }

    pub fn z_power(n: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(n, QRat::one());
        GroupElt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, n: i64) -> QRat {
        self.terms.get(&n).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn add_term(&mut self, n: i64, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(n).or_insert_with(QRat::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.add_term(*n, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GroupElt::zero();
        for (n1, c1) in &self.terms {
            for (n2, c2) in &other.terms {
                out.add_term(n1 + n2, &c1.mul(c2));
            }
        }
        out
    }

    /// The *-structure `z^n -> z^{-n}`; the antipode acts the same way.
    pub fn star(&self) -> Self {
        GroupElt {
            terms: self.terms.iter().map(|(n, c)| (-n, c.clone())).collect(),
        }
    }

    pub fn antipode(&self) -> Self {
        self.star()
    }

    pub fn counit(&self) -> QRat {
        let mut out = QRat::zero();
        for c in self.terms.values() {
            out = out.add(c);
        }
        out
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| {
                let body = match n {
                    0 => return c.to_string(),
                    1 => "z".to_string(),
                    _ => format!("z^{n}"),
                };
                if c.is_one() {
                    body
                } else {
                    format!("{c} {body}")
                }
            })
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}

/// Coordinate of the quantum germ of `z^n` in the invariant basis of the
/// structure group calculus:
/// `c_n = (1 - q^{-2n}) / ((1 + q^2)(1 - q^{-2}))`, with `c_0 = 0`.
pub fn germ_scalar(n: i64) -> QRat {
    let num = QRat::one().sub(&QRat::q_power(-2 * n));
    let den = QRat::one()
        .add(&QRat::q_power(2))
        .mul(&QRat::one().sub(&QRat::q_power(-2)));
    num.div(&den)
}

impl std::ops::Add for &AlgElt {
    type Output = AlgElt;
    fn add(self, rhs: &AlgElt) -> AlgElt {
        AlgElt::add(self, rhs)
    }
}

impl std::ops::Sub for &AlgElt {
    type Output = AlgElt;
    fn sub(self, rhs: &AlgElt) -> AlgElt {
        AlgElt::sub(self, rhs)
    }
}

impl std::ops::Mul for &AlgElt {
    type Output = AlgElt;
    fn mul(self, rhs: &AlgElt) -> AlgElt {
        AlgElt::mul(self, rhs)
    }
}

impl std::ops::Neg for &AlgElt {
    type Output = AlgElt;
    fn neg(self) -> AlgElt {
        AlgElt::neg(self)
    }
}

fn monomial_text(m: &Monomial) -> String {
    if m.is_unit() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    if m.a > 0 {
        parts.push(if m.a == 1 { "a".to_string() } else { format!("a^{}", m.a) });
    } else if m.a < 0 {
        parts.push(if m.a == -1 { "as".to_string() } else { format!("as^{}", -m.a) });
    }
    if m.k > 0 {
        parts.push(if m.k == 1 { "g".to_string() } else { format!("g^{}", m.k) });
    }
    if m.l > 0 {
        parts.push(if m.l == 1 { "gs".to_string() } else { format!("gs^{}", m.l) });
    }
    parts.join(" ")
}

/// One rendered summand: its sign and its body text.
fn signed_pieces(c: &QRat, mono_text: Option<&str>) -> Vec<(bool, String)> {
    use num::{One, Signed};
    if let Some(mono) = mono_text {
        if c.is_polynomial() {
            let terms: Vec<_> = c.numerator().terms().collect();
            if terms.len() == 1 {
                let (e, coeff) = terms[0];
                let body = if coeff.abs().is_one() && *e == 0 {
                    mono.to_string()
                } else {
                    format!("{} {}", QRat::term(coeff.abs(), *e), mono)
                };
                return vec![(coeff.is_negative(), body)];
            }
            return vec![(false, format!("({}) {}", c.numerator(), mono))];
        }
        vec![(false, format!("{c} {mono}"))]
    } else if c.is_polynomial() {
        c.numerator()
            .terms()
            .rev()
            .map(|(e, coeff)| (coeff.is_negative(), QRat::term(coeff.abs(), *e).to_string()))
            .collect()
    } else {
        vec![(false, c.to_string())]
    }
}

impl AlgElt {
    /// Rendered summands as sign/body pairs, in canonical term order.
    pub(crate) fn pieces(&self) -> Vec<(bool, String)> {
        let mut pieces = Vec::new();
        for (m, c) in &self.terms {
            if m.is_unit() {
                pieces.extend(signed_pieces(c, None));
            } else {
                pieces.extend(signed_pieces(c, Some(&monomial_text(m))));
            }
        }
        pieces
    }
}

pub(crate) fn join_pieces(pieces: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in pieces.into_iter().enumerate() {
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for AlgElt {
    /// Canonical text: summands in lexicographic `(a, k, l)` word order, each
    /// a coefficient followed by the word, e.g. `1 + q^2 g gs`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", join_pieces(self.pieces()))
    }
}

impl fmt::Display for TensorElt {
    /// Canonical text with `(x)` between the legs, e.g. `a (x) a + g (x) gs`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for ((m1, m2), c) in self.terms() {
            let body = format!("{} (x) {}", monomial_text(m1), monomial_text(m2));
            pieces.extend(signed_pieces(c, Some(&body)));
        }
        write!(f, "{}", join_pieces(pieces))
    }
}
