//! The graded differential *-algebra of the 3D left-covariant calculus on P.
//!
//! Every form is stored as a left-coefficient combination of the eight basis
//! words over the invariant 1-forms, in the fixed letter order `em < ep < e3`:
//!
//! ```text
//! 1;  em, ep, e3;  em^ep, em^e3, ep^e3;  em^ep^e3
//! ```
//!
//! Here `em`, `ep`, `e3` print the frame `eta_-`, `eta_+`, `eta_3`. Squares of
//! letters vanish and unordered products sort back with the factors
//!
//! ```text
//! ep em = -q^2 em ep      e3 em = -q^4 em e3      e3 ep = -q^-4 ep e3
//! ```
//!
//! while coefficients pass a word with `w x = q^{-p(w) zdeg(x)} x w`, where
//! `p` counts 1 for each `em`/`ep` letter and 2 for `e3`. The top word
//! `em^ep` of the horizontal part is the quantum volume form [`Form::dvol`].
//!
//! [`Form::differential`] extends the generator formulas by the graded
//! Leibniz rule; [`Form::star`] is the graded anti-involution fixing
//! `em* = ep`, `e3* = -e3`. Base forms (horizontal, total weight zero) model
//! the calculus of the quantum hyperboloid and carry the left/right metric,
//! Hodge operators, and codifferentials.

use crate::algebra::{join_pieces, AlgElt};
use crate::coeffs::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// One of the eight basis words in the letters `em < ep < e3`, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EtaWord(u8);

const EM: u8 = 1;
const EP: u8 = 2;
const E3: u8 = 4;

impl EtaWord {
    /// The empty word.
    pub const UNIT: EtaWord = EtaWord(0);
    /// `eta_-`.
    pub const EM: EtaWord = EtaWord(EM);
    /// `eta_+`.
    pub const EP: EtaWord = EtaWord(EP);
    /// `eta_3`.
    pub const E3: EtaWord = EtaWord(E3);
    /// The volume word `em^ep`.
    pub const DVOL: EtaWord = EtaWord(EM | EP);
    /// The top word `em^ep^e3`.
    pub const TOP: EtaWord = EtaWord(EM | EP | E3);

    /// All eight words, by degree and then letter order.
    pub const ALL: [EtaWord; 8] = [
        EtaWord(0),
        EtaWord(EM),
        EtaWord(EP),
        EtaWord(E3),
        EtaWord(EM | EP),
        EtaWord(EM | E3),
        EtaWord(EP | E3),
        EtaWord(EM | EP | E3),
    ];

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains_e3(&self) -> bool {
        self.0 & E3 != 0
    }

    /// The same word with the `e3` letter dropped.
    pub fn without_e3(&self) -> EtaWord {
        EtaWord(self.0 & !E3)
    }

    /// Letters in canonical order.
    fn letters(&self) -> Vec<u8> {
        [EM, EP, E3].into_iter().filter(|b| self.0 & b != 0).collect()
    }

    /// Coefficient-passing weight: `w x = q^{-p(w) zdeg(x)} x w`.
    pub fn pass_exponent(&self) -> i64 {
        let mut p = 0;
        if self.0 & EM != 0 {
            p += 1;
        }
        if self.0 & EP != 0 {
            p += 1;
        }
        if self.0 & E3 != 0 {
            p += 2;
        }
        p
    }

    /// Weight under the structure group coaction: `em -> -2`, `ep -> +2`.
    pub fn weight(&self) -> i64 {
        let mut w = 0;
        if self.0 & EM != 0 {
            w -= 2;
        }
        if self.0 & EP != 0 {
            w += 2;
        }
        w
    }

    /// Display token; the empty word prints as nothing.
    pub fn token(&self) -> &'static str {
        match self.0 {
            0 => "",
            EM => "em",
            EP => "ep",
            E3 => "e3",
            3 => "em^ep",
            5 => "em^e3",
            6 => "ep^e3",
            7 => "em^ep^e3",
            _ => unreachable!(),
        }
    }
}

/// Swap factor `f` in `x y = f * (y x)` for letters `x > y`.
fn swap_factor(x: u8, y: u8) -> QRat {
    let e = match (x, y) {
        (EP, EM) => 2,
        (E3, EM) => 4,
        (E3, EP) => -4,
        _ => unreachable!(),
    };
    QRat::q_power(e).neg()
}

/// Sorts a repetition-free letter sequence into canonical order, collecting
/// the swap factors.
fn sort_letters(mut letters: Vec<u8>) -> (QRat, EtaWord) {
    let mut factor = QRat::one();
    let n = letters.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            if letters[j] > letters[j + 1] {
                factor = factor.mul(&swap_factor(letters[j], letters[j + 1]));
                letters.swap(j, j + 1);
            }
        }
    }
    let bits = letters.into_iter().fold(0u8, |acc, b| acc | b);
    (factor, EtaWord(bits))
}

/// Multiplies every homogeneous component of `x` by `q^{-p * zdeg}`, the
/// effect of moving `x` leftward through a word of passing weight `p`.
fn pass_through(x: &AlgElt, p: i64) -> AlgElt {
    let mut out = AlgElt::zero();
    for (m, c) in x.terms() {
        out.add_term(*m, &c.mul(&QRat::q_power(-p * m.zdegree())));
    }
    out
}

/// Element of the exterior calculus: left coefficients on the basis words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Form {
    parts: BTreeMap<EtaWord, AlgElt>,
}

/// Error: the operation is defined on base forms only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotBase;

impl fmt::Display for NotBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a base form: needs horizontal words and total weight zero")
    }
}

impl std::error::Error for NotBase {}

impl Form {
    pub fn zero() -> Self {
        Form { parts: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Form::from_alg(AlgElt::one())
    }

    /// A degree-0 form.
    pub fn from_alg(x: AlgElt) -> Self {
        Form::term(x, EtaWord::UNIT)
    }

    /// The single part `x * w`.
    pub fn term(x: AlgElt, w: EtaWord) -> Self {
        let mut parts = BTreeMap::new();
        if !x.is_zero() {
            parts.insert(w, x);
        }
        Form { parts }
    }

    /// The frame form `eta_-`.
    pub fn eta_minus() -> Self {
        Form::term(AlgElt::one(), EtaWord::EM)
    }

    /// The frame form `eta_+`.
    pub fn eta_plus() -> Self {
        Form::term(AlgElt::one(), EtaWord::EP)
    }

    /// The vertical frame form `eta_3`.
    pub fn eta_three() -> Self {
        Form::term(AlgElt::one(), EtaWord::E3)
    }

    /// The volume form `em^ep`.
    pub fn dvol() -> Self {
        Form::term(AlgElt::one(), EtaWord::DVOL)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Word/coefficient pairs in word-mask order.
    pub fn parts(&self) -> impl Iterator<Item = (&EtaWord, &AlgElt)> {
        self.parts.iter()
    }

    pub fn coefficient(&self, w: EtaWord) -> AlgElt {
        self.parts.get(&w).cloned().unwrap_or_else(AlgElt::zero)
    }

    pub fn add_part(&mut self, w: EtaWord, x: &AlgElt) {
        if x.is_zero() {
            return;
        }
        let entry = self.parts.entry(w).or_insert_with(AlgElt::zero);
        *entry = entry.add(x);
        if entry.is_zero() {
            self.parts.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, x) in &other.parts {
            out.add_part(*w, x);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Form {
            parts: self.parts.iter().map(|(w, x)| (*w, x.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Form::zero();
        }
        Form {
            parts: self.parts.iter().map(|(w, x)| (*w, x.scale(c))).collect(),
        }
    }

    /// Left module action `y * self`.
    pub fn mul_alg_left(&self, y: &AlgElt) -> Self {
        let mut out = Form::zero();
        for (w, x) in &self.parts {
            out.add_part(*w, &y.mul(x));
        }
        out
    }

    /// Right module action `self * y`; the coefficient passes each word.
    pub fn mul_alg_right(&self, y: &AlgElt) -> Self {
        let mut out = Form::zero();
        for (w, x) in &self.parts {
            out.add_part(*w, &x.mul(&pass_through(y, w.pass_exponent())));
        }
        out
    }

    /// Graded product in canonical left-coefficient form.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Form::zero();
        for (w1, x) in &self.parts {
            let p = w1.pass_exponent();
            for (w2, y) in &other.parts {
                if w1.0 & w2.0 != 0 {
                    continue;
                }
                let mut letters = w1.letters();
                letters.extend(w2.letters());
                let (factor, w) = sort_letters(letters);
                let coeff = x.mul(&pass_through(y, p)).scale(&factor);
                out.add_part(w, &coeff);
            }
        }
        out
    }

    /// Degree-homogeneous components, keyed by word length.
    pub fn degree_parts(&self) -> BTreeMap<u32, Form> {
        let mut out: BTreeMap<u32, Form> = BTreeMap::new();
        for (w, x) in &self.parts {
            out.entry(w.degree()).or_insert_with(Form::zero).add_part(*w, x);
        }
        out
    }

    /// The common degree, when homogeneous; `None` for mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut degree = None;
        for w in self.parts.keys() {
            match degree {
                None => degree = Some(w.degree()),
                Some(d) if d == w.degree() => {}
                Some(_) => return None,
            }
        }
        degree
    }

    /// Components of fixed total weight `zdeg(coefficient) + weight(word)`.
    pub fn weight_parts(&self) -> BTreeMap<i64, Form> {
        let mut out: BTreeMap<i64, Form> = BTreeMap::new();
        for (w, x) in &self.parts {
            for (m, c) in x.terms() {
                let weight = m.zdegree() + w.weight();
                out.entry(weight)
                    .or_insert_with(Form::zero)
                    .add_part(*w, &AlgElt::term(c.clone(), *m));
            }
        }
        out
    }

    /// Drops every term whose word contains `e3`.
    pub fn horizontal_part(&self) -> Self {
        let mut out = Form::zero();
        for (w, x) in &self.parts {
            if !w.contains_e3() {
                out.add_part(*w, x);
            }
        }
        out
    }

    pub fn is_horizontal(&self) -> bool {
        self.parts.keys().all(|w| !w.contains_e3())
    }

    /// Horizontal with total weight zero in every term: a form on the
    /// quantum hyperboloid.
    pub fn is_base(&self) -> bool {
        self.parts.iter().all(|(w, x)| {
            !w.contains_e3() && x.terms().all(|(m, _)| m.zdegree() + w.weight() == 0)
        })
    }

    /// The differential, extending `d` on P and on the frame by the graded
    /// Leibniz rule; `d^2 = 0`.
    pub fn differential(&self) -> Self {
        let mut cache: BTreeMap<crate::algebra::Monomial, Form> = BTreeMap::new();
        let mut out = Form::zero();
        for (w, x) in &self.parts {
            let word = Form::term(AlgElt::one(), *w);
            let mut dx = Form::zero();
            for (m, c) in x.terms() {
                dx = dx.add(&d_monomial(m, &mut cache).scale(c));
            }
            out = out.add(&dx.wedge(&word));
            out = out.add(&d_word(*w).mul_alg_left(x));
        }
        out
    }

    /// Graded anti-involution: `(x W)* = W* x*` with letter stars
    /// `em* = ep`, `e3* = -e3` and the reversal sign `(-1)^{k(k-1)/2}`.
    pub fn star(&self) -> Self {
        let mut out = Form::zero();
        for (w, x) in &self.parts {
            let k = w.degree() as i64;
            let mut negative = (k * (k - 1) / 2) % 2 == 1;
            if w.contains_e3() {
                negative = !negative;
            }
            let starred: Vec<u8> = w
                .letters()
                .into_iter()
                .rev()
                .map(|b| match b {
                    EM => EP,
                    EP => EM,
                    _ => E3,
                })
                .collect();
            let (mut factor, sorted) = sort_letters(starred);
            if negative {
                factor = factor.neg();
            }
            let coeff = pass_through(&x.star(), sorted.pass_exponent()).scale(&factor);
            out.add_part(sorted, &coeff);
        }
        out
    }

    /// Right-coefficient view `W -> y_W` with `self = sum W * y_W`.
    pub fn right_coefficients(&self) -> BTreeMap<EtaWord, AlgElt> {
        self.parts
            .iter()
            .map(|(w, x)| (*w, pass_through(x, -w.pass_exponent())))
            .collect()
    }

    /// Rebuilds a form from its right-coefficient view.
    pub fn from_right_coefficients(coeffs: &BTreeMap<EtaWord, AlgElt>) -> Self {
        let mut out = Form::zero();
        for (w, y) in coeffs {
            out.add_part(*w, &pass_through(y, w.pass_exponent()));
        }
        out
    }
}

/// `1 / (1 + q^2)`, the scalar in the vertical parts of the generator
/// differentials.
fn inv_one_plus_q2() -> QRat {
    QRat::one().add(&QRat::q_power(2)).inv()
}

/// Differential of a single generator.
fn d_generator(a: i64, k: u32) -> Form {
    let mut out = Form::zero();
    if a > 0 {
        // d a = 1/(1+q^2) a e3 + q gs ep
        out.add_part(EtaWord::E3, &AlgElt::gen_a().scale(&inv_one_plus_q2()));
        out.add_part(EtaWord::EP, &AlgElt::gen_g_star().scale(&QRat::q_power(1)));
    } else if a < 0 {
        // d as = -q^2/(1+q^2) as e3 + g em
        let c = inv_one_plus_q2().mul(&QRat::q_power(2)).neg();
        out.add_part(EtaWord::E3, &AlgElt::gen_a_star().scale(&c));
        out.add_part(EtaWord::EM, &AlgElt::gen_g());
    } else if k > 0 {
        // d g = 1/(1+q^2) g e3 + as ep
        out.add_part(EtaWord::E3, &AlgElt::gen_g().scale(&inv_one_plus_q2()));
        out.add_part(EtaWord::EP, &AlgElt::gen_a_star());
    } else {
        // d gs = -q^2/(1+q^2) gs e3 + q^-1 a em
        let c = inv_one_plus_q2().mul(&QRat::q_power(2)).neg();
        out.add_part(EtaWord::E3, &AlgElt::gen_g_star().scale(&c));
        out.add_part(EtaWord::EM, &AlgElt::gen_a().scale(&QRat::q_power(-1)));
    }
    out
}

/// Differential of a basis word of P by the Leibniz rule on its leftmost
/// generator, memoized per top-level call.
fn d_monomial(
    m: &crate::algebra::Monomial,
    cache: &mut BTreeMap<crate::algebra::Monomial, Form>,
) -> Form {
    use crate::algebra::Monomial;
    if m.is_unit() {
        return Form::zero();
    }
    if let Some(hit) = cache.get(m) {
        return hit.clone();
    }
    let (head, rest) = if m.a > 0 {
        (Monomial::new(1, 0, 0), Monomial::new(m.a - 1, m.k, m.l))
    } else if m.a < 0 {
        (Monomial::new(-1, 0, 0), Monomial::new(m.a + 1, m.k, m.l))
    } else if m.k > 0 {
        (Monomial::new(0, 1, 0), Monomial::new(0, m.k - 1, m.l))
    } else {
        (Monomial::new(0, 0, 1), Monomial::new(0, 0, m.l - 1))
    };
    let head_elt = AlgElt::basis(head.a, head.k, head.l);
    let rest_elt = AlgElt::basis(rest.a, rest.k, rest.l);
    let out = d_generator(head.a, head.k)
        .mul_alg_right(&rest_elt)
        .add(&d_monomial(&rest, cache).mul_alg_left(&head_elt));
    cache.insert(*m, out.clone());
    out
}

/// Differential of a frame word by the graded Leibniz rule over its letters.
fn d_word(w: EtaWord) -> Form {
    let mut out = Form::zero();
    let letters = w.letters();
    for (i, letter) in letters.iter().enumerate() {
        let d_letter = match *letter {
            // d em = q^2 em^e3, d ep = -q^-2 ep^e3, d e3 = -(1+q^2) em^ep
            EM => Form::term(AlgElt::scalar(QRat::q_power(2)), EtaWord(EM | E3)),
            EP => Form::term(AlgElt::scalar(QRat::q_power(-2).neg()), EtaWord(EP | E3)),
            _ => Form::term(
                AlgElt::scalar(QRat::one().add(&QRat::q_power(2)).neg()),
                EtaWord::DVOL,
            ),
        };
        let prefix = letters[..i].iter().fold(0u8, |acc, b| acc | b);
        let suffix = letters[i + 1..].iter().fold(0u8, |acc, b| acc | b);
        let mut piece = Form::term(AlgElt::one(), EtaWord(prefix))
            .wedge(&d_letter)
            .wedge(&Form::term(AlgElt::one(), EtaWord(suffix)));
        if i % 2 == 1 {
            piece = piece.neg();
        }
        out = out.add(&piece);
    }
    out
}

/// Left metric on base forms of equal degree; mixed degrees pair to zero.
pub fn metric_left(u: &Form, v: &Form) -> Result<AlgElt, NotBase> {
    if !u.is_base() || !v.is_base() {
        return Err(NotBase);
    }
    let mut out = u.coefficient(EtaWord::UNIT).mul(&v.coefficient(EtaWord::UNIT).star());
    // degree 1: <x1 em + y1 ep, x2 em + y2 ep> = q^2 x1 x2* + y1 y2*
    let x1 = u.coefficient(EtaWord::EM);
    let y1 = u.coefficient(EtaWord::EP);
    let x2 = v.coefficient(EtaWord::EM);
    let y2 = v.coefficient(EtaWord::EP);
    out = out.add(&x1.mul(&x2.star()).scale(&QRat::q_power(2)));
    out = out.add(&y1.mul(&y2.star()));
    let b1 = u.coefficient(EtaWord::DVOL);
    let b2 = v.coefficient(EtaWord::DVOL);
    out = out.add(&b1.mul(&b2.star()));
    Ok(out)
}

/// Left Hodge operator on base forms: `b -> b* dvol`,
/// `x em + y ep -> -y* em + x* ep`, `b dvol -> b*`.
pub fn hodge_left(u: &Form) -> Result<Form, NotBase> {
    if !u.is_base() {
        return Err(NotBase);
    }
    let mut out = Form::zero();
    out.add_part(EtaWord::DVOL, &u.coefficient(EtaWord::UNIT).star());
    out.add_part(EtaWord::EM, &u.coefficient(EtaWord::EP).star().neg());
    out.add_part(EtaWord::EP, &u.coefficient(EtaWord::EM).star());
    out.add_part(EtaWord::UNIT, &u.coefficient(EtaWord::DVOL).star());
    Ok(out)
}

/// Inverse of [`hodge_left`]: on degree 1, `x em + y ep -> y* em - x* ep`.
pub fn hodge_left_inv(u: &Form) -> Result<Form, NotBase> {
    if !u.is_base() {
        return Err(NotBase);
    }
    let mut out = Form::zero();
    out.add_part(EtaWord::DVOL, &u.coefficient(EtaWord::UNIT).star());
    out.add_part(EtaWord::EM, &u.coefficient(EtaWord::EP).star());
    out.add_part(EtaWord::EP, &u.coefficient(EtaWord::EM).star().neg());
    out.add_part(EtaWord::UNIT, &u.coefficient(EtaWord::DVOL).star());
    Ok(out)
}

/// Right Hodge operator `hodge_left . star`.
pub fn hodge_right(u: &Form) -> Result<Form, NotBase> {
    hodge_left(&u.star())
}

/// Inverse of [`hodge_right`]: `star . hodge_left_inv`.
pub fn hodge_right_inv(u: &Form) -> Result<Form, NotBase> {
    Ok(hodge_left_inv(u)?.star())
}

/// Left codifferential `(-1)^{k+1} hodge_left_inv . d . hodge_left` on base
/// forms of degree `k_plus_1`; zero in degree 0.
pub fn codifferential_left(u: &Form, k_plus_1: u32) -> Result<Form, NotBase> {
    if k_plus_1 == 0 {
        if u.is_base() {
            return Ok(Form::zero());
        }
        return Err(NotBase);
    }
    let inner = hodge_left_inv(&hodge_left(u)?.differential())?;
    Ok(if k_plus_1 % 2 == 1 { inner.neg() } else { inner })
}

/// Right codifferential, with the right Hodge operators.
pub fn codifferential_right(u: &Form, k_plus_1: u32) -> Result<Form, NotBase> {
    if k_plus_1 == 0 {
        if u.is_base() {
            return Ok(Form::zero());
        }
        return Err(NotBase);
    }
    let inner = hodge_right_inv(&hodge_right(u)?.differential())?;
    Ok(if k_plus_1 % 2 == 1 { inner.neg() } else { inner })
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        Form::add(self, rhs)
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        Form::sub(self, rhs)
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form::neg(self)
    }
}

impl fmt::Display for Form {
    /// Canonical text: parts in word order, each `coefficient token`; a
    /// multi-term coefficient on a nonempty word is parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for w in EtaWord::ALL {
            let Some(x) = self.parts.get(&w) else { continue };
            if w == EtaWord::UNIT {
                pieces.extend(x.pieces());
                continue;
            }
            let mut body_pieces = x.pieces();
            if body_pieces.len() == 1 {
                let (negative, body) = body_pieces.pop().unwrap();
                let text = if body == "1" {
                    w.token().to_string()
                } else {
                    format!("{} {}", body, w.token())
                };
                pieces.push((negative, text));
            } else {
                pieces.push((false, format!("({}) {}", x, w.token())));
            }
        }
        write!(f, "{}", join_pieces(pieces))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(a: i64, k: u32, l: u32) -> AlgElt {
        AlgElt::basis(a, k, l)
    }

    fn sample_corpus() -> Vec<Form> {
        let mut out = Vec::new();
        let coeffs = [alg(1, 0, 0), alg(-1, 0, 1), alg(0, 1, 1), alg(2, 1, 0)];
        for w in EtaWord::ALL {
            for x in &coeffs {
                out.push(Form::term(x.clone(), w));
            }
        }
        out.push(Form::from_alg(alg(1, 2, 0)).add(&Form::term(alg(0, 0, 2), EtaWord::EP)));
        out.push(Form::term(alg(-2, 0, 0), EtaWord::E3).sub(&Form::dvol()));
        out
    }

    #[test]
    fn frame_commutation_rows() {
        let gens = [alg(1, 0, 0), alg(-1, 0, 0), alg(0, 1, 0), alg(0, 0, 1)];
        for x in &gens {
            let n = x.zdegree().unwrap();
            for eta in [Form::eta_minus(), Form::eta_plus()] {
                let lhs = eta.wedge(&Form::from_alg(x.clone()));
                let rhs = Form::from_alg(x.clone())
                    .wedge(&eta)
                    .scale(&QRat::q_power(-n));
                assert_eq!(lhs, rhs);
            }
            let lhs = Form::eta_three().wedge(&Form::from_alg(x.clone()));
            let rhs = Form::from_alg(x.clone())
                .wedge(&Form::eta_three())
                .scale(&QRat::q_power(-2 * n));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn frame_products_sort_and_square_to_zero() {
        let em = Form::eta_minus();
        let ep = Form::eta_plus();
        let e3 = Form::eta_three();
        assert_eq!(ep.wedge(&em), em.wedge(&ep).scale(&QRat::q_power(2)).neg());
        assert_eq!(ep.wedge(&e3), e3.wedge(&ep).scale(&QRat::q_power(4)).neg());
        assert_eq!(e3.wedge(&em), em.wedge(&e3).scale(&QRat::q_power(4)).neg());
        assert!(em.wedge(&em).is_zero());
        assert!(ep.wedge(&ep).is_zero());
        assert!(e3.wedge(&e3).is_zero());
    }

    #[test]
    fn frame_differentials() {
        let em = Form::eta_minus();
        let ep = Form::eta_plus();
        let e3 = Form::eta_three();
        assert_eq!(em.differential(), Form::term(AlgElt::scalar(QRat::q_power(2)), EtaWord(EM | E3)));
        assert_eq!(
            ep.differential(),
            Form::term(AlgElt::scalar(QRat::q_power(-2).neg()), EtaWord(EP | E3))
        );
        let c = QRat::one().add(&QRat::q_power(2)).neg();
        assert_eq!(e3.differential(), Form::dvol().scale(&c));
        // d em = -q^-2 e3 ^ em and d ep = q^2 e3 ^ ep, the frame-first view
        assert_eq!(em.differential(), e3.wedge(&em).scale(&QRat::q_power(-2)).neg());
        assert_eq!(ep.differential(), e3.wedge(&ep).scale(&QRat::q_power(2)));
        assert!(Form::dvol().differential().is_zero());
    }

    #[test]
    fn generator_differentials() {
        let da = Form::from_alg(alg(1, 0, 0)).differential();
        let mut expected = Form::zero();
        expected.add_part(EtaWord::E3, &alg(1, 0, 0).scale(&inv_one_plus_q2()));
        expected.add_part(EtaWord::EP, &alg(0, 0, 1).scale(&QRat::q_power(1)));
        assert_eq!(da, expected);
        assert_eq!(da.horizontal_part(), Form::term(alg(0, 0, 1).scale(&QRat::q_power(1)), EtaWord::EP));
        assert!(Form::one().differential().is_zero());
        // d(g gs) by the Leibniz rule
        let dg = Form::from_alg(alg(0, 1, 0)).differential();
        let dgs = Form::from_alg(alg(0, 0, 1)).differential();
        let leibniz = dg
            .mul_alg_right(&alg(0, 0, 1))
            .add(&dgs.mul_alg_left(&alg(0, 1, 0)));
        assert_eq!(Form::from_alg(alg(0, 1, 1)).differential(), leibniz);
    }

    #[test]
    fn differential_squares_to_zero() {
        for u in sample_corpus() {
            assert!(u.differential().differential().is_zero());
        }
    }

    #[test]
    fn graded_leibniz_rule() {
        let homogeneous = [
            Form::from_alg(alg(1, 0, 1)),
            Form::term(alg(-1, 1, 0), EtaWord::EM),
            Form::term(alg(0, 1, 1), EtaWord::EP),
            Form::term(alg(1, 0, 0), EtaWord::E3),
            Form::term(alg(0, 1, 0), EtaWord::DVOL),
            Form::term(alg(-1, 0, 0), EtaWord(EM | E3)),
        ];
        for u in &homogeneous {
            let sign_u = u.degree().unwrap() % 2 == 1;
            for v in &homogeneous {
                let lhs = u.wedge(v).differential();
                let mut rhs = u.differential().wedge(v);
                let second = u.wedge(&v.differential());
                rhs = if sign_u { rhs.sub(&second) } else { rhs.add(&second) };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn star_fixes_frame_with_signs() {
        assert_eq!(Form::eta_minus().star(), Form::eta_plus());
        assert_eq!(Form::eta_plus().star(), Form::eta_minus());
        assert_eq!(Form::eta_three().star(), Form::eta_three().neg());
        assert_eq!(Form::dvol().star(), Form::dvol().neg());
        // (em^e3)* = -q^-4 ep^e3
        assert_eq!(
            Form::term(AlgElt::one(), EtaWord(EM | E3)).star(),
            Form::term(AlgElt::scalar(QRat::q_power(-4).neg()), EtaWord(EP | E3))
        );
    }

    #[test]
    fn star_is_involutive_and_commutes_with_d() {
        for u in sample_corpus() {
            assert_eq!(u.star().star(), u);
            assert_eq!(u.differential().star(), u.star().differential());
        }
    }

    #[test]
    fn star_is_graded_antimultiplicative() {
        let homogeneous = [
            Form::from_alg(alg(1, 1, 0)),
            Form::term(alg(0, 0, 1), EtaWord::EM),
            Form::term(alg(-1, 0, 0), EtaWord::EP),
            Form::term(alg(0, 1, 0), EtaWord::E3),
            Form::term(alg(1, 0, 1), EtaWord::DVOL),
        ];
        for u in &homogeneous {
            for v in &homogeneous {
                let lhs = u.wedge(v).star();
                let mut rhs = v.star().wedge(&u.star());
                if (u.degree().unwrap() * v.degree().unwrap()) % 2 == 1 {
                    rhs = rhs.neg();
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn base_form_detection() {
        assert!(Form::from_alg(alg(0, 1, 1)).is_base());
        assert!(Form::term(alg(2, 0, 0), EtaWord::EM).is_base());
        assert!(Form::term(alg(-2, 0, 0), EtaWord::EP).is_base());
        assert!(Form::term(alg(0, 1, 1), EtaWord::DVOL).is_base());
        assert!(!Form::eta_three().is_base());
        assert!(!Form::from_alg(alg(1, 0, 0)).is_base());
        assert!(!Form::term(alg(1, 0, 0), EtaWord::EM).is_base());
    }

    #[test]
    fn d_preserves_base_forms() {
        let base = [
            Form::from_alg(alg(0, 1, 1)),
            Form::from_alg(alg(1, 0, 1)),
            Form::from_alg(alg(-1, 1, 0)),
            Form::term(alg(2, 0, 0), EtaWord::EM),
            Form::term(alg(0, 2, 2), EtaWord::DVOL),
        ];
        for b in &base {
            assert!(b.differential().is_base());
        }
    }

    #[test]
    fn right_coefficient_round_trip() {
        for u in sample_corpus() {
            let right = u.right_coefficients();
            assert_eq!(Form::from_right_coefficients(&right), u);
            // the right coefficients genuinely reproduce the form as sum W y_W
            let mut rebuilt = Form::zero();
            for (w, y) in &right {
                rebuilt = rebuilt.add(&Form::term(AlgElt::one(), *w).mul_alg_right(y));
            }
            assert_eq!(rebuilt, u);
        }
    }

    #[test]
    fn hodge_left_values_and_inverse() {
        assert_eq!(hodge_left(&Form::one()).unwrap(), Form::dvol());
        assert_eq!(
            hodge_left(&Form::term(alg(2, 0, 0), EtaWord::EM)).unwrap(),
            Form::term(alg(-2, 0, 0), EtaWord::EP)
        );
        assert_eq!(hodge_right(&Form::one()).unwrap(), Form::dvol());
        assert_eq!(
            hodge_right(&Form::dvol()).unwrap(),
            Form::from_alg(AlgElt::one().neg())
        );
        assert!(hodge_left(&Form::eta_three()).is_err());
        let base = [
            Form::one(),
            Form::from_alg(alg(0, 1, 1)),
            Form::term(alg(2, 0, 0), EtaWord::EM).add(&Form::term(alg(-2, 1, 1), EtaWord::EP)),
            Form::term(alg(0, 1, 1), EtaWord::DVOL),
        ];
        for u in &base {
            assert_eq!(&hodge_left_inv(&hodge_left(u).unwrap()).unwrap(), u);
            assert_eq!(&hodge_right_inv(&hodge_right(u).unwrap()).unwrap(), u);
            // star-squared sign (-1)^{k(2-k)} per degree part
            for (k, part) in u.degree_parts() {
                let twice = hodge_left(&hodge_left(&part).unwrap()).unwrap();
                let sign = (k * (2 - k)) % 2;
                assert_eq!(twice, if sign == 1 { part.neg() } else { part });
            }
        }
    }

    #[test]
    fn metric_values_and_module_property() {
        let one = Form::one();
        assert_eq!(metric_left(&one, &one).unwrap(), AlgElt::one());
        let u = Form::term(alg(2, 0, 0), EtaWord::EM);
        assert_eq!(
            metric_left(&u, &u).unwrap(),
            alg(2, 0, 0).mul(&alg(-2, 0, 0)).scale(&QRat::q_power(2))
        );
        let b1 = Form::term(alg(0, 1, 1), EtaWord::DVOL);
        let b2 = Form::term(alg(1, 0, 1), EtaWord::DVOL);
        assert_eq!(
            metric_left(&b1, &b2).unwrap(),
            alg(0, 1, 1).mul(&alg(1, 0, 1).star())
        );
        // <mu b, nu> = <mu, nu b*> for base 1-forms and base algebra b
        let mu = Form::term(alg(2, 0, 0), EtaWord::EM).add(&Form::term(alg(0, 0, 2), EtaWord::EP));
        let nu = Form::term(alg(2, 1, 1), EtaWord::EM).add(&Form::term(alg(-2, 0, 0), EtaWord::EP));
        let b = alg(0, 1, 1).add(&AlgElt::one());
        let lhs = metric_left(&mu.mul_alg_right(&b), &nu).unwrap();
        let rhs = metric_left(&mu, &nu.mul_alg_right(&b.star())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn volume_pairing_identity() {
        // u ^ v = <u, hodge_left_inv v> dvol for base degrees k and 2-k
        let ones: Vec<(Form, Form)> = vec![
            (
                Form::term(alg(2, 0, 0), EtaWord::EM).add(&Form::term(alg(0, 0, 2), EtaWord::EP)),
                Form::term(alg(2, 1, 1), EtaWord::EM).add(&Form::term(alg(-2, 0, 0), EtaWord::EP)),
            ),
            (
                Form::term(alg(1, 1, 0), EtaWord::EM),
                Form::term(alg(-1, 0, 1), EtaWord::EP),
            ),
        ];
        for (u, v) in &ones {
            let lhs = u.wedge(v);
            let pairing = metric_left(u, &hodge_left_inv(v).unwrap()).unwrap();
            assert_eq!(lhs, Form::term(pairing, EtaWord::DVOL));
        }
        let b0 = Form::from_alg(alg(0, 1, 1));
        let b2 = Form::term(alg(1, 0, 1).star(), EtaWord::DVOL);
        let lhs = b0.wedge(&b2);
        let pairing = metric_left(&b0, &hodge_left_inv(&b2).unwrap()).unwrap();
        assert_eq!(lhs, Form::term(pairing, EtaWord::DVOL));
    }

    #[test]
    fn codifferential_signs_and_degree_zero() {
        let b = Form::from_alg(alg(0, 1, 1));
        assert!(codifferential_left(&b, 0).unwrap().is_zero());
        assert!(codifferential_right(&b, 0).unwrap().is_zero());
        let db = b.differential();
        assert_eq!(
            codifferential_left(&db, 1).unwrap(),
            hodge_left_inv(&hodge_left(&db).unwrap().differential()).unwrap().neg()
        );
        assert!(codifferential_left(&Form::dvol(), 2).unwrap().is_zero());
    }

    #[test]
    fn display_canonical_text() {
        let da = Form::from_alg(alg(1, 0, 0)).differential();
        assert_eq!(da.to_string(), "q gs ep + (1)/(q^2 + 1) a e3");
        assert_eq!(Form::dvol().to_string(), "em^ep");
        assert_eq!(Form::dvol().neg().to_string(), "-em^ep");
        assert_eq!(Form::zero().to_string(), "0");
        let mixed = Form::from_alg(alg(0, 1, 1))
            .add(&Form::term(alg(0, 1, 1).add(&AlgElt::one()), EtaWord::E3));
        assert_eq!(mixed.to_string(), "g gs + (1 + g gs) e3");
        assert_eq!(
            Form::term(AlgElt::one(), EtaWord::TOP).to_string(),
            "em^ep^e3"
        );
    }
}
