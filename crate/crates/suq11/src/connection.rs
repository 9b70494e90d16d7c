//! Quantum principal connections on the circle fibration of P over the
//! quantum hyperboloid.
//!
//! The vertical direction is framed by `e3`; a connection is the canonical
//! one shifted by a displacement `mu`, an anti-selfadjoint base 1-form
//! ([`Qpc`]), and evaluates on the fiber generator as `e3 + mu`.
//!
//! - [`germs`]: the quantum germs map `p -> S(p') d p''`, landing in the
//!   scalar span of the frame ([`GermValue`]).
//! - [`covariant_derivative`]: the canonical covariant derivative, the horizontal
//!   projection of `d`; [`covariant_derivative_via_germs`] computes the same map by
//!   subtracting the vertical correction `(-1)^k c_n (phi ^ e3)` per
//!   weight-`n` degree-`k` component and serves as a cross-check.
//! - [`covariant_derivative_left`] / [`covariant_derivative_right`]: the two covariant
//!   derivatives of a displaced connection, differing by which side `mu`
//!   multiplies on.
//! - [`curvature`], [`is_regular`], and the gauge translation
//!   [`gauge_transform`] acting on the vertical frame by `e3 -> mu + e3`.

use crate::algebra::{germ_scalar, AlgElt};
use crate::coeffs::QRat;
use crate::forms::{EtaWord, Form};
use std::fmt;

/// Coordinates of a quantum germ in the frame `{em, ep, e3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermValue {
    pub c_minus: QRat,
    pub c_plus: QRat,
    pub c_3: QRat,
}

impl GermValue {
    pub fn zero() -> Self {
        GermValue { c_minus: QRat::zero(), c_plus: QRat::zero(), c_3: QRat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.c_minus.is_zero() && self.c_plus.is_zero() && self.c_3.is_zero()
    }

    /// The germ as an invariant 1-form.
    pub fn as_form(&self) -> Form {
        let mut out = Form::zero();
        out.add_part(EtaWord::EM, &AlgElt::scalar(self.c_minus.clone()));
        out.add_part(EtaWord::EP, &AlgElt::scalar(self.c_plus.clone()));
        out.add_part(EtaWord::E3, &AlgElt::scalar(self.c_3.clone()));
        out
    }
}

/// The quantum germs map `pi(p) = S(p') d p''` over the coproduct legs.
///
/// The value of `pi` always lies in the scalar span of the frame; a nonzero
/// algebra-valued remainder would mean the calculus relations are broken, so
/// it panics rather than returning.
pub fn germs(p: &AlgElt) -> GermValue {
    let mut total = Form::zero();
    for ((m1, m2), c) in p.coproduct().terms() {
        let s = AlgElt::basis(m1.a, m1.k, m1.l).antipode();
        let d2 = Form::from_alg(AlgElt::basis(m2.a, m2.k, m2.l)).differential();
        total = total.add(&d2.mul_alg_left(&s).scale(c));
    }
    let mut out = GermValue::zero();
    for (w, x) in total.parts() {
        let scalar = as_scalar(x)
            .unwrap_or_else(|| panic!("quantum germ has a nonscalar part {x} on {w:?}"));
        match *w {
            EtaWord::EM => out.c_minus = scalar,
            EtaWord::EP => out.c_plus = scalar,
            EtaWord::E3 => out.c_3 = scalar,
            _ => panic!("quantum germ has a part of degree != 1 on {w:?}"),
        }
    }
    out
}

fn as_scalar(x: &AlgElt) -> Option<QRat> {
    if x.is_zero() {
        return Some(QRat::zero());
    }
    let mut terms = x.terms();
    let (m, c) = terms.next().unwrap();
    if terms.next().is_none() && m.is_unit() {
        Some(c.clone())
    } else {
        None
    }
}

/// Error: the displacement is not an anti-selfadjoint base 1-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidDisplacement {
    pub reason: &'static str,
}

impl fmt::Display for InvalidDisplacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid connection displacement: {}", self.reason)
    }
}

impl std::error::Error for InvalidDisplacement {}

/// Error: the operation is defined on horizontal forms only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotHorizontal;

impl fmt::Display for NotHorizontal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a horizontal form: contains an e3 letter")
    }
}

impl std::error::Error for NotHorizontal {}

/// A quantum principal connection, stored through its displacement from the
/// canonical one: the connection evaluates as `e3 + mu` on the fiber
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qpc {
    mu: Form,
}

impl Qpc {
    /// The canonical connection, `mu = 0`.
    pub fn canonical() -> Self {
        Qpc { mu: Form::zero() }
    }

    /// A displaced connection; `mu` must be an anti-selfadjoint base 1-form.
    pub fn new(mu: Form) -> Result<Self, InvalidDisplacement> {
        if !mu.is_base() {
            return Err(InvalidDisplacement { reason: "mu must be a base form" });
        }
        if !mu.is_zero() && mu.degree() != Some(1) {
            return Err(InvalidDisplacement { reason: "mu must have degree 1" });
        }
        if mu.star() != mu.neg() {
            return Err(InvalidDisplacement { reason: "mu must satisfy mu* = -mu" });
        }
        Ok(Qpc { mu })
    }

    pub fn displacement(&self) -> &Form {
        &self.mu
    }

    pub fn is_canonical(&self) -> bool {
        self.mu.is_zero()
    }

    /// The value on the fiber generator, `e3 + mu`.
    pub fn vertical_value(&self) -> Form {
        Form::eta_three().add(&self.mu)
    }
}

/// The canonical covariant derivative: horizontal projection of `d`.
pub fn covariant_derivative(phi: &Form) -> Result<Form, NotHorizontal> {
    if !phi.is_horizontal() {
        return Err(NotHorizontal);
    }
    Ok(phi.differential().horizontal_part())
}

/// The canonical covariant derivative through the germ coordinates: per
/// weight-`n` degree-`k` component, `d phi - (-1)^k c_n (phi ^ e3)`.
pub fn covariant_derivative_via_germs(phi: &Form) -> Result<Form, NotHorizontal> {
    if !phi.is_horizontal() {
        return Err(NotHorizontal);
    }
    let mut out = phi.differential();
    let e3 = Form::eta_three();
    for (n, part) in phi.weight_parts() {
        let c = germ_scalar(n);
        for (k, piece) in part.degree_parts() {
            let mut correction = piece.wedge(&e3).scale(&c);
            if k % 2 == 1 {
                correction = correction.neg();
            }
            out = out.sub(&correction);
        }
    }
    Ok(out)
}

/// Covariant derivative of the displaced connection:
/// `D(phi) - (-1)^k c_n (phi ^ mu)` per weight-`n` degree-`k` component.
pub fn covariant_derivative_left(omega: &Qpc, phi: &Form) -> Result<Form, NotHorizontal> {
    let mut out = covariant_derivative(phi)?;
    if omega.is_canonical() {
        return Ok(out);
    }
    for (n, part) in phi.weight_parts() {
        let c = germ_scalar(n);
        for (k, piece) in part.degree_parts() {
            let mut correction = piece.wedge(&omega.mu).scale(&c);
            if k % 2 == 1 {
                correction = correction.neg();
            }
            out = out.sub(&correction);
        }
    }
    Ok(out)
}

/// Dual covariant derivative of the displaced connection:
/// `D(phi) + c_{-n} (mu ^ phi)` per weight-`n` component.
pub fn covariant_derivative_right(omega: &Qpc, phi: &Form) -> Result<Form, NotHorizontal> {
    let mut out = covariant_derivative(phi)?;
    if omega.is_canonical() {
        return Ok(out);
    }
    for (n, part) in phi.weight_parts() {
        let c = germ_scalar(-n);
        out = out.add(&omega.mu.wedge(&part).scale(&c));
    }
    Ok(out)
}

/// Curvature on the fiber generator: `d mu - (1+q^2) em^ep`.
pub fn curvature(omega: &Qpc) -> Form {
    let scale = QRat::one().add(&QRat::q_power(2));
    omega.mu.differential().sub(&Form::dvol().scale(&scale))
}

/// Checks the q-commutation of the connection value with each corpus
/// element: `(e3 + mu) ^ phi = (-1)^k q^{-2n} phi ^ (e3 + mu)` per
/// weight-`n` degree-`k` component.
pub fn is_regular(omega: &Qpc, corpus: &[Form]) -> bool {
    let value = omega.vertical_value();
    corpus.iter().all(|phi| {
        phi.weight_parts().into_iter().all(|(n, part)| {
            part.degree_parts().into_iter().all(|(k, piece)| {
                let lhs = value.wedge(&piece);
                let mut rhs = piece.wedge(&value).scale(&QRat::q_power(-2 * n));
                if k % 2 == 1 {
                    rhs = rhs.neg();
                }
                lhs == rhs
            })
        })
    })
}

/// The gauge translation by `mu`: a left module map fixing every `e3`-free
/// word and sending `v ^ e3` to `v ^ mu + v ^ e3`.
pub fn gauge_transform(mu: &Form, u: &Form) -> Result<Form, InvalidDisplacement> {
    let omega = Qpc::new(mu.clone())?;
    Ok(gauge_apply(&omega.mu, u))
}

/// Inverse gauge translation; replaces `mu` by `-mu`.
pub fn gauge_transform_inv(mu: &Form, u: &Form) -> Result<Form, InvalidDisplacement> {
    let omega = Qpc::new(mu.clone())?;
    Ok(gauge_apply(&omega.mu.neg(), u))
}

fn gauge_apply(mu: &Form, u: &Form) -> Form {
    let mut out = Form::zero();
    for (w, x) in u.parts() {
        out.add_part(*w, x);
        if w.contains_e3() {
            let prefix = Form::term(x.clone(), w.without_e3());
            out = out.add(&prefix.wedge(mu));
        }
    }
    out
}
