//! Laplacians on the quantum hyperboloid and on its line bundles.
//!
//! On base forms, [`base_laplacian_left`] and [`base_laplacian_right`] are
//! `d d* + d* d` for the left and right codifferential. On a weight-`n`
//! section, the two gauge Laplacians conjugate the exterior covariant
//! derivative of a connection by the corresponding Hodge operator, acting
//! through base-form coordinates in the dual generator systems.
//!
//! Every operator acts lower bidiagonally on the monomial families
//! `a^t g^k gs^l`: a diagonal coefficient on the monomial itself and a
//! subdiagonal one on the monomial with both `g` and `gs` exponents lowered.
//! The closed forms are [`left_eigenvalue`], [`left_subdiagonal`],
//! [`right_eigenvalue`], [`right_subdiagonal`]; [`spectrum_table`] checks
//! the operator against them cell by cell.
//!
//! The diagonal gap between consecutive chain elements equals the
//! subdiagonal ratio `q^{2n}` of the two operators on every chain, so the
//! left and right gauge Laplacians commute on every weight
//! ([`gauge_commutator`] is identically zero, [`commutator_scalar`] shows
//! the cancellation on the two-step chain).

use crate::algebra::{AlgElt, Monomial};
use crate::bundles::{basis_section, decompose_left, decompose_right, Section};
use crate::coeffs::{qint, QRat};
use crate::connection::{covariant_derivative_left, covariant_derivative_right, Qpc};
use crate::forms::{
    codifferential_left, codifferential_right, hodge_left, hodge_left_inv, hodge_right,
    hodge_right_inv, EtaWord, Form, NotBase,
};
use serde::{Serialize, Serializer};
use std::fmt;

/// `d d* + d* d` with the left codifferential, on a base form of degree `k`.
pub fn base_laplacian_left(u: &Form, k: u32) -> Result<Form, NotBase> {
    if !u.is_base() {
        return Err(NotBase);
    }
    assert!(
        u.is_zero() || u.degree() == Some(k),
        "form does not have degree {k}"
    );
    let lower = codifferential_left(u, k)?.differential();
    let upper = codifferential_left(&u.differential(), k + 1)?;
    Ok(lower.add(&upper))
}

/// `d d* + d* d` with the right codifferential.
pub fn base_laplacian_right(u: &Form, k: u32) -> Result<Form, NotBase> {
    if !u.is_base() {
        return Err(NotBase);
    }
    assert!(
        u.is_zero() || u.degree() == Some(k),
        "form does not have degree {k}"
    );
    let lower = codifferential_right(u, k)?.differential();
    let upper = codifferential_right(&u.differential(), k + 1)?;
    Ok(lower.add(&upper))
}

fn left_connection_coefficients(omega: &Qpc, n: i64) -> Vec<Vec<Form>> {
    let size = n.unsigned_abs() as usize + 1;
    (0..size)
        .map(|j| {
            let tj = Form::from_alg(basis_section(n, j as u32).value().clone());
            let image = covariant_derivative_left(omega, &tj).expect("generators are horizontal");
            decompose_left(&image, n)
                .expect("covariant derivative preserves the weight")
                .into_iter()
                .map(|(f, _)| f)
                .collect()
        })
        .collect()
}

fn right_connection_coefficients(omega: &Qpc, n: i64) -> Vec<Vec<Form>> {
    let size = n.unsigned_abs() as usize + 1;
    let mut kappa = vec![Vec::new(); size];
    for j in 0..size {
        let tj = Form::from_alg(basis_section(n, j as u32).value().clone());
        let image = covariant_derivative_right(omega, &tj).expect("generators are horizontal");
        let coords = decompose_right(&image, n).expect("covariant derivative preserves the weight");
        for (i, (_, f)) in coords.into_iter().enumerate() {
            kappa[i].push(f);
        }
    }
    kappa
}

fn unit_part(u: &Form) -> AlgElt {
    debug_assert!(u.degree().unwrap_or(0) == 0, "expected a degree-0 form");
    u.coefficient(EtaWord::UNIT)
}

/// The left gauge Laplacian of `omega` on a weight-`n` section: conjugates
/// the exterior covariant derivative with the left Hodge operator through
/// the left base-form coordinates.
pub fn gauge_laplacian_left(omega: &Qpc, section: &Section) -> Section {
    let n = section.weight();
    let size = n.unsigned_abs() as usize + 1;
    let kappa = left_connection_coefficients(omega, n);
    let phi = covariant_derivative_left(omega, &Form::from_alg(section.value().clone()))
        .expect("sections are horizontal");
    let mu: Vec<Form> = decompose_left(&phi, n)
        .expect("covariant derivative preserves the weight")
        .into_iter()
        .map(|(f, _)| f)
        .collect();
    let nu: Vec<Form> = mu
        .iter()
        .map(|m| hodge_left(m).expect("coordinates are base forms").star())
        .collect();
    let mut value = AlgElt::zero();
    for i in 0..size {
        let mut rho = nu[i].differential();
        for j in 0..size {
            rho = rho.sub(&nu[j].wedge(&kappa[j][i]));
        }
        let sigma = hodge_left_inv(&rho.star())
            .expect("curvature coordinates are base forms")
            .neg();
        value = value.add(&unit_part(&sigma).mul(basis_section(n, i as u32).value()));
    }
    Section::new(value, n).expect("the Laplacian preserves the weight")
}

/// The right gauge Laplacian: the mirror pipeline with the dual covariant
/// derivative, right coordinates, and the right Hodge operator.
pub fn gauge_laplacian_right(omega: &Qpc, section: &Section) -> Section {
    let n = section.weight();
    let size = n.unsigned_abs() as usize + 1;
    let kappa = right_connection_coefficients(omega, n);
    let phi = covariant_derivative_right(omega, &Form::from_alg(section.value().clone()))
        .expect("sections are horizontal");
    let mu: Vec<Form> = decompose_right(&phi, n)
        .expect("covariant derivative preserves the weight")
        .into_iter()
        .map(|(_, f)| f)
        .collect();
    let nu: Vec<Form> = mu
        .iter()
        .map(|m| hodge_right(m).expect("coordinates are base forms"))
        .collect();
    let mut value = AlgElt::zero();
    for i in 0..size {
        let mut rho = nu[i].differential();
        for (j, nu_j) in nu.iter().enumerate() {
            rho = rho.add(&kappa[i][j].wedge(nu_j));
        }
        let sigma = hodge_right_inv(&rho)
            .expect("curvature coordinates are base forms")
            .neg();
        value = value.add(&basis_section(n, i as u32).value().mul(&unit_part(&sigma)));
    }
    Section::new(value, n).expect("the Laplacian preserves the weight")
}

/// `[right, left]` of the canonical-connection gauge Laplacians on a
/// section, computed operator by operator.
pub fn gauge_commutator(section: &Section) -> Section {
    let omega = Qpc::canonical();
    let lr = gauge_laplacian_right(&omega, &gauge_laplacian_left(&omega, section));
    let rl = gauge_laplacian_left(&omega, &gauge_laplacian_right(&omega, section));
    Section::new(lr.value().sub(rl.value()), section.weight())
        .expect("the commutator preserves the weight")
}

fn qn(n: i64) -> QRat {
    assert!(n >= 0, "q-integer of a negative index");
    qint(n as u32)
}

/// Diagonal coefficient of the left gauge Laplacian on `a^t g^k gs^l`
/// (negative `t` for `as^|t|`).
pub fn left_eigenvalue(t: i64, k: u32, l: u32) -> QRat {
    let (k, l) = (k as i64, l as i64);
    if t >= 0 {
        // -q^{-2l} ([l][t+1] + q^{2t+2}[l][k] + q^4[t][l+1] + q^{4+2t}[k][l+1])
        let sum = qn(l)
            .mul(&qn(t + 1))
            .add(&QRat::q_power(2 * t + 2).mul(&qn(l)).mul(&qn(k)))
            .add(&QRat::q_power(4).mul(&qn(t)).mul(&qn(l + 1)))
            .add(&QRat::q_power(4 + 2 * t).mul(&qn(k)).mul(&qn(l + 1)));
        QRat::q_power(-2 * l).mul(&sum).neg()
    } else {
        // -q^{-2t} ([t][k+1] + q^{-2l}[l][k+1] + q^4[k][t+1] + q^{-2l+4}[k][l])
        let t = -t;
        let sum = qn(t)
            .mul(&qn(k + 1))
            .add(&QRat::q_power(-2 * l).mul(&qn(l)).mul(&qn(k + 1)))
            .add(&QRat::q_power(4).mul(&qn(k)).mul(&qn(t + 1)))
            .add(&QRat::q_power(-2 * l + 4).mul(&qn(k)).mul(&qn(l)));
        QRat::q_power(-2 * t).mul(&sum).neg()
    }
}

/// Subdiagonal coefficient of the left gauge Laplacian, coupling
/// `a^t g^k gs^l` to `a^t g^{k-1} gs^{l-1}`.
pub fn left_subdiagonal(t: i64, k: u32, l: u32) -> QRat {
    if k == 0 || l == 0 {
        return QRat::zero();
    }
    // -q^{2t-2l} (1+q^4) [k][l]
    QRat::q_power(2 * t - 2 * (l as i64))
        .mul(&QRat::one().add(&QRat::q_power(4)))
        .mul(&qint(k))
        .mul(&qint(l))
        .neg()
}

/// Diagonal coefficient of the right gauge Laplacian on `a^t g^k gs^l`.
pub fn right_eigenvalue(t: i64, k: u32, l: u32) -> QRat {
    let (k, l) = (k as i64, l as i64);
    if t >= 0 {
        // -q^{-2t} ([t][l+1] + q^{-2k}[k][l+1] + q^4[l][t+1] + q^{-2k+4}[l][k])
        let sum = qn(t)
            .mul(&qn(l + 1))
            .add(&QRat::q_power(-2 * k).mul(&qn(k)).mul(&qn(l + 1)))
            .add(&QRat::q_power(4).mul(&qn(l)).mul(&qn(t + 1)))
            .add(&QRat::q_power(-2 * k + 4).mul(&qn(l)).mul(&qn(k)));
        QRat::q_power(-2 * t).mul(&sum).neg()
    } else {
        // -q^{-2k} ([k][t+1] + q^{2t+2}[k][l] + q^4[t][k+1] + q^{4+2t}[l][k+1])
        let t = -t;
        let sum = qn(k)
            .mul(&qn(t + 1))
            .add(&QRat::q_power(2 * t + 2).mul(&qn(k)).mul(&qn(l)))
            .add(&QRat::q_power(4).mul(&qn(t)).mul(&qn(k + 1)))
            .add(&QRat::q_power(4 + 2 * t).mul(&qn(l)).mul(&qn(k + 1)));
        QRat::q_power(-2 * k).mul(&sum).neg()
    }
}

/// Subdiagonal coefficient of the right gauge Laplacian.
pub fn right_subdiagonal(_t: i64, k: u32, l: u32) -> QRat {
    if k == 0 || l == 0 {
        return QRat::zero();
    }
    // -q^{-2k} (1+q^4) [k][l]
    QRat::q_power(-2 * (k as i64))
        .mul(&QRat::one().add(&QRat::q_power(4)))
        .mul(&qint(k))
        .mul(&qint(l))
        .neg()
}

/// The `[right, left]`-coefficient on the two-step chain `a^n gg* -> a^n`
/// (signed `n`), assembled from the closed forms at `k = l = 1`.
///
/// The combination cancels for every `n`: the diagonal gap of each operator
/// matches the common subdiagonal ratio `q^{2n}`.
pub fn commutator_scalar(n: i64) -> QRat {
    let b1 = left_eigenvalue(n, 1, 1);
    let b2 = left_subdiagonal(n, 1, 1);
    let b3 = left_eigenvalue(n, 0, 0);
    let c1 = right_eigenvalue(n, 1, 1);
    let c2 = right_subdiagonal(n, 1, 1);
    let c3 = right_eigenvalue(n, 0, 0);
    b1.mul(&c2)
        .add(&b2.mul(&c3))
        .sub(&b2.mul(&c1))
        .sub(&b3.mul(&c2))
}

/// A finite monomial chain together with the lower bidiagonal matrix of an
/// operator on it.
#[derive(Clone, Debug)]
pub struct ChainOperator {
    sections: Vec<Section>,
    diagonal: Vec<QRat>,
    subdiagonal: Vec<QRat>,
}

impl ChainOperator {
    /// Extracts the matrix of `op` on a chain of unit-coefficient monomial
    /// sections; panics unless every image lies in the span of the element
    /// itself and its predecessor.
    pub fn from_action<F>(sections: Vec<Section>, op: F) -> Self
    where
        F: Fn(&Section) -> Section,
    {
        assert!(!sections.is_empty(), "empty chain");
        let monomials: Vec<Monomial> = sections
            .iter()
            .map(|s| {
                let mut terms = s.value().terms();
                match (terms.next(), terms.next()) {
                    (Some((m, c)), None) if c.is_one() => *m,
                    _ => panic!("chain elements must be unit-coefficient monomials"),
                }
            })
            .collect();
        let mut diagonal = Vec::with_capacity(sections.len());
        let mut subdiagonal = Vec::with_capacity(sections.len());
        for (i, s) in sections.iter().enumerate() {
            let image = op(s);
            let diag = image.value().coeff(&monomials[i]);
            let sub = if i > 0 {
                image.value().coeff(&monomials[i - 1])
            } else {
                QRat::zero()
            };
            let mut expected = AlgElt::term(diag.clone(), monomials[i]);
            if i > 0 {
                expected = expected.add(&AlgElt::term(sub.clone(), monomials[i - 1]));
            }
            assert!(
                image.value().sub(&expected).is_zero(),
                "operator is not lower bidiagonal on the chain at index {i}"
            );
            diagonal.push(diag);
            subdiagonal.push(sub);
        }
        ChainOperator { sections, diagonal, subdiagonal }
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn diagonal(&self) -> &[QRat] {
        &self.diagonal
    }

    /// Entry `i >= 1` couples element `i` to element `i - 1`; entry 0 is 0.
    pub fn subdiagonal(&self) -> &[QRat] {
        &self.subdiagonal
    }
}

/// Eigenvectors with unit leading coefficient by back substitution, one per
/// chain element, paired with the diagonal eigenvalue.
///
/// Panics if two diagonal entries coincide.
pub fn chain_eigenvectors(chain: &ChainOperator) -> Vec<(Section, QRat)> {
    let n = chain.sections[0].weight();
    let mut out = Vec::with_capacity(chain.sections.len());
    for k in 0..chain.sections.len() {
        let lambda = &chain.diagonal[k];
        let mut coeffs = vec![QRat::zero(); k + 1];
        coeffs[k] = QRat::one();
        for i in (0..k).rev() {
            let gap = lambda.sub(&chain.diagonal[i]);
            assert!(!gap.is_zero(), "repeated eigenvalue in chain at indices {i} and {k}");
            coeffs[i] = chain.subdiagonal[i + 1].mul(&coeffs[i + 1]).div(&gap);
        }
        let mut value = AlgElt::zero();
        for (i, c) in coeffs.iter().enumerate() {
            value = value.add(&chain.sections[i].value().scale(c));
        }
        out.push((
            Section::new(value, n).expect("chain elements share one weight"),
            lambda.clone(),
        ));
    }
    out
}

/// One of the three monomial families a spectrum table enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    GammaGamma,
    AlphaMixed,
    AlphaStarMixed,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::GammaGamma => "gamma-gamma*",
            Family::AlphaMixed => "alpha-mixed",
            Family::AlphaStarMixed => "alphastar-mixed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

fn qrat_text<S: Serializer>(x: &QRat, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(x)
}

/// One spectrum cell: the eigenvalue of the table's operator on the chain
/// through `a^t g^k gs^l` (`t` signed, negative for `as^|t|`).
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub table: u8,
    pub n: i64,
    pub family: Family,
    pub t: i64,
    pub k: u32,
    pub l: u32,
    #[serde(serialize_with = "qrat_text")]
    pub eigenvalue: QRat,
}

/// Error: the table number and the weight do not fit together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDomain {
    pub which: u8,
    pub n: i64,
}

impl fmt::Display for TableDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let needed = match self.which {
            1 => "weight 0",
            2 | 4 => "a positive weight",
            3 | 5 => "a negative weight",
            _ => return write!(f, "no table {}", self.which),
        };
        write!(f, "table {} needs {}, got n = {}", self.which, needed, self.n)
    }
}

impl std::error::Error for TableDomain {}

fn admissible_cells(n: i64, bound: u32) -> Vec<(Family, i64, u32, u32)> {
    let b = bound as i64;
    let mut cells = Vec::new();
    for l in 0..=b {
        let k = l + n;
        if (0..=b).contains(&k) {
            cells.push((Family::GammaGamma, 0, k as u32, l as u32));
        }
    }
    for t in 1..=b {
        for k in 0..=b {
            let l = t + k - n;
            if (0..=b).contains(&l) {
                cells.push((Family::AlphaMixed, t, k as u32, l as u32));
            }
        }
    }
    for t in 1..=b {
        for k in 0..=b {
            let l = -t + k - n;
            if (0..=b).contains(&l) {
                cells.push((Family::AlphaStarMixed, -t, k as u32, l as u32));
            }
        }
    }
    cells
}

/// All admissible cells of one spectrum table up to the exponent bound,
/// with every eigenvalue computed both by the operator and by the closed
/// form; a mismatch panics naming the cell.
///
/// Tables 1 to 3 are the left gauge Laplacian at `n = 0`, `n > 0`, `n < 0`;
/// tables 4 and 5 the right one at `n > 0`, `n < 0`.
pub fn spectrum_table(which: u8, n: i64, bound: u32) -> Result<Vec<SpectrumRow>, TableDomain> {
    let consistent = match which {
        1 => n == 0,
        2 | 4 => n > 0,
        3 | 5 => n < 0,
        _ => false,
    };
    if !consistent {
        return Err(TableDomain { which, n });
    }
    let left = which <= 3;
    let omega = Qpc::canonical();
    let rows = admissible_cells(n, bound)
        .into_iter()
        .map(|(family, t, k, l)| {
            let section = Section::new(AlgElt::basis(t, k, l), n)
                .expect("admissible cells have the table weight");
            let image = if left {
                gauge_laplacian_left(&omega, &section)
            } else {
                gauge_laplacian_right(&omega, &section)
            };
            let (diag, sub) = if left {
                (left_eigenvalue(t, k, l), left_subdiagonal(t, k, l))
            } else {
                (right_eigenvalue(t, k, l), right_subdiagonal(t, k, l))
            };
            let mut expected = AlgElt::term(diag.clone(), Monomial::new(t, k, l));
            if k >= 1 && l >= 1 {
                expected = expected.add(&AlgElt::term(sub, Monomial::new(t, k - 1, l - 1)));
            }
            assert!(
                image.value().sub(&expected).is_zero(),
                "table {which} cell (n = {n}, {family}, t = {t}, k = {k}, l = {l}) \
                 disagrees with the closed form"
            );
            SpectrumRow { table: which, n, family, t, k, l, eigenvalue: diag }
        })
        .collect();
    Ok(rows)
}
