//! Line bundles over the quantum hyperboloid, realized inside P as the
//! homogeneous subspaces of fixed z-degree.
//!
//! The degree-`n` module is free of rank `|n| + 1` on either side, with the
//! generators of [`basis_section`]. Dual generator systems ([`dual_left`],
//! [`dual_right`]) come from expanding the pairings `T^j(1)* T^j(1)` and
//! `T^j(1) T^j(1)*` as polynomials in `g gs` and solving the resulting
//! triangular system, so that the partition of unity holds exactly. They
//! turn every horizontal form of uniform weight `n` into base-form
//! coordinates ([`decompose_left`], [`decompose_right`]).

use crate::algebra::AlgElt;
use crate::coeffs::QRat;
use crate::forms::Form;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// A homogeneous element of P, tagged with its z-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    value: AlgElt,
    n: i64,
}

impl Section {
    pub fn new(value: AlgElt, n: i64) -> Result<Self, WeightMismatch> {
        if !value.is_zero() {
            match value.zdegree() {
                Ok(d) if d == n => {}
                Ok(d) => return Err(WeightMismatch { expected: n, found: Some(d) }),
                Err(_) => return Err(WeightMismatch { expected: n, found: None }),
            }
        }
        Ok(Section { value, n })
    }

    pub fn value(&self) -> &AlgElt {
        &self.value
    }

    pub fn weight(&self) -> i64 {
        self.n
    }
}

/// Error: the element does not have the single uniform weight the module
/// structure requires (`found: None` means mixed weights).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMismatch {
    pub expected: i64,
    pub found: Option<i64>,
}

impl fmt::Display for WeightMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(d) => write!(f, "weight mismatch: expected {}, found {}", self.expected, d),
            None => write!(f, "weight mismatch: expected uniform weight {}", self.expected),
        }
    }
}

impl std::error::Error for WeightMismatch {}

/// The `j`-th module generator in degree `n`: `a^{n-j} g^j` for `n >= 0`,
/// `a^{n+j} gs^j` for `n < 0`, the unit for `n = 0`.
///
/// Panics when `j > |n|`.
pub fn basis_section(n: i64, j: u32) -> Section {
    assert!(
        (j as i64) <= n.abs(),
        "generator index {j} out of range for degree {n}"
    );
    let value = if n >= 0 {
        AlgElt::basis(n - j as i64, j, 0)
    } else {
        AlgElt::basis(n + j as i64, 0, j)
    };
    Section { value, n }
}

/// A dual generator system: `gens[j]` is `x_{nj}` (left) or `y_{nj}`
/// (right), each the scalar `coeffs[j]` times `T^j(1)*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSystem {
    pub n: i64,
    pub gens: Vec<AlgElt>,
    pub coeffs: Vec<QRat>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    Left,
    Right,
}

fn memo() -> &'static Mutex<HashMap<(i64, Side), DualSystem>> {
    static MEMO: OnceLock<Mutex<HashMap<(i64, Side), DualSystem>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dual generators `x_{nj}` with `sum_j x_{nj} T^j(1) = 1`.
pub fn dual_left(n: i64) -> DualSystem {
    dual_system(n, Side::Left)
}

/// Dual generators `y_{nj}` with `sum_j T^j(1) y_{nj} = 1`.
pub fn dual_right(n: i64) -> DualSystem {
    dual_system(n, Side::Right)
}

fn dual_system(n: i64, side: Side) -> DualSystem {
    if let Some(found) = memo().lock().unwrap().get(&(n, side)) {
        return found.clone();
    }
    let size = n.unsigned_abs() as usize + 1;
    let mut pairings = Vec::with_capacity(size);
    let mut duals = Vec::with_capacity(size);
    for j in 0..size {
        let t = basis_section(n, j as u32).value;
        let dual = t.star();
        pairings.push(match side {
            Side::Left => dual.mul(&t),
            Side::Right => t.mul(&dual),
        });
        duals.push(dual);
    }
    let columns: Vec<Vec<QRat>> = pairings.iter().map(|p| rho_coefficients(p, size)).collect();
    let coeffs = solve_unit_column(&columns);
    let gens = duals
        .iter()
        .zip(&coeffs)
        .map(|(dual, r)| dual.scale(r))
        .collect();
    let system = DualSystem { n, gens, coeffs };
    memo()
        .lock()
        .unwrap()
        .entry((n, side))
        .or_insert_with(|| system.clone());
    system
}

/// Coefficients of `p` as a polynomial in `g gs`, length `size`.
fn rho_coefficients(p: &AlgElt, size: usize) -> Vec<QRat> {
    let mut out = vec![QRat::zero(); size];
    for (m, c) in p.terms() {
        assert!(
            m.a == 0 && m.k == m.l && (m.k as usize) < size,
            "pairing expansion left the g gs subalgebra at {m:?}"
        );
        out[m.k as usize] = c.clone();
    }
    out
}

/// Solves `sum_j r_j columns[j] = e_0` by forward substitution; the columns
/// form a lower-triangular system with nonzero diagonal.
fn solve_unit_column(columns: &[Vec<QRat>]) -> Vec<QRat> {
    let size = columns.len();
    let mut r = vec![QRat::zero(); size];
    for i in 0..size {
        let mut acc = if i == 0 { QRat::one() } else { QRat::zero() };
        for j in 0..i {
            acc = acc.sub(&columns[j][i].mul(&r[j]));
        }
        r[i] = acc.div(&columns[i][i]);
    }
    r
}

fn uniform_weight_checked(tau: &Form, n: i64) -> Result<(), WeightMismatch> {
    if !tau.is_horizontal() {
        return Err(WeightMismatch { expected: n, found: None });
    }
    let parts = tau.weight_parts();
    match parts.len() {
        0 => Ok(()),
        1 => {
            let found = *parts.keys().next().unwrap();
            if found == n {
                Ok(())
            } else {
                Err(WeightMismatch { expected: n, found: Some(found) })
            }
        }
        _ => Err(WeightMismatch { expected: n, found: None }),
    }
}

/// Base-form coordinates of a horizontal weight-`n` form in the left module
/// basis: `tau = sum_j out[j].0 * T^j(1)` with `out[j].1 = j`.
pub fn decompose_left(tau: &Form, n: i64) -> Result<Vec<(Form, u32)>, WeightMismatch> {
    uniform_weight_checked(tau, n)?;
    let sys = dual_left(n);
    Ok(sys
        .gens
        .iter()
        .enumerate()
        .map(|(j, x)| (tau.mul_alg_right(x), j as u32))
        .collect())
}

/// Base-form coordinates in the right module basis:
/// `tau = sum_j T^j(1) * out[j].1`.
pub fn decompose_right(tau: &Form, n: i64) -> Result<Vec<(u32, Form)>, WeightMismatch> {
    uniform_weight_checked(tau, n)?;
    let sys = dual_right(n);
    Ok(sys
        .gens
        .iter()
        .enumerate()
        .map(|(j, y)| (j as u32, tau.mul_alg_left(y)))
        .collect())
}

/// Reassembles `sum_j mu_j * T^j(1)` from left coordinates.
pub fn recompose_left(parts: &[(Form, u32)], n: i64) -> Form {
    let mut out = Form::zero();
    for (mu, j) in parts {
        out = out.add(&mu.mul_alg_right(&basis_section(n, *j).value));
    }
    out
}

/// Reassembles `sum_j T^j(1) * mu_j` from right coordinates.
pub fn recompose_right(parts: &[(u32, Form)], n: i64) -> Form {
    let mut out = Form::zero();
    for (j, mu) in parts {
        out = out.add(&mu.mul_alg_left(&basis_section(n, *j).value));
    }
    out
}
