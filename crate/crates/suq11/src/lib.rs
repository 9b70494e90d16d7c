//! Exact symbolic computation for the quantum group SU_q(1,1) and the
//! quantum hyperboloid that sits inside it.
//!
//! Everything is computed over the field Q(q) of rational functions of the
//! deformation parameter, with arbitrary-precision integer arithmetic, so
//! every identity in the library is exact: there are no tolerances anywhere.
//!
//! The layers, bottom to top:
//!
//! - [`coeffs`]: the scalar field Q(q) ([`coeffs::QRat`]) and q-integers.
//! - [`algebra`]: the Hopf *-algebra on the generators a, a*, g, g* in
//!   normal-ordered form ([`algebra::AlgElt`]), its Z-grading, the circle
//!   structure group, and the quantum-hyperboloid subalgebra of grade zero.
//! - [`forms`]: the three-dimensional left-covariant exterior calculus on the
//!   eta basis ([`forms::Form`]), with differential, star, horizontal and base
//!   projections, metric, and the two Hodge operators.
//! - [`connection`]: quantum germs, principal connections, covariant
//!   derivatives, curvature, the regularity test, and gauge transformations.
//! - [`bundles`]: degree-n line bundles as bimodules of sections
//!   ([`bundles::Section`]), dual generator systems, and the left/right
//!   decompositions of bundle-valued forms.
//! - [`laplacians`]: base Laplacians on hyperboloid forms, the left and right
//!   gauge Laplacians on sections, eigenvector chains, spectrum tables, and
//!   the exact commutator of the two operators.
//! - [`parse`] and [`cli`]: an expression grammar over ASCII tokens
//!   (`a`, `as`, `g`, `gs`, `em`, `ep`, `e3`, `q`) and a batch command-line
//!   interface (`eval`, `d`, `D`, `star`, `hodge`, `laplacian`, `tables`,
//!   `commutator`, `verify`).
//!
//! Each capability has a runnable walkthrough under `examples/`; start with
//!
//! ```text
//! cargo run -p suq11 --example algebra_basics
//! ```

pub mod algebra;
pub mod bundles;
pub mod cli;
pub mod coeffs;
pub mod connection;
pub mod forms;
pub mod laplacians;
pub mod parse;
pub mod verify;
