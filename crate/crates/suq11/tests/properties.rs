//! Randomized structural invariants: field axioms for the scalars, algebra
//! and calculus laws, and parse round trips of canonical renderings.

use proptest::prelude::*;
use suq11::algebra::{AlgElt, Monomial};
use suq11::coeffs::{ratio, QRat};
use suq11::forms::{EtaWord, Form};
use suq11::parse::parse_form;

fn coeffs() -> impl Strategy<Value = QRat> {
    prop::collection::vec((-3i64..=3, 1i64..=3, -3i64..=3), 1..=2).prop_map(|terms| {
        terms
            .into_iter()
            .fold(QRat::zero(), |acc, (num, den, e)| acc.add(&QRat::term(ratio(num, den), e)))
    })
}

fn monomials() -> impl Strategy<Value = Monomial> {
    (-3i64..=3, 0u32..=2, 0u32..=2).prop_map(|(a, k, l)| Monomial::new(a, k, l))
}

fn algs() -> impl Strategy<Value = AlgElt> {
    prop::collection::vec((monomials(), coeffs()), 1..=2).prop_map(|terms| {
        let mut out = AlgElt::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    })
}

fn words() -> impl Strategy<Value = EtaWord> {
    (0..EtaWord::ALL.len()).prop_map(|i| EtaWord::ALL[i])
}

fn forms() -> impl Strategy<Value = Form> {
    prop::collection::vec((words(), algs()), 1..=2).prop_map(|parts| {
        let mut out = Form::zero();
        for (w, x) in parts {
            out.add_part(w, &x);
        }
        out
    })
}

proptest! {
    #[test]
    fn scalar_field_axioms(x in coeffs(), y in coeffs(), z in coeffs()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.div(&x).is_one());
        }
    }

    #[test]
    fn scalar_evaluation_is_a_homomorphism(x in coeffs(), y in coeffs()) {
        let point = ratio(2, 3);
        let (ex, ey) = (x.eval(&point), y.eval(&point));
        if let (Ok(ex), Ok(ey)) = (ex, ey) {
            prop_assert_eq!(x.add(&y).eval(&point).unwrap(), ex.clone() + ey.clone());
            prop_assert_eq!(x.mul(&y).eval(&point).unwrap(), ex * ey);
        }
    }

    #[test]
    fn product_is_associative(x in algs(), y in algs(), z in algs()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn star_reverses_products_and_involutes(x in algs(), y in algs()) {
        prop_assert_eq!(x.mul(&y).star(), y.star().mul(&x.star()));
        prop_assert_eq!(x.star().star(), x);
    }

    #[test]
    fn grading_is_additive(m1 in monomials(), m2 in monomials()) {
        let x = AlgElt::basis(m1.a, m1.k, m1.l);
        let y = AlgElt::basis(m2.a, m2.k, m2.l);
        let product = x.mul(&y);
        prop_assert_eq!(product.zdegree().unwrap(), x.zdegree().unwrap() + y.zdegree().unwrap());
    }

    #[test]
    fn counit_is_multiplicative(x in algs(), y in algs()) {
        prop_assert_eq!(x.mul(&y).counit(), x.counit().mul(&y.counit()));
    }

    #[test]
    fn coproduct_is_multiplicative(m1 in monomials(), m2 in monomials()) {
        let x = AlgElt::basis(m1.a, m1.k, m1.l);
        let y = AlgElt::basis(m2.a, m2.k, m2.l);
        prop_assert_eq!(x.mul(&y).coproduct(), x.coproduct().mul(&y.coproduct()));
    }

    #[test]
    fn differential_squares_to_zero(u in forms()) {
        prop_assert!(u.differential().differential().is_zero());
    }

    #[test]
    fn differential_satisfies_graded_leibniz(x in algs(), w in words(), v in forms()) {
        let u = Form::term(x, w);
        let mut second = u.wedge(&v.differential());
        if w.degree() % 2 == 1 {
            second = second.neg();
        }
        prop_assert_eq!(u.wedge(&v).differential(), u.differential().wedge(&v).add(&second));
    }

    #[test]
    fn wedge_is_associative(u in forms(), v in forms(), w in forms()) {
        prop_assert_eq!(u.wedge(&v).wedge(&w), u.wedge(&v.wedge(&w)));
    }

    #[test]
    fn star_commutes_with_the_differential(u in forms()) {
        prop_assert_eq!(u.star().differential(), u.differential().star());
    }

    #[test]
    fn algebra_rendering_parses_back(x in algs()) {
        let rendered = x.to_string();
        let parsed = parse_form(&rendered).expect("canonical text parses");
        prop_assert_eq!(parsed, Form::from_alg(x));
    }

    #[test]
    fn form_rendering_parses_back(u in forms()) {
        let rendered = u.to_string();
        let parsed = parse_form(&rendered).expect("canonical text parses");
        prop_assert_eq!(parsed, u);
    }
}
