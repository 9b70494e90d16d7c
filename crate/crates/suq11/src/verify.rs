//! Self-verification suites over randomized and enumerated corpora.
//!
//! Four suites mirror the layers of the library: [`Suite::Relations`] checks
//! the defining algebra, [`Suite::Calculus`] the exterior calculus with its
//! germs, Hodge operators, and pairings, [`Suite::Bundles`] the dual
//! generator systems, covariant derivatives, regularity, and gauge maps, and
//! [`Suite::Spectra`] the Laplacians against their closed eigenvalue forms.
//!
//! Random corpora are drawn from a fixed seed, so a suite runs the same
//! checks in the same order every time. A check that panics is reported as a
//! failure rather than aborting the run.

use crate::algebra::{AlgElt, Monomial};
use crate::bundles::{
    basis_section, decompose_left, decompose_right, dual_left, dual_right, recompose_left,
    recompose_right, Section,
};
use crate::coeffs::{qint, rat, ratio, QRat};
use crate::connection::{
    covariant_derivative, gauge_transform, gauge_transform_inv, germs, is_regular, Qpc,
};
use crate::forms::{hodge_left, hodge_left_inv, hodge_right, hodge_right_inv, metric_left, EtaWord, Form};
use crate::laplacians::{
    base_laplacian_left, chain_eigenvectors, gauge_commutator, gauge_laplacian_left,
    gauge_laplacian_right, left_eigenvalue, right_eigenvalue, spectrum_table, ChainOperator,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// A named verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Calculus,
    Bundles,
    Spectra,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Relations, Suite::Calculus, Suite::Bundles, Suite::Spectra];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Calculus => "calculus",
            Suite::Bundles => "bundles",
            Suite::Spectra => "spectra",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One named check and whether it held.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// The checks of one suite, in their fixed execution order.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs one suite; `bound` caps the weights and exponents of the enumerated
/// corpora.
pub fn run_suite(suite: Suite, bound: u32) -> SuiteReport {
    let mut report = SuiteReport { suite, checks: Vec::new() };
    match suite {
        Suite::Relations => relations(&mut report),
        Suite::Calculus => calculus(&mut report),
        Suite::Bundles => bundles(&mut report, bound),
        Suite::Spectra => spectra(&mut report, bound),
    }
    report
}

fn check(report: &mut SuiteReport, name: &str, f: impl FnOnce() -> bool) {
    let passed = catch_unwind(AssertUnwindSafe(f)).unwrap_or(false);
    report.checks.push(Check { name: name.to_string(), passed });
}

fn seeded() -> StdRng {
    StdRng::seed_from_u64(0x5371_3131)
}

fn random_coeff(rng: &mut StdRng) -> QRat {
    let num = [1, 2, 3, -1, -2][rng.gen_range(0..5)];
    QRat::term(ratio(num, rng.gen_range(1..=3)), rng.gen_range(-2..=2))
}

fn random_letter(rng: &mut StdRng) -> AlgElt {
    match rng.gen_range(0..4) {
        0 => AlgElt::gen_a(),
        1 => AlgElt::gen_a_star(),
        2 => AlgElt::gen_g(),
        _ => AlgElt::gen_g_star(),
    }
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Vec<AlgElt> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| random_letter(rng)).collect()
}

fn product(letters: &[AlgElt]) -> AlgElt {
    letters.iter().fold(AlgElt::one(), |acc, x| acc.mul(x))
}

fn random_split_product(rng: &mut StdRng, letters: &[AlgElt]) -> AlgElt {
    if letters.len() <= 1 {
        return product(letters);
    }
    let cut = rng.gen_range(1..letters.len());
    random_split_product(rng, &letters[..cut]).mul(&random_split_product(rng, &letters[cut..]))
}

fn random_alg(rng: &mut StdRng) -> AlgElt {
    let mut out = AlgElt::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let m = Monomial::new(rng.gen_range(-3..=3), rng.gen_range(0..=2), rng.gen_range(0..=2));
        let c = random_coeff(rng);
        out.add_term(m, &c);
    }
    out
}

fn random_form(rng: &mut StdRng) -> Form {
    let mut out = Form::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let w = EtaWord::ALL[rng.gen_range(0..EtaWord::ALL.len())];
        out.add_part(w, &random_alg(rng));
    }
    out
}

/// A random one-term element of a fixed grade `d`.
fn random_grade_monomial(rng: &mut StdRng, d: i64) -> AlgElt {
    loop {
        let a = rng.gen_range(-3..=3i64);
        let k = rng.gen_range(0..=2i64);
        let l = a + k - d;
        if (0..=4).contains(&l) {
            let c = random_coeff(rng);
            return AlgElt::term(c, Monomial::new(a, k as u32, l as u32));
        }
    }
}

/// A random base form of the given degree.
fn random_base_form(rng: &mut StdRng, degree: u32) -> Form {
    match degree {
        0 => Form::from_alg(random_grade_monomial(rng, 0)),
        1 => {
            let x = random_grade_monomial(rng, -EtaWord::EM.weight());
            let y = random_grade_monomial(rng, -EtaWord::EP.weight());
            Form::term(x, EtaWord::EM).add(&Form::term(y, EtaWord::EP))
        }
        _ => Form::term(random_grade_monomial(rng, 0), EtaWord::DVOL),
    }
}

fn sample_displacement() -> Form {
    let base = Form::term(AlgElt::gen_a().mul(&AlgElt::gen_g()), EtaWord::EM);
    base.sub(&base.star())
}

fn relations(report: &mut SuiteReport) {
    let a = AlgElt::gen_a();
    let astar = AlgElt::gen_a_star();
    let g = AlgElt::gen_g();
    let gstar = AlgElt::gen_g_star();
    let q = QRat::q_power(1);

    check(report, "as a - gs g = 1", || {
        astar.mul(&a).sub(&gstar.mul(&g)) == AlgElt::one()
    });
    check(report, "a as - q^2 g gs = 1", || {
        a.mul(&astar).sub(&g.mul(&gstar).scale(&QRat::q_power(2))) == AlgElt::one()
    });
    check(report, "g gs = gs g", || g.mul(&gstar) == gstar.mul(&g));
    check(report, "q g a = a g", || g.mul(&a).scale(&q) == a.mul(&g));
    check(report, "q gs a = a gs", || gstar.mul(&a).scale(&q) == a.mul(&gstar));

    check(report, "products of 200 random words associate", || {
        let mut rng = seeded();
        (0..200).all(|_| {
            let word = random_word(&mut rng, 8);
            product(&word) == random_split_product(&mut rng, &word)
        })
    });
    check(report, "star reverses 200 random products", || {
        let mut rng = seeded();
        (0..200).all(|_| {
            let x = product(&random_word(&mut rng, 4));
            let y = product(&random_word(&mut rng, 4));
            x.mul(&y).star() == y.star().mul(&x.star())
        })
    });
    check(report, "antipode reverses 100 random products", || {
        let mut rng = seeded();
        (0..100).all(|_| {
            let x = product(&random_word(&mut rng, 3));
            let y = product(&random_word(&mut rng, 3));
            x.mul(&y).antipode() == y.antipode().mul(&x.antipode())
        })
    });
    check(report, "coproduct and counit are multiplicative on 40 small pairs", || {
        let mut rng = seeded();
        (0..40).all(|_| {
            let x = AlgElt::basis(rng.gen_range(-2..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
            let y = AlgElt::basis(rng.gen_range(-2..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
            let xy = x.mul(&y);
            xy.coproduct() == x.coproduct().mul(&y.coproduct())
                && xy.counit() == x.counit().mul(&y.counit())
        })
    });
}

fn calculus(report: &mut SuiteReport) {
    let em = Form::eta_minus();
    let ep = Form::eta_plus();
    let e3 = Form::eta_three();
    let one_plus_q2 = QRat::one().add(&QRat::q_power(2));

    check(report, "frame words square to zero and sort with fixed powers", || {
        em.wedge(&em).is_zero()
            && ep.wedge(&ep).is_zero()
            && e3.wedge(&e3).is_zero()
            && ep.wedge(&em) == em.wedge(&ep).scale(&QRat::q_power(2)).neg()
            && e3.wedge(&em) == em.wedge(&e3).scale(&QRat::q_power(4)).neg()
            && e3.wedge(&ep) == ep.wedge(&e3).scale(&QRat::q_power(-4)).neg()
    });
    check(report, "frame differentials match the structure constants", || {
        em.differential() == em.wedge(&e3).scale(&QRat::q_power(2))
            && ep.differential() == ep.wedge(&e3).scale(&QRat::q_power(-2)).neg()
            && e3.differential() == Form::dvol().scale(&one_plus_q2).neg()
    });
    check(report, "frames pass generators with the grade exponent rule", || {
        let gens = [
            AlgElt::gen_a(),
            AlgElt::gen_a_star(),
            AlgElt::gen_g(),
            AlgElt::gen_g_star(),
        ];
        [EtaWord::EM, EtaWord::EP, EtaWord::E3].iter().all(|w| {
            let frame = Form::term(AlgElt::one(), *w);
            gens.iter().all(|x| {
                let d = x.zdegree().unwrap();
                frame.mul_alg_right(x)
                    == frame.mul_alg_left(x).scale(&QRat::q_power(-w.pass_exponent() * d))
            })
        })
    });
    check(report, "d d = 0 on 25 random forms", || {
        let mut rng = seeded();
        (0..25).all(|_| random_form(&mut rng).differential().differential().is_zero())
    });
    check(report, "graded Leibniz rule on 25 random pairs", || {
        let mut rng = seeded();
        (0..25).all(|_| {
            let w = EtaWord::ALL[rng.gen_range(0..EtaWord::ALL.len())];
            let u = Form::term(random_alg(&mut rng), w);
            let v = random_form(&mut rng);
            let mut second = u.wedge(&v.differential());
            if w.degree() % 2 == 1 {
                second = second.neg();
            }
            u.wedge(&v).differential() == u.differential().wedge(&v).add(&second)
        })
    });
    check(report, "d commutes with star on 25 random forms", || {
        let mut rng = seeded();
        (0..25).all(|_| {
            let f = random_form(&mut rng);
            f.star().differential() == f.differential().star()
        })
    });
    check(report, "star is an involution on 25 random forms", || {
        let mut rng = seeded();
        (0..25).all(|_| {
            let f = random_form(&mut rng);
            f.star().star() == f
        })
    });
    check(report, "germs of the generators take their frame values", || {
        let a = AlgElt::gen_a();
        let pa = germs(&a).as_form();
        germs(&AlgElt::gen_g()).as_form() == Form::eta_plus()
            && germs(&AlgElt::gen_g_star()).as_form()
                == Form::eta_minus().scale(&QRat::q_power(-1))
            && germs(&a.sub(&AlgElt::gen_a_star())).as_form() == Form::eta_three()
            && germs(&AlgElt::one()).is_zero()
            && pa.scale(&one_plus_q2) == Form::eta_three()
    });
    check(report, "d factors through germs for exponents <= 2", || {
        let mut all = true;
        for a in -2..=2i64 {
            for k in 0..=2u32 {
                for l in 0..=2u32 {
                    let p = AlgElt::basis(a, k, l);
                    let mut rhs = Form::zero();
                    for ((m1, m2), c) in p.coproduct().terms() {
                        let germ = germs(&AlgElt::basis(m2.a, m2.k, m2.l)).as_form();
                        rhs = rhs.add(&germ.mul_alg_left(&AlgElt::basis(m1.a, m1.k, m1.l)).scale(c));
                    }
                    all &= Form::from_alg(p).differential() == rhs;
                }
            }
        }
        all
    });
    check(report, "left hodge squares to the degree sign on 30 base forms", || {
        let mut rng = seeded();
        (0..30).all(|_| {
            let degree = rng.gen_range(0..=2u32);
            let u = random_base_form(&mut rng, degree);
            let twice = hodge_left(&hodge_left(&u).unwrap()).unwrap();
            if degree == 1 {
                twice == u.neg()
            } else {
                twice == u
            }
        })
    });
    check(report, "volume pairing identity on 50 random base pairs", || {
        let mut rng = seeded();
        (0..50).all(|_| {
            let degree = rng.gen_range(0..=2u32);
            let u = random_base_form(&mut rng, degree);
            let v = random_base_form(&mut rng, 2 - degree);
            let pairing = metric_left(&u, &hodge_left_inv(&v).unwrap()).unwrap();
            u.wedge(&v) == Form::term(pairing, EtaWord::DVOL)
        })
    });
    check(report, "hodge operators invert on 30 base forms", || {
        let mut rng = seeded();
        (0..30).all(|_| {
            let degree = rng.gen_range(0..=2u32);
            let u = random_base_form(&mut rng, degree);
            hodge_left_inv(&hodge_left(&u).unwrap()).unwrap() == u
                && hodge_right_inv(&hodge_right(&u).unwrap()).unwrap() == u
        })
    });
}

fn bundles(report: &mut SuiteReport, bound: u32) {
    let b = bound as i64;

    check(report, "left partition of unity across the weight range", || {
        (-b..=b).all(|n| {
            let system = dual_left(n);
            let mut sum = AlgElt::zero();
            for (j, x) in system.gens.iter().enumerate() {
                sum = sum.add(&x.mul(basis_section(n, j as u32).value()));
            }
            sum == AlgElt::one()
        })
    });
    check(report, "right partition of unity across the weight range", || {
        (-b..=b).all(|n| {
            let system = dual_right(n);
            let mut sum = AlgElt::zero();
            for (j, y) in system.gens.iter().enumerate() {
                sum = sum.add(&basis_section(n, j as u32).value().mul(y));
            }
            sum == AlgElt::one()
        })
    });
    check(report, "decompositions recompose on derivative images", || {
        (-b..=b).all(|n| {
            (0..=n.unsigned_abs() as u32).all(|j| {
                let f = Form::from_alg(basis_section(n, j).value().clone());
                let phi = covariant_derivative(&f).unwrap();
                let left = decompose_left(&phi, n).unwrap();
                let right = decompose_right(&phi, n).unwrap();
                left.iter().all(|(coeff, _)| coeff.is_base())
                    && right.iter().all(|(_, coeff)| coeff.is_base())
                    && recompose_left(&left, n) == phi
                    && recompose_right(&right, n) == phi
            })
        })
    });
    check(report, "covariant derivative power values across the range", || {
        let d = |x: AlgElt| covariant_derivative(&Form::from_alg(x)).unwrap();
        (1..=bound).all(|n| {
            let qn = qint(n);
            let m = n as i64;
            let c_a = QRat::q_power(3 - 2 * m).mul(&qn);
            let c_g = QRat::q_power(1 - m).mul(&qn);
            let c_gs = QRat::q_power(-m).mul(&qn);
            d(AlgElt::gen_a().pow(n))
                == Form::term(AlgElt::basis(m - 1, 0, 1).scale(&c_a), EtaWord::EP)
                && d(AlgElt::gen_a_star().pow(n))
                    == Form::term(AlgElt::basis(-m + 1, 1, 0).scale(&qn), EtaWord::EM)
                && d(AlgElt::gen_g().pow(n))
                    == Form::term(AlgElt::basis(-1, n - 1, 0).scale(&c_g), EtaWord::EP)
                && d(AlgElt::gen_g_star().pow(n))
                    == Form::term(AlgElt::basis(1, 0, n - 1).scale(&c_gs), EtaWord::EM)
        })
    });
    check(report, "the canonical connection is regular on the corpus", || {
        let corpus: Vec<Form> = [
            AlgElt::gen_a(),
            AlgElt::gen_a_star(),
            AlgElt::gen_g(),
            AlgElt::gen_g_star(),
            AlgElt::gen_a().mul(&AlgElt::gen_g()),
            AlgElt::gen_g().pow(2),
        ]
        .into_iter()
        .map(Form::from_alg)
        .chain([Form::eta_minus(), Form::eta_plus(), Form::dvol()])
        .chain((1..=b.max(1)).map(|n| Form::from_alg(basis_section(n, 0).value().clone())))
        .collect();
        is_regular(&Qpc::canonical(), &corpus)
    });
    check(report, "a displaced connection fails regularity", || {
        let displaced = Qpc::new(sample_displacement()).unwrap();
        !is_regular(&displaced, &[Form::from_alg(AlgElt::gen_a())])
    });
    check(report, "gauge translation displaces e3 and round trips", || {
        let mu = sample_displacement();
        let moved = gauge_transform(&mu, &Form::eta_three()).unwrap();
        if moved != Form::eta_three().add(&mu) {
            return false;
        }
        let mut rng = seeded();
        (0..20).all(|_| {
            let u = random_form(&mut rng);
            gauge_transform_inv(&mu, &gauge_transform(&mu, &u).unwrap()).unwrap() == u
                && gauge_transform(&mu, &u.horizontal_part()).unwrap() == u.horizontal_part()
        })
    });
}

fn spectra(report: &mut SuiteReport, bound: u32) {
    let omega = Qpc::canonical();
    let weight_span = bound.min(2) as i64;

    check(report, "table 1 rows cross-check at weight zero", || {
        !spectrum_table(1, 0, bound).unwrap().is_empty()
    });
    check(report, "tables 2 and 4 cross-check at positive weights", || {
        (1..=weight_span).all(|n| {
            !spectrum_table(2, n, bound).unwrap().is_empty()
                && !spectrum_table(4, n, bound).unwrap().is_empty()
        })
    });
    check(report, "tables 3 and 5 cross-check at negative weights", || {
        (1..=weight_span).all(|n| {
            !spectrum_table(3, -n, bound).unwrap().is_empty()
                && !spectrum_table(5, -n, bound).unwrap().is_empty()
        })
    });
    check(report, "chain eigenvectors satisfy the eigenvalue equation", || {
        let sections: Vec<Section> = (0..=4u32)
            .map(|k| Section::new(AlgElt::basis(0, k, k), 0).unwrap())
            .collect();
        let chain = ChainOperator::from_action(sections, |s| gauge_laplacian_left(&omega, s));
        chain_eigenvectors(&chain).iter().all(|(vector, lambda)| {
            gauge_laplacian_left(&omega, vector).value() == &vector.value().scale(lambda)
        })
    });
    check(report, "weight-zero gauge laplacians equal the base laplacian", || {
        let samples = [
            AlgElt::rho(),
            AlgElt::rho().pow(2),
            AlgElt::basis(0, 2, 2),
            AlgElt::basis(-1, 2, 1),
        ];
        samples.iter().all(|v| {
            let s = Section::new(v.clone(), 0).unwrap();
            let base = base_laplacian_left(&Form::from_alg(v.clone()), 0).unwrap();
            Form::from_alg(gauge_laplacian_left(&omega, &s).value().clone()) == base
                && gauge_laplacian_left(&omega, &s).value()
                    == gauge_laplacian_right(&omega, &s).value()
        })
    });
    check(report, "the right laplacian is the star conjugate of the left", || {
        [1i64, 2, -1, -2].iter().all(|&n| {
            (0..=n.unsigned_abs() as u32).all(|j| {
                let s = basis_section(n, j);
                let mirrored = Section::new(s.value().star(), -n).unwrap();
                gauge_laplacian_right(&omega, &s).value()
                    == &gauge_laplacian_left(&omega, &mirrored).value().star()
            })
        })
    });
    check(report, "the two gauge laplacians commute on sample sections", || {
        let samples = [
            Section::new(AlgElt::basis(1, 1, 1), 1).unwrap(),
            Section::new(AlgElt::basis(2, 1, 1), 2).unwrap(),
            Section::new(AlgElt::basis(3, 2, 2), 3).unwrap(),
            Section::new(AlgElt::basis(-1, 1, 1), -1).unwrap(),
        ];
        samples.iter().all(|s| gauge_commutator(s).value().is_zero())
    });
    check(report, "eigenvalues evaluate without poles at q = 1", || {
        let one = rat(1);
        (-3..=3i64).all(|t| {
            (0..=3u32).all(|k| {
                (0..=3u32).all(|l| {
                    left_eigenvalue(t, k, l).eval(&one).is_ok()
                        && right_eigenvalue(t, k, l).eval(&one).is_ok()
                })
            })
        })
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_is_green() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 3);
            for check in &report.checks {
                assert!(check.passed, "[{}] {} failed", report.suite, check.name);
            }
            assert!(report.failed() == 0 && report.passed() == report.checks.len());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let first = run_suite(Suite::Relations, 2);
        let second = run_suite(Suite::Relations, 2);
        let names: Vec<&str> = first.checks.iter().map(|c| c.name.as_str()).collect();
        let again: Vec<&str> = second.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, again);
        assert!(first.all_passed());
    }

    #[test]
    fn a_broken_predicate_reports_a_failure() {
        let mut report = SuiteReport { suite: Suite::Relations, checks: Vec::new() };
        check(&mut report, "forced failure", || false);
        check(&mut report, "forced panic", || panic!("boom"));
        assert_eq!(report.failed(), 2);
        assert!(!report.all_passed());
    }
}
