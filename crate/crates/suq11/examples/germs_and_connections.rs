//! Quantum germs, the canonical principal connection, and covariant
//! derivatives.

use suq11::algebra::{germ_scalar, AlgElt};
use suq11::connection::{
    covariant_derivative, covariant_derivative_via_germs, curvature, germs, is_regular, Qpc,
};
use suq11::forms::{EtaWord, Form};

fn main() {
    let a = AlgElt::gen_a();
    let g = AlgElt::gen_g();
    let gstar = AlgElt::gen_g_star();

    println!("=== The germs map ===");
    println!("pi(g)      = {}", germs(&g).as_form());
    println!("pi(gs)     = {}", germs(&gstar).as_form());
    println!("pi(a - as) = {}", germs(&a.sub(&AlgElt::gen_a_star())).as_form());
    println!("pi(g gs)   = {}", germs(&g.mul(&gstar)).as_form());
    assert_eq!(germs(&g).as_form(), Form::eta_plus());

    println!("\n=== Germ scalars per weight ===");
    // c_n scales the vertical correction on a weight-n component
    for n in -3..=3i64 {
        println!("c_{n:+} = {}", germ_scalar(n));
    }
    assert!(germ_scalar(0).is_zero());

    println!("\n=== Covariant derivative ===");
    // D projects d onto the horizontal part; both routes agree
    for (name, x) in [("a", a.clone()), ("a^2", a.pow(2)), ("g gs", g.mul(&gstar))] {
        let phi = Form::from_alg(x);
        let direct = covariant_derivative(&phi).unwrap();
        let via_germs = covariant_derivative_via_germs(&phi).unwrap();
        println!("D({name}) = {direct}");
        assert_eq!(direct, via_germs);
    }
    // vertical input is rejected
    assert!(covariant_derivative(&Form::eta_three()).is_err());

    println!("\n=== The canonical connection ===");
    let canonical = Qpc::canonical();
    println!("vertical value = {}", canonical.vertical_value());
    println!("curvature      = {}", curvature(&canonical));

    let corpus: Vec<Form> = [a.clone(), g.clone(), gstar.clone(), a.mul(&g)]
        .into_iter()
        .map(Form::from_alg)
        .chain([Form::eta_minus(), Form::dvol()])
        .collect();
    println!("regular on the corpus: {}", is_regular(&canonical, &corpus));
    assert!(is_regular(&canonical, &corpus));

    println!("\n=== A displaced connection ===");
    let seed = Form::term(a.mul(&g), EtaWord::EM);
    let mu = seed.sub(&seed.star());
    let displaced = Qpc::new(mu.clone()).unwrap();
    println!("mu             = {mu}");
    println!("vertical value = {}", displaced.vertical_value());
    println!("curvature      = {}", curvature(&displaced));
    println!("regular on the corpus: {}", is_regular(&displaced, &corpus));
    assert!(!is_regular(&displaced, &corpus));
}
