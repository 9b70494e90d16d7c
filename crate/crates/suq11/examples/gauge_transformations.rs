//! Gauge translations moving the canonical connection to a displaced one.

use suq11::algebra::AlgElt;
use suq11::connection::{covariant_derivative_left, gauge_transform, gauge_transform_inv, Qpc};
use suq11::forms::{EtaWord, Form};

fn main() {
    // an anti-selfadjoint base 1-form to displace by
    let seed = Form::term(AlgElt::gen_a().mul(&AlgElt::gen_g()), EtaWord::EM);
    let mu = seed.sub(&seed.star());
    println!("mu = {mu}");
    assert_eq!(mu.star(), mu.neg());
    assert!(mu.is_base());

    println!("\n=== The translation moves the vertical frame ===");
    let moved = gauge_transform(&mu, &Form::eta_three()).unwrap();
    println!("F_mu(e3) = {moved}");
    assert_eq!(moved, Form::eta_three().add(&mu));

    println!("\n=== Horizontal forms are fixed ===");
    let horizontal = Form::term(AlgElt::gen_g(), EtaWord::EP);
    println!("F_mu(g ep) = {}", gauge_transform(&mu, &horizontal).unwrap());
    assert_eq!(gauge_transform(&mu, &horizontal).unwrap(), horizontal);

    println!("\n=== Forward and inverse compose to the identity ===");
    let samples = [
        Form::eta_three(),
        Form::term(AlgElt::gen_a(), EtaWord::E3),
        Form::term(AlgElt::rho(), EtaWord::DVOL).add(&Form::eta_three().wedge(&Form::eta_plus())),
    ];
    for u in &samples {
        let round = gauge_transform_inv(&mu, &gauge_transform(&mu, u).unwrap()).unwrap();
        assert_eq!(&round, u);
    }
    println!("round trips hold on {} samples", samples.len());

    println!("\n=== The displaced covariant derivative ===");
    // the connection moved by mu differentiates with a mu correction
    let omega = Qpc::new(mu.clone()).unwrap();
    let phi = Form::from_alg(AlgElt::gen_a());
    println!("D(a)        = {}", covariant_derivative_left(&Qpc::canonical(), &phi).unwrap());
    println!("D^omega(a)  = {}", covariant_derivative_left(&omega, &phi).unwrap());

    // an invalid displacement is rejected
    let bad = Form::term(AlgElt::gen_a().mul(&AlgElt::gen_g()), EtaWord::EM);
    println!("\nnon-anti-selfadjoint displacement rejected: {}", Qpc::new(bad).is_err());
}
