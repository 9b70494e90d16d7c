//! The metric pairing, the two Hodge operators, and codifferentials on base
//! forms.

use suq11::algebra::AlgElt;
use suq11::forms::{
    codifferential_left, hodge_left, hodge_left_inv, hodge_right, metric_left, EtaWord, Form,
};

fn main() {
    // base forms: horizontal words with total weight zero
    let b0 = Form::from_alg(AlgElt::rho());
    let b1 = Form::term(AlgElt::basis(2, 0, 0), EtaWord::EM)
        .add(&Form::term(AlgElt::basis(0, 0, 2), EtaWord::EP));
    let b2 = Form::term(AlgElt::xi(), EtaWord::DVOL);
    for (name, b) in [("b0", &b0), ("b1", &b1), ("b2", &b2)] {
        assert!(b.is_base());
        println!("{name} = {b}");
    }

    println!("\n=== Left Hodge operator ===");
    println!("hodge(b0) = {}", hodge_left(&b0).unwrap());
    println!("hodge(b1) = {}", hodge_left(&b1).unwrap());
    println!("hodge(b2) = {}", hodge_left(&b2).unwrap());
    // degree 1 picks up a sign under the square, degrees 0 and 2 do not
    assert_eq!(hodge_left(&hodge_left(&b1).unwrap()).unwrap(), b1.neg());
    assert_eq!(hodge_left(&hodge_left(&b0).unwrap()).unwrap(), b0);
    // vertical input is rejected
    assert!(hodge_left(&Form::eta_three()).is_err());

    println!("\n=== Right Hodge operator ===");
    println!("hodge_right(b1) = {}", hodge_right(&b1).unwrap());
    // the right operator composes the left one with the star
    assert_eq!(hodge_right(&b1).unwrap(), hodge_left(&b1.star()).unwrap());

    println!("\n=== Metric pairing ===");
    let u = Form::term(AlgElt::basis(2, 1, 1), EtaWord::EM);
    println!("<b1, b1> = {}", metric_left(&b1, &b1).unwrap());
    println!("<b1, u>  = {}", metric_left(&b1, &u).unwrap());
    // the volume pairing identity: u ^ v = <u, hodge^-1 v> dvol
    let pairing = metric_left(&b1, &hodge_left_inv(&u).unwrap()).unwrap();
    assert_eq!(b1.wedge(&u), Form::term(pairing, EtaWord::DVOL));
    println!("volume pairing identity holds");

    println!("\n=== Codifferential ===");
    // the degree-1 codifferential lowers b1 to a function
    let lowered = codifferential_left(&b1, 1).unwrap();
    println!("d*(b1) = {lowered}");
    assert_eq!(lowered.degree(), Some(0));
    // and it vanishes identically on functions
    assert!(codifferential_left(&b0, 0).unwrap().is_zero());
}
