//! The three-dimensional left-covariant exterior calculus on the frame
//! em, ep, e3.

use suq11::algebra::AlgElt;
use suq11::coeffs::QRat;
use suq11::forms::{EtaWord, Form};

fn main() {
    let em = Form::eta_minus();
    let ep = Form::eta_plus();
    let e3 = Form::eta_three();

    println!("=== Frame algebra ===");
    println!("ep ^ em = {}", ep.wedge(&em));
    println!("e3 ^ em = {}", e3.wedge(&em));
    println!("e3 ^ ep = {}", e3.wedge(&ep));
    println!("em ^ em = {}", em.wedge(&em));
    assert!(em.wedge(&em).is_zero());
    // the top word absorbs everything above degree 3
    let top = em.wedge(&ep).wedge(&e3);
    println!("em ^ ep ^ e3 = {top}");
    assert!(top.wedge(&em).is_zero());

    println!("\n=== Structure equations ===");
    println!("d em = {}", em.differential());
    println!("d ep = {}", ep.differential());
    println!("d e3 = {}", e3.differential());

    println!("\n=== Differentials of coordinates ===");
    for (name, x) in [
        ("a", AlgElt::gen_a()),
        ("g", AlgElt::gen_g()),
        ("g gs", AlgElt::rho()),
    ] {
        println!("d {name} = {}", Form::from_alg(x).differential());
    }

    println!("\n=== Coefficients pass the frame with fixed powers ===");
    let g = AlgElt::gen_g();
    let left = Form::term(g.clone(), EtaWord::EM);
    let right = Form::term(AlgElt::one(), EtaWord::EM).mul_alg_right(&g);
    println!("g em = {left}");
    println!("em g = {right}");
    assert_eq!(right, left.scale(&QRat::q_power(-1)));

    println!("\n=== d is a graded derivation squaring to zero ===");
    let u = Form::term(AlgElt::gen_a(), EtaWord::EP);
    let v = Form::from_alg(AlgElt::rho()).add(&Form::term(AlgElt::gen_g(), EtaWord::EM));
    let lhs = u.wedge(&v).differential();
    let rhs = u.differential().wedge(&v).sub(&u.wedge(&v.differential()));
    assert_eq!(lhs, rhs);
    assert!(u.wedge(&v).differential().differential().is_zero());
    println!("d(u ^ v) = {lhs}");

    println!("\n=== Star and horizontal projection ===");
    let mixed = Form::term(AlgElt::gen_a(), EtaWord::EM).add(&Form::term(AlgElt::gen_g(), EtaWord::E3));
    println!("u           = {mixed}");
    println!("u*          = {}", mixed.star());
    println!("Hor u       = {}", mixed.horizontal_part());
    assert_eq!(mixed.star().star(), mixed);
    assert!(mixed.horizontal_part().is_horizontal());
}
