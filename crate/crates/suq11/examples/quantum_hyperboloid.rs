//! The grade-zero subalgebra: the coordinate ring of the quantum hyperboloid.

use suq11::algebra::AlgElt;
use suq11::coeffs::QRat;

fn main() {
    // rho = g gs and xi = a gs generate the invariant subalgebra
    let rho = AlgElt::rho();
    let xi = AlgElt::xi();
    let xistar = xi.star();

    println!("rho  = {rho}");
    println!("xi   = {xi}");
    println!("xi*  = {xistar}");
    assert_eq!(rho.zdegree().unwrap(), 0);
    assert_eq!(xi.zdegree().unwrap(), 0);

    println!("\n=== Relations among the invariant generators ===");
    println!("xi rho        = {}", xi.mul(&rho));
    println!("rho xi        = {}", rho.mul(&xi));
    println!("xi* xi        = {}", xistar.mul(&xi));
    println!("xi xi*        = {}", xi.mul(&xistar));
    // rho xi = q^-2 xi rho
    assert_eq!(rho.mul(&xi), xi.mul(&rho).scale(&QRat::q_power(-2)));
    // xi* xi = rho (1 + rho), a point on the deformed hyperboloid
    assert_eq!(
        xistar.mul(&xi),
        rho.mul(&AlgElt::one().add(&rho))
    );

    println!("\n=== Projecting onto grades ===");
    let sample = AlgElt::gen_a().mul(&AlgElt::gen_g_star()).add(&AlgElt::gen_a().pow(2));
    for (degree, part) in sample.zdegree_parts() {
        println!("grade {degree:+}: {part}");
    }
    let invariant = sample.zdegree_parts().remove(&0).unwrap();
    println!("invariant part: {invariant}");
    assert_eq!(invariant, xi);

    println!("\n=== The group algebra image ===");
    // the grade projection to the structure circle remembers only z-powers
    for (name, x) in [
        ("a", AlgElt::gen_a()),
        ("a^2 g", AlgElt::gen_a().pow(2).mul(&AlgElt::gen_g())),
        ("rho", rho.clone()),
    ] {
        println!("j({name}) = {}", x.jproject());
    }
}
