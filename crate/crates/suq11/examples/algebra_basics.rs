//! Generators, defining relations, and normal ordering in the q-deformed
//! coordinate algebra.

use suq11::algebra::AlgElt;
use suq11::coeffs::QRat;

fn main() {
    let a = AlgElt::gen_a();
    let astar = AlgElt::gen_a_star();
    let g = AlgElt::gen_g();
    let gstar = AlgElt::gen_g_star();

    println!("=== Defining relations ===");
    println!("as a - gs g   = {}", astar.mul(&a).sub(&gstar.mul(&g)));
    println!(
        "a as - q^2 g gs = {}",
        a.mul(&astar).sub(&g.mul(&gstar).scale(&QRat::q_power(2)))
    );
    println!("g gs - gs g   = {}", g.mul(&gstar).sub(&gstar.mul(&g)));
    assert_eq!(a.mul(&astar).sub(&g.mul(&gstar).scale(&QRat::q_power(2))), AlgElt::one());

    println!("\n=== Normal ordering ===");
    // every product lands in the ordered basis a^m g^k gs^l
    println!("g a      = {}", g.mul(&a));
    println!("gs a     = {}", gstar.mul(&a));
    println!("a gs g a = {}", a.mul(&gstar).mul(&g).mul(&a));
    assert_eq!(g.mul(&a), a.mul(&g).scale(&QRat::q_power(-1)));

    println!("\n=== Inverse powers of a ===");
    // as acts as the inverse of a up to the gamma ideal, and a^-m means as^m
    println!("a as       = {}", a.mul(&astar));
    println!("a^-2       = {}", AlgElt::basis(-2, 0, 0));
    println!("a^-2 a^3   = {}", AlgElt::basis(-2, 0, 0).mul(&a.pow(3)));

    println!("\n=== Grading ===");
    // the circle coaction grades a, g with +1 and their stars with -1
    for (name, x) in [("a", &a), ("as", &astar), ("g gs", &g.mul(&gstar)), ("a g", &a.mul(&g))] {
        println!("deg({name}) = {:?}", x.zdegree().unwrap());
    }
    let mixed = a.add(&g.mul(&gstar));
    println!("a + g gs splits into {} graded parts", mixed.zdegree_parts().len());
    assert_eq!(mixed.zdegree_parts().len(), 2);
}
