//! Coproduct, counit, antipode, and star on the quantum group.

use suq11::algebra::{AlgElt, TensorElt};

fn main() {
    let a = AlgElt::gen_a();
    let g = AlgElt::gen_g();

    println!("=== Coproduct ===");
    println!("Delta(a) = {}", a.coproduct());
    println!("Delta(g) = {}", g.coproduct());
    let p = a.mul(&g);
    println!("Delta(a g) = {}", p.coproduct());
    // Delta is an algebra map
    assert_eq!(p.coproduct(), a.coproduct().mul(&g.coproduct()));

    println!("\n=== Counit ===");
    for (name, x) in [("a", &a), ("g", &g), ("a g", &p)] {
        println!("eps({name}) = {}", x.counit());
    }

    println!("\n=== Antipode ===");
    println!("S(a)  = {}", a.antipode());
    println!("S(g)  = {}", g.antipode());
    println!("S(a g) = {}", p.antipode());
    // S is an anti-homomorphism
    assert_eq!(p.antipode(), g.antipode().mul(&a.antipode()));

    // the antipode axiom: m (S (x) id) Delta = eps * 1
    println!("\n=== Antipode axiom ===");
    for (name, x) in [("a", a.clone()), ("g g*", g.mul(&AlgElt::gen_g_star()))] {
        let mut folded = AlgElt::zero();
        for ((m1, m2), c) in x.coproduct().terms() {
            let left = AlgElt::basis(m1.a, m1.k, m1.l).antipode();
            let right = AlgElt::basis(m2.a, m2.k, m2.l);
            folded = folded.add(&left.mul(&right).scale(c));
        }
        let expected = AlgElt::scalar(x.counit());
        println!("m(S (x) id)Delta({name}) = {folded}");
        assert_eq!(folded, expected);
    }

    println!("\n=== Star structure ===");
    println!("a*      = {}", a.star());
    println!("(a g)*  = {}", p.star());
    assert_eq!(p.star(), g.star().mul(&a.star()));
    assert_eq!(p.star().star(), p);

    println!("\n=== Tensor arithmetic ===");
    let t = TensorElt::of(&a, &g);
    println!("a (x) g squared = {}", t.mul(&t));
}
