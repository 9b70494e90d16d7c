//! Weight-n line bundles: sections, module generators, dual systems, and
//! free decompositions of derivative images.

use suq11::algebra::AlgElt;
use suq11::bundles::{
    basis_section, decompose_left, decompose_right, dual_left, dual_right, recompose_left,
    Section,
};
use suq11::connection::covariant_derivative;
use suq11::forms::Form;

fn main() {
    println!("=== Module generators per weight ===");
    for n in [2i64, -2] {
        for j in 0..=2u32 {
            let section = basis_section(n, j);
            println!("T^{j}_{n}(1) = {}", section.value());
        }
    }
    // sections carry their weight and check it
    assert!(Section::new(AlgElt::gen_a(), 1).is_ok());
    assert!(Section::new(AlgElt::gen_a(), 2).is_err());

    println!("\n=== Dual systems resolve the unit ===");
    for n in [1i64, 2, -1, 3] {
        let left = dual_left(n);
        let mut sum = AlgElt::zero();
        for (j, x) in left.gens.iter().enumerate() {
            sum = sum.add(&x.mul(basis_section(n, j as u32).value()));
        }
        println!("sum_j x_{{{n}j}} T^j(1) = {sum}");
        assert_eq!(sum, AlgElt::one());

        let right = dual_right(n);
        let mut sum = AlgElt::zero();
        for (j, y) in right.gens.iter().enumerate() {
            sum = sum.add(&basis_section(n, j as u32).value().mul(y));
        }
        assert_eq!(sum, AlgElt::one());
    }
    println!("left duals at n = 1: x_10 = {}, x_11 = {}", dual_left(1).gens[0], dual_left(1).gens[1]);

    println!("\n=== Decomposing a derivative image ===");
    // D maps weight-n sections to weight-n horizontal forms, which split
    // over the generators with base-form coordinates
    let n = 2;
    let section = basis_section(n, 0);
    let phi = covariant_derivative(&Form::from_alg(section.value().clone())).unwrap();
    println!("D(a^2) = {phi}");
    let parts = decompose_left(&phi, n).unwrap();
    for (coeff, j) in &parts {
        println!("  coordinate on T^{j}: {coeff}");
        assert!(coeff.is_base());
    }
    assert_eq!(recompose_left(&parts, n), phi);

    let parts = decompose_right(&phi, n).unwrap();
    println!("right coordinates found for {} generators", parts.len());

    // weight mismatches are refused
    assert!(decompose_left(&phi, 1).is_err());
}
