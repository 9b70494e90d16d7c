//! Gauge Laplacians on sections, eigenvector chains, and the closed
//! eigenvalue tables.

use suq11::algebra::AlgElt;
use suq11::bundles::Section;
use suq11::connection::Qpc;
use suq11::laplacians::{
    chain_eigenvectors, gauge_laplacian_left, left_eigenvalue, left_subdiagonal, spectrum_table,
    ChainOperator,
};

fn main() {
    let omega = Qpc::canonical();

    println!("=== The Laplacian acts bidiagonally on monomial sections ===");
    // on g^k gs^k the image keeps the monomial and adds the next one down
    for k in 1..=3u32 {
        let section = Section::new(AlgElt::basis(0, k, k), 0).unwrap();
        let image = gauge_laplacian_left(&omega, &section);
        println!("box(g^{k} gs^{k}) = {}", image.value());
        let expected = AlgElt::basis(0, k, k)
            .scale(&left_eigenvalue(0, k, k))
            .add(&AlgElt::basis(0, k - 1, k - 1).scale(&left_subdiagonal(0, k, k)));
        assert_eq!(image.value(), &expected);
    }

    println!("\n=== Closed eigenvalue forms ===");
    for k in 0..=3u32 {
        println!("w(0, {k}, {k}) = {}", left_eigenvalue(0, k, k));
    }
    println!("w(2, 1, 0) = {}", left_eigenvalue(2, 1, 0));
    println!("u(-1, 1, 0) = {}", left_eigenvalue(-1, 1, 0));

    println!("\n=== Eigenvectors by back substitution ===");
    let sections: Vec<Section> = (0..=4u32)
        .map(|k| Section::new(AlgElt::basis(0, k, k), 0).unwrap())
        .collect();
    let chain = ChainOperator::from_action(sections, |s| gauge_laplacian_left(&omega, s));
    for (vector, lambda) in chain_eigenvectors(&chain) {
        let image = gauge_laplacian_left(&omega, &vector);
        assert_eq!(image.value(), &vector.value().scale(&lambda));
        println!("lambda = {lambda}");
        println!("  p = {}", vector.value());
    }

    println!("\n=== A spectrum table ===");
    // table 2: the left operator on a positive-weight bundle
    for row in spectrum_table(2, 1, 2).unwrap() {
        println!(
            "family {} at (t, k, l) = ({}, {}, {}): {}",
            row.family, row.t, row.k, row.l, row.eigenvalue
        );
    }
}
