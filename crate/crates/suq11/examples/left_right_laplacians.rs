//! The left and right gauge Laplacians side by side: star conjugacy, the
//! diagonal gap identity, and their exact commutator.

use suq11::algebra::AlgElt;
use suq11::bundles::Section;
use suq11::coeffs::{qint, QRat};
use suq11::connection::Qpc;
use suq11::laplacians::{
    commutator_scalar, gauge_commutator, gauge_laplacian_left, gauge_laplacian_right,
    left_eigenvalue, left_subdiagonal, right_eigenvalue, right_subdiagonal,
};

fn main() {
    let omega = Qpc::canonical();

    println!("=== The two operators on one section ===");
    let section = Section::new(AlgElt::basis(2, 1, 1), 2).unwrap();
    println!("T            = {}", section.value());
    println!("box(T)       = {}", gauge_laplacian_left(&omega, &section).value());
    println!("box_hat(T)   = {}", gauge_laplacian_right(&omega, &section).value());

    println!("\n=== Star conjugacy ===");
    // the right operator is the star conjugate of the left one
    let mirrored = Section::new(section.value().star(), -2).unwrap();
    let conjugated = gauge_laplacian_left(&omega, &mirrored).value().star();
    assert_eq!(gauge_laplacian_right(&omega, &section).value(), &conjugated);
    println!("box_hat(T) = (box(T*))* holds");

    println!("\n=== Why the operators commute ===");
    // on every monomial chain both operators are lower bidiagonal; their
    // subdiagonals agree up to q^{2n} and their diagonals differ by a
    // constant gap, so the matrices commute
    let n = 2i64;
    for (t, k, l) in [(2i64, 1u32, 1u32), (3, 2, 3), (0, 2, 0)] {
        let gap = left_eigenvalue(t, k, l).sub(&right_eigenvalue(t, k, l).mul(&QRat::q_power(2 * n)));
        let expected = qint(n as u32).mul(&QRat::one().sub(&QRat::q_power(4)));
        println!("w(t,k,l) - q^{{2n}} w_hat(t,k,l) at ({t}, {k}, {l}) = {gap}");
        assert_eq!(gap, expected);
        assert_eq!(
            left_subdiagonal(t, k, l),
            right_subdiagonal(t, k, l).mul(&QRat::q_power(2 * n))
        );
    }

    println!("\n=== The commutator in closed form and by the operators ===");
    for n in [1i64, 2, 3, -1] {
        println!("commutator scalar at n = {n}: {}", commutator_scalar(n));
        assert!(commutator_scalar(n).is_zero());
        let section = Section::new(AlgElt::basis(n, 1, 1), n).unwrap();
        let residue = gauge_commutator(&section);
        println!("[box_hat, box] a^{n} g gs = {}", residue.value());
        assert!(residue.value().is_zero());
    }

    println!("\n=== Shared eigenvectors ===");
    // because they commute with matching chains, both operators are
    // diagonalized by the same vectors with different eigenvalues
    let s = Section::new(
        AlgElt::basis(1, 1, 1).sub(&AlgElt::basis(1, 0, 0).scale(&left_subdiagonal(1, 1, 1).div(
            &left_eigenvalue(1, 0, 0).sub(&left_eigenvalue(1, 1, 1)),
        ))),
        1,
    )
    .unwrap();
    let left_image = gauge_laplacian_left(&omega, &s);
    let right_image = gauge_laplacian_right(&omega, &s);
    assert_eq!(left_image.value(), &s.value().scale(&left_eigenvalue(1, 1, 1)));
    assert_eq!(right_image.value(), &s.value().scale(&right_eigenvalue(1, 1, 1)));
    println!("p                = {}", s.value());
    println!("box eigenvalue      = {}", left_eigenvalue(1, 1, 1));
    println!("box_hat eigenvalue  = {}", right_eigenvalue(1, 1, 1));
}
