//! Evaluating the exact eigenvalues at rational points of q, including the
//! classical point q = 1.

use suq11::coeffs::{rat, ratio};
use suq11::laplacians::{left_eigenvalue, right_eigenvalue, spectrum_table};

fn main() {
    println!("=== Weight-zero eigenvalues across q ===");
    // every eigenvalue is a Laurent polynomial in q, so it evaluates at any
    // nonzero rational point; q = 1 is the classical limit
    let points = [ratio(1, 2), ratio(9, 10), rat(1)];
    for k in 1..=4u32 {
        let w = left_eigenvalue(0, k, k);
        print!("w(0, {k}, {k}) = {w}");
        for q0 in &points {
            print!("  | at q={q0}: {}", w.eval(q0).unwrap());
        }
        println!();
    }

    println!("\n=== The q = 1 values grow quadratically in k ===");
    // at q = 1 the weight-zero family evaluates to -(2k + 2k^2)
    for k in 0..=5i64 {
        let value = left_eigenvalue(0, k as u32, k as u32).eval(&rat(1)).unwrap();
        println!("k = {k}: {value}");
        assert_eq!(value, rat(-(2 * k + 2 * k * k)));
    }

    println!("\n=== No poles anywhere on the grid ===");
    let mut evaluated = 0;
    for t in -3..=3i64 {
        for k in 0..=3u32 {
            for l in 0..=3u32 {
                assert!(left_eigenvalue(t, k, l).eval(&rat(1)).is_ok());
                assert!(right_eigenvalue(t, k, l).eval(&rat(1)).is_ok());
                evaluated += 2;
            }
        }
    }
    println!("{evaluated} eigenvalues evaluate cleanly at q = 1");

    println!("\n=== A table at q = 1/2 ===");
    let q0 = ratio(1, 2);
    for row in spectrum_table(1, 0, 2).unwrap() {
        println!(
            "({}, {}, {}) {}: {}",
            row.t,
            row.k,
            row.l,
            row.family,
            row.eigenvalue.eval(&q0).unwrap()
        );
    }
}
