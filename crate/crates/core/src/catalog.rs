//! Small algebras used throughout the tests, the CLI fixtures and the docs.

use crate::algebra::Algebra;
use crate::exact::Rational;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn vecq(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

/// ℚ[x]/(x²) on the basis (1, x).
pub fn dual_numbers() -> Algebra {
    let mul = vec![
        vec![vecq(&[1, 0]), vecq(&[0, 1])],
        vec![vecq(&[0, 1]), vecq(&[0, 0])],
    ];
    Algebra::new("dual_numbers", vec!["1".into(), "x".into()], mul, vecq(&[1, 0])).expect("well-formed")
}

/// ε(a + bx) = b.
pub fn dual_numbers_counit() -> Vec<Rational> {
    vecq(&[0, 1])
}

/// ℚ[ℤ/2] on the basis (1, t) with t² = 1.
pub fn group_z2() -> Algebra {
    let mul = vec![
        vec![vecq(&[1, 0]), vecq(&[0, 1])],
        vec![vecq(&[0, 1]), vecq(&[1, 0])],
    ];
    Algebra::new("group_z2", vec!["1".into(), "t".into()], mul, vecq(&[1, 0])).expect("well-formed")
}

/// Coefficient of the identity element.
pub fn group_z2_counit() -> Vec<Rational> {
    vecq(&[1, 0])
}

/// 2×2 matrices on the basis (E11, E12, E21, E22); `E_ab` has index `2a + b`.
pub fn mat2() -> Algebra {
    let mut mul = vec![vec![vec![q(0); 4]; 4]; 4];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        mul[2 * a + b][2 * c + d][2 * a + d] = q(1);
                    }
                }
            }
        }
    }
    let basis = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
    Algebra::new("mat2", basis, mul, vecq(&[1, 0, 0, 1])).expect("well-formed")
}

/// The trace, ε(E_ij) = δ_ij.
pub fn mat2_trace() -> Vec<Rational> {
    vecq(&[1, 0, 0, 1])
}

/// ε(a) = tr(P a) with P = [[1, 1], [0, 1]]: nondegenerate but not symmetric.
pub fn mat2_twisted_trace() -> Vec<Rational> {
    // tr(P E_ab) = P[b][a]
    vecq(&[1, 0, 1, 1])
}
