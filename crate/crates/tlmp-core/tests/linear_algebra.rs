//! Exact linear algebra: hand-computed values and algebraic properties.

use proptest::prelude::*;
use tlmp_core::exactlinalg::{
    complement_representatives, frac, image_basis, int, kernel_basis, member, quotient_dim, rref, solve, Rational,
    RationalMatrix, SolveOutcome, Subspace,
};

fn m(rows: &[&[i64]]) -> RationalMatrix {
    RationalMatrix::from_i64(rows)
}

#[test]
fn rref_of_a_hand_computed_matrix() {
    // [[2, 4, 6], [1, 3, 5]] reduces to [[1, 0, -1], [0, 1, 2]].
    let r = rref(&m(&[&[2, 4, 6], &[1, 3, 5]]));
    assert_eq!(r.matrix, m(&[&[1, 0, -1], &[0, 1, 2]]));
    assert_eq!(r.pivots, vec![0, 1]);
    assert_eq!(r.rank, 2);
}

#[test]
fn inverse_of_a_hand_computed_matrix() {
    // [[2, 1], [7, 4]]⁻¹ = [[4, -1], [-7, 2]].
    assert_eq!(m(&[&[2, 1], &[7, 4]]).inverse().unwrap(), m(&[&[4, -1], &[-7, 2]]));
    // [[1, 2], [3, 4]]⁻¹ = [[-2, 1], [3/2, -1/2]].
    let inv = m(&[&[1, 2], &[3, 4]]).inverse().unwrap();
    assert_eq!(inv.entries(), &[int(-2), int(1), frac(3, 2), frac(-1, 2)]);
    assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
}

#[test]
fn kernel_and_image_of_a_hand_computed_matrix() {
    let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
    let k = kernel_basis(&a);
    assert_eq!(k.dim(), 1);
    assert_eq!(k.basis()[0], vec![int(-1), int(1), int(0)]);
    assert_eq!(image_basis(&a).dim(), 2);
}

#[test]
fn solve_and_infeasibility() {
    let a = m(&[&[1, 1], &[2, 2]]);
    assert_eq!(solve(&a, &[int(1), int(2)]).unwrap(), SolveOutcome::Solved(vec![int(1), int(0)]));
    assert_eq!(solve(&a, &[int(1), int(3)]).unwrap(), SolveOutcome::Infeasible { rank: 1, augmented_rank: 2 });
    assert!(solve(&a, &[int(1)]).is_err());
}

#[test]
fn quotients_and_complements() {
    let big = Subspace::full(3);
    let small = Subspace::span(3, &[vec![int(1), int(1), int(0)]]).unwrap();
    assert_eq!(quotient_dim(&big, &small).unwrap(), 2);
    let reps = complement_representatives(&big, &small).unwrap();
    assert_eq!(reps.len(), 2);
    assert!(quotient_dim(&small, &big).is_err());
}

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), r * c).prop_map(move |v| {
            let entries: Vec<Rational> = v.into_iter().map(|(n, d)| frac(n, d)).collect();
            RationalMatrix::from_entries(r, c, entries).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(a in matrix_strategy(5, 6)) {
        prop_assert_eq!(a.rank() + kernel_basis(&a).dim(), a.cols());
        prop_assert_eq!(image_basis(&a).dim(), a.rank());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(a in matrix_strategy(5, 6)) {
        for v in kernel_basis(&a).basis() {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn rref_is_idempotent(a in matrix_strategy(5, 6)) {
        let r = rref(&a);
        prop_assert_eq!(rref(&r.matrix).matrix, r.matrix);
    }

    #[test]
    fn solve_returns_true_solutions(a in matrix_strategy(5, 5), x in proptest::collection::vec(-3i64..=3, 5)) {
        let x: Vec<Rational> = x.into_iter().take(a.cols()).map(int).collect();
        let b = a.mul_vec(&x).unwrap();
        match solve(&a, &b).unwrap() {
            SolveOutcome::Solved(y) => prop_assert_eq!(a.mul_vec(&y).unwrap(), b),
            SolveOutcome::Infeasible { .. } => prop_assert!(false, "consistent system reported infeasible"),
        }
    }

    #[test]
    fn inverse_is_two_sided(a in matrix_strategy(4, 4)) {
        if a.is_square() {
            match a.inverse() {
                Some(inv) => {
                    prop_assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(a.rows()));
                    prop_assert_eq!(inv.mul(&a).unwrap(), RationalMatrix::identity(a.rows()));
                }
                None => prop_assert!(a.rank() < a.rows()),
            }
        }
    }

    #[test]
    fn membership_coefficients_reproduce_the_vector(a in matrix_strategy(4, 5)) {
        let s = Subspace::span(a.cols(), &a.to_rows()).unwrap();
        for row in a.to_rows() {
            let coeffs = member(&row, &s).unwrap().expect("row lies in the row space");
            let back = s.basis_matrix().mul_vec(&coeffs).unwrap();
            prop_assert_eq!(back, row);
        }
    }
}
