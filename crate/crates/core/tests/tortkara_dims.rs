//! Free Tortkara dimensions, special images and left-normed ranks in the
//! degrees small enough to compute quickly.

use zinbiel_core::criteria::dim_st;
use zinbiel_core::tortkara::{
    bracket_evaluation_span, free_tortkara_multilinear_dim, left_normed_rank, multilinear_ac_basis,
    s_identity_scan, tortkara_consequence_span,
};
use zinbiel_core::MultiDegree;

#[test]
fn double_factorial_counts() {
    let mut expected = 1usize;
    for n in 2..=6u32 {
        assert_eq!(multilinear_ac_basis(n).len(), expected, "n={n}");
        expected *= 2 * n as usize - 1;
    }
}

#[test]
fn free_dimension_degree_five() {
    assert_eq!(free_tortkara_multilinear_dim(5).unwrap(), 60);
}

#[test]
fn free_dimension_degree_six() {
    let cons = tortkara_consequence_span(6).unwrap();
    assert_eq!(cons.ambient_dim() - cons.rank(), 360);
}

#[test]
fn no_special_identities_through_degree_five() {
    for n in 3..=5 {
        let s = s_identity_scan(n).unwrap();
        assert!(s.consequences_vanish, "n={n}");
        assert_eq!(s.image_rank, s.special_dim, "n={n}");
        assert_eq!(s.free_dim, s.special_dim, "n={n}");
        assert!(s.kernel.is_empty(), "n={n}");
    }
}

#[test]
fn left_normed_ranks() {
    for n in 2..=10 {
        assert_eq!(left_normed_rank(n).unwrap(), 1 << (n - 2), "n={n}");
    }
}

#[test]
fn bracket_span_rank_is_dim_st() {
    for counts in [vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![2, 2, 1]] {
        let d = MultiDegree::from_counts(&counts);
        let span = bracket_evaluation_span(&d).unwrap();
        assert_eq!(span.rank() as u64, dim_st(&d).unwrap(), "{counts:?}");
    }
}
