//! Cross-checks between the exhaustive searches and the closed forms:
//! symmetry reduction never changes the optimum, two-factor optima match
//! the formula, and the restricted searches sit above the free one.

use idcode::constructions::two_factor_gamma_id;
use idcode::hamming::Radices;
use idcode::search::{
    min_group_identifying_code, min_identifying_code, min_linear_identifying_code, SearchOptions,
};

fn radices(dims: &[u32]) -> Radices {
    Radices::new(dims.to_vec()).unwrap()
}

fn search(dims: &[u32], symmetry: bool) -> idcode::search::SearchReport {
    let opts = SearchOptions { symmetry_reduction: symmetry, ..SearchOptions::default() };
    min_identifying_code(&radices(dims), &opts).unwrap()
}

#[test]
fn symmetry_reduction_does_not_change_the_optimum() {
    for dims in [
        vec![2u32, 2],
        vec![2, 3],
        vec![2, 4],
        vec![2, 5],
        vec![3, 3],
        vec![3, 4],
        vec![2, 2, 2],
        vec![2, 2, 3],
    ] {
        let with = search(&dims, true);
        let without = search(&dims, false);
        assert_eq!(with.optimum, without.optimum, "{dims:?}");
        // The canonical witness contains vertex 0 either way, so the two
        // scans land on the same code.
        assert_eq!(
            with.witness.indices().collect::<Vec<usize>>(),
            without.witness.indices().collect::<Vec<usize>>()
        );
        assert!(without.explored >= with.explored);
    }
}

#[test]
fn two_factor_optima_match_the_closed_form() {
    for a in 2u32..=4 {
        for b in a..=4 {
            let report = search(&[a, b], true);
            assert_eq!(report.optimum, two_factor_gamma_id(a, b).unwrap() as usize, "({a},{b})");
            assert_eq!(report.witness.len(), report.optimum);
        }
    }
}

#[test]
fn repeated_runs_return_identical_reports() {
    for dims in [vec![3u32, 3], vec![2, 2, 3]] {
        let first = search(&dims, true);
        let second = search(&dims, true);
        assert_eq!(first.optimum, second.optimum);
        assert_eq!(
            first.witness.indices().collect::<Vec<usize>>(),
            second.witness.indices().collect::<Vec<usize>>()
        );
        assert_eq!(first.explored, second.explored);
        assert_eq!(first.bound_used, second.bound_used);
    }
}

#[test]
fn restricted_searches_sit_above_the_free_one() {
    for dims in [vec![2u32, 2], vec![2, 3], vec![3, 3], vec![2, 2, 2]] {
        let r = radices(&dims);
        let free = search(&dims, true);
        let group = min_group_identifying_code(&r).unwrap();
        assert!(group.optimum >= free.optimum, "{dims:?}");
    }
}

#[test]
fn linear_and_group_optima_coincide_on_prime_spaces() {
    for (p, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
        let r = radices(&vec![p; n]);
        let (linear, dim) = min_linear_identifying_code(p, n).unwrap();
        let group = min_group_identifying_code(&r).unwrap();
        assert_eq!(linear.optimum, group.optimum, "p={p}, n={n}");
        assert_eq!(linear.optimum, (p as usize).pow(dim as u32));
    }
}
