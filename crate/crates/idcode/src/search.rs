//! Exact minimizers: identifying codes by pruned subset search, group
//! identifying codes by subgroup enumeration, linear identifying codes by
//! subspace enumeration.
//!
//! Every search enumerates candidates in a fixed canonical order and
//! returns the first optimum it meets, so identical inputs always produce
//! identical witnesses.

use crate::algebra::{self, Subgroup};
use crate::codesets::{self, Code, IdentifyingViolation};
use crate::constructions::generic_id_lower_bound;
use crate::hamming::Radices;
use crate::{Error, Result};

/// Default ceiling on vertex count for the exhaustive subset search.
pub const DEFAULT_SUBSET_CAP: usize = 36;

/// Tuning knobs for the exhaustive subset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Refuse graphs with more vertices than this. The subset search packs
    /// vertex sets into 64-bit masks, so values above 64 are still cut
    /// off at 64.
    pub vertex_cap: usize,
    /// Require candidate codes to contain vertex 0. Safe because
    /// translating a code by a group element preserves the identifying
    /// property, so some optimum contains 0; cuts the search space by a
    /// factor of about q/k.
    pub symmetry_reduction: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { vertex_cap: DEFAULT_SUBSET_CAP, symmetry_reduction: true }
    }
}

/// Outcome of an exact minimization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    /// Minimum code size.
    pub optimum: usize,
    /// First optimal code in canonical enumeration order.
    pub witness: Code,
    /// Complete candidates tested against the target predicate.
    pub explored: u64,
    /// Lower bound that seeded the ascending-cardinality search.
    pub bound_used: usize,
}

/// Existence result for an identifying subgroup strictly between the
/// trivial subgroup and the full group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperGidOutcome {
    /// First proper identifying subgroup in canonical order.
    Found { witness: Subgroup },
    /// Every proper subgroup fails; each is paired with the violation
    /// that disqualifies it.
    Absent { failures: Vec<(Subgroup, IdentifyingViolation)> },
}

/// Minimum identifying code, by exhaustive search over vertex subsets in
/// ascending cardinality and canonical order.
///
/// Candidates are enumerated as sorted index sets; partial sets that can
/// no longer dominate the graph (some vertex has no neighbor among the
/// remaining candidate indices) are pruned. The search starts at the
/// domination lower bound ceil(q / (degree + 1)).
pub fn min_identifying_code(radices: &Radices, opts: &SearchOptions) -> Result<SearchReport> {
    if radices.n() < 2 {
        return Err(Error::NotTwinFree);
    }
    let q = radices.vertex_count();
    let cap = opts.vertex_cap.min(64);
    if q > cap {
        return Err(Error::CapExceeded { needed: q as u128, cap });
    }
    let nbr: Vec<u64> = (0..q)
        .map(|v| {
            radices
                .closed_neighborhood_indices(v)
                .into_iter()
                .fold(0u64, |m, idx| m | 1 << idx)
        })
        .collect();
    let full: u64 = if q == 64 { !0 } else { (1u64 << q) - 1 };
    let mut reach = vec![0u64; q + 1];
    for i in (0..q).rev() {
        reach[i] = reach[i + 1] | nbr[i];
    }
    let bound = generic_id_lower_bound(q as u128, radices.degree() as u128, 1, 1)? as usize;
    let mut explored = 0u64;
    for k in bound..=q {
        let found = if opts.symmetry_reduction && k >= 1 {
            descend(q, &nbr, &reach, full, 1, nbr[0], 1, k - 1, &mut explored)
        } else {
            descend(q, &nbr, &reach, full, 0, 0, 0, k, &mut explored)
        };
        if let Some(mask) = found {
            let witness =
                Code::from_indices(radices.clone(), (0..q).filter(|&v| mask >> v & 1 == 1))?;
            assert!(codesets::is_identifying(&witness));
            return Ok(SearchReport { optimum: k, witness, explored, bound_used: bound });
        }
    }
    unreachable!("the full vertex set identifies every twin-free graph");
}

fn descend(
    q: usize,
    nbr: &[u64],
    reach: &[u64],
    full: u64,
    code: u64,
    covered: u64,
    start: usize,
    remaining: usize,
    explored: &mut u64,
) -> Option<u64> {
    if remaining == 0 {
        *explored += 1;
        return distinguishes_all(q, nbr, code, covered, full).then_some(code);
    }
    for i in start..=q - remaining {
        if covered | reach[i] != full {
            break;
        }
        if let Some(hit) = descend(
            q,
            nbr,
            reach,
            full,
            code | 1 << i,
            covered | nbr[i],
            i + 1,
            remaining - 1,
            explored,
        ) {
            return Some(hit);
        }
    }
    None
}

fn distinguishes_all(q: usize, nbr: &[u64], code: u64, covered: u64, full: u64) -> bool {
    if covered != full {
        return false;
    }
    let mut signatures = [0u64; 64];
    for v in 0..q {
        signatures[v] = nbr[v] & code;
    }
    signatures[..q].sort_unstable();
    signatures[..q].windows(2).all(|w| w[0] != w[1])
}

/// Minimum identifying subgroup, by scanning all subgroups in ascending
/// (order, member list) order.
///
/// In a twin-free graph the full group always qualifies, so a result
/// exists whenever there are at least two coordinates.
pub fn min_group_identifying_code(radices: &Radices) -> Result<SearchReport> {
    min_group_identifying_code_capped(radices, algebra::DEFAULT_ENUMERATION_CAP)
}

/// Like [`min_group_identifying_code`] with an explicit group-order cap.
pub fn min_group_identifying_code_capped(radices: &Radices, cap: usize) -> Result<SearchReport> {
    let q = radices.vertex_count();
    let bound = generic_id_lower_bound(q as u128, radices.degree() as u128, 1, 1)? as usize;
    let mut explored = 0u64;
    for h in algebra::enumerate_subgroups_capped(radices, cap)? {
        explored += 1;
        if codesets::is_identifying(h.code()) {
            return Ok(SearchReport {
                optimum: h.order(),
                witness: h.into_code(),
                explored,
                bound_used: bound,
            });
        }
    }
    debug_assert!(radices.n() < 2, "the full group identifies every twin-free graph");
    Err(Error::NoGroupIdentifyingCode)
}

/// Minimum linear identifying code of F_p^n, by scanning all subspaces in
/// ascending dimension. Returns the report (optimum = p^t) and the
/// dimension t.
pub fn min_linear_identifying_code(p: u32, n: usize) -> Result<(SearchReport, usize)> {
    min_linear_identifying_code_capped(p, n, algebra::DEFAULT_ENUMERATION_CAP)
}

/// Like [`min_linear_identifying_code`] with an explicit cap on p^n.
pub fn min_linear_identifying_code_capped(
    p: u32,
    n: usize,
    cap: usize,
) -> Result<(SearchReport, usize)> {
    if n < 2 {
        return Err(Error::NotTwinFree);
    }
    let radices = Radices::new(vec![p; n])?;
    let q = radices.vertex_count();
    let bound = generic_id_lower_bound(q as u128, radices.degree() as u128, 1, 1)? as usize;
    let mut explored = 0u64;
    for t in 0..=n {
        for g in algebra::enumerate_subspaces_capped(p, n, t, cap)? {
            explored += 1;
            let code = algebra::codewords_from_generator(&g)?;
            if codesets::is_identifying(&code) {
                debug_assert_eq!(t, crate::constructions::kappa(n, p)?);
                return Ok((
                    SearchReport { optimum: code.len(), witness: code, explored, bound_used: bound },
                    t,
                ));
            }
        }
    }
    unreachable!("the full space identifies every twin-free graph");
}

/// Looks for an identifying subgroup strictly between {0} and the full
/// group. Either the first such subgroup in canonical order, or the full
/// list of proper subgroups annotated with their violations.
pub fn proper_gid_existence(radices: &Radices) -> Result<ProperGidOutcome> {
    proper_gid_existence_capped(radices, algebra::DEFAULT_ENUMERATION_CAP)
}

/// Like [`proper_gid_existence`] with an explicit group-order cap.
pub fn proper_gid_existence_capped(radices: &Radices, cap: usize) -> Result<ProperGidOutcome> {
    let q = radices.vertex_count();
    let mut failures = Vec::new();
    for h in algebra::enumerate_subgroups_capped(radices, cap)? {
        if h.order() == 1 || h.order() == q {
            continue;
        }
        match codesets::find_identifying_violation(h.code()) {
            None => return Ok(ProperGidOutcome::Found { witness: h }),
            Some(violation) => failures.push((h, violation)),
        }
    }
    Ok(ProperGidOutcome::Absent { failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn radices(dims: &[u32]) -> Radices {
        Radices::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn subset_search_reproduces_two_factor_values() {
        let opts = SearchOptions::default();
        let r = min_identifying_code(&radices(&[2, 2]), &opts).unwrap();
        assert_eq!(r.optimum, 3);
        assert_eq!(r.bound_used, 2);
        assert!(r.explored > 0);
        assert_eq!(min_identifying_code(&radices(&[3, 3]), &opts).unwrap().optimum, 4);
        assert_eq!(min_identifying_code(&radices(&[2, 3]), &opts).unwrap().optimum, 4);
    }

    #[test]
    fn subset_search_handles_the_binary_cube() {
        let r = min_identifying_code(&radices(&[2, 2, 2]), &SearchOptions::default()).unwrap();
        assert_eq!(r.optimum, 4);
        assert!(r.witness.contains_index(0));
    }

    #[test]
    fn subset_search_witness_is_canonical_least() {
        let opts = SearchOptions { symmetry_reduction: false, ..SearchOptions::default() };
        let with = min_identifying_code(&radices(&[2, 2]), &SearchOptions::default()).unwrap();
        let without = min_identifying_code(&radices(&[2, 2]), &opts).unwrap();
        assert_eq!(with.optimum, without.optimum);
        assert_eq!(with.witness, without.witness);
        let indices: Vec<usize> = with.witness.indices().collect();
        assert_eq!(indices, vec![0, 1, 2]);
    }

    #[test]
    fn subset_search_guards_scope() {
        assert_eq!(
            min_identifying_code(&radices(&[5]), &SearchOptions::default()).unwrap_err(),
            Error::NotTwinFree
        );
        assert_eq!(
            min_identifying_code(&radices(&[7, 6]), &SearchOptions::default()).unwrap_err(),
            Error::CapExceeded { needed: 42, cap: 36 }
        );
        let raised = SearchOptions { vertex_cap: 100, ..SearchOptions::default() };
        assert_eq!(
            min_identifying_code(&radices(&[9, 8]), &raised).unwrap_err(),
            Error::CapExceeded { needed: 72, cap: 64 }
        );
    }

    #[test]
    fn subgroup_search_finds_known_optima() {
        let r = min_group_identifying_code(&radices(&[3, 3, 3])).unwrap();
        assert_eq!(r.optimum, 9);
        assert!(algebra::is_group_identifying(&r.witness));

        let r = min_group_identifying_code(&radices(&[2, 2, 2])).unwrap();
        assert_eq!(r.optimum, 4);

        let full_only = min_group_identifying_code(&radices(&[2, 3])).unwrap();
        assert_eq!(full_only.optimum, 6);
        let full_only = min_group_identifying_code(&radices(&[4, 2])).unwrap();
        assert_eq!(full_only.optimum, 8);
    }

    #[test]
    fn subgroup_search_orders_reports_deterministically() {
        let a = min_group_identifying_code(&radices(&[3, 3, 3])).unwrap();
        let b = min_group_identifying_code(&radices(&[3, 3, 3])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn no_group_code_on_a_single_clique() {
        assert_eq!(
            min_group_identifying_code(&radices(&[5])).unwrap_err(),
            Error::NoGroupIdentifyingCode
        );
    }

    #[test]
    fn subspace_search_finds_known_optima() {
        let (r, dim) = min_linear_identifying_code(3, 3).unwrap();
        assert_eq!((r.optimum, dim), (9, 2));
        let (r, dim) = min_linear_identifying_code(2, 3).unwrap();
        assert_eq!((r.optimum, dim), (4, 2));
        assert!(algebra::is_linear_code(&r.witness).unwrap());
        assert!(codesets::is_identifying(&r.witness));
    }

    #[test]
    fn subspace_search_scans_length_four() {
        let (r, dim) = min_linear_identifying_code(3, 4).unwrap();
        assert_eq!((r.optimum, dim), (27, 3));
        assert!(r.explored > 130);
    }

    #[test]
    fn proper_subgroup_existence_matches_known_cases() {
        for dims in [[2u32, 3], [3, 4], [2, 5], [4, 2]] {
            match proper_gid_existence(&radices(&dims)).unwrap() {
                ProperGidOutcome::Absent { failures } => assert!(!failures.is_empty()),
                ProperGidOutcome::Found { witness } => {
                    panic!("unexpected proper identifying subgroup {witness}")
                }
            }
        }
        match proper_gid_existence(&radices(&[4, 4])).unwrap() {
            ProperGidOutcome::Found { witness } => {
                assert_eq!(witness.order(), 8);
                let r = radices(&[4, 4]);
                for v in r.vertices() {
                    let even = (v.coords()[0] + v.coords()[1]) % 2 == 0;
                    assert_eq!(witness.code().contains(&v).unwrap(), even);
                }
            }
            ProperGidOutcome::Absent { .. } => panic!("expected an order-8 witness"),
        }
    }

    #[test]
    fn coprime_failure_list_is_annotated() {
        let ProperGidOutcome::Absent { failures } =
            proper_gid_existence(&radices(&[3, 2])).unwrap()
        else {
            panic!("no proper subgroup of Z_3 x Z_2 identifies");
        };
        assert_eq!(failures.len(), 2);
        for (h, violation) in &failures {
            assert!(h.order() == 2 || h.order() == 3);
            assert!(matches!(
                violation,
                IdentifyingViolation::Undominated(_) | IdentifyingViolation::Unseparated(_, _)
            ));
        }
    }

    #[test]
    fn group_optimum_never_beats_free_optimum() {
        for dims in [vec![2u32, 2], vec![2, 3], vec![3, 3], vec![2, 2, 2]] {
            let r = radices(&dims);
            let free = min_identifying_code(&r, &SearchOptions::default()).unwrap();
            let group = min_group_identifying_code(&r).unwrap();
            assert!(group.optimum >= free.optimum);
        }
    }
}
