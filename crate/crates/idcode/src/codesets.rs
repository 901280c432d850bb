//! Codes over Hamming graphs, their J-sets, and every code predicate:
//! dominating, separating, identifying, twin-free, self-locating-dominating,
//! self-identifying, plus two sufficient conditions for identification.
//!
//! Every `find_*` function scans canonical vertex indices in descending
//! order, so the reported witness is deterministic: the violation with the
//! largest primary vertex, then the largest partner.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::hamming::{Radices, Vertex};
use crate::{Error, Result};

/// A set of vertices of one Hamming graph, stored as a bitset over canonical
/// indices. Equality and hashing are bit-exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Code {
    radices: Radices,
    bits: FixedBitSet,
}

impl Code {
    pub fn new(radices: Radices) -> Self {
        let bits = FixedBitSet::with_capacity(radices.vertex_count());
        Code { radices, bits }
    }

    /// The code containing every vertex.
    pub fn full(radices: Radices) -> Self {
        let mut code = Code::new(radices);
        code.bits.insert_range(..);
        code
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(radices: Radices, members: I) -> Result<Self> {
        let mut code = Code::new(radices);
        for v in members {
            code.insert(&v)?;
        }
        Ok(code)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(radices: Radices, indices: I) -> Result<Self> {
        let mut code = Code::new(radices);
        for i in indices {
            code.insert_index(i)?;
        }
        Ok(code)
    }

    pub fn radices(&self) -> &Radices {
        &self.radices
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Inserts a member; true when it was not already present.
    pub fn insert(&mut self, v: &Vertex) -> Result<bool> {
        let idx = self.radices.vertex_index(v)?;
        Ok(!self.bits.put(idx))
    }

    pub fn insert_index(&mut self, index: usize) -> Result<bool> {
        if index >= self.radices.vertex_count() {
            return Err(Error::IndexOutOfRange { index, count: self.radices.vertex_count() });
        }
        Ok(!self.bits.put(index))
    }

    /// Removes a member; true when it was present.
    pub fn remove(&mut self, v: &Vertex) -> Result<bool> {
        let idx = self.radices.vertex_index(v)?;
        let had = self.bits.contains(idx);
        self.bits.remove(idx);
        Ok(had)
    }

    pub fn contains(&self, v: &Vertex) -> Result<bool> {
        Ok(self.bits.contains(self.radices.vertex_index(v)?))
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    /// Members in canonical index order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones().map(|i| self.radices.index_vertex(i).unwrap())
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    fn check_same_radices(&self, other: &Code) -> Result<()> {
        if self.radices != other.radices {
            return Err(Error::InvalidArgument(
                "set operation on codes over different radices".into(),
            ));
        }
        Ok(())
    }

    pub fn union(&self, other: &Code) -> Result<Code> {
        self.check_same_radices(other)?;
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        Ok(out)
    }

    pub fn intersection(&self, other: &Code) -> Result<Code> {
        self.check_same_radices(other)?;
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        Ok(out)
    }

    pub fn difference(&self, other: &Code) -> Result<Code> {
        self.check_same_radices(other)?;
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        Ok(out)
    }

    pub fn complement(&self) -> Code {
        let mut out = Code::full(self.radices.clone());
        out.bits.difference_with(&self.bits);
        out
    }
}

/// J_C(v): the members of C inside the closed neighborhood of its owner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JSet {
    owner: Vertex,
    members: Vec<Vertex>,
}

impl JSet {
    pub fn owner(&self) -> &Vertex {
        &self.owner
    }

    /// Members in canonical index order.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for JSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Member indices of J_C at the vertex with canonical index `idx`, ascending.
pub(crate) fn j_indices(c: &Code, idx: usize) -> Vec<usize> {
    c.radices()
        .closed_neighborhood_indices(idx)
        .into_iter()
        .filter(|&i| c.contains_index(i))
        .collect()
}

pub fn j_set(c: &Code, u: &Vertex) -> Result<JSet> {
    let idx = c.radices().vertex_index(u)?;
    let members =
        j_indices(c, idx).into_iter().map(|i| c.radices().index_vertex(i).unwrap()).collect();
    Ok(JSet { owner: u.clone(), members })
}

/// The undominated vertex of largest canonical index, if any.
pub fn find_undominated(c: &Code) -> Option<Vertex> {
    let r = c.radices();
    (0..r.vertex_count())
        .rev()
        .find(|&idx| j_indices(c, idx).is_empty())
        .map(|idx| r.index_vertex(idx).unwrap())
}

pub fn is_dominating(c: &Code) -> bool {
    find_undominated(c).is_none()
}

/// The unseparated pair (x, y) with x > y maximizing (x, y), if any.
///
/// Only pairs at distance <= 2 can share a nonempty J-set (their closed
/// neighborhoods are disjoint otherwise), so the scan is restricted to such
/// pairs; vertices with empty J-sets are collected separately since any two
/// of them are unseparated at every distance.
pub fn find_unseparated_pair(c: &Code) -> Option<(Vertex, Vertex)> {
    let r = c.radices();
    let q = r.vertex_count();
    let empties: Vec<usize> = (0..q).rev().filter(|&i| j_indices(c, i).is_empty()).collect();
    for x in (0..q).rev() {
        let jx = j_indices(c, x);
        let mut best: Option<usize> = None;
        for &y in r.ball_two_indices(x).iter().rev() {
            if y < x && j_indices(c, y) == jx {
                best = Some(y);
                break;
            }
        }
        if jx.is_empty() {
            if let Some(&e) = empties.iter().find(|&&e| e < x) {
                best = Some(best.map_or(e, |b| b.max(e)));
            }
        }
        if let Some(y) = best {
            return Some((r.index_vertex(x).unwrap(), r.index_vertex(y).unwrap()));
        }
    }
    None
}

pub fn is_separating(c: &Code) -> bool {
    find_unseparated_pair(c).is_none()
}

/// Separation by the defining full pair scan; the slow oracle for
/// [`is_separating`].
pub fn is_separating_naive(c: &Code) -> bool {
    let q = c.radices().vertex_count();
    let jsets: Vec<Vec<usize>> = (0..q).map(|i| j_indices(c, i)).collect();
    for x in 0..q {
        for y in (x + 1)..q {
            if jsets[x] == jsets[y] {
                return false;
            }
        }
    }
    true
}

/// Why a code fails to be identifying.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentifyingViolation {
    Undominated(Vertex),
    Unseparated(Vertex, Vertex),
}

/// Domination is checked first; separation violations are then reported over
/// the distance-<=2 pair scan, exact because every J-set is nonempty.
pub fn find_identifying_violation(c: &Code) -> Option<IdentifyingViolation> {
    if let Some(v) = find_undominated(c) {
        return Some(IdentifyingViolation::Undominated(v));
    }
    find_unseparated_pair(c).map(|(x, y)| IdentifyingViolation::Unseparated(x, y))
}

pub fn is_identifying(c: &Code) -> bool {
    find_identifying_violation(c).is_none()
}

/// True when no two distinct vertices share a closed neighborhood, checked
/// by definition over all vertices.
pub fn is_twin_free(r: &Radices) -> bool {
    let mut seen = HashSet::with_capacity(r.vertex_count());
    (0..r.vertex_count()).all(|idx| seen.insert(r.closed_neighborhood_indices(idx)))
}

/// x + C.
pub fn translate_code(c: &Code, x: &Vertex) -> Result<Code> {
    let r = c.radices();
    r.vertex_index(x)?;
    let mut out = Code::new(r.clone());
    for m in c.iter() {
        out.insert(&r.add(&m, x)?)?;
    }
    Ok(out)
}

/// Why a code fails the self-locating-dominating characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SldViolation {
    /// A non-codeword whose J-set is empty (it is covered by nobody).
    EmptyJSet(Vertex),
    /// A non-codeword x whose J-set is contained in J(y) for some y != x.
    Covered { x: Vertex, y: Vertex },
}

/// Checks that J(x) minus J(y) is nonempty for every non-codeword x and every
/// y != x. For y beyond distance 2 the difference equals J(x) itself, so the
/// pair scan is restricted to the distance-2 ball once J(x) is nonempty.
pub fn find_sld_violation(c: &Code) -> Option<SldViolation> {
    let r = c.radices();
    for x in (0..r.vertex_count()).rev() {
        if c.contains_index(x) {
            continue;
        }
        let jx = j_indices(c, x);
        if jx.is_empty() {
            return Some(SldViolation::EmptyJSet(r.index_vertex(x).unwrap()));
        }
        for &y in r.ball_two_indices(x).iter().rev() {
            let jy = j_indices(c, y);
            if jx.iter().all(|i| jy.binary_search(i).is_ok()) {
                return Some(SldViolation::Covered {
                    x: r.index_vertex(x).unwrap(),
                    y: r.index_vertex(y).unwrap(),
                });
            }
        }
    }
    None
}

pub fn is_self_locating_dominating(c: &Code) -> bool {
    find_sld_violation(c).is_none()
}

/// Why a code fails the self-identifying characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfIdViolation {
    SmallJSet { x: Vertex, size: usize },
    NoDistanceTwoPair { x: Vertex },
}

fn require_uniform_prime_power(r: &Radices) -> Result<u32> {
    let m = r
        .uniform()
        .ok_or_else(|| Error::UnsupportedScope("radices are not uniform".into()))?;
    if arith::prime_power(m).is_none() {
        return Err(Error::UnsupportedScope(format!("radix {m} is not a prime power")));
    }
    Ok(m)
}

/// Checks that every vertex has a J-set of size >= 3 containing two members
/// at distance exactly 2. Only characterized for uniform prime-power radices;
/// anything else is refused.
pub fn find_self_identifying_violation(c: &Code) -> Result<Option<SelfIdViolation>> {
    let r = c.radices();
    require_uniform_prime_power(r)?;
    for x in (0..r.vertex_count()).rev() {
        let jx = j_indices(c, x);
        if jx.len() < 3 {
            return Ok(Some(SelfIdViolation::SmallJSet {
                x: r.index_vertex(x).unwrap(),
                size: jx.len(),
            }));
        }
        let members: Vec<Vertex> = jx.iter().map(|&i| r.index_vertex(i).unwrap()).collect();
        let has_pair = members.iter().enumerate().any(|(a, u)| {
            members[a + 1..].iter().any(|v| r.hamming_distance(u, v).unwrap() == 2)
        });
        if !has_pair {
            return Ok(Some(SelfIdViolation::NoDistanceTwoPair { x: r.index_vertex(x).unwrap() }));
        }
    }
    Ok(None)
}

pub fn is_self_identifying(c: &Code) -> Result<bool> {
    Ok(find_self_identifying_violation(c)?.is_none())
}

/// A vertex failing the two-direction condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDirectionViolation {
    pub x: Vertex,
    pub jset_size: usize,
    pub directions: usize,
}

/// Checks that every vertex has |J| >= 3 with codeword neighbors in at least
/// two distinct coordinate directions. A sufficient condition for a code to
/// be identifying.
pub fn find_two_direction_violation(c: &Code) -> Result<Option<TwoDirectionViolation>> {
    let r = c.radices();
    if r.n() < 2 {
        return Err(Error::TooFewCoordinates { needed: 2, got: r.n() });
    }
    for x in (0..r.vertex_count()).rev() {
        let jx = j_indices(c, x);
        let u = r.index_vertex(x).unwrap();
        let mut directions = 0;
        for i in 0..r.n() {
            let has_codeword_neighbor = (0..r.dims()[i]).any(|j| {
                if j == u.coords()[i] {
                    return false;
                }
                let mut w = u.coords().to_vec();
                w[i] = j;
                c.contains(&r.vertex(w).unwrap()).unwrap()
            });
            if has_codeword_neighbor {
                directions += 1;
            }
        }
        if jx.len() < 3 || directions < 2 {
            return Ok(Some(TwoDirectionViolation { x: u, jset_size: jx.len(), directions }));
        }
    }
    Ok(None)
}

pub fn check_two_direction_sufficiency(c: &Code) -> Result<bool> {
    Ok(find_two_direction_violation(c)?.is_none())
}

/// A violation of the minimum-distance-2 condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinDistance2Violation {
    AdjacentCodewords(Vertex, Vertex),
    SmallJSet { x: Vertex, size: usize },
}

/// Checks that codewords are pairwise at distance >= 2 and that every
/// non-codeword has |J| >= 3. A sufficient condition for a code over three or
/// more coordinates to be identifying.
pub fn find_min_distance2_violation(c: &Code) -> Result<Option<MinDistance2Violation>> {
    let r = c.radices();
    if r.n() < 3 {
        return Err(Error::TooFewCoordinates { needed: 3, got: r.n() });
    }
    for x in (0..r.vertex_count()).rev() {
        if c.contains_index(x) {
            let nbrs = r.closed_neighborhood_indices(x);
            if let Some(&y) = nbrs.iter().rev().find(|&&y| y != x && c.contains_index(y)) {
                return Ok(Some(MinDistance2Violation::AdjacentCodewords(
                    r.index_vertex(x).unwrap(),
                    r.index_vertex(y).unwrap(),
                )));
            }
        } else {
            let jx = j_indices(c, x);
            if jx.len() < 3 {
                return Ok(Some(MinDistance2Violation::SmallJSet {
                    x: r.index_vertex(x).unwrap(),
                    size: jx.len(),
                }));
            }
        }
    }
    Ok(None)
}

pub fn check_min_distance2_sufficiency(c: &Code) -> Result<bool> {
    Ok(find_min_distance2_violation(c)?.is_none())
}

/// Minimum Hamming distance over distinct codeword pairs.
pub fn min_pairwise_distance(c: &Code) -> Result<usize> {
    if c.len() < 2 {
        return Err(Error::InvalidArgument(
            "minimum pairwise distance needs at least two codewords".into(),
        ));
    }
    let members: Vec<Vertex> = c.iter().collect();
    let mut best = usize::MAX;
    for (i, u) in members.iter().enumerate() {
        for v in &members[i + 1..] {
            best = best.min(c.radices().hamming_distance(u, v)?);
            if best == 1 {
                return Ok(1);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(dims: &[u32]) -> Radices {
        Radices::new(dims.to_vec()).unwrap()
    }

    fn code(radices: &Radices, members: &[&[u32]]) -> Code {
        Code::from_vertices(
            radices.clone(),
            members.iter().map(|m| radices.vertex(m.to_vec()).unwrap()),
        )
        .unwrap()
    }

    /// {0} x Z_2 x Z_2, the half-cube column code.
    fn half_cube(g: &Radices) -> Code {
        code(g, &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0], &[0, 1, 1]])
    }

    /// Everything except (1,1,0).
    fn punctured_cube(g: &Radices) -> Code {
        let mut c = Code::full(g.clone());
        c.remove(&g.vertex(vec![1, 1, 0]).unwrap()).unwrap();
        c
    }

    #[test]
    fn j_set_examples() {
        let g = r(&[2, 2, 2]);
        let c = half_cube(&g);
        let j = j_set(&c, &g.vertex(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(j.members(), &[g.vertex(vec![0, 1, 1]).unwrap()]);

        let empty = Code::new(g.clone());
        assert!(j_set(&empty, &g.zero()).unwrap().is_empty());

        let full = Code::full(g.clone());
        for u in g.vertices() {
            assert_eq!(
                j_set(&full, &u).unwrap().members(),
                g.closed_neighborhood(&u).unwrap().as_slice()
            );
        }
    }

    #[test]
    fn domination() {
        let g = r(&[2, 2, 2]);
        assert!(is_dominating(&half_cube(&g)));
        assert!(is_dominating(&Code::full(g.clone())));

        let h = r(&[4, 4]);
        let lone = code(&h, &[&[0, 0]]);
        assert!(!is_dominating(&lone));
        // descending scan reports the far corner
        assert_eq!(find_undominated(&lone), Some(h.vertex(vec![3, 3]).unwrap()));
    }

    #[test]
    fn separation() {
        let g = r(&[3, 3]);
        let row = code(&g, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert!(!is_separating(&row));
        assert!(!is_separating_naive(&row));
        assert!(is_separating(&Code::full(g.clone())));
        assert!(is_separating_naive(&Code::full(g.clone())));

        let cube = r(&[2, 2, 2]);
        assert!(is_separating(&half_cube(&cube)));
    }

    #[test]
    fn separation_counts_two_empty_jsets_as_unseparated() {
        let g = r(&[4, 4]);
        // (0,0) covers its row and column; (3,3) and (2,2) are at distance 2
        // from each other but both have empty J-sets.
        let lone = code(&g, &[&[0, 0]]);
        let pair = find_unseparated_pair(&lone).unwrap();
        assert_eq!(pair, (g.vertex(vec![3, 3]).unwrap(), g.vertex(vec![3, 2]).unwrap()));
        assert!(!is_separating(&lone));
    }

    #[test]
    fn identifying_cube_exemplars() {
        let g = r(&[2, 2, 2]);
        assert!(is_identifying(&half_cube(&g)));
        assert!(is_identifying(&punctured_cube(&g)));
        let h = r(&[3, 6]);
        // Z_3 x Z_2 embedded as Z_3 x {0,3}
        let sub = code(&h, &[&[0, 0], &[1, 0], &[2, 0], &[0, 3], &[1, 3], &[2, 3]]);
        assert!(!is_identifying(&sub));
    }

    #[test]
    fn twin_free() {
        assert!(!is_twin_free(&r(&[5])));
        assert!(is_twin_free(&r(&[2, 2])));
        assert!(is_twin_free(&r(&[3, 3, 3])));
    }

    #[test]
    fn sld_cube_exemplars() {
        let g = r(&[2, 2, 2]);
        assert!(is_self_locating_dominating(&punctured_cube(&g)));
        let violation = find_sld_violation(&half_cube(&g)).unwrap();
        assert_eq!(
            violation,
            SldViolation::Covered {
                x: g.vertex(vec![1, 1, 1]).unwrap(),
                y: g.vertex(vec![0, 1, 1]).unwrap(),
            }
        );
        assert!(is_self_locating_dominating(&Code::full(g.clone())));
    }

    #[test]
    fn self_identifying_cube_exemplars() {
        let g = r(&[2, 2, 2]);
        assert!(is_self_identifying(&punctured_cube(&g)).unwrap());
        let violation = find_self_identifying_violation(&half_cube(&g)).unwrap().unwrap();
        assert_eq!(
            violation,
            SelfIdViolation::SmallJSet { x: g.vertex(vec![1, 1, 1]).unwrap(), size: 1 }
        );
        let h = r(&[3, 3]);
        assert!(is_self_identifying(&Code::full(h.clone())).unwrap());
    }

    #[test]
    fn self_identifying_refuses_out_of_scope_radices() {
        let mixed = Code::full(r(&[2, 3]));
        assert!(matches!(is_self_identifying(&mixed), Err(Error::UnsupportedScope(_))));
        let composite = Code::full(r(&[6, 6]));
        assert!(matches!(is_self_identifying(&composite), Err(Error::UnsupportedScope(_))));
        // prime powers are fine
        let four = Code::full(r(&[4, 4]));
        assert!(is_self_identifying(&four).unwrap());
    }

    #[test]
    fn two_direction_examples() {
        let g = r(&[2, 2]);
        assert!(check_two_direction_sufficiency(&Code::full(g.clone())).unwrap());
        let cube = r(&[2, 2, 2]);
        assert!(!check_two_direction_sufficiency(&half_cube(&cube)).unwrap());
        let v = find_two_direction_violation(&half_cube(&cube)).unwrap().unwrap();
        assert_eq!(v.x, cube.vertex(vec![1, 1, 1]).unwrap());
        assert_eq!(v.jset_size, 1);
        let k5 = Code::full(r(&[5]));
        assert!(check_two_direction_sufficiency(&k5).is_err());
    }

    #[test]
    fn min_distance2_examples() {
        let g = r(&[3, 3, 3]);
        assert!(!check_min_distance2_sufficiency(&Code::full(g.clone())).unwrap());
        assert!(matches!(
            find_min_distance2_violation(&Code::full(g.clone())).unwrap().unwrap(),
            MinDistance2Violation::AdjacentCodewords(_, _)
        ));
        let flat = r(&[3, 3]);
        assert!(check_min_distance2_sufficiency(&Code::full(flat.clone())).is_err());
    }

    #[test]
    fn translation() {
        let g = r(&[2, 2, 2]);
        let c = half_cube(&g);
        let moved = translate_code(&c, &g.vertex(vec![1, 0, 0]).unwrap()).unwrap();
        let expect =
            code(&g, &[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(moved, expect);
        assert_eq!(translate_code(&c, &g.zero()).unwrap(), c);
        assert_eq!(moved.len(), c.len());
    }

    #[test]
    fn pairwise_distance() {
        let g = r(&[2, 2, 2]);
        assert_eq!(min_pairwise_distance(&Code::full(g.clone())).unwrap(), 1);
        let far = code(&g, &[&[0, 0, 0], &[1, 1, 1]]);
        assert_eq!(min_pairwise_distance(&far).unwrap(), 3);
        let lone = code(&g, &[&[0, 0, 0]]);
        assert!(min_pairwise_distance(&lone).is_err());
    }

    #[test]
    fn set_operations() {
        let g = r(&[2, 2]);
        let a = code(&g, &[&[0, 0], &[0, 1]]);
        let b = code(&g, &[&[0, 1], &[1, 0]]);
        assert_eq!(a.union(&b).unwrap().len(), 3);
        assert_eq!(a.intersection(&b).unwrap().len(), 1);
        assert_eq!(a.difference(&b).unwrap().iter().next().unwrap(), g.zero());
        assert_eq!(a.complement().len(), 2);
        let other = Code::new(r(&[3, 3]));
        assert!(a.union(&other).is_err());
    }
}
