//! Group and linear structure on Hamming graph vertex sets.
//!
//! The vertex set of a Hamming graph over radices (m_1, ..., m_n) is the
//! abelian group Z_{m_1} x ... x Z_{m_n} under coordinatewise addition.
//! This module handles subgroups of that group (closure tests, closure of a
//! generating set, exhaustive enumeration, cosets) and, for uniform prime
//! radix p, linear codes over F_p (generator and parity check matrices,
//! syndromes, subspace enumeration).
//!
//! Closure violations are reported from an incremental scan: members are
//! visited in ascending canonical order, and each member b is paired with
//! every member a <= b before moving on. The first failing sum b + a is the
//! witness, so the reported triple is stable across runs.

use std::collections::HashSet;
use std::fmt;

use crate::arith;
use crate::codesets::{j_indices, translate_code, Code};
use crate::hamming::{Radices, Vertex};
use crate::{Error, Result};

/// Default ceiling on group order for exhaustive subgroup enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 4096;

/// A vertex set verified to be a subgroup of the ambient group.
///
/// Values of this type always contain the zero word and are closed under
/// coordinatewise addition; both facts are checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    code: Code,
}

impl Subgroup {
    /// Checks the subgroup axioms and wraps the code if they hold.
    pub fn verify(code: Code) -> Result<Subgroup> {
        if code.is_empty() {
            return Err(Error::NotASubgroup("the code is empty".into()));
        }
        if !code.contains_index(0) {
            return Err(Error::NotASubgroup("the zero word is missing".into()));
        }
        if let Some((b, a, sum)) = find_closure_violation(&code) {
            return Err(Error::NotASubgroup(format!(
                "{b} + {a} = {sum} is not in the code"
            )));
        }
        debug_assert!(code.iter().all(|v| {
            let neg = code.radices().neg(&v).unwrap();
            code.contains(&neg).unwrap()
        }));
        Ok(Subgroup { code })
    }

    /// Smallest subgroup containing the given generators.
    ///
    /// With no generators this is the trivial subgroup {0}.
    pub fn closure(radices: &Radices, generators: &[Vertex]) -> Result<Subgroup> {
        let mut code = Code::new(radices.clone());
        code.insert_index(0).unwrap();
        for g in generators {
            let idx = radices.vertex_index(g)?;
            code = extend_by(&code, idx);
        }
        Ok(Subgroup { code })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn into_code(self) -> Code {
        self.code
    }

    pub fn order(&self) -> usize {
        self.code.len()
    }

    pub fn radices(&self) -> &Radices {
        self.code.radices()
    }

    /// All cosets, ordered by their smallest member.
    ///
    /// The first coset is the subgroup itself; together they partition the
    /// vertex set.
    pub fn cosets(&self) -> Vec<Code> {
        let q = self.radices().vertex_count();
        let mut covered = vec![false; q];
        let mut out = Vec::with_capacity(q / self.order());
        for rep in 0..q {
            if covered[rep] {
                continue;
            }
            let coset =
                translate_code(&self.code, &self.radices().index_vertex(rep).unwrap()).unwrap();
            for idx in coset.indices() {
                covered[idx] = true;
            }
            out.push(coset);
        }
        out
    }

    /// A generating set built greedily: members are scanned in ascending
    /// order and kept only when not already generated. The result is not
    /// guaranteed to have minimum cardinality, but it is deterministic and
    /// never redundant.
    pub fn minimal_generators(&self) -> Vec<Vertex> {
        let radices = self.radices();
        let mut generated = Code::new(radices.clone());
        generated.insert_index(0).unwrap();
        let mut gens = Vec::new();
        for idx in self.code.indices() {
            if generated.contains_index(idx) {
                continue;
            }
            gens.push(radices.index_vertex(idx).unwrap());
            generated = extend_by(&generated, idx);
            if generated.len() == self.order() {
                break;
            }
        }
        gens
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subgroup of order {} in {}", self.order(), self.radices())
    }
}

/// Union of H + k*g over all k, for H closed under addition.
fn extend_by(h: &Code, g_idx: usize) -> Code {
    let radices = h.radices().clone();
    let g = radices.index_vertex(g_idx).unwrap();
    let zero = radices.zero();
    let mut out = h.clone();
    let mut shift = g.clone();
    while shift != zero {
        out = out.union(&translate_code(h, &shift).unwrap()).unwrap();
        shift = radices.add(&shift, &g).unwrap();
    }
    out
}

/// First failure of closure under addition, scanning members b in ascending
/// order and partners a <= b in ascending order. Returns (b, a, b + a).
pub fn find_closure_violation(code: &Code) -> Option<(Vertex, Vertex, Vertex)> {
    let radices = code.radices();
    let members: Vec<Vertex> = code.iter().collect();
    for (bi, b) in members.iter().enumerate() {
        for a in &members[..=bi] {
            let sum = radices.add(b, a).unwrap();
            if !code.contains(&sum).unwrap() {
                return Some((b.clone(), a.clone(), sum));
            }
        }
    }
    None
}

/// True iff the code contains the zero word and is closed under addition.
pub fn is_subgroup(code: &Code) -> bool {
    !code.is_empty() && code.contains_index(0) && find_closure_violation(code).is_none()
}

/// True iff the code is a subgroup and an identifying code.
pub fn is_group_identifying(code: &Code) -> bool {
    is_subgroup(code) && crate::codesets::is_identifying(code)
}

/// Every subgroup of the ambient group, sorted by (order, member list).
pub fn enumerate_subgroups(radices: &Radices) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_capped(radices, DEFAULT_ENUMERATION_CAP)
}

/// Every subgroup, refusing groups larger than `cap`.
///
/// Works by breadth-first closure: starting from the trivial subgroup, each
/// known subgroup is extended by every element outside it, and duplicates
/// are dropped. Correct because every subgroup is reachable by adjoining
/// its elements one at a time.
pub fn enumerate_subgroups_capped(radices: &Radices, cap: usize) -> Result<Vec<Subgroup>> {
    let q = radices.vertex_count();
    if q > cap {
        return Err(Error::CapExceeded { needed: q as u128, cap });
    }
    let mut trivial = Code::new(radices.clone());
    trivial.insert_index(0).unwrap();
    let mut seen: HashSet<Code> = HashSet::new();
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in 0..q {
            if h.contains_index(g) {
                continue;
            }
            let ext = extend_by(&h, g);
            if seen.insert(ext.clone()) {
                frontier.push(ext);
            }
        }
    }
    let mut subs: Vec<Code> = seen.into_iter().collect();
    subs.sort_by_cached_key(|c| (c.len(), c.indices().collect::<Vec<usize>>()));
    debug_assert!(subs.iter().all(|c| q % c.len() == 0));
    Ok(subs.into_iter().map(|code| Subgroup { code }).collect())
}

/// Checks J_H(u + c) = J_H(u) + c for a codeword c of a subgroup H.
///
/// This holds for every subgroup, every vertex u and every codeword c, so
/// the return value is a consistency probe; it errors if c is not in H.
pub fn coset_jset_shift(subgroup: &Subgroup, u: &Vertex, c: &Vertex) -> Result<bool> {
    let code = subgroup.code();
    let radices = code.radices();
    if !code.contains(c)? {
        return Err(Error::NotACodeword(c.to_string()));
    }
    let shifted_vertex = radices.add(u, c)?;
    let left = j_indices(code, radices.vertex_index(&shifted_vertex)?);
    let mut right: Vec<usize> = j_indices(code, radices.vertex_index(u)?)
        .into_iter()
        .map(|idx| {
            let m = radices.index_vertex(idx).unwrap();
            radices.vertex_index(&radices.add(&m, c).unwrap()).unwrap()
        })
        .collect();
    right.sort_unstable();
    Ok(left == right)
}

/// A matrix over the prime field F_p. Rows may be empty; columns may not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    /// Builds a matrix from row-major entries, which must already lie in
    /// [0, p).
    pub fn new(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<FpMatrix> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if cols == 0 {
            return Err(Error::InvalidArgument("a matrix needs at least one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        if let Some(pos) = entries.iter().position(|&e| e >= p) {
            return Err(Error::CoordOutOfRange { index: pos / cols, value: entries[pos], radix: p });
        }
        Ok(FpMatrix { p, rows, cols, data: entries })
    }

    pub fn identity(p: u32, n: usize) -> Result<FpMatrix> {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FpMatrix::new(p, n, n, data)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form and rank, by Gauss-Jordan elimination.
    pub fn rref(&self) -> (FpMatrix, usize) {
        let p = self.p as u64;
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.get(pivot_row, j);
                m.set(pivot_row, j, m.get(src, j));
                m.set(src, j, tmp);
            }
            let inv = arith::inv_mod(m.get(pivot_row, col) as u64, p);
            for j in 0..m.cols {
                m.set(pivot_row, j, (m.get(pivot_row, j) as u64 * inv % p) as u32);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col) == 0 {
                    continue;
                }
                let factor = m.get(r, col) as u64;
                for j in 0..m.cols {
                    let v = (m.get(r, j) as u64 + (p - factor) * m.get(pivot_row, j) as u64 % p)
                        % p;
                    m.set(r, j, v as u32);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        (m, pivot_row)
    }

    /// Pivot column of each row, for a matrix already in RREF with full
    /// row rank.
    fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row(i).iter().position(|&e| e != 0).unwrap())
            .collect()
    }
}

/// Parity check matrix of the row space of a full-row-rank generator.
///
/// The result H has n - t rows for a t x n generator, satisfies H G^T = 0,
/// and its kernel is exactly the row space of G. For t = n the result has
/// zero rows. Column permutations needed to reach systematic form are
/// applied and then undone, so H lines up with the original coordinates.
pub fn generator_to_parity_check(g: &FpMatrix) -> Result<FpMatrix> {
    let (r, rank) = g.rref();
    if rank < g.rows {
        return Err(Error::RankDeficient { rank, rows: g.rows });
    }
    let p = g.p;
    let t = g.rows;
    let n = g.cols;
    let pivots = r.pivot_columns();
    let in_pivots = |j: usize| pivots.contains(&j);
    let nonpivots: Vec<usize> = (0..n).filter(|&j| !in_pivots(j)).collect();
    let mut h = FpMatrix::new(p, n - t, n, vec![0; (n - t) * n])?;
    for i in 0..n - t {
        for (k, &col) in pivots.iter().enumerate() {
            h.set(i, col, (p - r.get(k, nonpivots[i])) % p);
        }
        h.set(i, nonpivots[i], 1);
    }
    debug_assert!((0..n - t).all(|i| {
        (0..t).all(|k| {
            (0..n).fold(0u64, |acc, j| {
                (acc + h.get(i, j) as u64 * g.get(k, j) as u64) % p as u64
            }) == 0
        })
    }));
    Ok(h)
}

/// Syndrome H u^T of a word, as a vector of length rows(H).
pub fn syndrome(h: &FpMatrix, u: &Vertex) -> Result<Vec<u32>> {
    let coords = u.coords();
    if coords.len() != h.cols {
        return Err(Error::LengthMismatch { expected: h.cols, got: coords.len() });
    }
    if let Some(pos) = coords.iter().position(|&c| c >= h.p) {
        return Err(Error::CoordOutOfRange { index: pos, value: coords[pos], radix: h.p });
    }
    let p = h.p as u64;
    Ok((0..h.rows)
        .map(|i| {
            (0..h.cols).fold(0u64, |acc, j| (acc + h.get(i, j) as u64 * coords[j] as u64) % p)
                as u32
        })
        .collect())
}

/// The row space of a full-row-rank generator matrix, as a code over
/// uniform radix p.
pub fn codewords_from_generator(g: &FpMatrix) -> Result<Code> {
    let (_, rank) = g.rref();
    if rank < g.rows {
        return Err(Error::RankDeficient { rank, rows: g.rows });
    }
    let radices = Radices::new(vec![g.p; g.cols])?;
    let mut code = Code::new(radices.clone());
    let mut coeffs = vec![0u32; g.rows];
    loop {
        let mut coords = vec![0u32; g.cols];
        for (i, &a) in coeffs.iter().enumerate() {
            for j in 0..g.cols {
                coords[j] = ((coords[j] as u64 + a as u64 * g.get(i, j) as u64) % g.p as u64)
                    as u32;
            }
        }
        code.insert(&radices.vertex(coords)?)?;
        let mut pos = g.rows;
        loop {
            if pos == 0 {
                return Ok(code);
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < g.p {
                break;
            }
            coeffs[pos] = 0;
        }
    }
}

/// True iff the radices are uniform prime p and the code is a subgroup,
/// which over F_p^n means an F_p-linear subspace.
pub fn is_linear_code(code: &Code) -> Result<bool> {
    let radices = code.radices();
    let Some(m) = radices.uniform() else {
        return Err(Error::UnsupportedScope("the radices are not uniform".into()));
    };
    if !arith::is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    Ok(is_subgroup(code))
}

/// Every t-dimensional subspace of F_p^n, one RREF generator matrix each.
pub fn enumerate_subspaces(p: u32, n: usize, t: usize) -> Result<Vec<FpMatrix>> {
    enumerate_subspaces_capped(p, n, t, DEFAULT_ENUMERATION_CAP)
}

/// Every t-dimensional subspace of F_p^n, refusing field sizes with
/// p^n > cap.
///
/// Subspaces correspond bijectively to RREF matrices: choose the t pivot
/// columns, then fill every entry right of a pivot and outside the pivot
/// columns freely. Output is ordered by pivot column pattern, then by the
/// free entries read row-major.
pub fn enumerate_subspaces_capped(
    p: u32,
    n: usize,
    t: usize,
    cap: usize,
) -> Result<Vec<FpMatrix>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::EmptyRadices);
    }
    if t > n {
        return Err(Error::InvalidArgument(format!(
            "dimension {t} exceeds word length {n}"
        )));
    }
    let Some(q) = arith::pow_u128(p as u128, n as u32) else {
        return Err(Error::Overflow("vertex count"));
    };
    if q > cap as u128 {
        return Err(Error::CapExceeded { needed: q, cap });
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(t);
    collect_pivot_patterns(p, n, t, 0, &mut pivots, &mut out);
    debug_assert_eq!(out.len() as u128, gaussian_binomial(n, t, p));
    Ok(out)
}

fn collect_pivot_patterns(
    p: u32,
    n: usize,
    t: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<FpMatrix>,
) {
    if pivots.len() == t {
        emit_rref_fillings(p, n, pivots, out);
        return;
    }
    let remaining = t - pivots.len();
    for col in start..=n - remaining {
        pivots.push(col);
        collect_pivot_patterns(p, n, t, col + 1, pivots, out);
        pivots.pop();
    }
}

fn emit_rref_fillings(p: u32, n: usize, pivots: &[usize], out: &mut Vec<FpMatrix>) {
    let t = pivots.len();
    let free: Vec<(usize, usize)> = (0..t)
        .flat_map(|i| {
            let pivots = pivots.to_vec();
            (pivots[i] + 1..n)
                .filter(move |j| !pivots.contains(j))
                .map(move |j| (i, j))
        })
        .collect();
    let mut base = FpMatrix::new(p, t, n, vec![0; t * n]).unwrap();
    for (i, &col) in pivots.iter().enumerate() {
        base.set(i, col, 1);
    }
    if t == 0 {
        out.push(base);
        return;
    }
    let mut values = vec![0u32; free.len()];
    loop {
        let mut m = base.clone();
        for (&(i, j), &v) in free.iter().zip(values.iter()) {
            m.set(i, j, v);
        }
        out.push(m);
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < p {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Number of t-dimensional subspaces of F_p^n, by the additive recurrence
/// for Gaussian binomials.
pub fn gaussian_binomial(n: usize, t: usize, p: u32) -> u128 {
    if t > n {
        return 0;
    }
    let mut row = vec![0u128; t + 1];
    row[0] = 1;
    for i in 1..=n {
        let hi = t.min(i);
        for k in (1..=hi).rev() {
            row[k] = row[k - 1] + (p as u128).pow(k as u32) * row[k];
        }
    }
    row[t]
}
