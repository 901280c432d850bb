//! Mixed-radix vertex arithmetic and the metric structure of products of
//! complete graphs.

use std::fmt;

use crate::{Error, Result};

/// Default cap on the vertex count of a [`Radices`].
pub const DEFAULT_VERTEX_CAP: usize = 1 << 20;

/// The radix vector (m_1, ..., m_n) of a Hamming graph.
///
/// Vertices are words u = (u_1, ..., u_n) with 0 <= u_i < m_i; two words are
/// adjacent exactly when they differ in a single coordinate. Each word has a
/// canonical index: its mixed-radix value with coordinate 1 most significant.
/// All deterministic orderings in this crate follow that index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radices {
    dims: Vec<u32>,
    // weights[i] = product of dims[i+1..]; canonical index = sum of u_i * weights[i]
    weights: Vec<usize>,
    count: usize,
}

impl Radices {
    /// Builds a radix vector, enforcing m_i >= 2 and the default vertex cap.
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        Self::with_cap(dims, DEFAULT_VERTEX_CAP)
    }

    /// Same as [`Radices::new`] with an explicit vertex-count cap.
    pub fn with_cap(dims: Vec<u32>, cap: usize) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyRadices);
        }
        if let Some(&m) = dims.iter().find(|&&m| m < 2) {
            return Err(Error::RadixTooSmall(m));
        }
        let mut product: u128 = 1;
        for &m in &dims {
            product = product.saturating_mul(m as u128);
        }
        if product > cap as u128 {
            return Err(Error::CapExceeded { needed: product, cap });
        }
        let count = product as usize;
        let mut weights = vec![1usize; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * dims[i + 1] as usize;
        }
        Ok(Radices { dims, weights, count })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Number of coordinates n.
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.count
    }

    /// Vertex degree, identical for every vertex: sum of (m_i - 1).
    pub fn degree(&self) -> usize {
        self.dims.iter().map(|&m| m as usize - 1).sum()
    }

    /// True when all radices are equal, yielding the common value.
    pub fn uniform(&self) -> Option<u32> {
        let m = self.dims[0];
        self.dims.iter().all(|&d| d == m).then_some(m)
    }

    /// Validates coordinates and wraps them in a [`Vertex`].
    pub fn vertex(&self, coords: Vec<u32>) -> Result<Vertex> {
        let v = Vertex { coords };
        self.check(&v)?;
        Ok(v)
    }

    pub fn zero(&self) -> Vertex {
        Vertex { coords: vec![0; self.dims.len()] }
    }

    /// e_i^j: the word with j at 1-based coordinate i and zeros elsewhere.
    pub fn unit_vector(&self, i: usize, j: u32) -> Result<Vertex> {
        if i == 0 || i > self.dims.len() {
            return Err(Error::InvalidArgument(format!(
                "coordinate index {i} is outside 1..={}",
                self.dims.len()
            )));
        }
        if j >= self.dims[i - 1] {
            return Err(Error::CoordOutOfRange { index: i, value: j, radix: self.dims[i - 1] });
        }
        let mut v = self.zero();
        v.coords[i - 1] = j;
        Ok(v)
    }

    fn check(&self, v: &Vertex) -> Result<()> {
        if v.coords.len() != self.dims.len() {
            return Err(Error::LengthMismatch { expected: self.dims.len(), got: v.coords.len() });
        }
        for (i, (&c, &m)) in v.coords.iter().zip(&self.dims).enumerate() {
            if c >= m {
                return Err(Error::CoordOutOfRange { index: i + 1, value: c, radix: m });
            }
        }
        Ok(())
    }

    /// Canonical index of a word: coordinate 1 is most significant.
    pub fn vertex_index(&self, v: &Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.index_unchecked(v))
    }

    fn index_unchecked(&self, v: &Vertex) -> usize {
        v.coords.iter().zip(&self.weights).map(|(&c, &w)| c as usize * w).sum()
    }

    /// Inverse of [`Radices::vertex_index`].
    pub fn index_vertex(&self, index: usize) -> Result<Vertex> {
        if index >= self.count {
            return Err(Error::IndexOutOfRange { index, count: self.count });
        }
        Ok(self.decode(index))
    }

    fn decode(&self, index: usize) -> Vertex {
        let mut rem = index;
        let coords = self
            .weights
            .iter()
            .map(|&w| {
                let c = rem / w;
                rem %= w;
                c as u32
            })
            .collect();
        Vertex { coords }
    }

    /// All vertices in canonical index order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.count).map(|i| self.decode(i))
    }

    pub fn add(&self, u: &Vertex, v: &Vertex) -> Result<Vertex> {
        self.check(u)?;
        self.check(v)?;
        let coords = u
            .coords
            .iter()
            .zip(&v.coords)
            .zip(&self.dims)
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Ok(Vertex { coords })
    }

    pub fn neg(&self, u: &Vertex) -> Result<Vertex> {
        self.check(u)?;
        let coords = u.coords.iter().zip(&self.dims).map(|(&a, &m)| (m - a) % m).collect();
        Ok(Vertex { coords })
    }

    pub fn sub(&self, u: &Vertex, v: &Vertex) -> Result<Vertex> {
        self.add(u, &self.neg(v)?)
    }

    /// Number of coordinates where the two words differ.
    pub fn hamming_distance(&self, u: &Vertex, v: &Vertex) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.coords.iter().zip(&v.coords).filter(|(a, b)| a != b).count())
    }

    /// N[u]: the word itself plus all words differing in one coordinate,
    /// in canonical index order.
    pub fn closed_neighborhood(&self, u: &Vertex) -> Result<Vec<Vertex>> {
        self.check(u)?;
        let idx = self.index_unchecked(u);
        Ok(self.closed_neighborhood_indices(idx).into_iter().map(|i| self.decode(i)).collect())
    }

    /// Index form of [`Radices::closed_neighborhood`], sorted ascending.
    pub fn closed_neighborhood_indices(&self, index: usize) -> Vec<usize> {
        debug_assert!(index < self.count);
        let u = self.decode(index);
        let mut out = Vec::with_capacity(1 + self.degree());
        out.push(index);
        for (i, (&c, &m)) in u.coords.iter().zip(&self.dims).enumerate() {
            let base = index - c as usize * self.weights[i];
            for j in 0..m {
                if j != c {
                    out.push(base + j as usize * self.weights[i]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Indices at Hamming distance exactly 1 or 2 from `index`, sorted ascending.
    pub(crate) fn ball_two_indices(&self, index: usize) -> Vec<usize> {
        debug_assert!(index < self.count);
        let u = self.decode(index);
        let n = self.dims.len();
        let mut out = Vec::new();
        for i in 0..n {
            let base = index - u.coords[i] as usize * self.weights[i];
            for j in 0..self.dims[i] {
                if j == u.coords[i] {
                    continue;
                }
                let d1 = base + j as usize * self.weights[i];
                out.push(d1);
                for k in (i + 1)..n {
                    let base2 = d1 - u.coords[k] as usize * self.weights[k];
                    for l in 0..self.dims[k] {
                        if l != u.coords[k] {
                            out.push(base2 + l as usize * self.weights[k]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// |N[u] ∩ N[v]| by the distance case split: the full closed
    /// neighborhood when u = v, the radix of the differing coordinate at
    /// distance 1, two at distance 2, zero beyond.
    pub fn neighborhood_intersection_size(&self, u: &Vertex, v: &Vertex) -> Result<usize> {
        if self.dims.len() < 2 {
            return Err(Error::TooFewCoordinates { needed: 2, got: self.dims.len() });
        }
        self.check(u)?;
        self.check(v)?;
        let differing: Vec<usize> =
            (0..self.dims.len()).filter(|&i| u.coords[i] != v.coords[i]).collect();
        Ok(match differing.len() {
            0 => 1 + self.degree(),
            1 => self.dims[differing[0]] as usize,
            2 => 2,
            _ => 0,
        })
    }

    /// |N[u] ∩ N[v]| by explicit set intersection; the slow twin of
    /// [`Radices::neighborhood_intersection_size`], kept as an oracle.
    pub fn neighborhood_intersection_brute(&self, u: &Vertex, v: &Vertex) -> Result<usize> {
        if self.dims.len() < 2 {
            return Err(Error::TooFewCoordinates { needed: 2, got: self.dims.len() });
        }
        self.check(u)?;
        self.check(v)?;
        let a = self.closed_neighborhood_indices(self.index_unchecked(u));
        let b = self.closed_neighborhood_indices(self.index_unchecked(v));
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(common)
    }
}

impl fmt::Display for Radices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// A word of a Hamming graph. Built through [`Radices`] so coordinates are
/// always in range; ordering agrees with the canonical index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    coords: Vec<u32>,
}

impl Vertex {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Number of nonzero coordinates; equals the distance to the zero word.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(dims: &[u32]) -> Radices {
        Radices::new(dims.to_vec()).unwrap()
    }

    fn v(r: &Radices, coords: &[u32]) -> Vertex {
        r.vertex(coords.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_radices() {
        assert_eq!(Radices::new(vec![]), Err(Error::EmptyRadices));
        assert_eq!(Radices::new(vec![3, 1, 3]), Err(Error::RadixTooSmall(1)));
        assert!(matches!(
            Radices::with_cap(vec![2, 2, 2], 4),
            Err(Error::CapExceeded { needed: 8, cap: 4 })
        ));
    }

    #[test]
    fn distance_cases() {
        let g = r(&[3, 3, 3]);
        assert_eq!(g.hamming_distance(&v(&g, &[0, 0, 0]), &v(&g, &[0, 0, 0])).unwrap(), 0);
        assert_eq!(g.hamming_distance(&v(&g, &[0, 0, 0]), &v(&g, &[1, 1, 1])).unwrap(), 3);
        assert_eq!(g.hamming_distance(&v(&g, &[1, 0, 1]), &v(&g, &[1, 2, 1])).unwrap(), 1);
    }

    #[test]
    fn weight_counts_nonzeros() {
        let g = r(&[3, 3, 3]);
        assert_eq!(v(&g, &[0, 0, 0]).weight(), 0);
        assert_eq!(v(&g, &[2, 0, 1]).weight(), 2);
    }

    #[test]
    fn modular_arithmetic() {
        let g = r(&[3, 3, 3]);
        assert_eq!(g.neg(&v(&g, &[1, 2, 1])).unwrap(), v(&g, &[2, 1, 2]));
        assert_eq!(g.neg(&g.zero()).unwrap(), g.zero());
        let h = r(&[4, 2]);
        assert_eq!(h.add(&v(&h, &[1, 1]), &v(&h, &[3, 1])).unwrap(), v(&h, &[0, 0]));
        assert_eq!(h.add(&v(&h, &[1, 0]), &v(&h, &[3, 1])).unwrap(), v(&h, &[0, 1]));
    }

    #[test]
    fn add_rejects_foreign_vertices() {
        let g = r(&[2, 2]);
        let h = r(&[3, 3]);
        let too_long = h.vertex(vec![2, 2]).unwrap();
        assert_eq!(
            g.add(&g.zero(), &too_long),
            Err(Error::CoordOutOfRange { index: 1, value: 2, radix: 2 })
        );
        let wrong_len = r(&[2, 2, 2]).zero();
        assert_eq!(
            g.add(&g.zero(), &wrong_len),
            Err(Error::LengthMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn unit_vectors() {
        let g = r(&[3, 3, 3]);
        assert_eq!(g.unit_vector(3, 2).unwrap(), v(&g, &[0, 0, 2]));
        assert_eq!(g.unit_vector(1, 0).unwrap(), g.zero());
        let h = r(&[4, 2]);
        assert_eq!(h.unit_vector(1, 3).unwrap(), v(&h, &[3, 0]));
        assert!(h.unit_vector(3, 0).is_err());
        assert!(h.unit_vector(2, 2).is_err());
        // neg(e_i^j) = e_i^(m_i - j)
        for i in 1..=3 {
            for j in 1..3 {
                let e = g.unit_vector(i, j).unwrap();
                assert_eq!(g.neg(&e).unwrap(), g.unit_vector(i, 3 - j).unwrap());
            }
        }
    }

    #[test]
    fn closed_neighborhood_small() {
        let g = r(&[2, 2]);
        let n = g.closed_neighborhood(&v(&g, &[0, 0])).unwrap();
        assert_eq!(n, vec![v(&g, &[0, 0]), v(&g, &[0, 1]), v(&g, &[1, 0])]);
    }

    #[test]
    fn closed_neighborhood_sizes() {
        for (dims, size) in [(&[3u32, 3, 3][..], 7usize), (&[6, 6, 3][..], 13)] {
            let g = r(dims);
            for u in g.vertices() {
                assert_eq!(g.closed_neighborhood(&u).unwrap().len(), size);
            }
        }
    }

    #[test]
    fn closed_neighborhood_equals_unit_vector_translates() {
        let g = r(&[3, 2, 4]);
        for u in g.vertices() {
            let mut expect: Vec<Vertex> = Vec::new();
            for i in 1..=g.n() {
                for j in 0..g.dims()[i - 1] {
                    let w = g.add(&u, &g.unit_vector(i, j).unwrap()).unwrap();
                    if !expect.contains(&w) {
                        expect.push(w);
                    }
                }
            }
            expect.sort();
            assert_eq!(g.closed_neighborhood(&u).unwrap(), expect);
        }
    }

    #[test]
    fn intersection_size_cases() {
        let g = r(&[3, 3, 3]);
        let z = v(&g, &[0, 0, 0]);
        assert_eq!(g.neighborhood_intersection_size(&z, &v(&g, &[1, 0, 0])).unwrap(), 3);
        assert_eq!(g.neighborhood_intersection_size(&z, &v(&g, &[1, 1, 0])).unwrap(), 2);
        assert_eq!(g.neighborhood_intersection_size(&z, &v(&g, &[1, 1, 1])).unwrap(), 0);
        assert_eq!(g.neighborhood_intersection_size(&z, &z).unwrap(), 7);
        let k5 = r(&[5]);
        assert_eq!(
            k5.neighborhood_intersection_size(&k5.zero(), &k5.zero()),
            Err(Error::TooFewCoordinates { needed: 2, got: 1 })
        );
    }

    #[test]
    fn index_round_trip() {
        let g = r(&[3, 3, 3]);
        assert_eq!(g.vertex_index(&v(&g, &[1, 0, 0])).unwrap(), 9);
        assert_eq!(g.vertex_index(&g.zero()).unwrap(), 0);
        let h = r(&[2, 3, 4]);
        for k in 0..h.vertex_count() {
            assert_eq!(h.vertex_index(&h.index_vertex(k).unwrap()).unwrap(), k);
        }
        assert!(h.index_vertex(24).is_err());
    }

    #[test]
    fn ball_two_matches_distance_filter() {
        let g = r(&[3, 2, 4]);
        for k in 0..g.vertex_count() {
            let u = g.index_vertex(k).unwrap();
            let expect: Vec<usize> = (0..g.vertex_count())
                .filter(|&l| {
                    let d = g.hamming_distance(&u, &g.index_vertex(l).unwrap()).unwrap();
                    d == 1 || d == 2
                })
                .collect();
            assert_eq!(g.ball_two_indices(k), expect);
        }
    }

    #[test]
    fn display_forms() {
        let g = r(&[4, 2]);
        assert_eq!(g.to_string(), "(4,2)");
        assert_eq!(v(&g, &[3, 1]).to_string(), "(3,1)");
    }
}
