//! Simple undirected graphs stored as one bit row per vertex, plus vertex
//! permutations and the catalog constructors used throughout the crate.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Undirected simple graph on the vertices `0..n`.
///
/// Row `v` is a bitset of the neighbors of `v`. Rows are symmetric, the
/// diagonal is clear, and bits at positions `>= n` are always zero, so two
/// graphs are equal exactly when their edge sets are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from unordered vertex pairs. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a square 0/1 matrix. The matrix must be symmetric
    /// with a zero diagonal.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Matrix(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if a > 1 {
                    return Err(Error::Matrix(format!("entry ({i},{j}) is {a}, not 0/1")));
                }
                if a != rows[j][i] {
                    return Err(Error::Matrix(format!("not symmetric at ({i},{j})")));
                }
                if a == 1 {
                    if i == j {
                        return Err(Error::LoopEdge(i));
                    }
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// `|N(u) ∩ N(v)|`.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of neighbors of `v` inside the bitset `mask` (same word layout
    /// as a row).
    #[inline]
    pub fn degree_into(&self, v: usize, mask: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect())
            .collect()
    }

    /// Bitset with the given vertices set, in the row word layout.
    pub fn mask(&self, vertices: &[usize]) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for &v in vertices {
            m[v / WORD] |= 1 << (v % WORD);
        }
        m
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether no two of the given vertices are adjacent.
    pub fn is_coclique(&self, vertices: &[usize]) -> bool {
        let m = self.mask(vertices);
        vertices.iter().all(|&v| self.degree_into(v, &m) == 0)
    }

    /// Relabels vertices: `(p(u), p(v))` is an edge of the result exactly when
    /// `(u, v)` is an edge of `self`.
    pub fn permute(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        let mut out = Graph::empty(self.n);
        for (u, v) in self.edges() {
            out.set_edge(p.apply(u), p.apply(v), true);
        }
        Ok(out)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v);
        let (wu, bu) = (u * self.words + v / WORD, v % WORD);
        let (wv, bv) = (v * self.words + u / WORD, u % WORD);
        if on {
            self.bits[wu] |= 1 << bu;
            self.bits[wv] |= 1 << bv;
        } else {
            self.bits[wu] &= !(1 << bu);
            self.bits[wv] &= !(1 << bv);
        }
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        let on = !self.has_edge(u, v);
        self.set_edge(u, v, on);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Sorts a vertex list and checks range and uniqueness.
pub fn normalize_set(n: usize, vertices: &[usize]) -> Result<Vec<usize>> {
    let mut s = vertices.to_vec();
    s.sort_unstable();
    for w in s.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateVertex(w[0]));
        }
    }
    if let Some(&v) = s.last() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Ok(s)
}

/// A bijection on `0..n`, stored in image form: `map[v]` is the image of `v`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n {
                return Err(Error::NotAPermutation(format!("image {x} >= {n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Permutation from disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &v) in cyc.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut touched[v], true) {
                    return Err(Error::NotAPermutation(format!("{v} in two cycles")));
                }
                map[v] = cyc[(k + 1) % cyc.len()];
            }
        }
        Permutation::new(map)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (v, &w) in self.map.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { map: inv }
    }

    /// `self` followed by `other`: `v ↦ other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: self.map.iter().map(|&w| other.map[w]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Whether the permutation maps the vertex set onto itself.
    pub fn fixes_set(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.map.len()];
        for &v in set {
            inside[v] = true;
        }
        set.iter().all(|&v| inside[self.map[v]])
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(map: Vec<usize>) -> Result<Self> {
        Permutation::new(map)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.map
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.map)
    }
}

/// Relabels `g` by `p`; see [`Graph::permute`].
pub fn apply_permutation(g: &Graph, p: &Permutation) -> Result<Graph> {
    g.permute(p)
}

pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

/// The `l × m` rook's graph L(l, m), the line graph of K_{l,m}.
///
/// Vertex `(r, c)` gets label `r·m + c`; two vertices are adjacent when they
/// share exactly one coordinate.
pub fn build_grid(l: usize, m: usize) -> Result<Graph> {
    if l == 0 || m == 0 {
        return Err(Error::InvalidParameter(format!(
            "grid dimensions must be positive, got {l}x{m}"
        )));
    }
    let mut g = Graph::empty(l * m);
    for a in 0..l * m {
        for b in a + 1..l * m {
            let (ra, ca) = (a / m, a % m);
            let (rb, cb) = (b / m, b % m);
            if (ra == rb) != (ca == cb) {
                g.set_edge(a, b, true);
            }
        }
    }
    Ok(g)
}

/// Pairs `{i, j}`, `i < j < m`, in colex order: (0,1), (0,2), (1,2), (0,3), ...
pub fn colex_pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Triangular graph T(m), the line graph of K_m. Vertex `k` is the `k`-th
/// pair of [`colex_pairs`].
pub fn build_triangular(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "triangular graph needs m >= 2, got {m}"
        )));
    }
    let pairs = colex_pairs(m);
    let mut g = Graph::empty(pairs.len());
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let (p, q) = (pairs[a], pairs[b]);
            let shared = [p.0, p.1].iter().filter(|&&x| x == q.0 || x == q.1).count();
            if shared == 1 {
                g.set_edge(a, b, true);
            }
        }
    }
    Ok(g)
}

/// Standard small graphs by name.
///
/// | key                  | params | graph                            |
/// |----------------------|--------|----------------------------------|
/// | `empty`              | n      | n isolated vertices              |
/// | `complete`           | n      | K_n                              |
/// | `path`               | n      | P_n, edges i–(i+1)               |
/// | `cycle`              | n ≥ 3  | C_n, edges i–(i+1 mod n)         |
/// | `star`               | k      | K_{1,k}, center 0                |
/// | `complete_bipartite` | a, b   | K_{a,b}, parts 0..a and a..a+b   |
pub fn build_named(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "`{name}` takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let mut edges = Vec::new();
    let n = match name {
        "empty" => {
            want(1)?;
            params[0]
        }
        "complete" => {
            want(1)?;
            let n = params[0];
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            n
        }
        "path" => {
            want(1)?;
            let n = params[0];
            edges.extend((1..n).map(|v| (v - 1, v)));
            n
        }
        "cycle" => {
            want(1)?;
            let n = params[0];
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            edges.extend((0..n).map(|v| (v, (v + 1) % n)));
            n
        }
        "star" => {
            want(1)?;
            let k = params[0];
            edges.extend((1..=k).map(|v| (0, v)));
            k + 1
        }
        "complete_bipartite" => {
            want(2)?;
            let (a, b) = (params[0], params[1]);
            for u in 0..a {
                for v in a..a + b {
                    edges.push((u, v));
                }
            }
            a + b
        }
        _ => return Err(Error::UnknownGraph(name.to_string())),
    };
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi G(n, p).
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    use rand::seq::SliceRandom;
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Permutation { map }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for u in 0..g.order() {
            assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn from_edges_basic() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let e3 = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(e3.edge_count(), 0);
        assert_eq!(e3.order(), 3);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_regular());
        assert_simple(&c4);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let g = build_named("cycle", &[130]).unwrap();
        assert_eq!(g.edge_count(), 130);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_simple(&g);
    }

    #[test]
    fn permutation_examples() {
        let k2 = build_named("complete", &[2]).unwrap();
        assert_eq!(k2.permute(&Permutation::identity(2)).unwrap(), k2);

        let p3 = build_named("path", &[3]).unwrap();
        let swap = Permutation::from_cycles(3, &[&[0, 2]]).unwrap();
        assert_eq!(p3.permute(&swap).unwrap(), p3);

        let c4 = build_named("cycle", &[4]).unwrap();
        let rot = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(c4.permute(&rot).unwrap(), c4);

        assert!(matches!(
            c4.permute(&Permutation::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        let p: Permutation = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(p.inverse().as_slice(), &[1, 2, 0]);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    #[test]
    fn grid_examples() {
        let c4 = build_named("cycle", &[4]).unwrap();
        let l22 = build_grid(2, 2).unwrap();
        // 0-1, 0-2, 1-3, 2-3: a 4-cycle 0-1-3-2.
        assert_eq!(l22.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(l22.degrees(), c4.degrees());

        let l44 = build_grid(4, 4).unwrap();
        assert_eq!(l44.order(), 16);
        assert!(l44.degrees().iter().all(|&d| d == 6));

        // Prism: two triangles (columns) joined by a perfect matching (rows).
        let l32 = build_grid(3, 2).unwrap();
        assert_eq!(
            l32.edges(),
            vec![
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5)
            ]
        );
        assert!(build_grid(0, 3).is_err());
    }

    #[test]
    fn triangular_examples() {
        let t3 = build_triangular(3).unwrap();
        assert_eq!(t3, build_named("complete", &[3]).unwrap());

        // Octahedron: complement of a perfect matching on 6 vertices.
        let t4 = build_triangular(4).unwrap();
        assert_eq!(t4.edge_count(), 12);
        assert!(t4.degrees().iter().all(|&d| d == 4));
        for (a, b) in [(0usize, 5usize), (1, 4), (2, 3)] {
            assert!(!t4.has_edge(a, b));
        }

        // Complement of the Petersen graph, strongly regular (10, 6, 3, 4).
        let t5 = build_triangular(5).unwrap();
        assert_eq!(t5.order(), 10);
        assert!(t5.degrees().iter().all(|&d| d == 6));
        assert_eq!(t5.edge_count(), 30);
        for u in 0..10 {
            for v in u + 1..10 {
                let lam = t5.common_neighbor_count(u, v);
                assert_eq!(lam, if t5.has_edge(u, v) { 3 } else { 4 });
            }
        }
        assert!(build_triangular(1).is_err());
    }

    #[test]
    fn named_examples() {
        assert_eq!(build_named("complete", &[4]).unwrap().edge_count(), 6);
        assert_eq!(
            build_named("path", &[3]).unwrap().edges(),
            vec![(0, 1), (1, 2)]
        );
        assert_eq!(build_named("cycle", &[4]).unwrap().edge_count(), 4);
        assert_eq!(build_named("star", &[4]).unwrap().degree(0), 4);
        assert_eq!(
            build_named("complete_bipartite", &[2, 3])
                .unwrap()
                .edge_count(),
            6
        );
        assert_eq!(
            build_named("dodecahedron", &[]),
            Err(Error::UnknownGraph("dodecahedron".into()))
        );
        assert!(build_named("complete", &[]).is_err());
    }

    #[test]
    fn normalize_set_checks() {
        assert_eq!(normalize_set(5, &[3, 1]).unwrap(), vec![1, 3]);
        assert_eq!(normalize_set(5, &[1, 1]), Err(Error::DuplicateVertex(1)));
        assert!(normalize_set(3, &[3]).is_err());
    }
}
