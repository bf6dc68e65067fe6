//! Fixed example graphs whose switched copies are isomorphic although no
//! isomorphism maps the switching set onto itself.
//!
//! Labelings:
//! * `m5`: the first `2m` vertices are `X₁`, the rest `X₂`.
//! * `bipartite18`: `a,b,c,d = 0..3`, `a',b',c',d' = 4..7`,
//!   `a'',b'',c'',d'' = 8..11`, `u₀..u₅ = 12..17`.
//! * `gadget9`: `a₀a₁a₂ b₀b₁b₂ c₀c₁c₂ = 0..8`.
//! * `example27`: `bipartite18` followed by `gadget9` at `18..26`; `a₀` is
//!   joined to `X`, `a₁` to `X'` and `a₂` to `X''`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::isomorphism::automorphism_group;
use crate::matrix::Matrix;
use crate::switching::validate_switching_set;

/// A 0/1 matrix with `T + Tᵀ = J - I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TournamentMatrix {
    m: usize,
    entries: Matrix,
}

impl TournamentMatrix {
    pub fn new(entries: Matrix) -> Result<Self> {
        let m = entries.rows();
        if entries.cols() != m {
            return Err(Error::Matrix("tournament matrix must be square".into()));
        }
        let sum = &entries + &entries.transpose();
        if !entries.is_binary() || sum != &Matrix::ones(m, m) - &Matrix::identity(m) {
            return Err(Error::Matrix("T + Tᵀ must equal J - I".into()));
        }
        Ok(TournamentMatrix { m, entries })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn is_regular(&self) -> bool {
        self.entries
            .row_sums()
            .iter()
            .all(|&s| 2 * s as usize + 1 == self.m)
    }
}

/// The circulant tournament where `i` beats `i+1, ..., i+(m-1)/2 (mod m)`.
pub fn cyclic_tournament(m: usize) -> Result<TournamentMatrix> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "a regular tournament needs odd order, got {m}"
        )));
    }
    let mut t = Matrix::zeros(m, m);
    for i in 0..m {
        for d in 1..=(m - 1) / 2 {
            t[(i, (i + d) % m)] = 1;
        }
    }
    TournamentMatrix::new(t)
}

/// `R = I_m ⊗ (J₂ - I₂)`, the involution swapping `2i` and `2i + 1`.
pub fn pair_swap(m: usize) -> Permutation {
    Permutation::new((0..2 * m).map(|v| v ^ 1).collect()).expect("xor 1 is a bijection")
}

fn pair_swap_matrix(m: usize) -> Matrix {
    let z = &Matrix::ones(2, 2) - &Matrix::identity(2);
    Matrix::identity(m).kron(&z)
}

/// The graph with adjacency `[[B, N], [Nᵀ, B]]`, `N = T ⊗ J₂ + I`, and its
/// switching set `X₁ = 0..2m`.
pub fn prop4_graph(b: &Matrix, t: &TournamentMatrix) -> Result<(Graph, Vec<usize>)> {
    let m = t.order();
    if m <= 1 {
        return Err(Error::InvalidParameter(
            "needs a tournament of order m > 1".into(),
        ));
    }
    if b.rows() != 2 * m || b.cols() != 2 * m {
        return Err(Error::SizeMismatch {
            expected: 2 * m,
            found: b.rows(),
        });
    }
    let n = &t.matrix().kron(&Matrix::ones(2, 2)) + &Matrix::identity(2 * m);
    let nt = n.transpose();
    let a = Matrix::from_blocks(&[vec![b, &n], vec![&nt, b]])?;
    if !a.is_symmetric() {
        return Err(Error::Matrix("B must be symmetric".into()));
    }
    let g = Graph::from_adjacency(&a.to_u8_rows()?)?;
    let x1: Vec<usize> = (0..2 * m).collect();
    if let Some(why) = validate_switching_set(&g, &x1)?.failure_reason() {
        return Err(Error::InvalidSwitching(why));
    }
    Ok((g, x1))
}

/// The vertex map `p` with `G.permute(p) = G'` for a graph from
/// [`prop4_graph`]: `X₁ ∋ j ↦ 2m + ρ(j)` and `X₂ ∋ 2m + i ↦ i`. Its inverse
/// is the row map of `Q = [[O, I], [R, O]]`, so `A' = Q A Qᵀ`.
pub fn prop4_witness(m: usize) -> Permutation {
    let rho = pair_swap(m);
    let map = (0..2 * m)
        .map(|j| 2 * m + rho.apply(j))
        .chain(0..2 * m)
        .collect();
    Permutation::new(map).expect("block map is a bijection")
}

/// `Q = [[O, I], [R, O]]`.
pub fn prop4_q_matrix(m: usize) -> Matrix {
    let o = Matrix::zeros(2 * m, 2 * m);
    let i = Matrix::identity(2 * m);
    let r = pair_swap_matrix(m);
    Matrix::from_blocks(&[vec![&o, &i], vec![&r, &o]]).expect("square blocks")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop4Report {
    pub m: usize,
    /// `R B Rᵀ = B`.
    pub rho_is_automorphism: bool,
    pub rho_is_fixed_point_free_involution: bool,
    /// The orbits of `Aut(H)` are exactly the pairs `{2i, 2i + 1}`.
    pub orbits_are_rho_pairs: bool,
    pub b_regular: bool,
    pub orbits: Vec<Vec<usize>>,
    pub all_pass: bool,
}

pub fn verify_prop4_hypothesis(b: &Matrix, m: usize) -> Result<Prop4Report> {
    if b.rows() != 2 * m || b.cols() != 2 * m {
        return Err(Error::SizeMismatch {
            expected: 2 * m,
            found: b.rows(),
        });
    }
    let h = Graph::from_adjacency(&b.to_u8_rows()?)?;
    let r = pair_swap_matrix(m);
    let rho = pair_swap(m);
    let rho_is_automorphism = &(&r * b) * &r.transpose() == *b;
    let rho_is_fixed_point_free_involution =
        rho.then(&rho).is_identity() && (0..2 * m).all(|v| rho.apply(v) != v);
    let orbits = automorphism_group(&h).orbits;
    let pairs: Vec<Vec<usize>> = (0..m).map(|i| vec![2 * i, 2 * i + 1]).collect();
    let orbits_are_rho_pairs = orbits == pairs;
    let b_regular = h.is_regular();
    Ok(Prop4Report {
        m,
        rho_is_automorphism,
        rho_is_fixed_point_free_involution,
        orbits_are_rho_pairs,
        b_regular,
        all_pass: rho_is_automorphism
            && rho_is_fixed_point_free_involution
            && orbits_are_rho_pairs
            && b_regular,
        orbits,
    })
}

/// The 10×10 matrix `B` for `m = 5`, built from the 2×2 blocks `Z = J - I`,
/// `O` and `J`.
pub fn m5_b_matrix() -> Matrix {
    const PATTERN: [&[u8; 5]; 5] = [b"ZOZOJ", b"OZJZO", b"ZJOZO", b"OZZOJ", b"JOOJO"];
    let j = Matrix::ones(2, 2);
    let o = Matrix::zeros(2, 2);
    let z = &j - &Matrix::identity(2);
    let blocks: Vec<Vec<&Matrix>> = PATTERN
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    b'Z' => &z,
                    b'J' => &j,
                    _ => &o,
                })
                .collect()
        })
        .collect();
    Matrix::from_blocks(&blocks).expect("uniform 2×2 blocks")
}

/// The 20-vertex graph from [`m5_b_matrix`] and the cyclic tournament of
/// order 5, with `X₁`.
pub fn m5_fixture() -> (Graph, Vec<usize>) {
    let t = cyclic_tournament(5).expect("5 is odd");
    prop4_graph(&m5_b_matrix(), &t).expect("fixture is valid")
}

const U: usize = 12;
const BIPARTITE18_ADJ: [[usize; 6]; 6] = [
    // a b c d = 0..3, primes +4, double primes +8.
    [0, 1, 4, 6, 8, 11],
    [1, 2, 4, 5, 8, 10],
    [1, 3, 5, 6, 8, 9],
    [2, 3, 5, 7, 9, 10],
    [0, 3, 6, 7, 9, 11],
    [0, 2, 4, 7, 10, 11],
];

fn bipartite18_edges() -> Vec<(usize, usize)> {
    BIPARTITE18_ADJ
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |&v| (U + i, v)))
        .collect()
}

/// The 18-vertex bipartite graph and `X = {a, b, c, d}`.
pub fn bipartite18() -> (Graph, Vec<usize>) {
    let g = Graph::from_edges(18, &bipartite18_edges()).expect("fixed edge list");
    (g, vec![0, 1, 2, 3])
}

/// `X' = {a', b', c', d'}`.
pub const X_PRIME: [usize; 4] = [4, 5, 6, 7];
/// `X'' = {a'', b'', c'', d''}`.
pub const X_DOUBLE_PRIME: [usize; 4] = [8, 9, 10, 11];

/// `φ`: `x ↦ x' ↦ x'' ↦ x` on the letters and `uᵢ ↦ u_{i+1}`.
pub fn bipartite18_phi() -> Permutation {
    let map = (0..12)
        .map(|v| (v + 4) % 12)
        .chain((0..6).map(|i| U + (i + 1) % 6))
        .collect();
    Permutation::new(map).expect("rotation")
}

/// For each vertex of `part`, the sorted indices `i` of its neighbors `uᵢ`,
/// listed in sorted order.
pub fn u_triples(g: &Graph, part: &[usize]) -> Vec<Vec<usize>> {
    let mut triples: Vec<Vec<usize>> = part
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .filter(|&w| (U..U + 6).contains(&w))
                .map(|w| w - U)
                .collect()
        })
        .collect();
    triples.sort();
    triples
}

fn gadget9_edges(offset: usize) -> Vec<(usize, usize)> {
    let a = |i: usize| offset + i % 3;
    let b = |i: usize| offset + 3 + i % 3;
    let c = |i: usize| offset + 6 + i % 3;
    (0..3)
        .flat_map(|i| {
            [
                (a(i), b(i)),
                (a(i), c(i + 2)),
                (b(i), c(i)),
                (b(i), b(i + 1)),
                (b(i), c(i + 2)),
            ]
        })
        .collect()
}

/// Nine vertices `aᵢ, bᵢ, cᵢ` with automorphism group `C₃`.
pub fn gadget9() -> Graph {
    Graph::from_edges(9, &gadget9_edges(0)).expect("fixed edge list")
}

/// The rotation `i ↦ i + 1` applied to every letter class of a gadget at
/// `offset` inside a graph of order `n`; other vertices are fixed.
fn gadget_rotation(n: usize, offset: usize) -> Vec<usize> {
    (0..n)
        .map(|v| {
            if (offset..offset + 9).contains(&v) {
                let (class, i) = ((v - offset) / 3, (v - offset) % 3);
                offset + 3 * class + (i + 1) % 3
            } else {
                v
            }
        })
        .collect()
}

pub fn gadget9_rotation() -> Permutation {
    Permutation::new(gadget_rotation(9, 0)).expect("rotation")
}

/// `bipartite18` with `gadget9` attached through `a₀, a₁, a₂`, and `X`.
pub fn example27() -> (Graph, Vec<usize>) {
    let mut edges = bipartite18_edges();
    edges.extend(gadget9_edges(18));
    for (k, part) in [[0, 1, 2, 3], X_PRIME, X_DOUBLE_PRIME].iter().enumerate() {
        edges.extend(part.iter().map(|&v| (18 + k, v)));
    }
    let g = Graph::from_edges(27, &edges).expect("fixed edge list");
    (g, vec![0, 1, 2, 3])
}

/// `φ` on the first 18 vertices combined with the gadget rotation.
pub fn example27_phi() -> Permutation {
    let phi = bipartite18_phi();
    let mut map = gadget_rotation(27, 18);
    map[..18].copy_from_slice(phi.as_slice());
    Permutation::new(map).expect("disjoint rotations")
}
