//! Godsil-McKay switching: validating switching partitions, applying them,
//! block decomposition of a single switching set, and exhaustive enumeration
//! of switching sets.
//!
//! A partition `{X_1, ..., X_l, Y}` is valid when every vertex of `X_i` has
//! the same number `k_ij` of neighbors in `X_j`, and every vertex outside the
//! cells has 0, `|X_i|/2` or `|X_i|` neighbors in each `X_i`. Switching
//! complements the adjacency between each outside vertex and every cell in
//! which it has exactly half of its neighbors.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;

/// Cells `X_1..X_l` of a switching partition. `Y` is everything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SwitchingPartition {
    cells: Vec<Vec<usize>>,
}

impl SwitchingPartition {
    /// Sorts each cell; rejects empty cells and vertices shared by two cells
    /// or repeated within one.
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut cells = cells;
        let mut seen = std::collections::BTreeSet::new();
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::EmptySet);
            }
            cell.sort_unstable();
            for w in cell.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateVertex(w[0]));
                }
            }
            for &v in cell.iter() {
                if !seen.insert(v) {
                    return Err(Error::OverlappingCells(v));
                }
            }
        }
        Ok(SwitchingPartition { cells })
    }

    /// The `l = 1` case.
    pub fn single(set: &[usize]) -> Result<Self> {
        SwitchingPartition::new(vec![set.to_vec()])
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    fn check_range(&self, n: usize) -> Result<()> {
        for cell in &self.cells {
            if let Some(&v) = cell.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Ok(())
    }

    /// `cell_of[v]` is the index of the cell containing `v`.
    fn cell_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = Some(i);
            }
        }
        idx
    }
}

impl TryFrom<Vec<Vec<usize>>> for SwitchingPartition {
    type Error = Error;
    fn try_from(cells: Vec<Vec<usize>>) -> Result<Self> {
        SwitchingPartition::new(cells)
    }
}

impl From<SwitchingPartition> for Vec<Vec<usize>> {
    fn from(p: SwitchingPartition) -> Self {
        p.cells
    }
}

/// How many neighbors an outside vertex has in one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborClass {
    Zero,
    Half,
    Full,
    Invalid,
}

impl NeighborClass {
    pub fn classify(count: usize, cell_size: usize) -> Self {
        if count == 0 {
            NeighborClass::Zero
        } else if count == cell_size {
            NeighborClass::Full
        } else if 2 * count == cell_size {
            NeighborClass::Half
        } else {
            NeighborClass::Invalid
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YClassification {
    pub vertex: usize,
    /// One entry per cell.
    pub classes: Vec<NeighborClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// `cell_degrees[i][j]`: the common number of neighbors that each vertex
    /// of cell `i` has in cell `j`, or `None` if the vertices disagree.
    pub cell_degrees: Vec<Vec<Option<usize>>>,
    /// Every vertex outside the cells, in increasing order.
    pub y_classes: Vec<YClassification>,
}

impl ValidationReport {
    /// First reason the partition fails, for error messages.
    pub fn failure_reason(&self) -> Option<String> {
        for (i, row) in self.cell_degrees.iter().enumerate() {
            for (j, k) in row.iter().enumerate() {
                if k.is_none() {
                    return Some(format!(
                        "vertices of cell {i} have differing numbers of neighbors in cell {j}"
                    ));
                }
            }
        }
        for y in &self.y_classes {
            if let Some(i) = y.classes.iter().position(|&c| c == NeighborClass::Invalid) {
                return Some(format!(
                    "vertex {} has neither 0, half nor all of cell {i} as neighbors",
                    y.vertex
                ));
            }
        }
        None
    }
}

pub fn validate_partition(g: &Graph, p: &SwitchingPartition) -> Result<ValidationReport> {
    let n = g.order();
    p.check_range(n)?;
    let masks: Vec<Vec<u64>> = p.cells.iter().map(|c| g.mask(c)).collect();
    let cell_degrees: Vec<Vec<Option<usize>>> = p
        .cells
        .iter()
        .map(|ci| {
            masks
                .iter()
                .map(|mj| {
                    let k = g.degree_into(ci[0], mj);
                    ci.iter().all(|&v| g.degree_into(v, mj) == k).then_some(k)
                })
                .collect()
        })
        .collect();
    let cell_of = p.cell_index(n);
    let y_classes: Vec<YClassification> = (0..n)
        .filter(|&v| cell_of[v].is_none())
        .map(|v| YClassification {
            vertex: v,
            classes: p
                .cells
                .iter()
                .zip(&masks)
                .map(|(c, m)| NeighborClass::classify(g.degree_into(v, m), c.len()))
                .collect(),
        })
        .collect();
    let valid = cell_degrees.iter().flatten().all(Option::is_some)
        && y_classes
            .iter()
            .all(|y| !y.classes.contains(&NeighborClass::Invalid));
    Ok(ValidationReport {
        valid,
        cell_degrees,
        y_classes,
    })
}

pub fn validate_switching_set(g: &Graph, set: &[usize]) -> Result<ValidationReport> {
    validate_partition(g, &SwitchingPartition::single(set)?)
}

pub fn is_switching_set(g: &Graph, set: &[usize]) -> bool {
    validate_switching_set(g, set).is_ok_and(|r| r.valid)
}

fn require_valid(g: &Graph, p: &SwitchingPartition) -> Result<ValidationReport> {
    let report = validate_partition(g, p)?;
    match report.failure_reason() {
        None => Ok(report),
        Some(why) => Err(Error::InvalidSwitching(why)),
    }
}

/// Applies Godsil-McKay switching with respect to a valid partition.
pub fn apply_switching(g: &Graph, p: &SwitchingPartition) -> Result<Graph> {
    let report = require_valid(g, p)?;
    let mut out = g.clone();
    for y in &report.y_classes {
        for (cell, &class) in p.cells.iter().zip(&y.classes) {
            if class == NeighborClass::Half {
                for &x in cell {
                    out.toggle_edge(x, y.vertex);
                }
            }
        }
    }
    Ok(out)
}

/// Switching with respect to a single set.
pub fn switch(g: &Graph, set: &[usize]) -> Result<Graph> {
    apply_switching(g, &SwitchingPartition::single(set)?)
}

/// The adjacency matrix of a graph with switching set `X`, cut into blocks
///
/// ```text
///     [ B   M ]          M = [ N  J  O ]
///     [ Mᵀ  C ]
/// ```
///
/// where the columns of `M` are ordered: vertices with half their
/// neighbors in `X` (the `N` block), then those adjacent to all of `X`,
/// then those adjacent to none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertices of `X`, increasing; row order of `B` and `N`.
    pub x: Vec<usize>,
    pub b: Matrix,
    /// Common row sum of `B`.
    pub k: usize,
    pub n_vertices: Vec<usize>,
    pub j_vertices: Vec<usize>,
    pub o_vertices: Vec<usize>,
    pub n: Matrix,
    /// Adjacency among the outside vertices, ordered `n ++ j ++ o`.
    pub c: Matrix,
    #[serde(skip)]
    order: usize,
}

impl BlockDecomposition {
    /// Outside vertices in block order.
    pub fn y_order(&self) -> Vec<usize> {
        let mut y = self.n_vertices.clone();
        y.extend(&self.j_vertices);
        y.extend(&self.o_vertices);
        y
    }

    /// `M = [N J O]`.
    pub fn m(&self) -> Matrix {
        let xs = self.x.len();
        let j = Matrix::ones(xs, self.j_vertices.len());
        let o = Matrix::zeros(xs, self.o_vertices.len());
        Matrix::from_blocks(&[vec![&self.n, &j, &o]]).expect("block shapes agree")
    }

    /// `M' = [J-N J O]`.
    pub fn m_switched(&self) -> Matrix {
        let xs = self.x.len();
        let jn = &Matrix::ones(xs, self.n_vertices.len()) - &self.n;
        let j = Matrix::ones(xs, self.j_vertices.len());
        let o = Matrix::zeros(xs, self.o_vertices.len());
        Matrix::from_blocks(&[vec![&jn, &j, &o]]).expect("block shapes agree")
    }

    fn assemble(&self, m: &Matrix) -> Graph {
        let a = Matrix::from_blocks(&[vec![&self.b, m], vec![&m.transpose(), &self.c]])
            .expect("block shapes agree");
        // Block order -> original labels.
        let mut label = self.x.clone();
        label.extend(self.y_order());
        let mut g = Graph::empty(self.order);
        for i in 0..a.rows() {
            for j in i + 1..a.cols() {
                if a[(i, j)] == 1 {
                    g.set_edge(label[i], label[j], true);
                }
            }
        }
        g
    }

    /// Rebuilds the original graph from the blocks.
    pub fn reconstruct(&self) -> Graph {
        self.assemble(&self.m())
    }

    /// Builds the switched graph from `[B M'; M'ᵀ C]`.
    pub fn reconstruct_switched(&self) -> Graph {
        self.assemble(&self.m_switched())
    }
}

pub fn block_decomposition(g: &Graph, set: &[usize]) -> Result<BlockDecomposition> {
    let p = SwitchingPartition::single(set)?;
    let report = require_valid(g, &p)?;
    let x = p.cells[0].clone();
    let k = report.cell_degrees[0][0].expect("validated");
    let mut n_vertices = Vec::new();
    let mut j_vertices = Vec::new();
    let mut o_vertices = Vec::new();
    for y in &report.y_classes {
        match y.classes[0] {
            NeighborClass::Half => n_vertices.push(y.vertex),
            NeighborClass::Full => j_vertices.push(y.vertex),
            NeighborClass::Zero => o_vertices.push(y.vertex),
            NeighborClass::Invalid => unreachable!("validated"),
        }
    }
    let a = Matrix::adjacency(g);
    let mut y_order = n_vertices.clone();
    y_order.extend(&j_vertices);
    y_order.extend(&o_vertices);
    Ok(BlockDecomposition {
        b: a.submatrix(&x, &x),
        n: a.submatrix(&x, &n_vertices),
        c: a.submatrix(&y_order, &y_order),
        x,
        k,
        n_vertices,
        j_vertices,
        o_vertices,
        order: g.order(),
    })
}

/// `A''`: the adjacency matrix with only the rows of `X` switched against
/// the half-class columns. Not symmetric in general.
pub fn row_switched_adjacency(g: &Graph, set: &[usize]) -> Result<Matrix> {
    let bd = block_decomposition(g, set)?;
    let mut a = Matrix::adjacency(g);
    for &x in &bd.x {
        for &y in &bd.n_vertices {
            a[(x, y)] = 1 - a[(x, y)];
        }
    }
    Ok(a)
}

struct SetSearch<'a> {
    g: &'a Graph,
    size: usize,
    cocliques_only: bool,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    /// `count[v] = |N(v) ∩ chosen|`.
    count: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl SetSearch<'_> {
    fn new(g: &Graph, size: usize, cocliques_only: bool) -> SetSearch<'_> {
        SetSearch {
            g,
            size,
            cocliques_only,
            chosen: Vec::with_capacity(size),
            in_set: vec![false; g.order()],
            count: vec![0; g.order()],
            out: Vec::new(),
        }
    }

    fn push(&mut self, v: usize) {
        self.chosen.push(v);
        self.in_set[v] = true;
        for w in self.g.neighbors(v) {
            self.count[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.chosen.pop().expect("non-empty");
        self.in_set[v] = false;
        for w in self.g.neighbors(v) {
            self.count[w] -= 1;
        }
    }

    /// Whether the current partial set can still grow into a switching set.
    fn feasible(&self) -> bool {
        let rem = self.size - self.chosen.len();
        let (mut lo, mut hi) = (usize::MAX, 0);
        for &u in &self.chosen {
            lo = lo.min(self.count[u]);
            hi = hi.max(self.count[u]);
        }
        if hi > lo + rem {
            return false;
        }
        // Vertices below the last chosen one that were skipped are final
        // members of Y.
        let last = *self.chosen.last().expect("non-empty");
        let half = self.size.is_multiple_of(2).then_some(self.size / 2);
        (0..last).filter(|&w| !self.in_set[w]).all(|w| {
            let c = self.count[w];
            c == 0 || c + rem >= self.size || half.is_some_and(|h| c <= h && h <= c + rem)
        })
    }

    fn complete(&self) -> bool {
        let k = self.count[self.chosen[0]];
        let half = self.size.is_multiple_of(2).then_some(self.size / 2);
        self.chosen.iter().all(|&u| self.count[u] == k)
            && (0..self.g.order()).filter(|&w| !self.in_set[w]).all(|w| {
                let c = self.count[w];
                c == 0 || c == self.size || Some(c) == half
            })
    }

    fn extend(&mut self, start: usize) {
        if self.chosen.len() == self.size {
            if self.complete() {
                self.out.push(self.chosen.clone());
            }
            return;
        }
        let rem = self.size - self.chosen.len();
        for v in start..=self.g.order() - rem {
            if self.cocliques_only && self.count[v] > 0 {
                continue;
            }
            self.push(v);
            if self.feasible() {
                self.extend(v + 1);
            }
            self.pop();
        }
    }
}

/// All switching sets of the given size in lexicographic order, optionally
/// only those inducing a coclique.
///
/// The search runs in parallel over the smallest element; results are
/// concatenated in order so the output does not depend on thread count.
pub fn enumerate_switching_sets(g: &Graph, size: usize, cocliques_only: bool) -> Vec<Vec<usize>> {
    let n = g.order();
    if size == 0 || size > n {
        return Vec::new();
    }
    (0..=n - size)
        .into_par_iter()
        .map(|first| {
            let mut s = SetSearch::new(g, size, cocliques_only);
            s.push(first);
            if s.feasible() {
                s.extend(first + 1);
            }
            s.out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_named, random_graph};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Brute force over all subsets, independent of the pruned search.
    fn brute_force_sets(g: &Graph, size: usize, cocliques_only: bool) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if cocliques_only && !g.is_coclique(&set) {
                continue;
            }
            if is_switching_set(g, &set) {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    fn transversals_4x4() -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let perms = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
            [1, 0, 2, 3],
            [1, 0, 3, 2],
            [1, 2, 0, 3],
            [1, 2, 3, 0],
            [1, 3, 0, 2],
            [1, 3, 2, 0],
            [2, 0, 1, 3],
            [2, 0, 3, 1],
            [2, 1, 0, 3],
            [2, 1, 3, 0],
            [2, 3, 0, 1],
            [2, 3, 1, 0],
            [3, 0, 1, 2],
            [3, 0, 2, 1],
            [3, 1, 0, 2],
            [3, 1, 2, 0],
            [3, 2, 0, 1],
            [3, 2, 1, 0],
        ];
        for p in perms {
            let mut s: Vec<usize> = (0..4).map(|r| r * 4 + p[r]).collect();
            s.sort();
            out.push(s);
        }
        out.sort();
        out
    }

    #[test]
    fn any_pair_is_a_switching_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_graph(8, 0.5, &mut rng);
        for u in 0..8 {
            for v in u + 1..8 {
                assert!(is_switching_set(&g, &[u, v]));
            }
        }
        let c4 = build_named("cycle", &[4]).unwrap();
        assert_eq!(enumerate_switching_sets(&c4, 2, false).len(), 6);
    }

    #[test]
    fn grid_coclique_is_valid() {
        let l44 = build_grid(4, 4).unwrap();
        let r = validate_switching_set(&l44, &[0, 5, 10, 15]).unwrap();
        assert!(r.valid);
        assert_eq!(r.cell_degrees, vec![vec![Some(0)]]);
        assert!(r
            .y_classes
            .iter()
            .all(|y| y.classes == [NeighborClass::Half]));
    }

    #[test]
    fn path_prefix_is_invalid() {
        let p5 = build_named("path", &[5]).unwrap();
        let r = validate_switching_set(&p5, &[0, 1, 2, 3]).unwrap();
        assert!(!r.valid);
        assert_eq!(r.cell_degrees, vec![vec![None]]);
        assert_eq!(r.y_classes[0].vertex, 4);
        assert_eq!(r.y_classes[0].classes, vec![NeighborClass::Invalid]);
        assert!(matches!(
            switch(&p5, &[0, 1, 2, 3]),
            Err(Error::InvalidSwitching(_))
        ));
    }

    #[test]
    fn partition_errors() {
        assert_eq!(
            SwitchingPartition::new(vec![vec![0, 1], vec![1, 2]]),
            Err(Error::OverlappingCells(1))
        );
        assert_eq!(SwitchingPartition::new(vec![vec![]]), Err(Error::EmptySet));
        let k2 = build_named("complete", &[2]).unwrap();
        let p = SwitchingPartition::single(&[0, 2]).unwrap();
        assert!(matches!(
            validate_partition(&k2, &p),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        let json =
            serde_json::to_string(&SwitchingPartition::new(vec![vec![3, 1]]).unwrap()).unwrap();
        assert_eq!(json, "[[1,3]]");
        assert!(serde_json::from_str::<SwitchingPartition>("[[0,1],[1]]").is_err());
    }

    #[test]
    fn half_neighbor_moves_to_the_other_half() {
        let g = Graph::from_edges(5, &[(4, 0), (4, 1)]).unwrap();
        let h = switch(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h.edges(), vec![(2, 4), (3, 4)]);
    }

    #[test]
    fn prism_four_cycle() {
        let l32 = build_grid(3, 2).unwrap();
        let x = [0, 1, 2, 3];
        let h = switch(&l32, &x).unwrap();
        // (2,0) = 4 was adjacent to 0 and 2 in column 0; now to 1 and 3.
        assert!(h.has_edge(4, 1) && h.has_edge(4, 3) && !h.has_edge(4, 0));
        assert_eq!(h.degrees(), l32.degrees());
    }

    #[test]
    fn whole_vertex_set_is_identity_switch() {
        let k4 = build_named("complete", &[4]).unwrap();
        assert_eq!(
            enumerate_switching_sets(&k4, 4, false),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(switch(&k4, &[0, 1, 2, 3]).unwrap(), k4);
    }

    #[test]
    fn grid_cocliques_are_the_24_transversals() {
        let l44 = build_grid(4, 4).unwrap();
        let found = enumerate_switching_sets(&l44, 4, true);
        assert_eq!(found, brute_force_sets(&l44, 4, true));
        assert_eq!(found, transversals_4x4());
    }

    #[test]
    fn block_decomposition_grid() {
        let l44 = build_grid(4, 4).unwrap();
        let bd = block_decomposition(&l44, &[0, 5, 10, 15]).unwrap();
        assert!(bd.b.is_zero());
        assert_eq!(bd.k, 0);
        assert_eq!(bd.n_vertices.len(), 12);
        assert!(bd.j_vertices.is_empty() && bd.o_vertices.is_empty());
        assert_eq!(bd.n.col_sums(), vec![2; 12]);
        assert_eq!(bd.reconstruct(), l44);
        assert_eq!(
            bd.reconstruct_switched(),
            switch(&l44, &[0, 5, 10, 15]).unwrap()
        );
    }

    #[test]
    fn block_decomposition_k2() {
        let k2 = build_named("complete", &[2]).unwrap();
        let bd = block_decomposition(&k2, &[0, 1]).unwrap();
        assert_eq!(bd.b, Matrix::from_rows(&[[0, 1], [1, 0]]).unwrap());
        assert!(bd.y_order().is_empty());
        assert_eq!(bd.reconstruct(), k2);
        let p5 = build_named("path", &[5]).unwrap();
        assert!(block_decomposition(&p5, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn odd_cells_have_no_half_class() {
        // Triangle with a pendant vertex adjacent to all of it: {0,1,2} valid.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(is_switching_set(&g, &[0, 1, 2]));
        assert_eq!(switch(&g, &[0, 1, 2]).unwrap(), g);
        assert_eq!(NeighborClass::classify(1, 3), NeighborClass::Invalid);
    }

    #[test]
    fn multi_cell_partition() {
        // Two disjoint edges {0,1}, {2,3}; vertex 4 adjacent to 0 and 2.
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (4, 0), (4, 2)]).unwrap();
        let p = SwitchingPartition::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let r = validate_partition(&g, &p).unwrap();
        assert!(r.valid);
        assert_eq!(
            r.cell_degrees,
            vec![vec![Some(1), Some(0)], vec![Some(0), Some(1)]]
        );
        let h = apply_switching(&g, &p).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn enumeration_matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let n = rand::Rng::gen_range(&mut rng, 2..=10);
            let g = random_graph(n, rand::Rng::gen_range(&mut rng, 0.1..0.9), &mut rng);
            for size in 1..=n.min(7) {
                for cc in [false, true] {
                    assert_eq!(
                        enumerate_switching_sets(&g, size, cc),
                        brute_force_sets(&g, size, cc),
                        "{g:?} size {size} cocliques {cc}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_thread_count_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_graph(14, 0.5, &mut rng);
        let base = enumerate_switching_sets(&g, 4, false);
        for threads in [1, 3] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            assert_eq!(
                pool.install(|| enumerate_switching_sets(&g, 4, false)),
                base
            );
        }
    }

    #[test]
    fn one_sided_switch_gram_identity() {
        let fixtures: Vec<(Graph, Vec<usize>)> = vec![
            (build_grid(4, 4).unwrap(), vec![0, 5, 10, 15]),
            (build_grid(3, 2).unwrap(), vec![0, 1, 2, 3]),
            (build_grid(4, 3).unwrap(), vec![0, 1, 3, 4]),
        ];
        for (g, x) in fixtures {
            let a2 = row_switched_adjacency(&g, &x).unwrap();
            let a1 = Matrix::adjacency(&switch(&g, &x).unwrap());
            assert_eq!(&a2 * &a2.transpose(), &a1 * &a1.transpose());
        }
    }

    proptest! {
        #[test]
        fn involution_and_y_degrees(n in 3usize..11, p in 0.1f64..0.9, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng);
            for size in [2, 4] {
                for x in enumerate_switching_sets(&g, size, false) {
                    let h = switch(&g, &x).unwrap();
                    prop_assert_eq!(switch(&h, &x).unwrap(), g.clone());
                    for v in (0..n).filter(|v| !x.contains(v)) {
                        prop_assert_eq!(h.degree(v), g.degree(v));
                    }
                    let bd = block_decomposition(&g, &x).unwrap();
                    prop_assert_eq!(bd.reconstruct(), g.clone());
                    prop_assert_eq!(bd.reconstruct_switched(), h);
                }
            }
        }
    }
}
