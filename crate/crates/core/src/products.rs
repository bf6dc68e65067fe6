//! Tensor products `H × G` (adjacency `E ⊗ A`) and strengthened tensor
//! products `H ⊠ G` (adjacency `(E + I) ⊗ A`), and how switching sets of `G`
//! carry over to them.
//!
//! Vertex `(i, x)` of a product is labeled `i * |V(G)| + x`, with the `H`
//! factor always passed first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize_set, Graph};
use crate::switching::{validate_partition, validate_switching_set, SwitchingPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Tensor,
    Strengthened,
}

impl ProductKind {
    pub const ALL: [ProductKind; 2] = [ProductKind::Tensor, ProductKind::Strengthened];

    pub fn build(self, h: &Graph, g: &Graph) -> Graph {
        match self {
            ProductKind::Tensor => tensor(h, g),
            ProductKind::Strengthened => strengthened_tensor(h, g),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Tensor => "tensor",
            ProductKind::Strengthened => "strengthened",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tensor" => Ok(ProductKind::Tensor),
            "strengthened" => Ok(ProductKind::Strengthened),
            _ => Err(Error::InvalidParameter(format!(
                "unknown product kind {s:?} (expected tensor or strengthened)"
            ))),
        }
    }
}

fn blow_up(h: &Graph, g: &Graph, diagonal: bool) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(h.order() * n);
    let g_edges = g.edges();
    let mut blocks: Vec<(usize, usize)> = h.edges();
    if diagonal {
        blocks.extend((0..h.order()).map(|i| (i, i)));
    }
    for (i, j) in blocks {
        for &(x, y) in &g_edges {
            out.set_edge(i * n + x, j * n + y, true);
            out.set_edge(i * n + y, j * n + x, true);
        }
    }
    out
}

pub fn tensor(h: &Graph, g: &Graph) -> Graph {
    blow_up(h, g, false)
}

pub fn strengthened_tensor(h: &Graph, g: &Graph) -> Graph {
    blow_up(h, g, true)
}

/// `K_n ⊠ G`: every vertex of `G` replaced by an independent set of size `n`.
pub fn coclique_extension(n: usize, g: &Graph) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "coclique extension needs n >= 1".into(),
        ));
    }
    Ok(strengthened_tensor(&complete(n), g))
}

fn complete(n: usize) -> Graph {
    let mut k = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            k.set_edge(u, v, true);
        }
    }
    k
}

/// `|N̄(i) ∩ N̄(j)|` with `N̄(v) = N(v) ∪ {v}`: common neighbors in `H` with a
/// loop added at every vertex.
pub fn closed_common_neighbors(h: &Graph, i: usize, j: usize) -> Result<usize> {
    h.check_vertex(i)?;
    h.check_vertex(j)?;
    let shared = if i == j {
        h.degree(i)
    } else {
        h.common_neighbor_count(i, j)
    };
    let loops = if i == j {
        1
    } else {
        2 * h.has_edge(i, j) as usize
    };
    Ok(shared + loops)
}

fn require_switching_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    let x = normalize_set(g.order(), set)?;
    let report = validate_switching_set(g, &x)?;
    match report.failure_reason() {
        None => Ok(x),
        Some(why) => Err(Error::InvalidSwitching(why)),
    }
}

/// `{i} × X` in either product. Besides `X` being a switching set of `G`,
/// the vertices `(j, x)` with `j ~ i` see `X`'s induced degree `k` of
/// `{i} × X`, so the lift is rejected unless `i` is isolated or `k` is `0`,
/// `|X|/2` or `|X|`.
pub fn lift_switching_set(h: &Graph, i: usize, set: &[usize], g: &Graph) -> Result<Vec<usize>> {
    h.check_vertex(i)?;
    let x = require_switching_set(g, set)?;
    let k = g.degree_into(x[0], &g.mask(&x));
    if h.degree(i) > 0 && !(k == 0 || 2 * k == x.len() || k == x.len()) {
        return Err(Error::InvalidSwitching(format!(
            "X induces a {k}-regular graph on {} vertices, so copies of X next to the lift see \
             neither none, half nor all of it",
            x.len()
        )));
    }
    let n = g.order();
    Ok(x.iter().map(|&v| i * n + v).collect())
}

/// The partition of `kind(h, g)` into the cells `{i} × X`, one per vertex of
/// `h`. It is valid whenever `X` is, and switching it gives
/// `kind(h, switch(g, X))`.
pub fn product_switching_partition(
    h: &Graph,
    set: &[usize],
    g: &Graph,
    kind: ProductKind,
) -> Result<SwitchingPartition> {
    let x = require_switching_set(g, set)?;
    let n = g.order();
    let cells: Vec<Vec<usize>> = (0..h.order())
        .map(|i| x.iter().map(|&v| i * n + v).collect())
        .collect();
    let partition = SwitchingPartition::new(cells)?;
    let report = validate_partition(&kind.build(h, g), &partition)?;
    debug_assert!(
        report.valid,
        "product partition must validate: {:?}",
        report.failure_reason()
    );
    if let Some(why) = report.failure_reason() {
        return Err(Error::InvalidSwitching(why));
    }
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_named, build_triangular, random_graph};
    use crate::spectrum::{char_poly, cospectral};
    use crate::switching::{apply_switching, enumerate_switching_sets, is_switching_set, switch};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn named(name: &str, p: &[usize]) -> Graph {
        build_named(name, p).unwrap()
    }

    #[test]
    fn small_products() {
        let k2 = named("complete", &[2]);
        let t = tensor(&k2, &k2);
        assert_eq!(t.edges(), vec![(0, 3), (1, 2)]);
        let c4 = named("cycle", &[4]);
        assert!(crate::isomorphism::are_isomorphic(&strengthened_tensor(&k2, &k2), &c4).is_some());
        let k44 = named("complete_bipartite", &[4, 4]);
        assert!(crate::isomorphism::are_isomorphic(&strengthened_tensor(&k2, &c4), &k44).is_some());
        assert_eq!(
            coclique_extension(2, &c4).unwrap(),
            strengthened_tensor(&k2, &c4)
        );
        let g = build_grid(3, 2).unwrap();
        assert_eq!(coclique_extension(1, &g).unwrap(), g);
        assert_eq!(strengthened_tensor(&Graph::empty(1), &g), g);
        assert!(coclique_extension(0, &g).is_err());
        assert_eq!(tensor(&named("path", &[3]), &g).order(), 18);
        assert_eq!(
            coclique_extension(2, &build_triangular(4).unwrap())
                .unwrap()
                .order(),
            12
        );
    }

    #[test]
    fn lifts_of_four_cycles() {
        let p3 = named("path", &[3]);
        let grid = build_grid(3, 2).unwrap();
        let x = [0, 1, 2, 3];
        let lift = lift_switching_set(&p3, 0, &x, &grid).unwrap();
        assert_eq!(lift, vec![0, 1, 2, 3]);
        assert!(is_switching_set(&tensor(&p3, &grid), &lift));
        assert!(is_switching_set(&strengthened_tensor(&p3, &grid), &lift));

        let k2 = named("complete", &[2]);
        let t4 = build_triangular(4).unwrap();
        // Colex pairs 01,02,12,03,13,23: 01-12-23-03 is a 4-cycle.
        let cycle = [0, 2, 3, 5];
        assert!(is_switching_set(&t4, &cycle));
        let lift = lift_switching_set(&k2, 1, &cycle, &t4).unwrap();
        assert_eq!(lift, vec![6, 8, 9, 11]);
        assert!(is_switching_set(&strengthened_tensor(&k2, &t4), &lift));

        let k1 = Graph::empty(1);
        assert_eq!(lift_switching_set(&k1, 0, &x, &grid).unwrap(), x.to_vec());
        assert!(lift_switching_set(&p3, 3, &x, &grid).is_err());
        assert!(lift_switching_set(&p3, 0, &[0, 1, 2], &grid).is_err());
    }

    #[test]
    fn lift_rejects_unliftable_regular_sets() {
        // X = K₃ inside K₄ is 2-regular of size 3; the fourth vertex sees all
        // of X, but the copies of X next to the lift would see 2 of 3.
        let k4 = named("complete", &[4]);
        let k2 = named("complete", &[2]);
        assert!(is_switching_set(&k4, &[0, 1, 2]));
        assert!(lift_switching_set(&k2, 0, &[0, 1, 2], &k4).is_err());
        assert!(lift_switching_set(&Graph::empty(2), 0, &[0, 1, 2], &k4).is_ok());
    }

    #[test]
    fn partition_lift_examples() {
        let p3 = named("path", &[3]);
        let grid = build_grid(3, 2).unwrap();
        let x = [0, 1, 2, 3];
        let p = product_switching_partition(&p3, &x, &grid, ProductKind::Tensor).unwrap();
        assert_eq!(p.cells().len(), 3);
        let switched = apply_switching(&tensor(&p3, &grid), &p).unwrap();
        assert_eq!(switched, tensor(&p3, &switch(&grid, &x).unwrap()));

        let k1 = Graph::empty(1);
        let p = product_switching_partition(&k1, &x, &grid, ProductKind::Tensor).unwrap();
        assert_eq!(p.cells(), &[x.to_vec()]);

        let t4 = build_triangular(4).unwrap();
        let k2 = named("complete", &[2]);
        let p = product_switching_partition(&k2, &[0, 2, 3, 5], &t4, ProductKind::Strengthened)
            .unwrap();
        assert_eq!(p.cells().len(), 2);
    }

    #[test]
    fn single_cell_lift_is_cospectral() {
        let p3 = named("path", &[3]);
        let grid = build_grid(3, 2).unwrap();
        for kind in ProductKind::ALL {
            let prod = kind.build(&p3, &grid);
            let lift = lift_switching_set(&p3, 0, &[0, 1, 2, 3], &grid).unwrap();
            assert!(cospectral(&prod, &switch(&prod, &lift).unwrap()));
        }
    }

    fn pair_strategy() -> impl Strategy<Value = (Graph, Graph, u64)> {
        (
            1usize..=4,
            0.0f64..1.0,
            2usize..=7,
            0.2f64..0.9,
            any::<u64>(),
        )
            .prop_map(|(hn, hp, gn, gp, seed)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (
                    random_graph(hn, hp, &mut rng),
                    random_graph(gn, gp, &mut rng),
                    seed,
                )
            })
    }

    proptest! {
        #[test]
        fn degree_and_lambda_identities((h, g, _) in pair_strategy()) {
            let n = g.order();
            let t = tensor(&h, &g);
            let s = strengthened_tensor(&h, &g);
            let lam = |gr: &Graph, a: usize, b: usize| {
                if a == b { gr.degree(a) } else { gr.common_neighbor_count(a, b) }
            };
            for i in 0..h.order() {
                for x in 0..n {
                    prop_assert_eq!(t.degree(i * n + x), h.degree(i) * g.degree(x));
                    for j in 0..h.order() {
                        for y in 0..n {
                            let (u, v) = (i * n + x, j * n + y);
                            prop_assert_eq!(lam(&t, u, v), lam(&h, i, j) * lam(&g, x, y));
                            prop_assert_eq!(
                                lam(&s, u, v),
                                closed_common_neighbors(&h, i, j).unwrap() * lam(&g, x, y)
                            );
                        }
                    }
                }
            }
        }

        #[test]
        fn partition_lift_commutes((h, g, seed) in pair_strategy()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let size = rng.gen_range(2..=g.order().clamp(2, 4));
            let sets = enumerate_switching_sets(&g, size, false);
            prop_assume!(!sets.is_empty());
            let x = &sets[rng.gen_range(0..sets.len())];
            let gs = switch(&g, x).unwrap();
            for kind in ProductKind::ALL {
                let p = product_switching_partition(&h, x, &g, kind).unwrap();
                prop_assert_eq!(apply_switching(&kind.build(&h, &g), &p).unwrap(), kind.build(&h, &gs));
            }
        }

        #[test]
        fn bipartite_double_cover_spectrum(n in 1usize..=6, p in 0.0f64..1.0, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng);
            let pg = char_poly(&g);
            let mut expected = pg.mul(&pg.reflect());
            if n % 2 == 1 {
                expected = expected.negate();
            }
            prop_assert_eq!(char_poly(&tensor(&named("complete", &[2]), &g)), expected);
        }
    }
}
