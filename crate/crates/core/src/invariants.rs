//! Common-neighbor counts and the sufficient non-isomorphism tests built on
//! them.
//!
//! `λ(x, y)` is the number of common neighbors of `x` and `y`, and
//! `λ(x, x)` is the degree of `x`. For a set `X` with complement `Y`:
//!
//! * `Λ` (scope [`LambdaScope::All`]) holds `λ(x, x)` for `x ∈ X`, `λ(x, y)`
//!   once per unordered pair inside `X`, and `λ(x, y)` for `x ∈ X, y ∈ Y`;
//! * `Λ̄` (scope [`LambdaScope::Complement`]) holds only the `X × Y` values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{normalize_set, Graph};
use crate::matrix::Matrix;
use crate::products::ProductKind;
use crate::switching::{block_decomposition, switch, validate_switching_set};

/// Sorted multiset of counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Multiset(Vec<usize>);

impl Multiset {
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        Multiset(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        Multiset::new(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl FromIterator<usize> for Multiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Multiset::new(iter.into_iter().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaScope {
    All,
    Complement,
}

/// `λ(x, y)`, with `λ(x, x)` the degree of `x`.
pub fn common_neighbors(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(lambda(g, x, y))
}

fn lambda(g: &Graph, x: usize, y: usize) -> usize {
    if x == y {
        g.degree(x)
    } else {
        g.common_neighbor_count(x, y)
    }
}

fn complement_of(n: usize, x: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in x {
        inside[v] = true;
    }
    (0..n).filter(|&v| !inside[v]).collect()
}

fn nonempty_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    let x = normalize_set(g.order(), set)?;
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(x)
}

pub fn lambda_multiset(g: &Graph, set: &[usize], scope: LambdaScope) -> Result<Multiset> {
    let x = nonempty_set(g, set)?;
    let y = complement_of(g.order(), &x);
    let mut values: Vec<usize> = x
        .iter()
        .flat_map(|&a| y.iter().map(move |&b| (a, b)))
        .map(|(a, b)| lambda(g, a, b))
        .collect();
    if scope == LambdaScope::All {
        values.extend(x.iter().map(|&a| g.degree(a)));
        values.extend(lambda_pairs_within(g, &x)?.0);
    }
    Ok(Multiset::new(values))
}

/// `λ(u, v)` over unordered pairs of distinct vertices of `set`.
pub fn lambda_pairs_within(g: &Graph, set: &[usize]) -> Result<Multiset> {
    let s = normalize_set(g.order(), set)?;
    Ok(s.iter()
        .enumerate()
        .flat_map(|(i, &a)| s[i + 1..].iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.common_neighbor_count(a, b))
        .collect())
}

fn require_switching_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    let x = nonempty_set(g, set)?;
    if let Some(why) = validate_switching_set(g, &x)?.failure_reason() {
        return Err(Error::InvalidSwitching(why));
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma3Report {
    pub x: Vec<usize>,
    /// The multiset of degrees of `X` changes.
    pub cond_i: bool,
    /// `Λ` changes.
    pub cond_ii: bool,
    /// `X` has constant degree in `G` and `Λ̄` changes.
    pub cond_iii: bool,
    pub same_degree_on_x: bool,
    pub degrees_before: Multiset,
    pub degrees_after: Multiset,
    pub lambda_before: Multiset,
    pub lambda_after: Multiset,
    pub lambda_bar_before: Multiset,
    pub lambda_bar_after: Multiset,
}

impl Lemma3Report {
    /// Whether some condition proves `G ≇ G'`.
    pub fn certifies_non_isomorphism(&self) -> bool {
        self.cond_i || self.cond_ii || self.cond_iii
    }
}

pub fn lemma3_check(g: &Graph, set: &[usize]) -> Result<Lemma3Report> {
    let x = require_switching_set(g, set)?;
    let h = switch(g, &x)?;
    let degrees_before: Multiset = x.iter().map(|&v| g.degree(v)).collect();
    let degrees_after: Multiset = x.iter().map(|&v| h.degree(v)).collect();
    let lambda_before = lambda_multiset(g, &x, LambdaScope::All)?;
    let lambda_after = lambda_multiset(&h, &x, LambdaScope::All)?;
    let lambda_bar_before = lambda_multiset(g, &x, LambdaScope::Complement)?;
    let lambda_bar_after = lambda_multiset(&h, &x, LambdaScope::Complement)?;
    let same_degree_on_x = x.iter().all(|&v| g.degree(v) == g.degree(x[0]));
    Ok(Lemma3Report {
        cond_i: degrees_before != degrees_after,
        cond_ii: lambda_before != lambda_after,
        cond_iii: same_degree_on_x && lambda_bar_before != lambda_bar_after,
        same_degree_on_x,
        x,
        degrees_before,
        degrees_after,
        lambda_before,
        lambda_after,
        lambda_bar_before,
        lambda_bar_after,
    })
}

/// `μ(x)`: neighbors of `x` that are still neighbors after switching `X`.
pub fn retained_neighbor_count(g: &Graph, set: &[usize], x: usize) -> Result<usize> {
    let xs = require_switching_set(g, set)?;
    if xs.binary_search(&x).is_err() {
        return Err(Error::InvalidParameter(format!("vertex {x} is not in X")));
    }
    let h = switch(g, &xs)?;
    Ok(g.neighbors(x).filter(|&v| h.has_edge(x, v)).count())
}

/// Whether two distinct rows add up to the all-one row. With no columns any
/// two rows qualify.
pub fn has_complementary_rows(m: &Matrix) -> bool {
    (0..m.rows())
        .any(|i| (i + 1..m.rows()).any(|j| m.row(i).iter().zip(m.row(j)).all(|(a, b)| a + b == 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem4Report {
    pub x: Vec<usize>,
    pub i: usize,
    pub kind: ProductKind,
    pub same_degree_on_x: bool,
    /// `Λ̄` is unchanged by switching.
    pub lambda_bar_invariant: bool,
    /// `B = O`, `N` has at least two columns and no complementary rows.
    pub case_coclique: bool,
    /// `B` has row sums `|X|/2` and `[B N]` has no complementary rows.
    pub case_halfregular: bool,
    /// `i` is adjacent to a vertex of degree at least two.
    pub vertex_condition_tensor: bool,
    /// `i` has degree at least one.
    pub vertex_condition_strengthened: bool,
    pub hypothesis_satisfied_tensor: bool,
    pub hypothesis_satisfied_strengthened: bool,
    /// The verdict for `kind`.
    pub hypothesis_satisfied: bool,
}

impl Theorem4Report {
    pub fn satisfied(&self, kind: ProductKind) -> bool {
        match kind {
            ProductKind::Tensor => self.hypothesis_satisfied_tensor,
            ProductKind::Strengthened => self.hypothesis_satisfied_strengthened,
        }
    }
}

/// Checks whether switching `{i} × X` in `kind(h, g)` is guaranteed to give a
/// non-isomorphic cospectral mate.
pub fn theorem4_hypothesis(
    g: &Graph,
    set: &[usize],
    h: &Graph,
    i: usize,
    kind: ProductKind,
) -> Result<Theorem4Report> {
    let x = require_switching_set(g, set)?;
    h.check_vertex(i)?;
    let bd = block_decomposition(g, &x)?;
    let switched = switch(g, &x)?;

    let same_degree_on_x = x.iter().all(|&v| g.degree(v) == g.degree(x[0]));
    let lambda_bar_invariant = lambda_multiset(g, &x, LambdaScope::Complement)?
        == lambda_multiset(&switched, &x, LambdaScope::Complement)?;
    let case_coclique = bd.b.is_zero() && bd.n.cols() >= 2 && !has_complementary_rows(&bd.n);
    let case_halfregular = 2 * bd.k == x.len() && !has_complementary_rows(&bd.b.hcat(&bd.n)?);
    let vertex_condition_tensor = h.neighbors(i).any(|j| h.degree(j) >= 2);
    let vertex_condition_strengthened = h.degree(i) >= 1;

    let common = same_degree_on_x && lambda_bar_invariant && (case_coclique || case_halfregular);
    let hypothesis_satisfied_tensor = common && vertex_condition_tensor;
    let hypothesis_satisfied_strengthened = common && vertex_condition_strengthened;
    let hypothesis_satisfied = match kind {
        ProductKind::Tensor => hypothesis_satisfied_tensor,
        ProductKind::Strengthened => hypothesis_satisfied_strengthened,
    };
    Ok(Theorem4Report {
        x,
        i,
        kind,
        same_degree_on_x,
        lambda_bar_invariant,
        case_coclique,
        case_halfregular,
        vertex_condition_tensor,
        vertex_condition_strengthened,
        hypothesis_satisfied_tensor,
        hypothesis_satisfied_strengthened,
        hypothesis_satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_named, build_triangular, random_graph};
    use crate::isomorphism::are_isomorphic;
    use crate::switching::enumerate_switching_sets;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn common_neighbor_examples() {
        let c4 = build_named("cycle", &[4]).unwrap();
        assert_eq!(common_neighbors(&c4, 0, 2).unwrap(), 2);
        assert_eq!(common_neighbors(&c4, 0, 1).unwrap(), 0);
        assert_eq!(common_neighbors(&c4, 3, 3).unwrap(), 2);
        assert!(common_neighbors(&c4, 0, 4).is_err());
    }

    #[test]
    fn single_vertex_lambda() {
        let g = build_grid(3, 3).unwrap();
        let m = lambda_multiset(&g, &[4], LambdaScope::All).unwrap();
        let expected: Multiset = std::iter::once(g.degree(4))
            .chain(
                (0..9)
                    .filter(|&y| y != 4)
                    .map(|y| g.common_neighbor_count(4, y)),
            )
            .collect();
        assert_eq!(m, expected);
        assert!(lambda_multiset(&g, &[], LambdaScope::All).is_err());
    }

    #[test]
    fn complementary_rows() {
        assert!(has_complementary_rows(&Matrix::identity(2)));
        assert!(!has_complementary_rows(
            &Matrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
        ));
        assert!(!has_complementary_rows(&Matrix::ones(1, 3)));
    }

    #[test]
    fn grid_switch_keeps_all_multisets() {
        let g = build_grid(4, 4).unwrap();
        let r = lemma3_check(&g, &[0, 5, 10, 15]).unwrap();
        assert!(!r.cond_i && !r.cond_ii && !r.cond_iii);
        assert_eq!(r.lambda_bar_before, r.lambda_bar_after);
        assert!(are_isomorphic(&g, &switch(&g, &[0, 5, 10, 15]).unwrap()).is_none());
    }

    #[test]
    fn prism_four_cycle() {
        let g = build_grid(3, 2).unwrap();
        let x = [0, 1, 2, 3];
        let r = lemma3_check(&g, &x).unwrap();
        assert!(!r.certifies_non_isomorphism());
        assert_eq!(r.lambda_bar_before, r.lambda_bar_after);
        assert!(are_isomorphic(&g, &switch(&g, &x).unwrap()).is_some());
        for v in x {
            assert_eq!(retained_neighbor_count(&g, &x, v).unwrap(), 2);
        }
        assert!(retained_neighbor_count(&g, &x, 4).is_err());
    }

    #[test]
    fn whole_vertex_set_retains_everything() {
        let g = build_named("complete", &[4]).unwrap();
        let all = [0, 1, 2, 3];
        for v in all {
            assert_eq!(retained_neighbor_count(&g, &all, v).unwrap(), 3);
        }
    }

    // The four-cycles used for the product instances fail the complementary
    // row condition as literally stated, although the product switches
    // themselves are valid.
    #[test]
    fn product_hypothesis_on_four_cycles() {
        let p3 = build_named("path", &[3]).unwrap();
        let k2 = build_named("complete", &[2]).unwrap();
        let grid = build_grid(3, 2).unwrap();
        let r = theorem4_hypothesis(&grid, &[0, 1, 2, 3], &p3, 0, ProductKind::Tensor).unwrap();
        assert!(r.same_degree_on_x && r.lambda_bar_invariant && r.vertex_condition_tensor);
        assert!(!r.case_coclique && !r.case_halfregular && !r.hypothesis_satisfied);
        let r = theorem4_hypothesis(&grid, &[0, 1, 2, 3], &k2, 0, ProductKind::Tensor).unwrap();
        assert!(!r.vertex_condition_tensor && r.vertex_condition_strengthened);

        let t4 = build_triangular(4).unwrap();
        let r = theorem4_hypothesis(&t4, &[0, 2, 3, 5], &k2, 0, ProductKind::Strengthened).unwrap();
        assert!(r.same_degree_on_x && r.lambda_bar_invariant && r.vertex_condition_strengthened);
        assert!(!r.case_halfregular && !r.hypothesis_satisfied);
    }

    #[test]
    fn mixed_degrees_on_a_four_coclique_can_keep_the_degree_multiset() {
        // X = {0,1,2,3} independent; 4 sees {0,1}, 5 sees all of X.
        let g = Graph::from_edges(6, &[(4, 0), (4, 1), (5, 0), (5, 1), (5, 2), (5, 3)]).unwrap();
        let r = lemma3_check(&g, &[0, 1, 2, 3]).unwrap();
        assert!(!r.same_degree_on_x);
        assert_eq!(r.degrees_before.values(), &[1, 1, 2, 2]);
        assert_eq!(r.degrees_after, r.degrees_before);
        assert!(!r.cond_i);
    }

    proptest! {
        #[test]
        fn lemma3_facts(n in 3usize..=9, p in 0.2f64..0.8, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, p, &mut rng);
            let size = rng.gen_range(2..=n.min(6));
            for x in enumerate_switching_sets(&g, size, false).into_iter().take(20) {
                let h = switch(&g, &x).unwrap();
                let y = complement_of(n, &x);
                prop_assert_eq!(lambda_pairs_within(&g, &y).unwrap(), lambda_pairs_within(&h, &y).unwrap());
                let r = lemma3_check(&g, &x).unwrap();
                if r.same_degree_on_x {
                    prop_assert_eq!(lambda_pairs_within(&g, &x).unwrap(), lambda_pairs_within(&h, &x).unwrap());
                }
                let split = lambda_multiset(&g, &x, LambdaScope::Complement).unwrap()
                    .union(&lambda_pairs_within(&g, &x).unwrap())
                    .union(&x.iter().map(|&v| g.degree(v)).collect());
                prop_assert_eq!(split, lambda_multiset(&g, &x, LambdaScope::All).unwrap());
                if r.certifies_non_isomorphism() {
                    prop_assert!(are_isomorphic(&g, &h).is_none());
                }
                prop_assert!(!r.cond_iii || r.same_degree_on_x);
                let hh = build_named("path", &[3]).unwrap();
                for kind in ProductKind::ALL {
                    let t = theorem4_hypothesis(&g, &x, &hh, 0, kind).unwrap();
                    if t.hypothesis_satisfied {
                        prop_assert!(t.same_degree_on_x && t.lambda_bar_invariant);
                    }
                }
            }
        }
    }
}
