//! Slow, obviously-correct reference computations on raw 0/1 adjacency
//! matrices.
//!
//! Nothing here shares code with `gm-core`: characteristic polynomials come
//! from symbolic cofactor expansion and isomorphisms from exhaustive
//! enumeration of vertex bijections. Both are exponential and only meant for
//! graphs with a handful of vertices.

/// Dense polynomial with `i128` coefficients, index = degree.
type Poly = Vec<i128>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_assign(acc: &mut Poly, p: &[i128], sign: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i] += sign * c;
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first row.
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Poly = vec![0];
    for col in 0..n {
        if m[0][col].iter().all(|&c| c == 0) {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = poly_mul(&m[0][col], &poly_det(&minor));
        let sign = if col % 2 == 0 { 1 } else { -1 };
        poly_add_assign(&mut acc, &term, sign);
    }
    poly_trim(acc)
}

/// `det(xI - A)` by symbolic cofactor expansion. Coefficients ascending.
///
/// Cost is `O(n!)`; keep `n` at most 7 or so.
pub fn cofactor_char_poly(adj: &[Vec<u8>]) -> Vec<i128> {
    let n = adj.len();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = adj[i][j] as i128;
                    if i == j {
                        vec![-a, 1]
                    } else {
                        vec![-a]
                    }
                })
                .collect()
        })
        .collect();
    let mut p = poly_det(&m);
    p.resize(n + 1, 0);
    p
}

struct Enumerator<'a> {
    a: &'a [Vec<u8>],
    b: &'a [Vec<u8>],
    /// `Some(mask)`: vertices with `mask[v]` must map into the same mask.
    fixed: Option<&'a [bool]>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Enumerator<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        if let Some(mask) = self.fixed {
            if mask[v] != mask[w] {
                return false;
            }
        }
        if self.a[v][v] != self.b[w][w] {
            return false;
        }
        (0..v).all(|u| self.a[u][v] == self.b[self.map[u]][w])
    }

    /// Visits every bijection consistent with adjacency; `visit` returns
    /// `false` to stop early.
    fn run(&mut self, v: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.a.len();
        if v == n {
            return visit(&self.map);
        }
        for w in 0..n {
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.used[w] = true;
            self.map[v] = w;
            let keep_going = self.run(v + 1, visit);
            self.used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn enumerate(
    a: &[Vec<u8>],
    b: &[Vec<u8>],
    fixed: Option<&[bool]>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    if a.len() != b.len() {
        return;
    }
    let n = a.len();
    let mut e = Enumerator {
        a,
        b,
        fixed,
        map: vec![0; n],
        used: vec![false; n],
    };
    e.run(0, visit);
}

/// First bijection `p` (in lexicographic order of image sequences) with
/// `a[u][v] == b[p(u)][p(v)]` for all `u, v`.
pub fn brute_force_isomorphism(a: &[Vec<u8>], b: &[Vec<u8>]) -> Option<Vec<usize>> {
    let mut found = None;
    enumerate(a, b, None, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Like [`brute_force_isomorphism`], restricted to bijections mapping the
/// vertex set `set` onto itself.
pub fn brute_force_isomorphism_fixing(
    a: &[Vec<u8>],
    b: &[Vec<u8>],
    set: &[usize],
) -> Option<Vec<usize>> {
    let mut mask = vec![false; a.len()];
    for &v in set {
        mask[v] = true;
    }
    let mut found = None;
    enumerate(a, b, Some(&mask), &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Every isomorphism from `a` to `b` that maps `set` onto itself.
pub fn all_isomorphisms_fixing(a: &[Vec<u8>], b: &[Vec<u8>], set: &[usize]) -> Vec<Vec<usize>> {
    let mut mask = vec![false; a.len()];
    for &v in set {
        mask[v] = true;
    }
    let mut all = Vec::new();
    enumerate(a, b, Some(&mask), &mut |m| {
        all.push(m.to_vec());
        true
    });
    all
}

/// Size of the automorphism group, counted one permutation at a time.
pub fn count_automorphisms(a: &[Vec<u8>]) -> u64 {
    let mut count = 0u64;
    enumerate(a, a, None, &mut |_| {
        count += 1;
        true
    });
    count
}
