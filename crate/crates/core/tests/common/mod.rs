//! Graph generators and brute-force reference oracles shared by the
//! integration tests. Nothing here calls the library's search code.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use fairgraph::{Graph, Rational, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Edges = Vec<(usize, usize)>;

/// A graph with relaxed cutset members `(vertices, tau)` and witness blocks.
pub type Planted = (Graph, Vec<(VertexSet, usize)>, Vec<VertexSet>);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn pair_bit(n: usize, u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (a * n + b) as u32
}

/// Canonical code: smallest edge bitmask over all relabelings.
fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit(n, p[u], p[v])))
        .min()
        .unwrap_or(0)
}

fn decode(n: usize, code: u64) -> Edges {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if code >> pair_bit(n, a, b) & 1 == 1 {
                e.push((a, b));
            }
        }
    }
    e
}

/// All graphs up to isomorphism, indexed by vertex count (0..=7). Each
/// graph on k+1 vertices arises by adding a vertex to one on k.
pub fn all_graphs() -> &'static Vec<Vec<Edges>> {
    static CACHE: OnceLock<Vec<Vec<Edges>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut levels: Vec<Vec<Edges>> = vec![vec![Vec::new()], vec![Vec::new()]];
        for n in 2..=7 {
            let perms = permutations(n);
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for g in &levels[n - 1] {
                for mask in 0u32..1 << (n - 1) {
                    let mut e = g.clone();
                    e.extend((0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                    let code = canonical(n, &e, &perms);
                    if seen.insert(code) {
                        next.push(decode(n, code));
                    }
                }
            }
            levels.push(next);
        }
        levels
    })
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Connected graphs on 1..=max_n vertices, up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for e in &all_graphs()[n] {
            if is_connected(n, e) {
                out.push(Graph::new(n, e).unwrap());
            }
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn members_of(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn adj(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(&v)
}

/// Connectivity by flood fill over explicit adjacency lists.
pub fn naive_connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return true;
    }
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in s {
            if !seen.contains(&v) && adj(g, u, v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

pub fn naive_components(g: &Graph, s: &[usize]) -> usize {
    let mut left: Vec<usize> = s.to_vec();
    let mut count = 0;
    while let Some(start) = left.pop() {
        count += 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let (near, far): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&v| adj(g, u, v));
            stack.extend(near);
            left = far;
        }
    }
    count
}

/// Every set partition of `items` (restricted growth strings).
pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, items: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(items[i]);
            rec(i + 1, items, cur, out);
            cur[b].pop();
        }
        cur.push(vec![items[i]]);
        rec(i + 1, items, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, items, &mut Vec::new(), &mut out);
    out
}

/// Connected partitions of the whole graph into exactly `k` parts.
pub fn naive_connected_partitions(g: &Graph, k: usize) -> Vec<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    set_partitions(&all)
        .into_iter()
        .filter(|p| p.len() == k && p.iter().all(|s| naive_connected(g, s)))
        .collect()
}

fn value(w: &[i64], s: &[usize]) -> i64 {
    s.iter().map(|&v| w[v]).sum()
}

/// EF1 (outer) by definition, for integer additive weights.
pub fn naive_ef1(g: &Graph, w: &[i64], shares: &[Vec<usize>], outer: bool) -> bool {
    for (i, a) in shares.iter().enumerate() {
        for (j, b) in shares.iter().enumerate() {
            if i == j || value(w, a) >= value(w, b) {
                continue;
            }
            let cured = b.iter().any(|&x| {
                let rest: Vec<usize> = b.iter().copied().filter(|&y| y != x).collect();
                (!outer || naive_connected(g, &rest)) && value(w, a) >= value(w, &rest)
            });
            if !cured {
                return false;
            }
        }
    }
    true
}

/// Does some connected partition into `n` nonempty parts satisfy EF1?
pub fn naive_ef1_exists(g: &Graph, w: &[i64], n: usize, outer: bool) -> bool {
    naive_connected_partitions(g, n).iter().any(|p| naive_ef1(g, w, p, outer))
}

pub fn rationals(w: &[i64]) -> Vec<Rational> {
    w.iter().map(|&x| Rational::from_integer(x)).collect()
}

/// Best gap per valence over every elementary cut, by definition.
pub fn naive_elementary_best(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut best = vec![0isize; n + 1];
    for mask in 1u32..1 << n {
        let cut: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let gap = naive_components(g, &rest) as isize - cut.len() as isize;
        best[cut.len()] = best[cut.len()].max(gap);
    }
    (1..=n).filter(|&t| best[t] >= 2).map(|t| (t, best[t] as usize)).collect()
}

/// Best gap per valence over every generalized cutset, by definition:
/// every split of the vertices into a cut and a remainder, every partition
/// of the cut into members and of the remainder into blocks.
pub fn naive_generalized_best(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut best = vec![0usize; 2 * n + 1];
    for mask in 1u32..(1 << n) - 1 {
        let cut: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let block_parts: Vec<Vec<Vec<usize>>> = set_partitions(&rest)
            .into_iter()
            .filter(|bs| {
                bs.iter().enumerate().all(|(i, a)| {
                    bs[i + 1..].iter().all(|b| a.iter().all(|&x| b.iter().all(|&y| !adj(g, x, y))))
                })
            })
            .collect();
        for members in set_partitions(&cut) {
            if !members.iter().all(|m| naive_connected(g, m)) {
                continue;
            }
            let big: Vec<&Vec<usize>> = members.iter().filter(|m| m.len() > 1).collect();
            let separate = big.iter().enumerate().all(|(i, a)| {
                big[i + 1..].iter().all(|b| a.iter().all(|&x| b.iter().all(|&y| !adj(g, x, y))))
            });
            if !separate {
                continue;
            }
            for blocks in &block_parts {
                let mut valence = 0;
                let mut ok = true;
                for m in &members {
                    if m.len() == 1 {
                        valence += 1;
                        continue;
                    }
                    let mut contacts = Vec::new();
                    for b in blocks {
                        let touching: Vec<usize> =
                            m.iter().copied().filter(|&x| b.iter().any(|&y| adj(g, x, y))).collect();
                        match touching.len() {
                            0 => {}
                            1 => contacts.push(touching[0]),
                            _ => ok = false,
                        }
                    }
                    let distinct: HashSet<usize> = contacts.iter().copied().collect();
                    if distinct.len() != contacts.len() || contacts.len() < 3 || contacts.len() % 2 == 0 {
                        ok = false;
                    }
                    valence += contacts.len() / 2;
                }
                if ok && blocks.len() >= valence + 2 {
                    best[valence] = best[valence].max(blocks.len() - valence);
                }
            }
        }
    }
    (1..best.len()).filter(|&t| best[t] >= 2).map(|t| (t, best[t])).collect()
}

/// Hamiltonian path by trying every vertex order.
pub fn naive_traceable(g: &Graph) -> bool {
    permutations(g.vertex_count())
        .iter()
        .any(|p| p.windows(2).all(|w| adj(g, w[0], w[1])))
}

/// Bipolar ordering by trying every vertex order.
pub fn naive_bipolar(g: &Graph) -> bool {
    permutations(g.vertex_count()).iter().any(|p| {
        (1..=p.len()).all(|k| naive_connected(g, &p[..k]) && naive_connected(g, &p[k - 1..]))
    })
}

/// Triangle by brute force over vertex triples.
pub fn has_triangle(n: usize, edges: &[(usize, usize)]) -> bool {
    let e = |a: usize, b: usize| edges.contains(&(a, b)) || edges.contains(&(b, a));
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| e(a, b) && e(b, c) && e(a, c))))
}

pub fn first_triangle(n: usize, edges: &[(usize, usize)]) -> Option<[usize; 3]> {
    let e = |a: usize, b: usize| edges.contains(&(a, b)) || edges.contains(&(b, a));
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if e(a, b) && e(b, c) && e(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// A random relaxed cutset on at most `max_n` vertices: members (some
/// type-II members disconnected or with an even contact count), blocks
/// touching each type-II member through one vertex each, plus random
/// extra edges that keep those constraints. Returns `None` when the draw
/// is rejected.
pub fn random_relaxed(
    rng: &mut impl Rng,
    max_n: usize,
) -> Option<Planted> {
    let type_i = rng.gen_range(0..=2usize);
    let type_ii = rng.gen_range(1..=2usize);
    let mut next = 0usize;
    let mut fresh = |k: usize| {
        let v: Vec<usize> = (next..next + k).collect();
        next += k;
        v
    };
    let singles: Vec<usize> = fresh(type_i);
    // (vertices, contact count, tau)
    let mut bigs: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for _ in 0..type_ii {
        let tau = 1;
        let contacts = if rng.gen_bool(0.5) { 2 * tau } else { 2 * tau + 1 };
        let extra = rng.gen_range(0..=1usize);
        bigs.push((fresh(contacts + extra), contacts, tau));
    }
    let valence = type_i + bigs.iter().map(|b| b.2).sum::<usize>();
    let max_contacts = bigs.iter().map(|b| b.1).max().unwrap_or(0);
    let n_blocks = (valence + 2 + rng.gen_range(0..=1usize)).max(max_contacts);
    let blocks: Vec<Vec<usize>> = (0..n_blocks).map(|_| fresh(if rng.gen_bool(0.2) { 2 } else { 1 })).collect();
    let n = next;
    if n > max_n {
        return None;
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut touched = vec![false; n_blocks];
    for (vs, contacts, _) in &bigs {
        let mut order: Vec<usize> = (0..n_blocks).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        for (c, &b) in order[..*contacts].iter().enumerate() {
            let y = blocks[b][rng.gen_range(0..blocks[b].len())];
            edges.push((vs[c], y));
            touched[b] = true;
        }
        for w in vs.windows(2) {
            if rng.gen_bool(0.6) {
                edges.push((w[0], w[1]));
            }
        }
    }
    for b in &blocks {
        for w in b.windows(2) {
            edges.push((w[0], w[1]));
        }
    }
    for &s in &singles {
        for (bi, b) in blocks.iter().enumerate() {
            if !touched[bi] || rng.gen_bool(0.3) {
                edges.push((s, b[0]));
                touched[bi] = true;
            }
        }
        for (vs, _, _) in &bigs {
            if rng.gen_bool(0.7) {
                edges.push((s, vs[rng.gen_range(0..vs.len())]));
            }
        }
    }
    for w in singles.windows(2) {
        if rng.gen_bool(0.5) {
            edges.push((w[0], w[1]));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::new(n, &edges).ok()?;
    let mut members: Vec<(VertexSet, usize)> = singles.iter().map(|&s| (VertexSet::singleton(s), 1)).collect();
    members.extend(bigs.iter().map(|(vs, _, tau)| (set(vs), *tau)));
    let witness: Vec<VertexSet> = blocks.iter().map(|b| set(b)).collect();
    Some((g, members, witness))
}
