//! Bitset branch and bound for maximum cliques.
//!
//! Candidates are coloured greedily inside each vertex group; the bound for a
//! candidate prefix is the sum over groups of `min(colours used, room left
//! under the group cap)`. With a single uncapped group this is the usual
//! colouring bound.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Mutex, RwLock};
use std::time::Instant;

pub(crate) type Bits = Vec<u64>;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
fn set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

#[inline]
fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

#[inline]
fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

#[inline]
fn first(b: &[u64]) -> Option<usize> {
    b.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn ones(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let j = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + j
            })
        })
    })
}

pub(crate) fn bits_from(n: usize, members: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = vec![0; words_for(n)];
    for i in members {
        set(&mut b, i);
    }
    b
}

/// Decides whether a maximal clique is acceptable; on rejection returns a
/// vertex set that contains it and every other clique to be rejected for the
/// same reason. Rejection must be upward closed among cliques.
pub(crate) trait LeafFilter: Sync {
    fn reject(&self, clique: &[usize]) -> Option<Bits>;
}

pub(crate) struct Problem {
    pub n: usize,
    pub adj: Vec<Bits>,
    pub group_of: Vec<usize>,
    pub caps: Vec<usize>,
}

pub(crate) struct Options<'a> {
    pub enumerate_all: bool,
    pub threads: usize,
    pub deadline: Option<Instant>,
    pub witness_cap: usize,
    /// Known clique used as the starting incumbent.
    pub seed: Option<Vec<usize>>,
    pub filter: Option<&'a dyn LeafFilter>,
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub best: usize,
    /// Sorted cliques in original labels, themselves sorted.
    pub cliques: Vec<Vec<usize>>,
    /// Number of maximum cliques found, including any beyond the cap.
    pub clique_count: usize,
    pub truncated: bool,
    pub nodes: u64,
    pub timed_out: bool,
    pub clauses: usize,
}

struct Store {
    best: usize,
    count: usize,
    cliques: Vec<Vec<usize>>,
    truncated: bool,
}

struct Shared<'a> {
    p: &'a Relabeled,
    opts: &'a Options<'a>,
    best: AtomicUsize,
    store: Mutex<Store>,
    nodes: AtomicU64,
    stop: AtomicBool,
    clauses: RwLock<Vec<Bits>>,
}

/// Problem with vertices renumbered into branching order.
struct Relabeled {
    n: usize,
    adj: Vec<Bits>,
    group_masks: Vec<Bits>,
    group_of: Vec<usize>,
    caps: Vec<usize>,
    /// position -> original label
    label: Vec<usize>,
    /// original label -> position
    pos: Vec<usize>,
}

/// Degeneracy order: repeatedly remove a vertex of minimum degree and put it
/// at the back, ties broken by label, so dense cores come first.
fn degeneracy_order(p: &Problem) -> Vec<usize> {
    let mut deg: Vec<usize> = p.adj.iter().map(|a| ones(a).count()).collect();
    let mut alive = vec![true; p.n];
    let mut back = Vec::with_capacity(p.n);
    for _ in 0..p.n {
        let v = (0..p.n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        alive[v] = false;
        back.push(v);
        for u in ones(&p.adj[v]) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    back.reverse();
    back
}

fn relabel(p: &Problem) -> Relabeled {
    let label = degeneracy_order(p);
    let mut pos = vec![0; p.n];
    for (i, &v) in label.iter().enumerate() {
        pos[v] = i;
    }
    let adj = label.iter().map(|&v| bits_from(p.n, ones(&p.adj[v]).map(|u| pos[u]))).collect();
    let group_of: Vec<usize> = label.iter().map(|&v| p.group_of[v]).collect();
    let mut group_masks = vec![vec![0; words_for(p.n)]; p.caps.len()];
    for (i, &g) in group_of.iter().enumerate() {
        set(&mut group_masks[g], i);
    }
    Relabeled { n: p.n, adj, group_masks, group_of, caps: p.caps.clone(), label, pos }
}

impl Relabeled {
    /// Candidates in colour order with the bound for each prefix.
    fn colour(&self, cand: &Bits, used: &[usize]) -> Vec<(usize, usize)> {
        let mut list: Vec<(usize, usize, usize)> = Vec::new();
        let mut u = cand.clone();
        for (g, mask) in self.group_masks.iter().enumerate() {
            let mut rest: Bits = u.iter().zip(mask).map(|(a, b)| a & b).collect();
            if is_empty(&rest) {
                continue;
            }
            for (w, m) in u.iter_mut().zip(mask) {
                *w &= !m;
            }
            let mut colour = 0;
            while !is_empty(&rest) {
                colour += 1;
                let mut q = rest.clone();
                while let Some(v) = first(&q) {
                    clear(&mut rest, v);
                    clear(&mut q, v);
                    for (w, a) in q.iter_mut().zip(&self.adj[v]) {
                        *w &= !a;
                    }
                    list.push((colour, g, v));
                }
            }
        }
        list.sort_unstable_by_key(|&(c, _, v)| (c, v));
        let mut top = vec![0usize; self.caps.len()];
        let mut bound = 0;
        list.into_iter()
            .map(|(c, g, v)| {
                let room = self.caps[g].saturating_sub(used[g]);
                if c > top[g] {
                    bound += c.min(room) - top[g].min(room);
                    top[g] = c;
                }
                (v, bound)
            })
            .collect()
    }
}

struct Worker<'s, 'a> {
    sh: &'s Shared<'a>,
    clique: Vec<usize>,
    clique_bits: Bits,
    used: Vec<usize>,
    tick: u32,
}

impl Worker<'_, '_> {
    fn pruned(&self, size_with_bound: usize) -> bool {
        let best = self.sh.best.load(Ordering::Relaxed);
        if self.sh.opts.enumerate_all {
            size_with_bound < best
        } else {
            size_with_bound <= best
        }
    }

    fn clause_blocks(&self, cand: &Bits) -> bool {
        if self.sh.opts.filter.is_none() {
            return false;
        }
        let clauses = self.sh.clauses.read().unwrap();
        clauses.iter().any(|h| {
            self.clique_bits.iter().zip(cand).zip(h).all(|((c, p), h)| (c | p) & !h == 0)
        })
    }

    fn out_of_time(&mut self) -> bool {
        if self.sh.stop.load(Ordering::Relaxed) {
            return true;
        }
        self.tick = self.tick.wrapping_add(1);
        if self.tick.is_multiple_of(256) {
            if let Some(deadline) = self.sh.opts.deadline {
                if Instant::now() >= deadline {
                    self.sh.stop.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    fn push(&mut self, v: usize) {
        self.clique.push(v);
        set(&mut self.clique_bits, v);
        self.used[self.sh.p.group_of[v]] += 1;
    }

    fn pop(&mut self) {
        let v = self.clique.pop().unwrap();
        clear(&mut self.clique_bits, v);
        self.used[self.sh.p.group_of[v]] -= 1;
    }

    /// Candidates for the child that adds `v`, given the candidates left at the parent.
    fn child(&self, v: usize, remaining: &Bits) -> Bits {
        let p = self.sh.p;
        let mut next: Bits = remaining.iter().zip(&p.adj[v]).map(|(a, b)| a & b).collect();
        let g = p.group_of[v];
        if self.used[g] >= p.caps[g] {
            for (w, m) in next.iter_mut().zip(&p.group_masks[g]) {
                *w &= !m;
            }
        }
        next
    }

    fn expand(&mut self, cand: Bits) {
        self.sh.nodes.fetch_add(1, Ordering::Relaxed);
        if self.out_of_time() || self.clause_blocks(&cand) {
            return;
        }
        if is_empty(&cand) {
            self.leaf();
            return;
        }
        let order = self.sh.p.colour(&cand, &self.used);
        let mut remaining = cand;
        for &(v, bound) in order.iter().rev() {
            if self.pruned(self.clique.len() + bound) {
                return;
            }
            clear(&mut remaining, v);
            self.push(v);
            let next = self.child(v, &remaining);
            self.expand(next);
            self.pop();
            if self.sh.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    fn leaf(&mut self) {
        let size = self.clique.len();
        if self.pruned(size) {
            return;
        }
        let mut labels: Vec<usize> = self.clique.iter().map(|&v| self.sh.p.label[v]).collect();
        labels.sort_unstable();
        if let Some(filter) = self.sh.opts.filter {
            if let Some(h) = filter.reject(&labels) {
                let h = bits_from(self.sh.p.n, ones(&h).map(|u| self.sh.p.pos[u]));
                self.sh.clauses.write().unwrap().push(h);
                return;
            }
        }
        let mut store = self.sh.store.lock().unwrap();
        if size > store.best || store.count == 0 && size >= store.best {
            store.best = size;
            store.count = 0;
            store.cliques.clear();
            store.truncated = false;
        }
        if size == store.best {
            store.count += 1;
            if store.cliques.len() < self.sh.opts.witness_cap {
                store.cliques.push(labels);
            } else {
                store.truncated = true;
            }
            self.sh.best.fetch_max(size, Ordering::Relaxed);
        }
    }
}

pub(crate) fn solve(problem: &Problem, opts: &Options<'_>) -> Outcome {
    let p = relabel(problem);
    let seed_size = opts.seed.as_ref().map_or(0, Vec::len);
    let seeded = opts.seed.as_ref().filter(|_| !opts.enumerate_all).cloned();
    let sh = Shared {
        p: &p,
        opts,
        best: AtomicUsize::new(seed_size),
        store: Mutex::new(Store {
            best: seed_size,
            count: seeded.is_some() as usize,
            cliques: seeded.into_iter().collect(),
            truncated: false,
        }),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        clauses: RwLock::new(Vec::new()),
    };

    let all = bits_from(p.n, 0..p.n);
    let groups = p.caps.len();
    let root_order = p.colour(&all, &vec![0; groups]);
    let next_root = AtomicUsize::new(root_order.len());
    let new_worker = || Worker { sh: &sh, clique: Vec::new(), clique_bits: vec![0; words_for(p.n)], used: vec![0; groups], tick: 0 };
    let run = || {
        let mut w = new_worker();
        while let Ok(i) = next_root.fetch_update(Ordering::Relaxed, Ordering::Relaxed, |i| i.checked_sub(1)) {
            let i = i - 1;
            let (v, bound) = root_order[i];
            if w.pruned(bound) || sh.stop.load(Ordering::Relaxed) {
                break;
            }
            // root branch i keeps only the vertices before it in colour order
            let before = bits_from(p.n, root_order[..i].iter().map(|&(u, _)| u));
            w.push(v);
            let next = w.child(v, &before);
            w.expand(next);
            w.pop();
        }
    };
    sh.nodes.fetch_add(1, Ordering::Relaxed);
    if root_order.is_empty() {
        new_worker().leaf();
    } else if opts.threads <= 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..opts.threads {
                s.spawn(run);
            }
        });
    }

    let store = sh.store.into_inner().unwrap();
    let mut cliques = store.cliques;
    cliques.sort();
    cliques.dedup();
    Outcome {
        best: store.best,
        clique_count: store.count,
        cliques,
        truncated: store.truncated,
        nodes: sh.nodes.load(Ordering::Relaxed),
        timed_out: sh.stop.load(Ordering::Relaxed),
        clauses: sh.clauses.into_inner().unwrap().len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(n: usize, edges: &[(usize, usize)]) -> Problem {
        let mut adj = vec![vec![0; words_for(n)]; n];
        for &(a, b) in edges {
            set(&mut adj[a], b);
            set(&mut adj[b], a);
        }
        Problem { n, adj, group_of: vec![0; n], caps: vec![usize::MAX] }
    }

    fn opts(all: bool, threads: usize) -> Options<'static> {
        Options { enumerate_all: all, threads, deadline: None, witness_cap: 1000, seed: None, filter: None }
    }

    fn brute_force(p: &Problem) -> (usize, Vec<Vec<usize>>) {
        let mut best = 0;
        let mut found = Vec::new();
        for mask in 0u32..1 << p.n {
            let vs: Vec<usize> = (0..p.n).filter(|i| mask >> i & 1 == 1).collect();
            let clique = vs.iter().all(|&a| vs.iter().all(|&b| a == b || p.adj[a][0] >> b & 1 == 1));
            if !clique {
                continue;
            }
            if vs.len() > best {
                best = vs.len();
                found.clear();
            }
            if vs.len() == best {
                found.push(vs);
            }
        }
        found.sort();
        (best, found)
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let density = rng.gen_range(0.1..0.95);
            let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(density)).collect();
            let p = problem(n, &edges);
            let (best, all) = brute_force(&p);
            for threads in [1, 3] {
                let out = solve(&p, &opts(true, threads));
                assert_eq!(out.best, best);
                assert_eq!(out.cliques, all);
                assert_eq!(out.clique_count, all.len());
                assert_eq!(solve(&p, &opts(false, threads)).best, best);
            }
        }
    }

    #[test]
    fn group_caps_limit_the_clique() {
        // complete graph on 6 vertices, two groups capped at 2 and 1
        let edges: Vec<_> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
        let mut p = problem(6, &edges);
        p.group_of = vec![0, 0, 0, 1, 1, 1];
        p.caps = vec![2, 1];
        let out = solve(&p, &opts(true, 1));
        assert_eq!(out.best, 3);
        assert_eq!(out.clique_count, 9);
    }

    struct RejectContaining(usize);

    impl LeafFilter for RejectContaining {
        fn reject(&self, clique: &[usize]) -> Option<Bits> {
            // reject any clique avoiding vertex 0 ... by returning the set of all
            // vertices except self.0, which holds every such clique
            (!clique.contains(&self.0)).then(|| bits_from(5, (0..5).filter(|&v| v != self.0)))
        }
    }

    #[test]
    fn filter_clauses_exclude_rejected_cliques() {
        // triangle 1-2-3 and edge 0-4
        let p = problem(5, &[(1, 2), (2, 3), (1, 3), (0, 4)]);
        let filter = RejectContaining(0);
        let o = Options { filter: Some(&filter), ..opts(true, 1) };
        let out = solve(&p, &o);
        assert_eq!(out.best, 2);
        assert_eq!(out.cliques, vec![vec![0, 4]]);
        assert!(out.clauses >= 1);
    }

    #[test]
    fn seed_is_kept_when_optimal() {
        let p = problem(4, &[(0, 1), (2, 3)]);
        let o = Options { seed: Some(vec![0, 1]), ..opts(false, 1) };
        let out = solve(&p, &o);
        assert_eq!(out.best, 2);
        assert_eq!(out.cliques, vec![vec![0, 1]]);
    }
}
