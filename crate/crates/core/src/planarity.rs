//! Planarity of small simple graphs.
//!
//! Each biconnected block is tested with the Demoucron–Malgrange–Pertuiset
//! path-embedding algorithm. Quadratic, which is plenty for touching graphs.

use std::collections::{BTreeSet, HashSet, VecDeque};

/// Whether the simple graph on `n` vertices with the given edges is planar.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    blocks(&adj).into_iter().all(|block| block_is_planar(&block))
}

/// Edge sets of the biconnected components.
fn blocks(adj: &[BTreeSet<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, neighbours still to visit)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(root, usize::MAX, adj[root].iter().rev().copied().collect())];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if let Some(w) = top.2.pop() {
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, adj[w].iter().rev().copied().collect()));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = stack.last() {
                    let p = p.0;
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let (v, e) = (vertices.len(), edges.len());
    if v < 5 || e < 9 {
        return true;
    }
    if e > 3 * v - 6 {
        return false;
    }
    let index: Vec<usize> = vertices.iter().copied().collect();
    let local = |x: usize| index.binary_search(&x).expect("block vertex");
    let mut adj = vec![Vec::new(); v];
    for &(a, b) in edges {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Dmp::new(adj).run()
}

struct Dmp {
    adj: Vec<Vec<usize>>,
    embedded_vertex: Vec<bool>,
    embedded_edge: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    attachments: BTreeSet<usize>,
    /// Inner vertices; empty for a single chord between embedded vertices.
    inner: BTreeSet<usize>,
    chord: Option<(usize, usize)>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Dmp {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Dmp { adj, embedded_vertex: vec![false; n], embedded_edge: HashSet::new(), faces: Vec::new() }
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        for (i, &x) in cycle.iter().enumerate() {
            self.embedded_vertex[x] = true;
            self.embedded_edge.insert(key(x, cycle[(i + 1) % cycle.len()]));
        }
        self.faces = vec![cycle.clone(), cycle.into_iter().rev().collect()];
        let total: usize = self.adj.iter().map(Vec::len).sum::<usize>() / 2;
        while self.embedded_edge.len() < total {
            let fragments = self.fragments();
            let mut choice = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let ok: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| {
                        let face: HashSet<_> = self.faces[f].iter().collect();
                        frag.attachments.iter().all(|a| face.contains(a))
                    })
                    .collect();
                match ok.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, ok[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, ok[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("some fragment remains");
            let path = self.fragment_path(&fragments[fi]);
            self.embed_path(face, &path);
        }
        true
    }

    /// Edge `0-b` closed by a shortest path from `b` back to `0` avoiding it.
    fn initial_cycle(&self) -> Vec<usize> {
        let b = self.adj[0][0];
        let mut prev = vec![usize::MAX; self.adj.len()];
        prev[b] = b;
        let mut queue = VecDeque::from([b]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if u == b && w == 0 {
                    continue;
                }
                if w == 0 {
                    let mut cycle = vec![0, u];
                    let mut x = u;
                    while x != b {
                        x = prev[x];
                        cycle.push(x);
                    }
                    return cycle;
                }
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("every edge of a biconnected block lies on a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.embedded_vertex[u] {
                continue;
            }
            for &w in &self.adj[u] {
                if u < w && self.embedded_vertex[w] && !self.embedded_edge.contains(&key(u, w)) {
                    out.push(Fragment { attachments: BTreeSet::from([u, w]), inner: BTreeSet::new(), chord: Some((u, w)) });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.embedded_vertex[s] || seen[s] {
                continue;
            }
            let mut inner = BTreeSet::new();
            let mut attachments = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                inner.insert(u);
                for &w in &self.adj[u] {
                    if self.embedded_vertex[w] {
                        attachments.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(Fragment { attachments, inner, chord: None });
        }
        out
    }

    /// A path through the fragment joining two distinct attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((a, b)) = frag.chord {
            return vec![a, b];
        }
        let start = *frag.attachments.iter().next().expect("fragment has attachments");
        let mut prev = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        for &w in &self.adj[start] {
            if frag.inner.contains(&w) && prev[w] == usize::MAX {
                prev[w] = start;
                queue.push_back(w);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if w != start && frag.attachments.contains(&w) {
                    let mut path = vec![w, u];
                    let mut x = u;
                    while prev[x] != start {
                        x = prev[x];
                        path.push(x);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
                if frag.inner.contains(&w) && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragments of a biconnected block have two attachments")
    }

    fn embed_path(&mut self, f: usize, path: &[usize]) {
        let face = self.faces.swap_remove(f);
        let (a, b) = (path[0], *path.last().unwrap());
        let len = face.len();
        let ia = face.iter().position(|&x| x == a).expect("attachment on face");
        let ib = face.iter().position(|&x| x == b).expect("attachment on face");
        let mut first = Vec::new();
        let mut i = ia;
        while i != ib {
            first.push(face[i]);
            i = (i + 1) % len;
        }
        first.push(b);
        first.extend(path[1..path.len() - 1].iter().rev());
        let mut second = Vec::new();
        let mut i = ib;
        while i != ia {
            second.push(face[i]);
            i = (i + 1) % len;
        }
        second.push(a);
        second.extend(&path[1..path.len() - 1]);
        self.faces.push(first);
        self.faces.push(second);
        for &x in path {
            self.embedded_vertex[x] = true;
        }
        for p in path.windows(2) {
            self.embedded_edge.insert(key(p[0], p[1]));
        }
    }
}
