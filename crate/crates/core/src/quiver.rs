//! Dynkin quivers, dimension vectors, the Euler/Tits form, and positive
//! roots.
//!
//! Vertices are 0-based internally; the text format and all displays are
//! 1-based. Construction validates that the underlying graph is a connected
//! simply-laced Dynkin diagram (ADE), which is exactly the
//! representation-finite case.

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Multiplicity per vertex; the dimension vector of an I-graded space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise subtraction; None if any coordinate would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn scaled(&self, k: usize) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A dimension vector with Tits form value 1. Ordered by height descending,
/// then coordinates lexicographically descending; on a linearly ordered
/// type A quiver this is (interval length descending, start ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveRoot(DimVector);

impl PositiveRoot {
    pub fn dim_vector(&self) -> &DimVector {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.total()
    }
}

impl PartialOrd for PositiveRoot {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PositiveRoot {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .height()
            .cmp(&self.height())
            .then_with(|| other.0 .0.cmp(&self.0 .0))
    }
}

/// A quiver whose underlying graph is a simply-laced Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
    kind: DynkinType,
    /// Type A only: vertex ids listed along the path, deterministic
    /// direction (smaller endpoint first).
    path: Option<Vec<usize>>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(s, t) in &arrows {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} -> {} out of range",
                    s + 1,
                    t + 1
                )));
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {}", s + 1)));
            }
            let edge = (s.min(t), s.max(t));
            if !seen.insert(edge) {
                return Err(Error::InvalidQuiver(format!(
                    "multiple edges between {} and {}",
                    edge.0 + 1,
                    edge.1 + 1
                )));
            }
        }
        // a connected simple graph on n vertices with n-1 edges is a tree
        if arrows.len() + 1 != vertex_count {
            return Err(Error::InvalidQuiver(
                "underlying graph is not a tree".into(),
            ));
        }
        let adj = adjacency(vertex_count, &arrows);
        if !connected(&adj) {
            return Err(Error::InvalidQuiver("graph is not connected".into()));
        }
        let kind = classify(&adj)?;
        let path = match kind {
            DynkinType::A(_) => Some(path_order(&adj)),
            _ => None,
        };
        Ok(Quiver {
            vertex_count,
            arrows,
            kind,
            path,
        })
    }

    /// The equioriented linear quiver 1 -> 2 -> ... -> n.
    pub fn linear_a(n: usize) -> Quiver {
        Quiver::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
            .expect("linear quiver is Dynkin")
    }

    /// The two-sided A_{2n-1} quiver 1 -> ... -> n <- ... <- 2n-1 whose
    /// injective-arrow strata realise pairs of flags on an n-space.
    pub fn flag_quiver(n: usize) -> Quiver {
        assert!(n >= 1);
        let verts = 2 * n - 1;
        let mut arrows = Vec::new();
        for i in 0..n.saturating_sub(1) {
            arrows.push((i, i + 1));
        }
        for j in n..verts {
            arrows.push((j, j - 1));
        }
        Quiver::new(verts, arrows).expect("flag quiver is Dynkin")
    }

    /// Parse the text format: first line `vertices n`, then `arrow i j`
    /// lines with 1-based endpoints. Blank lines and `#` comments allowed.
    pub fn parse(text: &str) -> Result<Quiver> {
        let mut vertex_count = None;
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            match it.next() {
                Some("vertices") => {
                    let n: usize = it
                        .next()
                        .ok_or_else(|| err_line(lineno, "missing vertex count"))?
                        .parse()
                        .map_err(|_| err_line(lineno, "bad vertex count"))?;
                    if vertex_count.replace(n).is_some() {
                        return Err(err_line(lineno, "duplicate vertices line"));
                    }
                }
                Some("arrow") => {
                    let s: usize = it
                        .next()
                        .ok_or_else(|| err_line(lineno, "missing arrow source"))?
                        .parse()
                        .map_err(|_| err_line(lineno, "bad arrow source"))?;
                    let t: usize = it
                        .next()
                        .ok_or_else(|| err_line(lineno, "missing arrow target"))?
                        .parse()
                        .map_err(|_| err_line(lineno, "bad arrow target"))?;
                    if s == 0 || t == 0 {
                        return Err(err_line(lineno, "vertices are 1-based"));
                    }
                    arrows.push((s - 1, t - 1));
                }
                Some(other) => {
                    return Err(err_line(lineno, &format!("unknown directive '{other}'")))
                }
                None => {}
            }
            if it.next().is_some() {
                return Err(err_line(lineno, "trailing tokens"));
            }
        }
        let n = vertex_count.ok_or_else(|| Error::QuiverParse("missing vertices line".into()))?;
        Quiver::new(n, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    /// Vertex ids along the path, type A only.
    pub fn path(&self) -> Option<&[usize]> {
        self.path.as_deref()
    }

    /// Position of each vertex along the path (inverse of `path`).
    pub fn path_position(&self) -> Option<Vec<usize>> {
        self.path.as_ref().map(|p| {
            let mut pos = vec![0; p.len()];
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            pos
        })
    }

    /// True when every arrow points forward along the path order.
    pub fn is_equioriented_a(&self) -> bool {
        let Some(pos) = self.path_position() else {
            return false;
        };
        let forward = self.arrows.iter().all(|&(s, t)| pos[t] == pos[s] + 1);
        let backward = self.arrows.iter().all(|&(s, t)| pos[s] == pos[t] + 1);
        forward || backward
    }

    /// The hereditary Euler form <d, e> = sum d_i e_i - sum_{i->j} d_i e_j.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> i64 {
        assert_eq!(d.len(), self.vertex_count);
        assert_eq!(e.len(), self.vertex_count);
        let mut val: i64 = d
            .0
            .iter()
            .zip(&e.0)
            .map(|(a, b)| (*a as i64) * (*b as i64))
            .sum();
        for &(s, t) in &self.arrows {
            val -= (d.0[s] as i64) * (e.0[t] as i64);
        }
        val
    }

    /// The Tits quadratic form q(d) = <d, d>; equals 1 exactly on roots.
    pub fn tits_form(&self, d: &DimVector) -> i64 {
        self.euler_form(d, d)
    }

    /// All positive roots: the nonzero d >= 0 with q(d) = 1. Computed by
    /// closing the simple roots under addition of simples, which reaches
    /// every positive root of an ADE system; canonical order.
    pub fn positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.vertex_count;
        let mut found = std::collections::BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0usize; n];
            v[i] = 1;
            let d = DimVector(v);
            if found.insert(d.0.clone()) {
                queue.push_back(d);
            }
        }
        while let Some(d) = queue.pop_front() {
            for i in 0..n {
                let mut v = d.0.clone();
                v[i] += 1;
                if v[i] > 6 {
                    continue; // largest coordinate of any ADE root
                }
                let cand = DimVector(v);
                if self.tits_form(&cand) == 1 && found.insert(cand.0.clone()) {
                    queue.push_back(cand);
                }
            }
        }
        let mut roots: Vec<PositiveRoot> = found
            .into_iter()
            .map(|v| PositiveRoot(DimVector(v)))
            .collect();
        roots.sort();
        roots
    }

    /// Interval [a, b] of path positions (0-based, inclusive) supporting a
    /// type A root.
    pub fn root_interval(&self, root: &PositiveRoot) -> Result<(usize, usize)> {
        let path = self
            .path
            .as_ref()
            .ok_or_else(|| Error::NotTypeA(format!("quiver has type {}", self.kind)))?;
        let coords: Vec<usize> = path.iter().map(|&v| root.dim_vector().0[v]).collect();
        let a = coords.iter().position(|&c| c == 1);
        let b = coords.iter().rposition(|&c| c == 1);
        match (a, b) {
            (Some(a), Some(b))
                if coords.iter().enumerate().all(|(i, &c)| {
                    if (a..=b).contains(&i) {
                        c == 1
                    } else {
                        c == 0
                    }
                }) =>
            {
                Ok((a, b))
            }
            _ => Err(Error::Internal(format!(
                "type A root {} is not an interval",
                root.dim_vector()
            ))),
        }
    }

    /// The root supported on path positions a..=b.
    pub fn interval_root(&self, a: usize, b: usize) -> Result<PositiveRoot> {
        let path = self
            .path
            .as_ref()
            .ok_or_else(|| Error::NotTypeA(format!("quiver has type {}", self.kind)))?;
        if a > b || b >= path.len() {
            return Err(Error::Parse(format!("bad interval [{},{}]", a + 1, b + 1)));
        }
        let mut v = vec![0usize; self.vertex_count];
        for &vertex in &path[a..=b] {
            v[vertex] = 1;
        }
        Ok(PositiveRoot(DimVector(v)))
    }
}

fn err_line(lineno: usize, msg: &str) -> Error {
    Error::QuiverParse(format!("line {}: {msg}", lineno + 1))
}

fn adjacency(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in arrows {
        adj[s].push(t);
        adj[t].push(s);
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    adj
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// ADE classification of a connected tree by branch analysis.
fn classify(adj: &[Vec<usize>]) -> Result<DynkinType> {
    let n = adj.len();
    if adj.iter().any(|nbrs| nbrs.len() > 3) {
        return Err(Error::InvalidQuiver(
            "vertex of degree > 3: not simply-laced Dynkin".into(),
        ));
    }
    let branch_nodes: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    match branch_nodes.len() {
        0 => Ok(DynkinType::A(n)),
        1 => {
            let center = branch_nodes[0];
            let mut arms: Vec<usize> = adj[center]
                .iter()
                .map(|&start| arm_length(adj, center, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(DynkinType::D(n)),
                [1, 2, 2] => Ok(DynkinType::E(6)),
                [1, 2, 3] => Ok(DynkinType::E(7)),
                [1, 2, 4] => Ok(DynkinType::E(8)),
                _ => Err(Error::InvalidQuiver(format!(
                    "branch arms {arms:?}: not simply-laced Dynkin"
                ))),
            }
        }
        _ => Err(Error::InvalidQuiver(
            "more than one branch vertex: not simply-laced Dynkin".into(),
        )),
    }
}

fn arm_length(adj: &[Vec<usize>], center: usize, start: usize) -> usize {
    let mut prev = center;
    let mut cur = start;
    let mut len = 1;
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&u| u != prev).collect();
        match next.as_slice() {
            [] => return len,
            [u] => {
                prev = cur;
                cur = *u;
                len += 1;
            }
            _ => return len, // hit another branch node; classify() rejects it
        }
    }
}

fn path_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 1 {
        return vec![0];
    }
    let start = (0..n)
        .filter(|&v| adj[v].len() == 1)
        .min()
        .expect("a path has endpoints");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("path continues");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[usize]) -> DimVector {
        DimVector(v.to_vec())
    }

    #[test]
    fn a2_roots() {
        let q = Quiver::linear_a(2);
        let roots = q.positive_roots();
        let got: Vec<Vec<usize>> = roots.iter().map(|r| r.dim_vector().0.clone()).collect();
        assert_eq!(got, vec![vec![1, 1], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn a5_roots_are_the_intervals() {
        let q = Quiver::linear_a(5);
        let roots = q.positive_roots();
        assert_eq!(roots.len(), 15);
        for root in &roots {
            let (a, b) = q.root_interval(root).unwrap();
            assert!(a <= b && b < 5);
            assert_eq!(*root, q.interval_root(a, b).unwrap());
        }
    }

    #[test]
    fn root_counts_match_type() {
        for n in 1..=8 {
            let q = Quiver::linear_a(n);
            assert_eq!(q.positive_roots().len(), n * (n + 1) / 2, "A{n}");
        }
        // D4: central vertex 0 with three neighbours
        let d4 = Quiver::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(d4.kind(), DynkinType::D(4));
        assert_eq!(d4.positive_roots().len(), 12);
        let d5 = Quiver::new(5, vec![(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(d5.kind(), DynkinType::D(5));
        assert_eq!(d5.positive_roots().len(), 20);
        let e6 = Quiver::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert_eq!(e6.kind(), DynkinType::E(6));
        assert_eq!(e6.positive_roots().len(), 36);
    }

    /// Independent oracle: bounded search over all candidate vectors.
    #[test]
    fn closure_agrees_with_bounded_search() {
        let quivers = vec![
            Quiver::linear_a(4),
            Quiver::flag_quiver(3),
            Quiver::new(4, vec![(1, 0), (1, 2), (3, 1)]).unwrap(), // D4, mixed orientation
        ];
        for q in quivers {
            let n = q.vertex_count();
            let mut expected = Vec::new();
            let mut counter = vec![0usize; n];
            loop {
                let d = DimVector(counter.clone());
                if !d.is_zero() && q.tits_form(&d) == 1 {
                    expected.push(counter.clone());
                }
                // odometer over {0..6}^n
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    counter[i] += 1;
                    if counter[i] <= 6 {
                        break;
                    }
                    counter[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            let mut got: Vec<Vec<usize>> = q
                .positive_roots()
                .iter()
                .map(|r| r.dim_vector().0.clone())
                .collect();
            got.sort();
            expected.sort();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn euler_form_on_a2() {
        let q = Quiver::linear_a(2);
        assert_eq!(q.euler_form(&dv(&[1, 0]), &dv(&[0, 1])), -1);
        assert_eq!(q.euler_form(&dv(&[0, 1]), &dv(&[1, 0])), 0);
    }

    #[test]
    fn roots_have_tits_form_one() {
        let q = Quiver::linear_a(3);
        for r in q.positive_roots() {
            assert_eq!(q.tits_form(r.dim_vector()), 1);
        }
    }

    #[test]
    fn euler_form_is_bilinear() {
        let q = Quiver::flag_quiver(2);
        let a = dv(&[1, 2, 0]);
        let b = dv(&[0, 1, 1]);
        let c = dv(&[2, 0, 1]);
        assert_eq!(
            q.euler_form(&a.add(&b), &c),
            q.euler_form(&a, &c) + q.euler_form(&b, &c)
        );
        assert_eq!(
            q.euler_form(&c, &a.add(&b)),
            q.euler_form(&c, &a) + q.euler_form(&c, &b)
        );
    }

    #[test]
    fn rejects_non_dynkin() {
        // cycle
        assert!(Quiver::new(3, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        // loop
        assert!(Quiver::new(2, vec![(0, 0), (0, 1)]).is_err());
        // double edge
        assert!(Quiver::new(2, vec![(0, 1), (1, 0)]).is_err());
        // star with four branches
        assert!(Quiver::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).is_err());
        // affine E: arms (2,2,2)
        assert!(Quiver::new(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).is_err());
        // disconnected
        assert!(Quiver::new(4, vec![(0, 1), (2, 3), (1, 2), (3, 0)]).is_err());
    }

    #[test]
    fn parses_text_format() {
        let text = "# paper quiver\nvertices 5\narrow 1 2\narrow 2 3\narrow 3 4\narrow 4 5\n";
        let q = Quiver::parse(text).unwrap();
        assert_eq!(q, Quiver::linear_a(5));
        assert!(Quiver::parse("arrow 1 2\n").is_err());
        assert!(Quiver::parse("vertices 2\narrow 0 1\n").is_err());
    }

    #[test]
    fn flag_quiver_shape() {
        let q = Quiver::flag_quiver(3);
        assert_eq!(q.kind(), DynkinType::A(5));
        assert_eq!(
            q.arrows(),
            &[(0, 1), (1, 2), (3, 2), (4, 3)]
        );
        assert!(!q.is_equioriented_a());
        assert!(Quiver::linear_a(4).is_equioriented_a());
    }
}
