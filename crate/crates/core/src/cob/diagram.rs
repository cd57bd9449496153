//! Brauer-type diagrams: orientation-compatible matchings of boundary
//! points, optionally with markers (univalent endpoints used by the
//! pointed extension). Closed loops are never stored; composition returns
//! the loop count separately so callers can convert loops to powers of t.

use super::word::{Sign, SignedWord};
use crate::error::CobError;
use std::fmt;

/// A boundary point: bottom points belong to the source word, top points
/// to the target word, both indexed left to right from 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Point {
    Bot(usize),
    Top(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Bot(i) => write!(f, "b{}", i),
            Point::Top(i) => write!(f, "t{}", i),
        }
    }
}

/// A basis diagram. Invariants, checked on construction:
/// - every boundary point lies on exactly one arc or is a marker;
/// - arcs are through strands (bottom s to top s), caps (bottom + to
///   bottom -) or cups (top + to top -);
/// - markers sit only on top + or bottom - points;
/// - arcs are stored with ordered endpoints and sorted, markers sorted,
///   so equality and `Ord` give the canonical deterministic ordering
///   (arc list first, markers last).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Diagram {
    arcs: Vec<(Point, Point)>,
    markers: Vec<Point>,
    source: SignedWord,
    target: SignedWord,
}

impl Diagram {
    pub fn new(
        source: SignedWord,
        target: SignedWord,
        arcs: Vec<(Point, Point)>,
        markers: Vec<Point>,
    ) -> Self {
        let mut arcs: Vec<(Point, Point)> = arcs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        arcs.sort();
        let mut markers = markers;
        markers.sort();
        let d = Diagram {
            arcs,
            markers,
            source,
            target,
        };
        d.validate();
        d
    }

    fn sign_at(&self, p: Point) -> Sign {
        match p {
            Point::Bot(i) => self.source.sign(i),
            Point::Top(i) => self.target.sign(i),
        }
    }

    fn validate(&self) {
        let nb = self.source.len();
        let nt = self.target.len();
        let mut seen = vec![false; nb + nt];
        let mut mark = |p: Point| {
            let idx = match p {
                Point::Bot(i) => {
                    assert!(i < nb, "bottom index out of range");
                    i
                }
                Point::Top(i) => {
                    assert!(i < nt, "top index out of range");
                    nb + i
                }
            };
            assert!(!seen[idx], "boundary point {} used twice", p);
            seen[idx] = true;
        };
        for &(a, b) in &self.arcs {
            mark(a);
            mark(b);
            match (a, b) {
                (Point::Bot(_), Point::Top(_)) => {
                    assert_eq!(self.sign_at(a), self.sign_at(b), "through strand flips sign")
                }
                (Point::Bot(_), Point::Bot(_)) | (Point::Top(_), Point::Top(_)) => {
                    assert_ne!(self.sign_at(a), self.sign_at(b), "cap/cup with equal signs")
                }
                _ => unreachable!("arcs are endpoint-ordered"),
            }
        }
        for &m in &self.markers {
            mark(m);
            let ok = match m {
                Point::Top(_) => self.sign_at(m) == Sign::Plus,
                Point::Bot(_) => self.sign_at(m) == Sign::Minus,
            };
            assert!(ok, "marker on disallowed point {}", m);
        }
        assert!(seen.iter().all(|&s| s), "uncovered boundary point");
    }

    pub fn source(&self) -> &SignedWord {
        &self.source
    }

    pub fn target(&self) -> &SignedWord {
        &self.target
    }

    pub fn arcs(&self) -> &[(Point, Point)] {
        &self.arcs
    }

    pub fn markers(&self) -> &[Point] {
        &self.markers
    }

    pub fn is_marker_free(&self) -> bool {
        self.markers.is_empty()
    }

    /// Marker count = grading = excess(target) - excess(source).
    pub fn grading(&self) -> usize {
        self.markers.len()
    }

    pub fn identity(w: &SignedWord) -> Self {
        let arcs = (0..w.len()).map(|k| (Point::Bot(k), Point::Top(k))).collect();
        Diagram::new(w.clone(), w.clone(), arcs, vec![])
    }

    /// Permutation diagram: bottom point k goes to top point `mapping[k]`.
    pub fn permutation(source: &SignedWord, mapping: &[usize]) -> Self {
        assert_eq!(source.len(), mapping.len());
        let mut tgt = vec![None; mapping.len()];
        for (k, &m) in mapping.iter().enumerate() {
            assert!(tgt[m].is_none(), "not a permutation");
            tgt[m] = Some(source.sign(k));
        }
        let target = SignedWord::new(tgt.into_iter().map(|s| s.unwrap()).collect());
        let arcs = mapping
            .iter()
            .enumerate()
            .map(|(k, &m)| (Point::Bot(k), Point::Top(m)))
            .collect();
        Diagram::new(source.clone(), target, arcs, vec![])
    }

    /// If every arc is a through strand, the induced bottom-to-top map.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.markers.is_empty() || self.arcs.len() != self.source.len() {
            return None;
        }
        let mut mapping = vec![0usize; self.source.len()];
        for &(a, b) in &self.arcs {
            match (a, b) {
                (Point::Bot(i), Point::Top(j)) => mapping[i] = j,
                _ => return None,
            }
        }
        Some(mapping)
    }

    /// Glue `self` on top of `f` (i.e. the composite `self . f`), returning
    /// the number of closed loops and the composite diagram.
    pub fn compose(&self, f: &Diagram) -> Result<(usize, Diagram), CobError> {
        if f.target != self.source {
            return Err(CobError::EndpointMismatch {
                f_target: f.target.to_string(),
                g_source: self.source.to_string(),
            });
        }
        let nb = f.source.len();
        let nm = self.source.len();
        let nt = self.target.len();
        let total = nb + nm + nt;
        // node ids: f-bottom, middle, g-top; edges carry ids so that
        // parallel edges (2-cycles) are walked correctly
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); total];
        let f_node = |p: Point| match p {
            Point::Bot(i) => i,
            Point::Top(i) => nb + i,
        };
        let g_node = |p: Point| match p {
            Point::Bot(i) => nb + i,
            Point::Top(i) => nb + nm + i,
        };
        let mut edge_id = 0usize;
        for &(a, b) in &f.arcs {
            adj[f_node(a)].push((f_node(b), edge_id));
            adj[f_node(b)].push((f_node(a), edge_id));
            edge_id += 1;
        }
        for &(a, b) in &self.arcs {
            adj[g_node(a)].push((g_node(b), edge_id));
            adj[g_node(b)].push((g_node(a), edge_id));
            edge_id += 1;
        }
        let mut mid_marker = vec![false; total];
        let mut out_markers = Vec::new();
        for &m in &f.markers {
            match m {
                Point::Bot(_) => out_markers.push(m),
                Point::Top(i) => mid_marker[nb + i] = true,
            }
        }
        for &m in &self.markers {
            match m {
                Point::Bot(i) => {
                    assert!(!mid_marker[nb + i], "middle point marked on both sides");
                    mid_marker[nb + i] = true;
                }
                Point::Top(i) => out_markers.push(Point::Top(i)),
            }
        }
        let boundary = |n: usize| -> Option<Point> {
            if n < nb {
                Some(Point::Bot(n))
            } else if n >= nb + nm {
                Some(Point::Top(n - nb - nm))
            } else {
                None
            }
        };
        let mut visited = vec![false; total];
        let mut arcs = Vec::new();
        // walk open paths, starting from each degree-1 node
        for start in 0..total {
            if visited[start] || adj[start].len() != 1 {
                continue;
            }
            visited[start] = true;
            let (mut cur, mut via) = adj[start][0];
            loop {
                visited[cur] = true;
                let next = adj[cur].iter().copied().find(|&(_, e)| e != via);
                match next {
                    Some((n, e)) if adj[cur].len() == 2 => {
                        cur = n;
                        via = e;
                    }
                    _ => break,
                }
            }
            match (boundary(start), boundary(cur)) {
                (Some(a), Some(b)) => arcs.push((a, b)),
                (Some(a), None) => {
                    debug_assert!(mid_marker[cur]);
                    out_markers.push(a);
                }
                (None, Some(b)) => {
                    debug_assert!(mid_marker[start]);
                    out_markers.push(b);
                }
                (None, None) => {
                    unreachable!("path with markers at both ends")
                }
            }
        }
        // untouched degree-2 middle nodes form the closed loops
        let mut loops = 0;
        for start in 0..total {
            if visited[start] || adj[start].is_empty() {
                continue;
            }
            loops += 1;
            visited[start] = true;
            let (mut cur, mut via) = adj[start][0];
            while cur != start {
                visited[cur] = true;
                let (n, e) = adj[cur]
                    .iter()
                    .copied()
                    .find(|&(_, e)| e != via)
                    .expect("loop node has two incident edges");
                cur = n;
                via = e;
            }
        }
        let out = Diagram::new(f.source.clone(), self.target.clone(), arcs, out_markers);
        Ok((loops, out))
    }

    /// Side-by-side juxtaposition.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let bs = self.source.len();
        let ts = self.target.len();
        let shift = |p: Point| match p {
            Point::Bot(i) => Point::Bot(i + bs),
            Point::Top(i) => Point::Top(i + ts),
        };
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(a, b)| (shift(a), shift(b))));
        let mut markers = self.markers.clone();
        markers.extend(other.markers.iter().map(|&m| shift(m)));
        Diagram::new(
            self.source.tensor(&other.source),
            self.target.tensor(&other.target),
            arcs,
            markers,
        )
    }

    /// Close top point k onto bottom point k and count the resulting loops.
    /// Only defined for marker-free endomorphism diagrams.
    pub fn closure_loops(&self) -> Result<usize, CobError> {
        if self.source != self.target {
            return Err(CobError::NotEndomorphism {
                from: self.source.to_string(),
                to: self.target.to_string(),
            });
        }
        assert!(self.markers.is_empty(), "trace of a marked diagram");
        let n = self.source.len();
        let node = |p: Point| match p {
            Point::Bot(i) => i,
            Point::Top(i) => n + i,
        };
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); 2 * n];
        let mut edge_id = 0usize;
        for &(a, b) in &self.arcs {
            adj[node(a)].push((node(b), edge_id));
            adj[node(b)].push((node(a), edge_id));
            edge_id += 1;
        }
        for k in 0..n {
            adj[k].push((n + k, edge_id));
            adj[n + k].push((k, edge_id));
            edge_id += 1;
        }
        let mut visited = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if visited[start] {
                continue;
            }
            loops += 1;
            visited[start] = true;
            let (mut cur, mut via) = adj[start][0];
            while cur != start {
                visited[cur] = true;
                let (nx, e) = adj[cur]
                    .iter()
                    .copied()
                    .find(|&(_, e)| e != via)
                    .expect("closure is 2-regular");
                cur = nx;
                via = e;
            }
        }
        Ok(loops)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .arcs
            .iter()
            .map(|(a, b)| format!("{}-{}", a, b))
            .collect();
        parts.extend(self.markers.iter().map(|m| format!("m({})", m)));
        write!(f, "{}", parts.join(", "))
    }
}

/// All valid diagrams from `src` to `tgt`, deterministically ordered.
/// With `pointed = false` only perfect matchings (no markers) are listed.
pub fn enumerate_diagrams(src: &SignedWord, tgt: &SignedWord, pointed: bool) -> Vec<Diagram> {
    let defect = tgt.excess() - src.excess();
    if (!pointed && defect != 0) || defect < 0 {
        return Vec::new();
    }
    let budget = if pointed { defect as usize } else { 0 };
    let nb = src.len();
    let nt = tgt.len();
    let points: Vec<Point> = (0..nb)
        .map(Point::Bot)
        .chain((0..nt).map(Point::Top))
        .collect();
    let sign = |p: Point| match p {
        Point::Bot(i) => src.sign(i),
        Point::Top(i) => tgt.sign(i),
    };
    let arc_ok = |a: Point, b: Point| match (a, b) {
        (Point::Bot(_), Point::Top(_)) | (Point::Top(_), Point::Bot(_)) => sign(a) == sign(b),
        _ => sign(a) != sign(b),
    };
    let marker_ok = |p: Point| match p {
        Point::Top(_) => sign(p) == Sign::Plus,
        Point::Bot(_) => sign(p) == Sign::Minus,
    };
    let mut used = vec![false; points.len()];
    let mut arcs = Vec::new();
    let mut markers = Vec::new();
    let mut out = Vec::new();
    fn go(
        points: &[Point],
        used: &mut Vec<bool>,
        arcs: &mut Vec<(Point, Point)>,
        markers: &mut Vec<Point>,
        budget: usize,
        arc_ok: &impl Fn(Point, Point) -> bool,
        marker_ok: &impl Fn(Point) -> bool,
        out: &mut Vec<Diagram>,
        src: &SignedWord,
        tgt: &SignedWord,
    ) {
        let Some(first) = used.iter().position(|&u| !u) else {
            if budget == 0 {
                out.push(Diagram::new(
                    src.clone(),
                    tgt.clone(),
                    arcs.clone(),
                    markers.clone(),
                ));
            }
            return;
        };
        used[first] = true;
        let p = points[first];
        for q_idx in first + 1..points.len() {
            if used[q_idx] || !arc_ok(p, points[q_idx]) {
                continue;
            }
            used[q_idx] = true;
            arcs.push((p, points[q_idx]));
            go(points, used, arcs, markers, budget, arc_ok, marker_ok, out, src, tgt);
            arcs.pop();
            used[q_idx] = false;
        }
        if budget > 0 && marker_ok(p) {
            markers.push(p);
            go(points, used, arcs, markers, budget - 1, arc_ok, marker_ok, out, src, tgt);
            markers.pop();
        }
        used[first] = false;
    }
    go(
        &points, &mut used, &mut arcs, &mut markers, budget, &arc_ok, &marker_ok, &mut out, src,
        tgt,
    );
    out.sort();
    out.dedup();
    out
}
