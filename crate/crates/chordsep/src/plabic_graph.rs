//! Planar bicolored graphs in a disc: strands, the strand permutation,
//! reducedness diagnostics, face labels, and the local moves (M1)–(M3).
//!
//! Graphs are stored as rotation systems: every vertex carries the
//! counterclockwise cyclic order of its incident half-edges. Boundary
//! vertices `b_1, …, b_n` sit counterclockwise on the disc and have exactly
//! one incident edge. For face tracing the disc is closed by virtual arcs
//! between consecutive boundary vertices.
//!
//! Orientation convention: a strand arriving at a white vertex leaves along
//! the next half-edge counterclockwise from the arrival edge, at a black
//! vertex along the next clockwise. Faces to the right of the strand ending
//! at `b_j` carry `j` in their label. The convention is pinned by the
//! requirement that the dual of a triangulated level-k tiling has strand
//! permutation `i ↦ i + k (mod n)` with face labels equal to the vertex
//! labels; a mirrored convention would produce `σ(n−k, n)` instead, which
//! the tests catch.

use crate::collection::{SeparatedCollection, SeparationKind};
use crate::geometry;
use crate::plabic_tiling::{Color, TriangulatedPlabicTiling};
use crate::subset::{GroundSet, Subset};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Boundary vertex `b_i` (1-based index).
    Boundary(u8),
    Internal(Color),
}

/// A plabic graph as a rotation system. Half-edge `2e` and `2e+1` are the two
/// directions of edge `e`; `origins[h]` is the vertex half-edge `h` points
/// out of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlabicGraph {
    n: u8,
    kinds: Vec<VertexKind>,
    rotations: Vec<Vec<usize>>,
    origins: Vec<usize>,
    boundary: Vec<usize>, // boundary[i-1] = vertex id of b_i
}

/// One strand: the walk from `b_start` to `b_end`, as the list of half-edges
/// it traverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub start: u8,
    pub end: u8,
    pub halves: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Strands {
    pub open: Vec<Strand>,
    pub closed: Vec<Vec<usize>>,
}

/// The four reducedness checks; all absent ⇔ reduced.
#[derive(Debug, Clone, Default)]
pub struct ReducednessReport {
    pub closed_strand: Option<Vec<usize>>,
    pub essential_self_intersection: Option<(u8, usize)>,
    pub bad_double_crossing: Option<(u8, u8, usize, usize)>,
    pub fixed_point_without_leaf: Option<u8>,
}

impl ReducednessReport {
    pub fn is_reduced(&self) -> bool {
        self.closed_strand.is_none()
            && self.essential_self_intersection.is_none()
            && self.bad_double_crossing.is_none()
            && self.fixed_point_without_leaf.is_none()
    }
}

/// `σ(k,n)`: `i ↦ i + k (mod n)` on `{1, …, n}`.
pub fn sigma(k: u8, n: u8) -> Vec<u8> {
    (1..=n).map(|i| (i + k - 1) % n + 1).collect()
}

fn twin(h: usize) -> usize {
    h ^ 1
}

impl PlabicGraph {
    /// Build from parts: `edges[e]` are endpoint vertex ids, `rotations[v]`
    /// lists the incident edge ids counterclockwise (a loop lists its edge
    /// twice).
    pub fn from_parts(
        n: u8,
        kinds: Vec<VertexKind>,
        edges: &[(usize, usize)],
        edge_rotations: &[Vec<usize>],
    ) -> Result<Self> {
        if kinds.len() != edge_rotations.len() {
            return Err(Error::InvalidGraph("rotation list count mismatch".into()));
        }
        let mut origins = vec![usize::MAX; edges.len() * 2];
        let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(kinds.len());
        let mut used = vec![0u8; edges.len() * 2];
        for (v, rot) in edge_rotations.iter().enumerate() {
            let mut halves = Vec::with_capacity(rot.len());
            for &e in rot {
                let Some(&(a, b)) = edges.get(e) else {
                    return Err(Error::InvalidGraph(format!("unknown edge id {e}")));
                };
                let h = if a == v && b != v {
                    2 * e
                } else if b == v && a != v {
                    2 * e + 1
                } else if a == v && b == v {
                    // loop: first mention is 2e, second 2e+1
                    if used[2 * e] == 0 {
                        2 * e
                    } else {
                        2 * e + 1
                    }
                } else {
                    return Err(Error::InvalidGraph(format!(
                        "edge {e} not incident to vertex {v}"
                    )));
                };
                if used[h] != 0 {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge of edge {e} listed twice"
                    )));
                }
                used[h] = 1;
                origins[h] = v;
                halves.push(h);
            }
            rotations.push(halves);
        }
        if used.contains(&0) {
            return Err(Error::InvalidGraph(
                "some edge direction missing from the rotation lists".into(),
            ));
        }
        let mut boundary = vec![usize::MAX; n as usize];
        for (v, kind) in kinds.iter().enumerate() {
            if let VertexKind::Boundary(i) = kind {
                if *i == 0 || *i > n || boundary[(*i - 1) as usize] != usize::MAX {
                    return Err(Error::InvalidGraph(format!("bad boundary index {i}")));
                }
                boundary[(*i - 1) as usize] = v;
            }
        }
        if boundary.contains(&usize::MAX) {
            return Err(Error::InvalidGraph("missing boundary vertex".into()));
        }
        let g = PlabicGraph {
            n,
            kinds,
            rotations,
            origins,
            boundary,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origins.len() / 2
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.origins[2 * e], self.origins[2 * e + 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    fn head(&self, h: usize) -> usize {
        self.origins[twin(h)]
    }

    fn rot_step(&self, v: usize, h: usize, forward: bool) -> usize {
        let rot = &self.rotations[v];
        let pos = rot.iter().position(|&x| x == h).expect("half at origin");
        let m = rot.len();
        if forward {
            rot[(pos + 1) % m]
        } else {
            rot[(pos + m - 1) % m]
        }
    }

    /// Structural validation: boundary degrees, internal degree ≠ 2,
    /// boundary-reachable connectivity, and the Euler formula on the
    /// arc-closed map.
    pub fn validate(&self) -> Result<()> {
        for (v, kind) in self.kinds.iter().enumerate() {
            match kind {
                VertexKind::Boundary(_) => {
                    if self.degree(v) != 1 {
                        return Err(Error::InvalidGraph(format!(
                            "boundary vertex {v} must have degree 1"
                        )));
                    }
                }
                VertexKind::Internal(_) => {
                    if self.degree(v) == 2 {
                        return Err(Error::InvalidGraph(format!(
                            "internal vertex {v} has degree 2"
                        )));
                    }
                    if self.degree(v) == 0 {
                        return Err(Error::InvalidGraph(format!(
                            "internal vertex {v} is isolated"
                        )));
                    }
                }
            }
        }
        // connectivity to the boundary circle
        let mut seen = vec![false; self.kinds.len()];
        let mut queue: VecDeque<usize> = self.boundary.iter().copied().collect();
        for &b in &self.boundary {
            seen[b] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotations[v] {
                let w = self.head(h);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidGraph(
                "internal component not attached to the boundary".into(),
            ));
        }
        // Euler formula with the outer face counted
        let aug = self.augmented();
        let v = self.kinds.len() as i64;
        let e = self.edge_count() as i64 + self.n as i64;
        let f = aug.orbit_count as i64;
        if v - e + f != 2 {
            return Err(Error::InvalidGraph(format!(
                "rotation system is not planar: V−E+F = {}",
                v - e + f
            )));
        }
        Ok(())
    }

    /// Arc-closed map: appends one virtual arc per consecutive boundary pair
    /// and traces all face orbits.
    fn augmented(&self) -> Augmented {
        let real = self.origins.len();
        let n = self.n as usize;
        let mut origins = self.origins.clone();
        let mut rotations = self.rotations.clone();
        for j in 0..n {
            // arc j runs b_{j+1} -> b_{j+2} (1-based): halves real+2j, real+2j+1
            origins.push(self.boundary[j]);
            origins.push(self.boundary[(j + 1) % n]);
        }
        for j in 0..n {
            let v = self.boundary[j];
            let interior = rotations[v][0];
            let fwd = real + 2 * j;
            let back_in = real + 2 * ((j + n - 1) % n) + 1;
            rotations[v] = vec![fwd, interior, back_in];
        }
        // face orbits: the face left of h continues along the half-edge
        // immediately clockwise of twin(h) around the head vertex
        let total = origins.len();
        let mut face_of = vec![usize::MAX; total];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let rot_prev = |v: usize, h: usize| -> usize {
            let rot = &rotations[v];
            let pos = rot.iter().position(|&x| x == h).expect("half at origin");
            rot[(pos + rot.len() - 1) % rot.len()]
        };
        for h0 in 0..total {
            if face_of[h0] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut cycle = Vec::new();
            let mut h = h0;
            loop {
                face_of[h] = id;
                cycle.push(h);
                let t = twin_aug(h, real);
                h = rot_prev(origins[t], t);
                if h == h0 {
                    break;
                }
            }
            orbits.push(cycle);
        }
        // outer face: left of the reversed arc (b_2 -> b_1)
        let outer = face_of[real + 1];
        Augmented {
            real,
            face_of,
            orbit_count: orbits.len(),
            orbits,
            outer,
        }
    }

    /// Internal faces as half-edge cycles (left-of orbit), arcs included for
    /// boundary faces; deterministic order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let aug = self.augmented();
        aug.orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != aug.outer)
            .map(|(_, c)| c.clone())
            .collect()
    }

    /// Walk the strand that starts at boundary vertex `b_i`.
    fn walk_from(&self, start: u8) -> Strand {
        let b = self.boundary[(start - 1) as usize];
        let mut h = self.rotations[b][0];
        let mut halves = vec![h];
        loop {
            let v = self.head(h);
            match self.kinds[v] {
                VertexKind::Boundary(j) => {
                    return Strand {
                        start,
                        end: j,
                        halves,
                    }
                }
                VertexKind::Internal(color) => {
                    let back = twin(h);
                    h = match color {
                        Color::White => self.rot_step(v, back, true),
                        Color::Black => self.rot_step(v, back, false),
                    };
                    halves.push(h);
                }
            }
        }
    }

    /// All strands: one per boundary start plus any closed strands.
    pub fn strands(&self) -> Strands {
        let mut used = vec![false; self.origins.len()];
        let mut open = Vec::new();
        for i in 1..=self.n {
            let s = self.walk_from(i);
            for &h in &s.halves {
                used[h] = true;
            }
            open.push(s);
        }
        let mut closed = Vec::new();
        for h0 in 0..self.origins.len() {
            if used[h0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = h0;
            loop {
                used[h] = true;
                cycle.push(h);
                let v = self.head(h);
                let VertexKind::Internal(color) = self.kinds[v] else {
                    unreachable!("open strands cover all boundary-incident halves");
                };
                let back = twin(h);
                h = match color {
                    Color::White => self.rot_step(v, back, true),
                    Color::Black => self.rot_step(v, back, false),
                };
                if h == h0 {
                    break;
                }
            }
            closed.push(cycle);
        }
        Strands { open, closed }
    }

    /// `π(i)` as a vector indexed by `i − 1`. Closed strands, if any, are
    /// reported by [`Self::reducedness`]; the permutation of the open strands
    /// is still returned.
    pub fn strand_permutation(&self) -> Vec<u8> {
        (1..=self.n).map(|i| self.walk_from(i).end).collect()
    }

    /// The four checks of the reducedness definition, evaluated literally.
    pub fn reducedness(&self) -> ReducednessReport {
        let strands = self.strands();
        let mut report = ReducednessReport {
            closed_strand: strands.closed.first().cloned(),
            ..Default::default()
        };
        'outer: for s in &strands.open {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for (pos, &h) in s.halves.iter().enumerate() {
                let e = h / 2;
                if let Some(&prev) = seen.get(&e) {
                    // a U-turn at a leaf is forced, not an essential crossing
                    let pivot = self.head(s.halves[prev]);
                    let leaf_turn = pos == prev + 1 && self.degree(pivot) == 1;
                    if !leaf_turn {
                        report.essential_self_intersection = Some((s.start, e));
                        break 'outer;
                    }
                } else {
                    seen.insert(e, pos);
                }
            }
        }
        'pairs: for (a, s) in strands.open.iter().enumerate() {
            let dirs: HashMap<usize, (usize, usize)> = s
                .halves
                .iter()
                .enumerate()
                .map(|(pos, &h)| (h / 2, (h & 1, pos)))
                .collect();
            for t in &strands.open[a + 1..] {
                let mut crossings: Vec<(usize, usize, usize)> = Vec::new();
                for (pos_t, &h) in t.halves.iter().enumerate() {
                    let e = h / 2;
                    if let Some(&(dir_s, pos_s)) = dirs.get(&e) {
                        if dir_s != h & 1 {
                            crossings.push((pos_s, pos_t, e));
                        }
                    }
                }
                crossings.sort();
                for w in 0..crossings.len() {
                    for z in w + 1..crossings.len() {
                        if crossings[w].1 < crossings[z].1 {
                            report.bad_double_crossing =
                                Some((s.start, t.start, crossings[w].2, crossings[z].2));
                            break 'pairs;
                        }
                    }
                }
            }
        }
        for s in &strands.open {
            if s.start == s.end {
                let b = self.boundary[(s.start - 1) as usize];
                let leaf = self.head(self.rotations[b][0]);
                if self.degree(leaf) != 1 {
                    report.fixed_point_without_leaf = Some(s.start);
                    break;
                }
            }
        }
        report
    }

    /// Face labels: face `F` contains `j` iff `F` lies to the right of the
    /// strand ending at `b_j`. Labels are listed in [`Self::faces`] order.
    /// Requires a reduced graph whose strand permutation is some `σ(k,n)`.
    pub fn face_labels(&self) -> Result<Vec<Subset>> {
        if !self.reducedness().is_reduced() {
            return Err(Error::NotReduced);
        }
        let n = self.n;
        let pi = self.strand_permutation();
        let k = (pi[0] + n - 1) % n;
        if pi != sigma(k, n) {
            return Err(Error::WrongStrandPermutation);
        }

        let aug = self.augmented();
        let face_index: HashMap<usize, usize> = aug
            .orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != aug.outer)
            .enumerate()
            .map(|(dense, (orbit, _))| (orbit, dense))
            .collect();
        let face_count = face_index.len();
        // adjacency across real edges
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); face_count];
        for e in 0..self.edge_count() {
            let f1 = face_index[&aug.face_of[2 * e]];
            let f2 = face_index[&aug.face_of[2 * e + 1]];
            adjacency[f1].push((f2, e));
            adjacency[f2].push((f1, e));
        }

        let mut labels = vec![Subset::EMPTY; face_count];
        for s in self.strands().open {
            let j = s.end;
            if s.start == s.end {
                // lollipop: a black leaf puts its index everywhere, a white
                // leaf nowhere
                let leaf = self.head(s.halves[0]);
                if self.kinds[leaf] == VertexKind::Internal(Color::Black) {
                    for l in labels.iter_mut() {
                        *l = l.with(j);
                    }
                }
                continue;
            }
            let blocked: HashSet<usize> = s.halves.iter().map(|&h| h / 2).collect();
            // seed faces: those along the boundary arcs on the right side,
            // i.e. arcs b_m -> b_{m+1} for m cyclically in [start, end)
            let mut reach = vec![false; face_count];
            let mut queue = VecDeque::new();
            let mut m = s.start;
            while m != s.end {
                let arc_fwd = aug.real + 2 * (m as usize - 1);
                let f = face_index[&aug.face_of[arc_fwd]];
                if !reach[f] {
                    reach[f] = true;
                    queue.push_back(f);
                }
                m = if m == n { 1 } else { m + 1 };
            }
            while let Some(f) = queue.pop_front() {
                for &(g, e) in &adjacency[f] {
                    if !blocked.contains(&e) && !reach[g] {
                        reach[g] = true;
                        queue.push_back(g);
                    }
                }
            }
            for (f, l) in labels.iter_mut().enumerate() {
                if reach[f] {
                    *l = l.with(j);
                }
            }
        }
        Ok(labels)
    }

    pub fn face_label_collection(&self) -> Result<SeparatedCollection> {
        let ground = GroundSet::new(self.n)?;
        SeparatedCollection::new(ground, SeparationKind::Weak, self.face_labels()?)
    }

    /// Square move (M2): recolor the four alternating trivalent vertices of a
    /// quadrilateral face. `face` indexes into [`Self::faces`].
    pub fn square_move(&self, face: usize) -> Result<Self> {
        let faces = self.faces();
        let cycle = faces
            .get(face)
            .ok_or_else(|| Error::MoveRejected(format!("no face {face}")))?;
        if cycle.len() != 4 {
            return Err(Error::MoveRejected(format!(
                "face {face} has {} sides, need 4",
                cycle.len()
            )));
        }
        let mut vs = Vec::new();
        for &h in cycle {
            if h >= self.origins.len() {
                return Err(Error::MoveRejected("face touches the boundary".into()));
            }
            vs.push(self.origins[h]);
        }
        let mut colors = Vec::new();
        for &v in &vs {
            match self.kinds[v] {
                VertexKind::Internal(c) => {
                    if self.degree(v) != 3 {
                        return Err(Error::MoveRejected(format!(
                            "vertex {v} is not trivalent"
                        )));
                    }
                    colors.push(c);
                }
                VertexKind::Boundary(_) => {
                    return Err(Error::MoveRejected("face touches the boundary".into()))
                }
            }
        }
        let distinct: HashSet<usize> = vs.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(Error::MoveRejected("face vertices repeat".into()));
        }
        if (0..4).any(|i| colors[i] == colors[(i + 1) % 4]) {
            return Err(Error::MoveRejected("colors do not alternate".into()));
        }
        let mut out = self.clone();
        for &v in &vs {
            let VertexKind::Internal(c) = out.kinds[v] else {
                unreachable!()
            };
            out.kinds[v] = VertexKind::Internal(c.flip());
        }
        Ok(out)
    }

    /// Trivalent contraction–uncontraction flip: (M1) on a white–white edge,
    /// (M3) on a black–black edge. Regroups the four outer legs; applying it
    /// twice restores the original graph up to internal relabeling.
    pub fn flip_move(&self, edge: usize, color: Color) -> Result<Self> {
        if edge >= self.edge_count() {
            return Err(Error::MoveRejected(format!("no edge {edge}")));
        }
        let (u, v) = self.edge_endpoints(edge);
        if u == v {
            return Err(Error::MoveRejected("loop edge".into()));
        }
        for w in [u, v] {
            match self.kinds[w] {
                VertexKind::Internal(c) if c == color && self.degree(w) == 3 => {}
                _ => {
                    return Err(Error::MoveRejected(format!(
                        "endpoint {w} is not a trivalent {color:?} vertex"
                    )))
                }
            }
        }
        let parallel = (0..self.edge_count())
            .filter(|&e| {
                let (a, b) = self.edge_endpoints(e);
                (a, b) == (u, v) || (a, b) == (v, u)
            })
            .count();
        if parallel > 1 {
            return Err(Error::MoveRejected("parallel edges at the flip".into()));
        }

        let hu = 2 * edge; // u -> v
        let hv = 2 * edge + 1; // v -> u
        // legs counterclockwise after the shared edge
        let x1 = self.rot_step(u, hu, true);
        let x2 = self.rot_step(u, x1, true);
        let y1 = self.rot_step(v, hv, true);
        let y2 = self.rot_step(v, y1, true);

        let mut out = self.clone();
        out.rotations[u] = vec![hu, y2, x1];
        out.rotations[v] = vec![hv, x2, y1];
        out.origins[y2] = u;
        out.origins[x2] = v;
        Ok(out)
    }

    /// Canonical encoding up to internal relabeling: a BFS over every
    /// boundary start, expanding rotations from the arrival half-edge.
    /// Equal encodings mean equal embedded graphs with the same boundary.
    pub fn canonical_encoding(&self) -> Vec<i64> {
        let mut order: HashMap<usize, i64> = HashMap::new(); // vertex -> discovery id
        let mut anchor: HashMap<usize, usize> = HashMap::new(); // vertex -> arrival half out of it
        let mut code = vec![self.n as i64];
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new(); // (vertex, arrival half into it)
        for (i, &b) in self.boundary.iter().enumerate() {
            order.insert(b, -((i + 1) as i64));
            anchor.insert(b, self.rotations[b][0]);
            queue.push_back((self.head(self.rotations[b][0]), self.rotations[b][0]));
        }
        let mut next_id = 0i64;
        while let Some((v, via)) = queue.pop_front() {
            if order.contains_key(&v) {
                continue;
            }
            order.insert(v, next_id);
            anchor.insert(v, twin(via));
            next_id += 1;
            // walk the rotation starting from the arrival edge
            let back = twin(via);
            let rot = &self.rotations[v];
            let pos = rot.iter().position(|&x| x == back).expect("arrival half");
            for step in 1..rot.len() {
                let h = rot[(pos + step) % rot.len()];
                let w = self.head(h);
                if !order.contains_key(&w) {
                    queue.push_back((w, h));
                }
            }
        }
        // emit, per vertex in discovery order, its color and the rotation
        // anchored at its arrival edge (rotations are only cyclic data)
        let mut by_id: Vec<(i64, usize)> = order.iter().map(|(&v, &id)| (id, v)).collect();
        by_id.sort();
        for (_, v) in by_id {
            match self.kinds[v] {
                VertexKind::Boundary(i) => code.push(-(i as i64) - 1000),
                VertexKind::Internal(Color::White) => code.push(1000),
                VertexKind::Internal(Color::Black) => code.push(2000),
            }
            let rot = &self.rotations[v];
            let pos = rot.iter().position(|&x| x == anchor[&v]).expect("anchor half");
            for step in 0..rot.len() {
                let h = rot[(pos + step) % rot.len()];
                code.push(order[&self.head(h)]);
            }
            code.push(i64::MIN + 1); // separator
        }
        code
    }
}

fn twin_aug(h: usize, real: usize) -> usize {
    if h < real {
        h ^ 1
    } else {
        real + ((h - real) ^ 1)
    }
}

struct Augmented {
    real: usize,
    face_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    orbit_count: usize,
    outer: usize,
}

/// The planar dual of a triangulated plabic tiling, with the tiling vertex
/// corresponding to each graph face.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub graph: PlabicGraph,
    /// Aligned with `graph.faces()`: the tiling vertex label of each face.
    pub face_vertices: Vec<Subset>,
}

/// Dual of a triangulated tiling: one internal vertex per triangle (colored
/// by the triangle), edges across shared triangle sides, and boundary spokes
/// `b_i` on the hull edge between the corner starting at `i` and the corner
/// starting at `i+1`.
pub fn dualize(t: &TriangulatedPlabicTiling) -> Result<DualGraph> {
    let base = t.base();
    let n = base.ground().n();
    let k = base.level();
    if k == 0 || k == n {
        return Err(Error::DegenerateLevel(k));
    }
    if n < 3 {
        return Err(Error::InvalidTiling("dual needs n ≥ 3".into()));
    }
    let pts: Vec<geometry::P2> = base.coords();

    // counterclockwise vertex triples per triangle
    let mut tri_ccw: Vec<[usize; 3]> = Vec::with_capacity(t.triangles().len());
    for tr in t.triangles() {
        let [a, b, c] = tr.verts;
        let ccw = if geometry::orient(pts[a], pts[b], pts[c]) > 0 {
            [a, b, c]
        } else {
            [a, c, b]
        };
        debug_assert!(geometry::orient(pts[ccw[0]], pts[ccw[1]], pts[ccw[2]]) > 0);
        tri_ccw.push(ccw);
    }

    // tiling edge -> incident triangles
    let mut side_owners: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ti, ccw) in tri_ccw.iter().enumerate() {
        for s in 0..3 {
            let (a, b) = (ccw[s], ccw[(s + 1) % 3]);
            side_owners
                .entry((a.min(b), a.max(b)))
                .or_default()
                .push(ti);
        }
    }

    let hull = base.hull_starts();
    let hull_sides: Vec<(usize, usize)> = (0..n as usize)
        .map(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % n as usize];
            (a.min(b), a.max(b))
        })
        .collect();
    let hull_side_set: HashSet<(usize, usize)> = hull_sides.iter().copied().collect();
    for (side, owners) in &side_owners {
        let expect = if hull_side_set.contains(side) { 1 } else { 2 };
        if owners.len() != expect {
            return Err(Error::InvalidTiling(format!(
                "tiling edge {:?}-{:?} bounds {} triangles, expected {expect}",
                base.vertices()[side.0].to_vec(),
                base.vertices()[side.1].to_vec(),
                owners.len()
            )));
        }
    }

    // graph vertices: triangles then boundary stubs
    let mut kinds: Vec<VertexKind> = t
        .triangles()
        .iter()
        .map(|tr| VertexKind::Internal(tr.color))
        .collect();
    let stub_base = kinds.len();
    for i in 1..=n {
        kinds.push(VertexKind::Boundary(i));
    }

    // edges: interior duals plus one spoke per hull side; remember the tiling
    // edge each graph edge crosses
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut crossed: Vec<(usize, usize)> = Vec::new();
    let mut edge_of_side: HashMap<(usize, usize), usize> = HashMap::new();
    for (side, owners) in &side_owners {
        let eid = edges.len();
        if owners.len() == 2 {
            edges.push((owners[0], owners[1]));
        } else {
            let i = hull_sides.iter().position(|s| s == side).unwrap();
            edges.push((owners[0], stub_base + i));
        }
        crossed.push(*side);
        edge_of_side.insert(*side, eid);
    }

    // rotations: at a triangle, its three sides in counterclockwise order
    let mut edge_rotations: Vec<Vec<usize>> = Vec::with_capacity(kinds.len());
    for ccw in &tri_ccw {
        let mut rot = Vec::with_capacity(3);
        for s in 0..3 {
            let (a, b) = (ccw[s], ccw[(s + 1) % 3]);
            rot.push(edge_of_side[&(a.min(b), a.max(b))]);
        }
        edge_rotations.push(rot);
    }
    for side in &hull_sides {
        edge_rotations.push(vec![edge_of_side[side]]);
    }

    let graph = PlabicGraph::from_parts(n, kinds, &edges, &edge_rotations)?;

    // identify each graph face with the unique tiling vertex shared by all
    // the tiling edges its boundary crosses
    let mut face_vertices = Vec::new();
    for cycle in graph.faces() {
        let sides: Vec<(usize, usize)> = cycle
            .iter()
            .filter(|&&h| h < graph.origins.len())
            .map(|&h| crossed[h / 2])
            .collect();
        if sides.len() < 2 {
            return Err(Error::InvalidTiling(
                "graph face with fewer than two dual edges".into(),
            ));
        }
        let mut cands = vec![sides[0].0, sides[0].1];
        for &(a, b) in &sides[1..] {
            cands.retain(|&x| x == a || x == b);
        }
        if cands.len() != 1 {
            return Err(Error::InvalidTiling(
                "dual face edges share no unique tiling vertex".into(),
            ));
        }
        face_vertices.push(base.vertices()[cands[0]]);
    }
    let mut sorted = face_vertices.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != face_vertices.len() || sorted.len() != base.vertices().len() {
        return Err(Error::InvalidTiling(
            "dual faces do not biject with tiling vertices".into(),
        ));
    }
    Ok(DualGraph {
        graph,
        face_vertices,
    })
}
