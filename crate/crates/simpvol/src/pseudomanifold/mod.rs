//! Core representation of face-glued simplex complexes.
//!
//! A pseudomanifold of dimension `n` is a finite list of copies of the
//! standard `n`-simplex together with pairings of `(n-1)`-dimensional
//! faces, each face occurring in at most one pairing, and an affine
//! vertex identification for every pairing. Faces not occurring in any
//! pairing are boundary faces.

mod boundary;
mod homology;
mod json;
mod links;

pub use boundary::{BoundaryData, RidgePairing};
pub use homology::HomologyGroup;
pub use links::VertexLink;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::Dsu;
use crate::{Error, Result};

/// One face pairing. Face `j` of a simplex is the face opposite vertex
/// `j`, i.e. the face spanned by all vertex labels except `j`.
///
/// `map` is a permutation of the full label set `{0, …, n}` with
/// `map[a.1] == b.1`; restricted to the vertices of face `a.1` it is the
/// affine identification of the two faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gluing {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub map: Vec<usize>,
}

impl Gluing {
    pub fn new(a: (usize, usize), b: (usize, usize), map: Vec<usize>) -> Self {
        Gluing { a, b, map }
    }

    /// Swap the two sides so that `a < b` lexicographically, inverting
    /// the vertex map accordingly.
    pub fn canonicalize(&mut self) {
        if self.b < self.a {
            let mut inv = vec![0; self.map.len()];
            for (x, &y) in self.map.iter().enumerate() {
                if y < inv.len() {
                    inv[y] = x;
                }
            }
            std::mem::swap(&mut self.a, &mut self.b);
            self.map = inv;
        }
    }

    fn is_permutation(&self, n: usize) -> bool {
        if self.map.len() != n + 1 {
            return false;
        }
        let mut seen = vec![false; n + 1];
        for &v in &self.map {
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

/// A structural defect found by [`Pseudomanifold::validate_raw`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    DimensionTooSmall,
    NoSimplices,
    SimplexOutOfRange { gluing: usize, simplex: usize },
    FaceOutOfRange { gluing: usize, face: usize },
    SelfGluing { gluing: usize },
    FaceInTwoPairs { simplex: usize, face: usize },
    MapNotPermutation { gluing: usize },
    MapFaceMismatch { gluing: usize },
    NonCanonicalPair { gluing: usize },
    UnsortedGluings,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DimensionTooSmall => write!(f, "dimension must be at least 1"),
            Diagnostic::NoSimplices => write!(f, "simplex count must be at least 1"),
            Diagnostic::SimplexOutOfRange { gluing, simplex } => {
                write!(f, "gluing {gluing}: simplex index {simplex} out of range")
            }
            Diagnostic::FaceOutOfRange { gluing, face } => {
                write!(f, "gluing {gluing}: face index {face} out of range")
            }
            Diagnostic::SelfGluing { gluing } => {
                write!(f, "gluing {gluing}: face glued to itself")
            }
            Diagnostic::FaceInTwoPairs { simplex, face } => {
                write!(f, "face ({simplex}, {face}) in two pairs")
            }
            Diagnostic::MapNotPermutation { gluing } => {
                write!(f, "gluing {gluing}: map is not a permutation of the vertex labels")
            }
            Diagnostic::MapFaceMismatch { gluing } => {
                write!(f, "gluing {gluing}: map does not send the glued face to its partner")
            }
            Diagnostic::NonCanonicalPair { gluing } => {
                write!(f, "gluing {gluing}: sides not in canonical (a < b) order")
            }
            Diagnostic::UnsortedGluings => write!(f, "gluing list not sorted"),
        }
    }
}

/// A finite set of `n`-simplices with affine face pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudomanifold {
    dimension: usize,
    simplex_count: usize,
    gluings: Vec<Gluing>,
}

/// Table of equivalence classes of `d`-dimensional faces in the
/// realization, for every `d` up to the dimension. Faces are named by
/// `(simplex index, vertex-label bitmask)`.
#[derive(Debug, Clone)]
pub struct FaceClassTable {
    dimension: usize,
    classes: Vec<Vec<Vec<(usize, u32)>>>,
    index: HashMap<(usize, u32), usize>,
}

impl FaceClassTable {
    /// Number of `d`-classes.
    pub fn count(&self, d: usize) -> usize {
        self.classes[d].len()
    }

    /// All class counts `f_0, …, f_n`.
    pub fn counts(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Members of a class, as `(simplex, vertex bitmask)` pairs in
    /// lexicographic order. The first member is the class representative.
    pub fn members(&self, d: usize, class: usize) -> &[(usize, u32)] {
        &self.classes[d][class]
    }

    /// Class index (within its dimension) of a face given by simplex and
    /// sorted vertex labels.
    pub fn class_of(&self, simplex: usize, vertices: &[usize]) -> Option<usize> {
        let mask = vertices.iter().fold(0u32, |m, &v| m | (1 << v));
        self.class_of_mask(simplex, mask)
    }

    pub fn class_of_mask(&self, simplex: usize, mask: u32) -> Option<usize> {
        self.index.get(&(simplex, mask)).copied()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// Dual graph summary: one vertex per simplex, one edge per gluing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub euler: i64,
    pub components: usize,
}

/// Result of the orientability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientability {
    /// Signs per simplex making every gluing orientation-reversing.
    Orientable(Vec<i8>),
    /// Indices of gluings forming a cycle along which no consistent
    /// sign assignment exists.
    Nonorientable { witness: Vec<usize> },
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable(_))
    }
}

/// Counts `t_i` of simplices having exactly `i` boundary faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryProfile {
    pub t: Vec<usize>,
}

impl BoundaryProfile {
    /// Number of boundary faces, `Σ i·t_i`.
    pub fn boundary_face_count(&self) -> usize {
        self.t.iter().enumerate().map(|(i, &t)| i * t).sum()
    }
}

pub(crate) fn perm_sign(map: &[usize]) -> i8 {
    let mut seen = vec![false; map.len()];
    let mut sign = 1i8;
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = map[cur];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl Pseudomanifold {
    /// Build a pseudomanifold, canonicalizing the gluing order, and
    /// reject structurally invalid input.
    pub fn new(dimension: usize, simplex_count: usize, mut gluings: Vec<Gluing>) -> Result<Self> {
        for g in &mut gluings {
            g.canonicalize();
        }
        gluings.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
        let diags = Self::validate_raw(dimension, simplex_count, &gluings);
        if diags.is_empty() {
            Ok(Pseudomanifold {
                dimension,
                simplex_count,
                gluings,
            })
        } else {
            Err(Error::Invalid(diags))
        }
    }

    /// Check every structural invariant of raw input without fixing
    /// anything; returns one diagnostic per violation (empty = valid).
    pub fn validate_raw(dimension: usize, simplex_count: usize, gluings: &[Gluing]) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        if dimension < 1 {
            diags.push(Diagnostic::DimensionTooSmall);
        }
        if simplex_count < 1 {
            diags.push(Diagnostic::NoSimplices);
        }
        if dimension < 1 {
            return diags;
        }
        let mut used: HashMap<(usize, usize), usize> = HashMap::new();
        for (idx, g) in gluings.iter().enumerate() {
            for &(s, f) in &[g.a, g.b] {
                if s >= simplex_count {
                    diags.push(Diagnostic::SimplexOutOfRange {
                        gluing: idx,
                        simplex: s,
                    });
                }
                if f > dimension {
                    diags.push(Diagnostic::FaceOutOfRange { gluing: idx, face: f });
                }
            }
            if g.a == g.b {
                diags.push(Diagnostic::SelfGluing { gluing: idx });
            } else if g.b < g.a {
                diags.push(Diagnostic::NonCanonicalPair { gluing: idx });
            }
            if !g.is_permutation(dimension) {
                diags.push(Diagnostic::MapNotPermutation { gluing: idx });
            } else if g.a.1 <= dimension && g.map[g.a.1] != g.b.1 {
                diags.push(Diagnostic::MapFaceMismatch { gluing: idx });
            }
            for &(s, f) in &[g.a, g.b] {
                if s < simplex_count && f <= dimension {
                    if used.insert((s, f), idx).is_some() {
                        diags.push(Diagnostic::FaceInTwoPairs { simplex: s, face: f });
                    }
                }
            }
        }
        for w in gluings.windows(2) {
            if (w[1].a, w[1].b) < (w[0].a, w[0].b) {
                diags.push(Diagnostic::UnsortedGluings);
                break;
            }
        }
        diags
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn simplex_count(&self) -> usize {
        self.simplex_count
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Which gluing, if any, involves the given face slot. Returns the
    /// gluing index and `true` if the slot is side `a`.
    pub(crate) fn gluing_of_face(&self) -> HashMap<(usize, usize), (usize, bool)> {
        let mut map = HashMap::new();
        for (idx, g) in self.gluings.iter().enumerate() {
            map.insert(g.a, (idx, true));
            map.insert(g.b, (idx, false));
        }
        map
    }

    /// Boundary face slots `(simplex, face)` in lexicographic order.
    pub fn boundary_faces(&self) -> Vec<(usize, usize)> {
        let glued = self.gluing_of_face();
        let mut out = Vec::new();
        for i in 0..self.simplex_count {
            for j in 0..=self.dimension {
                if !glued.contains_key(&(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Equivalence classes of faces of every dimension, the transitive
    /// closure of the gluing-induced identifications.
    pub fn face_classes(&self) -> FaceClassTable {
        let n = self.dimension;
        let full: u32 = (1u32 << (n + 1)) - 1;
        let stride = 1usize << (n + 1);
        let mut dsu = Dsu::new(self.simplex_count * stride);
        for g in &self.gluings {
            let face_mask = full & !(1 << g.a.1);
            // every nonempty subset of the glued face
            let mut sub = face_mask;
            loop {
                let mut mapped = 0u32;
                let mut bits = sub;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    mapped |= 1 << g.map[v];
                    bits &= bits - 1;
                }
                dsu.union(g.a.0 * stride + sub as usize, g.b.0 * stride + mapped as usize);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & face_mask;
            }
        }
        let mut by_root: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
        for i in 0..self.simplex_count {
            for mask in 1..=full {
                let root = dsu.find(i * stride + mask as usize);
                by_root.entry(root).or_default().push((i, mask));
            }
        }
        let mut classes: Vec<Vec<Vec<(usize, u32)>>> = vec![Vec::new(); n + 1];
        let mut roots: Vec<(usize, Vec<(usize, u32)>)> = by_root.into_iter().collect();
        // deterministic order: by smallest member
        roots.sort_by_key(|(_, members)| members[0]);
        let mut index = HashMap::new();
        for (_, mut members) in roots {
            members.sort();
            let d = members[0].1.count_ones() as usize - 1;
            let class_idx = classes[d].len();
            for &(i, m) in &members {
                index.insert((i, m), class_idx);
            }
            classes[d].push(members);
        }
        FaceClassTable {
            dimension: n,
            classes,
            index,
        }
    }

    /// Euler characteristic of the realization, `Σ_d (−1)^d f_d`.
    pub fn euler_characteristic(&self) -> i64 {
        let counts = self.face_classes().counts();
        counts
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Counts of simplices by number of boundary faces.
    pub fn boundary_profile(&self) -> BoundaryProfile {
        let glued = self.gluing_of_face();
        let mut per_simplex = vec![0usize; self.simplex_count];
        for i in 0..self.simplex_count {
            for j in 0..=self.dimension {
                if !glued.contains_key(&(i, j)) {
                    per_simplex[i] += 1;
                }
            }
        }
        let mut t = vec![0usize; self.dimension + 2];
        for &c in &per_simplex {
            t[c] += 1;
        }
        BoundaryProfile { t }
    }

    /// Dual graph: simplices as vertices, gluings as edges.
    pub fn dual_graph(&self) -> DualGraph {
        let mut dsu = Dsu::new(self.simplex_count);
        for g in &self.gluings {
            dsu.union(g.a.0, g.b.0);
        }
        let mut roots: Vec<usize> = (0..self.simplex_count).map(|i| dsu.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        DualGraph {
            vertex_count: self.simplex_count,
            edge_count: self.gluings.len(),
            euler: self.simplex_count as i64 - self.gluings.len() as i64,
            components: roots.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.dual_graph().components == 1
    }

    /// Split into connected pieces (dual-graph connectivity). Simplex
    /// indices are re-packed preserving relative order.
    pub fn connected_components(&self) -> Vec<Pseudomanifold> {
        let mut dsu = Dsu::new(self.simplex_count);
        for g in &self.gluings {
            dsu.union(g.a.0, g.b.0);
        }
        let mut root_order: Vec<usize> = Vec::new();
        let mut comp_of = vec![0usize; self.simplex_count];
        for i in 0..self.simplex_count {
            let r = dsu.find(i);
            let c = match root_order.iter().position(|&x| x == r) {
                Some(c) => c,
                None => {
                    root_order.push(r);
                    root_order.len() - 1
                }
            };
            comp_of[i] = c;
        }
        let mut new_index = vec![0usize; self.simplex_count];
        let mut sizes = vec![0usize; root_order.len()];
        for i in 0..self.simplex_count {
            new_index[i] = sizes[comp_of[i]];
            sizes[comp_of[i]] += 1;
        }
        let mut gluings_per: Vec<Vec<Gluing>> = vec![Vec::new(); root_order.len()];
        for g in &self.gluings {
            let c = comp_of[g.a.0];
            gluings_per[c].push(Gluing::new(
                (new_index[g.a.0], g.a.1),
                (new_index[g.b.0], g.b.1),
                g.map.clone(),
            ));
        }
        sizes
            .into_iter()
            .zip(gluings_per)
            .map(|(k, gl)| {
                Pseudomanifold::new(self.dimension, k, gl).expect("component of valid input")
            })
            .collect()
    }

    /// The relative sign a gluing imposes between the orientations of
    /// its two simplices: the gluing is orientation-reversing for signs
    /// `ε_a, ε_b` iff `ε_a · ε_b` equals this value.
    fn gluing_relative_sign(g: &Gluing) -> i8 {
        -perm_sign(&g.map)
    }

    /// Decide orientability: find simplex signs making every gluing
    /// orientation-reversing, or exhibit a cycle of gluings obstructing
    /// any assignment.
    pub fn orientability(&self) -> Orientability {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.simplex_count];
        for (idx, g) in self.gluings.iter().enumerate() {
            adj[g.a.0].push((g.b.0, idx));
            adj[g.b.0].push((g.a.0, idx));
        }
        let mut sign = vec![0i8; self.simplex_count];
        // parent gluing index used to reach each simplex in the BFS forest
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.simplex_count];
        for start in 0..self.simplex_count {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(v, gi) in &adj[u] {
                    let rel = Self::gluing_relative_sign(&self.gluings[gi]);
                    if sign[v] == 0 {
                        sign[v] = sign[u] * rel;
                        parent[v] = Some((u, gi));
                        queue.push_back(v);
                    } else if sign[v] != sign[u] * rel {
                        // cycle: tree path u -> root, v -> root, plus gi
                        let mut witness = vec![gi];
                        let mut path_u = Vec::new();
                        let mut cur = u;
                        while let Some((p, e)) = parent[cur] {
                            path_u.push(e);
                            cur = p;
                        }
                        let mut path_v = Vec::new();
                        let mut cur = v;
                        while let Some((p, e)) = parent[cur] {
                            path_v.push(e);
                            cur = p;
                        }
                        // drop the common tail of the two root paths
                        while let (Some(&x), Some(&y)) = (path_u.last(), path_v.last()) {
                            if x == y {
                                path_u.pop();
                                path_v.pop();
                            } else {
                                break;
                            }
                        }
                        witness.extend(path_u);
                        witness.extend(path_v);
                        witness.sort_unstable();
                        return Orientability::Nonorientable { witness };
                    }
                }
            }
        }
        Orientability::Orientable(sign)
    }

    /// Remove a simplex that has exactly one glued face; the neighbour
    /// face it was glued to becomes a boundary face.
    pub fn elide_pendant_simplex(&self, simplex: usize) -> Result<Pseudomanifold> {
        if simplex >= self.simplex_count {
            return Err(Error::Precondition(format!(
                "simplex index {simplex} out of range"
            )));
        }
        let incident: Vec<usize> = self
            .gluings
            .iter()
            .enumerate()
            .filter(|(_, g)| g.a.0 == simplex || g.b.0 == simplex)
            .map(|(i, _)| i)
            .collect();
        if incident.len() != 1 {
            return Err(Error::Precondition(format!(
                "simplex {simplex} has {} glued faces, expected exactly 1",
                incident.len()
            )));
        }
        if self.simplex_count == 1 {
            return Err(Error::Precondition(
                "cannot elide the only simplex".to_string(),
            ));
        }
        let removed = incident[0];
        let reindex = |i: usize| if i > simplex { i - 1 } else { i };
        let gluings = self
            .gluings
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != removed)
            .map(|(_, g)| {
                Gluing::new(
                    (reindex(g.a.0), g.a.1),
                    (reindex(g.b.0), g.b.1),
                    g.map.clone(),
                )
            })
            .collect();
        Pseudomanifold::new(self.dimension, self.simplex_count - 1, gluings)
    }
}
