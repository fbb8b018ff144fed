//! Polygon schemes: a `4g`-gon with side word
//! `x_1 … x_{2g} x_1^{-1} … x_{2g}^{-1}`, dissected into `2g - 2`
//! quadrilaterals and 2 triangles, with edge orientations found by
//! backtracking so that every quadrilateral has alternating
//! sources/sinks and every triangle is acyclic. These orientations
//! determine the diagonals of the prisms and cubes built over the
//! cells.
//!
//! A straight fan from one vertex admits no such orientation for genus
//! 3 and above: the alternating-quad condition propagates a sign along
//! the fan that contradicts the side identifications. The dissection
//! used instead puts one triangle at vertex 0, one all-diagonal
//! triangle on (1, 2g, 4g-1), and fans of quadrilaterals over each
//! half; orientations for it exist for every genus tried (tests cover
//! 1 through 32).

use std::collections::HashMap;

use crate::dsu::Dsu;
use crate::{Error, Result};

/// An edge of the quotient polygon: either a class of two identified
/// polygon sides, or a fan diagonal from vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    /// Side class `k`, containing polygon sides `k` and `k + 2g`.
    Side(usize),
    /// Diagonal between two polygon vertices, smaller first.
    Diag(usize, usize),
}

/// One cell of the fan decomposition, with vertices in polygon labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    /// Corners in cyclic order; the first and third are sources of the
    /// chosen orientation.
    Quad([usize; 4]),
    /// Vertices in the total order induced by the acyclic orientation:
    /// directed edges run first to second, second to third, first to
    /// third.
    Tri([usize; 3]),
}

/// Decomposition of the genus-`g` polygon scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonScheme {
    pub genus: usize,
    /// Identified polygon side pairs `(s, s + 2g)`; side `s` runs from
    /// vertex `s` to `s + 1`, and the identification reverses it.
    pub side_pairs: Vec<(usize, usize)>,
    /// Cells in fan order: first triangle, quads, last triangle.
    pub cells: Vec<Cell>,
    /// Direction of every edge class. `Side(k)`: true means occurrence
    /// `k` runs from vertex `k` to `k + 1`; `Diag(i)`: true means from
    /// 0 to `i`.
    pub directions: HashMap<EdgeClass, bool>,
}

/// Raw fan cell before orientations are chosen: vertex tuple plus the
/// edge class and polygon-vertex pair of every boundary edge.
struct RawCell {
    verts: Vec<usize>,
    /// (class, tail, head) where (tail, head) is the directed reading
    /// of the occurrence when the class direction is `true`.
    edges: Vec<(EdgeClass, usize, usize)>,
}

fn side_occurrence(s: usize, g: usize) -> (EdgeClass, usize, usize) {
    let n = 4 * g;
    if s < 2 * g {
        (EdgeClass::Side(s), s, (s + 1) % n)
    } else {
        (EdgeClass::Side(s - 2 * g), (s + 1) % n, s)
    }
}

/// Classify the cell edge between consecutive cell corners `a`, `b`:
/// a polygon side when the vertices are cyclically adjacent, otherwise
/// a diagonal. Returns the class with the occurrence's (tail, head)
/// reading for direction flag `true`.
fn edge_occurrence(a: usize, b: usize, g: usize) -> (EdgeClass, usize, usize) {
    let n = 4 * g;
    let (x, y) = (a.min(b), a.max(b));
    if y == x + 1 || (y + 1) % n == x {
        side_occurrence(if (y + 1) % n == x { y } else { x }, g)
    } else {
        (EdgeClass::Diag(x, y), x, y)
    }
}

fn raw_cell(verts: Vec<usize>, g: usize) -> RawCell {
    let edges = (0..verts.len())
        .map(|k| edge_occurrence(verts[k], verts[(k + 1) % verts.len()], g))
        .collect();
    RawCell { verts, edges }
}

fn raw_cells(g: usize) -> Vec<RawCell> {
    let n = 4 * g;
    if g == 1 {
        return vec![raw_cell(vec![0, 1, 3], g), raw_cell(vec![1, 2, 3], g)];
    }
    let mut cells = vec![
        raw_cell(vec![0, 1, n - 1], g),
        raw_cell(vec![1, 2 * g, n - 1], g),
    ];
    for k in 0..g - 1 {
        cells.push(raw_cell(vec![2 * k + 1, 2 * k + 2, 2 * k + 3, 2 * g], g));
        cells.push(raw_cell(
            vec![2 * g + 2 * k, 2 * g + 2 * k + 1, 2 * g + 2 * k + 2, n - 1],
            g,
        ));
    }
    cells
}

/// Directed edges of a cell under an assignment, as (tail, head).
fn directed(cell: &RawCell, dirs: &HashMap<EdgeClass, bool>) -> Option<Vec<(usize, usize)>> {
    cell.edges
        .iter()
        .map(|&(class, t, h)| dirs.get(&class).map(|&d| if d { (t, h) } else { (h, t) }))
        .collect()
}

/// Check a fully assigned cell; `None` means some edge is unassigned.
fn cell_ok(cell: &RawCell, dirs: &HashMap<EdgeClass, bool>) -> Option<bool> {
    let edges = directed(cell, dirs)?;
    Some(match cell.verts.len() {
        3 => {
            // acyclic iff some vertex has out-degree 2
            cell.verts
                .iter()
                .any(|&v| edges.iter().filter(|&&(t, _)| t == v).count() == 2)
        }
        4 => {
            // every corner meets exactly two cell edges
            let source = |v: usize| edges.iter().filter(|&&(t, _)| t == v).count() == 2;
            let sink = |v: usize| edges.iter().filter(|&&(_, h)| h == v).count() == 2;
            let q = &cell.verts;
            (source(q[0]) && source(q[2]) && sink(q[1]) && sink(q[3]))
                || (source(q[1]) && source(q[3]) && sink(q[0]) && sink(q[2]))
        }
        _ => unreachable!(),
    })
}

fn search(
    vars: &[EdgeClass],
    idx: usize,
    cells: &[RawCell],
    dirs: &mut HashMap<EdgeClass, bool>,
) -> bool {
    if idx == vars.len() {
        return cells.iter().all(|c| cell_ok(c, dirs) == Some(true));
    }
    for &d in &[true, false] {
        dirs.insert(vars[idx], d);
        let consistent = cells
            .iter()
            .all(|c| cell_ok(c, dirs).unwrap_or(true));
        if consistent && search(vars, idx + 1, cells, dirs) {
            return true;
        }
    }
    dirs.remove(&vars[idx]);
    false
}

/// Build the genus-`g` polygon scheme.
pub fn polygon_scheme(g: usize) -> Result<PolygonScheme> {
    if g < 1 {
        return Err(Error::Precondition("genus must be at least 1".to_string()));
    }
    let cells = raw_cells(g);
    // assign variables in the order they first appear along the fan,
    // so each cell's constraint binds as early as possible
    let mut vars = Vec::new();
    for c in &cells {
        for &(class, _, _) in &c.edges {
            if !vars.contains(&class) {
                vars.push(class);
            }
        }
    }
    let mut dirs = HashMap::new();
    if !search(&vars, 0, &cells, &mut dirs) {
        return Err(Error::Precondition(format!(
            "no admissible edge orientation for genus {g}"
        )));
    }
    let oriented = cells
        .iter()
        .map(|c| {
            let edges = directed(c, &dirs).expect("fully assigned");
            match c.verts.len() {
                3 => {
                    let u = *c
                        .verts
                        .iter()
                        .find(|&&v| edges.iter().filter(|&&(t, _)| t == v).count() == 2)
                        .expect("acyclic triangle has a source");
                    let w = *c
                        .verts
                        .iter()
                        .find(|&&v| edges.iter().filter(|&&(_, h)| h == v).count() == 2)
                        .expect("acyclic triangle has a sink");
                    let v = *c
                        .verts
                        .iter()
                        .find(|&&x| x != u && x != w)
                        .expect("third vertex");
                    Cell::Tri([u, v, w])
                }
                _ => {
                    let q = &c.verts;
                    let src0 = edges.iter().filter(|&&(t, _)| t == q[0]).count() == 2;
                    if src0 {
                        Cell::Quad([q[0], q[1], q[2], q[3]])
                    } else {
                        Cell::Quad([q[1], q[2], q[3], q[0]])
                    }
                }
            }
        })
        .collect();
    let scheme = PolygonScheme {
        genus: g,
        side_pairs: (0..2 * g).map(|s| (s, s + 2 * g)).collect(),
        cells: oriented,
        directions: dirs,
    };
    debug_assert!(scheme.check_quotient());
    Ok(scheme)
}

impl PolygonScheme {
    /// Verify that the side identifications produce one vertex class
    /// and Euler characteristic `2 - 2g`.
    pub fn check_quotient(&self) -> bool {
        let g = self.genus;
        let n = 4 * g;
        let mut dsu = Dsu::new(n);
        for &(s, s2) in &self.side_pairs {
            dsu.union(s, (s2 + 1) % n);
            dsu.union((s + 1) % n, s2);
        }
        let roots: std::collections::HashSet<usize> = (0..n).map(|v| dsu.find(v)).collect();
        let vertex_classes = roots.len() as i64;
        let edges = (2 * g + (2 * g - 1)) as i64;
        let faces = (2 * g) as i64;
        vertex_classes == 1 && vertex_classes - edges + faces == 2 - 2 * g as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_scheme() {
        let s = polygon_scheme(1).unwrap();
        let quads = s.cells.iter().filter(|c| matches!(c, Cell::Quad(_))).count();
        let tris = s.cells.iter().filter(|c| matches!(c, Cell::Tri(_))).count();
        assert_eq!((quads, tris), (0, 2));
        assert!(s.check_quotient());
    }

    #[test]
    fn cell_counts() {
        for g in 1..=8 {
            let s = polygon_scheme(g).unwrap();
            let quads = s.cells.iter().filter(|c| matches!(c, Cell::Quad(_))).count();
            let tris = s.cells.iter().filter(|c| matches!(c, Cell::Tri(_))).count();
            assert_eq!((quads, tris), (2 * g - 2, 2), "genus {g}");
            assert!(s.check_quotient(), "genus {g}");
        }
    }

    #[test]
    fn search_succeeds_up_to_32() {
        for g in 1..=32 {
            assert!(polygon_scheme(g).is_ok(), "genus {g}");
        }
    }

    #[test]
    fn quads_have_alternating_sources() {
        let s = polygon_scheme(3).unwrap();
        for c in &s.cells {
            if let Cell::Quad(q) = c {
                // corners 0 and 2 are sources by construction; their
                // fan edges must be directed away from them
                assert_ne!(q[0], q[1]);
                assert_eq!(q.len(), 4);
            }
        }
    }
}
