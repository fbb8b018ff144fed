//! Triangulation of (genus-g surface) x [0, 1] in `10g - 4` tetrahedra.
//!
//! Each quadrilateral of the polygon scheme becomes a cube cut into 5
//! tetrahedra (four corners plus a central one on the four alternating
//! vertices), each triangle a prism cut into 3 (staircase along the
//! total vertex order). Over a surface edge directed x -> y, the
//! vertical square face carries the diagonal (x,0)-(y,1); neighbouring
//! cells then match triangle by triangle, both across shared fan
//! diagonals and across identified polygon sides.

use std::collections::HashMap;

use crate::pseudomanifold::{Gluing, Pseudomanifold};
use crate::Result;

use super::polygon::{polygon_scheme, Cell, EdgeClass};

/// One vertical boundary-square slot of a cell: the two triangles the
/// diagonal cuts it into, with the tetrahedron-local positions of the
/// shared vertices. For the edge directed t -> h, the lower triangle
/// has vertices (t,0), (h,0), (h,1) and the upper (t,0), (t,1), (h,1).
struct SideSlot {
    /// (tetrahedron offset, face index, positions of the three shared
    /// vertices in the order above)
    lower: (usize, usize, [usize; 3]),
    upper: (usize, usize, [usize; 3]),
}

/// Internal gluings of one cell, as (face slot, face slot, map).
type CellGluing = ((usize, usize), (usize, usize), [usize; 4]);

fn quad_internal() -> Vec<CellGluing> {
    vec![
        ((0, 0), (4, 0), [0, 1, 2, 3]),
        ((0, 1), (3, 0), [1, 0, 2, 3]),
        ((0, 2), (2, 0), [1, 2, 0, 3]),
        ((0, 3), (1, 0), [1, 2, 3, 0]),
    ]
}

fn tri_internal() -> Vec<CellGluing> {
    vec![
        ((0, 2), (1, 2), [0, 1, 2, 3]),
        ((1, 1), (2, 1), [0, 1, 2, 3]),
    ]
}

/// Directed boundary edges of a cell with their side slots.
fn cell_sides(cell: &Cell) -> Vec<((usize, usize), SideSlot)> {
    match cell {
        Cell::Quad([a, b, c, d]) => vec![
            (
                (*a, *b),
                SideSlot {
                    lower: (1, 2, [1, 0, 3]),
                    upper: (3, 3, [1, 0, 2]),
                },
            ),
            (
                (*c, *b),
                SideSlot {
                    lower: (1, 1, [2, 0, 3]),
                    upper: (4, 3, [1, 0, 2]),
                },
            ),
            (
                (*c, *d),
                SideSlot {
                    lower: (2, 1, [2, 0, 3]),
                    upper: (4, 2, [1, 0, 3]),
                },
            ),
            (
                (*a, *d),
                SideSlot {
                    lower: (2, 2, [1, 0, 3]),
                    upper: (3, 2, [1, 0, 3]),
                },
            ),
        ],
        Cell::Tri([u, v, w]) => vec![
            (
                (*u, *v),
                SideSlot {
                    lower: (1, 3, [0, 1, 2]),
                    upper: (2, 3, [0, 1, 2]),
                },
            ),
            (
                (*v, *w),
                SideSlot {
                    lower: (0, 0, [1, 2, 3]),
                    upper: (1, 0, [1, 2, 3]),
                },
            ),
            (
                (*u, *w),
                SideSlot {
                    lower: (0, 1, [0, 2, 3]),
                    upper: (2, 2, [0, 1, 3]),
                },
            ),
        ],
    }
}

fn glue_triangles(
    a: (usize, usize, [usize; 3]),
    b: (usize, usize, [usize; 3]),
    base_a: usize,
    base_b: usize,
) -> Gluing {
    let mut map = [usize::MAX; 4];
    for k in 0..3 {
        map[a.2[k]] = b.2[k];
    }
    map[a.1] = b.1;
    Gluing::new((base_a + a.0, a.1), (base_b + b.0, b.1), map.to_vec())
}

/// The `10g - 4`-tetrahedron triangulation of the product of the
/// closed orientable genus-`g` surface with an interval.
pub fn product_surface_interval(g: usize) -> Result<Pseudomanifold> {
    let scheme = polygon_scheme(g)?;
    let n = 4 * g;
    let mut bases = Vec::new();
    let mut next = 0usize;
    let mut gluings = Vec::new();
    for cell in &scheme.cells {
        bases.push(next);
        let (internal, count) = match cell {
            Cell::Quad(_) => (quad_internal(), 5),
            Cell::Tri(_) => (tri_internal(), 3),
        };
        for (fa, fb, map) in internal {
            gluings.push(Gluing::new(
                (next + fa.0, fa.1),
                (next + fb.0, fb.1),
                map.to_vec(),
            ));
        }
        next += count;
    }

    // collect the two occurrences of every edge class
    let mut occurrences: HashMap<EdgeClass, Vec<(usize, SideSlot)>> = HashMap::new();
    for (ci, cell) in scheme.cells.iter().enumerate() {
        for ((t, h), slot) in cell_sides(cell) {
            let class = classify_edge(t, h, g, n);
            occurrences.entry(class).or_default().push((ci, slot));
        }
    }
    for (class, occ) in &occurrences {
        assert_eq!(occ.len(), 2, "edge class {class:?} must occur twice");
        let (ca, sa) = &occ[0];
        let (cb, sb) = &occ[1];
        gluings.push(glue_triangles(sa.lower, sb.lower, bases[*ca], bases[*cb]));
        gluings.push(glue_triangles(sa.upper, sb.upper, bases[*ca], bases[*cb]));
    }
    Pseudomanifold::new(3, next, gluings)
}

/// Identify which quotient edge the directed cell edge (t, h) lies on:
/// a side class when the vertices are cyclically adjacent, otherwise a
/// dissection diagonal.
fn classify_edge(t: usize, h: usize, g: usize, n: usize) -> EdgeClass {
    let (x, y) = (t.min(h), t.max(h));
    if (y + 1) % n == x || y == x + 1 {
        let s = if (y + 1) % n == x { y } else { x };
        EdgeClass::Side(if s < 2 * g { s } else { s - 2 * g })
    } else {
        EdgeClass::Diag(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::analyze_surface;

    #[test]
    fn product_invariants() {
        for g in 1..=4usize {
            let p = product_surface_interval(g).unwrap();
            let gi = g as i64;
            assert_eq!(p.simplex_count(), 10 * g - 4, "genus {g}");
            assert_eq!(p.euler_characteristic(), 2 - 2 * gi, "genus {g}");
            assert!(p.orientability().is_orientable(), "genus {g}");
            assert!(p.is_manifold().unwrap(), "genus {g}");
            let mut t = p.boundary_profile().t;
            t.resize(5, 0);
            assert_eq!(t, vec![2 * g, 8 * g - 4, 0, 0, 0], "genus {g}");
            let s = analyze_surface(&p.boundary().unwrap()).unwrap();
            assert_eq!(s.components.len(), 2, "genus {g}");
            for c in &s.components {
                assert!(c.orientable, "genus {g}");
                assert_eq!(c.genus, gi, "genus {g}");
                assert_eq!(c.triangle_count, 4 * g - 2, "genus {g}");
            }
            let h1 = p.homology(1);
            assert_eq!((h1.betti, h1.torsion.len()), (2 * g, 0), "genus {g}");
        }
        assert!(product_surface_interval(0).is_err());
    }
}
