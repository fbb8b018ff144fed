//! Explicit triangulation generators: cones over simplex boundaries,
//! the one-tetrahedron solid torus, handlebodies built by 1-handle
//! additions, and the minimal product triangulation of a closed
//! surface times an interval.

mod polygon;
mod product;

pub use polygon::{polygon_scheme, Cell, EdgeClass, PolygonScheme};
pub use product::product_surface_interval;

use crate::pseudomanifold::{Gluing, Pseudomanifold};
use crate::{Error, Result};

/// Cone over the boundary of the `n`-simplex: `n + 1` simplices
/// `[b, e_0, …, ê_i, …, e_n]`, every pair glued along their shared cone
/// facet. Each simplex keeps exactly one boundary face, and the
/// realization is a ball-like cone with Euler characteristic 1.
pub fn cone_over_simplex_boundary(n: usize) -> Result<Pseudomanifold> {
    if n < 2 {
        return Err(Error::Precondition(
            "cone requires dimension at least 2".to_string(),
        ));
    }
    // in simplex i, position 0 is the barycenter b and positions
    // 1..=n are e_j for j != i in increasing order
    let pos = |i: usize, j: usize| 1 + if j < i { j } else { j - 1 };
    let mut gluings = Vec::new();
    for i in 0..n {
        for j in (i + 1)..=n {
            // simplices i and j share b and every e_k with k not in {i, j}
            let mut map = vec![usize::MAX; n + 1];
            map[0] = 0;
            for k in 0..=n {
                if k == i || k == j {
                    continue;
                }
                map[pos(i, k)] = pos(j, k);
            }
            map[pos(i, j)] = pos(j, i);
            gluings.push(Gluing::new((i, pos(i, j)), (j, pos(j, i)), map));
        }
    }
    Pseudomanifold::new(n, n + 1, gluings)
}

/// The one-tetrahedron solid torus: a single self-gluing of two faces.
/// The gluing was found by exhaustive search over all 36 candidate
/// self-gluings of one tetrahedron; it is the unique combinatorial
/// type (up to relabeling) that is an orientable manifold with torus
/// boundary and first homology of rank one.
pub fn solid_torus() -> Pseudomanifold {
    Pseudomanifold::new(3, 1, vec![Gluing::new((0, 0), (0, 1), vec![1, 2, 3, 0])])
        .expect("frozen gluing is valid")
}

/// Attach a 1-handle: append a 3-tetrahedron prism over a triangle and
/// glue its bottom and top triangles to the two given boundary faces.
/// The vertex map of the top attachment is flipped by an odd
/// permutation when needed to preserve orientability.
pub fn add_one_handle(
    p: &Pseudomanifold,
    face_a: (usize, usize),
    face_b: (usize, usize),
) -> Result<Pseudomanifold> {
    if p.dimension() != 3 {
        return Err(Error::Precondition(
            "handle addition requires dimension 3".to_string(),
        ));
    }
    if face_a == face_b {
        return Err(Error::Precondition(
            "handle must attach to two distinct faces".to_string(),
        ));
    }
    let boundary = p.boundary_faces();
    for f in [face_a, face_b] {
        if !boundary.contains(&f) {
            return Err(Error::Precondition(format!(
                "face ({}, {}) is not a boundary face",
                f.0, f.1
            )));
        }
    }
    let was_orientable = p.orientability().is_orientable();
    for flip in [false, true] {
        let q = attach_prism(p, face_a, face_b, flip)?;
        if !was_orientable || q.orientability().is_orientable() {
            return Ok(q);
        }
    }
    Err(Error::Precondition(
        "no orientation-compatible attachment found".to_string(),
    ))
}

/// Prism tetrahedra over a triangle (u, v, w): `[u0, v0, w0, w1]`,
/// `[u0, v0, v1, w1]`, `[u0, u1, v1, w1]`. Bottom triangle is face 3 of
/// the first, top is face 0 of the last.
fn attach_prism(
    p: &Pseudomanifold,
    face_a: (usize, usize),
    face_b: (usize, usize),
    flip: bool,
) -> Result<Pseudomanifold> {
    let k = p.simplex_count();
    let mut gluings = p.gluings().to_vec();
    gluings.push(Gluing::new(
        (k, 2),
        (k + 1, 2),
        vec![0, 1, 2, 3],
    ));
    gluings.push(Gluing::new(
        (k + 1, 1),
        (k + 2, 1),
        vec![0, 1, 2, 3],
    ));
    // bottom: vertices of face_a in increasing order onto u0, v0, w0
    let mut map = vec![usize::MAX; 4];
    let others: Vec<usize> = (0..4).filter(|&v| v != face_a.1).collect();
    for (slot, &v) in others.iter().enumerate() {
        map[v] = slot;
    }
    map[face_a.1] = 3;
    gluings.push(Gluing::new(face_a, (k, 3), map));
    // top: vertices of face_b onto u1, v1, w1 at positions 1, 2, 3,
    // optionally swapping two images to fix the attachment parity
    let mut map = vec![usize::MAX; 4];
    let others: Vec<usize> = (0..4).filter(|&v| v != face_b.1).collect();
    for (slot, &v) in others.iter().enumerate() {
        map[v] = slot + 1;
    }
    if flip {
        map.swap(others[0], others[1]);
    }
    map[face_b.1] = 0;
    gluings.push(Gluing::new(face_b, (k + 2, 0), map));
    Pseudomanifold::new(3, k + 3, gluings)
}

/// Genus-`g` handlebody in `3g - 2` tetrahedra: the solid torus with
/// `g - 1` handles attached to its first two free boundary faces.
pub fn handlebody(g: usize) -> Result<Pseudomanifold> {
    if g < 1 {
        return Err(Error::Precondition("genus must be at least 1".to_string()));
    }
    let mut p = solid_torus();
    for _ in 1..g {
        let faces = p.boundary_faces();
        p = add_one_handle(&p, faces[0], faces[1])?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::analyze_surface;

    #[test]
    fn cone_face_counts() {
        let p = cone_over_simplex_boundary(3).unwrap();
        assert_eq!(p.simplex_count(), 4);
        assert_eq!(p.face_classes().counts(), vec![5, 10, 10, 4]);
        assert_eq!(p.euler_characteristic(), 1);
        let profile = p.boundary_profile();
        assert_eq!(profile.t, vec![0, 4, 0, 0, 0]);
        assert_eq!(p.dual_graph().euler, -2);
        assert!(p.is_manifold().unwrap());
        assert!(cone_over_simplex_boundary(1).is_err());
    }

    #[test]
    fn cone_in_higher_dimension() {
        // n + 1 simplices, every pair glued once, chi of a ball
        let p = cone_over_simplex_boundary(4).unwrap();
        assert_eq!(p.simplex_count(), 5);
        assert_eq!(p.gluings().len(), 10);
        assert_eq!(p.euler_characteristic(), 1);
        assert_eq!(p.boundary_faces().len(), 5);
    }

    #[test]
    fn solid_torus_invariants() {
        let p = solid_torus();
        assert_eq!(p.simplex_count(), 1);
        assert_eq!(p.euler_characteristic(), 0);
        assert!(p.orientability().is_orientable());
        assert!(p.is_manifold().unwrap());
        let h1 = p.homology(1);
        assert_eq!((h1.betti, h1.torsion.len()), (1, 0));
        let s = analyze_surface(&p.boundary().unwrap()).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!((s.components[0].chi, s.components[0].genus), (0, 1));
    }

    #[test]
    fn handle_addition_invariants() {
        let p = solid_torus();
        let faces = p.boundary_faces();
        let q = add_one_handle(&p, faces[0], faces[1]).unwrap();
        // three more tetrahedra, chi drops by one, boundary grows by
        // four triangles (two consumed, six added)
        assert_eq!(q.simplex_count(), p.simplex_count() + 3);
        assert_eq!(q.euler_characteristic(), p.euler_characteristic() - 1);
        assert_eq!(q.boundary_faces().len(), p.boundary_faces().len() + 4);
        assert!(q.orientability().is_orientable());
        assert!(q.is_manifold().unwrap());
    }

    #[test]
    fn handle_addition_rejects_bad_faces() {
        let p = solid_torus();
        let faces = p.boundary_faces();
        assert!(add_one_handle(&p, faces[0], faces[0]).is_err());
        assert!(add_one_handle(&p, faces[0], (0, 0)).is_err());
    }

    #[test]
    fn handlebody_sizes() {
        for g in 1..=6usize {
            let p = handlebody(g).unwrap();
            assert_eq!(p.simplex_count(), 3 * g - 2, "genus {g}");
            assert_eq!(p.euler_characteristic(), 1 - g as i64, "genus {g}");
            assert!(p.orientability().is_orientable(), "genus {g}");
            assert!(p.is_manifold().unwrap(), "genus {g}");
            let s = analyze_surface(&p.boundary().unwrap()).unwrap();
            assert_eq!(s.components.len(), 1, "genus {g}");
            assert_eq!(s.components[0].genus, g as i64, "genus {g}");
        }
        assert!(handlebody(0).is_err());
    }
}
