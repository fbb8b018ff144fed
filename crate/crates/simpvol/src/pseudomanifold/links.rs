//! Vertex links of 3-dimensional pseudomanifolds.
//!
//! The link of a vertex class is the surface assembled from the
//! triangles opposite each corner realizing the class, with the
//! identifications induced by the gluings. The realization is a
//! manifold exactly when every interior vertex link is a connected
//! surface of Euler characteristic 2 and every boundary vertex link
//! one of characteristic 1.

use crate::{Error, Result};

use super::{Gluing, Pseudomanifold};

/// Summary of one vertex-class link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    /// Index of the vertex class in the face-class table.
    pub class: usize,
    /// Corners `(simplex, vertex label)` realizing the class.
    pub corners: Vec<(usize, usize)>,
    pub euler: i64,
    pub connected: bool,
    /// True when the link has boundary, i.e. the vertex lies on the
    /// boundary of the realization.
    pub on_boundary: bool,
}

impl VertexLink {
    /// Whether the realization looks like a manifold near this vertex.
    pub fn is_manifold_point(&self) -> bool {
        self.connected && self.euler == if self.on_boundary { 1 } else { 2 }
    }
}

fn face_label(skip: usize, u: usize) -> usize {
    if u < skip {
        u
    } else {
        u - 1
    }
}

impl Pseudomanifold {
    /// Links of every vertex class, in face-class order. Requires
    /// dimension 3.
    pub fn vertex_links(&self) -> Result<Vec<VertexLink>> {
        if self.dimension != 3 {
            return Err(Error::Precondition(format!(
                "vertex links require dimension 3, got {}",
                self.dimension
            )));
        }
        let classes = self.face_classes();
        let mut links = Vec::new();
        for class in 0..classes.count(0) {
            let corners: Vec<(usize, usize)> = classes
                .members(0, class)
                .iter()
                .map(|&(i, mask)| (i, mask.trailing_zeros() as usize))
                .collect();
            let corner_index = |c: (usize, usize)| corners.binary_search(&c).expect("corner in class");
            // the link triangle of corner (i, v) has labels {0,1,2},
            // label face_label(v, u) standing for tetrahedron vertex u
            let mut gluings = Vec::new();
            for g in &self.gluings {
                let (i, j) = g.a;
                let (i2, j2) = g.b;
                for v in 0..4 {
                    if v == j {
                        continue;
                    }
                    if !corners.contains(&(i, v)) {
                        continue;
                    }
                    let v2 = g.map[v];
                    let mut map = vec![0usize; 3];
                    for u in 0..4 {
                        if u == v {
                            continue;
                        }
                        map[face_label(v, u)] = face_label(v2, g.map[u]);
                    }
                    gluings.push(Gluing::new(
                        (corner_index((i, v)), face_label(v, j)),
                        (corner_index((i2, v2)), face_label(v2, j2)),
                        map,
                    ));
                }
            }
            let link = Pseudomanifold::new(2, corners.len(), gluings)?;
            links.push(VertexLink {
                class,
                euler: link.euler_characteristic(),
                connected: link.is_connected(),
                on_boundary: !link.boundary_faces().is_empty(),
                corners,
            });
        }
        Ok(links)
    }

    /// True when every vertex link certifies a manifold point. Only
    /// vertices can be singular in a 3-dimensional pseudomanifold.
    pub fn is_manifold(&self) -> Result<bool> {
        Ok(self.vertex_links()?.iter().all(VertexLink::is_manifold_point))
    }
}
