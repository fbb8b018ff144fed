//! Boundary extraction by ridge walking.
//!
//! The boundary of an `n`-dimensional pseudomanifold has one
//! `(n-1)`-simplex per unglued face. Two codimension-one faces of
//! boundary simplices are identified when rotating around their common
//! ridge through the glued interior faces connects them; the
//! identification is the composite of the traversed gluing maps.

use crate::{Error, Result};

use super::{Gluing, Pseudomanifold};

/// A boundary pseudomanifold together with provenance data tying it
/// back to the parent.
#[derive(Debug, Clone)]
pub struct BoundaryData {
    /// The boundary, one dimension down, with no unglued faces.
    pub pseudomanifold: Pseudomanifold,
    /// `faces[k]` is the parent face slot realized by boundary simplex `k`.
    pub faces: Vec<(usize, usize)>,
    /// Provenance for each boundary gluing, in the same order as the
    /// gluing list of `pseudomanifold`.
    pub pairings: Vec<RidgePairing>,
}

/// How one boundary gluing was produced by walking around a ridge of
/// the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RidgePairing {
    /// Parent face slots of the two boundary simplices being glued.
    pub triangle_a: (usize, usize),
    pub triangle_b: (usize, usize),
    /// The other parent face containing the ridge on each side: the
    /// face through which the walk leaves `triangle_a`'s simplex, and
    /// the face through which it enters `triangle_b`'s.
    pub flank_a: (usize, usize),
    pub flank_b: (usize, usize),
    /// Number of parent gluings traversed.
    pub steps: usize,
}

/// Relabeling of the vertices of face `j` (all labels except `j`) to
/// `{0, …, n-1}`, preserving order.
fn face_label(j: usize, u: usize) -> usize {
    if u < j {
        u
    } else {
        u - 1
    }
}

impl Pseudomanifold {
    /// The boundary pseudomanifold with provenance. Requires dimension
    /// at least 2; the result has dimension one lower and no unglued
    /// faces.
    pub fn boundary_data(&self) -> Result<BoundaryData> {
        let n = self.dimension;
        if n < 2 {
            return Err(Error::Precondition(
                "boundary requires dimension at least 2".to_string(),
            ));
        }
        let faces = self.boundary_faces();
        if faces.is_empty() {
            return Err(Error::Precondition(
                "pseudomanifold has empty boundary".to_string(),
            ));
        }
        let face_index = |slot: (usize, usize)| faces.binary_search(&slot).ok();
        let glued = self.gluing_of_face();
        let max_steps = 2 * self.simplex_count * (n + 1) + 2;

        let mut out_gluings = Vec::new();
        let mut pairings = Vec::new();
        for (bi, &(i, j)) in faces.iter().enumerate() {
            for w in 0..=n {
                if w == j {
                    continue;
                }
                // walk around the ridge spanned by all labels except j, w;
                // state: simplex s, entered through face f, exit through face g
                let (mut s, mut f, mut g) = (i, j, w);
                // composite map from labels of simplex i to labels of s
                let mut phi: Vec<usize> = (0..=n).collect();
                let mut steps = 0usize;
                let flank_a = (i, w);
                loop {
                    if let Some(&(gi, forward)) = glued.get(&(s, g)) {
                        let gl: &Gluing = &self.gluings[gi];
                        let mu: Vec<usize> = if forward {
                            gl.map.clone()
                        } else {
                            let mut inv = vec![0; n + 1];
                            for (x, &y) in gl.map.iter().enumerate() {
                                inv[y] = x;
                            }
                            inv
                        };
                        let target = if forward { gl.b.0 } else { gl.a.0 };
                        let (nf, ng) = (mu[g], mu[f]);
                        s = target;
                        f = nf;
                        g = ng;
                        for v in phi.iter_mut() {
                            *v = mu[*v];
                        }
                        steps += 1;
                        if steps > max_steps {
                            return Err(Error::Precondition(format!(
                                "ridge walk from face ({i}, {j}) around vertex {w} did not terminate; gluing data corrupt"
                            )));
                        }
                    } else {
                        break;
                    }
                }
                // terminal boundary face is (s, g); the ridge there is
                // spanned by all labels except f, g
                let bj = face_index((s, g)).ok_or_else(|| {
                    Error::Precondition(format!(
                        "ridge walk from face ({i}, {j}) ended at glued face ({s}, {g}); gluing data corrupt"
                    ))
                })?;
                let a_slot = (bi, face_label(j, w));
                let b_slot = (bj, face_label(g, f));
                // each pairing is discovered twice; keep the pass
                // where the current side is the smaller slot
                if a_slot > b_slot {
                    continue;
                }
                if a_slot == b_slot {
                    return Err(Error::Precondition(format!(
                        "ridge at face ({i}, {j}) opposite vertex {w} pairs with itself; gluing data corrupt"
                    )));
                }
                // boundary gluing map on labels {0, …, n-1}
                let mut map = vec![0usize; n];
                for u in 0..=n {
                    if u == j {
                        continue;
                    }
                    let image = if u == w { f } else { phi[u] };
                    map[face_label(j, u)] = face_label(g, image);
                }
                out_gluings.push(Gluing::new(a_slot, b_slot, map));
                pairings.push(RidgePairing {
                    triangle_a: (i, j),
                    triangle_b: (s, g),
                    flank_a,
                    flank_b: (s, f),
                    steps,
                });
            }
        }
        // keep pairings aligned with the canonical gluing order
        let mut order: Vec<usize> = (0..out_gluings.len()).collect();
        order.sort_by_key(|&k| (out_gluings[k].a, out_gluings[k].b));
        let out_gluings: Vec<Gluing> = order.iter().map(|&k| out_gluings[k].clone()).collect();
        let pairings: Vec<RidgePairing> = order.iter().map(|&k| pairings[k].clone()).collect();
        let pseudomanifold = Pseudomanifold::new(n - 1, faces.len(), out_gluings)?;
        Ok(BoundaryData {
            pseudomanifold,
            faces,
            pairings,
        })
    }

    /// The boundary pseudomanifold. Errors if the boundary is empty or
    /// the dimension is below 2.
    pub fn boundary(&self) -> Result<Pseudomanifold> {
        Ok(self.boundary_data()?.pseudomanifold)
    }

    /// True when no face is unglued.
    pub fn is_closed(&self) -> bool {
        self.boundary_faces().is_empty()
    }
}
