//! Classification of closed 2-dimensional realizations: per-component
//! Euler characteristic, orientability and genus, plus the exact
//! simplicial-volume and minimal-triangulation-size formulas for
//! surfaces.

use num_rational::Ratio;

use crate::pseudomanifold::Pseudomanifold;
use crate::{Error, Result};

/// One connected closed surface component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub chi: i64,
    pub orientable: bool,
    /// Genus: `(2 - chi) / 2` when orientable, the nonorientable genus
    /// `2 - chi` otherwise.
    pub genus: i64,
    pub triangle_count: usize,
}

/// Per-component classification of a closed 2-dimensional realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceSummary {
    pub fn total_chi(&self) -> i64 {
        self.components.iter().map(|c| c.chi).sum()
    }
}

/// Classify a valid 2-dimensional pseudomanifold without boundary.
pub fn analyze_surface(p: &Pseudomanifold) -> Result<SurfaceSummary> {
    if p.dimension() != 2 {
        return Err(Error::Precondition(format!(
            "surface analysis requires dimension 2, got {}",
            p.dimension()
        )));
    }
    if !p.boundary_faces().is_empty() {
        return Err(Error::Precondition(
            "surface analysis requires empty boundary".to_string(),
        ));
    }
    let mut components = Vec::new();
    for c in p.connected_components() {
        let chi = c.euler_characteristic();
        let orientable = c.orientability().is_orientable();
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };
        components.push(SurfaceComponent {
            chi,
            orientable,
            genus,
            triangle_count: c.simplex_count(),
        });
    }
    Ok(SurfaceSummary { components })
}

/// Simplicial volume of a closed surface: `max(0, -2 chi)` summed over
/// components. The same formula covers nonorientable components, whose
/// volume is half that of the orientable double cover.
pub fn surface_simplicial_volume(s: &SurfaceSummary) -> Ratio<i64> {
    s.components
        .iter()
        .map(|c| Ratio::from_integer(0.max(-2 * c.chi)))
        .sum()
}

/// Minimal number of triangles in a loose triangulation of the closed
/// orientable surface of the given genus: `4g - 2` for positive genus,
/// 2 for the sphere.
pub fn surface_delta_complexity(genus: i64, orientable: bool) -> Result<i64> {
    if !orientable {
        return Err(Error::Precondition(
            "delta-complexity formula only covers orientable surfaces".to_string(),
        ));
    }
    if genus < 0 {
        return Err(Error::Precondition("genus must be nonnegative".to_string()));
    }
    Ok(if genus == 0 { 2 } else { 4 * genus - 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudomanifold::Gluing;

    #[test]
    fn boundary_of_tetrahedron_is_sphere() {
        let p = Pseudomanifold::new(3, 1, Vec::new()).unwrap();
        let s = analyze_surface(&p.boundary().unwrap()).unwrap();
        assert_eq!(s.components.len(), 1);
        let c = &s.components[0];
        assert_eq!((c.chi, c.orientable, c.genus), (2, true, 0));
        assert_eq!(surface_simplicial_volume(&s), Ratio::from_integer(0));
    }

    #[test]
    fn rejects_surface_with_boundary() {
        let p = Pseudomanifold::new(2, 1, Vec::new()).unwrap();
        assert!(analyze_surface(&p).is_err());
    }

    #[test]
    fn rejects_wrong_dimension() {
        let p = Pseudomanifold::new(3, 1, Vec::new()).unwrap();
        assert!(analyze_surface(&p).is_err());
    }

    #[test]
    fn volume_additive_over_components() {
        // two disjoint boundary spheres of free tetrahedra
        let p = Pseudomanifold::new(3, 2, Vec::new()).unwrap();
        let s = analyze_surface(&p.boundary().unwrap()).unwrap();
        assert_eq!(s.components.len(), 2);
        assert_eq!(surface_simplicial_volume(&s), Ratio::from_integer(0));
    }

    #[test]
    fn genus_two_volume() {
        let s = SurfaceSummary {
            components: vec![SurfaceComponent {
                chi: -2,
                orientable: true,
                genus: 2,
                triangle_count: 6,
            }],
        };
        assert_eq!(surface_simplicial_volume(&s), Ratio::from_integer(4));
    }

    #[test]
    fn delta_complexity_values() {
        assert_eq!(surface_delta_complexity(0, true).unwrap(), 2);
        assert_eq!(surface_delta_complexity(1, true).unwrap(), 2);
        assert_eq!(surface_delta_complexity(3, true).unwrap(), 10);
        assert!(surface_delta_complexity(1, false).is_err());
    }

    #[test]
    fn sphere_from_two_triangles() {
        // two triangles glued along all three edges by identity maps
        let gluings = (0..3)
            .map(|j| {
                let mut map = vec![0usize; 3];
                for v in 0..3 {
                    map[v] = v;
                }
                Gluing::new((0, j), (1, j), map)
            })
            .collect();
        let p = Pseudomanifold::new(2, 2, gluings).unwrap();
        let s = analyze_surface(&p).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].chi, 2);
        assert!(s.components[0].orientable);
        assert_eq!(s.components[0].genus, 0);
    }
}
