//! Build the minimal triangulations of (genus-g surface) x [0, 1] and
//! verify their invariants: 10g - 4 tetrahedra, an orientable manifold
//! with Euler characteristic 2 - 2g, and two genus-g boundary surfaces
//! with 4g - 2 triangles each.
//!
//! Run with: cargo run --example generate_product

use simpvol::generators::product_surface_interval;
use simpvol::surfaces::analyze_surface;

fn main() {
    for g in 1..=5 {
        let p = product_surface_interval(g).expect("valid genus");
        assert_eq!(p.simplex_count(), 10 * g - 4);
        assert_eq!(p.euler_characteristic(), 2 - 2 * g as i64);
        assert!(p.orientability().is_orientable());
        assert!(p.is_manifold().expect("dimension 3"));

        let boundary = p.boundary().expect("nonempty boundary");
        let summary = analyze_surface(&boundary).expect("closed surface");
        println!(
            "genus {g}: {} tetrahedra, chi {}, boundary components:",
            p.simplex_count(),
            p.euler_characteristic()
        );
        for c in &summary.components {
            println!(
                "  genus {} surface, chi {}, {} triangles, orientable {}",
                c.genus, c.chi, c.triangle_count, c.orientable
            );
        }
    }
}
