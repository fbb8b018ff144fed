//! Build handlebodies from the one-tetrahedron solid torus by
//! attaching one-handles: genus g in 3g - 2 tetrahedra, with a single
//! genus-g boundary surface and Euler characteristic 1 - g.
//!
//! Run with: cargo run --example handlebodies

use simpvol::generators::{handlebody, solid_torus};
use simpvol::surfaces::analyze_surface;

fn main() {
    let torus = solid_torus();
    println!(
        "solid torus: {} tetrahedron, {} gluing, H_1 rank {}",
        torus.simplex_count(),
        torus.gluings().len(),
        torus.homology(1).betti
    );

    for g in 1..=6 {
        let p = handlebody(g).expect("valid genus");
        assert_eq!(p.simplex_count(), 3 * g - 2);
        assert_eq!(p.euler_characteristic(), 1 - g as i64);
        assert!(p.is_manifold().expect("dimension 3"));

        let summary = analyze_surface(&p.boundary().expect("has boundary")).unwrap();
        assert_eq!(summary.components.len(), 1);
        println!(
            "handlebody genus {g}: {} tetrahedra, boundary genus {}, chi {}",
            p.simplex_count(),
            summary.components[0].genus,
            p.euler_characteristic()
        );
    }
}
