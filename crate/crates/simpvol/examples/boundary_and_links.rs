//! Boundary extraction and vertex links. The cone over the boundary
//! of a 3-simplex is a ball-like pseudomanifold: its boundary is a
//! 2-sphere made of 4 triangles and every vertex link is a disk or
//! sphere, so it is a manifold.
//!
//! Run with: cargo run --example boundary_and_links

use simpvol::generators::cone_over_simplex_boundary;
use simpvol::surfaces::analyze_surface;

fn main() {
    let cone = cone_over_simplex_boundary(3).unwrap();
    println!(
        "cone: {} tetrahedra, {} gluings, chi {}, face counts {:?}",
        cone.simplex_count(),
        cone.gluings().len(),
        cone.euler_characteristic(),
        cone.face_classes().counts()
    );

    let data = cone.boundary_data().expect("nonempty boundary");
    let sphere = analyze_surface(&data.pseudomanifold).unwrap();
    println!(
        "boundary: {} triangles, chi {}",
        data.pseudomanifold.simplex_count(),
        sphere.total_chi()
    );
    // provenance: every boundary triangle is an unglued parent face
    for (k, &(i, j)) in data.faces.iter().enumerate() {
        println!("  triangle {k} realizes face {j} of tetrahedron {i}");
    }
    // boundary of a boundary is always empty
    assert!(data.pseudomanifold.is_closed());

    for link in cone.vertex_links().unwrap() {
        println!(
            "vertex link: chi {}, connected {}, on boundary {}, manifold point {}",
            link.euler,
            link.connected,
            link.on_boundary,
            link.is_manifold_point()
        );
    }
    assert!(cone.is_manifold().unwrap());
}
