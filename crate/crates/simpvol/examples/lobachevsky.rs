//! The Lobachevsky function and the tetrahedron volumes built from
//! it: the regular ideal volume 3L(pi/3), Catalan's constant as
//! 2L(pi/4), volumes from dihedral angles and from ideal vertices on
//! the boundary sphere.
//!
//! Run with: cargo run --example lobachevsky

use std::f64::consts::PI;

use simpvol::hypervol::{
    catalan, ideal_tetrahedron_volume, ideal_volume_from_vertices, lobachevsky, IdealPoint,
};

fn main() {
    let v3 = 3.0 * lobachevsky(PI / 3.0);
    let g = catalan();
    println!("L(pi/3)       = {:.12}", lobachevsky(PI / 3.0));
    println!("v3 = 3L(pi/3) = {v3:.12}");
    println!("G (series)    = {g:.12}");
    println!("2L(pi/4)      = {:.12}", 2.0 * lobachevsky(PI / 4.0));
    assert!((2.0 * lobachevsky(PI / 4.0) - g).abs() < 1e-12);

    // identities: odd, pi-periodic, duplication
    let t = 0.7;
    assert!((lobachevsky(-t) + lobachevsky(t)).abs() < 1e-14);
    assert!((lobachevsky(t + PI) - lobachevsky(t)).abs() < 1e-14);
    let dup = 2.0 * lobachevsky(t) + 2.0 * lobachevsky(t + PI / 2.0);
    assert!((lobachevsky(2.0 * t) - dup).abs() < 1e-12);

    // volume from dihedral angles; the regular simplex is maximal
    let regular = ideal_tetrahedron_volume(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
    let skewed = ideal_tetrahedron_volume(PI / 2.0, PI / 3.0, PI / 6.0).unwrap();
    println!("vol(pi/3, pi/3, pi/3) = {regular:.12}");
    println!("vol(pi/2, pi/3, pi/6) = {skewed:.12}");
    assert!(skewed < regular);

    // volume from ideal vertices: 0, 1, infinity and a fourth point
    let cases = [
        ("regular", IdealPoint::finite(0.5, 3.0_f64.sqrt() / 2.0)),
        ("right-angled", IdealPoint::finite(0.0, 1.0)),
    ];
    for (label, fourth) in cases {
        let v = ideal_volume_from_vertices([
            IdealPoint::finite(0.0, 0.0),
            IdealPoint::finite(1.0, 0.0),
            IdealPoint::Infinity,
            fourth,
        ])
        .unwrap();
        println!("vol from vertices ({label}) = {v:.12}");
    }
}
