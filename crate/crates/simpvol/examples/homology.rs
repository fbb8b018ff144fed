//! Integral homology of glued-simplex complexes, computed on the
//! barycentric subdivision with Smith normal form. Enumerates all
//! closed surfaces made of two triangles, finds the torus and the
//! projective plane among them, and shows the Z/2 torsion of the
//! latter; then a 3-dimensional product manifold.
//!
//! Run with: cargo run --example homology

use simpvol::generators::product_surface_interval;
use simpvol::{Gluing, Pseudomanifold};

fn show(name: &str, p: &Pseudomanifold) {
    let groups = p.homology_all();
    print!("{name}:");
    for (d, h) in groups.iter().enumerate() {
        let torsion: Vec<String> = h.torsion.iter().map(|t| format!("Z/{t}")).collect();
        if torsion.is_empty() {
            print!("  H_{d} = Z^{}", h.betti);
        } else {
            print!("  H_{d} = Z^{} + {}", h.betti, torsion.join(" + "));
        }
    }
    println!();
}

/// All closed surfaces built from two triangles: pick a perfect
/// matching of the six edge slots and a vertex map for each pair.
fn two_triangle_surfaces() -> Vec<Pseudomanifold> {
    let slots: Vec<(usize, usize)> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    let maps = |a: usize, b: usize| {
        // permutations of {0,1,2} sending vertex a to vertex b
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        perms.into_iter().filter(move |m| m[a] == b)
    };
    let mut out = Vec::new();
    // match slot 0 with one of the other five, then the remaining four
    for k in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != k).collect();
        for partner in 1..4 {
            let (other_a, other_b) = match partner {
                1 => (rest[2], rest[3]),
                2 => (rest[1], rest[3]),
                _ => (rest[1], rest[2]),
            };
            let pairs = [(0, k), (rest[0], rest[partner]), (other_a, other_b)];
            for m0 in maps(slots[pairs[0].0].1, slots[pairs[0].1].1) {
                for m1 in maps(slots[pairs[1].0].1, slots[pairs[1].1].1) {
                    for m2 in maps(slots[pairs[2].0].1, slots[pairs[2].1].1) {
                        let gluings = vec![
                            Gluing::new(slots[pairs[0].0], slots[pairs[0].1], m0.to_vec()),
                            Gluing::new(slots[pairs[1].0], slots[pairs[1].1], m1.to_vec()),
                            Gluing::new(slots[pairs[2].0], slots[pairs[2].1], m2.to_vec()),
                        ];
                        if let Ok(p) = Pseudomanifold::new(2, 2, gluings) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn main() {
    let surfaces = two_triangle_surfaces();

    let torus = surfaces
        .iter()
        .find(|p| {
            p.is_connected() && p.euler_characteristic() == 0 && p.orientability().is_orientable()
        })
        .expect("a two-triangle torus exists");
    show("torus            ", torus);
    assert_eq!(torus.homology(1).betti, 2);

    let rp2 = surfaces
        .iter()
        .find(|p| {
            p.is_connected() && p.euler_characteristic() == 1 && !p.orientability().is_orientable()
        })
        .expect("a two-triangle projective plane exists");
    show("projective plane ", rp2);
    assert_eq!(rp2.homology(1).torsion.len(), 1);

    let product = product_surface_interval(2).unwrap();
    show("genus-2 surface x interval", &product);
    assert_eq!(product.homology(1).betti, 4);
}
