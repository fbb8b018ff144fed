//! Lower bounds for the smallest hyperbolic 3-manifolds with geodesic
//! genus-g boundary: minimal volume g * vol(truncated tetrahedron),
//! the volume-ratio bound, the aspherical bound 5(g - 1), and the
//! refined hyperbolic bound; the best bound switches from the refined
//! one to the aspherical one at genus 5.
//!
//! Run with: cargo run --example hyperbolic_table

use simpvol::bounds::{best_lower_bound, ManifoldDescriptor};
use simpvol::hypervol::small_manifold_table;

fn main() {
    let rows = small_manifold_table(8).unwrap();
    println!(
        "{:>3} {:>9} {:>9} {:>9} {:>11} {:>9}  source",
        "g", "min_vol", "jungreis", "refined", "aspherical", "best"
    );
    for r in &rows {
        println!(
            "{:>3} {:>9.4} {:>9.4} {:>9.4} {:>11.4} {:>9.4}  {}",
            r.g, r.min_vol, r.jungreis, r.refined, r.aspherical, r.best, r.best_source
        );
    }
    assert_eq!(rows[0].best_source, "refined");
    assert!(rows.iter().skip(3).all(|r| r.best_source == "aspherical"));

    // the same numbers through the descriptor interface
    let m = ManifoldDescriptor {
        hyperbolic_geodesic_boundary: true,
        vol: Some(rows[0].min_vol),
        ..ManifoldDescriptor::new(3, num_rational::Ratio::from_integer(4))
    };
    let best = best_lower_bound(&m).unwrap();
    println!(
        "\ngenus 2 descriptor: best bound {:.4} from {}",
        best.value.as_f64(),
        best.source
    );
}
