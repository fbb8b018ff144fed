//! Verify the counting inequalities behind the simplicial-volume
//! lower bounds on the product triangulations: exact t-profile, nice
//! and bad boundary edges, admissibility, and the full certificate.
//!
//! Run with: cargo run --example counting_certificate

use num_rational::Ratio;
use simpvol::bounds::{admissibility_check, counting_certificate, nice_bad_edges};
use simpvol::generators::product_surface_interval;

fn main() {
    for g in 2..=5 {
        let p = product_surface_interval(g).unwrap();
        let (nice, bad) = nice_bad_edges(&p).unwrap();
        let admissible = admissibility_check(&p).unwrap();
        let bnorm = Ratio::from_integer(8 * (g as i64) - 8);
        let cert = counting_certificate(&p, 1, bnorm, 2).unwrap();

        println!(
            "genus {g}: t = {:?}, nice/bad edges {nice}/{bad}, admissible {}",
            cert.t, admissible.pass
        );
        for i in &cert.inequalities {
            println!(
                "  [{}] {}   ({} >= {})",
                if i.pass { "pass" } else { "FAIL" },
                i.name,
                i.lhs,
                i.rhs
            );
        }
        assert!(cert.all_pass);
        // the triangulation is extremal: both bounds hold with equality
        assert_eq!(cert.t[0], 2 * g);
        assert_eq!(cert.t[1], 8 * g - 4);
    }
}
