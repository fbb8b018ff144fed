//! Lower bounds and exact values for relative simplicial volume, plus
//! the combinatorial counting certificates that justify them on
//! concrete triangulations.
//!
//! Formula bounds are exact rationals; only the hyperbolic bounds go
//! through floating point.

use std::collections::HashSet;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::hypervol;
use crate::pseudomanifold::Pseudomanifold;
use crate::{Error, Result};

type Q = Ratio<i64>;

fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

fn qu(n: usize) -> Q {
    Ratio::from_integer(n as i64)
}

fn ser_ratio<S: Serializer>(r: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// A bound value: exact rational or floating-point approximation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "repr", content = "value")]
pub enum BoundValue {
    #[serde(rename = "exact", serialize_with = "ser_ratio")]
    Exact(Q),
    #[serde(rename = "approx")]
    Approx(f64),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BoundValue::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<Q> {
        match self {
            BoundValue::Exact(r) => Some(*r),
            BoundValue::Approx(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    LowerBound,
    Exact,
}

/// A single bound or exact value, with the hypotheses under which it
/// applies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub value: BoundValue,
    pub kind: BoundKind,
    pub source: String,
    pub hypotheses: Vec<String>,
}

impl BoundReport {
    fn lower(value: Q, source: &str, hypotheses: &[&str]) -> Self {
        BoundReport {
            value: BoundValue::Exact(value),
            kind: BoundKind::LowerBound,
            source: source.to_string(),
            hypotheses: hypotheses.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn exact(value: Q, source: &str, hypotheses: &[&str]) -> Self {
        BoundReport {
            value: BoundValue::Exact(value),
            kind: BoundKind::Exact,
            source: source.to_string(),
            hypotheses: hypotheses.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// What is known about the manifold a bound is requested for.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldDescriptor {
    pub dimension: usize,
    pub boundary_norm: Q,
    pub aspherical: bool,
    pub boundary_irreducible: bool,
    pub hyperbolic_geodesic_boundary: bool,
    pub vol: Option<f64>,
    pub boundary_vol: Option<f64>,
}

impl ManifoldDescriptor {
    pub fn new(dimension: usize, boundary_norm: Q) -> Self {
        ManifoldDescriptor {
            dimension,
            boundary_norm,
            aspherical: false,
            boundary_irreducible: false,
            hyperbolic_geodesic_boundary: false,
            vol: None,
            boundary_vol: None,
        }
    }
}

fn check_bnorm(bnorm: Q) -> Result<()> {
    if bnorm < q(0) {
        return Err(Error::Precondition(
            "boundary norm must be nonnegative".to_string(),
        ));
    }
    Ok(())
}

/// Generic bound ‖M, ∂M‖ ≥ ‖∂M‖ / (n + 1), valid for every compact
/// n-manifold with boundary, n ≥ 1.
pub fn boundary_bound_generic(n: usize, bnorm: Q) -> Result<BoundReport> {
    if n < 1 {
        return Err(Error::Precondition("dimension must be at least 1".to_string()));
    }
    check_bnorm(bnorm)?;
    Ok(BoundReport::lower(
        bnorm / qu(n + 1),
        "generic boundary bound",
        &["compact manifold with boundary"],
    ))
}

/// Improved bound ‖M, ∂M‖ ≥ ‖∂M‖ / (n − 1) for n ≥ 2.
pub fn boundary_bound_improved(n: usize, bnorm: Q) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".to_string()));
    }
    check_bnorm(bnorm)?;
    Ok(BoundReport::lower(
        bnorm / qu(n - 1),
        "improved boundary bound",
        &["compact manifold with boundary, dimension at least 2"],
    ))
}

/// Three-manifold bound ‖M, ∂M‖ ≥ (3/4)‖∂M‖.
pub fn bound_3manifold(bnorm: Q) -> Result<BoundReport> {
    check_bnorm(bnorm)?;
    Ok(BoundReport::lower(
        bnorm * Ratio::new(3, 4),
        "three-manifold boundary bound",
        &["compact orientable 3-manifold"],
    ))
}

/// Aspherical bound: (5/4)‖∂M‖ in dimension 3, ‖∂M‖ in any dimension
/// n ≥ 2. Requires the caller to assert asphericity and boundary
/// irreducibility.
pub fn bound_aspherical(bnorm: Q, dimension: usize) -> Result<BoundReport> {
    if dimension < 2 {
        return Err(Error::Precondition("dimension must be at least 2".to_string()));
    }
    check_bnorm(bnorm)?;
    let factor = if dimension == 3 {
        Ratio::new(5, 4)
    } else {
        q(1)
    };
    Ok(BoundReport::lower(
        bnorm * factor,
        "aspherical bound",
        &["aspherical", "boundary irreducible"],
    ))
}

/// Exact stable complexity of the genus-g handlebody: 0 for g ≤ 1,
/// 3(g − 1) otherwise.
pub fn value_handlebody(g: usize) -> BoundReport {
    let v = if g <= 1 { q(0) } else { qu(3 * (g - 1)) };
    BoundReport::exact(v, "handlebody value", &["genus-g handlebody"])
}

/// Exact relative simplicial volume of a Seifert manifold with h
/// one-handles attached: 3h, with boundary norm 4h.
pub fn value_seifert_plus_handles(h: usize) -> BoundReport {
    BoundReport::exact(
        qu(3 * h),
        "seifert plus handles value",
        &["Seifert fibered interior", "h one-handles", "boundary norm 4h"],
    )
}

/// Exact values for the product of the closed orientable genus-g
/// surface with an interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductSurfaceValues {
    /// Relative simplicial volume (0 for the torus case g = 1).
    #[serde(serialize_with = "ser_ratio")]
    pub simplicial_volume: Q,
    /// Minimal number of tetrahedra in a triangulation.
    pub delta_complexity: i64,
    /// Stable complexity.
    #[serde(serialize_with = "ser_ratio")]
    pub stable_delta_complexity: Q,
}

pub fn value_product_surface(g: usize) -> Result<ProductSurfaceValues> {
    if g < 1 {
        return Err(Error::Precondition("genus must be at least 1".to_string()));
    }
    let gi = g as i64;
    let (vol, stable) = if g == 1 {
        (q(0), q(0))
    } else {
        (q(10 * (gi - 1)), q(10 * (gi - 1)))
    };
    Ok(ProductSurfaceValues {
        simplicial_volume: vol,
        delta_complexity: 10 * (gi - 1) + 6,
        stable_delta_complexity: stable,
    })
}

/// Undo the face relabeling: vertex `x` of face `j` (of a 3-simplex)
/// corresponds to parent label `x` when `x < j`, else `x + 1`.
fn parent_label(j: usize, x: usize) -> usize {
    if x < j {
        x
    } else {
        x + 1
    }
}

/// Per boundary edge class of ∂P: the parent edge class of P it maps
/// to. Empty when P is closed.
fn boundary_edge_parents(p: &Pseudomanifold) -> Result<Vec<usize>> {
    if p.dimension() != 3 {
        return Err(Error::Precondition(
            "boundary edge analysis requires dimension 3".to_string(),
        ));
    }
    if p.boundary_faces().is_empty() {
        return Ok(Vec::new());
    }
    let bd = p.boundary_data()?;
    let fc = p.face_classes();
    let bfc = bd.pseudomanifold.face_classes();
    let mut parents = Vec::new();
    for class in 0..bfc.count(1) {
        let &(bk, mask) = bfc
            .members(1, class)
            .first()
            .expect("face class is nonempty");
        let (i, j) = bd.faces[bk];
        let verts: Vec<usize> = (0..3)
            .filter(|x| mask & (1 << x) != 0)
            .map(|x| parent_label(j, x))
            .collect();
        parents.push(
            fc.class_of(i, &verts)
                .expect("boundary edge exists in parent"),
        );
    }
    Ok(parents)
}

/// Parent edge classes touched by simplices with no boundary face.
fn omega0_edge_classes(p: &Pseudomanifold) -> HashSet<usize> {
    let fc = p.face_classes();
    let mut boundary_count = vec![0usize; p.simplex_count()];
    for (s, _) in p.boundary_faces() {
        boundary_count[s] += 1;
    }
    let mut set = HashSet::new();
    for s in 0..p.simplex_count() {
        if boundary_count[s] != 0 {
            continue;
        }
        for u in 0..4 {
            for v in (u + 1)..4 {
                set.insert(fc.class_of(s, &[u, v]).expect("edge class exists"));
            }
        }
    }
    set
}

/// Count nice and bad boundary edges of a 3-dimensional pseudomanifold.
/// A boundary edge is nice when its edge class contains an edge of a
/// simplex with no boundary face.
pub fn nice_bad_edges(p: &Pseudomanifold) -> Result<(usize, usize)> {
    let parents = boundary_edge_parents(p)?;
    let nice_set = omega0_edge_classes(p);
    let nice = parents.iter().filter(|c| nice_set.contains(c)).count();
    Ok((nice, parents.len() - nice))
}

/// Result of the direct-gluing test for one bad boundary edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadEdgeCheck {
    /// Edge class index in the boundary pseudomanifold.
    pub edge_class: usize,
    /// Number of boundary gluings around this edge that were tested.
    pub pairings: usize,
    /// True when, for every pairing, the two parent faces flanking the
    /// edge are directly glued to each other.
    pub pass: bool,
}

/// For every bad boundary edge, test whether the two parent faces
/// adjacent across it are glued directly to each other. This is a
/// diagnostic: the property is guaranteed only under extra hypotheses
/// on how the triangulation arose.
pub fn check_bad_edge_lemma(p: &Pseudomanifold) -> Result<Vec<BadEdgeCheck>> {
    let parents = boundary_edge_parents(p)?;
    if parents.is_empty() {
        return Ok(Vec::new());
    }
    let nice_set = omega0_edge_classes(p);
    let bd = p.boundary_data()?;
    let bfc = bd.pseudomanifold.face_classes();
    let glued = p.gluing_of_face();
    let mut checks: Vec<BadEdgeCheck> = (0..parents.len())
        .filter(|&c| !nice_set.contains(&parents[c]))
        .map(|c| BadEdgeCheck {
            edge_class: c,
            pairings: 0,
            pass: true,
        })
        .collect();
    let pos: std::collections::HashMap<usize, usize> = checks
        .iter()
        .enumerate()
        .map(|(i, c)| (c.edge_class, i))
        .collect();
    for (gl, pairing) in bd.pseudomanifold.gluings().iter().zip(&bd.pairings) {
        // the glued ridge of boundary triangle a, as an edge class of the boundary
        let (bk, e) = gl.a;
        let mask = 0b111 & !(1u32 << e);
        let class = bfc
            .class_of_mask(bk, mask)
            .expect("glued ridge has an edge class");
        let Some(&idx) = pos.get(&class) else {
            continue; // nice edge
        };
        let direct = match glued.get(&pairing.flank_a) {
            Some(&(gi, forward)) => {
                let g = &p.gluings()[gi];
                let partner = if forward { g.b } else { g.a };
                partner == pairing.flank_b
            }
            None => false,
        };
        checks[idx].pairings += 1;
        checks[idx].pass &= direct;
    }
    Ok(checks)
}

/// Outcome of the admissibility test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub pass: bool,
    /// Human-readable reasons for failure.
    pub witnesses: Vec<String>,
}

/// Admissibility of a 3-dimensional triangulation for the counting
/// arguments: every simplex has at most one boundary face, simplices
/// with no boundary face have at most two boundary edges, and every
/// simplex has at most three boundary edges.
pub fn admissibility_check(p: &Pseudomanifold) -> Result<AdmissibilityReport> {
    if p.dimension() != 3 {
        return Err(Error::Precondition(
            "admissibility check requires dimension 3".to_string(),
        ));
    }
    let mut witnesses = Vec::new();
    let mut boundary_count = vec![0usize; p.simplex_count()];
    for (s, _) in p.boundary_faces() {
        boundary_count[s] += 1;
    }
    for (s, &c) in boundary_count.iter().enumerate() {
        if c >= 2 {
            witnesses.push(format!("simplex {s} has {c} boundary faces"));
        }
    }
    // a parent edge class lies on the boundary when one of its edges
    // is an edge of an unglued face
    let fc = p.face_classes();
    let mut boundary_edges = HashSet::new();
    for (s, j) in p.boundary_faces() {
        let labels: Vec<usize> = (0..4).filter(|&v| v != j).collect();
        for a in 0..3 {
            for b in (a + 1)..3 {
                boundary_edges
                    .insert(fc.class_of(s, &[labels[a], labels[b]]).expect("edge class"));
            }
        }
    }
    for s in 0..p.simplex_count() {
        let mut classes = HashSet::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                let c = fc.class_of(s, &[u, v]).expect("edge class");
                if boundary_edges.contains(&c) {
                    classes.insert(c);
                }
            }
        }
        let limit = if boundary_count[s] == 0 { 2 } else { 3 };
        if classes.len() > limit {
            witnesses.push(format!(
                "simplex {s} has {} boundary edges (limit {limit})",
                classes.len()
            ));
        }
    }
    Ok(AdmissibilityReport {
        pass: witnesses.is_empty(),
        witnesses,
    })
}

/// One evaluated inequality, in the form lhs ≥ rhs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: Q,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Q,
    pub pass: bool,
}

fn ineq(name: &str, lhs: Q, rhs: Q) -> InequalityCheck {
    InequalityCheck {
        name: name.to_string(),
        lhs,
        rhs,
        pass: lhs >= rhs,
    }
}

/// The counting data of a triangulation together with every inequality
/// of the lower-bound arguments, each evaluated exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingCertificate {
    /// Simplex counts by number of boundary faces, t_0 through t_4.
    pub t: Vec<usize>,
    pub e_nice: usize,
    pub e_bad: usize,
    pub boundary_triangles: usize,
    pub dual_euler: i64,
    /// Genus 1 − χ(Γ) of the dual-graph handlebody.
    pub genus: i64,
    pub inequalities: Vec<InequalityCheck>,
    pub all_pass: bool,
}

/// Evaluate the counting inequalities on a connected 3-dimensional
/// triangulation, for claimed covering degree `d`, boundary norm and
/// boundary component count of the represented manifold.
pub fn counting_certificate(
    p: &Pseudomanifold,
    d: i64,
    bnorm: Q,
    components: usize,
) -> Result<CountingCertificate> {
    if p.dimension() != 3 {
        return Err(Error::Precondition(
            "counting certificate requires dimension 3".to_string(),
        ));
    }
    if !p.is_connected() {
        return Err(Error::Precondition(
            "counting certificate requires a connected triangulation".to_string(),
        ));
    }
    if d < 1 {
        return Err(Error::Precondition("degree must be at least 1".to_string()));
    }
    check_bnorm(bnorm)?;
    let profile = p.boundary_profile();
    let mut t = profile.t.clone();
    t.resize(5, 0);
    let (e_nice, e_bad) = nice_bad_edges(p)?;
    let dual = p.dual_graph();
    let genus = 1 - dual.euler;
    let db = q(d) * bnorm;
    let inequalities = vec![
        ineq("t1 + 2 t2 >= d * boundary_norm", qu(t[1] + 2 * t[2]), db),
        ineq("4 g - 4 >= d * boundary_norm", q(4 * genus - 4), db),
        ineq(
            "4 t0 + 2 t1 >= d * boundary_norm",
            qu(4 * t[0] + 2 * t[1]),
            db,
        ),
        ineq(
            "4 (t0 + t1 + t2) >= 3 d * boundary_norm",
            qu(4 * (t[0] + t[1] + t[2])),
            q(3) * db,
        ),
        ineq(
            "2 e_nice >= 4 components + d * boundary_norm",
            qu(2 * e_nice),
            qu(4 * components) + db,
        ),
        ineq("t0 >= e_nice / 2", qu(t[0]), qu(e_nice) / q(2)),
    ];
    let all_pass = inequalities.iter().all(|i| i.pass);
    Ok(CountingCertificate {
        t,
        e_nice,
        e_bad,
        boundary_triangles: profile.boundary_face_count(),
        dual_euler: dual.euler,
        genus,
        inequalities,
        all_pass,
    })
}

/// The best applicable lower bound for a described manifold.
pub fn best_lower_bound(m: &ManifoldDescriptor) -> Result<BoundReport> {
    if m.dimension < 2 {
        return Err(Error::Precondition("dimension must be at least 2".to_string()));
    }
    check_bnorm(m.boundary_norm)?;
    if m.hyperbolic_geodesic_boundary && m.vol.is_none() {
        return Err(Error::Precondition(
            "hyperbolic bound requires a volume".to_string(),
        ));
    }
    let mut candidates = vec![
        boundary_bound_generic(m.dimension, m.boundary_norm)?,
        boundary_bound_improved(m.dimension, m.boundary_norm)?,
    ];
    if m.dimension == 3 {
        candidates.push(bound_3manifold(m.boundary_norm)?);
    }
    if m.aspherical && m.boundary_irreducible {
        candidates.push(bound_aspherical(m.boundary_norm, m.dimension)?);
    }
    if m.hyperbolic_geodesic_boundary && m.dimension == 3 {
        let vol = m.vol.expect("checked above");
        let bnorm = m.boundary_norm.to_f64();
        candidates.push(BoundReport {
            value: BoundValue::Approx(hypervol::jungreis_bound(vol)?),
            kind: BoundKind::LowerBound,
            source: "jungreis".to_string(),
            hypotheses: vec!["hyperbolic".to_string()],
        });
        candidates.push(BoundReport {
            value: BoundValue::Approx(hypervol::refined_hyperbolic_bound(vol, bnorm)?),
            kind: BoundKind::LowerBound,
            source: "refined hyperbolic".to_string(),
            hypotheses: vec!["hyperbolic with geodesic boundary".to_string()],
        });
    }
    let best = candidates
        .into_iter()
        .reduce(|a, b| if b.value.as_f64() > a.value.as_f64() { b } else { a })
        .expect("candidate list is nonempty");
    Ok(best)
}

trait RatioF64 {
    fn to_f64(&self) -> f64;
}

impl RatioF64 for Q {
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cone_over_simplex_boundary, handlebody, product_surface_interval};

    #[test]
    fn formula_values() {
        assert_eq!(
            boundary_bound_generic(3, q(4)).unwrap().value.exact(),
            Some(q(1))
        );
        assert_eq!(
            boundary_bound_generic(2, q(8)).unwrap().value.exact(),
            Some(Ratio::new(8, 3))
        );
        assert_eq!(
            boundary_bound_improved(3, q(4)).unwrap().value.exact(),
            Some(q(2))
        );
        assert_eq!(
            boundary_bound_improved(2, q(4)).unwrap().value.exact(),
            Some(q(4))
        );
        assert_eq!(bound_3manifold(q(4)).unwrap().value.exact(), Some(q(3)));
        assert_eq!(bound_3manifold(q(28)).unwrap().value.exact(), Some(q(21)));
        assert_eq!(bound_aspherical(q(8), 3).unwrap().value.exact(), Some(q(10)));
        assert_eq!(bound_aspherical(q(7), 4).unwrap().value.exact(), Some(q(7)));
        assert_eq!(bound_aspherical(q(0), 3).unwrap().value.exact(), Some(q(0)));
        assert!(boundary_bound_improved(1, q(4)).is_err());
        assert!(bound_3manifold(q(-1)).is_err());
    }

    #[test]
    fn exact_values() {
        assert_eq!(value_handlebody(0).value.exact(), Some(q(0)));
        assert_eq!(value_handlebody(1).value.exact(), Some(q(0)));
        assert_eq!(value_handlebody(2).value.exact(), Some(q(3)));
        assert_eq!(value_handlebody(10).value.exact(), Some(q(27)));
        assert_eq!(value_seifert_plus_handles(0).value.exact(), Some(q(0)));
        assert_eq!(value_seifert_plus_handles(5).value.exact(), Some(q(15)));
        let v = value_product_surface(2).unwrap();
        assert_eq!(
            (v.simplicial_volume, v.delta_complexity, v.stable_delta_complexity),
            (q(10), 16, q(10))
        );
        let v = value_product_surface(1).unwrap();
        assert_eq!((v.simplicial_volume, v.delta_complexity), (q(0), 6));
        let v = value_product_surface(6).unwrap();
        assert_eq!((v.delta_complexity, v.stable_delta_complexity), (56, q(50)));
    }

    #[test]
    fn bounds_ordered_in_dimension_three() {
        for b in [q(0), q(1), Ratio::new(7, 3), q(12)] {
            let generic = boundary_bound_generic(3, b).unwrap().value.exact().unwrap();
            let improved = boundary_bound_improved(3, b).unwrap().value.exact().unwrap();
            let three = bound_3manifold(b).unwrap().value.exact().unwrap();
            let asph = bound_aspherical(b, 3).unwrap().value.exact().unwrap();
            assert!(asph >= three && three >= improved && improved >= generic);
        }
    }

    #[test]
    fn homogeneous_in_boundary_norm() {
        for l in [q(0), q(2), Ratio::new(3, 2)] {
            let b = Ratio::new(5, 7);
            assert_eq!(
                bound_3manifold(l * b).unwrap().value.exact().unwrap(),
                l * bound_3manifold(b).unwrap().value.exact().unwrap()
            );
        }
    }

    #[test]
    fn cone_edges_all_bad() {
        let p = cone_over_simplex_boundary(3).unwrap();
        assert_eq!(nice_bad_edges(&p).unwrap(), (0, 6));
        // around every boundary edge, the two flanking cone facets are
        // glued to each other in one step, so the lemma check passes
        let checks = check_bad_edge_lemma(&p).unwrap();
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(|c| c.pass && c.pairings == 1));
        assert!(admissibility_check(&p).unwrap().pass);
    }

    #[test]
    fn two_tetrahedra_mixed_lemma_outcomes() {
        // two tetrahedra glued along one face: the three edges of the
        // shared face have their flanks glued directly (pass); the six
        // edges through the free vertices have unglued flanks (fail)
        let p = Pseudomanifold::new(
            3,
            2,
            vec![crate::pseudomanifold::Gluing::new(
                (0, 3),
                (1, 3),
                vec![0, 1, 2, 3],
            )],
        )
        .unwrap();
        assert_eq!(nice_bad_edges(&p).unwrap(), (0, 9));
        let checks = check_bad_edge_lemma(&p).unwrap();
        assert_eq!(checks.len(), 9);
        assert_eq!(checks.iter().filter(|c| c.pass).count(), 3);
    }

    #[test]
    fn free_simplex_edges() {
        let p = Pseudomanifold::new(3, 1, vec![]).unwrap();
        assert_eq!(nice_bad_edges(&p).unwrap(), (0, 6));
        let report = admissibility_check(&p).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn product_certificate_passes() {
        let p = product_surface_interval(2).unwrap();
        let (nice, bad) = nice_bad_edges(&p).unwrap();
        assert_eq!(nice + bad, 18);
        assert!(2 * nice >= 16);
        assert!(admissibility_check(&p).unwrap().pass);
        let cert = counting_certificate(&p, 1, q(8), 2).unwrap();
        assert!(cert.all_pass, "{:?}", cert.inequalities);
        assert_eq!(cert.t[0], 4);
        assert_eq!(cert.t[1], 12);
        assert_eq!(cert.boundary_triangles, 12);
    }

    #[test]
    fn handlebody_certificate_runs() {
        let p = handlebody(3).unwrap();
        let cert = counting_certificate(&p, 1, q(8), 1).unwrap();
        assert_eq!(cert.inequalities.len(), 6);
        // diagnostic only: the handlebody triangulation need not
        // satisfy the inequalities meant for product triangulations
    }

    #[test]
    fn best_bound_selection() {
        let m = ManifoldDescriptor::new(3, q(4));
        let r = best_lower_bound(&m).unwrap();
        assert_eq!(r.value.exact(), Some(q(3)));
        assert_eq!(r.source, "three-manifold boundary bound");

        let m = ManifoldDescriptor {
            aspherical: true,
            boundary_irreducible: true,
            ..ManifoldDescriptor::new(3, q(4))
        };
        let r = best_lower_bound(&m).unwrap();
        assert_eq!(r.value.exact(), Some(q(5)));

        let m = ManifoldDescriptor {
            hyperbolic_geodesic_boundary: true,
            vol: Some(6.452),
            ..ManifoldDescriptor::new(3, q(4))
        };
        let r = best_lower_bound(&m).unwrap();
        assert_eq!(r.source, "refined hyperbolic");
        assert!((r.value.as_f64() - 6.462).abs() < 2e-3);

        let m = ManifoldDescriptor {
            hyperbolic_geodesic_boundary: true,
            ..ManifoldDescriptor::new(3, q(4))
        };
        assert!(best_lower_bound(&m).is_err());
    }

    #[test]
    fn reports_serialize() {
        let r = bound_3manifold(q(4)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"exact\""));
        assert!(json.contains("three-manifold"));
    }
}
