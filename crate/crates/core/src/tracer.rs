//! Geometric construction of Poncelet polygons: vertices on an outer conic
//! O_β, sides tangent to an inner conic O_α with O_α ⋄ O_β.
//!
//! The tracer works purely with incidence geometry (tangent contact points
//! and second intersections), independent of the polynomial machinery, so
//! the two routes can be cross-validated against each other.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::field::Fp;
use crate::numtheory::{divisors, totient};
use crate::pencil::{Pencil, RelationTable};
use crate::projective::{sum_points, ProjLine, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("O_{alpha} does not lie inside O_{beta}; no polygon exists")]
    NotDiamond { alpha: u64, beta: u64 },
    #[error("start point {point} is not on O_{beta}")]
    StartNotOnConic { point: String, beta: u64 },
}

/// An n-sided Poncelet polygon: vertices B_1..B_n on O_β, contact points
/// A_1..A_n on O_α, where the side B_i B_{i+1} touches O_α in A_i
/// (indices cyclic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    alpha: u64,
    beta: u64,
    vertices: Vec<ProjPoint>,
    contacts: Vec<ProjPoint>,
}

impl Polygon {
    pub fn n(&self) -> u64 {
        self.vertices.len() as u64
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn vertices(&self) -> &[ProjPoint] {
        &self.vertices
    }

    pub fn contacts(&self) -> &[ProjPoint] {
        &self.contacts
    }
}

/// The two contact points on O_α of the two tangents through a point P of
/// O_β, by the closed formulas
///
/// ```text
/// z = α⁻¹ β P₃ ± P₂ √(α⁻² (-c⁻¹ β)(β - α))
/// y = P₂⁻¹ (-α⁻¹ - c P₃ z)          for P₂ ≠ 0
/// y = ±√(-α⁻¹ - c z²)               for P₂ = 0
/// ```
///
/// The radicand is a square exactly because O_α ⋄ O_β. Returns the pair in
/// lexicographic order.
pub fn contact_points(
    pencil: &Pencil,
    alpha: u64,
    beta: u64,
    point: &ProjPoint,
) -> Result<(ProjPoint, ProjPoint), TraceError> {
    if !pencil.diamond(alpha, beta) {
        return Err(TraceError::NotDiamond { alpha, beta });
    }
    if !pencil.conic(beta).contains(point) {
        return Err(TraceError::StartNotOnConic {
            point: point.to_string(),
            beta,
        });
    }
    let p = pencil.prime();
    let a = p.fp_u(alpha);
    let b = p.fp_u(beta);
    let c = pencil.c();
    // points of pencil conics always have a nonzero x-coordinate
    debug_assert_eq!(point.x().value(), 1);
    let (p2, p3) = (point.y(), point.z());
    let radicand = a.inv() * a.inv() * (-(c.inv()) * b) * (b - a);
    let root = radicand
        .sqrt()
        .expect("diamond pairs make the contact radicand a square")
        .1;
    let z_base = a.inv() * b * p3;
    let mk_contact = |z: Fp, y: Fp| ProjPoint::new([p.one(), y, z]);
    let (c1, c2) = if !p2.is_zero() {
        let y_of = |z: Fp| (-(a.inv()) - c * p3 * z) / p2;
        let (z1, z2) = (z_base + p2 * root, z_base - p2 * root);
        (mk_contact(z1, y_of(z1)), mk_contact(z2, y_of(z2)))
    } else {
        let z = z_base;
        let (y1, y2) = (-(a.inv()) - c * z * z)
            .sqrt()
            .expect("two distinct tangents exist from an exterior point");
        (mk_contact(z, y1), mk_contact(z, y2))
    };
    debug_assert!(pencil.conic(alpha).contains(&c1));
    debug_assert!(pencil.conic(alpha).contains(&c2));
    debug_assert!(point.incident(&pencil.conic(alpha).matrix().tangent_at(&c1)));
    debug_assert!(point.incident(&pencil.conic(alpha).matrix().tangent_at(&c2)));
    Ok(if c1 <= c2 { (c1, c2) } else { (c2, c1) })
}

/// The second intersection of `line` with O_β, given one intersection `on`.
/// Tangency cannot occur: no two conics of the pencil share a tangent.
fn second_intersection(pencil: &Pencil, beta: u64, line: &ProjLine, on: &ProjPoint) -> ProjPoint {
    let conic = pencil.conic(beta).matrix();
    debug_assert!(conic.contains(on) && on.incident(line));
    let (s1, s2) = line.span();
    let dir = if s1 == *on { s2 } else { s1 };
    // restricted form along on + t·dir: 2 t B(on,dir) + t² f(dir)
    let f_dir = conic.eval(&dir);
    let bil = conic.bilinear(on, &dir);
    if f_dir.is_zero() {
        assert!(!bil.is_zero(), "tangent line where a secant was expected");
        return dir;
    }
    let p = pencil.prime();
    let t = -(p.fp(2) * bil) / f_dir;
    assert!(!t.is_zero(), "tangent line where a secant was expected");
    let on_c = on.coords();
    let dir_c = dir.coords();
    ProjPoint::new([
        on_c[0] + t * dir_c[0],
        on_c[1] + t * dir_c[1],
        on_c[2] + t * dir_c[2],
    ])
}

/// Traces the polygon for (O_α, O_β) from a start vertex on O_β. Of the two
/// tangents from the start, the one touching at the lexicographically
/// smaller contact is taken; the choice fixes the orientation but not the
/// side count. Each following vertex is the second intersection of the
/// current tangent with O_β.
pub fn trace(
    pencil: &Pencil,
    alpha: u64,
    beta: u64,
    start: &ProjPoint,
) -> Result<Polygon, TraceError> {
    let (first_contact, _) = contact_points(pencil, alpha, beta, start)?;
    let inner = pencil.conic(alpha).matrix();
    let mut vertices = vec![*start];
    let mut contacts = Vec::new();
    let mut current = *start;
    let mut contact = first_contact;
    loop {
        let side = inner.tangent_at(&contact);
        let next = second_intersection(pencil, beta, &side, &current);
        contacts.push(contact);
        if next == *start {
            break;
        }
        vertices.push(next);
        let (c1, c2) = contact_points(pencil, alpha, beta, &next)?;
        contact = if c1 == contact { c2 } else { c1 };
        debug_assert!(c1 == contact || c2 == contact);
        current = next;
    }
    let n = vertices.len() as u64;
    let p = pencil.prime().value();
    assert!(n >= 3 && (p + 1) % n == 0, "closure length {n} must divide p+1");
    Ok(Polygon {
        alpha,
        beta,
        vertices,
        contacts,
    })
}

/// Traces from every point of O_β and checks all closures have the same
/// length, which is returned.
///
/// Panics if two starts disagree; that would break closure independence
/// and can only be a bug.
pub fn verify_porism(pencil: &Pencil, alpha: u64, beta: u64) -> Result<u64, TraceError> {
    let starts = pencil.conic(beta).points();
    let mut common = None;
    for start in &starts {
        let n = trace(pencil, alpha, beta, start)?.n();
        match common {
            None => common = Some(n),
            Some(m) => assert_eq!(
                m, n,
                "porism violated for ({alpha},{beta}): lengths {m} and {n}"
            ),
        }
    }
    Ok(common.expect("a conic has p+1 > 0 points"))
}

/// The additive closure identities of a traced polygon, on the x = 1
/// representatives:
///
/// * each A_i is the normalized sum B_i + B_{i+1};
/// * ΣB_i and ΣA_i both normalize to (1,0,0);
/// * for even n, the odd and even contact sums are (1,0,0) separately and
///   opposite vertices satisfy B_i + B_{n/2+i} = (1,0,0).
pub fn check_sum_identities(pencil: &Pencil, polygon: &Polygon) -> bool {
    let base = pencil.base_point();
    let n = polygon.n() as usize;
    let vs = polygon.vertices();
    let cs = polygon.contacts();
    for i in 0..n {
        if &vs[i] + &vs[(i + 1) % n] != cs[i] {
            return false;
        }
    }
    if sum_points(vs) != base || sum_points(cs) != base {
        return false;
    }
    if n % 2 == 0 {
        let odd: Vec<ProjPoint> = cs.iter().copied().step_by(2).collect();
        let even: Vec<ProjPoint> = cs.iter().copied().skip(1).step_by(2).collect();
        if sum_points(&odd) != base || sum_points(&even) != base {
            return false;
        }
        for i in 0..n / 2 {
            if &vs[i] + &vs[i + n / 2] != base {
                return false;
            }
        }
    }
    true
}

/// For a fixed outer conic O_β, groups all inner partners by polygon
/// length: n ↦ {α : (O_α, O_β) carries an n-gon}. For every n | p+1 with
/// n ≥ 3 the group has exactly φ(n)/2 members, and the groups exhaust the
/// (p-1)/2 diamond partners; both facts are asserted.
pub fn census(pencil: &Pencil, beta: u64) -> BTreeMap<u64, BTreeSet<u64>> {
    let p = pencil.prime().value();
    let mut groups: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    for alpha in 1..p {
        if alpha == beta || !pencil.diamond(alpha, beta) {
            continue;
        }
        let n = verify_porism(pencil, alpha, beta).expect("diamond checked above");
        groups.entry(n).or_default().insert(alpha);
    }
    let mut total = 0u64;
    for (&n, group) in &groups {
        assert!(n >= 3 && (p + 1) % n == 0);
        assert_eq!(
            group.len() as u64,
            totient(n) / 2,
            "census group for n={n} has the wrong size in PG(2,{p})"
        );
        total += group.len() as u64;
    }
    assert_eq!(total, (p - 1) / 2, "census misses diamond partners");
    // every admissible length occurs
    for n in divisors(p + 1) {
        if n >= 3 {
            assert!(groups.contains_key(&n), "no {n}-gons found in PG(2,{p})");
        }
    }
    groups
}

/// The full relation table computed geometrically, one porism verification
/// per diamond pair. This is the oracle the polynomial route is checked
/// against.
pub fn relation_table_by_tracer(pencil: &Pencil) -> RelationTable {
    let p = pencil.prime().value();
    let mut entries = BTreeMap::new();
    for beta in 1..p {
        for alpha in 1..p {
            if alpha == beta || !pencil.diamond(alpha, beta) {
                continue;
            }
            let n = verify_porism(pencil, alpha, beta).expect("diamond checked above");
            entries.insert((alpha, beta), n);
        }
    }
    RelationTable::new(pencil.prime(), entries)
}
