//! Points, lines, conics and collineations of the projective plane PG(2,p).
//!
//! Homogeneous triples are kept in a canonical form (first nonzero
//! coordinate scaled to 1), so equality, ordering and set membership are
//! well defined, and sums of representatives behave as expected.

use std::fmt;
use std::ops::Add;

use crate::field::{Fp, Legendre, Prime};

fn normalize3(mut v: [Fp; 3]) -> [Fp; 3] {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .copied()
        .expect("homogeneous triple must be nonzero");
    let s = lead.inv();
    for x in &mut v {
        *x = *x * s;
    }
    v
}

fn dot(u: &[Fp; 3], v: &[Fp; 3]) -> Fp {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross(u: &[Fp; 3], v: &[Fp; 3]) -> [Fp; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// A point of PG(2,p), stored as the canonical representative of its
/// equivalence class under scalar multiples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: [Fp; 3],
}

impl ProjPoint {
    /// Panics on the zero triple.
    pub fn new(coords: [Fp; 3]) -> ProjPoint {
        ProjPoint {
            coords: normalize3(coords),
        }
    }

    pub fn from_values(p: Prime, coords: [i64; 3]) -> ProjPoint {
        ProjPoint::new([p.fp(coords[0]), p.fp(coords[1]), p.fp(coords[2])])
    }

    pub fn coords(&self) -> [Fp; 3] {
        self.coords
    }

    pub fn x(&self) -> Fp {
        self.coords[0]
    }

    pub fn y(&self) -> Fp {
        self.coords[1]
    }

    pub fn z(&self) -> Fp {
        self.coords[2]
    }

    /// The mirror point (x, -y, -z).
    pub fn mirror(&self) -> ProjPoint {
        ProjPoint::new([self.coords[0], -self.coords[1], -self.coords[2]])
    }

    pub fn incident(&self, line: &ProjLine) -> bool {
        dot(&self.coords, &line.coeffs).is_zero()
    }
}

impl Add for &ProjPoint {
    type Output = ProjPoint;

    /// Coordinatewise sum of the canonical representatives, re-normalized.
    /// The sum of two distinct canonical representatives is never the zero
    /// triple, so this is total.
    fn add(self, rhs: &ProjPoint) -> ProjPoint {
        ProjPoint::new([
            self.coords[0] + rhs.coords[0],
            self.coords[1] + rhs.coords[1],
            self.coords[2] + rhs.coords[2],
        ])
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A line of PG(2,p), same canonical normalization as points.
/// A point (x,y,z) is incident with the line (a,b,c) iff ax+by+cz = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine {
    coeffs: [Fp; 3],
}

impl ProjLine {
    pub fn new(coeffs: [Fp; 3]) -> ProjLine {
        ProjLine {
            coeffs: normalize3(coeffs),
        }
    }

    pub fn from_values(p: Prime, coeffs: [i64; 3]) -> ProjLine {
        ProjLine::new([p.fp(coeffs[0]), p.fp(coeffs[1]), p.fp(coeffs[2])])
    }

    pub fn coeffs(&self) -> [Fp; 3] {
        self.coeffs
    }

    /// The unique line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> ProjLine {
        assert_ne!(p, q, "two coincident points span no unique line");
        ProjLine::new(cross(&p.coords, &q.coords))
    }

    /// Two distinct points spanning this line.
    pub fn span(&self) -> (ProjPoint, ProjPoint) {
        let p = self.coeffs[0].prime();
        let units = [
            [p.one(), p.zero(), p.zero()],
            [p.zero(), p.one(), p.zero()],
            [p.zero(), p.zero(), p.one()],
        ];
        let mut found: Vec<ProjPoint> = Vec::with_capacity(2);
        for e in &units {
            let c = cross(&self.coeffs, e);
            if c.iter().all(|x| x.is_zero()) {
                continue;
            }
            let pt = ProjPoint::new(c);
            if !found.contains(&pt) {
                found.push(pt);
            }
            if found.len() == 2 {
                break;
            }
        }
        (found[0], found[1])
    }

    /// All p+1 points incident with this line.
    pub fn points(&self) -> Vec<ProjPoint> {
        let (a, b) = self.span();
        let p = self.coeffs[0].prime();
        let mut pts = vec![b];
        for t in p.elements() {
            pts.push(ProjPoint::new([
                a.coords[0] + t * b.coords[0],
                a.coords[1] + t * b.coords[1],
                a.coords[2] + t * b.coords[2],
            ]));
        }
        pts.sort();
        pts.dedup();
        pts
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

pub fn incident(point: &ProjPoint, line: &ProjLine) -> bool {
    point.incident(line)
}

/// Coordinatewise sum of the canonical representatives of several points,
/// normalized once at the end. Chained binary `+` would rescale after each
/// step and compute something else.
pub fn sum_points(points: &[ProjPoint]) -> ProjPoint {
    assert!(!points.is_empty());
    let mut acc = points[0].coords();
    for pt in &points[1..] {
        let c = pt.coords();
        acc = [acc[0] + c[0], acc[1] + c[1], acc[2] + c[2]];
    }
    ProjPoint::new(acc)
}

/// All p² + p + 1 points of PG(2,p), in canonical form.
pub fn enumerate_points(p: Prime) -> Vec<ProjPoint> {
    let mut pts = Vec::with_capacity((p.value() * p.value() + p.value() + 1) as usize);
    for y in p.elements() {
        for z in p.elements() {
            pts.push(ProjPoint::new([p.one(), y, z]));
        }
    }
    for z in p.elements() {
        pts.push(ProjPoint::new([p.zero(), p.one(), z]));
    }
    pts.push(ProjPoint::new([p.zero(), p.zero(), p.one()]));
    pts
}

// ---- 3x3 matrix helpers over GF(p) ----

pub(crate) type Mat3 = [[Fp; 3]; 3];

pub(crate) fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let zero = a[0][0].prime().zero();
    let mut out = [[zero; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

pub(crate) fn mat_vec(a: &Mat3, v: &[Fp; 3]) -> [Fp; 3] {
    [dot(&a[0], v), dot(&a[1], v), dot(&a[2], v)]
}

pub(crate) fn mat_transpose(a: &Mat3) -> Mat3 {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub(crate) fn mat_det(a: &Mat3) -> Fp {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Inverse via the adjugate; panics on a singular matrix.
pub(crate) fn mat_inv(a: &Mat3) -> Mat3 {
    let det = mat_det(a);
    assert!(!det.is_zero(), "singular matrix");
    let d = det.inv();
    let cof = |r1: usize, c1: usize, r2: usize, c2: usize| a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1];
    [
        [cof(1, 1, 2, 2) * d, (-cof(0, 1, 2, 2)) * d, cof(0, 1, 1, 2) * d],
        [(-cof(1, 0, 2, 2)) * d, cof(0, 0, 2, 2) * d, (-cof(0, 0, 1, 2)) * d],
        [cof(1, 0, 2, 1) * d, (-cof(0, 0, 2, 1)) * d, cof(0, 0, 1, 1) * d],
    ]
}

/// How a line meets a conic: one, two, or zero common points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineClass {
    Tangent,
    Secant,
    External,
}

/// Where a point sits relative to a conic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    On,
    Exterior,
    Inner,
}

/// A symmetric 3x3 matrix over GF(p), projectively normalized. It describes
/// a conic exactly when it is regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConicMatrix {
    m: Mat3,
}

impl ConicMatrix {
    /// Panics if the matrix is not symmetric or is zero.
    pub fn new(m: Mat3) -> ConicMatrix {
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_eq!(m[i][j], m[j][i], "conic matrix must be symmetric");
            }
        }
        ConicMatrix { m: normalize_mat(m) }
    }

    pub fn from_diag(a: Fp, b: Fp, c: Fp) -> ConicMatrix {
        let zero = a.prime().zero();
        ConicMatrix::new([[a, zero, zero], [zero, b, zero], [zero, zero, c]])
    }

    pub fn matrix(&self) -> Mat3 {
        self.m
    }

    pub fn det(&self) -> Fp {
        mat_det(&self.m)
    }

    pub fn is_regular(&self) -> bool {
        !self.det().is_zero()
    }

    /// The quadratic form vᵀMv at a point.
    pub fn eval(&self, p: &ProjPoint) -> Fp {
        dot(&p.coords(), &mat_vec(&self.m, &p.coords()))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// The symmetric bilinear form uᵀMv.
    pub fn bilinear(&self, u: &ProjPoint, v: &ProjPoint) -> Fp {
        dot(&u.coords(), &mat_vec(&self.m, &v.coords()))
    }

    /// The polar line M·P of a point. For a regular matrix this is never
    /// the zero triple.
    pub fn polar(&self, p: &ProjPoint) -> ProjLine {
        ProjLine::new(mat_vec(&self.m, &p.coords()))
    }

    /// The tangent in a point of the conic: its polar line.
    ///
    /// Panics if the conic is singular or `p` does not lie on it.
    pub fn tangent_at(&self, p: &ProjPoint) -> ProjLine {
        assert!(self.is_regular(), "singular conic");
        assert!(self.contains(p), "tangent_at: point {p} not on the conic");
        self.polar(p)
    }

    /// Classifies a line as tangent, secant or external by solving the
    /// quadratic form restricted to the line. Exhaustive point counting is
    /// kept as a test oracle only.
    ///
    /// Panics if the conic is singular.
    pub fn classify_line(&self, line: &ProjLine) -> LineClass {
        assert!(self.is_regular(), "singular conic");
        let (u, v) = line.span();
        // Points of the line are v and u + t v; restricted form is
        // f(u) + 2 t B(u,v) + t² f(v).
        let fu = self.eval(&u);
        let fv = self.eval(&v);
        let b = self.bilinear(&u, &v);
        let two = u.x().prime().fp(2);
        let count = if !fv.is_zero() {
            let disc = b * b - fu * fv;
            match disc.legendre() {
                Legendre::Zero => 1,
                Legendre::Square => 2,
                Legendre::Nonsquare => 0,
            }
        } else {
            // v is on the conic; the restriction is linear in t.
            if (two * b).is_zero() {
                // t-degree 0: either no further point or the whole line,
                // and a regular conic contains no line.
                assert!(!fu.is_zero(), "a regular conic cannot contain a line");
                1
            } else {
                2
            }
        };
        match count {
            1 => LineClass::Tangent,
            2 => LineClass::Secant,
            _ => LineClass::External,
        }
    }

    /// Classifies a point as on / exterior / inner via its polar line:
    /// the polar is tangent, secant or external respectively.
    ///
    /// Panics if the conic is singular.
    pub fn classify_point(&self, p: &ProjPoint) -> PointClass {
        match self.classify_line(&self.polar(p)) {
            LineClass::Tangent => PointClass::On,
            LineClass::Secant => PointClass::Exterior,
            LineClass::External => PointClass::Inner,
        }
    }

    /// All points of the conic, sorted, by filtering the full plane.
    pub fn points(&self, p: Prime) -> Vec<ProjPoint> {
        enumerate_points(p)
            .into_iter()
            .filter(|pt| self.contains(pt))
            .collect()
    }
}

fn normalize_mat(m: Mat3) -> Mat3 {
    let lead = m
        .iter()
        .flatten()
        .find(|x| !x.is_zero())
        .copied()
        .expect("conic matrix must be nonzero");
    let s = lead.inv();
    let mut out = m;
    for row in &mut out {
        for x in row {
            *x = *x * s;
        }
    }
    out
}

/// A collinear transformation P ↦ SP given by a regular matrix S.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collineation {
    s: Mat3,
}

impl Collineation {
    /// Panics if `s` is singular.
    pub fn new(s: Mat3) -> Collineation {
        assert!(!mat_det(&s).is_zero(), "collineation matrix must be regular");
        Collineation { s }
    }

    pub fn identity(p: Prime) -> Collineation {
        let (o, l) = (p.zero(), p.one());
        Collineation::new([[l, o, o], [o, l, o], [o, o, l]])
    }

    pub fn matrix(&self) -> Mat3 {
        self.s
    }

    pub fn det(&self) -> Fp {
        mat_det(&self.s)
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(mat_vec(&self.s, &p.coords()))
    }

    /// Image of a conic under this map: (S⁻¹)ᵀ M S⁻¹, so that
    /// P ∈ C ⇔ S·P ∈ pushforward(C).
    pub fn pushforward(&self, conic: &ConicMatrix) -> ConicMatrix {
        let si = mat_inv(&self.s);
        ConicMatrix::new(mat_mul(&mat_transpose(&si), &mat_mul(&conic.m, &si)))
    }

    /// Image of a line: (Sᵀ)⁻¹ l, so that P ∈ l ⇔ S·P ∈ image(l).
    pub fn apply_line(&self, line: &ProjLine) -> ProjLine {
        let sti = mat_inv(&mat_transpose(&self.s));
        ProjLine::new(mat_vec(&sti, &line.coeffs))
    }

    pub fn inverse(&self) -> Collineation {
        Collineation::new(mat_inv(&self.s))
    }

    pub fn compose(&self, inner: &Collineation) -> Collineation {
        Collineation::new(mat_mul(&self.s, &inner.s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    /// Exhaustive line/conic intersection count: the test oracle for
    /// `classify_line`.
    fn count_on_line_and_conic(pm: Prime, c: &ConicMatrix, l: &ProjLine) -> usize {
        enumerate_points(pm)
            .iter()
            .filter(|pt| pt.incident(l) && c.contains(pt))
            .count()
    }

    fn unit_conic(pm: Prime) -> ConicMatrix {
        ConicMatrix::from_diag(pm.one(), pm.one(), pm.one())
    }

    #[test]
    fn normalization_is_canonical_and_idempotent() {
        let pm = p(11);
        let a = ProjPoint::from_values(pm, [2, 4, 6]);
        let b = ProjPoint::from_values(pm, [1, 2, 3]);
        assert_eq!(a, b);
        assert_eq!(ProjPoint::new(a.coords()), a);
        let l = ProjLine::from_values(pm, [0, 5, 10]);
        assert_eq!(l.coeffs()[1].value(), 1);
    }

    #[test]
    #[should_panic(expected = "nonzero")]
    fn zero_triple_rejected() {
        let pm = p(7);
        let _ = ProjPoint::from_values(pm, [0, 0, 0]);
    }

    #[test]
    fn incidence_examples() {
        let pm = p(11);
        assert!(ProjPoint::from_values(pm, [1, 0, 0])
            .incident(&ProjLine::from_values(pm, [0, 1, 0])));
        // 1 + 1 + 9 = 11 = 0 (11)
        assert!(ProjPoint::from_values(pm, [1, 1, 3])
            .incident(&ProjLine::from_values(pm, [1, 1, 3])));
        assert!(!ProjPoint::from_values(pm, [1, 0, 0])
            .incident(&ProjLine::from_values(pm, [1, 0, 0])));
    }

    #[test]
    fn line_through_and_points() {
        let pm = p(7);
        let a = ProjPoint::from_values(pm, [1, 2, 3]);
        let b = ProjPoint::from_values(pm, [0, 1, 5]);
        let l = ProjLine::through(&a, &b);
        assert!(a.incident(&l));
        assert!(b.incident(&l));
        let pts = l.points();
        assert_eq!(pts.len(), 8);
        assert!(pts.iter().all(|q| q.incident(&l)));
    }

    #[test]
    fn classify_line_examples() {
        let pm = p(11);
        let o1 = unit_conic(pm);
        // z = 0 meets x² + y² = 0 nowhere since -1 is a nonsquare mod 11
        let z0 = ProjLine::from_values(pm, [0, 0, 1]);
        assert_eq!(o1.classify_line(&z0), LineClass::External);
        // tangent at a point of the conic
        let r = ProjPoint::from_values(pm, [1, 1, 3]);
        assert!(o1.contains(&r));
        assert_eq!(o1.classify_line(&o1.tangent_at(&r)), LineClass::Tangent);
        // secant through two distinct conic points
        let s = ProjPoint::from_values(pm, [1, 1, 8]);
        assert!(o1.contains(&s));
        let sec = ProjLine::through(&r, &s);
        assert_eq!(o1.classify_line(&sec), LineClass::Secant);
    }

    #[test]
    fn classify_line_matches_exhaustive_count() {
        for q in [3u64, 5, 7, 11, 13] {
            let pm = p(q);
            let o1 = unit_conic(pm);
            // lines are in bijection with points; reuse the enumeration
            for pt in enumerate_points(pm) {
                let l = ProjLine::new(pt.coords());
                let n = count_on_line_and_conic(pm, &o1, &l);
                let expected = match n {
                    0 => LineClass::External,
                    1 => LineClass::Tangent,
                    2 => LineClass::Secant,
                    _ => panic!("a line meets a conic in at most 2 points"),
                };
                assert_eq!(o1.classify_line(&l), expected, "p={q} line={l}");
            }
        }
    }

    #[test]
    fn classify_point_examples() {
        let pm = p(11);
        let o1 = unit_conic(pm);
        let r = ProjPoint::from_values(pm, [1, 1, 3]);
        assert_eq!(o1.classify_point(&r), PointClass::On);
        // (0,1,0): polar is y = 0, and 1 + z² = 0 has no solution mod 11
        let q = ProjPoint::from_values(pm, [0, 1, 0]);
        assert_eq!(o1.classify_point(&q), PointClass::Inner);
        let center = ProjPoint::from_values(pm, [1, 0, 0]);
        assert_eq!(o1.classify_point(&center), PointClass::Inner);
    }

    #[test]
    fn exterior_points_have_two_tangents() {
        // polar duality oracle: a point is exterior iff exactly two
        // tangents pass through it
        for q in [5u64, 7, 11] {
            let pm = p(q);
            let o1 = unit_conic(pm);
            let tangents: Vec<ProjLine> = o1
                .points(pm)
                .iter()
                .map(|pt| o1.tangent_at(pt))
                .collect();
            for pt in enumerate_points(pm) {
                let through = tangents.iter().filter(|t| pt.incident(t)).count();
                match o1.classify_point(&pt) {
                    PointClass::On => assert_eq!(through, 1),
                    PointClass::Exterior => assert_eq!(through, 2),
                    PointClass::Inner => assert_eq!(through, 0),
                }
            }
        }
    }

    #[test]
    fn conic_has_p_plus_one_points() {
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let pm = p(q);
            let o1 = unit_conic(pm);
            assert_eq!(o1.points(pm).len() as u64, q + 1, "p={q}");
        }
    }

    #[test]
    fn tangent_formula_on_pencil_conic() {
        // On x² + k y² + k c z² = 0 the tangent at (1, y, z) is (1, ky, kcz).
        let pm = p(11);
        let k = pm.fp(4);
        let c = pm.one();
        let o4 = ConicMatrix::from_diag(pm.one(), k, k * c);
        for pt in o4.points(pm) {
            if pt.x().is_zero() {
                continue;
            }
            let t = o4.tangent_at(&pt);
            let expect = ProjLine::new([pm.one(), k * pt.y(), k * c * pt.z()]);
            assert_eq!(t, expect);
            let mirror_t = o4.tangent_at(&pt.mirror());
            let expect_m = ProjLine::new([pm.one(), -(k * pt.y()), -(k * c * pt.z())]);
            assert_eq!(mirror_t, expect_m);
        }
        // identity conic: tangent at (1,1,3) is (1,1,3)
        let o1 = unit_conic(pm);
        let r = ProjPoint::from_values(pm, [1, 1, 3]);
        assert_eq!(o1.tangent_at(&r), ProjLine::from_values(pm, [1, 1, 3]));
    }

    #[test]
    fn collineation_identity_and_incidence() {
        let pm = p(13);
        let id = Collineation::identity(pm);
        let o1 = unit_conic(pm);
        let pt = ProjPoint::from_values(pm, [1, 2, 3]);
        assert_eq!(id.apply(&pt), pt);
        assert_eq!(id.pushforward(&o1), o1);
    }

    #[test]
    fn pushforward_preserves_membership_and_class() {
        let pm = p(19);
        let o1 = unit_conic(pm);
        // a handful of regular matrices with varied structure
        let mats: Vec<Mat3> = vec![
            [[1, 2, 0], [0, 1, 5], [3, 0, 1]],
            [[2, 0, 0], [0, 3, 0], [0, 0, 5]],
            [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
            [[7, 2, 1], [1, 8, 3], [4, 1, 11]],
        ]
        .into_iter()
        .map(|m| m.map(|row: [i64; 3]| row.map(|v| pm.fp(v))))
        .collect();
        for m in mats {
            if mat_det(&m).is_zero() {
                continue;
            }
            let s = Collineation::new(m);
            let image = s.pushforward(&o1);
            assert_eq!(image.points(pm).len() as u64, pm.value() + 1);
            for pt in enumerate_points(pm) {
                assert_eq!(o1.contains(&pt), image.contains(&s.apply(&pt)));
                // line images preserve incidence as well
            }
            for pt in o1.points(pm) {
                let t = o1.tangent_at(&pt);
                assert_eq!(
                    image.classify_line(&s.apply_line(&t)),
                    LineClass::Tangent
                );
            }
        }
    }

    #[test]
    fn det_multiplicativity_on_triples() {
        let pm = p(11);
        let m: Mat3 = [[1, 2, 0], [0, 1, 5], [3, 0, 1]].map(|row: [i64; 3]| row.map(|v| pm.fp(v)));
        let s = Collineation::new(m);
        let tri = [
            ProjPoint::from_values(pm, [1, 0, 2]),
            ProjPoint::from_values(pm, [0, 1, 7]),
            ProjPoint::from_values(pm, [1, 5, 0]),
        ];
        let det_of = |a: &ProjPoint, b: &ProjPoint, c: &ProjPoint| {
            mat_det(&[a.coords(), b.coords(), c.coords()])
        };
        let before = det_of(&tri[0], &tri[1], &tri[2]);
        // images of the canonical representatives, unnormalized
        let im: Vec<[Fp; 3]> = tri.iter().map(|t| mat_vec(&s.matrix(), &t.coords())).collect();
        let after = mat_det(&[im[0], im[1], im[2]]);
        assert_eq!(after, s.det() * before);
    }

    #[test]
    fn mat_inverse_roundtrip() {
        let pm = p(23);
        let m: Mat3 = [[3, 1, 4], [1, 5, 9], [2, 6, 5]].map(|row: [i64; 3]| row.map(|v| pm.fp(v)));
        assert!(!mat_det(&m).is_zero());
        let mi = mat_inv(&m);
        let id = mat_mul(&m, &mi);
        let expect = Collineation::identity(pm).matrix();
        assert_eq!(id, expect);
    }
}
