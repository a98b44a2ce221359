//! The special pencil of conics O_k: x² + k y² + c k z² = 0, k = 1..p-1.
//!
//! Together with the point (1,0,0) and the line x = 0, these p-1 conics
//! partition PG(2,p). The parameter c must make p - c a nonsquare: any
//! square works when p ≡ 3 (4), any nonsquare when p ≡ 1 (4), and all
//! valid choices give collinearly equivalent pencils.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::{Fp, Legendre, Prime};
use crate::numtheory::divisors;
use crate::projective::{enumerate_points, Collineation, ConicMatrix, ProjLine, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("c = {c} is invalid for p = {p}: p - c must be a nonsquare")]
    InvalidParameter { p: u64, c: u64 },
    #[error("conic index {k} out of range 1..{p}")]
    IndexOutOfRange { p: u64, k: u64 },
    #[error("O_{alpha} does not lie inside O_{beta}")]
    NotDiamond { alpha: u64, beta: u64 },
    #[error("point {point} is not on O_{k}")]
    PointNotOnConic { point: String, k: u64 },
}

/// The smallest valid pencil parameter: 1 when p ≡ 3 (4) (a square), and
/// the smallest nonsquare when p ≡ 1 (4). In both cases p - c is a
/// nonsquare, so y² + c z² = 0 describes the single point (1,0,0).
pub fn select_c(p: Prime) -> Fp {
    if p.value() % 4 == 3 {
        p.one()
    } else {
        p.elements()
            .skip(2)
            .find(|x| x.legendre() == Legendre::Nonsquare)
            .expect("GF(p) has a nonsquare for p > 2")
    }
}

/// The pencil spanned by the point P = (1,0,0) and the line g: x = 0,
/// with a fixed parameter c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pencil {
    p: Prime,
    c: Fp,
}

impl Pencil {
    /// The pencil with the canonical (smallest valid) parameter c.
    pub fn new(p: Prime) -> Pencil {
        Pencil { p, c: select_c(p) }
    }

    /// Pencil with an explicit parameter; fails unless p - c is a nonsquare.
    pub fn with_c(p: Prime, c: u64) -> Result<Pencil, PencilError> {
        let c = p.fp_u(c);
        if c.is_zero() || (-c).legendre() != Legendre::Nonsquare {
            return Err(PencilError::InvalidParameter {
                p: p.value(),
                c: c.value(),
            });
        }
        Ok(Pencil { p, c })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn c(&self) -> Fp {
        self.c
    }

    /// The common inner point (1,0,0) of all conics of the pencil.
    pub fn base_point(&self) -> ProjPoint {
        ProjPoint::from_values(self.p, [1, 0, 0])
    }

    /// The line x = 0 completing the partition.
    pub fn base_line(&self) -> ProjLine {
        ProjLine::from_values(self.p, [1, 0, 0])
    }

    fn index(&self, k: u64) -> Fp {
        assert!(
            k >= 1 && k < self.p.value(),
            "conic index {k} out of range 1..{}",
            self.p.value()
        );
        self.p.fp_u(k)
    }

    /// The member O_k of the pencil, 1 ≤ k ≤ p-1.
    pub fn conic(&self, k: u64) -> PencilConic {
        PencilConic {
            k: self.index(k),
            pencil: *self,
        }
    }

    pub fn conics(&self) -> impl Iterator<Item = PencilConic> + '_ {
        (1..self.p.value()).map(move |k| self.conic(k))
    }

    /// Checks that the p-1 conics, the line g and the point P are pairwise
    /// disjoint and cover all p² + p + 1 points. Every point is classified
    /// by the pair (x², y² + c z²): both vanishing means two members of the
    /// pencil overlap.
    pub fn verify_partition(&self) -> bool {
        let p = self.p.value();
        let mut conic_sizes: BTreeMap<u64, u64> = BTreeMap::new();
        let mut on_line = 0u64;
        let mut on_point_class = 0u64;
        for pt in enumerate_points(self.p) {
            let g = pt.x() * pt.x();
            let f = pt.y() * pt.y() + self.c * pt.z() * pt.z();
            match (g.is_zero(), f.is_zero()) {
                (true, true) => return false,
                (true, false) => on_line += 1,
                (false, true) => on_point_class += 1,
                (false, false) => {
                    // x² + k(y² + c z²) = 0 for exactly one k = -g/f,
                    // which is automatically nonzero.
                    let k = (-g / f).value();
                    *conic_sizes.entry(k).or_insert(0) += 1;
                }
            }
        }
        on_line == p + 1
            && on_point_class == 1
            && conic_sizes.len() as u64 == p - 1
            && conic_sizes.values().all(|&n| n == p + 1)
    }

    /// The diamond relation: O_α lies inside O_β (every point of O_β is an
    /// exterior point of O_α). Decided by whether (-β)(β - α) is a square
    /// (p ≡ 3 (4)) or a nonsquare (p ≡ 1 (4)). The pointwise definition is
    /// kept as a test oracle.
    pub fn diamond(&self, alpha: u64, beta: u64) -> bool {
        let a = self.index(alpha);
        let b = self.index(beta);
        assert_ne!(alpha, beta, "diamond requires distinct conics");
        let crit = (-b) * (b - a);
        match self.p.value() % 4 {
            1 => crit.legendre() == Legendre::Nonsquare,
            _ => crit.legendre() == Legendre::Square,
        }
    }

    /// Follows O_α ⋄ O_β ⇒ O_β ⋄ O_{β²α⁻¹} until the starting pair recurs
    /// and returns the cycle of conic indices.
    pub fn chain(&self, alpha: u64, beta: u64) -> Result<Vec<u64>, PencilError> {
        if !self.diamond(alpha, beta) {
            return Err(PencilError::NotDiamond { alpha, beta });
        }
        let start = (self.index(alpha), self.index(beta));
        let mut cycle = vec![start.0.value()];
        let mut cur = start;
        loop {
            cur = (cur.1, cur.1 * cur.1 * cur.0.inv());
            if cur == start {
                break;
            }
            cycle.push(cur.0.value());
        }
        Ok(cycle)
    }

    /// A collineation carrying (O_k, O_1) to (O_{βk}, O_β); the same matrix
    /// works for every k. For β a square it is diag(1, √β⁻¹, √β⁻¹); for β a
    /// nonsquare an auxiliary split of β is used, with the smallest valid
    /// auxiliary for determinism.
    pub fn transport(&self, k: u64, beta: u64) -> Collineation {
        let b = self.index(beta);
        let p = self.p;
        let (one, zero) = (p.one(), p.zero());
        let s_inv: [[Fp; 3]; 3] = if let Some((root, _)) = b.sqrt() {
            let r = root;
            [[one, zero, zero], [zero, r, zero], [zero, zero, r]]
        } else if p.value() % 4 == 3 {
            // nonzero square s with β - s a nonzero square; the matrix
            // below rotates y,z jointly. For c ≠ 1 conjugate by
            // diag(1, 1, √c), which exists since c is a square here.
            let s = p
                .elements()
                .skip(1)
                .find(|s| s.is_square() && !(b - *s).is_zero() && (b - *s).is_square())
                .expect("a square s with beta - s square exists for p >= 3");
            let rs = s.sqrt().unwrap().0;
            let rbs = (b - s).sqrt().unwrap().0;
            let rc = self.c.sqrt().expect("c is a square when p = 3 (4)").0;
            [
                [one, zero, zero],
                [zero, rs, -(rbs * rc)],
                [zero, rbs / rc, rs],
            ]
        } else {
            // p ≡ 1 (4): auxiliary nonsquare c' with β - c' a nonzero
            // square; built for the parameter-c' pencil and conjugated by
            // diag(1, 1, √(c'/c)) back to this pencil's parameter.
            let cp = p
                .elements()
                .skip(2)
                .find(|x| {
                    x.legendre() == Legendre::Nonsquare
                        && !(b - *x).is_zero()
                        && (b - *x).is_square()
                })
                .expect("a nonsquare c' with beta - c' square exists for p = 1 (4)");
            let a = (b - cp).sqrt().unwrap().0;
            let g = (cp / self.c).sqrt().expect("c'/c is a square").0;
            [
                [one, zero, zero],
                [zero, a, cp / g],
                [zero, g, -a],
            ]
        };
        let s = Collineation::new(s_inv).inverse();
        debug_assert_eq!(
            s.pushforward(&self.conic(k).matrix()),
            self.conic((self.index(k) * b).value()).matrix()
        );
        s
    }

    /// A collineation fixing O_β (as an equation) and carrying the point P
    /// on O_β to the point Q on O_β. The matrix has the rotation shape
    ///
    /// ```text
    /// [ 1  0   0  ]
    /// [ 0  a  c·b ]        a = -β p₂ q₂ + β c p₃ q₃
    /// [ 0  b  -a  ]        b = -β (q₂ p₃ + q₃ p₂),    a² + c b² = 1.
    /// ```
    ///
    /// For p ≡ 1 (4) this is the GF(p)(√c)-rotation diag-conjugated back to
    /// the base field; for p ≡ 3 (4) with c = 1 it is the plain rotation.
    /// The formulas hold identically, including p₂ = 0 or p₃ = 0.
    pub fn rotation(
        &self,
        beta: u64,
        start: &ProjPoint,
        target: &ProjPoint,
    ) -> Result<Collineation, PencilError> {
        let b = self.index(beta);
        let conic = self.conic(beta);
        for pt in [start, target] {
            if !conic.contains(pt) {
                return Err(PencilError::PointNotOnConic {
                    point: pt.to_string(),
                    k: beta,
                });
            }
        }
        let (p2, p3) = (start.y(), start.z());
        let (q2, q3) = (target.y(), target.z());
        let a = -(b * p2 * q2) + b * self.c * q3 * p3;
        let bb = -(b * q2 * p3) - b * q3 * p2;
        debug_assert_eq!((a * a + self.c * bb * bb).value(), 1);
        let (one, zero) = (self.p.one(), self.p.zero());
        let tau = Collineation::new([
            [one, zero, zero],
            [zero, a, self.c * bb],
            [zero, bb, -a],
        ]);
        debug_assert_eq!(tau.apply(start), *target);
        Ok(tau)
    }
}

/// One member O_k of a pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PencilConic {
    k: Fp,
    pencil: Pencil,
}

impl PencilConic {
    pub fn k(&self) -> u64 {
        self.k.value()
    }

    pub fn pencil(&self) -> Pencil {
        self.pencil
    }

    /// The matrix diag(1, k, ck), always regular.
    pub fn matrix(&self) -> ConicMatrix {
        let p = self.pencil.p;
        ConicMatrix::from_diag(p.one(), self.k, self.pencil.c * self.k)
    }

    pub fn contains(&self, pt: &ProjPoint) -> bool {
        self.matrix().contains(pt)
    }

    /// All p+1 points, each with x-coordinate 1, in lexicographic order.
    /// Solves y² = -k⁻¹ - c z² one z-slice at a time.
    pub fn points(&self) -> Vec<ProjPoint> {
        let p = self.pencil.p;
        let mut pts = Vec::with_capacity(p.value() as usize + 1);
        let mk_inv = -self.k.inv();
        for z in p.elements() {
            let rhs = mk_inv - self.pencil.c * z * z;
            if let Some((r1, r2)) = rhs.sqrt() {
                pts.push(ProjPoint::new([p.one(), r1, z]));
                if r2 != r1 {
                    pts.push(ProjPoint::new([p.one(), r2, z]));
                }
            }
        }
        pts.sort();
        debug_assert_eq!(pts.len() as u64, p.value() + 1);
        pts
    }
}

/// The table of diamond-related pairs with their polygon lengths: rows are
/// indexed by the inner conic α, columns by the outer conic β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    p: Prime,
    entries: BTreeMap<(u64, u64), u64>,
}

impl RelationTable {
    /// Panics if any entry has n < 3 or n not dividing p+1.
    pub fn new(p: Prime, entries: BTreeMap<(u64, u64), u64>) -> RelationTable {
        let valid = divisors(p.value() + 1);
        for (&(alpha, beta), &n) in &entries {
            assert!(alpha >= 1 && alpha < p.value() && beta >= 1 && beta < p.value());
            assert!(
                n >= 3 && valid.contains(&n),
                "entry ({alpha},{beta}) has invalid length {n}"
            );
        }
        RelationTable { p, entries }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// The polygon length carried by (O_alpha, O_beta), if they are related.
    pub fn get(&self, alpha: u64, beta: u64) -> Option<u64> {
        self.entries.get(&(alpha, beta)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.entries.iter().map(|(&(a, b), &n)| (a, b, n))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
