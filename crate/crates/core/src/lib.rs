//! Exact arithmetic for Poncelet polygons in finite projective planes.
//!
//! The plane PG(2,p), p an odd prime, carries the pencil of conics
//!
//! ```text
//! O_k : x² + k y² + c k z² = 0,    k = 1, ..., p-1,
//! ```
//!
//! which together with the point (1,0,0) and the line x = 0 partitions the
//! plane. A pair (O_α, O_β) with O_α inside O_β carries polygons inscribed
//! in O_β and circumscribed about O_α, whose side count n is independent of
//! the starting point and divides p+1. This crate constructs the pencil,
//! decides the inside relation, traces the polygons, and produces the same
//! side counts by three mutually independent routes:
//!
//! * geometric tracing over GF(p) ([`tracer`]),
//! * integer Poncelet polynomials P_n and the t-iteration ([`algebra`]),
//! * Hankel determinants of an exact power series ([`cayley`]).
//!
//! All arithmetic is exact: residues mod p, unbounded integers, or rational
//! functions over ℤ. There is no floating point anywhere.

pub mod algebra;
pub mod cayley;
pub mod field;
pub mod numtheory;
pub mod pencil;
pub mod projective;
pub mod tracer;

pub use algebra::{AlgebraError, IntPolynomial};
pub use cayley::{CayleyError, CayleySeries, RationalFunction};
pub use field::{Fp, Fp2, Legendre, Prime, PrimeError};
pub use pencil::{Pencil, PencilConic, PencilError, RelationTable};
pub use projective::{Collineation, ConicMatrix, LineClass, PointClass, ProjLine, ProjPoint};
pub use tracer::{Polygon, TraceError};
