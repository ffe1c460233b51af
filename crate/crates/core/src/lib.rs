//! Doubly periodic tableaux and the algebra they carry.
//!
//! A doubly periodic tableau (DPT) with respect to integers `(K, N, a, b)`
//! is a surjective standard filling `sigma` of the plane satisfying
//! `sigma(x+K, y-N) = sigma(x, y)` and `sigma(x+a, y-b) = sigma(x, y) + m`
//! with `m = a*N - b*K > 0`. This crate provides:
//!
//! * [`exactnum`] — exact arithmetic in the cyclotomic field `Q(zeta_{2(K+N)})`,
//!   home of the root of unity `q`, its square root `v`, and `t = q^{-(a+b)}`;
//! * [`tableaux`] — the finite encoding of a DPT as a pair (alcove weight,
//!   standard filling of the fundamental domain), evaluation at arbitrary
//!   cells, the symmetries `D`, `L`, `pi`, and enumeration;
//! * [`weyl`] — affine permutations, content functions, allowed actions,
//!   the sorting algorithm, and reconstruction from a content function;
//! * [`counting`] — quotient enumerations and the counting theorems
//!   (mod `<D,L>`, mod `<pi>`, Dyck paths, `K^{N-1}`, hook-length formula);
//! * [`daha`] — the graded double affine Hecke algebra representation on
//!   DPT basis vectors and an exhaustive relation verifier;
//! * [`fusion`] — Pieri rules, ribbon/twist eigenvalue exponents, weight
//!   chains and intertwiner-space dimensions.
//!
//! All scalar computations are exact; no floating point enters any
//! verification path (`exactnum::embed_complex` exists only as a numeric
//! cross-check oracle for tests).

pub mod counting;
pub mod daha;
pub mod error;
pub mod exactnum;
pub mod fusion;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
pub use exactnum::{CycloScalar, CyclotomicField, Rational};
pub use tableaux::{AlcoveWeight, Cell, Dpt, Params};
