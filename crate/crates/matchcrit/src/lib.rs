//! Exact arithmetic for matching polynomials of simple graphs.
//!
//! The crate computes matching polynomials over arbitrary-precision
//! integers, locates and counts real roots with Sturm sequences, measures
//! root multiplicities of algebraic numbers given by their minimal
//! polynomials, classifies vertices by how deletion moves a root's
//! multiplicity, and decides theta-criticality. On top of that sit
//! constructors for the named extremal families, isomorph-free
//! enumeration of small trees and connected graphs, and a census harness
//! that checks the structural theorems exhaustively on small orders.
//!
//! Everything is exact: no floating point appears anywhere in the
//! library. Rational arithmetic is confined to root isolation and
//! polynomial evaluation at rational points; all other computation stays
//! in `BigInt`.

pub mod canon;
pub mod crit;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod poly;
pub mod root;
pub mod verify;

pub use crit::{
    classify_vertices, is_theta_critical, multiplicity, CriticalityVerdict, VertexClass,
    VertexKind,
};
pub use graph::Graph;
pub use matching::{matching_polynomial, MatchingEngine};
pub use poly::IntPolynomial;
pub use root::AlgebraicRoot;
