//! Numerical classification of weak Fano threefolds obtained by blowing up
//! smooth curves in projective three-space.

pub mod classification;
pub mod error;
pub mod lattice;
pub mod numerics;
pub mod points;
pub mod reference;
pub mod surfaces;

pub use classification::{
    aset, classify, link_descriptor, secant_possibility, AnticanonicalType, ClassificationRecord,
    Condition, Genericity, SecantReport, SecantVerdict, Verdict,
};
pub use error::{Error, Result};
pub use lattice::{DivisorClass, LatticeModel, ModelKind};
pub use numerics::{ArithmeticCurve, CurveType, LinkageType, LinkageWitness, MoriPolynomial};
pub use points::{
    incidence_check, numeric_verdict, points_k3, IncidenceReport, PointConfig, PointVerdict,
};
pub use reference::{ASetLabel, Column, LinkDescriptor};
pub use surfaces::{AmbientCurve, Category, ExtremalRay, SurfaceClassification};
