//! Frobenius actions on local cohomology of graded complete intersections
//! `R = F_p[x_0, ..., x_n]/(f_1, ..., f_c)`.
//!
//! Layers, bottom up: [`ring`] (exact arithmetic and the text format),
//! [`groebner`] (ideals), [`frobenius`] (Frobenius powers and roots, τ,
//! F-purity), [`invariants`] (regularity, `M_q`, bounds) and [`localcoh`]
//! (classes, the Frobenius action and injectivity checks).

pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod invariants;
pub mod limits;
pub mod linalg;
pub mod localcoh;
pub mod ring;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use frobenius::{CompleteIntersection, TauClass, TauResult};
pub use groebner::{GroebnerBasis, Ideal};
pub use invariants::AnalysisReport;
pub use limits::Limits;
pub use localcoh::{ClassRecord, CohClass, InjectivityResult};
pub use ring::{Monomial, Polynomial, PrimeField, Ring};
