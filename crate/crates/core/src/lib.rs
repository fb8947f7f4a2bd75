//! F-signature and multiplicity quasi-polynomials of quotient singularities.
//!
//! Two engines compute `mult(M_α, R^{1/p^e})` exactly:
//!
//! - [`cyclic`] for `1/n(t_1, …, t_d)`, by counting lattice points in boxes;
//! - [`group`] for any small group given by conjugacy-class eigenvalue data, by a
//!   character sum over `Q(ζ_N)`.
//!
//! Both produce a [`QuasiPolynomial`] in `p^e` whose coefficients depend on `p^e mod N`.

pub mod arith;
pub mod cyclic;
pub mod data;
pub mod exactnum;
pub mod group;
pub mod qpoly;

pub use cyclic::{CyclicError, CyclicSingularity};
pub use exactnum::{Cyclotomic, Rational};
pub use group::{GroupError, GroupSpec, Labeling};
pub use qpoly::{Format, QpolyError, QuasiPolynomial};
