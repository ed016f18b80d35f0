//! Electrostatic and Riesz-potential centers of a triangle.
//!
//! The electrostatic center is the unique maximum point of the Coulomb
//! potential of a uniformly charged triangle. [`electro_center`] locates it
//! by solving a scalar equation in one parameter `λ`; [`potential`] offers
//! closed-form and quadrature evaluation of the potential itself, and
//! [`general_p`] handles the kernels `|PQ|^p` for arbitrary `p`.

pub mod approx;
pub mod electro_center;
pub mod error;
pub mod general_p;
pub mod geometry;
pub mod potential;
pub mod quadrature;
pub mod sampling;

pub use error::{Error, Result};
pub use geometry::{CevianAngles, Point2, PointClass, SideLengths, Triangle, Trilinears};
pub use potential::{FieldVector, QuadratureConfig};
