//! Dimensions of one-sided ideals in group algebras `F[G]` of finite groups
//! over finite fields, computed through ranks and characteristic polynomials
//! of regular-representation matrices, and the group codes those ideals
//! define.
//!
//! ```
//! use gadim::{AlgebraElem, FieldCtx, Group, IdealSpec, Side};
//!
//! let field = FieldCtx::from_spec("gf:2").unwrap();
//! let group = Group::from_spec("cyclic:6").unwrap();
//! // 1 + g^3
//! let f = AlgebraElem::parse(&field, &group, "1:1,4:1").unwrap();
//! let ideal = IdealSpec::new(Side::Left, vec![f]).unwrap();
//! assert_eq!(gadim::dim_ideal(&ideal).unwrap(), 3);
//! ```

pub mod algebra;
pub mod cli;
pub mod dimension;
pub mod error;
pub mod field;
pub mod gcode;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod representation;

pub use algebra::AlgebraElem;
pub use dimension::{
    annihilator_basis, dim_bound_charpoly, dim_ideal, dim_mulmuley_exact, dim_mulmuley_random,
    idempotent_generator, ideal_membership, DimBound, IdealSpec, Shortcut,
};
pub use error::{Error, Result};
pub use field::{Embedding, FieldCtx, FieldElem, FieldOp};
pub use gcode::GroupCode;
pub use group::{Group, ValidationLevel, ValidationReport, Violation};
pub use linalg::{lagrange_interpolate, FMatrix, Rref, Solution, XCharPoly};
pub use poly::FPoly;
pub use representation::{lambda_matrix, rho_matrix, stack, Side};
