//! Finite-field arithmetic, cyclotomic integers, difference sets, Walsh
//! spectra and linear codes built from defining sets.

pub mod boolfn;
pub mod code;
pub mod cyclotomic;
pub mod designs;
pub mod error;
pub mod family;
pub mod func;
pub mod gf;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use func::{FuncSpec, Target};
pub use gf::{Elem, Field, FieldConfig};
