//! Exact polynomial arithmetic, pseudo-division, triangular sets,
//! characteristic sets, lexicographic Gröbner bases, and unmixed
//! decomposition of algebraic varieties.

pub mod charset;
pub mod decomp;
pub mod elimination;
pub mod error;
pub mod groebner;
pub mod io;
pub mod limits;
pub mod poly;
pub mod triset;
pub mod verify;

pub use charset::{basic_set, charser_a, wu_charset, wu_charset_with, CharBranch, CharsetOutcome};
pub use decomp::{
    decompose, is_perfect, sat_classic, sat_improved, saturate_by, unm_var_dec, ClassicSaturation,
    Component, Decomposition, ImprovedSaturation, Saturation, SaturationRegistry,
};
pub use elimination::{prem_chain, prem_step, resultant, resultant_chain, PremResult};
pub use error::{Error, ParseError, Result};
pub use groebner::{buchberger, normal_form, GroebnerBasis, TermOrderSpec};
pub use io::{emit_result, parse_polynomial, parse_system, OutputFormat, SystemFile};
pub use limits::Limits;
pub use poly::{Coefficient, Monomial, Polynomial, VarOrder};
pub use triset::{u_set, TriangularSet};
