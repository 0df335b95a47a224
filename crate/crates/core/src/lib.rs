//! Exact finite-field toolkit for subsystem stabilizer and subsystem CSS codes
//! over prime qudits: code towers and parameters, CSS detection, Goursat data,
//! the doubling map, Steane-type recovery, and symbolic codewords.

pub mod builtin;
pub mod code;
pub mod codefile;
pub mod decode;
pub mod double;
pub mod error;
pub mod gf;
pub mod goursat;
pub mod report;
mod search;
pub mod states;
pub mod symplectic;

pub use code::{is_direct_product, CodeParameters, CssDistances, CssSplit, Distance, SubsystemCode, Tower};
pub use codefile::{parse_code_file, CodeFile, Format};
pub use decode::{
    decode_coset, exhaustive_weight, make_css_decoder, monte_carlo, steane_recover, syndrome_of, ClassicalCode,
    DecodeOutcome, DecodeStatus, MonteCarloReport, ParDecoder, SteaneDecoder, Syndrome, Tally,
};
pub use double::{delta, delta_generators, delta_subspace, DoubledCode};
pub use error::{Error, Result};
pub use gf::{Field, FpMatrix, FpScalar, Subspace};
pub use goursat::{
    check_complement_data, check_intersection_data, classify_stabilizer, goursat_of, reconstruct_from, GoursatData,
    StabilizerClass,
};
pub use report::{Mode, Report};
pub use states::{codeword, codeword_labels, CosetState, DenseVector};
pub use symplectic::{omega, parse_pauli, psi, PauliVector};
