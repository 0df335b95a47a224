//! The doubling map `Δ(H) = H × Ψ(H)` from subsystem stabilizer codes on `n`
//! qudits to subsystem CSS codes on `2n` qudits.
//!
//! The first `n` qudits of the doubled code carry the x-blocks of the source
//! and the last `n` carry the z-blocks.

use crate::code::{CodeParameters, SubsystemCode};
use crate::error::Result;
use crate::gf::Subspace;
use crate::symplectic::{direct_product, psi_subspace, PauliVector};

pub use crate::symplectic::psi;

#[derive(Clone, Debug)]
pub struct DoubledCode {
    pub source: SubsystemCode,
    pub result: SubsystemCode,
}

impl DoubledCode {
    /// `(2n, 2k, 2r)` for the source parameters `(n, k, r)`.
    pub fn expected_parameters(&self) -> CodeParameters {
        let CodeParameters { n, k, r } = self.source.parameters();
        CodeParameters {
            n: 2 * n,
            k: 2 * k,
            r: 2 * r,
        }
    }
}

/// `Δ(H) ≤ F_p^{4n}` for `H ≤ F_p^{2n}`.
pub fn delta_subspace(h: &Subspace) -> Result<Subspace> {
    direct_product(h, &psi_subspace(h)?)
}

/// Two generators per source generator `(a, b)`: X-type with x-block `(a‖b)`
/// and Z-type with z-block `(b‖−a)`, all X-type ones first.
pub fn delta_generators(generators: &[PauliVector]) -> Vec<PauliVector> {
    let xs = generators
        .iter()
        .map(|g| PauliVector::x_type(g.field(), g.flatten()).expect("same field"));
    let zs = generators
        .iter()
        .map(|g| PauliVector::z_type(g.field(), psi(g).flatten()).expect("same field"));
    xs.chain(zs).collect()
}

pub fn delta(code: &SubsystemCode) -> DoubledCode {
    let gens = delta_generators(code.generators());
    let result = SubsystemCode::from_generators(code.field().modulus(), 2 * code.n(), &gens)
        .expect("doubled generators are well formed");
    DoubledCode {
        source: code.clone(),
        result,
    }
}
