//! Built-in example codes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::SubsystemCode;
use crate::error::{Error, Result};
use crate::gf::{Field, Subspace};
use crate::symplectic::PauliVector;

/// Stabilizer generators of the five-qubit code.
pub const FIVE_QUBIT_STABILIZERS: [&str; 4] = ["ZXXZI", "IZXXZ", "ZIZXX", "XZIZX"];

/// Distance of the doubled five-qubit code `[[10,2,0,3]]`, found by exhaustive
/// weight-increasing search; weight 3 is attained and no weight ≤ 2 logical exists.
pub const DOUBLED_FIVE_QUBIT_DISTANCE: usize = 3;

pub fn five_qubit() -> SubsystemCode {
    let gens: Vec<PauliVector> = FIVE_QUBIT_STABILIZERS
        .iter()
        .map(|s| s.parse().expect("valid Pauli string"))
        .collect();
    SubsystemCode::from_generators(2, 5, &gens).expect("valid generators")
}

/// Bacon–Shor generators on an `l × l` grid, site `(i, j)` at index `i l + j`.
///
/// X-type: row-adjacent pairs, row by row. Z-type: column-adjacent pairs,
/// column by column.
pub fn bacon_shor_generators(l: usize) -> Result<Vec<PauliVector>> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("bacon_shor needs l >= 2, got {l}")));
    }
    let f = Field::new(2)?;
    let n = l * l;
    let pair = |s: usize, t: usize| {
        let mut v = vec![0u32; n];
        v[s] = 1;
        v[t] = 1;
        v
    };
    let mut gens = Vec::with_capacity(2 * l * (l - 1));
    for i in 0..l {
        for j in 0..l - 1 {
            gens.push(PauliVector::x_type(f, pair(i * l + j, i * l + j + 1))?);
        }
    }
    for j in 0..l {
        for i in 0..l - 1 {
            gens.push(PauliVector::z_type(f, pair(i * l + j, (i + 1) * l + j))?);
        }
    }
    Ok(gens)
}

pub fn bacon_shor(l: usize) -> Result<SubsystemCode> {
    let gens = bacon_shor_generators(l)?;
    SubsystemCode::from_generators(2, l * l, &gens)
}

/// The zero gauge group on `n` qudits.
pub fn trivial(p: u32, n: usize) -> Result<SubsystemCode> {
    SubsystemCode::from_generators(p, n, &[])
}

/// A uniformly random `dim`-dimensional gauge space, reproducible from `seed`.
pub fn random(p: u32, n: usize, dim: usize, seed: u64) -> Result<SubsystemCode> {
    let field = Field::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SubsystemCode::from_subspace(Subspace::random(field, 2 * n, dim, &mut rng)?)
}
