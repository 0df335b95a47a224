//! Symbolic coset states and the codeword basis of subsystem CSS codes.
//!
//! A [`CosetState`] stands for
//! `ω^g Σ_{s ∈ S} ω^{θ(φ, x + s)} |x + s⟩ / √|S|` with `ω = e^{2πi/p}`. It is
//! kept canonical: the offset is reduced modulo `S` and `φ` modulo `S^θ`, with
//! the constant phase that the second reduction produces folded into `g`. Two
//! states are then equal exactly when their fields are equal.

use std::collections::BTreeMap;

use crate::code::CssSplit;
use crate::error::{Error, Result};
use crate::gf::{linear_combinations, Field, Subspace};
use crate::symplectic::PauliVector;

/// `dense_vector` refuses instances with more than this many basis states.
pub const DENSE_LIMIT: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CosetState {
    offset: Vec<u32>,
    support: Subspace,
    phi: Vec<u32>,
    phase: u32,
}

impl CosetState {
    pub fn new(offset: Vec<u32>, support: Subspace, phi: Vec<u32>) -> Result<Self> {
        let n = support.ambient_dim();
        for v in [&offset, &phi] {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            support.field().check_vector(v)?;
        }
        Ok(Self::canonical(offset, support, phi, 0))
    }

    fn canonical(offset: Vec<u32>, support: Subspace, phi: Vec<u32>, phase: u32) -> Self {
        let f = support.field();
        let offset = support.reduce(&offset);
        let reduced = support.theta_complement().reduce(&phi);
        // φ = reduced + u with u ∈ S^θ, and θ(u, ·) is constant on the coset
        let u = f.sub_vec(&phi, &reduced);
        let phase = f.add(phase, f.dot(&u, &offset));
        CosetState {
            offset,
            support,
            phi: reduced,
            phase,
        }
    }

    pub fn field(&self) -> Field {
        self.support.field()
    }

    pub fn n(&self) -> usize {
        self.support.ambient_dim()
    }

    pub fn offset(&self) -> &[u32] {
        &self.offset
    }

    pub fn support(&self) -> &Subspace {
        &self.support
    }

    pub fn phase_functional(&self) -> &[u32] {
        &self.phi
    }

    /// The global phase exponent `g`.
    pub fn global_phase(&self) -> u32 {
        self.phase
    }

    /// `|S|`, the number of basis states in the superposition.
    pub fn support_size(&self) -> u128 {
        (self.field().modulus() as u128).pow(self.support.dim() as u32)
    }

    /// `X^a`: shifts the offset; the amplitude at `y` was the one at `y − a`.
    pub fn apply_x(&self, a: &[u32]) -> CosetState {
        let f = self.field();
        let offset = f.add_vec(&self.offset, a);
        let phase = f.sub(self.phase, f.dot(&self.phi, a));
        Self::canonical(offset, self.support.clone(), self.phi.clone(), phase)
    }

    /// `Z^b`: multiplies the amplitude at `x` by `ω^{θ(b, x)}`.
    pub fn apply_z(&self, b: &[u32]) -> CosetState {
        let phi = self.field().add_vec(&self.phi, b);
        Self::canonical(self.offset.clone(), self.support.clone(), phi, self.phase)
    }

    /// The operator `X^a Z^b` of `(a, b)`: `Z^b` acts first.
    pub fn apply(&self, op: &PauliVector) -> CosetState {
        self.apply_z(op.z()).apply_x(op.x())
    }

    pub fn same_up_to_phase(&self, other: &CosetState) -> bool {
        self.offset == other.offset && self.support == other.support && self.phi == other.phi
    }

    /// Whether `op` maps the state to itself with global phase exactly 1.
    pub fn is_fixed_by(&self, op: &PauliVector) -> bool {
        &self.apply(op) == self
    }

    /// Explicit amplitudes; fails when `p^n` exceeds [`DENSE_LIMIT`].
    pub fn dense_vector(&self) -> Result<DenseVector> {
        let p = self.field().modulus();
        let n = self.n();
        let dimension = (p as u64).checked_pow(n as u32).filter(|&d| d <= DENSE_LIMIT);
        if dimension.is_none() {
            return Err(Error::InstanceTooLarge(format!("{p}^{n} basis states")));
        }
        let f = self.field();
        let mut entries = BTreeMap::new();
        for s in self.support.elements() {
            let x = f.add_vec(&self.offset, &s);
            let phase = f.add(self.phase, f.dot(&self.phi, &x));
            entries.insert(index_of(p, &x), phase);
        }
        Ok(DenseVector {
            field: f,
            n,
            support_size: self.support_size() as u64,
            entries,
        })
    }
}

fn index_of(p: u32, x: &[u32]) -> usize {
    x.iter().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

fn digits_of(p: u32, n: usize, mut index: usize) -> Vec<u32> {
    let mut x = vec![0u32; n];
    for slot in x.iter_mut().rev() {
        *slot = (index % p as usize) as u32;
        index /= p as usize;
    }
    x
}

/// An exact state vector whose nonzero amplitudes all have magnitude
/// `1/√support_size`: basis index (the label read as a base-`p` numeral, first
/// qudit most significant) to phase exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseVector {
    field: Field,
    n: usize,
    support_size: u64,
    entries: BTreeMap<usize, u32>,
}

impl DenseVector {
    pub fn entries(&self) -> &BTreeMap<usize, u32> {
        &self.entries
    }

    pub fn support_size(&self) -> u64 {
        self.support_size
    }

    /// Squared 2-norm as an exact fraction `(numerator, denominator)`.
    pub fn norm_squared(&self) -> (u64, u64) {
        (self.entries.len() as u64, self.support_size)
    }

    /// Applies `X^a Z^b` entry by entry.
    pub fn apply(&self, op: &PauliVector) -> DenseVector {
        let f = self.field;
        let p = f.modulus();
        let entries = self
            .entries
            .iter()
            .map(|(&i, &phase)| {
                let x = digits_of(p, self.n, i);
                let phase = f.add(phase, f.dot(op.z(), &x));
                (index_of(p, &f.add_vec(&x, op.x())), phase)
            })
            .collect();
        DenseVector {
            entries,
            ..self.clone()
        }
    }

    /// Complex amplitudes `(index, re, im)`, for display only.
    pub fn amplitudes(&self) -> Vec<(usize, f64, f64)> {
        let p = self.field.modulus() as f64;
        let scale = 1.0 / (self.support_size as f64).sqrt();
        self.entries
            .iter()
            .map(|(&i, &k)| {
                let angle = std::f64::consts::TAU * k as f64 / p;
                (i, scale * angle.cos(), scale * angle.sin())
            })
            .collect()
    }
}

/// `|l, g⟩`: the uniform superposition over `l + g + (H_X ∩ H_Z^θ)`.
pub fn codeword(split: &CssSplit, l: &[u32], g: &[u32]) -> Result<CosetState> {
    if !split.x_logical().member(l)? {
        return Err(Error::LabelNotInSubspace("l must lie in H_X + H_Z^theta"));
    }
    if !split.hx().member(g)? {
        return Err(Error::LabelNotInSubspace("g must lie in H_X"));
    }
    let f = split.field();
    CosetState::new(f.add_vec(l, g), split.x_stabilizer(), vec![0; split.n()])
}

/// One `(l, g)` per basis codeword: `l` over `(H_X + H_Z^θ)/H_X` and `g` over
/// `H_X/(H_X ∩ H_Z^θ)`, each spanned by canonical quotient representatives.
pub fn codeword_labels(split: &CssSplit) -> Vec<(Vec<u32>, Vec<u32>)> {
    let f = split.field();
    let n = split.n();
    let logical = Subspace::quotient_reps(&split.x_logical(), split.hx()).expect("H_X is inside");
    let gauge = Subspace::quotient_reps(split.hx(), &split.x_stabilizer()).expect("S is inside");
    let ls = linear_combinations(f, n, &logical);
    let gs = linear_combinations(f, n, &gauge);
    ls.iter()
        .flat_map(|l| gs.iter().map(move |g| (l.clone(), g.clone())))
        .collect()
}
