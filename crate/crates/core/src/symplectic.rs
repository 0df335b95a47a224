//! Pauli vectors, the forms θ and ω, and symplectic weight.
//!
//! A Pauli operator `X^a Z^b` on `n` qudits is the pair `(a, b)` of vectors in
//! `F_p^n`, modulo phases. Whenever a pair has to live in a matrix it is
//! flattened as the `a`-block followed by the `b`-block, so θ on `G × G` is the
//! plain dot product on `F_p^{2n}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{weight, Field, FpScalar, Subspace};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliVector {
    field: Field,
    x: Vec<u32>,
    z: Vec<u32>,
}

impl PauliVector {
    pub fn new(field: Field, x: Vec<u32>, z: Vec<u32>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                got: z.len(),
            });
        }
        field.check_vector(&x)?;
        field.check_vector(&z)?;
        Ok(PauliVector { field, x, z })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        PauliVector {
            field,
            x: vec![0; n],
            z: vec![0; n],
        }
    }

    /// Pure `X^a`.
    pub fn x_type(field: Field, a: Vec<u32>) -> Result<Self> {
        let n = a.len();
        Self::new(field, a, vec![0; n])
    }

    /// Pure `Z^b`.
    pub fn z_type(field: Field, b: Vec<u32>) -> Result<Self> {
        let n = b.len();
        Self::new(field, vec![0; n], b)
    }

    /// Inverse of [`PauliVector::flatten`].
    pub fn from_flat(field: Field, v: &[u32]) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::OddAmbient(v.len()));
        }
        let n = v.len() / 2;
        Self::new(field, v[..n].to_vec(), v[n..].to_vec())
    }

    pub fn parse(text: &str, p: u32) -> Result<Self> {
        parse_pauli(text, p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn z(&self) -> &[u32] {
        &self.z
    }

    pub fn flatten(&self) -> Vec<u32> {
        let mut v = self.x.clone();
        v.extend_from_slice(&self.z);
        v
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    /// Number of sites where the operator acts nontrivially.
    pub fn swt(&self) -> usize {
        self.x.iter().zip(&self.z).filter(|(&a, &b)| a != 0 || b != 0).count()
    }

    /// Weight of the flattened vector, `wt(a) + wt(b)`.
    pub fn flat_weight(&self) -> usize {
        weight(&self.x) + weight(&self.z)
    }

    pub fn add(&self, other: &PauliVector) -> Result<PauliVector> {
        self.check_compatible(other)?;
        Ok(PauliVector {
            field: self.field,
            x: self.field.add_vec(&self.x, &other.x),
            z: self.field.add_vec(&self.z, &other.z),
        })
    }

    pub fn sub(&self, other: &PauliVector) -> Result<PauliVector> {
        self.check_compatible(other)?;
        Ok(PauliVector {
            field: self.field,
            x: self.field.sub_vec(&self.x, &other.x),
            z: self.field.sub_vec(&self.z, &other.z),
        })
    }

    fn check_compatible(&self, other: &PauliVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.modulus(), other.field.modulus()));
        }
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(())
    }
}

/// Parses Pauli text.
///
/// For `p = 2` a string over `{I, X, Y, Z}` is read letter by letter, with `Y`
/// setting both the x and z bit. Otherwise the text is whitespace-separated
/// tokens `X{i}Z{j}` (or `I`) with `0 ≤ i, j < p`.
pub fn parse_pauli(text: &str, p: u32) -> Result<PauliVector> {
    let field = Field::new(p)?;
    let text = text.trim();
    let letters_only = !text.is_empty() && text.chars().all(|c| matches!(c, 'I' | 'X' | 'Y' | 'Z'));
    if p == 2 && letters_only {
        let mut x = Vec::with_capacity(text.len());
        let mut z = Vec::with_capacity(text.len());
        for c in text.chars() {
            let (a, b) = match c {
                'I' => (0, 0),
                'X' => (1, 0),
                'Y' => (1, 1),
                _ => (0, 1),
            };
            x.push(a);
            z.push(b);
        }
        return PauliVector::new(field, x, z);
    }
    let mut x = Vec::new();
    let mut z = Vec::new();
    for token in text.split_whitespace() {
        let (a, b) = parse_token(token, p)?;
        x.push(a);
        z.push(b);
    }
    PauliVector::new(field, x, z)
}

fn parse_token(token: &str, p: u32) -> Result<(u32, u32)> {
    if token == "I" {
        return Ok((0, 0));
    }
    let invalid = || Error::InvalidToken(token.to_string());
    let rest = token.strip_prefix('X').ok_or_else(invalid)?;
    let zpos = rest.find('Z').ok_or_else(invalid)?;
    let (xs, zs) = (&rest[..zpos], &rest[zpos + 1..]);
    let exponent = |s: &str| -> Result<u32> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(invalid());
        }
        let e: u64 = s.parse().map_err(|_| invalid())?;
        if e >= p as u64 {
            return Err(Error::ExponentOutOfRange { exponent: e, p });
        }
        Ok(e as u32)
    };
    Ok((exponent(xs)?, exponent(zs)?))
}

impl FromStr for PauliVector {
    type Err = Error;

    /// Qubit letter strings only; use [`parse_pauli`] for other primes.
    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s, 2)
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.modulus() == 2 {
            for (&a, &b) in self.x.iter().zip(&self.z) {
                let c = match (a, b) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (1, 1) => 'Y',
                    _ => 'Z',
                };
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let tokens: Vec<String> = self.x.iter().zip(&self.z).map(|(a, b)| format!("X{a}Z{b}")).collect();
            write!(f, "{}", tokens.join(" "))
        }
    }
}

/// `ω((a,b),(c,d)) = θ(b,c) − θ(a,d)`.
pub fn omega(u: &PauliVector, v: &PauliVector) -> Result<FpScalar> {
    u.check_compatible(v)?;
    let f = u.field;
    Ok(f.scalar(f.sub(f.dot(&u.z, &v.x), f.dot(&u.x, &v.z))))
}

/// ω on flattened vectors of even length.
pub fn omega_flat(field: Field, u: &[u32], v: &[u32]) -> u32 {
    let n = u.len() / 2;
    field.sub(field.dot(&u[n..], &v[..n]), field.dot(&u[..n], &v[n..]))
}

/// `Ψ(a, b) = (b, −a)`.
pub fn psi(v: &PauliVector) -> PauliVector {
    PauliVector {
        field: v.field,
        x: v.z.clone(),
        z: v.field.neg_vec(&v.x),
    }
}

/// Ψ applied to a flattened vector.
pub fn psi_flat(field: Field, v: &[u32]) -> Vec<u32> {
    let n = v.len() / 2;
    let mut out = v[n..].to_vec();
    out.extend(v[..n].iter().map(|&a| field.neg(a)));
    out
}

fn check_even(h: &Subspace) -> Result<usize> {
    let m = h.ambient_dim();
    if !m.is_multiple_of(2) {
        Err(Error::OddAmbient(m))
    } else {
        Ok(m / 2)
    }
}

/// The image `Ψ(H)` of a subspace of `F_p^{2n}`.
pub fn psi_subspace(h: &Subspace) -> Result<Subspace> {
    check_even(h)?;
    let f = h.field();
    let rows: Vec<Vec<u32>> = h.basis_vectors().map(|v| psi_flat(f, v)).collect();
    Subspace::span(f, h.ambient_dim(), &rows)
}

/// `H^ω = {u : ω(u, H) = 0}`, computed as `Ψ(H)^θ`.
pub fn omega_complement(h: &Subspace) -> Result<Subspace> {
    Ok(psi_subspace(h)?.theta_complement())
}

/// `A × B ≤ F_p^{2n}` for `A, B ≤ F_p^n` (A on the x-block, B on the z-block).
pub fn direct_product(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_compatible(b)?;
    let n = a.ambient_dim();
    let mut rows = Vec::with_capacity(a.dim() + b.dim());
    for v in a.basis_vectors() {
        let mut w = v.to_vec();
        w.extend(std::iter::repeat_n(0, n));
        rows.push(w);
    }
    for v in b.basis_vectors() {
        let mut w = vec![0; n];
        w.extend_from_slice(v);
        rows.push(w);
    }
    Subspace::span(a.field(), 2 * n, &rows)
}

/// The x-block projection `{a : ∃b, (a,b) ∈ H}`.
pub fn x_projection(h: &Subspace) -> Result<Subspace> {
    let n = check_even(h)?;
    let rows: Vec<&[u32]> = h.basis_vectors().map(|v| &v[..n]).collect();
    Subspace::span(h.field(), n, &rows)
}

/// The z-block projection `{b : ∃a, (a,b) ∈ H}`.
pub fn z_projection(h: &Subspace) -> Result<Subspace> {
    let n = check_even(h)?;
    let rows: Vec<&[u32]> = h.basis_vectors().map(|v| &v[n..]).collect();
    Subspace::span(h.field(), n, &rows)
}

/// `{a : (a, 0) ∈ H}`.
pub fn pure_x_part(h: &Subspace) -> Result<Subspace> {
    let n = check_even(h)?;
    let f = h.field();
    let x_block = direct_product(&Subspace::full(f, n), &Subspace::zero(f, n))?;
    x_projection(&h.intersect(&x_block)?)
}

/// `{b : (0, b) ∈ H}`.
pub fn pure_z_part(h: &Subspace) -> Result<Subspace> {
    let n = check_even(h)?;
    let f = h.field();
    let z_block = direct_product(&Subspace::zero(f, n), &Subspace::full(f, n))?;
    z_projection(&h.intersect(&z_block)?)
}
