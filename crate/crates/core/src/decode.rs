//! Steane-type recovery for subsystem CSS codes at the symplectic level.
//!
//! Each side of a CSS code is a classical linear code `K` with a redundant
//! subcode `R`: on the X side `K = H_X + H_Z^θ` and `R = H_X`, with the parity
//! check given by inner products against a basis of `H_Z ∩ H_X^θ`. Decoding
//! recovers an error up to `R`.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{side_distance, CssSplit, Distance};
use crate::error::{Error, Result};
use crate::gf::{weight, Field, FpMatrix, Subspace};
use crate::search;
use crate::symplectic::PauliVector;

/// Syndrome spaces up to this size get a precomputed leader table.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// A classical code `K = ker F` together with a redundant subcode `R ≤ K`.
#[derive(Clone, Debug)]
pub struct ClassicalCode {
    code: Subspace,
    redundant: Subspace,
    checks: FpMatrix,
    distance: Option<usize>,
    leaders: Option<HashMap<Vec<u32>, Vec<u32>>>,
}

impl ClassicalCode {
    /// Validates `ker F = K` and `R ≤ K`, computes `d_R` and, for small
    /// syndrome spaces, the leader table.
    pub fn new(code: Subspace, redundant: Subspace, checks: FpMatrix) -> Result<Self> {
        code.check_compatible(&redundant)?;
        if checks.cols() != code.ambient_dim() {
            return Err(Error::LengthMismatch {
                expected: code.ambient_dim(),
                got: checks.cols(),
            });
        }
        if checks.kernel() != code {
            return Err(Error::InvalidParameter(
                "parity check kernel differs from the code".into(),
            ));
        }
        if !redundant.is_subspace_of(&code) {
            return Err(Error::NotSubspace);
        }
        let n = code.ambient_dim();
        let distance = if code == redundant {
            None
        } else {
            match side_distance(&code, &redundant, n)? {
                Distance::Exact(d) => Some(d),
                Distance::AtLeast(_) => unreachable!("K differs from R, so a witness exists within weight n"),
            }
        };
        let mut cc = ClassicalCode {
            code,
            redundant,
            checks,
            distance,
            leaders: None,
        };
        let rank = (n - cc.code.dim()) as u32;
        let syndromes = (cc.field().modulus() as u64).checked_pow(rank);
        if syndromes.is_some_and(|s| s <= TABLE_LIMIT) {
            cc.leaders = Some(cc.build_table(syndromes.unwrap_or(u64::MAX)));
        }
        Ok(cc)
    }

    /// The parity check is a basis of `K^θ`.
    pub fn from_subspaces(code: Subspace, redundant: Subspace) -> Result<Self> {
        let checks = code.theta_complement().basis().clone();
        Self::new(code, redundant, checks)
    }

    pub fn field(&self) -> Field {
        self.code.field()
    }

    pub fn n(&self) -> usize {
        self.code.ambient_dim()
    }

    pub fn code(&self) -> &Subspace {
        &self.code
    }

    pub fn redundant(&self) -> &Subspace {
        &self.redundant
    }

    pub fn checks(&self) -> &FpMatrix {
        &self.checks
    }

    /// `d_R = min wt(K ∖ R)`; `None` when `K = R`.
    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    pub fn uses_table(&self) -> bool {
        self.leaders.is_some()
    }

    /// Largest weight `w` with `w < d_R / 2`.
    fn max_correctable(&self) -> usize {
        match self.distance {
            Some(d) => (d - 1) / 2,
            None => self.n(),
        }
    }

    pub fn syndrome(&self, v: &[u32]) -> Vec<u32> {
        self.checks.mul_vec(v).expect("length checked by caller")
    }

    fn build_table(&self, syndromes: u64) -> HashMap<Vec<u32>, Vec<u32>> {
        let alphabet = search::nonzero_patterns(self.field(), 1);
        let mut table: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        for w in 0..=self.max_correctable() {
            search::for_each_of_weight(self.n(), &alphabet, w, |v| {
                let s = self.syndrome(v);
                match table.get_mut(&s) {
                    Some(best) if weight(best) == w && v < best.as_slice() => *best = v.to_vec(),
                    Some(_) => {}
                    None => {
                        table.insert(s, v.to_vec());
                    }
                }
            });
            if table.len() as u64 == syndromes {
                break;
            }
        }
        table
    }

    fn search_leader(&self, syn: &[u32]) -> Option<Vec<u32>> {
        let alphabet = search::nonzero_patterns(self.field(), 1);
        for w in 0..=self.max_correctable() {
            let mut best: Option<Vec<u32>> = None;
            search::for_each_of_weight(self.n(), &alphabet, w, |v| {
                if best.as_deref().is_some_and(|b| v >= b) {
                    return;
                }
                if self.syndrome(v) == syn {
                    best = Some(v.to_vec());
                }
            });
            if best.is_some() {
                return best;
            }
        }
        None
    }

    /// A vector `v` with `F v = syn` and `wt(v) < d_R / 2`, lexicographically
    /// smallest among those of least weight; `Ok(None)` when no such vector
    /// exists.
    pub fn decode_coset(&self, syn: &[u32]) -> Result<Option<Vec<u32>>> {
        if syn.len() != self.checks.rows() {
            return Err(Error::LengthMismatch {
                expected: self.checks.rows(),
                got: syn.len(),
            });
        }
        self.field().check_vector(syn)?;
        if self.checks.solve(syn).is_none() {
            return Err(Error::InconsistentSyndrome);
        }
        Ok(match &self.leaders {
            Some(table) => table.get(syn).cloned(),
            None => self.search_leader(syn),
        })
    }
}

pub fn decode_coset(cc: &ClassicalCode, syn: &[u32]) -> Result<Option<Vec<u32>>> {
    cc.decode_coset(syn)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Syndrome {
    /// `θ(s_Z^i, a)` over the basis of `H_Z ∩ H_X^θ`.
    pub x_syn: Vec<u32>,
    /// `θ(s_X^i, b)` over the basis of `H_X ∩ H_Z^θ`.
    pub z_syn: Vec<u32>,
}

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.x_syn.iter().chain(&self.z_syn).all(|&s| s == 0)
    }
}

/// The syndrome against the canonical bases of the two stabilizer spaces.
pub fn syndrome_of(split: &CssSplit, e: &PauliVector) -> Syndrome {
    let zs = split.z_stabilizer();
    let xs = split.x_stabilizer();
    Syndrome {
        x_syn: zs.basis().mul_vec(e.x()).expect("matching length"),
        z_syn: xs.basis().mul_vec(e.z()).expect("matching length"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DecodeStatus {
    CorrectedUpToGauge,
    LogicalFailure,
    OutOfRange,
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecodeStatus::CorrectedUpToGauge => "corrected-up-to-gauge",
            DecodeStatus::LogicalFailure => "logical-failure",
            DecodeStatus::OutOfRange => "out-of-range",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub residual: PauliVector,
    pub correction: PauliVector,
}

/// The pair of classical decoders of a CSS code.
#[derive(Clone, Debug)]
pub struct SteaneDecoder {
    split: CssSplit,
    x: ClassicalCode,
    z: ClassicalCode,
}

pub fn make_css_decoder(split: &CssSplit) -> SteaneDecoder {
    let x = ClassicalCode::new(
        split.x_logical(),
        split.hx().clone(),
        split.z_stabilizer().basis().clone(),
    )
    .expect("X side is consistent");
    let z = ClassicalCode::new(
        split.z_logical(),
        split.hz().clone(),
        split.x_stabilizer().basis().clone(),
    )
    .expect("Z side is consistent");
    SteaneDecoder {
        split: split.clone(),
        x,
        z,
    }
}

impl SteaneDecoder {
    pub fn split(&self) -> &CssSplit {
        &self.split
    }

    pub fn x_side(&self) -> &ClassicalCode {
        &self.x
    }

    pub fn z_side(&self) -> &ClassicalCode {
        &self.z
    }

    pub fn field(&self) -> Field {
        self.split.field()
    }

    pub fn n(&self) -> usize {
        self.split.n()
    }

    pub fn syndrome(&self, e: &PauliVector) -> Syndrome {
        Syndrome {
            x_syn: self.x.syndrome(e.x()),
            z_syn: self.z.syndrome(e.z()),
        }
    }

    /// Decodes both sides independently and classifies the residual `e − c`.
    pub fn recover(&self, e: &PauliVector) -> DecodeOutcome {
        let syn = self.syndrome(e);
        let n = self.n();
        let cx = self.x.decode_coset(&syn.x_syn).expect("syndrome of an actual error");
        let cz = self.z.decode_coset(&syn.z_syn).expect("syndrome of an actual error");
        let in_range = cx.is_some() && cz.is_some();
        let correction = PauliVector::new(
            self.field(),
            cx.unwrap_or_else(|| vec![0; n]),
            cz.unwrap_or_else(|| vec![0; n]),
        )
        .expect("valid vectors");
        let residual = e.sub(&correction).expect("same shape");
        let status = if !in_range {
            DecodeStatus::OutOfRange
        } else if self.split.hx().contains(residual.x()) && self.split.hz().contains(residual.z()) {
            DecodeStatus::CorrectedUpToGauge
        } else {
            DecodeStatus::LogicalFailure
        };
        DecodeOutcome {
            status,
            residual,
            correction,
        }
    }
}

pub fn steane_recover(decoder: &SteaneDecoder, e: &PauliVector) -> DecodeOutcome {
    decoder.recover(e)
}

/// Status counts over a batch of errors.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct Tally {
    pub trials: u64,
    pub corrected: u64,
    pub logical_failures: u64,
    pub out_of_range: u64,
}

impl Tally {
    fn record(mut self, status: DecodeStatus) -> Self {
        self.trials += 1;
        match status {
            DecodeStatus::CorrectedUpToGauge => self.corrected += 1,
            DecodeStatus::LogicalFailure => self.logical_failures += 1,
            DecodeStatus::OutOfRange => self.out_of_range += 1,
        }
        self
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            trials: self.trials + other.trials,
            corrected: self.corrected + other.corrected,
            logical_failures: self.logical_failures + other.logical_failures,
            out_of_range: self.out_of_range + other.out_of_range,
        }
    }

    /// Fraction of trials not corrected up to gauge.
    pub fn failure_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            (self.trials - self.corrected) as f64 / self.trials as f64
        }
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MonteCarloReport {
    pub q: f64,
    pub seed: u64,
    pub tally: Tally,
}

/// Site-wise i.i.d. noise: each site is hit with probability `q` by a uniformly
/// chosen nontrivial `(a_j, b_j)`.
pub fn sample_error<R: Rng + ?Sized>(field: Field, n: usize, q: f64, rng: &mut R) -> PauliVector {
    let p = field.modulus();
    let mut x = vec![0u32; n];
    let mut z = vec![0u32; n];
    for j in 0..n {
        if rng.random_bool(q) {
            let code = rng.random_range(1..p * p);
            x[j] = code / p;
            z[j] = code % p;
        }
    }
    PauliVector::new(field, x, z).expect("entries in range")
}

/// Runs `trials` independent recoveries. Trial `t` draws from the ChaCha8
/// stream `t` of `seed`, so results do not depend on scheduling.
pub fn monte_carlo(decoder: &SteaneDecoder, q: f64, trials: u64, seed: u64) -> Result<MonteCarloReport> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidProbability(q.to_string()));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let (field, n) = (decoder.field(), decoder.n());
    let tally = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let e = sample_error(field, n, q, &mut rng);
            Tally::default().record(decoder.recover(&e).status)
        })
        .reduce(Tally::default, Tally::merge);
    Ok(MonteCarloReport { q, seed, tally })
}

/// Recovers every error of symplectic weight exactly `w`.
pub fn exhaustive_weight(decoder: &SteaneDecoder, w: usize) -> Tally {
    let (field, n) = (decoder.field(), decoder.n());
    let alphabet = search::nonzero_patterns(field, 2);
    let mut tally = Tally::default();
    search::for_each_of_weight(n, &alphabet, w, |v| {
        let e = PauliVector::from_flat(field, v).expect("even length");
        tally = tally.record(decoder.recover(&e).status);
    });
    tally
}

/// The parity map `Par_X: G/H_X → G/(H_X + H_Z^θ)` written in the basis of
/// `G/H_X` given by the standard vectors at the non-pivot columns `σ₀` of
/// `RREF(H_X)`.
#[derive(Clone, Debug)]
pub struct ParDecoder {
    hx: Subspace,
    sigma0: Vec<usize>,
    par: FpMatrix,
    distance: Option<usize>,
}

impl ParDecoder {
    /// Builds the X-side decoder; fails unless `H_X` is spanned by vectors of
    /// weight at most 2. Asserts `d^{H_X} = d^{Par_X}`.
    pub fn build(split: &CssSplit) -> Result<Self> {
        if !respects_weight(split.hx()) {
            return Err(Error::NotWeightRespecting);
        }
        let pd = Self::build_unchecked(split);
        let d_hx = if split.x_logical() == *split.hx() {
            None
        } else {
            side_distance(&split.x_logical(), split.hx(), split.n())?.exact()
        };
        assert_eq!(
            d_hx, pd.distance,
            "Par_X distance must equal d^H_X for weight-respecting H_X"
        );
        Ok(pd)
    }

    /// The Z-side decoder, built from the swapped split.
    pub fn build_z(split: &CssSplit) -> Result<Self> {
        Self::build(&CssSplit::new(split.hz().clone(), split.hx().clone())?)
    }

    /// Same construction without the weight-respecting requirement.
    pub fn build_unchecked(split: &CssSplit) -> Self {
        let hx = split.hx().clone();
        let n = hx.ambient_dim();
        let mut is_pivot = vec![false; n];
        for &c in hx.pivots() {
            is_pivot[c] = true;
        }
        let sigma0: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let checks = split.z_stabilizer();
        let f = hx.field();
        let mut par = FpMatrix::zeros(f, checks.dim(), sigma0.len());
        for (i, row) in checks.basis_vectors().enumerate() {
            for (j, &alpha) in sigma0.iter().enumerate() {
                par.set(i, j, row[alpha]);
            }
        }
        let kernel = par.kernel();
        let distance = if kernel.is_zero() {
            None
        } else {
            let alphabet = search::nonzero_patterns(f, 1);
            let test = kernel.membership_test();
            search::min_weight(sigma0.len(), &alphabet, sigma0.len(), |v| test.contains(v)).map(|(w, _)| w)
        };
        ParDecoder {
            hx,
            sigma0,
            par,
            distance,
        }
    }

    pub fn sigma0(&self) -> &[usize] {
        &self.sigma0
    }

    pub fn par_matrix(&self) -> &FpMatrix {
        &self.par
    }

    /// `d^{Par_X}`; `None` when the kernel is trivial.
    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    /// Coordinates of `a + H_X` in the `σ₀` basis.
    pub fn coordinates(&self, a: &[u32]) -> Vec<u32> {
        let r = self.hx.reduce(a);
        self.sigma0.iter().map(|&j| r[j]).collect()
    }

    pub fn sigma0_weight(&self, a: &[u32]) -> usize {
        weight(&self.coordinates(a))
    }

    fn embed(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.hx.ambient_dim()];
        for (&c, &j) in coords.iter().zip(&self.sigma0) {
            v[j] = c;
        }
        v
    }

    /// Decodes a syndrome (taken against the canonical basis of `H_Z ∩ H_X^θ`)
    /// to a representative of `a + H_X` supported on `σ₀`, or `Ok(None)` when
    /// no coset of `σ₀`-weight below `d^{Par_X}/2` matches.
    pub fn par_decode(&self, syn: &[u32]) -> Result<Option<Vec<u32>>> {
        if syn.len() != self.par.rows() {
            return Err(Error::LengthMismatch {
                expected: self.par.rows(),
                got: syn.len(),
            });
        }
        if self.par.solve(syn).is_none() {
            return Err(Error::InconsistentSyndrome);
        }
        let m = self.sigma0.len();
        let limit = self.distance.map_or(m, |d| (d - 1) / 2);
        let alphabet = search::nonzero_patterns(self.hx.field(), 1);
        for w in 0..=limit {
            let mut best: Option<Vec<u32>> = None;
            search::for_each_of_weight(m, &alphabet, w, |c| {
                if best.as_deref().is_some_and(|b| c >= b) {
                    return;
                }
                if self.par.mul_vec(c).expect("matching length") == syn {
                    best = Some(c.to_vec());
                }
            });
            if let Some(c) = best {
                return Ok(Some(self.embed(&c)));
            }
        }
        Ok(None)
    }
}

/// Whether `H` is spanned by its members of weight at most 2.
pub fn respects_weight(h: &Subspace) -> bool {
    let alphabet = search::nonzero_patterns(h.field(), 1);
    let test = h.membership_test();
    let mut light: Vec<Vec<u32>> = Vec::new();
    for w in 1..=2 {
        search::for_each_of_weight(h.ambient_dim(), &alphabet, w, |v| {
            if test.contains(v) {
                light.push(v.to_vec());
            }
        });
    }
    Subspace::span(h.field(), h.ambient_dim(), &light).expect("valid rows") == *h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::double::delta;
    use rand::SeedableRng;

    fn bacon_shor_split(l: usize) -> CssSplit {
        builtin::bacon_shor(l).unwrap().css_split().unwrap()
    }

    fn row_vector(l: usize, rows: &[usize]) -> Vec<u32> {
        let mut v = vec![0u32; l * l];
        for &i in rows {
            for j in 0..l {
                v[i * l + j] = 1;
            }
        }
        v
    }

    #[test]
    fn bacon_shor_x_side() {
        let split = bacon_shor_split(4);
        let dec = make_css_decoder(&split);
        let x = dec.x_side();
        assert_eq!(x.code().dim(), 13);
        assert_eq!(x.redundant().dim(), 12);
        assert_eq!(x.distance(), Some(4));
        assert!(x.uses_table());
        assert_eq!(dec.z_side().distance(), Some(4));
    }

    #[test]
    fn trivial_split_side() {
        let f = Field::new(2).unwrap();
        let split = CssSplit::new(Subspace::zero(f, 1), Subspace::zero(f, 1)).unwrap();
        let dec = make_css_decoder(&split);
        assert_eq!(dec.x_side().code(), &Subspace::full(f, 1));
        assert!(dec.x_side().redundant().is_zero());
        assert_eq!(dec.x_side().distance(), Some(1));
    }

    #[test]
    fn single_site_syndrome_matches_row_pairs() {
        let split = bacon_shor_split(4);
        let e = PauliVector::x_type(Field::new(2).unwrap(), {
            let mut a = vec![0; 16];
            a[0] = 1;
            a
        })
        .unwrap();
        let syn = syndrome_of(&split, &e);
        assert_eq!(syn.x_syn, vec![1, 0, 0]);
        assert!(syn.z_syn.iter().all(|&s| s == 0));
        // against the adjacent-row-pair basis the same site gives (1, 0, 0) too
        let f = Field::new(2).unwrap();
        let pairs: Vec<Vec<u32>> = (0..3).map(|i| row_vector(4, &[i, i + 1])).collect();
        let shown: Vec<u32> = pairs.iter().map(|s| f.dot(s, e.x())).collect();
        assert_eq!(shown, vec![1, 0, 0]);
        assert_eq!(Subspace::span(f, 16, &pairs).unwrap(), split.z_stabilizer());
    }

    #[test]
    fn zero_and_gauge_errors_have_zero_syndrome() {
        let split = bacon_shor_split(3);
        let f = split.field();
        assert!(syndrome_of(&split, &PauliVector::identity(f, 9)).is_zero());
        for g in builtin::bacon_shor_generators(3).unwrap() {
            assert!(syndrome_of(&split, &g).is_zero());
        }
    }

    #[test]
    fn single_site_errors_decode_to_themselves() {
        let split = bacon_shor_split(4);
        let dec = make_css_decoder(&split);
        let x = dec.x_side();
        assert_eq!(x.decode_coset(&[0, 0, 0]).unwrap(), Some(vec![0; 16]));
        for s in 0..16 {
            let mut a = vec![0u32; 16];
            a[s] = 1;
            let v = x.decode_coset(&x.syndrome(&a)).unwrap().unwrap();
            assert!(x.redundant().contains(&Field::new(2).unwrap().sub_vec(&a, &v)));
            assert_eq!(weight(&v), 1);
            // lexicographically smallest among weight-1 leaders for that row
            let row = s / 4;
            assert_eq!(v, {
                let mut w = vec![0u32; 16];
                w[row * 4 + 3] = 1;
                w
            });
        }
    }

    #[test]
    fn full_row_and_column_errors() {
        let split = bacon_shor_split(4);
        let dec = make_css_decoder(&split);
        let f = Field::new(2).unwrap();
        // a full row of X is in H_X
        let row = PauliVector::x_type(f, row_vector(4, &[1])).unwrap();
        let out = dec.recover(&row);
        assert!(dec.syndrome(&row).is_zero());
        assert!(out.correction.is_identity());
        assert_eq!(out.status, DecodeStatus::CorrectedUpToGauge);
        // a full column of X is a bare logical
        let mut col = vec![0u32; 16];
        for i in 0..4 {
            col[i * 4] = 1;
        }
        let col = PauliVector::x_type(f, col).unwrap();
        let out = dec.recover(&col);
        assert!(dec.syndrome(&col).is_zero());
        assert_eq!(out.residual, col);
        assert_eq!(out.status, DecodeStatus::LogicalFailure);
    }

    #[test]
    fn inconsistent_syndrome_is_rejected() {
        // K = span{(1,1,0)} with a redundant parity row: image of F is a proper subspace
        let f = Field::new(2).unwrap();
        let k = Subspace::span(f, 3, &[[1, 1, 0]]).unwrap();
        let checks = FpMatrix::from_rows(f, 3, &[[1, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap();
        let cc = ClassicalCode::new(k, Subspace::zero(f, 3), checks).unwrap();
        assert_eq!(cc.decode_coset(&[1, 1, 1]), Err(Error::InconsistentSyndrome));
        // d_R = 2 admits only the zero leader
        assert_eq!(cc.decode_coset(&[1, 0, 1]).unwrap(), None);
        assert_eq!(cc.decode_coset(&[0, 0, 0]).unwrap(), Some(vec![0, 0, 0]));
        let bad = FpMatrix::from_rows(f, 3, &[[1, 0, 0]]).unwrap();
        let k = Subspace::span(f, 3, &[[1, 1, 0]]).unwrap();
        assert!(ClassicalCode::new(k, Subspace::zero(f, 3), bad).is_err());
    }

    #[test]
    fn table_and_search_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2u32, 3] {
            let f = Field::new(p).unwrap();
            for _ in 0..10 {
                let k = Subspace::random(f, 6, rng.random_range(1..=5), &mut rng).unwrap();
                let r = Subspace::random(f, 6, 0, &mut rng).unwrap();
                let cc = ClassicalCode::from_subspaces(k, r).unwrap();
                assert!(cc.uses_table());
                let mut searched = cc.clone();
                searched.leaders = None;
                for _ in 0..20 {
                    let a: Vec<u32> = (0..6).map(|_| rng.random_range(0..p)).collect();
                    let syn = cc.syndrome(&a);
                    assert_eq!(cc.decode_coset(&syn).unwrap(), searched.decode_coset(&syn).unwrap());
                }
            }
        }
    }

    #[test]
    fn returned_leaders_are_light() {
        let split = bacon_shor_split(3);
        let dec = make_css_decoder(&split);
        let x = dec.x_side();
        let d = x.distance().unwrap();
        for bits in 0u32..(1 << 9) {
            let a: Vec<u32> = (0..9).map(|i| (bits >> i) & 1).collect();
            if let Some(v) = x.decode_coset(&x.syndrome(&a)).unwrap() {
                assert!(2 * weight(&v) < d);
                assert_eq!(x.syndrome(&v), x.syndrome(&a));
            }
        }
    }

    #[test]
    fn doubled_five_qubit_logical_fails() {
        let doubled = delta(&builtin::five_qubit()).result;
        let split = doubled.css_split().unwrap();
        let dec = make_css_decoder(&split);
        let d = builtin::DOUBLED_FIVE_QUBIT_DISTANCE;
        assert_eq!(dec.x_side().distance(), Some(d));
        assert_eq!(dec.z_side().distance(), Some(d));
        let (w, logical) = doubled.min_logical(10).unwrap();
        assert_eq!(w, d);
        let out = dec.recover(&logical);
        assert!(out.correction.is_identity());
        assert_eq!(out.status, DecodeStatus::LogicalFailure);
    }

    #[test]
    fn zero_error_and_low_weight_errors() {
        let split = bacon_shor_split(4);
        let dec = make_css_decoder(&split);
        let out = dec.recover(&PauliVector::identity(split.field(), 16));
        assert_eq!(out.status, DecodeStatus::CorrectedUpToGauge);
        assert!(out.correction.is_identity());
        let t = exhaustive_weight(&dec, 1);
        assert_eq!((t.trials, t.corrected), (48, 48));
    }

    #[test]
    fn syndrome_is_linear_and_gauge_invariant() {
        let split = bacon_shor_split(3);
        let dec = make_css_decoder(&split);
        let f = split.field();
        let gauge = split.gauge();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let e1 = sample_error(f, 9, 0.3, &mut rng);
            let e2 = sample_error(f, 9, 0.3, &mut rng);
            let (s1, s2) = (dec.syndrome(&e1), dec.syndrome(&e2));
            let s12 = dec.syndrome(&e1.add(&e2).unwrap());
            assert_eq!(s12.x_syn, f.add_vec(&s1.x_syn, &s2.x_syn));
            assert_eq!(s12.z_syn, f.add_vec(&s1.z_syn, &s2.z_syn));
            assert_eq!(syndrome_of(&split, &e1), s1);
            let coeffs: Vec<u32> = (0..gauge.dim()).map(|_| rng.random_range(0..2)).collect();
            let g = PauliVector::from_flat(f, &gauge.combine(&coeffs)).unwrap();
            let moved = e1.add(&g).unwrap();
            assert_eq!(dec.syndrome(&moved), s1);
            let (o1, o2) = (dec.recover(&e1), dec.recover(&moved));
            assert_eq!(o1.status, o2.status);
            let diff = o1.residual.sub(&o2.residual).unwrap().flatten();
            assert!(gauge.contains(&diff));
        }
    }

    #[test]
    fn monte_carlo_edges() {
        let split = bacon_shor_split(3);
        let dec = make_css_decoder(&split);
        let zero = monte_carlo(&dec, 0.0, 200, 1).unwrap();
        assert_eq!(zero.tally.corrected, 200);
        assert_eq!(zero.tally.failure_rate(), 0.0);
        let full = monte_carlo(&dec, 1.0, 200, 1).unwrap();
        let rate = full.tally.failure_rate();
        assert!((0.0..=1.0).contains(&rate));
        assert_eq!(
            monte_carlo(&dec, 1.5, 10, 1).unwrap_err(),
            Error::InvalidProbability("1.5".into())
        );
        assert!(monte_carlo(&dec, f64::NAN, 10, 1).is_err());
        assert!(monte_carlo(&dec, 0.1, 0, 1).is_err());
        assert_eq!(
            monte_carlo(&dec, 0.2, 300, 9).unwrap(),
            monte_carlo(&dec, 0.2, 300, 9).unwrap()
        );
    }

    #[test]
    fn bacon_shor_par_matrix() {
        let split = bacon_shor_split(4);
        let pd = ParDecoder::build(&split).unwrap();
        assert_eq!(pd.sigma0(), &[3, 7, 11, 15]);
        let f = Field::new(2).unwrap();
        let shown = FpMatrix::from_rows(f, 4, &[[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]).unwrap();
        assert_eq!(pd.par_matrix().rref(), shown);
        assert_eq!(pd.par_matrix().kernel(), Subspace::span(f, 4, &[[1, 1, 1, 1]]).unwrap());
        assert_eq!(pd.distance(), Some(4));
        assert!(ParDecoder::build_z(&split).is_ok());
    }

    #[test]
    fn par_decoder_edge_cases() {
        let f = Field::new(2).unwrap();
        let split = CssSplit::new(Subspace::zero(f, 3), Subspace::zero(f, 3)).unwrap();
        let pd = ParDecoder::build(&split).unwrap();
        assert_eq!(pd.sigma0(), &[0, 1, 2]);
        assert!(pd.par_matrix().rows() == 0);
        assert_eq!(pd.par_decode(&[]).unwrap(), Some(vec![0, 0, 0]));
        let heavy = CssSplit::new(Subspace::span(f, 4, &[[1, 1, 1, 0]]).unwrap(), Subspace::zero(f, 4)).unwrap();
        assert_eq!(ParDecoder::build(&heavy).unwrap_err(), Error::NotWeightRespecting);
        assert!(!respects_weight(heavy.hx()));
        assert!(respects_weight(&Subspace::zero(f, 4)));
    }

    #[test]
    fn par_decode_single_row_odd_patterns() {
        let split = bacon_shor_split(4);
        let pd = ParDecoder::build(&split).unwrap();
        let dec = make_css_decoder(&split);
        assert_eq!(pd.par_decode(&[0, 0, 0]).unwrap(), Some(vec![0; 16]));
        for row in 0..4 {
            for bits in 0u32..16 {
                if bits.count_ones() % 2 == 0 {
                    continue;
                }
                let mut a = vec![0u32; 16];
                for j in 0..4 {
                    a[row * 4 + j] = (bits >> j) & 1;
                }
                let rep = pd.par_decode(&dec.x_side().syndrome(&a)).unwrap().unwrap();
                let mut expected = vec![0u32; 16];
                expected[row * 4 + 3] = 1;
                assert_eq!(rep, expected);
                assert!(split.hx().contains(&f2().sub_vec(&a, &rep)));
            }
        }
    }

    fn f2() -> Field {
        Field::new(2).unwrap()
    }

    #[test]
    fn par_and_syn_agree_on_single_site_errors() {
        let split = bacon_shor_split(4);
        let pd = ParDecoder::build(&split).unwrap();
        let dec = make_css_decoder(&split);
        for s in 0..16 {
            let mut a = vec![0u32; 16];
            a[s] = 1;
            let syn = dec.x_side().syndrome(&a);
            let v = dec.x_side().decode_coset(&syn).unwrap().unwrap();
            let rep = pd.par_decode(&syn).unwrap().unwrap();
            assert!(split.hx().contains(&f2().sub_vec(&v, &rep)));
        }
    }

    #[test]
    fn sigma0_weight_bounds_coset_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for p in [2u32, 3] {
            let f = Field::new(p).unwrap();
            for _ in 0..15 {
                let n = 5;
                let hx = Subspace::random(f, n, rng.random_range(0..=3), &mut rng).unwrap();
                let hz = Subspace::random(f, n, rng.random_range(0..=3), &mut rng).unwrap();
                let split = CssSplit::new(hx.clone(), hz).unwrap();
                let pd = ParDecoder::build_unchecked(&split);
                let members = hx.elements();
                let all = crate::gf::linear_combinations(f, n, &Subspace::full(f, n).basis().to_rows());
                for a in &all {
                    let coset_min = members.iter().map(|h| weight(&f.add_vec(a, h))).min().unwrap();
                    assert!(coset_min <= pd.sigma0_weight(a));
                }
                if split.x_logical() != *split.hx() {
                    let d = side_distance(&split.x_logical(), split.hx(), n)
                        .unwrap()
                        .exact()
                        .unwrap();
                    let dp = pd.distance().unwrap();
                    assert!(d <= dp);
                    if respects_weight(&hx) {
                        assert_eq!(d, dp);
                    }
                }
            }
        }
    }

    #[test]
    fn every_low_weight_error_is_corrected() {
        let split = bacon_shor_split(4);
        let dec = make_css_decoder(&split);
        // d = 4, so swt(e) < 2 covers weights 0 and 1
        for w in 0..=1 {
            let t = exhaustive_weight(&dec, w);
            assert_eq!(t.corrected, t.trials);
        }
        let split = bacon_shor_split(3);
        let dec = make_css_decoder(&split);
        let t = exhaustive_weight(&dec, 1);
        assert_eq!((t.trials, t.corrected), (27, 27));
    }
}
