//! Subsystem stabilizer codes as subspaces `H ≤ F_p^{2n}`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf::{Field, FpMatrix, Subspace};
use crate::search;
use crate::symplectic::{direct_product, omega_complement, pure_x_part, pure_z_part, PauliVector};

/// The tower `H ∩ H^ω ≤ H ≤ H + H^ω`, plus `H^ω` itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tower {
    pub stabilizer: Subspace,
    pub gauge: Subspace,
    pub centralizer: Subspace,
    pub gauge_preserving: Subspace,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.r)
    }
}

/// Result of a budgeted minimum-weight search.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Distance {
    Exact(usize),
    /// Nothing was found up to the budget; the true value is at least this.
    AtLeast(usize),
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }

    /// The smaller of two distances, keeping track of bounds.
    pub fn min(self, other: Distance) -> Distance {
        use Distance::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) => {
                if a < b {
                    Exact(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }

    fn from_search(found: Option<usize>, budget: usize) -> Distance {
        match found {
            Some(d) => Distance::Exact(d),
            None => Distance::AtLeast(budget + 1),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// A subsystem stabilizer code: the gauge group modulo phases.
///
/// The generator list is kept in input order (it feeds the Goursat pairing and
/// the doubling map at generator level); everything structural goes through
/// the canonical gauge subspace. The tower is computed once on first use.
#[derive(Clone, Debug)]
pub struct SubsystemCode {
    field: Field,
    n: usize,
    generators: Vec<PauliVector>,
    gauge: Subspace,
    tower: OnceLock<Tower>,
}

impl PartialEq for SubsystemCode {
    fn eq(&self, other: &Self) -> bool {
        self.gauge == other.gauge
    }
}

impl Eq for SubsystemCode {}

impl SubsystemCode {
    /// Builds the code spanned by `generators`; they may be dependent.
    pub fn from_generators(p: u32, n: usize, generators: &[PauliVector]) -> Result<Self> {
        let field = Field::new(p)?;
        for g in generators {
            if g.field() != field {
                return Err(Error::ModulusMismatch(p, g.field().modulus()));
            }
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.n(),
                });
            }
        }
        let rows: Vec<Vec<u32>> = generators.iter().map(PauliVector::flatten).collect();
        let gauge = Subspace::span(field, 2 * n, &rows)?;
        Ok(SubsystemCode {
            field,
            n,
            generators: generators.to_vec(),
            gauge,
            tower: OnceLock::new(),
        })
    }

    /// Builds a code from a subspace of `F_p^{2n}`; its canonical basis becomes the generator list.
    pub fn from_subspace(gauge: Subspace) -> Result<Self> {
        let m = gauge.ambient_dim();
        if !m.is_multiple_of(2) {
            return Err(Error::OddAmbient(m));
        }
        let field = gauge.field();
        let generators = gauge
            .basis_vectors()
            .map(|v| PauliVector::from_flat(field, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsystemCode {
            field,
            n: m / 2,
            generators,
            gauge,
            tower: OnceLock::new(),
        })
    }

    /// The CSS code `H_X × H_Z`.
    pub fn from_css(hx: &Subspace, hz: &Subspace) -> Result<Self> {
        Self::from_subspace(direct_product(hx, hz)?)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliVector] {
        &self.generators
    }

    pub fn gauge(&self) -> &Subspace {
        &self.gauge
    }

    pub fn tower(&self) -> &Tower {
        self.tower.get_or_init(|| {
            let gauge_preserving = omega_complement(&self.gauge).expect("ambient is even");
            let centralizer = self.gauge.sum(&gauge_preserving).expect("same ambient");
            let stabilizer = self.gauge.intersect(&gauge_preserving).expect("same ambient");
            Tower {
                stabilizer,
                gauge: self.gauge.clone(),
                centralizer,
                gauge_preserving,
            }
        })
    }

    pub fn parameters(&self) -> CodeParameters {
        let t = self.tower();
        let logical = t.centralizer.dim() - t.gauge.dim();
        let gauge = t.gauge.dim() - t.stabilizer.dim();
        assert!(
            logical.is_multiple_of(2) && gauge.is_multiple_of(2),
            "tower quotients must be even-dimensional"
        );
        let (k, r) = (logical / 2, gauge / 2);
        assert_eq!(
            t.stabilizer.dim() + k + r,
            self.n,
            "stabilizer dimension must be n - k - r"
        );
        CodeParameters { n: self.n, k, r }
    }

    /// `min swt((H + H^ω) ∖ H)` by increasing symplectic weight, up to `budget`
    /// (default `n`).
    pub fn distance(&self, budget: Option<usize>) -> Result<Distance> {
        let t = self.tower();
        if t.centralizer == t.gauge {
            return Err(Error::NoLogicalOperators);
        }
        let budget = budget.unwrap_or(self.n).min(self.n);
        Ok(Distance::from_search(self.min_logical(budget).map(|(w, _)| w), budget))
    }

    /// A minimum-weight element of `(H + H^ω) ∖ H` together with its weight, searching
    /// up to symplectic weight `budget`.
    pub fn min_logical(&self, budget: usize) -> Option<(usize, PauliVector)> {
        let t = self.tower();
        let in_centralizer = t.centralizer.membership_test();
        let in_gauge = t.gauge.membership_test();
        let alphabet = search::nonzero_patterns(self.field, 2);
        search::min_weight(self.n, &alphabet, budget, |v| {
            in_centralizer.contains(v) && !in_gauge.contains(v)
        })
        .map(|(w, v)| (w, PauliVector::from_flat(self.field, &v).expect("even length")))
    }

    /// CSS test via the kernel-sum criterion on the generator matrices.
    pub fn is_css(&self) -> bool {
        let rows: Vec<Vec<u32>> = self.generators.iter().map(PauliVector::flatten).collect();
        kernel_sum_is_full(self.field, self.n, &rows)
    }

    pub fn css_split(&self) -> Result<CssSplit> {
        if !self.is_css() {
            return Err(Error::NotCss);
        }
        CssSplit::new(pure_x_part(&self.gauge)?, pure_z_part(&self.gauge)?)
    }
}

/// `ker π_X + ker π_Z = F_p^l`, where the columns of `π_X`, `π_Z` are the
/// x- and z-blocks of the `l` given flattened vectors.
pub(crate) fn kernel_sum_is_full(field: Field, n: usize, flat_rows: &[Vec<u32>]) -> bool {
    let l = flat_rows.len();
    if l == 0 {
        return true;
    }
    let xs: Vec<&[u32]> = flat_rows.iter().map(|v| &v[..n]).collect();
    let zs: Vec<&[u32]> = flat_rows.iter().map(|v| &v[n..]).collect();
    let pi_x = FpMatrix::from_rows(field, n, &xs).expect("valid rows").transpose();
    let pi_z = FpMatrix::from_rows(field, n, &zs).expect("valid rows").transpose();
    let sum = pi_x.kernel().sum(&pi_z.kernel()).expect("same ambient");
    sum.dim() == l
}

/// Whether a subspace of `F_p^{2n}` is a direct product `A × B`.
pub fn is_direct_product(h: &Subspace) -> bool {
    let n = h.ambient_dim() / 2;
    kernel_sum_is_full(h.field(), n, &h.basis().to_rows())
}

/// The two classical codes `(H_X, H_Z)` of a CSS code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CssSplit {
    hx: Subspace,
    hz: Subspace,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CssDistances {
    pub x: Distance,
    pub z: Distance,
    pub d: Distance,
}

impl CssSplit {
    pub fn new(hx: Subspace, hz: Subspace) -> Result<Self> {
        hx.check_compatible(&hz)?;
        Ok(CssSplit { hx, hz })
    }

    pub fn hx(&self) -> &Subspace {
        &self.hx
    }

    pub fn hz(&self) -> &Subspace {
        &self.hz
    }

    pub fn field(&self) -> Field {
        self.hx.field()
    }

    pub fn n(&self) -> usize {
        self.hx.ambient_dim()
    }

    /// `H_X + H_Z^θ`, the X-type logical operators.
    pub fn x_logical(&self) -> Subspace {
        self.hx.sum(&self.hz.theta_complement()).expect("compatible")
    }

    /// `H_Z + H_X^θ`.
    pub fn z_logical(&self) -> Subspace {
        self.hz.sum(&self.hx.theta_complement()).expect("compatible")
    }

    /// `H_X ∩ H_Z^θ`, the X-type stabilizers.
    pub fn x_stabilizer(&self) -> Subspace {
        self.hx.intersect(&self.hz.theta_complement()).expect("compatible")
    }

    /// `H_Z ∩ H_X^θ`.
    pub fn z_stabilizer(&self) -> Subspace {
        self.hz.intersect(&self.hx.theta_complement()).expect("compatible")
    }

    pub fn gauge(&self) -> Subspace {
        direct_product(&self.hx, &self.hz).expect("compatible")
    }

    pub fn to_code(&self) -> SubsystemCode {
        SubsystemCode::from_css(&self.hx, &self.hz).expect("compatible")
    }

    /// `(d^{H_X}, d^{H_Z}, min)` by weight-increasing search over single-block vectors.
    pub fn distances(&self, budget: Option<usize>) -> Result<CssDistances> {
        let budget = budget.unwrap_or(self.n()).min(self.n());
        let x = side_distance(&self.x_logical(), &self.hx, budget)?;
        let z = side_distance(&self.z_logical(), &self.hz, budget)?;
        Ok(CssDistances { x, z, d: x.min(z) })
    }
}

/// `min wt(K ∖ R)` up to `budget`; errors when `K = R`.
pub(crate) fn side_distance(code: &Subspace, redundant: &Subspace, budget: usize) -> Result<Distance> {
    if code == redundant {
        return Err(Error::NoLogicalOperators);
    }
    let in_code = code.membership_test();
    let in_redundant = redundant.membership_test();
    let alphabet = search::nonzero_patterns(code.field(), 1);
    let found = search::min_weight(code.ambient_dim(), &alphabet, budget, |v| {
        in_code.contains(v) && !in_redundant.contains(v)
    });
    Ok(Distance::from_search(found.map(|(w, _)| w), budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::search::for_each_of_weight;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_generators_give_trivial_code() {
        let c = SubsystemCode::from_generators(2, 3, &[]).unwrap();
        assert_eq!(c.parameters(), CodeParameters { n: 3, k: 3, r: 0 });
        assert_eq!(c.distance(None).unwrap(), Distance::Exact(1));
        assert!(c.is_css());
        let split = c.css_split().unwrap();
        assert!(split.hx().is_zero() && split.hz().is_zero());
    }

    #[test]
    fn mixed_generators_are_rejected() {
        let a: PauliVector = "XX".parse().unwrap();
        let b: PauliVector = "XXX".parse().unwrap();
        assert!(SubsystemCode::from_generators(2, 2, &[a.clone(), b]).is_err());
        assert_eq!(
            SubsystemCode::from_generators(3, 2, &[a]).unwrap_err(),
            Error::ModulusMismatch(3, 2)
        );
    }

    #[test]
    fn five_qubit_parameters() {
        let c = builtin::five_qubit();
        assert_eq!(c.gauge().dim(), 4);
        assert_eq!(c.parameters(), CodeParameters { n: 5, k: 1, r: 0 });
        assert_eq!(c.distance(None).unwrap(), Distance::Exact(3));
        assert_eq!(c.distance(Some(2)).unwrap(), Distance::AtLeast(3));
        assert!(!c.is_css());
        assert_eq!(c.css_split().unwrap_err(), Error::NotCss);
    }

    #[test]
    fn bacon_shor_parameters_and_distances() {
        let c = builtin::bacon_shor(4).unwrap();
        assert_eq!(c.gauge().dim(), 24);
        assert_eq!(c.parameters(), CodeParameters { n: 16, k: 1, r: 9 });
        assert!(c.is_css());
        let split = c.css_split().unwrap();
        let ds = split.distances(None).unwrap();
        assert_eq!(ds.x, Distance::Exact(4));
        assert_eq!(ds.z, Distance::Exact(4));
        assert_eq!(c.distance(None).unwrap(), ds.d);
    }

    #[test]
    fn trivial_split_distances() {
        let f = Field::new(2).unwrap();
        let split = CssSplit::new(Subspace::zero(f, 1), Subspace::zero(f, 1)).unwrap();
        let ds = split.distances(None).unwrap();
        assert_eq!((ds.x, ds.z), (Distance::Exact(1), Distance::Exact(1)));
    }

    #[test]
    fn stabilizer_free_of_logicals_errors() {
        // a full-rank stabilizer code on one qubit: H = <Z>, so H^ω = H and k = 0
        let c = SubsystemCode::from_generators(2, 1, &["Z".parse().unwrap()]).unwrap();
        assert_eq!(c.parameters().k, 0);
        assert_eq!(c.distance(None), Err(Error::NoLogicalOperators));
    }

    fn random_code(rng: &mut ChaCha8Rng, p: u32, n: usize) -> SubsystemCode {
        use rand::Rng;
        let f = Field::new(p).unwrap();
        let dim = rng.random_range(0..=2 * n);
        SubsystemCode::from_subspace(Subspace::random(f, 2 * n, dim, rng).unwrap()).unwrap()
    }

    #[test]
    fn tower_containments_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let p = if rand::Rng::random_bool(&mut rng, 0.5) { 2 } else { 3 };
            let c = random_code(&mut rng, p, 4);
            let t = c.tower();
            assert!(t.stabilizer.is_subspace_of(&t.gauge));
            assert!(t.gauge.is_subspace_of(&t.centralizer));
            let params = c.parameters();
            assert_eq!(
                t.stabilizer.dim() + 2 * params.r + 2 * params.k + (params.n - params.k - params.r),
                2 * params.n
            );
        }
    }

    #[test]
    fn css_tower_factorizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for p in [2, 3] {
            let f = Field::new(p).unwrap();
            for _ in 0..20 {
                use rand::Rng;
                let hx = Subspace::random(f, 5, rng.random_range(0..=5), &mut rng).unwrap();
                let hz = Subspace::random(f, 5, rng.random_range(0..=5), &mut rng).unwrap();
                let split = CssSplit::new(hx, hz).unwrap();
                let c = split.to_code();
                assert!(c.is_css());
                assert_eq!(c.css_split().unwrap(), split);
                let t = c.tower();
                assert_eq!(
                    t.centralizer,
                    direct_product(&split.x_logical(), &split.z_logical()).unwrap()
                );
                assert_eq!(
                    t.stabilizer,
                    direct_product(&split.x_stabilizer(), &split.z_stabilizer()).unwrap()
                );
                let params = c.parameters();
                assert_eq!(split.x_logical().dim() - split.hx().dim(), params.k);
                assert_eq!(split.z_logical().dim() - split.hz().dim(), params.k);
                assert_eq!(split.hx().dim() - split.x_stabilizer().dim(), params.r);
                assert_eq!(split.hz().dim() - split.z_stabilizer().dim(), params.r);
                if params.k > 0 {
                    assert_eq!(split.distances(None).unwrap().d, c.distance(None).unwrap());
                }
            }
        }
    }

    /// Distance by walking every vector of `F_2^{2n}`.
    fn brute_force_distance(c: &SubsystemCode) -> Option<usize> {
        let t = c.tower();
        let n = c.n();
        let mut best: Option<usize> = None;
        for bits in 1u32..(1 << (2 * n)) {
            let v: Vec<u32> = (0..2 * n).map(|i| (bits >> i) & 1).collect();
            if t.centralizer.contains(&v) && !t.gauge.contains(&v) {
                let swt = (0..n).filter(|&j| v[j] != 0 || v[n + j] != 0).count();
                best = Some(best.map_or(swt, |b| b.min(swt)));
            }
        }
        best
    }

    #[test]
    fn distance_agrees_with_full_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut checked = 0;
        for n in 2..=5 {
            for _ in 0..12 {
                let c = random_code(&mut rng, 2, n);
                match (c.distance(None), brute_force_distance(&c)) {
                    (Ok(Distance::Exact(d)), Some(b)) => {
                        assert_eq!(d, b);
                        checked += 1;
                    }
                    (Err(Error::NoLogicalOperators), None) => {}
                    other => panic!("mismatch: {other:?}"),
                }
            }
        }
        assert!(checked > 10);
    }

    #[test]
    fn is_direct_product_matches_split() {
        let f = Field::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let alphabet = search::nonzero_patterns(f, 2);
        let mut total = 0;
        for_each_of_weight(2, &alphabet, 1, |_| total += 1);
        assert_eq!(total, 6);
        for _ in 0..40 {
            let c = random_code(&mut rng, 2, 3);
            let h = c.gauge();
            let product = direct_product(&pure_x_part(h).unwrap(), &pure_z_part(h).unwrap()).unwrap();
            assert_eq!(is_direct_product(h), &product == h);
            assert_eq!(c.is_css(), &product == h);
        }
    }
}
