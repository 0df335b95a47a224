//! Goursat data of a gauge space and the stabilizer taxonomy built on it.
//!
//! `H ≤ G × G` is determined by its external code `E_X × E_Z` (the two
//! projections), its internal code `N_X × N_Z` (the pure X and pure Z parts), and
//! an isomorphism `φ: E_X/N_X → E_Z/N_Z`. `φ` is carried as a list of matched
//! coset representatives.

use std::fmt;

use crate::code::{is_direct_product, SubsystemCode};
use crate::error::{Error, Result};
use crate::gf::{Field, FpMatrix, Subspace};
use crate::symplectic::{direct_product, PauliVector};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoursatData {
    ex: Subspace,
    ez: Subspace,
    nx: Subspace,
    nz: Subspace,
    phi_pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

impl GoursatData {
    /// Validates `N_X ≤ E_X`, `N_Z ≤ E_Z`, and that the pairs are independent
    /// representatives spanning both quotients.
    pub fn new(
        ex: Subspace,
        ez: Subspace,
        nx: Subspace,
        nz: Subspace,
        phi_pairs: Vec<(Vec<u32>, Vec<u32>)>,
    ) -> Result<Self> {
        for s in [&ez, &nx, &nz] {
            ex.check_compatible(s)?;
        }
        if !nx.is_subspace_of(&ex) || !nz.is_subspace_of(&ez) {
            return Err(Error::InvalidGoursatData(
                "internal code is not inside the external code".into(),
            ));
        }
        let m = phi_pairs.len();
        if ex.dim() - nx.dim() != m || ez.dim() - nz.dim() != m {
            return Err(Error::InvalidGoursatData(format!(
                "{m} pairs for quotients of dimension {} and {}",
                ex.dim() - nx.dim(),
                ez.dim() - nz.dim()
            )));
        }
        let (xs, zs): (Vec<Vec<u32>>, Vec<Vec<u32>>) = phi_pairs.iter().cloned().unzip();
        for (side, reps, inner, outer) in [("X", &xs, &nx, &ex), ("Z", &zs, &nz, &ez)] {
            let spanned = inner.sum(&Subspace::span(ex.field(), ex.ambient_dim(), reps)?)?;
            if spanned.dim() != inner.dim() + m {
                return Err(Error::InvalidGoursatData(format!(
                    "{side} representatives are dependent modulo N_{side}"
                )));
            }
            if &spanned != outer {
                return Err(Error::InvalidGoursatData(format!(
                    "{side} representatives leave E_{side}"
                )));
            }
        }
        Ok(GoursatData {
            ex,
            ez,
            nx,
            nz,
            phi_pairs,
        })
    }

    pub fn ex(&self) -> &Subspace {
        &self.ex
    }

    pub fn ez(&self) -> &Subspace {
        &self.ez
    }

    pub fn nx(&self) -> &Subspace {
        &self.nx
    }

    pub fn nz(&self) -> &Subspace {
        &self.nz
    }

    pub fn phi_pairs(&self) -> &[(Vec<u32>, Vec<u32>)] {
        &self.phi_pairs
    }

    pub fn field(&self) -> Field {
        self.ex.field()
    }

    pub fn n(&self) -> usize {
        self.ex.ambient_dim()
    }

    /// `E_X × E_Z`.
    pub fn external(&self) -> Subspace {
        direct_product(&self.ex, &self.ez).expect("compatible")
    }

    /// `N_X × N_Z`.
    pub fn internal(&self) -> Subspace {
        direct_product(&self.nx, &self.nz).expect("compatible")
    }

    /// A representative of `φ(e + N_X)`, or `None` when `e ∉ E_X`.
    pub fn phi(&self, e: &[u32]) -> Option<Vec<u32>> {
        let f = self.field();
        let n = self.n();
        let mut columns: Vec<&[u32]> = self.phi_pairs.iter().map(|(x, _)| x.as_slice()).collect();
        columns.extend(self.nx.basis_vectors());
        let m = self.phi_pairs.len();
        let a = FpMatrix::from_rows(f, n, &columns).ok()?.transpose();
        let coeffs = a.solve(e)?;
        let mut out = vec![0u32; n];
        for (c, (_, z)) in coeffs[..m].iter().zip(&self.phi_pairs) {
            f.axpy(&mut out, *c, z);
        }
        Some(self.nz.reduce(&out))
    }
}

impl fmt::Display for GoursatData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "E_X (dim {}):\n{}", self.ex.dim(), self.ex)?;
        writeln!(f, "E_Z (dim {}):\n{}", self.ez.dim(), self.ez)?;
        writeln!(f, "N_X (dim {}):\n{}", self.nx.dim(), self.nx)?;
        writeln!(f, "N_Z (dim {}):\n{}", self.nz.dim(), self.nz)?;
        writeln!(f, "phi pairs ({}):", self.phi_pairs.len())?;
        let field = self.field();
        for (x, z) in &self.phi_pairs {
            let xv = PauliVector::x_type(field, x.clone()).expect("valid");
            let zv = PauliVector::z_type(field, z.clone()).expect("valid");
            writeln!(f, "  {xv} -> {zv}")?;
        }
        Ok(())
    }
}

/// Goursat data read off the generator matrices `π_X`, `π_Z` (columns are the
/// generators' x- and z-blocks). Pairs come from a greedy scan of generators
/// in input order.
pub fn goursat_of(code: &SubsystemCode) -> GoursatData {
    goursat_of_generators(code.field(), code.n(), code.generators())
}

fn goursat_of_generators(field: Field, n: usize, gens: &[PauliVector]) -> GoursatData {
    let xs: Vec<&[u32]> = gens.iter().map(PauliVector::x).collect();
    let zs: Vec<&[u32]> = gens.iter().map(PauliVector::z).collect();
    let ex = Subspace::span(field, n, &xs).expect("valid rows");
    let ez = Subspace::span(field, n, &zs).expect("valid rows");
    let (nx, nz) = if gens.is_empty() {
        (Subspace::zero(field, n), Subspace::zero(field, n))
    } else {
        let pi_x = FpMatrix::from_rows(field, n, &xs).expect("valid rows").transpose();
        let pi_z = FpMatrix::from_rows(field, n, &zs).expect("valid rows").transpose();
        (image_of(&pi_x, &pi_z.kernel()), image_of(&pi_z, &pi_x.kernel()))
    };
    let mut covered = nx.clone();
    let mut phi_pairs = Vec::new();
    for g in gens {
        if covered.dim() == ex.dim() {
            break;
        }
        if !covered.contains(g.x()) {
            covered = covered
                .sum(&Subspace::span(field, n, &[g.x()]).expect("valid"))
                .expect("compatible");
            phi_pairs.push((g.x().to_vec(), g.z().to_vec()));
        }
    }
    GoursatData::new(ex, ez, nx, nz, phi_pairs).expect("data read from a subspace is consistent")
}

fn image_of(map: &FpMatrix, domain: &Subspace) -> Subspace {
    let images: Vec<Vec<u32>> = domain
        .basis_vectors()
        .map(|v| map.mul_vec(v).expect("matching length"))
        .collect();
    Subspace::span(map.field(), map.rows(), &images).expect("valid rows")
}

/// `H = span{(e_X^j, e_Z^j)} + (N_X × 0) + (0 × N_Z)`.
pub fn reconstruct_from(g: &GoursatData) -> SubsystemCode {
    let field = g.field();
    let rows: Vec<Vec<u32>> = g
        .phi_pairs
        .iter()
        .map(|(x, z)| [x.as_slice(), z.as_slice()].concat())
        .collect();
    let pairs = Subspace::span(field, 2 * g.n(), &rows).expect("valid rows");
    let h = pairs.sum(&g.internal()).expect("compatible");
    SubsystemCode::from_subspace(h).expect("even ambient")
}

/// Named outcome of one subspace comparison inside a data check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub dims: (usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DataReport {
    pub checks: Vec<Check>,
}

impl DataReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn equal(&mut self, name: &'static str, got: &Subspace, want: &Subspace) {
        self.checks.push(Check {
            name,
            passed: got == want,
            dims: (got.dim(), want.dim()),
        });
    }

    fn within(&mut self, name: &'static str, small: &Subspace, big: &Subspace) {
        self.checks.push(Check {
            name,
            passed: small.is_subspace_of(big),
            dims: (small.dim(), big.dim()),
        });
    }
}

impl fmt::Display for DataReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "{mark:4} {} (dims {} / {})", c.name, c.dims.0, c.dims.1)?;
        }
        Ok(())
    }
}

fn goursat_of_subspace(h: &Subspace) -> GoursatData {
    goursat_of(&SubsystemCode::from_subspace(h.clone()).expect("even ambient"))
}

/// Compares the Goursat data of `H^ω` with the θ-complements of the data of `H`.
pub fn check_complement_data(code: &SubsystemCode) -> DataReport {
    let g = goursat_of(code);
    let w = goursat_of_subspace(&code.tower().gauge_preserving);
    let mut report = DataReport { checks: Vec::new() };
    report.equal("E_X(H^w) = N_Z^theta", &w.ex, &g.nz.theta_complement());
    report.equal("E_Z(H^w) = N_X^theta", &w.ez, &g.nx.theta_complement());
    report.equal("N_X(H^w) = E_Z^theta", &w.nx, &g.ez.theta_complement());
    report.equal("N_Z(H^w) = E_X^theta", &w.nz, &g.ex.theta_complement());
    report
}

/// Checks the Goursat data of `H ∩ H̃`: its internal code is the intersection of
/// the internal codes, and its external code `T × W` lies between the internal
/// and external intersections.
pub fn check_intersection_data(c1: &SubsystemCode, c2: &SubsystemCode) -> Result<DataReport> {
    let inter = c1.gauge().intersect(c2.gauge())?;
    let (g, h) = (goursat_of(c1), goursat_of(c2));
    let i = goursat_of_subspace(&inter);
    let nx = g.nx.intersect(&h.nx)?;
    let nz = g.nz.intersect(&h.nz)?;
    let mut report = DataReport { checks: Vec::new() };
    report.equal("N_X(cap) = N_X cap N~_X", &i.nx, &nx);
    report.equal("N_Z(cap) = N_Z cap N~_Z", &i.nz, &nz);
    report.within("N_X cap N~_X <= T", &nx, &i.ex);
    report.within("T <= E_X cap E~_X", &i.ex, &g.ex.intersect(&h.ex)?);
    report.within("N_Z cap N~_Z <= W", &nz, &i.ez);
    report.within("W <= E_Z cap E~_Z", &i.ez, &g.ez.intersect(&h.ez)?);
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StabilizerClass {
    pub minimal: bool,
    pub maximal: bool,
}

impl StabilizerClass {
    /// Region of the max/min Venn diagram.
    pub fn region(&self) -> &'static str {
        match (self.maximal, self.minimal) {
            (true, true) => "maximal and minimal (CSS)",
            (true, false) => "maximal, not minimal",
            (false, true) => "minimal, not maximal",
            (false, false) => "neither maximal nor minimal",
        }
    }
}

impl fmt::Display for StabilizerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.region())
    }
}

/// External code `T × W` of the stabilizer `H ∩ H^ω`.
fn stabilizer_external(code: &SubsystemCode) -> (Subspace, Subspace) {
    let s = goursat_of_subspace(&code.tower().stabilizer);
    (s.ex, s.ez)
}

pub fn classify_stabilizer(code: &SubsystemCode) -> StabilizerClass {
    let g = goursat_of(code);
    let (t, w) = stabilizer_external(code);
    let top_x = g.ex.intersect(&g.nz.theta_complement()).expect("compatible");
    let top_z = g.ez.intersect(&g.nx.theta_complement()).expect("compatible");
    StabilizerClass {
        minimal: is_direct_product(&code.tower().centralizer),
        maximal: t == top_x && w == top_z,
    }
}

/// The five equivalent characterizations of minimal stabilizer, in order:
/// `T × W` is the smallest allowed; `H + H^ω` is a direct product; `H ∩ H^ω` is a
/// direct product; `H + H^ω = (E_X + N_Z^θ) × (E_Z + N_X^θ)`;
/// `H ∩ H^ω = (N_X ∩ E_Z^θ) × (N_Z ∩ E_X^θ)`.
pub fn minimal_conditions(code: &SubsystemCode) -> [bool; 5] {
    let g = goursat_of(code);
    let tower = code.tower();
    let (t, w) = stabilizer_external(code);
    let low_x = g.nx.intersect(&g.ez.theta_complement()).expect("compatible");
    let low_z = g.nz.intersect(&g.ex.theta_complement()).expect("compatible");
    let high_x = g.ex.sum(&g.nz.theta_complement()).expect("compatible");
    let high_z = g.ez.sum(&g.nx.theta_complement()).expect("compatible");
    [
        t == low_x && w == low_z,
        is_direct_product(&tower.centralizer),
        is_direct_product(&tower.stabilizer),
        tower.centralizer == direct_product(&high_x, &high_z).expect("compatible"),
        tower.stabilizer == direct_product(&low_x, &low_z).expect("compatible"),
    ]
}
