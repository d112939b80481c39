//! Spectral radius computation: floating-point power iteration with a
//! certified stopping rule, and the exact route through equitable-partition
//! quotient matrices.

use crate::error::{Error, Result};
use crate::exact::matrix::IntMatrix;
use crate::exact::roots::largest_real_root;
use crate::graph::{CompositionVector, Graph};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Default convergence tolerance for power iteration.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Hard cap on power-iteration steps before reporting failure.
pub const MAX_POWER_ITERATIONS: u64 = 1_000_000;

/// Converged spectral radius with its Perron vector and convergence evidence.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    pub radius: f64,
    /// Unit-norm nonnegative eigenvector (entrywise positive for connected
    /// graphs on at least two vertices).
    pub eigenvector: Vec<f64>,
    pub iterations: u64,
    /// Final `max_i |(A x)_i - radius * x_i|`.
    pub residual: f64,
}

// Machine format: radius as a 12-significant-digit decimal string so parsers
// with float-precision quirks still read a stable value.
impl Serialize for SpectralResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectralResult", 3)?;
        st.serialize_field("radius", &format_significant(self.radius, 12))?;
        st.serialize_field("iterations", &self.iterations)?;
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// Render `x` with the given number of significant digits, plain decimal.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - mag;
    if decimals <= 0 {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (x / scale).round() * scale)
    } else {
        format!("{:.*}", decimals as usize, x)
    }
}

/// Spectral radius of a connected graph by shifted power iteration.
///
/// Iterates `x <- normalize((A + I) x)` (the shift keeps bipartite spectra
/// from oscillating) and stops once the Rayleigh quotient moves by less than
/// `tol` *and* the residual `|A x - rho x|_inf` is below `10 * tol`. The
/// residual bound makes the error in `rho` itself at most `sqrt(n) * 10 *
/// tol` for symmetric `A`, independent of the spectral gap.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive and finite".into()));
    }
    if g.n() == 0 {
        return Err(Error::InvalidArgument("spectral radius of the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(SpectralResult { radius: 0.0, eigenvector: vec![1.0], iterations: 0, residual: 0.0 });
    }
    let neigh: Vec<Vec<u32>> = (0..n)
        .map(|u| g.neighbors(u).map(|v| v as u32).collect())
        .collect();
    let mut v = vec![(n as f64).sqrt().recip(); n];
    let mut av = vec![0.0f64; n];
    let mut rho_prev = f64::INFINITY;
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_POWER_ITERATIONS {
        for (u, row) in neigh.iter().enumerate() {
            av[u] = row.iter().map(|&w| v[w as usize]).sum();
        }
        let rho: f64 = v.iter().zip(&av).map(|(a, b)| a * b).sum();
        residual = av
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - rho * b).abs())
            .fold(0.0, f64::max);
        if (rho - rho_prev).abs() < tol && residual < 10.0 * tol {
            debug_assert!(v.iter().all(|&x| x >= 0.0));
            return Ok(SpectralResult { radius: rho, eigenvector: v, iterations: it, residual });
        }
        rho_prev = rho;
        let mut norm2 = 0.0;
        for i in 0..n {
            av[i] += v[i];
            norm2 += av[i] * av[i];
        }
        let inv = norm2.sqrt().recip();
        for i in 0..n {
            v[i] = av[i] * inv;
        }
    }
    Err(Error::ConvergenceFailure { iterations: MAX_POWER_ITERATIONS, residual })
}

/// Rayleigh quotient `x^T A x` of a unit vector (within `1e-12` of unit norm).
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: x.len() });
    }
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitVector { norm });
    }
    let mut acc = 0.0;
    for (u, v) in g.edges() {
        acc += 2.0 * x[u] * x[v];
    }
    Ok(acc)
}

/// Partition of the vertex set `0..n` into non-empty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        let mut covered = 0;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {ci} is empty")));
            }
            for &u in cell {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, order: n });
                }
                if seen[u] {
                    return Err(Error::InvalidPartition(format!("vertex {u} appears twice")));
                }
                seen[u] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!("covers {covered} of {n} vertices")));
        }
        Ok(Partition { n, cells })
    }

    /// The discrete partition: every vertex in its own cell.
    pub fn singletons(n: usize) -> Partition {
        Partition { n, cells: (0..n).map(|u| vec![u]).collect() }
    }

    /// Natural partition of a blow-up: cell `i` holds the copies of base
    /// vertex `i` (consecutive blocks in the block vertex ordering).
    pub fn from_blowup(m: &CompositionVector) -> Partition {
        let offsets = m.offsets();
        let cells = (0..m.len()).map(|i| (offsets[i]..offsets[i + 1]).collect()).collect();
        Partition { n: m.total(), cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

/// Integer quotient matrix of an equitable partition: entry `(i, j)` is the
/// number of neighbors a vertex of cell `i` has inside cell `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    k: usize,
    entries: Vec<i64>,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.k + j]
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.k, self.k, |i, j| self.get(i, j))
    }

    /// Characteristic polynomial (exact, generally non-symmetric matrix).
    pub fn charpoly(&self) -> crate::exact::poly::IntPolynomial {
        self.to_int_matrix().charpoly().expect("square by construction")
    }
}

/// Is the partition equitable for `g` (row sums constant on every block)?
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    if p.n() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: p.n() });
    }
    Ok(equitable_violation(g, p).is_none())
}

fn equitable_violation(g: &Graph, p: &Partition) -> Option<(usize, usize)> {
    for (i, cell_i) in p.cells().iter().enumerate() {
        for (j, cell_j) in p.cells().iter().enumerate() {
            let count = |u: usize| cell_j.iter().filter(|&&v| g.has_edge(u, v)).count();
            let first = count(cell_i[0]);
            if cell_i.iter().skip(1).any(|&u| count(u) != first) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Quotient matrix of an equitable partition; errors if not equitable.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    if p.n() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: p.n() });
    }
    if let Some((cell_i, cell_j)) = equitable_violation(g, p) {
        return Err(Error::NotEquitable { cell_i, cell_j });
    }
    let k = p.cell_count();
    let mut entries = vec![0i64; k * k];
    for (i, cell_i) in p.cells().iter().enumerate() {
        let u = cell_i[0];
        for (j, cell_j) in p.cells().iter().enumerate() {
            entries[i * k + j] = cell_j.iter().filter(|&&v| g.has_edge(u, v)).count() as i64;
        }
    }
    Ok(QuotientMatrix { k, entries })
}

/// Quotient matrix of the natural blow-up partition, built directly from the
/// base: entry `(i, j)` is `m_j` when `ij` is a base edge, else 0.
///
/// The natural partition is always equitable, and the blow-up's spectrum is
/// the quotient's spectrum plus zeros: vectors constant on blocks reproduce
/// the quotient's action, while vectors summing to zero on each block are
/// annihilated. In particular the spectral radius of the blow-up equals the
/// largest real eigenvalue of this matrix.
pub fn blowup_quotient(base: &Graph, m: &CompositionVector) -> Result<QuotientMatrix> {
    if m.len() != base.n() {
        return Err(Error::LengthMismatch { expected: base.n(), got: m.len() });
    }
    let k = base.n();
    let mut entries = vec![0i64; k * k];
    for i in 0..k {
        for j in 0..k {
            if base.has_edge(i, j) {
                entries[i * k + j] = m.parts()[j] as i64;
            }
        }
    }
    #[cfg(debug_assertions)]
    {
        let big = base.blow_up(m).expect("length checked");
        let generic = quotient_matrix(&big, &Partition::from_blowup(m))
            .expect("natural blow-up partition is equitable");
        debug_assert_eq!(generic.entries, entries, "direct quotient must match generic path");
    }
    Ok(QuotientMatrix { k, entries })
}

/// Spectral radius of `base` blown up by `m`, via the exact quotient route:
/// the largest real root of the quotient characteristic polynomial, isolated
/// to 1e-12. Never runs power iteration on the non-symmetric quotient.
pub fn quotient_radius(base: &Graph, m: &CompositionVector) -> Result<f64> {
    let q = blowup_quotient(base, m)?;
    largest_real_root(&q.charpoly(), 1e-12)
}

/// Edge-count bound on the spectral radius of a connected graph:
/// `sqrt(2m - n + 1)`, attained exactly by stars and complete graphs.
pub fn edge_count_bound(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("bound undefined for the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let val = 2.0 * g.edge_count() as f64 - g.n() as f64 + 1.0;
    debug_assert!(val >= 0.0, "connected graphs have m >= n - 1");
    Ok(val.sqrt())
}

/// Closed form for the spectral radius of the Turán graph `T(n, r)`:
/// `(n - 2*floor(n/r) - 1 + sqrt((n+1)^2 - 4*(n - r*floor(n/r))*ceil(n/r))) / 2`.
pub fn turan_radius_closed_form(n: usize, r: usize) -> Result<f64> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidArgument("need n >= 1 and r >= 1".into()));
    }
    let nf = n as f64;
    let fl = (n / r) as f64;
    let ce = n.div_ceil(r) as f64;
    let disc = (nf + 1.0) * (nf + 1.0) - 4.0 * (nf - r as f64 * fl) * ce;
    Ok((nf - 2.0 * fl - 1.0 + disc.sqrt()) / 2.0)
}
