use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variable::{Variable, VariableSet};

use super::perm::Permutation;

/// Square matrix of polynomials with 1-based accessors.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    n: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, n: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            n,
            rows: vec![vec![Polynomial::zero(ring); n]; n],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring, n);
        for i in 1..=n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_fn(ring: &Ring, n: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        let mut m = PolyMatrix::zero(ring, n);
        for i in 1..=n {
            for j in 1..=n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        self.rows[i - 1][j - 1] = value;
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n || !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let n = self.n;
        let mut out = PolyMatrix::zero(&self.ring, n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 1..=n {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| {
                if i == j {
                    self.entry(i, j).is_one()
                } else {
                    self.entry(i, j).is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|p| p.is_zero())
    }

    /// The matrix with row `del_row` and column `del_col` removed (1-based).
    pub fn minor(&self, del_row: usize, del_col: usize) -> PolyMatrix {
        let n = self.n - 1;
        let mut out = PolyMatrix::zero(&self.ring, n);
        let mut r = 1;
        for i in 1..=self.n {
            if i == del_row {
                continue;
            }
            let mut c = 1;
            for j in 1..=self.n {
                if j == del_col {
                    continue;
                }
                out.set(r, c, self.entry(i, j).clone());
                c += 1;
            }
            r += 1;
        }
        out
    }

    /// Determinant by cofactor expansion along the first column, skipping
    /// zero entries; adequate for the sparse chart matrices used here.
    pub fn det(&self) -> Polynomial {
        if self.n == 0 {
            return Polynomial::one(&self.ring);
        }
        if self.n == 1 {
            return self.entry(1, 1).clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        for i in 1..=self.n {
            let a = self.entry(i, 1);
            if a.is_zero() {
                continue;
            }
            let cof = self.minor(i, 1).det();
            let term = a * &cof;
            if (i + 1) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }
}

/// The weight of the chart variable x_{i,j} on the w₀ chart: n+1−i−j ≥ 1.
pub fn chart_grading(n: usize, vars: &VariableSet) -> Result<Grading> {
    let mut weights = Vec::with_capacity(vars.len());
    for v in vars.iter() {
        let (i, j) = v.chart_coords().ok_or_else(|| {
            Error::InvalidGrading("chart grading needs chart variables".into())
        })?;
        let w = n as i64 + 1 - i as i64 - j as i64;
        weights.push(w);
    }
    let g = Grading::new(weights);
    g.require_positive()?;
    Ok(g)
}

/// Polynomial ring of the chart at w: variables {x_{w(i),j} : i > j} in
/// row-major order. On the w₀ chart (variables {x_{i,j} : i+j ≤ n}) the
/// positive grading weight(x_{i,j}) = n+1−i−j is attached.
pub fn chart_ring(n: usize, w: &Permutation, domain: CoeffDomain) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidPermutation("need n >= 2".into()));
    }
    if w.n() != n {
        return Err(Error::InvalidPermutation(format!(
            "permutation of [{}] does not match n = {n}",
            w.n()
        )));
    }
    let mut coords: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            coords.push((w.apply(i), j));
        }
    }
    coords.sort_unstable();
    let vars = VariableSet::new(
        coords
            .into_iter()
            .map(|(i, j)| Variable::chart(i as u32, j as u32))
            .collect(),
    )?;
    let grading = if w.is_w0() {
        Some(chart_grading(n, &vars)?)
    } else {
        None
    };
    Ring::new(vars, domain, grading)
}

/// The generic matrix parametrizing the chart at w: column j has a 1 in row
/// w(j), the variable x_{w(i),j} in row w(i) for i > j, and zeros elsewhere.
#[derive(Clone, Debug)]
pub struct ChartMatrix {
    n: usize,
    w: Permutation,
    ring: Ring,
    mat: PolyMatrix,
}

impl ChartMatrix {
    pub fn build(n: usize, w: &Permutation, domain: CoeffDomain) -> Result<ChartMatrix> {
        let ring = chart_ring(n, w, domain)?;
        let mut mat = PolyMatrix::zero(&ring, n);
        for j in 1..=n {
            mat.set(w.apply(j), j, Polynomial::one(&ring));
        }
        for i in 1..=n {
            for j in 1..i {
                let var = Variable::chart(w.apply(i) as u32, j as u32);
                let idx = ring.var_index(&var).expect("chart variable in chart ring");
                mat.set(w.apply(i), j, Polynomial::variable(&ring, idx));
            }
        }
        Ok(ChartMatrix {
            n,
            w: w.clone(),
            ring,
            mat,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.mat
    }

    /// The inverse matrix, computed through the unitriangular row
    /// normalization: with M[i][j] = (wM)[w(i)][j] lower unitriangular and
    /// L = M − 1 nilpotent, M⁻¹ = Σ_{k<n} (−L)^k and
    /// (wM)⁻¹[i][j] = M⁻¹[i][w⁻¹(j)]. The product (wM)⁻¹·(wM) is verified
    /// to be the identity before returning.
    pub fn invert(&self) -> Result<PolyMatrix> {
        let n = self.n;
        let ring = &self.ring;
        let m_norm = PolyMatrix::from_fn(ring, n, |i, j| self.mat.entry(self.w.apply(i), j).clone());
        let mut lower = m_norm.clone();
        for i in 1..=n {
            lower.set(i, i, Polynomial::zero(ring));
        }
        let mut inv_norm = PolyMatrix::identity(ring, n);
        let mut power = PolyMatrix::identity(ring, n);
        for k in 1..n {
            power = power.mul(&lower)?;
            if power.is_zero() {
                break;
            }
            for i in 1..=n {
                for j in 1..=n {
                    let term = power.entry(i, j);
                    if term.is_zero() {
                        continue;
                    }
                    let cur = inv_norm.entry(i, j).clone();
                    let next = if k % 2 == 1 { &cur - term } else { &cur + term };
                    inv_norm.set(i, j, next);
                }
            }
        }
        let winv = self.w.inverse();
        let inv = PolyMatrix::from_fn(ring, n, |i, j| inv_norm.entry(i, winv.apply(j)).clone());
        let product = inv.mul(&self.mat)?;
        if !product.is_identity() {
            return Err(Error::CheckFailed {
                context: format!("invert chart matrix n={n} w={}", self.w),
                check: "inverse times matrix is the identity".into(),
            });
        }
        Ok(inv)
    }

    /// Entry y_{i,j} of the inverse on the w₀ chart, read off at matrix
    /// position (n+1−i, n+1−j).
    pub fn y_entry(inv: &PolyMatrix, i: usize, j: usize) -> &Polynomial {
        let n = inv.n();
        inv.entry(n + 1 - i, n + 1 - j)
    }

    /// Independent oracle for y_{i,j} on the w₀ chart: the signed cofactor
    /// (−1)^{n(n−1)/2}(−1)^{i+j} det of the matrix with row n+1−j and
    /// column n+1−i removed.
    pub fn cofactor_y(&self, i: usize, j: usize) -> Result<Polynomial> {
        if !self.w.is_w0() {
            return Err(Error::Unsupported(
                "cofactor formula stated on the w0 chart only".into(),
            ));
        }
        let n = self.n;
        if i < 1 || i > n || j < 1 || j > n {
            return Err(Error::IndexOutOfRange(format!("(i,j) = ({i},{j})")));
        }
        let det = self.mat.minor(n + 1 - j, n + 1 - i).det();
        let sign = (n * (n - 1) / 2 + i + j) % 2 == 0;
        Ok(if sign { det } else { -&det })
    }

    /// The conjugated single-Jordan-block nilpotent (wM)⁻¹·𝖭·(wM): its
    /// entries below the Hessenberg staircase generate the patch ideal.
    pub fn conjugated_nilpotent(&self) -> Result<PolyMatrix> {
        let inv = self.invert()?;
        let nil = nilpotent_matrix(&self.ring, self.n);
        inv.mul(&nil)?.mul(&self.mat)
    }
}

/// The n×n single Jordan block with eigenvalue 0: ones immediately above
/// the diagonal, zeros elsewhere.
pub fn nilpotent_matrix(ring: &Ring, n: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zero(ring, n);
    for i in 1..n {
        m.set(i, i + 1, Polynomial::one(ring));
    }
    m
}
