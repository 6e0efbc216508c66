//! Dense square matrices and a cyclic Jacobi eigensolver for the symmetric
//! case.

use crate::error::{Error, Result};

/// Row-major dense square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix rows must form a square".into()));
        }
        Ok(Matrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> Matrix {
        self.map(|x| x * factor)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let bound = tol * (1.0 + self.max_abs());
        (0..self.n).all(|i| (i + 1..self.n).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= bound))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0.0)
    }

    /// `P M P` with `P = I - (1/n) 11^T`.
    pub fn centered(&self) -> Matrix {
        let n = self.n;
        if n == 0 {
            return self.clone();
        }
        let nf = n as f64;
        let row_means: Vec<f64> = (0..n).map(|i| self.row(i).iter().sum::<f64>() / nf).collect();
        let col_means: Vec<f64> = (0..n)
            .map(|j| (0..n).map(|i| self.get(i, j)).sum::<f64>() / nf)
            .collect();
        let total = row_means.iter().sum::<f64>() / nf;
        Matrix::from_fn(n, |i, j| self.get(i, j) - row_means[i] - col_means[j] + total)
    }
}

/// Off-diagonal threshold, relative to the Frobenius norm, below which the
/// Jacobi iteration stops.
pub const JACOBI_TOLERANCE: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix in ascending order, by cyclic Jacobi
/// rotations. Iterates until every off-diagonal entry is below
/// [`JACOBI_TOLERANCE`] times the Frobenius norm.
pub fn symmetric_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    if !m.is_symmetric(1e-12) {
        return Err(Error::NotSymmetric);
    }
    let n = m.size();
    let mut a = m.clone();
    // Enforce exact symmetry; the rotations below keep it.
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }
    let threshold = JACOBI_TOLERANCE * a.frobenius_norm();

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .fold(0.0f64, |acc, (i, j)| acc.max(a.get(i, j).abs()));
        if off < threshold || off == 0.0 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a.get(p, q).abs() >= threshold {
                    rotate(&mut a, p, q);
                }
            }
        }
    }
    if !converged {
        return Err(Error::Consistency(format!(
            "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Annihilates `a[p][q]` with a Givens rotation applied on both sides.
fn rotate(a: &mut Matrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.n;
    let (rp, rq) = (p * n, q * n);
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a.data[rp + r];
        let arq = a.data[rq + r];
        let new_p = c * arp - s * arq;
        let new_q = s * arp + c * arq;
        a.data[rp + r] = new_p;
        a.data[rq + r] = new_q;
        a.data[r * n + p] = new_p;
        a.data[r * n + q] = new_q;
    }
    a.data[rp + p] = app - t * apq;
    a.data[rq + q] = aqq + t * apq;
    a.data[rp + q] = 0.0;
    a.data[rq + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn diagonal_spectrum() {
        let m = Matrix::from_fn(4, |i, j| if i == j { [3.0, -1.0, 0.5, 2.0][i] } else { 0.0 });
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!(close(&ev, &[-1.0, 0.5, 2.0, 3.0], 1e-14));
    }

    #[test]
    fn two_by_two_closed_forms() {
        let e = (-1.0f64).exp();
        let m = Matrix::from_rows(&[vec![1.0, e], vec![e, 1.0]]).unwrap();
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[1.0 - e, 1.0 + e], 1e-14));
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[-1.0, 1.0], 1e-14));
        // [[a, b], [b, d]]: (a + d)/2 -+ sqrt(((a - d)/2)^2 + b^2)
        let (a, b, d) = (2.0, -3.0, 7.0);
        let m = Matrix::from_rows(&[vec![a, b], vec![b, d]]).unwrap();
        let r = (((a - d) / 2.0f64).powi(2) + b * b).sqrt();
        assert!(close(
            &symmetric_eigenvalues(&m).unwrap(),
            &[(a + d) / 2.0 - r, (a + d) / 2.0 + r],
            1e-13
        ));
    }

    #[test]
    fn rank_one_spectrum() {
        let v = [1.0, -2.0, 0.5, 3.0, 1.5];
        let m = Matrix::from_fn(5, |i, j| v[i] * v[j]);
        let norm2: f64 = v.iter().map(|x| x * x).sum();
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!(close(&ev, &[0.0, 0.0, 0.0, 0.0, norm2], 1e-12));
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(symmetric_eigenvalues(&m), Err(Error::NotSymmetric));
    }

    #[test]
    fn centering_annihilates_constants() {
        let m = Matrix::from_fn(3, |i, j| (i + 2 * j) as f64);
        let c = m.centered();
        for i in 0..3 {
            assert!(c.row(i).iter().sum::<f64>().abs() < 1e-12);
        }
    }

    #[test]
    fn empty_and_singleton() {
        assert!(symmetric_eigenvalues(&Matrix::zeros(0)).unwrap().is_empty());
        assert_eq!(symmetric_eigenvalues(&Matrix::identity(1)).unwrap(), vec![1.0]);
    }
}
