//! Small dense and tridiagonal linear algebra.

use num_traits::Float;
use crate::dd::CDd;
use crate::error::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

const MAX_SWEEPS: usize = 60;

/// Implicit QL on a symmetric tridiagonal matrix. `d` is the diagonal,
/// `e[i]` couples i and i+1 (`e.len() == d.len()`, last entry ignored).
/// On return `d` holds the eigenvalues, unsorted. If `z` is given it must
/// start as a row vector; it is transformed like the first row of the
/// eigenvector matrix.
fn ql_implicit(d: &mut [f64], e: &mut [f64], mut z: Option<&mut [f64]>) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * 0.5 * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::EigensolveFailure { iterations: iter });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = (g * g + 1.0).sqrt();
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = (f * f + g * g).sqrt();
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    let f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of [[a, b], [b, c]], larger modulus first.
fn eig2(a: f64, b: f64, c: f64) -> (f64, f64) {
    let sm = a + c;
    let df = a - c;
    let adf = df.abs();
    let ab = (2.0 * b).abs();
    let (acmx, acmn) = if a.abs() > c.abs() { (a, c) } else { (c, a) };
    let rt = if adf > ab {
        adf * (1.0 + (ab / adf) * (ab / adf)).sqrt()
    } else if adf < ab {
        ab * (1.0 + (adf / ab) * (adf / ab)).sqrt()
    } else {
        ab * core::f64::consts::SQRT_2
    };
    if sm != 0.0 {
        let rt1 = 0.5 * (sm + if sm < 0.0 { -rt } else { rt });
        (rt1, (acmx / rt1) * acmn - (b / rt1) * b)
    } else {
        (0.5 * rt, -0.5 * rt)
    }
}

/// Root-free implicit QL (Pal-Walker-Kahan), eigenvalues only. `e2` holds
/// the squared off-diagonal entries.
fn ql_root_free(d: &mut [f64], e2: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e2[n - 1] = 0.0;
    let eps = f64::EPSILON * 0.5;
    let mut l = 0;
    let mut iter = 0;
    while l < n {
        let mut m = l;
        while m + 1 < n {
            let t = eps * (d[m].abs() + d[m + 1].abs());
            if e2[m] <= t * t {
                break;
            }
            m += 1;
        }
        if m < n - 1 {
            e2[m] = 0.0;
        }
        if m == l {
            l += 1;
            iter = 0;
            continue;
        }
        if m == l + 1 {
            let (r1, r2) = eig2(d[l], e2[l].sqrt(), d[l + 1]);
            d[l] = r1;
            d[l + 1] = r2;
            e2[l] = 0.0;
            l += 2;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > MAX_SWEEPS {
            return Err(Error::EigensolveFailure { iterations: iter });
        }
        let p0 = d[l];
        let rte = e2[l].sqrt();
        let mut sigma = (d[l + 1] - p0) / (2.0 * rte);
        let r = (sigma * sigma + 1.0).sqrt();
        sigma = p0 - rte / (sigma + if sigma >= 0.0 { r } else { -r });
        let mut c = 1.0;
        let mut s = 0.0;
        let mut gamma = d[m] - sigma;
        let mut p = gamma * gamma;
        let mut i = m;
        while i > l {
            i -= 1;
            let bb = e2[i];
            let r = p + bb;
            if i != m - 1 {
                e2[i + 1] = s * r;
            }
            let oldc = c;
            c = p / r;
            s = bb / r;
            let oldgam = gamma;
            let alpha = d[i];
            gamma = c * (alpha - sigma) - s * oldgam;
            d[i + 1] = oldgam + (alpha - gamma);
            p = if c != 0.0 { gamma * gamma / c } else { oldc * bb };
        }
        e2[l] = s * p;
        d[l] = sigma + gamma;
    }
    Ok(())
}

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (`off.len() + 1 == diag.len()`).
pub fn tridiag_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let mut d = diag.to_vec();
    let mut e2: Vec<f64> = off.iter().map(|x| x * x).collect();
    e2.push(0.0);
    ql_root_free(&mut d, &mut e2)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Eigenvalues (ascending) with the squared first components of the
/// normalized eigenvectors.
pub fn tridiag_eigen_first(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }
    ql_implicit(&mut d, &mut e, Some(&mut z))?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok((idx.iter().map(|&i| d[i]).collect(), idx.iter().map(|&i| z[i] * z[i]).collect()))
}

/// Gauss rule for the probability measure whose monic orthogonal polynomials
/// satisfy p_{k+1} = (x - a_k) p_k - b_k p_{k-1}. `a` has the N recurrence
/// centers, `b` the N-1 coefficients b_1..b_{N-1}.
pub fn golub_welsch(a: &[f64], b: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let off: Vec<f64> = b.iter().map(|v| v.sqrt()).collect();
    tridiag_eigen_first(a, &off)
}

/// Householder reduction of a dense symmetric matrix (row-major, n x n) to
/// tridiagonal form; returns (diagonal, off-diagonal).
pub fn householder_tridiagonal(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let at = |a: &Vec<f64>, i: usize, j: usize| a[i * n + j];
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let mut norm = 0.0;
        for i in k + 1..n {
            norm += at(&a, i, k) * at(&a, i, k);
        }
        let norm = norm.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = at(&a, k + 1, k);
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        for i in 0..n {
            v[i] = 0.0;
        }
        for i in k + 1..n {
            v[i] = at(&a, i, k);
        }
        v[k + 1] -= alpha;
        let vn: f64 = v[k + 1..].iter().map(|x| x * x).sum::<f64>().sqrt();
        if vn == 0.0 {
            continue;
        }
        for x in v[k + 1..].iter_mut() {
            *x /= vn;
        }
        for i in k..n {
            w[i] = (k + 1..n).map(|j| at(&a, i, j) * v[j]).sum();
        }
        let vw: f64 = (k + 1..n).map(|i| v[i] * w[i]).sum();
        for i in k..n {
            w[i] -= vw * v[i];
        }
        for i in k..n {
            for j in k..n {
                a[i * n + j] -= 2.0 * (v[i] * w[j] + w[i] * v[j]);
            }
        }
    }
    let d = (0..n).map(|i| at(&a, i, i)).collect();
    let e = (0..n.saturating_sub(1)).map(|i| at(&a, i + 1, i)).collect();
    (d, e)
}

/// Eigenvalues (ascending) of a dense complex Hermitian matrix (row-major),
/// through the real symmetric embedding [[A, -B], [B, A]].
pub fn hermitian_eigenvalues(h: &[Complex64], n: usize) -> Result<Vec<f64>> {
    let m = 2 * n;
    let mut r = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = h[i * n + j];
            r[i * m + j] = z.re;
            r[(i + n) * m + j + n] = z.re;
            r[i * m + j + n] = -z.im;
            r[(i + n) * m + j] = z.im;
        }
    }
    let (d, e) = householder_tridiagonal(r, m);
    let all = tridiag_eigenvalues(&d, &e)?;
    Ok(all.iter().step_by(2).copied().collect())
}

/// Determinant by LU with partial pivoting, plus the ratio of the largest
/// to the smallest pivot modulus as a cheap conditioning indicator.
pub fn complex_det(mut a: Vec<Complex64>, n: usize) -> (Complex64, f64) {
    let mut det = Complex64::new(1.0, 0.0);
    let mut pmax = 0.0f64;
    let mut pmin = f64::INFINITY;
    for k in 0..n {
        let mut p = k;
        for i in k + 1..n {
            if a[i * n + k].norm() > a[p * n + k].norm() {
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let piv = a[k * n + k];
        pmax = pmax.max(piv.norm());
        pmin = pmin.min(piv.norm());
        det *= piv;
        if piv.norm() == 0.0 {
            return (Complex64::new(0.0, 0.0), f64::INFINITY);
        }
        for i in k + 1..n {
            let l = a[i * n + k] / piv;
            for j in k + 1..n {
                let u = a[k * n + j];
                a[i * n + j] -= l * u;
            }
        }
    }
    (det, if n == 0 { 1.0 } else { pmax / pmin })
}

/// Determinant in complex double-double, LU with partial pivoting.
pub fn complex_det_dd(mut a: Vec<CDd>, n: usize) -> CDd {
    let mut det = CDd::ONE;
    for k in 0..n {
        let mut p = k;
        for i in k + 1..n {
            if a[i * n + k].abs_f64() > a[p * n + k].abs_f64() {
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let piv = a[k * n + k];
        det = det * piv;
        if piv.abs_f64() == 0.0 {
            return CDd::ZERO;
        }
        for i in k + 1..n {
            let l = a[i * n + k] / piv;
            for j in k + 1..n {
                let u = a[k * n + j];
                a[i * n + j] = a[i * n + j] - l * u;
            }
        }
    }
    det
}

/// Cholesky factor L (row-major, lower) of a Hermitian positive definite
/// matrix.
pub fn complex_cholesky(a: &[Complex64], n: usize) -> Result<Vec<Complex64>> {
    let mut l = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut s = a[j * n + j].re;
        for k in 0..j {
            s -= l[j * n + k].norm_sqr();
        }
        if !(s > 0.0) {
            return Err(Error::InvalidSpec("matrix is not positive definite".into()));
        }
        let ljj = s.sqrt();
        l[j * n + j] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = s / ljj;
        }
    }
    Ok(l)
}

/// Solves L X = B for lower-triangular L (row-major); B is n x m row-major.
pub fn forward_substitute(l: &[Complex64], n: usize, b: &mut [Complex64], m: usize) {
    for col in 0..m {
        for i in 0..n {
            let mut s = b[i * m + col];
            for k in 0..i {
                s -= l[i * n + k] * b[k * m + col];
            }
            b[i * m + col] = s / l[i * n + i];
        }
    }
}
