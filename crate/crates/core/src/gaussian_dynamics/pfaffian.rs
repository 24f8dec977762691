//! Pfaffian of a real antisymmetric matrix by Parlett-Reid tridiagonalization
//! (congruence with unit lower-triangular eliminations and partial pivoting),
//! then the product of the even superdiagonal entries.

use nalgebra::DMatrix;

use crate::{Error, Result};

pub fn pfaffian(m: &DMatrix<f64>) -> Result<f64> {
    let n = m.nrows();
    if n != m.ncols() || n % 2 == 1 {
        return Err(Error::OddDimension { dim: n });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut a = m.clone();
    let mut sign = 1.0;
    for k in 0..n - 2 {
        // Pivot: bring the largest entry of column k below the diagonal
        // into the subdiagonal slot. Pf(P A P^T) = det(P) Pf(A).
        let mut piv = k + 1;
        let mut best = a[(k + 1, k)].abs();
        for i in k + 2..n {
            if a[(i, k)].abs() > best {
                best = a[(i, k)].abs();
                piv = i;
            }
        }
        if best == 0.0 {
            if k % 2 == 0 {
                // zero superdiagonal entry at an even slot kills the product
                return Ok(0.0);
            }
            continue;
        }
        if piv != k + 1 {
            a.swap_rows(piv, k + 1);
            a.swap_columns(piv, k + 1);
            sign = -sign;
        }
        let d = a[(k + 1, k)];
        for i in k + 2..n {
            let f = a[(i, k)] / d;
            if f == 0.0 {
                continue;
            }
            // unit lower-triangular congruence: det 1, Pfaffian unchanged
            for j in 0..n {
                let upd = f * a[(k + 1, j)];
                a[(i, j)] -= upd;
            }
            for j in 0..n {
                let upd = f * a[(j, k + 1)];
                a[(j, i)] -= upd;
            }
        }
    }
    let mut pf = sign;
    for k in (0..n).step_by(2) {
        pf *= a[(k, k + 1)];
    }
    Ok(pf)
}
