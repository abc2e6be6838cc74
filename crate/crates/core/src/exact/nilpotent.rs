//! Nilpotent matrices: exponentials and nilpotency indices.

use num_traits::Zero;

use super::{Matrix, Ring, Scalar};
use crate::error::Error;

/// `∑_{k<bound} Nᵏ/k!`, after checking `N^bound = 0`.
pub fn exp_nilpotent<T: Ring>(n: &Matrix<T>, bound: usize) -> Result<Matrix<T>, Error> {
    assert!(n.is_square(), "exponential of a non-square matrix");
    let mut acc = Matrix::identity(n.rows());
    let mut power = Matrix::identity(n.rows());
    for k in 1..=bound {
        power = &power * n;
        if k == bound {
            break;
        }
        if power.is_zero() {
            return Ok(acc);
        }
        let c = T::from_scalar(Scalar::factorial(k).inv().expect("k! is nonzero"));
        acc = &acc + &power.scale(&c);
    }
    if power.is_zero() {
        Ok(acc)
    } else {
        Err(Error::NotNilpotent(format!(
            "N^{bound} is nonzero for a {}x{} matrix",
            n.rows(),
            n.cols()
        )))
    }
}

/// Least `k ≥ 1` with `Nᵏ = 0`.
pub fn nilpotency_index(n: &Matrix<Scalar>) -> Result<usize, Error> {
    let mut power = n.clone();
    for k in 1..=n.rows().max(1) {
        if power.entries().all(Zero::is_zero) {
            return Ok(k);
        }
        power = &power * n;
    }
    Err(Error::NotNilpotent(format!(
        "no power up to {} vanishes",
        n.rows()
    )))
}
