//! Writing block counts as non-negative combinations of the two tile sizes.

use crate::error::{Error, Result};

/// A decomposition k = alpha*a + beta*b with non-negative coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusPair {
    pub alpha: usize,
    pub beta: usize,
}

/// Decomposes `k = alpha*a + beta*b`, choosing the smallest possible
/// `alpha` for determinism. For coprime a, b this succeeds for every
/// k >= (a-1)(b-1); smaller k may have no decomposition.
pub fn frobenius_decompose(k: usize, a: usize, b: usize) -> Result<FrobeniusPair> {
    if a == 0 || b == 0 {
        return Err(Error::param("decomposition needs positive part sizes"));
    }
    let mut alpha = 0;
    loop {
        let rest = k - alpha * a;
        if rest.is_multiple_of(b) {
            return Ok(FrobeniusPair { alpha, beta: rest / b });
        }
        alpha += 1;
        if alpha * a > k {
            return Err(Error::NoDecomposition { k, a, b });
        }
    }
}
