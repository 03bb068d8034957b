use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

pub const MAX_LATTICE_N: usize = 12;

/// Integer points of `C_n` and the number of partitions of `0 .. 2^n - 1`
/// into parts `1, 2, 4, .., 2^{n-1}`, counted independently.
pub fn lattice_and_partition_counts(n: usize) -> Result<(BigUint, BigUint), Error> {
    if n == 0 || n > MAX_LATTICE_N {
        return Err(Error::NodeCountOutOfRange {
            n,
            min: 1,
            max: MAX_LATTICE_N,
        });
    }
    Ok((lattice_points(n), partitions(n)))
}

/// Sequences with `1 ≤ a_1 ≤ 2` and `1 ≤ a_{i+1} ≤ 2 a_i`, counted by
/// the value of the last entry.
fn lattice_points(n: usize) -> BigUint {
    let top = 1usize << n;
    // ending[v] = number of admissible prefixes ending in v, v ≤ 2^i
    let mut ending = vec![BigUint::zero(); top + 1];
    ending[1] = BigUint::one();
    ending[2] = BigUint::one();
    for i in 1..n {
        // a_{i+1} = w is reachable from every v with 2v ≥ w
        let bound = 1usize << i;
        let mut suffix = vec![BigUint::zero(); bound + 2];
        for v in (1..=bound).rev() {
            suffix[v] = &suffix[v + 1] + &ending[v];
        }
        let mut next = vec![BigUint::zero(); top + 1];
        for (w, slot) in next.iter_mut().enumerate().take(2 * bound + 1).skip(1) {
            *slot = suffix[w.div_ceil(2)].clone();
        }
        ending = next;
    }
    ending.into_iter().sum()
}

fn partitions(n: usize) -> BigUint {
    let limit = (1usize << n) - 1;
    let mut ways = vec![BigUint::zero(); limit + 1];
    ways[0] = BigUint::one();
    for k in 0..n {
        let part = 1usize << k;
        for m in part..=limit {
            let add = ways[m - part].clone();
            ways[m] += add;
        }
    }
    ways.into_iter().sum()
}
