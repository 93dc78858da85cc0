//! Counting weak compositions with per-slot upper bounds.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Number of ways to write `total` as an ordered sum over distinguishable
/// slots, where `caps` lists (bound, slot count) pairs: a `(b, m)` entry
/// contributes `m` slots each allowed any value in 0..=b.
///
/// Equivalently the coefficient of z^total in prod (1 + z + .. + z^b)^m.
pub fn count_bounded_compositions(total: u32, caps: &[(u32, u32)]) -> BigUint {
    let total = total as usize;
    let mut poly: Vec<BigUint> = alloc::vec![BigUint::zero(); total + 1];
    poly[0] = BigUint::one();
    for &(bound, count) in caps {
        for _ in 0..count {
            let mut next = alloc::vec![BigUint::zero(); total + 1];
            for s in 0..=total {
                if poly[s].is_zero() {
                    continue;
                }
                let hi = total.min(s + bound as usize);
                for slot in next.iter_mut().take(hi + 1).skip(s) {
                    *slot += &poly[s];
                }
            }
            poly = next;
        }
    }
    poly[total].clone()
}
