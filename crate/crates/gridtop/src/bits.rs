//! Small helpers for `u64` vertex sets.
//!
//! Vertices are indices `0..n` (n ≤ 64); a set is the bitmask of its members.

/// Mask with the single bit `i` set.
#[inline]
pub fn bit(i: usize) -> u64 {
    debug_assert!(i < 64);
    1u64 << i
}

/// Does `set` contain vertex `i`?
#[inline]
pub fn has(set: u64, i: usize) -> bool {
    set & bit(i) != 0
}

/// Mask of all vertices `0..n`.
#[inline]
pub fn full(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the members of `set` in ascending order.
#[inline]
pub fn iter(set: u64) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// Members of `set` in ascending order, collected.
pub fn to_vec(set: u64) -> Vec<usize> {
    iter(set).collect()
}

/// Largest member of a non-empty set.
#[inline]
pub fn max(set: u64) -> usize {
    debug_assert!(set != 0);
    63 - set.leading_zeros() as usize
}

/// All submasks of `mask`, ascending as integers (includes 0 and `mask`).
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_ascending() {
        assert_eq!(to_vec(0b101001), vec![0, 3, 5]);
        assert_eq!(to_vec(0), Vec::<usize>::new());
    }

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
    }

    #[test]
    fn submask_enumeration_is_complete() {
        let subs: Vec<u64> = submasks(0b1010).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).count(), 1);
        assert_eq!(submasks(0b11111).count(), 32);
    }

    #[test]
    fn max_is_top_bit() {
        assert_eq!(max(0b1), 0);
        assert_eq!(max(0b100110), 5);
    }
}
