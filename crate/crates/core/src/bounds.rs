//! Size thresholds of the set-family enumeration.
//!
//! Logarithms are base 2 and are taken of `max(k, 2)` so that every bound
//! stays positive for tiny budgets. Ceilings are used wherever a bound caps
//! the size of an enumerated subset; rounding down could drop the subset
//! whose existence the coverage argument relies on.

/// `log2(max(k, 2))`.
pub fn log_k(k: usize) -> f64 {
    (k.max(2) as f64).log2()
}

/// Number of colour classes used to spread `M` over the acyclic remainder.
pub fn color_count(k: usize) -> usize {
    (log_k(k).powi(2).floor() as usize).max(1)
}

/// Largest `Ĥ` (solution vertices dropped from the chosen colour class).
pub fn h_hat_bound(k: usize) -> usize {
    k.div_ceil(color_count(k))
}

/// Largest `X̂` (vertices taken from the approximate solution).
pub fn x_hat_bound(k: usize) -> usize {
    (3 * k).div_ceil(color_count(k))
}

/// Largest subset `B` of the large-block union kept out of `P`.
pub fn kept_bound(k: usize) -> usize {
    (2.0 * k as f64 / log_k(k).powi(2)).ceil() as usize
}

/// Blocks of at least this size are "large": `2 log^4 k`, compared as a real.
pub fn large_block_threshold(k: usize) -> f64 {
    2.0 * log_k(k).powi(4)
}

/// Block size bound guaranteed for the covering `M` in `T - H`: `2 log^2 k`.
pub fn spread_block_bound(k: usize) -> f64 {
    2.0 * log_k(k).powi(2)
}

pub fn is_large(size: usize, k: usize) -> bool {
    size as f64 >= large_block_threshold(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budgets_are_clamped() {
        for k in 0..=2 {
            assert_eq!(color_count(k), 1);
            assert_eq!(large_block_threshold(k), 2.0);
        }
        assert_eq!(h_hat_bound(0), 0);
        assert_eq!(h_hat_bound(2), 2);
        assert_eq!(x_hat_bound(2), 6);
        assert_eq!(kept_bound(2), 4);
    }

    #[test]
    fn exact_powers() {
        // log2 4 = 2
        assert_eq!(color_count(4), 4);
        assert_eq!(h_hat_bound(4), 1);
        assert_eq!(x_hat_bound(4), 3);
        assert_eq!(kept_bound(4), 2);
        assert_eq!(large_block_threshold(4), 32.0);
        // log2 16 = 4
        assert_eq!(color_count(16), 16);
        assert_eq!(large_block_threshold(16), 512.0);
    }

    #[test]
    fn threshold_is_real_valued() {
        // log2 3 ≈ 1.585, 2 log^4 3 ≈ 12.62
        assert!(!is_large(12, 3));
        assert!(is_large(13, 3));
        assert_eq!(color_count(3), 2);
    }
}
