use crate::isqrt;

/// Both sides of `1 + isqrt(2(m - isqrt(2m) - 2)) <= isqrt(2m)` for `m >= 4`.
pub fn key_inequality_sides(m: u64) -> (u64, u64) {
    let rhs = isqrt(2 * m);
    let rest = m.saturating_sub(rhs + 2);
    (1 + isqrt(2 * rest), rhs)
}

/// Every `m` in `4..=m_max` where the stage inequality fails.
pub fn verify_key_inequality(m_max: u64) -> Vec<u64> {
    (4..=m_max)
        .filter(|&m| {
            let (lhs, rhs) = key_inequality_sides(m);
            lhs > rhs
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(key_inequality_sides(4), (1, 2));
        assert_eq!(key_inequality_sides(5), (1, 3));
        assert!(verify_key_inequality(3).is_empty());
    }

    #[test]
    fn tight_somewhere() {
        // equality is attained, so the inequality cannot be sharpened
        assert!((4..1000).any(|m| {
            let (l, r) = key_inequality_sides(m);
            l == r
        }));
    }

    #[test]
    fn float_oracle_agrees_away_from_squares() {
        for m in 4..20_000u64 {
            let r = (2.0 * m as f64).sqrt().floor() as u64;
            let rest = (m - r - 2) as f64;
            let l = 1 + (2.0 * rest).sqrt().floor() as u64;
            assert_eq!(key_inequality_sides(m), (l, r), "m = {m}");
        }
    }
}
