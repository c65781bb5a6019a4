//! Closed-form counts for star graphs and cut contributions.
//!
//! All functions take plain integers and use the generalized binomial
//! `C(a, b) = 0` whenever `b < 0` or `b > a`, which keeps the summation
//! formulas valid at their boundary terms.

/// `C(a, b)` for `a >= 0`, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial overflows i64")
}

/// First Betti number of the `n`-particle complex on the unsubdivided star
/// with `e` edges: `e C(e-1, n-1) - C(e+1, n) + 1`.
pub fn gamma_star(n: i64, e: i64) -> i64 {
    e * binomial(e - 1, n - 1) - binomial(e + 1, n) + 1
}

/// `(-1)^k C(e-1, k)`.
pub fn alpha_star(k: i64, e: i64) -> i64 {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    sign * binomial(e - 1, k)
}

/// The same coefficient from its defining recursion
/// `a(k, e) = gamma(k, e) - sum_{i=1}^{k-2} C(e, i) a(k-i, e-i)`.
pub fn alpha_star_recursive(k: i64, e: i64) -> i64 {
    let correction: i64 = (1..=k - 2).map(|i| binomial(e, i) * alpha_star_recursive(k - i, e - i)).sum();
    gamma_star(k, e) - correction
}

/// Rank of `H1` for `n` particles on the sufficiently subdivided star with
/// `e` arms: `C(n+e-2, e-1)(e-2) - C(n+e-2, e-2) + 1`.
pub fn beta_star(n: i64, e: i64) -> i64 {
    binomial(n + e - 2, e - 1) * (e - 2) - binomial(n + e - 2, e - 2) + 1
}

/// `beta_star` as the inclusion-exclusion count over `(n, m)`-cycles, where
/// `m` particles move and the rest stay fixed.
pub fn beta_star_inclusion_exclusion(n: i64, e: i64) -> i64 {
    (2..e)
        .map(|m| {
            let moving = binomial(n - m + e - 1, e - 1) * gamma_star(m, e);
            let overlap: i64 = (1..=e - m)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * binomial(n - m - j + e, e - 1) * binomial(e, j) * gamma_star(m - 1, e - j)
                })
                .sum();
            moving + overlap
        })
        .sum()
}

/// `beta_star` as `sum_k C(n-k+e-1, e-1) alpha(k, e)`.
pub fn beta_star_from_alpha(n: i64, e: i64) -> i64 {
    (2..e).map(|k| binomial(n - k + e - 1, e - 1) * alpha_star(k, e)).sum()
}

/// Independent exchange phases lost at a two-vertex cut splitting the graph
/// into `mu` pieces: `(mu-2)(mu-1)/2`.
pub fn n2_of_cut(mu: i64) -> i64 {
    (mu - 2) * (mu - 1) / 2
}

/// Phases lost at a cut vertex with `mu` components and degree `nu`, for `n`
/// particles: `C(n+mu-2, mu-1)(nu-2) - C(n+mu-2, mu-2) - (nu-mu-1)`.
pub fn n1_of_cut(mu: i64, nu: i64, n: i64) -> i64 {
    let value = binomial(n + mu - 2, mu - 1) * (nu - 2) - binomial(n + mu - 2, mu - 2) - (nu - mu - 1);
    if n == 2 {
        debug_assert_eq!(value, n1_two_particle(mu, nu));
    }
    value
}

/// Two-particle count at a cut vertex: `(mu-1)(mu-2)/2 + (mu-1)(nu-mu)`.
pub fn n1_two_particle(mu: i64, nu: i64) -> i64 {
    (mu - 1) * (mu - 2) / 2 + (mu - 1) * (nu - mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_star(2, 3), 1);
        assert_eq!(gamma_star(2, 5), 6);
        assert_eq!(gamma_star(3, 5), 11);
    }

    #[test]
    fn alpha_values() {
        for e in 2..8 {
            assert_eq!(alpha_star(2, e), binomial(e - 1, 2));
        }
        assert_eq!(alpha_star(3, 5), -4);
        assert_eq!(alpha_star(4, 5), 1);
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_star(2, 3), 1);
        for n in 2..10 {
            assert_eq!(beta_star(n, 3), n * (n - 1) / 2);
        }
        assert_eq!(beta_star(4, 5), 71);
        assert_eq!(beta_star(4, 5), 6 * binomial(6, 4) - 4 * binomial(5, 4) + binomial(4, 4));
    }

    #[test]
    fn cut_counts() {
        assert_eq!(n2_of_cut(2), 0);
        assert_eq!(n2_of_cut(3), 1);
        assert_eq!(n2_of_cut(5), 6);
        assert_eq!(n1_of_cut(2, 3, 2), 1);
        assert_eq!(n1_of_cut(3, 3, 2), 1);
        assert_eq!(n1_of_cut(3, 3, 3), 3);
        assert_eq!(n1_of_cut(2, 2, 5), 0);
    }

    #[test]
    fn star_cut_reduces_to_beta() {
        for e in 3..8 {
            for n in 2..7 {
                assert_eq!(n1_of_cut(e, e, n), beta_star(n, e));
            }
        }
    }
}
