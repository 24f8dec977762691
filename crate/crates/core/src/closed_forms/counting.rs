//! Term counting: exact integer partition numbers (pentagonal recurrence)
//! and the subexponential bound on the number of strings first appearing
//! at a given perturbative order.

/// p(0..=n) by Euler's pentagonal-number recurrence, exact integers.
pub fn partition_numbers(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1i128 } else { 1i128 };
            if g1 <= m {
                acc += sign * p[m - g1] as i128;
            }
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
            k += 1;
        }
        p[m] = acc as u128;
    }
    p
}

/// q(n) = Σ_m p(m) p(n-m), the number of strings first reachable in n
/// hops, and the analytic bound exp(π√(4n/3))/(12n) valid for even n ≥ 8.
pub fn partition_count_bound(n: usize) -> (u128, f64) {
    let p = partition_numbers(n);
    let q: u128 = (0..=n).map(|m| p[m] * p[n - m]).sum();
    let bound = if n > 0 {
        (std::f64::consts::PI * (4.0 * n as f64 / 3.0).sqrt()).exp() / (12.0 * n as f64)
    } else {
        f64::INFINITY
    };
    (q, bound)
}
