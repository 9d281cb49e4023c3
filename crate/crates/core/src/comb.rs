//! Binomial coefficients and subset iteration shared by the census and the
//! strand formulas.

use crate::Count;

/// Binomial coefficient `C(n, k)` with the extended convention
/// `C(n, k) = 0` for `k > n` (and for negative arguments at call sites that
/// clamp before calling). Panics if the value exceeds 64 bits.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        // exact at every step: acc holds C(n, t) * falling-product remainder
        acc = acc
            .checked_mul((n - t) as u128)
            .expect("binomial coefficient exceeds 128-bit intermediate")
            / (t as u128 + 1);
    }
    Count::try_from(acc).expect("binomial coefficient exceeds 64-bit count range")
}

/// Calls `f` once for every k-subset of `0..n`, in lexicographic order of the
/// ascending index tuple. The slice passed to `f` is reused between calls.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] != pos + n - k {
                break;
            }
            if pos == 0 {
                return;
            }
        }
        idx[pos] += 1;
        for t in pos + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(52, 26), 495_918_532_948_104);
    }

    #[test]
    fn combinations_count_and_order() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len() as u64, binomial(5, 3));
        // lexicographic and strictly increasing
        for w in seen.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
    }

    #[test]
    fn combinations_edge_cases() {
        let mut count = 0;
        for_each_combination(4, 0, |c| {
            assert!(c.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
        for_each_combination(3, 5, |_| panic!("no 5-subsets of a 3-set"));
        let mut full = Vec::new();
        for_each_combination(3, 3, |c| full.push(c.to_vec()));
        assert_eq!(full, vec![vec![0, 1, 2]]);
    }
}
