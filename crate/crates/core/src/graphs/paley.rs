use super::SimpleGraph;
use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(k / p)` by Euler's criterion; `p` an odd prime.
pub fn legendre(k: i64, p: u64) -> i8 {
    let r = k.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `{k^2 mod p : k = 0..=(p-1)/2}` in increasing order (zero included).
pub fn quadratic_residues(p: u64) -> Vec<u64> {
    let mut q: Vec<u64> = (0..=(p - 1) / 2).map(|k| k * k % p).collect();
    q.sort_unstable();
    q.dedup();
    q
}

/// Paley graph on `Z_p`: `n ~ n'` iff `n' - n` is a nonzero square mod `p`.
pub fn paley_graph(p: u64) -> Result<SimpleGraph> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::InvalidParameter(format!(
            "Paley graphs need a prime p = 1 mod 4, got {p}"
        )));
    }
    let n = p as usize;
    let mut g = SimpleGraph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if legendre(j as i64 - i as i64, p) == 1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(0, 5), 0);
        assert_eq!(legendre(10, 5), 0);
        for p in [3, 5, 7, 11, 13] {
            assert_eq!(legendre(1, p), 1);
        }
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn legendre_agrees_with_squares() {
        for p in [5u64, 7, 13, 17, 29] {
            let squares: Vec<u64> = (1..p).map(|k| k * k % p).collect();
            for k in 1..p {
                let expected = if squares.contains(&k) { 1 } else { -1 };
                assert_eq!(legendre(k as i64, p), expected, "k={k}, p={p}");
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(quadratic_residues(5), vec![0, 1, 4]);
        assert_eq!(quadratic_residues(13), vec![0, 1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn paley_graphs() {
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(paley_graph(5).unwrap(), c5);
        let g13 = paley_graph(13).unwrap();
        assert_eq!(g13.n(), 13);
        assert_eq!(g13.regular_degree(), Some(6));
        assert!(paley_graph(9).is_err());
        assert!(paley_graph(7).is_err());
    }
}
