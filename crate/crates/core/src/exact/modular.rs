//! Characteristic polynomials modulo word-sized primes.
//!
//! The integer polynomial is recovered by Chinese remaindering over enough
//! primes to cover a Hadamard bound on its coefficients.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Moduli stay below 2^31 so that products fit in a `u64`.
const PRIME_CEILING: u64 = 1 << 31;
const CACHED_PRIMES: usize = 128;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Bases 2, 3, 5, 7 are deterministic below 3,215,031,751.
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primes_below(mut from: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        from -= 1;
        if is_prime(from) {
            out.push(from);
        }
    }
    out
}

/// The first `count` primes below 2^31, largest first.
pub(crate) fn moduli(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| primes_below(PRIME_CEILING, CACHED_PRIMES));
    if count <= cached.len() {
        return cached[..count].to_vec();
    }
    let mut all = cached.clone();
    let last = *all.last().unwrap();
    all.extend(primes_below(last, count - cached.len()));
    all
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r.is_negative() { r + p } else { r };
    r.to_u64().expect("residue below modulus")
}

/// `det(xI - A) mod p` with ascending coefficients, via similarity reduction
/// to upper Hessenberg form followed by the standard Hessenberg recurrence.
fn char_poly_mod(dense: &[Vec<BigInt>], p: u64) -> Vec<u64> {
    let n = dense.len();
    let mut h: Vec<Vec<u64>> = dense.iter().map(|row| row.iter().map(|v| reduce(v, p)).collect()).collect();

    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let Some(pivot) = (target..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if pivot != target {
            h.swap(pivot, target);
            for row in h.iter_mut() {
                row.swap(pivot, target);
            }
        }
        let inv = inv_mod(h[target][col], p);
        for i in target + 1..n {
            if h[i][col] == 0 {
                continue;
            }
            let u = h[i][col] * inv % p;
            let neg_u = p - u;
            // row_i -= u * row_target
            let (top, bottom) = h.split_at_mut(i);
            let src = &top[target];
            let dst = &mut bottom[0];
            for j in col..n {
                if src[j] != 0 {
                    dst[j] = (dst[j] + neg_u * src[j]) % p;
                }
            }
            // column_target += u * column_i
            for row in h.iter_mut() {
                if row[i] != 0 {
                    row[target] = (row[target] + u * row[i]) % p;
                }
            }
        }
    }

    // polys[m] is the characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let diag = h[m - 1][m - 1];
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (deg, &c) in prev.iter().enumerate() {
            next[deg + 1] = (next[deg + 1] + c) % p;
            next[deg] = (next[deg] + (p - diag) * c) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = t * h[i][i - 1] % p;
            if t == 0 {
                break;
            }
            let coef = h[i - 1][m - 1] * t % p;
            if coef == 0 {
                continue;
            }
            let neg = p - coef;
            for (deg, &c) in polys[i - 1].iter().enumerate() {
                next[deg] = (next[deg] + neg * c) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Upper bound on the absolute value of every characteristic polynomial
/// coefficient: each is a signed sum of principal minors, and Hadamard's
/// inequality bounds those by products of row norms, so the elementary
/// symmetric functions of `1 + ||row_i||` dominate.
fn coefficient_bound(dense: &[Vec<BigInt>]) -> BigInt {
    dense
        .iter()
        .map(|row| {
            let sq: BigInt = row.iter().map(|v| v * v).sum();
            let root = sq.sqrt();
            let ceil = if &root * &root == sq { root } else { root + 1 };
            ceil + 1
        })
        .product()
}

/// Exact characteristic polynomial by multi-modular reduction.
pub(crate) fn char_poly_crt(dense: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = dense.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let needed = BigInt::from(2) * coefficient_bound(dense) + 1;
    let mut count = 1;
    let mut primes = moduli(count);
    loop {
        let product: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
        if product > needed {
            break;
        }
        count += 1 + count / 2;
        primes = moduli(count);
    }

    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::one();
    for &p in &primes {
        let residues = char_poly_mod(dense, p);
        let m_mod_p = reduce(&modulus, p);
        let inv = inv_mod(m_mod_p, p);
        for (c, &r) in coeffs.iter_mut().zip(&residues) {
            // Garner step: c += M * ((r - c) / M mod p)
            let delta = (r + p - reduce(c, p)) % p * inv % p;
            *c += &modulus * delta;
        }
        modulus *= p;
    }
    let half = &modulus / 2;
    for c in coeffs.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    coeffs
}
