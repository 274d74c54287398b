//! Exact integer primitives: factorization, gcd/lcm, modular powers, CRT and
//! the classical arithmetic functions (φ, λ, μ, valuations, radical).
//!
//! Every modular value returned here is the canonical representative in
//! `[0, m)`. Products of two residues are formed in `u128`, so moduli up to
//! `u64::MAX` never overflow.

use std::fmt;

use crate::{Error, Result};

/// Canonical prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and every exponent is at least one; the
/// integer `1` is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs, checking the
    /// canonical-form invariants.
    pub fn from_prime_powers(prime_powers: Vec<(u64, u32)>) -> Result<Self> {
        let mut prev = 1;
        for &(p, e) in &prime_powers {
            if p <= prev || e == 0 || !is_prime(p) {
                return Err(Error::InvalidFactorization);
            }
            prev = p;
        }
        Ok(Self { prime_powers })
    }

    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.prime_powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prime_powers.is_empty()
    }

    /// Exponent of `p` (zero when `p` does not divide the value).
    pub fn exponent(&self, p: u64) -> u32 {
        self.prime_powers
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The represented integer. Panics on overflow, which cannot happen for
    /// factorizations produced by [`factorize`].
    pub fn value(&self) -> u64 {
        self.prime_powers.iter().fold(1u64, |acc, &(p, e)| {
            acc.checked_mul(p.checked_pow(e).expect("prime power overflows u64"))
                .expect("factorization value overflows u64")
        })
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.prime_powers {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prime_powers.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.prime_powers.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n` by trial division up to `√n`.
///
/// `n = 0` has no factorization and is rejected.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            prime_powers.push((p, e));
        }
    };
    push(&mut rest, 2);
    push(&mut rest, 3);
    // 6k ± 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        push(&mut rest, d);
        push(&mut rest, d + 2);
        d += 6;
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Ok(Factorization { prime_powers })
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// If `n = p^α` with `p` prime and `α ≥ 1`, returns `(p, α)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n).ok()?;
    match f.prime_powers() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; `lcm(0, x) = 0`. Panics on overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .expect("lcm overflows u64")
}

#[inline]
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    if (a | b) >> 32 == 0 {
        return (a * b) % m;
    }
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply. `m = 1` yields 0.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0, "modulus must be positive");
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mod_mul(result, b, m);
        }
        b = mod_mul(b, b, m);
        exp >>= 1;
    }
    result
}

/// Reduces a signed value to its canonical representative in `[0, m)`.
pub fn reduce_signed(value: i128, m: u64) -> u64 {
    value.rem_euclid(m as i128) as u64
}

/// Extended Euclid on signed 128-bit values: returns `(g, x, y)` with
/// `a·x + b·y = g`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd((a % m) as i128, m as i128);
    (g == 1).then(|| reduce_signed(x, m))
}

/// Chinese remaindering of `(residue, modulus)` pairs with pairwise coprime
/// moduli. Returns `(x, M)` where `M` is the product of the moduli and `x` is
/// the unique solution in `[0, M)`.
pub fn crt(congruences: &[(u64, u64)]) -> Result<(u64, u64)> {
    let mut x = 0u64;
    let mut modulus = 1u64;
    for &(r, n) in congruences {
        if n == 0 {
            return Err(Error::Zero);
        }
        if gcd(modulus, n) != 1 {
            return Err(Error::NonCoprimeModuli(modulus, n));
        }
        let r = r % n;
        // x + modulus·t ≡ r (mod n)
        let inv = mod_inverse(modulus % n, n).expect("coprime moduli are invertible");
        let diff = reduce_signed(r as i128 - (x % n) as i128, n);
        let t = mod_mul(diff, inv, n);
        let next = modulus.checked_mul(n).ok_or(Error::Overflow)?;
        x = ((x as u128 + modulus as u128 * t as u128) % next as u128) as u64;
        modulus = next;
    }
    Ok((x, modulus))
}

/// Euler's totient φ(n) = |U_n|.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi(0) is undefined");
    phi_of(&factorize(n).expect("n > 0"))
}

pub fn phi_of(f: &Factorization) -> u64 {
    f.prime_powers()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Carmichael's λ(n): the exponent of U_n.
pub fn carmichael_lambda(n: u64) -> u64 {
    assert!(n > 0, "carmichael_lambda(0) is undefined");
    lambda_of(&factorize(n).expect("n > 0"))
}

pub fn lambda_of(f: &Factorization) -> u64 {
    f.prime_powers()
        .iter()
        .map(|&(p, e)| lambda_prime_power(p, e))
        .fold(1, lcm)
}

/// λ(p^e): 1, 2, 2^{e-2} on powers of two, φ(p^e) otherwise.
pub fn lambda_prime_power(p: u64, e: u32) -> u64 {
    match (p, e) {
        (_, 0) => 1,
        (2, 1) => 1,
        (2, 2) => 2,
        (2, e) => 1 << (e - 2),
        (p, e) => (p - 1) * p.pow(e - 1),
    }
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n > 0, "mobius(0) is undefined");
    mobius_of(&factorize(n).expect("n > 0"))
}

pub fn mobius_of(f: &Factorization) -> i64 {
    if f.prime_powers().iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `p`-adic valuation of `n`: the largest `k` with `p^k | n`.
pub fn ord_p(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut n = n;
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    Ok(k)
}

/// Product of the distinct primes dividing `n`.
pub fn rad(n: u64) -> u64 {
    assert!(n > 0, "rad(0) is undefined");
    factorize(n).expect("n > 0").primes().product()
}

/// `I(n) = ⌊1/n⌋`.
pub fn unit_indicator(n: u64) -> u64 {
    assert!(n > 0, "unit_indicator(0) is undefined");
    u64::from(n == 1)
}

/// `χ_n(a)`: 1 when `a | n`, else 0.
pub fn divides_indicator(a: u64, n: u64) -> u64 {
    assert!(a > 0 && n > 0, "divides_indicator takes positive arguments");
    u64::from(n % a == 0)
}

pub fn divisors(n: u64) -> Vec<u64> {
    factorize(n).map(|f| f.divisors()).unwrap_or_default()
}

/// Smallest-prime-factor table for `0..=limit` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}
