//! Multiplicative orders and exhaustive enumeration of index classes.
//!
//! The enumeration here is the ground truth: it scans every unit of `U_m`,
//! computes its order directly and accumulates class sums and products. The
//! closed-form counts at the bottom of the module are checked against it.

use crate::arith::{
    self, carmichael_lambda, euler_phi, factorize, gcd, lambda_of, mod_mul, mod_pow, phi_of,
    Factorization,
};
use crate::{Error, Result};

/// Sum, product and size of `{a ∈ U_m : ind_m(a) = δ}`.
///
/// The empty class has sum 0 and product `1 mod m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexClassSummary {
    pub modulus: u64,
    pub delta: u64,
    pub count: u64,
    pub sum_mod: u64,
    pub product_mod: u64,
    /// Sorted members, when requested.
    pub elements: Option<Vec<u64>>,
}

impl IndexClassSummary {
    fn empty(modulus: u64, delta: u64) -> Self {
        Self {
            modulus,
            delta,
            count: 0,
            sum_mod: 0,
            product_mod: 1 % modulus,
            elements: None,
        }
    }

    fn push(&mut self, a: u64) {
        self.count += 1;
        self.sum_mod = (self.sum_mod + a) % self.modulus;
        self.product_mod = mod_mul(self.product_mod, a, self.modulus);
        if let Some(elements) = &mut self.elements {
            elements.push(a);
        }
    }
}

fn require_unit(a: u64, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Zero);
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::NotAUnit(a, m));
    }
    Ok(())
}

/// Smallest `k ≥ 1` with `a^k ≡ 1 (mod m)`, found by testing the divisors of
/// `λ(m)` in increasing order.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    require_unit(a, m)?;
    if m == 1 {
        return Ok(1);
    }
    let lambda = carmichael_lambda(m);
    Ok(arith::divisors(lambda)
        .into_iter()
        .find(|&d| mod_pow(a, d, m) == 1)
        .expect("a^λ(m) ≡ 1 for every unit"))
}

/// `ind_m(a^k)` through `ind_m(a) / gcd(k, ind_m(a))`.
pub fn index_of_power(a: u64, k: u64, m: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Zero);
    }
    let ind = multiplicative_order(a, m)?;
    Ok(ind / gcd(k, ind))
}

/// True iff `m ∈ {1, 2, 4}` or `m = p^α, 2p^α` for an odd prime `p`.
pub fn has_primitive_root(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    if matches!(m, 1 | 2 | 4) {
        return true;
    }
    let odd = if m % 2 == 0 { m / 2 } else { m };
    odd % 2 == 1 && odd > 1 && arith::prime_power(odd).is_some()
}

/// The smallest positive primitive root modulo `m`, if any.
pub fn find_primitive_root(m: u64) -> Option<u64> {
    if !has_primitive_root(m) {
        return None;
    }
    if m <= 2 {
        return Some(1);
    }
    let phi = euler_phi(m);
    let phi_primes: Vec<u64> = factorize(phi).ok()?.primes().collect();
    (2..m).find(|&g| gcd(g, m) == 1 && phi_primes.iter().all(|&q| mod_pow(g, phi / q, m) != 1))
}

/// Order of every residue modulo `m`; non-units get 0. For `m = 1` the
/// single residue 0 is the identity and has order 1.
///
/// Each unit's order is found by walking down the divisor lattice of `λ(m)`
/// one prime at a time: for `q^k ∥ λ(m)`, the `q`-part of `ind(a)` is the
/// least `q^j` annihilating `a^{λ/q^k}`. The powers `a^{λ/q^k}` for all `a`
/// at once come from a smallest-prime-factor sieve, since `a ↦ a^e` is
/// completely multiplicative.
pub fn unit_orders(m: u64) -> Vec<u64> {
    assert!(m > 0, "modulus must be positive");
    let size = usize::try_from(m).expect("modulus fits in memory");
    if m == 1 {
        return vec![1];
    }
    let fact = factorize(m).expect("m > 0");
    let mut is_unit = vec![true; size];
    is_unit[0] = false;
    for p in fact.primes() {
        for j in (p as usize..size).step_by(p as usize) {
            is_unit[j] = false;
        }
    }
    let mut orders: Vec<u64> = is_unit.iter().map(|&u| u64::from(u)).collect();

    let lambda = lambda_of(&fact);
    let spf = arith::smallest_prime_factors(size - 1);
    let mut table = vec![0u64; size];
    for &(q, k) in factorize(lambda).expect("λ > 0").prime_powers() {
        let e = lambda / q.pow(k);
        table[1] = 1;
        for a in 2..size {
            let p = spf[a] as usize;
            table[a] = if p == a {
                mod_pow(a as u64, e, m)
            } else {
                mod_mul(table[p], table[a / p], m)
            };
        }
        for a in 1..size {
            if !is_unit[a] {
                continue;
            }
            let mut b = table[a];
            let mut part = 1;
            while b != 1 {
                b = mod_pow(b, q, m);
                part *= q;
            }
            orders[a] *= part;
        }
    }
    orders
}

/// Exhaustive scan of `U_m` for the units of order exactly `delta`.
pub fn enumerate_index_class(m: u64, delta: u64) -> Result<IndexClassSummary> {
    if m == 0 || delta == 0 {
        return Err(Error::Zero);
    }
    let mut summary = IndexClassSummary::empty(m, delta);
    summary.elements = Some(Vec::new());
    if carmichael_lambda(m) % delta != 0 {
        return Ok(summary);
    }
    for (a, &ord) in unit_orders(m).iter().enumerate() {
        if ord == delta {
            summary.push(a as u64);
        }
    }
    Ok(summary)
}

/// Per-modulus oracle data, computed once and shared by every check on `m`.
#[derive(Clone, Debug)]
pub struct ModulusProfile {
    pub modulus: u64,
    pub factorization: Factorization,
    pub phi: u64,
    pub lambda: u64,
    /// One summary per divisor of `λ(m)`, in increasing order of `δ`.
    pub classes: Vec<IndexClassSummary>,
    orders: Vec<u64>,
}

impl ModulusProfile {
    pub fn build(m: u64) -> Result<Self> {
        Self::build_with(m, false)
    }

    /// As [`build`](Self::build), optionally retaining the members of every
    /// class.
    pub fn build_with(m: u64, keep_elements: bool) -> Result<Self> {
        let factorization = factorize(m)?;
        let lambda = lambda_of(&factorization);
        let phi = phi_of(&factorization);
        let deltas = factorization_of_lambda(lambda).divisors();
        let mut classes: Vec<IndexClassSummary> = deltas
            .iter()
            .map(|&d| {
                let mut s = IndexClassSummary::empty(m, d);
                if keep_elements {
                    s.elements = Some(Vec::new());
                }
                s
            })
            .collect();
        let orders = unit_orders(m);
        for (a, &ord) in orders.iter().enumerate() {
            if ord == 0 {
                continue;
            }
            let slot = deltas
                .binary_search(&ord)
                .expect("every order divides λ(m)");
            classes[slot].push(a as u64);
        }
        Ok(Self {
            modulus: m,
            factorization,
            phi,
            lambda,
            classes,
            orders,
        })
    }

    /// The class of order `delta`, or `None` when `delta ∤ λ(m)`.
    pub fn class(&self, delta: u64) -> Option<&IndexClassSummary> {
        self.classes
            .binary_search_by_key(&delta, |c| c.delta)
            .ok()
            .map(|i| &self.classes[i])
    }

    pub fn deltas(&self) -> impl Iterator<Item = u64> + '_ {
        self.classes.iter().map(|c| c.delta)
    }

    /// `ind_m(a)` for a unit `a < m`, 0 for non-units.
    pub fn order_of(&self, a: u64) -> u64 {
        self.orders[(a % self.modulus) as usize]
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }
}

fn factorization_of_lambda(lambda: u64) -> Factorization {
    factorize(lambda).expect("λ > 0")
}

/// Number of units of order exactly `d` in `U_{p^e}`.
fn prime_power_class_count(p: u64, e: u32, d: u64) -> u64 {
    if p == 2 {
        match (e, d) {
            (_, 1) => 1,
            (0 | 1, _) => 0,
            (2, 2) => 1,
            (2, _) => 0,
            (_, 2) => 3,
            (e, d) if d.is_power_of_two() && d.trailing_zeros() <= e - 2 => d,
            _ => 0,
        }
    } else if arith::lambda_prime_power(p, e) % d == 0 {
        euler_phi(d)
    } else {
        0
    }
}

/// Closed-form size of the index class `(m, δ)`.
///
/// Per prime-power part the counts are `φ(d)` for `d | φ(p^α)` (cyclic
/// parts) and `1, 3, 2^β` for `d = 1, 2, 2^β` on `2^α` with `α ≥ 3`. An
/// element's order is the lcm of its component orders, so the total is the
/// lcm-convolution of the per-part counts. That is evaluated as
/// `Σ_{d|δ} μ(δ/d) ∏_i C_i(d)` with `C_i(d) = Σ_{e|d} c_i(e)`, the number of
/// components annihilated by `d`.
pub fn count_index_class(m: u64, delta: u64) -> Result<u64> {
    if delta == 0 {
        return Err(Error::Zero);
    }
    let fact = factorize(m)?;
    if lambda_of(&fact) % delta != 0 {
        return Ok(0);
    }
    let annihilated = |d: u64| -> i128 {
        let divs = arith::divisors(d);
        fact.prime_powers()
            .iter()
            .map(|&(p, e)| {
                divs.iter()
                    .map(|&x| prime_power_class_count(p, e, x) as i128)
                    .sum::<i128>()
            })
            .product()
    };
    let total: i128 = arith::divisors(delta)
        .into_iter()
        .map(|d| arith::mobius(delta / d) as i128 * annihilated(d))
        .sum();
    u64::try_from(total).map_err(|_| Error::Overflow)
}

/// `#{x ∈ U_m : x² ≡ 1}`: `2^k`, `2^{k+1}` or `2^{k+2}` for `ord_2(m) ≤ 1`,
/// `= 2`, `≥ 3`, where `k` counts the odd primes dividing `m`.
pub fn count_square_roots_of_unity(m: u64) -> Result<u64> {
    let fact = factorize(m)?;
    let k = fact.primes().filter(|&p| p != 2).count() as u32;
    let extra = match fact.exponent(2) {
        0 | 1 => 0,
        2 => 1,
        _ => 2,
    };
    Ok(1u64 << (k + extra))
}
