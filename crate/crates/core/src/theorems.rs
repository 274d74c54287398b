//! Closed-form congruences for the sum and the product of an index class
//! `{a ∈ U_m : ind_m(a) = δ}`.
//!
//! Every evaluator assumes `δ | λ(m)` and reports an [`Error::EmptyClass`]
//! otherwise. Values are canonical residues modulo the modulus the
//! congruence is asserted for, which is `m` itself or a prime-power part of
//! it.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::arith::{
    self, euler_phi, factorize, gcd, lambda_of, lambda_prime_power, reduce_signed, Factorization,
};
use crate::convolution::chain_product;
use crate::order::has_primitive_root;
use crate::{Error, Result};

/// Tags for every family of checks the toolkit knows about.
///
/// The string forms are stable: they appear in reports and on the command
/// line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Product of an index class.
    ClassProduct,
    /// Sum for `δ = 1`, `δ = 2` and `4 | δ`.
    SmallDeltaSum,
    /// Sums modulo `2^α` and odd `p^α`.
    PrimePowerSum,
    /// Sum modulo `p` for `m = pq`.
    TwoPrimeSum,
    /// Sum modulo each odd `p^α ∥ m`.
    GeneralSum,
    /// Vanishing sums for constructible polygons.
    ConstructibleGon,
    /// Primitive-root sum and product modulo odd prime powers.
    PrimitiveRoots,
    OrderOfPower,
    OrderOfProduct,
    LehmerInverse,
    LcmDirichletBridge,
    LcmIdentities,
    SquareRootsOfUnity,
    ClassCount,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::ClassProduct,
        TheoremId::SmallDeltaSum,
        TheoremId::PrimePowerSum,
        TheoremId::TwoPrimeSum,
        TheoremId::GeneralSum,
        TheoremId::ConstructibleGon,
        TheoremId::PrimitiveRoots,
        TheoremId::OrderOfPower,
        TheoremId::OrderOfProduct,
        TheoremId::LehmerInverse,
        TheoremId::LcmDirichletBridge,
        TheoremId::LcmIdentities,
        TheoremId::SquareRootsOfUnity,
        TheoremId::ClassCount,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ClassProduct => "T1.5",
            TheoremId::SmallDeltaSum => "T1.6",
            TheoremId::PrimePowerSum => "T1.7",
            TheoremId::TwoPrimeSum => "T1.8",
            TheoremId::GeneralSum => "T1.9",
            TheoremId::ConstructibleGon => "Corollary",
            TheoremId::PrimitiveRoots => "GaussCai",
            TheoremId::OrderOfPower => "L2.1",
            TheoremId::OrderOfProduct => "L2.2",
            TheoremId::LehmerInverse => "L2.3",
            TheoremId::LcmDirichletBridge => "L2.4",
            TheoremId::LcmIdentities => "L2.5",
            TheoremId::SquareRootsOfUnity => "CountSqrt1",
            TheoremId::ClassCount => "CountClass",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::ClassProduct => "product of an index class",
            TheoremId::SmallDeltaSum => "class sum for delta = 1, 2 and 4 | delta",
            TheoremId::PrimePowerSum => "class sum modulo a prime power",
            TheoremId::TwoPrimeSum => "class sum modulo p for m = pq",
            TheoremId::GeneralSum => "class sum modulo each odd prime-power part",
            TheoremId::ConstructibleGon => "vanishing class sums for constructible polygons",
            TheoremId::PrimitiveRoots => "primitive-root sum and product",
            TheoremId::OrderOfPower => "ind(a^k) = ind(a) / (k, ind(a))",
            TheoremId::OrderOfProduct => "ind_mn(a) = lcm(ind_m(a), ind_n(a))",
            TheoremId::LehmerInverse => "M o u = I",
            TheoremId::LcmDirichletBridge => "(f*u)(g*u) = (f o g)*u",
            TheoremId::LcmIdentities => "lcm-convolution identities with mu",
            TheoremId::SquareRootsOfUnity => "number of square roots of unity",
            TheoremId::ClassCount => "index class sizes",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownTheorem(s.to_owned()))
    }
}

/// A closed-form value and the modulus it is asserted modulo.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruencePrediction {
    pub value: u64,
    pub asserted_modulus: u64,
    pub theorem: TheoremId,
}

impl CongruencePrediction {
    fn new(theorem: TheoremId, value: i128, modulus: u64) -> Self {
        Self {
            value: reduce_signed(value, modulus),
            asserted_modulus: modulus,
            theorem,
        }
    }

    /// Whether `actual` (any representative) agrees with the prediction.
    pub fn agrees_with(&self, actual: u64) -> bool {
        actual % self.asserted_modulus == self.value
    }
}

fn require_divides_lambda(m: u64, lambda: u64, delta: u64) -> Result<()> {
    if delta == 0 || m == 0 {
        return Err(Error::Zero);
    }
    if lambda % delta != 0 {
        return Err(Error::EmptyClass { modulus: m, delta, lambda });
    }
    Ok(())
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::Unsupported("p must be odd"));
    }
    Ok(())
}

/// The class product: `−1 (mod m)` when `δ = 2` and `m` has a primitive
/// root, `1 (mod m)` otherwise.
pub fn product_closed_form(m: u64, delta: u64) -> Result<CongruencePrediction> {
    require_divides_lambda(m, arith::carmichael_lambda(m), delta)?;
    let value = if delta == 2 && has_primitive_root(m) { -1 } else { 1 };
    Ok(CongruencePrediction::new(TheoremId::ClassProduct, value, m))
}

/// Class sums for `δ = 1` (≡ 1), `δ = 2` (≡ −1) and `4 | δ` (≡ 0), modulo `m`.
pub fn sum_small_delta(m: u64, delta: u64) -> Result<CongruencePrediction> {
    require_divides_lambda(m, arith::carmichael_lambda(m), delta)?;
    let value = match delta {
        1 => 1,
        // δ | λ(m) with δ = 2 already forces m > 2
        2 => -1,
        d if d % 4 == 0 => 0,
        _ => return Err(Error::NotApplicable("delta must be 1, 2 or a multiple of 4")),
    };
    Ok(CongruencePrediction::new(TheoremId::SmallDeltaSum, value, m))
}

const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

/// `m ≥ 3` of the form `2^k · (distinct Fermat primes)`.
pub fn is_constructible_gon(m: u64) -> bool {
    if m < 3 {
        return false;
    }
    let mut odd = m >> m.trailing_zeros();
    for p in FERMAT_PRIMES {
        if odd % p == 0 {
            odd /= p;
        }
    }
    odd == 1
}

/// Vanishing class sum modulo a constructible `m`, restricted to `δ > 2`.
pub fn constructible_gon_sum(m: u64, delta: u64) -> Result<CongruencePrediction> {
    if !is_constructible_gon(m) {
        return Err(Error::NotApplicable("m is not a constructible polygon order"));
    }
    require_divides_lambda(m, arith::carmichael_lambda(m), delta)?;
    if delta <= 2 {
        return Err(Error::NotApplicable("only delta > 2 has a vanishing sum"));
    }
    Ok(CongruencePrediction::new(TheoremId::ConstructibleGon, 0, m))
}

/// Class sum modulo `2^α`.
pub fn sum_power_of_two(alpha: u32, delta: u64) -> Result<CongruencePrediction> {
    if alpha == 0 || alpha > 63 {
        return Err(Error::Unsupported("exponent must be in 1..=63"));
    }
    let m = 1u64 << alpha;
    require_divides_lambda(m, lambda_prime_power(2, alpha), delta)?;
    let value = match (alpha, delta) {
        (1, _) => 1,
        (2 | 3, d) => {
            if d % 2 == 1 {
                1
            } else {
                -1
            }
        }
        (_, 1) => 1,
        (_, 2) => -1,
        // the remaining divisors of 2^{α-2} are 2^β with 2 ≤ β ≤ α-2
        _ => 0,
    };
    Ok(CongruencePrediction::new(TheoremId::PrimePowerSum, value, m))
}

/// Class sum modulo an odd prime power: `μ((δ, p−1)) · φ(p^{ord_p(δ)})`.
pub fn sum_odd_prime_power(p: u64, alpha: u32, delta: u64) -> Result<CongruencePrediction> {
    require_odd_prime(p)?;
    if alpha == 0 {
        return Err(Error::Zero);
    }
    let m = p.checked_pow(alpha).ok_or(Error::Overflow)?;
    require_divides_lambda(m, lambda_prime_power(p, alpha), delta)?;
    let g = gcd(delta, p - 1);
    let v = arith::ord_p(p, delta)?;
    let value = arith::mobius(g) as i128 * euler_phi(p.pow(v)) as i128;
    Ok(CongruencePrediction::new(TheoremId::PrimePowerSum, value, m))
}

/// Sum of the primitive roots modulo `p^α`: `μ(p−1) · φ(p^{α−1})`.
pub fn gauss_cai_primitive_root_sum(p: u64, alpha: u32) -> Result<CongruencePrediction> {
    require_odd_prime(p)?;
    if alpha == 0 {
        return Err(Error::Zero);
    }
    let m = p.checked_pow(alpha).ok_or(Error::Overflow)?;
    let value = arith::mobius(p - 1) as i128 * euler_phi(p.pow(alpha - 1)) as i128;
    Ok(CongruencePrediction::new(TheoremId::PrimitiveRoots, value, m))
}

/// Product of the primitive roots modulo `p^α` for `p > 3`: always 1.
pub fn gauss_cai_primitive_root_product(p: u64, alpha: u32) -> Result<CongruencePrediction> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::Unsupported("primitive-root product needs p > 3"));
    }
    if alpha == 0 {
        return Err(Error::Zero);
    }
    let m = p.checked_pow(alpha).ok_or(Error::Overflow)?;
    Ok(CongruencePrediction::new(TheoremId::PrimitiveRoots, 1, m))
}

/// Class sum modulo `p` for `m = pq`:
/// `μ(g) · I((δ/g, p−1)) · φ(δ)/φ(g)` with `g = (δ, p−1)`.
pub fn sum_two_primes_mod_p(p: u64, q: u64, delta: u64) -> Result<CongruencePrediction> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return Err(Error::Unsupported("p and q must be distinct"));
    }
    require_divides_lambda(p * q, arith::lcm(p - 1, q - 1), delta)?;
    let g = gcd(delta, p - 1);
    if gcd(delta / g, p - 1) != 1 {
        return Ok(CongruencePrediction::new(TheoremId::TwoPrimeSum, 0, p));
    }
    let (phi_delta, phi_g) = (euler_phi(delta), euler_phi(g));
    assert_eq!(phi_delta % phi_g, 0, "φ(g) divides φ(δ) whenever g | δ");
    let value = arith::mobius(g) as i128 * (phi_delta / phi_g) as i128;
    Ok(CongruencePrediction::new(TheoremId::TwoPrimeSum, value, p))
}

/// `F(a_1, …, a_k; n) = ∏_{p^α∥n} ∏_i (p^{ord_p(a_i)} if ord_p(a_i) < α, else φ(p^α))`.
pub fn f_function(a_list: &[u64], n: u64) -> Result<BigUint> {
    Ok(chain_product(a_list, n)?
        .to_biguint()
        .expect("F is a product of positive integers"))
}

/// The general class-sum formula modulo `p^α ∥ m`, without the odd-prime
/// restriction. At `p = 2` it does not describe the class sum (e.g. `m = 12`,
/// `δ = 2`), so callers should prefer [`sum_general_mod_prime_power`].
pub fn general_sum_formula(
    m_fact: &Factorization,
    p: u64,
    delta: u64,
) -> Result<CongruencePrediction> {
    let m = m_fact.value();
    require_divides_lambda(m, lambda_of(m_fact), delta)?;
    let alpha = m_fact.exponent(p);
    if alpha == 0 {
        return Err(Error::NotApplicable("p does not divide m"));
    }
    let modulus = p.pow(alpha);
    let g = gcd(delta, p - 1);
    let reduced = delta / g;
    if gcd(reduced, p - 1) != 1 {
        return Ok(CongruencePrediction::new(TheoremId::GeneralSum, 0, modulus));
    }
    let f = chain_product(&part_phis(m_fact), reduced)? % BigInt::from(modulus);
    let f = f.to_i128().expect("reduced below the modulus");
    let value = arith::mobius(g) as i128 * f;
    Ok(CongruencePrediction::new(TheoremId::GeneralSum, value, modulus))
}

/// Class sum modulo an odd prime-power part `p^α ∥ m`:
/// `μ(g) · I((δ/g, p−1)) · F(φ(p_1^{α_1}), …, φ(p_k^{α_k}); δ/g)` with
/// `g = (δ, p−1)`.
pub fn sum_general_mod_prime_power(
    m_fact: &Factorization,
    p: u64,
    delta: u64,
) -> Result<CongruencePrediction> {
    if p == 2 {
        return Err(Error::Unsupported("the general sum formula holds only for odd p"));
    }
    require_odd_prime(p)?;
    general_sum_formula(m_fact, p, delta)
}

/// The same expression as [`sum_general_mod_prime_power`] with `F` replaced
/// by the exact value of the lcm-convolution chain
/// `(φχ_{φ(p_1^{α_1})} ∘ ⋯ ∘ φχ_{φ(p_k^{α_k})})(δ/g)` it stands for
/// (see [`phi_chi_chain`](crate::convolution::phi_chi_chain)). The two differ
/// when the full power of some prime of `δ/g` divides more than one of the
/// `φ(p_i^{α_i})`.
pub fn sum_general_via_lcm_chain(
    m_fact: &Factorization,
    p: u64,
    delta: u64,
) -> Result<CongruencePrediction> {
    if p == 2 {
        return Err(Error::Unsupported("the general sum formula holds only for odd p"));
    }
    require_odd_prime(p)?;
    let m = m_fact.value();
    require_divides_lambda(m, lambda_of(m_fact), delta)?;
    let alpha = m_fact.exponent(p);
    if alpha == 0 {
        return Err(Error::NotApplicable("p does not divide m"));
    }
    let modulus = p.pow(alpha);
    let g = gcd(delta, p - 1);
    let reduced = delta / g;
    if gcd(reduced, p - 1) != 1 {
        return Ok(CongruencePrediction::new(TheoremId::GeneralSum, 0, modulus));
    }
    let chain = crate::convolution::phi_chi_chain(&part_phis(m_fact), reduced)?;
    let chain = chain.numer() % BigInt::from(modulus);
    let value = arith::mobius(g) as i128 * chain.to_i128().expect("reduced below the modulus");
    Ok(CongruencePrediction::new(TheoremId::GeneralSum, value, modulus))
}

fn part_phis(m_fact: &Factorization) -> Vec<u64> {
    m_fact
        .prime_powers()
        .iter()
        .map(|&(q, e)| (q - 1) * q.pow(e - 1))
        .collect()
}

/// Every closed form that applies to the class sum of `(m, δ)`.
pub fn sum_predictions(m: u64, delta: u64) -> Result<Vec<CongruencePrediction>> {
    let fact = factorize(m)?;
    require_divides_lambda(m, lambda_of(&fact), delta)?;
    let mut out = Vec::new();
    if let Ok(p) = sum_small_delta(m, delta) {
        out.push(p);
    }
    if let Ok(p) = constructible_gon_sum(m, delta) {
        out.push(p);
    }
    match fact.prime_powers() {
        [(2, a)] => out.push(sum_power_of_two(*a, delta)?),
        [(p, a)] => {
            out.push(sum_odd_prime_power(*p, *a, delta)?);
            if delta == euler_phi(m) {
                out.push(gauss_cai_primitive_root_sum(*p, *a)?);
            }
        }
        [(p, 1), (q, 1)] if *p > 2 => {
            out.push(sum_two_primes_mod_p(*p, *q, delta)?);
            out.push(sum_two_primes_mod_p(*q, *p, delta)?);
        }
        _ => {}
    }
    for p in fact.primes().filter(|&p| p != 2) {
        out.push(sum_general_mod_prime_power(&fact, p, delta)?);
    }
    Ok(out)
}

/// Every closed form that applies to the class product of `(m, δ)`.
pub fn product_predictions(m: u64, delta: u64) -> Result<Vec<CongruencePrediction>> {
    let mut out = vec![product_closed_form(m, delta)?];
    if let Some((p, a)) = arith::prime_power(m) {
        if p > 3 && delta == euler_phi(m) {
            out.push(gauss_cai_primitive_root_product(p, a)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::enumerate_index_class;

    fn oracle_sum(m: u64, delta: u64) -> u64 {
        enumerate_index_class(m, delta).unwrap().sum_mod
    }

    fn oracle_product(m: u64, delta: u64) -> u64 {
        enumerate_index_class(m, delta).unwrap().product_mod
    }

    #[test]
    fn theorem_ids_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>(), Ok(t));
        }
        assert!("bogus".parse::<TheoremId>().is_err());
        assert_eq!("corollary".parse::<TheoremId>(), Ok(TheoremId::ConstructibleGon));
    }

    #[test]
    fn product_examples() {
        assert_eq!(oracle_product(7, 2), 6);
        assert_eq!(product_closed_form(7, 2).unwrap().value, 6);
        assert_eq!(oracle_product(8, 2), 1);
        assert_eq!(product_closed_form(8, 2).unwrap().value, 1);
        assert_eq!(oracle_product(7, 3), 1);
        assert_eq!(product_closed_form(7, 3).unwrap().value, 1);
        assert!(matches!(product_closed_form(7, 4), Err(Error::EmptyClass { .. })));
    }

    #[test]
    fn small_delta_examples() {
        for m in [3u64, 10, 97, 1000] {
            assert_eq!(sum_small_delta(m, 1).unwrap().value, 1);
        }
        assert_eq!(oracle_sum(15, 4), 0);
        assert_eq!(sum_small_delta(15, 4).unwrap().value, 0);
        assert_eq!(oracle_sum(8, 2), 7);
        assert_eq!(sum_small_delta(8, 2).unwrap().value, 7);
        assert!(matches!(sum_small_delta(7, 3), Err(Error::NotApplicable(_))));
        assert!(matches!(sum_small_delta(7, 4), Err(Error::EmptyClass { .. })));
    }

    #[test]
    fn constructible() {
        assert!(is_constructible_gon(17));
        assert!(!is_constructible_gon(7));
        assert!(is_constructible_gon(60));
        assert!(is_constructible_gon(4));
        assert!(!is_constructible_gon(9));
        assert!(!is_constructible_gon(2));
        assert!(is_constructible_gon(3 * 5 * 17 * 257 * 65537));
        assert!(constructible_gon_sum(17, 2).is_err());
        assert_eq!(constructible_gon_sum(17, 8).unwrap().value, 0);
    }

    #[test]
    fn power_of_two_examples() {
        assert_eq!(oracle_sum(8, 2), 7);
        assert_eq!(sum_power_of_two(3, 2).unwrap().value, 7);
        assert_eq!(oracle_sum(16, 4), 0);
        assert_eq!(sum_power_of_two(4, 4).unwrap().value, 0);
        assert_eq!(sum_power_of_two(2, 1).unwrap().value, 1);
        assert_eq!(sum_power_of_two(1, 1).unwrap().value, 1);
        assert!(sum_power_of_two(4, 8).is_err());
    }

    #[test]
    fn odd_prime_power_examples() {
        assert_eq!(oracle_sum(7, 3), 6);
        assert_eq!(sum_odd_prime_power(7, 1, 3).unwrap().value, 6);
        assert_eq!(oracle_sum(9, 6), 7);
        assert_eq!(sum_odd_prime_power(3, 2, 6).unwrap().value, 7);
        assert_eq!(oracle_sum(9, 3), 2);
        assert_eq!(sum_odd_prime_power(3, 2, 3).unwrap().value, 2);
        assert_eq!(sum_odd_prime_power(2, 3, 2), Err(Error::Unsupported("p must be odd")));
    }

    #[test]
    fn primitive_root_examples() {
        // rows settled by the oracle
        assert_eq!(oracle_sum(7, 6), 1);
        assert_eq!(gauss_cai_primitive_root_sum(7, 1).unwrap().value, 1);
        assert_eq!(oracle_sum(5, 4), 0);
        assert_eq!(gauss_cai_primitive_root_sum(5, 1).unwrap().value, 0);
        assert_eq!(enumerate_index_class(9, 6).unwrap().elements.unwrap(), vec![2, 5]);
        assert_eq!(oracle_sum(9, 6), 7);
        assert_eq!(gauss_cai_primitive_root_sum(3, 2).unwrap().value, 7);
        for (p, a) in [(5u64, 1u32), (7, 1), (5, 2)] {
            let m = p.pow(a);
            assert_eq!(oracle_product(m, euler_phi(m)), 1);
            assert_eq!(gauss_cai_primitive_root_product(p, a).unwrap().value, 1);
        }
        assert!(gauss_cai_primitive_root_product(3, 1).is_err());
    }

    #[test]
    fn two_prime_examples() {
        assert_eq!(enumerate_index_class(21, 3).unwrap().elements.unwrap(), vec![4, 16]);
        assert_eq!(oracle_sum(21, 3), 20);
        assert_eq!(sum_two_primes_mod_p(3, 7, 3).unwrap().value, 2);
        assert_eq!(sum_two_primes_mod_p(7, 3, 3).unwrap().value, 6);
        assert_eq!(oracle_sum(15, 4), 0);
        assert_eq!(sum_two_primes_mod_p(3, 5, 4).unwrap().value, 0);
        assert!(sum_two_primes_mod_p(3, 3, 1).is_err());
    }

    #[test]
    fn f_function_examples() {
        assert_eq!(f_function(&[2, 6], 3).unwrap(), BigUint::from(2u32));
        assert_eq!(f_function(&[2, 6, 100], 1).unwrap(), BigUint::from(1u32));
        // p = 2, α = 2: ord_2(4) = 2 gives φ(4) = 2, ord_2(2) = 1 gives 2
        assert_eq!(f_function(&[4, 2], 4).unwrap(), BigUint::from(4u32));
        assert!(f_function(&[], 4).is_err());
    }

    #[test]
    fn general_sum_examples() {
        let f21 = factorize(21).unwrap();
        assert_eq!(sum_general_mod_prime_power(&f21, 3, 3).unwrap().value, 2);
        assert_eq!(sum_general_mod_prime_power(&f21, 7, 3).unwrap().value, 6);
        let f36 = factorize(36).unwrap();
        assert_eq!(
            enumerate_index_class(36, 6).unwrap().elements.unwrap(),
            vec![5, 7, 11, 23, 29, 31]
        );
        assert_eq!(oracle_sum(36, 6) % 9, 7);
        let p = sum_general_mod_prime_power(&f36, 3, 6).unwrap();
        assert_eq!((p.value, p.asserted_modulus), (7, 9));
        assert!(sum_general_mod_prime_power(&f36, 2, 6).is_err());
    }

    #[test]
    fn general_formula_fails_at_two() {
        let f12 = factorize(12).unwrap();
        assert_eq!(oracle_sum(12, 2) % 4, 3);
        assert_eq!(general_sum_formula(&f12, 2, 2).unwrap().value, 1);
        assert_eq!(
            sum_general_mod_prime_power(&f12, 2, 2),
            Err(Error::Unsupported("the general sum formula holds only for odd p"))
        );
    }

    #[test]
    fn prediction_lists() {
        let preds = sum_predictions(21, 3).unwrap();
        let mods: Vec<u64> = preds.iter().map(|p| p.asserted_modulus).collect();
        assert_eq!(mods, vec![3, 7, 3, 7]);
        assert!(preds.iter().all(|p| p.agrees_with(20)));
        let preds = sum_predictions(9, 6).unwrap();
        assert!(preds.iter().all(|p| p.value == 7));
        assert!(sum_predictions(7, 5).is_err());
        assert_eq!(product_predictions(25, 20).unwrap().len(), 2);
    }

    #[test]
    fn general_sum_printed_formula_vs_chain() {
        // 455 = 5·7·13, δ = 3: the elements of order 3 are ≡ 1 (mod 5), and
        // there are 2·1 + 1·2 + 2·2 = 8 of them
        let f = factorize(455).unwrap();
        let class = enumerate_index_class(455, 3).unwrap();
        assert_eq!(class.count, 8);
        assert_eq!(class.sum_mod % 5, 3);
        assert_eq!(sum_general_via_lcm_chain(&f, 5, 3).unwrap().value, 3);
        assert_eq!(sum_general_mod_prime_power(&f, 5, 3).unwrap().value, 4);
        let f63 = factorize(63).unwrap();
        assert_eq!(oracle_sum(63, 3) % 9, 8);
        assert_eq!(sum_general_mod_prime_power(&f63, 3, 3).unwrap().value, 4);
        assert_eq!(sum_general_via_lcm_chain(&f63, 3, 3).unwrap().value, 8);
    }

    #[test]
    fn f_function_agrees_with_chain_iff_exactly_one_full_valuation() {
        use crate::convolution::phi_chi_chain;
        let phis: Vec<u64> = (2..=100u64)
            .filter_map(arith::prime_power)
            .map(|(p, e)| (p - 1) * p.pow(e - 1))
            .collect();
        let lists: Vec<Vec<u64>> = phis
            .iter()
            .step_by(3)
            .flat_map(|&a| phis.iter().step_by(5).map(move |&b| vec![a, b]))
            .chain(phis.windows(3).map(|w| w.to_vec()))
            .collect();
        let mut disagreements = 0;
        for list in &lists {
            for n in 1..=2000u64 {
                let fact = factorize(n).unwrap();
                let one_full = fact.prime_powers().iter().all(|&(p, a)| {
                    list.iter().filter(|&&b| arith::ord_p(p, b).unwrap() >= a).count() == 1
                });
                let printed = BigInt::from(f_function(list, n).unwrap());
                let chain = phi_chi_chain(list, n).unwrap();
                assert!(chain.is_integer());
                let agree = &printed == chain.numer();
                assert_eq!(agree, one_full, "{list:?} n={n}");
                disagreements += usize::from(!agree);
            }
        }
        assert!(disagreements > 0);
    }
}
