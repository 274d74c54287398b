//! Arithmetical functions with exact rational values, under Dirichlet
//! convolution `(f*g)(n) = Σ_{ab=n} f(a)g(b)` and lcm convolution
//! `(f∘g)(n) = Σ_{[a,b]=n} f(a)g(b)`.
//!
//! Equality of two functions is only ever checked on a prefix `1..=N`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock, Weak};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, factorize, gcd, lcm, Factorization};
use crate::{Error, Rational, Result};

type Rule = dyn Fn(u64) -> Rational + Send + Sync;

struct Inner {
    name: Option<String>,
    rule: Box<Rule>,
    cache: RwLock<HashMap<u64, Rational>>,
}

/// A function `ℤ⁺ → ℚ` with a memoizing, thread-safe evaluation cache.
///
/// Cloning is cheap and clones share the cache.
#[derive(Clone)]
pub struct ArithFn(Arc<Inner>);

impl fmt::Debug for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("ArithFn")
            .field(&self.name().unwrap_or("<anonymous>"))
            .finish()
    }
}

impl ArithFn {
    pub fn new(name: impl Into<String>, rule: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Self {
        Self::build(Some(name.into()), Box::new(rule))
    }

    pub fn anonymous(rule: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Self {
        Self::build(None, Box::new(rule))
    }

    fn build(name: Option<String>, rule: Box<Rule>) -> Self {
        ArithFn(Arc::new(Inner {
            name,
            rule,
            cache: RwLock::new(HashMap::new()),
        }))
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    /// `f(n)`. Panics for `n = 0`, which is outside the domain.
    pub fn eval(&self, n: u64) -> Rational {
        assert!(n > 0, "arithmetical functions are defined on positive integers");
        if let Some(v) = self.0.cache.read().expect("cache poisoned").get(&n) {
            return v.clone();
        }
        // computed without holding the lock: rules may recurse into `self`
        let v = (self.0.rule)(n);
        self.0
            .cache
            .write()
            .expect("cache poisoned")
            .entry(n)
            .or_insert(v)
            .clone()
    }

    /// `u ≡ 1`.
    pub fn u() -> Self {
        Self::new("u", |_| Rational::one())
    }

    /// `I(n) = ⌊1/n⌋`, the Dirichlet identity.
    pub fn unit() -> Self {
        Self::new("I", |n| Rational::from(arith::unit_indicator(n)))
    }

    pub fn mobius() -> Self {
        Self::new("mu", |n| Rational::from(arith::mobius(n)))
    }

    pub fn phi() -> Self {
        Self::new("phi", |n| Rational::from(arith::euler_phi(n)))
    }

    pub fn lambda() -> Self {
        Self::new("lambda", |n| Rational::from(arith::carmichael_lambda(n)))
    }

    /// The identity function `n ↦ n`.
    pub fn id() -> Self {
        Self::new("id", Rational::from)
    }

    /// Lehmer's `M`, the lcm-convolution inverse of `u`.
    pub fn lehmer_m() -> Self {
        Self::new("M", lehmer_m)
    }

    /// `χ_a(d) = 1` iff `d | a`.
    pub fn chi(a: u64) -> Self {
        assert!(a > 0);
        Self::new(format!("chi_{a}"), move |d| Rational::from(arith::divides_indicator(d, a)))
    }

    /// Pointwise product `n ↦ f(n)g(n)`.
    pub fn pointwise(&self, other: &ArithFn) -> Self {
        let (f, g) = (self.clone(), other.clone());
        let name = format!("{}·{}", self.label(), other.label());
        Self::new(name, move |n| f.eval(n) * g.eval(n))
    }

    /// `n ↦ c·f(n)`.
    pub fn scale(&self, c: Rational) -> Self {
        let f = self.clone();
        let name = format!("({c})·{}", self.label());
        Self::new(name, move |n| &c * &f.eval(n))
    }

    pub fn dirichlet(&self, other: &ArithFn) -> Self {
        dirichlet_conv(self, other)
    }

    pub fn lcm_conv(&self, other: &ArithFn) -> Self {
        lcm_conv(self, other)
    }

    /// `n ↦ Σ_{d|n} f(d)`, i.e. `f * u`.
    pub fn summatory(&self) -> Self {
        let f = self.clone();
        let name = format!("{}*u", self.label());
        Self::new(name, move |n| arith::divisors(n).into_iter().map(|d| f.eval(d)).sum())
    }

    /// The Dirichlet inverse, defined when `f(1) ≠ 0`.
    pub fn dirichlet_inverse(&self) -> Result<Self> {
        dirichlet_inverse(self)
    }

    /// First `n ≤ limit` where the two functions differ.
    pub fn first_difference(&self, other: &ArithFn, limit: u64) -> Option<u64> {
        (1..=limit).find(|&n| self.eval(n) != other.eval(n))
    }

    pub fn agrees_on(&self, other: &ArithFn, limit: u64) -> bool {
        self.first_difference(other, limit).is_none()
    }

    fn label(&self) -> String {
        self.name().unwrap_or("f").to_owned()
    }

    /// A multiplicative function with `f(1) = 1` and pseudo-random values at
    /// prime powers: numerator in `[-5, 5] \ {0}`, denominator in `[1, 5]`.
    /// The value at `p^e` depends only on `(seed, p, e)`.
    pub fn random_multiplicative(seed: u64) -> Self {
        Self::new(format!("rand_mult[{seed}]"), move |n| {
            let f = factorize(n).expect("n > 0");
            f.prime_powers()
                .iter()
                .map(|&(p, e)| small_rational(derive_seed(&[seed, p, e as u64])))
                .product()
        })
    }

    /// A pseudo-random function with no structure: every value, including
    /// `f(1)`, is drawn independently from the same distribution as
    /// [`random_multiplicative`](Self::random_multiplicative).
    pub fn random_arbitrary(seed: u64) -> Self {
        Self::new(format!("rand[{seed}]"), move |n| {
            small_rational(derive_seed(&[seed, n, 0xA5A5]))
        })
    }
}

/// Mixes a list of words into one seed (splitmix64 finalizer per word).
pub fn derive_seed(parts: &[u64]) -> u64 {
    parts.iter().fold(0x9E37_79B9_7F4A_7C15u64, |acc, &x| {
        let mut z = acc ^ x.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    })
}

fn small_rational(seed: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut numer = 0i64;
    while numer == 0 {
        numer = rng.gen_range(-5..=5);
    }
    let denom = rng.gen_range(1..=5);
    Rational::new(numer, denom)
}

pub fn dirichlet_conv(f: &ArithFn, g: &ArithFn) -> ArithFn {
    let (f2, g2) = (f.clone(), g.clone());
    ArithFn::new(format!("({}*{})", f.label(), g.label()), move |n| {
        arith::divisors(n)
            .into_iter()
            .map(|a| f2.eval(a) * g2.eval(n / a))
            .sum()
    })
}

/// Sum over ordered divisor pairs `(a, b)` of `n` with `lcm(a, b) = n`.
pub fn lcm_conv(f: &ArithFn, g: &ArithFn) -> ArithFn {
    let (f2, g2) = (f.clone(), g.clone());
    ArithFn::new(format!("({}∘{})", f.label(), g.label()), move |n| {
        let divs = arith::divisors(n);
        let mut acc = Rational::zero();
        for &a in &divs {
            let fa = f2.eval(a);
            if fa.is_zero() {
                continue;
            }
            for &b in &divs {
                if lcm(a, b) == n {
                    acc += &fa * &g2.eval(b);
                }
            }
        }
        acc
    })
}

/// `g(1) = 1/f(1)`, `g(n) = -f(1)^{-1} Σ_{d|n, d<n} f(n/d) g(d)`.
pub fn dirichlet_inverse(f: &ArithFn) -> Result<ArithFn> {
    let f1 = f.eval(1);
    if f1.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv_f1 = f1.recip();
    let f = f.clone();
    let name = format!("{}^-1", f.label());
    let inner = Arc::new_cyclic(|weak: &Weak<Inner>| {
        let me = weak.clone();
        let rule = move |n: u64| {
            if n == 1 {
                return inv_f1.clone();
            }
            let this = ArithFn(me.upgrade().expect("inverse outlives its own evaluation"));
            let s: Rational = arith::divisors(n)
                .into_iter()
                .filter(|&d| d < n)
                .map(|d| f.eval(n / d) * this.eval(d))
                .sum();
            -(s * &inv_f1)
        };
        Inner {
            name: Some(name),
            rule: Box::new(rule),
            cache: RwLock::new(HashMap::new()),
        }
    });
    Ok(ArithFn(inner))
}

/// `M(n) = ∏_{p^α ∥ n} (1/(α+1) − 1/α)`, with `M(1) = 1`.
pub fn lehmer_m(n: u64) -> Rational {
    factorize(n)
        .expect("lehmer_m takes a positive integer")
        .prime_powers()
        .iter()
        .map(|&(_, a)| {
            let a = a as i64;
            Rational::new(-1, a * (a + 1))
        })
        .product()
}

/// `(μχ_a ∘ g)(n) = μ((n,a)) · I((n/(n,a), a)) · g(n/(n,a))` for
/// multiplicative `g` with `g(1) = 1`.
pub fn mu_chi_lcm_g(a: u64, g: &ArithFn, n: u64) -> Rational {
    assert!(a > 0 && n > 0);
    let d = gcd(n, a);
    let rest = n / d;
    if gcd(rest, a) != 1 {
        return Rational::zero();
    }
    Rational::from(arith::mobius(d)) * g.eval(rest)
}

/// Closed form of `(φχ_{b_1} ∘ ⋯ ∘ φχ_{b_k})(n)`.
///
/// Since `(φχ_b * u)(p^j) = p^{min(j, ord_p(b))}`, the chain is
/// multiplicative with value `∏_i p^{min(α, v_i)} − ∏_i p^{min(α−1, v_i)}`
/// at `p^α`, where `v_i = ord_p(b_i)`. This agrees with the per-factor
/// product [`theorems::f_function`](crate::theorems::f_function) exactly
/// when, for each `p^α ∥ n`, a single `v_i` reaches `α`.
pub fn phi_chi_chain(b_list: &[u64], n: u64) -> Result<Rational> {
    let v = chain_eval(b_list, n, |p, alpha, vals| {
        let upper: BigInt = vals.iter().map(|&v| BigInt::from(p).pow(v.min(alpha))).product();
        let lower: BigInt = vals
            .iter()
            .map(|&v| BigInt::from(p).pow(v.min(alpha - 1)))
            .product();
        upper - lower
    })?;
    Ok(Rational::from_integer(v))
}

/// Shared evaluation of the printed `φχ` chain product as an exact integer.
pub(crate) fn chain_product(b_list: &[u64], n: u64) -> Result<BigInt> {
    chain_eval(b_list, n, |p, alpha, vals| {
        let phi_pa = (p - 1) * p.pow(alpha - 1);
        vals.iter()
            .map(|&v| BigInt::from(if v < alpha { p.pow(v) } else { phi_pa }))
            .product()
    })
}

fn chain_eval(
    b_list: &[u64],
    n: u64,
    local: impl Fn(u64, u32, &[u32]) -> BigInt,
) -> Result<BigInt> {
    if b_list.is_empty() {
        return Err(Error::NotApplicable("empty argument list"));
    }
    if b_list.contains(&0) {
        return Err(Error::Zero);
    }
    let fact: Factorization = factorize(n)?;
    let mut acc = BigInt::from(1);
    for &(p, alpha) in fact.prime_powers() {
        let vals = b_list
            .iter()
            .map(|&b| arith::ord_p(p, b))
            .collect::<Result<Vec<_>>>()?;
        acc *= local(p, alpha, &vals);
    }
    Ok(acc)
}

/// `Σ_{[a,b]=n} μ(a)f(a) = ∏_{p²|n} (1 − f(p)) ∏_{p∥n} (1 − 2f(p))` for
/// multiplicative `f`.
pub fn mu_f_lcm_u(f: &ArithFn, n: u64) -> Rational {
    factorize(n)
        .expect("mu_f_lcm_u takes a positive integer")
        .prime_powers()
        .iter()
        .map(|&(p, e)| {
            let fp = f.eval(p);
            let k = if e >= 2 { 1 } else { 2 };
            Rational::one() - Rational::from(k as i64) * fp
        })
        .product()
}
