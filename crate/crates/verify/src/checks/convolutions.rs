//! Identities between Dirichlet and lcm convolutions, checked pointwise
//! with exact rationals. Subjects are the arguments `n` of the functions.

use idxsum_core::arith::{self, factorize, gcd};
use idxsum_core::convolution::{derive_seed, mu_f_lcm_u};
use idxsum_core::{ArithFn, Rational, TheoremId};

use crate::check::{Check, Subject, Tally};

/// `(M ∘ u)(n) = I(n)`.
pub struct LehmerInverse {
    lhs: ArithFn,
    unit: ArithFn,
}

impl LehmerInverse {
    pub fn new() -> Self {
        Self {
            lhs: ArithFn::lehmer_m().lcm_conv(&ArithFn::u()),
            unit: ArithFn::unit(),
        }
    }
}

impl Default for LehmerInverse {
    fn default() -> Self {
        Self::new()
    }
}

impl Check for LehmerInverse {
    fn id(&self) -> TheoremId {
        TheoremId::LehmerInverse
    }

    fn needs_profile(&self) -> bool {
        false
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        tally.identity(s.n, 0, "(M o u)(n) vs I(n)", self.lhs.eval(s.n), self.unit.eval(s.n));
    }
}

pub const BRIDGE_PAIRS: u64 = 20;

struct BridgePair {
    lhs_f: ArithFn,
    lhs_g: ArithFn,
    rhs: ArithFn,
}

/// `(f*u)(n) · (g*u)(n) = ((f∘g)*u)(n)` for seeded random multiplicative
/// pairs; one case per pair and `n`, with the pair index as `delta`.
pub struct LcmDirichletBridge {
    pairs: Vec<BridgePair>,
}

impl LcmDirichletBridge {
    pub fn new(seed: u64) -> Self {
        let pairs = (0..BRIDGE_PAIRS)
            .map(|i| {
                let f = ArithFn::random_multiplicative(derive_seed(&[seed, i, 0]));
                let g = ArithFn::random_multiplicative(derive_seed(&[seed, i, 1]));
                BridgePair {
                    lhs_f: f.summatory(),
                    lhs_g: g.summatory(),
                    rhs: f.lcm_conv(&g).summatory(),
                }
            })
            .collect();
        Self { pairs }
    }
}

impl Check for LcmDirichletBridge {
    fn id(&self) -> TheoremId {
        TheoremId::LcmDirichletBridge
    }

    fn needs_profile(&self) -> bool {
        false
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let n = s.n;
        for (i, pair) in self.pairs.iter().enumerate() {
            let lhs = pair.lhs_f.eval(n) * pair.lhs_g.eval(n);
            tally.identity(n, i as u64, "(f*u)(g*u) vs (f o g)*u", lhs, pair.rhs.eval(n));
        }
    }
}

/// The lcm-convolution identities with `μ`, one case per part and `n`
/// (`delta` is the part number; 5 is multiplicative closure):
///
/// 1. `(f ∘ μ)(n) = f(1)μ(n)` for an unstructured random `f`.
/// 2. `f∘g = I` on the divisors of `n` iff `(f*u)(g*u) = 1` there, for
///    `(f, g) = (M, u)` and `(u, u)`.
/// 3. The prime-power expansion of `(f∘g)(p^α)` for `p ∈ {2, 3, 5}`, `α ≤ 6`.
/// 4. `Σ_{[a,b]=n} μ(a)f(a)` against its product formula for multiplicative
///    `f`; on perfect squares also `(μf * u)(n) = (μf ∘ u)(n)`.
/// 5. `f∘g` is multiplicative on coprime splits of `n` for multiplicative
///    `f`, `g`.
pub struct LcmIdentities {
    arbitrary: ArithFn,
    arbitrary_g: ArithFn,
    f_lcm_mu: ArithFn,
    mu: ArithFn,
    iff_pairs: Vec<(ArithFn, ArithFn, ArithFn)>,
    unit: ArithFn,
    mult: ArithFn,
    mu_mult_lcm_u: ArithFn,
    mu_mult_dir_u: ArithFn,
    mult_lcm: ArithFn,
}

impl LcmIdentities {
    pub fn new(seed: u64) -> Self {
        let arbitrary = ArithFn::random_arbitrary(derive_seed(&[seed, 5, 0]));
        let arbitrary_g = ArithFn::random_arbitrary(derive_seed(&[seed, 5, 1]));
        let mu = ArithFn::mobius();
        let u = ArithFn::u();
        let iff_pairs = [(ArithFn::lehmer_m(), u.clone()), (u.clone(), u.clone())]
            .into_iter()
            .map(|(f, g)| (f.lcm_conv(&g), f.summatory(), g.summatory()))
            .collect();
        let mult = ArithFn::random_multiplicative(derive_seed(&[seed, 5, 2]));
        let mult_g = ArithFn::random_multiplicative(derive_seed(&[seed, 5, 3]));
        let mu_mult = mu.pointwise(&mult);
        Self {
            f_lcm_mu: arbitrary.lcm_conv(&mu),
            arbitrary,
            arbitrary_g,
            mu,
            iff_pairs,
            unit: ArithFn::unit(),
            mu_mult_lcm_u: mu_mult.lcm_conv(&u),
            mu_mult_dir_u: mu_mult.dirichlet(&u),
            mult_lcm: mult.lcm_conv(&mult_g),
            mult,
        }
    }

    fn prime_power_expansion(&self, p: u64, alpha: u32) -> (Rational, Rational) {
        let (f, g) = (&self.arbitrary, &self.arbitrary_g);
        let pa = p.pow(alpha);
        let below = |h: &ArithFn| -> Rational { (0..alpha).map(|i| h.eval(p.pow(i))).sum() };
        let closed = f.eval(pa) * below(g) + g.eval(pa) * below(f) + f.eval(pa) * g.eval(pa);
        (f.lcm_conv(g).eval(pa), closed)
    }
}

impl Check for LcmIdentities {
    fn id(&self) -> TheoremId {
        TheoremId::LcmIdentities
    }

    fn needs_profile(&self) -> bool {
        false
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let n = s.n;
        let divs = arith::divisors(n);

        let rhs = self.arbitrary.eval(1) * self.mu.eval(n);
        tally.identity(n, 1, "(f o mu)(n) vs f(1)mu(n)", self.f_lcm_mu.eval(n), rhs);

        for (lcm_fg, sf, sg) in &self.iff_pairs {
            let is_identity = divs.iter().all(|&d| lcm_fg.eval(d) == self.unit.eval(d));
            let product_one = divs.iter().all(|&d| (sf.eval(d) * sg.eval(d)).is_one());
            tally.identity(n, 2, "f o g = I iff (f*u)(g*u) = 1", is_identity, product_one);
        }

        if let Some((p, alpha)) = arith::prime_power(n) {
            if matches!(p, 2 | 3 | 5) && alpha <= 6 {
                let (lhs, rhs) = self.prime_power_expansion(p, alpha);
                tally.identity(n, 3, "(f o g)(p^a) expansion", lhs, rhs);
            }
        }

        tally.identity(
            n,
            4,
            "sum over [a,b]=n of mu(a)f(a) vs product formula",
            self.mu_mult_lcm_u.eval(n),
            mu_f_lcm_u(&self.mult, n),
        );
        let root = (n as f64).sqrt().round() as u64;
        if root * root == n {
            tally.identity(
                n,
                4,
                "(mu f * u)(n) vs (mu f o u)(n) on squares",
                self.mu_mult_dir_u.eval(n),
                self.mu_mult_lcm_u.eval(n),
            );
        }

        let parts: Vec<u64> = factorize(n)
            .expect("n > 0")
            .prime_powers()
            .iter()
            .map(|&(p, e)| p.pow(e))
            .collect();
        for mask in 1u32..(1u32 << parts.len()).saturating_sub(1) {
            let a: u64 = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q)
                .product();
            let b = n / a;
            if a > b {
                continue;
            }
            debug_assert_eq!(gcd(a, b), 1);
            tally.identity(
                n,
                5,
                "(f o g)(ab) vs (f o g)(a)(f o g)(b)",
                self.mult_lcm.eval(n),
                self.mult_lcm.eval(a) * self.mult_lcm.eval(b),
            );
        }
    }
}
