//! Closed-form class sums and products against the enumerated classes.

use idxsum_core::arith::{self, euler_phi};
use idxsum_core::theorems::{self, TheoremId};
use idxsum_core::Error;

use crate::check::{Check, Subject, Tally};
use crate::report::ScopeNote;

pub struct ClassProduct;

impl Check for ClassProduct {
    fn id(&self) -> TheoremId {
        TheoremId::ClassProduct
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        for class in &s.profile().classes {
            let pred = theorems::product_closed_form(s.n, class.delta).expect("δ | λ(m)");
            tally.congruence(s.n, class.delta, &pred, class.product_mod);
        }
    }
}

pub struct SmallDeltaSum;

impl Check for SmallDeltaSum {
    fn id(&self) -> TheoremId {
        TheoremId::SmallDeltaSum
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        for class in &s.profile().classes {
            match theorems::sum_small_delta(s.n, class.delta) {
                Ok(pred) => tally.congruence(s.n, class.delta, &pred, class.sum_mod),
                Err(Error::NotApplicable(_)) => tally.skip("delta is not 1, 2 or a multiple of 4"),
                Err(e) => unreachable!("{e}"),
            }
        }
    }
}

pub struct PrimePowerSum;

impl Check for PrimePowerSum {
    fn id(&self) -> TheoremId {
        TheoremId::PrimePowerSum
    }

    fn applies_to(&self, n: u64) -> bool {
        arith::prime_power(n).is_some()
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let (p, alpha) = arith::prime_power(s.n).expect("applies_to");
        for class in &s.profile().classes {
            let pred = if p == 2 {
                theorems::sum_power_of_two(alpha, class.delta)
            } else {
                theorems::sum_odd_prime_power(p, alpha, class.delta)
            }
            .expect("δ | λ(p^α)");
            tally.congruence(s.n, class.delta, &pred, class.sum_mod);
        }
    }
}

fn odd_semiprime(n: u64) -> Option<(u64, u64)> {
    let f = arith::factorize(n).ok()?;
    match f.prime_powers() {
        [(p, 1), (q, 1)] if *p > 2 => Some((*p, *q)),
        _ => None,
    }
}

pub struct TwoPrimeSum;

impl Check for TwoPrimeSum {
    fn id(&self) -> TheoremId {
        TheoremId::TwoPrimeSum
    }

    fn applies_to(&self, n: u64) -> bool {
        odd_semiprime(n).is_some()
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let (p, q) = odd_semiprime(s.n).expect("applies_to");
        for class in &s.profile().classes {
            for (a, b) in [(p, q), (q, p)] {
                let pred = theorems::sum_two_primes_mod_p(a, b, class.delta).expect("δ | λ(pq)");
                tally.congruence(s.n, class.delta, &pred, class.sum_mod);
            }
        }
    }
}

pub const EVEN_PART_SKIP: &str = "p = 2 is outside the general formula's scope";

/// One case per odd `p^α ∥ m` and `δ | λ(m)`. The `p = 2` part is skipped;
/// where the unrestricted formula disagrees there, a scope note records it.
pub struct GeneralSum;

impl Check for GeneralSum {
    fn id(&self) -> TheoremId {
        TheoremId::GeneralSum
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let profile = s.profile();
        let fact = &profile.factorization;
        for class in &profile.classes {
            for p in fact.primes() {
                if p == 2 {
                    tally.skip(EVEN_PART_SKIP);
                    let raw = theorems::general_sum_formula(fact, 2, class.delta).expect("δ | λ(m)");
                    if !raw.agrees_with(class.sum_mod) {
                        tally.scope_notes.push(ScopeNote {
                            m: s.n,
                            delta: class.delta,
                            asserted_modulus: raw.asserted_modulus,
                            formula: raw.value,
                            oracle: class.sum_mod % raw.asserted_modulus,
                            reason: EVEN_PART_SKIP.to_owned(),
                        });
                    }
                    continue;
                }
                let pred =
                    theorems::sum_general_mod_prime_power(fact, p, class.delta).expect("odd p, δ | λ(m)");
                tally.congruence(s.n, class.delta, &pred, class.sum_mod);
            }
        }
    }
}

/// Constructible `m`, cases for `δ > 2`; `δ ∈ {1, 2}` are skipped.
pub struct ConstructibleGon;

impl Check for ConstructibleGon {
    fn id(&self) -> TheoremId {
        TheoremId::ConstructibleGon
    }

    fn applies_to(&self, n: u64) -> bool {
        theorems::is_constructible_gon(n)
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        for class in &s.profile().classes {
            match theorems::constructible_gon_sum(s.n, class.delta) {
                Ok(pred) => tally.congruence(s.n, class.delta, &pred, class.sum_mod),
                Err(Error::NotApplicable(_)) => tally.skip("delta <= 2 has a nonzero class sum"),
                Err(e) => unreachable!("{e}"),
            }
        }
    }
}

/// Odd prime powers: primitive-root sum, and product when `p > 3`.
pub struct PrimitiveRoots;

impl Check for PrimitiveRoots {
    fn id(&self) -> TheoremId {
        TheoremId::PrimitiveRoots
    }

    fn applies_to(&self, n: u64) -> bool {
        matches!(arith::prime_power(n), Some((p, _)) if p > 2)
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let (p, alpha) = arith::prime_power(s.n).expect("applies_to");
        let phi = euler_phi(s.n);
        let class = s.profile().class(phi).expect("p^α has primitive roots");
        let sum = theorems::gauss_cai_primitive_root_sum(p, alpha).expect("odd p");
        tally.congruence(s.n, phi, &sum, class.sum_mod);
        match theorems::gauss_cai_primitive_root_product(p, alpha) {
            Ok(prod) => tally.congruence(s.n, phi, &prod, class.product_mod),
            Err(_) => tally.skip("primitive-root product needs p > 3"),
        }
    }
}
