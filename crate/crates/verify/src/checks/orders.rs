//! Order-theoretic identities and class counts against the oracle.

use idxsum_core::arith::{gcd, lcm, mod_pow};
use idxsum_core::order::{count_index_class, count_square_roots_of_unity, unit_orders};
use idxsum_core::TheoremId;

use crate::check::{Check, Subject, Tally};

/// `ind_m(a^k) = ind_m(a) / (k, ind_m(a))` for every unit and `k ≤ max_k`.
pub struct OrderOfPower {
    pub max_k: u64,
}

impl Default for OrderOfPower {
    fn default() -> Self {
        Self { max_k: 20 }
    }
}

impl Check for OrderOfPower {
    fn id(&self) -> TheoremId {
        TheoremId::OrderOfPower
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let profile = s.profile();
        let m = s.n;
        for (a, &ind) in profile.orders().iter().enumerate() {
            if ind == 0 {
                continue;
            }
            for k in 1..=self.max_k {
                let expected = ind / gcd(k, ind);
                let actual = profile.order_of(mod_pow(a as u64, k, m));
                let note = (expected != actual).then(|| format!("a={a}"));
                tally.compare(m, k, m, expected, actual, note);
            }
        }
    }
}

/// `ind_N(a) = lcm(ind_m(a), ind_n(a))` for every coprime split `N = mn`
/// with `1 < m < n`, and every unit `a` modulo `N`.
pub struct OrderOfProduct;

impl Check for OrderOfProduct {
    fn id(&self) -> TheoremId {
        TheoremId::OrderOfProduct
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let big = s.n;
        let fact = s.profile().factorization.clone();
        let parts: Vec<u64> = fact.prime_powers().iter().map(|&(p, e)| p.pow(e)).collect();
        if parts.len() < 2 {
            return;
        }
        let orders = s.profile().orders();
        // every subset of prime-power parts gives a coprime split
        for mask in 1u32..(1 << parts.len()) - 1 {
            let m: u64 = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q)
                .product();
            let n = big / m;
            if m >= n {
                continue;
            }
            let (om, on) = (unit_orders(m), unit_orders(n));
            for (a, &ind) in orders.iter().enumerate() {
                if ind == 0 {
                    continue;
                }
                let a = a as u64;
                let expected = lcm(om[(a % m) as usize], on[(a % n) as usize]);
                let note = (expected != ind).then(|| format!("a={a}, m={m}, n={n}"));
                tally.compare(big, m, big, expected, ind, note);
            }
        }
    }
}

/// Closed-form `#{x : x² ≡ 1}` against the sizes of the classes `δ ∈ {1, 2}`.
pub struct SquareRootsOfUnity;

impl Check for SquareRootsOfUnity {
    fn id(&self) -> TheoremId {
        TheoremId::SquareRootsOfUnity
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let p = s.profile();
        let oracle: u64 = [1, 2].iter().filter_map(|&d| p.class(d)).map(|c| c.count).sum();
        let closed = count_square_roots_of_unity(s.n).expect("n > 0");
        tally.compare(s.n, 2, s.n, closed, oracle, None);
    }
}

/// Closed-form class sizes for every `δ | λ(m)`, plus one partition case
/// (reported with `delta = 0`) comparing `φ(m)` with the total.
pub struct ClassCount;

impl Check for ClassCount {
    fn id(&self) -> TheoremId {
        TheoremId::ClassCount
    }

    fn run(&self, s: &Subject, tally: &mut Tally) {
        let profile = s.profile();
        let mut total = 0;
        for class in &profile.classes {
            let closed = count_index_class(s.n, class.delta).expect("n > 0");
            tally.compare(s.n, class.delta, s.n, closed, class.count, None);
            total += closed;
        }
        let note = (total != profile.phi).then(|| "partition of U_m".to_owned());
        tally.compare(s.n, 0, s.n, profile.phi, total, note);
    }
}
