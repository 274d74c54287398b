use std::cell::OnceCell;
use std::collections::BTreeMap;

use idxsum_core::{CongruencePrediction, ModulusProfile, TheoremId};

use crate::checks;
use crate::report::{Mismatch, ScopeNote};
use crate::VerifyError;

/// Per-task knobs handed to a check factory.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaskOptions {
    /// Keep the members of every index class in the oracle profile.
    pub include_elements: bool,
    /// Seed for the pseudo-random arithmetical functions.
    pub seed: u64,
}

/// One integer under test, with its oracle profile built on first use.
pub struct Subject {
    pub n: u64,
    keep_elements: bool,
    profile: OnceCell<ModulusProfile>,
}

impl Subject {
    pub fn new(n: u64, keep_elements: bool) -> Self {
        Self {
            n,
            keep_elements,
            profile: OnceCell::new(),
        }
    }

    pub fn profile(&self) -> &ModulusProfile {
        self.profile.get_or_init(|| {
            ModulusProfile::build_with(self.n, self.keep_elements).expect("subjects are positive")
        })
    }
}

/// Outcome of running one check on one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub skips: BTreeMap<String, u64>,
    pub mismatches: Vec<Mismatch>,
    pub scope_notes: Vec<ScopeNote>,
}

impl Tally {
    /// Compares a closed form with the oracle value.
    pub fn congruence(&mut self, m: u64, delta: u64, pred: &CongruencePrediction, actual: u64) {
        self.compare(m, delta, pred.asserted_modulus, pred.value, actual % pred.asserted_modulus, None);
    }

    pub fn compare(
        &mut self,
        m: u64,
        delta: u64,
        asserted_modulus: u64,
        expected: u64,
        actual: u64,
        note: Option<String>,
    ) {
        self.cases += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                m,
                delta,
                asserted_modulus,
                expected,
                actual,
                note,
            });
        }
    }

    /// Records an identity check whose two sides are not integers.
    pub fn identity<T: PartialEq + std::fmt::Display>(
        &mut self,
        n: u64,
        param: u64,
        label: &str,
        lhs: T,
        rhs: T,
    ) {
        let holds = lhs == rhs;
        let note = (!holds).then(|| format!("{label}: {lhs} != {rhs}"));
        self.compare(n, param, 1, 1, u64::from(holds), note);
    }

    pub fn skip(&mut self, reason: &str) {
        *self.skips.entry(reason.to_owned()).or_default() += 1;
    }

    pub fn skip_count(&self) -> u64 {
        self.skips.values().sum()
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        for (reason, n) in other.skips {
            *self.skips.entry(reason).or_default() += n;
        }
        self.mismatches.extend(other.mismatches);
        self.scope_notes.extend(other.scope_notes);
    }
}

/// A verification strategy: one closed form or identity, checked against
/// the oracle on every applicable integer.
pub trait Check: Send + Sync {
    fn id(&self) -> TheoremId;

    /// Whether `n` is in this check's domain. Integers outside it contribute
    /// neither cases nor skips.
    fn applies_to(&self, _n: u64) -> bool {
        true
    }

    /// Whether the oracle profile of the subject is needed.
    fn needs_profile(&self) -> bool {
        true
    }

    fn run(&self, subject: &Subject, tally: &mut Tally);
}

pub type CheckFactory = fn(&TaskOptions) -> Box<dyn Check>;

/// Check factories keyed by their theorem id string.
#[derive(Clone, Default)]
pub struct Registry {
    factories: BTreeMap<&'static str, (TheoremId, CheckFactory)>,
}

impl Registry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn register(&mut self, id: TheoremId, factory: CheckFactory) {
        self.factories.insert(id.as_str(), (id, factory));
    }

    /// Resolves a theorem id (case-insensitive) to its canonical form.
    pub fn resolve(&self, name: &str) -> Result<TheoremId, VerifyError> {
        self.factories
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(name))
            .map(|(_, (id, _))| *id)
            .ok_or_else(|| VerifyError::UnknownTheorem(name.to_owned()))
    }

    pub fn build(&self, name: &str, options: &TaskOptions) -> Result<Box<dyn Check>, VerifyError> {
        let id = self.resolve(name)?;
        let (_, factory) = self.factories[id.as_str()];
        Ok(factory(options))
    }

    /// Registered ids in canonical order.
    pub fn ids(&self) -> Vec<TheoremId> {
        let mut ids: Vec<TheoremId> = self.factories.values().map(|(id, _)| *id).collect();
        ids.sort();
        ids
    }
}

/// The registry with every built-in check.
pub fn default_registry() -> Registry {
    let mut r = Registry::empty();
    checks::register_all(&mut r);
    r
}
