//! Built-in checks, one per theorem id.

mod congruences;
mod convolutions;
mod orders;

use idxsum_core::TheoremId;

use crate::check::Registry;

pub use congruences::{
    ClassProduct, ConstructibleGon, GeneralSum, PrimePowerSum, PrimitiveRoots, SmallDeltaSum,
    TwoPrimeSum,
};
pub use convolutions::{LcmDirichletBridge, LcmIdentities, LehmerInverse};
pub use orders::{ClassCount, OrderOfPower, OrderOfProduct, SquareRootsOfUnity};

pub fn register_all(r: &mut Registry) {
    r.register(TheoremId::ClassProduct, |_| Box::new(ClassProduct));
    r.register(TheoremId::SmallDeltaSum, |_| Box::new(SmallDeltaSum));
    r.register(TheoremId::PrimePowerSum, |_| Box::new(PrimePowerSum));
    r.register(TheoremId::TwoPrimeSum, |_| Box::new(TwoPrimeSum));
    r.register(TheoremId::GeneralSum, |_| Box::new(GeneralSum));
    r.register(TheoremId::ConstructibleGon, |_| Box::new(ConstructibleGon));
    r.register(TheoremId::PrimitiveRoots, |_| Box::new(PrimitiveRoots));
    r.register(TheoremId::OrderOfPower, |_| Box::new(OrderOfPower::default()));
    r.register(TheoremId::OrderOfProduct, |_| Box::new(OrderOfProduct));
    r.register(TheoremId::LehmerInverse, |_| Box::new(LehmerInverse::new()));
    r.register(TheoremId::LcmDirichletBridge, |o| Box::new(LcmDirichletBridge::new(o.seed)));
    r.register(TheoremId::LcmIdentities, |o| Box::new(LcmIdentities::new(o.seed)));
    r.register(TheoremId::SquareRootsOfUnity, |_| Box::new(SquareRootsOfUnity));
    r.register(TheoremId::ClassCount, |_| Box::new(ClassCount));
}
