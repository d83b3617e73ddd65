//! Peripheral pairs and realization of `C_1`-presentations as marked Gauss diagrams.

mod chain;
mod peripheral;
mod realize;

pub use chain::{
    chain_conjugator, chain_presentation, cyclic_chain, to_cyclic, to_cyclic_mapped, to_realizable,
    to_realizable_mapped, Link, Realizable, RealizablePresentation,
};
pub use peripheral::{
    check_peripheral, check_peripheral_with, commute_in_quotient, longitude_alpha, meridian_longitude,
    small_symmetric_groups, PeripheralPair, PeripheralReport, QuotientCheck,
};
pub use realize::{
    realize, realize_homomorph, realize_presentation, realize_with_peripheral, Homomorph, PeripheralRealization,
};
