//! Weak Doi-Hopf data, their duality, weak Doi-Hopf modules and the
//! module-level duality functor.

mod datum;
mod module;

pub use datum::{
    assemble_datum_unchecked, build_datum, dual_components, dual_datum, DatumSide, DoiHopfDatum,
};
pub use module::{
    check_module, check_morphism, dualize_module, dualize_morphism, hom_space, DoiHopfModule,
    DoiHopfMorphism,
};

use thiserror::Error;

use crate::comodact::ComodactError;
use crate::hopfcore::HopfError;
use crate::kernel::KernelError;
use crate::report::Report;

#[derive(Debug, Error)]
pub enum DoiHopfError {
    #[error("constituent axiom checks failed:\n{0}")]
    AxiomFailure(Report),
    #[error("sides are inconsistent: {0}")]
    SideMismatch(String),
    #[error("the two modules do not share a datum")]
    DatumMismatch,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Comodact(#[from] ComodactError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
