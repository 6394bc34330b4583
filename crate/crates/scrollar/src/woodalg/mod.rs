//! Structure-constant calculus for algebras of curves on Hirzebruch
//! surfaces: building the table of a binary form, rescaling bases,
//! associativity, discriminants, fibers, and prefix subalgebras.

mod hirzebruch;
mod rescale;
mod serial;
mod table;

pub use hirzebruch::{universal_wood_table, wood_constants, wood_table, HirzebruchForm};
pub use rescale::{algebra_discriminant, discriminant_unit, rescale, rescale_at};
pub use serial::{ConstantRecord, TableDocument};
pub use table::{
    check_associativity, detect_subalgebra_prefix, fiber_at, is_etale, AssociativityCheck,
    FiberAlgebra, PrefixSubalgebra, StructureTable,
};
