pub mod format;
pub mod hopf;
pub mod linalg;
pub mod polyfactor;
pub mod repn;
pub mod scalars;
pub mod substructures;
pub mod theorems;
