pub mod automorphisms;
pub mod exactfield;
pub mod families;
pub mod io;
pub mod linalg;
pub mod loops;
pub mod superalgebra;
pub mod table;
