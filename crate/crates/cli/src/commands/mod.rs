pub mod dynamics;
pub mod exterior;
pub mod hilbert;
pub mod lefschetz;
pub mod points;
pub mod semigroup;
pub mod waring;
