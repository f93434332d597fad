pub mod automaton;
pub mod coxeter;
pub mod error;
pub mod low;
pub mod monoid;
pub mod roots;
mod system;
pub mod weak;

pub use system::CoxeterSystem;
