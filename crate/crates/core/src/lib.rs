pub mod coadjoint;
pub mod config;
pub mod error;
pub mod families;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod semidirect;
pub mod semiinv;
pub mod verify;

pub use error::{Error, Result};
