pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod optimize;
pub mod radius;
pub mod roots;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
