pub mod cli;
pub mod cut;
pub mod diagram;
pub mod error;
pub mod partitions;
pub mod polyring;
pub mod splitting;
pub mod union_find;

pub use error::{Error, Result};
