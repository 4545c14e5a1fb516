pub mod clique;
pub mod error;
pub mod export;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod par;
pub mod poset;
pub mod silting;
pub mod verify;
pub mod weak_order;
pub mod xi;

pub use error::{Error, Result};
