pub mod error;
pub mod pairdoc;
mod character;
mod linalg;
pub mod dirac;
pub mod report;
pub mod rootsystem;
pub mod symmspace;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsystem::{Family, PositiveSystem, RootSystem, SimpleType};
pub use weight::{Weight, Q};
