pub mod chamber;
pub mod error;
pub mod extra;
pub mod forms;
pub mod gf;
pub mod grp;
pub mod linalg;
pub mod matgrp;
pub mod modrep;
pub mod verify;

pub use error::{Error, Result};
