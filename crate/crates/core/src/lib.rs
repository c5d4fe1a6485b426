pub mod cli;
pub mod correspondence;
pub mod error;
pub mod good_seq;
pub mod io;
pub mod model_check;
pub mod mv;
pub mod pco;
pub mod report;

pub use error::{Error, Result};
