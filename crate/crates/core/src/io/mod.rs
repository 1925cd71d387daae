//! Text formats: descriptor files, group strings, command-line notations and
//! output records.

pub mod args;
pub mod json;
pub mod record;
pub mod render;

pub use args::{parse_coeff_arg, parse_group_arg, parse_group_arg_raw};
pub use json::{descriptor_to_json, parse_descriptor, parse_raw_descriptor};
pub use record::{to_stable_json, ResultRecord};
pub use render::{parse_group, parse_group_value, render_group, render_group_value};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}
