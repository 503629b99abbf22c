//! The versioned JSON envelope shared by every command.

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report<'a, T: Serialize> {
    pub v: u32,
    pub command: &'a str,
    /// One digest per input file, in argument order.
    pub input_sha256: Vec<String>,
    pub version: &'static str,
    pub result: T,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn print<T: Serialize>(command: &str, inputs: &[&[u8]], result: T) {
    let report = Report {
        v: SCHEMA_VERSION,
        command,
        input_sha256: inputs.iter().map(|b| digest(b)).collect(),
        version: env!("CARGO_PKG_VERSION"),
        result,
    };
    outln!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
}
