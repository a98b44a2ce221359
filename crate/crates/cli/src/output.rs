//! Output document assembly: every command emits a single document in one
//! of three formats. JSON documents wrap the payload with metadata; CSV
//! carries a header row and nothing else; plain is for humans.

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Metadata {
    pub command: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
}

impl Metadata {
    pub fn new(command: &'static str) -> Metadata {
        Metadata {
            command,
            version: env!("CARGO_PKG_VERSION"),
            p: None,
            c: None,
        }
    }

    pub fn with_pencil(command: &'static str, p: u64, c: u64) -> Metadata {
        Metadata {
            p: Some(p),
            c: Some(c),
            ..Metadata::new(command)
        }
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    metadata: &'a Metadata,
    payload: &'a T,
}

/// One JSON document, pretty-printed, trailing newline. Identical inputs
/// produce byte-identical output.
pub fn json_document<T: Serialize>(metadata: &Metadata, payload: &T) -> String {
    let doc = Document { metadata, payload };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable payload");
    out.push('\n');
    out
}

/// An error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }
}

/// What a command hands back: the rendered document plus the exit code
/// (verification commands report failures in-band and exit nonzero).
pub struct CmdOutput {
    pub text: String,
    pub exit_code: i32,
}

impl CmdOutput {
    pub fn ok(text: String) -> CmdOutput {
        CmdOutput { text, exit_code: 0 }
    }
}
