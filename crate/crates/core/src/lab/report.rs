use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

pub const SCHEMA: &str = "tlj-report/1";

/// The common JSON envelope of every report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub claim: String,
    pub parameters: Value,
    pub pass: bool,
    pub data: Value,
}

impl Report {
    pub fn new(claim: &str, parameters: Value, pass: bool, data: &impl Serialize) -> Result<Report> {
        Ok(Report { schema: SCHEMA, claim: claim.into(), parameters, pass, data: serde_json::to_value(data)? })
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
