//! Serializable record of one primality-test run, plus its CSV projection.

use serde::{Deserialize, Serialize};

/// Everything needed to reproduce and audit a single run. The modulus and
/// multiplier are decimal strings so records stay valid JSON far beyond the
/// integer range of the format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub d: i64,
    pub m: String,
    pub p: u64,
    pub l: u32,
    pub n: String,
    pub bits: u64,
    pub verdict: String,
    /// Certified chain stage when the verdict is a threshold certificate.
    pub certificate_j: Option<u32>,
    pub elapsed_seconds: f64,
    pub seed: u64,
}

/// Column header for the CSV projection.
pub const CSV_HEADER: &str = "D,l,bits,p,result,seconds";

impl RunRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6}",
            self.d, self.l, self.bits, self.p, self.verdict, self.elapsed_seconds
        )
    }

    pub fn table_row(&self) -> String {
        let j = match self.certificate_j {
            Some(j) => format!("j={j}"),
            None => String::new(),
        };
        format!(
            "l={:<4} bits={:<6} {:<15} {:<6} {:.4}s",
            self.l, self.bits, self.verdict, j, self.elapsed_seconds
        )
    }
}
