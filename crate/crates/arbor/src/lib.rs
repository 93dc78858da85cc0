//! IO, serialization, and batch scanning around `arbor-core`: the JSON
//! wire formats, the free-tree collision scanner, and the exhaustive
//! recovery roundtrip.

pub mod json;
pub mod scan;

pub use json::{
    csf_json, decomposition_json, edge_list_text, error_json, poly_from_json, poly_json,
    profile_json, roundtrip_report_json, scan_report_json, JsonError,
};
pub use scan::{roundtrip, scan, Invariant, RoundtripReport, ScanError, ScanReport};
