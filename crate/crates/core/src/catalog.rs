//! Catalog files: one JSON object per line, a header line first.

use std::io::{self, Write};

use serde::Serialize;

use crate::enumeration::{CatalogRecord, SearchConfig};

#[derive(Debug, Serialize)]
struct Header {
    tool: &'static str,
    version: &'static str,
    rank: usize,
    max_entry: u32,
    include_linear: bool,
    stability_probe: Option<u32>,
    records: usize,
}

/// Writes the header and the records. The worker count is left out of the
/// header so that output does not depend on it.
pub fn write_catalog<W: Write>(
    out: &mut W,
    cfg: &SearchConfig,
    records: &[CatalogRecord],
) -> io::Result<()> {
    let header = Header {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        rank: cfg.rank,
        max_entry: cfg.max_entry,
        include_linear: cfg.include_linear,
        stability_probe: cfg.stability_probe,
        records: records.len(),
    };
    serde_json::to_writer(&mut *out, &header)?;
    out.write_all(b"\n")?;
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
