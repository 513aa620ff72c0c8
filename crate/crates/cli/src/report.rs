//! JSON-lines report schema.

use std::collections::BTreeMap;
use std::time::Duration;

use anyhow::{bail, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

use holeforge::{certify_hole, io, Graph, Hole, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Perfect,
    OddHole,
    EvenHole,
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub command: &'static str,
    pub verdict: Verdict,
    pub hole: Option<Vec<usize>>,
    pub length: Option<usize>,
    pub side: Option<&'static str>,
    pub provenance: Option<String>,
    pub timings_ms: BTreeMap<String, f64>,
}

/// Hex SHA-256 prefix of the graph's graph6 encoding; stable across input
/// formats.
pub fn digest(g: &Graph) -> String {
    let h = Sha256::digest(io::encode_graph6(g).as_bytes());
    h.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

impl Report {
    pub fn new(g: &Graph, command: &'static str, verdict: Verdict) -> Report {
        Report {
            input: digest(g),
            command,
            verdict,
            hole: None,
            length: None,
            side: None,
            provenance: None,
            timings_ms: BTreeMap::new(),
        }
    }

    /// Attaches `hole`, re-certifying it against `g` (or its complement)
    /// first.
    pub fn with_hole(mut self, g: &Graph, hole: &Hole, side: Side) -> Result<Report> {
        let host = match side {
            Side::Graph => g.clone(),
            Side::Complement => g.complement(),
        };
        if let Err(e) = certify_hole(&host, hole.vertices()) {
            bail!("internal error: emitted hole fails certification: {e}");
        }
        self.hole = Some(hole.vertices().to_vec());
        self.length = Some(hole.len());
        self.side = Some(side.as_str());
        Ok(self)
    }

    pub fn provenance(mut self, p: impl Into<String>) -> Report {
        self.provenance = Some(p.into());
        self
    }

    pub fn timing(mut self, stage: &str, d: Duration) -> Report {
        *self.timings_ms.entry(stage.to_string()).or_default() += d.as_secs_f64() * 1e3;
        self
    }

    pub fn strip_timings(&mut self) {
        self.timings_ms.clear();
    }

    pub fn pretty(&self) -> String {
        let mut s = format!("{} [{}]: {}", self.command, self.input, serde_json::to_string(&self.verdict).unwrap());
        if let (Some(h), Some(l)) = (&self.hole, self.length) {
            s += &format!(", hole of length {l} on the {}: {h:?}", self.side.unwrap_or("graph"));
        }
        if let Some(p) = &self.provenance {
            s += &format!(" (via {p})");
        }
        s
    }
}
