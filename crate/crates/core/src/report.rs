//! Versioned JSON envelopes and atomic output.

use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

pub const SCHEMA: &str = "strand-report/1";

/// Wall-clock data, kept apart so the rest of a report is reproducible.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub total_seconds: f64,
    pub per_item: std::collections::BTreeMap<String, f64>,
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: String,
    pub passed: bool,
    pub report: T,
    pub timing: Timing,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: impl Into<String>, passed: bool, report: T, timing: Timing) -> Self {
        Envelope { schema: SCHEMA, command: command.into(), passed, report, timing }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result
}

/// Drops the `timing` key so two runs can be compared byte for byte.
pub fn without_timing(json: &str) -> serde_json::Result<String> {
    let mut v: serde_json::Value = serde_json::from_str(json)?;
    if let Some(o) = v.as_object_mut() {
        o.remove("timing");
    }
    serde_json::to_string_pretty(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_and_timing_strip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let env = Envelope::new("x", true, vec![1, 2], Timing { total_seconds: 1.5, ..Default::default() });
        write_atomic(&path, &env.to_json()).unwrap();
        let back = std::fs::read_to_string(&path).unwrap();
        assert!(back.contains("\"schema\": \"strand-report/1\""));
        let other = Envelope::new("x", true, vec![1, 2], Timing { total_seconds: 9.0, ..Default::default() });
        assert_eq!(without_timing(&back).unwrap(), without_timing(&other.to_json()).unwrap());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
