//! Append-only JSON-lines store of computed counts, keyed by region and
//! method. Enabled by setting HOLEY_CACHE_DIR.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use holetile::{Family, RegionSpec};

pub const FILE_NAME: &str = "counts.jsonl";
const VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct Cache {
    path: PathBuf,
}

fn key(spec: &RegionSpec, method: &str) -> Value {
    let c = match spec.family {
        Family::PlainHexagon { c } => json!(c),
        _ => Value::Null,
    };
    json!({
        "family": spec.family.name(),
        "n": spec.n,
        "b": spec.b,
        "c": c,
        "k": spec.k,
        "method": method,
    })
}

impl Cache {
    pub fn from_env() -> Result<Option<Cache>> {
        let Some(dir) = std::env::var_os("HOLEY_CACHE_DIR") else {
            return Ok(None);
        };
        let dir = PathBuf::from(dir);
        fs::create_dir_all(&dir).with_context(|| format!("creating cache dir {}", dir.display()))?;
        Ok(Some(Cache { path: dir.join(FILE_NAME) }))
    }

    pub fn get(&self, spec: &RegionSpec, method: &str) -> Option<String> {
        let text = fs::read_to_string(&self.path).ok()?;
        let want = key(spec, method);
        // later lines win; unparsable lines and other versions are skipped
        text.lines().rev().find_map(|line| {
            let rec: Value = serde_json::from_str(line).ok()?;
            let fields = ["family", "n", "b", "c", "k", "method"];
            let hit = fields.iter().all(|f| rec.get(f).unwrap_or(&Value::Null) == &want[f])
                && rec["version"] == VERSION;
            if hit {
                rec["value"].as_str().map(str::to_owned)
            } else {
                None
            }
        })
    }

    pub fn put(&self, spec: &RegionSpec, method: &str, value: &str) -> Result<()> {
        let mut rec = key(spec, method);
        rec["value"] = json!(value);
        rec["version"] = json!(VERSION);
        let mut line = serde_json::to_string(&rec)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening {}", self.path.display()))?;
        // a single write of one line under O_APPEND, so concurrent writers don't interleave
        file.write_all(line.as_bytes())?;
        Ok(())
    }
}
