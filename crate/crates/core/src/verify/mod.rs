//! Check registry, scheduler, reports and the BSGS cache.

mod checks;
mod workbench;

pub use checks::registry;
pub use workbench::Workbench;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::grp::{Perm, PermGroup};
use crate::matgrp::{DirectBuilder, GroupBuilder};

/// Body of a check: returns `(computed, expected)`.
pub type CheckFn = fn(&Workbench) -> Result<(Value, Value)>;

pub struct Check {
    pub id: &'static str,
    pub claim: &'static str,
    pub paper_ref: &'static str,
    pub deps: &'static [&'static str],
    pub run: CheckFn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub claim: String,
    pub paper_ref: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub runtime_ms: u64,
}

/// Checks named by `ids` plus everything they depend on, in registry order.
pub fn select<'a>(reg: &'a [Check], ids: &[String]) -> Result<Vec<&'a Check>> {
    let by_id: HashMap<&str, &Check> = reg.iter().map(|c| (c.id, c)).collect();
    let mut want: Vec<&str> = Vec::new();
    let mut stack: Vec<&str> = Vec::new();
    for id in ids {
        let c = by_id.get(id.as_str()).ok_or_else(|| Error::UnknownCheck(id.clone()))?;
        stack.push(c.id);
    }
    while let Some(id) = stack.pop() {
        if want.contains(&id) {
            continue;
        }
        want.push(id);
        stack.extend(by_id[id].deps.iter().copied());
    }
    Ok(reg.iter().filter(|c| want.contains(&c.id)).collect())
}

/// Registry problems: unknown dependencies or a cycle.
pub fn validate_registry(reg: &[Check]) -> Result<()> {
    let ids: Vec<&str> = reg.iter().map(|c| c.id).collect();
    for c in reg {
        if ids.iter().filter(|&&i| i == c.id).count() != 1 {
            return Err(Error::Precondition(format!("duplicate check id {}", c.id)));
        }
        for d in c.deps {
            if !ids.contains(d) {
                return Err(Error::UnknownCheck(d.to_string()));
            }
        }
    }
    let waves = waves(&reg.iter().collect::<Vec<_>>());
    if waves.iter().map(|w| w.len()).sum::<usize>() != reg.len() {
        return Err(Error::Precondition("dependency cycle in the registry".into()));
    }
    Ok(())
}

/// Partition into layers whose dependencies all lie in earlier layers.
fn waves(checks: &[&Check]) -> Vec<Vec<usize>> {
    let mut level: Vec<Option<usize>> = vec![None; checks.len()];
    let pos: HashMap<&str, usize> = checks.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (i, c) in checks.iter().enumerate() {
            if level[i].is_some() {
                continue;
            }
            let deps: Option<Vec<usize>> = c.deps.iter().filter_map(|d| pos.get(d)).map(|&j| level[j]).collect();
            if let Some(deps) = deps {
                level[i] = Some(deps.into_iter().max().map_or(0, |m| m + 1));
                changed = true;
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, l) in level.iter().enumerate() {
        if let Some(l) = *l {
            if out.len() <= l {
                out.resize(l + 1, Vec::new());
            }
            out[l].push(i);
        }
    }
    out
}

fn run_one(c: &Check, wb: &Workbench) -> CheckResult {
    let start = Instant::now();
    let (status, computed, expected) = match (c.run)(wb) {
        Ok((computed, expected)) => {
            let status = if computed == expected { Status::Pass } else { Status::Fail };
            (status, computed, expected)
        }
        Err(e) => (Status::Fail, serde_json::json!({ "error": e.to_string() }), Value::Null),
    };
    CheckResult {
        check_id: c.id.to_string(),
        claim: c.claim.to_string(),
        paper_ref: c.paper_ref.to_string(),
        status,
        computed,
        expected,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs `checks` on `jobs` worker threads, wave by wave. A check whose
/// dependency did not pass is skipped. Results come back in input order.
pub fn run_checks(checks: &[&Check], wb: &Workbench, jobs: usize) -> Vec<CheckResult> {
    let jobs = jobs.max(1);
    let mut results: Vec<Option<CheckResult>> = vec![None; checks.len()];
    let pos: HashMap<&str, usize> = checks.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    for wave in waves(checks) {
        let mut runnable = Vec::new();
        for &i in &wave {
            let blocked = checks[i]
                .deps
                .iter()
                .filter_map(|d| pos.get(d))
                .any(|&j| results[j].as_ref().map(|r| r.status) != Some(Status::Pass));
            if blocked {
                let c = checks[i];
                results[i] = Some(CheckResult {
                    check_id: c.id.to_string(),
                    claim: c.claim.to_string(),
                    paper_ref: c.paper_ref.to_string(),
                    status: Status::Skip,
                    computed: Value::Null,
                    expected: Value::Null,
                    runtime_ms: 0,
                });
            } else {
                runnable.push(i);
            }
        }
        let next = AtomicUsize::new(0);
        let out: Mutex<Vec<(usize, CheckResult)>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(runnable.len()) {
                scope.spawn(|| loop {
                    let k = next.fetch_add(1, Ordering::SeqCst);
                    let Some(&i) = runnable.get(k) else { break };
                    let r = run_one(checks[i], wb);
                    out.lock().expect("result lock").push((i, r));
                });
            }
        });
        for (i, r) in out.into_inner().expect("result lock") {
            results[i] = Some(r);
        }
    }
    results.into_iter().map(|r| r.expect("every check visited")).collect()
}

pub fn to_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("results serialize")
}

/// Leading locator of a reference, e.g. `Lemma sp62facts` for `Lemma sp62facts (ii)`.
fn group_heading(paper_ref: &str) -> &str {
    let first = paper_ref.split(';').next().unwrap_or(paper_ref);
    first.split(" (").next().unwrap_or(first).trim()
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::Null => String::new(),
        other => other.to_string(),
    };
    s.replace('|', "\\|")
}

pub fn to_markdown(results: &[CheckResult]) -> String {
    let mut out = String::from("# Check report\n");
    let pass = results.iter().filter(|r| r.status == Status::Pass).count();
    let _ = writeln!(out, "\n{pass} of {} checks pass.\n", results.len());
    let mut groups: Vec<&str> = Vec::new();
    for r in results {
        let g = group_heading(&r.paper_ref);
        if !groups.contains(&g) {
            groups.push(g);
        }
    }
    for g in groups {
        let _ = writeln!(out, "\n## {g}\n");
        out.push_str("| check | status | reference | computed | expected | ms |\n|---|---|---|---|---|---|\n");
        for r in results.iter().filter(|r| group_heading(&r.paper_ref) == g) {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "**fail**",
                Status::Skip => "skip",
            };
            let _ = writeln!(
                out,
                "| `{}` | {} | {} | `{}` | `{}` | {} |",
                r.check_id,
                status,
                r.paper_ref,
                cell(&r.computed),
                cell(&r.expected),
                r.runtime_ms
            );
        }
    }
    out
}

/// Writes `contents` to `path` through a temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Builder that stores stabilizer chains under `dir` and reuses valid ones.
#[derive(Clone, Debug)]
pub struct CachedBuilder {
    dir: PathBuf,
}

impl CachedBuilder {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CachedBuilder { dir: dir.into() }
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let safe: String =
            key.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
        self.dir.join(format!("{safe}.bsgs"))
    }
}

impl GroupBuilder for CachedBuilder {
    fn build(&self, key: &str, degree: usize, gens: Vec<Perm>, hint: &[u32]) -> Result<PermGroup> {
        let path = self.path_for(key);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(g) = PermGroup::from_cache_text(&text, &gens) {
                if g.degree() == degree {
                    return Ok(g);
                }
            }
        }
        let g = DirectBuilder.build(key, degree, gens, hint)?;
        write_atomic(&path, &g.to_cache_text()).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_empty_array() {
        assert_eq!(to_json(&[]), "[]");
    }

    #[test]
    fn registry_is_well_formed() {
        let reg = registry();
        validate_registry(&reg).unwrap();
        assert!(reg.len() >= 25);
    }

    #[test]
    fn selection_pulls_in_dependencies() {
        let reg = registry();
        let sel = select(&reg, &["spin.orbits".to_string()]).unwrap();
        let ids: Vec<&str> = sel.iter().map(|c| c.id).collect();
        assert!(ids.contains(&"spin.module"));
        assert!(matches!(select(&reg, &["no.such".to_string()]), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn cached_builder_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let b = CachedBuilder::new(dir.path());
        let gens = vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(), Perm::from_cycles(5, &[&[0, 1]]).unwrap()];
        let g1 = b.build("sym5", 5, gens.clone(), &[]).unwrap();
        let text = fs::read_to_string(b.path_for("sym5")).unwrap();
        assert!(text.starts_with("FORGE-BSGS 1\n"));
        let g2 = b.build("sym5", 5, gens.clone(), &[]).unwrap();
        assert_eq!(g1.order(), 120);
        assert_eq!(g2.order(), 120);
        fs::write(b.path_for("sym5"), "garbage").unwrap();
        assert_eq!(b.build("sym5", 5, gens, &[]).unwrap().order(), 120);
    }
}
