//! On-disk cache for multiplication tables.

use std::fs;
use std::path::PathBuf;

use cominuscule::json::TableJson;
use cominuscule::rootsys::CominusculePoset;
use cominuscule::schubert::{Convention, MultiplicationTable, Rule};

pub const CACHE_ENV: &str = "COMINUSCULE_CACHE_DIR";

fn path_for(poset: &CominusculePoset, rule: Rule, convention: Convention) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let space = poset.space();
    let params: Vec<String> = space.params().iter().map(|p| p.to_string()).collect();
    let conv = match convention {
        Convention::Cominuscule => "cominuscule",
        Convention::Minuscule => "minuscule",
    };
    let name = format!(
        "{}-{}-{}-{}-v{}.json",
        space.family_name(),
        params.join("_"),
        rule.name(),
        conv,
        env!("CARGO_PKG_VERSION")
    );
    Some(PathBuf::from(dir).join(name))
}

/// A cached table, if caching is enabled and a readable entry exists. A
/// corrupt entry is ignored (and later overwritten).
pub fn load(poset: &CominusculePoset, rule: Rule, convention: Convention) -> Option<MultiplicationTable> {
    let path = path_for(poset, rule, convention)?;
    let text = fs::read_to_string(path).ok()?;
    let doc: TableJson = serde_json::from_str(&text).ok()?;
    doc.to_table(poset).ok()
}

pub fn store(poset: &CominusculePoset, table: &MultiplicationTable) -> anyhow::Result<()> {
    let Some(path) = path_for(poset, table.rule, table.convention) else {
        return Ok(());
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string(&TableJson::from_table(poset, table))?;
    // write-then-rename so a reader never sees a partial file
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)?;
    fs::rename(tmp, path)?;
    Ok(())
}
