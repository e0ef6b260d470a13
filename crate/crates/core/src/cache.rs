//! On-disk cache for filtered enumeration results.
//!
//! File format (text, bit-exact): line 1 is
//! `wpgap-cache v1 genus=<g> filter=<canonical-string> count=<n>`,
//! followed by one semigroup per line as comma-separated ascending gaps,
//! with a trailing newline. UTF-8, LF line endings. Writes go through a
//! temp file in the target directory followed by a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::enumeration::{enumerate_filtered, EnumerationConfig, EnumerationFilter};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

const MAGIC: &str = "wpgap-cache";
const VERSION: &str = "v1";

/// Cache file name for a `(genus, filter)` pair, unique per canonical key.
pub fn cache_file_name(genus: u32, filter: &EnumerationFilter) -> String {
    let mut slug = String::new();
    if let Some(m) = filter.min_multiplicity {
        slug.push_str(&format!("-m{m}"));
    }
    if let Some(k) = filter.even_gap_count {
        slug.push_str(&format!("-e{k}"));
    }
    if let Some((a, b)) = filter.required_interval {
        slug.push_str(&format!("-i{a}-{b}"));
    }
    if let Some((a, b)) = filter.required_gap_in {
        slug.push_str(&format!("-gi{a}-{b}"));
    }
    if slug.is_empty() {
        slug.push_str("-none");
    }
    format!("{MAGIC}-{VERSION}-g{genus}{slug}.cache")
}

pub fn cache_path(dir: &Path, genus: u32, filter: &EnumerationFilter) -> PathBuf {
    dir.join(cache_file_name(genus, filter))
}

/// Serialize in the exact cache format.
pub fn render(genus: u32, filter: &EnumerationFilter, sems: &[NumericalSemigroup]) -> String {
    let mut out = format!(
        "{MAGIC} {VERSION} genus={genus} filter={} count={}\n",
        filter.canonical_string(),
        sems.len()
    );
    for s in sems {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

/// Atomically write the cache file (temp file + rename), returning its path.
pub fn write_cache(
    dir: &Path,
    genus: u32,
    filter: &EnumerationFilter,
    sems: &[NumericalSemigroup],
) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, genus, filter);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(render(genus, filter, sems).as_bytes())?;
    tmp.flush()?;
    tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
    Ok(path)
}

/// Parse the exact cache format back into semigroups, validating each line.
pub fn parse(
    content: &str,
    path_for_errors: &str,
) -> Result<(u32, String, Vec<NumericalSemigroup>)> {
    let malformed = |reason: &str| Error::CacheFormat {
        path: path_for_errors.to_string(),
        reason: reason.to_string(),
    };
    let Some((header, body)) = content.split_once('\n') else {
        return Err(malformed("missing header line"));
    };
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 5 || fields[0] != MAGIC || fields[1] != VERSION {
        return Err(malformed("bad magic or version"));
    }
    let genus: u32 = fields[2]
        .strip_prefix("genus=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| malformed("bad genus field"))?;
    let filter = fields[3]
        .strip_prefix("filter=")
        .ok_or_else(|| malformed("bad filter field"))?
        .to_string();
    let count: usize = fields[4]
        .strip_prefix("count=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| malformed("bad count field"))?;
    if !body.is_empty() && !body.ends_with('\n') {
        return Err(malformed("missing trailing newline"));
    }
    let lines: Vec<&str> = if body.is_empty() {
        Vec::new()
    } else {
        let trimmed = &body[..body.len() - 1];
        trimmed.split('\n').collect()
    };
    if lines.len() != count {
        return Err(malformed("count does not match body"));
    }
    let mut sems = Vec::with_capacity(count);
    for line in lines {
        let gaps: Vec<u32> = if line.is_empty() {
            Vec::new()
        } else {
            line.split(',')
                .map(|t| t.parse::<u32>().map_err(|_| malformed("bad gap entry")))
                .collect::<Result<_>>()?
        };
        let s = NumericalSemigroup::from_gaps(&gaps)?;
        if s.genus() != genus {
            return Err(malformed("gap line does not match declared genus"));
        }
        sems.push(s);
    }
    Ok((genus, filter, sems))
}

/// Load a cached result if one matching `(genus, filter)` exists.
pub fn read_cache(
    dir: &Path,
    genus: u32,
    filter: &EnumerationFilter,
) -> Result<Option<Vec<NumericalSemigroup>>> {
    let path = cache_path(dir, genus, filter);
    let content = match fs::read_to_string(&path) {
        Ok(c) => c,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let (g, f, sems) = parse(&content, &path.to_string_lossy())?;
    if g != genus || f != filter.canonical_string() {
        return Err(Error::CacheFormat {
            path: path.to_string_lossy().to_string(),
            reason: "header does not match requested key".to_string(),
        });
    }
    Ok(Some(sems))
}

/// Cached wrapper around [`enumerate_filtered`]: read on hit, compute and
/// persist on miss.
pub fn enumerate_filtered_cached(
    genus: u32,
    filter: &EnumerationFilter,
    cfg: &EnumerationConfig,
    dir: &Path,
) -> Result<Vec<NumericalSemigroup>> {
    if let Some(hit) = read_cache(dir, genus, filter)? {
        return Ok(hit);
    }
    let sems = enumerate_filtered(genus, filter, cfg)?;
    write_cache(dir, genus, filter, &sems)?;
    Ok(sems)
}
