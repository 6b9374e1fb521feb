//! MovieLens 100k ingestion: `u.data` ratings, `u.item` titles, and per-film
//! rating histograms turned into fuzzy sets.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{peak_scale, proportion_scale, FuzzyError, FuzzySet};

/// Number of ratings in the full MovieLens 100k `u.data` file.
pub const ML100K_RECORDS: usize = 100_000;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: rating {rating} outside 1..=5")]
    RatingOutOfRange { line: usize, rating: i64 },
    #[error("line {line}: duplicate item id {id}")]
    DuplicateItem { line: usize, id: u32 },
    #[error("no ratings for item {0}")]
    UnknownItem(u32),
    #[error("no film titled {title:?}{}", suggestion_text(.suggestions))]
    UnknownTitle {
        title: String,
        suggestions: Vec<String>,
    },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

fn suggestion_text(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!("; close matches: {}", s.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatingRecord {
    pub user_id: u32,
    pub item_id: u32,
    pub rating: u8,
    pub timestamp: i64,
}

/// Per-item tally of ratings 1..=5 (`counts[0]` is rating 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatingHistogram {
    pub item_id: u32,
    pub title: String,
    pub counts: [u64; 5],
    pub total: u64,
}

impl RatingHistogram {
    pub fn from_counts(item_id: u32, title: impl Into<String>, counts: [u64; 5]) -> Self {
        Self {
            item_id,
            title: title.into(),
            counts,
            total: counts.iter().sum(),
        }
    }
}

/// Reads tab-separated `user<TAB>item<TAB>rating<TAB>timestamp` lines.
pub fn parse_ratings<R: BufRead>(reader: R) -> Result<Vec<RatingRecord>, IngestError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| IngestError::Malformed {
            line: line_no,
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim_end_matches('\r').split('\t').collect();
        if fields.len() != 4 {
            return Err(IngestError::Malformed {
                line: line_no,
                message: format!("expected 4 tab-separated fields, got {}", fields.len()),
            });
        }
        let user_id = field::<u32>(fields[0], line_no, "user id")?;
        let item_id = field::<u32>(fields[1], line_no, "item id")?;
        let rating = field::<i64>(fields[2], line_no, "rating")?;
        let timestamp = field::<i64>(fields[3], line_no, "timestamp")?;
        if !(1..=5).contains(&rating) {
            return Err(IngestError::RatingOutOfRange {
                line: line_no,
                rating,
            });
        }
        out.push(RatingRecord {
            user_id,
            item_id,
            rating: rating as u8,
            timestamp,
        });
    }
    Ok(out)
}

fn field<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T, IngestError>
where
    T::Err: std::fmt::Display,
{
    s.trim().parse::<T>().map_err(|e| IngestError::Malformed {
        line,
        message: format!("bad {what} {s:?}: {e}"),
    })
}

/// Reads pipe-separated `id|title|...` lines. Bytes are decoded as Latin-1.
pub fn parse_titles<R: BufRead>(mut reader: R) -> Result<BTreeMap<u32, String>, IngestError> {
    let mut out = BTreeMap::new();
    let mut buf = Vec::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        let n = reader
            .read_until(b'\n', &mut buf)
            .map_err(|e| IngestError::Malformed {
                line: line_no + 1,
                message: e.to_string(),
            })?;
        if n == 0 {
            break;
        }
        line_no += 1;
        let line: String = buf.iter().map(|&b| b as char).collect();
        let line = line.trim_end_matches(['\n', '\r']);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('|');
        let (Some(id), Some(title)) = (fields.next(), fields.next()) else {
            return Err(IngestError::Malformed {
                line: line_no,
                message: "expected `id|title|...`".into(),
            });
        };
        let id = field::<u32>(id, line_no, "item id")?;
        if out.insert(id, title.to_string()).is_some() {
            return Err(IngestError::DuplicateItem { line: line_no, id });
        }
    }
    Ok(out)
}

pub fn build_histogram(
    records: &[RatingRecord],
    item_id: u32,
    title: &str,
) -> Result<RatingHistogram, IngestError> {
    let mut counts = [0u64; 5];
    for r in records.iter().filter(|r| r.item_id == item_id) {
        counts[(r.rating - 1) as usize] += 1;
    }
    let hist = RatingHistogram::from_counts(item_id, title, counts);
    if hist.total == 0 {
        return Err(IngestError::UnknownItem(item_id));
    }
    Ok(hist)
}

/// Histograms for every rated item, keyed by item id.
pub fn all_histograms(records: &[RatingRecord]) -> BTreeMap<u32, [u64; 5]> {
    let mut out: BTreeMap<u32, [u64; 5]> = BTreeMap::new();
    for r in records {
        out.entry(r.item_id).or_insert([0; 5])[(r.rating - 1) as usize] += 1;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FuzzifyMode {
    /// Divide counts by the largest count.
    Peak,
    /// Divide counts by the total.
    Proportion,
}

/// Fuzzy set with points at ratings 1..=5. Zero-count ratings stay as
/// listed points with μ = 0.
pub fn fuzzify(hist: &RatingHistogram, mode: FuzzifyMode) -> Result<FuzzySet, IngestError> {
    if hist.total == 0 {
        return Err(FuzzyError::ZeroTotal.into());
    }
    Ok(match mode {
        FuzzifyMode::Peak => peak_scale(hist)?,
        FuzzifyMode::Proportion => proportion_scale(hist)?,
    })
}

/// Short names for the films used in the experiments.
pub const FILM_ALIASES: [(&str, &str); 4] = [
    ("SMB", "Super Mario Bros. (1993)"),
    ("MA", "Mars Attacks! (1996)"),
    ("SW", "Star Wars (1977)"),
    ("ADGH2", "All Dogs Go to Heaven 2 (1996)"),
];

pub fn expand_alias(name: &str) -> &str {
    FILM_ALIASES
        .iter()
        .find(|(alias, _)| alias.eq_ignore_ascii_case(name))
        .map(|(_, title)| *title)
        .unwrap_or(name)
}

/// A loaded MovieLens directory.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub records: Vec<RatingRecord>,
    pub titles: BTreeMap<u32, String>,
    by_title: HashMap<String, u32>,
}

fn open(path: &Path) -> Result<BufReader<File>, IngestError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| IngestError::Io {
            path: path.to_path_buf(),
            source,
        })
}

impl Dataset {
    /// Loads `u.data` and `u.item` from `dir`.
    pub fn load(dir: &Path) -> Result<Self, IngestError> {
        let records = parse_ratings(open(&dir.join("u.data"))?)?;
        let titles = parse_titles(open(&dir.join("u.item"))?)?;
        Ok(Self::from_parts(records, titles))
    }

    pub fn from_parts(records: Vec<RatingRecord>, titles: BTreeMap<u32, String>) -> Self {
        let by_title = titles.iter().map(|(id, t)| (t.clone(), *id)).collect();
        Self {
            records,
            titles,
            by_title,
        }
    }

    /// Finds an item by exact title (aliases such as `SMB` expand first).
    pub fn resolve(&self, name: &str) -> Result<u32, IngestError> {
        let title = expand_alias(name);
        if let Some(id) = self.by_title.get(title) {
            return Ok(*id);
        }
        let needle = title.to_lowercase();
        let stem = needle.split(" (").next().unwrap_or(&needle).to_string();
        let suggestions = self
            .titles
            .values()
            .filter(|t| {
                let t = t.to_lowercase();
                t.contains(&stem) || stem.contains(t.split(" (").next().unwrap_or(&t))
            })
            .take(5)
            .cloned()
            .collect();
        Err(IngestError::UnknownTitle {
            title: title.to_string(),
            suggestions,
        })
    }

    pub fn histogram(&self, name: &str) -> Result<RatingHistogram, IngestError> {
        let id = self.resolve(name)?;
        build_histogram(&self.records, id, &self.titles[&id])
    }

    /// Fuzzy set for a film, labelled with the name it was requested by.
    pub fn film_set(&self, name: &str, mode: FuzzifyMode) -> Result<FuzzySet, IngestError> {
        Ok(fuzzify(&self.histogram(name)?, mode)?.with_label(name))
    }
}
