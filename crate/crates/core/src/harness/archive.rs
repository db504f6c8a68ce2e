//! On-disk archive of code records.
//!
//! ```text
//! root/
//!   index.txt                 q 2n k d classification path
//!   q13_n8_k4_d5/
//!     generator.txt           matrix text
//!     enumerator.txt          or mds_certificate.txt
//!     provenance.txt          key=value lines
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::code::{
    macwilliams_transform, BzOptions, CodeClass, Classification, DistanceOutcome, WeightEnumerator,
    DEFAULT_BZ_BUDGET,
};
use crate::construct::Provenance;
use crate::error::{Error, Result};
use crate::matrix::FqMatrix;

use super::record::CodeRecord;

pub const INDEX_FILE: &str = "index.txt";
pub const GENERATOR_FILE: &str = "generator.txt";
pub const ENUMERATOR_FILE: &str = "enumerator.txt";
pub const CERTIFICATE_FILE: &str = "mds_certificate.txt";
pub const PROVENANCE_FILE: &str = "provenance.txt";

const SUMMARY_KEYS: [&str; 7] = [
    "q",
    "length",
    "dimension",
    "d",
    "classification",
    "mds_certificate",
    "timestamp",
];

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Writes `record` under `root` and appends it to the index. Returns the
/// record directory; an existing name gets a `_2`, `_3`, ... suffix.
pub fn archive_write(record: &CodeRecord, root: &Path) -> Result<PathBuf> {
    fs::create_dir_all(root).map_err(|e| Error::io(root, e))?;
    let base = record.name();
    let mut name = base.clone();
    let mut suffix = 1;
    while root.join(&name).exists() {
        suffix += 1;
        name = format!("{base}_{suffix}");
    }
    let dir = root.join(&name);
    fs::create_dir(&dir).map_err(|e| Error::io(&dir, e))?;
    write(&dir.join(GENERATOR_FILE), &record.generator.to_text())?;
    match &record.enumerator {
        Some(w) => write(&dir.join(ENUMERATOR_FILE), &w.to_text(record.q, record.half_length))?,
        None => write(
            &dir.join(CERTIFICATE_FILE),
            &format!(
                "every square submatrix of the redundancy block is nonsingular\nd={}\n",
                record.d
            ),
        )?,
    }
    write(&dir.join(PROVENANCE_FILE), &record.to_key_values())?;
    let index = root.join(INDEX_FILE);
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(&index)
        .map_err(|e| Error::io(&index, e))?;
    writeln!(
        file,
        "{} {} {} {} {} {}",
        record.q,
        record.length(),
        record.half_length,
        record.d,
        record.classification.class,
        name
    )
    .map_err(|e| Error::io(&index, e))?;
    Ok(dir)
}

fn field<T: std::str::FromStr>(p: &Provenance, key: &str) -> Result<T> {
    p.get(key)
        .ok_or_else(|| Error::Parse(format!("missing {key}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad value for {key}")))
}

/// Reads one record directory.
pub fn load_record(dir: &Path) -> Result<CodeRecord> {
    let all = Provenance::from_text(&read(&dir.join(PROVENANCE_FILE))?)?;
    let generator: FqMatrix = read(&dir.join(GENERATOR_FILE))?.parse()?;
    let enumerator_path = dir.join(ENUMERATOR_FILE);
    let enumerator = if enumerator_path.exists() {
        let (q, k, w) = WeightEnumerator::from_text(&read(&enumerator_path)?)?;
        if q != generator.field().q() || k != generator.rows() {
            return Err(Error::Parse("enumerator header disagrees with the generator".into()));
        }
        Some(w)
    } else {
        None
    };
    let half_length: usize = field(&all, "dimension")?;
    let d: usize = field(&all, "d")?;
    let class: CodeClass = field(&all, "classification")?;
    let mut provenance = Provenance::default();
    for (k, v) in all.entries() {
        if !SUMMARY_KEYS.contains(&k.as_str()) {
            provenance.set(k, v);
        }
    }
    Ok(CodeRecord {
        q: field(&all, "q")?,
        half_length,
        d,
        classification: Classification {
            class,
            slack: (half_length + 1).saturating_sub(d),
        },
        generator,
        enumerator,
        mds_certificate: field(&all, "mds_certificate")?,
        provenance,
        timestamp: all.get("timestamp").map(|t| t.parse()).transpose().map_err(|_| {
            Error::Parse("bad timestamp".into())
        })?,
    })
}

/// Problems found with one archived record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordIssue {
    pub path: String,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArchiveReport {
    pub records: usize,
    pub issues: Vec<RecordIssue>,
}

impl ArchiveReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Everything wrong with `record` relative to the index line it came from.
fn check_record(record: &CodeRecord, line: &[&str]) -> Vec<String> {
    let mut problems = Vec::new();
    let expected = [
        record.q.to_string(),
        record.length().to_string(),
        record.half_length.to_string(),
        record.d.to_string(),
        record.classification.class.to_string(),
    ];
    if line[..5] != expected.iter().map(String::as_str).collect::<Vec<_>>()[..] {
        problems.push(format!("index line {:?} disagrees with the record", line.join(" ")));
    }
    let code = match record.to_code() {
        Ok(c) => c,
        Err(e) => {
            problems.push(format!("generator: {e}"));
            return problems;
        }
    };
    if code.field().q() != record.q || code.dimension() != record.half_length {
        problems.push("generator parameters disagree with the record".into());
    }
    if !code.is_self_dual() {
        problems.push("generator is not self-dual".into());
        return problems;
    }
    match Classification::of(record.half_length, record.d) {
        Ok(c) if c.class == record.classification.class => {}
        Ok(c) => problems.push(format!("classification should be {}", c.class)),
        Err(e) => problems.push(e.to_string()),
    }
    let q = record.q;
    let k = record.half_length;
    if let Some(w) = &record.enumerator {
        let cap = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        match code.weight_enumerator(cap) {
            Ok(fresh) if &fresh == w => {}
            Ok(_) => problems.push("weight enumerator does not match".into()),
            Err(e) => problems.push(format!("enumeration: {e}")),
        }
        if w.min_distance() != Some(record.d) {
            problems.push("recorded d disagrees with the enumerator".into());
        }
        if macwilliams_transform(w, q, k).ok().as_ref() != Some(w) {
            problems.push("enumerator is not a MacWilliams fixed point".into());
        }
    } else if record.mds_certificate {
        if record.d != k + 1 {
            problems.push("MDS certificate with d below n + 1".into());
        }
        if !code.is_mds_systematic() {
            problems.push("MDS certificate does not hold".into());
        }
    } else {
        let opts = BzOptions {
            work_budget: Some(DEFAULT_BZ_BUDGET),
            floor: None,
        };
        match code.min_distance_bz_with(opts) {
            Ok(DistanceOutcome::Exact(d)) if d == record.d => {}
            Ok(DistanceOutcome::Exact(d)) => problems.push(format!("recomputed d = {d}")),
            Ok(other) => problems.push(format!("distance not settled within budget: {other:?}")),
            Err(e) => problems.push(e.to_string()),
        }
    }
    problems
}

/// Re-reads every indexed record, rebuilds its code and rechecks `d`,
/// the enumerator or certificate, and the classification.
pub fn archive_verify(root: &Path) -> Result<ArchiveReport> {
    let index = read(&root.join(INDEX_FILE))?;
    let mut report = ArchiveReport::default();
    for line in index.lines().filter(|l| !l.trim().is_empty()) {
        report.records += 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            report.issues.push(RecordIssue {
                path: line.to_string(),
                problems: vec!["malformed index line".into()],
            });
            continue;
        }
        let path = fields[5].to_string();
        let problems = match load_record(&root.join(&path)) {
            Ok(record) => check_record(&record, &fields),
            Err(e) => vec![e.to_string()],
        };
        if !problems.is_empty() {
            report.issues.push(RecordIssue { path, problems });
        }
    }
    Ok(report)
}
