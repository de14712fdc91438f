//! Shipped data files. Every file is compiled into the library and can be
//! overridden by a file of the same name in a data directory.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const SIMPLE_GROUPS: &str = "simple_groups.tsv";
pub const ALT_MAXIMALS: &str = "alt_maximals.tsv";
pub const PRODUCT_SOCLES: &str = "product_socles.tsv";
pub const ATLAS: &str = "atlas_sporadic.tsv";
pub const MONSTER: &str = "monster.tsv";
pub const KNOWN_DESIGNS: &str = "known_designs.tsv";
pub const M11_GENS: &str = "m11.gens";
pub const M22_GENS: &str = "m22.gens";
pub const M22_2_GENS: &str = "m22_2.gens";
pub const A7WR2_GENS: &str = "a7wr2.gens";
pub const M11_DESIGN: &str = "m11-design.blk";
pub const M22_DESIGN: &str = "m22-design.blk";

const EMBEDDED: &[(&str, &str)] = &[
    (SIMPLE_GROUPS, include_str!("../data/simple_groups.tsv")),
    (ALT_MAXIMALS, include_str!("../data/alt_maximals.tsv")),
    (PRODUCT_SOCLES, include_str!("../data/product_socles.tsv")),
    (ATLAS, include_str!("../data/atlas_sporadic.tsv")),
    (MONSTER, include_str!("../data/monster.tsv")),
    (KNOWN_DESIGNS, include_str!("../data/known_designs.tsv")),
    (M11_GENS, include_str!("../data/m11.gens")),
    (M22_GENS, include_str!("../data/m22.gens")),
    (M22_2_GENS, include_str!("../data/m22_2.gens")),
    (A7WR2_GENS, include_str!("../data/a7wr2.gens")),
    (M11_DESIGN, include_str!("../data/m11-design.blk")),
    (M22_DESIGN, include_str!("../data/m22-design.blk")),
];

/// Names of all shipped files.
pub fn file_names() -> impl Iterator<Item = &'static str> {
    EMBEDDED.iter().map(|(n, _)| *n)
}

/// Returns the compiled-in copy of a data file.
pub fn embedded(name: &str) -> Option<&'static str> {
    EMBEDDED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Where data files are read from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DataSource {
    dir: Option<PathBuf>,
}

impl DataSource {
    /// Compiled-in data only.
    pub fn embedded() -> Self {
        DataSource { dir: None }
    }

    /// Reads from `dir`. Files absent from the directory are an error.
    pub fn dir(dir: impl Into<PathBuf>) -> Self {
        DataSource { dir: Some(dir.into()) }
    }

    pub fn directory(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn read(&self, name: &str) -> Result<String> {
        match &self.dir {
            Some(d) => {
                let path = d.join(name);
                std::fs::read_to_string(&path)
                    .map_err(|e| Error::Data { path: path.display().to_string(), msg: e.to_string() })
            }
            None => embedded(name)
                .map(str::to_string)
                .ok_or_else(|| Error::Data { path: name.to_string(), msg: "no such embedded file".into() }),
        }
    }
}

/// Splits a TSV text into `(line number, fields)` for each non-blank,
/// non-comment line. Fields are separated by tabs or runs of spaces.
pub(crate) fn tsv_rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            let fields = if line.contains('\t') {
                line.split('\t').map(str::trim).collect()
            } else {
                line.split_whitespace().collect()
            };
            Some((i + 1, fields))
        }
    })
}
