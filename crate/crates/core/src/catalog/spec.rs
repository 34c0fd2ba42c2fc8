use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::group::{build_from_permutations, FiniteGroup, GroupError, Permutation};

use super::builtin::Builtin;
use super::CatalogError;

pub const SPEC_SCHEMA_VERSION: u32 = 1;

fn default_schema() -> u32 {
    SPEC_SCHEMA_VERSION
}

/// One group as stored on disk.
///
/// ```json
/// {"schema_version": 1, "name": "S3", "kind": "perm",
///  "data": {"generators": [[1, 0, 2], [2, 1, 0]]}}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpecFile {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub name: String,
    #[serde(flatten)]
    pub source: GroupSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum GroupSource {
    /// Full multiplication table; row `a`, column `b` holds `a·b`.
    Cayley {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        element_names: Option<Vec<String>>,
    },
    /// Generating permutations as 0-based image arrays on a common point set.
    Perm {
        generators: Vec<Vec<usize>>,
    },
    Builtin(Builtin),
}

impl GroupSpecFile {
    pub fn cayley(g: &FiniteGroup) -> Self {
        GroupSpecFile {
            schema_version: SPEC_SCHEMA_VERSION,
            name: g.label().to_string(),
            source: GroupSource::Cayley {
                table: g.table_rows(),
                element_names: g.element_names().map(<[String]>::to_vec),
            },
        }
    }

    /// Builds and validates the group; the result is labelled with `name`.
    pub fn build(&self, file: &Path, cap: usize) -> Result<FiniteGroup, CatalogError> {
        let invalid = |source: GroupError| CatalogError::Validation {
            file: file.to_path_buf(),
            source,
        };
        let too_large = |order: usize| CatalogError::GroupTooLarge {
            name: self.name.clone(),
            order,
            cap,
        };
        let g = match &self.source {
            GroupSource::Cayley { table, element_names } => {
                if table.len() > cap {
                    return Err(too_large(table.len()));
                }
                let g = FiniteGroup::from_table(self.name.clone(), table).map_err(invalid)?;
                match element_names {
                    Some(names) => g.with_element_names(names.clone()).map_err(invalid)?,
                    None => g,
                }
            }
            GroupSource::Perm { generators } => {
                let perms = generators
                    .iter()
                    .map(|p| Permutation::from_images(p.clone()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(invalid)?;
                build_from_permutations(&perms, cap).map_err(invalid)?.0
            }
            GroupSource::Builtin(b) => {
                let g = b.build()?;
                if g.order() > cap {
                    return Err(too_large(g.order()));
                }
                g
            }
        };
        Ok(g.with_label(self.name.clone()))
    }
}

fn read(path: &Path) -> Result<String, CatalogError> {
    fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Parses and builds one spec file.
pub fn load_group_file(path: &Path, cap: usize) -> Result<(GroupSpecFile, FiniteGroup), CatalogError> {
    let text = read(path)?;
    let spec: GroupSpecFile = serde_json::from_str(&text).map_err(|e| CatalogError::Parse {
        file: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let g = spec.build(path, cap)?;
    Ok((spec, g))
}

/// Every `*.json` file of a directory, sorted by group name.
pub fn load_catalog(dir: &Path, cap: usize) -> Result<Vec<FiniteGroup>, CatalogError> {
    let io = |e: std::io::Error| CatalogError::Io {
        path: dir.to_path_buf(),
        message: e.to_string(),
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "json"));
    paths.sort();
    let mut groups = Vec::with_capacity(paths.len());
    for p in &paths {
        groups.push(load_group_file(p, cap)?.1);
    }
    groups.sort_by(|a, b| a.label().cmp(b.label()));
    if let Some(w) = groups.windows(2).find(|w| w[0].label() == w[1].label()) {
        return Err(CatalogError::DuplicateName(w[0].label().to_string()));
    }
    Ok(groups)
}

/// Writes each group as a Cayley spec file `<name>.json`.
pub fn save_catalog(dir: &Path, groups: &[FiniteGroup]) -> Result<(), CatalogError> {
    let io = |path: &Path, e: std::io::Error| CatalogError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    for g in groups {
        let file_name: String = g
            .label()
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        let path = dir.join(format!("{file_name}.json"));
        let text = serde_json::to_string_pretty(&GroupSpecFile::cayley(g)).expect("spec serializes");
        fs::write(&path, text + "\n").map_err(|e| io(&path, e))?;
    }
    Ok(())
}

/// A command-line group argument: `builtin:<descriptor>` or a spec file path.
pub fn parse_group_arg(arg: &str, cap: usize) -> Result<FiniteGroup, CatalogError> {
    match arg.strip_prefix("builtin:") {
        Some(desc) => {
            let spec = GroupSpecFile {
                schema_version: SPEC_SCHEMA_VERSION,
                name: Builtin::parse(desc)?.name(),
                source: GroupSource::Builtin(Builtin::parse(desc)?),
            };
            spec.build(Path::new(arg), cap)
        }
        None => Ok(load_group_file(Path::new(arg), cap)?.1),
    }
}
