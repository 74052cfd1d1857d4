//! Checkpoints for chunked enumerations.
//!
//! A state file maps a run key to the number of finished chunks and the
//! accumulated state after them. Re-running with the same file skips the
//! finished chunks.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Default, Serialize, Deserialize)]
struct StateFile {
    schema: u32,
    entries: BTreeMap<String, Entry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    next_chunk: usize,
    chunks: usize,
    state: serde_json::Value,
}

pub struct Cursor {
    path: Option<PathBuf>,
    key: String,
    chunks: usize,
    pub start: usize,
}

impl Cursor {
    /// Opens the checkpoint for `key`, returning the saved state if the
    /// file has one for the same number of chunks.
    pub fn open<S: DeserializeOwned>(
        path: Option<&Path>,
        key: &str,
        chunks: usize,
    ) -> Result<(Cursor, Option<S>), CliError> {
        let mut cursor = Cursor {
            path: path.map(Path::to_path_buf),
            key: key.to_string(),
            chunks,
            start: 0,
        };
        let Some(p) = path.filter(|p| p.exists()) else {
            return Ok((cursor, None));
        };
        let file = load(p)?;
        match file.entries.get(key) {
            Some(e) if e.chunks == chunks => {
                let state = serde_json::from_value(e.state.clone())
                    .map_err(|e| CliError::Format(format!("{}: {e}", p.display())))?;
                cursor.start = e.next_chunk;
                Ok((cursor, Some(state)))
            }
            _ => Ok((cursor, None)),
        }
    }

    /// Records that chunks `0..=index` are finished.
    pub fn commit<S: Serialize>(&self, index: usize, state: &S) -> Result<(), CliError> {
        let Some(p) = &self.path else {
            return Ok(());
        };
        let mut file = if p.exists() { load(p)? } else { StateFile::default() };
        file.schema = 1;
        file.entries.insert(
            self.key.clone(),
            Entry {
                next_chunk: index + 1,
                chunks: self.chunks,
                state: serde_json::to_value(state).expect("state serializes"),
            },
        );
        let tmp = p.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&file).expect("state serializes"))?;
        fs::rename(&tmp, p)?;
        Ok(())
    }
}

fn load(p: &Path) -> Result<StateFile, CliError> {
    let text = fs::read_to_string(p)?;
    serde_json::from_str(&text).map_err(|e| CliError::Format(format!("{}: {e}", p.display())))
}
